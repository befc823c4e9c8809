use std::fmt;

use serde::Serialize;

use super::axioms::verify_axioms;
use super::CoherentConfiguration;
use crate::error::{Error, Result};

/// Number of colors in each fiber block, fibers in diagonal order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeMatrix {
    pub counts: Vec<Vec<usize>>,
}

impl TypeMatrix {
    pub fn fibers(&self) -> usize {
        self.counts.len()
    }

    /// `(r11, r12, r22)` for two-fiber configurations.
    pub fn two_fiber(&self) -> Option<(usize, usize, usize)> {
        (self.fibers() == 2).then(|| (self.counts[0][0], self.counts[0][1], self.counts[1][1]))
    }

    /// Strongly regular design type: `[3 2; 3]`.
    pub fn is_srd(&self) -> bool {
        self.two_fiber() == Some((3, 2, 3))
    }
}

impl fmt::Display for TypeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // upper triangle, rows separated by ';'
        let rows: Vec<String> = (0..self.fibers())
            .map(|a| {
                (a..self.fibers())
                    .map(|b| self.counts[a][b].to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// Counts colors per fiber block.
pub fn detect_type(c: &CoherentConfiguration) -> Result<TypeMatrix> {
    let report = verify_axioms(c);
    if let Some(v) = report.violations.first() {
        return Err(Error::Precondition(format!(
            "not a coherent configuration: {v}"
        )));
    }
    let (fib, nf) = c.vertex_fibers();
    let mut counts = vec![vec![0; nf]; nf];
    for (x, y) in c.representatives() {
        counts[fib[x]][fib[y]] += 1;
    }
    Ok(TypeMatrix { counts })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FiberPick {
    /// The fiber holding vertex 0.
    #[default]
    First,
    Second,
}

/// How to choose between the two candidate colors for a relation slot.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Pick {
    /// Smaller valency; ties go to the lower color index.
    #[default]
    SmallerValency,
    /// Larger valency; ties go to the lower color index.
    LargerValency,
    Color(usize),
    /// The color of a given cell, in input vertex numbering.
    ContainingCell(usize, usize),
}

/// Caller choices fixing the canonical `σ1..σ10` layout.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Designation {
    pub fiber1: FiberPick,
    pub sigma2: Pick,
    pub sigma5: Pick,
    pub sigma7: Pick,
}

/// What [`canonical_relabel`] decided.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelabelRecord {
    pub designation: Designation,
    /// Input color of each `σ_i`, `i = 1..=10` at position `i - 1`.
    pub source_colors: Vec<usize>,
    /// New position of each input vertex.
    pub vertex_map: Vec<usize>,
}

/// Renumbers a type-`[3 2; 3]` configuration into the layout `σ1, σ4`
/// identities, `σ2, σ3` and `σ5, σ6` the fiber relations, `σ7, σ8` from
/// fiber 1 to fiber 2 and `σ9 = σ7ᵀ`, `σ10 = σ8ᵀ`. Fiber-1 vertices are
/// moved to the front.
pub fn canonical_relabel(
    c: &CoherentConfiguration,
    designation: &Designation,
) -> Result<(CoherentConfiguration, RelabelRecord)> {
    let ty = detect_type(c)?;
    if !ty.is_srd() {
        return Err(Error::TypeMismatch(format!(
            "expected type [3 2; 3], found {ty}"
        )));
    }
    let n = c.order();
    let (fib, _) = c.vertex_fibers();
    let (f1, f2) = match designation.fiber1 {
        FiberPick::First => (0, 1),
        FiberPick::Second => (1, 0),
    };
    let reps = c.representatives();
    let valency = |col: usize| {
        let x = reps[col].0;
        (0..n).filter(|&y| c.color(x, y) == col).count()
    };
    let in_block = |a: usize, b: usize, skip_diag: bool| -> Vec<usize> {
        reps.iter()
            .enumerate()
            .filter(|(_, &(x, y))| fib[x] == a && fib[y] == b && !(skip_diag && x == y))
            .map(|(col, _)| col)
            .collect()
    };
    let choose = |cands: Vec<usize>, pick: Pick, slot: &str| -> Result<(usize, usize)> {
        debug_assert_eq!(cands.len(), 2);
        let chosen = match pick {
            Pick::SmallerValency => *cands
                .iter()
                .min_by_key(|&&col| (valency(col), col))
                .unwrap(),
            Pick::LargerValency => *cands
                .iter()
                .min_by_key(|&&col| (std::cmp::Reverse(valency(col)), col))
                .unwrap(),
            Pick::Color(col) => col,
            Pick::ContainingCell(x, y) => {
                if x >= n || y >= n {
                    return Err(Error::Input(format!(
                        "cell ({x}, {y}) outside {n} vertices"
                    )));
                }
                c.color(x, y)
            }
        };
        if !cands.contains(&chosen) {
            return Err(Error::Input(format!(
                "{slot}: color {chosen} is not one of the candidates {cands:?}"
            )));
        }
        let other = *cands.iter().find(|&&col| col != chosen).unwrap();
        Ok((chosen, other))
    };

    let diag = |f: usize| {
        c.color(
            (0..n).find(|&x| fib[x] == f).unwrap(),
            (0..n).find(|&x| fib[x] == f).unwrap(),
        )
    };
    let (s2, s3) = choose(in_block(f1, f1, true), designation.sigma2, "sigma2")?;
    let (s5, s6) = choose(in_block(f2, f2, true), designation.sigma5, "sigma5")?;
    let (s7, s8) = choose(in_block(f1, f2, false), designation.sigma7, "sigma7")?;
    let t = |col: usize| {
        let (x, y) = reps[col];
        c.color(y, x)
    };
    let source = vec![diag(f1), s2, s3, diag(f2), s5, s6, s7, s8, t(s7), t(s8)];
    let mut new_of_old = vec![0u32; c.color_count()];
    for (new, &old) in source.iter().enumerate() {
        new_of_old[old] = new as u32;
    }

    let order: Vec<usize> = (0..n)
        .filter(|&x| fib[x] == f1)
        .chain((0..n).filter(|&x| fib[x] == f2))
        .collect();
    let mut vertex_map = vec![0; n];
    for (pos, &x) in order.iter().enumerate() {
        vertex_map[x] = pos;
    }
    let n1 = fib.iter().filter(|&&f| f == f1).count();
    let mut colors = vec![0u32; n * n];
    for x in 0..n {
        for y in 0..n {
            colors[vertex_map[x] * n + vertex_map[y]] = new_of_old[c.color(x, y)];
        }
    }
    let out = CoherentConfiguration::from_dense((n1, n - n1), colors, 10);
    Ok((
        out,
        RelabelRecord {
            designation: *designation,
            source_colors: source,
            vertex_map,
        },
    ))
}
