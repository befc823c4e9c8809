use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::CoherentConfiguration;

type Cell = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AxiomViolation {
    /// A color occupies both diagonal and off-diagonal cells.
    MixedDiagonal { color: usize, cells: [Cell; 2] },
    /// Transposes of one color land in two different colors.
    TransposeSplit { color: usize, cells: [Cell; 2] },
    /// A color crosses fiber blocks.
    FiberBlock { color: usize, cells: [Cell; 2] },
    /// The number of `z` with `c(x,z) = i`, `c(z,y) = j` differs between two
    /// cells `(x,y)` of color `k`.
    NonConstant {
        triple: (usize, usize, usize),
        cells: [Cell; 2],
        counts: [usize; 2],
    },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MixedDiagonal { color, cells } => {
                write!(
                    f,
                    "color {color} is on the diagonal at {:?} and off it at {:?}",
                    cells[0], cells[1]
                )
            }
            Self::TransposeSplit { color, cells } => {
                write!(
                    f,
                    "transposes of color {color} at {:?} and {:?} differ in color",
                    cells[0], cells[1]
                )
            }
            Self::FiberBlock { color, cells } => {
                write!(
                    f,
                    "color {color} spans fiber blocks at {:?} and {:?}",
                    cells[0], cells[1]
                )
            }
            Self::NonConstant {
                triple: (i, j, k),
                cells,
                counts,
            } => write!(
                f,
                "p[{i}][{j}][{k}] is {} at {:?} but {} at {:?}",
                counts[0], cells[0], counts[1], cells[1]
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first_nonconstant(&self) -> Option<&AxiomViolation> {
        self.violations
            .iter()
            .find(|v| matches!(v, AxiomViolation::NonConstant { .. }))
    }
}

/// Sorted run-length counts of `(c(x,z), c(z,y))` over all `z`, keyed by
/// `i * width + j`.
pub(super) fn cell_profile(c: &CoherentConfiguration, x: usize, y: usize) -> Vec<(u64, usize)> {
    let n = c.order();
    let width = c.color_count() as u64;
    let mut keys: Vec<u64> = (0..n)
        .map(|z| c.color(x, z) as u64 * width + c.color(z, y) as u64)
        .collect();
    keys.sort_unstable();
    let mut out: Vec<(u64, usize)> = Vec::new();
    for k in keys {
        match out.last_mut() {
            Some((last, cnt)) if *last == k => *cnt += 1,
            _ => out.push((k, 1)),
        }
    }
    out
}

/// Checks every coherent-configuration axiom and lists each violation with
/// two witness cells.
pub fn verify_axioms(c: &CoherentConfiguration) -> AxiomReport {
    let n = c.order();
    let reps = c.representatives();
    let mut violations = Vec::new();

    // diagonal / off-diagonal separation and transposition
    let mut diag_cell: Vec<Option<Cell>> = vec![None; c.color_count()];
    let mut off_cell: Vec<Option<Cell>> = vec![None; c.color_count()];
    let mut transpose: Vec<Option<(usize, Cell)>> = vec![None; c.color_count()];
    let mut split_reported = vec![false; c.color_count()];
    for x in 0..n {
        for y in 0..n {
            let col = c.color(x, y);
            if x == y {
                diag_cell[col].get_or_insert((x, y));
            } else {
                off_cell[col].get_or_insert((x, y));
            }
            let t = c.color(y, x);
            match transpose[col] {
                None => transpose[col] = Some((t, (x, y))),
                Some((t0, first)) if t0 != t && !split_reported[col] => {
                    split_reported[col] = true;
                    violations.push(AxiomViolation::TransposeSplit {
                        color: col,
                        cells: [first, (x, y)],
                    });
                }
                _ => {}
            }
        }
    }
    for col in 0..c.color_count() {
        if let (Some(d), Some(o)) = (diag_cell[col], off_cell[col]) {
            violations.push(AxiomViolation::MixedDiagonal {
                color: col,
                cells: [d, o],
            });
        }
    }

    let (fib, _) = c.vertex_fibers();
    let mut block_seen: Vec<Option<((usize, usize), Cell)>> = vec![None; c.color_count()];
    let mut block_reported = vec![false; c.color_count()];
    for x in 0..n {
        for y in 0..n {
            let col = c.color(x, y);
            let b = (fib[x], fib[y]);
            match block_seen[col] {
                None => block_seen[col] = Some((b, (x, y))),
                Some((b0, first)) if b0 != b && !block_reported[col] => {
                    block_reported[col] = true;
                    violations.push(AxiomViolation::FiberBlock {
                        color: col,
                        cells: [first, (x, y)],
                    });
                }
                _ => {}
            }
        }
    }

    // well-definedness of intersection numbers
    let width = c.color_count() as u64;
    let rep_profiles: Vec<Vec<(u64, usize)>> = reps
        .par_iter()
        .map(|&(x, y)| cell_profile(c, x, y))
        .collect();
    let found: Vec<Vec<((usize, usize, usize), Cell, Cell, [usize; 2])>> = (0..n * n)
        .into_par_iter()
        .map(|p| {
            let (x, y) = (p / n, p % n);
            let k = c.color(x, y);
            let rep = reps[k];
            if rep == (x, y) {
                return Vec::new();
            }
            let here = cell_profile(c, x, y);
            diff_profiles(&rep_profiles[k], &here)
                .into_iter()
                .map(|(key, a, b)| {
                    let triple = ((key / width) as usize, (key % width) as usize, k);
                    (triple, rep, (x, y), [a, b])
                })
                .collect()
        })
        .collect();
    let mut seen: BTreeMap<(usize, usize, usize), AxiomViolation> = BTreeMap::new();
    for (triple, a, b, counts) in found.into_iter().flatten() {
        seen.entry(triple).or_insert(AxiomViolation::NonConstant {
            triple,
            cells: [a, b],
            counts,
        });
    }
    violations.extend(seen.into_values());
    AxiomReport { violations }
}

/// Keys whose counts differ, with both counts.
fn diff_profiles(a: &[(u64, usize)], b: &[(u64, usize)]) -> Vec<(u64, usize, usize)> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(&(ka, ca)), Some(&(kb, cb))) if ka == kb => {
                if ca != cb {
                    out.push((ka, ca, cb));
                }
                i += 1;
                j += 1;
            }
            (Some(&(ka, ca)), Some(&(kb, _))) if ka < kb => {
                out.push((ka, ca, 0));
                i += 1;
            }
            (Some(&(ka, ca)), None) => {
                out.push((ka, ca, 0));
                i += 1;
            }
            (_, Some(&(kb, cb))) => {
                out.push((kb, 0, cb));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}
