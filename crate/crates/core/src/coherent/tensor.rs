use std::fmt;

use serde::Serialize;

use super::axioms::{cell_profile, verify_axioms};
use super::CoherentConfiguration;
use crate::error::{Error, Result};
use crate::exact::{lift, Scalar};

/// Zero-based index of relation `σ_i` in the canonical layout.
#[inline]
pub const fn sigma(i: usize) -> usize {
    i - 1
}

/// Intersection numbers `p[i][j][k]`: the coefficient of relation `k` in the
/// product of relations `i` and `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTensor<T> {
    rank: usize,
    p: Vec<T>,
    valencies: Vec<T>,
    transpose: Vec<usize>,
    blocks: Vec<(usize, usize)>,
}

/// A broken tensor identity, indices zero-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TensorViolation {
    /// Nonzero entry for a product that does not compose to `k`'s block.
    BlockSupport { i: usize, j: usize, k: usize },
    /// `Σ_k p[i][j][k]·v_k ≠ v_i·v_j`.
    RowSum {
        i: usize,
        j: usize,
        lhs: String,
        rhs: String,
    },
    /// `p[i][j][k]·v_k ≠ p[k][j*][i]·v_i`.
    Reciprocity {
        i: usize,
        j: usize,
        k: usize,
        lhs: String,
        rhs: String,
    },
    /// `p[i][j][k] ≠ p[j*][i*][k*]`.
    TransposeSymmetry { i: usize, j: usize, k: usize },
}

impl fmt::Display for TensorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::BlockSupport { i, j, k } => {
                write!(
                    f,
                    "p[{}][{}][{}] nonzero outside its block",
                    i + 1,
                    j + 1,
                    k + 1
                )
            }
            Self::RowSum { i, j, lhs, rhs } => {
                write!(f, "row sum for ({}, {}): {lhs} != {rhs}", i + 1, j + 1)
            }
            Self::Reciprocity { i, j, k, lhs, rhs } => write!(
                f,
                "p[{}][{}][{}]·v != p[k][j*][i]·v: {lhs} != {rhs}",
                i + 1,
                j + 1,
                k + 1
            ),
            Self::TransposeSymmetry { i, j, k } => {
                write!(f, "p[{}][{}][{}] != p[j*][i*][k*]", i + 1, j + 1, k + 1)
            }
        }
    }
}

impl<T: Scalar> StructureTensor<T> {
    /// Zero tensor over relations with the given fiber blocks, transposes and
    /// valencies.
    pub fn new(blocks: Vec<(usize, usize)>, transpose: Vec<usize>, valencies: Vec<T>) -> Self {
        let rank = blocks.len();
        assert_eq!(transpose.len(), rank);
        assert_eq!(valencies.len(), rank);
        Self {
            rank,
            p: vec![T::zero(); rank * rank * rank],
            valencies,
            transpose,
            blocks,
        }
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.rank + j) * self.rank + k
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> &T {
        &self.p[self.idx(i, j, k)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: T) {
        let at = self.idx(i, j, k);
        self.p[at] = v;
    }

    pub fn valency(&self, i: usize) -> &T {
        &self.valencies[i]
    }

    pub fn valencies(&self) -> &[T] {
        &self.valencies
    }

    pub fn transpose_of(&self, i: usize) -> usize {
        self.transpose[i]
    }

    /// Fiber block `(source, target)` of relation `i`.
    pub fn block(&self, i: usize) -> (usize, usize) {
        self.blocks[i]
    }

    #[inline]
    pub fn composable(&self, i: usize, j: usize) -> bool {
        self.blocks[i].1 == self.blocks[j].0
    }

    /// All entries `(i, j, k, p)` in index order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &T)> + '_ {
        let r = self.rank;
        self.p
            .iter()
            .enumerate()
            .map(move |(at, v)| (at / (r * r), (at / r) % r, at % r, v))
    }

    /// The first entry that differs from `other`, if any.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize, usize)> {
        if self.rank != other.rank {
            return Some((0, 0, 0));
        }
        self.entries()
            .zip(other.entries())
            .find(|(a, b)| a.3 != b.3)
            .map(|(a, _)| (a.0, a.1, a.2))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> StructureTensor<U> {
        StructureTensor {
            rank: self.rank,
            p: self.p.iter().map(&f).collect(),
            valencies: self.valencies.iter().map(&f).collect(),
            transpose: self.transpose.clone(),
            blocks: self.blocks.clone(),
        }
    }

    /// Checks block support, row sums, the reciprocity identity
    /// `p[i][j][k]·v_k = p[k][j*][i]·v_i` and transpose symmetry.
    pub fn check_invariants(&self) -> Vec<TensorViolation> {
        let r = self.rank;
        let mut out = Vec::new();
        for i in 0..r {
            for j in 0..r {
                let composes = self.composable(i, j);
                let target = (self.blocks[i].0, self.blocks[j].1);
                let mut row = T::zero();
                for k in 0..r {
                    let v = self.get(i, j, k);
                    if (!composes || self.blocks[k] != target) && !v.is_zero() {
                        out.push(TensorViolation::BlockSupport { i, j, k });
                    }
                    row = row + v.clone() * self.valencies[k].clone();
                }
                if !composes {
                    continue;
                }
                let vv = self.valencies[i].clone() * self.valencies[j].clone();
                if row != vv {
                    out.push(TensorViolation::RowSum {
                        i,
                        j,
                        lhs: row.to_string(),
                        rhs: vv.to_string(),
                    });
                }
                for k in 0..r {
                    if let Some(v) = self.reciprocity_violation(i, j, k) {
                        out.push(v);
                    }
                    let (jt, it, kt) = (self.transpose[j], self.transpose[i], self.transpose[k]);
                    if self.get(i, j, k) != self.get(jt, it, kt) {
                        out.push(TensorViolation::TransposeSymmetry { i, j, k });
                    }
                }
            }
        }
        out
    }

    /// Both sides of `p[i][j][k]·v_k = p[k][j*][i]·v_i`.
    pub fn reciprocity_sides(&self, i: usize, j: usize, k: usize) -> (T, T) {
        let lhs = self.get(i, j, k).clone() * self.valencies[k].clone();
        let rhs = self.get(k, self.transpose[j], i).clone() * self.valencies[i].clone();
        (lhs, rhs)
    }

    fn reciprocity_violation(&self, i: usize, j: usize, k: usize) -> Option<TensorViolation> {
        let (lhs, rhs) = self.reciprocity_sides(i, j, k);
        (lhs != rhs).then(|| TensorViolation::Reciprocity {
            i,
            j,
            k,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    }
}

/// Intersection numbers of a concrete configuration, counted by brute force.
pub fn structure_constants<T: Scalar>(c: &CoherentConfiguration) -> Result<StructureTensor<T>> {
    let report = verify_axioms(c);
    if let Some(v) = report
        .first_nonconstant()
        .or_else(|| report.violations.first())
    {
        return Err(Error::Precondition(format!(
            "not a coherent configuration: {v}"
        )));
    }
    let r = c.color_count();
    let n = c.order();
    let reps = c.representatives();
    let (fib, _) = c.vertex_fibers();
    let blocks: Vec<(usize, usize)> = reps.iter().map(|&(x, y)| (fib[x], fib[y])).collect();
    let transpose: Vec<usize> = reps.iter().map(|&(x, y)| c.color(y, x)).collect();
    let valencies: Vec<T> = reps
        .iter()
        .enumerate()
        .map(|(col, &(x, _))| lift((0..n).filter(|&y| c.color(x, y) == col).count() as i64))
        .collect();
    let mut t = StructureTensor::new(blocks, transpose, valencies);
    let width = r as u64;
    for (k, &(x, y)) in reps.iter().enumerate() {
        for (key, count) in cell_profile(c, x, y) {
            let (i, j) = ((key / width) as usize, (key % width) as usize);
            t.set(i, j, k, lift(count as i64));
        }
    }
    Ok(t)
}
