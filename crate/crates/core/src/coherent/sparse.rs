use std::collections::HashMap;

use super::axioms::{cell_profile, verify_axioms};
use super::tensor::TensorViolation;
use super::CoherentConfiguration;
use crate::error::{Error, Result};

/// Intersection numbers stored by nonzero entry. Suitable for closures with
/// hundreds of colors, where the dense tensor would not fit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntersections {
    valencies: Vec<u64>,
    transpose: Vec<usize>,
    blocks: Vec<(usize, usize)>,
    entries: HashMap<(usize, usize, usize), u64>,
}

impl SparseIntersections {
    pub fn rank(&self) -> usize {
        self.valencies.len()
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.entries.get(&(i, j, k)).copied().unwrap_or(0)
    }

    pub fn valency(&self, i: usize) -> u64 {
        self.valencies[i]
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }

    /// Same checks as the dense tensor: block support, row sums,
    /// reciprocity and transpose symmetry. Reciprocity and symmetry are
    /// checked from every nonzero entry, which covers the zero side too.
    pub fn check_invariants(&self) -> Vec<TensorViolation> {
        let mut out = Vec::new();
        let mut row: HashMap<(usize, usize), u128> = HashMap::new();
        let mut keys: Vec<_> = self.entries.keys().copied().collect();
        keys.sort_unstable();
        for (i, j, k) in keys {
            let v = self.get(i, j, k);
            if self.blocks[i].1 != self.blocks[j].0
                || self.blocks[k] != (self.blocks[i].0, self.blocks[j].1)
            {
                out.push(TensorViolation::BlockSupport { i, j, k });
            }
            *row.entry((i, j)).or_default() += u128::from(v) * u128::from(self.valencies[k]);
            let lhs = u128::from(v) * u128::from(self.valencies[k]);
            let rhs = u128::from(self.get(k, self.transpose[j], i)) * u128::from(self.valencies[i]);
            if lhs != rhs {
                out.push(TensorViolation::Reciprocity {
                    i,
                    j,
                    k,
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
            let t = &self.transpose;
            if self.get(t[j], t[i], t[k]) != v {
                out.push(TensorViolation::TransposeSymmetry { i, j, k });
            }
        }
        let mut starting: HashMap<usize, Vec<usize>> = HashMap::new();
        for (j, b) in self.blocks.iter().enumerate() {
            starting.entry(b.0).or_default().push(j);
        }
        for i in 0..self.rank() {
            for &j in starting.get(&self.blocks[i].1).into_iter().flatten() {
                let lhs = row.get(&(i, j)).copied().unwrap_or(0);
                let rhs = u128::from(self.valencies[i]) * u128::from(self.valencies[j]);
                if lhs != rhs {
                    out.push(TensorViolation::RowSum {
                        i,
                        j,
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    });
                }
            }
        }
        out
    }
}

/// Sparse counterpart of [`structure_constants`](super::structure_constants).
pub fn sparse_structure_constants(c: &CoherentConfiguration) -> Result<SparseIntersections> {
    let report = verify_axioms(c);
    if let Some(v) = report
        .first_nonconstant()
        .or_else(|| report.violations.first())
    {
        return Err(Error::Precondition(format!(
            "not a coherent configuration: {v}"
        )));
    }
    let n = c.order();
    let reps = c.representatives();
    let (fib, _) = c.vertex_fibers();
    let width = c.color_count() as u64;
    let mut entries = HashMap::new();
    for (k, &(x, y)) in reps.iter().enumerate() {
        for (key, count) in cell_profile(c, x, y) {
            entries.insert(
                ((key / width) as usize, (key % width) as usize, k),
                count as u64,
            );
        }
    }
    Ok(SparseIntersections {
        valencies: reps
            .iter()
            .enumerate()
            .map(|(col, &(x, _))| (0..n).filter(|&y| c.color(x, y) == col).count() as u64)
            .collect(),
        transpose: reps.iter().map(|&(x, y)| c.color(y, x)).collect(),
        blocks: reps.iter().map(|&(x, y)| (fib[x], fib[y])).collect(),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherent::{structure_constants, wl_closure, StructureTensor};
    use crate::exact::Matrix;

    #[test]
    fn agrees_with_dense() {
        let path = Matrix::from_fn(4, 4, |i, j| i64::from(i.abs_diff(j) == 1));
        let c = wl_closure(&CoherentConfiguration::from_adjacency(&path).unwrap());
        let dense: StructureTensor<i64> = structure_constants(&c).unwrap();
        let sparse = sparse_structure_constants(&c).unwrap();
        assert_eq!(sparse.rank(), dense.rank());
        for (i, j, k, v) in dense.entries() {
            assert_eq!(sparse.get(i, j, k) as i64, *v);
        }
        assert!(sparse.check_invariants().is_empty());
    }

    #[test]
    fn rejects_incoherent_coloring() {
        let path = Matrix::from_fn(3, 3, |i, j| i64::from(i.abs_diff(j) == 1));
        let c = CoherentConfiguration::from_adjacency(&path).unwrap();
        assert!(sparse_structure_constants(&c).is_err());
    }
}
