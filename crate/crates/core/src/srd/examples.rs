//! Bundled concrete models. Vertex orders are lexicographic in the
//! underlying subsets so that golden values stay stable.

use std::fmt;
use std::str::FromStr;

use crate::coherent::MatrixInput;
use crate::error::{Error, Result};
use crate::exact::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExampleName {
    /// Generalized quadrangle GQ(2,2): duads against synthemes of a 6-set.
    Gq22,
    /// Kneser graph K(5,2).
    Petersen,
    /// A 2-(6,3,2) design: points against blocks.
    Design632,
    K4,
}

impl ExampleName {
    pub const ALL: [ExampleName; 4] = [Self::Gq22, Self::Petersen, Self::Design632, Self::K4];

    pub fn name(self) -> &'static str {
        match self {
            Self::Gq22 => "gq22",
            Self::Petersen => "petersen",
            Self::Design632 => "design_6_3_2",
            Self::K4 => "k4",
        }
    }
}

impl fmt::Display for ExampleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExampleName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| {
                let known: Vec<_> = Self::ALL.iter().map(|e| e.name()).collect();
                Error::Input(format!(
                    "unknown example '{s}' (known: {})",
                    known.join(", ")
                ))
            })
    }
}

pub fn gen_example(name: ExampleName) -> MatrixInput {
    match name {
        ExampleName::Gq22 => MatrixInput::Incidence(gq22_incidence()),
        ExampleName::Petersen => MatrixInput::Adjacency(petersen()),
        ExampleName::Design632 => MatrixInput::Incidence(design_6_3_2()),
        ExampleName::K4 => MatrixInput::Adjacency(Matrix::from_fn(4, 4, |i, j| i64::from(i != j))),
    }
}

/// Lexicographically ordered 2-subsets of `0..n`.
pub fn duads(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

/// The 15 synthemes (perfect matchings of `0..6`), each as sorted duad
/// indices, in lexicographic order.
pub fn synthemes() -> Vec<[usize; 3]> {
    let ds = duads(6);
    let mut out = Vec::new();
    for (i, a) in ds.iter().enumerate() {
        for (j, b) in ds.iter().enumerate().skip(i + 1) {
            for (k, c) in ds.iter().enumerate().skip(j + 1) {
                let mut pts = [a.0, a.1, b.0, b.1, c.0, c.1];
                pts.sort_unstable();
                if pts == [0, 1, 2, 3, 4, 5] {
                    out.push([i, j, k]);
                }
            }
        }
    }
    out
}

/// Rows are duads, columns synthemes; a duad is incident with the
/// synthemes containing it.
pub fn gq22_incidence() -> Matrix<i64> {
    let syn = synthemes();
    Matrix::from_fn(15, 15, |d, s| i64::from(syn[s].contains(&d)))
}

fn petersen() -> Matrix<i64> {
    let ds = duads(5);
    Matrix::from_fn(10, 10, |i, j| {
        let (a, b) = (ds[i], ds[j]);
        i64::from(a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1)
    })
}

/// Points `0..5` are `Z/5` and point 5 is the point at infinity; blocks are
/// `{∞, i, i+1}` and `{i, i+1, i+3}`, sorted lexicographically.
fn design_6_3_2() -> Matrix<i64> {
    let mut blocks: Vec<[usize; 3]> = (0..5)
        .flat_map(|i| {
            let mut a = [5, i, (i + 1) % 5];
            let mut b = [i, (i + 1) % 5, (i + 3) % 5];
            a.sort_unstable();
            b.sort_unstable();
            [a, b]
        })
        .collect();
    blocks.sort_unstable();
    Matrix::from_fn(6, 10, |p, b| i64::from(blocks[b].contains(&p)))
}
