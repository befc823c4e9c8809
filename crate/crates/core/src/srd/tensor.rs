//! The expected intersection numbers of a type-`[3 2; 3]` configuration.
//!
//! Products of the "primary" relations (the identities, `σ2`, `σ5`, `σ7`,
//! `σ9`) are given by the parameters. Every complement relation is written
//! as an all-ones block minus primary relations, and all-ones blocks
//! multiply through valencies and fiber sizes, so the whole tensor follows
//! by bilinear expansion. Nothing about the complements is taken on trust.

use std::sync::OnceLock;

use super::params::SrdParams;
use super::symbolic::{LinExpr, Param};
use crate::coherent::StructureTensor;
use crate::error::{Error, Result};
use crate::exact::{lift, Scalar};

/// Basis of the adjacency algebra used for the expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Base {
    I1,
    A1,
    J11,
    I2,
    A2,
    J22,
    B,
    J12,
    Bt,
    J21,
}

use Base::*;

/// Fiber block `(source, target)`, zero-based.
fn block(b: Base) -> (usize, usize) {
    match b {
        I1 | A1 | J11 => (0, 0),
        I2 | A2 | J22 => (1, 1),
        B | J12 => (0, 1),
        Bt | J21 => (1, 0),
    }
}

/// Block of each relation `σ1..σ10`.
pub const RELATION_BLOCKS: [(usize, usize); 10] = [
    (0, 0),
    (0, 0),
    (0, 0),
    (1, 1),
    (1, 1),
    (1, 1),
    (0, 1),
    (0, 1),
    (1, 0),
    (1, 0),
];

/// Index of `σ_i*` for each relation.
pub const RELATION_TRANSPOSE: [usize; 10] = [0, 1, 2, 3, 4, 5, 8, 9, 6, 7];

/// `σ_i` in the base, relation index zero-based.
fn relation_in_base(i: usize) -> Vec<(i64, Base)> {
    match i {
        0 => vec![(1, I1)],
        1 => vec![(1, A1)],
        2 => vec![(1, J11), (-1, I1), (-1, A1)],
        3 => vec![(1, I2)],
        4 => vec![(1, A2)],
        5 => vec![(1, J22), (-1, I2), (-1, A2)],
        6 => vec![(1, B)],
        7 => vec![(1, J12), (-1, B)],
        8 => vec![(1, Bt)],
        9 => vec![(1, J21), (-1, Bt)],
        _ => unreachable!(),
    }
}

/// Base element written over the relations `σ1..σ10`.
fn base_in_relations(b: Base) -> Vec<usize> {
    match b {
        I1 => vec![0],
        A1 => vec![1],
        J11 => vec![0, 1, 2],
        I2 => vec![3],
        A2 => vec![4],
        J22 => vec![3, 4, 5],
        B => vec![6],
        J12 => vec![6, 7],
        Bt => vec![8],
        J21 => vec![8, 9],
    }
}

type Combo = Vec<(LinExpr, Base)>;

fn p(x: Param) -> LinExpr {
    LinExpr::param(x)
}

fn c(v: i64) -> LinExpr {
    LinExpr::constant(v)
}

/// `lam·X + mu·(J − I − X)` plus `k·I` for a strongly regular fiber.
fn srg_square(i: Base, a: Base, j: Base, k: Param, lam: Param, mu: Param) -> Combo {
    vec![(p(k) - p(mu), i), (p(lam) - p(mu), a), (p(mu), j)]
}

/// Product of two base elements in the base. Only composable pairs are
/// meaningful; others give zero.
fn base_product(x: Base, y: Base) -> Combo {
    use Param::{Lambda1, Lambda2, Mu1, Mu2, N1v, N2v, K1, K2, N1, N2, P1, P2, S1, S2};
    if block(x).1 != block(y).0 {
        return Vec::new();
    }
    match (x, y) {
        (I1, y) | (I2, y) => vec![(c(1), y)],
        (x, I1) | (x, I2) => vec![(c(1), x)],

        (A1, A1) => srg_square(I1, A1, J11, K1, Lambda1, Mu1),
        (A1, J11) | (J11, A1) => vec![(p(K1), J11)],
        (J11, J11) => vec![(p(N1v), J11)],
        (A2, A2) => srg_square(I2, A2, J22, K2, Lambda2, Mu2),
        (A2, J22) | (J22, A2) => vec![(p(K2), J22)],
        (J22, J22) => vec![(p(N2v), J22)],

        // fiber 1 acting on cross relations
        (A1, B) => vec![(p(N1) - p(P1), B), (p(P1), J12)],
        (A1, J12) => vec![(p(K1), J12)],
        (J11, B) => vec![(p(S1), J12)],
        (J11, J12) => vec![(p(N1v), J12)],
        (Bt, A1) => vec![(p(N1) - p(P1), Bt), (p(P1), J21)],
        (J21, A1) => vec![(p(K1), J21)],
        (Bt, J11) => vec![(p(S1), J21)],
        (J21, J11) => vec![(p(N1v), J21)],

        // fiber 2 acting on cross relations
        (B, A2) => vec![(p(N2) - p(P2), B), (p(P2), J12)],
        (J12, A2) => vec![(p(K2), J12)],
        (B, J22) => vec![(p(S2), J12)],
        (J12, J22) => vec![(p(N2v), J12)],
        (A2, Bt) => vec![(p(N2) - p(P2), Bt), (p(P2), J21)],
        (A2, J21) => vec![(p(K2), J21)],
        (J22, Bt) => vec![(p(S2), J21)],
        (J22, J21) => vec![(p(N2v), J21)],

        // cross times cross
        (B, Bt) => vec![
            (p(S2) - p(Param::B2), I1),
            (p(Param::A2) - p(Param::B2), A1),
            (p(Param::B2), J11),
        ],
        (B, J21) | (J12, Bt) => vec![(p(S2), J11)],
        (J12, J21) => vec![(p(N2v), J11)],
        (Bt, B) => vec![
            (p(S1) - p(Param::B1), I2),
            (p(Param::A1) - p(Param::B1), A2),
            (p(Param::B1), J22),
        ],
        (Bt, J12) | (J21, B) => vec![(p(S1), J22)],
        (J21, J12) => vec![(p(N1v), J22)],

        _ => unreachable!("composable pair {x:?} {y:?} without a rule"),
    }
}

/// `σ_i σ_j` over the relations, as symbolic coefficients.
fn relation_product(i: usize, j: usize) -> [LinExpr; 10] {
    let mut out: [LinExpr; 10] = Default::default();
    for (ci, bi) in relation_in_base(i) {
        for (cj, bj) in relation_in_base(j) {
            for (coef, b) in base_product(bi, bj) {
                for k in base_in_relations(b) {
                    let term = coef.clone() * (ci * cj);
                    out[k] = std::mem::take(&mut out[k]) + term;
                }
            }
        }
    }
    out
}

/// Symbolic valencies `v1..v10`.
pub fn symbolic_valencies() -> [LinExpr; 10] {
    use Param::*;
    [
        c(1),
        p(K1),
        p(N1v) - p(K1) - c(1),
        c(1),
        p(K2),
        p(N2v) - p(K2) - c(1),
        p(S2),
        p(N2v) - p(S2),
        p(S1),
        p(N1v) - p(S1),
    ]
}

/// All 1000 entries `p[i][j][k]`, zero-based, as linear expressions in the
/// parameters. Computed once.
pub fn symbolic_tensor() -> &'static [[[LinExpr; 10]; 10]; 10] {
    static TABLE: OnceLock<Box<[[[LinExpr; 10]; 10]; 10]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t: Box<[[[LinExpr; 10]; 10]; 10]> = Box::default();
        for i in 0..10 {
            for j in 0..10 {
                t[i][j] = relation_product(i, j);
            }
        }
        t
    })
}

/// Derived tensor without any sign check; used for mutation analysis.
pub fn derived_tensor_unchecked<T: Scalar>(params: &SrdParams) -> StructureTensor<T> {
    let sym = symbolic_tensor();
    let val = |e: &LinExpr| lift::<T>(e.eval(|q| params.value(q)));
    let valencies = symbolic_valencies().iter().map(val).collect();
    let mut t = StructureTensor::new(
        RELATION_BLOCKS.to_vec(),
        RELATION_TRANSPOSE.to_vec(),
        valencies,
    );
    for (i, row) in sym.iter().enumerate() {
        for (j, col) in row.iter().enumerate() {
            for (k, e) in col.iter().enumerate() {
                if !e.is_zero() {
                    t.set(i, j, k, val(e));
                }
            }
        }
    }
    t
}

/// First entry (or valency) of the derived tensor that is negative, with its
/// symbolic form and value.
pub fn first_negative_entry(params: &SrdParams) -> Option<String> {
    let v = |e: &LinExpr| e.eval(|q| params.value(q));
    for (i, e) in symbolic_valencies().iter().enumerate() {
        if v(e) <= 0 {
            return Some(format!("v{} = {} = {} is not positive", i + 1, e, v(e)));
        }
    }
    let sym = symbolic_tensor();
    for i in 0..10 {
        for j in 0..10 {
            for k in 0..10 {
                let e = &sym[i][j][k];
                if !e.is_zero() && v(e) < 0 {
                    return Some(format!(
                        "p[{}][{}][{}] = {} = {}",
                        i + 1,
                        j + 1,
                        k + 1,
                        e,
                        v(e)
                    ));
                }
            }
        }
    }
    None
}

/// The full 10×10×10 tensor implied by the parameters. Fails when a derived
/// entry is negative or a valency is not positive.
pub fn expected_structure_constants<T: Scalar>(params: &SrdParams) -> Result<StructureTensor<T>> {
    if let Some(msg) = first_negative_entry(params) {
        return Err(Error::Infeasible(msg));
    }
    Ok(derived_tensor_unchecked(params))
}
