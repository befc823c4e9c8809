//! Primitive idempotents of both GQ(2,2) fibers built from the character
//! table, checked on the explicit model.

use num_bigint::BigInt;
use num_rational::BigRational;
use srd_core::coherent::{canonical_relabel, sigma, wl_closure, CoherentConfiguration};
use srd_core::exact::Matrix;
use srd_core::srd::{
    character_table, gen_example, incidence_designation, ExampleName, SrdParams, Srg,
};
use srd_core::{Characters, RationalMatrix};

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn gq() -> SrdParams {
    let g = Srg::new(15, 6, 1, 3);
    SrdParams {
        srg1: g,
        srg2: g,
        S1: 3,
        S2: 3,
        N1: 2,
        P1: 1,
        N2: 2,
        P2: 1,
        a1: 1,
        b1: 0,
        a2: 1,
        b2: 0,
    }
}

/// Canonical GQ(2,2) closure as ten 30×30 relation matrices.
fn relations() -> Vec<RationalMatrix> {
    let input = gen_example(ExampleName::Gq22);
    let c = wl_closure(&CoherentConfiguration::from_input(&input).unwrap());
    let d = incidence_designation(input.matrix());
    let (canon, _) = canonical_relabel(&c, &d).unwrap();
    (0..10)
        .map(|k| canon.relation_matrix(k).map(|&v| rat(v)))
        .collect()
}

fn block(
    m: &RationalMatrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> RationalMatrix {
    let c0 = cols.start;
    Matrix::from_fn(rows.len(), cols.len(), |i, j| {
        m.get(rows.start + i, c0 + j).clone()
    })
}

/// `E_t = (m_t / n) Σ_i t(σ_i) / v_i · A_i` over one fiber's three relations.
fn idempotent(
    table: &Characters,
    row: &str,
    fiber: usize,
    rel: &[RationalMatrix],
) -> RationalMatrix {
    let t = table.row(row).unwrap();
    let n = 15;
    let range = fiber * 15..fiber * 15 + 15;
    let mut e = Matrix::zeros(n, n);
    for slot in 0..3 {
        let a = block(&rel[fiber * 3 + slot], range.clone(), range.clone());
        let v = a.row(0).iter().fold(rat(0), |s, x| s + x);
        let value = t.values[fiber * 3 + slot].as_rational().unwrap().clone();
        e = &e + &a.scale(&(value / v));
    }
    e.scale(&(rat(t.multiplicity) / rat(n as i64)))
}

fn mul(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    a.mul(b).unwrap()
}

#[test]
fn fiber_idempotents_are_orthogonal() {
    let rel = relations();
    let table = character_table::<BigInt>(&gq()).unwrap();
    for (fiber, rows) in [(0, ["chi", "phi", "psi1"]), (1, ["chi", "phi", "psi2"])] {
        let es: Vec<RationalMatrix> = rows
            .iter()
            .map(|r| idempotent(&table, r, fiber, &rel))
            .collect();
        let mut sum = Matrix::zeros(15, 15);
        for (a, ea) in es.iter().enumerate() {
            for (b, eb) in es.iter().enumerate() {
                let prod = mul(ea, eb);
                if a == b {
                    assert_eq!(&prod, ea, "{} not idempotent", rows[a]);
                } else {
                    assert!(prod.is_zero(), "{} {} not orthogonal", rows[a], rows[b]);
                }
            }
            let m = table.row(rows[a]).unwrap().multiplicity;
            assert_eq!(ea.trace(), rat(m));
            sum = &sum + ea;
        }
        assert_eq!(sum, Matrix::identity(15));
    }
}

#[test]
fn incidence_intertwines_shared_eigenspaces() {
    let rel = relations();
    let table = character_table::<BigInt>(&gq()).unwrap();
    let b = block(&rel[sigma(7)], 0..15, 15..30);
    let bt = b.transpose();
    let phi1 = idempotent(&table, "phi", 0, &rel);
    let phi2 = idempotent(&table, "phi", 1, &rel);
    let psi1 = idempotent(&table, "psi1", 0, &rel);
    let psi2 = idempotent(&table, "psi2", 1, &rel);
    assert_eq!(mul(&phi1, &b), mul(&b, &phi2));
    assert!(mul(&bt, &psi1).is_zero());
    assert!(mul(&b, &psi2).is_zero());
}

#[test]
fn multiplicities_fill_fibers() {
    let t = character_table::<BigInt>(&gq()).unwrap();
    let m = |r: &str| t.row(r).unwrap().multiplicity;
    assert_eq!(1 + m("phi") + m("psi1"), 15);
    assert_eq!(1 + m("phi") + m("psi2"), 15);
}
