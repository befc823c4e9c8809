//! `srg_spectrum` against exact linear algebra on explicit adjacency
//! matrices: characteristic polynomials and eigenspace dimensions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use srd_core::srd::{srg_spectrum, Srg};
use srd_core::Quad;

type Poly = Vec<Quad>;

fn q(v: i64) -> Quad {
    Quad::from_int(v)
}

/// Kneser graph on the 2-subsets of an `m`-set: adjacent when disjoint.
/// `m = 5` is the Petersen graph, `m = 6` the GQ(2,2) collinearity graph.
fn kneser(m: usize) -> Vec<Vec<i64>> {
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
        .collect();
    pairs
        .iter()
        .map(|x| {
            pairs
                .iter()
                .map(|y| i64::from(x.0 != y.0 && x.0 != y.1 && x.1 != y.0 && x.1 != y.1))
                .collect()
        })
        .collect()
}

fn pentagon() -> Vec<Vec<i64>> {
    (0..5)
        .map(|i| {
            (0..5)
                .map(|j| i64::from((i + 5 - j) % 5 == 1 || (j + 5 - i) % 5 == 1))
                .collect()
        })
        .collect()
}

/// Characteristic polynomial `det(xI − A)` by Faddeev–LeVerrier, low degree
/// first.
fn charpoly(a: &[Vec<i64>]) -> Vec<BigRational> {
    let n = a.len();
    let r = |v: i64| BigRational::from_integer(BigInt::from(v));
    let am: Vec<Vec<BigRational>> = a
        .iter()
        .map(|row| row.iter().map(|&v| r(v)).collect())
        .collect();
    let mul = |x: &Vec<Vec<BigRational>>, y: &Vec<Vec<BigRational>>| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(BigRational::zero(), |acc, k| acc + &x[i][k] * &y[k][j]))
                    .collect()
            })
            .collect()
    };
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        for i in 0..n {
            m[i][i] += &coeffs[n - k + 1];
        }
        let am_k = mul(&am, &m);
        let tr = (0..n).fold(BigRational::zero(), |acc, i| acc + &am_k[i][i]);
        coeffs[n - k] = -tr / r(k as i64);
        m = am_k;
    }
    coeffs
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![q(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

/// Rank over the quadratic field by Gaussian elimination.
fn rank(mut m: Vec<Vec<Quad>>) -> usize {
    let (rows, cols) = (m.len(), m[0].len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].inv().unwrap();
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].clone() * inv.clone();
                for k in c..cols {
                    let v = m[r][k].clone() - f.clone() * m[rank][k].clone();
                    m[r][k] = v;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn nullity(a: &[Vec<i64>], ev: &Quad) -> usize {
    let n = a.len();
    let shifted = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| q(a[i][j]) - if i == j { ev.clone() } else { q(0) })
                .collect()
        })
        .collect();
    n - rank(shifted)
}

fn check(srg: Srg, a: &[Vec<i64>]) {
    let sp = srg_spectrum::<BigInt>(srg).unwrap();
    assert_eq!(nullity(a, &q(srg.k)), 1);
    assert_eq!(nullity(a, &sp.r), sp.f as usize, "{srg} r");
    assert_eq!(nullity(a, &sp.s), sp.g as usize, "{srg} s");
    assert!(sp.r > sp.s);

    let mut expect: Poly = vec![-q(srg.k), q(1)];
    for _ in 0..sp.f {
        expect = poly_mul(&expect, &vec![-sp.r.clone(), q(1)]);
    }
    for _ in 0..sp.g {
        expect = poly_mul(&expect, &vec![-sp.s.clone(), q(1)]);
    }
    let actual: Poly = charpoly(a).into_iter().map(Quad::from_scalar).collect();
    assert_eq!(actual, expect, "{srg} characteristic polynomial");
}

#[test]
fn petersen_spectrum() {
    let sp = srg_spectrum::<BigInt>(Srg::new(10, 3, 0, 1)).unwrap();
    assert_eq!(
        (sp.r.to_string(), sp.s.to_string(), sp.f, sp.g),
        ("1".into(), "-2".into(), 5, 4)
    );
    check(Srg::new(10, 3, 0, 1), &kneser(5));
}

#[test]
fn gq_collinearity_spectrum() {
    let sp = srg_spectrum::<BigInt>(Srg::new(15, 6, 1, 3)).unwrap();
    assert_eq!(
        (sp.r.to_string(), sp.s.to_string(), sp.f, sp.g),
        ("1".into(), "-3".into(), 9, 5)
    );
    check(Srg::new(15, 6, 1, 3), &kneser(6));
}

#[test]
fn pentagon_spectrum_in_q_sqrt5() {
    let sp = srg_spectrum::<BigInt>(Srg::new(5, 2, 0, 1)).unwrap();
    assert!(!sp.r.is_rational());
    assert_eq!(sp.r.radicands(), [5, 0]);
    assert_eq!((sp.f, sp.g), (2, 2));
    assert_eq!(sp.r.clone() + sp.s.clone(), q(-1));
    assert_eq!(sp.r.clone() * sp.s.clone(), q(-1));
    check(Srg::new(5, 2, 0, 1), &pentagon());
}
