//! Coherent closure on random inputs: axioms, idempotence, the tensor
//! identities and equivariance under vertex relabeling.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use srd_core::coherent::{
    sparse_structure_constants, verify_axioms, wl_closure, CoherentConfiguration,
};
use srd_core::exact::Matrix;

fn random_incidence(rng: &mut StdRng) -> Matrix<i64> {
    let (r, c) = (rng.gen_range(1..=12), rng.gen_range(1..=12));
    let density = rng.gen_range(0.1..0.9);
    Matrix::from_fn(r, c, |_, _| i64::from(rng.gen_bool(density)))
}

fn random_graph(rng: &mut StdRng) -> Matrix<i64> {
    let n = rng.gen_range(2..=16);
    let density = rng.gen_range(0.1..0.9);
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let e = i64::from(rng.gen_bool(density));
            m.set(i, j, e);
            m.set(j, i, e);
        }
    }
    m
}

/// Ten random bipartite incidences and ten random graphs.
fn inputs() -> Vec<CoherentConfiguration> {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut out = Vec::new();
    for _ in 0..10 {
        out.push(CoherentConfiguration::from_incidence(&random_incidence(&mut rng)).unwrap());
        out.push(CoherentConfiguration::from_adjacency(&random_graph(&mut rng)).unwrap());
    }
    out
}

fn assert_coherent(c: &CoherentConfiguration) {
    let report = verify_axioms(c);
    assert!(report.passed(), "{:?}", report.violations.first());
    let t = sparse_structure_constants(c).unwrap();
    let bad = t.check_invariants();
    assert!(bad.is_empty(), "{}", bad[0]);
}

#[test]
fn closure_is_coherent_and_idempotent() {
    for input in inputs() {
        let c = wl_closure(&input);
        assert_coherent(&c);
        assert!(wl_closure(&c).same_partition(&c));
        assert!(c.color_count() >= input.color_count());
    }
}

#[test]
fn closure_refines_input() {
    for input in inputs() {
        let c = wl_closure(&input);
        let n = c.order();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for w in 0..n {
                        if c.color(x, y) == c.color(z, w) {
                            assert_eq!(input.color(x, y), input.color(z, w));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn closure_commutes_with_relabeling() {
    let mut rng = StdRng::seed_from_u64(7);
    for input in inputs() {
        let (n1, n2) = input.fiber_sizes();
        let mut perm: Vec<usize> = (0..n1).collect();
        perm.shuffle(&mut rng);
        let mut tail: Vec<usize> = (n1..n1 + n2).collect();
        tail.shuffle(&mut rng);
        perm.extend(tail);
        let moved = input.permute_vertices(&perm, (n1, n2));
        let a = wl_closure(&moved);
        let b = wl_closure(&input).permute_vertices(&perm, (n1, n2));
        assert_eq!(a.color_count(), b.color_count());
        assert!(a.same_partition(&b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_graphs_close_coherently(n in 2usize..10, bits in proptest::collection::vec(any::<bool>(), 45)) {
        let mut m = Matrix::zeros(n, n);
        let mut it = bits.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                let e = i64::from(it.next().unwrap());
                m.set(i, j, e);
                m.set(j, i, e);
            }
        }
        let c = wl_closure(&CoherentConfiguration::from_adjacency(&m).unwrap());
        prop_assert!(verify_axioms(&c).passed());
        prop_assert!(wl_closure(&c).same_partition(&c));
    }
}
