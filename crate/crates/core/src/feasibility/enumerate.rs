use std::fmt::Write;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::complete::{complete_params, PartialParams};
use super::report::{check_params, CheckOptions, RouteSelection};
use crate::srd::{first_negative_entry, srg_spectrum, SrdParams, Srg};

/// Inclusive upper bounds on the fiber sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_n1: i64,
    pub max_n2: i64,
}

/// Parameter-feasible primitive SRGs (`0 < μ < k`) on at most `max_n`
/// vertices: the counting identity holds and the multiplicities are
/// positive integers.
pub fn primitive_srgs(max_n: i64) -> Vec<Srg> {
    let mut out = Vec::new();
    for n in 5..=max_n {
        for k in 2..n - 1 {
            for lambda in 0..k {
                for mu in 1..k {
                    let g = Srg::new(n, k, lambda, mu);
                    if k * (k - lambda - 1) == (n - k - 1) * mu && srg_spectrum::<i64>(g).is_ok() {
                        out.push(g);
                    }
                }
            }
        }
    }
    out
}

fn candidates(srg1: Srg, srg2: Srg) -> Vec<SrdParams> {
    let mut out = Vec::new();
    for s1 in 1..srg1.n {
        if (srg2.n * s1) % srg1.n != 0 {
            continue;
        }
        let s2 = srg2.n * s1 / srg1.n;
        for n1 in 0..=srg1.k.min(s1 - 1) {
            for n2 in 0..=srg2.k.min(s2 - 1) {
                let partial = PartialParams {
                    srg1,
                    srg2,
                    S1: s1,
                    N1: n1,
                    N2: n2,
                };
                if let Ok(p) = complete_params(&partial) {
                    if first_negative_entry(&p).is_none() {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Every tuple within bounds whose dependent fields are integral, whose
/// derived intersection numbers are non-negative and which satisfies all
/// fifteen corrected equations under some fiber-2 labeling. Sorted
/// lexicographically by the 18 fields.
pub fn enumerate_feasible(bounds: Bounds) -> Vec<SrdParams> {
    let fiber1 = primitive_srgs(bounds.max_n1);
    let fiber2 = primitive_srgs(bounds.max_n2);
    let opts = CheckOptions {
        routes: RouteSelection::Equations,
        ..Default::default()
    };
    let mut out: Vec<SrdParams> = fiber1
        .par_iter()
        .flat_map_iter(|&a| fiber2.iter().map(move |&b| (a, b)))
        .flat_map_iter(|(a, b)| candidates(a, b))
        .filter(|p| check_params::<BigInt>(p, &opts).passed())
        .collect();
    out.sort_unstable_by_key(SrdParams::as_array);
    out
}

const COLUMNS: [&str; 18] = [
    "n1", "k1", "λ1", "μ1", "n2", "k2", "λ2", "μ2", "S1", "S2", "N1", "P1", "N2", "P2", "a1", "b1",
    "a2", "b2",
];

/// Fixed-width table, one tuple per line.
pub fn format_table(rows: &[SrdParams]) -> String {
    let width = rows
        .iter()
        .flat_map(|p| p.as_array())
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(0)
        .max(2)
        + 1;
    let mut s = String::new();
    for c in COLUMNS {
        let _ = write!(s, "{c:>width$}");
    }
    s.push('\n');
    for p in rows {
        for v in p.as_array() {
            let _ = write!(s, "{v:>width$}");
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_srgs() {
        assert!(primitive_srgs(4).is_empty());
        let five = primitive_srgs(10);
        assert!(five.contains(&Srg::new(5, 2, 0, 1)));
        assert!(five.contains(&Srg::new(10, 3, 0, 1)));
        assert!(five.contains(&Srg::new(9, 4, 1, 2)));
        assert!(!five.contains(&Srg::new(4, 2, 0, 2)));
    }

    #[test]
    fn tiny_bounds_empty() {
        assert!(enumerate_feasible(Bounds {
            max_n1: 4,
            max_n2: 4
        })
        .is_empty());
    }

    #[test]
    fn table_layout() {
        let g = Srg::new(15, 6, 1, 3);
        let p = complete_params(&PartialParams {
            srg1: g,
            srg2: g,
            S1: 3,
            N1: 2,
            N2: 2,
        })
        .unwrap();
        let t = format_table(&[p]);
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].trim_start().starts_with("n1"));
        assert_eq!(lines[1].split_whitespace().count(), 18);
        assert_eq!(lines[0].chars().count(), lines[1].chars().count());
    }
}
