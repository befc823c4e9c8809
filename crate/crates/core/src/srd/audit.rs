//! Comparison of a literal transcription of the published multiplication
//! table against the derived tensor.

use serde::Serialize;

use super::params::SrdParams;
use super::symbolic::LinExpr;
use super::tensor::symbolic_tensor;
use crate::coherent::sigma;

/// `(i, j, [(k, coefficient)])`: the printed expansion of `σ_i σ_j`, one-based.
/// Copied term by term, including the two rows that fail row-sum checks.
const TRANSCRIBED: &[(usize, usize, &[(usize, &str)])] = &[
    // fiber 1
    (1, 1, &[(1, "1")]),
    (1, 2, &[(2, "1")]),
    (1, 3, &[(3, "1")]),
    (2, 1, &[(2, "1")]),
    (2, 2, &[(1, "k1"), (2, "lambda1"), (3, "mu1")]),
    (2, 3, &[(2, "k1-lambda1-1"), (3, "k1-mu1")]),
    (3, 1, &[(3, "1")]),
    (3, 2, &[(2, "k1-lambda1-1"), (3, "k1-mu1")]),
    (
        3,
        3,
        &[(1, "n1-k1-1"), (2, "n1-2k1+lambda1"), (3, "n1-2k1+mu1-2")],
    ),
    // fiber 1 times cross 1→2
    (1, 7, &[(7, "1")]),
    (1, 8, &[(8, "1")]),
    (2, 7, &[(7, "N1"), (8, "P1")]),
    (2, 8, &[(7, "k1-N1"), (8, "k1-P1")]),
    (3, 7, &[(7, "S1-N1-1"), (8, "S1-P1")]),
    (3, 8, &[(7, "n1-S1-k1+N1"), (8, "n1-S1-k1+P1-1")]),
    // fiber 2
    (4, 4, &[(4, "1")]),
    (4, 5, &[(5, "1")]),
    (4, 6, &[(6, "1")]),
    (5, 4, &[(5, "1")]),
    (5, 5, &[(4, "k2"), (5, "lambda2"), (6, "mu2")]),
    (5, 6, &[(5, "k2-lambda2-1"), (6, "k2-mu2")]),
    (6, 4, &[(6, "1")]),
    (6, 5, &[(5, "k2-lambda2-1"), (6, "k2-mu2")]),
    (
        6,
        6,
        &[(4, "n2-k2-1"), (5, "n2-2k2+lambda2"), (6, "n2-2k2+mu2-2")],
    ),
    // fiber 2 times cross 2→1
    (4, 9, &[(9, "1")]),
    (4, 10, &[(10, "1")]),
    (5, 9, &[(9, "N2"), (10, "P2")]),
    (5, 10, &[(9, "k2-N2"), (10, "k2-P2")]),
    (6, 9, &[(9, "S2-N2-1"), (10, "S2-P2")]),
    (6, 10, &[(9, "n2-k2-S2+N2"), (10, "n2-k2-S2+P2-1")]),
    // cross 1→2 times fiber 2
    (7, 4, &[(7, "1")]),
    (7, 5, &[(7, "N2"), (8, "P2")]),
    (7, 6, &[(7, "S2-N2-1"), (8, "S2-P2")]),
    (8, 4, &[(8, "1")]),
    (8, 5, &[(7, "k2-N2"), (8, "k2-P2")]),
    (8, 6, &[(7, "n2-k2-S2+N2"), (8, "n2-k2-S2+P2-1")]),
    // cross 1→2 times cross 2→1
    (7, 9, &[(1, "S2"), (2, "a2"), (3, "b2")]),
    (7, 10, &[(2, "S2-a2"), (3, "S2-b2")]),
    (8, 9, &[(2, "S2-a2"), (3, "S2-b2")]),
    (8, 10, &[(1, "n2-S2"), (2, "n2+a2"), (3, "n2+b2")]),
    // cross 2→1 times fiber 1
    (9, 1, &[(9, "1")]),
    (9, 2, &[(9, "N1"), (10, "P1")]),
    (9, 3, &[(9, "S1-N1-1"), (10, "S1-P1")]),
    (10, 1, &[(10, "1")]),
    (10, 2, &[(9, "k1-N1"), (10, "k1-P1")]),
    (10, 3, &[(9, "n1-k1-S1+N1"), (10, "n1-k1-S1+P1-1")]),
    // cross 2→1 times cross 1→2
    (9, 7, &[(4, "S1"), (5, "a1"), (6, "b1")]),
    (9, 8, &[(5, "S1-a1"), (6, "S1-b1")]),
    (10, 7, &[(5, "S1-a1"), (6, "S1-b1")]),
    (10, 8, &[(4, "n1-S1"), (5, "n1+a1"), (6, "n1+b1")]),
];

/// One coefficient where transcription and derivation disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    /// One-based `(i, j, k)`: coefficient of `σ_k` in `σ_i σ_j`.
    pub entry: (usize, usize, usize),
    pub transcribed: String,
    pub derived: String,
    pub transcribed_value: i64,
    pub derived_value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub params: SrdParams,
    /// Products listed in the table whose coefficients all agree, one-based.
    pub agreeing_products: Vec<(usize, usize)>,
    pub discrepancies: Vec<Discrepancy>,
    pub notes: Vec<String>,
}

/// The transcription parsed into linear expressions, with products not
/// listed being zero.
pub fn transcribed_table() -> Vec<((usize, usize), [LinExpr; 10])> {
    TRANSCRIBED
        .iter()
        .map(|&(i, j, terms)| {
            let mut row: [LinExpr; 10] = Default::default();
            for &(k, expr) in terms {
                row[sigma(k)] = LinExpr::parse(expr).expect("transcription parses");
            }
            ((i, j), row)
        })
        .collect()
}

/// Lists every coefficient where the transcribed table differs from the
/// derived tensor, symbolically and evaluated at `params`.
pub fn audit_table(params: &SrdParams) -> AuditReport {
    let derived = symbolic_tensor();
    let table = transcribed_table();
    let eval = |e: &LinExpr| e.eval(|q| params.value(q));
    let mut agreeing = Vec::new();
    let mut discrepancies = Vec::new();
    let mut listed = [[false; 10]; 10];
    for ((i, j), row) in &table {
        listed[sigma(*i)][sigma(*j)] = true;
        let mut ok = true;
        for k in 0..10 {
            let d = &derived[sigma(*i)][sigma(*j)][k];
            if &row[k] != d {
                ok = false;
                discrepancies.push(Discrepancy {
                    entry: (*i, *j, k + 1),
                    transcribed: row[k].to_string(),
                    derived: d.to_string(),
                    transcribed_value: eval(&row[k]),
                    derived_value: eval(d),
                });
            }
        }
        if ok {
            agreeing.push((*i, *j));
        }
    }
    // unlisted products must vanish identically
    for i in 0..10 {
        for j in 0..10 {
            if listed[i][j] {
                continue;
            }
            for k in 0..10 {
                let d = &derived[i][j][k];
                if !d.is_zero() {
                    discrepancies.push(Discrepancy {
                        entry: (i + 1, j + 1, k + 1),
                        transcribed: "0".into(),
                        derived: d.to_string(),
                        transcribed_value: 0,
                        derived_value: eval(d),
                    });
                }
            }
        }
    }
    let notes = vec![
        format!(
            "p[7][5][5] is structurally zero (σ7σ5 lies in the 1→2 block); the flag count it stands for is p[7][5][7] = N2 = {}",
            eval(&derived[sigma(7)][sigma(5)][sigma(7)])
        ),
        "the λ/μ column order of the external parameter listing cannot be checked here: that listing is not part of this data".into(),
    ];
    AuditReport {
        params: *params,
        agreeing_products: agreeing,
        discrepancies,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transcription_covers_all_composable_products() {
        // 8 blocks of products: 9 + 6 + 9 + 6 + 6 + 4 + 6 + 4
        assert_eq!(transcribed_table().len(), 50);
    }
}
