use num_traits::Zero;
use serde::Serialize;

use crate::coherent::{sigma, StructureTensor};
use crate::exact::{lift, Matrix, QuadValue, Scalar};
use crate::srd::{CharacterTable, SrdParams};

/// A single attributable check inside a route, tied to one equation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    pub equation: u8,
    pub witness: String,
    pub lhs: String,
    pub rhs: String,
    pub residual: String,
    pub pass: bool,
}

impl NamedCheck {
    fn new<T: Scalar>(equation: u8, witness: String, lhs: QuadValue<T>, rhs: QuadValue<T>) -> Self {
        let residual = lhs.clone() - rhs.clone();
        Self {
            equation,
            witness,
            pass: residual.is_zero(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            residual: residual.to_string(),
        }
    }
}

/// Outcome of one confirmation route.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RouteReport {
    pub pass: bool,
    /// Number of elementary identities evaluated.
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
    pub named: Vec<NamedCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl RouteReport {
    fn finish(
        checked: usize,
        failures: Vec<String>,
        named: Vec<NamedCheck>,
        note: Option<String>,
    ) -> Self {
        Self {
            pass: failures.is_empty() && named.iter().all(|c| c.pass),
            checked,
            failures: failures.len(),
            first_failure: failures.into_iter().next(),
            named,
            note,
        }
    }

    /// A route that could not run at all.
    pub fn unavailable(reason: String) -> Self {
        Self {
            pass: false,
            checked: 0,
            failures: 0,
            first_failure: Some(reason),
            named: Vec::new(),
            note: None,
        }
    }
}

fn q<T: Scalar>(v: T) -> QuadValue<T> {
    QuadValue::from_scalar(v)
}

/// `p[i][j][k]·v_k = p[k][j*][i]·v_i` over every composable triple, with the
/// instances behind equations (2) to (5) reported by name.
pub fn route_a<T: Scalar>(t: &StructureTensor<T>) -> RouteReport {
    let r = t.rank();
    let mut checked = 0;
    let mut failures = Vec::new();
    for i in 0..r {
        for j in 0..r {
            if !t.composable(i, j) {
                continue;
            }
            for k in 0..r {
                if t.block(k) != (t.block(i).0, t.block(j).1) {
                    continue;
                }
                checked += 1;
                let (lhs, rhs) = t.reciprocity_sides(i, j, k);
                if lhs != rhs {
                    failures.push(format!(
                        "p[{i1}][{j1}][{k1}]*v{k1} = {lhs} but p[{k1}][{js}][{i1}]*v{i1} = {rhs}",
                        i1 = i + 1,
                        j1 = j + 1,
                        k1 = k + 1,
                        js = t.transpose_of(j) + 1,
                    ));
                }
            }
        }
    }
    let v = |i: usize| t.valency(sigma(i)).clone();
    let mut named = vec![NamedCheck::new(
        2,
        "n1*v7 = n2*v9 (ones in σ7)".into(),
        q((v(1) + v(2) + v(3)) * v(7)),
        q((v(4) + v(5) + v(6)) * v(9)),
    )];
    for (eq, (i, j, k)) in [(3, (9, 2, 10)), (4, (7, 9, 2)), (5, (7, 9, 3))] {
        let (lhs, rhs) = t.reciprocity_sides(sigma(i), sigma(j), sigma(k));
        let js = t.transpose_of(sigma(j)) + 1;
        named.push(NamedCheck::new(
            eq,
            format!("p[{i}][{j}][{k}]*v{k} = p[{k}][{js}][{i}]*v{i}"),
            q(lhs),
            q(rhs),
        ));
    }
    RouteReport::finish(checked, failures, named, None)
}

/// The matrices `M(σ_i)` with `M(σ_i)[s][t] = p[s][i][t]`.
#[derive(Clone, Debug, PartialEq)]
pub struct RegularRep<T: Scalar> {
    pub matrices: Vec<Matrix<T>>,
}

impl<T: Scalar> RegularRep<T> {
    pub fn new(t: &StructureTensor<T>) -> Self {
        let r = t.rank();
        let matrices = (0..r)
            .map(|i| Matrix::from_fn(r, r, |s, u| t.get(s, i, u).clone()))
            .collect();
        Self { matrices }
    }

    pub fn get(&self, i: usize) -> &Matrix<T> {
        &self.matrices[i]
    }

    /// `M(σ_i)M(σ_j) − Σ_k p[i][j][k]·M(σ_k)`.
    pub fn residual(&self, t: &StructureTensor<T>, i: usize, j: usize) -> Matrix<T> {
        let mut out = self.matrices[i]
            .mul(&self.matrices[j])
            .expect("square matrices of equal size");
        for (k, m) in self.matrices.iter().enumerate() {
            let c = t.get(i, j, k);
            if !c.is_zero() {
                out = &out - &m.scale(c);
            }
        }
        out
    }
}

/// Witness entries `(equation, i, j, s, t)`, one-based: equation is read off
/// `(M(σ_i)M(σ_j))[s][t]`.
const REGREP_WITNESSES: [(u8, usize, usize, usize, usize); 7] = [
    (6, 2, 2, 9, 9),
    (7, 2, 2, 9, 10),
    (8, 7, 9, 2, 2),
    (9, 7, 9, 2, 3),
    (10, 7, 9, 9, 9),
    (11, 7, 9, 9, 10),
    (12, 9, 2, 5, 9),
];

/// Associativity of the regular representation over all pairs `(i, j)`,
/// summing over every relation.
pub fn route_b<T: Scalar>(t: &StructureTensor<T>) -> RouteReport {
    let rep = RegularRep::new(t);
    let r = t.rank();
    let mut failures = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let res = rep.residual(t, i, j);
            if let Some((s, u, v)) = res.first_nonzero() {
                failures.push(format!(
                    "M(σ{})M(σ{}) residual {} at [{}][{}]",
                    i + 1,
                    j + 1,
                    v,
                    s + 1,
                    u + 1
                ));
            }
        }
    }
    let named = REGREP_WITNESSES
        .iter()
        .map(|&(eq, i, j, s, u)| {
            let (i0, j0, s0, u0) = (sigma(i), sigma(j), sigma(s), sigma(u));
            let lhs = (0..r).fold(T::zero(), |acc, m| {
                acc + rep.get(i0).get(s0, m).clone() * rep.get(j0).get(m, u0).clone()
            });
            let rhs = (0..r).fold(T::zero(), |acc, k| {
                acc + t.get(i0, j0, k).clone() * rep.get(k).get(s0, u0).clone()
            });
            NamedCheck::new(eq, format!("(M(σ{i})M(σ{j}))[{s}][{u}]"), q(lhs), q(rhs))
        })
        .collect();
    RouteReport::finish(r * r, failures, named, Some(format!("sum over k = 1..{r}")))
}

/// Each character row evaluated on `σ7σ9 = S2σ1 + a2σ2 + b2σ3` and
/// `σ9σ7 = S1σ4 + a1σ5 + b1σ6`.
#[allow(non_snake_case)]
pub fn route_c<T: Scalar>(p: &SrdParams, table: &CharacterTable<T>) -> RouteReport {
    let eval = |row: &str, coeffs: [i64; 3], offset: usize| -> QuadValue<T> {
        let vals = &table.row(row).expect("standard row").values;
        coeffs
            .iter()
            .enumerate()
            .fold(QuadValue::zero(), |acc, (m, &c)| {
                acc + vals[offset + m].scale(&lift(c))
            })
    };
    let c79 = [p.S2, p.a2, p.b2];
    let c97 = [p.S1, p.a1, p.b1];
    let on = |row: &str| (eval(row, c79, 0), eval(row, c97, 3));
    let int = |v: i64| QuadValue::<T>::from_int(v);
    let zero = QuadValue::<T>::zero();
    let (chi79, chi97) = on("chi");
    let (phi79, phi97) = on("phi");
    let (psi1_79, psi1_97) = on("psi1");
    let (psi2_79, psi2_97) = on("psi2");
    let named = vec![
        NamedCheck::new(13, "chi(σ9σ7) = S1*S2".into(), chi97, int(p.S1 * p.S2)),
        NamedCheck::new(13, "chi(σ7σ9) = S1*S2".into(), chi79, int(p.S1 * p.S2)),
        NamedCheck::new(14, "phi(σ9σ7) = phi(σ7σ9)".into(), phi97, phi79),
        NamedCheck::new(15, "psi1(σ7σ9) = 0".into(), psi1_79, zero.clone()),
        NamedCheck::new(15, "psi1(σ9σ7) = 0".into(), psi1_97, zero.clone()),
        NamedCheck::new(15, "psi2(σ9σ7) = 0".into(), psi2_97, zero.clone()),
        NamedCheck::new(15, "psi2(σ7σ9) = 0".into(), psi2_79, zero),
    ];
    let checked = named.len();
    RouteReport::finish(
        checked,
        Vec::new(),
        named,
        Some(format!("labeling {}", table.labeling)),
    )
}
