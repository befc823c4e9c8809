use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::exact::{lift, QuadValue, Scalar};
use crate::srd::{labeled_spectra, Labeling, SrdParams, SrgParams};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    #[default]
    Corrected,
    AsPrinted,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Corrected => "corrected",
            Variant::AsPrinted => "as_printed",
        })
    }
}

/// Equation number `1..=15`; only 15 has an `AsPrinted` variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EquationId {
    #[serde(rename = "id")]
    pub index: u8,
    pub variant: Variant,
}

impl EquationId {
    pub fn new(index: u8, variant: Variant) -> Self {
        assert!((1..=15).contains(&index), "equation index {index}");
        let variant = if index == 15 {
            variant
        } else {
            Variant::Corrected
        };
        Self { index, variant }
    }
}

impl fmt::Display for EquationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.variant {
            Variant::Corrected => write!(f, "({})", self.index),
            Variant::AsPrinted => write!(f, "({}, as printed)", self.index),
        }
    }
}

/// One evaluated equation. Chained equalities `A = B = C` have two
/// right-hand sides and residuals `A − C`, `B − C`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct EquationResult<T: Scalar> {
    #[serde(flatten)]
    pub id: EquationId,
    pub lhs: Option<QuadValue<T>>,
    pub rhs: Vec<QuadValue<T>>,
    pub residual: Vec<QuadValue<T>>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl<T: Scalar> EquationResult<T> {
    fn equal(id: EquationId, lhs: QuadValue<T>, rhs: QuadValue<T>) -> Self {
        let residual = lhs.clone() - rhs.clone();
        Self {
            id,
            pass: residual.is_zero(),
            lhs: Some(lhs),
            rhs: vec![rhs],
            residual: vec![residual],
            reason: None,
        }
    }

    fn chained(id: EquationId, a: QuadValue<T>, b: QuadValue<T>, c: QuadValue<T>) -> Self {
        let residual = vec![a.clone() - c.clone(), b.clone() - c.clone()];
        Self {
            id,
            pass: residual.iter().all(Zero::is_zero),
            lhs: Some(a),
            rhs: vec![b, c],
            residual,
            reason: None,
        }
    }

    fn unavailable(id: EquationId, reason: String) -> Self {
        Self {
            id,
            lhs: None,
            rhs: Vec::new(),
            residual: Vec::new(),
            pass: false,
            reason: Some(reason),
        }
    }
}

/// Evaluates all fifteen equations directly from the parameter fields.
///
/// `spectra` carries both fiber spectra, or the reason they could not be
/// computed; equations (1), (14) and (15) need them. `labeling` chooses
/// which fiber-2 eigenvalue plays `r2`.
#[allow(non_snake_case)]
pub fn check_equations<T: Scalar>(
    p: &SrdParams,
    spectra: Result<&(SrgParams<T>, SrgParams<T>), &str>,
    labeling: Labeling,
    variant15: Variant,
) -> Vec<EquationResult<T>> {
    let q = |v: i64| QuadValue::<T>::from_int(v);
    let id = |i: u8| EquationId::new(i, variant15);
    let (n1, k1, l1, lambda1, mu1) = (p.srg1.n, p.srg1.k, p.srg1.ell(), p.srg1.lambda, p.srg1.mu);
    let (n2, k2, l2) = (p.srg2.n, p.srg2.k, p.srg2.ell());
    let SrdParams {
        S1,
        S2,
        N1,
        P1,
        N2,
        P2,
        a1,
        b1,
        a2,
        b2,
        ..
    } = *p;

    let mut out = Vec::with_capacity(15);
    let spectral = spectra.map(|(sp1, sp2)| labeled_spectra(sp1, sp2, labeling));
    out.push(match &spectral {
        Ok((f1, f2)) => EquationResult::equal(id(1), q(f1.phi.1), q(f2.phi.1)),
        Err(why) => EquationResult::unavailable(id(1), why.to_string()),
    });
    let plain: [(i64, i64); 11] = [
        (n1 * S2, n2 * S1),
        (P1 * (n1 - S1), (k1 - N1) * S1),
        (a2 * k1, N1 * S2),
        (b2 * l1, (S1 - N1 - 1) * S2),
        (
            N1 * N1 + P1 * (k1 - N1),
            k1 + lambda1 * N1 + mu1 * (S1 - N1 - 1),
        ),
        (N1 * P1 + P1 * (k1 - P1), lambda1 * P1 + mu1 * (S1 - P1)),
        (
            N1 * a2 + P1 * (S2 - a2),
            S2 + a2 * lambda1 + b2 * (k1 - lambda1 - 1),
        ),
        (N1 * b2 + P1 * (S2 - b2), a2 * mu1 + b2 * (k1 - mu1)),
        (
            S1 + a1 * N2 + b1 * (S2 - N2 - 1),
            S2 + a2 * N1 + b2 * (S1 - N1 - 1),
        ),
        (a1 * P2 + b1 * (S2 - P2), a2 * P1 + b2 * (S1 - P1)),
        (P1 * (k2 - N2), P2 * (k1 - N1)),
    ];
    for (i, (l, r)) in plain.into_iter().enumerate() {
        out.push(EquationResult::equal(id(i as u8 + 2), q(l), q(r)));
    }
    out.push(EquationResult::chained(
        id(13),
        q(S1 + a1 * k2 + b1 * l2),
        q(S2 + a2 * k1 + b2 * l1),
        q(S1 * S2),
    ));
    match &spectral {
        Ok((f1, f2)) => {
            let (r1, s1, r2, s2) = (&f1.phi.0, &f1.psi.0, &f2.phi.0, &f2.psi.0);
            // x ↦ S + a·x − b·(x + 1)
            let side = |s: i64, a: i64, b: i64, x: &QuadValue<T>| {
                q(s) + x.scale(&lift(a)) - (x.clone() + q(1)).scale(&lift(b))
            };
            out.push(EquationResult::equal(
                id(14),
                side(S1, a1, b1, r2),
                side(S2, a2, b2, r1),
            ));
            let e15 = match variant15 {
                Variant::Corrected => EquationResult::chained(
                    id(15),
                    side(S1, a1, b1, s2),
                    side(S2, a2, b2, s1),
                    q(0),
                ),
                Variant::AsPrinted => {
                    let a = q(S1 + a1 * S2) - (s2.clone() + q(1)).scale(&lift(b1));
                    let b = q(S2 + a2 * S1) - (s1.clone() + q(1)).scale(&lift(b2));
                    EquationResult::chained(id(15), a, b, q(0))
                }
            };
            out.push(e15);
        }
        Err(why) => {
            out.push(EquationResult::unavailable(id(14), why.to_string()));
            out.push(EquationResult::unavailable(id(15), why.to_string()));
        }
    }
    out
}
