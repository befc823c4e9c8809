use crate::error::{Error, Result};
use crate::srd::{SrdParams, Srg};

/// The independent part of a parameter tuple.
#[allow(non_snake_case)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartialParams {
    pub srg1: Srg,
    pub srg2: Srg,
    pub S1: i64,
    pub N1: i64,
    pub N2: i64,
}

fn exact_div(num: i128, den: i128, what: &str) -> Result<i64> {
    if den == 0 {
        return Err(Error::Infeasible(format!("{what}: zero denominator")));
    }
    if num % den != 0 {
        return Err(Error::Infeasible(format!(
            "{what}: {num}/{den} is not an integer"
        )));
    }
    i64::try_from(num / den).map_err(|_| Error::Infeasible(format!("{what}: value out of range")))
}

/// Solves for the dependent fields `S2, P1, P2, a1, b1, a2, b2`.
#[allow(non_snake_case)]
pub fn complete_params(p: &PartialParams) -> Result<SrdParams> {
    p.srg1.validate()?;
    p.srg2.validate()?;
    let w = |v: i64| i128::from(v);
    let (n1, k1, l1) = (w(p.srg1.n), w(p.srg1.k), w(p.srg1.ell()));
    let (n2, k2, l2) = (w(p.srg2.n), w(p.srg2.k), w(p.srg2.ell()));
    let (S1, N1, N2) = (w(p.S1), w(p.N1), w(p.N2));
    if !(0 < S1 && S1 < n1) {
        return Err(Error::Infeasible(format!("S1 = {S1} must lie in 1..n1-1")));
    }
    let S2 = w(exact_div(n2 * S1, n1, "S2 = n2*S1/n1")?);
    Ok(SrdParams {
        srg1: p.srg1,
        srg2: p.srg2,
        S1: p.S1,
        S2: S2 as i64,
        N1: p.N1,
        P1: exact_div((k1 - N1) * S1, n1 - S1, "P1 = (k1-N1)*S1/(n1-S1)")?,
        N2: p.N2,
        P2: exact_div((k2 - N2) * S2, n2 - S2, "P2 = (k2-N2)*S2/(n2-S2)")?,
        a1: exact_div(N2 * S1, k2, "a1 = N2*S1/k2")?,
        b1: exact_div((S2 - N2 - 1) * S1, l2, "b1 = (S2-N2-1)*S1/l2")?,
        a2: exact_div(N1 * S2, k1, "a2 = N1*S2/k1")?,
        b2: exact_div((S1 - N1 - 1) * S2, l1, "b2 = (S1-N1-1)*S2/l1")?,
    })
}
