use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::params::Srg;
use crate::error::{Error, Result};
use crate::exact::{lift, quad_roots, ExactInt, QuadValue, Scalar};

/// One strongly regular graph with its restricted eigenvalues `r > s` and
/// their multiplicities `f`, `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct SrgParams<T: Scalar> {
    pub srg: Srg,
    pub r: QuadValue<T>,
    pub s: QuadValue<T>,
    pub f: i64,
    pub g: i64,
}

impl<T: Scalar> SrgParams<T> {
    pub fn ell(&self) -> i64 {
        self.srg.ell()
    }

    /// True for irrational eigenvalues (conference graphs).
    pub fn is_irrational(&self) -> bool {
        !self.r.is_rational()
    }
}

/// Eigenvalues and multiplicities from `(n, k, λ, μ)`.
///
/// `r, s` are the roots of `x² − (λ−μ)x − (k−μ)`; `f, g` solve
/// `f + g = n − 1` and `k + f·r + g·s = 0`, and must be positive integers.
pub fn srg_spectrum<I: ExactInt>(srg: Srg) -> Result<SrgParams<Ratio<I>>>
where
    Ratio<I>: Scalar,
{
    srg.validate()?;
    let Srg { n, k, lambda, mu } = srg;
    let int = |v: i64| Ratio::from_integer(lift::<I>(v));
    let (r, s) = quad_roots(&int(lambda - mu), &int(k - mu))?;
    let q = |v: i64| QuadValue::from_scalar(int(v));
    // f = −(k + (n−1)s) / (r − s)
    let f = -(q(k) + q(n - 1) * s.clone()) / (r.clone() - s.clone());
    let f = f.as_rational().cloned().ok_or_else(|| {
        Error::Infeasible(format!("{srg}: multiplicity of r is irrational ({f})"))
    })?;
    if !f.is_integer() {
        return Err(Error::Infeasible(format!(
            "{srg}: multiplicity f = {f} is not an integer"
        )));
    }
    let g = int(n - 1) - f.clone();
    if !f.is_positive() || !g.is_positive() {
        return Err(Error::Infeasible(format!(
            "{srg}: multiplicities f = {f}, g = {g} not positive"
        )));
    }
    let to_i64 = |v: &Ratio<I>| v.to_integer().to_i64().expect("multiplicity fits i64");
    let out = SrgParams {
        srg,
        f: to_i64(&f),
        g: to_i64(&g),
        r,
        s,
    };
    debug_assert!(
        (q(k) + q(out.f) * out.r.clone() + q(out.g) * out.s.clone()).is_zero(),
        "trace condition"
    );
    Ok(out)
}

/// `k + f·r + g·s`, zero for a consistent spectrum.
pub fn trace_residual<T: Scalar>(p: &SrgParams<T>) -> QuadValue<T> {
    let q = |v: i64| QuadValue::from_scalar(lift::<T>(v));
    q(p.srg.k) + q(p.f) * p.r.clone() + q(p.g) * p.s.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type Q = QuadValue<BigRational>;

    fn spec(n: i64, k: i64, l: i64, m: i64) -> SrgParams<BigRational> {
        srg_spectrum::<BigInt>(Srg::new(n, k, l, m)).unwrap()
    }

    #[test]
    fn petersen_spectrum() {
        let p = spec(10, 3, 0, 1);
        assert_eq!(
            (p.r.clone(), p.s.clone(), p.f, p.g),
            (Q::from_int(1), Q::from_int(-2), 5, 4)
        );
    }

    #[test]
    fn gq22_collinearity_spectrum() {
        let p = spec(15, 6, 1, 3);
        assert_eq!(
            (p.r.clone(), p.s.clone(), p.f, p.g),
            (Q::from_int(1), Q::from_int(-3), 9, 5)
        );
    }

    #[test]
    fn pentagon_is_conference() {
        let p = spec(5, 2, 0, 1);
        assert!(p.is_irrational());
        assert_eq!(p.r.to_string(), "-1/2+1/2√5");
        assert_eq!(p.s.to_string(), "-1/2-1/2√5");
        assert_eq!((p.f, p.g), (2, 2));
        assert!(trace_residual(&p).is_zero());
    }

    #[test]
    fn infeasible_multiplicities() {
        // passes the counting identity, fails integrality: f = 35/4
        let srg = Srg::new(15, 7, 2, 4);
        assert!(srg.validate().is_ok());
        assert!(matches!(
            srg_spectrum::<BigInt>(srg),
            Err(Error::Infeasible(_))
        ));
        // irrational eigenvalues without f = g
        assert!(matches!(
            srg_spectrum::<BigInt>(Srg::new(7, 3, 0, 2)),
            Err(Error::Infeasible(_))
        ));
        assert!(srg_spectrum::<BigInt>(Srg::new(13, 6, 2, 3)).is_ok());
        assert!(matches!(
            srg_spectrum::<BigInt>(Srg::new(10, 3, 0, 2)),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn machine_ints_agree_with_bigints() {
        let a = srg_spectrum::<i64>(Srg::new(16, 5, 0, 2)).unwrap();
        let b = spec(16, 5, 0, 2);
        assert_eq!((a.f, a.g), (b.f, b.g));
        assert_eq!(a.r.to_string(), b.r.to_string());
    }
}
