use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::{ExactInt, Scalar};
use crate::error::{Error, Result};

/// A value `c0 + c1·√d1 + c2·√d2 + c3·√(d1·d2)`.
///
/// `d1`, `d2` are squarefree integers greater than one, or `0` for an unused
/// slot. Values are kept canonical (unused roots dropped, `d1 < d2`) so that
/// structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadValue<T> {
    c: [T; 4],
    d: [u64; 2],
}

impl<T: Scalar> QuadValue<T> {
    pub fn from_scalar(v: T) -> Self {
        Self {
            c: [v, T::zero(), T::zero(), T::zero()],
            d: [0, 0],
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_scalar(super::lift(v))
    }

    /// `coeff·√radicand` for a non-negative integer radicand. Square factors
    /// are pulled out into the coefficient.
    pub fn sqrt_term(coeff: T, radicand: u64) -> Self {
        let (m, d) = squarefree_decompose(radicand);
        let coeff = coeff * T::from_u64(m).expect("scalar cannot hold square factor");
        match d {
            0 => Self::zero(),
            1 => Self::from_scalar(coeff),
            _ => Self {
                c: [T::zero(), coeff, T::zero(), T::zero()],
                d: [d, 0],
            }
            .canonical(),
        }
    }

    /// Builds from raw coefficients over `{1, √d1, √d2, √(d1·d2)}`.
    ///
    /// Panics if a radicand is not squarefree or the two coincide while both
    /// in use; such input has no unique representation.
    pub fn from_parts(c: [T; 4], d1: u64, d2: u64) -> Self {
        for d in [d1, d2] {
            assert!(
                d == 0 || squarefree_decompose(d).0 == 1,
                "radicand {d} not squarefree"
            );
        }
        let [c0, mut c1, mut c2, mut c3] = c;
        let mut c0 = c0;
        let (mut d1, mut d2) = (d1, d2);
        if d1 <= 1 {
            if d1 == 1 {
                c0 = c0 + c1.clone();
                c2 = c2 + c3.clone();
            }
            c1 = T::zero();
            c3 = T::zero();
            d1 = 0;
        }
        if d2 <= 1 {
            if d2 == 1 {
                c0 = c0 + c2.clone();
                c1 = c1 + c3.clone();
            }
            c2 = T::zero();
            c3 = T::zero();
            d2 = 0;
        }
        if d1 != 0 && d1 == d2 {
            let d = T::from_u64(d1).unwrap();
            c0 = c0 + c3 * d;
            c1 = c1 + c2;
            c2 = T::zero();
            c3 = T::zero();
            d2 = 0;
        }
        Self {
            c: [c0, c1, c2, c3],
            d: [d1, d2],
        }
        .canonical()
    }

    fn canonical(mut self) -> Self {
        if self.c[1].is_zero() && self.c[3].is_zero() {
            self.d[0] = 0;
        }
        if self.c[2].is_zero() && self.c[3].is_zero() {
            self.d[1] = 0;
        }
        if self.d[0] == 0 && self.d[1] != 0 {
            self.c.swap(1, 2);
            self.d = [self.d[1], 0];
        } else if self.d[0] != 0 && self.d[1] != 0 && self.d[0] > self.d[1] {
            self.c.swap(1, 2);
            self.d.swap(0, 1);
        }
        self
    }

    pub fn coefficients(&self) -> &[T; 4] {
        &self.c
    }

    /// Radicands in use, `0` marking an empty slot.
    pub fn radicands(&self) -> [u64; 2] {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d == [0, 0]
    }

    pub fn as_rational(&self) -> Option<&T> {
        self.is_rational().then_some(&self.c[0])
    }

    pub fn rational_part(&self) -> &T {
        &self.c[0]
    }

    fn roots(&self) -> impl Iterator<Item = u64> + '_ {
        self.d.iter().copied().filter(|&d| d != 0)
    }

    /// Re-expresses `self` over the radicand pair `(e1, e2)`, which must
    /// contain every radicand of `self`.
    fn lift_to(&self, e: [u64; 2]) -> [T; 4] {
        let mut out = [T::zero(), T::zero(), T::zero(), T::zero()];
        out[0] = self.c[0].clone();
        let slot = |d: u64| -> usize {
            if d == e[0] {
                1
            } else {
                debug_assert_eq!(d, e[1]);
                2
            }
        };
        match self.d {
            [0, 0] => {}
            [d, 0] => out[slot(d)] = self.c[1].clone(),
            [a, b] => {
                let (sa, sb) = (slot(a), slot(b));
                out[sa] = self.c[1].clone();
                out[sb] = self.c[2].clone();
                out[3] = self.c[3].clone();
            }
        }
        out
    }

    fn common_field(&self, other: &Self) -> [u64; 2] {
        let mut ds: Vec<u64> = self.roots().chain(other.roots()).collect();
        ds.sort_unstable();
        ds.dedup();
        assert!(
            ds.len() <= 2,
            "quadratic values span more than two independent square roots: {ds:?}"
        );
        [
            ds.first().copied().unwrap_or(0),
            ds.get(1).copied().unwrap_or(0),
        ]
    }

    /// Conjugate flipping the sign of `√d2` (slot 2).
    fn conj_second(&self) -> Self {
        Self {
            c: [
                self.c[0].clone(),
                self.c[1].clone(),
                -self.c[2].clone(),
                -self.c[3].clone(),
            ],
            d: self.d,
        }
    }

    /// Conjugate flipping the sign of `√d1` (slot 1).
    fn conj_first(&self) -> Self {
        Self {
            c: [
                self.c[0].clone(),
                -self.c[1].clone(),
                self.c[2].clone(),
                -self.c[3].clone(),
            ],
            d: self.d,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let num1 = self.conj_second();
        let norm1 = self.clone() * num1.clone();
        let num2 = norm1.conj_first();
        let norm = norm1 * num2.clone();
        let q = norm.as_rational().expect("norm must be rational").clone();
        let scale = T::one() / q;
        Some((num1 * num2).scale(&scale))
    }

    pub fn scale(&self, k: &T) -> Self {
        Self {
            c: [
                self.c[0].clone() * k.clone(),
                self.c[1].clone() * k.clone(),
                self.c[2].clone() * k.clone(),
                self.c[3].clone() * k.clone(),
            ],
            d: self.d,
        }
        .canonical()
    }

    /// Exact sign: -1, 0 or 1.
    pub fn sign(&self) -> i8 {
        let d1 = T::from_u64(self.d[0]).unwrap();
        let d2 = T::from_u64(self.d[1]).unwrap();
        // x = c0 + c1 √d1 + (c2 + c3 √d1) √d2
        let x = (self.c[0].clone(), self.c[1].clone());
        let y = (self.c[2].clone(), self.c[3].clone());
        let sx = sign_one(&x.0, &x.1, &d1);
        let sy = sign_one(&y.0, &y.1, &d1);
        combine_signs(sx, sy, || {
            // x² − d2·y² inside Q(√d1)
            let a = x.0.clone() * x.0.clone() + d1.clone() * x.1.clone() * x.1.clone()
                - d2.clone() * (y.0.clone() * y.0.clone() + d1.clone() * y.1.clone() * y.1.clone());
            let two = T::one() + T::one();
            let b = two.clone() * x.0.clone() * x.1.clone()
                - d2.clone() * two * y.0.clone() * y.1.clone();
            sign_one(&a, &b, &d1) * sx
        })
    }
}

fn sign_scalar<T: Scalar>(v: &T) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

fn combine_signs(sa: i8, sb: i8, mixed: impl FnOnce() -> i8) -> i8 {
    match (sa, sb) {
        (0, s) | (s, 0) => s,
        (a, b) if a == b => a,
        _ => mixed(),
    }
}

/// Sign of `a + b·√d`.
fn sign_one<T: Scalar>(a: &T, b: &T, d: &T) -> i8 {
    let sa = sign_scalar(a);
    let sb = sign_scalar(b);
    combine_signs(sa, sb, || {
        let diff = a.clone() * a.clone() - b.clone() * b.clone() * d.clone();
        sign_scalar(&diff) * sa
    })
}

impl<T: Scalar> Zero for QuadValue<T> {
    fn zero() -> Self {
        Self::from_scalar(T::zero())
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl<T: Scalar> One for QuadValue<T> {
    fn one() -> Self {
        Self::from_scalar(T::one())
    }
}

impl<T: Scalar> Add for QuadValue<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let e = self.common_field(&rhs);
        let a = self.lift_to(e);
        let b = rhs.lift_to(e);
        let [a0, a1, a2, a3] = a;
        let [b0, b1, b2, b3] = b;
        Self {
            c: [a0 + b0, a1 + b1, a2 + b2, a3 + b3],
            d: e,
        }
        .canonical()
    }
}

impl<T: Scalar> Neg for QuadValue<T> {
    type Output = Self;
    fn neg(self) -> Self {
        let [a, b, c, d] = self.c;
        Self {
            c: [-a, -b, -c, -d],
            d: self.d,
        }
    }
}

impl<T: Scalar> Sub for QuadValue<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Mul for QuadValue<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let e = self.common_field(&rhs);
        let [a0, a1, a2, a3] = self.lift_to(e);
        let [b0, b1, b2, b3] = rhs.lift_to(e);
        let d1 = T::from_u64(e[0]).unwrap();
        let d2 = T::from_u64(e[1]).unwrap();
        let c0 = a0.clone() * b0.clone()
            + d1.clone() * a1.clone() * b1.clone()
            + d2.clone() * a2.clone() * b2.clone()
            + d1.clone() * d2.clone() * a3.clone() * b3.clone();
        let c1 = a0.clone() * b1.clone()
            + a1.clone() * b0.clone()
            + d2.clone() * (a2.clone() * b3.clone() + a3.clone() * b2.clone());
        let c2 = a0.clone() * b2.clone()
            + a2.clone() * b0.clone()
            + d1 * (a1.clone() * b3.clone() + a3.clone() * b1.clone());
        let c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
        Self {
            c: [c0, c1, c2, c3],
            d: e,
        }
        .canonical()
    }
}

impl<T: Scalar> Div for QuadValue<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero")
    }
}

impl<T: Scalar> PartialOrd for QuadValue<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(match (self.clone() - other.clone()).sign() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        })
    }
}

impl<T: Scalar> From<T> for QuadValue<T> {
    fn from(v: T) -> Self {
        Self::from_scalar(v)
    }
}

impl<T: Scalar> fmt::Display for QuadValue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: [(u64, &T); 3] = [
            (self.d[0], &self.c[1]),
            (self.d[1], &self.c[2]),
            (self.d[0].saturating_mul(self.d[1]), &self.c[3]),
        ];
        let mut wrote = false;
        if !self.c[0].is_zero() || terms.iter().all(|(_, c)| c.is_zero()) {
            write!(f, "{}", self.c[0])?;
            wrote = true;
        }
        for (d, c) in terms {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                write!(f, "-")?;
            } else if wrote {
                write!(f, "+")?;
            }
            let m = c.abs();
            if m.is_one() {
                write!(f, "√{d}")?;
            } else {
                write!(f, "{m}√{d}")?;
            }
            wrote = true;
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for QuadValue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quad({self})")
    }
}

impl<T: Scalar> Serialize for QuadValue<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Splits `n` as `m²·d` with `d` squarefree; returns `(m, d)`.
pub fn squarefree_decompose(n: u64) -> (u64, u64) {
    if n == 0 {
        return (0, 0);
    }
    let (mut m, mut d, mut rest) = (1u64, 1u64, n);
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        m *= p.pow(e / 2);
        if e % 2 == 1 {
            d *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (m, d * rest)
}

/// Roots `(r, s)` of `x² − p·x − q`, with `r ≥ s`.
pub fn quad_roots<I: ExactInt>(
    p: &Ratio<I>,
    q: &Ratio<I>,
) -> Result<(QuadValue<Ratio<I>>, QuadValue<Ratio<I>>)>
where
    Ratio<I>: Scalar,
{
    let four = Ratio::from_integer(I::from_u8(4).unwrap());
    let two = Ratio::from_integer(I::from_u8(2).unwrap());
    let disc = p.clone() * p.clone() + four * q.clone();
    if disc.is_negative() {
        return Err(Error::Domain(format!(
            "x^2 - ({p})x - ({q}) has negative discriminant {disc}"
        )));
    }
    // √(a/b) = √(a·b) / b
    let (a, b) = (disc.numer().clone(), disc.denom().clone());
    let ab = (a * b.clone())
        .to_u64()
        .ok_or_else(|| Error::Domain(format!("discriminant {disc} too large")))?;
    let root = QuadValue::sqrt_term(Ratio::new(I::one(), b), ab);
    let half_p = QuadValue::from_scalar(p.clone() / two.clone());
    let half_root = root.scale(&(Ratio::one() / two));
    Ok((half_p.clone() + half_root.clone(), half_p - half_root))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type Q = QuadValue<BigRational>;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn qv(c: [(i64, i64); 4], d1: u64, d2: u64) -> Q {
        Q::from_parts(c.map(|(n, d)| rat(n, d)), d1, d2)
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_decompose(1), (1, 1));
        assert_eq!(squarefree_decompose(12), (2, 3));
        assert_eq!(squarefree_decompose(72), (6, 2));
        assert_eq!(squarefree_decompose(49), (7, 1));
        assert_eq!(squarefree_decompose(30), (1, 30));
        assert_eq!(squarefree_decompose(0), (0, 0));
    }

    #[test]
    fn roots_of_petersen_polynomial() {
        let (r, s) = quad_roots(&rat(-1, 1), &rat(2, 1)).unwrap();
        assert_eq!(r, Q::from_int(1));
        assert_eq!(s, Q::from_int(-2));
    }

    #[test]
    fn symmetric_roots() {
        let (r, s) = quad_roots(&rat(0, 1), &rat(1, 1)).unwrap();
        assert_eq!((r, s), (Q::from_int(1), Q::from_int(-1)));
    }

    #[test]
    fn pentagon_roots_are_golden() {
        let (r, s) = quad_roots(&rat(-1, 1), &rat(1, 1)).unwrap();
        assert_eq!(r, qv([(-1, 2), (1, 2), (0, 1), (0, 1)], 5, 0));
        assert_eq!(s, qv([(-1, 2), (-1, 2), (0, 1), (0, 1)], 5, 0));
        assert_eq!(r.to_string(), "-1/2+1/2√5");
        assert!(r > s);
        // r² − p r − q = r² + r − 1 = 0
        let one = Q::from_int(1);
        assert!((r.clone() * r.clone() + r - one).is_zero());
    }

    #[test]
    fn negative_discriminant_is_domain_error() {
        assert!(matches!(
            quad_roots(&rat(0, 1), &rat(-1, 1)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn rational_discriminant_denominator() {
        // x² − x/2 − 1/2 = (x − 1)(x + 1/2)
        let (r, s) = quad_roots(&rat(1, 2), &rat(1, 2)).unwrap();
        assert_eq!(r, Q::from_int(1));
        assert_eq!(s, Q::from_scalar(rat(-1, 2)));
    }

    #[test]
    fn two_root_arithmetic() {
        let s2 = Q::sqrt_term(rat(1, 1), 2);
        let s3 = Q::sqrt_term(rat(1, 1), 3);
        let s6 = s2.clone() * s3.clone();
        assert_eq!(s6.radicands(), [2, 3]);
        assert_eq!((s6.clone() * s6.clone()), Q::from_int(6));
        assert_eq!(s2.clone() * s2.clone(), Q::from_int(2));
        let x = s2.clone() + s3.clone();
        let inv = x.inv().unwrap();
        assert_eq!(x.clone() * inv, Q::from_int(1));
        assert_eq!(x.to_string(), "√2+√3");
        assert!((s3.clone() - s2.clone()).sign() > 0);
        // √2 + √3 − √6 − 7/10 ≈ −0.003
        let tail = s6 + Q::from_scalar(rat(7, 10));
        assert_eq!((s2.clone() + s3.clone() - tail.clone()).sign(), -1);
        let tail = tail - Q::from_scalar(rat(1, 100));
        assert_eq!((s2 + s3 - tail).sign(), 1);
    }

    #[test]
    #[should_panic(expected = "more than two")]
    fn three_roots_panic() {
        let _ =
            Q::sqrt_term(rat(1, 1), 2) + Q::sqrt_term(rat(1, 1), 3) + Q::sqrt_term(rat(1, 1), 5);
    }

    #[test]
    fn folding_drops_unused_roots() {
        let s5 = Q::sqrt_term(rat(1, 1), 5);
        let x = s5.clone() - s5;
        assert!(x.is_rational());
        assert_eq!(x, Q::from_int(0));
        assert_eq!(Q::sqrt_term(rat(3, 1), 18), Q::sqrt_term(rat(9, 1), 2));
        assert_eq!(Q::sqrt_term(rat(1, 1), 16), Q::from_int(4));
    }

    #[test]
    fn generic_over_machine_rationals() {
        use num_rational::Ratio;
        let (r, s) = quad_roots(&Ratio::<i64>::from_integer(-1), &Ratio::from_integer(1)).unwrap();
        assert_eq!(
            (r.clone() + s.clone()).as_rational(),
            Some(&Ratio::from_integer(-1))
        );
        assert_eq!((r * s).as_rational(), Some(&Ratio::from_integer(-1)));
    }

    fn arb_quad() -> impl Strategy<Value = Q> {
        (
            proptest::array::uniform4(-20i64..20),
            prop_oneof![Just(0u64), Just(2), Just(5)],
            prop_oneof![Just(0u64), Just(3), Just(5)],
        )
            .prop_map(|(c, d1, d2)| {
                let d2 = if d2 == d1 { 0 } else { d2 };
                Q::from_parts(
                    c.map(|v| BigRational::from_integer(BigInt::from(v))),
                    d1,
                    d2,
                )
            })
    }

    fn arb_in_field(d: u64) -> impl Strategy<Value = Q> {
        proptest::array::uniform4(-30i64..30)
            .prop_map(move |c| Q::from_parts(c.map(|v| rat(v, 1 + v.rem_euclid(3))), 2, d))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_in_field(5), b in arb_in_field(5), c in arb_in_field(5)) {
            prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
            prop_assert_eq!(a.clone() * b.clone(), b * a);
        }

        #[test]
        fn inverse_and_sign(a in arb_quad()) {
            if !a.is_zero() {
                prop_assert_eq!(a.clone() * a.inv().unwrap(), Q::from_int(1));
                // a² > 0
                prop_assert_eq!((a.clone() * a.clone()).sign(), 1);
                prop_assert_eq!((-a.clone()).sign(), -a.sign());
            }
        }

        #[test]
        fn roots_satisfy_polynomial(p in -12i64..12, q in 0i64..40) {
            let (p, q) = (rat(p, 1), rat(q, 1));
            let (r, s) = quad_roots(&p, &q).unwrap();
            let pq = Q::from_scalar(p.clone());
            let qq = Q::from_scalar(q.clone());
            for x in [&r, &s] {
                prop_assert!((x.clone() * x.clone() - pq.clone() * x.clone() - qq.clone()).is_zero());
            }
            prop_assert!(r >= s);
            prop_assert_eq!(r.clone() + s.clone(), pq);
            prop_assert_eq!(r * s, -qq);
        }
    }
}
