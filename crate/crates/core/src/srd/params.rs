use std::fmt;

use serde::{Deserialize, Serialize};

use super::symbolic::Param;
use crate::error::{Error, Result};

/// Parameters `(n, k, λ, μ)` of one strongly regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Srg {
    pub n: i64,
    pub k: i64,
    pub lambda: i64,
    pub mu: i64,
}

impl Srg {
    pub const fn new(n: i64, k: i64, lambda: i64, mu: i64) -> Self {
        Self { n, k, lambda, mu }
    }

    /// Valency of the complement, `n − k − 1`.
    pub const fn ell(&self) -> i64 {
        self.n - self.k - 1
    }

    /// Range constraints and `k(k−λ−1) = (n−k−1)μ`.
    pub fn validate(&self) -> Result<()> {
        let Srg { n, k, lambda, mu } = *self;
        if !(0 < k && k < n - 1) {
            return Err(Error::Infeasible(format!("{self}: need 0 < k < n-1")));
        }
        if !(0 < mu && mu <= k) {
            return Err(Error::Infeasible(format!("{self}: need 0 < mu <= k")));
        }
        if !(0 <= lambda && lambda < k) {
            return Err(Error::Infeasible(format!("{self}: need 0 <= lambda < k")));
        }
        if k * (k - lambda - 1) != (n - k - 1) * mu {
            return Err(Error::Infeasible(format!(
                "{self}: k(k-lambda-1) = {} but (n-k-1)mu = {}",
                k * (k - lambda - 1),
                (n - k - 1) * mu
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Srg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SRG({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

/// A full strongly regular design parameter tuple.
///
/// `S1`, `S2` are the valencies of the cross relations (`v9`, `v7`); `N`, `P`
/// count fiber neighbours of a flag / anti-flag; `a`, `b` count common
/// cross neighbours of adjacent / non-adjacent vertices of a fiber.
#[allow(non_snake_case)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SrdParams {
    pub srg1: Srg,
    pub srg2: Srg,
    pub S1: i64,
    pub S2: i64,
    pub N1: i64,
    pub P1: i64,
    pub N2: i64,
    pub P2: i64,
    pub a1: i64,
    pub b1: i64,
    pub a2: i64,
    pub b2: i64,
}

impl SrdParams {
    pub fn value(&self, p: Param) -> i64 {
        match p {
            Param::N1v => self.srg1.n,
            Param::K1 => self.srg1.k,
            Param::Lambda1 => self.srg1.lambda,
            Param::Mu1 => self.srg1.mu,
            Param::N2v => self.srg2.n,
            Param::K2 => self.srg2.k,
            Param::Lambda2 => self.srg2.lambda,
            Param::Mu2 => self.srg2.mu,
            Param::S1 => self.S1,
            Param::S2 => self.S2,
            Param::N1 => self.N1,
            Param::P1 => self.P1,
            Param::N2 => self.N2,
            Param::P2 => self.P2,
            Param::A1 => self.a1,
            Param::B1 => self.b1,
            Param::A2 => self.a2,
            Param::B2 => self.b2,
        }
    }

    pub fn with(&self, p: Param, v: i64) -> Self {
        let mut out = *self;
        let slot = match p {
            Param::N1v => &mut out.srg1.n,
            Param::K1 => &mut out.srg1.k,
            Param::Lambda1 => &mut out.srg1.lambda,
            Param::Mu1 => &mut out.srg1.mu,
            Param::N2v => &mut out.srg2.n,
            Param::K2 => &mut out.srg2.k,
            Param::Lambda2 => &mut out.srg2.lambda,
            Param::Mu2 => &mut out.srg2.mu,
            Param::S1 => &mut out.S1,
            Param::S2 => &mut out.S2,
            Param::N1 => &mut out.N1,
            Param::P1 => &mut out.P1,
            Param::N2 => &mut out.N2,
            Param::P2 => &mut out.P2,
            Param::A1 => &mut out.a1,
            Param::B1 => &mut out.b1,
            Param::A2 => &mut out.a2,
            Param::B2 => &mut out.b2,
        };
        *slot = v;
        out
    }

    /// Values in the canonical key order, which is also the sort order.
    pub fn as_array(&self) -> [i64; 18] {
        Param::ALL.map(|p| self.value(p))
    }

    /// Exchanges the roles of the two fibers.
    pub fn swapped(&self) -> Self {
        Self {
            srg1: self.srg2,
            srg2: self.srg1,
            S1: self.S2,
            S2: self.S1,
            N1: self.N2,
            P1: self.P2,
            N2: self.N1,
            P2: self.P1,
            a1: self.a2,
            b1: self.b2,
            a2: self.a1,
            b2: self.b1,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Object(
            Param::ALL
                .iter()
                .map(|p| (p.name().to_string(), self.value(*p).into()))
                .collect(),
        )
    }

    /// Parses a parameter object. `S2`, `P1`, `P2`, `a1`, `b1`, `a2`, `b2` may
    /// be omitted; they are then completed from the counting identities and
    /// every supplied derivable value must agree with its completion.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: ParamsFile =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("parameter JSON: {e}")))?;
        raw.resolve()
    }
}

impl fmt::Display for SrdParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Param::ALL
            .iter()
            .map(|p| format!("{}={}", p.name(), self.value(*p)))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for SrdParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

#[allow(non_snake_case)]
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamsFile {
    n1: i64,
    k1: i64,
    lambda1: i64,
    mu1: i64,
    n2: i64,
    k2: i64,
    lambda2: i64,
    mu2: i64,
    S1: i64,
    S2: Option<i64>,
    N1: i64,
    P1: Option<i64>,
    N2: i64,
    P2: Option<i64>,
    a1: Option<i64>,
    b1: Option<i64>,
    a2: Option<i64>,
    b2: Option<i64>,
}

impl ParamsFile {
    fn resolve(self) -> Result<SrdParams> {
        let srg1 = Srg::new(self.n1, self.k1, self.lambda1, self.mu1);
        let srg2 = Srg::new(self.n2, self.k2, self.lambda2, self.mu2);
        let supplied = [
            (Param::S2, self.S2),
            (Param::P1, self.P1),
            (Param::P2, self.P2),
            (Param::A1, self.a1),
            (Param::B1, self.b1),
            (Param::A2, self.a2),
            (Param::B2, self.b2),
        ];
        if supplied.iter().all(|(_, v)| v.is_some()) {
            let v = |p: Param| supplied.iter().find(|(q, _)| *q == p).unwrap().1.unwrap();
            return Ok(SrdParams {
                srg1,
                srg2,
                S1: self.S1,
                S2: v(Param::S2),
                N1: self.N1,
                P1: v(Param::P1),
                N2: self.N2,
                P2: v(Param::P2),
                a1: v(Param::A1),
                b1: v(Param::B1),
                a2: v(Param::A2),
                b2: v(Param::B2),
            });
        }
        let done = crate::feasibility::complete_params(&crate::feasibility::PartialParams {
            srg1,
            srg2,
            S1: self.S1,
            N1: self.N1,
            N2: self.N2,
        })?;
        for (p, v) in supplied {
            if let Some(v) = v {
                if v != done.value(p) {
                    return Err(Error::Input(format!(
                        "supplied {p} = {v} conflicts with completed value {}",
                        done.value(p)
                    )));
                }
            }
        }
        Ok(done)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const GQ: &str = r#"{"n1":15,"k1":6,"lambda1":1,"mu1":3,"n2":15,"k2":6,"lambda2":1,"mu2":3,
        "S1":3,"S2":3,"N1":2,"P1":1,"N2":2,"P2":1,"a1":1,"b1":0,"a2":1,"b2":0}"#;

    #[test]
    fn full_json_round_trip() {
        let p = SrdParams::from_json(GQ).unwrap();
        assert_eq!(p.srg1, Srg::new(15, 6, 1, 3));
        assert_eq!((p.S1, p.N1, p.P1, p.a2, p.b2), (3, 2, 1, 1, 0));
        let again = SrdParams::from_json(&p.to_json().to_string()).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn omitted_fields_are_completed() {
        let short = r#"{"n1":15,"k1":6,"lambda1":1,"mu1":3,"n2":15,"k2":6,"lambda2":1,"mu2":3,
            "S1":3,"N1":2,"N2":2}"#;
        assert_eq!(
            SrdParams::from_json(short).unwrap(),
            SrdParams::from_json(GQ).unwrap()
        );
    }

    #[test]
    fn conflicting_supplied_value_rejected() {
        let bad = r#"{"n1":15,"k1":6,"lambda1":1,"mu1":3,"n2":15,"k2":6,"lambda2":1,"mu2":3,
            "S1":3,"N1":2,"N2":2,"a2":5}"#;
        let err = SrdParams::from_json(bad).unwrap_err();
        assert!(
            matches!(err, Error::Input(ref m) if m.contains("a2")),
            "{err}"
        );
    }

    #[test]
    fn malformed_json_rejected() {
        assert!(matches!(SrdParams::from_json("{"), Err(Error::Input(_))));
        assert!(matches!(
            SrdParams::from_json(r#"{"n1":1}"#),
            Err(Error::Input(_))
        ));
        let extra = GQ.replace("\"b2\":0", "\"b2\":0,\"zz\":1");
        assert!(matches!(SrdParams::from_json(&extra), Err(Error::Input(_))));
    }

    #[test]
    fn srg_validation() {
        assert!(Srg::new(10, 3, 0, 1).validate().is_ok());
        assert!(Srg::new(10, 3, 0, 2).validate().is_err());
        assert!(Srg::new(5, 4, 3, 0).validate().is_err());
        assert_eq!(Srg::new(15, 6, 1, 3).ell(), 8);
    }

    #[test]
    fn swap_is_involution() {
        let p = SrdParams::from_json(GQ).unwrap().with(Param::A1, 7);
        assert_eq!(p.swapped().swapped(), p);
        assert_eq!(p.swapped().a2, 7);
    }
}
