use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use super::params::SrdParams;
use super::spectrum::{srg_spectrum, SrgParams};
use crate::error::{Error, Result};
use crate::exact::{ExactInt, QuadValue, Scalar};

/// Which eigenvalue of each fiber plays the shared row `φ`. The other one
/// goes to that fiber's `ψ` row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Labeling {
    /// `φ` uses `r1` and `r2`.
    Direct,
    /// `φ` uses `r1` and `s2`.
    Swapped,
    /// `φ` uses `s1` and `r2`.
    SwappedFiber1,
    /// `φ` uses `s1` and `s2`.
    SwappedBoth,
}

impl Labeling {
    pub const ALL: [Labeling; 4] = [
        Labeling::Direct,
        Labeling::Swapped,
        Labeling::SwappedFiber1,
        Labeling::SwappedBoth,
    ];

    /// Whether fiber 1 and fiber 2 have their eigenvalues exchanged.
    pub fn swaps(self) -> (bool, bool) {
        match self {
            Labeling::Direct => (false, false),
            Labeling::Swapped => (false, true),
            Labeling::SwappedFiber1 => (true, false),
            Labeling::SwappedBoth => (true, true),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Labeling::Direct => "direct",
            Labeling::Swapped => "swapped",
            Labeling::SwappedFiber1 => "swapped_fiber1",
            Labeling::SwappedBoth => "swapped_both",
        }
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One irreducible character: values on `σ1..σ6` and its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct CharacterRow<T: Scalar> {
    pub name: &'static str,
    pub values: [QuadValue<T>; 6],
    pub multiplicity: i64,
}

/// Rows `χ`, `φ`, `ψ1`, `ψ2` of a type-`[3 2; 3]` configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct CharacterTable<T: Scalar> {
    pub labeling: Labeling,
    pub rows: [CharacterRow<T>; 4],
    /// Per fiber, the eigenvalue used by `φ` and the one used by `ψ`.
    pub eigenvalues: [(QuadValue<T>, QuadValue<T>); 2],
}

impl<T: Scalar> CharacterTable<T> {
    pub fn row(&self, name: &str) -> Option<&CharacterRow<T>> {
        self.rows.iter().find(|r| r.name == name)
    }
}

/// Spectra of both fibers.
pub fn spectra<I: ExactInt>(p: &SrdParams) -> Result<(SrgParams<Ratio<I>>, SrgParams<Ratio<I>>)>
where
    Ratio<I>: Scalar,
{
    Ok((srg_spectrum(p.srg1)?, srg_spectrum(p.srg2)?))
}

/// One fiber's eigenvalues in labeled order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledSpectrum<T: Scalar> {
    /// Eigenvalue in the shared row and its multiplicity.
    pub phi: (QuadValue<T>, i64),
    /// Eigenvalue in the fiber's own row and its multiplicity.
    pub psi: (QuadValue<T>, i64),
}

fn label<T: Scalar>(sp: &SrgParams<T>, swapped: bool) -> LabeledSpectrum<T> {
    let (r, s) = ((sp.r.clone(), sp.f), (sp.s.clone(), sp.g));
    if swapped {
        LabeledSpectrum { phi: s, psi: r }
    } else {
        LabeledSpectrum { phi: r, psi: s }
    }
}

/// Both fibers' eigenvalues ordered by `labeling`.
pub fn labeled_spectra<T: Scalar>(
    sp1: &SrgParams<T>,
    sp2: &SrgParams<T>,
    labeling: Labeling,
) -> (LabeledSpectrum<T>, LabeledSpectrum<T>) {
    let (a, b) = labeling.swaps();
    (label(sp1, a), label(sp2, b))
}

/// Labelings under which the two `φ` multiplicities agree, in
/// [`Labeling::ALL`] order. Two irrational spectra must share their
/// quadratic field.
pub fn valid_labelings<T: Scalar>(sp1: &SrgParams<T>, sp2: &SrgParams<T>) -> Vec<Labeling> {
    if sp1.is_irrational() && sp2.is_irrational() && sp1.r.radicands() != sp2.r.radicands() {
        return Vec::new();
    }
    Labeling::ALL
        .into_iter()
        .filter(|&l| {
            let (a, b) = labeled_spectra(sp1, sp2, l);
            a.phi.1 == b.phi.1
        })
        .collect()
}

/// Character table under an explicit labeling.
pub fn character_table_with<T: Scalar>(
    sp1: &SrgParams<T>,
    sp2: &SrgParams<T>,
    labeling: Labeling,
) -> Result<CharacterTable<T>> {
    let (a, b) = labeled_spectra(sp1, sp2, labeling);
    if !valid_labelings(sp1, sp2).contains(&labeling) {
        return Err(Error::Infeasible(format!(
            "{labeling} labeling does not give f1 = f2 ({} vs {})",
            a.phi.1, b.phi.1
        )));
    }
    let q = |v: i64| QuadValue::<T>::from_int(v);
    let one = q(1);
    let zero = q(0);
    let (k1, l1, k2, l2) = (sp1.srg.k, sp1.ell(), sp2.srg.k, sp2.ell());
    let minus_one_minus = |x: &QuadValue<T>| -(one.clone() + x.clone());
    let rows = [
        CharacterRow {
            name: "chi",
            values: [one.clone(), q(k1), q(l1), one.clone(), q(k2), q(l2)],
            multiplicity: 1,
        },
        CharacterRow {
            name: "phi",
            values: [
                one.clone(),
                a.phi.0.clone(),
                minus_one_minus(&a.phi.0),
                one.clone(),
                b.phi.0.clone(),
                minus_one_minus(&b.phi.0),
            ],
            multiplicity: a.phi.1,
        },
        CharacterRow {
            name: "psi1",
            values: [
                one.clone(),
                a.psi.0.clone(),
                minus_one_minus(&a.psi.0),
                zero.clone(),
                zero.clone(),
                zero.clone(),
            ],
            multiplicity: a.psi.1,
        },
        CharacterRow {
            name: "psi2",
            values: [
                zero.clone(),
                zero.clone(),
                zero,
                one.clone(),
                b.psi.0.clone(),
                minus_one_minus(&b.psi.0),
            ],
            multiplicity: b.psi.1,
        },
    ];
    Ok(CharacterTable {
        labeling,
        rows,
        eigenvalues: [(a.phi.0, a.psi.0), (b.phi.0, b.psi.0)],
    })
}

/// Character table with the first labeling in [`Labeling::ALL`] order that
/// matches multiplicities.
pub fn character_table<I: ExactInt>(p: &SrdParams) -> Result<CharacterTable<Ratio<I>>>
where
    Ratio<I>: Scalar,
{
    let (sp1, sp2) = spectra::<I>(p)?;
    let labeling = *valid_labelings(&sp1, &sp2).first().ok_or_else(|| {
        Error::Infeasible(format!(
            "no labeling gives f1 = f2: fiber 1 multiplicities {{{}, {}}}, fiber 2 multiplicities {{{}, {}}}",
            sp1.f, sp1.g, sp2.f, sp2.g
        ))
    })?;
    character_table_with(&sp1, &sp2, labeling)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::srd::params::Srg;
    use num_bigint::BigInt;

    fn params(a: Srg, b: Srg) -> SrdParams {
        SrdParams {
            srg1: a,
            srg2: b,
            S1: 1,
            S2: 1,
            N1: 0,
            P1: 0,
            N2: 0,
            P2: 0,
            a1: 0,
            b1: 0,
            a2: 0,
            b2: 0,
        }
    }

    #[test]
    fn gq_rows() {
        let gq = Srg::new(15, 6, 1, 3);
        let t = character_table::<BigInt>(&params(gq, gq)).unwrap();
        assert_eq!(t.labeling, Labeling::Direct);
        let phi = t.row("phi").unwrap();
        let show: Vec<String> = phi.values.iter().map(ToString::to_string).collect();
        assert_eq!(show, ["1", "1", "-2", "1", "1", "-2"]);
        assert_eq!(phi.multiplicity, 9);
        let psi1 = t.row("psi1").unwrap();
        let show: Vec<String> = psi1.values.iter().map(ToString::to_string).collect();
        assert_eq!(show, ["1", "-3", "2", "0", "0", "0"]);
        assert_eq!(psi1.multiplicity, 5);
        // 1 + f1 + g1 = n1, 1 + f2 + g2 = n2
        let m: Vec<i64> = t.rows.iter().map(|r| r.multiplicity).collect();
        assert_eq!(1 + m[1] + m[2], 15);
        assert_eq!(1 + m[1] + m[3], 15);
    }

    #[test]
    fn forced_swap() {
        // f1 = 5; SRG(16,5,0,2) has r = 1 (f = 10), s = -3 (g = 5)
        let t = character_table::<BigInt>(&params(Srg::new(10, 3, 0, 1), Srg::new(16, 5, 0, 2)))
            .unwrap();
        assert_eq!(t.labeling, Labeling::Swapped);
        assert_eq!(t.eigenvalues[1].0, QuadValue::from_int(-3));
        assert_eq!(t.row("phi").unwrap().multiplicity, 5);
        assert_eq!(t.row("psi2").unwrap().multiplicity, 10);
    }

    #[test]
    fn unmatched_multiplicities_fail() {
        let err = character_table::<BigInt>(&params(Srg::new(10, 3, 0, 1), Srg::new(13, 6, 2, 3)))
            .unwrap_err();
        assert!(matches!(err, Error::Infeasible(_)));
    }

    #[test]
    fn distinct_irrational_fields_rejected() {
        // pentagon (√5) against the 13-vertex Paley graph (√13)
        let (a, b) =
            spectra::<BigInt>(&params(Srg::new(5, 2, 0, 1), Srg::new(13, 6, 2, 3))).unwrap();
        assert!(valid_labelings(&a, &b).is_empty());
        let (a, b) =
            spectra::<BigInt>(&params(Srg::new(5, 2, 0, 1), Srg::new(5, 2, 0, 1))).unwrap();
        assert_eq!(valid_labelings(&a, &b), Labeling::ALL);
    }
}
