use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use super::equations::{check_equations, EquationResult, Variant};
use super::routes::{route_a, route_b, route_c, RouteReport};
use crate::exact::{ExactInt, Scalar};
use crate::srd::{
    character_table_with, derived_tensor_unchecked, first_negative_entry, spectra, valid_labelings,
    Labeling, SrdParams,
};

/// Which parts of the check to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RouteSelection {
    #[default]
    All,
    Equations,
    Intersection,
    RegRep,
    Characters,
}

impl RouteSelection {
    fn equations(self) -> bool {
        matches!(self, Self::All | Self::Equations)
    }
    fn a(self) -> bool {
        matches!(self, Self::All | Self::Intersection)
    }
    fn b(self) -> bool {
        matches!(self, Self::All | Self::RegRep)
    }
    fn c(self) -> bool {
        matches!(self, Self::All | Self::Characters)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckOptions {
    pub variant15: Variant,
    pub routes: RouteSelection,
    /// Forces the eigenvalue labeling; `None` tries every valid labeling
    /// and keeps the first that passes.
    pub labeling: Option<Labeling>,
}

/// Sign check of the derived intersection numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorCheck {
    pub nonnegative: bool,
    pub first_negative: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Routes {
    #[serde(rename = "A", skip_serializing_if = "Option::is_none")]
    pub a: Option<RouteReport>,
    #[serde(rename = "B", skip_serializing_if = "Option::is_none")]
    pub b: Option<RouteReport>,
    #[serde(rename = "C", skip_serializing_if = "Option::is_none")]
    pub c: Option<RouteReport>,
}

impl Routes {
    fn iter(&self) -> impl Iterator<Item = (&'static str, &RouteReport)> {
        [("A", &self.a), ("B", &self.b), ("C", &self.c)]
            .into_iter()
            .filter_map(|(n, r)| r.as_ref().map(|r| (n, r)))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct FeasibilityReport<T: Scalar> {
    #[serde(serialize_with = "verdict_str")]
    pub verdict: bool,
    pub params: SrdParams,
    pub labeling: Option<Labeling>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum_error: Option<String>,
    pub tensor: TensorCheck,
    pub equations: Vec<EquationResult<T>>,
    pub routes: Routes,
}

fn verdict_str<S: Serializer>(v: &bool, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(if *v { "pass" } else { "fail" })
}

impl<T: Scalar> FeasibilityReport<T> {
    pub fn passed(&self) -> bool {
        self.verdict
    }

    pub fn equation(&self, index: u8) -> Option<&EquationResult<T>> {
        self.equations.iter().find(|e| e.id.index == index)
    }
}

/// Runs the selected checks on one tuple. Routes A and B use the derived
/// tensor even when it has negative entries, so a broken tuple still yields
/// witnesses; the sign check is reported separately and counts towards the
/// verdict.
pub fn check_params<I: ExactInt>(p: &SrdParams, opts: &CheckOptions) -> FeasibilityReport<Ratio<I>>
where
    Ratio<I>: Scalar,
{
    let sp = spectra::<I>(p);
    let (labeling, equations) = match &sp {
        Ok(pair) => {
            let candidates = match opts.labeling {
                Some(l) => vec![l],
                None => {
                    let valid = valid_labelings(&pair.0, &pair.1);
                    if valid.is_empty() {
                        vec![Labeling::Direct]
                    } else {
                        valid
                    }
                }
            };
            let runs: Vec<_> = candidates
                .iter()
                .map(|&l| (l, check_equations(p, Ok(pair), l, opts.variant15)))
                .collect();
            let pick = runs
                .iter()
                .position(|(_, eqs)| eqs.iter().all(|e| e.pass))
                .unwrap_or(0);
            let (l, eqs) = runs.into_iter().nth(pick).expect("at least one candidate");
            (Some(l), eqs)
        }
        Err(e) => {
            let why = e.to_string();
            (
                None,
                check_equations(p, Err(why.as_str()), Labeling::Direct, opts.variant15),
            )
        }
    };
    let first_negative = first_negative_entry(p);
    let tensor = TensorCheck {
        nonnegative: first_negative.is_none(),
        first_negative,
    };
    let mut routes = Routes::default();
    if opts.routes.a() || opts.routes.b() {
        let t = derived_tensor_unchecked::<I>(p);
        routes.a = opts.routes.a().then(|| route_a(&t));
        routes.b = opts.routes.b().then(|| route_b(&t));
    }
    if opts.routes.c() {
        routes.c = Some(match (&sp, labeling) {
            (Ok((sp1, sp2)), Some(l)) => match character_table_with(sp1, sp2, l) {
                Ok(table) => route_c(p, &table),
                Err(e) => RouteReport::unavailable(e.to_string()),
            },
            (Err(e), _) => RouteReport::unavailable(e.to_string()),
            (Ok(_), None) => unreachable!("labeling is chosen whenever spectra exist"),
        });
    }
    let equations = if opts.routes.equations() {
        equations
    } else {
        Vec::new()
    };
    let verdict = tensor.nonnegative
        && equations.iter().all(|e| e.pass)
        && routes.iter().all(|(_, r)| r.pass);
    FeasibilityReport {
        verdict,
        params: *p,
        labeling,
        spectrum_error: sp.err().map(|e| e.to_string()),
        tensor,
        equations,
        routes,
    }
}

fn route_title(name: &str) -> &'static str {
    match name {
        "A" => "intersection numbers",
        "B" => "regular representation",
        _ => "characters",
    }
}

fn mark(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

fn join<D: fmt::Display>(xs: &[D]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

impl<T: Scalar> fmt::Display for FeasibilityReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "parameters: {}", self.params)?;
        match self.labeling {
            Some(l) => writeln!(f, "labeling: {l}")?,
            None => writeln!(f, "labeling: none")?,
        }
        if let Some(e) = &self.spectrum_error {
            writeln!(f, "spectrum: {e}")?;
        }
        match &self.tensor.first_negative {
            None => writeln!(f, "tensor: all derived entries non-negative")?,
            Some(e) => writeln!(f, "tensor: negative entry {e}")?,
        }
        if !self.equations.is_empty() {
            writeln!(f, "equations:")?;
        }
        for e in &self.equations {
            let id = e.id.to_string();
            match (&e.lhs, &e.reason) {
                (Some(lhs), _) => writeln!(
                    f,
                    "  {id:<18} {}  lhs {lhs}; rhs {}; residual {}",
                    mark(e.pass),
                    join(&e.rhs),
                    join(&e.residual)
                )?,
                (None, reason) => writeln!(
                    f,
                    "  {id:<18} {}  {}",
                    mark(e.pass),
                    reason.as_deref().unwrap_or("")
                )?,
            }
        }
        for (name, r) in self.routes.iter() {
            write!(
                f,
                "route {name} ({}): {}, {} checked, {} failed",
                route_title(name),
                mark(r.pass),
                r.checked,
                r.failures
            )?;
            if let Some(n) = &r.note {
                write!(f, " [{n}]")?;
            }
            writeln!(f)?;
            if let Some(w) = &r.first_failure {
                writeln!(f, "    first failure: {w}")?;
            }
            for c in &r.named {
                writeln!(
                    f,
                    "    ({:>2}) {}  {}: {} vs {}, residual {}",
                    c.equation,
                    mark(c.pass),
                    c.witness,
                    c.lhs,
                    c.rhs,
                    c.residual
                )?;
            }
        }
        write!(f, "verdict: {}", if self.verdict { "pass" } else { "fail" })
    }
}
