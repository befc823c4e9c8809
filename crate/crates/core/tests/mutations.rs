//! Single-field mutations of the GQ(2,2) tuple. Each one breaks a chosen
//! equation and shows up at that equation's witness in route A or B.

use num_bigint::BigInt;
use srd_core::feasibility::{check_params, CheckOptions, RouteReport};
use srd_core::srd::symbolic::Param;
use srd_core::srd::{SrdParams, Srg};

fn gq() -> SrdParams {
    let g = Srg::new(15, 6, 1, 3);
    SrdParams {
        srg1: g,
        srg2: g,
        S1: 3,
        S2: 3,
        N1: 2,
        P1: 1,
        N2: 2,
        P2: 1,
        a1: 1,
        b1: 0,
        a2: 1,
        b2: 0,
    }
}

/// `(equation, field, new value)`; dependent fields are left untouched.
const MUTATIONS: [(u8, Param, i64); 11] = [
    (2, Param::S1, 4),
    (3, Param::P1, 2),
    (4, Param::A2, 2),
    (5, Param::B2, 1),
    (6, Param::Lambda1, 2),
    (7, Param::Mu1, 2),
    (8, Param::B2, 1),
    (9, Param::A2, 2),
    (10, Param::A1, 2),
    (11, Param::B1, 1),
    (12, Param::P2, 2),
];

fn witness(route: &RouteReport, eq: u8) -> &srd_core::feasibility::NamedCheck {
    route
        .named
        .iter()
        .find(|c| c.equation == eq)
        .expect("named witness")
}

#[test]
fn each_mutation_breaks_its_equation_and_witness() {
    let base = check_params::<BigInt>(&gq(), &CheckOptions::default());
    assert!(base.passed());
    for (eq, field, value) in MUTATIONS {
        let p = gq().with(field, value);
        let r = check_params::<BigInt>(&p, &CheckOptions::default());
        let e = r.equation(eq).unwrap();
        assert!(!e.pass, "({eq}) survives {field} = {value}");
        let route = if eq <= 5 {
            r.routes.a.as_ref()
        } else {
            r.routes.b.as_ref()
        }
        .unwrap();
        let w = witness(route, eq);
        assert!(
            !w.pass,
            "witness {} unchanged by {field} = {value}",
            w.witness
        );
        assert_ne!(w.residual, "0");
        assert!(!route.pass);
    }
}

#[test]
fn witness_residual_equals_equation_residual() {
    // The witness entry is the equation itself, up to sign and scale.
    for (eq, field, value) in MUTATIONS.into_iter().filter(|m| m.0 >= 6) {
        let p = gq().with(field, value);
        let r = check_params::<BigInt>(&p, &CheckOptions::default());
        let w = witness(r.routes.b.as_ref().unwrap(), eq);
        let e = r.equation(eq).unwrap();
        let wr: i64 = w.residual.parse().unwrap();
        let er: i64 = e.residual[0].to_string().parse().unwrap();
        assert_eq!(wr.abs(), er.abs(), "({eq}) {field} = {value}");
    }
}

#[test]
fn full_associativity_zero_iff_equations_hold() {
    for (_, field, value) in MUTATIONS {
        let p = gq().with(field, value);
        let r = check_params::<BigInt>(&p, &CheckOptions::default());
        let eqs_hold = (6..=12).all(|i| r.equation(i).unwrap().pass);
        assert_eq!(
            r.routes.b.as_ref().unwrap().failures == 0,
            eqs_hold,
            "{field} = {value}"
        );
    }
}

#[test]
fn route_a_witness_for_n1_mutation() {
    let p = gq().with(Param::N1, 3);
    let r = check_params::<BigInt>(&p, &CheckOptions::default());
    let a = r.routes.a.as_ref().unwrap();
    assert!(!a.pass);
    assert!(a.first_failure.is_some());
}
