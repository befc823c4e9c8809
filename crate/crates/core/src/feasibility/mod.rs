//! The fifteen feasibility equations, their three independent confirmations
//! and exhaustive enumeration of parameter-feasible tuples.

mod complete;
mod enumerate;
mod equations;
mod report;
mod routes;

pub use complete::{complete_params, PartialParams};
pub use enumerate::{enumerate_feasible, format_table, primitive_srgs, Bounds};
pub use equations::{check_equations, EquationId, EquationResult, Variant};
pub use report::{check_params, CheckOptions, FeasibilityReport, RouteSelection, TensorCheck};
pub use routes::{route_a, route_b, route_c, NamedCheck, RegularRep, RouteReport};
