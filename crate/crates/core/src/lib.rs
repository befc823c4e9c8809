//! Exact algebra for coherent configurations of type [3 2; 3] and the
//! strongly regular designs they encode.
//!
//! The algebra is generic over the scalar type (see [`exact::Scalar`]); the
//! aliases below fix the arbitrary-precision instantiation used by the CLI.

pub mod coherent;
pub mod error;
pub mod exact;
pub mod feasibility;
pub mod srd;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;
pub type Quad = exact::QuadValue<Rational>;
pub type IntMatrix = exact::Matrix<Integer>;
pub type RationalMatrix = exact::Matrix<Rational>;
pub type Tensor = coherent::StructureTensor<Integer>;
pub type Spectrum = srd::SrgParams<Rational>;
pub type Characters = srd::CharacterTable<Rational>;
pub type Report = feasibility::FeasibilityReport<Rational>;
