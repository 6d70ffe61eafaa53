//! Scalars, parameter polynomials, generators and bracket tables.

pub mod expr;
pub mod families;
pub mod generator;
pub mod lie;
pub mod operator;
pub mod poly;
pub mod scalar;
pub mod structure;

pub use expr::parse_poly;
pub use families::{ansatz_all_i, ansatz_bindings_for_hlm, build_family, AnsatzSlots};
pub use generator::{Generator, ALL, DIM};
pub use poly::{Monomial, ParamPoly, Var};
pub use scalar::{parse_rational, rat, rat_int, GaussRational, Rational};
pub use structure::{Family, NumericConstants, ParameterPoint, StructureConstants};
