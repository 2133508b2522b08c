//! Minimal free resolutions, Koszul homology and Bass series of Artinian
//! monomial ideals in `k[x, y, z]`.

pub mod classify;
pub mod config;
pub mod corpus;
pub mod error;
pub mod families;
pub mod field;
pub mod generate;
pub mod homology;
pub mod ideal;
pub mod invariants;
pub mod linalg;
pub mod module;
pub mod monomial;
pub mod parse;
pub mod resolution;
pub mod sweep;

pub use config::Config;
pub use error::{Error, Result};
pub use field::{Field, FieldKind, Fp, Gf32003, Rational};
pub use ideal::{MonomialIdeal, QuotientRing, StandardBasis};
pub use monomial::Monomial;
pub use parse::parse_ideal;
pub use resolution::{build_resolution, resolve, scarf_resolution, verify_resolution, MultigradedMatrix, Resolution};
pub use classify::{classify, classify_generic, InvariantReport, KoszulClass};
