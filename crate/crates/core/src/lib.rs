//! Sagbi bases of polynomial subalgebras over the rationals, and their
//! conversion from one global term order to another by walking the Sagbi
//! fan.
//!
//! The crate is organised bottom-up:
//!
//! - [`poly`]: exact sparse polynomials,
//! - [`order`]: matrix term orders and weight vectors,
//! - [`initial`]: weighted degrees and initial forms,
//! - [`membership`]: monomial-algebra membership and subduction,
//! - [`groebner`]: a Buchberger engine for toric relations,
//! - [`sagbi`]: Sagbi construction, criterion and interreduction,
//! - [`cone`]: Sagbi cones and crossing to the next cone,
//! - [`walk`]: the conversion loop,
//! - [`cli`]: the JSON driven command line front end.

pub mod cli;
pub mod cone;
pub mod error;
pub mod groebner;
pub mod initial;
pub mod membership;
pub mod order;
pub mod poly;
pub mod sagbi;
pub mod walk;

pub use error::{Error, Result};
pub use order::{TermOrder, WeightVector};
pub use poly::{Exponent, Polynomial, Rational, Ring};
pub use sagbi::{SagbiGuards, TrackedBasis};
pub use walk::{walk, WalkOptions, WalkReport, WalkStatus, WalkStep};
