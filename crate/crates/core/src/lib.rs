//! Structure of graded minimal free resolutions of codimension-3 almost
//! complete intersection and Gorenstein artinian algebras, at the level of
//! Betti tables: shape decomposition, invariant extraction, liaison, and
//! monomial realizability, each cross-checked against independent exact
//! oracles (rational lcm-lattice homology and prime-field linear algebra).
//!
//! All combinatorial arithmetic is exact integer; linear algebra is exact
//! over the rationals or a prime field. No floating point anywhere.

pub mod aci;
pub mod gorenstein;
pub mod lab;
pub mod liaison;
pub mod linalg;
pub mod monomial;
pub mod shifts;
pub mod sweep;
pub mod util;

/// Exact rational scalar used by the lcm-lattice homology oracle.
pub type Rat = num_rational::Ratio<i64>;

pub use aci::{check_characterization, check_table, decompose, extract_dstar, AciShape, Verdict};
pub use gorenstein::{
    gorenstein_betti_table, validate_degree_sequence, CiMinProvider, MinProvider,
};
pub use shifts::{BettiTable, FreeModuleShifts};
