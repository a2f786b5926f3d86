//! Prime-field laboratory: exact linear-algebra oracles for graded ideals
//! in three variables. Everything here works degree by degree with dense
//! echelon bases, so results are certified modulo the choice of prime and
//! (where random coefficients are drawn) the sample.

pub mod fp;
pub mod ideal;
pub mod pfaffian;
pub mod poly;
pub mod provider;
pub mod resolution;

pub use fp::{Echelon, PrimeField, DEFAULT_PRIME};
pub use ideal::{colon_ideal, GradedIdealFp};
pub use pfaffian::pfaffian_gorenstein_sample;
pub use poly::HPoly;
pub use provider::OracleMinProvider;
pub use resolution::{minimal_resolution_fp, regular_sequence_test, RegSeqAnswer};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("quotient is not artinian within degree bound {0}")]
    NotArtinianWithinBound(i64),
    #[error("degree bound {bound} too small; need at least {needed}")]
    BoundTooSmall { bound: i64, needed: i64 },
    #[error("generator of degree {0} is not contained in the given ideal")]
    NotContained(i64),
    #[error("requested degree {0} is below every generator degree")]
    DegreeBelowIdeal(i64),
    #[error("no skew degree matrix is consistent with the degree sequence")]
    NoConsistentDegreeMatrix,
    #[error("sampling failed after {0} attempts")]
    SamplingFailed(u32),
}
