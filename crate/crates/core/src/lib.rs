//! Complete-intersection monomial curves and their shifted families.
//!
//! - [`seqcore`]: sequence types, shifting, gcd normalization.
//! - [`semigroup`]: membership, representations, Frobenius numbers.
//! - [`delorme`]: recursive split search producing checkable certificates.
//! - [`shiftscan`]: scans of `j ↦ (j, j + a_1, ..., j + a_n)`, periodicity
//!   reports and the closed-form criteria for two and three offsets.
//! - [`toricoracle`]: an independent count of minimal binomial generators.
//! - [`fixtures`]: the built-in verification suite.
//! - [`cli`]: the `cishift` command line.

pub mod cli;
pub mod delorme;
pub mod error;
pub mod fixtures;
pub mod semigroup;
pub mod seqcore;
pub mod shiftscan;
pub mod toricoracle;

pub use delorme::{is_complete_intersection, verify_certificate, CiCertificate};
pub use error::{Error, Result};
pub use seqcore::{shift, BaseSequence, GeneratorSequence};
