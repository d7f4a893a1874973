//! Named braces and solutions.

mod aug;
mod class2;
mod embed;
mod fixtures;

pub use aug::{aug_brace, aug_brace_mpl, ideal_power_basis, materialize_aug_brace, AugError, AugMplReport, F2IdealBrace};
pub use class2::{ault_watters_brace, class2_brace, ConstructionError};
pub use embed::{adjoint_embedding, EmbeddingReport};
pub use fixtures::{six_point_solution, sym3_brace, sym3_labels};

pub use crate::brace::trivial_brace;
