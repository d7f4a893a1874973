//! Exhaustive generation of small solutions and braces, canonical forms, and
//! corpus-wide sweeps.

mod braces;
mod canon;
mod solutions;
mod sweep;

pub use braces::{
    braces_of_order, enumerate_all_braces, enumerate_brace_classes, enumerate_braces, regular_subgroup, MAX_BRACE_ORDER,
};
pub use canon::{
    canonical_brace_with_map, canonical_solution_with_map, canonicalize_brace, canonicalize_solution, CanonicalBrace,
    CanonicalSolution,
};
pub use solutions::{enumerate_all_solutions, enumerate_solution_classes, enumerate_solutions, MAX_SOLUTION_SIZE};
pub use sweep::{
    brace_corpus, census, corpus_sweep, fixture_braces, CensusRecord, SweepReport, Theorem, THEOREMS,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerateError {
    #[error("size {n} is outside the supported range 1..={max}")]
    SizeCap { n: usize, max: usize },
    #[error("additive group is not abelian")]
    NotAbelian,
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("internal error: {0}")]
    Internal(String),
}
