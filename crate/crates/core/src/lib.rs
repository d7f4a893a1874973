//! Finite braces and involutive non-degenerate set-theoretic solutions of the
//! Yang-Baxter equation.
//!
//! Permutations compose right-to-left, `(p * q)(i) = p(q(i))`, and element 0
//! is the neutral element of every validated group and brace.

pub mod brace;
pub mod bridge;
pub mod closure;
pub mod constructions;
pub mod enumerate;
pub mod f2;
pub mod format;
pub mod group;
pub mod perm;
pub mod selftest;
pub mod solution;

pub use closure::{closure_with_witnesses, PermGroup};
pub use f2::{f2_product_span, f2_rank, BitVec, F2Matrix};
pub use group::{validate_group, CayleyGroup, GroupError};
pub use perm::{perm_compose, PermError, Permutation};
