//! Passing between braces and solutions.

mod iyb;
mod structure;

pub use iyb::{iyb_quotient_brace, iyb_retract_matches, IybBrace, IYB_CAP};
pub use structure::{itype_basis_check, DescentPolicy, IStructure, StructureGroupElement};

use thiserror::Error;

use crate::brace::{quotient_brace, socle, BraceError, FiniteBrace};
use crate::perm::Permutation;
use crate::solution::{validate_solution, FiniteSolution, SolutionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BridgeError {
    #[error("a left brace is required")]
    NotLeft,
    #[error(transparent)]
    Brace(#[from] BraceError),
    #[error(transparent)]
    Solution(#[from] SolutionError),
    #[error("sum on the IYB group is not well defined at ({g}, {h})")]
    NotWellDefined { g: usize, h: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// The solution `r(a, b) = (λ_a(b), λ⁻¹_{λ_a(b)}(a))` associated to a left brace.
pub fn solution_from_brace(b: &FiniteBrace) -> Result<FiniteSolution, BridgeError> {
    if !b.is_left() {
        return Err(BridgeError::NotLeft);
    }
    let n = b.order();
    let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|x| b.lambda(a, x)).collect()).collect();
    let s = validate_solution(&rows)?;
    if s.is_square_free() != (0..n).all(|a| b.lambda(a, a) == a) {
        return Err(BridgeError::Internal("square-free test disagrees with lambda_a(a) = a".into()));
    }
    Ok(s)
}

/// Label of a point `(a, i)` of `B × {1, 2}`; point `(a, i)` has index `(i − 1)|B| + a`.
pub fn double_cover_labels(order: usize) -> Vec<(usize, u8)> {
    (0..2 * order).map(|x| (x % order, (x / order) as u8 + 1)).collect()
}

/// The solution on `B × {1, 2}` with `f_{(a,1)} = id`, `f_{(a,2)}(b,1) = (ab,1)`
/// and `f_{(a,2)}(b,2) = (λ_a(b),2)`. Its retraction is the solution of `B`
/// and its IYB group is the multiplicative group of `B`.
pub fn double_cover_solution(b: &FiniteBrace) -> Result<(FiniteSolution, Vec<(usize, u8)>), BridgeError> {
    if !b.is_left() {
        return Err(BridgeError::NotLeft);
    }
    let n = b.order();
    let rows: Vec<Vec<usize>> = (0..2 * n)
        .map(|x| {
            if x < n {
                (0..2 * n).collect()
            } else {
                let a = x - n;
                (0..n).map(|c| b.mul(a, c)).chain((0..n).map(|c| n + b.lambda(a, c))).collect()
            }
        })
        .collect();
    Ok((validate_solution(&rows)?, double_cover_labels(n)))
}

/// Checks `Ret(B, r) = (B/Soc(B), r')` under the identification of the
/// σ-class of `a` with the coset `a·Soc(B)`.
pub fn retract_equals_socle_quotient(b: &FiniteBrace) -> Result<bool, BridgeError> {
    let s = solution_from_brace(b)?;
    let step = s.retract();
    let soc = socle(b)?;
    let q = quotient_brace(b, &soc)?;
    let qs = solution_from_brace(&q.brace)?;
    if step.quotient.size() != qs.size() {
        return Ok(false);
    }
    let m = qs.size();
    // class k ↦ coset of any of its members
    let mut map = vec![usize::MAX; m];
    for (k, class) in step.classes.iter().enumerate() {
        let coset = q.projection[class[0]];
        if class.iter().any(|&a| q.projection[a] != coset) {
            return Ok(false);
        }
        map[k] = coset;
    }
    let Ok(f) = Permutation::from_images(map) else {
        return Ok(false);
    };
    // every point must land in the same place along both routes
    if (0..b.order()).any(|a| f.apply(step.projection[a]) != q.projection[a]) {
        return Ok(false);
    }
    Ok(step.quotient.relabelled(&f) == qs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::trivial_brace;
    use crate::constructions::{materialize_aug_brace, sym3_brace};
    use crate::group::named::*;
    use crate::solution::{solution_isomorphic, Mpl};

    #[test]
    fn trivial_brace_gives_trivial_solution() {
        let s = solution_from_brace(&trivial_brace(&cyclic(5)).unwrap()).unwrap();
        assert_eq!(s, FiniteSolution::trivial(5));
    }

    #[test]
    fn sym3_solution_has_level_two() {
        let s = solution_from_brace(&sym3_brace()).unwrap();
        assert_eq!(s.mpl(), Mpl::Level(2));
        assert!(!s.is_square_free());
    }

    #[test]
    fn aug_rank_two_solution_formula() {
        let b = materialize_aug_brace(2).unwrap();
        let s = solution_from_brace(&b).unwrap();
        assert!(s.is_square_free());
        let r = crate::constructions::aug_brace(2).unwrap();
        for x in 0..8 {
            for y in 0..8 {
                let (a, c) = (r.element(x), r.element(y));
                let ab = r.ring_mul(a, c);
                assert_eq!(s.apply_r(x, y), (r.index_of(ab ^ c), r.index_of(ab ^ a)));
            }
        }
    }

    #[test]
    fn double_cover_retract_and_group() {
        for b in [trivial_brace(&cyclic(2)).unwrap(), sym3_brace(), materialize_aug_brace(2).unwrap()] {
            let (x, labels) = double_cover_solution(&b).unwrap();
            assert_eq!(x.size(), 2 * b.order());
            assert_eq!(labels.len(), x.size());
            let ret = x.retract().quotient;
            assert!(solution_isomorphic(&ret, &solution_from_brace(&b).unwrap()).is_some());
            let g = x.yb_group().unwrap();
            assert!(g.cayley().is_isomorphic(b.multiplicative()));
        }
    }

    #[test]
    fn socle_quotient_matches_retract() {
        assert!(retract_equals_socle_quotient(&trivial_brace(&cyclic(4)).unwrap()).unwrap());
        let b = sym3_brace();
        assert!(retract_equals_socle_quotient(&b).unwrap());
        assert_eq!(solution_from_brace(&b).unwrap().retract().quotient.size(), 2);
        assert!(retract_equals_socle_quotient(&materialize_aug_brace(3).unwrap()).unwrap());
    }
}
