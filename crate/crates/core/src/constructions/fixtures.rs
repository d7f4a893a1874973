use std::collections::HashMap;

use crate::brace::{FiniteBrace, Side};
use crate::group::{named, CayleyGroup};
use crate::perm::Permutation;
use crate::solution::FiniteSolution;

/// Names of the Sym₃ fixture elements in cycle notation on `{1, 2, 3}`:
/// element `k` is `k·(1,2)` in the additive group.
pub fn sym3_labels() -> [&'static str; 6] {
    ["id", "(1,2)", "(1,2,3)", "(1,3)", "(1,3,2)", "(2,3)"]
}

/// Left brace on Sym₃ whose additive group is cyclic of order 6, generated
/// by `(1,2)` with multiples `(1,2), (1,2,3), (1,3), (1,3,2), (2,3), id`.
pub fn sym3_brace() -> FiniteBrace {
    let cyc = |c: &[&[usize]]| Permutation::from_cycles(3, c).unwrap();
    let elements = [
        Permutation::identity(3),
        cyc(&[&[0, 1]]),
        cyc(&[&[0, 1, 2]]),
        cyc(&[&[0, 2]]),
        cyc(&[&[0, 2, 1]]),
        cyc(&[&[1, 2]]),
    ];
    let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mul = CayleyGroup::from_fn_unchecked(6, |a, b| index[&(&elements[a] * &elements[b])]);
    let brace = FiniteBrace::from_groups_left(named::cyclic(6), mul).expect("Sym3 fixture is a left brace");
    assert_eq!(brace.side(), Side::Left);
    brace
}

/// Six-point square-free solution, 0-indexed: `σ_0 = σ_1 = σ_2 = id`,
/// `σ_3 = (0 1 2)`, `σ_4 = (0 2 1)`, `σ_5 = (3 4)(1 2)`. With 1-based labels
/// these are `σ_1 = σ_2 = σ_3 = id`, `σ_4 = (1,2,3) = σ_5⁻¹`, `σ_6 = (4,5)(2,3)`.
pub fn six_point_solution() -> FiniteSolution {
    let cyc = |c: &[&[usize]]| Permutation::from_cycles(6, c).unwrap();
    let id = Permutation::identity(6);
    FiniteSolution::from_permutations(vec![
        id.clone(),
        id.clone(),
        id,
        cyc(&[&[0, 1, 2]]),
        cyc(&[&[0, 2, 1]]),
        cyc(&[&[3, 4], &[1, 2]]),
    ])
    .expect("six-point fixture is a solution")
}
