use std::sync::OnceLock;

use proptest::prelude::*;

use ybrace::brace::{brace_isomorphic, check_lambda_homomorphism, socle, FiniteBrace};
use ybrace::bridge::solution_from_brace;
use ybrace::enumerate::{
    braces_of_order, canonical_solution_with_map, canonicalize_brace, canonicalize_solution, enumerate_solution_classes,
};
use ybrace::solution::{solution_isomorphic, validate_solution, FiniteSolution};
use ybrace::Permutation;

fn classes() -> &'static [FiniteSolution] {
    static C: OnceLock<Vec<FiniteSolution>> = OnceLock::new();
    C.get_or_init(|| {
        (3..=5)
            .flat_map(|n| enumerate_solution_classes(n).unwrap())
            .map(|c| c.to_solution())
            .collect()
    })
}

fn braces() -> &'static [FiniteBrace] {
    static B: OnceLock<Vec<FiniteBrace>> = OnceLock::new();
    B.get_or_init(|| (4..=8).flat_map(|n| braces_of_order(n).unwrap()).collect())
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

/// A permutation of `0..n` fixing 0.
fn pointed(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| {
        let mut images = vec![0];
        images.extend(v);
        Permutation::from_images(images).unwrap()
    })
}

fn relabelled_solution() -> impl Strategy<Value = (usize, FiniteSolution)> {
    (0..classes().len()).prop_flat_map(|i| {
        let s = &classes()[i];
        permutation(s.size()).prop_map(move |f| (i, classes()[i].relabelled(&f)))
    })
}

fn relabelled_brace() -> impl Strategy<Value = (usize, FiniteBrace)> {
    (0..braces().len()).prop_flat_map(|i| pointed(braces()[i].order()).prop_map(move |f| (i, braces()[i].relabelled(&f))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn solution_forms_agree_with_isomorphism((i, s) in relabelled_solution(), (j, t) in relabelled_solution()) {
        let same = canonicalize_solution(&s) == canonicalize_solution(&t);
        prop_assert_eq!(same, solution_isomorphic(&s, &t).is_some());
        prop_assert_eq!(same, i == j);
        prop_assert_eq!(canonicalize_solution(&s), canonicalize_solution(&classes()[i]));
        prop_assert!(solution_isomorphic(&s, &classes()[i]).is_some());
    }

    #[test]
    fn brace_forms_agree_with_isomorphism((i, a) in relabelled_brace(), (j, b) in relabelled_brace()) {
        let same = canonicalize_brace(&a) == canonicalize_brace(&b);
        prop_assert_eq!(same, brace_isomorphic(&a, &b).is_some());
        prop_assert_eq!(same, i == j);
        prop_assert!(brace_isomorphic(&a, &braces()[i]).is_some());
    }
}

proptest! {
    #[test]
    fn composition_is_associative(p in permutation(6), q in permutation(6), r in permutation(6)) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert!((&p * &p.inverse()).is_identity());
        prop_assert_eq!(p.order(), p.cycle_type().iter().fold(1, |a, &b| num_lcm(a, b)));
    }

    #[test]
    fn relabelling_preserves_invariants((_, s) in relabelled_solution(), f in permutation(5)) {
        let n = s.size();
        let f = if n == 5 { f } else { Permutation::identity(n) };
        let t = s.relabelled(&f);
        prop_assert!(validate_solution(&t.rows()).is_ok());
        prop_assert_eq!(t.is_square_free(), s.is_square_free());
        prop_assert_eq!(t.mpl(), s.mpl());
        prop_assert_eq!(t.retract().quotient.size(), s.retract().quotient.size());
        prop_assert_eq!(t.diagonal().cycle_type(), s.diagonal().cycle_type());
        prop_assert_eq!(t.yb_group().unwrap().order(), s.yb_group().unwrap().order());
        let (c, g) = canonical_solution_with_map(&t);
        prop_assert_eq!(t.relabelled(&g), c.to_solution());
    }

    #[test]
    fn relabelled_braces_stay_braces((i, b) in relabelled_brace()) {
        prop_assert!(check_lambda_homomorphism(&b).is_ok());
        prop_assert_eq!(socle(&b).unwrap().len(), socle(&braces()[i]).unwrap().len());
        let s = solution_from_brace(&b).unwrap();
        let t = solution_from_brace(&braces()[i]).unwrap();
        prop_assert!(solution_isomorphic(&s, &t).is_some());
        prop_assert_eq!(canonicalize_brace(&b), canonicalize_brace(&braces()[i]));
    }
}

fn num_lcm(a: usize, b: usize) -> usize {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}
