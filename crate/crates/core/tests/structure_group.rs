//! The evaluator `φ: Z^X → Sym_X` on random vectors with entries in [−5, 5].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ybrace::bridge::{double_cover_solution, solution_from_brace, DescentPolicy, IStructure, StructureGroupElement};
use ybrace::constructions::{materialize_aug_brace, six_point_solution, sym3_brace};
use ybrace::solution::FiniteSolution;
use ybrace::Permutation;

const SAMPLES: usize = 1000;

fn fixtures() -> Vec<(&'static str, FiniteSolution)> {
    vec![
        ("six-point", six_point_solution()),
        ("sym3", solution_from_brace(&sym3_brace()).unwrap()),
        ("aug-2", solution_from_brace(&materialize_aug_brace(2).unwrap()).unwrap()),
        ("sym3-double-cover", double_cover_solution(&sym3_brace()).unwrap().0),
        ("trivial-3", FiniteSolution::trivial(3)),
        (
            "cycle-4",
            FiniteSolution::permutation_solution(&Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()),
        ),
    ]
}

fn random_vector(rng: &mut impl Rng, n: usize) -> StructureGroupElement {
    StructureGroupElement { vector: (0..n).map(|_| rng.gen_range(-5..=5)).collect() }
}

#[test]
fn cocycle_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(81);
    for (name, s) in fixtures() {
        let st = IStructure::new(&s);
        let n = s.size();
        for _ in 0..SAMPLES {
            let a = random_vector(&mut rng, n);
            let b = random_vector(&mut rng, n);
            let pa = st.phi_eval(&a.vector);
            // a·b = a + φ(a)(b)
            let ab = StructureGroupElement {
                vector: a.vector.iter().zip(pa.act_on_vector(&b.vector)).map(|(x, y)| x + y).collect(),
            };
            assert_eq!(st.sg_mul(&a, &b), ab, "{name}");
            assert_eq!(st.phi_eval(&ab.vector), &pa * &st.phi_eval(&b.vector), "{name}: {a:?} {b:?}");
            let inv = st.sg_inv(&a);
            assert_eq!(st.sg_mul(&a, &inv), StructureGroupElement::zero(n), "{name}");
        }
    }
}

#[test]
fn descent_order_is_irrelevant() {
    let mut rng = ChaCha8Rng::seed_from_u64(82);
    for (name, s) in fixtures() {
        let st = IStructure::new(&s);
        for _ in 0..SAMPLES {
            let a = random_vector(&mut rng, s.size());
            let first = st.phi_with_policy(&a.vector, DescentPolicy::First, &mut rng);
            let random = st.phi_with_policy(&a.vector, DescentPolicy::Random, &mut rng);
            assert_eq!(first, random, "{name}: {a:?}");
            assert_eq!(st.phi_eval(&a.vector), first, "{name}: memo");
        }
    }
}

#[test]
fn basis_values() {
    for (name, s) in fixtures() {
        let st = IStructure::new(&s);
        let n = s.size();
        let t = s.diagonal();
        for x in 0..n {
            assert_eq!(&st.phi_eval(&StructureGroupElement::basis(n, x).vector), s.sigma(x), "{name}");
            let mut neg = vec![0; n];
            neg[x] = -1;
            // φ(−e_y) = σ⁻¹ at T⁻¹(y)
            assert_eq!(st.phi_eval(&neg), s.sigma_inv(t.inverse().apply(x)).clone(), "{name}");
        }
    }
}

#[test]
fn brace_operations() {
    let mut rng = ChaCha8Rng::seed_from_u64(83);
    let s = six_point_solution();
    let st = IStructure::new(&s);
    for _ in 0..200 {
        let a = random_vector(&mut rng, 6);
        let b = random_vector(&mut rng, 6);
        let c = random_vector(&mut rng, 6);
        // a(b + c) + a = ab + ac
        let lhs = st.sg_add(&st.sg_mul(&a, &st.sg_add(&b, &c)), &a);
        let rhs = st.sg_add(&st.sg_mul(&a, &b), &st.sg_mul(&a, &c));
        assert_eq!(lhs, rhs);
        assert_eq!(st.sg_lambda(&a, &b), st.sg_add(&st.sg_mul(&a, &b), &st.sg_neg(&a)));
    }
}
