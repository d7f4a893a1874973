//! Small invariant suites, one per module, runnable from the command line.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};

use crate::brace::{
    check_lambda_homomorphism, direct_product, from_radical_ring, is_ideal, quotient_brace, radical_ring_violation,
    socle, to_radical_ring, trivial_brace, BraceSubset,
};
use crate::bridge::{
    double_cover_solution, iyb_quotient_brace, retract_equals_socle_quotient, solution_from_brace, DescentPolicy,
    IStructure, StructureGroupElement,
};
use crate::closure::{closure, CLOSURE_CAP};
use crate::constructions::{adjoint_embedding, aug_brace_mpl, class2_brace, six_point_solution, sym3_brace};
use crate::enumerate::{braces_of_order, canonicalize_solution, enumerate_solution_classes};
use crate::f2::{f2_rank, BitVec, F2Matrix};
use crate::format::{parse_brace, parse_solution, write_brace, write_solution};
use crate::group::named;
use crate::perm::Permutation;
use crate::solution::{solution_isomorphic, FiniteSolution, Mpl};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    CoreAlgebra,
    Brace,
    Solution,
    Bridge,
    Constructions,
    Enumerate,
    Format,
}

pub const SUITES: [Suite; 7] = [
    Suite::CoreAlgebra,
    Suite::Brace,
    Suite::Solution,
    Suite::Bridge,
    Suite::Constructions,
    Suite::Enumerate,
    Suite::Format,
];

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::CoreAlgebra => "core-algebra",
            Suite::Brace => "brace",
            Suite::Solution => "solution",
            Suite::Bridge => "bridge",
            Suite::Constructions => "constructions",
            Suite::Enumerate => "enumerate",
            Suite::Format => "format",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SUITES.into_iter().find(|t| t.name() == s).ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Outcome = Result<(), String>;

fn ensure(cond: bool, what: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

fn core_algebra() -> Vec<(&'static str, Outcome)> {
    let p = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
    let q = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
    vec![
        ("composition applies the right factor first", ensure((&p * &q).apply(1) == p.apply(q.apply(1)), "(pq)(1) != p(q(1))")),
        ("inverse", ensure(&(&p * &q) * &(&p * &q).inverse() == Permutation::identity(3), "pq (pq)⁻¹ != id")),
        (
            "vector action moves basis vectors",
            ensure(p.act_on_vector(&[1, 0, 0]) == vec![0, 1, 0], "(01)·e_0 != e_1"),
        ),
        (
            "named groups validate",
            [named::cyclic(6), named::dihedral(4), named::quaternion(), named::symmetric(3), named::heisenberg(8)]
                .iter()
                .try_for_each(|g| crate::group::validate_group(&g.rows()).map(|_| ()).map_err(err)),
        ),
        (
            "isomorphism separates Z4 and V4",
            ensure(!named::cyclic(4).is_isomorphic(&named::abelian(&[2, 2])), "Z4 ≅ V4 reported"),
        ),
        (
            "automorphism counts",
            ensure(
                named::abelian(&[2, 2]).automorphisms().len() == 6 && named::cyclic(8).automorphisms().len() == 4,
                "Aut(V4) or Aut(Z8) miscounted",
            ),
        ),
        ("closure of transpositions", closure(3, &[p.clone(), q.clone()], CLOSURE_CAP).map_err(err).and_then(|g| ensure(g.order() == 6, "order != 6"))),
        ("F2 rank", {
            let rows = [0b011, 0b110, 0b101].map(|b| BitVec::from_u64(3, b)).to_vec();
            F2Matrix::from_rows(3, rows).map_err(err).and_then(|m| ensure(f2_rank(&m) == 2, "rank != 2"))
        }),
    ]
}

fn brace_suite() -> Vec<(&'static str, Outcome)> {
    let b = sym3_brace();
    let mut out = vec![
        ("Sym3 brace is left but not right", ensure(b.is_left() && !b.side().is_right(), "wrong side")),
        ("Sym3 socle has order 3", socle(&b).map_err(err).and_then(|s| ensure(s.len() == 3, "order != 3"))),
        (
            "socle quotient",
            socle(&b)
                .and_then(|s| quotient_brace(&b, &s))
                .map_err(err)
                .and_then(|q| ensure(q.brace.order() == 2, "order != 2")),
        ),
        ("star is not a ring on Sym3", ensure(radical_ring_violation(&b).is_some(), "ring laws hold")),
    ];
    let corpus = braces_of_order(8).map_err(err);
    out.push((
        "27 braces of order 8 with λ homomorphisms",
        corpus.clone().and_then(|c| {
            ensure(c.len() == 27, format!("found {}", c.len()))?;
            c.iter().try_for_each(|x| check_lambda_homomorphism(x).map(|_| ()).map_err(err))
        }),
    ));
    out.push((
        "socles are ideals",
        corpus.clone().and_then(|c| {
            c.iter()
                .try_for_each(|x| socle(x).map_err(err).and_then(|s| is_ideal(x, &s).map_err(err)))
        }),
    ));
    out.push((
        "radical ring round trip",
        corpus.and_then(|c| {
            c.iter().filter(|x| x.is_two_sided()).try_for_each(|x| {
                let r = to_radical_ring(x).map_err(err)?;
                let back = from_radical_ring(&r.star_rows(), &x.add_rows()).map_err(err)?;
                ensure(back == *x, "round trip differs")
            })
        }),
    ));
    out.push((
        "direct product order",
        trivial_brace(&named::cyclic(2))
            .and_then(|t| direct_product(&b, &t))
            .map_err(err)
            .and_then(|p| ensure(p.order() == 12 && p.is_left(), "bad product")),
    ));
    out.push((
        "zero and whole subsets are ideals",
        is_ideal(&b, &BraceSubset::zero(6))
            .and_then(|_| is_ideal(&b, &BraceSubset::whole(6)))
            .map_err(err),
    ));
    out
}

fn solution_suite() -> Vec<(&'static str, Outcome)> {
    let s = six_point_solution();
    vec![
        ("six-point solution is square-free", ensure(s.is_square_free(), "not square-free")),
        (
            "six-point group is Sym3 and not nilpotent",
            s.yb_group().map_err(err).and_then(|g| {
                let c = g.cayley();
                ensure(c.is_isomorphic(&named::symmetric(3)) && c.nilpotency_class().is_none(), "wrong group")
            }),
        ),
        ("trivial solution has mpl 1", ensure(FiniteSolution::trivial(4).mpl() == Mpl::Level(1), "mpl != 1")),
        (
            "square-free solutions up to 4 points decompose",
            (2..=4).try_for_each(|n| {
                enumerate_solution_classes(n).map_err(err)?.iter().try_for_each(|c| {
                    let t = c.to_solution();
                    ensure(!t.is_square_free() || t.find_decomposition().is_some(), "indecomposable square-free")
                })
            }),
        ),
        ("relabelling preserves isomorphism", {
            let f = Permutation::from_images(vec![3, 1, 4, 0, 5, 2]).unwrap();
            ensure(solution_isomorphic(&s, &s.relabelled(&f)).is_some(), "relabelling not isomorphic")
        }),
        ("r is involutive", {
            let n = s.size();
            ensure(
                (0..n).all(|x| (0..n).all(|y| {
                    let (u, v) = s.apply_r(x, y);
                    s.apply_r(u, v) == (x, y)
                })),
                "r² != id",
            )
        }),
    ]
}

fn bridge_suite() -> Vec<(&'static str, Outcome)> {
    let b = sym3_brace();
    let s6 = six_point_solution();
    vec![
        (
            "Sym3 solution has mpl 2",
            solution_from_brace(&b).map_err(err).and_then(|s| ensure(s.mpl() == Mpl::Level(2), "mpl != 2")),
        ),
        (
            "Sym3 solution group has order 2",
            solution_from_brace(&b)
                .and_then(|s| s.yb_group().map_err(Into::into))
                .map_err(err)
                .and_then(|g| ensure(g.order() == 2, "order != 2")),
        ),
        ("retraction is the socle quotient", retract_equals_socle_quotient(&b).map_err(err).and_then(|m| ensure(m, "mismatch"))),
        (
            "double cover group is the multiplicative group",
            double_cover_solution(&b)
                .map_err(err)
                .and_then(|(x, _)| x.yb_group().map_err(err))
                .and_then(|g| ensure(g.cayley().is_isomorphic(b.multiplicative()), "not isomorphic")),
        ),
        ("cocycle law and descent independence", {
            let st = IStructure::new(&s6);
            let mut rng = rand::rngs::StdRng::seed_from_u64(7);
            (0..200).try_for_each(|_| {
                let mut v = || StructureGroupElement { vector: (0..6).map(|_| rng.gen_range(-3..=3)).collect() };
                let (a, c) = (v(), v());
                let lhs = st.phi_eval(&st.sg_mul(&a, &c).vector);
                let rhs = &st.phi_eval(&a.vector) * &st.phi_eval(&c.vector);
                ensure(lhs == rhs, "phi(ab) != phi(a)phi(b)")?;
                let other = st.phi_with_policy(&a.vector, DescentPolicy::Random, &mut rng);
                ensure(other == st.phi_eval(&a.vector), "descent order matters")
            })
        }),
        (
            "IYB brace of the six-point solution",
            iyb_quotient_brace(&s6).map_err(err).and_then(|i| {
                let t = solution_from_brace(&i.brace).map_err(err)?;
                ensure(i.brace.order() == 6 && !t.is_square_free(), "wrong IYB brace")
            }),
        ),
    ]
}

fn constructions_suite() -> Vec<(&'static str, Outcome)> {
    vec![
        (
            "augmentation ideal levels",
            (1..=3).try_for_each(|n| {
                let r = aug_brace_mpl(n).map_err(err)?;
                ensure(r.mpl == Mpl::Level(n) && r.square_free && r.lambda_group_elementary_abelian, format!("n={n}"))
            }),
        ),
        (
            "class-2 brace on D4",
            class2_brace(&named::dihedral(4)).map_err(err).and_then(|(b, _)| ensure(b.is_two_sided(), "not two-sided")),
        ),
        (
            "adjoint embedding of Q8 over F2",
            adjoint_embedding(2, &named::quaternion())
                .map_err(err)
                .and_then(|r| ensure(r.injective && r.homomorphism && r.image_is_copy_of_group, "not an embedding")),
        ),
    ]
}

fn enumerate_suite() -> Vec<(&'static str, Outcome)> {
    vec![
        (
            "solution classes 1, 2, 5, 23",
            (1..=4).zip([1, 2, 5, 23]).try_for_each(|(n, k)| {
                let c = enumerate_solution_classes(n).map_err(err)?;
                ensure(c.len() == k, format!("n={n}: {} classes", c.len()))
            }),
        ),
        (
            "brace classes of order 4",
            braces_of_order(4).map_err(err).and_then(|c| ensure(c.len() == 4, format!("{} classes", c.len()))),
        ),
        ("canonical form ignores labels", {
            let s = six_point_solution();
            let f = Permutation::from_images(vec![5, 4, 3, 2, 1, 0]).unwrap();
            ensure(canonicalize_solution(&s) == canonicalize_solution(&s.relabelled(&f)), "forms differ")
        }),
    ]
}

fn format_suite() -> Vec<(&'static str, Outcome)> {
    let s = six_point_solution();
    let b = sym3_brace();
    vec![
        ("solution round trip", parse_solution(&write_solution(&s, &[])).map_err(err).and_then(|t| ensure(t == s, "differs"))),
        ("brace round trip", parse_brace(&write_brace(&b, &[])).map_err(err).and_then(|c| ensure(c == b, "differs"))),
        (
            "malformed input is located",
            ensure(parse_solution("n 2\nsigma\n0 1\n0 q\n").is_err_and(|e| e.is_syntax()), "no syntax error"),
        ),
    ]
}

pub fn run_suite(suite: Suite) -> Vec<Check> {
    let results = match suite {
        Suite::CoreAlgebra => core_algebra(),
        Suite::Brace => brace_suite(),
        Suite::Solution => solution_suite(),
        Suite::Bridge => bridge_suite(),
        Suite::Constructions => constructions_suite(),
        Suite::Enumerate => enumerate_suite(),
        Suite::Format => format_suite(),
    };
    results
        .into_iter()
        .map(|(name, r)| Check { name, passed: r.is_ok(), detail: r.err().unwrap_or_default() })
        .collect()
}
