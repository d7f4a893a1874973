//! Checks of structural statements over every object of the enumerated
//! corpus. The first counterexample stops a sweep and is reported.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::braces::braces_of_order;
use super::solutions::{enumerate_solutions, MAX_SOLUTION_SIZE};
use super::EnumerateError;
use crate::brace::{
    from_radical_ring, socle, theorem_square_report, to_radical_ring, trivial_brace, BraceError, FiniteBrace,
};
use crate::bridge::{double_cover_solution, iyb_quotient_brace, retract_equals_socle_quotient, solution_from_brace};
use crate::constructions::{ault_watters_brace, class2_brace, materialize_aug_brace, six_point_solution, sym3_brace};
use crate::group::named;
use crate::solution::{solution_isomorphic, FiniteSolution, Mpl};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// Abelian `𝒢(X, r)` implies finite multipermutation level.
    AbelianRetractable,
    /// A square-free solution with at least two points is decomposable.
    SquarefreeDecomposable,
    /// `Ret(G, r)` is the solution of `G/Soc(G)`.
    RetractSocle,
    /// A nontrivial two-sided brace has nonzero socle and a solution of
    /// finite multipermutation level.
    TwosidedSocle,
    /// The double cover retracts to the brace's solution and has IYB group
    /// isomorphic to the multiplicative group.
    DoubleCover,
    /// The structure report holds for every square-free brace.
    SquareStructure,
    /// Two-sided braces and radical rings correspond.
    RadicalRoundtrip,
}

pub const THEOREMS: [Theorem; 7] = [
    Theorem::AbelianRetractable,
    Theorem::SquarefreeDecomposable,
    Theorem::RetractSocle,
    Theorem::TwosidedSocle,
    Theorem::DoubleCover,
    Theorem::SquareStructure,
    Theorem::RadicalRoundtrip,
];

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::AbelianRetractable => "abelian-retractable",
            Theorem::SquarefreeDecomposable => "squarefree-decomposable",
            Theorem::RetractSocle => "retract-socle",
            Theorem::TwosidedSocle => "twosided-socle",
            Theorem::DoubleCover => "double-cover",
            Theorem::SquareStructure => "square-structure",
            Theorem::RadicalRoundtrip => "radical-roundtrip",
        }
    }

    pub fn on_solutions(self) -> bool {
        matches!(self, Theorem::AbelianRetractable | Theorem::SquarefreeDecomposable)
    }

    /// Default size bound: solution size or brace order.
    pub fn default_max(self) -> usize {
        match self {
            Theorem::AbelianRetractable => 4,
            Theorem::SquarefreeDecomposable => 5,
            _ => 8,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = EnumerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        THEOREMS
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| EnumerateError::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SweepReport {
    pub theorem: Theorem,
    pub max: usize,
    /// Whether every labelled solution was checked rather than one per class.
    pub raw: bool,
    pub checked: usize,
    /// Objects satisfying the hypothesis.
    pub applicable: usize,
    pub counterexamples: usize,
    pub witness: Option<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.counterexamples == 0
    }
}

/// Outcome for one object: `None` if the hypothesis fails, otherwise whether
/// the conclusion holds.
type Verdict = Result<Option<bool>, String>;

fn solution_verdict(theorem: Theorem, s: &FiniteSolution) -> Verdict {
    match theorem {
        Theorem::AbelianRetractable => {
            let g = s.yb_group().map_err(|e| e.to_string())?;
            Ok(g.is_abelian().then(|| s.mpl().is_finite()))
        }
        Theorem::SquarefreeDecomposable => {
            Ok((s.is_square_free() && s.size() >= 2).then(|| s.find_decomposition().is_some()))
        }
        _ => Err(format!("{theorem} is not a statement about solutions")),
    }
}

fn brace_verdict(theorem: Theorem, b: &FiniteBrace) -> Verdict {
    let e = |x: &dyn fmt::Display| x.to_string();
    match theorem {
        Theorem::RetractSocle => retract_equals_socle_quotient(b).map(Some).map_err(|x| e(&x)),
        Theorem::TwosidedSocle => {
            if !b.is_two_sided() || b.order() == 1 {
                return Ok(None);
            }
            let soc = socle(b).map_err(|x| e(&x))?;
            let s = solution_from_brace(b).map_err(|x| e(&x))?;
            Ok(Some(soc.len() > 1 && s.mpl().is_finite()))
        }
        Theorem::DoubleCover => {
            if !b.is_left() {
                return Ok(None);
            }
            let (x, _) = double_cover_solution(b).map_err(|x| e(&x))?;
            let s = solution_from_brace(b).map_err(|x| e(&x))?;
            let ret = x.retract().quotient;
            let g = x.yb_group().map_err(|x| e(&x))?;
            Ok(Some(solution_isomorphic(&ret, &s).is_some() && g.cayley().is_isomorphic(b.multiplicative())))
        }
        Theorem::SquareStructure => {
            if !b.is_left() || (0..b.order()).any(|a| b.lambda(a, a) != a) {
                return Ok(None);
            }
            Ok(Some(theorem_square_report(b).is_ok()))
        }
        Theorem::RadicalRoundtrip => {
            if !b.is_two_sided() {
                return Ok(None);
            }
            let r = to_radical_ring(b).map_err(|x| e(&x))?;
            let back = from_radical_ring(&r.star_rows(), &b.add_rows()).map_err(|x| e(&x))?;
            Ok(Some(back == *b))
        }
        _ => Err(format!("{theorem} is not a statement about braces")),
    }
}

/// Named braces included in every brace sweep: the Sym₃ brace, trivial
/// braces, the materialized augmentation ideals, the class-2 and
/// Ault–Watters braces on the dihedral and quaternion groups of order 8,
/// and the IYB brace of the six-point solution.
pub fn fixture_braces() -> Result<Vec<(String, FiniteBrace)>, BraceError> {
    let mut out = vec![
        ("sym3".to_string(), sym3_brace()),
        ("trivial-z6".to_string(), trivial_brace(&named::cyclic(6))?),
        ("trivial-z2^3".to_string(), trivial_brace(&named::abelian(&[2, 2, 2]))?),
    ];
    for n in 1..=3 {
        let b = materialize_aug_brace(n).map_err(|e| BraceError::Internal(e.to_string()))?;
        out.push((format!("aug-{n}"), b));
    }
    let internal = |e: &dyn fmt::Display| BraceError::Internal(e.to_string());
    for (name, g) in [("dihedral-8", named::dihedral(4)), ("quaternion-8", named::quaternion())] {
        out.push((format!("class2-{name}"), class2_brace(&g).map_err(|e| internal(&e))?.0));
    }
    out.push(("class2-heisenberg-8".into(), class2_brace(&named::heisenberg(8)).map_err(|e| internal(&e))?.0));
    out.push((
        "ault-watters-dihedral-8".into(),
        ault_watters_brace(&named::dihedral(4), &[0, 2], &[1, 4]).map_err(|e| internal(&e))?,
    ));
    out.push((
        "ault-watters-quaternion-8".into(),
        ault_watters_brace(&named::quaternion(), &[0, 1], &[2, 4]).map_err(|e| internal(&e))?,
    ));
    let iyb = iyb_quotient_brace(&six_point_solution()).map_err(|e| internal(&e))?;
    out.push(("iyb-six-point".into(), iyb.brace));
    Ok(out)
}

/// Braces of every order up to `max` (one per class) followed by the fixtures.
pub fn brace_corpus(max: usize) -> Result<Vec<(String, FiniteBrace)>, EnumerateError> {
    let mut out = Vec::new();
    for n in 1..=max {
        for (i, b) in braces_of_order(n)?.into_iter().enumerate() {
            out.push((format!("order-{n}#{i}"), b));
        }
    }
    out.extend(fixture_braces().map_err(|e| EnumerateError::Internal(e.to_string()))?);
    Ok(out)
}

fn tally<T: Sync>(
    theorem: Theorem,
    max: usize,
    raw: bool,
    items: &[(String, T)],
    verdict: impl Fn(&T) -> Verdict + Sync,
    describe: impl Fn(&T) -> String,
) -> Result<SweepReport, EnumerateError> {
    let verdicts: Vec<Verdict> = items.par_iter().map(|(_, x)| verdict(x)).collect();
    let mut applicable = 0;
    for ((name, item), v) in items.iter().zip(verdicts) {
        match v.map_err(EnumerateError::Internal)? {
            None => {}
            Some(true) => applicable += 1,
            Some(false) => {
                return Ok(SweepReport {
                    theorem,
                    max,
                    raw,
                    checked: items.len(),
                    applicable: applicable + 1,
                    counterexamples: 1,
                    witness: Some(format!("{name}: {}", describe(item))),
                })
            }
        }
    }
    Ok(SweepReport {
        theorem,
        max,
        raw,
        checked: items.len(),
        applicable,
        counterexamples: 0,
        witness: None,
    })
}

fn describe_solution(s: &FiniteSolution) -> String {
    let rows: Vec<String> = s
        .rows()
        .iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    format!("sigma [{}]", rows.join("; "))
}

fn describe_brace(b: &FiniteBrace) -> String {
    let fmt_rows = |rows: Vec<Vec<usize>>| {
        rows.iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("; ")
    };
    format!("add [{}] mul [{}]", fmt_rows(b.add_rows()), fmt_rows(b.mul_rows()))
}

/// Runs `theorem` over all solutions of size `≤ max` (one per class unless
/// `raw`) or over [`brace_corpus`]`(max)`.
pub fn corpus_sweep(theorem: Theorem, max: usize, raw: bool) -> Result<SweepReport, EnumerateError> {
    if theorem.on_solutions() {
        if max > MAX_SOLUTION_SIZE {
            return Err(EnumerateError::SizeCap { n: max, max: MAX_SOLUTION_SIZE });
        }
        let mut items = Vec::new();
        for n in 1..=max {
            for (i, s) in enumerate_solutions(n, !raw)?.into_iter().enumerate() {
                items.push((format!("n={n}#{i}"), s));
            }
        }
        tally(theorem, max, raw, &items, |s| solution_verdict(theorem, s), describe_solution)
    } else {
        let items = brace_corpus(max)?;
        tally(theorem, max, false, &items, |b| brace_verdict(theorem, b), describe_brace)
    }
}

/// One census line per solution class.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CensusRecord {
    pub n: usize,
    pub id: usize,
    pub sigma: Vec<Vec<usize>>,
    pub square_free: bool,
    pub decomposable: bool,
    pub abelian_group: bool,
    pub mpl: Mpl,
    pub group_order: usize,
}

impl fmt::Display for CensusRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .sigma
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        let mpl = match self.mpl {
            Mpl::Level(k) => k.to_string(),
            Mpl::Irretractable { size } => format!("irretractable@{size}"),
        };
        write!(
            f,
            "n={} id={} sigma={} square_free={} decomposable={} abelian_G={} mpl={} G_order={}",
            self.n,
            self.id,
            rows.join(";"),
            self.square_free as u8,
            self.decomposable as u8,
            self.abelian_group as u8,
            mpl,
            self.group_order
        )
    }
}

pub fn census(n: usize) -> Result<Vec<CensusRecord>, EnumerateError> {
    let classes = enumerate_solutions(n, true)?;
    classes
        .par_iter()
        .enumerate()
        .map(|(id, s)| {
            let g = s.yb_group().map_err(|e| EnumerateError::Internal(e.to_string()))?;
            Ok(CensusRecord {
                n,
                id,
                sigma: s.rows(),
                square_free: s.is_square_free(),
                decomposable: s.find_decomposition().is_some(),
                abelian_group: g.is_abelian(),
                mpl: s.mpl(),
                group_order: g.order(),
            })
        })
        .collect()
}
