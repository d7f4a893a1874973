//! Finite involutive non-degenerate set-theoretic solutions.
//!
//! A solution on `X = {0..n}` is stored as its σ-table; `r(x, y) = (σ_x(y), γ_y(x))`
//! with `γ_y(x) = σ⁻¹_{σ_x(y)}(x)`.

mod iso;

pub use iso::{point_invariants, solution_isomorphic};

use rayon::prelude::*;
use thiserror::Error;

use crate::closure::{closure_with_witnesses, orbits, ClosureError, PermGroup, CLOSURE_CAP};
use crate::perm::{PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolutionError {
    #[error("empty solution")]
    Empty,
    #[error("sigma table has {rows} rows, expected {expected}")]
    RowCount { rows: usize, expected: usize },
    #[error("sigma_{x} is not a permutation: {source}")]
    NotPermutation { x: usize, source: PermError },
    #[error("r is not involutive at ({x}, {y})")]
    NotInvolutive { x: usize, y: usize },
    #[error("braid relation fails at ({x}, {y}, {z})")]
    Braid { x: usize, y: usize, z: usize },
    #[error("gamma_{y} is not a bijection")]
    GammaNotBijective { y: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("subset is not invariant: {what}_{x} moves {y} outside")]
    NotInvariant { what: &'static str, x: usize, y: usize },
    #[error("map is not a solution homomorphism at ({x}, {y})")]
    NotHomomorphism { x: usize, y: usize },
    #[error("map is not onto")]
    NotOnto,
    #[error("map sends {x} outside the target")]
    MapOutOfRange { x: usize },
    #[error("induced map on retracts is not well defined at {x}, {y}")]
    NotWellDefined { x: usize, y: usize },
    #[error(transparent)]
    Closure(#[from] ClosureError),
}

/// A validated solution.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSolution {
    sigma: Vec<Permutation>,
    sigma_inv: Vec<Permutation>,
}

fn sigma_of(rows: &[Vec<usize>], x: usize, y: usize) -> usize {
    rows[x][y]
}

fn invert_rows(rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    rows.iter()
        .map(|r| {
            let mut inv = vec![0; r.len()];
            for (i, &v) in r.iter().enumerate() {
                inv[v] = i;
            }
            inv
        })
        .collect()
}

/// Witness of the first failure of the direct definition: `r² = id` on all
/// pairs, then the braid relation on all triples, then bijectivity of every `γ_y`.
/// `rows` must already be permutations.
pub fn direct_verdict(rows: &[Vec<usize>]) -> Result<(), SolutionError> {
    let n = rows.len();
    let inv = invert_rows(rows);
    let r = |x: usize, y: usize| -> (usize, usize) {
        let u = sigma_of(rows, x, y);
        (u, inv[u][x])
    };
    for x in 0..n {
        for y in 0..n {
            let (u, v) = r(x, y);
            if r(u, v) != (x, y) {
                return Err(SolutionError::NotInvolutive { x, y });
            }
        }
    }
    let witness = (0..n).into_par_iter().find_map_first(|x| {
        for y in 0..n {
            for z in 0..n {
                // r1 r2 r1
                let (a, b) = r(x, y);
                let (b, c) = r(b, z);
                let (a, b) = r(a, b);
                let left = (a, b, c);
                // r2 r1 r2
                let (b, c) = r(y, z);
                let (a, b) = r(x, b);
                let (b, c) = r(b, c);
                if left != (a, b, c) {
                    return Some((x, y, z));
                }
            }
        }
        None
    });
    if let Some((x, y, z)) = witness {
        return Err(SolutionError::Braid { x, y, z });
    }
    for y in 0..n {
        let mut seen = vec![false; n];
        for x in 0..n {
            let g = inv[rows[x][y]][x];
            if std::mem::replace(&mut seen[g], true) {
                return Err(SolutionError::GammaNotBijective { y });
            }
        }
    }
    Ok(())
}

/// Witness of the first failure of `σ_x σ_{σ_x⁻¹(y)} = σ_y σ_{σ_y⁻¹(x)}`
/// (with `r² = id`, which holds for any σ-table once γ is derived).
pub fn criterion_verdict(rows: &[Vec<usize>]) -> Option<(usize, usize)> {
    let n = rows.len();
    let inv = invert_rows(rows);
    for x in 0..n {
        for y in 0..n {
            let p = inv[x][y];
            let q = inv[y][x];
            if (0..n).any(|z| rows[x][rows[p][z]] != rows[y][rows[q][z]]) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Validates a σ-table (row `x` lists the images of `σ_x`).
///
/// The direct definition and the permutation criterion are both evaluated;
/// disagreement is reported as an internal error.
pub fn validate_solution(rows: &[Vec<usize>]) -> Result<FiniteSolution, SolutionError> {
    let n = rows.len();
    if n == 0 {
        return Err(SolutionError::Empty);
    }
    let mut sigma = Vec::with_capacity(n);
    for (x, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(SolutionError::NotPermutation {
                x,
                source: PermError::DegreeMismatch { left: n, right: row.len() },
            });
        }
        let p = Permutation::from_images(row.clone()).map_err(|source| SolutionError::NotPermutation { x, source })?;
        sigma.push(p);
    }
    let direct = direct_verdict(rows);
    let criterion = criterion_verdict(rows);
    match (&direct, criterion) {
        (Ok(()), None) => Ok(FiniteSolution::from_sigma_unchecked(sigma)),
        (Err(e), Some(_)) => Err(e.clone()),
        (Ok(()), Some((x, y))) => Err(SolutionError::Internal(format!(
            "direct check passes but the permutation criterion fails at ({x}, {y})"
        ))),
        (Err(e), None) => Err(SolutionError::Internal(format!(
            "permutation criterion passes but the direct check fails: {e}"
        ))),
    }
}

/// How many retractions reach a single point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mpl {
    Level(usize),
    /// Retraction stopped shrinking at this size (greater than 1).
    Irretractable { size: usize },
}

impl Mpl {
    pub fn is_finite(self) -> bool {
        matches!(self, Mpl::Level(_))
    }
}

impl std::fmt::Display for Mpl {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mpl::Level(m) => write!(f, "{m}"),
            Mpl::Irretractable { size } => write!(f, "irretractable at size {size}"),
        }
    }
}

/// One retraction: the σ-classes, the quotient and the projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RetractionStep {
    /// Classes of points with equal σ, ordered by smallest member.
    pub classes: Vec<Vec<usize>>,
    pub quotient: FiniteSolution,
    /// `projection[x]` is the class index of `x`.
    pub projection: Vec<usize>,
}

impl FiniteSolution {
    pub(crate) fn from_sigma_unchecked(sigma: Vec<Permutation>) -> Self {
        let sigma_inv = sigma.iter().map(Permutation::inverse).collect();
        FiniteSolution { sigma, sigma_inv }
    }

    /// Validates a list of permutations as a σ-table.
    pub fn from_permutations(sigma: Vec<Permutation>) -> Result<Self, SolutionError> {
        let rows: Vec<Vec<usize>> = sigma.iter().map(|p| p.images().to_vec()).collect();
        validate_solution(&rows)
    }

    /// `σ_x = id` for every `x`, so `r(x, y) = (y, x)`.
    pub fn trivial(n: usize) -> Self {
        Self::from_sigma_unchecked(vec![Permutation::identity(n); n])
    }

    /// Permutation solution `σ_x = p` for every `x`.
    pub fn permutation_solution(p: &Permutation) -> Self {
        Self::from_sigma_unchecked(vec![p.clone(); p.degree()])
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.sigma.len()
    }

    #[inline]
    pub fn sigma(&self, x: usize) -> &Permutation {
        &self.sigma[x]
    }

    #[inline]
    pub fn sigma_inv(&self, x: usize) -> &Permutation {
        &self.sigma_inv[x]
    }

    pub fn sigmas(&self) -> &[Permutation] {
        &self.sigma
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.sigma.iter().map(|p| p.images().to_vec()).collect()
    }

    /// `γ_y(x) = σ⁻¹_{σ_x(y)}(x)`.
    #[inline]
    pub fn gamma_apply(&self, y: usize, x: usize) -> usize {
        self.sigma_inv[self.sigma[x].apply(y)].apply(x)
    }

    pub fn gamma(&self, y: usize) -> Permutation {
        Permutation::from_images_unchecked((0..self.size()).map(|x| self.gamma_apply(y, x)).collect())
    }

    #[inline]
    pub fn apply_r(&self, x: usize, y: usize) -> (usize, usize) {
        (self.sigma[x].apply(y), self.gamma_apply(y, x))
    }

    /// `r(x, x) = (x, x)` for all `x`, i.e. `σ_x(x) = x`.
    pub fn is_square_free(&self) -> bool {
        (0..self.size()).all(|x| self.sigma[x].apply(x) == x)
    }

    /// The diagonal map `T(x) = σ_x⁻¹(x)`.
    pub fn diagonal(&self) -> Permutation {
        Permutation::from_images_unchecked((0..self.size()).map(|x| self.sigma_inv[x].apply(x)).collect())
    }

    /// `S^f`: the solution transported along the bijection `f`,
    /// `σ'_{f(x)} = f σ_x f⁻¹`.
    pub fn relabelled(&self, f: &Permutation) -> FiniteSolution {
        let n = self.size();
        let mut sigma = vec![Permutation::identity(n); n];
        for x in 0..n {
            sigma[f.apply(x)] = self.sigma[x].conjugate_by(f);
        }
        Self::from_sigma_unchecked(sigma)
    }

    pub fn retract(&self) -> RetractionStep {
        let n = self.size();
        let mut projection = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut reps: Vec<usize> = Vec::new();
        for x in 0..n {
            if projection[x] != usize::MAX {
                continue;
            }
            let k = classes.len();
            let class: Vec<usize> = (x..n).filter(|&y| self.sigma[y] == self.sigma[x]).collect();
            for &y in &class {
                projection[y] = k;
            }
            classes.push(class);
            reps.push(x);
        }
        let m = classes.len();
        let sigma: Vec<Vec<usize>> = reps
            .iter()
            .map(|&x| reps.iter().map(|&y| projection[self.sigma[x].apply(y)]).collect())
            .collect();
        let quotient = validate_solution(&sigma).expect("retract of a solution is a solution");
        debug_assert_eq!(quotient.size(), m);
        RetractionStep {
            classes,
            quotient,
            projection,
        }
    }

    /// Multipermutation level, or the size at which retraction stalls.
    pub fn mpl(&self) -> Mpl {
        let mut current = self.clone();
        let mut level = 0;
        while current.size() > 1 {
            let next = current.retract().quotient;
            if next.size() == current.size() {
                return Mpl::Irretractable { size: current.size() };
            }
            current = next;
            level += 1;
        }
        Mpl::Level(level)
    }

    /// `𝒢(X, r)`, the group generated by the σ_x, with `e_x` witnessing `σ_x`.
    pub fn yb_group(&self) -> Result<PermGroup, SolutionError> {
        self.yb_group_capped(CLOSURE_CAP)
    }

    pub fn yb_group_capped(&self, cap: usize) -> Result<PermGroup, SolutionError> {
        let n = self.size();
        let witnesses: Vec<Vec<i64>> = (0..n)
            .map(|x| {
                let mut e = vec![0; n];
                e[x] = 1;
                e
            })
            .collect();
        Ok(closure_with_witnesses(n, &self.sigma, &witnesses, cap)?)
    }

    /// Restriction to a subset invariant under every `σ_x` and `γ_x`.
    /// Points of the restriction are the members of `y` in increasing order.
    pub fn restrict(&self, subset: &[usize]) -> Result<(FiniteSolution, Vec<usize>), SolutionError> {
        let n = self.size();
        let mut member = vec![false; n];
        for &y in subset {
            member[y] = true;
        }
        for x in 0..n {
            for y in (0..n).filter(|&y| member[y]) {
                if !member[self.sigma[x].apply(y)] {
                    return Err(SolutionError::NotInvariant { what: "sigma", x, y });
                }
                if !member[self.gamma_apply(x, y)] {
                    return Err(SolutionError::NotInvariant { what: "gamma", x, y });
                }
            }
        }
        let elems: Vec<usize> = (0..n).filter(|&y| member[y]).collect();
        let mut pos = vec![usize::MAX; n];
        for (i, &e) in elems.iter().enumerate() {
            pos[e] = i;
        }
        let rows: Vec<Vec<usize>> = elems
            .iter()
            .map(|&x| elems.iter().map(|&y| pos[self.sigma[x].apply(y)]).collect())
            .collect();
        Ok((validate_solution(&rows)?, elems))
    }

    /// Orbits of `X` under all `σ_x` and `γ_x`.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut gens = self.sigma.clone();
        gens.extend((0..self.size()).map(|y| self.gamma(y)));
        orbits(self.size(), &gens)
    }

    /// Split into two non-empty invariant parts: the orbit of 0 and the rest.
    pub fn find_decomposition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let orbits = self.orbits();
        if orbits.len() < 2 {
            return None;
        }
        let first = orbits[0].clone();
        let mut rest: Vec<usize> = orbits[1..].concat();
        rest.sort_unstable();
        Some((first, rest))
    }
}

pub fn validate(rows: &[Vec<usize>]) -> Result<FiniteSolution, SolutionError> {
    validate_solution(rows)
}

pub fn gamma(s: &FiniteSolution, y: usize) -> Permutation {
    s.gamma(y)
}

pub fn apply_r(s: &FiniteSolution, x: usize, y: usize) -> (usize, usize) {
    s.apply_r(x, y)
}

pub fn retract(s: &FiniteSolution) -> RetractionStep {
    s.retract()
}

pub fn mpl(s: &FiniteSolution) -> Mpl {
    s.mpl()
}

pub fn invariant_subset_restriction(s: &FiniteSolution, y: &[usize]) -> Result<FiniteSolution, SolutionError> {
    s.restrict(y).map(|(r, _)| r)
}

/// Checks that `f: S → T` satisfies `(f × f) r = r' (f × f)`.
pub fn solution_hom_check(f: &[usize], s: &FiniteSolution, t: &FiniteSolution) -> Result<(), SolutionError> {
    if f.len() != s.size() {
        return Err(SolutionError::RowCount { rows: f.len(), expected: s.size() });
    }
    if let Some(x) = (0..s.size()).find(|&x| f[x] >= t.size()) {
        return Err(SolutionError::MapOutOfRange { x });
    }
    for x in 0..s.size() {
        for y in 0..s.size() {
            let (u, v) = s.apply_r(x, y);
            if (f[u], f[v]) != t.apply_r(f[x], f[y]) {
                return Err(SolutionError::NotHomomorphism { x, y });
            }
        }
    }
    Ok(())
}

/// For an onto homomorphism `f: S → T`, the induced map `Ret(S) → Ret(T)`,
/// checked to be well defined, a homomorphism, and to commute with the
/// projections.
pub fn push_forward_retract(f: &[usize], s: &FiniteSolution, t: &FiniteSolution) -> Result<Vec<usize>, SolutionError> {
    solution_hom_check(f, s, t)?;
    let mut hit = vec![false; t.size()];
    for &v in f {
        hit[v] = true;
    }
    if hit.iter().any(|&h| !h) {
        return Err(SolutionError::NotOnto);
    }
    let rs = s.retract();
    let rt = t.retract();
    let mut induced = vec![usize::MAX; rs.classes.len()];
    for x in 0..s.size() {
        let c = rs.projection[x];
        let image = rt.projection[f[x]];
        if induced[c] == usize::MAX {
            induced[c] = image;
        } else if induced[c] != image {
            return Err(SolutionError::NotWellDefined { x: rs.classes[c][0], y: x });
        }
    }
    for x in 0..s.size() {
        if induced[rs.projection[x]] != rt.projection[f[x]] {
            return Err(SolutionError::Internal("retract square does not commute".into()));
        }
    }
    solution_hom_check(&induced, &rs.quotient, &rt.quotient)
        .map_err(|e| SolutionError::Internal(format!("induced retract map: {e}")))?;
    Ok(induced)
}
