//! The augmentation ideal `R = ω(F₂[G])` of `G = (Z/2)ⁿ` as a two-sided brace.
//!
//! An element is a `u64` whose bit `g` is the coefficient of the group
//! element `g ∈ {0, …, 2ⁿ−1}` (group law XOR). Members of `R` have an even
//! number of set bits.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

use crate::brace::{BraceError, FiniteBrace};
use crate::f2::{BitVec, F2Matrix};
use crate::group::CayleyGroup;
use crate::solution::Mpl;

pub const AUG_MAX_RANK: usize = 5;
pub const AUG_MAX_MATERIALIZED: usize = 3;
const SAMPLES: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AugError {
    #[error("rank n={n} out of range 1..={max}")]
    RankOutOfRange { n: usize, max: usize },
    #[error("power m={m} out of range 1..={max}")]
    PowerOutOfRange { m: usize, max: usize },
    #[error("brace law fails at ({a:#x}, {b:#x}, {c:#x})")]
    BraceLaw { a: u64, b: u64, c: u64 },
    #[error("structure assertion fails: {0}")]
    Structure(String),
    #[error(transparent)]
    Brace(#[from] BraceError),
}

/// `ω(F₂[(Z/2)ⁿ])` with element-level operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct F2IdealBrace {
    n: usize,
}

const SWAP_MASKS: [u64; 5] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
];

/// Moves the coefficient at `h` to `h ^ g`.
fn translate(mut b: u64, g: usize) -> u64 {
    for (k, mask) in SWAP_MASKS.iter().enumerate() {
        if g >> k & 1 == 1 {
            let s = 1 << k;
            b = ((b & mask) << s) | ((b >> s) & mask);
        }
    }
    b
}

fn to_bitvec(width: usize, a: u64) -> BitVec {
    BitVec::from_u64(width, a)
}

impl F2IdealBrace {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `|G| = 2ⁿ`, the length of a coefficient vector.
    pub fn width(&self) -> usize {
        1 << self.n
    }

    pub fn dim(&self) -> usize {
        self.width() - 1
    }

    pub fn order(&self) -> u128 {
        1u128 << self.dim()
    }

    pub fn contains(&self, a: u64) -> bool {
        (self.width() == 64 || a >> self.width() == 0) && a.count_ones() % 2 == 0
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        a ^ b
    }

    /// Group-algebra product: `(ab)_g = Σ_h a_h b_{g⊕h}`.
    pub fn ring_mul(&self, a: u64, b: u64) -> u64 {
        let mut out = 0;
        let mut rest = a;
        while rest != 0 {
            let g = rest.trailing_zeros() as usize;
            out ^= translate(b, g);
            rest &= rest - 1;
        }
        out
    }

    pub fn circle(&self, a: u64, b: u64) -> u64 {
        self.ring_mul(a, b) ^ a ^ b
    }

    pub fn lambda(&self, a: u64, b: u64) -> u64 {
        self.ring_mul(a, b) ^ b
    }

    /// The basis `{g + 1 : g ≠ 0}` of `R`.
    pub fn basis(&self) -> Vec<u64> {
        (1..self.width()).map(|g| 1 | 1 << g).collect()
    }

    /// `Σ_g g`, the generator of `Rⁿ`.
    pub fn all_ones(&self) -> u64 {
        if self.width() == 64 {
            u64::MAX
        } else {
            (1 << self.width()) - 1
        }
    }

    /// Dense index: the bits above the identity coefficient.
    pub fn index_of(&self, a: u64) -> usize {
        (a >> 1) as usize
    }

    pub fn element(&self, i: usize) -> u64 {
        let i = i as u64;
        (i << 1) | (i.count_ones() as u64 & 1)
    }

    pub fn random_element(&self, rng: &mut impl Rng) -> u64 {
        self.element(rng.gen_range(0..1usize << self.dim()))
    }

    fn law_fails(&self, a: u64, b: u64, c: u64) -> bool {
        let left = self.circle(a, b ^ c) ^ a != self.circle(a, b) ^ self.circle(a, c);
        let right = self.circle(a ^ b, c) ^ c != self.circle(a, c) ^ self.circle(b, c);
        let assoc = self.circle(self.circle(a, b), c) != self.circle(a, self.circle(b, c));
        left || right || assoc
    }

    fn check(&self) -> Result<(), AugError> {
        let elems: Vec<u64> = if self.n <= AUG_MAX_MATERIALIZED {
            (0..1usize << self.dim()).map(|i| self.element(i)).collect()
        } else {
            Vec::new()
        };
        if !elems.is_empty() {
            for &a in &elems {
                if self.lambda(a, a) != a {
                    return Err(AugError::Structure(format!("lambda_a(a) != a at {a:#x}")));
                }
            }
            let bad = crate::brace::first_failing_triple(elems.len(), |a, b, c| {
                self.law_fails(elems[a], elems[b], elems[c])
            });
            if let Some((a, b, c)) = bad {
                return Err(AugError::BraceLaw { a: elems[a], b: elems[b], c: elems[c] });
            }
            return Ok(());
        }
        let mut rng = StdRng::seed_from_u64(self.n as u64);
        for _ in 0..SAMPLES {
            let (a, b, c) = (self.random_element(&mut rng), self.random_element(&mut rng), self.random_element(&mut rng));
            if self.lambda(a, a) != a {
                return Err(AugError::Structure(format!("lambda_a(a) != a at {a:#x}")));
            }
            if self.law_fails(a, b, c) {
                return Err(AugError::BraceLaw { a, b, c });
            }
        }
        Ok(())
    }

    fn matrix(&self, vs: impl IntoIterator<Item = u64>) -> F2Matrix {
        let w = self.width();
        F2Matrix::from_rows(w, vs.into_iter().map(|v| to_bitvec(w, v)).collect())
            .unwrap()
            .reduce()
    }
}

fn check_rank(n: usize) -> Result<(), AugError> {
    if (1..=AUG_MAX_RANK).contains(&n) {
        Ok(())
    } else {
        Err(AugError::RankOutOfRange { n, max: AUG_MAX_RANK })
    }
}

/// The brace `ω(F₂[(Z/2)ⁿ])`, validated exhaustively for `n ≤ 3` and on
/// seeded random triples otherwise.
pub fn aug_brace(n: usize) -> Result<F2IdealBrace, AugError> {
    check_rank(n)?;
    let r = F2IdealBrace { n };
    r.check()?;
    Ok(r)
}

/// `R¹, R², …, R^{n+1}` as reduced bases, with the strict descent and the
/// shape of the last two terms asserted.
fn power_chain(r: &F2IdealBrace) -> Result<Vec<F2Matrix>, AugError> {
    let one = r.matrix(r.basis());
    let mut chain = vec![one.clone()];
    for _ in 0..r.n() {
        let last = chain.last().unwrap();
        let next = crate::f2::f2_product_span(last, &one, |a, b| to_bitvec(r.width(), r.ring_mul(a.to_u64(), b.to_u64())))
            .map_err(|e| AugError::Structure(e.to_string()))?;
        if next.rank() >= last.rank() {
            return Err(AugError::Structure(format!("R^{} does not shrink", chain.len() + 1)));
        }
        chain.push(next);
    }
    if chain[0].rank() != r.dim() {
        return Err(AugError::Structure("R has the wrong dimension".into()));
    }
    if chain[r.n()].rank() != 0 {
        return Err(AugError::Structure("R^(n+1) != 0".into()));
    }
    if !chain[r.n() - 1].same_span(&r.matrix([r.all_ones()])) {
        return Err(AugError::Structure("R^n is not spanned by the all-ones vector".into()));
    }
    Ok(chain)
}

/// Reduced basis of `R^m`, `1 ≤ m ≤ n+1`.
pub fn ideal_power_basis(n: usize, m: usize) -> Result<F2Matrix, AugError> {
    check_rank(n)?;
    if !(1..=n + 1).contains(&m) {
        return Err(AugError::PowerOutOfRange { m, max: n + 1 });
    }
    let chain = power_chain(&F2IdealBrace { n })?;
    Ok(chain[m - 1].clone())
}

/// `{α ∈ R : αβ ∈ J for all β ∈ R}` for an ideal `J` given by a reduced basis.
fn annihilator_mod(r: &F2IdealBrace, j: &F2Matrix) -> F2Matrix {
    let w = r.width();
    let basis = r.basis();
    let rows: Vec<BitVec> = basis
        .iter()
        .map(|&a| {
            basis
                .iter()
                .map(|&b| j.residue(&to_bitvec(w, r.ring_mul(a, b))))
                .reduce(|x, y| x.concat(&y))
                .unwrap()
        })
        .collect();
    let m = F2Matrix::from_rows(rows[0].width(), rows).unwrap();
    let kernel = m.left_kernel();
    r.matrix(kernel.rows().iter().map(|c| {
        (0..basis.len()).filter(|&i| c.get(i)).fold(0, |acc, i| acc ^ basis[i])
    }))
}

/// Structural retraction data for `ω(F₂[(Z/2)ⁿ])`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct AugMplReport {
    pub n: usize,
    pub mpl: Mpl,
    /// Dimensions of `R^1, …, R^{n+1}`.
    pub power_dims: Vec<usize>,
    /// Dimensions of `J_0 = 0 ⊆ J_1 ⊆ …`, where `J_{k+1}/J_k = Soc(R/J_k)`.
    pub socle_chain_dims: Vec<usize>,
    /// `J_k = R^{n+1−k}` at every step, in particular `Soc(R) = Rⁿ`.
    pub socle_chain_is_power_chain: bool,
    pub square_free: bool,
    /// `λ_α² = id` and `λ_α λ_β = λ_β λ_α`, checked on basis pairs (both
    /// conditions are additive in each argument).
    pub lambda_group_elementary_abelian: bool,
    /// `|{λ_α}| = |R / Soc(R)|`.
    pub lambda_group_order: u128,
}

/// Multipermutation level of the associated solution, computed through
/// annihilator chains on ideal-power bases without listing elements.
pub fn aug_brace_mpl(n: usize) -> Result<AugMplReport, AugError> {
    let r = aug_brace(n)?;
    let powers = power_chain(&r)?;
    let mut chain = vec![F2Matrix::new(r.width())];
    let mut matches = true;
    let mpl = loop {
        let j = chain.last().unwrap();
        let k = chain.len() - 1;
        matches &= j.same_span(&powers[n - k]);
        if j.rank() == r.dim() {
            break Mpl::Level(k);
        }
        let next = annihilator_mod(&r, j);
        if next.rank() == j.rank() {
            let size = 1usize << (r.dim() - j.rank());
            break Mpl::Irretractable { size };
        }
        chain.push(next);
    };
    if !matches {
        return Err(AugError::Structure("Soc(R/R^m) != R^(m-1)/R^m".into()));
    }
    if mpl != Mpl::Level(n) {
        return Err(AugError::Structure(format!("retraction level {mpl} differs from n")));
    }
    let basis = r.basis();
    let square_free = basis.iter().all(|&a| r.ring_mul(a, a) == 0);
    // λ_α = id + M_α, so λ_α² = id + M_{α²} and [λ_α, λ_β] = 1 iff M_α M_β = M_β M_α
    let commute = basis.iter().all(|&a| {
        basis.iter().all(|&b| basis.iter().all(|&c| r.ring_mul(a, r.ring_mul(b, c)) == r.ring_mul(b, r.ring_mul(a, c))))
    });
    if !square_free || !commute {
        return Err(AugError::Structure("lambda group is not elementary abelian".into()));
    }
    let socle_dim = chain[1].rank();
    Ok(AugMplReport {
        n,
        mpl,
        power_dims: powers.iter().map(|p| p.rank()).collect(),
        socle_chain_dims: chain.iter().map(|j| j.rank()).collect(),
        socle_chain_is_power_chain: matches,
        square_free,
        lambda_group_elementary_abelian: commute && square_free,
        lambda_group_order: 1u128 << (r.dim() - socle_dim),
    })
}

/// Dense Cayley tables of `ω(F₂[(Z/2)ⁿ])` for `n ≤ 3`; element `i` is
/// [`F2IdealBrace::element`]`(i)`.
pub fn materialize_aug_brace(n: usize) -> Result<FiniteBrace, AugError> {
    if !(1..=AUG_MAX_MATERIALIZED).contains(&n) {
        return Err(AugError::RankOutOfRange { n, max: AUG_MAX_MATERIALIZED });
    }
    let r = aug_brace(n)?;
    let size = 1usize << r.dim();
    let add = CayleyGroup::from_fn(size, |a, b| a ^ b).map_err(BraceError::Additive)?;
    let mul = CayleyGroup::from_fn(size, |a, b| r.index_of(r.circle(r.element(a), r.element(b))))
        .map_err(BraceError::Multiplicative)?;
    let brace = FiniteBrace::from_groups(add, mul)?;
    if !brace.is_two_sided() {
        return Err(AugError::Structure("materialized brace is not two-sided".into()));
    }
    Ok(brace)
}
