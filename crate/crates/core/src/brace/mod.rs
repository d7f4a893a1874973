//! Finite left, right and two-sided braces.
//!
//! A brace is stored as two Cayley tables on the carrier `0..n` sharing the
//! neutral element 0. The side is always computed from the tables.

mod ideal;
mod iso;
mod product;
mod radical;
mod square;

pub use ideal::{is_ideal, quotient_brace, IdealViolation, Quotient};
pub use iso::{brace_isomorphic, brace_invariants};
pub use product::{direct_product, semidirect_product, wreath_product, WREATH_CAP};
pub use radical::{from_radical_ring, is_ring_ideal, radical_ring_violation, star_table, to_radical_ring, RadicalRing, RingViolation};
pub use square::{theorem_square_report, SquareReport};

use rayon::prelude::*;
use thiserror::Error;

use crate::group::{validate_group_relabelled, CayleyGroup, GroupError};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    pub fn is_left(self) -> bool {
        matches!(self, Side::Left | Side::TwoSided)
    }

    pub fn is_right(self) -> bool {
        matches!(self, Side::Right | Side::TwoSided)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two-sided",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraceError {
    #[error("additive group: {0}")]
    Additive(GroupError),
    #[error("multiplicative group: {0}")]
    Multiplicative(GroupError),
    #[error("tables have different orders: add {add}, mul {mul}")]
    OrderMismatch { add: usize, mul: usize },
    #[error("addition is not commutative: {a}+{b} != {b}+{a}")]
    AdditiveNotAbelian { a: usize, b: usize },
    #[error("neutral elements differ: additive {add}, multiplicative {mul}")]
    NeutralMismatch { add: usize, mul: usize },
    #[error("left law fails: a(b+c)+a != ab+ac at a={a}, b={b}, c={c}")]
    LeftLaw { a: usize, b: usize, c: usize },
    #[error("right law fails: (a+b)c+c != ac+bc at a={a}, b={b}, c={c}")]
    RightLaw { a: usize, b: usize, c: usize },
    #[error("lambda map is not a homomorphism: {0}")]
    LambdaLaw(String),
    #[error("not an ideal: {0}")]
    NotIdeal(IdealViolation),
    #[error("brace is not two-sided")]
    NotTwoSided,
    #[error("radical ring axiom fails: {0}")]
    Ring(RingViolation),
    #[error("not a square-free brace: lambda_a(a) != a at a={a}")]
    NotSquareFree { a: usize },
    #[error("square-free structure assertion fails: {0}")]
    SquareTheorem(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("product of order {size} exceeds the cap of {cap}")]
    SizeCap { size: u128, cap: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// A validated finite brace.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteBrace {
    add: CayleyGroup,
    mul: CayleyGroup,
    side: Side,
}

/// First triple `(a, b, c)` for which `fails` holds, scanning `a` in parallel
/// and returning the lexicographically first witness.
pub(crate) fn first_failing_triple(
    n: usize,
    fails: impl Fn(usize, usize, usize) -> bool + Sync,
) -> Option<(usize, usize, usize)> {
    (0..n).into_par_iter().find_map_first(|a| {
        for b in 0..n {
            for c in 0..n {
                if fails(a, b, c) {
                    return Some((a, b, c));
                }
            }
        }
        None
    })
}

fn left_law_witness(add: &CayleyGroup, mul: &CayleyGroup) -> Option<(usize, usize, usize)> {
    first_failing_triple(add.order(), |a, b, c| {
        add.op(mul.op(a, add.op(b, c)), a) != add.op(mul.op(a, b), mul.op(a, c))
    })
}

fn right_law_witness(add: &CayleyGroup, mul: &CayleyGroup) -> Option<(usize, usize, usize)> {
    first_failing_triple(add.order(), |a, b, c| {
        add.op(mul.op(add.op(a, b), c), c) != add.op(mul.op(a, c), mul.op(b, c))
    })
}

fn validate_tables(
    add_rows: &[Vec<usize>],
    mul_rows: &[Vec<usize>],
) -> Result<(CayleyGroup, CayleyGroup), BraceError> {
    if add_rows.len() != mul_rows.len() {
        return Err(BraceError::OrderMismatch {
            add: add_rows.len(),
            mul: mul_rows.len(),
        });
    }
    let (add, relabel) = validate_group_relabelled(add_rows).map_err(BraceError::Additive)?;
    let n = add.order();
    // move the multiplication table through the same relabelling
    let mut mul_relabelled = vec![vec![0; n]; n];
    for (a, row) in mul_rows.iter().enumerate() {
        if row.len() != n {
            return Err(BraceError::Multiplicative(GroupError::NotSquare {
                row: a,
                len: row.len(),
                expected: n,
            }));
        }
        for (b, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(BraceError::Multiplicative(GroupError::EntryOutOfRange { row: a, col: b, value: v }));
            }
            mul_relabelled[relabel.apply(a)][relabel.apply(b)] = relabel.apply(v);
        }
    }
    let (mul, mrel) = validate_group_relabelled(&mul_relabelled).map_err(BraceError::Multiplicative)?;
    if !mrel.is_identity() {
        let back = relabel.inverse();
        return Err(BraceError::NeutralMismatch {
            add: back.apply(0),
            mul: back.apply(mrel.inverse().apply(0)),
        });
    }
    for a in 0..n {
        for b in 0..a {
            if add.op(a, b) != add.op(b, a) {
                let back = relabel.inverse();
                return Err(BraceError::AdditiveNotAbelian {
                    a: back.apply(b),
                    b: back.apply(a),
                });
            }
        }
    }
    Ok((add, mul))
}

/// Validates a left brace; `side` records whether the right law also holds.
pub fn validate_left_brace(
    add_rows: &[Vec<usize>],
    mul_rows: &[Vec<usize>],
) -> Result<FiniteBrace, BraceError> {
    let (add, mul) = validate_tables(add_rows, mul_rows)?;
    FiniteBrace::from_groups_left(add, mul)
}

/// Validates a brace of either side.
pub fn validate_brace(add_rows: &[Vec<usize>], mul_rows: &[Vec<usize>]) -> Result<FiniteBrace, BraceError> {
    let (add, mul) = validate_tables(add_rows, mul_rows)?;
    FiniteBrace::from_groups(add, mul)
}

impl FiniteBrace {
    /// Builds a brace from validated groups, requiring the left law.
    pub fn from_groups_left(add: CayleyGroup, mul: CayleyGroup) -> Result<Self, BraceError> {
        check_shared_carrier(&add, &mul)?;
        if let Some((a, b, c)) = left_law_witness(&add, &mul) {
            return Err(BraceError::LeftLaw { a, b, c });
        }
        let side = if right_law_witness(&add, &mul).is_none() {
            Side::TwoSided
        } else {
            Side::Left
        };
        Ok(FiniteBrace { add, mul, side })
    }

    /// Builds a brace from validated groups, accepting either law.
    pub fn from_groups(add: CayleyGroup, mul: CayleyGroup) -> Result<Self, BraceError> {
        check_shared_carrier(&add, &mul)?;
        let left = left_law_witness(&add, &mul);
        let right = right_law_witness(&add, &mul);
        let side = match (left, right) {
            (None, None) => Side::TwoSided,
            (None, Some(_)) => Side::Left,
            (Some(_), None) => Side::Right,
            (Some((a, b, c)), Some(_)) => return Err(BraceError::LeftLaw { a, b, c }),
        };
        Ok(FiniteBrace { add, mul, side })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn additive(&self) -> &CayleyGroup {
        &self.add
    }

    pub fn multiplicative(&self) -> &CayleyGroup {
        &self.mul
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.op(a, b)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.add.inv(a)
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add.op(a, self.add.inv(b))
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.op(a, b)
    }

    #[inline]
    pub fn mul_inv(&self, a: usize) -> usize {
        self.mul.inv(a)
    }

    /// `λ_a(b) = ab − a`.
    #[inline]
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.sub(self.mul(a, b), a)
    }

    /// `ρ_a(b) = ba − a`.
    #[inline]
    pub fn rho(&self, a: usize, b: usize) -> usize {
        self.sub(self.mul(b, a), a)
    }

    pub fn is_left(&self) -> bool {
        self.side.is_left()
    }

    pub fn is_two_sided(&self) -> bool {
        self.side == Side::TwoSided
    }

    /// Same additive group, opposite multiplication.
    pub fn opposite_brace(&self) -> FiniteBrace {
        let side = match self.side {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
            Side::TwoSided => Side::TwoSided,
        };
        FiniteBrace {
            add: self.add.clone(),
            mul: self.mul.opposite(),
            side,
        }
    }

    /// Sub-brace on a subset closed under both operations, relabelled in
    /// increasing index order. Returns the brace and the original indices.
    pub fn restrict(&self, set: &[bool]) -> (FiniteBrace, Vec<usize>) {
        let (add, elems) = self.add.restrict(set);
        let (mul, _) = self.mul.restrict(set);
        let brace = FiniteBrace::from_groups(add, mul).expect("sub-brace of a brace is a brace");
        (brace, elems)
    }

    /// Relabels by `old -> new` map `f` fixing 0.
    pub fn relabelled(&self, f: &Permutation) -> FiniteBrace {
        FiniteBrace {
            add: self.add.relabelled(f),
            mul: self.mul.relabelled(f),
            side: self.side,
        }
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        self.add.rows()
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        self.mul.rows()
    }
}

fn check_shared_carrier(add: &CayleyGroup, mul: &CayleyGroup) -> Result<(), BraceError> {
    if add.order() != mul.order() {
        return Err(BraceError::OrderMismatch {
            add: add.order(),
            mul: mul.order(),
        });
    }
    if !add.is_abelian() {
        let n = add.order();
        for a in 0..n {
            for b in 0..a {
                if add.op(a, b) != add.op(b, a) {
                    return Err(BraceError::AdditiveNotAbelian { a: b, b: a });
                }
            }
        }
    }
    Ok(())
}

pub fn lambda_map(b: &FiniteBrace, a: usize) -> Permutation {
    Permutation::from_images_unchecked((0..b.order()).map(|x| b.lambda(a, x)).collect())
}

pub fn rho_map(b: &FiniteBrace, a: usize) -> Permutation {
    Permutation::from_images_unchecked((0..b.order()).map(|x| b.rho(a, x)).collect())
}

pub fn is_two_sided(b: &FiniteBrace) -> bool {
    b.is_two_sided()
}

pub fn opposite_brace(b: &FiniteBrace) -> FiniteBrace {
    b.opposite_brace()
}

/// Membership vector over the carrier of a brace.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraceSubset(pub Vec<bool>);

impl BraceSubset {
    pub fn from_elements(n: usize, elems: &[usize]) -> Self {
        let mut v = vec![false; n];
        for &e in elems {
            v[e] = true;
        }
        BraceSubset(v)
    }

    pub fn whole(n: usize) -> Self {
        BraceSubset(vec![true; n])
    }

    pub fn zero(n: usize) -> Self {
        Self::from_elements(n, &[0])
    }

    pub fn contains(&self, a: usize) -> bool {
        self.0[a]
    }

    pub fn len(&self) -> usize {
        self.0.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn elements(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&a| self.0[a]).collect()
    }

    pub fn is_subset(&self, other: &BraceSubset) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| !a || b)
    }
}

/// `Soc(B) = {a : λ_a = id}`, checked to be an ideal.
pub fn socle(b: &FiniteBrace) -> Result<BraceSubset, BraceError> {
    let n = b.order();
    let s = BraceSubset((0..n).map(|a| (0..n).all(|x| b.lambda(a, x) == x)).collect());
    if let Err(v) = is_ideal(b, &s) {
        return Err(BraceError::Internal(format!("socle is not an ideal: {v}")));
    }
    Ok(s)
}

/// Which λ/ρ laws were verified by [`check_lambda_homomorphism`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaReport {
    pub lambda_checked: bool,
    pub rho_checked: bool,
}

/// Checks that λ is a homomorphism into additive automorphisms, and the
/// mirrored ρ laws on right braces, together with `a·λ_{a⁻¹}(b) = a + b`.
pub fn check_lambda_homomorphism(b: &FiniteBrace) -> Result<LambdaReport, BraceError> {
    let n = b.order();
    if b.is_left() {
        if let Some((a, x, y)) = first_failing_triple(n, |a, x, y| b.lambda(a, b.add(x, y)) != b.add(b.lambda(a, x), b.lambda(a, y))) {
            return Err(BraceError::LambdaLaw(format!("lambda_{a}({x}+{y}) is not additive")));
        }
        for a in 0..n {
            for c in 0..n {
                let ac = b.mul(a, c);
                if let Some(x) = (0..n).find(|&x| b.lambda(a, b.lambda(c, x)) != b.lambda(ac, x)) {
                    return Err(BraceError::LambdaLaw(format!("lambda_{a} lambda_{c} != lambda_{ac} at {x}")));
                }
                if b.mul(a, b.lambda(b.mul_inv(a), c)) != b.add(a, c) {
                    return Err(BraceError::LambdaLaw(format!("a lambda_(a^-1)(b) != a+b at a={a}, b={c}")));
                }
            }
        }
    }
    if b.side().is_right() {
        if let Some((a, x, y)) = first_failing_triple(n, |a, x, y| b.rho(a, b.add(x, y)) != b.add(b.rho(a, x), b.rho(a, y))) {
            return Err(BraceError::LambdaLaw(format!("rho_{a}({x}+{y}) is not additive")));
        }
        for a in 0..n {
            for c in 0..n {
                let ca = b.mul(c, a);
                if let Some(x) = (0..n).find(|&x| b.rho(a, b.rho(c, x)) != b.rho(ca, x)) {
                    return Err(BraceError::LambdaLaw(format!("rho_{a} rho_{c} != rho_{ca} at {x}")));
                }
            }
        }
    }
    Ok(LambdaReport {
        lambda_checked: b.is_left(),
        rho_checked: b.side().is_right(),
    })
}

/// Trivial brace on an abelian group: `a + b = ab`.
pub fn trivial_brace(a: &CayleyGroup) -> Result<FiniteBrace, BraceError> {
    if let Some((x, y)) = (0..a.order())
        .flat_map(|x| (0..x).map(move |y| (x, y)))
        .find(|&(x, y)| a.op(x, y) != a.op(y, x))
    {
        return Err(BraceError::AdditiveNotAbelian { a: y, b: x });
    }
    Ok(FiniteBrace {
        add: a.clone(),
        mul: a.clone(),
        side: Side::TwoSided,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named::*;

    fn z4_trivial() -> FiniteBrace {
        let t = cyclic(4).rows();
        validate_left_brace(&t, &t).unwrap()
    }

    #[test]
    fn trivial_brace_is_two_sided() {
        let b = z4_trivial();
        assert_eq!(b.side(), Side::TwoSided);
        for a in 0..4 {
            assert!(lambda_map(&b, a).is_identity());
            assert!(rho_map(&b, a).is_identity());
        }
        assert_eq!(socle(&b).unwrap(), BraceSubset::whole(4));
        assert_eq!(b.opposite_brace(), b);
        check_lambda_homomorphism(&b).unwrap();
    }

    #[test]
    fn non_abelian_addition_rejected() {
        let s = symmetric(3).rows();
        assert!(matches!(
            validate_left_brace(&s, &s),
            Err(BraceError::AdditiveNotAbelian { .. })
        ));
    }

    #[test]
    fn neutral_mismatch_rejected() {
        // Z/3 addition, multiplication with identity relocated to 1
        let add = cyclic(3).rows();
        let mul: Vec<Vec<usize>> = (0..3)
            .map(|a| (0..3).map(|b| (a + b + 2) % 3).collect())
            .collect();
        assert_eq!(
            validate_left_brace(&add, &mul),
            Err(BraceError::NeutralMismatch { add: 0, mul: 1 })
        );
    }

    #[test]
    fn left_law_witness_reported() {
        // Z/6 addition against every relabelling of the Sym3 fixture product
        let fixture = crate::constructions::sym3_brace();
        let add = fixture.add_rows();
        let (mut failures, mut braces) = (0, 0);
        for f in crate::perm::all_permutations(6).into_iter().filter(|f| f.apply(0) == 0) {
            let mul = fixture.multiplicative().relabelled(&f).rows();
            match validate_left_brace(&add, &mul) {
                Err(BraceError::LeftLaw { a, b, c }) => {
                    failures += 1;
                    let lhs = add[mul[a][add[b][c]]][a];
                    let rhs = add[mul[a][b]][mul[a][c]];
                    assert_ne!(lhs, rhs);
                }
                Ok(b) => {
                    braces += 1;
                    check_lambda_homomorphism(&b).unwrap();
                }
                Err(other) => panic!("unexpected {other:?}"),
            }
        }
        assert!(failures > 0 && braces > 0);
    }

    #[test]
    fn identity_relabelled_consistently() {
        // trivial brace on Z/3 with both identities at 2
        let t: Vec<Vec<usize>> = (0..3)
            .map(|a| (0..3).map(|b| (a + b + 1) % 3).collect())
            .collect();
        let b = validate_left_brace(&t, &t).unwrap();
        assert_eq!(b.add(0, 1), 1);
        assert_eq!(b.mul(0, 1), 1);
    }

    #[test]
    fn lambda_fixes_zero_and_opposite_is_involution() {
        let b = crate::constructions::sym3_brace();
        for a in 0..6 {
            assert_eq!(b.lambda(a, 0), 0);
        }
        let op = b.opposite_brace();
        assert_eq!(op.side(), Side::Right);
        assert_eq!(op.opposite_brace(), b);
        check_lambda_homomorphism(&op).unwrap();
    }
}
