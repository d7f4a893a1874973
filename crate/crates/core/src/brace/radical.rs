use std::fmt;

use super::{first_failing_triple, BraceError, FiniteBrace};
use crate::group::{validate_group, validate_group_relabelled, CayleyGroup, GroupError};

/// First ring axiom found to fail for a star table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingViolation {
    NotAssociative { a: usize, b: usize, c: usize },
    LeftDistributive { a: usize, b: usize, c: usize },
    RightDistributive { a: usize, b: usize, c: usize },
    EntryOutOfRange { row: usize, col: usize },
    CircleNotGroup(GroupError),
}

impl fmt::Display for RingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingViolation::NotAssociative { a, b, c } => {
                write!(f, "star is not associative at ({a}, {b}, {c})")
            }
            RingViolation::LeftDistributive { a, b, c } => {
                write!(f, "{a}*({b}+{c}) != {a}*{b} + {a}*{c}")
            }
            RingViolation::RightDistributive { a, b, c } => {
                write!(f, "({a}+{b})*{c} != {a}*{c} + {b}*{c}")
            }
            RingViolation::EntryOutOfRange { row, col } => write!(f, "star entry ({row}, {col}) out of range"),
            RingViolation::CircleNotGroup(e) => write!(f, "circle operation is not a group: {e}"),
        }
    }
}

/// An associative ring without unit whose circle operation is a group,
/// on the carrier of its additive group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalRing {
    add: CayleyGroup,
    star: Vec<usize>,
}

impl RadicalRing {
    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn additive(&self) -> &CayleyGroup {
        &self.add
    }

    #[inline]
    pub fn star(&self, a: usize, b: usize) -> usize {
        self.star[a * self.add.order() + b]
    }

    pub fn star_rows(&self) -> Vec<Vec<usize>> {
        self.star.chunks(self.add.order()).map(|r| r.to_vec()).collect()
    }
}

/// `a ∗ b = ab − a − b`, for any brace.
pub fn star_table(b: &FiniteBrace) -> Vec<Vec<usize>> {
    let n = b.order();
    (0..n)
        .map(|x| (0..n).map(|y| b.sub(b.sub(b.mul(x, y), x), y)).collect())
        .collect()
}

fn ring_violation(add: &CayleyGroup, star: &[usize]) -> Option<RingViolation> {
    let n = add.order();
    let s = |a: usize, b: usize| star[a * n + b];
    if let Some((a, b, c)) = first_failing_triple(n, |a, b, c| s(s(a, b), c) != s(a, s(b, c))) {
        return Some(RingViolation::NotAssociative { a, b, c });
    }
    if let Some((a, b, c)) = first_failing_triple(n, |a, b, c| s(a, add.op(b, c)) != add.op(s(a, b), s(a, c))) {
        return Some(RingViolation::LeftDistributive { a, b, c });
    }
    if let Some((a, b, c)) = first_failing_triple(n, |a, b, c| s(add.op(a, b), c) != add.op(s(a, c), s(b, c))) {
        return Some(RingViolation::RightDistributive { a, b, c });
    }
    None
}

/// First ring axiom violated by the star table of `b`; `None` exactly when
/// `b` is two-sided.
pub fn radical_ring_violation(b: &FiniteBrace) -> Option<RingViolation> {
    let star: Vec<usize> = star_table(b).concat();
    ring_violation(b.additive(), &star)
}

/// The radical ring `(B, +, ∗)` of a two-sided brace.
pub fn to_radical_ring(b: &FiniteBrace) -> Result<RadicalRing, BraceError> {
    if !b.is_two_sided() {
        return Err(BraceError::NotTwoSided);
    }
    let star: Vec<usize> = star_table(b).concat();
    if let Some(v) = ring_violation(b.additive(), &star) {
        return Err(BraceError::Internal(format!("two-sided brace gives a non-ring: {v}")));
    }
    Ok(RadicalRing {
        add: b.additive().clone(),
        star,
    })
}

/// The two-sided brace `(R, +, ∘)` with `a ∘ b = a∗b + a + b`.
pub fn from_radical_ring(star_rows: &[Vec<usize>], add_rows: &[Vec<usize>]) -> Result<FiniteBrace, BraceError> {
    let (add, relabel) = validate_group_relabelled(add_rows).map_err(BraceError::Additive)?;
    let n = add.order();
    if let Some((a, b)) = (0..n).flat_map(|a| (0..a).map(move |b| (b, a))).find(|&(a, b)| add.op(a, b) != add.op(b, a)) {
        let back = relabel.inverse();
        return Err(BraceError::AdditiveNotAbelian { a: back.apply(a), b: back.apply(b) });
    }
    if star_rows.len() != n || star_rows.iter().any(|r| r.len() != n) {
        return Err(BraceError::Ring(RingViolation::EntryOutOfRange { row: star_rows.len(), col: 0 }));
    }
    let mut star = vec![0; n * n];
    for (a, row) in star_rows.iter().enumerate() {
        for (b, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(BraceError::Ring(RingViolation::EntryOutOfRange { row: a, col: b }));
            }
            star[relabel.apply(a) * n + relabel.apply(b)] = relabel.apply(v);
        }
    }
    if let Some(v) = ring_violation(&add, &star) {
        return Err(BraceError::Ring(v));
    }
    let circle: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| add.op(add.op(star[a * n + b], a), b)).collect())
        .collect();
    let mul = validate_group(&circle).map_err(|e| BraceError::Ring(RingViolation::CircleNotGroup(e)))?;
    if mul.rows() != circle {
        return Err(BraceError::Ring(RingViolation::CircleNotGroup(GroupError::NoIdentity)));
    }
    let brace = FiniteBrace::from_groups(add, mul)?;
    if !brace.is_two_sided() {
        return Err(BraceError::Internal("radical ring gives a one-sided brace".into()));
    }
    Ok(brace)
}

/// Two-sided ring ideal: an additive subgroup closed under `a∗x` and `x∗a`.
pub fn is_ring_ideal(r: &RadicalRing, set: &[bool]) -> bool {
    let n = r.order();
    let elems: Vec<usize> = (0..n).filter(|&x| set[x]).collect();
    set[0]
        && elems.iter().all(|&x| elems.iter().all(|&y| set[r.additive().op(x, y)]))
        && elems.iter().all(|&x| (0..n).all(|a| set[r.star(a, x)] && set[r.star(x, a)]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{is_ideal, trivial_brace, BraceSubset};
    use crate::group::named::*;

    #[test]
    fn zero_ring_gives_trivial_brace() {
        for n in 1..=6 {
            let add = cyclic(n).rows();
            let zero = vec![vec![0; n]; n];
            let b = from_radical_ring(&zero, &add).unwrap();
            assert_eq!(b, trivial_brace(&cyclic(n)).unwrap());
            let r = to_radical_ring(&b).unwrap();
            assert_eq!(r.star_rows(), zero);
        }
    }

    #[test]
    fn sym3_is_not_a_ring() {
        let b = crate::constructions::sym3_brace();
        assert_eq!(to_radical_ring(&b), Err(BraceError::NotTwoSided));
        assert!(radical_ring_violation(&b).is_some());
    }

    #[test]
    fn non_nilpotent_star_rejected() {
        // Z/2 with 1*1 = 1 is the field F2: circle operation 1∘1 = 1 is not a group
        let add = cyclic(2).rows();
        let star = vec![vec![0, 0], vec![0, 1]];
        assert!(matches!(
            from_radical_ring(&star, &add),
            Err(BraceError::Ring(RingViolation::CircleNotGroup(_)))
        ));
    }

    #[test]
    fn ideal_lattices_agree() {
        // multiplication by 2 on Z/8: a*b = 2ab is nilpotent
        let n = 8;
        let add = cyclic(n).rows();
        let star: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (2 * a * b) % n).collect()).collect();
        let b = from_radical_ring(&star, &add).unwrap();
        let r = to_radical_ring(&b).unwrap();
        assert_eq!(r.star_rows(), star);
        for mask in 0u32..(1 << n) {
            let set: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            let additive = set[0] && (0..n).all(|x| !set[x] || (0..n).all(|y| !set[y] || set[(x + y) % n]));
            if !additive {
                continue;
            }
            assert_eq!(is_ring_ideal(&r, &set), is_ideal(&b, &BraceSubset(set.clone())).is_ok());
        }
    }
}
