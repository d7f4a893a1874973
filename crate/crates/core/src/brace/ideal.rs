use std::fmt;

use super::{BraceError, BraceSubset, FiniteBrace};
use crate::group::CayleyGroup;

/// Why a subset fails to be an ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealViolation {
    MissingZero,
    NotClosed { a: usize, b: usize },
    NotNormal { g: usize, s: usize },
    RhoEscapes { a: usize, b: usize },
}

impl fmt::Display for IdealViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealViolation::MissingZero => write!(f, "subset does not contain 0"),
            IdealViolation::NotClosed { a, b } => write!(f, "product {a}*{b} leaves the subset"),
            IdealViolation::NotNormal { g, s } => write!(f, "conjugate of {s} by {g} leaves the subset"),
            IdealViolation::RhoEscapes { a, b } => write!(f, "rho_{a}({b}) leaves the subset"),
        }
    }
}

fn subgroup_violation(g: &CayleyGroup, set: &[bool]) -> Option<IdealViolation> {
    if !set[0] {
        return Some(IdealViolation::MissingZero);
    }
    let n = g.order();
    for a in (0..n).filter(|&a| set[a]) {
        for b in (0..n).filter(|&b| set[b]) {
            if !set[g.op(a, b)] {
                return Some(IdealViolation::NotClosed { a, b });
            }
        }
    }
    for x in 0..n {
        for s in (0..n).filter(|&s| set[s]) {
            if !set[g.op(g.op(x, s), g.inv(x))] {
                return Some(IdealViolation::NotNormal { g: x, s });
            }
        }
    }
    None
}

/// Ideal test: a normal subgroup of the multiplicative group closed under
/// every `ρ_a`. The equivalent λ formulation is evaluated as well and a
/// disagreement between the two is reported as an internal error.
///
/// # Panics
///
/// If the ρ and λ criteria disagree on a normal subgroup.
pub fn is_ideal(b: &FiniteBrace, s: &BraceSubset) -> Result<(), IdealViolation> {
    match check_ideal(b, s) {
        Ok(r) => r,
        Err(e) => panic!("{e}"),
    }
}

pub(crate) fn check_ideal(b: &FiniteBrace, s: &BraceSubset) -> Result<Result<(), IdealViolation>, BraceError> {
    let set = &s.0;
    if let Some(v) = subgroup_violation(b.multiplicative(), set) {
        return Ok(Err(v));
    }
    let n = b.order();
    let mut rho_witness = None;
    let mut lambda_ok = true;
    for a in 0..n {
        for x in (0..n).filter(|&x| set[x]) {
            if rho_witness.is_none() && !set[b.rho(a, x)] {
                rho_witness = Some(IdealViolation::RhoEscapes { a, b: x });
            }
            if !set[b.lambda(a, x)] {
                lambda_ok = false;
            }
        }
    }
    if rho_witness.is_none() != lambda_ok {
        return Err(BraceError::Internal(
            "rho and lambda ideal criteria disagree on a normal subgroup".into(),
        ));
    }
    Ok(match rho_witness {
        None => Ok(()),
        Some(v) => Err(v),
    })
}

/// A quotient brace with its projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub brace: FiniteBrace,
    /// `projection[x]` is the coset index of `x`.
    pub projection: Vec<usize>,
    /// Smallest element of each coset; coset 0 is the ideal itself.
    pub representatives: Vec<usize>,
}

/// Quotient by an ideal, built on multiplicative cosets after checking that
/// every coset `Ic` equals the additive coset `I + c`.
pub fn quotient_brace(b: &FiniteBrace, ideal: &BraceSubset) -> Result<Quotient, BraceError> {
    check_ideal(b, ideal)?.map_err(BraceError::NotIdeal)?;
    let n = b.order();
    let members = ideal.elements();
    let mut projection = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for c in 0..n {
        if projection[c] != usize::MAX {
            continue;
        }
        let mut mul_coset: Vec<usize> = members.iter().map(|&i| b.mul(i, c)).collect();
        let mut add_coset: Vec<usize> = members.iter().map(|&i| b.add(i, c)).collect();
        mul_coset.sort_unstable();
        add_coset.sort_unstable();
        if mul_coset != add_coset {
            return Err(BraceError::Internal(format!(
                "multiplicative and additive cosets of {c} differ"
            )));
        }
        let k = representatives.len();
        for &x in &mul_coset {
            projection[x] = k;
        }
        representatives.push(c);
    }
    let m = representatives.len();
    let add = CayleyGroup::from_fn_unchecked(m, |i, j| projection[b.add(representatives[i], representatives[j])]);
    let mul = CayleyGroup::from_fn_unchecked(m, |i, j| projection[b.mul(representatives[i], representatives[j])]);
    let brace = FiniteBrace::from_groups(add, mul)?;
    if b.is_left() && !brace.is_left() || b.side().is_right() && !brace.side().is_right() {
        return Err(BraceError::Internal("quotient lost a brace law".into()));
    }
    Ok(Quotient {
        brace,
        projection,
        representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{socle, trivial_brace};
    use crate::group::named::*;

    #[test]
    fn zero_and_whole_quotients() {
        let b = trivial_brace(&cyclic(6)).unwrap();
        let q = quotient_brace(&b, &BraceSubset::zero(6)).unwrap();
        assert_eq!(q.brace, b);
        let q = quotient_brace(&b, &BraceSubset::whole(6)).unwrap();
        assert_eq!(q.brace.order(), 1);
    }

    #[test]
    fn sym3_socle_quotient_has_order_two() {
        let b = crate::constructions::sym3_brace();
        let soc = socle(&b).unwrap();
        assert_eq!(soc.len(), 3);
        let q = quotient_brace(&b, &soc).unwrap();
        assert_eq!(q.brace.order(), 2);
    }

    #[test]
    fn non_ideal_reported() {
        let b = crate::constructions::sym3_brace();
        // a subgroup of order 2 in Sym3 is not normal
        let t = BraceSubset::from_elements(6, &[0, 1]);
        assert!(matches!(is_ideal(&b, &t), Err(IdealViolation::NotNormal { .. })));
        assert!(matches!(quotient_brace(&b, &t), Err(BraceError::NotIdeal(_))));
        assert_eq!(is_ideal(&b, &BraceSubset(vec![false, true, false, false, false, false])), Err(IdealViolation::MissingZero));
    }
}
