//! The left brace on the IYB group `𝒢(X, r)`, the quotient of the structure
//! group brace by the kernel of `(a, φ(a)) ↦ φ(a)`.

use rayon::prelude::*;

use super::{solution_from_brace, BridgeError, DescentPolicy, IStructure, StructureGroupElement};
use crate::brace::{BraceError, FiniteBrace};
use crate::closure::PermGroup;
use crate::group::CayleyGroup;
use crate::perm::Permutation;
use crate::solution::FiniteSolution;

pub const IYB_CAP: usize = 1024;

/// Element `i` of `brace` is element `i` of `group`.
#[derive(Debug, Clone)]
pub struct IybBrace {
    pub brace: FiniteBrace,
    pub group: PermGroup,
}

fn element(v: &[i64]) -> StructureGroupElement {
    StructureGroupElement { vector: v.to_vec() }
}

/// The brace on `𝒢(X, r)` with `g ⊕ h = φ(a_g + a_h)` for witnesses
/// `φ(a_g) = g`. The sum is recomputed from three witnesses per element and
/// any disagreement is reported.
pub fn iyb_quotient_brace(s: &FiniteSolution) -> Result<IybBrace, BridgeError> {
    let group = s.yb_group_capped(IYB_CAP)?;
    let st = IStructure::new(s);
    let n = s.size();
    let m = group.order();
    let mut rng = rand::thread_rng();
    let phi = |v: &[i64]| st.phi_with_policy(v, DescentPolicy::First, &mut rand::thread_rng());
    let mut witnesses: Vec<[Vec<i64>; 3]> = Vec::with_capacity(m);
    for (i, g) in group.elements().iter().enumerate() {
        let w0 = group.witness(i).to_vec();
        let x = i % n;
        let shifted = s.sigma_inv(x) * g;
        let j = group
            .index_of(&shifted)
            .ok_or_else(|| BridgeError::Internal("IYB group not closed".into()))?;
        let w1 = st.sg_mul(&StructureGroupElement::basis(n, x), &element(group.witness(j))).vector;
        let y = (i + 1) % n;
        let ey = StructureGroupElement::basis(n, y);
        let w2 = st.sg_mul(&st.sg_mul(&element(&w0), &ey), &st.sg_inv(&ey)).vector;
        for w in [&w0, &w1, &w2] {
            if st.phi_with_policy(w, DescentPolicy::Random, &mut rng) != *g {
                return Err(BridgeError::Internal(format!("witness of element {i} evaluates elsewhere")));
            }
        }
        witnesses.push([w0, w1, w2]);
    }
    let rows: Vec<Result<Vec<usize>, BridgeError>> = (0..m)
        .into_par_iter()
        .map(|g| {
            (0..m)
                .map(|h| {
                    let sums: Vec<Permutation> = (0..3)
                        .map(|k| {
                            let v: Vec<i64> = witnesses[g][k].iter().zip(&witnesses[h][k]).map(|(a, b)| a + b).collect();
                            phi(&v)
                        })
                        .collect();
                    if sums.iter().any(|p| *p != sums[0]) {
                        return Err(BridgeError::NotWellDefined { g, h });
                    }
                    group
                        .index_of(&sums[0])
                        .ok_or_else(|| BridgeError::Internal("sum leaves the IYB group".into()))
                })
                .collect()
        })
        .collect();
    let rows: Vec<Vec<usize>> = rows.into_iter().collect::<Result<_, _>>()?;
    let add = crate::group::validate_group(&rows).map_err(BraceError::Additive)?;
    if add.rows() != rows {
        return Err(BridgeError::Internal("sum has its neutral element away from the identity".into()));
    }
    let mul: CayleyGroup = group.cayley();
    let brace = FiniteBrace::from_groups_left(add, mul)?;
    Ok(IybBrace { brace, group })
}

/// The solution of the IYB brace restricted to `{σ_x}` equals `Ret(X, r)`
/// under `[x] ↦ σ_x`.
pub fn iyb_retract_matches(s: &FiniteSolution, iyb: &IybBrace) -> Result<bool, BridgeError> {
    let b = solution_from_brace(&iyb.brace)?;
    let step = s.retract();
    let mut image = Vec::with_capacity(step.classes.len());
    for class in &step.classes {
        let idx = iyb
            .group
            .index_of(s.sigma(class[0]))
            .ok_or_else(|| BridgeError::Internal("generator missing from the IYB group".into()))?;
        image.push(idx);
    }
    let (restricted, elems) = match b.restrict(&image) {
        Ok(r) => r,
        Err(_) => return Ok(false),
    };
    let f: Vec<usize> = image.iter().map(|i| elems.binary_search(i).unwrap()).collect();
    let Ok(f) = Permutation::from_images(f) else {
        return Ok(false);
    };
    Ok(step.quotient.relabelled(&f) == restricted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{materialize_aug_brace, six_point_solution};
    use crate::group::named::symmetric;

    #[test]
    fn trivial_solution_gives_order_one() {
        let iyb = iyb_quotient_brace(&FiniteSolution::trivial(3)).unwrap();
        assert_eq!(iyb.brace.order(), 1);
        assert!(iyb_retract_matches(&FiniteSolution::trivial(3), &iyb).unwrap());
    }

    #[test]
    fn six_point_gives_sym3_brace() {
        let s = six_point_solution();
        let iyb = iyb_quotient_brace(&s).unwrap();
        assert_eq!(iyb.brace.order(), 6);
        assert!(iyb.brace.multiplicative().is_isomorphic(&symmetric(3)));
        assert!(!solution_from_brace(&iyb.brace).unwrap().is_square_free());
        assert!(iyb_retract_matches(&s, &iyb).unwrap());
    }

    #[test]
    fn aug_rank_two_gives_elementary_abelian() {
        let s = solution_from_brace(&materialize_aug_brace(2).unwrap()).unwrap();
        let iyb = iyb_quotient_brace(&s).unwrap();
        let g = iyb.brace.multiplicative();
        assert!(g.is_abelian());
        assert!((0..g.order()).all(|a| g.op(a, a) == 0));
        assert!(iyb_retract_matches(&s, &iyb).unwrap());
    }
}
