//! Left braces with a given additive group `A`, found as regular subgroups
//! `{(a, λ_a)}` of the holomorph `A ⋊ Aut(A)`.
//!
//! The search repeatedly takes the least element `a` outside the subgroup
//! generated so far and branches on `λ_a ∈ Aut(A)`; closing the generators
//! under multiplication `(a, α)(b, β) = (a + α(b), αβ)` either fixes `λ` on
//! new elements or exposes two automorphisms over one element. Each regular
//! subgroup is reached along exactly one path.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use super::canon::{canonicalize_brace, CanonicalBrace};
use super::EnumerateError;
use crate::brace::{lambda_map, FiniteBrace};
use crate::group::{named, CayleyGroup};
use crate::perm::Permutation;

pub const MAX_BRACE_ORDER: usize = 16;

struct Holomorph<'a> {
    add: &'a CayleyGroup,
    auts: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl Holomorph<'_> {
    fn compose(&self, a: usize, b: usize) -> usize {
        self.index[&(&self.auts[a] * &self.auts[b])]
    }

    /// Closes `gens` under right multiplication; the λ-table on the closure,
    /// or `None` if some element carries two automorphisms.
    fn closure(&self, gens: &[(usize, usize)]) -> Option<Vec<Option<usize>>> {
        let n = self.add.order();
        let mut lam: Vec<Option<usize>> = vec![None; n];
        let id = self.index[&Permutation::identity(n)];
        lam[0] = Some(id);
        let mut queue = vec![0usize];
        let mut i = 0;
        while i < queue.len() {
            let c = queue[i];
            let gamma = lam[c].unwrap();
            for &(g, alpha) in gens {
                let d = self.add.op(c, self.auts[gamma].apply(g));
                let delta = self.compose(gamma, alpha);
                match lam[d] {
                    Some(e) if e != delta => return None,
                    Some(_) => {}
                    None => {
                        lam[d] = Some(delta);
                        queue.push(d);
                    }
                }
            }
            i += 1;
        }
        Some(lam)
    }

    fn search(&self, gens: &mut Vec<(usize, usize)>, lam: &[Option<usize>], out: &mut Vec<Vec<usize>>) {
        let Some(a) = lam.iter().position(Option::is_none) else {
            out.push(lam.iter().map(|l| l.unwrap()).collect());
            return;
        };
        for alpha in 0..self.auts.len() {
            gens.push((a, alpha));
            if let Some(next) = self.closure(gens) {
                self.search(gens, &next, out);
            }
            gens.pop();
        }
    }

    fn brace(&self, lam: &[usize]) -> FiniteBrace {
        let n = self.add.order();
        let mul = CayleyGroup::from_fn_unchecked(n, |a, b| self.add.op(a, self.auts[lam[a]].apply(b)));
        FiniteBrace::from_groups_left(self.add.clone(), mul).expect("regular subgroup gives a brace")
    }
}

fn check_additive(a: &CayleyGroup) -> Result<(), EnumerateError> {
    if a.order() > MAX_BRACE_ORDER {
        return Err(EnumerateError::SizeCap { n: a.order(), max: MAX_BRACE_ORDER });
    }
    if !a.is_abelian() {
        return Err(EnumerateError::NotAbelian);
    }
    Ok(())
}

/// Every left brace whose additive group is exactly the table `a`, in
/// search order.
pub fn enumerate_all_braces(a: &CayleyGroup) -> Result<Vec<FiniteBrace>, EnumerateError> {
    check_additive(a)?;
    let auts = a.automorphisms();
    let index = auts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let hol = Holomorph { add: a, auts, index };
    let root = hol.closure(&[]).unwrap();
    let first = root.iter().position(Option::is_none);
    let lams: Vec<Vec<usize>> = match first {
        None => vec![root.iter().map(|l| l.unwrap()).collect()],
        Some(x) => (0..hol.auts.len())
            .into_par_iter()
            .map(|alpha| {
                let mut out = Vec::new();
                let mut gens = vec![(x, alpha)];
                if let Some(next) = hol.closure(&gens) {
                    hol.search(&mut gens, &next, &mut out);
                }
                out
            })
            .flatten()
            .collect(),
    };
    Ok(lams.iter().map(|l| hol.brace(l)).collect())
}

/// One brace per isomorphism class with additive group `a`, as canonical
/// forms in increasing order.
pub fn enumerate_brace_classes(a: &CayleyGroup) -> Result<Vec<CanonicalBrace>, EnumerateError> {
    let all = enumerate_all_braces(a)?;
    let forms: BTreeSet<CanonicalBrace> = all.par_iter().map(canonicalize_brace).collect::<Vec<_>>().into_iter().collect();
    Ok(forms.into_iter().collect())
}

pub fn enumerate_braces(a: &CayleyGroup, up_to_iso: bool) -> Result<Vec<FiniteBrace>, EnumerateError> {
    if up_to_iso {
        Ok(enumerate_brace_classes(a)?.iter().map(CanonicalBrace::to_brace).collect())
    } else {
        enumerate_all_braces(a)
    }
}

/// One brace per isomorphism class of order `n`, grouped by additive group
/// in the order of [`named::abelian_groups_of_order`].
pub fn braces_of_order(n: usize) -> Result<Vec<FiniteBrace>, EnumerateError> {
    let mut out = Vec::new();
    for (_, a) in named::abelian_groups_of_order(n) {
        out.extend(enumerate_braces(&a, true)?);
    }
    Ok(out)
}

/// The regular subgroup `{(a, λ_a)}` of a left brace.
pub fn regular_subgroup(b: &FiniteBrace) -> Vec<(usize, Permutation)> {
    (0..b.order()).map(|a| (a, lambda_map(b, a))).collect()
}
