//! Permutation-group closure with structure-group witnesses.
//!
//! Every element `g` of the closure carries a vector `a ∈ Z^X` such that
//! `φ(a) = g` for the structure-group evaluator of the solution the
//! generators came from. Products follow `a·b ↦ a + g(b)`, where `g(b)` is the
//! coordinate action of [`Permutation::act_on_vector`].

use std::collections::HashMap;

use thiserror::Error;

use crate::group::{group_from_permutations, CayleyGroup};
use crate::perm::Permutation;

/// Default cap on the closure size.
pub const CLOSURE_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosureError {
    #[error("generator {index} has degree {found}, expected {expected}")]
    DegreeMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("{generators} generators but {witnesses} witnesses")]
    WitnessCount { generators: usize, witnesses: usize },
    #[error("witness {index} has length {found}, expected {expected}")]
    WitnessLength {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("closure exceeds the cap of {cap} elements")]
    CapExceeded { cap: usize },
}

/// A finite permutation group listed in breadth-first discovery order,
/// identity first.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
    witnesses: Vec<Vec<i64>>,
    index: HashMap<Permutation, usize>,
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn witness(&self, i: usize) -> &[i64] {
        &self.witnesses[i]
    }

    pub fn witnesses(&self) -> &[Vec<i64>] {
        &self.witnesses
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements
            .iter()
            .all(|p| self.elements.iter().all(|q| &(p * q) == &(q * p)))
    }

    /// The group as a Cayley table, element `i` being `elements()[i]`.
    pub fn cayley(&self) -> CayleyGroup {
        group_from_permutations(&self.elements)
    }
}

/// Closure of `generators` under composition, with witnesses.
///
/// Elements are discovered breadth-first from the identity by multiplying
/// on the right by generators in the given order.
pub fn closure_with_witnesses(
    degree: usize,
    generators: &[Permutation],
    witnesses: &[Vec<i64>],
    cap: usize,
) -> Result<PermGroup, ClosureError> {
    if generators.len() != witnesses.len() {
        return Err(ClosureError::WitnessCount {
            generators: generators.len(),
            witnesses: witnesses.len(),
        });
    }
    for (index, (g, w)) in generators.iter().zip(witnesses).enumerate() {
        if g.degree() != degree {
            return Err(ClosureError::DegreeMismatch {
                index,
                expected: degree,
                found: g.degree(),
            });
        }
        if w.len() != degree {
            return Err(ClosureError::WitnessLength {
                index,
                expected: degree,
                found: w.len(),
            });
        }
    }
    let id = Permutation::identity(degree);
    let mut elements = vec![id.clone()];
    let mut wit = vec![vec![0i64; degree]];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut head = 0;
    while head < elements.len() {
        let g = elements[head].clone();
        for (s, b) in generators.iter().zip(witnesses) {
            let gs = &g * s;
            if index.contains_key(&gs) {
                continue;
            }
            if elements.len() >= cap {
                return Err(ClosureError::CapExceeded { cap });
            }
            let moved = g.act_on_vector(b);
            let w: Vec<i64> = wit[head].iter().zip(&moved).map(|(x, y)| x + y).collect();
            index.insert(gs.clone(), elements.len());
            elements.push(gs);
            wit.push(w);
        }
        head += 1;
    }
    Ok(PermGroup {
        degree,
        elements,
        witnesses: wit,
        index,
    })
}

/// Closure without meaningful witnesses (all zero).
pub fn closure(degree: usize, generators: &[Permutation], cap: usize) -> Result<PermGroup, ClosureError> {
    let zeros = vec![vec![0i64; degree]; generators.len()];
    closure_with_witnesses(degree, generators, &zeros, cap)
}

/// Orbits of `{0..degree}` under the group generated by `generators`,
/// each sorted, listed by smallest element.
pub fn orbits(degree: usize, generators: &[Permutation]) -> Vec<Vec<usize>> {
    let mut label = vec![usize::MAX; degree];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for start in 0..degree {
        if label[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        label[start] = id;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for g in generators {
                let y = g.apply(x);
                if label[y] == usize::MAX {
                    label[y] = id;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn identity_generates_trivial_group() {
        let g = closure(3, &[Permutation::identity(3)], CLOSURE_CAP).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn transposition_generates_order_two() {
        let g = closure(2, &[cyc(2, &[&[0, 1]])], CLOSURE_CAP).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn six_point_generators_give_sym3() {
        let gens = [
            Permutation::identity(6),
            cyc(6, &[&[0, 1, 2]]),
            cyc(6, &[&[0, 2, 1]]),
            cyc(6, &[&[3, 4], &[1, 2]]),
        ];
        let g = closure(6, &gens, CLOSURE_CAP).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert!(g.cayley().is_isomorphic(&crate::group::named::symmetric(3)));
    }

    #[test]
    fn closed_under_composition_and_inverse() {
        let gens = [cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1]])];
        let g = closure(5, &gens, CLOSURE_CAP).unwrap();
        assert_eq!(g.order(), 120);
        for p in g.elements() {
            assert!(g.contains(&p.inverse()));
            for q in g.elements().iter().take(10) {
                assert!(g.contains(&(p * q)));
            }
        }
    }

    #[test]
    fn witnesses_follow_product_rule() {
        let s = cyc(3, &[&[0, 1, 2]]);
        let g = closure_with_witnesses(3, &[s.clone()], &[vec![1, 0, 0]], CLOSURE_CAP).unwrap();
        assert_eq!(g.order(), 3);
        // s·s has witness e_0 + s(e_0) = e_0 + e_1
        let i = g.index_of(&(&s * &s)).unwrap();
        assert_eq!(g.witness(i), &[1, 1, 0]);
    }

    #[test]
    fn cap_and_mismatch_errors() {
        let gens = [cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1]])];
        assert_eq!(closure(5, &gens, 50).unwrap_err(), ClosureError::CapExceeded { cap: 50 });
        assert!(matches!(
            closure(4, &gens, 50),
            Err(ClosureError::DegreeMismatch { index: 0, .. })
        ));
    }

    #[test]
    fn orbit_partition() {
        let gens = [cyc(6, &[&[0, 1, 2]]), cyc(6, &[&[3, 4]])];
        assert_eq!(orbits(6, &gens), vec![vec![0, 1, 2], vec![3, 4], vec![5]]);
    }
}
