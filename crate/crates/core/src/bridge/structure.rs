//! The structure group `G(X, r) ≅ {(a, φ(a)) : a ∈ Z^X}` of a solution,
//! with `φ` evaluated lazily and memoized.

use std::collections::HashMap;
use std::sync::RwLock;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::perm::Permutation;
use crate::solution::FiniteSolution;

/// An element of the structure group, stored by its `Z^X` component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StructureGroupElement {
    pub vector: Vec<i64>,
}

impl StructureGroupElement {
    pub fn zero(n: usize) -> Self {
        StructureGroupElement { vector: vec![0; n] }
    }

    pub fn basis(n: usize, x: usize) -> Self {
        let mut vector = vec![0; n];
        vector[x] = 1;
        StructureGroupElement { vector }
    }

    pub fn l1_norm(&self) -> u64 {
        self.vector.iter().map(|v| v.unsigned_abs()).sum()
    }
}

/// Which coordinate the descent removes first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DescentPolicy {
    /// Smallest positive coordinate, then smallest negative one.
    First,
    /// Uniformly random non-zero coordinate.
    Random,
}

pub struct IStructure {
    base: FiniteSolution,
    diag: Permutation,
    diag_inv: Permutation,
    memo: RwLock<HashMap<Vec<i64>, Permutation>>,
}

impl IStructure {
    pub fn new(base: &FiniteSolution) -> Self {
        let diag = base.diagonal();
        let diag_inv = diag.inverse();
        IStructure {
            base: base.clone(),
            diag,
            diag_inv,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn base(&self) -> &FiniteSolution {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.base.size()
    }

    /// `T(x) = σ_x⁻¹(x)`.
    pub fn diag(&self) -> &Permutation {
        &self.diag
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    /// `φ(−e_y) = σ⁻¹_{T⁻¹(y)}`.
    pub fn phi_neg_basis(&self, y: usize) -> &Permutation {
        self.base.sigma_inv(self.diag_inv.apply(y))
    }

    /// `φ(a)`, memoized; the descent removes the smallest positive
    /// coordinate first, then negative ones.
    pub fn phi_eval(&self, a: &[i64]) -> Permutation {
        if let Some(p) = self.memo.read().unwrap().get(a) {
            return p.clone();
        }
        let p = self.descend(a, DescentPolicy::First, &mut rand::thread_rng());
        self.memo.write().unwrap().insert(a.to_vec(), p.clone());
        p
    }

    /// `φ(a)` without the memo table, following `policy`.
    pub fn phi_with_policy(&self, a: &[i64], policy: DescentPolicy, rng: &mut impl Rng) -> Permutation {
        self.descend(a, policy, rng)
    }

    /// For `a_x > 0`: `φ(a) = σ_x φ(σ_x⁻¹(a − e_x))`. For `a_y < 0`:
    /// `φ(a) = φ(−e_y) φ(φ(−e_y)⁻¹(a + e_y))`. Each step lowers `|a|₁` by one.
    fn descend(&self, a: &[i64], policy: DescentPolicy, rng: &mut impl Rng) -> Permutation {
        let n = self.size();
        assert_eq!(a.len(), n, "vector length must equal the solution size");
        let mut v = a.to_vec();
        let mut acc = Permutation::identity(n);
        loop {
            let pick = match policy {
                DescentPolicy::First => (0..n).find(|&x| v[x] > 0).or_else(|| (0..n).find(|&x| v[x] < 0)),
                DescentPolicy::Random => {
                    let nz: Vec<usize> = (0..n).filter(|&x| v[x] != 0).collect();
                    nz.choose(rng).copied()
                }
            };
            let Some(x) = pick else {
                return acc;
            };
            let (step, step_inv) = if v[x] > 0 {
                v[x] -= 1;
                (self.base.sigma(x), self.base.sigma_inv(x))
            } else {
                v[x] += 1;
                let t = self.diag_inv.apply(x);
                (self.base.sigma_inv(t), self.base.sigma(t))
            };
            acc = &acc * step;
            v = step_inv.act_on_vector(&v);
        }
    }

    /// `(a)·(b) = a + φ(a)(b)`.
    pub fn sg_mul(&self, a: &StructureGroupElement, b: &StructureGroupElement) -> StructureGroupElement {
        let moved = self.phi_eval(&a.vector).act_on_vector(&b.vector);
        StructureGroupElement {
            vector: a.vector.iter().zip(&moved).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sg_add(&self, a: &StructureGroupElement, b: &StructureGroupElement) -> StructureGroupElement {
        StructureGroupElement {
            vector: a.vector.iter().zip(&b.vector).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sg_neg(&self, a: &StructureGroupElement) -> StructureGroupElement {
        StructureGroupElement {
            vector: a.vector.iter().map(|x| -x).collect(),
        }
    }

    /// `(a)⁻¹ = −φ(a)⁻¹(a)`.
    pub fn sg_inv(&self, a: &StructureGroupElement) -> StructureGroupElement {
        let back = self.phi_eval(&a.vector).inverse().act_on_vector(&a.vector);
        StructureGroupElement {
            vector: back.into_iter().map(|x| -x).collect(),
        }
    }

    /// `λ_a(b) = ab − a = φ(a)(b)`.
    pub fn sg_lambda(&self, a: &StructureGroupElement, b: &StructureGroupElement) -> StructureGroupElement {
        StructureGroupElement {
            vector: self.phi_eval(&a.vector).act_on_vector(&b.vector),
        }
    }
}

fn basis_index(v: &[i64]) -> Option<usize> {
    let mut found = None;
    for (i, &c) in v.iter().enumerate() {
        match c {
            0 => {}
            1 if found.is_none() => found = Some(i),
            _ => return None,
        }
    }
    found
}

/// `λ_{e_x}(e_y)` is a basis vector for all `x, y`, and `−(e_x)⁻¹ = e_{T(x)}`
/// is a basis vector for every `x`.
pub fn itype_basis_check(s: &IStructure) -> bool {
    let n = s.size();
    let lambda_ok = (0..n).all(|x| {
        (0..n).all(|y| {
            let l = s.sg_lambda(&StructureGroupElement::basis(n, x), &StructureGroupElement::basis(n, y));
            basis_index(&l.vector) == Some(s.base().sigma(x).apply(y))
        })
    });
    let inverse_ok = (0..n).all(|x| {
        let inv = s.sg_inv(&StructureGroupElement::basis(n, x));
        basis_index(&s.sg_neg(&inv).vector) == Some(s.diag().apply(x))
    });
    lambda_ok && inverse_ok
}
