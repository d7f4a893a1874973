//! Permutations of `{0..n-1}`.
//!
//! Composition applies the right factor first: `(p * q)(i) = p(q(i))`.
//! Every product of permutations in this crate (λ-maps, σ-maps, group
//! closures) uses this convention.

use std::fmt;
use std::ops::Mul;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("image list is not a bijection of 0..{degree}: value {value} at position {position}")]
    NotBijection {
        degree: usize,
        position: usize,
        value: usize,
    },
}

/// A bijection of `{0..n-1}`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (position, &value) in images.iter().enumerate() {
            if value >= n || seen[value] {
                return Err(PermError::NotBijection {
                    degree: n,
                    position,
                    value,
                });
            }
            seen[value] = true;
        }
        Ok(Permutation(images))
    }

    /// Caller guarantees `images` is a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation(images)
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]` for `0 -> 1 -> 2 -> 0`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a >= n || b >= n || moved[a] {
                    return Err(PermError::NotBijection {
                        degree: n,
                        position: a,
                        value: b,
                    });
                }
                moved[a] = true;
                images[a] = b;
            }
        }
        Self::from_images(images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn into_images(self) -> Vec<usize> {
        self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`, i.e. `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation(other.0.iter().map(|&j| self.0[j]).collect()))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    /// Coordinate action on `Z^X`: `(π·v)[π(i)] = v[i]`, so `π·e_i = e_{π(i)}`.
    pub fn act_on_vector(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.degree(), "vector length must equal degree");
        let mut out = vec![0; v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.0[i]] = x;
        }
        out
    }

    /// Sorted cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        lengths
    }

    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, lcm)
    }

    /// Relabels by `f`: returns `f ∘ self ∘ f⁻¹`.
    pub fn conjugate_by(&self, f: &Permutation) -> Permutation {
        let mut out = vec![0; self.degree()];
        for i in 0..self.degree() {
            out[f.apply(i)] = f.apply(self.apply(i));
        }
        Permutation(out)
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Free-function form of [`Permutation::compose`].
pub fn perm_compose(p: &Permutation, q: &Permutation) -> Result<Permutation, PermError> {
    p.compose(q)
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] for the checked form.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("permutation degree mismatch")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, 0-based; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut any = false;
        for start in 0..n {
            if seen[start] || self.0[start] == start {
                seen[start] = true;
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{i}")?;
                first = false;
                i = self.0[i];
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// All permutations of degree `n` in lexicographic order of image lists.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation(current.clone()));
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}
