//! The embedding `g ↦ g − 1` of a finite p-group into the circle group of
//! the augmentation ideal `ω(F_p[G])`.

use super::ConstructionError;
use crate::group::CayleyGroup;

pub const EMBED_MAX_ORDER: usize = 32;
pub const EMBED_PRIMES: [usize; 3] = [2, 3, 5];

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct EmbeddingReport {
    pub p: usize,
    pub group_order: usize,
    /// `|ω(F_p[G])| = p^{|G|−1}`.
    pub ring_order: u128,
    pub injective: bool,
    pub homomorphism: bool,
    /// The image is closed under `∘` and isomorphic to `G`.
    pub image_is_copy_of_group: bool,
    /// Coefficient vector of `f(g)` for each `g`.
    pub images: Vec<Vec<u8>>,
}

/// `(ab)_k = Σ_{gh = k} a_g b_h` over `F_p`.
fn convolve(g: &CayleyGroup, p: usize, a: &[u8], b: &[u8]) -> Vec<u8> {
    let n = g.order();
    let mut out = vec![0usize; n];
    for (x, &ax) in a.iter().enumerate().filter(|&(_, &c)| c != 0) {
        for (y, &by) in b.iter().enumerate().filter(|&(_, &c)| c != 0) {
            out[g.op(x, y)] += ax as usize * by as usize;
        }
    }
    out.into_iter().map(|c| (c % p) as u8).collect()
}

fn circle(g: &CayleyGroup, p: usize, a: &[u8], b: &[u8]) -> Vec<u8> {
    let ab = convolve(g, p, a, b);
    ab.iter()
        .zip(a)
        .zip(b)
        .map(|((&x, &y), &z)| ((x as usize + y as usize + z as usize) % p) as u8)
        .collect()
}

/// Verifies that `f(g) = g − 1` is an injective homomorphism from `G` into
/// `(ω(F_p[G]), ∘)`.
pub fn adjoint_embedding(p: usize, g: &CayleyGroup) -> Result<EmbeddingReport, ConstructionError> {
    if !EMBED_PRIMES.contains(&p) {
        return Err(ConstructionError::Unsupported(format!("prime {p} not in {EMBED_PRIMES:?}")));
    }
    let n = g.order();
    if n > EMBED_MAX_ORDER {
        return Err(ConstructionError::Unsupported(format!("group order {n} exceeds {EMBED_MAX_ORDER}")));
    }
    if !g.is_p_group(p) {
        return Err(ConstructionError::NotPGroup { p });
    }
    let f: Vec<Vec<u8>> = (0..n)
        .map(|x| {
            let mut v = vec![0u8; n];
            v[x] = (v[x] + 1) % p as u8;
            v[0] = (v[0] + p as u8 - 1) % p as u8;
            v
        })
        .collect();
    let augmented = f.iter().all(|v| v.iter().map(|&c| c as usize).sum::<usize>() % p == 0);
    let mut sorted = f.clone();
    sorted.sort();
    sorted.dedup();
    let injective = sorted.len() == n;
    let homomorphism = (0..n).all(|x| (0..n).all(|y| f[g.op(x, y)] == circle(g, p, &f[x], &f[y])));
    let copy = if injective {
        let table: Option<Vec<Vec<usize>>> = (0..n)
            .map(|x| (0..n).map(|y| f.iter().position(|v| *v == circle(g, p, &f[x], &f[y]))).collect())
            .collect();
        match table.map(|t| crate::group::validate_group(&t)) {
            Some(Ok(image)) => image.is_isomorphic(g),
            _ => false,
        }
    } else {
        false
    };
    if !(augmented && injective && homomorphism && copy) {
        return Err(ConstructionError::Property("g -> g-1 is not an embedding".into()));
    }
    Ok(EmbeddingReport {
        p,
        group_order: n,
        ring_order: (p as u128).pow(n as u32 - 1),
        injective,
        homomorphism,
        image_is_copy_of_group: copy,
        images: f,
    })
}
