use super::{BraceError, FiniteBrace};
use crate::group::CayleyGroup;
use crate::perm::Permutation;

/// Largest carrier accepted by [`wreath_product`].
pub const WREATH_CAP: usize = 10_000;

/// Direct product; `(g, h)` has index `g * |H| + h`.
pub fn direct_product(g: &FiniteBrace, h: &FiniteBrace) -> Result<FiniteBrace, BraceError> {
    let add = g.additive().direct_product(h.additive());
    let mul = g.multiplicative().direct_product(h.multiplicative());
    FiniteBrace::from_groups(add, mul)
}

fn is_brace_automorphism(n: &FiniteBrace, f: &Permutation) -> Option<String> {
    let k = n.order();
    if f.degree() != k {
        return Some(format!("degree {} does not match order {k}", f.degree()));
    }
    for a in 0..k {
        for b in 0..k {
            if f.apply(n.add(a, b)) != n.add(f.apply(a), f.apply(b)) {
                return Some(format!("does not preserve {a}+{b}"));
            }
            if f.apply(n.mul(a, b)) != n.mul(f.apply(a), f.apply(b)) {
                return Some(format!("does not preserve {a}*{b}"));
            }
        }
    }
    None
}

/// Semidirect product `N ⋊ H`, with `eta[h]` the brace automorphism of `N`
/// attached to `h`. Multiplication is `(g₁,h₁)(g₂,h₂) = (g₁·η(h₁)(g₂), h₁h₂)`,
/// addition is componentwise, and `(g, h)` has index `g * |H| + h`.
pub fn semidirect_product(
    n: &FiniteBrace,
    h: &FiniteBrace,
    eta: &[Permutation],
) -> Result<FiniteBrace, BraceError> {
    if !n.is_left() || !h.is_left() {
        return Err(BraceError::InvalidAction("factors must be left braces".into()));
    }
    let kh = h.order();
    if eta.len() != kh {
        return Err(BraceError::InvalidAction(format!("{} automorphisms for {kh} elements", eta.len())));
    }
    for (x, f) in eta.iter().enumerate() {
        if let Some(why) = is_brace_automorphism(n, f) {
            return Err(BraceError::InvalidAction(format!("eta({x}) {why}")));
        }
    }
    if !eta[0].is_identity() {
        return Err(BraceError::InvalidAction("eta(0) is not the identity".into()));
    }
    for x in 0..kh {
        for y in 0..kh {
            if eta[h.mul(x, y)] != &eta[x] * &eta[y] {
                return Err(BraceError::InvalidAction(format!("eta({x}*{y}) != eta({x}) eta({y})")));
            }
        }
    }
    semidirect_unchecked(n, h, |x, g| eta[x].apply(g))
}

fn semidirect_unchecked(
    n: &FiniteBrace,
    h: &FiniteBrace,
    act: impl Fn(usize, usize) -> usize,
) -> Result<FiniteBrace, BraceError> {
    let (kn, kh) = (n.order(), h.order());
    let size = kn * kh;
    let add = n.additive().direct_product(h.additive());
    let mul = CayleyGroup::from_fn_unchecked(size, |p, q| {
        let (g1, h1) = (p / kh, p % kh);
        let (g2, h2) = (q / kh, q % kh);
        n.mul(g1, act(h1, g2)) * kh + h.mul(h1, h2)
    });
    FiniteBrace::from_groups_left(add, mul)
}

/// Wreath product `G ≀ H`: the semidirect product of the brace of functions
/// `H → G` (pointwise operations) by `H`, acting through `σ(h)(f)(x) = f(xh)`.
///
/// A function `f` is encoded in base `|G|` with `f(x)` as digit `x`.
pub fn wreath_product(g: &FiniteBrace, h: &FiniteBrace) -> Result<FiniteBrace, BraceError> {
    let (kg, kh) = (g.order(), h.order());
    let size = (kg as u128).pow(kh as u32) * kh as u128;
    if size > WREATH_CAP as u128 {
        return Err(BraceError::SizeCap { size, cap: WREATH_CAP });
    }
    let kw = kg.pow(kh as u32);
    let digits = |f: usize| -> Vec<usize> {
        let mut d = Vec::with_capacity(kh);
        let mut f = f;
        for _ in 0..kh {
            d.push(f % kg);
            f /= kg;
        }
        d
    };
    let encode = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &x| acc * kg + x) };
    let table: Vec<Vec<usize>> = (0..kw).map(digits).collect();
    let pointwise = |op: &dyn Fn(usize, usize) -> usize| {
        CayleyGroup::from_fn_unchecked(kw, |f1, f2| {
            let d: Vec<usize> = (0..kh).map(|x| op(table[f1][x], table[f2][x])).collect();
            encode(&d)
        })
    };
    let w_add = pointwise(&|a, b| g.add(a, b));
    let w_mul = pointwise(&|a, b| g.mul(a, b));
    let w = FiniteBrace::from_groups_left(w_add, w_mul)?;
    let act = |y: usize, f: usize| -> usize {
        let d: Vec<usize> = (0..kh).map(|x| table[f][h.mul(x, y)]).collect();
        encode(&d)
    };
    semidirect_unchecked(&w, h, act)
}
