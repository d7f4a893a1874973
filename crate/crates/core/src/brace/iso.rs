use super::FiniteBrace;

/// Per-element isomorphism invariants: additive order, multiplicative
/// order, order of `λ_a`, and number of fixed points of `λ_a`.
pub fn brace_invariants(b: &FiniteBrace) -> Vec<(usize, usize, usize, usize)> {
    let n = b.order();
    (0..n)
        .map(|a| {
            let lam = super::lambda_map(b, a);
            let fixed = (0..n).filter(|&x| lam.apply(x) == x).count();
            (b.additive().element_order(a), b.multiplicative().element_order(a), lam.order(), fixed)
        })
        .collect()
}

struct Search<'a> {
    a: &'a FiniteBrace,
    b: &'a FiniteBrace,
    gens: Vec<usize>,
    inv_a: Vec<(usize, usize, usize, usize)>,
    inv_b: Vec<(usize, usize, usize, usize)>,
}

impl Search<'_> {
    /// Extends `f` (defined on the subgroup generated by `gens[..k]`) to the
    /// subgroup generated by `gens[..=k]`; `None` on conflict.
    fn extend(&self, f: &[usize], k: usize, image: usize) -> Option<Vec<usize>> {
        let n = self.a.order();
        let mut f = f.to_vec();
        let mut back = vec![usize::MAX; n];
        let mut domain = Vec::new();
        for x in 0..n {
            if f[x] != usize::MAX {
                back[f[x]] = x;
                domain.push(x);
            }
        }
        let g = self.gens[k];
        if f[g] != usize::MAX {
            return (f[g] == image).then_some(f);
        }
        let mut pending = vec![(g, image)];
        while let Some((x, y)) = pending.pop() {
            if f[x] != usize::MAX {
                if f[x] != y {
                    return None;
                }
                continue;
            }
            if back[y] != usize::MAX || self.inv_a[x] != self.inv_b[y] {
                return None;
            }
            f[x] = y;
            back[y] = x;
            domain.push(x);
            for &d in &domain {
                pending.push((self.a.add(x, d), self.b.add(y, f[d])));
            }
        }
        for &x in &domain {
            for &y in &domain {
                let xy = self.a.mul(x, y);
                if f[xy] != usize::MAX && f[xy] != self.b.mul(f[x], f[y]) {
                    return None;
                }
            }
        }
        Some(f)
    }

    fn go(&self, f: &[usize], k: usize) -> Option<Vec<usize>> {
        if k == self.gens.len() {
            let n = self.a.order();
            let ok = (0..n).all(|x| (0..n).all(|y| f[self.a.mul(x, y)] == self.b.mul(f[x], f[y])));
            return ok.then(|| f.to_vec());
        }
        let g = self.gens[k];
        for y in 0..self.b.order() {
            if self.inv_b[y] != self.inv_a[g] {
                continue;
            }
            if let Some(next) = self.extend(f, k, y) {
                if let Some(done) = self.go(&next, k + 1) {
                    return Some(done);
                }
            }
        }
        None
    }
}

/// An isomorphism `A → B` preserving both operations, as an index map.
pub fn brace_isomorphic(a: &FiniteBrace, b: &FiniteBrace) -> Option<Vec<usize>> {
    if a.order() != b.order() || a.side() != b.side() {
        return None;
    }
    let inv_a = brace_invariants(a);
    let inv_b = brace_invariants(b);
    let mut sa = inv_a.clone();
    let mut sb = inv_b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let search = Search {
        a,
        b,
        gens: a.additive().generating_set(),
        inv_a,
        inv_b,
    };
    let mut f = vec![usize::MAX; a.order()];
    f[0] = 0;
    search.go(&f, 0)
}
