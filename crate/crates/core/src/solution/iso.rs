use super::FiniteSolution;

/// Relabelling-invariant data of a point `x`: cycle type of `σ_x`, whether
/// `σ_x(x) = x`, the number of points sharing `σ_x`, and the cycle type
/// of `γ_x`.
pub fn point_invariants(s: &FiniteSolution) -> Vec<(Vec<usize>, bool, usize, Vec<usize>)> {
    let n = s.size();
    (0..n)
        .map(|x| {
            let same = (0..n).filter(|&y| s.sigma(y) == s.sigma(x)).count();
            (s.sigma(x).cycle_type(), s.sigma(x).apply(x) == x, same, s.gamma(x).cycle_type())
        })
        .collect()
}

struct Search<'a> {
    s: &'a FiniteSolution,
    t: &'a FiniteSolution,
    inv_s: Vec<(Vec<usize>, bool, usize, Vec<usize>)>,
    inv_t: Vec<(Vec<usize>, bool, usize, Vec<usize>)>,
}

impl Search<'_> {
    /// Adds `x ↦ y` and closes under `f(σ_a(b)) = σ'_{f(a)}(f(b))` and the
    /// analogue for `σ⁻¹`; `None` on conflict.
    fn assign(&self, f: &[usize], x: usize, y: usize) -> Option<Vec<usize>> {
        let n = self.s.size();
        let mut f = f.to_vec();
        let mut back = vec![usize::MAX; n];
        let mut domain = Vec::new();
        for (a, &b) in f.iter().enumerate() {
            if b != usize::MAX {
                back[b] = a;
                domain.push(a);
            }
        }
        let mut pending = vec![(x, y)];
        while let Some((a, b)) = pending.pop() {
            if f[a] != usize::MAX {
                if f[a] != b {
                    return None;
                }
                continue;
            }
            if back[b] != usize::MAX || self.inv_s[a] != self.inv_t[b] {
                return None;
            }
            f[a] = b;
            back[b] = a;
            domain.push(a);
            for &d in &domain {
                let (fa, fd) = (f[a], f[d]);
                pending.push((self.s.sigma(a).apply(d), self.t.sigma(fa).apply(fd)));
                pending.push((self.s.sigma(d).apply(a), self.t.sigma(fd).apply(fa)));
                pending.push((self.s.sigma_inv(a).apply(d), self.t.sigma_inv(fa).apply(fd)));
                pending.push((self.s.sigma_inv(d).apply(a), self.t.sigma_inv(fd).apply(fa)));
            }
        }
        Some(f)
    }

    fn go(&self, f: &[usize]) -> Option<Vec<usize>> {
        let n = self.s.size();
        let Some(x) = (0..n).find(|&x| f[x] == usize::MAX) else {
            let ok = (0..n).all(|a| (0..n).all(|b| f[self.s.sigma(a).apply(b)] == self.t.sigma(f[a]).apply(f[b])));
            return ok.then(|| f.to_vec());
        };
        let used: Vec<bool> = {
            let mut u = vec![false; n];
            for &b in f.iter().filter(|&&b| b != usize::MAX) {
                u[b] = true;
            }
            u
        };
        for y in (0..n).filter(|&y| !used[y] && self.inv_t[y] == self.inv_s[x]) {
            if let Some(next) = self.assign(f, x, y) {
                if let Some(done) = self.go(&next) {
                    return Some(done);
                }
            }
        }
        None
    }
}

/// A bijection `f` with `σ'_{f(x)} = f σ_x f⁻¹` for all `x`, if one exists.
pub fn solution_isomorphic(s: &FiniteSolution, t: &FiniteSolution) -> Option<Vec<usize>> {
    if s.size() != t.size() {
        return None;
    }
    let inv_s = point_invariants(s);
    let inv_t = point_invariants(t);
    let mut a = inv_s.clone();
    let mut b = inv_t.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    let search = Search { s, t, inv_s, inv_t };
    search.go(&vec![usize::MAX; s.size()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::six_point_solution;
    use crate::perm::Permutation;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn trivial_vs_permutation_solution() {
        let t = FiniteSolution::trivial(2);
        let p = FiniteSolution::permutation_solution(&Permutation::from_cycles(2, &[&[0, 1]]).unwrap());
        assert!(solution_isomorphic(&t, &t).is_some());
        assert!(solution_isomorphic(&t, &p).is_none());
    }

    #[test]
    fn relabelled_six_point_is_isomorphic() {
        let s = six_point_solution();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let mut images: Vec<usize> = (0..6).collect();
            images.shuffle(&mut rng);
            let f = Permutation::from_images(images).unwrap();
            let t = s.relabelled(&f);
            let g = solution_isomorphic(&s, &t).unwrap();
            let g = Permutation::from_images(g).unwrap();
            assert_eq!(s.relabelled(&g), t);
        }
    }
}
