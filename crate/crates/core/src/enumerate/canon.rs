//! Canonical forms: the lexicographically least table over a family of
//! relabellings closed under isomorphism.
//!
//! New labels are handed out by a fixed traversal. Starting from the
//! labelled points, pairs `(i, j)` of labels are processed in shell order
//! (`max(i, j)` increasing) and every unlabelled result of the structure's
//! operations on the pair gets the next label. When the traversal stalls the
//! search branches over the unlabelled points of least invariant. Because
//! the traversal only uses labels, isomorphic inputs yield the same set of
//! relabelled tables, and the least one is returned.

use crate::brace::{brace_invariants, FiniteBrace};
use crate::perm::Permutation;
use crate::solution::{point_invariants, FiniteSolution};

/// Canonical σ-table of a solution.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalSolution {
    pub n: usize,
    /// Row-major `σ_x(y)`.
    pub table: Vec<u8>,
}

/// Canonical table pair of a brace.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalBrace {
    pub n: usize,
    /// Row-major addition followed by row-major multiplication.
    pub tables: Vec<u8>,
}

impl CanonicalSolution {
    pub fn to_solution(&self) -> FiniteSolution {
        let rows: Vec<Vec<usize>> = self
            .table
            .chunks(self.n)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect();
        crate::solution::validate_solution(&rows).expect("canonical table is a solution")
    }
}

impl CanonicalBrace {
    pub fn to_brace(&self) -> FiniteBrace {
        let n = self.n;
        let rows = |t: &[u8]| -> Vec<Vec<usize>> { t.chunks(n).map(|r| r.iter().map(|&v| v as usize).collect()).collect() };
        crate::brace::validate_brace(&rows(&self.tables[..n * n]), &rows(&self.tables[n * n..]))
            .expect("canonical tables form a brace")
    }
}

struct Labeller<'a, I: Ord> {
    n: usize,
    ops: &'a dyn Fn(usize, usize, &mut Vec<usize>),
    invariant: &'a [I],
}

impl<I: Ord> Labeller<'_, I> {
    /// Extends `order` (new → old) by the traversal from pair index `pair`,
    /// branching on stalls, and calls `leaf` on every complete labelling.
    fn run(&self, mut order: Vec<usize>, mut label: Vec<usize>, mut pair: usize, leaf: &mut dyn FnMut(&[usize])) {
        let n = self.n;
        let mut scratch = Vec::new();
        while let Some((i, j)) = shell_pair(pair, order.len()) {
            pair += 1;
            scratch.clear();
            (self.ops)(order[i], order[j], &mut scratch);
            for &w in &scratch {
                if label[w] == usize::MAX {
                    label[w] = order.len();
                    order.push(w);
                }
            }
        }
        if order.len() == n {
            leaf(&order);
            return;
        }
        let best = (0..n).filter(|&p| label[p] == usize::MAX).map(|p| &self.invariant[p]).min().unwrap();
        for p in (0..n).filter(|&p| label[p] == usize::MAX && &self.invariant[p] == best) {
            let mut order = order.clone();
            let mut label = label.clone();
            label[p] = order.len();
            order.push(p);
            self.run(order, label, pair, leaf);
        }
    }
}

/// The `p`-th pair in shell order, provided both labels are below `len`.
fn shell_pair(p: usize, len: usize) -> Option<(usize, usize)> {
    // shell m holds 2m + 1 pairs: (m, 0), (0, m), (m, 1), (1, m), …, (m, m)
    let m = (p as f64).sqrt() as usize;
    let m = if (m + 1) * (m + 1) <= p { m + 1 } else if m * m > p { m - 1 } else { m };
    if m >= len {
        return None;
    }
    let k = p - m * m;
    let t = k / 2;
    Some(if k == 2 * m { (m, m) } else if k % 2 == 0 { (m, t) } else { (t, m) })
}

fn min_over_labellings<I: Ord>(
    n: usize,
    ops: &dyn Fn(usize, usize, &mut Vec<usize>),
    invariant: &[I],
    fixed_start: Option<usize>,
    table_of: &dyn Fn(&[usize]) -> Vec<u8>,
) -> (Vec<u8>, Vec<usize>) {
    let labeller = Labeller { n, ops, invariant };
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    let mut leaf = |order: &[usize]| {
        let t = table_of(order);
        if best.as_ref().map_or(true, |(b, _)| t < *b) {
            best = Some((t, order.to_vec()));
        }
    };
    let mut label = vec![usize::MAX; n];
    let mut order = Vec::new();
    if let Some(p) = fixed_start {
        label[p] = 0;
        order.push(p);
    }
    labeller.run(order, label, 0, &mut leaf);
    best.unwrap()
}

fn solution_table(s: &FiniteSolution, order: &[usize]) -> Vec<u8> {
    let n = s.size();
    let mut label = vec![0; n];
    for (i, &p) in order.iter().enumerate() {
        label[p] = i;
    }
    let mut t = Vec::with_capacity(n * n);
    for &x in order {
        for &y in order {
            t.push(label[s.sigma(x).apply(y)] as u8);
        }
    }
    t
}

/// Canonical form of a solution, together with the relabelling `old → new`
/// that produces it.
pub fn canonical_solution_with_map(s: &FiniteSolution) -> (CanonicalSolution, Permutation) {
    let n = s.size();
    let invariant = point_invariants(s);
    let ops = |u: usize, v: usize, out: &mut Vec<usize>| {
        out.push(s.sigma(u).apply(v));
        out.push(s.sigma_inv(u).apply(v));
    };
    let (table, order) = min_over_labellings(n, &ops, &invariant, None, &|o| solution_table(s, o));
    let order = Permutation::from_images(order).unwrap();
    (CanonicalSolution { n, table }, order.inverse())
}

pub fn canonicalize_solution(s: &FiniteSolution) -> CanonicalSolution {
    canonical_solution_with_map(s).0
}

fn brace_tables(b: &FiniteBrace, order: &[usize]) -> Vec<u8> {
    let n = b.order();
    let mut label = vec![0; n];
    for (i, &p) in order.iter().enumerate() {
        label[p] = i;
    }
    let mut t = Vec::with_capacity(2 * n * n);
    for &x in order {
        for &y in order {
            t.push(label[b.add(x, y)] as u8);
        }
    }
    for &x in order {
        for &y in order {
            t.push(label[b.mul(x, y)] as u8);
        }
    }
    t
}

/// Canonical form of a brace (0 stays 0), with the relabelling `old → new`.
pub fn canonical_brace_with_map(b: &FiniteBrace) -> (CanonicalBrace, Permutation) {
    let n = b.order();
    let invariant = brace_invariants(b);
    let ops = |u: usize, v: usize, out: &mut Vec<usize>| {
        out.push(b.add(u, v));
        out.push(b.mul(u, v));
    };
    let (tables, order) = min_over_labellings(n, &ops, &invariant, Some(0), &|o| brace_tables(b, o));
    let order = Permutation::from_images(order).unwrap();
    (CanonicalBrace { n, tables }, order.inverse())
}

pub fn canonicalize_brace(b: &FiniteBrace) -> CanonicalBrace {
    canonical_brace_with_map(b).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{six_point_solution, sym3_brace};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn shell_order_covers_squares() {
        for len in 1..7 {
            let pairs: Vec<(usize, usize)> = (0..).map_while(|p| shell_pair(p, len)).collect();
            assert_eq!(pairs.len(), len * len);
            let mut sorted = pairs.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), len * len);
        }
    }

    #[test]
    fn relabellings_share_forms() {
        let s = six_point_solution();
        let c = canonicalize_solution(&s);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..30 {
            let mut images: Vec<usize> = (0..6).collect();
            images.shuffle(&mut rng);
            let t = s.relabelled(&Permutation::from_images(images).unwrap());
            assert_eq!(canonicalize_solution(&t), c);
        }
        assert_eq!(canonicalize_solution(&c.to_solution()), c);
        let (c2, f) = canonical_solution_with_map(&s);
        assert_eq!(s.relabelled(&f), c2.to_solution());
    }

    #[test]
    fn trivial_and_permutation_differ() {
        let t = FiniteSolution::trivial(2);
        let p = FiniteSolution::permutation_solution(&Permutation::from_cycles(2, &[&[0, 1]]).unwrap());
        assert_ne!(canonicalize_solution(&t), canonicalize_solution(&p));
    }

    #[test]
    fn brace_forms_are_stable() {
        let b = sym3_brace();
        let c = canonicalize_brace(&b);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for _ in 0..30 {
            let mut rest: Vec<usize> = (1..6).collect();
            rest.shuffle(&mut rng);
            let mut images = vec![0];
            images.extend(rest);
            let other = b.relabelled(&Permutation::from_images(images).unwrap());
            assert_eq!(canonicalize_brace(&other), c);
        }
        assert_eq!(canonicalize_brace(&c.to_brace()), c);
        let (c2, f) = canonical_brace_with_map(&b);
        assert_eq!(b.relabelled(&f), c2.to_brace());
    }
}
