//! Exhaustive search for solutions of size `n ≤ 6`.
//!
//! The search fills the table `C[x][y] = σ_x⁻¹(y)` cell by cell in
//! row-major order. Every row must be a permutation, and the condition
//! `σ_x σ_{σ_x⁻¹(y)} = σ_y σ_{σ_y⁻¹(x)}`, applied to a third point `z`,
//! reads `C[C[x][y]][C[x][z]] = C[C[y][x]][C[y][z]]`. Whenever one side of
//! an instance is known and the other side's cell is determined, that cell
//! is forced; rows with a single gap are completed. Leaves are validated.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::canon::{canonicalize_solution, CanonicalSolution};
use super::EnumerateError;
use crate::perm::Permutation;
use crate::solution::{validate_solution, FiniteSolution};

pub const MAX_SOLUTION_SIZE: usize = 6;
const EMPTY: u8 = u8::MAX;

#[derive(Clone)]
struct Table {
    n: usize,
    cells: [u8; 64],
    used: [u16; 8],
}

impl Table {
    fn new(n: usize) -> Self {
        Table { n, cells: [EMPTY; 64], used: [0; 8] }
    }

    #[inline]
    fn get(&self, x: usize, y: usize) -> u8 {
        self.cells[x * 8 + y]
    }

    /// Sets a cell; `false` on a conflict.
    fn set(&mut self, x: usize, y: usize, v: u8) -> bool {
        let cur = self.get(x, y);
        if cur != EMPTY {
            return cur == v;
        }
        if self.used[x] >> v & 1 == 1 {
            return false;
        }
        self.cells[x * 8 + y] = v;
        self.used[x] |= 1 << v;
        true
    }

    /// Runs forcing to a fixed point; `false` on a contradiction.
    fn propagate(&mut self) -> bool {
        let n = self.n;
        loop {
            let mut changed = false;
            for x in 0..n {
                let gaps = (0..n).filter(|&y| self.get(x, y) == EMPTY).count();
                if gaps == 1 {
                    let y = (0..n).find(|&y| self.get(x, y) == EMPTY).unwrap();
                    let v = (0..n as u8).find(|&v| self.used[x] >> v & 1 == 0).unwrap();
                    if !self.set(x, y, v) {
                        return false;
                    }
                    changed = true;
                }
            }
            for x in 0..n {
                for y in x + 1..n {
                    let (xy, yx) = (self.get(x, y), self.get(y, x));
                    if xy == EMPTY || yx == EMPTY {
                        continue;
                    }
                    for z in 0..n {
                        let (xz, yz) = (self.get(x, z), self.get(y, z));
                        if xz == EMPTY || yz == EMPTY {
                            continue;
                        }
                        let (a, b, c, d) = (xy as usize, xz as usize, yx as usize, yz as usize);
                        let l = self.get(a, b);
                        let r = self.get(c, d);
                        match (l == EMPTY, r == EMPTY) {
                            (false, false) => {
                                if l != r {
                                    return false;
                                }
                            }
                            (true, false) => {
                                if !self.set(a, b, r) {
                                    return false;
                                }
                                changed = true;
                            }
                            (false, true) => {
                                if !self.set(c, d, l) {
                                    return false;
                                }
                                changed = true;
                            }
                            (true, true) => {}
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn first_empty(&self) -> Option<(usize, usize)> {
        let n = self.n;
        (0..n * n).map(|k| (k / n, k % n)).find(|&(x, y)| self.get(x, y) == EMPTY)
    }

    fn to_solution(&self) -> FiniteSolution {
        let n = self.n;
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                let c = Permutation::from_images((0..n).map(|y| self.get(x, y) as usize).collect()).unwrap();
                c.inverse().into_images()
            })
            .collect();
        validate_solution(&rows).expect("search leaf is a solution")
    }

    /// Children of this node in increasing value order.
    fn children(&self) -> Vec<Table> {
        let Some((x, y)) = self.first_empty() else {
            return Vec::new();
        };
        (0..self.n as u8)
            .filter(|&v| self.used[x] >> v & 1 == 0)
            .filter_map(|v| {
                let mut t = self.clone();
                (t.set(x, y, v) && t.propagate()).then_some(t)
            })
            .collect()
    }

    fn dfs(&self, out: &mut Vec<FiniteSolution>) {
        if self.first_empty().is_none() {
            out.push(self.to_solution());
            return;
        }
        for c in self.children() {
            c.dfs(out);
        }
    }
}

/// Splits the tree into independent subtrees, in search order.
fn frontier(root: Table, target: usize) -> (Vec<Table>, Vec<FiniteSolution>) {
    let mut level = vec![root];
    let mut done = Vec::new();
    while level.len() < target {
        let mut next = Vec::new();
        let mut grew = false;
        for t in level {
            if t.first_empty().is_none() {
                done.push(t);
                continue;
            }
            grew = true;
            next.extend(t.children());
        }
        level = next;
        if !grew {
            break;
        }
    }
    let leaves = done.into_iter().map(|t| t.to_solution()).collect();
    (level, leaves)
}

fn search(root: Table) -> Vec<FiniteSolution> {
    let mut root = root;
    if !root.propagate() {
        return Vec::new();
    }
    let (branches, mut found) = frontier(root, 64);
    let parts: Vec<Vec<FiniteSolution>> = branches
        .par_iter()
        .map(|t| {
            let mut out = Vec::new();
            t.dfs(&mut out);
            out
        })
        .collect();
    found.extend(parts.into_iter().flatten());
    found
}

fn check_size(n: usize) -> Result<(), EnumerateError> {
    if (1..=MAX_SOLUTION_SIZE).contains(&n) {
        Ok(())
    } else {
        Err(EnumerateError::SizeCap { n, max: MAX_SOLUTION_SIZE })
    }
}

/// Every solution on `{0, …, n−1}`, sorted by σ-table.
pub fn enumerate_all_solutions(n: usize) -> Result<Vec<FiniteSolution>, EnumerateError> {
    check_size(n)?;
    let mut all = search(Table::new(n));
    all.sort_by(|a, b| a.sigmas().cmp(b.sigmas()));
    Ok(all)
}

/// Cycle types of `n`, as partitions in decreasing order.
fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// One solution per isomorphism class, as canonical forms in increasing
/// order. The diagonal `x ↦ x·x = σ_x⁻¹(x)` is fixed to one permutation per
/// cycle type, since relabelling conjugates it.
pub fn enumerate_solution_classes(n: usize) -> Result<Vec<CanonicalSolution>, EnumerateError> {
    check_size(n)?;
    let mut classes = BTreeSet::new();
    for shape in partitions(n, n) {
        let mut root = Table::new(n);
        let mut start = 0;
        let mut ok = true;
        for len in shape {
            for i in 0..len {
                let x = start + i;
                let img = start + (i + 1) % len;
                ok &= root.set(x, x, img as u8);
            }
            start += len;
        }
        debug_assert!(ok);
        let found = search(root);
        let forms: Vec<CanonicalSolution> = found.par_iter().map(canonicalize_solution).collect();
        classes.extend(forms);
    }
    Ok(classes.into_iter().collect())
}

/// Solutions of size `n`, either all of them or one per isomorphism class.
pub fn enumerate_solutions(n: usize, up_to_iso: bool) -> Result<Vec<FiniteSolution>, EnumerateError> {
    if up_to_iso {
        Ok(enumerate_solution_classes(n)?.iter().map(CanonicalSolution::to_solution).collect())
    } else {
        enumerate_all_solutions(n)
    }
}
