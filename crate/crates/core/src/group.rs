//! Finite groups given by Cayley tables.
//!
//! Elements are indices `0..n`; the neutral element of a validated group is
//! always index 0. Tables whose identity sits elsewhere are relabelled on
//! ingest by swapping that element with 0.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::perm::{gcd, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("empty table")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry {value} at ({row}, {col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("not a Latin square: value {value} repeats in row {row}")]
    RowRepeat { row: usize, value: usize },
    #[error("not a Latin square: value {value} repeats in column {col}")]
    ColumnRepeat { col: usize, value: usize },
    #[error("no identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    MissingInverse { element: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NonAssociative { a: usize, b: usize, c: usize },
}

/// A validated finite group with identity 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CayleyGroup {
    n: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
}

/// Checks the group axioms on `table` and returns the group, relabelled so
/// that the identity is 0.
pub fn validate_group(table: &[Vec<usize>]) -> Result<CayleyGroup, GroupError> {
    validate_group_relabelled(table).map(|(g, _)| g)
}

/// Like [`validate_group`], also returning the relabelling `old -> new`
/// that was applied (a transposition of 0 and the identity, or the identity).
pub fn validate_group_relabelled(
    table: &[Vec<usize>],
) -> Result<(CayleyGroup, Permutation), GroupError> {
    let n = table.len();
    if n == 0 {
        return Err(GroupError::Empty);
    }
    let mut flat = Vec::with_capacity(n * n);
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != n {
            return Err(GroupError::NotSquare {
                row,
                len: entries.len(),
                expected: n,
            });
        }
        for (col, &value) in entries.iter().enumerate() {
            if value >= n {
                return Err(GroupError::EntryOutOfRange { row, col, value });
            }
        }
        flat.extend_from_slice(entries);
    }
    check_latin(n, &flat)?;
    let e = find_identity(n, &flat).ok_or(GroupError::NoIdentity)?;
    let relabel = if e == 0 {
        Permutation::identity(n)
    } else {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(0, e);
        Permutation::from_images_unchecked(images)
    };
    let flat = relabel_table(n, &flat, &relabel);
    let mut inv = vec![usize::MAX; n];
    for a in 0..n {
        let b = (0..n).find(|&b| flat[a * n + b] == 0).unwrap();
        if flat[b * n + a] != 0 {
            return Err(GroupError::MissingInverse {
                element: relabel.inverse().apply(a),
            });
        }
        inv[a] = b;
    }
    let back = relabel.inverse();
    for a in 0..n {
        for b in 0..n {
            let ab = flat[a * n + b];
            for c in 0..n {
                if flat[ab * n + c] != flat[a * n + flat[b * n + c]] {
                    return Err(GroupError::NonAssociative {
                        a: back.apply(a),
                        b: back.apply(b),
                        c: back.apply(c),
                    });
                }
            }
        }
    }
    Ok((CayleyGroup { n, table: flat, inv }, relabel))
}

fn check_latin(n: usize, flat: &[usize]) -> Result<(), GroupError> {
    for row in 0..n {
        let mut seen = vec![false; n];
        for col in 0..n {
            let v = flat[row * n + col];
            if std::mem::replace(&mut seen[v], true) {
                return Err(GroupError::RowRepeat { row, value: v });
            }
        }
    }
    for col in 0..n {
        let mut seen = vec![false; n];
        for row in 0..n {
            let v = flat[row * n + col];
            if std::mem::replace(&mut seen[v], true) {
                return Err(GroupError::ColumnRepeat { col, value: v });
            }
        }
    }
    Ok(())
}

fn find_identity(n: usize, flat: &[usize]) -> Option<usize> {
    (0..n).find(|&e| (0..n).all(|a| flat[e * n + a] == a && flat[a * n + e] == a))
}

/// Applies `old -> new` relabelling `f` to a flat table.
pub(crate) fn relabel_table(n: usize, flat: &[usize], f: &Permutation) -> Vec<usize> {
    let mut out = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            out[f.apply(a) * n + f.apply(b)] = f.apply(flat[a * n + b]);
        }
    }
    out
}

impl CayleyGroup {
    /// Builds a group from a multiplication closure without re-checking the
    /// axioms. Used by constructions whose outputs are validated downstream.
    pub(crate) fn from_fn_unchecked(n: usize, op: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(op(a, b));
            }
        }
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[a] = (0..n).find(|&b| table[a * n + b] == 0).expect("no inverse");
        }
        CayleyGroup { n, table, inv }
    }

    /// Validates the table produced by `op`.
    pub fn from_fn(n: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self, GroupError> {
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| op(a, b)).collect()).collect();
        validate_group(&rows)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut r = 0;
        for _ in 0..k {
            r = self.op(r, a);
        }
        r
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.op(a, b);
        self.op(self.op(self.inv(a), self.inv(b)), ab)
    }

    pub fn center(&self) -> Vec<bool> {
        (0..self.n)
            .map(|a| (0..self.n).all(|b| self.op(a, b) == self.op(b, a)))
            .collect()
    }

    /// Subgroup generated by `gens`, as a membership vector.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.n];
        member[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.op(x, g);
                if !member[y] {
                    member[y] = true;
                    queue.push_back(y);
                }
            }
        }
        member
    }

    /// `[A, B]`, the subgroup generated by commutators of elements of `a` and `b`.
    pub fn commutator_subgroup(&self, a: &[bool], b: &[bool]) -> Vec<bool> {
        let mut gens = Vec::new();
        let mut seen = vec![false; self.n];
        for x in (0..self.n).filter(|&x| a[x]) {
            for y in (0..self.n).filter(|&y| b[y]) {
                let c = self.commutator(x, y);
                if !seen[c] {
                    seen[c] = true;
                    gens.push(c);
                }
            }
        }
        self.subgroup_generated(&gens)
    }

    /// Lower central series `G = γ₁ ⊇ γ₂ ⊇ …`, computed until it stabilises.
    pub fn lower_central_series(&self) -> Vec<Vec<bool>> {
        let whole = vec![true; self.n];
        let mut series = vec![whole.clone()];
        loop {
            let next = self.commutator_subgroup(series.last().unwrap(), &whole);
            if &next == series.last().unwrap() {
                break;
            }
            series.push(next);
        }
        series
    }

    /// Nilpotency class (0 for the trivial group), or `None` if not nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let series = self.lower_central_series();
        let last = series.last().unwrap();
        if last.iter().filter(|&&m| m).count() == 1 {
            Some(series.len() - 1)
        } else {
            None
        }
    }

    pub fn is_subgroup(&self, set: &[bool]) -> bool {
        set[0]
            && (0..self.n)
                .filter(|&a| set[a])
                .all(|a| (0..self.n).filter(|&b| set[b]).all(|b| set[self.op(a, b)]))
    }

    pub fn is_normal(&self, set: &[bool]) -> bool {
        self.is_subgroup(set)
            && (0..self.n).all(|g| {
                (0..self.n)
                    .filter(|&s| set[s])
                    .all(|s| set[self.op(self.op(g, s), self.inv(g))])
            })
    }

    /// True if the order of the group is a power of `p` (1 counts).
    pub fn is_p_group(&self, p: usize) -> bool {
        let mut m = self.n;
        while m % p == 0 {
            m /= p;
        }
        m == 1
    }

    /// Greedy generating set: scans elements in index order, keeping those
    /// not yet generated.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.subgroup_generated(&gens);
        for a in 1..self.n {
            if !span[a] {
                gens.push(a);
                span = self.subgroup_generated(&gens);
            }
        }
        gens
    }

    /// Finds an isomorphism `self -> other` (as an index map), if any.
    pub fn isomorphism_to(&self, other: &CayleyGroup) -> Option<Vec<usize>> {
        let mut out = Vec::new();
        self.isomorphisms(other, true, &mut out);
        out.pop()
    }

    /// Every isomorphism `self -> other`, in lexicographic order of the
    /// images of [`CayleyGroup::generating_set`].
    pub fn all_isomorphisms_to(&self, other: &CayleyGroup) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.isomorphisms(other, false, &mut out);
        out
    }

    /// `Aut(G)` as permutations of the elements.
    pub fn automorphisms(&self) -> Vec<Permutation> {
        self.all_isomorphisms_to(self)
            .into_iter()
            .map(|f| Permutation::from_images_unchecked(f))
            .collect()
    }

    fn isomorphisms(&self, other: &CayleyGroup, first_only: bool, out: &mut Vec<Vec<usize>>) {
        if self.n != other.n {
            return;
        }
        let orders_a: Vec<usize> = (0..self.n).map(|a| self.element_order(a)).collect();
        let orders_b: Vec<usize> = (0..other.n).map(|a| other.element_order(a)).collect();
        let mut hist_a = orders_a.clone();
        let mut hist_b = orders_b.clone();
        hist_a.sort_unstable();
        hist_b.sort_unstable();
        if hist_a != hist_b {
            return;
        }
        let gens = self.generating_set();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| (0..other.n).filter(|&h| orders_b[h] == orders_a[g]).collect())
            .collect();
        let search = IsoSearch { a: self, b: other, gens: &gens, candidates: &candidates, first_only };
        let mut f = vec![usize::MAX; self.n];
        f[0] = 0;
        let mut used = vec![false; self.n];
        used[0] = true;
        search.go(0, &mut vec![0; gens.len()], &f, &used, out);
    }

    pub fn is_isomorphic(&self, other: &CayleyGroup) -> bool {
        self.isomorphism_to(other).is_some()
    }

    /// The subgroup on the members of `set`, relabelled in increasing index
    /// order. Returns the group and the list of original indices.
    pub fn restrict(&self, set: &[bool]) -> (CayleyGroup, Vec<usize>) {
        let elems: Vec<usize> = (0..self.n).filter(|&a| set[a]).collect();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &a) in elems.iter().enumerate() {
            pos[a] = i;
        }
        let g = CayleyGroup::from_fn_unchecked(elems.len(), |i, j| pos[self.op(elems[i], elems[j])]);
        (g, elems)
    }

    /// Group with the opposite multiplication `a ·ᵒᵖ b = b · a`.
    pub fn opposite(&self) -> CayleyGroup {
        CayleyGroup::from_fn_unchecked(self.n, |a, b| self.op(b, a))
    }

    pub fn direct_product(&self, other: &CayleyGroup) -> CayleyGroup {
        let m = other.n;
        CayleyGroup::from_fn_unchecked(self.n * m, |x, y| {
            self.op(x / m, y / m) * m + other.op(x % m, y % m)
        })
    }

    /// Relabels the group by `old -> new` map `f` (which must fix 0).
    pub(crate) fn relabelled(&self, f: &Permutation) -> CayleyGroup {
        debug_assert_eq!(f.apply(0), 0);
        let table = relabel_table(self.n, &self.table, f);
        let mut inv = vec![0; self.n];
        for a in 0..self.n {
            inv[f.apply(a)] = f.apply(self.inv[a]);
        }
        CayleyGroup { n: self.n, table, inv }
    }
}

struct IsoSearch<'a> {
    a: &'a CayleyGroup,
    b: &'a CayleyGroup,
    gens: &'a [usize],
    candidates: &'a [Vec<usize>],
    first_only: bool,
}

impl IsoSearch<'_> {
    /// Extends `f` from `⟨g_0, …, g_{k−1}⟩` to `⟨g_0, …, g_k⟩` with
    /// `g_k ↦ images[k]`, checking every Cayley edge of the larger subgroup.
    fn extend(&self, k: usize, images: &[usize], f: &mut [usize], used: &mut [bool]) -> bool {
        let mut queue: Vec<usize> = (0..f.len()).filter(|&x| f[x] != usize::MAX).collect();
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for j in 0..=k {
                let y = self.a.op(x, self.gens[j]);
                let v = self.b.op(f[x], images[j]);
                if f[y] == usize::MAX {
                    if std::mem::replace(&mut used[v], true) {
                        return false;
                    }
                    f[y] = v;
                    queue.push(y);
                } else if f[y] != v {
                    return false;
                }
            }
            i += 1;
        }
        true
    }

    /// Returns `true` once the search should stop.
    fn go(&self, k: usize, images: &mut Vec<usize>, f: &[usize], used: &[bool], out: &mut Vec<Vec<usize>>) -> bool {
        if k == self.gens.len() {
            out.push(f.to_vec());
            return self.first_only;
        }
        for &h in &self.candidates[k] {
            if used[h] {
                continue;
            }
            images[k] = h;
            let mut f2 = f.to_vec();
            let mut used2 = used.to_vec();
            if self.extend(k, images, &mut f2, &mut used2) && self.go(k + 1, images, &f2, &used2, out) {
                return true;
            }
        }
        false
    }
}

/// Builds a Cayley group from a list of permutations closed under
/// composition whose first entry is the identity.
pub fn group_from_permutations(elements: &[Permutation]) -> CayleyGroup {
    assert!(elements[0].is_identity(), "first element must be the identity");
    let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    CayleyGroup::from_fn_unchecked(elements.len(), |a, b| {
        *index
            .get(&(&elements[a] * &elements[b]))
            .expect("permutation set is not closed")
    })
}

/// Standard groups used by constructions, fixtures and tests.
pub mod named {
    use super::*;

    pub fn cyclic(n: usize) -> CayleyGroup {
        CayleyGroup::from_fn_unchecked(n, |a, b| (a + b) % n)
    }

    /// Direct product of cyclic groups of the given orders, mixed-radix encoded
    /// (last factor varies fastest).
    pub fn abelian(orders: &[usize]) -> CayleyGroup {
        orders
            .iter()
            .fold(cyclic(1), |acc, &m| acc.direct_product(&cyclic(m)))
    }

    /// Dihedral group of order `2m`: element `s^f r^k` has index `f*m + k`.
    pub fn dihedral(m: usize) -> CayleyGroup {
        CayleyGroup::from_fn_unchecked(2 * m, |x, y| {
            let (f1, k1) = (x / m, x % m);
            let (f2, k2) = (y / m, y % m);
            // s^f1 r^k1 s^f2 r^k2 = s^(f1+f2) r^((-1)^f2 k1 + k2)
            let k = if f2 == 0 { (k1 + k2) % m } else { (m - k1 + k2) % m };
            ((f1 + f2) % 2) * m + k
        })
    }

    /// Quaternion group of order 8: indices `0..8` are `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion() -> CayleyGroup {
        // unit: 0 = 1, 1 = i, 2 = j, 3 = k; sign bit separate
        let unit_mul = |a: usize, b: usize| -> (usize, bool) {
            match (a, b) {
                (0, x) | (x, 0) => (x, false),
                (x, y) if x == y => (0, true),
                (1, 2) => (3, false),
                (2, 1) => (3, true),
                (2, 3) => (1, false),
                (3, 2) => (1, true),
                (3, 1) => (2, false),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        CayleyGroup::from_fn_unchecked(8, |x, y| {
            let (ua, sa) = (x / 2, x % 2 == 1);
            let (ub, sb) = (y / 2, y % 2 == 1);
            let (u, s) = unit_mul(ua, ub);
            u * 2 + usize::from(sa ^ sb ^ s)
        })
    }

    /// Symmetric group on `k` points, elements in lexicographic image order
    /// (identity first).
    pub fn symmetric(k: usize) -> CayleyGroup {
        group_from_permutations(&crate::perm::all_permutations(k))
    }

    /// Heisenberg group of upper unitriangular 3×3 matrices over `Z/m`:
    /// `(a, b, c)` has index `(a*m + b)*m + c`, product
    /// `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')`.
    pub fn heisenberg(m: usize) -> CayleyGroup {
        CayleyGroup::from_fn_unchecked(m * m * m, |x, y| {
            let (a, b, c) = (x / (m * m), (x / m) % m, x % m);
            let (a2, b2, c2) = (y / (m * m), (y / m) % m, y % m);
            (((a + a2) % m) * m + (b + b2) % m) * m + (c + c2 + a * b2) % m
        })
    }

    /// All abelian groups of order `n` up to isomorphism, as products of
    /// cyclic prime-power factors.
    pub fn abelian_groups_of_order(n: usize) -> Vec<(Vec<usize>, CayleyGroup)> {
        let mut factors = Vec::new();
        let mut m = n;
        let mut p = 2;
        while m > 1 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            if e > 0 {
                factors.push((p, e));
            }
            p += 1;
        }
        let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
        for (p, e) in factors {
            let mut next = Vec::new();
            for base in &combos {
                for part in partitions(e) {
                    let mut orders = base.clone();
                    orders.extend(part.iter().map(|&k| p.pow(k as u32)));
                    next.push(orders);
                }
            }
            combos = next;
        }
        combos
            .into_iter()
            .map(|orders| {
                let g = abelian(&orders);
                (orders, g)
            })
            .collect()
    }

    /// Partitions of `e` in non-increasing order, listed from the finest
    /// (most parts) to the coarsest.
    fn partitions(e: usize) -> Vec<Vec<usize>> {
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rem == 0 {
                out.push(cur.clone());
                return;
            }
            for k in (1..=rem.min(max)).rev() {
                cur.push(k);
                go(rem - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(e, e, &mut Vec::new(), &mut out);
        out.reverse();
        out
    }
}

/// Order of the cyclic group generated by `a` in `Z/n` (helper for tests).
#[allow(dead_code)]
pub(crate) fn additive_order_mod(a: usize, n: usize) -> usize {
    n / gcd(a, n)
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    fn brute_force_associative(rows: &[Vec<usize>]) -> Option<(usize, usize, usize)> {
        let n = rows.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]] {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    #[test]
    fn z3_is_abelian_group() {
        let rows: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
        let g = validate_group(&rows).unwrap();
        assert!(g.is_abelian());
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn sym3_is_non_abelian_group() {
        let s3 = symmetric(3);
        let g = validate_group(&s3.rows()).unwrap();
        assert!(!g.is_abelian());
        assert_eq!(g.nilpotency_class(), None);
    }

    #[test]
    fn perturbed_z5_reports_associativity_witness() {
        // A loop of order 5 (identity 0, each element self-inverse); derived
        // from Z/5 by re-arranging the non-identity rows into a Latin square.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let oracle = brute_force_associative(&rows).expect("oracle finds a failing triple");
        match validate_group(&rows) {
            Err(GroupError::NonAssociative { a, b, c }) => {
                assert_eq!((a, b, c), oracle);
                assert_ne!(rows[rows[a][b]][c], rows[a][rows[b][c]]);
            }
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn swapped_rows_break_latin_or_identity() {
        let mut rows: Vec<Vec<usize>> = (0..5).map(|a| (0..5).map(|b| (a + b) % 5).collect()).collect();
        rows[1][1] = 3;
        assert!(matches!(validate_group(&rows), Err(GroupError::RowRepeat { row: 1, value: 3 })));
        let mut rows: Vec<Vec<usize>> = (0..5).map(|a| (0..5).map(|b| (a + b) % 5).collect()).collect();
        rows.swap(1, 2);
        assert_eq!(validate_group(&rows), Err(GroupError::NoIdentity));
    }

    #[test]
    fn identity_is_relabelled_to_zero() {
        // Z/3 with identity at 2.
        let rows: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + b + 1) % 3).collect()).collect();
        let (g, relabel) = validate_group_relabelled(&rows).unwrap();
        assert_eq!(relabel.apply(2), 0);
        for a in 0..3 {
            assert_eq!(g.op(0, a), a);
        }
    }

    #[test]
    fn exhaustive_associativity_agrees_with_validation() {
        // every 3x3 table over {0,1,2} with identity 0
        let mut accepted = 0;
        for code in 0..81usize {
            let (x, y, z, w) = (code % 3, (code / 3) % 3, (code / 9) % 3, code / 27);
            let rows = vec![vec![0, 1, 2], vec![1, x, y], vec![2, z, w]];
            let ok = validate_group(&rows).is_ok();
            let latin = check_latin(3, &rows.concat()).is_ok();
            let oracle = latin && brute_force_associative(&rows).is_none();
            assert_eq!(ok, oracle);
            accepted += usize::from(ok);
        }
        assert_eq!(accepted, 1);
    }

    #[test]
    fn named_groups_validate() {
        for g in [dihedral(4), quaternion(), symmetric(3), heisenberg(2), abelian(&[2, 4])] {
            validate_group(&g.rows()).unwrap();
        }
        assert_eq!(dihedral(4).nilpotency_class(), Some(2));
        assert_eq!(quaternion().nilpotency_class(), Some(2));
        assert_eq!(heisenberg(3).nilpotency_class(), Some(2));
        assert_eq!(cyclic(6).nilpotency_class(), Some(1));
        assert_eq!(cyclic(1).nilpotency_class(), Some(0));
        assert!(!dihedral(4).is_isomorphic(&quaternion()));
        assert!(dihedral(3).is_isomorphic(&symmetric(3)));
    }

    #[test]
    fn abelian_groups_listed() {
        let orders: Vec<usize> = (1..=16).map(|n| abelian_groups_of_order(n).len()).collect();
        assert_eq!(orders, vec![1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5]);
        let g8 = abelian_groups_of_order(8);
        for i in 0..g8.len() {
            for j in 0..g8.len() {
                assert_eq!(g8[i].1.is_isomorphic(&g8[j].1), i == j);
            }
        }
    }
}
