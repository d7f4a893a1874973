//! Linear algebra over the two-element field with packed `u64` rows.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum F2Error {
    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },
}

/// A bitvector of fixed width, packed little-endian into words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    width: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(width: usize) -> Self {
        BitVec {
            width,
            words: vec![0; width.div_ceil(64)],
        }
    }

    pub fn from_u64(width: usize, bits: u64) -> Self {
        assert!(width <= 64);
        let mut v = Self::zeros(width);
        if width > 0 {
            v.words[0] = if width == 64 { bits } else { bits & ((1u64 << width) - 1) };
        }
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, b: bool) {
        if b {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn leading(&self) -> Option<usize> {
        (0..self.words.len())
            .find(|&k| self.words[k] != 0)
            .map(|k| k * 64 + self.words[k].trailing_zeros() as usize)
    }

    /// Low 64 bits.
    pub fn to_u64(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    /// Concatenation `self ++ other`.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.width + other.width);
        for i in 0..self.width {
            out.set(i, self.get(i));
        }
        for i in 0..other.width {
            out.set(self.width + i, other.get(i));
        }
        out
    }
}

/// A list of rows of common width. After [`F2Matrix::reduce`] the rows form
/// a reduced row-echelon basis of the row space, pivots increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Matrix {
    width: usize,
    rows: Vec<BitVec>,
}

impl F2Matrix {
    pub fn new(width: usize) -> Self {
        F2Matrix { width, rows: Vec::new() }
    }

    pub fn from_rows(width: usize, rows: Vec<BitVec>) -> Result<Self, F2Error> {
        for r in &rows {
            if r.width() != width {
                return Err(F2Error::WidthMismatch {
                    left: width,
                    right: r.width(),
                });
            }
        }
        Ok(F2Matrix { width, rows })
    }

    pub fn identity(width: usize) -> Self {
        let rows = (0..width)
            .map(|i| {
                let mut v = BitVec::zeros(width);
                v.set(i, true);
                v
            })
            .collect();
        F2Matrix { width, rows }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn push(&mut self, row: BitVec) -> Result<(), F2Error> {
        if row.width() != self.width {
            return Err(F2Error::WidthMismatch {
                left: self.width,
                right: row.width(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    /// Reduced row-echelon form; zero rows dropped.
    pub fn reduce(&self) -> F2Matrix {
        let mut rows = self.rows.clone();
        let mut basis: Vec<BitVec> = Vec::new();
        for mut r in rows.drain(..) {
            for b in &basis {
                let p = b.leading().unwrap();
                if r.get(p) {
                    r.xor_assign(b);
                }
            }
            if let Some(p) = r.leading() {
                for b in basis.iter_mut() {
                    if b.get(p) {
                        b.xor_assign(&r);
                    }
                }
                basis.push(r);
            }
        }
        basis.sort_by_key(|b| b.leading().unwrap());
        F2Matrix {
            width: self.width,
            rows: basis,
        }
    }

    pub fn rank(&self) -> usize {
        self.reduce().rows.len()
    }

    /// Residue of `v` modulo the row space; `self` must be reduced.
    pub fn residue(&self, v: &BitVec) -> BitVec {
        let mut r = v.clone();
        for b in &self.rows {
            let p = b.leading().unwrap();
            if r.get(p) {
                r.xor_assign(b);
            }
        }
        r
    }

    /// Membership in the row space; `self` must be reduced.
    pub fn contains(&self, v: &BitVec) -> bool {
        self.residue(v).is_zero()
    }

    /// Equality of row spaces.
    pub fn same_span(&self, other: &F2Matrix) -> bool {
        self.reduce() == other.reduce()
    }

    /// Basis of `{c : Σ cᵢ rowᵢ = 0}`, as vectors of width `rows().len()`.
    pub fn left_kernel(&self) -> F2Matrix {
        let m = self.rows.len();
        let augmented: Vec<BitVec> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut tag = BitVec::zeros(m);
                tag.set(i, true);
                r.concat(&tag)
            })
            .collect();
        // eliminate on the first `width` columns only
        let mut pivots: Vec<BitVec> = Vec::new();
        let mut kernel = Vec::new();
        for mut r in augmented {
            for b in &pivots {
                let p = b.leading().unwrap();
                if r.get(p) {
                    r.xor_assign(b);
                }
            }
            match r.leading() {
                Some(p) if p < self.width => pivots.push(r),
                _ => {
                    let mut c = BitVec::zeros(m);
                    for i in 0..m {
                        c.set(i, r.get(self.width + i));
                    }
                    kernel.push(c);
                }
            }
        }
        F2Matrix { width: m, rows: kernel }.reduce()
    }
}

/// Reduced span of all products `mul(a, b)` for rows `a` of `left` and `b` of `right`.
pub fn f2_product_span(
    left: &F2Matrix,
    right: &F2Matrix,
    mul: impl Fn(&BitVec, &BitVec) -> BitVec,
) -> Result<F2Matrix, F2Error> {
    if left.width != right.width {
        return Err(F2Error::WidthMismatch {
            left: left.width,
            right: right.width,
        });
    }
    let mut out = F2Matrix::new(left.width);
    for a in &left.rows {
        for b in &right.rows {
            out.push(mul(a, b))?;
        }
    }
    Ok(out.reduce())
}

pub fn f2_rank(m: &F2Matrix) -> usize {
    m.rank()
}
