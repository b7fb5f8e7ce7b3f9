//! Sparse matrices over ℚ.
//!
//! Boundary operators of tensor-power complexes are extremely sparse (a
//! handful of entries per column out of 10⁴–10⁵), so matrices are stored as
//! one ordered map per row, keyed by column. Zeros are never stored; all
//! iteration orders are deterministic.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use num_traits::Zero;

use crate::rat::Rat;

/// A sparse vector: column index → nonzero rational.
pub type SparseVec = BTreeMap<usize, Rat>;

/// `a += c·b`, dropping entries that cancel to zero.
pub fn vec_add_scaled(a: &mut SparseVec, b: &SparseVec, c: &Rat) {
    if c.is_zero() {
        return;
    }
    for (&j, v) in b {
        let w = v * c;
        match a.get_mut(&j) {
            Some(cur) => {
                *cur += w;
                if cur.is_zero() {
                    a.remove(&j);
                }
            }
            None => {
                a.insert(j, w);
            }
        }
    }
}

/// Converts a dense slice to a sparse vector.
pub fn vec_from_dense(v: &[Rat]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect()
}

/// Converts a sparse vector to a dense one of length `n`.
pub fn vec_to_dense(v: &SparseVec, n: usize) -> Vec<Rat> {
    let mut out = alloc::vec![Rat::zero(); n];
    for (&j, x) in v {
        out[j] = x.clone();
    }
    out
}

/// A sparse `nrows × ncols` matrix over ℚ with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec>,
}

impl SparseMatrix {
    /// The zero matrix of the given shape.
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, rows: alloc::vec![SparseVec::new(); nrows] }
    }

    /// The `n × n` identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.rows[i].insert(i, Rat::from_integer(1.into()));
        }
        m
    }

    /// Builds a matrix from `(row, col, value)` triplets, accumulating
    /// duplicates and dropping exact zeros.
    pub fn from_triplets(
        nrows: usize,
        ncols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Rat)>,
    ) -> Self {
        let mut m = Self::zero(nrows, ncols);
        for (i, j, v) in triplets {
            m.add_to(i, j, v);
        }
        m
    }

    /// Builds a matrix from dense rows.
    pub fn from_dense(rows: &[Vec<Rat>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zero(nrows, ncols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged dense rows");
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    m.rows[i].insert(j, v.clone());
                }
            }
        }
        m
    }

    /// Dense copy (tests and small reports only).
    pub fn to_dense(&self) -> Vec<Vec<Rat>> {
        (0..self.nrows).map(|i| vec_to_dense(&self.rows[i], self.ncols)).collect()
    }

    /// Number of rows.
    pub fn nrows(&self) -> usize {
        self.nrows
    }

    /// Number of columns.
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Number of stored (nonzero) entries.
    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    /// The entry at `(i, j)` (zero when absent).
    pub fn get(&self, i: usize, j: usize) -> Rat {
        assert!(i < self.nrows && j < self.ncols, "index out of range");
        self.rows[i].get(&j).cloned().unwrap_or_else(Rat::zero)
    }

    /// Sets the entry at `(i, j)`, removing it when `v = 0`.
    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        assert!(i < self.nrows && j < self.ncols, "index out of range");
        if v.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, v);
        }
    }

    /// Adds `v` to the entry at `(i, j)`.
    pub fn add_to(&mut self, i: usize, j: usize, v: Rat) {
        assert!(i < self.nrows && j < self.ncols, "index out of range");
        if v.is_zero() {
            return;
        }
        match self.rows[i].get_mut(&j) {
            Some(cur) => {
                *cur += v;
                if cur.is_zero() {
                    self.rows[i].remove(&j);
                }
            }
            None => {
                self.rows[i].insert(j, v);
            }
        }
    }

    /// Iterates the nonzero entries of row `i` as `(col, &value)`.
    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, &Rat)> {
        self.rows[i].iter().map(|(&j, v)| (j, v))
    }

    /// The sparse row `i`.
    pub fn row_vec(&self, i: usize) -> &SparseVec {
        &self.rows[i]
    }

    /// Iterates all nonzero entries as `(row, col, &value)` in row-major
    /// order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rat)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(&j, v)| (i, j, v)))
    }

    /// Column `j` as a sparse vector (row index → value).
    pub fn col_vec(&self, j: usize) -> SparseVec {
        assert!(j < self.ncols, "index out of range");
        let mut out = SparseVec::new();
        for (i, r) in self.rows.iter().enumerate() {
            if let Some(v) = r.get(&j) {
                out.insert(i, v.clone());
            }
        }
        out
    }

    /// All columns as sparse vectors; much cheaper than repeated
    /// [`SparseMatrix::col_vec`] calls.
    pub fn cols(&self) -> Vec<SparseVec> {
        let mut out = alloc::vec![SparseVec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (&j, v) in r {
                out[j].insert(i, v.clone());
            }
        }
        out
    }

    /// Transpose.
    pub fn transpose(&self) -> SparseMatrix {
        let mut t = Self::zero(self.ncols, self.nrows);
        for (i, j, v) in self.entries() {
            t.rows[j].insert(i, v.clone());
        }
        t
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, rhs.nrows, "shape mismatch in matrix product");
        let mut out = Self::zero(self.nrows, rhs.ncols);
        for i in 0..self.nrows {
            let mut acc = SparseVec::new();
            for (&k, v) in &self.rows[i] {
                vec_add_scaled(&mut acc, &rhs.rows[k], v);
            }
            out.rows[i] = acc;
        }
        out
    }

    /// Matrix–vector product with a sparse vector.
    pub fn mul_sparse_vec(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc = Rat::zero();
            // Iterate the sparser of the two supports.
            if row.len() <= v.len() {
                for (j, a) in row {
                    if let Some(b) = v.get(j) {
                        acc += a * b;
                    }
                }
            } else {
                for (j, b) in v {
                    if let Some(a) = row.get(j) {
                        acc += a * b;
                    }
                }
            }
            if !acc.is_zero() {
                out.insert(i, acc);
            }
        }
        out
    }

    /// Matrix–vector product with a dense vector.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ncols, "shape mismatch in matrix–vector product");
        let mut out = alloc::vec![Rat::zero(); self.nrows];
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc = Rat::zero();
            for (&j, a) in row {
                if !v[j].is_zero() {
                    acc += a * &v[j];
                }
            }
            out[i] = acc;
        }
        out
    }

    /// Sum `self + rhs`.
    pub fn add(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.nrows, self.ncols), (rhs.nrows, rhs.ncols), "shape mismatch in sum");
        let mut out = self.clone();
        for (i, j, v) in rhs.entries() {
            out.add_to(i, j, v.clone());
        }
        out
    }

    /// Difference `self − rhs`.
    pub fn sub(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.nrows, self.ncols), (rhs.nrows, rhs.ncols), "shape mismatch");
        let mut out = self.clone();
        for (i, j, v) in rhs.entries() {
            out.add_to(i, j, -v.clone());
        }
        out
    }

    /// Scalar multiple `c·self`.
    pub fn scale(&self, c: &Rat) -> SparseMatrix {
        if c.is_zero() {
            return Self::zero(self.nrows, self.ncols);
        }
        let mut out = self.clone();
        for row in &mut out.rows {
            for v in row.values_mut() {
                *v *= c;
            }
        }
        out
    }

    /// Copies `m` into `self` with its top-left corner at
    /// `(row_off, col_off)`; existing entries in the window are accumulated.
    pub fn insert_block(&mut self, row_off: usize, col_off: usize, m: &SparseMatrix) {
        assert!(row_off + m.nrows <= self.nrows && col_off + m.ncols <= self.ncols, "block out of range");
        for (i, j, v) in m.entries() {
            self.add_to(row_off + i, col_off + j, v.clone());
        }
    }

    /// Kronecker (tensor) product, first factor slowest: row index
    /// `(i₁, i₂) ↦ i₁·rhs.nrows + i₂`, matching the row-major mixed-radix
    /// convention of tensor-string bases.
    pub fn kronecker(&self, rhs: &SparseMatrix) -> SparseMatrix {
        let mut out = Self::zero(self.nrows * rhs.nrows, self.ncols * rhs.ncols);
        for (i1, j1, v1) in self.entries() {
            for (i2, j2, v2) in rhs.entries() {
                out.rows[i1 * rhs.nrows + i2].insert(j1 * rhs.ncols + j2, v1.clone() * v2);
            }
        }
        out
    }

    /// Restriction of the matrix to a column range (all rows kept).
    pub fn column_slice(&self, cols: RangeInclusive<usize>) -> SparseMatrix {
        let (lo, hi) = (*cols.start(), *cols.end());
        assert!(hi < self.ncols && lo <= hi, "column slice out of range");
        let mut out = Self::zero(self.nrows, hi - lo + 1);
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, v) in row.range(lo..=hi) {
                out.rows[i].insert(j - lo, v.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn product_matches_dense() {
        let a = SparseMatrix::from_dense(&[
            alloc::vec![rat_int(1), rat_int(2)],
            alloc::vec![rat_int(0), rat(1, 2)],
        ]);
        let b = SparseMatrix::from_dense(&[
            alloc::vec![rat_int(3), rat_int(0)],
            alloc::vec![rat_int(-1), rat_int(4)],
        ]);
        let ab = a.mul(&b);
        assert_eq!(ab.get(0, 0), rat_int(1));
        assert_eq!(ab.get(0, 1), rat_int(8));
        assert_eq!(ab.get(1, 0), rat(-1, 2));
        assert_eq!(ab.get(1, 1), rat_int(2));
    }

    #[test]
    fn zero_entries_are_never_stored() {
        let mut m = SparseMatrix::zero(2, 2);
        m.add_to(0, 0, rat_int(3));
        m.add_to(0, 0, rat_int(-3));
        m.set(1, 1, rat_int(0));
        assert_eq!(m.nnz(), 0);
        assert!(m.is_zero());
    }

    #[test]
    fn identity_is_neutral() {
        let m = SparseMatrix::from_dense(&[
            alloc::vec![rat_int(1), rat_int(2), rat_int(3)],
            alloc::vec![rat_int(4), rat_int(5), rat_int(6)],
        ]);
        assert_eq!(m.mul(&SparseMatrix::identity(3)), m);
        assert_eq!(SparseMatrix::identity(2).mul(&m), m);
    }

    #[test]
    fn transpose_round_trip() {
        let m = SparseMatrix::from_triplets(3, 4, [(0, 1, rat_int(2)), (2, 3, rat(5, 7))]);
        assert_eq!(m.transpose().transpose(), m);
        assert_eq!(m.transpose().get(1, 0), rat_int(2));
    }

    #[test]
    fn kronecker_matches_mixed_radix_indexing() {
        let a = SparseMatrix::from_dense(&[
            alloc::vec![rat_int(1), rat_int(2)],
            alloc::vec![rat_int(0), rat_int(3)],
        ]);
        let b = SparseMatrix::from_dense(&[alloc::vec![rat_int(5), rat_int(7)]]);
        let k = a.kronecker(&b);
        assert_eq!((k.nrows(), k.ncols()), (2, 4));
        // Entry ((i₁,i₂),(j₁,j₂)) = a[i₁,j₁]·b[i₂,j₂] with first factor slowest.
        assert_eq!(k.get(0, 0), rat_int(5));
        assert_eq!(k.get(0, 3), rat_int(14));
        assert_eq!(k.get(1, 2), rat_int(15));
        assert_eq!(k.get(1, 0), rat_int(0));
        // Mixed product rule: (a⊗b)(a′⊗b′) = aa′⊗bb′.
        let a2 = SparseMatrix::identity(2);
        let b2 = SparseMatrix::from_dense(&[
            alloc::vec![rat_int(1)],
            alloc::vec![rat(1, 2)],
        ]);
        assert_eq!(k.mul(&a2.kronecker(&b2)), a.mul(&a2).kronecker(&b.mul(&b2)));
    }

    #[test]
    fn block_insertion_assembles_cones() {
        let a = SparseMatrix::identity(2);
        let mut big = SparseMatrix::zero(3, 3);
        big.insert_block(1, 1, &a);
        assert_eq!(big.get(1, 1), rat_int(1));
        assert_eq!(big.get(2, 2), rat_int(1));
        assert_eq!(big.get(0, 0), rat_int(0));
    }
}
