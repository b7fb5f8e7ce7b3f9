//! Finite-dimensional associative ℚ-algebras, bimodules over them, algebra
//! morphisms, and ideal extensions.
//!
//! Everything is *based*: an algebra is a chosen ℚ-basis e₀,…,e_{d−1} plus
//! dense structure constants `table[i][j][k]` (the e_k-coefficient of
//! e_i·e_j), possibly with a distinguished unit vector; a bimodule is a based
//! vector space with dense left/right action tables. Units are optional —
//! ideals are honest nonunital algebras here, not unital ones in disguise.
//!
//! Validation is mechanical and total: associativity, unit laws, action
//! compatibilities, and the extension axioms (injectivity, ideal absorption,
//! surjectivity, complementarity, section) are checked coefficient by
//! coefficient, and the first failing tuple is reported by basis name.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::CoreError;
use crate::linalg::{rank, solve_block, Rref};
use crate::rat::{format_rat, Rat};
use crate::sparse::{SparseMatrix, SparseVec};

/// The i-th coordinate vector of ℚ^dim, densely.
pub fn basis_vec(dim: usize, i: usize) -> Vec<Rat> {
    assert!(i < dim, "basis index {i} out of range {dim}");
    let mut v = vec![Rat::zero(); dim];
    v[i] = Rat::one();
    v
}

// ---------------------------------------------------------------------------
// Tensor basis bookkeeping
// ---------------------------------------------------------------------------

/// Row-major mixed-radix indexing for a tensor product of based spaces.
///
/// A basis element of V₀⊗…⊗V_{r−1} is a digit tuple (t₀,…,t_{r−1}) with
/// t_k < dim V_k; its flat index is `((t₀·d₁ + t₁)·d₂ + t₂)·…` — the first
/// digit varies slowest. This layout is part of the crate's contract: every
/// chain group, boundary matrix, and reported representative uses it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorBasisIndex {
    dims: Vec<usize>,
}

impl TensorBasisIndex {
    /// Indexing scheme for the product of spaces with these dimensions.
    pub fn new(dims: Vec<usize>) -> Self {
        TensorBasisIndex { dims }
    }

    /// Factor dimensions, slowest digit first.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of tensor factors.
    pub fn arity(&self) -> usize {
        self.dims.len()
    }

    /// Total dimension (panics on overflow; callers cap sizes long before).
    pub fn len(&self) -> usize {
        self.checked_len().expect("tensor dimension overflows usize")
    }

    /// Total dimension, or `None` on usize overflow.
    pub fn checked_len(&self) -> Option<usize> {
        self.dims.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d))
    }

    /// True when the product space is zero-dimensional.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Flat index of a digit tuple.
    pub fn flatten(&self, digits: &[usize]) -> usize {
        assert_eq!(digits.len(), self.dims.len(), "digit arity mismatch");
        let mut idx = 0usize;
        for (t, d) in digits.iter().zip(&self.dims) {
            assert!(t < d, "digit {t} out of range {d}");
            idx = idx * d + t;
        }
        idx
    }

    /// Digit tuple of a flat index.
    pub fn unflatten(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0usize; self.dims.len()];
        for (slot, &d) in out.iter_mut().zip(&self.dims).rev() {
            *slot = idx % d;
            idx /= d;
        }
        assert_eq!(idx, 0, "flat index out of range");
        out
    }

    /// All digit tuples in flat-index order.
    pub fn iter(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.len()).map(|i| self.unflatten(i))
    }
}

// ---------------------------------------------------------------------------
// Algebras
// ---------------------------------------------------------------------------

/// A finite-dimensional associative ℚ-algebra given by structure constants.
///
/// `table[i][j][k]` is the e_k-coefficient of e_i·e_j. `unit` is the
/// coordinate vector of a two-sided unit when one is distinguished; ideals
/// and other nonunital algebras leave it `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    /// Vector-space dimension.
    pub dim: usize,
    /// Basis element names, used in reports and error messages.
    pub basis: Vec<String>,
    /// Structure constants: `table[i][j][k]` = ⟨e_i·e_j, e_k⟩.
    pub table: Vec<Vec<Vec<Rat>>>,
    /// Coordinates of the two-sided unit, when the algebra is unital.
    pub unit: Option<Vec<Rat>>,
}

impl Algebra {
    /// Builds an algebra, asserting that all table shapes match the basis.
    pub fn new(basis: Vec<String>, table: Vec<Vec<Vec<Rat>>>, unit: Option<Vec<Rat>>) -> Self {
        let dim = basis.len();
        assert_eq!(table.len(), dim, "table must have one row block per basis element");
        for row in &table {
            assert_eq!(row.len(), dim, "table row block has wrong length");
            for cell in row {
                assert_eq!(cell.len(), dim, "table entry has wrong length");
            }
        }
        if let Some(u) = &unit {
            assert_eq!(u.len(), dim, "unit vector has wrong length");
        }
        Algebra { dim, basis, table, unit }
    }

    /// The product e_i·e_j as a dense coordinate vector.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[Rat] {
        &self.table[i][j]
    }

    /// The product x·y of two coordinate vectors.
    pub fn mul(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Rat::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] += &c * t;
                    }
                }
            }
        }
        out
    }

    /// Whether a unit vector is distinguished.
    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    /// The unit's coordinates, when present.
    pub fn unit_vec(&self) -> Option<&[Rat]> {
        self.unit.as_deref()
    }

    /// First basis pair (i, j) with e_i·e_j ≠ e_j·e_i, if any.
    pub fn commutator_witness(&self) -> Option<(usize, usize)> {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                if self.table[i][j] != self.table[j][i] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Human-readable rendering of a coordinate vector, e.g. `2·x − 1/2·y`.
    pub fn format_element(&self, v: &[Rat]) -> String {
        let mut out = String::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            if c.is_one() {
                out.push_str(&self.basis[i]);
            } else {
                out.push_str(&format!("{}·{}", format_rat(c), self.basis[i]));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// See [`validate_algebra`].
    pub fn validate(&self) -> Result<(), CoreError> {
        validate_algebra(self)
    }
}

/// Checks associativity on every basis triple, and the two-sided unit law
/// when a unit is distinguished. The first failing triple is named.
pub fn validate_algebra(a: &Algebra) -> Result<(), CoreError> {
    let d = a.dim;
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    let mut lhs = Rat::zero();
                    let mut rhs = Rat::zero();
                    for m in 0..d {
                        lhs += &a.table[i][j][m] * &a.table[m][k][l];
                        rhs += &a.table[j][k][m] * &a.table[i][m][l];
                    }
                    if lhs != rhs {
                        return Err(CoreError::Invalid(format!(
                            "associativity fails at ({}, {}, {}): coefficient of {} in \
                             ({0}·{1})·{2} is {} but in {0}·({1}·{2}) is {}",
                            a.basis[i], a.basis[j], a.basis[k], a.basis[l], lhs, rhs
                        )));
                    }
                }
            }
        }
    }
    if let Some(u) = &a.unit {
        for j in 0..d {
            let left = a.mul(u, &basis_vec(d, j));
            let right = a.mul(&basis_vec(d, j), u);
            let expect = basis_vec(d, j);
            if left != expect {
                return Err(CoreError::Invalid(format!(
                    "unit law fails: 1·{} = {} ≠ {0}",
                    a.basis[j],
                    a.format_element(&left)
                )));
            }
            if right != expect {
                return Err(CoreError::Invalid(format!(
                    "unit law fails: {}·1 = {} ≠ {0}",
                    a.basis[j],
                    a.format_element(&right)
                )));
            }
        }
    }
    Ok(())
}

/// Adjoins a unit: A⁺ = A ⊕ ℚ·1⁺ with A sitting in coordinates 0..dim and
/// the new unit last. For the zero algebra this is ℚ itself.
pub fn unitalization(a: &Algebra) -> Algebra {
    let d = a.dim;
    let mut table = vec![vec![vec![Rat::zero(); d + 1]; d + 1]; d + 1];
    for i in 0..d {
        for j in 0..d {
            for (k, c) in a.table[i][j].iter().enumerate() {
                table[i][j][k] = c.clone();
            }
        }
    }
    for i in 0..d {
        table[i][d][i] = Rat::one();
        table[d][i][i] = Rat::one();
    }
    table[d][d][d] = Rat::one();
    let mut basis = a.basis.clone();
    basis.push(String::from("1+"));
    Algebra::new(basis, table, Some(basis_vec(d + 1, d)))
}

// ---------------------------------------------------------------------------
// Bimodules
// ---------------------------------------------------------------------------

/// A based A-bimodule with dense action tables.
///
/// `left[i][m][m′]` is the f_{m′}-coefficient of e_i·f_m and
/// `right[m][i][m′]` that of f_m·e_i. The algebra the actions belong to is
/// supplied at validation time; the tables themselves pin only dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    /// Module dimension.
    pub dim: usize,
    /// `left[i][m][m′]` = ⟨e_i·f_m, f_{m′}⟩, indexed algebra-first.
    pub left: Vec<Vec<Vec<Rat>>>,
    /// `right[m][i][m′]` = ⟨f_m·e_i, f_{m′}⟩, indexed module-first.
    pub right: Vec<Vec<Vec<Rat>>>,
}

impl Bimodule {
    /// Builds a bimodule over a `algebra_dim`-dimensional algebra, asserting
    /// table shapes.
    pub fn new(
        dim: usize,
        algebra_dim: usize,
        left: Vec<Vec<Vec<Rat>>>,
        right: Vec<Vec<Vec<Rat>>>,
    ) -> Self {
        assert_eq!(left.len(), algebra_dim, "left table must be indexed by the algebra basis");
        for block in &left {
            assert_eq!(block.len(), dim);
            for row in block {
                assert_eq!(row.len(), dim);
            }
        }
        assert_eq!(right.len(), dim, "right table must be indexed by the module basis");
        for block in &right {
            assert_eq!(block.len(), algebra_dim);
            for row in block {
                assert_eq!(row.len(), dim);
            }
        }
        Bimodule { dim, left, right }
    }

    /// e_i·f_m as a dense module vector.
    pub fn left_of(&self, i: usize, m: usize) -> &[Rat] {
        &self.left[i][m]
    }

    /// f_m·e_i as a dense module vector.
    pub fn right_of(&self, m: usize, i: usize) -> &[Rat] {
        &self.right[m][i]
    }

    /// x·v for algebra coordinates x and module coordinates v.
    pub fn act_left(&self, x: &[Rat], v: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (m, vm) in v.iter().enumerate() {
                if vm.is_zero() {
                    continue;
                }
                let c = xi * vm;
                for (mp, t) in self.left[i][m].iter().enumerate() {
                    if !t.is_zero() {
                        out[mp] += &c * t;
                    }
                }
            }
        }
        out
    }

    /// v·x for module coordinates v and algebra coordinates x.
    pub fn act_right(&self, v: &[Rat], x: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (m, vm) in v.iter().enumerate() {
            if vm.is_zero() {
                continue;
            }
            for (i, xi) in x.iter().enumerate() {
                if xi.is_zero() {
                    continue;
                }
                let c = vm * xi;
                for (mp, t) in self.right[m][i].iter().enumerate() {
                    if !t.is_zero() {
                        out[mp] += &c * t;
                    }
                }
            }
        }
        out
    }

    /// The matrix of v ↦ e_i·v.
    pub fn left_matrix(&self, i: usize) -> SparseMatrix {
        let mut m = SparseMatrix::zero(self.dim, self.dim);
        for (col, row) in self.left[i].iter().enumerate() {
            for (mp, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    m.set(mp, col, c.clone());
                }
            }
        }
        m
    }

    /// The matrix of v ↦ v·e_i.
    pub fn right_matrix(&self, i: usize) -> SparseMatrix {
        let mut m = SparseMatrix::zero(self.dim, self.dim);
        for col in 0..self.dim {
            for (mp, c) in self.right[col][i].iter().enumerate() {
                if !c.is_zero() {
                    m.set(mp, col, c.clone());
                }
            }
        }
        m
    }

    /// Checks both association laws, the middle commutation law, and (when
    /// the algebra is unital) that the unit acts as the identity on both
    /// sides.
    pub fn validate(&self, a: &Algebra) -> Result<(), CoreError> {
        assert_eq!(self.left.len(), a.dim, "bimodule built over a different algebra dimension");
        let d = a.dim;
        let n = self.dim;
        for i in 0..d {
            for j in 0..d {
                for m in 0..n {
                    for mpp in 0..n {
                        // e_i·(e_j·f_m) = (e_i·e_j)·f_m
                        let mut lhs = Rat::zero();
                        for mp in 0..n {
                            lhs += &self.left[j][m][mp] * &self.left[i][mp][mpp];
                        }
                        let mut rhs = Rat::zero();
                        for k in 0..d {
                            rhs += &a.table[i][j][k] * &self.left[k][m][mpp];
                        }
                        if lhs != rhs {
                            return Err(CoreError::Invalid(format!(
                                "left action not associative at ({}, {}, f_{m})",
                                a.basis[i], a.basis[j]
                            )));
                        }
                        // (f_m·e_i)·e_j = f_m·(e_i·e_j)
                        let mut lhs = Rat::zero();
                        for mp in 0..n {
                            lhs += &self.right[m][i][mp] * &self.right[mp][j][mpp];
                        }
                        let mut rhs = Rat::zero();
                        for k in 0..d {
                            rhs += &a.table[i][j][k] * &self.right[m][k][mpp];
                        }
                        if lhs != rhs {
                            return Err(CoreError::Invalid(format!(
                                "right action not associative at (f_{m}, {}, {})",
                                a.basis[i], a.basis[j]
                            )));
                        }
                        // (e_i·f_m)·e_j = e_i·(f_m·e_j)
                        let mut lhs = Rat::zero();
                        let mut rhs = Rat::zero();
                        for mp in 0..n {
                            lhs += &self.left[i][m][mp] * &self.right[mp][j][mpp];
                            rhs += &self.right[m][j][mp] * &self.left[i][mp][mpp];
                        }
                        if lhs != rhs {
                            return Err(CoreError::Invalid(format!(
                                "left and right actions do not commute at ({}, f_{m}, {})",
                                a.basis[i], a.basis[j]
                            )));
                        }
                    }
                }
            }
        }
        if let Some(u) = &a.unit {
            for m in 0..n {
                let v = basis_vec(n, m);
                if self.act_left(u, &v) != v {
                    return Err(CoreError::Invalid(format!("unit does not act as identity on the left of f_{m}")));
                }
                if self.act_right(&v, u) != v {
                    return Err(CoreError::Invalid(format!("unit does not act as identity on the right of f_{m}")));
                }
            }
        }
        Ok(())
    }
}

/// A as a bimodule over itself, with both actions given by multiplication.
pub fn self_bimodule(a: &Algebra) -> Bimodule {
    let d = a.dim;
    let mut left = vec![vec![vec![Rat::zero(); d]; d]; d];
    let mut right = vec![vec![vec![Rat::zero(); d]; d]; d];
    for i in 0..d {
        for m in 0..d {
            left[i][m] = a.table[i][m].clone();
            right[m][i] = a.table[m][i].clone();
        }
    }
    Bimodule::new(d, d, left, right)
}

/// The linear dual A* with the transposed actions (a·φ·b)(x) = φ(b·x·a), in
/// the basis dual to A's: e_i·f_m = Σ_k table[k][i][m]·f_k and
/// f_m·e_i = Σ_k table[i][k][m]·f_k.
pub fn dual_bimodule(a: &Algebra) -> Bimodule {
    let d = a.dim;
    let mut left = vec![vec![vec![Rat::zero(); d]; d]; d];
    let mut right = vec![vec![vec![Rat::zero(); d]; d]; d];
    for i in 0..d {
        for m in 0..d {
            for k in 0..d {
                left[i][m][k] = a.table[k][i][m].clone();
                right[m][i][k] = a.table[i][k][m].clone();
            }
        }
    }
    Bimodule::new(d, d, left, right)
}

/// The balanced tensor product M⊗_A N: the cokernel of
/// M⊗A⊗N → M⊗N, m⊗a⊗n ↦ m·a⊗n − m⊗a·n.
///
/// Returns its dimension together with the projection matrix from M⊗N
/// (row-major pair basis) onto the canonical quotient basis — the coordinate
/// vectors of the non-pivot pair-basis elements after reduction against the
/// relation row space.
pub fn balanced_tensor(a: &Algebra, m: &Bimodule, n: &Bimodule) -> (usize, SparseMatrix) {
    let pairs = TensorBasisIndex::new(vec![m.dim, n.dim]);
    let mut rel = Rref::new(pairs.len());
    for mi in 0..m.dim {
        for ai in 0..a.dim {
            for ni in 0..n.dim {
                let mut v = SparseVec::new();
                for (k, c) in m.right_of(mi, ai).iter().enumerate() {
                    if !c.is_zero() {
                        v.insert(pairs.flatten(&[k, ni]), c.clone());
                    }
                }
                for (k, c) in n.left_of(ai, ni).iter().enumerate() {
                    if !c.is_zero() {
                        let slot = v.entry(pairs.flatten(&[mi, k])).or_insert_with(Rat::zero);
                        *slot -= c;
                        if slot.is_zero() {
                            v.remove(&pairs.flatten(&[mi, k]));
                        }
                    }
                }
                rel.insert(v);
            }
        }
    }
    let total = pairs.len();
    let quotient_dim = total - rel.rank();
    let pivots = rel.pivot_cols();
    let free: Vec<usize> = (0..total).filter(|j| pivots.binary_search(j).is_err()).collect();
    let mut p = SparseMatrix::zero(quotient_dim, total);
    for j in 0..total {
        let mut e = SparseVec::new();
        e.insert(j, Rat::one());
        for (col, c) in rel.reduce(e) {
            let row = free.binary_search(&col).expect("reduced vector lives on free columns");
            p.set(row, j, c);
        }
    }
    (quotient_dim, p)
}

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

/// A linear map between based algebras, stored as a target.dim × source.dim
/// matrix acting on coordinate columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    /// The matrix of the map.
    pub matrix: SparseMatrix,
}

impl AlgebraMorphism {
    /// Wraps a matrix as a morphism.
    pub fn new(matrix: SparseMatrix) -> Self {
        AlgebraMorphism { matrix }
    }

    /// Applies the map to a coordinate vector.
    pub fn apply(&self, x: &[Rat]) -> Vec<Rat> {
        self.matrix.mul_vec(x)
    }

    /// Checks shapes and multiplicativity f(e_i·e_j) = f(e_i)·f(e_j) on all
    /// basis pairs. Unit preservation is deliberately *not* required here:
    /// the inclusion of an ideal into a unital algebra is a perfectly good
    /// multiplicative map. Use [`AlgebraMorphism::preserves_unit`] when the
    /// stronger condition matters.
    pub fn validate(&self, source: &Algebra, target: &Algebra) -> Result<(), CoreError> {
        if self.matrix.nrows() != target.dim || self.matrix.ncols() != source.dim {
            return Err(CoreError::Invalid(format!(
                "morphism matrix is {}×{}, expected {}×{}",
                self.matrix.nrows(),
                self.matrix.ncols(),
                target.dim,
                source.dim
            )));
        }
        for i in 0..source.dim {
            let fi = self.apply(&basis_vec(source.dim, i));
            for j in 0..source.dim {
                let fj = self.apply(&basis_vec(source.dim, j));
                let lhs = self.apply(source.mul_basis(i, j));
                let rhs = target.mul(&fi, &fj);
                if lhs != rhs {
                    return Err(CoreError::Invalid(format!(
                        "morphism is not multiplicative at ({}, {}): f({0}·{1}) = {} but f({0})·f({1}) = {}",
                        source.basis[i],
                        source.basis[j],
                        target.format_element(&lhs),
                        target.format_element(&rhs)
                    )));
                }
            }
        }
        Ok(())
    }

    /// True when both algebras are unital and f maps unit to unit.
    pub fn preserves_unit(&self, source: &Algebra, target: &Algebra) -> bool {
        match (&source.unit, &target.unit) {
            (Some(u), Some(v)) => &self.apply(u) == v,
            _ => false,
        }
    }
}

// ---------------------------------------------------------------------------
// Extensions
// ---------------------------------------------------------------------------

/// An ideal extension 0 → I → E → Q → 0 of associative algebras, with a
/// chosen linear (not multiplicative) section of the projection.
#[derive(Clone, Debug)]
pub struct Extension {
    /// The ideal I (usually nonunital).
    pub ideal: Algebra,
    /// The total algebra E.
    pub total: Algebra,
    /// The quotient Q = E/I.
    pub quotient: Algebra,
    /// Injective multiplicative map I → E (matrix total.dim × ideal.dim).
    pub incl: AlgebraMorphism,
    /// Surjective multiplicative map E → Q (matrix quotient.dim × total.dim).
    pub proj: AlgebraMorphism,
    /// Linear section of proj (matrix total.dim × quotient.dim).
    pub section: SparseMatrix,
}

impl Extension {
    /// Validates the whole package: the three algebras individually, then
    /// injectivity and multiplicativity of the inclusion, the two-sided
    /// ideal property, surjectivity and multiplicativity (and unit
    /// preservation where both units exist) of the projection,
    /// proj∘incl = 0, additivity of dimensions, and proj∘section = Id.
    pub fn validate(&self) -> Result<(), CoreError> {
        self.ideal.validate()?;
        self.total.validate()?;
        self.quotient.validate()?;
        if self.ideal.dim + self.quotient.dim != self.total.dim {
            return Err(CoreError::Invalid(format!(
                "dimensions do not add: {} + {} ≠ {}",
                self.ideal.dim, self.quotient.dim, self.total.dim
            )));
        }
        self.incl.validate(&self.ideal, &self.total)?;
        if rank(&self.incl.matrix) != self.ideal.dim {
            return Err(CoreError::Invalid(String::from("inclusion is not injective")));
        }
        self.proj.validate(&self.total, &self.quotient)?;
        if rank(&self.proj.matrix) != self.quotient.dim {
            return Err(CoreError::Invalid(String::from("projection is not surjective")));
        }
        if self.total.is_unital() && self.quotient.is_unital() && !self.proj.preserves_unit(&self.total, &self.quotient) {
            return Err(CoreError::Invalid(String::from("projection does not preserve the unit")));
        }
        if !self.proj.matrix.mul(&self.incl.matrix).is_zero() {
            return Err(CoreError::Invalid(String::from("proj ∘ incl ≠ 0")));
        }
        // With proj∘incl = 0, injectivity, surjectivity and additive
        // dimensions, im incl = ker proj; membership is a proj-vanishing
        // test.
        for i in 0..self.total.dim {
            let e = basis_vec(self.total.dim, i);
            for j in 0..self.ideal.dim {
                let f = self.incl.apply(&basis_vec(self.ideal.dim, j));
                let lp = self.proj.apply(&self.total.mul(&e, &f));
                if lp.iter().any(|c| !c.is_zero()) {
                    return Err(CoreError::Invalid(format!(
                        "ideal property fails: {}·incl({}) is not in the ideal",
                        self.total.basis[i], self.ideal.basis[j]
                    )));
                }
                let rp = self.proj.apply(&self.total.mul(&f, &e));
                if rp.iter().any(|c| !c.is_zero()) {
                    return Err(CoreError::Invalid(format!(
                        "ideal property fails: incl({})·{} is not in the ideal",
                        self.ideal.basis[j], self.total.basis[i]
                    )));
                }
            }
        }
        let ps = self.proj.matrix.mul(&self.section);
        if ps != SparseMatrix::identity(self.quotient.dim) {
            return Err(CoreError::Invalid(String::from("proj ∘ section ≠ Id")));
        }
        Ok(())
    }

    /// A left inverse L of the inclusion matrix (L·incl = Id). L is the
    /// solution with free variables zero; on im incl — the only place it is
    /// ever applied — it is the unique coordinate map.
    pub fn incl_left_inverse(&self) -> SparseMatrix {
        let t = self.incl.matrix.transpose();
        let rhs: Vec<SparseVec> = (0..self.ideal.dim)
            .map(|j| {
                let mut v = SparseVec::new();
                v.insert(j, Rat::one());
                v
            })
            .collect();
        let mut l = SparseMatrix::zero(self.ideal.dim, self.total.dim);
        for (j, sol) in solve_block(&t, &rhs).into_iter().enumerate() {
            let x = sol.expect("inclusion has full column rank");
            for (col, val) in x.into_iter().enumerate() {
                if !val.is_zero() {
                    l.set(j, col, val);
                }
            }
        }
        l
    }

    /// The canonical linear retraction ρ: E → I with ρ∘incl = Id and
    /// ρ∘section = 0, namely incl⁻¹∘(Id − section∘proj). It is independent
    /// of the left-inverse choice because Id − section∘proj lands in
    /// ker proj = im incl.
    pub fn retraction(&self) -> SparseMatrix {
        let l = self.incl_left_inverse();
        let sp = self.section.mul(&self.proj.matrix);
        let id = SparseMatrix::identity(self.total.dim);
        l.mul(&id.sub(&sp))
    }

    /// I as an E-bimodule: e·f := incl⁻¹(e·incl(f)) and symmetrically. Well
    /// defined by the ideal property.
    pub fn ideal_as_bimodule(&self) -> Bimodule {
        let l = self.incl_left_inverse();
        let ed = self.total.dim;
        let idm = self.ideal.dim;
        let mut left = vec![vec![vec![Rat::zero(); idm]; idm]; ed];
        let mut right = vec![vec![vec![Rat::zero(); idm]; ed]; idm];
        for i in 0..ed {
            let e = basis_vec(ed, i);
            for m in 0..idm {
                let f = self.incl.apply(&basis_vec(idm, m));
                left[i][m] = l.mul_vec(&self.total.mul(&e, &f));
                right[m][i] = l.mul_vec(&self.total.mul(&f, &e));
            }
        }
        Bimodule::new(idm, ed, left, right)
    }

    /// Q as an E-bimodule through the projection: e·q := proj(e)·q.
    pub fn quotient_as_bimodule(&self) -> Bimodule {
        let ed = self.total.dim;
        let qd = self.quotient.dim;
        let mut left = vec![vec![vec![Rat::zero(); qd]; qd]; ed];
        let mut right = vec![vec![vec![Rat::zero(); qd]; ed]; qd];
        for i in 0..ed {
            let pe = self.proj.apply(&basis_vec(ed, i));
            for m in 0..qd {
                let q = basis_vec(qd, m);
                left[i][m] = self.quotient.mul(&pe, &q);
                right[m][i] = self.quotient.mul(&q, &pe);
            }
        }
        Bimodule::new(qd, ed, left, right)
    }

    /// The coefficient conflation I ↣ E ↠ Q seen as E-bimodules, with the
    /// extension's own inclusion, projection, and section matrices.
    pub fn coefficient_modules(&self) -> ModuleExtension {
        ModuleExtension {
            sub: self.ideal_as_bimodule(),
            total: self_bimodule(&self.total),
            quot: self.quotient_as_bimodule(),
            incl: self.incl.matrix.clone(),
            proj: self.proj.matrix.clone(),
            section: self.section.clone(),
        }
    }
}

/// A conflation M′ ↣ M ↠ M″ of bimodules over one algebra, with a linear
/// section.
#[derive(Clone, Debug)]
pub struct ModuleExtension {
    /// The sub-bimodule M′.
    pub sub: Bimodule,
    /// The middle bimodule M.
    pub total: Bimodule,
    /// The quotient bimodule M″.
    pub quot: Bimodule,
    /// Injective map M′ → M (total.dim × sub.dim).
    pub incl: SparseMatrix,
    /// Surjective map M → M″ (quot.dim × total.dim).
    pub proj: SparseMatrix,
    /// Linear section of proj (total.dim × quot.dim).
    pub section: SparseMatrix,
}

impl ModuleExtension {
    /// Validates the three bimodules over `a`, injectivity/surjectivity,
    /// that incl and proj commute with both actions, proj∘incl = 0,
    /// additive dimensions, and proj∘section = Id.
    pub fn validate(&self, a: &Algebra) -> Result<(), CoreError> {
        self.sub.validate(a)?;
        self.total.validate(a)?;
        self.quot.validate(a)?;
        if self.sub.dim + self.quot.dim != self.total.dim {
            return Err(CoreError::Invalid(format!(
                "module dimensions do not add: {} + {} ≠ {}",
                self.sub.dim, self.quot.dim, self.total.dim
            )));
        }
        if rank(&self.incl) != self.sub.dim {
            return Err(CoreError::Invalid(String::from("module inclusion is not injective")));
        }
        if rank(&self.proj) != self.quot.dim {
            return Err(CoreError::Invalid(String::from("module projection is not surjective")));
        }
        for i in 0..a.dim {
            if self.incl.mul(&self.sub.left_matrix(i)) != self.total.left_matrix(i).mul(&self.incl) {
                return Err(CoreError::Invalid(format!(
                    "module inclusion does not commute with the left action of {}",
                    a.basis[i]
                )));
            }
            if self.incl.mul(&self.sub.right_matrix(i)) != self.total.right_matrix(i).mul(&self.incl) {
                return Err(CoreError::Invalid(format!(
                    "module inclusion does not commute with the right action of {}",
                    a.basis[i]
                )));
            }
            if self.proj.mul(&self.total.left_matrix(i)) != self.quot.left_matrix(i).mul(&self.proj) {
                return Err(CoreError::Invalid(format!(
                    "module projection does not commute with the left action of {}",
                    a.basis[i]
                )));
            }
            if self.proj.mul(&self.total.right_matrix(i)) != self.quot.right_matrix(i).mul(&self.proj) {
                return Err(CoreError::Invalid(format!(
                    "module projection does not commute with the right action of {}",
                    a.basis[i]
                )));
            }
        }
        if !self.proj.mul(&self.incl).is_zero() {
            return Err(CoreError::Invalid(String::from("module proj ∘ incl ≠ 0")));
        }
        if self.proj.mul(&self.section) != SparseMatrix::identity(self.quot.dim) {
            return Err(CoreError::Invalid(String::from("module proj ∘ section ≠ Id")));
        }
        Ok(())
    }
}
