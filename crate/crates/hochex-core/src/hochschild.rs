//! Hochschild chain and cochain complexes of a finite-dimensional algebra
//! A over ℚ with coefficients in a bimodule M.
//!
//! The boundary on M⊗A^{⊗n} is
//!
//! b(m ⊗ x₁ ⊗ ⋯ ⊗ xₙ) = (m·x₁) ⊗ x₂ ⊗ ⋯ ⊗ xₙ
//!     + Σ_{j=1}^{n−1} (−1)^j m ⊗ x₁ ⊗ ⋯ ⊗ (xⱼxⱼ₊₁) ⊗ ⋯ ⊗ xₙ
//!     + (−1)^n (xₙ·m) ⊗ x₁ ⊗ ⋯ ⊗ xₙ₋₁,
//!
//! and dropping the last (cyclic) term gives the bar boundary b′. All
//! variants here — with coefficients, without, and the nonunital complex
//! built from the unitalization A⁺ — share one tensor-string assembler, so
//! their sign conventions agree by construction.
//!
//! Degenerate (nonunital) algebras are handled through the unitalization
//! complex: degree 0 carries A itself and degree n ≥ 1 carries A⁺⊗A^{⊗n}.
//! For H-unitality the module provides machine-checkable certificates: a
//! one-sided unit yields an explicit contracting homotopy of the bar
//! complex, verified matrix-exactly; otherwise exactness is rank-verified
//! degree by degree.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::{self_bimodule, unitalization, Algebra, Bimodule, TensorBasisIndex};
use crate::complex::{homology, is_quasi_iso, ChainComplex, ChainMap, QuasiIsoReport};
use crate::error::CoreError;
use crate::linalg::{solve, ExactEngine, RankEngine};
use crate::rat::Rat;
use crate::sparse::SparseMatrix;

// ---------------------------------------------------------------------------
// Tensor-string boundary assembler
// ---------------------------------------------------------------------------

/// Assembles the boundary of a tensor string M ⊗ S₁ ⊗ ⋯ ⊗ S_k into the
/// string M ⊗ T₁ ⊗ ⋯ ⊗ T_{k−1}:
///
/// * `right_act(m, x₁)` — coefficients of m·x₁ in M (the sign-+ first term);
/// * `merge(j, xⱼ, xⱼ₊₁)` — coefficients of xⱼxⱼ₊₁ in the target slot Tⱼ,
///   with sign (−1)^j;
/// * `left_act(x_k, m)` — coefficients of x_k·m in M, with sign (−1)^k;
///   `None` omits the cyclic term (bar boundary).
///
/// Slot dimensions are explicit so mixed-type strings (ideal and total
/// algebra factors side by side) assemble through the same code path.
pub(crate) fn string_boundary(
    mdim: usize,
    src_slots: &[usize],
    tgt_slots: &[usize],
    right_act: &dyn Fn(usize, usize) -> Vec<Rat>,
    merge: &dyn Fn(usize, usize, usize) -> Vec<Rat>,
    left_act: Option<&dyn Fn(usize, usize) -> Vec<Rat>>,
) -> SparseMatrix {
    let k = src_slots.len();
    assert!(k >= 1, "boundary needs at least one tensor slot");
    assert_eq!(tgt_slots.len() + 1, k, "target string must be one slot shorter");
    let mut src_dims = vec![mdim];
    src_dims.extend_from_slice(src_slots);
    let src_ix = TensorBasisIndex::new(src_dims);
    let mut tgt_dims = vec![mdim];
    tgt_dims.extend_from_slice(tgt_slots);
    let tgt_ix = TensorBasisIndex::new(tgt_dims);
    let mut out = SparseMatrix::zero(tgt_ix.len(), src_ix.len());
    for (col, digits) in src_ix.iter().enumerate() {
        let m = digits[0];
        let xs = &digits[1..];
        // m·x₁, sign +.
        let coeffs = right_act(m, xs[0]);
        let mut td = Vec::with_capacity(k);
        td.push(0);
        td.extend_from_slice(&xs[1..]);
        for (mp, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                td[0] = mp;
                out.add_to(tgt_ix.flatten(&td), col, c.clone());
            }
        }
        // Adjacent merges, sign (−1)^j.
        for j in 1..k {
            let coeffs = merge(j, xs[j - 1], xs[j]);
            let mut td = Vec::with_capacity(k);
            td.push(m);
            td.extend_from_slice(&xs[..j - 1]);
            td.push(0);
            td.extend_from_slice(&xs[j + 1..]);
            for (y, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    td[j] = y;
                    let v = if j % 2 == 1 { -c.clone() } else { c.clone() };
                    out.add_to(tgt_ix.flatten(&td), col, v);
                }
            }
        }
        // x_k·m, sign (−1)^k.
        if let Some(act) = left_act {
            let coeffs = act(xs[k - 1], m);
            let mut td = Vec::with_capacity(k);
            td.push(0);
            td.extend_from_slice(&xs[..k - 1]);
            for (mp, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    td[0] = mp;
                    let v = if k % 2 == 1 { -c.clone() } else { c.clone() };
                    out.add_to(tgt_ix.flatten(&td), col, v);
                }
            }
        }
    }
    out
}

/// Carrier dimension `mdim·adim^n`, with overflow and cap detection.
pub(crate) fn carrier_dim(mdim: usize, adim: usize, n: i64) -> Option<usize> {
    let mut out = mdim;
    for _ in 0..n {
        out = out.checked_mul(adim)?;
    }
    Some(out)
}

/// Checks a carrier dimension against the configured cap.
pub(crate) fn check_cap(dim: Option<usize>, cap: usize) -> Result<usize, CoreError> {
    match dim {
        Some(d) if d <= cap => Ok(d),
        Some(d) => Err(CoreError::SizeLimit { required: d, cap }),
        None => Err(CoreError::SizeLimit { required: usize::MAX, cap }),
    }
}

// ---------------------------------------------------------------------------
// Boundaries
// ---------------------------------------------------------------------------

/// The Hochschild boundary b: M⊗A^{⊗n} → M⊗A^{⊗n−1} (n ≥ 1), including
/// the cyclic last term through the left action.
pub fn hochschild_boundary(a: &Algebra, m: &Bimodule, n: i64) -> SparseMatrix {
    assert!(n >= 1, "hochschild_boundary needs degree ≥ 1");
    let slots = vec![a.dim; n as usize];
    string_boundary(
        m.dim,
        &slots,
        &slots[1..],
        &|mi, x| m.right_of(mi, x).to_vec(),
        &|_, x, y| a.mul_basis(x, y).to_vec(),
        Some(&|x, mi| m.left_of(x, mi).to_vec()),
    )
}

/// The bar boundary b′ — the Hochschild boundary without its cyclic term.
/// With a module it maps M⊗A^{⊗n} → M⊗A^{⊗n−1} (n ≥ 1, using only the
/// right action); without one it maps A^{⊗n} → A^{⊗n−1} (n ≥ 2).
pub fn bar_boundary(a: &Algebra, m: Option<&Bimodule>, n: i64) -> SparseMatrix {
    match m {
        Some(m) => {
            assert!(n >= 1, "bar boundary with module needs degree ≥ 1");
            let slots = vec![a.dim; n as usize];
            string_boundary(
                m.dim,
                &slots,
                &slots[1..],
                &|mi, x| m.right_of(mi, x).to_vec(),
                &|_, x, y| a.mul_basis(x, y).to_vec(),
                None,
            )
        }
        None => {
            assert!(n >= 2, "bar boundary without module needs degree ≥ 2");
            let slots = vec![a.dim; n as usize - 1];
            string_boundary(
                a.dim,
                &slots,
                &slots[1..],
                &|x, y| a.mul_basis(x, y).to_vec(),
                &|_, x, y| a.mul_basis(x, y).to_vec(),
                None,
            )
        }
    }
}

// ---------------------------------------------------------------------------
// Complexes
// ---------------------------------------------------------------------------

/// The Hochschild chain complex (M⊗A^{⊗n}, b). Carriers are built through
/// degree `n_max + 1` — one past the requested truncation, so Betti numbers
/// on [0, n_max] are exact — and the top degree is flagged truncated.
pub fn hh_complex(
    a: &Algebra,
    m: &Bimodule,
    n_max: i64,
    cap: usize,
) -> Result<ChainComplex, CoreError> {
    assert!(n_max >= 0);
    let top = n_max + 1;
    check_cap(carrier_dim(m.dim, a.dim, top), cap)?;
    let dims: Vec<usize> =
        (0..=top).map(|n| carrier_dim(m.dim, a.dim, n).expect("within cap")).collect();
    let boundaries: Vec<SparseMatrix> =
        (1..=top).map(|n| hochschild_boundary(a, m, n)).collect();
    Ok(ChainComplex::new(0, dims, boundaries, false, true))
}

/// The Hochschild complex of a possibly nonunital algebra: degree 0 carries
/// A and degree n ≥ 1 carries A⁺⊗A^{⊗n}, where A⁺ is the unitalization.
/// The boundary is b with A⁺ coefficients; in degree 1 the commutator
/// x₀·a − a·x₀ lands in A because A is an ideal in A⁺.
pub fn hh_complex_nonunital(
    a: &Algebra,
    n_max: i64,
    cap: usize,
) -> Result<ChainComplex, CoreError> {
    assert!(n_max >= 0);
    let d = a.dim;
    let u = unitalization(a);
    let top = n_max + 1;
    check_cap(carrier_dim(d + 1, d, top), cap)?;
    let mut dims = vec![d];
    dims.extend((1..=top).map(|n| carrier_dim(d + 1, d, n).expect("within cap")));

    let mut boundaries = Vec::new();
    // Degree 1: A⁺⊗A → A by x₀⊗a ↦ x₀a − ax₀.
    let ix1 = TensorBasisIndex::new(vec![d + 1, d]);
    let mut d1 = SparseMatrix::zero(d, ix1.len());
    for (col, digits) in ix1.iter().enumerate() {
        let (x0, x1) = (digits[0], digits[1]);
        for k in 0..d {
            let v = u.table[x0][x1][k].clone() - u.table[x1][x0][k].clone();
            if !v.is_zero() {
                d1.add_to(k, col, v);
            }
        }
        debug_assert!(u.table[x0][x1][d].is_zero() && u.table[x1][x0][d].is_zero());
    }
    boundaries.push(d1);
    // Degrees ≥ 2: the usual b with coefficients in A⁺ (an A-bimodule by
    // multiplication in A⁺ — deliberately not a unital bimodule).
    for n in 2..=top {
        let slots = vec![d; n as usize];
        boundaries.push(string_boundary(
            d + 1,
            &slots,
            &slots[1..],
            &|mi, x| u.table[mi][x].clone(),
            &|_, x, y| a.mul_basis(x, y).to_vec(),
            Some(&|x, mi| u.table[x][mi].clone()),
        ));
    }
    Ok(ChainComplex::new(0, dims, boundaries, false, true))
}

/// One step of the Hochschild cochain differential,
/// b*: Hom(A^{⊗n}, M) → Hom(A^{⊗n+1}, M):
///
/// (b*f)(x₁,…,x_{n+1}) = x₁·f(x₂,…,x_{n+1})
///     + Σ_{j=1}^{n} (−1)^j f(x₁,…,xⱼxⱼ₊₁,…,x_{n+1})
///     + (−1)^{n+1} f(x₁,…,xₙ)·x_{n+1}.
///
/// Cochain bases are dual tensor-string bases with the same row-major
/// mixed-radix encoding as chains.
fn cochain_differential(a: &Algebra, m: &Bimodule, n: i64) -> SparseMatrix {
    let d = a.dim;
    let nu = n as usize;
    let src_ix = TensorBasisIndex::new({
        let mut v = vec![m.dim];
        v.extend(vec![d; nu]);
        v
    });
    let tgt_ix = TensorBasisIndex::new({
        let mut v = vec![m.dim];
        v.extend(vec![d; nu + 1]);
        v
    });
    let mut out = SparseMatrix::zero(tgt_ix.len(), src_ix.len());
    for (col, digits) in src_ix.iter().enumerate() {
        let mi = digits[0];
        let tuple = &digits[1..];
        // x₁·f(x₂,…): inputs (j, tuple), sign +.
        for j in 0..d {
            let mut td = Vec::with_capacity(nu + 2);
            td.push(0);
            td.push(j);
            td.extend_from_slice(tuple);
            for (mp, c) in m.left_of(j, mi).iter().enumerate() {
                if !c.is_zero() {
                    td[0] = mp;
                    out.add_to(tgt_ix.flatten(&td), col, c.clone());
                }
            }
        }
        // f(…, xⱼxⱼ₊₁, …): inputs expand tuple[t−1] into a product pair.
        for t in 1..=nu {
            for u in 0..d {
                for v in 0..d {
                    let c = &a.table[u][v][tuple[t - 1]];
                    if c.is_zero() {
                        continue;
                    }
                    let mut td = Vec::with_capacity(nu + 2);
                    td.push(mi);
                    td.extend_from_slice(&tuple[..t - 1]);
                    td.push(u);
                    td.push(v);
                    td.extend_from_slice(&tuple[t..]);
                    let val = if t % 2 == 1 { -c.clone() } else { c.clone() };
                    out.add_to(tgt_ix.flatten(&td), col, val);
                }
            }
        }
        // f(x₁,…,xₙ)·x_{n+1}: inputs (tuple, j), sign (−1)^{n+1}.
        for j in 0..d {
            let mut td = Vec::with_capacity(nu + 2);
            td.push(0);
            td.extend_from_slice(tuple);
            td.push(j);
            for (mp, c) in m.right_of(mi, j).iter().enumerate() {
                if !c.is_zero() {
                    td[0] = mp;
                    let val = if (nu + 1) % 2 == 1 { -c.clone() } else { c.clone() };
                    out.add_to(tgt_ix.flatten(&td), col, val);
                }
            }
        }
    }
    out
}

/// The Hochschild cochain complex Hom(A^{⊗n}, M) in homological indexing:
/// the n-cochains sit at chain degree −n, so the complex spans
/// [−(n_max+1), 0] and H^n is the homology at degree −n (exact for
/// n ≤ n_max; the bottom degree is flagged truncated).
pub fn hh_cochain(
    a: &Algebra,
    m: &Bimodule,
    n_max: i64,
    cap: usize,
) -> Result<ChainComplex, CoreError> {
    assert!(n_max >= 0);
    let bottom = n_max + 1;
    check_cap(carrier_dim(m.dim, a.dim, bottom), cap)?;
    // dims listed from degree −(n_max+1) up to 0.
    let dims: Vec<usize> = (0..=bottom)
        .rev()
        .map(|n| carrier_dim(m.dim, a.dim, n).expect("within cap"))
        .collect();
    // Boundary stored at degree −n maps C_{−n} → C_{−n−1}, i.e. b* on
    // n-cochains; listed for degrees lo+1 ..= 0.
    let boundaries: Vec<SparseMatrix> =
        (0..bottom).rev().map(|n| cochain_differential(a, m, n)).collect();
    Ok(ChainComplex::new(-bottom, dims, boundaries, true, false))
}

/// The bar complex (A^{⊗n}, b′) on degrees [1, n_max+1], top flagged.
/// Exactness of this complex is the H-unitality condition.
pub fn bar_complex(a: &Algebra, n_max: i64, cap: usize) -> Result<ChainComplex, CoreError> {
    assert!(n_max >= 1);
    let top = n_max + 1;
    check_cap(carrier_dim(1, a.dim, top), cap)?;
    let dims: Vec<usize> =
        (1..=top).map(|n| carrier_dim(1, a.dim, n).expect("within cap")).collect();
    let boundaries: Vec<SparseMatrix> = (2..=top).map(|n| bar_boundary(a, None, n)).collect();
    Ok(ChainComplex::new(1, dims, boundaries, false, true))
}

/// The one-sided bar complex (M⊗A^{⊗k}, b′) on degrees [0, n_max+1], using
/// only the right action. Its exactness (including degree 0, i.e.
/// M·A = M) is the homological-unitarity condition for M as a right
/// A-module.
pub fn module_bar_complex(
    a: &Algebra,
    m: &Bimodule,
    n_max: i64,
    cap: usize,
) -> Result<ChainComplex, CoreError> {
    assert!(n_max >= 0);
    let top = n_max + 1;
    check_cap(carrier_dim(m.dim, a.dim, top), cap)?;
    let dims: Vec<usize> =
        (0..=top).map(|n| carrier_dim(m.dim, a.dim, n).expect("within cap")).collect();
    let boundaries: Vec<SparseMatrix> =
        (1..=top).map(|n| bar_boundary(a, Some(m), n)).collect();
    Ok(ChainComplex::new(0, dims, boundaries, false, true))
}

// ---------------------------------------------------------------------------
// H-unitality certificates
// ---------------------------------------------------------------------------

/// How an H-unitality verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateMode {
    /// A left unit e was found; s_n = e⊗(−) contracts the bar complex.
    LeftUnit,
    /// A right unit e was found; s_n = (−1)^{n−1}(−)⊗e contracts it.
    RightUnit,
    /// No one-sided unit, but the bar complex is exact by rank computation.
    RankVerified,
    /// The bar complex has nonvanishing homology: not H-unital.
    Failed,
}

/// An H-unitality certificate. When a homotopy is present, the identities
/// b′s_n + s_{n−1}b′ = Id have been verified matrix-exactly on every
/// checked degree.
#[derive(Clone, Debug)]
pub struct HUnitalityCertificate {
    /// Which certificate path succeeded (or that none did).
    pub mode: CertificateMode,
    /// The one-sided unit, for the homotopy modes.
    pub unit: Option<Vec<Rat>>,
    /// The contracting homotopy s_n for degrees 1..=checked_through.
    pub homotopy: BTreeMap<i64, SparseMatrix>,
    /// Highest degree whose exactness the certificate covers.
    pub checked_through: i64,
    /// First inexact degree when the check failed.
    pub failure_degree: Option<i64>,
}

impl HUnitalityCertificate {
    /// True unless the algebra failed the H-unitality check.
    pub fn holds(&self) -> bool {
        self.mode != CertificateMode::Failed
    }
}

/// Coordinates of a left unit (e·x = x for all x), if one exists.
pub fn find_left_unit(a: &Algebra) -> Option<Vec<Rat>> {
    one_sided_unit(a, true)
}

/// Coordinates of a right unit (x·e = x for all x), if one exists.
pub fn find_right_unit(a: &Algebra) -> Option<Vec<Rat>> {
    one_sided_unit(a, false)
}

fn one_sided_unit(a: &Algebra, left: bool) -> Option<Vec<Rat>> {
    let d = a.dim;
    if d == 0 {
        return None;
    }
    // Unknown e = Σ e_i·basis_i; equations indexed by (j, k):
    // left: Σ_i e_i c[i][j][k] = δ_{jk};  right: Σ_i e_i c[j][i][k] = δ_{jk}.
    let mut m = SparseMatrix::zero(d * d, d);
    let mut rhs = vec![Rat::zero(); d * d];
    for j in 0..d {
        for k in 0..d {
            let row = j * d + k;
            for i in 0..d {
                let c = if left { &a.table[i][j][k] } else { &a.table[j][i][k] };
                if !c.is_zero() {
                    m.set(row, i, c.clone());
                }
            }
            if j == k {
                rhs[row] = Rat::from_integer(1.into());
            }
        }
    }
    solve(&m, &rhs)
}

/// Checks H-unitality of a (typically nonunital) algebra: first by
/// searching for a one-sided unit and verifying the induced contracting
/// homotopy matrix-exactly, then by rank-verifying exactness of the bar
/// complex degree by degree.
pub fn h_unitality_check(
    i: &Algebra,
    n_max: i64,
    cap: usize,
) -> Result<HUnitalityCertificate, CoreError> {
    assert!(n_max >= 1);
    let d = i.dim;
    check_cap(carrier_dim(1, d, n_max + 1), cap)?;

    let left = find_left_unit(i);
    let right = if left.is_none() { find_right_unit(i) } else { None };
    if let Some((e, is_left)) = left.map(|e| (e, true)).or(right.map(|e| (e, false))) {
        let mut e_col = SparseMatrix::zero(d, 1);
        for (t, c) in e.iter().enumerate() {
            if !c.is_zero() {
                e_col.set(t, 0, c.clone());
            }
        }
        let mut homotopy = BTreeMap::new();
        for n in 1..=n_max {
            let id_n = SparseMatrix::identity(carrier_dim(1, d, n).expect("within cap"));
            let s = if is_left {
                e_col.kronecker(&id_n)
            } else {
                let sign = if (n - 1) % 2 == 1 { -Rat::from_integer(1.into()) } else { Rat::from_integer(1.into()) };
                id_n.kronecker(&e_col).scale(&sign)
            };
            homotopy.insert(n, s);
        }
        // b′s_n + s_{n−1}b′ = Id, matrix-exactly on every checked degree.
        for n in 1..=n_max {
            let id_n = SparseMatrix::identity(carrier_dim(1, d, n).expect("within cap"));
            let mut lhs = bar_boundary(i, None, n + 1).mul(&homotopy[&n]);
            if n >= 2 {
                lhs = lhs.add(&homotopy[&(n - 1)].mul(&bar_boundary(i, None, n)));
            }
            assert_eq!(lhs, id_n, "one-sided unit homotopy failed at degree {n}");
        }
        return Ok(HUnitalityCertificate {
            mode: if is_left { CertificateMode::LeftUnit } else { CertificateMode::RightUnit },
            unit: Some(e),
            homotopy,
            checked_through: n_max,
            failure_degree: None,
        });
    }

    let bar = bar_complex(i, n_max, cap)?;
    let rep = homology(&bar, 1, n_max, &ExactEngine);
    match rep.rows.iter().find(|r| r.betti != 0) {
        None => Ok(HUnitalityCertificate {
            mode: CertificateMode::RankVerified,
            unit: None,
            homotopy: BTreeMap::new(),
            checked_through: n_max,
            failure_degree: None,
        }),
        Some(row) => Ok(HUnitalityCertificate {
            mode: CertificateMode::Failed,
            unit: None,
            homotopy: BTreeMap::new(),
            checked_through: n_max,
            failure_degree: Some(row.degree),
        }),
    }
}

// ---------------------------------------------------------------------------
// Unital comparison
// ---------------------------------------------------------------------------

/// The degreewise inclusion of the self-coefficient complex into the
/// unitalization complex: A⊗A^{⊗n} ↪ A⁺⊗A^{⊗n} (identity in degree 0).
/// Returns its quasi-isomorphism verdict over [0, max_degree] — for unital
/// algebras this is a quasi-isomorphism.
pub fn nonunital_comparison(
    a: &Algebra,
    max_degree: i64,
    cap: usize,
    engine: &dyn RankEngine,
) -> Result<QuasiIsoReport, CoreError> {
    let sm = self_bimodule(a);
    let unital_cx = hh_complex(a, &sm, max_degree, cap)?;
    let plus_cx = hh_complex_nonunital(a, max_degree, cap)?;
    let d = a.dim;
    let mut iota = SparseMatrix::zero(d + 1, d);
    iota.insert_block(0, 0, &SparseMatrix::identity(d));
    let mut f = BTreeMap::new();
    f.insert(0, SparseMatrix::identity(d));
    for n in 1..=(max_degree + 1) {
        let id_n = SparseMatrix::identity(carrier_dim(1, d, n).expect("within cap"));
        f.insert(n, iota.kronecker(&id_n));
    }
    let map = ChainMap::new(&unital_cx, &plus_cx, f)?;
    Ok(is_quasi_iso(&map, 0, max_degree, engine))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{basis_vec, dual_bimodule};
    use crate::rat::rat_int;
    use crate::zoo::{jet_algebra, matrix_algebra, zoo_parse, ZooEntry};

    const CAP: usize = 200_000;

    fn rationals() -> Algebra {
        match zoo_parse("matrix:1").unwrap() {
            ZooEntry::Algebra(a) => a,
            _ => unreachable!(),
        }
    }

    /// One-dimensional algebra with identically zero multiplication.
    fn zero_mult() -> Algebra {
        Algebra::new(vec!["ε".into()], vec![vec![vec![Rat::zero()]]], None)
    }

    fn betti(c: &ChainComplex, lo: i64, hi: i64) -> Vec<usize> {
        homology(c, lo, hi, &ExactEngine).rows.iter().map(|r| r.betti).collect()
    }

    #[test]
    fn degree_one_boundary_is_the_commutator() {
        // On ℚ it vanishes; on M₂ it sends e₁₁⊗e₁₂ to e₁₂.
        let q = rationals();
        let b1 = hochschild_boundary(&q, &self_bimodule(&q), 1);
        assert!(b1.is_zero());

        let m2 = matrix_algebra(2);
        let b1 = hochschild_boundary(&m2, &self_bimodule(&m2), 1);
        // Column of e₁₁⊗e₁₂: basis index (0, 1) → 0·4 + 1 = 1.
        let col = b1.col_vec(1);
        assert_eq!(col.len(), 1);
        assert_eq!(col.get(&1), Some(&rat_int(1))); // e₁₂ has basis index 1
    }

    #[test]
    fn zero_left_action_degenerates_b_to_bar() {
        // With the left action zeroed out, b equals b′ entry for entry.
        let a = jet_algebra(1, 1);
        let d = a.dim;
        let zero_left = Bimodule::new(
            d,
            d,
            vec![vec![vec![Rat::zero(); d]; d]; d],
            self_bimodule(&a).right.clone(),
        );
        for n in 1..=3 {
            assert_eq!(
                hochschild_boundary(&a, &zero_left, n),
                bar_boundary(&a, Some(&zero_left), n)
            );
        }
    }

    #[test]
    fn bar_boundary_kills_square_zero_products() {
        // b′(ε⊗ε) = ε² = 0 in the dual numbers.
        let a = jet_algebra(1, 1);
        let b2 = bar_boundary(&a, None, 2);
        // ε⊗ε is basis index (1,1) → 1·2+1 = 3.
        assert!(b2.col_vec(3).is_empty());
        // b′(1⊗1) = 1.
        assert_eq!(b2.col_vec(0).get(&0), Some(&rat_int(1)));
    }

    #[test]
    fn bar_squares_to_zero_on_a_jet_algebra() {
        let a = jet_algebra(1, 3);
        for n in 3..=5 {
            assert!(bar_boundary(&a, None, n - 1).mul(&bar_boundary(&a, None, n)).is_zero());
        }
    }

    #[test]
    fn hochschild_homology_of_the_ground_field() {
        let q = rationals();
        let c = hh_complex(&q, &self_bimodule(&q), 3, CAP).unwrap();
        assert_eq!(betti(&c, 0, 3), vec![1, 0, 0, 0]);
    }

    #[test]
    fn matrix_algebra_has_the_homology_of_the_ground_field() {
        // Morita desk check: betti(M₂) = betti(ℚ) in degrees ≤ 3.
        let m2 = matrix_algebra(2);
        let c = hh_complex(&m2, &self_bimodule(&m2), 3, CAP).unwrap();
        assert_eq!(betti(&c, 0, 3), vec![1, 0, 0, 0]);
    }

    #[test]
    fn dual_numbers_have_two_dimensional_degree_zero() {
        let a = jet_algebra(1, 1);
        let c = hh_complex(&a, &self_bimodule(&a), 2, CAP).unwrap();
        assert_eq!(betti(&c, 0, 0), vec![2]);
    }

    #[test]
    fn size_cap_is_enforced() {
        let m2 = matrix_algebra(2);
        match hh_complex(&m2, &self_bimodule(&m2), 4, 100) {
            Err(CoreError::SizeLimit { required, cap }) => {
                assert_eq!(required, 4 * 4_usize.pow(5));
                assert_eq!(cap, 100);
            }
            other => panic!("expected SizeLimit, got {other:?}"),
        }
    }

    #[test]
    fn unitalization_complex_of_a_unital_algebra_matches_the_plain_one() {
        for a in [matrix_algebra(2), jet_algebra(1, 1)] {
            let verdict = nonunital_comparison(&a, 3, CAP, &ExactEngine).unwrap();
            assert!(verdict.is_quasi_iso, "witness {:?}", verdict.witness);
        }
    }

    #[test]
    fn unitalization_complex_of_the_zero_multiplication_line() {
        // Every boundary of even degree has rank one, odd degrees vanish:
        // Betti numbers are all 1.
        let c = hh_complex_nonunital(&zero_mult(), 3, CAP).unwrap();
        assert_eq!(betti(&c, 0, 3), vec![1, 1, 1, 1]);
    }

    #[test]
    fn cochain_complex_of_the_ground_field() {
        let q = rationals();
        let c = hh_cochain(&q, &self_bimodule(&q), 3, CAP).unwrap();
        // H^n at chain degree −n.
        assert_eq!(betti(&c, -3, 0), vec![0, 0, 0, 1]);
    }

    #[test]
    fn cochain_duality_matches_chain_homology() {
        // H^n(A, A*) has the dimension of H_n(A, A) — the dual-space
        // universal-coefficient comparison over a field.
        let a = jet_algebra(1, 1);
        let chains = hh_complex(&a, &self_bimodule(&a), 3, CAP).unwrap();
        let cochains = hh_cochain(&a, &dual_bimodule(&a), 3, CAP).unwrap();
        let hb = betti(&chains, 0, 3);
        let cb = betti(&cochains, -3, 0);
        for n in 0..=3 {
            assert_eq!(hb[n], cb[3 - n], "degree {n}");
        }
    }

    #[test]
    fn corner_ideal_certificate_uses_its_left_unit() {
        let ext = match zoo_parse("corner:1").unwrap() {
            ZooEntry::Extension(e) => e,
            _ => unreachable!(),
        };
        let cert = h_unitality_check(&ext.ideal, 4, CAP).unwrap();
        assert_eq!(cert.mode, CertificateMode::LeftUnit);
        assert!(cert.holds());
        // The unit is the corner idempotent e₁₁.
        assert_eq!(cert.unit.as_deref(), Some(basis_vec(2, 0).as_slice()));
        assert_eq!(cert.homotopy.len(), 4);
    }

    #[test]
    fn column_ideal_certificate_uses_its_right_unit() {
        // span{e₁₂, e₂₂} ⊆ M₂: e₂₂ is a right unit but not a left one.
        let z = Rat::zero();
        let o = rat_int(1);
        let table = vec![
            vec![vec![z.clone(), z.clone()], vec![o.clone(), z.clone()]],
            vec![vec![z.clone(), z.clone()], vec![z.clone(), o.clone()]],
        ];
        let a = Algebra::new(vec!["e12".into(), "e22".into()], table, None);
        let cert = h_unitality_check(&a, 3, CAP).unwrap();
        assert_eq!(cert.mode, CertificateMode::RightUnit);
        assert_eq!(cert.unit.as_deref(), Some(basis_vec(2, 1).as_slice()));
    }

    #[test]
    fn zero_multiplication_fails_h_unitality_at_degree_one() {
        let cert = h_unitality_check(&zero_mult(), 3, CAP).unwrap();
        assert_eq!(cert.mode, CertificateMode::Failed);
        assert!(!cert.holds());
        assert_eq!(cert.failure_degree, Some(1));
    }

    #[test]
    fn two_sided_unit_gives_a_left_certificate() {
        let cert = h_unitality_check(&matrix_algebra(2), 3, CAP).unwrap();
        assert_eq!(cert.mode, CertificateMode::LeftUnit);
    }

    #[test]
    fn bar_complex_of_a_unital_algebra_is_exact() {
        // The rank route on its own confirms exactness where the homotopy
        // route would: degrees 1..3 of the bar complex of M₂ vanish.
        let bar = bar_complex(&matrix_algebra(2), 3, CAP).unwrap();
        assert_eq!(betti(&bar, 1, 3), vec![0, 0, 0]);
        // And the zero-multiplication line is inexact at degree 1.
        let bar = bar_complex(&zero_mult(), 2, CAP).unwrap();
        assert_eq!(homology(&bar, 1, 1, &ExactEngine).betti(1), Some(1));
    }

    #[test]
    fn module_bar_complex_detects_degenerate_modules() {
        // M = I = the zero-multiplication line over itself: M·I = 0 ≠ M.
        let a = zero_mult();
        let c = module_bar_complex(&a, &self_bimodule(&a), 2, CAP).unwrap();
        assert_eq!(homology(&c, 0, 0, &ExactEngine).betti(0), Some(1));
    }
}
