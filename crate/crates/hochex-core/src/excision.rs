//! Mechanical excision verification for ideal extensions I ↣ E ↠ Q.
//!
//! Excision asks whether the Hochschild homology of the ideal I — computed
//! without reference to E — splices into the long exact sequence of the
//! pair. The suite verifies every step at the level of explicit matrices:
//!
//! 1. an H-unitality certificate for I (the hypothesis of excision);
//! 2. Betti tables of the unitalization complexes of I, E, and Q;
//! 3. the cofibre comparison: the mapping cone of HH(I) → HH(E) maps
//!    quasi-isomorphically onto HH(Q);
//! 4. the long exact sequence of the coefficient conflation
//!    M_I ↣ M_E ↠ M_Q of E-bimodules, with snake-lemma connecting maps;
//! 5. comparison quasi-isomorphisms α: HH(I) → HH(E, M_I) and
//!    β: HH(E, M_Q) → HH(Q) that transport that sequence onto the
//!    absolute homologies;
//! 6. a junction-by-junction exactness table for
//!    ⋯ → HH_n(I) → HH_n(E) → HH_n(Q) → HH_{n−1}(I) → ⋯ with the
//!    connecting map conjugated through α and β.
//!
//! When the ideal is not H-unital the suite does not abort: every verdict
//! is still computed and reported, so a failure of excision is visible as
//! data — an inexact junction, a failed comparison map, or both.
//!
//! The module also provides the interpolating filtration F_p between
//! HH(I, M) and HH(E, M) (and its dual from the quotient side), whose
//! level-to-level comparison maps probe where excision degrades.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::{basis_vec, self_bimodule, Bimodule, Extension};
use crate::complex::{
    exact_at, homology, induced_on_homology, is_quasi_iso, les_check, mapping_cone, ChainComplex,
    ChainMap, HomologyReport, HomologySpace, LesReport, QuasiIsoReport,
};
use crate::error::CoreError;
use crate::hochschild::{
    carrier_dim, check_cap, h_unitality_check, hh_complex, hh_complex_nonunital,
    hochschild_boundary, module_bar_complex, HUnitalityCertificate,
};
use crate::linalg::{solve_block, RankEngine};
use crate::rat::Rat;
use crate::sparse::{vec_to_dense, SparseMatrix, SparseVec};

// ---------------------------------------------------------------------------
// Report types
// ---------------------------------------------------------------------------

/// Exactness verdict at one node of the spliced sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JunctionVerdict {
    /// The image of the incoming map equals the kernel of the outgoing one.
    Exact,
    /// Image and kernel differ.
    Inexact,
    /// The verdict needs a connecting map transported through a comparison
    /// map that is not an isomorphism on homology; the payload names it.
    NotTransportable(String),
}

impl JunctionVerdict {
    /// True only for [`JunctionVerdict::Exact`].
    pub fn is_exact(&self) -> bool {
        matches!(self, JunctionVerdict::Exact)
    }
}

/// Exactness of the spliced sequence around degree n:
///
/// HH_{n+1}(Q) →∂ HH_n(I) →i* HH_n(E) →p* HH_n(Q) →∂ HH_{n−1}(I)
#[derive(Clone, Debug)]
pub struct ExcisionJunction {
    /// The degree n.
    pub degree: i64,
    /// Exactness at HH_n(E): im i* = ker p*.
    pub at_total: JunctionVerdict,
    /// Exactness at HH_n(Q): im p* = ker ∂.
    pub at_quotient: JunctionVerdict,
    /// Exactness at HH_n(I): im ∂ = ker i*; `None` when ∂ from degree n+1
    /// lies above the checked window.
    pub at_ideal: Option<JunctionVerdict>,
}

/// Everything the excision suite verified for one extension.
#[derive(Clone, Debug)]
pub struct ExcisionReport {
    /// Degree through which homology was checked.
    pub max_degree: i64,
    /// H-unitality certificate for the ideal.
    pub h_unitality: HUnitalityCertificate,
    /// Betti table of the unitalization complex of I on [0, max_degree].
    pub betti_ideal: HomologyReport,
    /// Betti table for E.
    pub betti_total: HomologyReport,
    /// Betti table for Q.
    pub betti_quotient: HomologyReport,
    /// Cone(HH(I) → HH(E)) → HH(Q) quasi-isomorphism verdict on
    /// [0, max_degree].
    pub cofibre: QuasiIsoReport,
    /// Long exact sequence of the coefficient conflation
    /// HH(E, M_I) → HH(E, M_E) → HH(E, M_Q) on [0, max_degree − 1].
    pub les: LesReport,
    /// α: HH(I) → HH(E, M_I) quasi-isomorphism verdict.
    pub comparison_ideal: QuasiIsoReport,
    /// β: HH(E, M_Q) → HH(Q) quasi-isomorphism verdict.
    pub comparison_quotient: QuasiIsoReport,
    /// Junction table on [0, max_degree − 1].
    pub junctions: Vec<ExcisionJunction>,
}

impl ExcisionReport {
    /// True when every check in the suite passed: certificate, cofibre,
    /// long exact sequence, both comparisons, and every junction.
    pub fn holds(&self) -> bool {
        self.h_unitality.holds()
            && self.cofibre.is_quasi_iso
            && !self.cofibre.inconclusive
            && self.les.all_exact()
            && self.comparison_ideal.is_quasi_iso
            && !self.comparison_ideal.inconclusive
            && self.comparison_quotient.is_quasi_iso
            && !self.comparison_quotient.inconclusive
            && self.junctions.iter().all(|j| {
                j.at_total.is_exact()
                    && j.at_quotient.is_exact()
                    && j.at_ideal.as_ref().map_or(true, JunctionVerdict::is_exact)
            })
    }

    /// The junction row at a degree, if present.
    pub fn junction(&self, degree: i64) -> Option<&ExcisionJunction> {
        self.junctions.iter().find(|j| j.degree == degree)
    }
}

// ---------------------------------------------------------------------------
// Helpers
// ---------------------------------------------------------------------------

/// The n-fold Kronecker power; the 0-fold power is the 1×1 identity.
fn pow_kron(m: &SparseMatrix, n: i64) -> SparseMatrix {
    let mut out = SparseMatrix::identity(1);
    for _ in 0..n {
        out = out.kronecker(m);
    }
    out
}

/// Extends a morphism matrix to unitalizations: block diagonal [m, 1],
/// sending adjoined unit to adjoined unit.
fn unital_extension(m: &SparseMatrix) -> SparseMatrix {
    let mut out = SparseMatrix::zero(m.nrows() + 1, m.ncols() + 1);
    out.insert_block(0, 0, m);
    out.set(m.nrows(), m.ncols(), Rat::one());
    out
}

/// Inverts a matrix over ℚ by exact column solves; `None` when the matrix
/// is not square or not invertible.
fn invert(m: &SparseMatrix) -> Option<SparseMatrix> {
    if m.nrows() != m.ncols() {
        return None;
    }
    let n = m.nrows();
    let cols: Vec<SparseVec> = (0..n)
        .map(|j| {
            let mut v = SparseVec::new();
            v.insert(j, Rat::one());
            v
        })
        .collect();
    let mut out = SparseMatrix::zero(n, n);
    for (j, sol) in solve_block(m, &cols).into_iter().enumerate() {
        let sol = sol?;
        for (i, c) in sol.into_iter().enumerate() {
            if !c.is_zero() {
                out.set(i, j, c);
            }
        }
    }
    Some(out)
}

/// The bimodule obtained from an A-bimodule along an algebra morphism
/// f: B → A (matrix `a.dim × bdim`, columns the images of the B basis):
/// b·m = f(b)·m and m·b = m·f(b).
pub fn pullback_bimodule(m: &Bimodule, f: &SparseMatrix, bdim: usize) -> Bimodule {
    assert_eq!(f.ncols(), bdim);
    let fcols: Vec<Vec<Rat>> =
        (0..bdim).map(|j| vec_to_dense(&f.col_vec(j), f.nrows())).collect();
    let left: Vec<Vec<Vec<Rat>>> = (0..bdim)
        .map(|b| (0..m.dim).map(|mi| m.act_left(&fcols[b], &basis_vec(m.dim, mi))).collect())
        .collect();
    let right: Vec<Vec<Vec<Rat>>> = (0..m.dim)
        .map(|mi| (0..bdim).map(|b| m.act_right(&basis_vec(m.dim, mi), &fcols[b])).collect())
        .collect();
    Bimodule::new(m.dim, bdim, left, right)
}

// ---------------------------------------------------------------------------
// The suite
// ---------------------------------------------------------------------------

/// Runs the full excision verification for an ideal extension through
/// `max_degree`. Homology ranks go through `engine`; homology generator
/// bases, connecting maps, and comparison inverses are always exact.
///
/// Betti tables and the cofibre verdict cover [0, max_degree]; the long
/// exact sequence and the junction table cover [0, max_degree − 1], where
/// every homology in sight is computed away from truncation edges.
pub fn excision_suite(
    ext: &Extension,
    max_degree: i64,
    cap: usize,
    engine: &dyn RankEngine,
) -> Result<ExcisionReport, CoreError> {
    assert!(max_degree >= 1, "excision suite needs max_degree ≥ 1");
    let d = max_degree;

    // 1. H-unitality certificate for the ideal.
    let h_unitality = h_unitality_check(&ext.ideal, d, cap)?;

    // 2. Unitalization complexes and Betti tables.
    let icx = hh_complex_nonunital(&ext.ideal, d, cap)?;
    let ecx = hh_complex_nonunital(&ext.total, d, cap)?;
    let qcx = hh_complex_nonunital(&ext.quotient, d, cap)?;
    let betti_ideal = homology(&icx, 0, d, engine);
    let betti_total = homology(&ecx, 0, d, engine);
    let betti_quotient = homology(&qcx, 0, d, engine);

    // 3. Cofibre comparison: cone(HH(I) → HH(E)) → HH(Q). In degree n ≥ 1
    // the maps are unitalization morphisms on the coefficient slot and the
    // plain morphisms on the tensor slots; p∘i vanishes degreewise because
    // proj∘incl = 0 hits every degree in at least one slot.
    let incl_plus = unital_extension(&ext.incl.matrix);
    let proj_plus = unital_extension(&ext.proj.matrix);
    let mut fmap = BTreeMap::new();
    let mut gcomp = BTreeMap::new();
    fmap.insert(0, ext.incl.matrix.clone());
    gcomp.insert(0, ext.proj.matrix.clone());
    for n in 1..=(d + 1) {
        let kr = pow_kron(&ext.incl.matrix, n);
        fmap.insert(n, incl_plus.kronecker(&kr));
        let kr = pow_kron(&ext.proj.matrix, n);
        gcomp.insert(n, proj_plus.kronecker(&kr));
    }
    let incl_nu = ChainMap::new(&icx, &ecx, fmap)?;
    let cone = mapping_cone(&incl_nu);
    let mut gmap = BTreeMap::new();
    for n in cone.lo()..=cone.hi() {
        let mut g = SparseMatrix::zero(qcx.dim(n), cone.dim(n));
        if let Some(p_n) = gcomp.get(&n) {
            g.insert_block(0, 0, p_n);
        }
        gmap.insert(n, g);
    }
    let cofibre_map = ChainMap::new(&cone, &qcx, gmap)?;
    let cofibre = is_quasi_iso(&cofibre_map, 0, d, engine);

    // 4. Long exact sequence of the coefficient conflation over E.
    let mods = ext.coefficient_modules();
    let e = &ext.total;
    let xcx = hh_complex(e, &mods.sub, d - 1, cap)?;
    let ycx = hh_complex(e, &mods.total, d - 1, cap)?;
    let zcx = hh_complex(e, &mods.quot, d - 1, cap)?;
    let mut imap = BTreeMap::new();
    let mut pmap = BTreeMap::new();
    for n in 0..=d {
        let id_n = SparseMatrix::identity(carrier_dim(1, e.dim, n).expect("within cap"));
        imap.insert(n, mods.incl.kronecker(&id_n));
        pmap.insert(n, mods.proj.kronecker(&id_n));
    }
    let iprime = ChainMap::new(&xcx, &ycx, imap)?;
    let pprime = ChainMap::new(&ycx, &zcx, pmap)?;
    let les = les_check(&iprime, &pprime, 0, d - 1)?;

    // 5. Comparison maps α: HH(I) → HH(E, M_I) and β: HH(E, M_Q) → HH(Q).
    let ibim = self_bimodule(&ext.ideal);
    let qbim = self_bimodule(&ext.quotient);
    let xcx_self = hh_complex(&ext.ideal, &ibim, d - 1, cap)?;
    let zcx_self = hh_complex(&ext.quotient, &qbim, d - 1, cap)?;
    let mut amap = BTreeMap::new();
    let mut bmap = BTreeMap::new();
    for n in 0..=d {
        amap.insert(
            n,
            SparseMatrix::identity(ext.ideal.dim).kronecker(&pow_kron(&ext.incl.matrix, n)),
        );
        bmap.insert(
            n,
            SparseMatrix::identity(ext.quotient.dim).kronecker(&pow_kron(&ext.proj.matrix, n)),
        );
    }
    let alpha = ChainMap::new(&xcx_self, &xcx, amap)?;
    let beta = ChainMap::new(&zcx, &zcx_self, bmap)?;
    let comparison_ideal = is_quasi_iso(&alpha, 0, d - 1, engine);
    let comparison_quotient = is_quasi_iso(&beta, 0, d - 1, engine);

    // 6. Junction table. The absolute maps i = incl⊗incl^{⊗n} and
    // p = proj⊗proj^{⊗n} factor as i = i′∘α and p = β∘p′ on the nose, so
    // the coefficient sequence's connecting map transports through the
    // comparison isomorphisms: ∂̃ = (α*)⁻¹ ∘ ∂ ∘ (β*)⁻¹.
    let mut ijmap = BTreeMap::new();
    let mut pjmap = BTreeMap::new();
    for n in 0..=d {
        let kr = pow_kron(&ext.incl.matrix, n);
        ijmap.insert(n, ext.incl.matrix.kronecker(&kr));
        let kr = pow_kron(&ext.proj.matrix, n);
        pjmap.insert(n, ext.proj.matrix.kronecker(&kr));
    }
    let i_self = ChainMap::new(&xcx_self, &ycx, ijmap)?;
    let p_self = ChainMap::new(&ycx, &zcx_self, pjmap)?;

    let hx: BTreeMap<i64, HomologySpace> =
        ((-1)..=(d - 1)).map(|n| (n, HomologySpace::new(&xcx_self, n))).collect();
    let hz: BTreeMap<i64, HomologySpace> =
        (0..=(d - 1)).map(|n| (n, HomologySpace::new(&zcx_self, n))).collect();

    let mut i_star = BTreeMap::new();
    let mut p_star = BTreeMap::new();
    for n in 0..=(d - 1) {
        i_star.insert(n, induced_on_homology(&i_self.f_at(n), &hx[&n], &les.mid_spaces[&n]));
        p_star.insert(n, induced_on_homology(&p_self.f_at(n), &les.mid_spaces[&n], &hz[&n]));
    }

    let mut alpha_star_inv: BTreeMap<i64, Option<SparseMatrix>> = BTreeMap::new();
    for n in (-1)..=(d - 2) {
        let a_star = induced_on_homology(&alpha.f_at(n), &hx[&n], &les.sub_spaces[&n]);
        alpha_star_inv.insert(n, invert(&a_star));
    }
    let mut beta_star_inv: BTreeMap<i64, Option<SparseMatrix>> = BTreeMap::new();
    for n in 0..=(d - 1) {
        let b_star = induced_on_homology(&beta.f_at(n), &les.quot_spaces[&n], &hz[&n]);
        beta_star_inv.insert(n, invert(&b_star));
    }

    let mut del_tilde: BTreeMap<i64, Result<SparseMatrix, String>> = BTreeMap::new();
    for n in 0..=(d - 1) {
        let entry = match (&beta_star_inv[&n], &alpha_star_inv[&(n - 1)]) {
            (None, _) => Err(format!(
                "quotient comparison is not invertible on homology at degree {n}"
            )),
            (_, None) => Err(format!(
                "ideal comparison is not invertible on homology at degree {}",
                n - 1
            )),
            (Some(b_inv), Some(a_inv)) => {
                let del = &les.row(n).expect("row in window").connecting;
                Ok(a_inv.mul(del).mul(b_inv))
            }
        };
        del_tilde.insert(n, entry);
    }

    let junctions: Vec<ExcisionJunction> = (0..=(d - 1))
        .map(|n| {
            let verdict = |ok: bool| if ok { JunctionVerdict::Exact } else { JunctionVerdict::Inexact };
            let at_total = verdict(exact_at(&i_star[&n], &p_star[&n]));
            let at_quotient = match &del_tilde[&n] {
                Ok(del) => verdict(exact_at(&p_star[&n], del)),
                Err(e) => JunctionVerdict::NotTransportable(e.clone()),
            };
            let at_ideal = if n <= d - 2 {
                Some(match &del_tilde[&(n + 1)] {
                    Ok(del) => verdict(exact_at(del, &i_star[&n])),
                    Err(e) => JunctionVerdict::NotTransportable(e.clone()),
                })
            } else {
                None
            };
            ExcisionJunction { degree: n, at_total, at_quotient, at_ideal }
        })
        .collect();

    Ok(ExcisionReport {
        max_degree: d,
        h_unitality,
        betti_ideal,
        betti_total,
        betti_quotient,
        cofibre,
        les,
        comparison_ideal,
        comparison_quotient,
        junctions,
    })
}

// ---------------------------------------------------------------------------
// Interpolating filtrations
// ---------------------------------------------------------------------------

/// Carrier dimension of F_p at degree k: M⊗I^{⊗(k−p)⁺}⊗E^{⊗min(k,p)}.
fn filtration_dim(mdim: usize, idim: usize, edim: usize, level: i64, k: i64) -> Option<usize> {
    carrier_dim(carrier_dim(mdim, idim, (k - level).max(0))?, edim, k.min(level))
}

/// The level-p interpolation complex F_p between HH(I, M) and HH(E, M),
/// for an E-bimodule M: degree k carries M⊗E^{⊗k} when k ≤ p and
/// M⊗I^{⊗(k−p)}⊗E^{⊗p} above. F_p is the subcomplex of HH(E, M) spanned
/// by strings whose leading k−p entries lie in the ideal: because I is a
/// two-sided ideal, the boundary maps this span into the corresponding
/// span one degree down, every ideal-typed slot of the image staying
/// inside incl(I). The matrix is therefore the composite
///
/// (Id ⊗ r^{⊗(k−1−p)} ⊗ Id) ∘ b_{HH(E,M)} ∘ (Id ⊗ incl^{⊗(k−p)} ⊗ Id),
///
/// where r is a left inverse of incl — exact on the embedded image. F_0 is
/// HH(I, M|_I) on the nose; large p recovers HH(E, M) in any fixed degree
/// range.
pub fn filtration_complex(
    ext: &Extension,
    m: &Bimodule,
    level: i64,
    n_max: i64,
    cap: usize,
) -> Result<ChainComplex, CoreError> {
    assert!(level >= 0 && n_max >= 0);
    assert_eq!(m.left.len(), ext.total.dim, "M must be a bimodule over the total algebra");
    let idim = ext.ideal.dim;
    let edim = ext.total.dim;
    let top = n_max + 1;
    // The boundary is computed through the ambient complex, so the ambient
    // carrier must fit under the cap as well.
    check_cap(carrier_dim(m.dim, edim, top), cap)?;
    let mut dims = Vec::new();
    for k in 0..=top {
        dims.push(check_cap(filtration_dim(m.dim, idim, edim, level, k), cap)?);
    }
    let retraction = ext.incl_left_inverse();
    let boundaries: Vec<SparseMatrix> = (1..=top)
        .map(|k| {
            let b_e = hochschild_boundary(&ext.total, m, k);
            let pre = SparseMatrix::identity(m.dim)
                .kronecker(&pow_kron(&ext.incl.matrix, (k - level).max(0)))
                .kronecker(&SparseMatrix::identity(
                    carrier_dim(1, edim, k.min(level)).expect("within cap"),
                ));
            let post = SparseMatrix::identity(m.dim)
                .kronecker(&pow_kron(&retraction, (k - 1 - level).max(0)))
                .kronecker(&SparseMatrix::identity(
                    carrier_dim(1, edim, (k - 1).min(level)).expect("within cap"),
                ));
            post.mul(&b_e).mul(&pre)
        })
        .collect();
    Ok(ChainComplex::new(0, dims, boundaries, false, true))
}

/// Carrier dimension of F̃_p at degree k: M⊗Q^{⊗min(k,p)}⊗E^{⊗(k−p)⁺}.
fn dual_filtration_dim(mdim: usize, qdim: usize, edim: usize, level: i64, k: i64) -> Option<usize> {
    carrier_dim(carrier_dim(mdim, qdim, k.min(level))?, edim, (k - level).max(0))
}

/// The level-p dual interpolation F̃_p between HH(E, M) and HH(Q, M), for
/// a Q-bimodule M (the total algebra acts through proj): degree k carries
/// M⊗Q^{⊗k} when k ≤ p and M⊗Q^{⊗p}⊗E^{⊗(k−p)} above. F̃_p is the
/// quotient of HH(E, M∘proj) by the span of strings with an ideal entry
/// among the first min(k, p) slots — a span the boundary preserves, since
/// ideal entries absorb products and act as zero on M. The matrix is the
/// induced map, computed by lifting quotient slots through the extension's
/// linear section and projecting afterwards:
///
/// (Id ⊗ proj^{⊗min(k−1,p)} ⊗ Id) ∘ b_{HH(E,M∘proj)} ∘ (Id ⊗ s^{⊗min(k,p)} ⊗ Id).
///
/// Independence of the section choice is exactly the span-stability above;
/// the d∘d = 0 assertion in the constructor re-verifies it on every
/// instance. F̃_0 is HH(E, M∘proj) on the nose.
pub fn dual_filtration_complex(
    ext: &Extension,
    m: &Bimodule,
    level: i64,
    n_max: i64,
    cap: usize,
) -> Result<ChainComplex, CoreError> {
    assert!(level >= 0 && n_max >= 0);
    assert_eq!(m.left.len(), ext.quotient.dim, "M must be a bimodule over the quotient");
    let qdim = ext.quotient.dim;
    let edim = ext.total.dim;
    let top = n_max + 1;
    check_cap(carrier_dim(m.dim, edim, top), cap)?;
    let mut dims = Vec::new();
    for k in 0..=top {
        dims.push(check_cap(dual_filtration_dim(m.dim, qdim, edim, level, k), cap)?);
    }
    let pulled = pullback_bimodule(m, &ext.proj.matrix, edim);
    let boundaries: Vec<SparseMatrix> = (1..=top)
        .map(|k| {
            let b_e = hochschild_boundary(&ext.total, &pulled, k);
            let pre = SparseMatrix::identity(m.dim)
                .kronecker(&pow_kron(&ext.section, k.min(level)))
                .kronecker(&SparseMatrix::identity(
                    carrier_dim(1, edim, (k - level).max(0)).expect("within cap"),
                ));
            let post = SparseMatrix::identity(m.dim)
                .kronecker(&pow_kron(&ext.proj.matrix, (k - 1).min(level)))
                .kronecker(&SparseMatrix::identity(
                    carrier_dim(1, edim, (k - 1 - level).max(0)).expect("within cap"),
                ));
            post.mul(&b_e).mul(&pre)
        })
        .collect();
    Ok(ChainComplex::new(0, dims, boundaries, false, true))
}

/// Result of one filtration comparison step.
#[derive(Clone, Debug)]
pub struct FiltrationReport {
    /// The level p of the comparison F_p → F_{p+1}.
    pub level: i64,
    /// Whether M is homologically unitary as a one-sided module over the
    /// relevant algebra (the convergence hypothesis); `None` if not checked.
    pub module_unitary: Option<bool>,
    /// Quasi-isomorphism verdict of the level-to-level comparison.
    pub verdict: QuasiIsoReport,
}

/// Compares F_level → F_{level+1} over [0, max_degree] for an E-bimodule
/// M. With `check_module`, also rank-verifies the convergence hypothesis:
/// exactness of the one-sided bar complex of M as a right I-module.
pub fn filtration_probe(
    ext: &Extension,
    m: &Bimodule,
    level: i64,
    max_degree: i64,
    cap: usize,
    engine: &dyn RankEngine,
    check_module: bool,
) -> Result<FiltrationReport, CoreError> {
    let fp = filtration_complex(ext, m, level, max_degree, cap)?;
    let fp1 = filtration_complex(ext, m, level + 1, max_degree, cap)?;
    let idim = ext.ideal.dim;
    let edim = ext.total.dim;
    let mut comps = BTreeMap::new();
    for k in 0..=(max_degree + 1) {
        let comp = if k <= level {
            SparseMatrix::identity(carrier_dim(m.dim, edim, k).expect("within cap"))
        } else {
            // Retype the innermost ideal slot: Id ⊗ incl ⊗ Id.
            let a = carrier_dim(m.dim, idim, k - level - 1).expect("within cap");
            let b = carrier_dim(1, edim, level).expect("within cap");
            SparseMatrix::identity(a)
                .kronecker(&ext.incl.matrix)
                .kronecker(&SparseMatrix::identity(b))
        };
        comps.insert(k, comp);
    }
    let map = ChainMap::new(&fp, &fp1, comps)?;
    let verdict = is_quasi_iso(&map, 0, max_degree, engine);
    let module_unitary = if check_module {
        let restricted = pullback_bimodule(m, &ext.incl.matrix, ext.ideal.dim);
        let bar = module_bar_complex(&ext.ideal, &restricted, max_degree, cap)?;
        Some(homology(&bar, 0, max_degree, engine).rows.iter().all(|r| r.betti == 0))
    } else {
        None
    };
    Ok(FiltrationReport { level, module_unitary, verdict })
}

/// Compares F̃_level → F̃_{level+1} over [0, max_degree] for a Q-bimodule
/// M. With `check_module`, rank-verifies exactness of the one-sided bar
/// complex of M as a right Q-module.
pub fn dual_filtration_probe(
    ext: &Extension,
    m: &Bimodule,
    level: i64,
    max_degree: i64,
    cap: usize,
    engine: &dyn RankEngine,
    check_module: bool,
) -> Result<FiltrationReport, CoreError> {
    let fp = dual_filtration_complex(ext, m, level, max_degree, cap)?;
    let fp1 = dual_filtration_complex(ext, m, level + 1, max_degree, cap)?;
    let qdim = ext.quotient.dim;
    let edim = ext.total.dim;
    let mut comps = BTreeMap::new();
    for k in 0..=(max_degree + 1) {
        let comp = if k <= level {
            SparseMatrix::identity(carrier_dim(m.dim, qdim, k).expect("within cap"))
        } else {
            // Collapse the outermost total slot: Id ⊗ proj ⊗ Id.
            let a = carrier_dim(m.dim, qdim, level).expect("within cap");
            let b = carrier_dim(1, edim, k - level - 1).expect("within cap");
            SparseMatrix::identity(a)
                .kronecker(&ext.proj.matrix)
                .kronecker(&SparseMatrix::identity(b))
        };
        comps.insert(k, comp);
    }
    let map = ChainMap::new(&fp, &fp1, comps)?;
    let verdict = is_quasi_iso(&map, 0, max_degree, engine);
    let module_unitary = if check_module {
        let bar = module_bar_complex(&ext.quotient, m, max_degree, cap)?;
        Some(homology(&bar, 0, max_degree, engine).rows.iter().all(|r| r.betti == 0))
    } else {
        None
    };
    Ok(FiltrationReport { level, module_unitary, verdict })
}
