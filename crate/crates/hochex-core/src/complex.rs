//! Chain-complex infrastructure over ℚ: homology reports, mapping cones,
//! quasi-isomorphism verdicts, and snake-lemma long exact sequences.
//!
//! Complexes are finite windows of possibly infinite complexes, so each one
//! carries explicit truncation flags. Homology at a truncated edge is still
//! reported — with the missing boundary treated as zero — but flagged, never
//! silently wrong: at a truncated top edge the reported Betti number is an
//! upper bound for the true one (so 0 there is still a proof of vanishing).
//!
//! Homology *generators* ([`HomologySpace`]) are echelon-form cycle
//! representatives, mutually reduced and reduced against the boundary space;
//! induced maps, connecting homomorphisms, and exactness verdicts are all
//! reported in these canonical coordinates, which makes every report
//! deterministic.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::CoreError;
use crate::linalg::{kernel_basis, rank, solve_block, RankEngine, Rref};
use crate::rat::Rat;
use crate::sparse::{SparseMatrix, SparseVec};

// ---------------------------------------------------------------------------
// Chain complexes
// ---------------------------------------------------------------------------

/// A chain complex supported on the inclusive degree window `[lo, hi]`, with
/// boundaries d_n: C_n → C_{n−1} for n in `(lo, hi]`. d∘d = 0 is asserted at
/// construction.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    lo: i64,
    hi: i64,
    dims: BTreeMap<i64, usize>,
    d: BTreeMap<i64, SparseMatrix>,
    truncated_below: bool,
    truncated_above: bool,
}

impl ChainComplex {
    /// Builds a complex from per-degree dimensions (`dims[k]` is the
    /// dimension at degree `lo + k`) and boundaries (`boundaries[k]` is
    /// d_{lo+k+1}: C_{lo+k+1} → C_{lo+k}). The truncation flags record
    /// whether the window cuts off an infinite complex below/above.
    ///
    /// Panics if shapes mismatch or any d∘d ≠ 0 — those are construction
    /// bugs, not data conditions.
    pub fn new(
        lo: i64,
        dims: Vec<usize>,
        boundaries: Vec<SparseMatrix>,
        truncated_below: bool,
        truncated_above: bool,
    ) -> Self {
        assert!(!dims.is_empty(), "a complex needs at least one degree");
        assert_eq!(boundaries.len() + 1, dims.len(), "need one boundary per adjacent pair");
        let hi = lo + dims.len() as i64 - 1;
        let mut dmap = BTreeMap::new();
        let mut dimmap = BTreeMap::new();
        for (k, &dim) in dims.iter().enumerate() {
            dimmap.insert(lo + k as i64, dim);
        }
        for (k, b) in boundaries.into_iter().enumerate() {
            let n = lo + k as i64 + 1;
            assert_eq!(b.nrows(), dims[k], "d_{n} has wrong row count");
            assert_eq!(b.ncols(), dims[k + 1], "d_{n} has wrong column count");
            dmap.insert(n, b);
        }
        let c = ChainComplex { lo, hi, dims: dimmap, d: dmap, truncated_below, truncated_above };
        for n in (lo + 2)..=hi {
            let prod = c.d[&(n - 1)].mul(&c.d[&n]);
            assert!(prod.is_zero(), "d∘d ≠ 0 between degrees {n} and {}", n - 2);
        }
        c
    }

    /// Lowest degree of the window.
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest degree of the window.
    pub fn hi(&self) -> i64 {
        self.hi
    }

    /// Dimension at a degree (0 outside the window).
    pub fn dim(&self, n: i64) -> usize {
        self.dims.get(&n).copied().unwrap_or(0)
    }

    /// The boundary d_n when stored.
    pub fn d(&self, n: i64) -> Option<&SparseMatrix> {
        self.d.get(&n)
    }

    /// The boundary d_n, materializing a zero matrix of the right shape when
    /// it is not stored.
    pub fn d_or_zero(&self, n: i64) -> SparseMatrix {
        match self.d.get(&n) {
            Some(m) => m.clone(),
            None => SparseMatrix::zero(self.dim(n - 1), self.dim(n)),
        }
    }

    /// Whether the window cuts off the complex below `lo`.
    pub fn truncated_below(&self) -> bool {
        self.truncated_below
    }

    /// Whether the window cuts off the complex above `hi`.
    pub fn truncated_above(&self) -> bool {
        self.truncated_above
    }

    /// The shifted complex C[k] with C[k]_n = C_{n−k} and boundary
    /// (−1)^k·d. Even shifts — the only ones the cyclic machinery uses —
    /// leave boundaries untouched.
    pub fn shift(&self, k: i64) -> ChainComplex {
        let dims = self.dims.iter().map(|(&n, &d)| (n + k, d)).collect();
        let d = self
            .d
            .iter()
            .map(|(&n, m)| (n + k, if k % 2 == 0 { m.clone() } else { m.scale(&-Rat::from_integer(1.into())) }))
            .collect();
        ChainComplex {
            lo: self.lo + k,
            hi: self.hi + k,
            dims,
            d,
            truncated_below: self.truncated_below,
            truncated_above: self.truncated_above,
        }
    }
}

// ---------------------------------------------------------------------------
// Chain maps and mapping cones
// ---------------------------------------------------------------------------

/// A degreewise linear map of chain complexes commuting with boundaries.
#[derive(Clone, Debug)]
pub struct ChainMap<'a> {
    /// Domain complex.
    pub source: &'a ChainComplex,
    /// Codomain complex.
    pub target: &'a ChainComplex,
    f: BTreeMap<i64, SparseMatrix>,
}

impl<'a> ChainMap<'a> {
    /// Validates shapes and every commuting square f∘d = d∘f (missing
    /// degree components are zero matrices of the right shape).
    pub fn new(
        source: &'a ChainComplex,
        target: &'a ChainComplex,
        f: BTreeMap<i64, SparseMatrix>,
    ) -> Result<Self, CoreError> {
        for (&n, m) in &f {
            if m.nrows() != target.dim(n) || m.ncols() != source.dim(n) {
                return Err(CoreError::Invalid(format!(
                    "chain map component at degree {n} is {}×{}, expected {}×{}",
                    m.nrows(),
                    m.ncols(),
                    target.dim(n),
                    source.dim(n)
                )));
            }
        }
        let map = ChainMap { source, target, f };
        let lo = source.lo().min(target.lo());
        let hi = source.hi().max(target.hi());
        for n in (lo + 1)..=hi {
            let lhs = map.f_at(n - 1).mul(&source.d_or_zero(n));
            let rhs = target.d_or_zero(n).mul(&map.f_at(n));
            if lhs != rhs {
                return Err(CoreError::Invalid(format!(
                    "not a chain map: square at degree {n} does not commute"
                )));
            }
        }
        Ok(map)
    }

    /// The identity chain map.
    pub fn identity(c: &'a ChainComplex) -> Self {
        let f = (c.lo()..=c.hi()).map(|n| (n, SparseMatrix::identity(c.dim(n)))).collect();
        ChainMap { source: c, target: c, f }
    }

    /// The zero chain map.
    pub fn zero(source: &'a ChainComplex, target: &'a ChainComplex) -> Self {
        ChainMap { source, target, f: BTreeMap::new() }
    }

    /// The component at a degree (a zero matrix when not stored).
    pub fn f_at(&self, n: i64) -> SparseMatrix {
        match self.f.get(&n) {
            Some(m) => m.clone(),
            None => SparseMatrix::zero(self.target.dim(n), self.source.dim(n)),
        }
    }
}

/// The mapping cone of f: cone_n = target_n ⊕ source_{n−1} with boundary
/// [[d_tgt, f], [0, −d_src]]. f is exact (a quasi-isomorphism) exactly when
/// the cone's homology vanishes.
pub fn mapping_cone(f: &ChainMap<'_>) -> ChainComplex {
    let src = f.source;
    let tgt = f.target;
    let lo = tgt.lo().min(src.lo() + 1);
    let hi = tgt.hi().max(src.hi() + 1);
    let dim = |n: i64| tgt.dim(n) + src.dim(n - 1);
    let mut dims = Vec::new();
    let mut boundaries = Vec::new();
    for n in lo..=hi {
        dims.push(dim(n));
        if n > lo {
            let mut b = SparseMatrix::zero(dim(n - 1), dim(n));
            b.insert_block(0, 0, &tgt.d_or_zero(n));
            b.insert_block(0, tgt.dim(n), &f.f_at(n - 1));
            let minus_d = src.d_or_zero(n - 1).scale(&-Rat::from_integer(1.into()));
            b.insert_block(tgt.dim(n - 1), tgt.dim(n), &minus_d);
            boundaries.push(b);
        }
    }
    ChainComplex::new(
        lo,
        dims,
        boundaries,
        tgt.truncated_below() || src.truncated_below(),
        tgt.truncated_above() || src.truncated_above(),
    )
}

// ---------------------------------------------------------------------------
// Homology reports
// ---------------------------------------------------------------------------

/// One degree of a homology computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyRow {
    /// Chain degree.
    pub degree: i64,
    /// Carrier dimension at this degree.
    pub dim: usize,
    /// rank d_n (boundary *out of* this degree).
    pub rank_out: usize,
    /// rank d_{n+1} (boundary *into* this degree).
    pub rank_in: usize,
    /// dim − rank_out − rank_in.
    pub betti: usize,
    /// True when a truncated window edge makes this row an upper bound
    /// (missing boundary treated as zero).
    pub truncated: bool,
}

/// Betti numbers over a degree window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    /// Rows in ascending degree order.
    pub rows: Vec<HomologyRow>,
}

impl HomologyReport {
    /// The row at a degree, if it was computed.
    pub fn row(&self, degree: i64) -> Option<&HomologyRow> {
        self.rows.iter().find(|r| r.degree == degree)
    }

    /// The Betti number at a degree, if computed.
    pub fn betti(&self, degree: i64) -> Option<usize> {
        self.row(degree).map(|r| r.betti)
    }

    /// True when every computed Betti number vanishes. (Vanishing at a
    /// truncated row is still conclusive: the reported value bounds the true
    /// one from above.)
    pub fn all_zero(&self) -> bool {
        self.rows.iter().all(|r| r.betti == 0)
    }
}

/// Exact Betti numbers of `c` on `[lo, hi] ⊆ [c.lo, c.hi]`, with ranks
/// computed by `engine` (batched, so a parallel engine can fan them out).
pub fn homology(c: &ChainComplex, lo: i64, hi: i64, engine: &dyn RankEngine) -> HomologyReport {
    assert!(c.lo() <= lo && lo <= hi && hi <= c.hi(), "homology window outside complex window");
    let keys: Vec<i64> = (lo..=hi + 1).filter(|n| c.d(*n).is_some()).collect();
    let mats: Vec<&SparseMatrix> = keys.iter().map(|n| c.d(*n).expect("keyed")).collect();
    let ranks = engine.ranks(&mats);
    let rank_of = |n: i64| keys.iter().position(|&k| k == n).map_or(0, |ix| ranks[ix]);
    let rows = (lo..=hi)
        .map(|n| {
            let dim = c.dim(n);
            let rank_out = rank_of(n);
            let rank_in = rank_of(n + 1);
            let truncated = (n == c.hi() && c.truncated_above())
                || (n == c.lo() && c.truncated_below());
            HomologyRow { degree: n, dim, rank_out, rank_in, betti: dim - rank_out - rank_in, truncated }
        })
        .collect();
    HomologyReport { rows }
}

/// Quasi-isomorphism verdict via the mapping cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiIsoReport {
    /// True when the cone's homology vanishes on the whole window.
    pub is_quasi_iso: bool,
    /// First degree with nonvanishing cone homology, when not a quasi-iso.
    pub witness: Option<i64>,
    /// True when the witness sits on a truncated row, so the failure could
    /// be an artifact of the window edge.
    pub inconclusive: bool,
}

/// Tests whether f is a quasi-isomorphism on `[lo, hi]`: builds the cone and
/// checks that its homology vanishes there.
pub fn is_quasi_iso(
    f: &ChainMap<'_>,
    lo: i64,
    hi: i64,
    engine: &dyn RankEngine,
) -> QuasiIsoReport {
    let cone = mapping_cone(f);
    let clo = lo.max(cone.lo());
    let chi = hi.min(cone.hi());
    if clo > chi {
        return QuasiIsoReport { is_quasi_iso: true, witness: None, inconclusive: false };
    }
    let rep = homology(&cone, clo, chi, engine);
    match rep.rows.iter().find(|r| r.betti != 0) {
        None => QuasiIsoReport { is_quasi_iso: true, witness: None, inconclusive: false },
        Some(row) => QuasiIsoReport {
            is_quasi_iso: false,
            witness: Some(row.degree),
            inconclusive: row.truncated,
        },
    }
}

// ---------------------------------------------------------------------------
// Homology generators
// ---------------------------------------------------------------------------

/// Canonical generators of H_n: echelon cycle representatives, mutually
/// reduced and reduced against the boundary space, with unit pivots. Any
/// cycle has unique coordinates in this basis, read off its pivot entries
/// after boundary reduction.
#[derive(Clone, Debug)]
pub struct HomologySpace {
    /// The chain degree.
    pub degree: i64,
    /// dim H_n.
    pub dim: usize,
    reps: Rref,
    boundaries: Rref,
    carrier_dim: usize,
}

impl HomologySpace {
    /// Computes generators at degree n. Degrees outside the window give the
    /// zero space. Exact arithmetic throughout.
    pub fn new(c: &ChainComplex, n: i64) -> Self {
        let carrier_dim = c.dim(n);
        let boundaries = match c.d(n + 1) {
            Some(din) => Rref::from_cols(din),
            None => Rref::new(carrier_dim),
        };
        let cycles: Vec<SparseVec> = match c.d(n) {
            Some(dout) => kernel_basis(dout),
            None => (0..carrier_dim)
                .map(|j| {
                    let mut v = SparseVec::new();
                    v.insert(j, Rat::from_integer(1.into()));
                    v
                })
                .collect(),
        };
        let mut reps = Rref::new(carrier_dim);
        for z in cycles {
            reps.insert(boundaries.reduce(z));
        }
        HomologySpace { degree: n, dim: reps.rank(), reps, boundaries, carrier_dim }
    }

    /// The ambient carrier dimension.
    pub fn carrier_dim(&self) -> usize {
        self.carrier_dim
    }

    /// The representative cycles, in coordinate order.
    pub fn reps(&self) -> &[SparseVec] {
        self.reps.rows()
    }

    /// Coordinates of a cycle's homology class in the representative basis.
    /// Panics if the vector is not a cycle up to boundaries of this space —
    /// callers feed it images of cycles under chain maps, which always are.
    pub fn coords_of_cycle(&self, z: &SparseVec) -> Vec<Rat> {
        let reduced = self.boundaries.reduce(z.clone());
        let mut coords = vec![Rat::zero(); self.dim];
        let mut remainder = reduced;
        for (k, rep) in self.reps.rows().iter().enumerate() {
            let &pivot = rep.keys().next().expect("representatives are nonzero");
            if let Some(c) = remainder.get(&pivot).cloned() {
                coords[k] = c.clone();
                crate::sparse::vec_add_scaled(&mut remainder, rep, &-c);
            }
        }
        assert!(remainder.is_empty(), "vector is not a cycle modulo boundaries");
        coords
    }
}

/// The matrix of the map induced on homology by a chain-map component
/// `f: C_n(src) → C_n(tgt)`, in the canonical generator bases.
pub fn induced_on_homology(
    f: &SparseMatrix,
    src: &HomologySpace,
    tgt: &HomologySpace,
) -> SparseMatrix {
    let mut m = SparseMatrix::zero(tgt.dim, src.dim);
    for (k, rep) in src.reps().iter().enumerate() {
        let image = f.mul_sparse_vec(rep);
        for (row, c) in tgt.coords_of_cycle(&image).into_iter().enumerate() {
            if !c.is_zero() {
                m.set(row, k, c);
            }
        }
    }
    m
}

// ---------------------------------------------------------------------------
// Long exact sequences
// ---------------------------------------------------------------------------

/// One degree of a long-exact-sequence check for a conflation
/// A ↣ B ↠ C: the three homology dimensions, the three junction verdicts
/// around degree n, and the connecting map ∂_n: H_n(C) → H_{n−1}(A).
#[derive(Clone, Debug)]
pub struct LesRow {
    /// Chain degree n.
    pub degree: i64,
    /// dim H_n(A).
    pub h_sub: usize,
    /// dim H_n(B).
    pub h_mid: usize,
    /// dim H_n(C).
    pub h_quot: usize,
    /// Exactness at H_n(B): im i* = ker p*.
    pub exact_at_mid: bool,
    /// Exactness at H_n(C): im p* = ker ∂_n.
    pub exact_at_quot: bool,
    /// Exactness at H_n(A): im ∂_{n+1} = ker i*; `None` when ∂_{n+1} lies
    /// above the checked window.
    pub exact_at_sub: Option<bool>,
    /// ∂_n: H_n(C) → H_{n−1}(A) on canonical generator bases.
    pub connecting: SparseMatrix,
}

/// Result of [`les_check`].
///
/// Besides the per-degree verdicts, the report keeps the canonical homology
/// generator bases of all three complexes, so callers can compose the
/// connecting matrices with other induced maps written in the same bases.
#[derive(Clone, Debug)]
pub struct LesReport {
    /// Rows in ascending degree order.
    pub rows: Vec<LesRow>,
    /// H_•(A) over [lo−1, hi] — rows of `connecting` live in these bases.
    pub sub_spaces: BTreeMap<i64, HomologySpace>,
    /// H_•(B) over [lo, hi].
    pub mid_spaces: BTreeMap<i64, HomologySpace>,
    /// H_•(C) over [lo, hi] — columns of `connecting` live in these bases.
    pub quot_spaces: BTreeMap<i64, HomologySpace>,
}

impl LesReport {
    /// True when every checked junction is exact.
    pub fn all_exact(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.exact_at_mid && r.exact_at_quot && r.exact_at_sub.unwrap_or(true))
    }

    /// The row at a degree, if present.
    pub fn row(&self, degree: i64) -> Option<&LesRow> {
        self.rows.iter().find(|r| r.degree == degree)
    }
}

/// Exactness at a node Y of X →f Y →g Z for plain coordinate spaces:
/// im f = ker g ⟺ g∘f = 0 and rank f + rank g = dim Y.
pub(crate) fn exact_at(f: &SparseMatrix, g: &SparseMatrix) -> bool {
    g.mul(f).is_zero() && rank(f) + rank(g) == f.nrows()
}

/// Checks the long exact homology sequence of a degreewise conflation
/// A ↣ B ↠ C given by chain maps `i` and `p`, over degrees `[lo, hi]`.
///
/// Preconditions, verified degreewise and reported as
/// [`CoreError::NotAConflation`] when violated: p∘i = 0, i injective, p
/// surjective, and dim A + dim C = dim B (so im i = ker p on carriers).
///
/// The connecting homomorphism is constructed by the snake: lift a cycle of
/// C through p, push through d, pull back through i. Junction exactness is
/// decided by rank equalities on the induced homology matrices. Degrees
/// must stay within the windows where all three complexes have stored
/// boundaries — keep `hi` at least one below any truncation edge.
pub fn les_check(
    i: &ChainMap<'_>,
    p: &ChainMap<'_>,
    lo: i64,
    hi: i64,
) -> Result<LesReport, CoreError> {
    assert!(
        core::ptr::eq(i.target as *const _, p.source as *const _),
        "les_check needs maps A → B → C sharing the middle complex"
    );
    let a = i.source;
    let b = i.target;
    let c = p.target;

    for n in (lo - 1)..=hi {
        let i_n = i.f_at(n);
        let p_n = p.f_at(n);
        if !p_n.mul(&i_n).is_zero() {
            return Err(CoreError::NotAConflation {
                degree: n,
                reason: String::from("p ∘ i ≠ 0 on carriers"),
            });
        }
        if rank(&i_n) != a.dim(n) {
            return Err(CoreError::NotAConflation {
                degree: n,
                reason: String::from("i is not injective on carriers"),
            });
        }
        if rank(&p_n) != c.dim(n) {
            return Err(CoreError::NotAConflation {
                degree: n,
                reason: String::from("p is not surjective on carriers"),
            });
        }
        if a.dim(n) + c.dim(n) != b.dim(n) {
            return Err(CoreError::NotAConflation {
                degree: n,
                reason: format!(
                    "dimensions do not add: {} + {} ≠ {}",
                    a.dim(n),
                    c.dim(n),
                    b.dim(n)
                ),
            });
        }
    }

    let ha: BTreeMap<i64, HomologySpace> =
        ((lo - 1)..=hi).map(|n| (n, HomologySpace::new(a, n))).collect();
    let hb: BTreeMap<i64, HomologySpace> =
        (lo..=hi).map(|n| (n, HomologySpace::new(b, n))).collect();
    let hc: BTreeMap<i64, HomologySpace> =
        (lo..=hi).map(|n| (n, HomologySpace::new(c, n))).collect();

    let mut i_star = BTreeMap::new();
    let mut p_star = BTreeMap::new();
    for n in lo..=hi {
        i_star.insert(n, induced_on_homology(&i.f_at(n), &ha[&n], &hb[&n]));
        p_star.insert(n, induced_on_homology(&p.f_at(n), &hb[&n], &hc[&n]));
    }

    // Connecting maps ∂_n: H_n(C) → H_{n−1}(A) by the snake construction.
    let mut connecting = BTreeMap::new();
    for n in lo..=hi {
        let hcn = &hc[&n];
        let han1 = &ha[&(n - 1)];
        let mut del = SparseMatrix::zero(han1.dim, hcn.dim);
        if hcn.dim > 0 {
            let reps: Vec<SparseVec> = hcn.reps().to_vec();
            let lifts = solve_block(&p.f_at(n), &reps);
            let d_b = b.d_or_zero(n);
            let dbs: Vec<SparseVec> = lifts
                .into_iter()
                .map(|l| {
                    let lift = l.expect("p is surjective on carriers");
                    d_b.mul_sparse_vec(&crate::sparse::vec_from_dense(&lift))
                })
                .collect();
            let pulls = solve_block(&i.f_at(n - 1), &dbs);
            for (k, pull) in pulls.into_iter().enumerate() {
                let back = pull.expect("d of a lift lies in ker p = im i");
                let coords = han1.coords_of_cycle(&crate::sparse::vec_from_dense(&back));
                for (row, cval) in coords.into_iter().enumerate() {
                    if !cval.is_zero() {
                        del.set(row, k, cval);
                    }
                }
            }
        }
        connecting.insert(n, del);
    }

    let rows = (lo..=hi)
        .map(|n| {
            let exact_at_mid = exact_at(&i_star[&n], &p_star[&n]);
            let exact_at_quot = exact_at(&p_star[&n], &connecting[&n]);
            let exact_at_sub = if n + 1 <= hi {
                Some(exact_at(&connecting[&(n + 1)], &i_star[&n]))
            } else {
                None
            };
            LesRow {
                degree: n,
                h_sub: ha[&n].dim,
                h_mid: hb[&n].dim,
                h_quot: hc[&n].dim,
                exact_at_mid,
                exact_at_quot,
                exact_at_sub,
                connecting: connecting[&n].clone(),
            }
        })
        .collect();
    Ok(LesReport { rows, sub_spaces: ha, mid_spaces: hb, quot_spaces: hc })
}
