//! Kähler differential forms of a commutative unital algebra, and the
//! antisymmetrization maps comparing them with Hochschild chains.
//!
//! For a commutative unital A with basis e₁,…,e_d, the module of 1-forms
//! Ω¹ is presented on the free module A⊗ℚ^d (generators de₁,…,de_d) by the
//! Leibniz relations d(e_ie_j) = e_i·de_j + e_j·de_i, closed up under
//! multiplication by basis elements. Higher forms Ω^k are presented on
//! A⊗Λ^k(ℚ^d) by wedging each degree-one relation with all (k−1)-fold
//! exterior monomials. Everything is an explicit reduced row echelon
//! computation; the quotient basis is the set of free columns.
//!
//! The comparison maps are
//!
//! * ε (antisymmetrization): Ω^k → A⊗A^{⊗k}, e_i·de_{j₁}∧⋯∧de_{j_k} ↦
//!   Σ_{σ} sgn(σ)·e_i⊗e_{j_{σ(1)}}⊗⋯⊗e_{j_{σ(k)}}, landing in Hochschild
//!   k-cycles;
//! * κ (projection): A⊗A^{⊗k} → Ω^k, a₀⊗a₁⊗⋯⊗a_k ↦
//!   (1/k!)·a₀·da₁∧⋯∧da_k, vanishing on boundaries.
//!
//! κ∘ε is the identity of Ω^k, exhibiting the forms as a direct summand
//! of the degree-k homology.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::{Algebra, TensorBasisIndex};
use crate::error::CoreError;
use crate::linalg::Rref;
use crate::rat::{rat_int, Rat};
use crate::sparse::{SparseMatrix, SparseVec};

/// All k-element subsets of {0,…,n−1} in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // Advance the rightmost index that can still move.
        let mut t = k;
        while t > 0 {
            t -= 1;
            if cur[t] < n - (k - t) {
                cur[t] += 1;
                for s in (t + 1)..k {
                    cur[s] = cur[s - 1] + 1;
                }
                break;
            }
            if t == 0 {
                return out;
            }
        }
    }
}

/// All permutations of {0,…,k−1} with their signs.
pub(crate) fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i8)> {
    let mut out = vec![(Vec::new(), 1i8)];
    for next in 0..k {
        let mut grown = Vec::with_capacity(out.len() * (next + 1));
        for (perm, sign) in &out {
            // Insert `next` at every position; each step right of the end
            // flips the sign once per transposition.
            for pos in 0..=perm.len() {
                let mut p = perm.clone();
                p.insert(pos, next);
                let flips = (perm.len() - pos) as u32;
                let s = if flips % 2 == 0 { *sign } else { -*sign };
                grown.push((p, s));
            }
        }
        out = grown;
    }
    out
}

/// The module of Kähler k-forms of a commutative unital algebra, as an
/// explicit quotient of the carrier A⊗Λ^k(ℚ^d) with an echelon relation
/// basis and a free-column quotient basis.
#[derive(Clone, Debug)]
pub struct KaehlerForms {
    /// The form degree k.
    pub degree: usize,
    /// Dimension of the carrier A⊗Λ^k(ℚ^d) = d·C(d,k).
    pub carrier_dim: usize,
    /// Dimension of Ω^k as a ℚ-vector space.
    pub dim: usize,
    /// Human-readable names of the quotient basis elements.
    pub labels: Vec<String>,
    relations: Rref,
    basis_cols: Vec<usize>,
    subsets: Vec<Vec<usize>>,
    adim: usize,
}

impl KaehlerForms {
    /// The lexicographically ordered k-subsets indexing the exterior slots.
    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    /// Carrier column of e_i ⊗ δ_J for a sorted subset J.
    pub fn carrier_index(&self, i: usize, subset: &[usize]) -> usize {
        assert!(i < self.adim);
        let pos = self
            .subsets
            .binary_search_by(|s| s.as_slice().cmp(subset))
            .expect("subset must be sorted and in range");
        i * self.subsets.len() + pos
    }

    /// Coordinates of a carrier vector in the quotient basis: reduce by
    /// the relations, then read the free-column entries.
    pub fn reduce_to_coords(&self, v: &SparseVec) -> Vec<Rat> {
        let reduced = self.relations.reduce(v.clone());
        let mut out = vec![Rat::zero(); self.dim];
        let mut seen = reduced.len();
        for (slot, &col) in self.basis_cols.iter().enumerate() {
            if let Some(c) = reduced.get(&col) {
                out[slot] = c.clone();
                seen -= 1;
            }
        }
        assert_eq!(seen, 0, "reduced vector has support outside the free columns");
        out
    }
}

/// Computes Ω^k by echelon reduction of the Leibniz relation module.
/// Rejects non-unital algebras as invalid and non-commutative ones with a
/// witness pair.
pub fn kaehler_forms(a: &Algebra, k: usize) -> Result<KaehlerForms, CoreError> {
    if !a.is_unital() {
        return Err(CoreError::Invalid(String::from(
            "Kähler forms are defined for unital algebras only",
        )));
    }
    if let Some(witness) = a.commutator_witness() {
        return Err(CoreError::NotCommutative { witness });
    }
    let d = a.dim;
    let unit = a.unit_vec().expect("checked unital").to_vec();

    // Degree-one relation module: rows of the Rref of all e_l·r_{ij},
    // where r_{ij} = Σ_m c_{ij}^m·unit⊗δ_m − e_i⊗δ_j − e_j⊗δ_i inside
    // A⊗ℚ^d (column (l, m) ↦ l·d + m).
    let mut degree_one = Rref::new(d * d);
    for i in 0..d {
        for j in 0..=i {
            let mut r: SparseVec = BTreeMap::new();
            for (m, c) in a.mul_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    for (l, u) in unit.iter().enumerate() {
                        if !u.is_zero() {
                            let e = r.entry(l * d + m).or_insert_with(Rat::zero);
                            *e += c.clone() * u.clone();
                        }
                    }
                }
            }
            let mut sub = |l: usize, m: usize| {
                let e = r.entry(l * d + m).or_insert_with(Rat::zero);
                *e -= rat_int(1);
            };
            sub(i, j);
            sub(j, i);
            r.retain(|_, c| !c.is_zero());
            // Close up under the A-action: e_t·(x⊗δ_m) = (e_t x)⊗δ_m.
            for t in 0..d {
                let mut acted: SparseVec = BTreeMap::new();
                for (&col, c) in &r {
                    let (l, m) = (col / d, col % d);
                    for (l2, p) in a.mul_basis(t, l).iter().enumerate() {
                        if !p.is_zero() {
                            let e = acted.entry(l2 * d + m).or_insert_with(Rat::zero);
                            *e += p.clone() * c.clone();
                        }
                    }
                }
                acted.retain(|_, c| !c.is_zero());
                degree_one.insert(acted);
            }
            degree_one.insert(r);
        }
    }

    // Wedge the degree-one relations into A⊗Λ^k.
    let subsets = combinations(d, k);
    let nsub = subsets.len();
    let carrier_dim = d * nsub;
    let mut relations = Rref::new(carrier_dim);
    if k >= 1 {
        let lower = combinations(d, k - 1);
        for row in degree_one.rows() {
            for base in &lower {
                let mut wedged: SparseVec = BTreeMap::new();
                for (&col, c) in row {
                    let (l, m) = (col / d, col % d);
                    if base.contains(&m) {
                        continue;
                    }
                    // δ_m ∧ δ_base = ±δ_{base ∪ {m}}, the sign counting the
                    // transpositions moving δ_m into sorted position.
                    let before = base.iter().filter(|&&t| t < m).count();
                    let mut joined = base.clone();
                    joined.insert(before, m);
                    let pos = subsets
                        .binary_search_by(|s| s.as_slice().cmp(joined.as_slice()))
                        .expect("sorted subset");
                    let sign_neg = before % 2 == 1;
                    let e = wedged.entry(l * nsub + pos).or_insert_with(Rat::zero);
                    if sign_neg {
                        *e -= c.clone();
                    } else {
                        *e += c.clone();
                    }
                }
                wedged.retain(|_, c| !c.is_zero());
                relations.insert(wedged);
            }
        }
    }

    let pivots: Vec<usize> = relations.pivot_cols().to_vec();
    let basis_cols: Vec<usize> =
        (0..carrier_dim).filter(|c| pivots.binary_search(c).is_err()).collect();
    let labels: Vec<String> = basis_cols
        .iter()
        .map(|&col| {
            let (i, pos) = (col / nsub, col % nsub);
            if k == 0 {
                return a.basis[i].clone();
            }
            let wedge: Vec<String> =
                subsets[pos].iter().map(|&j| format!("d{}", a.basis[j])).collect();
            format!("{}·{}", a.basis[i], wedge.join("∧"))
        })
        .collect();
    Ok(KaehlerForms {
        degree: k,
        carrier_dim,
        dim: basis_cols.len(),
        labels,
        relations,
        basis_cols,
        subsets,
        adim: d,
    })
}

/// The antisymmetrization ε: Ω^k → A⊗A^{⊗k} on the quotient basis, with
/// image inside the degree-k cycles of the Hochschild complex.
pub fn hkr_antisymmetrize(a: &Algebra, forms: &KaehlerForms) -> SparseMatrix {
    let d = a.dim;
    let k = forms.degree;
    let ix = TensorBasisIndex::new(vec![d; k + 1]);
    let perms = signed_permutations(k);
    let mut out = SparseMatrix::zero(ix.len(), forms.dim);
    for (slot, &col) in forms.basis_cols.iter().enumerate() {
        let (i, pos) = (col / forms.subsets.len(), col % forms.subsets.len());
        let subset = &forms.subsets[pos];
        for (perm, sign) in &perms {
            let mut digits = Vec::with_capacity(k + 1);
            digits.push(i);
            digits.extend(perm.iter().map(|&t| subset[t]));
            out.add_to(ix.flatten(&digits), slot, rat_int(i64::from(*sign)));
        }
    }
    out
}

/// The projection κ: A⊗A^{⊗k} → Ω^k, a₀⊗a₁⊗⋯ ↦ (1/k!)·a₀·da₁∧⋯, as a
/// matrix on quotient coordinates. κ∘ε = Id and κ vanishes on Hochschild
/// boundaries.
pub fn hkr_project(a: &Algebra, forms: &KaehlerForms) -> SparseMatrix {
    let d = a.dim;
    let k = forms.degree;
    let ix = TensorBasisIndex::new(vec![d; k + 1]);
    let mut factorial = rat_int(1);
    for t in 1..=k {
        factorial *= rat_int(t as i64);
    }
    let mut out = SparseMatrix::zero(forms.dim, ix.len());
    for (colidx, digits) in ix.iter().enumerate() {
        let i0 = digits[0];
        let rest = &digits[1..];
        // dx∧dx = 0: repeated slots contribute nothing.
        let mut sorted: Vec<usize> = rest.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        // Sign of the permutation sorting the slots, by inversion count.
        let mut inversions = 0usize;
        for s in 0..rest.len() {
            for t in (s + 1)..rest.len() {
                if rest[s] > rest[t] {
                    inversions += 1;
                }
            }
        }
        let mut coeff = rat_int(if inversions % 2 == 1 { -1 } else { 1 });
        coeff /= factorial.clone();
        let mut carrier: SparseVec = BTreeMap::new();
        carrier.insert(forms.carrier_index(i0, &sorted), coeff);
        for (row, c) in forms.reduce_to_coords(&carrier).into_iter().enumerate() {
            if !c.is_zero() {
                out.set(row, colidx, c);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::self_bimodule;
    use crate::hochschild::hochschild_boundary;
    use crate::zoo::{jet_algebra, matrix_algebra};

    #[test]
    fn combinations_are_lexicographic_and_complete() {
        assert_eq!(combinations(4, 2), vec![
            vec![0, 1],
            vec![0, 2],
            vec![0, 3],
            vec![1, 2],
            vec![1, 3],
            vec![2, 3],
        ]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn permutation_signs_sum_to_zero_beyond_degree_one() {
        for k in 2..=4 {
            let perms = signed_permutations(k);
            assert_eq!(perms.len(), (1..=k).product::<usize>());
            let total: i64 = perms.iter().map(|(_, s)| i64::from(*s)).sum();
            assert_eq!(total, 0);
        }
    }

    #[test]
    fn zero_forms_are_the_algebra() {
        let a = jet_algebra(2, 1);
        let forms = kaehler_forms(&a, 0).unwrap();
        assert_eq!(forms.dim, a.dim);
        assert_eq!(forms.carrier_dim, a.dim);
    }

    #[test]
    fn one_forms_of_the_ground_field_vanish() {
        let forms = kaehler_forms(&matrix_algebra(1), 1).unwrap();
        assert_eq!(forms.dim, 0);
    }

    #[test]
    fn one_forms_of_the_dual_numbers() {
        // Ω¹(ℚ[ε]/ε²) = (A·dε)/(2ε·dε): dimension 1, spanned by dε.
        let a = jet_algebra(1, 1);
        let forms = kaehler_forms(&a, 1).unwrap();
        assert_eq!(forms.dim, 1);
        // ε·dε = 0 in the quotient; dε is the surviving generator.
        let mut v: SparseVec = BTreeMap::new();
        v.insert(forms.carrier_index(1, &[1]), rat_int(1));
        assert!(forms.reduce_to_coords(&v).iter().all(Zero::is_zero));
    }

    #[test]
    fn one_form_dimensions_across_the_jet_algebras() {
        for (vars, order, expected) in [(1usize, 1usize, 1usize), (2, 1, 3), (2, 2, 8)] {
            let a = jet_algebra(vars, order);
            let forms = kaehler_forms(&a, 1).unwrap();
            assert_eq!(forms.dim, expected, "Ω¹ of jet({vars},{order})");
        }
    }

    #[test]
    fn two_form_dimension_of_the_plane_jet() {
        let a = jet_algebra(2, 2);
        let forms = kaehler_forms(&a, 2).unwrap();
        assert_eq!(forms.dim, 3);
    }

    #[test]
    fn matrix_algebras_are_rejected_with_a_witness() {
        match kaehler_forms(&matrix_algebra(2), 1) {
            Err(CoreError::NotCommutative { witness }) => {
                let (i, j) = witness;
                let m2 = matrix_algebra(2);
                assert_ne!(m2.mul_basis(i, j), m2.mul_basis(j, i));
            }
            other => panic!("expected NotCommutative, got {other:?}"),
        }
    }

    #[test]
    fn nonunital_algebras_are_rejected() {
        let a = Algebra::new(vec!["ε".into()], vec![vec![vec![Rat::zero()]]], None);
        assert!(matches!(kaehler_forms(&a, 1), Err(CoreError::Invalid(_))));
    }

    #[test]
    fn antisymmetrization_splits_the_projection() {
        // κ∘ε = Id on Ω^k for the commutative zoo, k ≤ 3.
        for a in [jet_algebra(1, 1), jet_algebra(2, 1), jet_algebra(2, 2)] {
            for k in 0..=3 {
                let forms = kaehler_forms(&a, k).unwrap();
                let eps = hkr_antisymmetrize(&a, &forms);
                let kap = hkr_project(&a, &forms);
                assert_eq!(kap.mul(&eps), SparseMatrix::identity(forms.dim), "k = {k}");
            }
        }
    }

    #[test]
    fn antisymmetrization_lands_in_cycles_and_projection_kills_boundaries() {
        for a in [jet_algebra(1, 2), jet_algebra(2, 1)] {
            let m = self_bimodule(&a);
            for k in 1..=3 {
                let forms = kaehler_forms(&a, k).unwrap();
                let eps = hkr_antisymmetrize(&a, &forms);
                let kap = hkr_project(&a, &forms);
                let b_k = hochschild_boundary(&a, &m, k as i64);
                let b_k1 = hochschild_boundary(&a, &m, k as i64 + 1);
                assert!(b_k.mul(&eps).is_zero(), "b∘ε at k = {k}");
                assert!(kap.mul(&b_k1).is_zero(), "κ∘b at k = {k}");
            }
        }
    }

    #[test]
    fn explicit_projection_on_the_dual_numbers() {
        // κ(1⊗ε) = dε, κ(ε⊗ε) = ε·dε = 0, κ(1⊗1) = d1 = 0.
        let a = jet_algebra(1, 1);
        let forms = kaehler_forms(&a, 1).unwrap();
        let kap = hkr_project(&a, &forms);
        assert_eq!(kap.get(0, 1), rat_int(1)); // column 1 = 1⊗ε
        assert!(kap.col_vec(3).is_empty()); // column 3 = ε⊗ε
        assert!(kap.col_vec(0).is_empty()); // column 0 = 1⊗1
    }
}
