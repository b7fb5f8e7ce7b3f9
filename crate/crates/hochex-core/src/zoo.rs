//! The model zoo: small named algebras and extensions used as test beds.
//!
//! * [`matrix_algebra`] — full matrix algebras M_n(ℚ);
//! * [`jet_algebra`] — truncated polynomial algebras ℚ[x₁,…,x_v]/(deg > k);
//! * [`corner_ideal_extension`] — a two-sided ideal of rectangular matrices
//!   admitting a one-sided unit (positive control for homological
//!   unitality);
//! * [`nilpotent_jet_extension`] — (x^m) inside ℚ[x]/(x^N), a nilpotent
//!   kernel (negative control);
//! * [`direct_sum_extension`] — split extensions I ↣ I×Q ↠ Q;
//! * [`zoo_parse`] — the textual naming scheme the command line exposes.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::{basis_vec, Algebra, AlgebraMorphism, Extension};
use crate::error::CoreError;
use crate::linalg::Rref;
use crate::rat::Rat;
use crate::sparse::{vec_from_dense, SparseMatrix};

/// A parsed zoo entry: either a bare algebra or a full extension.
#[derive(Clone, Debug)]
pub enum ZooEntry {
    /// A single algebra.
    Algebra(Algebra),
    /// An ideal extension.
    Extension(Extension),
}

impl ZooEntry {
    /// The algebra a plain-algebra command should operate on: the entry
    /// itself, or the total algebra of an extension.
    pub fn algebra(&self) -> &Algebra {
        match self {
            ZooEntry::Algebra(a) => a,
            ZooEntry::Extension(e) => &e.total,
        }
    }

    /// The extension, when the entry carries one.
    pub fn extension(&self) -> Option<&Extension> {
        match self {
            ZooEntry::Algebra(_) => None,
            ZooEntry::Extension(e) => Some(e),
        }
    }
}

/// The full matrix algebra M_n(ℚ) on the basis of matrix units,
/// e_ij·e_kl = δ_jk·e_il, with unit Σ e_ii. Basis order is row-major:
/// e11, e12, …, e1n, e21, ….
pub fn matrix_algebra(n: usize) -> Algebra {
    assert!(n >= 1, "matrix algebra needs n ≥ 1");
    let dim = n * n;
    let idx = |i: usize, j: usize| i * n + j;
    let mut table = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
    let mut basis = Vec::with_capacity(dim);
    for i in 0..n {
        for j in 0..n {
            basis.push(format!("e{}{}", i + 1, j + 1));
            for k in 0..n {
                for l in 0..n {
                    if j == k {
                        table[idx(i, j)][idx(k, l)][idx(i, l)] = Rat::one();
                    }
                }
            }
        }
    }
    let mut unit = vec![Rat::zero(); dim];
    for i in 0..n {
        unit[idx(i, i)] = Rat::one();
    }
    Algebra::new(basis, table, Some(unit))
}

/// Exponent tuples of total degree ≤ `order` in `vars` variables, listed
/// degree by degree and, within a degree, with earlier variables carrying
/// higher exponents first (x² before xy before y²).
fn monomials(vars: usize, order: usize) -> Vec<Vec<usize>> {
    fn of_degree(vars: usize, d: usize) -> Vec<Vec<usize>> {
        if vars == 1 {
            return vec![vec![d]];
        }
        let mut out = Vec::new();
        for first in (0..=d).rev() {
            for mut rest in of_degree(vars - 1, d - first) {
                let mut m = Vec::with_capacity(vars);
                m.push(first);
                m.append(&mut rest);
                out.push(m);
            }
        }
        out
    }
    (0..=order).flat_map(|d| of_degree(vars, d)).collect()
}

fn monomial_name(exps: &[usize]) -> String {
    let vars = exps.len();
    let var_name = |v: usize| -> String {
        match (vars <= 3, v) {
            (true, 0) => "x".to_string(),
            (true, 1) => "y".to_string(),
            (true, 2) => "z".to_string(),
            _ => format!("x{}", v + 1),
        }
    };
    let mut out = String::new();
    for (v, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => out.push_str(&var_name(v)),
            _ => out.push_str(&format!("{}^{}", var_name(v), e)),
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// The commutative truncated polynomial algebra
/// ℚ[x₁,…,x_vars]/(monomials of total degree > order), of dimension
/// C(vars+order, vars), with the monomial basis ordered by degree.
pub fn jet_algebra(vars: usize, order: usize) -> Algebra {
    assert!(vars >= 1, "jet algebra needs vars ≥ 1");
    let mons = monomials(vars, order);
    let dim = mons.len();
    let mut index = alloc::collections::BTreeMap::new();
    for (i, m) in mons.iter().enumerate() {
        index.insert(m.clone(), i);
    }
    let mut table = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
    for (i, mi) in mons.iter().enumerate() {
        for (j, mj) in mons.iter().enumerate() {
            let sum: Vec<usize> = mi.iter().zip(mj).map(|(a, b)| a + b).collect();
            if sum.iter().sum::<usize>() <= order {
                let k = index[&sum];
                table[i][j][k] = Rat::one();
            }
        }
    }
    let basis = mons.iter().map(|m| monomial_name(m)).collect();
    Algebra::new(basis, table, Some(basis_vec(dim, 0)))
}

/// The corner extension: E is the algebra of (n+1)×(n+1) matrices whose
/// last row is supported only on the corner entry, I ⊂ E the two-sided
/// ideal of matrices with last row zero, and Q = E/I ≅ ℚ. The element
/// diag(1,…,1,0) ∈ I is a *left* unit for I, so the ideal is a positive
/// control for homological unitality without being unital.
pub fn corner_ideal_extension(n: usize) -> Extension {
    assert!(n >= 1, "corner extension needs n ≥ 1");
    let cols = n + 1;
    let idim = n * cols;
    let edim = idim + 1;
    let corner = idim; // index of e_{n+1,n+1} in E
    let idx = |i: usize, j: usize| i * cols + j; // 0-based, i < n, j < n+1

    let pair_name = |i: usize, j: usize| format!("e{}{}", i + 1, j + 1);
    let mut ebasis: Vec<String> = Vec::with_capacity(edim);
    for i in 0..n {
        for j in 0..cols {
            ebasis.push(pair_name(i, j));
        }
    }
    ebasis.push(pair_name(n, n));

    // Matrix-unit products inside E: indices < idim are e_ij with i < n;
    // index `corner` is e_{n,n} (0-based corner).
    let row_col = |t: usize| -> (usize, usize) {
        if t == corner {
            (n, n)
        } else {
            (t / cols, t % cols)
        }
    };
    let in_e = |i: usize, j: usize| -> Option<usize> {
        if i < n {
            Some(idx(i, j))
        } else if i == n && j == n {
            Some(corner)
        } else {
            None
        }
    };
    let mut etable = vec![vec![vec![Rat::zero(); edim]; edim]; edim];
    for s in 0..edim {
        let (i, j) = row_col(s);
        for t in 0..edim {
            let (k, l) = row_col(t);
            if j == k {
                let target = in_e(i, l).expect("matrix-unit products stay in E");
                etable[s][t][target] = Rat::one();
            }
        }
    }
    let mut eunit = vec![Rat::zero(); edim];
    for i in 0..n {
        eunit[idx(i, i)] = Rat::one();
    }
    eunit[corner] = Rat::one();
    let total = Algebra::new(ebasis.clone(), etable.clone(), Some(eunit));

    let mut itable = vec![vec![vec![Rat::zero(); idim]; idim]; idim];
    for (s, row) in itable.iter_mut().enumerate() {
        for (t, cell) in row.iter_mut().enumerate() {
            for (u, c) in cell.iter_mut().enumerate() {
                *c = etable[s][t][u].clone();
            }
        }
    }
    let ideal = Algebra::new(ebasis[..idim].to_vec(), itable, None);

    let quotient = Algebra::new(
        vec!["1".to_string()],
        vec![vec![vec![Rat::one()]]],
        Some(vec![Rat::one()]),
    );

    let mut incl = SparseMatrix::zero(edim, idim);
    for t in 0..idim {
        incl.set(t, t, Rat::one());
    }
    let mut proj = SparseMatrix::zero(1, edim);
    proj.set(0, corner, Rat::one());
    let mut section = SparseMatrix::zero(edim, 1);
    section.set(corner, 0, Rat::one());
    Extension {
        ideal,
        total,
        quotient,
        incl: AlgebraMorphism::new(incl),
        proj: AlgebraMorphism::new(proj),
        section,
    }
}

/// The nilpotent-kernel extension (x^m) ↣ ℚ[x]/(x^N) ↠ ℚ[x]/(x^m) with the
/// monomial-representative section. Requires 1 ≤ m < N. The ideal is
/// nilpotent of index ⌈N/m⌉ and is the zoo's negative control.
pub fn nilpotent_jet_extension(n_trunc: usize, m: usize) -> Extension {
    assert!(1 <= m && m < n_trunc, "need 1 ≤ m < N");
    let total = jet_algebra(1, n_trunc - 1);
    let quotient = jet_algebra(1, m - 1);
    let idim = n_trunc - m;
    // Ideal basis f_a = x^{m+a}; f_a·f_b = x^{2m+a+b} when that survives.
    let mut itable = vec![vec![vec![Rat::zero(); idim]; idim]; idim];
    for a in 0..idim {
        for b in 0..idim {
            let exp = 2 * m + a + b;
            if exp < n_trunc {
                itable[a][b][exp - m] = Rat::one();
            }
        }
    }
    let ibasis: Vec<String> = (0..idim).map(|a| total.basis[m + a].clone()).collect();
    let ideal = Algebra::new(ibasis, itable, None);

    let mut incl = SparseMatrix::zero(n_trunc, idim);
    for a in 0..idim {
        incl.set(m + a, a, Rat::one());
    }
    let mut proj = SparseMatrix::zero(m, n_trunc);
    for j in 0..m {
        proj.set(j, j, Rat::one());
    }
    let mut section = SparseMatrix::zero(n_trunc, m);
    for j in 0..m {
        section.set(j, j, Rat::one());
    }
    Extension {
        ideal,
        total,
        quotient,
        incl: AlgebraMorphism::new(incl),
        proj: AlgebraMorphism::new(proj),
        section,
    }
}

/// The componentwise direct sum A ⊕ B with no cross terms. Basis names are
/// prefixed `l_` and `r_`; the unit exists exactly when both summands are
/// unital.
pub fn direct_sum(a: &Algebra, b: &Algebra) -> Algebra {
    let dim = a.dim + b.dim;
    let mut table = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
    for i in 0..a.dim {
        for j in 0..a.dim {
            for (k, c) in a.table[i][j].iter().enumerate() {
                table[i][j][k] = c.clone();
            }
        }
    }
    for i in 0..b.dim {
        for j in 0..b.dim {
            for (k, c) in b.table[i][j].iter().enumerate() {
                table[a.dim + i][a.dim + j][a.dim + k] = c.clone();
            }
        }
    }
    let mut basis = Vec::with_capacity(dim);
    basis.extend(a.basis.iter().map(|n| format!("l_{n}")));
    basis.extend(b.basis.iter().map(|n| format!("r_{n}")));
    let unit = match (&a.unit, &b.unit) {
        (Some(u), Some(v)) => {
            let mut w = u.clone();
            w.extend(v.iter().cloned());
            Some(w)
        }
        _ => None,
    };
    Algebra::new(basis, table, unit)
}

/// The split extension I ↣ I×Q ↠ Q. Its section q ↦ (0, q) is itself an
/// algebra morphism, making this the model of a split conflation.
pub fn direct_sum_extension(i: &Algebra, q: &Algebra) -> Extension {
    let total = direct_sum(i, q);
    let mut incl = SparseMatrix::zero(total.dim, i.dim);
    for t in 0..i.dim {
        incl.set(t, t, Rat::one());
    }
    let mut proj = SparseMatrix::zero(q.dim, total.dim);
    for t in 0..q.dim {
        proj.set(t, i.dim + t, Rat::one());
    }
    let mut section = SparseMatrix::zero(total.dim, q.dim);
    for t in 0..q.dim {
        section.set(i.dim + t, t, Rat::one());
    }
    Extension {
        ideal: i.clone(),
        total,
        quotient: q.clone(),
        incl: AlgebraMorphism::new(incl),
        proj: AlgebraMorphism::new(proj),
        section,
    }
}

/// The nilpotency index of an algebra: the smallest t with A^t = 0, or
/// `None` when the chain of power subspaces stabilizes nonzero. Computed by
/// iterated multiplication ranks: A^{t+1} = span{v·e_j} over a basis of A^t.
pub fn nilpotency_index(a: &Algebra) -> Option<usize> {
    let mut cur: Vec<Vec<Rat>> = (0..a.dim).map(|i| basis_vec(a.dim, i)).collect();
    let mut t = 1usize;
    loop {
        if cur.is_empty() {
            return Some(t);
        }
        let mut rref = Rref::new(a.dim);
        let mut next = Vec::new();
        for v in &cur {
            for j in 0..a.dim {
                let p = a.mul(v, &basis_vec(a.dim, j));
                if rref.insert(vec_from_dense(&p)) {
                    next.push(p);
                }
            }
        }
        // Powers are nested, so equal dimension means the chain is constant.
        if next.len() == cur.len() {
            return None;
        }
        cur = next;
        t += 1;
    }
}

fn parse_count(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn unknown(name: &str) -> CoreError {
    CoreError::UnknownModel(name.to_string())
}

/// Parses a zoo name. The grammar is
/// `matrix:n | jet:v,k | corner:n | nilpotent-jet:N,m | dual | sum:<a>,<b>`
/// where `<a>` and `<b>` are themselves zoo names denoting algebras, and
/// `dual` is the dual-numbers algebra ℚ[x]/(x²). `corner`, `nilpotent-jet`
/// and `sum` produce extensions; the rest produce algebras.
pub fn zoo_parse(name: &str) -> Result<ZooEntry, CoreError> {
    if name == "dual" {
        return Ok(ZooEntry::Algebra(jet_algebra(1, 1)));
    }
    if let Some(rest) = name.strip_prefix("matrix:") {
        let n = parse_count(rest).filter(|&n| n >= 1).ok_or_else(|| unknown(name))?;
        return Ok(ZooEntry::Algebra(matrix_algebra(n)));
    }
    if let Some(rest) = name.strip_prefix("jet:") {
        let (v, k) = rest.split_once(',').ok_or_else(|| unknown(name))?;
        let v = parse_count(v).filter(|&v| v >= 1).ok_or_else(|| unknown(name))?;
        let k = parse_count(k).ok_or_else(|| unknown(name))?;
        return Ok(ZooEntry::Algebra(jet_algebra(v, k)));
    }
    if let Some(rest) = name.strip_prefix("corner:") {
        let n = parse_count(rest).filter(|&n| n >= 1).ok_or_else(|| unknown(name))?;
        return Ok(ZooEntry::Extension(corner_ideal_extension(n)));
    }
    if let Some(rest) = name.strip_prefix("nilpotent-jet:") {
        let (nn, m) = rest.split_once(',').ok_or_else(|| unknown(name))?;
        let nn = parse_count(nn).ok_or_else(|| unknown(name))?;
        let m = parse_count(m).ok_or_else(|| unknown(name))?;
        if !(1 <= m && m < nn) {
            return Err(unknown(name));
        }
        return Ok(ZooEntry::Extension(nilpotent_jet_extension(nn, m)));
    }
    if let Some(rest) = name.strip_prefix("sum:") {
        // Try each comma as the split point between the two summand names.
        for (pos, _) in rest.match_indices(',') {
            let (a, b) = (&rest[..pos], &rest[pos + 1..]);
            if let (Ok(ZooEntry::Algebra(x)), Ok(ZooEntry::Algebra(y))) =
                (zoo_parse(a), zoo_parse(b))
            {
                return Ok(ZooEntry::Extension(direct_sum_extension(&x, &y)));
            }
        }
        return Err(unknown(name));
    }
    Err(unknown(name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank;
    use crate::sparse::SparseVec;

    #[test]
    fn matrix_algebra_basics() {
        let q = matrix_algebra(1);
        assert_eq!(q.dim, 1);
        q.validate().unwrap();

        let m2 = matrix_algebra(2);
        assert_eq!(m2.dim, 4);
        m2.validate().unwrap();
        let unit = m2.unit_vec().unwrap();
        assert_eq!(unit, &[Rat::one(), Rat::zero(), Rat::zero(), Rat::one()]);
    }

    #[test]
    fn matrix_algebra_commutator_span_has_dimension_three() {
        let m2 = matrix_algebra(2);
        let mut cols: Vec<SparseVec> = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                let ei = basis_vec(4, i);
                let ej = basis_vec(4, j);
                let mut c = m2.mul(&ei, &ej);
                let d = m2.mul(&ej, &ei);
                for (x, y) in c.iter_mut().zip(&d) {
                    *x -= y;
                }
                cols.push(vec_from_dense(&c));
            }
        }
        let mut m = SparseMatrix::zero(cols.len(), 4);
        for (r, c) in cols.iter().enumerate() {
            for (&j, v) in c {
                m.set(r, j, v.clone());
            }
        }
        assert_eq!(rank(&m), 3);
    }

    #[test]
    fn jet_algebra_dimensions_and_names() {
        assert_eq!(jet_algebra(1, 0).dim, 1);
        assert_eq!(jet_algebra(1, 1).dim, 2);
        assert_eq!(jet_algebra(2, 2).dim, 6);
        assert_eq!(jet_algebra(3, 1).dim, 4);
        let j = jet_algebra(2, 2);
        j.validate().unwrap();
        assert_eq!(j.basis, vec!["1", "x", "y", "x^2", "xy", "y^2"]);
        assert_eq!(j.commutator_witness(), None);
    }

    #[test]
    fn jet_algebra_truncates_products() {
        let j = jet_algebra(1, 2); // 1, x, x²
        assert_eq!(j.mul_basis(1, 1), &basis_vec(3, 2)[..]); // x·x = x²
        assert_eq!(j.mul_basis(1, 2), &[Rat::zero(), Rat::zero(), Rat::zero()]); // x·x² = 0
    }

    #[test]
    fn corner_extension_validates_with_left_unit() {
        let e = corner_ideal_extension(1);
        assert_eq!((e.ideal.dim, e.total.dim, e.quotient.dim), (2, 3, 1));
        e.validate().unwrap();
        // diag(1, 0) = e11 is a left unit of I but not a right one.
        let i = &e.ideal;
        for j in 0..i.dim {
            assert_eq!(i.mul(&basis_vec(2, 0), &basis_vec(2, j)), basis_vec(2, j));
        }
        assert_ne!(i.mul(&basis_vec(2, 1), &basis_vec(2, 0)), basis_vec(2, 1));

        let e2 = corner_ideal_extension(2);
        assert_eq!((e2.ideal.dim, e2.total.dim, e2.quotient.dim), (6, 7, 1));
        e2.validate().unwrap();
    }

    #[test]
    fn nilpotent_jet_extension_validates() {
        let e = nilpotent_jet_extension(2, 1);
        assert_eq!((e.ideal.dim, e.total.dim, e.quotient.dim), (1, 2, 1));
        e.validate().unwrap();
        // Zero multiplication on I = (x)/(x²).
        assert_eq!(e.ideal.mul_basis(0, 0), &[Rat::zero()]);

        let e4 = nilpotent_jet_extension(4, 2);
        e4.validate().unwrap();
    }

    #[test]
    fn nilpotency_indices_match_the_ceiling_formula() {
        assert_eq!(nilpotency_index(&nilpotent_jet_extension(2, 1).ideal), Some(2));
        assert_eq!(nilpotency_index(&nilpotent_jet_extension(3, 1).ideal), Some(3));
        assert_eq!(nilpotency_index(&nilpotent_jet_extension(4, 2).ideal), Some(2));
        assert_eq!(nilpotency_index(&nilpotent_jet_extension(5, 2).ideal), Some(3));
        // Unital algebras are never nilpotent.
        assert_eq!(nilpotency_index(&matrix_algebra(2)), None);
        // The corner ideal is idempotent (I² = I), not nilpotent.
        assert_eq!(nilpotency_index(&corner_ideal_extension(1).ideal), None);
    }

    #[test]
    fn nilpotent_ideal_powers_step_down() {
        // I = (x)/(x³): I² = (x²) ≠ 0, I³ = 0.
        let i = nilpotent_jet_extension(3, 1).ideal;
        let x = basis_vec(2, 0);
        let x2 = i.mul(&x, &x);
        assert!(x2.iter().any(|c| !c.is_zero()));
        assert!(i.mul(&x2, &x).iter().all(|c| c.is_zero()));
    }

    #[test]
    fn direct_sum_extension_is_split() {
        let e = direct_sum_extension(&matrix_algebra(1), &matrix_algebra(1));
        assert_eq!(e.total.dim, 2);
        e.validate().unwrap();
        // The section is multiplicative, not merely linear.
        AlgebraMorphism::new(e.section.clone()).validate(&e.quotient, &e.total).unwrap();

        let big = direct_sum_extension(&matrix_algebra(2), &matrix_algebra(1));
        assert_eq!(big.total.dim, 5);
        big.validate().unwrap();
        AlgebraMorphism::new(big.section.clone()).validate(&big.quotient, &big.total).unwrap();
    }

    #[test]
    fn unitalization_of_the_ground_field_splits_into_idempotents() {
        let plus = crate::algebra::unitalization(&matrix_algebra(1));
        plus.validate().unwrap();
        // e = the old unit, f = 1⁺ − e: orthogonal idempotents summing to 1⁺.
        let e = basis_vec(2, 0);
        let mut f = basis_vec(2, 1);
        f[0] = -Rat::one();
        assert_eq!(plus.mul(&e, &e), e);
        assert_eq!(plus.mul(&f, &f), f);
        assert!(plus.mul(&e, &f).iter().all(|c| c.is_zero()));
        assert!(plus.mul(&f, &e).iter().all(|c| c.is_zero()));
    }

    #[test]
    fn zoo_parse_accepts_the_grammar() {
        assert_eq!(zoo_parse("matrix:2").unwrap().algebra().dim, 4);
        assert_eq!(zoo_parse("jet:2,2").unwrap().algebra().dim, 6);
        assert_eq!(zoo_parse("dual").unwrap().algebra().dim, 2);
        let c = zoo_parse("corner:1").unwrap();
        let ext = c.extension().unwrap();
        assert_eq!((ext.ideal.dim, ext.total.dim, ext.quotient.dim), (2, 3, 1));
        let nj = zoo_parse("nilpotent-jet:2,1").unwrap();
        assert_eq!(nj.extension().unwrap().ideal.dim, 1);
        let s = zoo_parse("sum:matrix:2,matrix:1").unwrap();
        assert_eq!(s.extension().unwrap().total.dim, 5);
        // Comma splitting backtracks across nested parameter lists.
        let s2 = zoo_parse("sum:jet:2,1,matrix:1").unwrap();
        assert_eq!(s2.extension().unwrap().total.dim, 4);
    }

    #[test]
    fn zoo_parse_rejects_garbage() {
        for bad in [
            "foo",
            "matrix:",
            "matrix:0",
            "matrix:x",
            "jet:1",
            "jet:0,1",
            "corner:0",
            "nilpotent-jet:1,1",
            "nilpotent-jet:2",
            "sum:dual",
            "sum:corner:1,matrix:1",
            "",
        ] {
            match zoo_parse(bad) {
                Err(CoreError::UnknownModel(n)) => assert_eq!(n, bad),
                other => panic!("{bad:?} should be rejected, got {other:?}"),
            }
        }
    }

    #[test]
    fn every_zoo_constructor_output_validates() {
        for name in [
            "matrix:1",
            "matrix:2",
            "dual",
            "jet:1,2",
            "jet:2,1",
            "jet:2,2",
            "corner:1",
            "corner:2",
            "nilpotent-jet:2,1",
            "nilpotent-jet:3,1",
            "sum:matrix:2,matrix:1",
        ] {
            match zoo_parse(name).unwrap() {
                ZooEntry::Algebra(a) => a.validate().unwrap(),
                ZooEntry::Extension(e) => e.validate().unwrap(),
            }
        }
    }
}
