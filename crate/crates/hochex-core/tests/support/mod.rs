//! Independent dense-elimination oracles.
//!
//! Every dimension the library reports can be recomputed here through a
//! second, deliberately simpler pipeline: textbook Gaussian elimination on
//! dense rational matrices, sharing nothing with the library's sparse
//! echelon forms, batched rank engines, or modular fast paths. The
//! acceptance checklist uses these functions to reproduce each frozen
//! example value.

use hochex_core::rat::Rat;
use hochex_core::{Algebra, ChainComplex, SparseMatrix};
use num_traits::Zero;

/// Rank by dense Gaussian elimination with exact rational arithmetic.
pub fn dense_rank(mut rows: Vec<Vec<Rat>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut pivot_row = 0;
    for col in 0..ncols {
        if pivot_row == rows.len() {
            break;
        }
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let pivot = rows[pivot_row][col].clone();
        for r in (pivot_row + 1)..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &pivot;
            for c in col..ncols {
                let delta = &rows[pivot_row][c] * &factor;
                rows[r][c] = &rows[r][c] - &delta;
            }
        }
        rank += 1;
        pivot_row += 1;
    }
    rank
}

/// Dense rank of a sparse matrix.
pub fn rank_of(m: &SparseMatrix) -> usize {
    dense_rank(m.to_dense())
}

/// Betti numbers of a chain complex over `[lo, hi]`, with every rank
/// recomputed by dense elimination: dim C_n − rank d_n − rank d_{n+1}.
pub fn betti_of(c: &ChainComplex, lo: i64, hi: i64) -> Vec<usize> {
    (lo..=hi)
        .map(|n| {
            let rank_out = c.d(n).map_or(0, rank_of);
            let rank_in = c.d(n + 1).map_or(0, rank_of);
            c.dim(n) - rank_out - rank_in
        })
        .collect()
}

/// The dimension of the degree-one module of differentials, rebuilt from
/// the multiplication table alone.
///
/// The carrier is A⊗ℚ^d with coordinate (l, m) ↦ l·d + m standing for
/// x_l·dx_m. For every basis pair the Leibniz rule gives the relation
///
///   Σ_m c_{ij}^m · (1 ⊗ δ_m) − e_i ⊗ δ_j − e_j ⊗ δ_i,
///
/// and the relation space is the span of these rows together with their
/// left translates by every basis element (one application suffices:
/// products of basis elements re-expand over the basis). The dimension is
/// the codimension of that span, by dense elimination.
pub fn one_form_dimension_from_scratch(a: &Algebra) -> usize {
    let d = a.dim;
    let unit = a.unit.as_ref().expect("differential oracle needs a unital algebra");
    let coord = |l: usize, m: usize| l * d + m;

    let mut base_rows: Vec<Vec<Rat>> = Vec::new();
    for i in 0..d {
        for j in 0..=i {
            let mut row = vec![Rat::zero(); d * d];
            for (m, c) in a.table[i][j].iter().enumerate() {
                if !c.is_zero() {
                    for (l, u) in unit.iter().enumerate() {
                        row[coord(l, m)] = &row[coord(l, m)] + &(c * u);
                    }
                }
            }
            row[coord(i, j)] = &row[coord(i, j)] - &Rat::from_integer(1.into());
            row[coord(j, i)] = &row[coord(j, i)] - &Rat::from_integer(1.into());
            base_rows.push(row);
        }
    }

    let mut rows = base_rows.clone();
    for t in 0..d {
        for row in &base_rows {
            // e_t·(x_l ⊗ δ_m) = Σ_p c_{tl}^p · (x_p ⊗ δ_m).
            let mut translated = vec![Rat::zero(); d * d];
            for l in 0..d {
                for m in 0..d {
                    let v = &row[coord(l, m)];
                    if v.is_zero() {
                        continue;
                    }
                    for (p, c) in a.table[t][l].iter().enumerate() {
                        if !c.is_zero() {
                            translated[coord(p, m)] = &translated[coord(p, m)] + &(c * v);
                        }
                    }
                }
            }
            rows.push(translated);
        }
    }

    d * d - dense_rank(rows)
}

/// The one-dimensional line with zero multiplication — the smallest algebra
/// whose bar homology does not vanish.
pub fn zero_multiplication_line() -> Algebra {
    Algebra::new(vec!["e".to_string()], vec![vec![vec![Rat::zero()]]], None)
}
