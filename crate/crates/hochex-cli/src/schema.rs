//! JSON file formats for algebras, bimodules, and ideal extensions.
//!
//! All scalars are rational strings — `"p"` or `"p/q"` in arbitrary
//! precision — parsed at deserialization time, so a malformed literal is
//! reported by serde_json with the line and column where it sits. Emission
//! is canonical: sparse tables are sorted with zero entries dropped and
//! every rational is reduced, so `emit ∘ parse ∘ emit = emit` byte-exactly
//! and an emitted file is a fixed point of the round trip.
//!
//! Shapes:
//!
//! * algebra: `{"dim", "basis", "table": [[i, j, k, "c"], …], "unit"}` —
//!   `c` is the e_k-coefficient of e_i·e_j; `unit` is a dense coordinate
//!   vector or `null`;
//! * bimodule: `{"dim", "left": [[i, m, m′, "c"], …], "right":
//!   [[m, i, m′, "c"], …]}` over an algebra supplied separately;
//! * extension: `{"ideal", "total", "quotient", "incl", "proj",
//!   "section"}` — the three algebras inline or as file paths resolved
//!   relative to the extension file, and three dense row-major matrices
//!   (total×ideal, quotient×total, total×quotient).
//!
//! Parsed objects are fully validated (associativity, unit laws, bimodule
//! laws, the two-sided ideal property, `proj ∘ section = Id`) before they
//! reach any computation.

use std::path::Path;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use hochex_core::algebra::{Bimodule, Extension};
use hochex_core::rat::{format_rat, parse_rat};
use hochex_core::{Algebra, AlgebraMorphism, Rat, SparseMatrix};

use crate::CliError;

/// A rational scalar serialized as the string `"p"` or `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatStr(pub Rat);

impl Serialize for RatStr {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(&self.0))
    }
}

impl<'de> Deserialize<'de> for RatStr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rat(&raw).map(RatStr).map_err(D::Error::custom)
    }
}

/// On-disk algebra: structure constants as a sparse triple list.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraFile {
    /// Vector-space dimension.
    pub dim: usize,
    /// Basis element names, one per coordinate.
    pub basis: Vec<String>,
    /// Sparse structure constants: `[i, j, k, c]` sets ⟨e_i·e_j, e_k⟩ = c.
    pub table: Vec<(usize, usize, usize, RatStr)>,
    /// Dense unit coordinates, or `null` for a nonunital algebra.
    pub unit: Option<Vec<RatStr>>,
}

/// On-disk bimodule over an algebra given separately.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BimoduleFile {
    /// Module dimension.
    pub dim: usize,
    /// Sparse left action: `[i, m, m′, c]` sets ⟨e_i·f_m, f_{m′}⟩ = c.
    pub left: Vec<(usize, usize, usize, RatStr)>,
    /// Sparse right action: `[m, i, m′, c]` sets ⟨f_m·e_i, f_{m′}⟩ = c.
    pub right: Vec<(usize, usize, usize, RatStr)>,
}

/// An algebra slot in an extension file: inline, or a path to an algebra
/// file resolved relative to the extension file's directory.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum AlgebraRef {
    /// Path to a separate algebra file.
    Path(String),
    /// The algebra written in place.
    Inline(AlgebraFile),
}

/// On-disk ideal extension 0 → I → E → Q → 0.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExtensionFile {
    /// The ideal I.
    pub ideal: AlgebraRef,
    /// The total algebra E.
    pub total: AlgebraRef,
    /// The quotient Q.
    pub quotient: AlgebraRef,
    /// Matrix of I → E, row-major, total.dim × ideal.dim.
    pub incl: Vec<Vec<RatStr>>,
    /// Matrix of E → Q, row-major, quotient.dim × total.dim.
    pub proj: Vec<Vec<RatStr>>,
    /// Matrix of a linear section Q → E, row-major, total.dim × quotient.dim.
    pub section: Vec<Vec<RatStr>>,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Reads and parses one JSON file, labeling errors with the path (and, for
/// parse errors, serde_json's line and column).
fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Densifies a sparse triple list into `outer × mid × inner` with bounds
/// and duplicate checks (`what` names the table in errors).
fn dense_table(
    entries: &[(usize, usize, usize, RatStr)],
    shape: (usize, usize, usize),
    what: &str,
) -> Result<Vec<Vec<Vec<Rat>>>, CliError> {
    let (n0, n1, n2) = shape;
    let mut out = vec![vec![vec![Rat::from_integer(0.into()); n2]; n1]; n0];
    let mut seen = std::collections::BTreeSet::new();
    for &(i, j, k, ref c) in entries {
        if i >= n0 || j >= n1 || k >= n2 {
            return Err(usage(format!(
                "{what} entry [{i}, {j}, {k}] is out of range for shape {n0}×{n1}×{n2}"
            )));
        }
        if !seen.insert((i, j, k)) {
            return Err(usage(format!("{what} entry [{i}, {j}, {k}] appears twice")));
        }
        out[i][j][k] = c.0.clone();
    }
    Ok(out)
}

/// Densifies a row-major rational-string matrix with an exact shape check.
fn dense_matrix(
    rows: &[Vec<RatStr>],
    nrows: usize,
    ncols: usize,
    what: &str,
) -> Result<SparseMatrix, CliError> {
    if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
        return Err(usage(format!("{what} must be a {nrows}×{ncols} row-major matrix")));
    }
    let dense: Vec<Vec<Rat>> =
        rows.iter().map(|r| r.iter().map(|c| c.0.clone()).collect()).collect();
    Ok(SparseMatrix::from_dense(&dense))
}

/// Builds and fully validates the algebra described by a parsed file.
pub fn algebra_from_file(f: &AlgebraFile) -> Result<Algebra, CliError> {
    if f.dim == 0 {
        return Err(usage("algebra dim must be at least 1"));
    }
    if f.basis.len() != f.dim {
        return Err(usage(format!(
            "basis has {} names but dim is {}",
            f.basis.len(),
            f.dim
        )));
    }
    let table = dense_table(&f.table, (f.dim, f.dim, f.dim), "table")?;
    let unit = match &f.unit {
        None => None,
        Some(u) => {
            if u.len() != f.dim {
                return Err(usage(format!(
                    "unit has {} coordinates but dim is {}",
                    u.len(),
                    f.dim
                )));
            }
            Some(u.iter().map(|c| c.0.clone()).collect())
        }
    };
    let a = Algebra::new(f.basis.clone(), table, unit);
    a.validate()?;
    Ok(a)
}

/// Canonical on-disk form of an algebra: table triples sorted, zeros
/// dropped, rationals reduced.
pub fn algebra_to_file(a: &Algebra) -> AlgebraFile {
    let mut table = Vec::new();
    for i in 0..a.dim {
        for j in 0..a.dim {
            for (k, c) in a.table[i][j].iter().enumerate() {
                if *c != Rat::from_integer(0.into()) {
                    table.push((i, j, k, RatStr(c.clone())));
                }
            }
        }
    }
    AlgebraFile {
        dim: a.dim,
        basis: a.basis.clone(),
        table,
        unit: a.unit.as_ref().map(|u| u.iter().map(|c| RatStr(c.clone())).collect()),
    }
}

/// Loads an algebra from a JSON file.
pub fn load_algebra(path: &Path) -> Result<Algebra, CliError> {
    algebra_from_file(&read_json(path)?)
}

/// Builds and validates the bimodule described by a parsed file, over an
/// algebra of the given dimension.
pub fn bimodule_from_file(f: &BimoduleFile, a: &Algebra) -> Result<Bimodule, CliError> {
    if f.dim == 0 {
        return Err(usage("bimodule dim must be at least 1"));
    }
    let left = dense_table(&f.left, (a.dim, f.dim, f.dim), "left action")?;
    let right = dense_table(&f.right, (f.dim, a.dim, f.dim), "right action")?;
    let m = Bimodule::new(f.dim, a.dim, left, right);
    m.validate(a)?;
    Ok(m)
}

/// Loads a bimodule over `a` from a JSON file.
pub fn load_bimodule(path: &Path, a: &Algebra) -> Result<Bimodule, CliError> {
    bimodule_from_file(&read_json(path)?, a)
}

/// Resolves an algebra slot of an extension file: inline algebras are
/// built in place, paths are loaded relative to `base`.
fn resolve_algebra(r: &AlgebraRef, base: &Path) -> Result<Algebra, CliError> {
    match r {
        AlgebraRef::Inline(f) => algebra_from_file(f),
        AlgebraRef::Path(p) => load_algebra(&base.join(p)),
    }
}

/// Builds and fully validates the extension described by a parsed file;
/// `base` anchors relative algebra paths.
pub fn extension_from_file(f: &ExtensionFile, base: &Path) -> Result<Extension, CliError> {
    let ideal = resolve_algebra(&f.ideal, base)?;
    let total = resolve_algebra(&f.total, base)?;
    let quotient = resolve_algebra(&f.quotient, base)?;
    let incl = dense_matrix(&f.incl, total.dim, ideal.dim, "incl")?;
    let proj = dense_matrix(&f.proj, quotient.dim, total.dim, "proj")?;
    let section = dense_matrix(&f.section, total.dim, quotient.dim, "section")?;
    let ext = Extension {
        ideal,
        total,
        quotient,
        incl: AlgebraMorphism::new(incl),
        proj: AlgebraMorphism::new(proj),
        section,
    };
    ext.validate()?;
    Ok(ext)
}

/// Canonical on-disk form of an extension, with the three algebras inline
/// so the file is self-contained.
pub fn extension_to_file(e: &Extension) -> ExtensionFile {
    let emit = |m: &SparseMatrix| -> Vec<Vec<RatStr>> {
        m.to_dense().into_iter().map(|r| r.into_iter().map(RatStr).collect()).collect()
    };
    ExtensionFile {
        ideal: AlgebraRef::Inline(algebra_to_file(&e.ideal)),
        total: AlgebraRef::Inline(algebra_to_file(&e.total)),
        quotient: AlgebraRef::Inline(algebra_to_file(&e.quotient)),
        incl: emit(&e.incl.matrix),
        proj: emit(&e.proj.matrix),
        section: emit(&e.section),
    }
}

/// Loads an extension from a JSON file.
pub fn load_extension(path: &Path) -> Result<Extension, CliError> {
    let f: ExtensionFile = read_json(path)?;
    let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
    extension_from_file(&f, &base)
}

/// Canonical pretty JSON for any of the file types.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("file types always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use hochex_core::zoo::{corner_ideal_extension, jet_algebra, matrix_algebra};

    #[test]
    fn algebra_round_trips_through_its_canonical_form() {
        for a in [matrix_algebra(2), jet_algebra(2, 1)] {
            let file = algebra_to_file(&a);
            let text = to_canonical_json(&file);
            let reparsed: AlgebraFile = serde_json::from_str(&text).unwrap();
            assert_eq!(reparsed, file);
            assert_eq!(to_canonical_json(&reparsed), text);
            let b = algebra_from_file(&reparsed).unwrap();
            assert_eq!(b.table, a.table);
            assert_eq!(b.unit, a.unit);
        }
    }

    #[test]
    fn extension_round_trips_inline() {
        let e = corner_ideal_extension(1);
        let file = extension_to_file(&e);
        let text = to_canonical_json(&file);
        let reparsed: ExtensionFile = serde_json::from_str(&text).unwrap();
        assert_eq!(to_canonical_json(&reparsed), text);
        let e2 = extension_from_file(&reparsed, Path::new(".")).unwrap();
        assert_eq!(e2.incl.matrix, e.incl.matrix);
        assert_eq!(e2.total.table, e.total.table);
    }

    #[test]
    fn malformed_rationals_are_rejected_in_place() {
        let text = r#"{"dim": 1, "basis": ["e"], "table": [[0, 0, 0, "1/0"]], "unit": null}"#;
        let err = serde_json::from_str::<AlgebraFile>(text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("malformed rational"), "{msg}");
        assert!(msg.contains("line 1"), "{msg}");
    }

    #[test]
    fn duplicate_table_entries_are_rejected() {
        let f = AlgebraFile {
            dim: 1,
            basis: vec!["e".into()],
            table: vec![
                (0, 0, 0, RatStr(Rat::from_integer(1.into()))),
                (0, 0, 0, RatStr(Rat::from_integer(2.into()))),
            ],
            unit: None,
        };
        assert!(matches!(algebra_from_file(&f), Err(CliError::Usage(m)) if m.contains("twice")));
    }

    #[test]
    fn non_associative_tables_fail_validation() {
        // e·e = f, e·f = e makes (e·e)·e ≠ e·(e·e).
        let one = RatStr(Rat::from_integer(1.into()));
        let f = AlgebraFile {
            dim: 2,
            basis: vec!["e".into(), "f".into()],
            table: vec![(0, 0, 1, one.clone()), (0, 1, 0, one)],
            unit: None,
        };
        assert!(matches!(algebra_from_file(&f), Err(CliError::Usage(_))));
    }
}
