//! Exact-arithmetic Hochschild, cyclic, and periodic cyclic homology for
//! finite-dimensional associative algebras over ℚ.
//!
//! Everything is computed with arbitrary-precision rational arithmetic; there
//! are no tolerances anywhere. The crate is organized bottom-up:
//!
//! * [`rat`], [`sparse`], [`linalg`] — exact sparse linear algebra (rank,
//!   kernel, solve, reduced row echelon form) plus a GF(p) fast path for
//!   ranks with an exact fallback;
//! * [`algebra`] — structure-constant algebras, bimodules, morphisms, and
//!   ideal extensions, with full invariant validation;
//! * [`zoo`] — the model algebras and extensions used throughout the tests;
//! * [`complex`] — chain complexes, homology, mapping cones,
//!   quasi-isomorphism verdicts, and long-exact-sequence checks with snake
//!   connecting maps;
//! * [`hochschild`] — Hochschild chain/cochain complexes (unital and
//!   non-unital), H-unitality certificates, the excision suite, proof-level
//!   filtrations, Kähler forms and the HKR (anti)symmetrization maps;
//! * [`cyclic`] — the (b,B) mixed complex, cyclic homology via the total
//!   complex, the SBI sequence, and S-stabilized periodic cyclic homology.
//!
//! The crate is `no_std` (with `alloc`): all I/O, parallelism, and file
//! formats live in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod complex;
pub mod cyclic;
pub mod error;
pub mod excision;
pub mod forms;
pub mod hochschild;
pub mod linalg;
pub mod rat;
pub mod sparse;
pub mod zoo;

pub use algebra::{Algebra, AlgebraMorphism, Bimodule, Extension, ModuleExtension};
pub use complex::{ChainComplex, ChainMap, HomologyReport};
pub use cyclic::{
    cyclic_homology, periodic_cyclic, sbi_check, CyclicReport, MixedComplex, PeriodicReport,
    SbiReport,
};
pub use excision::{
    excision_suite, filtration_probe, ExcisionReport, FiltrationReport, JunctionVerdict,
};
pub use forms::{hkr_antisymmetrize, hkr_project, kaehler_forms, KaehlerForms};
pub use hochschild::{
    h_unitality_check, hh_cochain, hh_complex, hh_complex_nonunital, CertificateMode,
    HUnitalityCertificate,
};
pub use error::CoreError;
pub use linalg::{ExactEngine, FastEngine, RankEngine};
pub use rat::Rat;
pub use sparse::SparseMatrix;
