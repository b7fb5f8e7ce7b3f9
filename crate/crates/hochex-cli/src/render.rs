//! Plain-text and JSON rendering for the core reports.
//!
//! JSON field names are part of the CLI's output contract and stay stable;
//! matrices are emitted row-major as rational strings, the same grammar the
//! input files use. Text output is aligned tables aimed at a terminal.

use serde_json::{json, Value};

use hochex_core::complex::{HomologyReport, LesReport, QuasiIsoReport};
use hochex_core::excision::{ExcisionJunction, JunctionVerdict};
use hochex_core::hochschild::{CertificateMode, HUnitalityCertificate};
use hochex_core::rat::format_rat;
use hochex_core::{ExcisionReport, SparseMatrix};

/// Left-aligned text table with a header row.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let ncols = headers.len();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (c, cell) in row.iter().enumerate() {
            widths[c] = widths[c].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: &[String]| {
        for (c, cell) in cells.iter().enumerate() {
            out.push_str("  ");
            out.push_str(cell);
            if c + 1 < ncols {
                for _ in cell.chars().count()..widths[c] {
                    out.push(' ');
                }
            }
        }
        out.push('\n');
    };
    emit(&mut out, &headers.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    for row in rows {
        emit(&mut out, row);
    }
    out
}

/// Row-major rational-string matrix.
pub fn matrix_json(m: &SparseMatrix) -> Value {
    let rows: Vec<Vec<String>> =
        m.to_dense().iter().map(|r| r.iter().map(format_rat).collect()).collect();
    json!(rows)
}

/// `{"betti": [...], "rows": [{degree, dim, rank_out, rank_in, betti}]}`.
pub fn homology_json(r: &HomologyReport) -> Value {
    json!({
        "betti": r.rows.iter().map(|x| x.betti).collect::<Vec<_>>(),
        "rows": r.rows.iter().map(|x| json!({
            "degree": x.degree,
            "dim": x.dim,
            "rank_out": x.rank_out,
            "rank_in": x.rank_in,
            "betti": x.betti,
        })).collect::<Vec<_>>(),
    })
}

/// Text rows for a homology table.
pub fn homology_rows(r: &HomologyReport) -> Vec<Vec<String>> {
    r.rows
        .iter()
        .map(|x| {
            vec![
                x.degree.to_string(),
                x.dim.to_string(),
                x.rank_out.to_string(),
                x.rank_in.to_string(),
                x.betti.to_string(),
            ]
        })
        .collect()
}

/// `{"is_quasi_iso", "witness", "inconclusive"}`.
pub fn quasi_iso_json(q: &QuasiIsoReport) -> Value {
    json!({
        "is_quasi_iso": q.is_quasi_iso,
        "witness": q.witness,
        "inconclusive": q.inconclusive,
    })
}

/// One-line text verdict for a quasi-isomorphism report.
pub fn quasi_iso_text(q: &QuasiIsoReport) -> String {
    match (q.is_quasi_iso, q.witness) {
        (true, _) => "quasi-isomorphism".to_string(),
        (false, Some(n)) if q.inconclusive => {
            format!("cone homology survives at degree {n} (window edge — inconclusive)")
        }
        (false, Some(n)) => format!("NOT a quasi-isomorphism (cone homology at degree {n})"),
        (false, None) => "NOT a quasi-isomorphism".to_string(),
    }
}

/// The stable mode string for a certificate.
pub fn certificate_mode_str(mode: CertificateMode) -> &'static str {
    match mode {
        CertificateMode::LeftUnit => "left-unit",
        CertificateMode::RightUnit => "right-unit",
        CertificateMode::RankVerified => "rank-verified",
        CertificateMode::Failed => "failed",
    }
}

/// `{"mode", "holds", "unit", "checked_through", "failure_degree"}`.
pub fn certificate_json(c: &HUnitalityCertificate) -> Value {
    json!({
        "mode": certificate_mode_str(c.mode),
        "holds": c.holds(),
        "unit": c.unit.as_ref().map(|u| u.iter().map(format_rat).collect::<Vec<_>>()),
        "checked_through": c.checked_through,
        "failure_degree": c.failure_degree,
    })
}

/// `{"all_exact", "rows": [{degree, h_sub, h_mid, h_quot, exact_at_mid,
/// exact_at_quot, exact_at_sub, connecting}]}`.
pub fn les_json(l: &LesReport) -> Value {
    json!({
        "all_exact": l.all_exact(),
        "rows": l.rows.iter().map(|r| json!({
            "degree": r.degree,
            "h_sub": r.h_sub,
            "h_mid": r.h_mid,
            "h_quot": r.h_quot,
            "exact_at_mid": r.exact_at_mid,
            "exact_at_quot": r.exact_at_quot,
            "exact_at_sub": r.exact_at_sub,
            "connecting": matrix_json(&r.connecting),
        })).collect::<Vec<_>>(),
    })
}

/// Short text form of a junction verdict.
pub fn junction_verdict_text(v: &JunctionVerdict) -> String {
    match v {
        JunctionVerdict::Exact => "exact".to_string(),
        JunctionVerdict::Inexact => "INEXACT".to_string(),
        JunctionVerdict::NotTransportable(reason) => format!("not transportable ({reason})"),
    }
}

fn junction_verdict_json(v: &JunctionVerdict) -> Value {
    match v {
        JunctionVerdict::Exact => json!("exact"),
        JunctionVerdict::Inexact => json!("inexact"),
        JunctionVerdict::NotTransportable(reason) => json!({"not_transportable": reason}),
    }
}

/// `{"degree", "at_total", "at_quotient", "at_ideal"}`.
pub fn junction_json(j: &ExcisionJunction) -> Value {
    json!({
        "degree": j.degree,
        "at_total": junction_verdict_json(&j.at_total),
        "at_quotient": junction_verdict_json(&j.at_quotient),
        "at_ideal": j.at_ideal.as_ref().map(junction_verdict_json),
    })
}

/// The whole excision suite as one JSON object.
pub fn excision_json(r: &ExcisionReport) -> Value {
    json!({
        "holds": r.holds(),
        "max_degree": r.max_degree,
        "h_unitality": certificate_json(&r.h_unitality),
        "betti": {
            "ideal": r.betti_ideal.rows.iter().map(|x| x.betti).collect::<Vec<_>>(),
            "total": r.betti_total.rows.iter().map(|x| x.betti).collect::<Vec<_>>(),
            "quotient": r.betti_quotient.rows.iter().map(|x| x.betti).collect::<Vec<_>>(),
        },
        "cofibre": quasi_iso_json(&r.cofibre),
        "les": les_json(&r.les),
        "comparison_ideal": quasi_iso_json(&r.comparison_ideal),
        "comparison_quotient": quasi_iso_json(&r.comparison_quotient),
        "junctions": r.junctions.iter().map(junction_json).collect::<Vec<_>>(),
    })
}

/// The excision suite as a multi-section text report.
pub fn excision_text(r: &ExcisionReport, label: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("Excision suite for {label}, degrees 0..={}\n\n", r.max_degree));
    out.push_str(&format!(
        "H-unitality of the ideal: {}{}\n",
        certificate_mode_str(r.h_unitality.mode),
        match r.h_unitality.failure_degree {
            Some(n) => format!(" (bar homology survives at degree {n})"),
            None => String::new(),
        }
    ));
    let bt = |rep: &HomologyReport| {
        rep.rows.iter().map(|x| x.betti.to_string()).collect::<Vec<_>>().join(", ")
    };
    out.push_str(&format!("HH(I): [{}]\n", bt(&r.betti_ideal)));
    out.push_str(&format!("HH(E): [{}]\n", bt(&r.betti_total)));
    out.push_str(&format!("HH(Q): [{}]\n", bt(&r.betti_quotient)));
    out.push_str(&format!("cofibre comparison: {}\n", quasi_iso_text(&r.cofibre)));
    out.push_str(&format!(
        "coefficient long exact sequence: {}\n",
        if r.les.all_exact() { "exact at every junction" } else { "NOT exact everywhere" }
    ));
    out.push_str(&format!("ideal comparison α: {}\n", quasi_iso_text(&r.comparison_ideal)));
    out.push_str(&format!(
        "quotient comparison β: {}\n\n",
        quasi_iso_text(&r.comparison_quotient)
    ));
    let rows: Vec<Vec<String>> = r
        .junctions
        .iter()
        .map(|j| {
            vec![
                j.degree.to_string(),
                junction_verdict_text(&j.at_total),
                junction_verdict_text(&j.at_quotient),
                j.at_ideal.as_ref().map_or("(above window)".to_string(), junction_verdict_text),
            ]
        })
        .collect();
    out.push_str(&table(&["degree", "at HH(E)", "at HH(Q)", "at HH(I)"], &rows));
    out.push_str(&format!(
        "\nverdict: excision {}\n",
        if r.holds() { "HOLDS on the checked window" } else { "FAILS on the checked window" }
    ));
    out
}
