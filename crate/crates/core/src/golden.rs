//! Reference decomposition tables for `S³(S^m)` and `Λ³(S^m)`, `m ≤ 6`.

use crate::hwv::{DecompositionReport, Variant};

macro_rules! fixture {
    ($name:literal) => {
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/", $name))
    };
}

const FIXTURES: [(Variant, u32, &str); 12] = [
    (Variant::Sym, 1, fixture!("s3_sym_m1.json")),
    (Variant::Sym, 2, fixture!("s3_sym_m2.json")),
    (Variant::Sym, 3, fixture!("s3_sym_m3.json")),
    (Variant::Sym, 4, fixture!("s3_sym_m4.json")),
    (Variant::Sym, 5, fixture!("s3_sym_m5.json")),
    (Variant::Sym, 6, fixture!("s3_sym_m6.json")),
    (Variant::Alt, 1, fixture!("s3_alt_m1.json")),
    (Variant::Alt, 2, fixture!("s3_alt_m2.json")),
    (Variant::Alt, 3, fixture!("s3_alt_m3.json")),
    (Variant::Alt, 4, fixture!("s3_alt_m4.json")),
    (Variant::Alt, 5, fixture!("s3_alt_m5.json")),
    (Variant::Alt, 6, fixture!("s3_alt_m6.json")),
];

/// Largest `m` with a reference table.
pub const MAX_GOLDEN_M: u32 = 6;

/// Raw JSON of the reference table, newline-terminated.
pub fn golden_json(m: u32, variant: Variant) -> Option<&'static str> {
    FIXTURES
        .iter()
        .find(|(v, mm, _)| *v == variant && *mm == m)
        .map(|(_, _, s)| *s)
}

pub fn golden_report(m: u32, variant: Variant) -> Option<DecompositionReport> {
    golden_json(m, variant).map(|s| serde_json::from_str(s).expect("fixture parses"))
}

/// Byte-for-byte comparison of the live rendering against the reference.
pub fn matches_golden(report: &DecompositionReport) -> Option<bool> {
    if report.k != 3 {
        return None;
    }
    let golden = golden_json(report.m, report.variant)?;
    Some(golden == format!("{}\n", report.to_json_pretty()))
}
