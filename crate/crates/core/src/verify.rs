//! The named verification suite behind `plethysm verify`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::action::{is_sign_equivariant, is_sk_invariant, is_un_invariant};
use crate::golden::{matches_golden, MAX_GOLDEN_M};
use crate::hwv::{
    binary_basis, decompose, enumerate_basis, generators_k3, leading_exponents,
    multiplicity_closed_form, phi_images_k3, verify_discriminant_relation, Variant,
};
use crate::oracle::{
    hwv_kernel_multiplicity_bounded, multiplicities_by_kostka, multiplicities_by_kostka_k,
};
use crate::tableaux::YoungDiagram;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Largest grade exercised.
    pub max_m: u32,
    pub n: usize,
    /// Bound handed to the kernel oracle.
    pub max_dim: usize,
    /// Demand the relation with `γ₁` in place of `γ₂`, which fails.
    pub force_gamma1_relation: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_m: 3,
            n: 3,
            max_dim: crate::oracle::DEFAULT_MAX_DIM,
            force_gamma1_relation: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            write!(f, "{tag} {}", self.id)
        } else {
            write!(f, "{tag} {}: {}", self.id, self.detail)
        }
    }
}

fn outcome(id: &'static str, failures: Vec<String>, ok_detail: String) -> CheckOutcome {
    if failures.is_empty() {
        CheckOutcome {
            id,
            passed: true,
            detail: ok_detail,
        }
    } else {
        CheckOutcome {
            id,
            passed: false,
            detail: failures.join("; "),
        }
    }
}

pub fn check_generators_un_invariant(n: usize) -> CheckOutcome {
    let failures = generators_k3()
        .named()
        .iter()
        .filter(|(_, p)| !is_un_invariant(p, n).unwrap_or(false))
        .map(|(name, _)| format!("{name} is not U_{n}-invariant"))
        .collect();
    outcome(
        "generators-un-invariant",
        failures,
        format!("7 generators, n = {n}"),
    )
}

pub fn check_s3_action() -> CheckOutcome {
    let g = generators_k3();
    let mut failures = Vec::new();
    for (name, p) in [
        ("alpha1", &g.alpha1),
        ("alpha2", &g.alpha2),
        ("alpha3", &g.alpha3),
    ] {
        if !is_sk_invariant(p, 3) {
            failures.push(format!("{name} is not S3-invariant"));
        }
    }
    for (name, p) in [("gamma1", &g.gamma1), ("gamma2", &g.gamma2)] {
        if !is_sign_equivariant(p, 3) {
            failures.push(format!("{name} is not sign-equivariant"));
        }
    }
    outcome("s3-action", failures, String::new())
}

/// Leading monomial exponents `[s11, s12, s13, s22, s23, s33]` and coefficients.
pub const LM_TABLE: [(&str, [u32; 6], i64); 5] = [
    ("alpha1", [1, 1, 1, 0, 0, 0], 1),
    ("alpha2", [2, 2, 0, 0, 2, 0], 1),
    ("alpha3", [3, 3, 0, 0, 3, 0], 2),
    ("gamma1", [1, 0, 0, 1, 0, 1], 1),
    ("gamma2", [2, 1, 0, 1, 2, 0], 1),
];

pub fn check_lm_table() -> CheckOutcome {
    let g = generators_k3();
    let polys = [&g.alpha1, &g.alpha2, &g.alpha3, &g.gamma1, &g.gamma2];
    let mut failures = Vec::new();
    for ((name, s, c), p) in LM_TABLE.iter().zip(polys) {
        let coeff = p.leading_monomial().map(|(_, c)| c.clone()).ok();
        if leading_exponents(p) != Some(*s) || coeff != Some((*c).into()) {
            failures.push(format!("LM({name}) differs"));
        }
    }
    outcome("lm-table", failures, String::new())
}

/// Every basis word of grade `≤ max_m` has the predicted leading monomial.
pub fn check_lm_relations(max_m: u32) -> CheckOutcome {
    let words: Vec<_> = (0..=max_m)
        .flat_map(|m| {
            [Variant::Sym, Variant::Alt]
                .into_iter()
                .flat_map(move |v| enumerate_basis(m, v))
        })
        .collect();
    let failures: Vec<String> = words
        .par_iter()
        .filter(|w| leading_exponents(&w.expand()) != Some(w.predicted_leading_exponents()))
        .map(|w| format!("LM({w}) differs from prediction"))
        .collect();
    outcome(
        "lm-relations",
        failures,
        format!("{} words, grade <= {max_m}", words.len()),
    )
}

pub fn check_alpha23_corrected() -> CheckOutcome {
    let c = verify_discriminant_relation();
    let mut failures = Vec::new();
    if !c.corrected_holds {
        failures.push("4a2^3 - a3^2 - 27a1^2g2^2 is nonzero".to_string());
    }
    if !c.phi_delta_squared_holds {
        failures.push("Phi(Delta)^2 != 27(4a2^3 - a3^2)".to_string());
    }
    outcome("alpha23-corrected", failures, String::new())
}

/// Passes when the `γ₁` form of the relation is nonzero, unless `force` asks
/// for that form to hold.
pub fn check_alpha23_gamma1_variant(force: bool) -> CheckOutcome {
    let holds = verify_discriminant_relation().gamma1_form_holds;
    let failures = match (force, holds) {
        (false, true) => vec!["4a2^3 - a3^2 - 27a1^2g1^2 unexpectedly vanishes".to_string()],
        (true, false) => vec!["4a2^3 - a3^2 - 27a1^2g1^2 is nonzero".to_string()],
        _ => Vec::new(),
    };
    let detail = if force {
        "gamma1 form holds".to_string()
    } else {
        "gamma1 form is nonzero, as expected".to_string()
    };
    outcome("alpha23-printed-variant", failures, detail)
}

pub fn check_phi_images() -> CheckOutcome {
    let g = generators_k3();
    let phi = phi_images_k3();
    let mut failures = Vec::new();
    if phi.sigma2 != -&g.alpha2.scale(&3.into()) {
        failures.push("Phi(sigma2) != -3a2".to_string());
    }
    if phi.sigma3 != -&g.alpha3 {
        failures.push("Phi(sigma3) != -a3".to_string());
    }
    if phi.delta_sign != 1 {
        failures.push(format!("Phi(Delta) = {} * 27a1g2", phi.delta_sign));
    }
    outcome("phi-images", failures, String::new())
}

/// Basis counts against the Kostka-inversion oracle for `m ≤ max_m`, and
/// against the kernel oracle for `m ≤ min(max_m, 3)`.
pub fn check_basis_vs_oracle(max_m: u32, n: usize, max_dim: usize) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut kernel_runs = 0;
    for m in 0..=max_m {
        for v in [Variant::Sym, Variant::Alt] {
            let basis = match decompose(3, m, v) {
                Ok(r) => r.multiplicities(),
                Err(e) => {
                    failures.push(e.to_string());
                    continue;
                }
            };
            let oracle = multiplicities_by_kostka(m, n, v);
            let restricted: BTreeMap<_, _> = basis
                .iter()
                .filter(|(d, _)| d.len() <= n)
                .map(|(d, c)| (d.clone(), *c))
                .collect();
            if restricted != oracle {
                failures.push(format!("m={m} {v}: basis and Kostka oracle differ"));
            }
            if m <= 3 {
                let shapes = YoungDiagram::all(3 * m, n);
                let results: Vec<_> = shapes
                    .par_iter()
                    .map(|d| (d, hwv_kernel_multiplicity_bounded(m, n, d, v, max_dim)))
                    .collect();
                for (d, r) in results {
                    kernel_runs += 1;
                    match r {
                        Ok(k) if k == basis.get(d).copied().unwrap_or(0) => {}
                        Ok(k) => failures.push(format!("m={m} {v} {d}: kernel oracle gives {k}")),
                        Err(e) => failures.push(format!("m={m} {v} {d}: {e}")),
                    }
                }
            }
        }
    }
    outcome(
        "basis-vs-oracle",
        failures,
        format!("m <= {max_m}, n = {n}, {kernel_runs} kernel computations"),
    )
}

pub fn check_closed_form(max_m: u32) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for m in 0..=max_m {
        for v in [Variant::Sym, Variant::Alt] {
            let mults = match decompose(3, m, v) {
                Ok(r) => r.multiplicities(),
                Err(e) => {
                    failures.push(e.to_string());
                    continue;
                }
            };
            for d in YoungDiagram::all(3 * m, 3) {
                count += 1;
                let expected = mults.get(&d).copied().unwrap_or(0);
                match multiplicity_closed_form(&d, v) {
                    Ok(c) if c == expected => {}
                    Ok(c) => failures.push(format!("{v} {d}: closed form {c}, basis {expected}")),
                    Err(e) => failures.push(format!("{v} {d}: {e}")),
                }
            }
        }
    }
    outcome(
        "closed-form-vs-enumeration",
        failures,
        format!("{count} diagrams"),
    )
}

/// The two-column case: weights `(2m−a, a)` with `a` even or odd, each once,
/// matching the oracle, with invariant or sign-equivariant words.
pub fn check_k2_suite(max_m: u32, n: usize) -> CheckOutcome {
    let mut failures = Vec::new();
    let swap = crate::action::Permutation::transposition(2, 1, 2);
    let n = n.max(2);
    for m in 0..=max_m {
        for v in [Variant::Sym, Variant::Alt] {
            let report = match decompose(2, m, v) {
                Ok(r) => r,
                Err(e) => {
                    failures.push(e.to_string());
                    continue;
                }
            };
            let expected: Vec<(Vec<u32>, u64)> = binary_basis(m, v)
                .iter()
                .map(|w| (vec![2 * m - w.gamma, w.gamma], 1))
                .collect();
            let got: Vec<(Vec<u32>, u64)> = report
                .entries
                .iter()
                .map(|e| (e.diagram.padded(2), e.multiplicity))
                .collect();
            if got != expected {
                failures.push(format!("m={m} {v}: diagrams differ"));
            }
            let oracle = multiplicities_by_kostka_k(2, m, n, v);
            if oracle != report.multiplicities() {
                failures.push(format!("m={m} {v}: oracle differs"));
            }
            for e in &report.entries {
                for w in &e.words {
                    let p = w.expand();
                    let image = crate::action::permute_columns(&p, &swap);
                    let ok = is_un_invariant(&p, n).unwrap_or(false)
                        && match v {
                            Variant::Sym => image == p,
                            Variant::Alt => image == -&p,
                        };
                    if !ok {
                        failures.push(format!("m={m} {v}: {w} fails the symmetry checks"));
                    }
                }
            }
        }
    }
    outcome("k2-suite", failures, format!("m <= {max_m}"))
}

pub fn check_golden(max_m: u32) -> CheckOutcome {
    let mut failures = Vec::new();
    let top = max_m.min(MAX_GOLDEN_M);
    for m in 1..=top {
        for v in [Variant::Sym, Variant::Alt] {
            match decompose(3, m, v).map(|r| matches_golden(&r)) {
                Ok(Some(true)) => {}
                Ok(_) => failures.push(format!("m={m} {v}: differs from reference table")),
                Err(e) => failures.push(e.to_string()),
            }
        }
    }
    outcome("golden-tables", failures, format!("m <= {top}"))
}

/// Runs every check in a fixed order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<CheckOutcome> {
    vec![
        check_generators_un_invariant(cfg.n.max(3)),
        check_s3_action(),
        check_lm_table(),
        check_lm_relations(cfg.max_m),
        check_alpha23_corrected(),
        check_alpha23_gamma1_variant(cfg.force_gamma1_relation),
        check_phi_images(),
        check_basis_vs_oracle(cfg.max_m, cfg.n.max(3), cfg.max_dim),
        check_closed_form(cfg.max_m),
        check_k2_suite(cfg.max_m, cfg.n),
        check_golden(cfg.max_m),
    ]
}
