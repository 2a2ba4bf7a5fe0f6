//! Fixed workloads shared by the benchmarks in `benches/`.

use plethysm_core::hwv::{enumerate_basis, GeneratorWord, Variant};
use plethysm_core::Polynomial;

/// The basis words of grade `m` for both variants.
pub fn words(m: u32) -> Vec<GeneratorWord> {
    let mut out = enumerate_basis(m, Variant::Sym);
    out.extend(enumerate_basis(m, Variant::Alt));
    out
}

/// A pair of dense-ish factors: `(Σ x_ij)^d` for `i, j ≤ 3`, split in two.
pub fn product_operands(d: u32) -> (Polynomial, Polynomial) {
    let sum: Polynomial = (1..=3)
        .flat_map(|i| (1..=3).map(move |j| Polynomial::var(i, j)))
        .sum();
    (sum.pow(d), sum.pow(d + 1))
}
