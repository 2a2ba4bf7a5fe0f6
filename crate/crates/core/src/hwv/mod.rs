//! Highest weight vectors of `S^k(S^m(Cⁿ))` and `Λ^k(S^m(Cⁿ))` for `k ∈ {2, 3}`.

mod decompose;
mod generators;
mod word;

pub use decompose::{
    binary_basis, decompose, hwv_words, multiplicity_closed_form, BinaryWord, DecompositionEntry,
    DecompositionReport, HwvWord,
};
pub use generators::{
    beta_general, delta, discriminant_residual, gamma1_discriminant_residual, generators_k2,
    generators_k3, phi_elementary, phi_images_k3, phi_vandermonde, t_general,
    verify_discriminant_relation, DiscriminantCheck, GeneratorsK2, GeneratorsK3, PhiImages,
};
pub use word::{
    enumerate_basis, leading_exponents, GeneratorExponents, GeneratorWord, Variant, WordVariant,
};
