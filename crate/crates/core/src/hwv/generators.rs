//! The generators of the `U_n`-invariants for two and three columns, and the
//! `Φ` construction that produces the `S_k`-invariants in the `β_i`.

use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

fn x(i: usize, j: usize) -> Polynomial {
    Polynomial::var(i, j)
}

/// `δ_ij`, the 2×2 minor on rows 1,2 and columns `i`, `j`.
pub fn delta(i: usize, j: usize) -> Polynomial {
    Polynomial::top_minor(&[i, j])
}

fn int(c: i64) -> BigInt {
    BigInt::from(c)
}

/// Generators for three columns.
///
/// `β₂ = x₁₂δ₁₃` and `β₃ = x₁₃δ₁₂`. Note that [`beta_general`] labels the
/// same two polynomials the other way round at `k = 3`; everything built from
/// them here (`α₂`, `α₃`, the bases) is symmetric under the swap.
#[derive(Clone, Debug)]
pub struct GeneratorsK3 {
    pub alpha1: Polynomial,
    pub beta2: Polynomial,
    pub beta3: Polynomial,
    pub gamma1: Polynomial,
    pub gamma2: Polynomial,
    pub alpha2: Polynomial,
    pub alpha3: Polynomial,
}

impl GeneratorsK3 {
    fn build() -> Self {
        let alpha1 = &(&x(1, 1) * &x(1, 2)) * &x(1, 3);
        let beta2 = &x(1, 2) * &delta(1, 3);
        let beta3 = &x(1, 3) * &delta(1, 2);
        let gamma1 = Polynomial::top_minor(&[1, 2, 3]);
        let gamma2 = &(&delta(1, 2) * &delta(1, 3)) * &delta(2, 3);

        let b2b3 = &beta2 * &beta3;
        let b2sq = beta2.pow(2);
        let b3sq = beta3.pow(2);
        let alpha2 = &(&b2sq + &b3sq) - &b2b3;
        let cubes = &(&b2sq * &beta2) + &(&b3sq * &beta3);
        let mixed = &(&b2sq * &beta3) + &(&beta2 * &b3sq);
        let alpha3 = &cubes.scale(&int(2)) - &mixed.scale(&int(3));
        GeneratorsK3 {
            alpha1,
            beta2,
            beta3,
            gamma1,
            gamma2,
            alpha2,
            alpha3,
        }
    }

    /// `(name, polynomial)` pairs in a fixed order.
    pub fn named(&self) -> [(&'static str, &Polynomial); 7] {
        [
            ("alpha1", &self.alpha1),
            ("beta2", &self.beta2),
            ("beta3", &self.beta3),
            ("gamma1", &self.gamma1),
            ("gamma2", &self.gamma2),
            ("alpha2", &self.alpha2),
            ("alpha3", &self.alpha3),
        ]
    }
}

pub fn generators_k3() -> &'static GeneratorsK3 {
    static CELL: OnceLock<GeneratorsK3> = OnceLock::new();
    CELL.get_or_init(GeneratorsK3::build)
}

/// Generators for two columns: `α = x₁₁x₁₂`, `γ = δ₁₂`.
#[derive(Clone, Debug)]
pub struct GeneratorsK2 {
    pub alpha: Polynomial,
    pub gamma: Polynomial,
}

pub fn generators_k2() -> GeneratorsK2 {
    GeneratorsK2 {
        alpha: &x(1, 1) * &x(1, 2),
        gamma: delta(1, 2),
    }
}

/// `β_i = (∏_{2≤j≤k, j≠i} x_{1j}) · δ_{1i}` for `2 ≤ i ≤ k`.
pub fn beta_general(k: usize, i: usize) -> Result<Polynomial> {
    if k < 3 || i < 2 || i > k {
        return Err(Error::IndexOutOfRange {
            index: i,
            lo: 2,
            hi: k,
        });
    }
    let prefix: Polynomial = (2..=k).filter(|&j| j != i).map(|j| x(1, j)).product();
    Ok(&prefix * &delta(1, i))
}

/// `T₁ = β₂ + ... + β_k` and `T_i = T₁ − k·β_i`.
pub fn t_general(k: usize, i: usize) -> Result<Polynomial> {
    if k < 3 || i < 1 || i > k {
        return Err(Error::IndexOutOfRange {
            index: i,
            lo: 1,
            hi: k,
        });
    }
    let t1: Polynomial = (2..=k).map(|j| beta_general(k, j)).sum::<Result<_>>()?;
    if i == 1 {
        return Ok(t1);
    }
    Ok(&t1 - &beta_general(k, i)?.scale(&BigInt::from(k)))
}

/// `Φ(σ_s)`: the `s`-th elementary symmetric polynomial evaluated at
/// `T₁, ..., T_k`.
pub fn phi_elementary(k: usize, s: usize) -> Result<Polynomial> {
    let ts: Vec<Polynomial> = (1..=k).map(|i| t_general(k, i)).collect::<Result<_>>()?;
    // e_s by the recurrence e_s(t_1..t_j) = e_s(t_1..t_{j-1}) + t_j e_{s-1}(t_1..t_{j-1})
    let mut e = vec![Polynomial::zero(); s + 1];
    e[0] = Polynomial::one();
    for t in &ts {
        for r in (1..=s).rev() {
            let add = t * &e[r - 1];
            e[r] += &add;
        }
    }
    Ok(e.swap_remove(s))
}

/// `Φ(Δ) = ∏_{i<j} (T_i − T_j)`.
pub fn phi_vandermonde(k: usize) -> Result<Polynomial> {
    let ts: Vec<Polynomial> = (1..=k).map(|i| t_general(k, i)).collect::<Result<_>>()?;
    let mut out = Polynomial::one();
    for i in 0..k {
        for j in i + 1..k {
            out = &out * &(&ts[i] - &ts[j]);
        }
    }
    Ok(out)
}

/// Images of `σ₂`, `σ₃` and `Δ` under `Φ` for three columns.
#[derive(Clone, Debug)]
pub struct PhiImages {
    pub sigma2: Polynomial,
    pub sigma3: Polynomial,
    pub delta: Polynomial,
    /// `s` with `Φ(Δ) = s · 27 α₁γ₂`, or `0` if neither sign matches.
    pub delta_sign: i32,
}

pub fn phi_images_k3() -> PhiImages {
    let g = generators_k3();
    let sigma2 = phi_elementary(3, 2).expect("k = 3");
    let sigma3 = phi_elementary(3, 3).expect("k = 3");
    let b2 = beta_general(3, 2).expect("k = 3");
    let b3 = beta_general(3, 3).expect("k = 3");
    // (T1−T2)(T1−T3)(T2−T3) = 3β₂ · 3β₃ · 3(β₃−β₂)
    let delta = (&(&b2 * &b3) * &(&b3 - &b2)).scale(&int(27));
    debug_assert_eq!(delta, phi_vandermonde(3).unwrap());
    let target = (&g.alpha1 * &g.gamma2).scale(&int(27));
    let delta_sign = if delta == target {
        1
    } else if delta == -&target {
        -1
    } else {
        0
    };
    PhiImages {
        sigma2,
        sigma3,
        delta,
        delta_sign,
    }
}

/// Outcome of checking the cubic relation among `α₁, α₂, α₃, γ₁, γ₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantCheck {
    /// `4α₂³ − α₃² = 27α₁²γ₂²`.
    pub corrected_holds: bool,
    /// `4α₂³ − α₃² = 27α₁²γ₁²`, the variant with `γ₁` in place of `γ₂`.
    pub gamma1_form_holds: bool,
    /// `Φ(Δ)² = 27(4α₂³ − α₃²)`.
    pub phi_delta_squared_holds: bool,
}

impl DiscriminantCheck {
    pub fn holds(&self) -> bool {
        self.corrected_holds && self.phi_delta_squared_holds
    }
}

/// `4α₂³ − α₃² − 27α₁²γ₂²`.
pub fn discriminant_residual() -> Polynomial {
    let g = generators_k3();
    let lhs = &g.alpha2.pow(3).scale(&int(4)) - &g.alpha3.pow(2);
    &lhs - &(&g.alpha1.pow(2) * &g.gamma2.pow(2)).scale(&int(27))
}

/// `4α₂³ − α₃² − 27α₁²γ₁²`.
pub fn gamma1_discriminant_residual() -> Polynomial {
    let g = generators_k3();
    let lhs = &g.alpha2.pow(3).scale(&int(4)) - &g.alpha3.pow(2);
    &lhs - &(&g.alpha1.pow(2) * &g.gamma1.pow(2)).scale(&int(27))
}

pub fn verify_discriminant_relation() -> DiscriminantCheck {
    let g = generators_k3();
    let phi = phi_images_k3();
    let rhs = (&g.alpha2.pow(3).scale(&int(4)) - &g.alpha3.pow(2)).scale(&int(27));
    DiscriminantCheck {
        corrected_holds: discriminant_residual().is_zero(),
        gamma1_form_holds: gamma1_discriminant_residual().is_zero(),
        phi_delta_squared_holds: phi.delta.pow(2) == rhs,
    }
}
