use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::generators::generators_k3;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, RowWeight, VarId};

/// Which space a decomposition describes: `S^k(S^m)` or `Λ^k(S^m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Sym,
    Alt,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Sym => "sym",
            Variant::Alt => "alt",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sym" => Ok(Variant::Sym),
            "alt" => Ok(Variant::Alt),
            _ => Err(Error::Invalid(format!(
                "variant must be sym or alt, got {s:?}"
            ))),
        }
    }
}

/// The family a basis word belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WordVariant {
    /// `α₁^a α₂^b α₃^c γ₁^{2d+f} γ₂^{2e+f}`
    Sym,
    /// `α₁^a α₂^b α₃^c γ₁^{2d+1} γ₂^{2e}`
    AltGamma1,
    /// `α₁^a α₂^b α₃^c γ₁^{2d} γ₂^{2e+1}`
    AltGamma2,
}

impl WordVariant {
    pub fn variant(self) -> Variant {
        match self {
            WordVariant::Sym => Variant::Sym,
            _ => Variant::Alt,
        }
    }
}

/// Exponents of `α₁, α₂, α₃, γ₁, γ₂` in a product of generators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GeneratorExponents {
    pub alpha1: u32,
    pub alpha2: u32,
    pub alpha3: u32,
    pub gamma1: u32,
    pub gamma2: u32,
}

impl GeneratorExponents {
    pub fn grade(&self) -> u32 {
        self.alpha1 + 2 * self.alpha2 + 3 * self.alpha3 + self.gamma1 + 2 * self.gamma2
    }

    /// Sum of the generator weights `(3)`, `(4,2)`, `(6,3)`, `(1,1,1)`, `(3,3)`.
    pub fn weight(&self) -> [u32; 3] {
        let GeneratorExponents {
            alpha1: a1,
            alpha2: a2,
            alpha3: a3,
            gamma1: g1,
            gamma2: g2,
        } = *self;
        [
            3 * a1 + 4 * a2 + 6 * a3 + g1 + 3 * g2,
            2 * a2 + 3 * a3 + g1 + 3 * g2,
            g1,
        ]
    }
}

impl fmt::Display for GeneratorExponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = [
            ("a1", self.alpha1),
            ("a2", self.alpha2),
            ("a3", self.alpha3),
            ("g1", self.gamma1),
            ("g2", self.gamma2),
        ]
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|&(name, e)| {
            if e == 1 {
                name.to_string()
            } else {
                format!("{name}^{e}")
            }
        })
        .collect();
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

impl FromStr for GeneratorExponents {
    type Err = Error;

    /// Parses `a1^2*a2*g1^3`; `1` is the empty product.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = GeneratorExponents::default();
        let s = s.trim();
        if s == "1" {
            return Ok(out);
        }
        for factor in s.split('*') {
            let (name, exp) = match factor.trim().split_once('^') {
                Some((n, e)) => (
                    n,
                    e.trim_matches(|c| c == '{' || c == '}')
                        .parse::<u32>()
                        .map_err(|_| Error::Invalid(format!("bad exponent in {factor:?}")))?,
                ),
                None => (factor.trim(), 1),
            };
            let slot = match name {
                "a1" => &mut out.alpha1,
                "a2" => &mut out.alpha2,
                "a3" => &mut out.alpha3,
                "g1" => &mut out.gamma1,
                "g2" => &mut out.gamma2,
                _ => return Err(Error::Invalid(format!("unknown generator {name:?}"))),
            };
            *slot += exp;
        }
        Ok(out)
    }
}

/// A basis element of the three-column `U_n`-invariants, named by its
/// exponent tuple. Ordering is lexicographic on `(a, b, c, d, e, f, variant)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneratorWord {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub e: u32,
    pub f: u32,
    pub variant: WordVariant,
}

impl GeneratorWord {
    pub fn new(
        a: u32,
        b: u32,
        c: u32,
        d: u32,
        e: u32,
        f: u32,
        variant: WordVariant,
    ) -> Result<Self> {
        if c > 1 || f > 1 {
            return Err(Error::Invalid(format!(
                "c and f must be 0 or 1, got c={c}, f={f}"
            )));
        }
        if variant != WordVariant::Sym && f != 0 {
            return Err(Error::Invalid(
                "f is unused for alternating words and must be 0".into(),
            ));
        }
        Ok(GeneratorWord {
            a,
            b,
            c,
            d,
            e,
            f,
            variant,
        })
    }

    pub fn sym(a: u32, b: u32, c: u32, d: u32, e: u32, f: u32) -> Result<Self> {
        Self::new(a, b, c, d, e, f, WordVariant::Sym)
    }

    pub fn alt_gamma1(a: u32, b: u32, c: u32, d: u32, e: u32) -> Result<Self> {
        Self::new(a, b, c, d, e, 0, WordVariant::AltGamma1)
    }

    pub fn alt_gamma2(a: u32, b: u32, c: u32, d: u32, e: u32) -> Result<Self> {
        Self::new(a, b, c, d, e, 0, WordVariant::AltGamma2)
    }

    /// Classifies a generator product as a basis word of the given variant,
    /// if it is one.
    pub fn from_exponents(x: GeneratorExponents, variant: Variant) -> Result<Self> {
        let (g1, g2) = (x.gamma1, x.gamma2);
        let not_basis = || Error::Invalid(format!("{x} is not a {variant} basis word"));
        if x.alpha3 > 1 {
            return Err(not_basis());
        }
        match variant {
            Variant::Sym => {
                if g1 % 2 != g2 % 2 {
                    return Err(not_basis());
                }
                let f = g1 % 2;
                Self::sym(x.alpha1, x.alpha2, x.alpha3, (g1 - f) / 2, (g2 - f) / 2, f)
            }
            Variant::Alt => match (g1 % 2, g2 % 2) {
                (1, 0) => Self::alt_gamma1(x.alpha1, x.alpha2, x.alpha3, (g1 - 1) / 2, g2 / 2),
                (0, 1) => Self::alt_gamma2(x.alpha1, x.alpha2, x.alpha3, g1 / 2, (g2 - 1) / 2),
                _ => Err(not_basis()),
            },
        }
    }

    pub fn exponents(&self) -> GeneratorExponents {
        let (gamma1, gamma2) = match self.variant {
            WordVariant::Sym => (2 * self.d + self.f, 2 * self.e + self.f),
            WordVariant::AltGamma1 => (2 * self.d + 1, 2 * self.e),
            WordVariant::AltGamma2 => (2 * self.d, 2 * self.e + 1),
        };
        GeneratorExponents {
            alpha1: self.a,
            alpha2: self.b,
            alpha3: self.c,
            gamma1,
            gamma2,
        }
    }

    /// `Gr`: the column degree `m` of the expanded polynomial.
    pub fn grade(&self) -> u32 {
        self.exponents().grade()
    }

    /// `wt`: the row weight of the expanded polynomial, padded to three rows.
    pub fn weight(&self) -> RowWeight {
        RowWeight(self.exponents().weight().to_vec())
    }

    /// The explicit polynomial in `x[i][j]`.
    pub fn expand(&self) -> Polynomial {
        let g = generators_k3();
        let x = self.exponents();
        let mut factors: Vec<Polynomial> = [
            (&g.alpha2, x.alpha2),
            (&g.alpha3, x.alpha3),
            (&g.gamma1, x.gamma1),
            (&g.gamma2, x.gamma2),
        ]
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(p, e)| p.pow(*e))
        .collect();
        factors.sort_by_key(Polynomial::len);
        let body: Polynomial = factors.into_iter().product();
        let a1 = Monomial::from_exponents((1..=3).map(|j| (VarId::new(1, j), x.alpha1)));
        body.mul_monomial(&a1, &1.into())
    }

    /// Exponents `[s11, s12, s13, s22, s23, s33]` of the leading monomial,
    /// predicted from the leading monomials of the generators.
    pub fn predicted_leading_exponents(&self) -> [u32; 6] {
        let x = self.exponents();
        let (a, b, c, g1, g2) = (x.alpha1, x.alpha2, x.alpha3, x.gamma1, x.gamma2);
        [
            a + 2 * b + 3 * c + g1 + 2 * g2,
            a + 2 * b + 3 * c + g2,
            a,
            g1 + g2,
            2 * b + 3 * c + 2 * g2,
            g1,
        ]
    }

    /// Recovers the word from the exponents `[s11, s12, s13, s22, s23, s33]`
    /// of its leading monomial. For symmetric words this is
    /// `c = s23 mod 2`, `f = s33 mod 2`, `a = s13`,
    /// `b = (s23 − 2s22 + 2s33 − 3c)/2`, `d = (s33 − f)/2`,
    /// `e = (s22 − s33 − f)/2`.
    pub fn from_leading_exponents(s: [u32; 6], variant: Variant) -> Option<Self> {
        let [s11, s12, s13, s22, s23, s33] = s.map(i64::from);
        let c = s23 % 2;
        let a = s13;
        let word = match variant {
            Variant::Sym => {
                let f = s33 % 2;
                let b = (s23 - 2 * s22 + 2 * s33 - 3 * c) / 2;
                let d = (s33 - f) / 2;
                let e = (s22 - s33 - f) / 2;
                [a, b, c, d, e, f]
                    .iter()
                    .all(|&v| v >= 0)
                    .then(|| {
                        Self::sym(a as u32, b as u32, c as u32, d as u32, e as u32, f as u32).ok()
                    })
                    .flatten()?
            }
            Variant::Alt => {
                let (g1, g2) = (s33, s22 - s33);
                let b = (s23 - 2 * g2 - 3 * c) / 2;
                if g2 < 0 || b < 0 {
                    return None;
                }
                let x = GeneratorExponents {
                    alpha1: a as u32,
                    alpha2: b as u32,
                    alpha3: c as u32,
                    gamma1: g1 as u32,
                    gamma2: g2 as u32,
                };
                Self::from_exponents(x, Variant::Alt).ok()?
            }
        };
        // the remaining two exponents must be consistent
        let predicted = word.predicted_leading_exponents().map(i64::from);
        (predicted == [s11, s12, s13, s22, s23, s33]).then_some(word)
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.exponents().fmt(f)
    }
}

/// Exponents `[s11, s12, s13, s22, s23, s33]` of the leading monomial of `f`,
/// or `None` when `f` is zero or its leading monomial involves any other
/// variable.
pub fn leading_exponents(f: &Polynomial) -> Option<[u32; 6]> {
    const SLOTS: [(usize, usize); 6] = [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)];
    let (lm, _) = f.leading_monomial().ok()?;
    let mut out = [0; 6];
    for (v, e) in lm.iter() {
        let slot = SLOTS
            .iter()
            .position(|&(i, j)| v.row() == i && v.col() == j)?;
        out[slot] = e;
    }
    Some(out)
}

/// All basis words of grade `m`, sorted. Symmetric words satisfy
/// `a + 2b + 3c + 2d + 4e + 3f = m`; alternating words come from both
/// families.
pub fn enumerate_basis(m: u32, variant: Variant) -> Vec<GeneratorWord> {
    let families: &[WordVariant] = match variant {
        Variant::Sym => &[WordVariant::Sym],
        Variant::Alt => &[WordVariant::AltGamma1, WordVariant::AltGamma2],
    };
    let mut out = Vec::new();
    for &family in families {
        let fs: &[u32] = if family == WordVariant::Sym {
            &[0, 1]
        } else {
            &[0]
        };
        for c in 0..=1 {
            for &f in fs {
                for b in 0..=m / 2 {
                    for d in 0..=m / 2 {
                        for e in 0..=m / 4 {
                            let w = GeneratorWord {
                                a: 0,
                                b,
                                c,
                                d,
                                e,
                                f,
                                variant: family,
                            };
                            let rest = w.grade();
                            if rest <= m {
                                out.push(GeneratorWord { a: m - rest, ..w });
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}
