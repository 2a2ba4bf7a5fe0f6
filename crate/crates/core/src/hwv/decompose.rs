use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::generators::generators_k2;
use super::word::{enumerate_basis, GeneratorWord, Variant};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, RowWeight};
use crate::tableaux::YoungDiagram;

/// `α^alpha γ^gamma` for two columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BinaryWord {
    pub alpha: u32,
    pub gamma: u32,
}

impl BinaryWord {
    pub fn grade(&self) -> u32 {
        self.alpha + self.gamma
    }

    pub fn weight(&self) -> RowWeight {
        RowWeight(vec![2 * self.alpha + self.gamma, self.gamma])
    }

    pub fn expand(&self) -> Polynomial {
        let g = generators_k2();
        &g.alpha.pow(self.alpha) * &g.gamma.pow(self.gamma)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |name: &str, e: u32| match e {
            0 => None,
            1 => Some(name.to_string()),
            _ => Some(format!("{name}^{e}")),
        };
        let factors: Vec<String> = [part("a", self.alpha), part("g", self.gamma)]
            .into_iter()
            .flatten()
            .collect();
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

/// A highest weight vector named by its generator word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HwvWord {
    Cubic(GeneratorWord),
    Binary(BinaryWord),
}

impl HwvWord {
    pub fn grade(&self) -> u32 {
        match self {
            HwvWord::Cubic(w) => w.grade(),
            HwvWord::Binary(w) => w.grade(),
        }
    }

    pub fn weight(&self) -> RowWeight {
        match self {
            HwvWord::Cubic(w) => w.weight(),
            HwvWord::Binary(w) => w.weight(),
        }
    }

    pub fn expand(&self) -> Polynomial {
        match self {
            HwvWord::Cubic(w) => w.expand(),
            HwvWord::Binary(w) => w.expand(),
        }
    }
}

impl fmt::Display for HwvWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HwvWord::Cubic(w) => w.fmt(f),
            HwvWord::Binary(w) => w.fmt(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionEntry {
    pub diagram: YoungDiagram,
    pub multiplicity: u64,
    pub words: Vec<HwvWord>,
}

/// Irreducible constituents of `S^k(S^m)` or `Λ^k(S^m)` with a basis of
/// highest weight vectors for each. Entries are sorted by diagram in
/// decreasing lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub k: usize,
    pub m: u32,
    pub variant: Variant,
    pub entries: Vec<DecompositionEntry>,
}

impl DecompositionReport {
    /// `(diagram, multiplicity)` pairs.
    pub fn multiplicities(&self) -> BTreeMap<YoungDiagram, u64> {
        self.entries
            .iter()
            .map(|e| (e.diagram.clone(), e.multiplicity))
            .collect()
    }

    pub fn entry(&self, diagram: &YoungDiagram) -> Option<&DecompositionEntry> {
        self.entries.iter().find(|e| &e.diagram == diagram)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Expands every word, in parallel; the result follows entry and word order.
    pub fn expand_all(&self) -> Vec<Vec<Polynomial>> {
        self.entries
            .par_iter()
            .map(|e| e.words.par_iter().map(HwvWord::expand).collect())
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    diagram: Vec<u32>,
    multiplicity: u64,
    words: Vec<HwvWord>,
}

#[derive(Serialize, Deserialize)]
struct ReportJson {
    k: usize,
    m: u32,
    variant: Variant,
    entries: Vec<EntryJson>,
}

impl Serialize for DecompositionReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ReportJson {
            k: self.k,
            m: self.m,
            variant: self.variant,
            entries: self
                .entries
                .iter()
                .map(|e| EntryJson {
                    diagram: e.diagram.padded(self.k),
                    multiplicity: e.multiplicity,
                    words: e.words.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DecompositionReport {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ReportJson::deserialize(d)?;
        let entries = raw
            .entries
            .into_iter()
            .map(|e| {
                Ok(DecompositionEntry {
                    diagram: YoungDiagram::new(e.diagram).map_err(D::Error::custom)?,
                    multiplicity: e.multiplicity,
                    words: e.words,
                })
            })
            .collect::<std::result::Result<_, D::Error>>()?;
        Ok(DecompositionReport {
            k: raw.k,
            m: raw.m,
            variant: raw.variant,
            entries,
        })
    }
}

fn group(k: usize, m: u32, variant: Variant, words: Vec<HwvWord>) -> DecompositionReport {
    let mut by_diagram: BTreeMap<YoungDiagram, Vec<HwvWord>> = BTreeMap::new();
    for w in words {
        let d = YoungDiagram::new(w.weight().0).expect("basis weights are dominant");
        by_diagram.entry(d).or_default().push(w);
    }
    let entries = by_diagram
        .into_iter()
        .rev()
        .map(|(diagram, words)| DecompositionEntry {
            diagram,
            multiplicity: words.len() as u64,
            words,
        })
        .collect();
    DecompositionReport {
        k,
        m,
        variant,
        entries,
    }
}

/// `{α^{m−a} γ^a}` with `a` even (sym) or odd (alt).
pub fn binary_basis(m: u32, variant: Variant) -> Vec<BinaryWord> {
    let parity = match variant {
        Variant::Sym => 0,
        Variant::Alt => 1,
    };
    (0..=m)
        .filter(|a| a % 2 == parity)
        .map(|a| BinaryWord {
            alpha: m - a,
            gamma: a,
        })
        .collect()
}

/// Decomposes `S^k(S^m(C^n))` (sym) or `Λ^k(S^m(C^n))` (alt) for `k ∈ {2, 3}`.
pub fn decompose(k: usize, m: u32, variant: Variant) -> Result<DecompositionReport> {
    let words = match k {
        2 => binary_basis(m, variant)
            .into_iter()
            .map(HwvWord::Binary)
            .collect(),
        3 => enumerate_basis(m, variant)
            .into_iter()
            .map(HwvWord::Cubic)
            .collect(),
        _ => return Err(Error::Invalid(format!("k must be 2 or 3, got {k}"))),
    };
    Ok(group(k, m, variant, words))
}

/// The highest weight vectors of weight `diagram`; empty when `ρ^D` does not occur.
pub fn hwv_words(
    k: usize,
    m: u32,
    variant: Variant,
    diagram: &YoungDiagram,
) -> Result<Vec<HwvWord>> {
    if diagram.len() > k {
        return Err(Error::BadShape(format!(
            "diagram {diagram} has more than k = {k} rows"
        )));
    }
    let report = decompose(k, m, variant)?;
    Ok(report
        .entry(diagram)
        .map(|e| e.words.clone())
        .unwrap_or_default())
}

/// Closed-form multiplicity of `ρ^D` in `S³(S^m)` or `Λ³(S^m)`, `|D| = 3m`:
///
/// sym: `⌊(min + 2λ₁ + λ₂)/6⌋ + ⌊λ₂/2⌋ + ⌊−(λ₁+2λ₂)/3⌋ + 1`
/// alt: `⌊(min + 2λ₁ + λ₂ + 3)/6⌋ + ⌊(λ₂+1)/2⌋ + ⌊−(λ₁+2λ₂)/3⌋`
///
/// where `min = min(λ₁−λ₂, λ₂−λ₃)`. Negative values are clamped to 0.
pub fn multiplicity_closed_form(diagram: &YoungDiagram, variant: Variant) -> Result<u64> {
    if diagram.len() > 3 {
        return Err(Error::BadShape(format!("{diagram} has more than 3 rows")));
    }
    if !diagram.size().is_multiple_of(3) {
        return Err(Error::BadShape(format!(
            "|{diagram}| = {} is not divisible by 3",
            diagram.size()
        )));
    }
    Ok(closed_form_raw(diagram, variant).max(0) as u64)
}

pub(crate) fn closed_form_raw(diagram: &YoungDiagram, variant: Variant) -> i64 {
    let p = diagram.padded(3);
    let (l1, l2, l3) = (i64::from(p[0]), i64::from(p[1]), i64::from(p[2]));
    let min = (l1 - l2).min(l2 - l3);
    let tail = (-(l1 + 2 * l2)).div_euclid(3);
    match variant {
        Variant::Sym => (min + 2 * l1 + l2).div_euclid(6) + l2.div_euclid(2) + tail + 1,
        Variant::Alt => (min + 2 * l1 + l2 + 3).div_euclid(6) + (l2 + 1).div_euclid(2) + tail,
    }
}
