//! Brute-force multiplicities for `S³(S^m(Cⁿ))` and `Λ³(S^m(Cⁿ))`.
//!
//! Two routes that share nothing with the generator bases: a weight count
//! inverted through Kostka numbers, and the joint kernel of the raising
//! operators acting directly on tensors of monomials.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hwv::Variant;
use crate::linalg;
use crate::poly::RowWeight;
use crate::tableaux::{kostka, Content, YoungDiagram};

/// Default bound on the weight-space dimension handled by the kernel oracle.
pub const DEFAULT_MAX_DIM: usize = 2000;

/// Reads `PLETHYSM_MAX_DIM`, falling back to [`DEFAULT_MAX_DIM`].
pub fn max_dim_from_env() -> usize {
    std::env::var("PLETHYSM_MAX_DIM")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_DIM)
}

/// Weight-space dimensions of a module, keyed by full length-`n` weights.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightTable {
    n: usize,
    dims: BTreeMap<RowWeight, u64>,
}

impl WeightTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, weight: &[u32]) -> u64 {
        let mut w = weight.to_vec();
        w.resize(self.n.max(w.len()), 0);
        self.dims.get(&RowWeight(w)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&RowWeight, u64)> {
        self.dims.iter().map(|(w, &d)| (w, d))
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }
}

/// Exponent vectors of the degree-`m` monomials in `n` variables, in
/// decreasing lexicographic order.
pub fn monomials(m: u32, n: usize) -> Vec<Vec<u32>> {
    fn go(m: u32, n: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == n {
            prefix.push(m);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=m).rev() {
            prefix.push(e);
            go(m - e, n, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if m == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(m, n, &mut Vec::new(), &mut out);
    out
}

/// Index tuples `i₁ ≤ … ≤ i_k` (sym) or `i₁ < … < i_k` (alt) below `d`.
fn index_tuples(k: usize, d: usize, variant: Variant) -> Vec<Vec<usize>> {
    match variant {
        Variant::Sym => (0..d).combinations_with_replacement(k).collect(),
        Variant::Alt => (0..d).combinations(k).collect(),
    }
}

fn add_weights(parts: impl Iterator<Item = impl AsRef<[u32]>>, n: usize) -> Vec<u32> {
    let mut w = vec![0; n];
    for p in parts {
        for (a, b) in w.iter_mut().zip(p.as_ref()) {
            *a += b;
        }
    }
    w
}

/// Weight table of `S^k(S^m(Cⁿ))` (sym) or `Λ^k(S^m(Cⁿ))` (alt).
pub fn weight_table_power(k: usize, m: u32, n: usize, variant: Variant) -> WeightTable {
    let monos = monomials(m, n);
    let d = monos.len();
    let firsts: Vec<usize> = (0..d).collect();
    let partials: Vec<BTreeMap<RowWeight, u64>> = firsts
        .par_iter()
        .map(|&i| {
            let mut acc = BTreeMap::new();
            if k == 0 {
                return acc;
            }
            let start = match variant {
                Variant::Sym => i,
                Variant::Alt => i + 1,
            };
            for rest in index_tuples(k - 1, d.saturating_sub(start), variant) {
                let w = add_weights(
                    std::iter::once(&monos[i]).chain(rest.iter().map(|&j| &monos[start + j])),
                    n,
                );
                *acc.entry(RowWeight(w)).or_insert(0) += 1;
            }
            acc
        })
        .collect();
    let mut dims = BTreeMap::new();
    if k == 0 {
        dims.insert(RowWeight(vec![0; n]), 1);
    }
    for part in partials {
        for (w, c) in part {
            *dims.entry(w).or_insert(0) += c;
        }
    }
    WeightTable { n, dims }
}

/// Weight table of `S³(S^m(Cⁿ))` (sym) or `Λ³(S^m(Cⁿ))` (alt).
pub fn weight_table_plethysm(m: u32, n: usize, variant: Variant) -> WeightTable {
    weight_table_power(3, m, n, variant)
}

/// Weight table of `S^m(Cⁿ)^{⊗3}`.
pub fn weight_table_tensor(m: u32, n: usize) -> WeightTable {
    let monos = monomials(m, n);
    let mut dims = BTreeMap::new();
    for t in (0..3).map(|_| 0..monos.len()).multi_cartesian_product() {
        let w = add_weights(t.iter().map(|&i| &monos[i]), n);
        *dims.entry(RowWeight(w)).or_insert(0) += 1;
    }
    WeightTable { n, dims }
}

/// Inverts `dim W_μ = Σ_D mult_D · K_{D,μ}` over dominant weights in
/// decreasing lexicographic order.
pub fn multiplicities_from_weights(table: &WeightTable, size: u32) -> BTreeMap<YoungDiagram, u64> {
    let mut found: Vec<(YoungDiagram, u64)> = Vec::new();
    for lambda in YoungDiagram::all(size, table.n()) {
        let content = Content(lambda.padded(table.n()));
        let mut rest = i128::from(table.get(&content.0));
        for (nu, mult) in &found {
            rest -= i128::from(*mult) * i128::from(kostka(nu, &content));
        }
        assert!(rest >= 0, "negative multiplicity at {lambda}");
        if rest > 0 {
            found.push((lambda, rest as u64));
        }
    }
    found.into_iter().collect()
}

/// Multiplicities of the irreducible constituents of `S^k(S^m(Cⁿ))` or `Λ^k(S^m(Cⁿ))`.
pub fn multiplicities_by_kostka_k(
    k: usize,
    m: u32,
    n: usize,
    variant: Variant,
) -> BTreeMap<YoungDiagram, u64> {
    let table = weight_table_power(k, m, n, variant);
    multiplicities_from_weights(&table, k as u32 * m)
}

/// Multiplicities of the irreducible constituents of `S³(S^m(Cⁿ))` or `Λ³(S^m(Cⁿ))`.
pub fn multiplicities_by_kostka(m: u32, n: usize, variant: Variant) -> BTreeMap<YoungDiagram, u64> {
    multiplicities_by_kostka_k(3, m, n, variant)
}

type Tensor = HashMap<Vec<usize>, BigInt>;

/// `E_{p,q}` on `S^m(Cⁿ)^{⊗3}`, moving one unit of exponent from `z_q` to `z_p`.
fn raise_tensor(
    t: &Tensor,
    p: usize,
    q: usize,
    monos: &[Vec<u32>],
    index: &HashMap<Vec<u32>, usize>,
) -> Tensor {
    let mut out: Tensor = HashMap::new();
    for (factors, c) in t {
        for slot in 0..factors.len() {
            let mono = &monos[factors[slot]];
            let e = mono[q];
            if e == 0 {
                continue;
            }
            let mut moved = mono.clone();
            moved[q] -= 1;
            moved[p] += 1;
            let mut key = factors.clone();
            key[slot] = index[&moved];
            *out.entry(key).or_insert_with(BigInt::zero) += c * BigInt::from(e);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn sign_of(perm: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Symmetrized (sym) or antisymmetrized (alt) tensor of the given factors.
fn orbit_tensor(factors: &[usize], variant: Variant) -> Tensor {
    let mut t: Tensor = HashMap::new();
    for perm in (0..factors.len()).permutations(factors.len()) {
        let key: Vec<usize> = perm.iter().map(|&i| factors[i]).collect();
        let s = match variant {
            Variant::Sym => 1,
            Variant::Alt => sign_of(&perm),
        };
        *t.entry(key).or_insert_with(BigInt::zero) += s;
    }
    t.retain(|_, v| !v.is_zero());
    t
}

/// Dimension of the joint kernel of the adjacent raising operators on the
/// weight-`D` subspace of `S³(S^m(Cⁿ))` or `Λ³(S^m(Cⁿ))`, which is the
/// multiplicity of `ρ^D`. Fails when that subspace exceeds `max_dim`.
pub fn hwv_kernel_multiplicity_bounded(
    m: u32,
    n: usize,
    diagram: &YoungDiagram,
    variant: Variant,
    max_dim: usize,
) -> Result<u64> {
    if diagram.size() != 3 * m || diagram.len() > n {
        return Ok(0);
    }
    let target = diagram.padded(n);
    let monos = monomials(m, n);
    let index: HashMap<Vec<u32>, usize> = monos
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();
    let basis: Vec<Vec<usize>> = index_tuples(3, monos.len(), variant)
        .into_iter()
        .filter(|t| add_weights(t.iter().map(|&i| &monos[i]), n) == target)
        .collect();
    if basis.len() > max_dim {
        return Err(Error::InstanceTooLarge {
            dim: basis.len(),
            bound: max_dim,
        });
    }
    if basis.is_empty() {
        return Ok(0);
    }
    let images: Vec<Vec<Tensor>> = basis
        .par_iter()
        .map(|t| {
            let v = orbit_tensor(t, variant);
            (0..n.saturating_sub(1))
                .map(|p| raise_tensor(&v, p, p + 1, &monos, &index))
                .collect()
        })
        .collect();
    let mut columns: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
    let mut rows = Vec::with_capacity(images.len());
    for image in &images {
        let mut row = Vec::new();
        for (p, t) in image.iter().enumerate() {
            for (key, c) in t {
                let next = columns.len();
                let j = *columns.entry((p, key.clone())).or_insert(next);
                row.push((j, c.clone()));
            }
        }
        rows.push(row);
    }
    let rank = linalg::sparse_rank(&rows, columns.len());
    Ok((basis.len() - rank) as u64)
}

/// [`hwv_kernel_multiplicity_bounded`] with the bound from `PLETHYSM_MAX_DIM`.
pub fn hwv_kernel_multiplicity(
    m: u32,
    n: usize,
    diagram: &YoungDiagram,
    variant: Variant,
) -> Result<u64> {
    hwv_kernel_multiplicity_bounded(m, n, diagram, variant, max_dim_from_env())
}

/// `C(a, b)`.
pub fn binomial(a: u64, b: u64) -> BigUint {
    num_integer::binomial(BigUint::from(a), BigUint::from(b))
}

/// `dim ρ^D_n` by the Weyl dimension formula; zero when `ℓ(D) > n`.
pub fn weyl_dimension(diagram: &YoungDiagram, n: usize) -> BigUint {
    if diagram.len() > n {
        return BigUint::zero();
    }
    let l: Vec<i64> = diagram.padded(n).iter().map(|&x| i64::from(x)).collect();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= BigUint::from((l[i] - l[j] + (j - i) as i64) as u64);
            den *= BigUint::from((j - i) as u64);
        }
    }
    num / den
}

/// `Σ_D mult_D · dim ρ^D_n`.
pub fn total_dimension(mults: &BTreeMap<YoungDiagram, u64>, n: usize) -> BigUint {
    mults
        .iter()
        .map(|(d, &c)| weyl_dimension(d, n) * BigUint::from(c))
        .sum()
}

/// `C(d+2, 3)` (sym) or `C(d, 3)` (alt) with `d = C(m+n−1, n−1)`.
pub fn expected_dimension(m: u32, n: usize, variant: Variant) -> BigUint {
    let d = binomial(u64::from(m) + n as u64 - 1, n as u64 - 1);
    let d: u64 = d.try_into().expect("desk-scale dimension");
    match variant {
        Variant::Sym => binomial(d + 2, 3),
        Variant::Alt => binomial(d, 3),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleMultiplicity {
    pub diagram: Vec<u32>,
    pub mult: u64,
}

/// JSON-exportable oracle result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub m: u32,
    pub n: usize,
    pub variant: Variant,
    pub multiplicities: Vec<OracleMultiplicity>,
}

impl OracleReport {
    pub fn by_kostka(m: u32, n: usize, variant: Variant) -> Self {
        let mults = multiplicities_by_kostka(m, n, variant);
        OracleReport {
            m,
            n,
            variant,
            multiplicities: mults
                .into_iter()
                .rev()
                .map(|(d, mult)| OracleMultiplicity {
                    diagram: d.padded(3.min(n).max(d.len())),
                    mult,
                })
                .collect(),
        }
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::enumerate_sst;

    fn diagram(p: &[u32]) -> YoungDiagram {
        YoungDiagram::new(p.to_vec()).unwrap()
    }

    #[test]
    fn monomial_lists() {
        assert_eq!(monomials(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(monomials(3, 3).len(), 10);
        assert_eq!(monomials(0, 4), vec![vec![0; 4]]);
    }

    #[test]
    fn weight_table_examples() {
        let sym = weight_table_plethysm(1, 3, Variant::Sym);
        assert_eq!(sym.get(&[1, 1, 1]), 1);
        assert_eq!(sym.get(&[3, 0, 0]), 1);
        assert_eq!(sym.get(&[2, 1, 0]), 1);
        let alt = weight_table_plethysm(1, 3, Variant::Alt);
        assert_eq!(alt.get(&[3, 0, 0]), 0);
        assert_eq!(alt.get(&[1, 1, 1]), 1);
        for m in 0..=4 {
            for n in 1..=4 {
                for v in [Variant::Sym, Variant::Alt] {
                    let t = weight_table_plethysm(m, n, v);
                    assert_eq!(BigUint::from(t.total()), expected_dimension(m, n, v));
                    assert!(t.iter().all(|(_, d)| d > 0));
                }
            }
        }
        assert_eq!(weight_table_tensor(2, 3).total(), 216);
    }

    #[test]
    fn weight_tables_are_symmetric() {
        let t = weight_table_plethysm(3, 4, Variant::Alt);
        for (w, d) in t.iter() {
            for perm in (0..4).permutations(4) {
                let pw: Vec<u32> = perm.iter().map(|&i| w.0[i]).collect();
                assert_eq!(t.get(&pw), d);
            }
        }
    }

    #[test]
    fn kostka_inversion_examples() {
        let sym2 = multiplicities_by_kostka(2, 3, Variant::Sym);
        let expected: BTreeMap<_, _> = [
            (diagram(&[6]), 1),
            (diagram(&[4, 2]), 1),
            (diagram(&[2, 2, 2]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(sym2, expected);
        let alt4 = multiplicities_by_kostka(4, 3, Variant::Alt);
        let shapes: Vec<String> = alt4.keys().rev().map(|d| d.to_string()).collect();
        assert_eq!(
            shapes,
            vec!["(10,1,1)", "(9,3)", "(8,3,1)", "(7,5)", "(7,4,1)", "(6,3,3)", "(5,5,2)"]
        );
        assert!(alt4.values().all(|&c| c == 1));
        let zero = multiplicities_by_kostka(0, 3, Variant::Sym);
        assert_eq!(
            zero.into_iter().collect::<Vec<_>>(),
            vec![(YoungDiagram::empty(), 1)]
        );
        assert!(multiplicities_by_kostka(0, 3, Variant::Alt).is_empty());
    }

    #[test]
    fn kernel_examples() {
        let k =
            |m, d: &[u32], v| hwv_kernel_multiplicity_bounded(m, 3, &diagram(d), v, 2000).unwrap();
        assert_eq!(k(3, &[4, 4, 1], Variant::Sym), 1);
        assert_eq!(k(1, &[1, 1, 1], Variant::Sym), 0);
        assert_eq!(k(1, &[1, 1, 1], Variant::Alt), 1);
        assert_eq!(k(2, &[4, 1], Variant::Sym), 0);
        assert_eq!(k(2, &[4, 2], Variant::Sym), 1);
        assert!(matches!(
            hwv_kernel_multiplicity_bounded(3, 3, &diagram(&[5, 2, 2]), Variant::Sym, 1),
            Err(Error::InstanceTooLarge { bound: 1, .. })
        ));
    }

    #[test]
    fn oracles_agree_small() {
        for m in 0..=2 {
            for n in [3, 4] {
                for v in [Variant::Sym, Variant::Alt] {
                    let by_k = multiplicities_by_kostka(m, n, v);
                    for d in YoungDiagram::all(3 * m, n) {
                        let kern = hwv_kernel_multiplicity_bounded(m, n, &d, v, 2000).unwrap();
                        assert_eq!(kern, by_k.get(&d).copied().unwrap_or(0), "{m} {n} {v} {d}");
                    }
                }
            }
        }
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dimension(&diagram(&[1]), 3), BigUint::from(3u32));
        assert_eq!(weyl_dimension(&diagram(&[2, 1]), 3), BigUint::from(8u32));
        assert_eq!(weyl_dimension(&diagram(&[1, 1, 1]), 3), BigUint::from(1u32));
        assert_eq!(weyl_dimension(&diagram(&[1, 1, 1]), 2), BigUint::zero());
        assert_eq!(weyl_dimension(&diagram(&[3]), 4), BigUint::from(20u32));
        for n in 1..=5 {
            let shapes = YoungDiagram::all(3, n);
            let total: BigUint = shapes
                .iter()
                .map(|d| {
                    let sst = enumerate_sst(d, &Content(vec![1, 1, 1])).len();
                    weyl_dimension(d, n) * BigUint::from(sst)
                })
                .sum();
            assert_eq!(total, BigUint::from((n * n * n) as u64));
        }
    }

    #[test]
    fn dimension_conservation() {
        for m in 0..=3 {
            for n in [2, 3, 4] {
                for v in [Variant::Sym, Variant::Alt] {
                    let mults = multiplicities_by_kostka(m, n, v);
                    assert_eq!(total_dimension(&mults, n), expected_dimension(m, n, v));
                }
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(2, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn json_export() {
        let r = OracleReport::by_kostka(2, 3, Variant::Alt);
        let v: serde_json::Value = serde_json::from_str(&r.to_json_pretty()).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "m": 2, "n": 3, "variant": "alt",
                "multiplicities": [
                    {"diagram": [4, 1, 1], "mult": 1},
                    {"diagram": [3, 3, 0], "mult": 1}
                ]
            })
        );
        let back: OracleReport = serde_json::from_str(&r.to_json_pretty()).unwrap();
        assert_eq!(back, r);
    }
}
