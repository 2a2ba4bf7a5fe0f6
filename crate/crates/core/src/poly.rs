//! Sparse multivariate polynomials with integer coefficients in the matrix
//! variables `x[i][j]` (row `i`, column `j`, both 1-based).
//!
//! Variables are ordered `x[1][1] > x[2][1] > ... > x[n][1] > x[1][2] > ...`,
//! i.e. column-major with earlier columns and, within a column, earlier rows
//! being larger. Monomials are compared in the graded lexicographic order built
//! on that variable order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The variable `x[row][col]`.
///
/// The derived ordering compares `(col, row)`, which is the storage key: a
/// smaller key is a *larger* variable in the monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId {
    col: u16,
    row: u16,
}

impl VarId {
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "variables are 1-based");
        VarId {
            row: row as u16,
            col: col as u16,
        }
    }

    pub fn row(self) -> usize {
        self.row as usize
    }

    pub fn col(self) -> usize {
        self.col as usize
    }

    /// Compares two variables in the monomial order (`Greater` means larger).
    pub fn order_cmp(self, other: VarId) -> Ordering {
        other.cmp(&self)
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{}][{}]", self.row, self.col)
    }
}

/// Shape of the `n × k` matrix of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MatrixShape {
    pub n: usize,
    pub k: usize,
}

impl MatrixShape {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::Invalid(format!(
                "matrix shape {n}x{k} must be nonempty"
            )));
        }
        Ok(MatrixShape { n, k })
    }

    pub fn contains(&self, v: VarId) -> bool {
        v.row() <= self.n && v.col() <= self.k
    }

    /// All variables in decreasing monomial order.
    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        (1..=self.k).flat_map(move |j| (1..=self.n).map(move |i| VarId::new(i, j)))
    }
}

/// Per-column degree vector of a multihomogeneous polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColumnDegree(pub Vec<u32>);

/// Per-row degree vector, i.e. the torus weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RowWeight(pub Vec<u32>);

impl RowWeight {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Drops trailing zeros, so `(4,2,0)` and `(4,2)` compare equal.
    pub fn trimmed(&self) -> &[u32] {
        let end = self.0.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        &self.0[..end]
    }
}

/// A monomial `∏ x_v^{e_v}` with only positive exponents stored, sorted by
/// variable key.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exps: Vec<(VarId, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Self {
        Monomial {
            degree: 1,
            exps: vec![(v, 1)],
        }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs; repeated
    /// variables are merged and zero exponents dropped.
    pub fn from_exponents(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Self {
        let mut exps: Vec<(VarId, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_unstable_by_key(|&(v, _)| v);
        let mut merged: Vec<(VarId, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => merged.push((v, e)),
            }
        }
        let degree = merged.iter().map(|&(_, e)| e).sum();
        Monomial {
            degree,
            exps: merged,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map_or(0, |i| self.exps[i].1)
    }

    /// `(variable, exponent)` pairs from the largest variable down.
    pub fn iter(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.exps, &other.exps);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    exps.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&a[i..]);
        exps.extend_from_slice(&b[j..]);
        Monomial {
            degree: self.degree + other.degree,
            exps,
        }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial {
            degree: self.degree * e,
            exps: self.exps.iter().map(|&(v, f)| (v, f * e)).collect(),
        }
    }

    /// Lowers the exponent of `v` by one; `None` if `v` does not occur.
    pub fn lower(&self, v: VarId) -> Option<(Monomial, u32)> {
        let pos = self.exps.binary_search_by_key(&v, |&(w, _)| w).ok()?;
        let e = self.exps[pos].1;
        let mut exps = self.exps.clone();
        if e == 1 {
            exps.remove(pos);
        } else {
            exps[pos].1 -= 1;
        }
        Some((
            Monomial {
                degree: self.degree - 1,
                exps,
            },
            e,
        ))
    }

    /// Applies a variable relabelling.
    pub fn map_vars(&self, mut f: impl FnMut(VarId) -> VarId) -> Monomial {
        Monomial::from_exponents(self.exps.iter().map(|&(v, e)| (f(v), e)))
    }

    pub fn column_degree(&self, k: usize) -> ColumnDegree {
        let mut out = vec![0; k];
        for &(v, e) in &self.exps {
            out[v.col() - 1] += e;
        }
        ColumnDegree(out)
    }

    pub fn row_weight(&self, n: usize) -> RowWeight {
        let mut out = vec![0; n];
        for &(v, e) in &self.exps {
            out[v.row() - 1] += e;
        }
        RowWeight(out)
    }
}

/// Graded lexicographic comparison: total degree first, then the exponent of
/// the largest variable on which the two monomials differ.
pub fn mono_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree.cmp(&b.degree).then_with(|| {
        for (&(va, ea), &(vb, eb)) in a.exps.iter().zip(&b.exps) {
            if va != vb {
                // the monomial containing the larger variable wins
                return vb.cmp(&va);
            }
            if ea != eb {
                return ea.cmp(&eb);
            }
        }
        a.exps.len().cmp(&b.exps.len())
    })
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        mono_cmp(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (i, &(v, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial with arbitrary-precision integer coefficients. Zero
/// coefficients are never stored; the zero polynomial has no terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Polynomial::monomial(Monomial::one(), c)
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// The single variable `x[row][col]`.
    pub fn var(row: usize, col: usize) -> Self {
        Polynomial::monomial(Monomial::var(VarId::new(row, col)), 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_default() += c;
        }
        Polynomial::from_accumulator(acc)
    }

    fn from_accumulator(acc: HashMap<Monomial, BigInt>) -> Self {
        Polynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// The determinant of the submatrix on rows `1..=cols.len()` and the given
    /// columns, in the given column order.
    pub fn top_minor(cols: &[usize]) -> Self {
        let s = cols.len();
        let mut terms = Vec::new();
        for perm in (0..s).permutations(s) {
            let sign = permutation_sign(&perm);
            let m = Monomial::from_exponents(
                perm.iter()
                    .enumerate()
                    .map(|(r, &c)| (VarId::new(r + 1, cols[c]), 1)),
            );
            terms.push((m, BigInt::from(sign)));
        }
        Polynomial::from_terms(terms)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_monomial(&self) -> Result<(&Monomial, &BigInt)> {
        self.terms.iter().next_back().ok_or(Error::ZeroPolynomial)
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Ring homomorphism sending each variable in `images` to its image.
    /// Variables without an entry are left fixed.
    pub fn substitute(&self, images: &HashMap<VarId, Polynomial>) -> Polynomial {
        let mut powers: HashMap<(VarId, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut fixed = Vec::new();
            let mut term = Polynomial::constant(c.clone());
            for (v, e) in m.iter() {
                match images.get(&v) {
                    Some(img) => {
                        let p = powers.entry((v, e)).or_insert_with(|| img.pow(e));
                        term = &term * &*p;
                    }
                    None => fixed.push((v, e)),
                }
            }
            if !fixed.is_empty() {
                term = term.mul_monomial(&Monomial::from_exponents(fixed), &BigInt::one());
            }
            out += &term;
        }
        out
    }

    pub fn partial_derivative(&self, v: VarId) -> Polynomial {
        let mut acc = HashMap::new();
        for (m, c) in &self.terms {
            if let Some((lowered, e)) = m.lower(v) {
                *acc.entry(lowered).or_insert_with(BigInt::zero) += c * BigInt::from(e);
            }
        }
        Polynomial::from_accumulator(acc)
    }

    /// Relabels variables termwise. The relabelling must be injective on the
    /// variables of `self`.
    pub fn map_vars(&self, mut f: impl FnMut(VarId) -> VarId) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.map_vars(&mut f), c.clone()))
                .collect(),
        }
    }

    /// Applies `f` to every monomial and sums; use when the map may merge terms.
    pub fn map_monomials(&self, mut f: impl FnMut(&Monomial) -> Monomial) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    pub fn column_degree(&self, k: usize) -> Result<ColumnDegree> {
        let mut it = self.terms.keys();
        let first = it.next().ok_or(Error::ZeroPolynomial)?.column_degree(k);
        if it.all(|m| m.column_degree(k) == first) {
            Ok(first)
        } else {
            Err(Error::NotMultihomogeneous)
        }
    }

    pub fn row_weight(&self, n: usize) -> Result<RowWeight> {
        let mut it = self.terms.keys();
        let first = it.next().ok_or(Error::ZeroPolynomial)?.row_weight(n);
        if it.all(|m| m.row_weight(n) == first) {
            Ok(first)
        } else {
            Err(Error::NotIsobaric)
        }
    }

    /// Largest row and column index occurring in any term.
    pub fn extent(&self) -> (usize, usize) {
        self.terms
            .keys()
            .flat_map(|m| m.iter())
            .fold((0, 0), |(r, c), (v, _)| (r.max(v.row()), c.max(v.col())))
    }
}

fn permutation_sign(perm: &[usize]) -> i32 {
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

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let abs = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            match self.terms.get_mut(m) {
                Some(d) => {
                    *d += c;
                    if d.is_zero() {
                        self.terms.remove(m);
                    }
                }
                None => {
                    self.terms.insert(m.clone(), c.clone());
                }
            }
        }
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let (small, large) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        if small.len() == 1 {
            let (m, c) = small.terms.iter().next().unwrap();
            return large.mul_monomial(m, c);
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(small.len().saturating_mul(large.len()).min(1 << 20));
        for (m, c) in &small.terms {
            for (n, d) in &large.terms {
                *acc.entry(m.mul(n)).or_default() += c * d;
            }
        }
        Polynomial::from_accumulator(acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        let mut out = Polynomial::zero();
        for p in iter {
            out += &p;
        }
        out
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::one(), |acc, p| &acc * &p)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    exps: Vec<[u32; 3]>,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms()
            .map(|(m, c)| TermJson {
                coeff: c.to_string(),
                exps: m
                    .iter()
                    .map(|(v, e)| [v.row() as u32, v.col() as u32, e])
                    .collect(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let terms = Vec::<TermJson>::deserialize(d)?;
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            let c: BigInt = t.coeff.parse().map_err(D::Error::custom)?;
            if t.exps.iter().any(|&[i, j, _]| i == 0 || j == 0) {
                return Err(D::Error::custom("variable indices are 1-based"));
            }
            let m = Monomial::from_exponents(
                t.exps
                    .iter()
                    .map(|&[i, j, e]| (VarId::new(i as usize, j as usize), e)),
            );
            out.push((m, c));
        }
        Ok(Polynomial::from_terms(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(i: usize, j: usize) -> Polynomial {
        Polynomial::var(i, j)
    }

    fn delta12() -> Polynomial {
        &x(1, 1) * &x(2, 2) - &x(2, 1) * &x(1, 2)
    }

    fn mono(pairs: &[(usize, usize, u32)]) -> Monomial {
        Monomial::from_exponents(pairs.iter().map(|&(i, j, e)| (VarId::new(i, j), e)))
    }

    #[test]
    fn variable_order() {
        let n = 4;
        let vars: Vec<Monomial> = MatrixShape::new(n, 3)
            .unwrap()
            .vars()
            .map(Monomial::var)
            .collect();
        for w in vars.windows(2) {
            assert_eq!(
                mono_cmp(&w[0], &w[1]),
                Ordering::Greater,
                "{} vs {}",
                w[0],
                w[1]
            );
        }
        assert!(mono(&[(1, 1, 1)]) > mono(&[(2, 1, 1)]));
        assert!(mono(&[(4, 1, 1)]) > mono(&[(1, 2, 1)]));
        assert!(mono(&[(1, 1, 1), (2, 2, 1)]) > mono(&[(1, 1, 1)]));
    }

    #[test]
    fn lex_tiebreak_on_exponent() {
        // x11^2 x23 > x11 x12 x13 (same degree, larger x11 exponent)
        assert!(mono(&[(1, 1, 2), (2, 3, 1)]) > mono(&[(1, 1, 1), (1, 2, 1), (1, 3, 1)]));
        // x11 x21 > x11 x12
        assert!(mono(&[(1, 1, 1), (2, 1, 1)]) > mono(&[(1, 1, 1), (1, 2, 1)]));
    }

    #[test]
    fn arithmetic_identities() {
        let f = &delta12() + &x(3, 2);
        assert_eq!(&f * &Polynomial::one(), f);
        assert_eq!(f.pow(0), Polynomial::one());
        assert!((&f - &f).is_zero());
        let sq = delta12().pow(2);
        let (lm, c) = sq.leading_monomial().unwrap();
        assert_eq!(*lm, mono(&[(1, 1, 2), (2, 2, 2)]));
        assert_eq!(*c, BigInt::from(1));
        assert_eq!(sq.len(), 3);
    }

    #[test]
    fn leading_monomial_of_zero_is_an_error() {
        assert_eq!(
            Polynomial::zero().leading_monomial().unwrap_err(),
            Error::ZeroPolynomial
        );
        assert_eq!(
            Polynomial::zero().column_degree(3).unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn substitution_examples() {
        let f = &delta12() * &x(1, 1);
        assert_eq!(f.substitute(&HashMap::new()), f);
        let mut img = HashMap::new();
        img.insert(VarId::new(1, 1), &x(1, 1) + &x(2, 1));
        assert_eq!(x(1, 1).substitute(&img), &x(1, 1) + &x(2, 1));

        let mut swap = HashMap::new();
        for i in 1..=2 {
            swap.insert(VarId::new(i, 1), x(i, 2));
            swap.insert(VarId::new(i, 2), x(i, 1));
        }
        assert_eq!(delta12().substitute(&swap), -delta12());
    }

    #[test]
    fn derivative_examples() {
        let v11 = VarId::new(1, 1);
        assert_eq!(
            x(1, 1).pow(2).partial_derivative(v11),
            x(1, 1).scale(&BigInt::from(2))
        );
        assert!(x(1, 1).partial_derivative(VarId::new(2, 1)).is_zero());
        assert_eq!(delta12().partial_derivative(VarId::new(2, 1)), -x(1, 2));
    }

    #[test]
    fn gradings() {
        let alpha1 = &(&x(1, 1) * &x(1, 2)) * &x(1, 3);
        assert_eq!(
            alpha1.column_degree(3).unwrap(),
            ColumnDegree(vec![1, 1, 1])
        );
        assert_eq!(
            (&x(1, 1) + &x(1, 2)).column_degree(2).unwrap_err(),
            Error::NotMultihomogeneous
        );
        assert_eq!(
            (&x(1, 1) + &x(2, 1)).row_weight(2).unwrap_err(),
            Error::NotIsobaric
        );
        assert_eq!(delta12().row_weight(3).unwrap(), RowWeight(vec![1, 1, 0]));
        assert_eq!(RowWeight(vec![4, 2, 0]).trimmed(), &[4, 2]);
    }

    #[test]
    fn top_minor_matches_delta() {
        assert_eq!(Polynomial::top_minor(&[1, 2]), delta12());
        assert_eq!(Polynomial::top_minor(&[2, 1]), -delta12());
        assert_eq!(Polynomial::top_minor(&[1, 2, 3]).len(), 6);
        assert_eq!(Polynomial::top_minor(&[]), Polynomial::one());
    }

    #[test]
    fn rendering() {
        assert_eq!(delta12().to_string(), "x[1][1]*x[2][2] - x[2][1]*x[1][2]");
        let f = &x(1, 1).pow(2).scale(&BigInt::from(-3)) + &Polynomial::constant(5);
        assert_eq!(f.to_string(), "-3*x[1][1]^2 + 5");
        assert_eq!(Polynomial::zero().to_string(), "0");
        let json = serde_json::to_string(&delta12()).unwrap();
        assert_eq!(
            json,
            r#"[{"coeff":"1","exps":[[1,1,1],[2,2,1]]},{"coeff":"-1","exps":[[2,1,1],[1,2,1]]}]"#
        );
    }

    fn arb_monomial() -> impl Strategy<Value = Monomial> {
        prop::collection::vec((1usize..=3, 1usize..=3, 0u32..3), 0..4).prop_map(|v| {
            Monomial::from_exponents(v.into_iter().map(|(i, j, e)| (VarId::new(i, j), e)))
        })
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((arb_monomial(), -4i64..=4), 0..6)
            .prop_map(|v| Polynomial::from_terms(v.into_iter().map(|(m, c)| (m, BigInt::from(c)))))
    }

    proptest! {
        #[test]
        fn order_is_total_and_consistent(a in arb_monomial(), b in arb_monomial(), c in arb_monomial()) {
            prop_assert_eq!(mono_cmp(&a, &b), mono_cmp(&b, &a).reverse());
            prop_assert_eq!(mono_cmp(&a, &b) == Ordering::Equal, a == b);
            // multiplicative: a < b implies ac < bc
            prop_assert_eq!(mono_cmp(&a.mul(&c), &b.mul(&c)), mono_cmp(&a, &b));
        }

        #[test]
        fn leading_monomial_is_multiplicative(f in arb_poly(), g in arb_poly()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let (lf, cf) = f.leading_monomial().unwrap();
            let (lg, cg) = g.leading_monomial().unwrap();
            let fg = &f * &g;
            let (l, c) = fg.leading_monomial().unwrap();
            prop_assert_eq!(l.clone(), lf.mul(lg));
            prop_assert_eq!(c.clone(), cf * cg);
        }

        #[test]
        fn ring_axioms(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            prop_assert_eq!(&f + &g, &g + &f);
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        }

        #[test]
        fn substitution_is_a_homomorphism(f in arb_poly(), g in arb_poly(), imgs in prop::collection::vec(arb_poly(), 9)) {
            let mut sigma = HashMap::new();
            for (idx, p) in imgs.into_iter().enumerate() {
                sigma.insert(VarId::new(idx % 3 + 1, idx / 3 + 1), p);
            }
            prop_assert_eq!((&f * &g).substitute(&sigma), &f.substitute(&sigma) * &g.substitute(&sigma));
            prop_assert_eq!((&f + &g).substitute(&sigma), &f.substitute(&sigma) + &g.substitute(&sigma));
        }

        #[test]
        fn leibniz_rule(f in arb_poly(), g in arb_poly(), i in 1usize..=3, j in 1usize..=3) {
            let v = VarId::new(i, j);
            let lhs = (&f * &g).partial_derivative(v);
            let rhs = &(&f * &g.partial_derivative(v)) + &(&g * &f.partial_derivative(v));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn gradings_are_additive(a in arb_monomial(), b in arb_monomial(), c1 in 1i64..5, c2 in 1i64..5) {
            let f = Polynomial::monomial(a.clone(), c1);
            let g = Polynomial::monomial(b.clone(), c2);
            let fg = &f * &g;
            let cd = |p: &Polynomial| p.column_degree(3).unwrap().0;
            let rw = |p: &Polynomial| p.row_weight(3).unwrap().0;
            let sum = |x: Vec<u32>, y: Vec<u32>| x.iter().zip(&y).map(|(a, b)| a + b).collect::<Vec<_>>();
            prop_assert_eq!(cd(&fg), sum(cd(&f), cd(&g)));
            prop_assert_eq!(rw(&fg), sum(rw(&f), rw(&g)));
        }

        #[test]
        fn json_round_trip(f in arb_poly()) {
            let s = serde_json::to_string(&f).unwrap();
            let back: Polynomial = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
