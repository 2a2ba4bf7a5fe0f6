//! Young diagrams, semistandard tableaux, Kostka numbers and the standard
//! monomials `δ_T` built from column minors.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, VarId};

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct YoungDiagram {
    parts: Vec<u32>,
}

impl YoungDiagram {
    /// Accepts trailing zeros (they are dropped) but rejects increasing parts.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadShape(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::BadShape(format!("{parts:?} has an interior zero")));
        }
        Ok(YoungDiagram { parts })
    }

    pub fn empty() -> Self {
        YoungDiagram { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Row lengths padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Vec<u32> {
        let width = self.parts.first().copied().unwrap_or(0);
        (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect()
    }

    /// All partitions of `size` with at most `max_rows` rows, in decreasing
    /// lexicographic order.
    pub fn all(size: u32, max_rows: usize) -> Vec<YoungDiagram> {
        fn rec(rest: u32, cap: u32, rows: usize, cur: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
            if rest == 0 {
                out.push(YoungDiagram { parts: cur.clone() });
                return;
            }
            if rows == 0 {
                return;
            }
            for p in (1..=rest.min(cap)).rev() {
                cur.push(p);
                rec(rest - p, p, rows - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, max_rows, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<u32>> for YoungDiagram {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        YoungDiagram::new(v)
    }
}

impl From<YoungDiagram> for Vec<u32> {
    fn from(d: YoungDiagram) -> Vec<u32> {
        d.parts
    }
}

/// Decreasing lexicographic order is the reverse of this ordering.
impl Ord for YoungDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl PartialOrd for YoungDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "({})", self.parts.iter().join(","))
    }
}

impl std::str::FromStr for YoungDiagram {
    type Err = Error;

    /// Parses `9,6` or `(9,6)`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_u32_list(s)?;
        YoungDiagram::new(parts)
    }
}

pub(crate) fn parse_u32_list(s: &str) -> Result<Vec<u32>> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    if inner.trim().is_empty() {
        return Ok(vec![]);
    }
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::BadShape(format!("cannot parse {t:?} in {s:?}")))
        })
        .collect()
}

/// Multiplicities of the letters `1..=k` in a filling.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Content(pub Vec<u32>);

impl Content {
    /// `(m, m, ..., m)` with `k` entries.
    pub fn rectangular(m: u32, k: usize) -> Self {
        Content(vec![m; k])
    }

    pub fn letters(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl std::str::FromStr for Content {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Content(parse_u32_list(s)?))
    }
}

/// A filling stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Validates shape and semistandardness; entries must be positive.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = YoungDiagram::new(rows.iter().map(|r| r.len() as u32).collect())?;
        if shape.len() != rows.len() {
            return Err(Error::BadShape("tableau has an empty row".into()));
        }
        let t = Tableau { rows };
        if !t.is_semistandard() {
            return Err(Error::BadShape(format!("{t} is not semistandard")));
        }
        Ok(t)
    }

    fn is_semistandard(&self) -> bool {
        let rows_ok = self
            .rows
            .iter()
            .all(|r| r.iter().all(|&e| e >= 1) && r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| lo > hi));
        rows_ok && cols_ok
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram {
            parts: self.rows.iter().map(|r| r.len() as u32).collect(),
        }
    }

    pub fn content(&self, k: usize) -> Content {
        let mut c = vec![0; k];
        for &e in self.rows.iter().flatten() {
            c[e as usize - 1] += 1;
        }
        Content(c)
    }

    /// Entries of column `j` (0-based), top to bottom.
    pub fn column(&self, j: usize) -> Vec<u32> {
        self.rows
            .iter()
            .take_while(|r| r.len() > j)
            .map(|r| r[j])
            .collect()
    }

    pub fn num_columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }
}

impl TryFrom<Vec<Vec<u32>>> for Tableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<u32>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.rows
                .iter()
                .map(|r| format!("[{}]", r.iter().join(",")))
                .join(",")
        )
    }
}

/// All semistandard tableaux of shape `shape` and content `content`, sorted by
/// their row reading (row 1 left to right, then row 2, ...).
///
/// Boxes are filled column by column, top to bottom, each entry bounded below
/// by its left neighbour and strictly by the entry above.
pub fn enumerate_sst(shape: &YoungDiagram, content: &Content) -> Vec<Tableau> {
    let k = content.letters();
    if shape.len() > k || shape.size() != content.size() {
        return vec![];
    }
    let cols = shape.conjugate();
    let boxes: Vec<(usize, usize)> = cols
        .iter()
        .enumerate()
        .flat_map(|(j, &h)| (0..h as usize).map(move |i| (i, j)))
        .collect();
    let mut grid: Vec<Vec<u32>> = shape.parts.iter().map(|&p| vec![0; p as usize]).collect();
    let mut remaining = content.0.clone();
    let mut out = Vec::new();

    fn fill(
        idx: usize,
        boxes: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        remaining: &mut Vec<u32>,
        out: &mut Vec<Tableau>,
    ) {
        if idx == boxes.len() {
            out.push(Tableau { rows: grid.clone() });
            return;
        }
        let (i, j) = boxes[idx];
        let left = if j > 0 { grid[i][j - 1] } else { 1 };
        let above = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
        let lo = left.max(above);
        for v in lo..=remaining.len() as u32 {
            if remaining[v as usize - 1] == 0 {
                continue;
            }
            remaining[v as usize - 1] -= 1;
            grid[i][j] = v;
            fill(idx + 1, boxes, grid, remaining, out);
            grid[i][j] = 0;
            remaining[v as usize - 1] += 1;
        }
    }

    fill(0, &boxes, &mut grid, &mut remaining, &mut out);
    out.sort();
    out
}

/// `|SST(shape, content)|`, counted by peeling off the largest letter as a
/// horizontal strip. Independent of [`enumerate_sst`].
pub fn kostka(shape: &YoungDiagram, content: &Content) -> u64 {
    if shape.size() != content.size() || shape.len() > content.letters() {
        return 0;
    }
    let mut memo = HashMap::new();
    kostka_rec(&shape.parts, &content.0, &mut memo)
}

fn kostka_rec(shape: &[u32], content: &[u32], memo: &mut HashMap<(Vec<u32>, usize), u64>) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.is_empty());
    };
    if shape.len() > content.len() {
        return 0;
    }
    let key = (shape.to_vec(), content.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    // inner shapes ν with shape/ν a horizontal strip of size `last`:
    // shape[i+1] <= ν[i] <= shape[i]
    let mut total = 0;
    let mut inner = vec![0u32; shape.len()];
    strips(shape, 0, last, &mut inner, &mut |nu| {
        let trimmed: Vec<u32> = nu.iter().copied().filter(|&p| p > 0).collect();
        total += kostka_rec(&trimmed, rest, memo);
    });
    memo.insert(key, total);
    total
}

fn strips(
    shape: &[u32],
    i: usize,
    remove: u32,
    inner: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]),
) {
    if i == shape.len() {
        if remove == 0 {
            visit(inner);
        }
        return;
    }
    let floor = shape.get(i + 1).copied().unwrap_or(0);
    let max_take = (shape[i] - floor).min(remove);
    for take in 0..=max_take {
        inner[i] = shape[i] - take;
        strips(shape, i + 1, remove - take, inner, visit);
    }
}

/// `δ_T`: the product over columns of `T` of the minors on the top rows and
/// the columns listed in that column of `T`.
pub fn delta_tableau(t: &Tableau, n: usize) -> Result<Polynomial> {
    if t.rows.len() > n {
        return Err(Error::ShapeTooTall {
            rows: t.rows.len(),
            n,
        });
    }
    let mut cache: HashMap<Vec<u32>, (Polynomial, u32)> = HashMap::new();
    for j in 0..t.num_columns() {
        let col = t.column(j);
        cache
            .entry(col.clone())
            .or_insert_with(|| {
                let idx: Vec<usize> = col.iter().map(|&c| c as usize).collect();
                (Polynomial::top_minor(&idx), 0)
            })
            .1 += 1;
    }
    Ok(cache
        .into_values()
        .map(|(minor, mult)| minor.pow(mult))
        .product())
}

/// `m_T = ∏ x_{ij}^{e_ij}` where `e_ij` counts the entries `j` in row `i`.
pub fn monomial_m_t(t: &Tableau) -> Monomial {
    Monomial::from_exponents(
        t.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |&e| (VarId::new(i + 1, e as usize), 1))),
    )
}

/// `[δ_T : T ∈ SST(D, (m^k))]`.
pub fn standard_monomial_basis(m: u32, shape: &YoungDiagram, k: usize) -> Vec<Polynomial> {
    enumerate_sst(shape, &Content::rectangular(m, k))
        .iter()
        .map(|t| delta_tableau(t, t.rows.len()).expect("n chosen as the row count"))
        .collect()
}

/// The homomorphism `x_{ij} ↦ z_j^{i-1}`, where `z_j` is represented as the
/// variable `x[1][j]` of a one-row ring.
pub fn specht_map(f: &Polynomial) -> Polynomial {
    f.map_monomials(|m| {
        Monomial::from_exponents(
            m.iter()
                .map(|(v, e)| (VarId::new(1, v.col()), (v.row() as u32 - 1) * e)),
        )
    })
}

/// `∏_columns ∏_{p<q} (z_{T(q)} − z_{T(p)})` in the one-row ring.
pub fn specht_polynomial(t: &Tableau) -> Polynomial {
    let z = |c: u32| Polynomial::var(1, c as usize);
    (0..t.num_columns())
        .flat_map(|j| {
            let col = t.column(j);
            col.iter()
                .enumerate()
                .flat_map(|(p, &lo)| col[p + 1..].iter().map(move |&hi| (lo, hi)))
                .collect::<Vec<_>>()
        })
        .map(|(lo, hi)| &z(hi) - &z(lo))
        .product()
}
