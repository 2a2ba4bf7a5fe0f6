//! Group actions on polynomials: column permutations by `S_k`, the unipotent
//! group `U_n` through its raising operators, and the diagonal torus.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, VarId};

/// A permutation of `{1, ..., k}` stored as its list of images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &i in &images {
            if i == 0 || i > k || seen[i - 1] {
                return Err(Error::Invalid(format!("{images:?} is not a permutation")));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(k: usize) -> Self {
        Permutation {
            images: (1..=k).collect(),
        }
    }

    /// The transposition swapping `i` and `j`.
    pub fn transposition(k: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (1..=k).collect();
        images.swap(i - 1, j - 1);
        Permutation { images }
    }

    /// All `k!` permutations in lexicographic order of their image lists.
    pub fn all(k: usize) -> Vec<Permutation> {
        (1..=k)
            .permutations(k)
            .map(|images| Permutation { images })
            .collect()
    }

    /// Adjacent transpositions `(i, i+1)`, which generate `S_k`.
    pub fn coxeter_generators(k: usize) -> Vec<Permutation> {
        (1..k)
            .map(|i| Permutation::transposition(k, i, i + 1))
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn sign(&self) -> i32 {
        let mut visited = vec![false; self.images.len()];
        let mut sign = 1;
        for start in 0..self.images.len() {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = self.images[i] - 1;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(" "))
    }
}

/// `τ.x_{ij} = x_{iτ(j)}`, extended to an algebra automorphism.
///
/// Columns beyond the permutation's degree are left fixed.
pub fn permute_columns(f: &Polynomial, tau: &Permutation) -> Polynomial {
    let k = tau.degree();
    f.map_vars(|v| {
        if v.col() <= k {
            VarId::new(v.row(), tau.apply(v.col()))
        } else {
            v
        }
    })
}

/// `Σ_τ τ.f` over `S_k`, without normalisation.
pub fn symmetrize(f: &Polynomial, k: usize) -> Polynomial {
    Permutation::all(k)
        .iter()
        .map(|tau| permute_columns(f, tau))
        .sum()
}

/// `Σ_τ sgn(τ) τ.f` over `S_k`, without normalisation.
pub fn antisymmetrize(f: &Polynomial, k: usize) -> Polynomial {
    Permutation::all(k)
        .iter()
        .map(|tau| {
            let g = permute_columns(f, tau);
            if tau.sign() < 0 {
                -g
            } else {
                g
            }
        })
        .sum()
}

/// Index pair `(p, q)` with `p < q` naming the raising operator
/// `Σ_j x_{pj} ∂/∂x_{qj}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RaisingOperatorIndex {
    p: usize,
    q: usize,
}

impl RaisingOperatorIndex {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p == 0 || p >= q {
            return Err(Error::Invalid(format!(
                "raising operator needs 1 <= p < q, got ({p}, {q})"
            )));
        }
        Ok(RaisingOperatorIndex { p, q })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }
}

/// Infinitesimal action of `I + c·E_{pq}`, which substitutes
/// `x_{qj} ↦ x_{qj} + c·x_{pj}`: the result is `Σ_j x_{pj} ∂f/∂x_{qj}`.
pub fn raising_apply(f: &Polynomial, idx: RaisingOperatorIndex) -> Polynomial {
    let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
    for (m, c) in f.terms() {
        for (v, e) in m.iter() {
            if v.row() != idx.q {
                continue;
            }
            let moved = VarId::new(idx.p, v.col());
            let (lowered, _) = m.lower(v).expect("variable occurs");
            let raised = lowered.mul(&Monomial::var(moved));
            *acc.entry(raised).or_insert_with(BigInt::zero) += c * BigInt::from(e);
        }
    }
    Polynomial::from_terms(acc)
}

/// The finite group element `I + c·E_{pq}` acting by substitution.
pub fn unipotent_substitute(f: &Polynomial, idx: RaisingOperatorIndex, c: i64) -> Polynomial {
    let (_, k) = f.extent();
    let images: HashMap<VarId, Polynomial> = (1..=k)
        .map(|j| {
            let img =
                &Polynomial::var(idx.q, j) + &Polynomial::var(idx.p, j).scale(&BigInt::from(c));
            (VarId::new(idx.q, j), img)
        })
        .collect();
    f.substitute(&images)
}

/// True iff every adjacent raising operator `(i, i+1)`, `1 <= i < n`, kills `f`.
pub fn is_un_invariant(f: &Polynomial, n: usize) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok((1..n).all(|i| raising_apply(f, RaisingOperatorIndex { p: i, q: i + 1 }).is_zero()))
}

pub fn is_sk_invariant(f: &Polynomial, k: usize) -> bool {
    Permutation::coxeter_generators(k)
        .iter()
        .all(|tau| permute_columns(f, tau) == *f)
}

/// Checks `τ.f = sgn(τ) f` on the Coxeter generators.
pub fn is_sign_equivariant(f: &Polynomial, k: usize) -> bool {
    let neg = -f;
    Permutation::coxeter_generators(k)
        .iter()
        .all(|tau| permute_columns(f, tau) == neg)
}

/// Torus action `t.x_{ij} = t_i x_{ij}`.
pub fn torus_apply(f: &Polynomial, t: &[i64]) -> Polynomial {
    Polynomial::from_terms(f.terms().map(|(m, c)| {
        let scale = m.iter().fold(BigInt::from(1), |acc, (v, e)| {
            acc * BigInt::from(t[v.row() - 1]).pow(e)
        });
        (m.clone(), c * scale)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RowWeight;
    use proptest::prelude::*;

    fn x(i: usize, j: usize) -> Polynomial {
        Polynomial::var(i, j)
    }

    fn alpha1() -> Polynomial {
        &(&x(1, 1) * &x(1, 2)) * &x(1, 3)
    }

    #[test]
    fn permutation_basics() {
        assert_eq!(Permutation::all(3).len(), 6);
        assert_eq!(Permutation::transposition(3, 1, 2).sign(), -1);
        assert_eq!(Permutation::new(vec![2, 3, 1]).unwrap().sign(), 1);
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        let s = Permutation::new(vec![2, 3, 1]).unwrap();
        let t = Permutation::transposition(3, 1, 2);
        assert_eq!(s.compose(&t).sign(), -1);
        assert_eq!(s.compose(&s).compose(&s), Permutation::identity(3));
    }

    #[test]
    fn alpha1_is_fixed_by_all_of_s3() {
        for tau in Permutation::all(3) {
            assert_eq!(permute_columns(&alpha1(), &tau), alpha1());
        }
        assert_eq!(symmetrize(&alpha1(), 3), alpha1().scale(&BigInt::from(6)));
        assert!(antisymmetrize(&alpha1(), 3).is_zero());
    }

    #[test]
    fn antisymmetrize_two_terms() {
        let f = &x(1, 1) * &x(2, 2).pow(2);
        let expected = &f - &(&x(1, 2) * &x(2, 1).pow(2));
        assert_eq!(antisymmetrize(&f, 2), expected);
    }

    #[test]
    fn raising_examples() {
        let r12 = RaisingOperatorIndex::new(1, 2).unwrap();
        assert!(raising_apply(&alpha1(), r12).is_zero());
        let delta12 = Polynomial::top_minor(&[1, 2]);
        assert!(raising_apply(&delta12, r12).is_zero());
        assert_eq!(raising_apply(&x(2, 1), r12), x(1, 1));
        assert!(!is_un_invariant(&x(2, 1), 2).unwrap());
        assert!(is_un_invariant(&delta12, 4).unwrap());
        assert_eq!(
            is_un_invariant(&Polynomial::zero(), 3).unwrap_err(),
            Error::ZeroPolynomial
        );
        assert!(RaisingOperatorIndex::new(2, 2).is_err());
    }

    #[test]
    fn raising_matches_derivative_formula() {
        let f = &Polynomial::top_minor(&[1, 3]) * &(&x(2, 2) + &x(3, 1)).pow(2);
        for (p, q) in [(1, 2), (1, 3), (2, 3)] {
            let idx = RaisingOperatorIndex::new(p, q).unwrap();
            let by_derivative: Polynomial = (1..=3)
                .map(|j| &x(p, j) * &f.partial_derivative(VarId::new(q, j)))
                .sum();
            assert_eq!(raising_apply(&f, idx), by_derivative);
        }
    }

    #[test]
    fn sign_checks() {
        let gamma1 = Polynomial::top_minor(&[1, 2, 3]);
        assert!(is_sign_equivariant(&gamma1, 3));
        assert!(!is_sk_invariant(&gamma1, 3));
        assert_eq!(
            permute_columns(&gamma1, &Permutation::transposition(3, 1, 2)),
            -&gamma1
        );
        let gamma2 = &(&Polynomial::top_minor(&[1, 2]) * &Polynomial::top_minor(&[1, 3]))
            * &Polynomial::top_minor(&[2, 3]);
        let prod = &gamma1 * &gamma2;
        assert!(is_sk_invariant(&prod, 3));
        assert!(!is_sign_equivariant(&prod, 3));
    }

    #[test]
    fn torus_scales_by_weight() {
        let f = &Polynomial::top_minor(&[1, 2]) * &x(1, 3);
        let g = torus_apply(&f, &[2, 3, 5]);
        // weight (2,1,0) -> 2^2 * 3
        assert_eq!(g, f.scale(&BigInt::from(12)));
    }

    fn arb_small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(
            (
                prop::collection::vec((1usize..=3, 1usize..=3), 1..4),
                -3i64..=3,
            ),
            1..5,
        )
        .prop_map(|terms| {
            Polynomial::from_terms(terms.into_iter().map(|(vars, c)| {
                (
                    Monomial::from_exponents(vars.into_iter().map(|(i, j)| (VarId::new(i, j), 1))),
                    BigInt::from(c),
                )
            }))
        })
    }

    proptest! {
        #[test]
        fn permutation_preserves_row_weight(f in arb_small_poly(), which in 0usize..6) {
            prop_assume!(!f.is_zero());
            let tau = &Permutation::all(3)[which];
            let g = permute_columns(&f, tau);
            for (m, _) in f.terms() {
                let rw: RowWeight = m.row_weight(3);
                let cd = m.column_degree(3).0;
                let image = m.map_vars(|v| VarId::new(v.row(), tau.apply(v.col())));
                prop_assert_eq!(image.row_weight(3), rw);
                let cd2 = image.column_degree(3).0;
                for j in 1..=3 {
                    prop_assert_eq!(cd2[tau.apply(j) - 1], cd[j - 1]);
                }
                prop_assert!(!g.coefficient(&image).is_zero());
            }
        }

        #[test]
        fn symmetrizer_identities(f in arb_small_poly()) {
            let s = symmetrize(&f, 3);
            prop_assert_eq!(symmetrize(&s, 3), s.scale(&BigInt::from(6)));
            prop_assert!(antisymmetrize(&s, 3).is_zero());
            let a = antisymmetrize(&f, 3);
            prop_assert_eq!(antisymmetrize(&a, 3), a.scale(&BigInt::from(6)));
        }

        #[test]
        fn finite_and_infinitesimal_invariance_agree(f in arb_small_poly(), c in 1i64..=3) {
            prop_assume!(!f.is_zero());
            let infinitesimal = is_un_invariant(&f, 3).unwrap();
            let finite = [(1, 2), (1, 3), (2, 3)].iter().all(|&(p, q)| {
                let idx = RaisingOperatorIndex::new(p, q).unwrap();
                unipotent_substitute(&f, idx, c) == f
            });
            prop_assert_eq!(infinitesimal, finite);
        }
    }
}
