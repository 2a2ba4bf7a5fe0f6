//! Exact polynomial models of `S^k(S^m(Cⁿ))` and `Λ^k(S^m(Cⁿ))`, their
//! highest weight vectors for `k ≤ 3`, and brute-force multiplicity oracles.

pub mod action;
pub mod error;
pub mod golden;
pub mod hwv;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod tableaux;
pub mod verify;

pub use action::{
    antisymmetrize, is_sign_equivariant, is_sk_invariant, is_un_invariant, permute_columns,
    raising_apply, symmetrize, Permutation, RaisingOperatorIndex,
};
pub use error::{Error, Result};
pub use hwv::{
    decompose, enumerate_basis, hwv_words, multiplicity_closed_form, DecompositionEntry,
    DecompositionReport, GeneratorWord, HwvWord, Variant,
};
pub use poly::{ColumnDegree, MatrixShape, Monomial, Polynomial, RowWeight, VarId};
pub use tableaux::{kostka, Content, Tableau, YoungDiagram};
