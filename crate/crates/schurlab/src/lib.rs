//! Exact computations in q-Schur algebras of type A (finite and affine) and in
//! their type-B coideal analogues: standard, monomial and canonical bases,
//! comultiplications, embeddings, transfer maps and duality, with a finite
//! field point-counting oracle for cross-checks.

pub mod algebra;
pub mod canonical;
pub mod certificate;
pub mod coideal;
pub mod combinatorics;
pub mod coproduct;
pub mod duality;
pub mod error;
pub mod flag_oracle;
pub mod ring;
pub mod schur_a;
pub mod stability;

pub use combinatorics::Mat;
pub use error::{Result, SchurError};
pub use ring::{LaurentPoly, QPoly};
