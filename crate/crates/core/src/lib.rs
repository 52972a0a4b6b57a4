//! Exact linear algebra for alternative and pre-alternative algebras.
//!
//! Everything is computed over the rationals or a prime field `GF(p)`,
//! `p` odd, with exact arithmetic. Identity checkers never stop early: they
//! evaluate every basis case and return a [`report::CheckReport`] whose
//! verdict covers all of them.

pub mod altalg;
pub mod bialg;
pub mod catalog;
pub mod construct;
pub mod error;
pub mod field;
pub mod linalg;
pub mod prealt;
pub mod report;
pub mod tensor;
pub mod ybe;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use linalg::{LinearMap, Matrix, Vector};
pub use report::{CheckReport, Violation};
pub use tensor::{BilinearForm, Product, Tensor2, Tensor3};
