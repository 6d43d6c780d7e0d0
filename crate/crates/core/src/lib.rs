//! Exact computational algebra for weak distributive laws, weak wreath
//! products and bilinear factorizations of finite-dimensional algebras over
//! the rationals.
//!
//! Every linear map is a [`Mat`] with rational entries. Tensor products of
//! maps are Kronecker products with the left factor as major index, so the
//! basis vector `e_i ⊗ e_j` of `V ⊗ W` sits at position `i·dim(W) + j`.
//! Identities are checked exactly and collected in a [`Report`] whose failing
//! entries carry a basis witness.

pub mod algebra;
pub mod cells;
pub mod error;
pub mod factorization;
pub mod gallery;
pub mod io;
pub mod linalg;
pub mod ore;
pub mod report;
pub mod wdl;

pub use algebra::{Algebra, AlgebraHom, BimoduleStructure};
pub use error::{Error, Result};
pub use factorization::BilinFact;
pub use linalg::{Mat, Scalar, Splitting};
pub use report::{Check, Report, Witness};
pub use wdl::{Wdl, WreathProduct};
