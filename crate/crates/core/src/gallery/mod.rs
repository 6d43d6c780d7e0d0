//! Example families of weak distributive laws.

pub mod bialgebra;
pub mod dirsum;
pub mod e_ext;
pub mod frobenius;
pub mod refinement;
pub mod triangle;

pub use bialgebra::{smash_wdl, validate_weak_bialgebra, ModuleAlgebra, SmashLaw, WeakBialgebra};
pub use dirsum::{direct_sum_wdl, DirSumLaw};
pub use e_ext::{e_extension, EExtension};
pub use frobenius::{sf_weak_dl, tensor_over_r, validate_frobenius, FrobeniusStructure, SfLaw};
pub use refinement::{subalgebra_refinement, Refinement};
pub use triangle::{triangle_fixture, Triangle};
