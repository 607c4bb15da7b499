//! Knot Floer homology of twisted Mazur-pattern and (2,1)-cable satellites,
//! computed as box tensor products of bordered Floer modules.

pub mod algebra;
pub mod cfd;
pub mod cfk;
pub mod csc;
pub mod error;
pub mod grading;
pub mod homology;
pub mod invariants;
pub mod pattern;
pub mod pipeline;
pub mod poly;
pub mod selftest;
pub mod tensor;

pub use algebra::{AlgebraElement, Idempotent};
pub use cfk::{build_lspace_model, build_thin_model, CfkModel, LspaceSpec, ModelSpec};
pub use error::{CscError, GradingError, ModelError, StructureError};
pub use grading::{DoubleCosetContext, GroupElement};
pub use poly::LaurentPoly;
