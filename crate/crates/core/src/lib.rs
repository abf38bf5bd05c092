//! Exact algorithms for graded Lie algebras, Chevalley–Eilenberg cohomology,
//! the Berezinian pipeline and truncated L∞ cohomology.

pub mod berezin;
pub mod ce;
pub mod env;
pub mod exact;
pub mod formal;
pub mod graded;
pub mod io;
pub mod liealg;
pub mod linfty;

pub use berezin::{verify_main_theorem, Berezin, MainTheoremReport};
pub use ce::{cohomology, hazewinkel_check, twisted_cohomology, CohomologyTable, HazewinkelReport, McElement, Side};
pub use exact::{Scalar, SparseMatrix};
pub use formal::{FormalElement, FreeAlgebra, SuperMonomial, VectorField};
pub use graded::{GradedBasis, GradingMode};
pub use liealg::{supertrace_character, validate, GradedLieAlgebra, LieModule, ValidationReport};
pub use linfty::{conjecture_evidence, truncated_cohomology, LinftyStructure};
