//! Multihomogeneous Proj of a polynomial ring graded by `Z^r`.
//!
//! The single input is a [`RingSpec`]: an `r x n` integer degree matrix whose
//! columns are the degrees of the variables. From it the crate computes
//!
//! * the chart atlas of `Proj_MH(A)` (relevant monomial supports and their
//!   degree lattices), point-structure and normality flags ([`proj`]);
//! * global sections of the twisted sheaves `O(d)` as Laurent-monomial
//!   lattice points, and the line-bundle criterion ([`sheaves`]);
//! * the torus-action side: orbit cones, GIT cones, the GIT quasi-fan,
//!   semistable supports, and the comparison with the quotient base ([`git`]).
//!
//! Everything is exact. The lattice engine works over arbitrary-precision
//! integers, cones over primitive integer vectors.

pub mod cone;
pub mod error;
pub mod git;
pub mod lattice;
pub mod par;
pub mod proj;
pub mod relevance;
pub mod ring;
pub mod sheaves;

mod enumerate;

pub use cone::{QuasiFan, RationalCone};
pub use error::{Error, Result};
pub use git::{ComparisonReport, GitFan, OrbitConeTable};
pub use lattice::{IntMatrix, LatticeIndex, SnfDecomposition, Sublattice};
pub use proj::{Chart, ProjAtlas};
pub use relevance::{RelevanceReport, SupportSet};
pub use ring::{GradedComponentBasis, Monomial, RingSpec};
pub use sheaves::{LaurentBasis, LineBundleReport, TwistClass};
