//! Verification toolkit for Klein (ℤ/2 × ℤ/2) étale coverings of genus-3
//! hyperelliptic curves.
//!
//! The crate has four layers:
//!
//! * [`f2sym`]: exact combinatorics of the 2-torsion group of the base
//!   Jacobian in the Weierstrass-subset model, including the classification of
//!   all 651 Klein subgroups into the four components I.1, I.2, II.1, II.2.
//! * [`tower`]: the symbolic (ℤ/2)³ covering tower over the projective line
//!   attached to a Klein subgroup: the 16-node lattice of quotient curves with
//!   genera, fixed-point tables, pullback-kernel flags, polarization data and
//!   the isotypical decomposition of the associated Prym variety.
//! * [`ffield`]: exact arithmetic over prime fields and their extensions up
//!   to degree 4, univariate polynomials, and quadratic characters.
//! * [`verify`]: arithmetic verification: instantiate a tower over a finite
//!   field with explicit branch points, count rational points on every node by
//!   independent routes, assemble L-polynomials, and check the identities the
//!   decomposition predicts.

mod error;
pub mod f2sym;
pub mod ffield;
pub mod tower;
pub mod verify;

pub use error::{Error, Result};
pub use f2sym::{CaseLabel, CaseType, ClassificationReport, KleinSubgroup, TwoTorsion};
pub use ffield::{FieldCtx, FieldEl, Poly};
pub use tower::{CurveNode, DeckElement, DeckSubgroup, PrymSummary, SubsetTriple, TowerDiagram};
pub use verify::{BranchAssignment, CurveCount, LPolynomial, VerificationReport};
