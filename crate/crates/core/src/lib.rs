//! Exact face-number invariants of simplicial homology manifolds.
//!
//! The crate computes, over prescribed finite fields, everything a
//! (d-1)-dimensional homology manifold's facet list determines: f-, h-,
//! g-, h'- and h''-vectors, reduced and relative Betti numbers, boundary
//! complexes, Dehn-Sommerville residuals, Macaulay-type bounds, graded
//! dimensions of Artinian reductions of Stanley-Reisner rings, algebraic
//! rigidity, and hard Lefschetz rank checks.
//!
//! All arithmetic is exact: integers for face-vector calculus, GF(p^m)
//! for linear algebra. Every identity checker returns a [`report::CheckReport`]
//! carrying per-index residuals rather than a bare boolean, so equality
//! cases are visible in the output.
//!
//! ```
//! use facekit::{FaceVectorSet, FieldSpec};
//!
//! let torus = facekit::generators::torus_7();
//! let gf5 = FieldSpec::prime(5).unwrap();
//! let fv = FaceVectorSet::compute(&torus, &gf5).unwrap();
//! assert_eq!(fv.h, vec![1, 4, 10, -1]);
//! assert_eq!(fv.h_prime, vec![1, 4, 10, 1]);
//! assert_eq!(fv.h_dprime.as_deref(), Some(&[1, 4, 4, 1][..]));
//! ```

pub mod complex;
pub mod exec;
pub mod face_ring;
pub mod field;
pub mod generators;
pub mod homology;
pub mod manifold;
pub mod report;
pub mod util;
pub mod vectors;

pub use complex::{Face, SimplicialComplex};
pub use exec::Execution;
pub use field::{FieldSpec, Matrix};
pub use homology::BettiProfile;
pub use manifold::ManifoldReport;
pub use report::CheckReport;
pub use vectors::FaceVectorSet;
