//! Exact bivariate Lagrange interpolation and GC_n node-set analysis.
//!
//! All arithmetic is over the rationals. The crate computes poisedness,
//! fundamental polynomials and their linear factorizations, classifies node
//! sets as GC_n, and checks that every GC_4 set it meets has five collinear
//! nodes. Executable checks for the line-division property of polynomials
//! vanishing on a line and for the nine-point Cayley–Bacharach configuration
//! live in [`verifiers`].

pub mod cli;
pub mod error;
pub mod gc;
pub mod generators;
pub mod geometry;
pub mod interpolation;
pub mod linalg;
pub mod poly;
pub mod rng;
pub mod verifiers;

pub use error::{Error, Result};
pub use gc::{GcAnalysis, Verdict};
pub use geometry::{Line, NodeSet, Point, Scalar};
pub use poly::{Poly1, Poly2};
