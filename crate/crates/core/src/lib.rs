//! Exact verification of the cyclic sieving phenomenon for families of
//! non-crossing graphs on points in convex position.
//!
//! The crate is organized bottom-up:
//!
//! * [`algebra`]: big integers, polynomials in `q`, Gaussian binomials and exact
//!   evaluation at roots of unity.
//! * [`ncgraph`]: non-crossing graphs and partitions, enumeration, rotation and
//!   fixed-point counting.
//! * [`formulas`]: closed-form counts and their q-analogues.
//! * [`series`]: truncated bivariate power series and the generating-function
//!   identities behind the counts.
//! * [`bijections`]: trees and quadrangulations, and the folding maps for
//!   rotation-symmetric graphs.
//! * [`harness`]: cell-by-cell comparison of q-evaluations with fixed-point
//!   counts, and JSON reports.

pub mod algebra;
pub mod ncgraph;
pub mod formulas;
pub mod series;
pub mod bijections;
pub mod harness;
