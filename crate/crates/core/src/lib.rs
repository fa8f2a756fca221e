//! Multipath matroids of digraphs.
//!
//! The multipaths of a digraph (spanning subgraphs made of vertex-disjoint simple
//! directed paths) sometimes form the independent sets of a matroid. This crate
//! recognizes the digraphs for which they do, decomposes their matroids into uniform
//! pieces, computes Tutte polynomials, counts flowing colourings, and evaluates the
//! graded Euler characteristic of multipath cohomology. Each computation comes with
//! a brute-force oracle used by the test suites.
//!
//! ```
//! use mpmat::{families, mp_structure, tutte};
//!
//! let g = families::worked_example();
//! assert!(mp_structure::recognize_mp(&g).unwrap().is_mp());
//! let t = tutte::tutte_recursive(&g).unwrap();
//! assert_eq!(t.to_string(), "x^3 + 2*x^2*y + x*y^2");
//! ```

pub mod colouring;
pub mod digraph;
mod dsu;
pub mod error;
pub mod euler;
pub mod families;
pub mod generate;
pub mod io;
pub mod limits;
pub mod matroid;
pub mod mp_structure;
pub mod multipath;
pub mod poly;
pub mod tutte;
pub mod verify;

pub use digraph::{Digraph, EdgeCorrespondence, EdgeSet};
pub use error::{Error, Result};
pub use limits::Limits;
pub use matroid::Matroid;
pub use poly::{BiPoly, LaurentPoly};
