//! Exact computation of Chern-Schwartz-MacPherson cycles of matroids.
//!
//! The library computes CSM cycles of arbitrary matroids as integer-weighted
//! balanced fans supported on skeleta of Bergman fans, together with the
//! machinery needed to verify their structural identities by exact
//! computation: tropical cycle arithmetic with stable intersection, degrees,
//! characteristic polynomials and beta invariants, matroid polytope
//! subdivisions and the valuation identity, and the g-polynomial on the
//! families where closed forms are available.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod balance;
pub mod bergman;
pub mod catalog;
pub mod cycle;
pub mod error;
pub mod intersect;
pub mod invariants;
pub mod lattice;
pub mod linalg;
pub mod matroid;
pub mod poly;
pub mod polytope;
pub mod subset;

pub use balance::{is_balanced, Balance};
pub use bergman::{bergman_skeleton, coarse_support_check, csm_cycle, csm_weight, pairing, FlagOfFlats};
pub use cycle::{BraidChain, TropicalCycle};
pub use error::{Error, Result};
pub use intersect::{degree, degree_by_recursion, pushforward_forget, stable_intersect, standard_hyperplane};
pub use lattice::{beta, characteristic_polynomial, reduced_characteristic_polynomial, FlatLattice};
pub use matroid::Matroid;
pub use poly::IntPoly;
pub use polytope::{face_in_direction, all_faces, interior_faces, Subdivision};
pub use subset::Subset;
