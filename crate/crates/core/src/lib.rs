//! Desk-scale computational geometric group theory.
//!
//! The crate builds finite Coxeter groups from labeled diagrams, realizes
//! their reflection arrangements and Salvetti complexes, computes Garside
//! normal forms for spherical Artin groups, and runs combinatorial
//! non-positive-curvature checkers (square/simplicial complex axioms,
//! disc-diagram curvature audits, collapse-based contractibility, and
//! normal-form geodesics in triangular-lattice windows).
//!
//! Everything is exact: group elements are canonical reduced words, linear
//! algebra runs over `Q` or `Q(sqrt d)`, and angles are rational multiples
//! of pi. Searches over infinite objects are windowed and report
//! three-valued outcomes instead of guessing.

pub mod arrangement;
pub mod bestvina;
pub mod complex;
pub mod coxeter;
pub mod diagram;
pub mod exact;
pub mod fixtures;
pub mod garside;
pub mod homology;
pub mod poset;
pub mod simplicial353;
pub mod square353;

pub use diagram::{CoxeterDiagram, EdgeLabel, SimpleGraph};
