//! Exact counting of perfect matchings in cubic planar maps and labeled
//! cubic planar graphs.
//!
//! The crate computes every counting sequence three independent ways where
//! the mathematics allows it — closed formula, algebraic/fixed-point series
//! solution, and exhaustive brute-force census at desk sizes — and checks
//! them against each other and against embedded reference tables. On top of
//! that sit an executable form of the matching/Ising correspondence on dual
//! triangulations, two fiber-counting bijections, and certified isolation of
//! the asymptotic growth constants.

pub mod asymptotics;
pub mod bijections;
pub mod enumerate;
pub mod export;
pub mod goldens;
pub mod graph_series;
pub mod graphs;
pub mod ising;
pub mod map_series;
pub mod maps;
pub mod planarity;
pub mod polynomials;
pub mod series;
pub mod verify;
