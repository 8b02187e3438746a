//! Localized coloring graphs and cyclic Gray codes of proper colorings.
//!
//! For a host graph `H`, the graph `G^j_k(H)` has the proper `k`-colorings of
//! `H` as nodes; two colorings are adjacent when the vertices on which they
//! differ fit inside a connected subgraph of `H` on at most `j` vertices.
//! The crate computes the least `j` making that graph connected (the mixing
//! number `g_k`) or Hamiltonian (the Gray code number `h_k`) by exact search,
//! and builds explicit Hamiltonian cycles for the families where a
//! construction is known.

pub mod choose;
pub mod coloring;
pub mod error;
pub mod family;
pub mod graph;
pub mod graycode;
pub mod hunt;
pub mod solver;
pub mod verify;

pub use coloring::{Coloring, LocalizedColoringGraph};
pub use error::{Error, Result};
pub use graph::{MultiGraph, SimpleGraph, SubdivisionSpec, VertexSet};
pub use graycode::CyclicGrayCode;
pub use solver::Budget;
