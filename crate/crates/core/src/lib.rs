//! Colourings and decompositions of cubic graphs: k-bisections, Ando
//! colourings, Wormald edge colourings, cycle permutation graphs and
//! two-linear-forest decompositions, plus the graph plumbing they share.

pub mod ando;
pub mod arboricity;
pub mod bisection;
pub mod budget;
pub mod canon;
pub mod colour;
pub mod cyperm;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod random;
pub mod scan;
mod search;
pub mod structure;
pub mod wormald;

pub use budget::{Budget, Outcome};
pub use canon::{canonical_code, canonical_form, CanonicalCode, CanonicalForm};
pub use colour::{Bisection, Colour, EdgeColouring3, EdgeTwoColouring};
pub use error::{Error, Result};
pub use graph::{CubicGraph, SimpleGraph};
pub use graph6::{parse_graph6, write_graph6};
