//! Entanglement of undirected graphs: the cops-and-thief game solver,
//! cyclicity, connectivity, Tutte decompositions and molecule recognition.

pub mod analysis;
pub mod cli;
pub mod connectivity;
pub mod cyclicity;
pub mod error;
pub mod game;
pub mod generators;
pub mod graph;
pub mod io;
pub mod iso;
pub mod minor;
pub mod molecules;
pub mod tutte;

pub use error::{Error, Result};
pub use graph::{Digraph, Edge, EdgeKind, Graph, MultiGraph, Vertex};
