//! Two-color book Ramsey toolkit: colored complete graphs with fast book-size
//! measurement, explicit colorings (random, three-block, Paley, balanced blocks),
//! lower-bound searches, and closed-form / interval-certified bound curves.
//!
//! A book with base an edge uv and n pages is the graph of n triangles sharing
//! uv; a coloring of K_N avoids it in a color exactly when every same-color
//! edge has fewer than n same-color common neighbors. Everything here is built
//! around measuring and steering that quantity.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod field;
pub mod graph;
pub mod oracle;
pub mod rng;
pub mod search;

pub use graph::{BookMeasurement, Color, ColoredCompleteGraph, DensityReport, GraphError};
