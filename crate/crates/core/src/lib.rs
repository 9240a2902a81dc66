#![allow(clippy::needless_range_loop)]

pub mod caps;
pub mod catalog;
pub mod error;
pub mod coloring;
pub mod connectivity;
pub mod graph;
pub mod planarity;
pub mod report;
pub mod source;
pub mod suite;
pub mod traversal;
pub mod truncation;

pub use caps::{Caps, SearchControl};
pub use error::{Error, Result};
pub use graph::{EdgeId, Multigraph, Vertex, Walk};
