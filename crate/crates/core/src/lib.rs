pub mod bounds;
pub mod cli;
pub mod collapse;
pub mod colorful;
pub mod complex;
pub mod error;
pub mod format;
pub mod geometry;
pub mod homology;
pub mod leray;
pub mod rank;
pub mod report;
pub mod suites;
pub mod tolerance;
pub mod vertex_set;

pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use homology::{betti_numbers, is_acyclic, nerve, relative_betti, BettiVector, RelativePair};
pub use vertex_set::{Face, VertexSet};
