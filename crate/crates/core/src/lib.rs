//! Geometrically incompressible one-sided Heegaard splittings of the even
//! Dehn fillings `M(2p, q)` of the figure-eight knot exterior.
//!
//! - [`slope`]: primitive slopes on a torus and the unimodular frame of a filling.
//! - [`tree`]: the Möbius-band tree of even slopes and band counts.
//! - [`classify`]: candidate surfaces, genera and the unique splitting surface.
//! - [`report`]: text, JSON and DOT renderings used by the `fig8` binary.

pub mod classify;
pub mod error;
pub mod report;
pub mod slope;
pub mod tree;

pub use classify::{
    candidates, classify, classify_with, survey, validate, CandidateSurface, Classification,
    Compression, CountMethod, Filling, RatioBand, SpanningSurface, SurveyEntry,
};
pub use error::{Error, Result};
pub use slope::{frame_for, intersection, make_slope, Frame, Slope};
pub use tree::{bfs_oracle, compression_path, is_adjacent, moebius_count, parent, EvenSlope};
