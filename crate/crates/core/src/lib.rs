//! Fibonacci-colored integer compositions and their partner families.
//!
//! A `w`-color composition gives part `k` one of `w_k` colors; here the
//! color sequences are slices of the Fibonacci numbers, and every coloring
//! is realized concretely as extra structure on a tiled 1 x n board:
//! secondary tilings, spotted tiles, or chains of totally nested set
//! partitions. Each scheme then admits an explicit bijection to a partner
//! family, implemented in both directions:
//!
//! - [`comp`] - compositions, boards, the part-restricted families counted
//!   by `F_{n+1}`, `F_n`, `F_{n-1}`, and the line-bundling maps
//!   [`comp::alpha`] / [`comp::beta`] between them;
//! - [`colorings`] - the five coloring schemes, their boards, enumeration,
//!   and INVERT-transform counting;
//! - [`words`] - restricted ternary and quaternary words and the word
//!   codecs of the colored families;
//! - [`ladder`] - spanning trees of the n-ladder graph and their
//!   correspondence with spotted (even-index) colorings;
//! - [`partitions`] - set partitions, arc diagrams, noncrossing/nonnesting
//!   classification, totally nested partitions, and the map
//!   [`partitions::phi`];
//! - [`unimodal`] - unimodal sequences over an initial interval, the
//!   chain-building operations, and the odd-index coloring bijection;
//! - [`ocps`] - order-consecutive partition sequences and their comma-slash
//!   string codec;
//! - [`multicomp`] - restricted 2-colored compositions;
//! - [`series`] - exact truncated power series and the INVERT transform;
//! - [`verify`] - the runtime cross-check suite tying all of the above
//!   together against brute-force enumeration.

pub mod colorings;
pub mod comp;
pub mod ladder;
pub mod multicomp;
pub mod ocps;
pub mod partitions;
pub mod series;
pub mod unimodal;
pub mod verify;
pub mod words;

mod error;
mod util;

pub use colorings::{Color, ColorScheme, ColoredComposition, Junction, SpottedTile};
pub use comp::{fibonacci, Board, Composition, RestrictedFamily, SeparatorKind};
pub use error::{Error, Result};
pub use ladder::{LadderEdge, LadderGraph, LadderSpanningTree};
pub use ocps::{CommaSlashString, Ocps};
pub use partitions::{ArcDiagram, SetPartition, TotallyNestedPartition};
pub use series::CoeffSeq;
pub use unimodal::UnimodalSeq;
pub use words::{Word, WordConstraint};
