//! Shared inputs for the benchmark suite.

use fibtile_core::colorings::{enumerate_colored, ColorScheme, ColoredComposition};
use fibtile_core::unimodal::{colored_to_unimodal, UnimodalSeq};

/// Every odd-index colored composition of `n` with its unimodal image.
pub fn unimodal_pairs(n: usize) -> Vec<(ColoredComposition, UnimodalSeq)> {
    enumerate_colored(ColorScheme::FibOdd, n)
        .map(|cc| {
            let u = colored_to_unimodal(&cc).expect("valid chain");
            (cc, u)
        })
        .collect()
}
