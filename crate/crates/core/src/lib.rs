//! Big free groups `BF(ω)` with their lexicographic `Z^ω` word metric, the
//! `Z^ω`-tree built from that length function, its combinatorial edge
//! description, the big Cayley graph metric, and the induced topology.
//!
//! All arithmetic is exact. Infinite words are handled through truncation
//! streams.

pub mod bf_combinatorial;
pub mod cayley;
pub mod cli;
pub mod error;
pub mod ordered_abelian;
pub mod sample;
pub mod suite;
pub mod topology;
pub mod tree;
pub mod words;

pub use error::{Error, Result};
pub use ordered_abelian::{Alphabet, AlphabetIndex, LexVector, QVector, Rational, ZVector};
pub use words::{common_prefix, gromov, word_dist, Cancellation, Letter, Sign, Word, WordStream};
