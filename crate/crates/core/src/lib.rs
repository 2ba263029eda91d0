//! Queens in exile: the Tribonacci numeration system, the Tribonacci word and
//! its morphic relatives, the XYMP table, greedy queen placement on the square
//! spiral and on the single-quadrant board, and Sprague-Grundy tables for the
//! associated games.
//!
//! The crate is organised bottom-up:
//!
//! * [`numeration`]: Tribonacci numbers and binary Tribonacci representations.
//! * [`word`]: letters, morphisms, fixed-point streams, letter counts and the
//!   `A`/`B`/`C` occurrence sequences.
//! * [`xymp`]: the `X, Y, M, P` table built from two mex recurrences.
//! * [`board`]: cell numbering of the spiral and quadrant boards.
//! * [`greedy`]: greedy queen placement on both boards.
//! * [`grundy`]: Sprague-Grundy tables and the analysis passes run over them.
//! * [`verify`]: high-precision checks of the numeric bounds.

pub mod bits;
pub mod board;
mod error;
pub mod greedy;
pub mod grundy;
pub mod numeration;
pub mod verify;
pub mod word;
pub mod xymp;

pub use board::{QuadCoord, SpiralCoord};
pub use error::{Error, Result};
pub use greedy::QueenRecord;
pub use grundy::{BoardKind, SgTable};
pub use numeration::TribRepr;
pub use word::{AbcIndex, Letter, Morphism, WordStream};
pub use xymp::{XympRow, XympTable};
