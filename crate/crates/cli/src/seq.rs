//! Named integer sequences available for export.

use clap::ValueEnum;
use exile_core::greedy::{simulate_quadrant, simulate_quadrant_by_columns, simulate_spiral};
use exile_core::grundy::wythoff_zero_rows;
use exile_core::word::abc_closed;
use exile_core::xymp::{quad_closed, Column};
use exile_core::WordStream;

use crate::Usage;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeqName {
    XympX,
    XympY,
    XympM,
    XympP,
    AbcA,
    AbcB,
    AbcC,
    /// Tribonacci word with a, b, c written as 0, 1, 2.
    TribWord,
    /// Theme song with a, b, c written as 0, 1, 2.
    Theme,
    QueensSpiralIndex,
    QueensQuadrantIndex,
    SCol,
    WythoffW,
}

impl SeqName {
    pub fn default_offset(self) -> u64 {
        match self {
            SeqName::AbcA | SeqName::AbcB | SeqName::AbcC | SeqName::TribWord => 1,
            _ => 0,
        }
    }

    fn allows_offset(self, offset: u64) -> bool {
        match self {
            SeqName::AbcA | SeqName::AbcB | SeqName::AbcC => offset <= 1,
            _ => offset == self.default_offset(),
        }
    }

    /// Terms `offset .. offset + count`.
    pub fn terms(self, count: usize, offset: Option<u64>) -> Result<Box<dyn Iterator<Item = u64>>, Usage> {
        let offset = offset.unwrap_or(self.default_offset());
        if !self.allows_offset(offset) {
            let name = self.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default();
            return Err(Usage(format!("{name} does not start at offset {offset}")));
        }
        let range = offset..offset + count as u64;
        let xymp = |col: Column| -> Box<dyn Iterator<Item = u64>> {
            Box::new(range.clone().map(move |n| col.of(&quad_closed(n))))
        };
        Ok(match self {
            SeqName::XympX => xymp(Column::X),
            SeqName::XympY => xymp(Column::Y),
            SeqName::XympM => xymp(Column::M),
            SeqName::XympP => xymp(Column::P),
            SeqName::AbcA => Box::new(range.map(|n| abc_closed(n).a)),
            SeqName::AbcB => Box::new(range.map(|n| abc_closed(n).b)),
            SeqName::AbcC => Box::new(range.map(|n| abc_closed(n).c)),
            SeqName::TribWord => Box::new(WordStream::tribonacci().take(count).map(|l| l.index() as u64)),
            SeqName::Theme => Box::new(WordStream::theme().take(count).map(|l| l.index() as u64)),
            SeqName::QueensSpiralIndex => Box::new(simulate_spiral(count).into_iter().map(|q| q.cell)),
            SeqName::QueensQuadrantIndex => Box::new(simulate_quadrant(count).into_iter().map(|q| q.cell)),
            SeqName::SCol => Box::new(simulate_quadrant_by_columns(count).into_iter()),
            SeqName::WythoffW => Box::new(wythoff_zero_rows(count).into_iter()),
        })
    }
}
