use thiserror::Error;

use crate::ladder::Cell;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed input: {0}")]
    Parse(String),

    #[error("empty cell set")]
    Empty,

    #[error("cell ({0},{1}) has a zero coordinate; cells are 1-based")]
    ZeroCoordinate(usize, usize),

    #[error("unexpected character {ch:?} at line {line}, column {col}")]
    BadCharacter { ch: char, line: usize, col: usize },

    #[error("blank line inside the grid at line {0}")]
    InteriorBlankLine(usize),

    #[error("closure violation: cells {lo} and {hi} are present but {missing} is not")]
    ClosureViolation { lo: Cell, hi: Cell, missing: Cell },

    #[error("ladder is not 2-connected")]
    NotTwoConnected,

    #[error("corner rows are not strictly increasing")]
    UnorderedCorners,

    #[error("factor {index} lacks its {which} cell")]
    MissingGlueCell { index: usize, which: &'static str },

    #[error("compose needs at least one factor")]
    NoFactors,

    #[error("decomposition invariant failed: {0}")]
    Decomposition(String),

    #[error("{0} is out of range for this ladder")]
    LabelOutOfRange(String),

    #[error("factor index {0} out of range")]
    FactorOutOfRange(usize),

    #[error("cell {0} is not in the ladder")]
    CellNotInLadder(Cell),

    #[error("degree bound {0} outside the supported range 1..={1}")]
    DegreeBound(usize, usize),

    #[error("block {0}x{1} is square, so its determinantal ring is Gorenstein")]
    SquareBlock(usize, usize),

    #[error("invalid block size {0}x{1}; both sides must exceed 1")]
    BlockTooSmall(usize, usize),

    #[error("construct_2n needs N >= 1 and exactly N block sizes")]
    BlockCount,

    #[error("ladder is not a # of two full matrices: {0}")]
    WitnessShape(String),

    #[error("class group mismatch")]
    GroupMismatch,

    #[error("coefficient does not fit in a machine integer")]
    Overflow,

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
