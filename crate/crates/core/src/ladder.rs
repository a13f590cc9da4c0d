//! Ladders of indeterminates stored as explicit cell sets.
//!
//! A ladder is a finite set of grid cells closed under the rule that two
//! cells `(i,j) <= (p,q)` force `(i,q)` and `(p,j)`. Every [`Ladder`] value is
//! translated so its bounding box starts at `(1,1)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::corners::corners;
use crate::error::{Error, Result};

/// A variable `X_ij`: 1-based row (downward) and column (rightward).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Componentwise order: `(i,j) <= (p,q)` iff `i <= p` and `j <= q`.
    pub fn le_componentwise(self, other: Cell) -> bool {
        self.row <= other.row && self.col <= other.col
    }

    /// Strictly northwest of `other`, i.e. the two cells span a 2-minor diagonal.
    pub fn is_diagonal_with(self, other: Cell) -> bool {
        self.row < other.row && self.col < other.col
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl From<(usize, usize)> for Cell {
    fn from((row, col): (usize, usize)) -> Self {
        Cell { row, col }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct InputNotes {
    /// Translation that was subtracted to reach the `(1,1)` origin.
    pub shift: (usize, usize),
    pub duplicates: usize,
}

/// A normalized ladder. Immutable after construction.
#[derive(Clone, Debug)]
pub struct Ladder {
    cells: BTreeSet<Cell>,
    rows: usize,
    cols: usize,
    notes: InputNotes,
}

impl PartialEq for Ladder {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells
    }
}

impl Eq for Ladder {}

impl std::hash::Hash for Ladder {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.cells.hash(state)
    }
}

impl Ladder {
    /// Builds a ladder from arbitrary positive cells, translating to the
    /// minimal bounding box and checking the closure axiom.
    pub fn new<I>(cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = Cell>,
    {
        let mut set = BTreeSet::new();
        let mut duplicates = 0;
        for c in cells {
            if c.row == 0 || c.col == 0 {
                return Err(Error::ZeroCoordinate(c.row, c.col));
            }
            if !set.insert(c) {
                duplicates += 1;
            }
        }
        let mut ladder = Self::normalize(set)?;
        ladder.notes.duplicates = duplicates;
        ladder.check_closure()?;
        Ok(ladder)
    }

    fn normalize(set: BTreeSet<Cell>) -> Result<Self> {
        if set.is_empty() {
            return Err(Error::Empty);
        }
        let min_row = set.iter().map(|c| c.row).min().unwrap();
        let min_col = set.iter().map(|c| c.col).min().unwrap();
        let cells: BTreeSet<Cell> = set
            .into_iter()
            .map(|c| Cell::new(c.row - min_row + 1, c.col - min_col + 1))
            .collect();
        let rows = cells.iter().map(|c| c.row).max().unwrap();
        let cols = cells.iter().map(|c| c.col).max().unwrap();
        Ok(Ladder {
            cells,
            rows,
            cols,
            notes: InputNotes {
                shift: (min_row - 1, min_col - 1),
                duplicates: 0,
            },
        })
    }

    /// Full `m x n` matrix of indeterminates.
    pub fn rectangle(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty);
        }
        let cells = (1..=rows).flat_map(|r| (1..=cols).map(move |c| Cell::new(r, c)));
        Ladder::new(cells)
    }

    /// Ladder whose row `r` is the interval `rows[r-1]` (inclusive, 1-based).
    pub fn from_row_intervals(rows: &[(usize, usize)]) -> Result<Self> {
        let cells = rows
            .iter()
            .enumerate()
            .flat_map(|(i, &(lo, hi))| (lo..=hi).map(move |c| Cell::new(i + 1, c)));
        Ladder::new(cells)
    }

    fn check_closure(&self) -> Result<()> {
        for &lo in &self.cells {
            for &hi in self.cells.range(lo..) {
                if lo.col > hi.col || lo == hi {
                    continue;
                }
                for missing in [Cell::new(lo.row, hi.col), Cell::new(hi.row, lo.col)] {
                    if !self.cells.contains(&missing) {
                        return Err(Error::ClosureViolation { lo, hi, missing });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn notes(&self) -> InputNotes {
        self.notes
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn cell_set(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    /// Membership test tolerant of out-of-grid (zero or negative) indices.
    pub fn has(&self, row: isize, col: isize) -> bool {
        row >= 1 && col >= 1 && self.contains(Cell::new(row as usize, col as usize))
    }

    pub fn is_rectangle(&self) -> bool {
        self.cells.len() == self.rows * self.cols
    }

    /// Cells of row `r`, left to right.
    pub fn row(&self, r: usize) -> impl Iterator<Item = Cell> + '_ {
        self.cells
            .range(Cell::new(r, 0)..Cell::new(r + 1, 0))
            .copied()
    }

    /// Every 2-minor lying in the ladder, as its (northwest, southeast)
    /// diagonal pair. By closure the antidiagonal cells are present as well.
    pub fn minors(&self) -> Vec<(Cell, Cell)> {
        let mut out = Vec::new();
        for &nw in &self.cells {
            for &se in self.cells.range(Cell::new(nw.row + 1, 0)..) {
                if se.col > nw.col {
                    debug_assert!(self.contains(Cell::new(nw.row, se.col)));
                    debug_assert!(self.contains(Cell::new(se.row, nw.col)));
                    out.push((nw, se));
                }
            }
        }
        out
    }

    /// Reflection across the antidiagonal: `(i,j) -> (n+1-j, m+1-i)`.
    pub fn antitranspose(&self) -> Ladder {
        let (m, n) = (self.rows, self.cols);
        let cells: BTreeSet<Cell> = self
            .cells
            .iter()
            .map(|c| Cell::new(n + 1 - c.col, m + 1 - c.row))
            .collect();
        Ladder {
            cells,
            rows: n,
            cols: m,
            notes: InputNotes::default(),
        }
    }

    /// Translates every cell by `(dr, dc)`.
    pub fn shifted(&self, dr: usize, dc: usize) -> impl Iterator<Item = Cell> + '_ {
        self.cells
            .iter()
            .map(move |c| Cell::new(c.row + dr, c.col + dc))
    }

    pub fn to_json(&self) -> Value {
        let cells: Vec<Value> = self.cells.iter().map(|c| json!([c.row, c.col])).collect();
        json!({ "cells": cells })
    }

    pub fn parse_json(text: &str) -> Result<Ladder> {
        #[derive(Deserialize)]
        struct Doc {
            cells: Vec<(usize, usize)>,
        }
        let doc: Doc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Ladder::new(doc.cells.into_iter().map(Cell::from))
    }

    /// Parses a `#`/`.` grid; the corner markers `L`, `U`, `C` of an annotated
    /// rendering also count as present. Blank lines at the top and bottom are dropped;
    /// a blank line between grid rows is an error.
    pub fn parse_ascii(text: &str) -> Result<Ladder> {
        let lines: Vec<&str> = text.lines().map(str::trim_end).collect();
        let first = lines.iter().position(|l| !l.trim().is_empty());
        let last = lines.iter().rposition(|l| !l.trim().is_empty());
        let (first, last) = match (first, last) {
            (Some(f), Some(l)) => (f, l),
            _ => return Err(Error::Empty),
        };
        let mut cells = Vec::new();
        for (idx, line) in lines[first..=last].iter().enumerate() {
            let lineno = first + idx + 1;
            if line.trim().is_empty() {
                return Err(Error::InteriorBlankLine(lineno));
            }
            for (j, ch) in line.chars().enumerate() {
                match ch {
                    '#' | 'L' | 'U' | 'C' => cells.push(Cell::new(idx + 1, j + 1)),
                    '.' => {}
                    c if c.is_whitespace() => {}
                    c => {
                        return Err(Error::BadCharacter {
                            ch: c,
                            line: lineno,
                            col: j + 1,
                        })
                    }
                }
            }
        }
        Ladder::new(cells)
    }

    /// JSON if the first non-space byte is `{`, otherwise the ASCII grid.
    pub fn parse_auto(text: &str) -> Result<Ladder> {
        if text.trim_start().starts_with('{') {
            Ladder::parse_json(text)
        } else {
            Ladder::parse_ascii(text)
        }
    }

    /// `#`/`.` grid. With `annotate`, lower corners print as `L`, upper as
    /// `U` and coincidental corners as `C`.
    pub fn render_ascii(&self, annotate: bool) -> String {
        let profile = annotate.then(|| corners(self));
        let mut out = String::with_capacity((self.cols + 1) * self.rows);
        for r in 1..=self.rows {
            for c in 1..=self.cols {
                let cell = Cell::new(r, c);
                let ch = if !self.contains(cell) {
                    '.'
                } else if let Some(p) = &profile {
                    match (p.lower.contains(&cell), p.upper.contains(&cell)) {
                        (true, true) => 'C',
                        (true, false) => 'L',
                        (false, true) => 'U',
                        (false, false) => '#',
                    }
                } else {
                    '#'
                };
                out.push(ch);
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Ladder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii(false))
    }
}

/// Glues ladders along the chain `Z_0 # Z_1 # ... # Z_w`: the lower-left cell
/// of everything composed so far is identified with the top-right cell of
/// the next factor.
pub fn compose(factors: &[Ladder]) -> Result<Ladder> {
    let (first, rest) = factors.split_first().ok_or(Error::NoFactors)?;
    let last_index = factors.len() - 1;
    for (index, z) in factors.iter().enumerate() {
        if index < last_index && !z.contains(Cell::new(z.rows, 1)) {
            return Err(Error::MissingGlueCell {
                index,
                which: "lower-left",
            });
        }
        if index > 0 && !z.contains(Cell::new(1, z.cols)) {
            return Err(Error::MissingGlueCell {
                index,
                which: "top-right",
            });
        }
    }
    let mut acc: Vec<Cell> = first.cells().collect();
    let mut acc_rows = first.rows;
    for z in rest {
        // shift everything so far right, and the new factor down
        let dc = z.cols - 1;
        let dr = acc_rows - 1;
        for c in acc.iter_mut() {
            c.col += dc;
        }
        acc.extend(z.shifted(dr, 0));
        acc_rows += z.rows - 1;
    }
    Ladder::new(acc)
}
