//! Lower and upper inside corners.

use serde_json::{json, Value};

use crate::ladder::{Cell, Ladder};

/// Inside corners of a ladder together with the sentinel corners
/// `(1,n)` and `(m,1)` at both ends of each list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerProfile {
    /// `(a_i, b_i)` for `i = 1..=h`, sorted by row.
    pub lower: Vec<Cell>,
    /// `(c_j, d_j)` for `j = 1..=k`, sorted by row.
    pub upper: Vec<Cell>,
    pub rows: usize,
    pub cols: usize,
}

impl CornerProfile {
    pub fn h(&self) -> usize {
        self.lower.len()
    }

    pub fn k(&self) -> usize {
        self.upper.len()
    }

    pub fn top_sentinel(&self) -> Cell {
        Cell::new(1, self.cols)
    }

    pub fn bottom_sentinel(&self) -> Cell {
        Cell::new(self.rows, 1)
    }

    /// `(a_i, b_i)` for `i` in `0..=h+1`, sentinels included.
    pub fn a(&self, i: usize) -> Cell {
        match i {
            0 => self.top_sentinel(),
            i if i <= self.h() => self.lower[i - 1],
            i if i == self.h() + 1 => self.bottom_sentinel(),
            _ => panic!("lower corner index {i} out of range"),
        }
    }

    /// `(c_j, d_j)` for `j` in `0..=k+1`, sentinels included.
    pub fn c(&self, j: usize) -> Cell {
        match j {
            0 => self.top_sentinel(),
            j if j <= self.k() => self.upper[j - 1],
            j if j == self.k() + 1 => self.bottom_sentinel(),
            _ => panic!("upper corner index {j} out of range"),
        }
    }

    /// Lower corners with sentinels: `[(a_0,b_0), ..., (a_{h+1},b_{h+1})]`.
    pub fn lower_with_sentinels(&self) -> Vec<Cell> {
        (0..=self.h() + 1).map(|i| self.a(i)).collect()
    }

    /// Both lists have strictly increasing rows strictly between 1 and m.
    pub fn is_well_ordered(&self) -> bool {
        let ok = |v: &[Cell]| {
            v.windows(2).all(|w| w[0].row < w[1].row)
                && v.iter().all(|c| c.row > 1 && c.row < self.rows)
        };
        ok(&self.lower) && ok(&self.upper)
    }

    pub fn coincidental(&self) -> Vec<Cell> {
        self.lower
            .iter()
            .filter(|c| self.upper.contains(c))
            .copied()
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let list = |v: &[Cell]| -> Vec<Value> { v.iter().map(|c| json!([c.row, c.col])).collect() };
        json!({
            "coincidental": list(&self.coincidental()),
            "lower": list(&self.lower),
            "upper": list(&self.upper),
        })
    }
}

fn is_lower(y: &Ladder, c: Cell) -> bool {
    let (r, s) = (c.row as isize, c.col as isize);
    y.has(r, s) && y.has(r - 1, s) && y.has(r, s - 1) && !y.has(r - 1, s - 1)
}

fn is_upper(y: &Ladder, c: Cell) -> bool {
    let (r, s) = (c.row as isize, c.col as isize);
    y.has(r, s) && y.has(r + 1, s) && y.has(r, s + 1) && !y.has(r + 1, s + 1)
}

/// Scans every cell against the lower/upper membership patterns.
pub fn corners(y: &Ladder) -> CornerProfile {
    // cells iterate in row-major order, so both lists come out sorted by row
    let lower = y.cells().filter(|&c| is_lower(y, c)).collect();
    let upper = y.cells().filter(|&c| is_upper(y, c)).collect();
    CornerProfile {
        lower,
        upper,
        rows: y.rows(),
        cols: y.cols(),
    }
}

pub fn coincidental_corners(y: &Ladder) -> Vec<Cell> {
    corners(y).coincidental()
}
