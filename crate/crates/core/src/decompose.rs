//! Splitting a ladder at its coincidental inside corners.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::corners::CornerProfile;
use crate::error::{Error, Result};
use crate::ladder::{compose, Cell, Ladder};
use crate::validate::require_two_connected;

/// `Y = Z_0 # ... # Z_w` with the data needed to move between factor and
/// ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub ladder: Ladder,
    pub profile: CornerProfile,
    pub factors: Vec<Ladder>,
    /// The `w` coincidental corners of `Y`, by row.
    pub coincidental: Vec<Cell>,
    /// Add `offsets[u]` to a cell of `factors[u]` to get its `Y` coordinates.
    pub offsets: Vec<(usize, usize)>,
    pub per_factor_corners: Vec<CornerProfile>,
}

impl Factorization {
    pub fn w(&self) -> usize {
        self.coincidental.len()
    }

    pub fn to_ambient(&self, u: usize, c: Cell) -> Cell {
        let (dr, dc) = self.offsets[u];
        Cell::new(c.row + dr, c.col + dc)
    }

    /// Factor `u` in `Y` coordinates.
    pub fn embedded(&self, u: usize) -> BTreeSet<Cell> {
        let (dr, dc) = self.offsets[u];
        self.factors[u].shifted(dr, dc).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "coincidental": self.coincidental.iter().map(|c| json!([c.row, c.col])).collect::<Vec<_>>(),
            "factors": self.factors.iter().map(Ladder::to_json).collect::<Vec<_>>(),
            "offsets": self.offsets.iter().map(|&(r, c)| json!([r, c])).collect::<Vec<_>>(),
        })
    }
}

/// Closed rectangular band of `Y` owned by factor `u`.
fn band(cc: &[Cell], u: usize, y: &Ladder) -> (usize, usize, usize, usize) {
    let w = cc.len();
    let (row_lo, col_hi) = if u == 0 {
        (1, y.cols())
    } else {
        (cc[u - 1].row, cc[u - 1].col)
    };
    let (row_hi, col_lo) = if u == w {
        (y.rows(), 1)
    } else {
        (cc[u].row, cc[u].col)
    };
    (row_lo, row_hi, col_lo, col_hi)
}

pub fn decompose(y: &Ladder) -> Result<Factorization> {
    let profile = require_two_connected(y)?;
    let cc = profile.coincidental();
    let w = cc.len();
    let mut factors = Vec::with_capacity(w + 1);
    let mut offsets = Vec::with_capacity(w + 1);
    let mut per_factor_corners = Vec::with_capacity(w + 1);
    for u in 0..=w {
        let (r0, r1, c0, c1) = band(&cc, u, y);
        let cells = y
            .cells()
            .filter(|c| (r0..=r1).contains(&c.row) && (c0..=c1).contains(&c.col));
        let z = Ladder::new(cells).map_err(|e| Error::Decomposition(format!("factor {u}: {e}")))?;
        let shift = z.notes().shift;
        let zp = require_two_connected(&z)
            .map_err(|e| Error::Decomposition(format!("factor {u}: {e}")))?;
        if !zp.coincidental().is_empty() {
            return Err(Error::Decomposition(format!(
                "factor {u} still has a coincidental corner"
            )));
        }
        factors.push(z);
        offsets.push(shift);
        per_factor_corners.push(zp);
    }
    let f = Factorization {
        ladder: y.clone(),
        profile,
        factors,
        coincidental: cc,
        offsets,
        per_factor_corners,
    };
    check_invariants(&f)?;
    Ok(f)
}

fn check_invariants(f: &Factorization) -> Result<()> {
    let fail = |msg: String| Err(Error::Decomposition(msg));
    let pieces: Vec<BTreeSet<Cell>> = (0..f.factors.len()).map(|u| f.embedded(u)).collect();
    let union: BTreeSet<Cell> = pieces.iter().flatten().copied().collect();
    if &union != f.ladder.cell_set() {
        return fail("factors do not cover the ladder".into());
    }
    for u in 0..pieces.len() {
        for v in u + 1..pieces.len() {
            let common: Vec<Cell> = pieces[u].intersection(&pieces[v]).copied().collect();
            let expected: Vec<Cell> = if v == u + 1 {
                vec![f.coincidental[u]]
            } else {
                vec![]
            };
            if common != expected {
                return fail(format!("factors {u} and {v} overlap in {common:?}"));
            }
        }
    }
    if compose(&f.factors)? != f.ladder {
        return fail("recomposing the factors does not reproduce the ladder".into());
    }
    Ok(())
}

/// `decompose(compose(factors)).factors == factors`.
pub fn factorization_roundtrip_check(factors: &[Ladder]) -> Result<bool> {
    let y = compose(factors)?;
    Ok(decompose(&y)?.factors == factors)
}
