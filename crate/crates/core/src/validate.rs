//! Structural diagnostics: minors coverage, 2-connectedness, sidedness.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde_json::{json, Value};

use crate::corners::{corners, CornerProfile};
use crate::error::{Error, Result};
use crate::ladder::{Cell, Ladder};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sidedness {
    Matrix,
    OneSided,
    TwoSided,
    Other,
}

impl fmt::Display for Sidedness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sidedness::Matrix => "matrix",
            Sidedness::OneSided => "one-sided",
            Sidedness::TwoSided => "two-sided",
            Sidedness::Other => "other",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub is_ladder: bool,
    pub normalized: bool,
    pub every_cell_in_minor: bool,
    pub two_connected: bool,
    pub path_connected: bool,
    pub sidedness: Sidedness,
    pub messages: Vec<String>,
}

impl ValidationReport {
    pub fn to_json(&self) -> Value {
        json!({
            "every_cell_in_minor": self.every_cell_in_minor,
            "is_ladder": self.is_ladder,
            "messages": self.messages,
            "normalized": self.normalized,
            "path_connected": self.path_connected,
            "sidedness": self.sidedness.to_string(),
            "two_connected": self.two_connected,
        })
    }
}

fn connected(cells: &BTreeSet<Cell>, adjacency: &BTreeMap<Cell, Vec<Cell>>) -> bool {
    let Some(&start) = cells.iter().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for &d in adjacency.get(&c).into_iter().flatten() {
            if seen.insert(d) {
                queue.push_back(d);
            }
        }
    }
    seen.len() == cells.len()
}

pub fn is_path_connected(y: &Ladder) -> bool {
    let mut adjacency: BTreeMap<Cell, Vec<Cell>> = BTreeMap::new();
    for c in y.cells() {
        let right = Cell::new(c.row, c.col + 1);
        let down = Cell::new(c.row + 1, c.col);
        for d in [right, down] {
            if y.contains(d) {
                adjacency.entry(c).or_default().push(d);
                adjacency.entry(d).or_default().push(c);
            }
        }
    }
    connected(y.cell_set(), &adjacency)
}

/// Every cell lies in some full 2-minor, and the hypergraph whose edges are
/// the 2-minors is connected.
pub fn minor_connectivity(y: &Ladder) -> (bool, bool) {
    let mut adjacency: BTreeMap<Cell, Vec<Cell>> = BTreeMap::new();
    for (nw, se) in y.minors() {
        let ne = Cell::new(nw.row, se.col);
        let sw = Cell::new(se.row, nw.col);
        // a star is enough for connectivity
        for d in [ne, sw, se] {
            adjacency.entry(nw).or_default().push(d);
            adjacency.entry(d).or_default().push(nw);
        }
    }
    let covered = y.cells().all(|c| adjacency.contains_key(&c));
    (covered, covered && connected(y.cell_set(), &adjacency))
}

pub fn validate(y: &Ladder) -> ValidationReport {
    let profile = corners(y);
    validate_with(y, &profile)
}

pub(crate) fn validate_with(y: &Ladder, profile: &CornerProfile) -> ValidationReport {
    let mut messages = Vec::new();
    let notes = y.notes();
    let normalized = notes.shift == (0, 0);
    if !normalized {
        messages.push(format!(
            "translated by ({},{}) to a (1,1)-based bounding box",
            notes.shift.0, notes.shift.1
        ));
    }
    if notes.duplicates > 0 {
        messages.push(format!("ignored {} duplicate cell(s)", notes.duplicates));
    }
    let (every_cell_in_minor, two_connected) = minor_connectivity(y);
    if !every_cell_in_minor {
        let lonely: Vec<String> = {
            let mut in_minor = BTreeSet::new();
            for (nw, se) in y.minors() {
                in_minor.extend([nw, se, Cell::new(nw.row, se.col), Cell::new(se.row, nw.col)]);
            }
            y.cells()
                .filter(|c| !in_minor.contains(c))
                .map(|c| c.to_string())
                .collect()
        };
        messages.push(format!("cells in no 2-minor: {}", lonely.join(" ")));
    } else if !two_connected {
        messages.push("2-minors split into more than one connected block".into());
    }
    let path_connected = is_path_connected(y);
    if !path_connected {
        messages.push("cell set is not path-connected".into());
    }
    let well_ordered = profile.is_well_ordered();
    if !well_ordered {
        messages.push("inside-corner rows are not strictly increasing inside (1, m)".into());
    }
    let (h, k) = (profile.h(), profile.k());
    let sidedness = if !path_connected || !well_ordered {
        Sidedness::Other
    } else if h == 0 && k == 0 {
        Sidedness::Matrix
    } else if h == 0 || k == 0 {
        Sidedness::OneSided
    } else {
        Sidedness::TwoSided
    };
    ValidationReport {
        is_ladder: true,
        normalized,
        every_cell_in_minor,
        two_connected,
        path_connected,
        sidedness,
        messages,
    }
}

/// Gate for the class-group analysis: 2-connected with well-ordered corners.
pub fn require_two_connected(y: &Ladder) -> Result<CornerProfile> {
    let profile = corners(y);
    let (_, two_connected) = minor_connectivity(y);
    if !two_connected {
        return Err(Error::NotTwoConnected);
    }
    if !profile.is_well_ordered() {
        return Err(Error::UnorderedCorners);
    }
    Ok(profile)
}
