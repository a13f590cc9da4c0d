#![allow(dead_code)]

use ladder_det::{coincidental_corners, minor_connectivity, Cell, Ladder};
use rand::rngs::StdRng;
use rand::Rng;

/// Row intervals `[l_i, r_i]` with both ends non-increasing down the rows,
/// `r_1 = n`, `l_m = 1`, and consecutive rows overlapping.
pub fn random_intervals(rng: &mut StdRng, m: usize, n: usize) -> Vec<(usize, usize)> {
    let mut rs = vec![n; m];
    for i in 1..m {
        rs[i] = if rng.gen_bool(0.5) {
            rs[i - 1]
        } else {
            rng.gen_range(1..=rs[i - 1])
        };
    }
    let mut ls = vec![1; m];
    for i in (0..m.saturating_sub(1)).rev() {
        ls[i] = if rng.gen_bool(0.5) {
            ls[i + 1]
        } else {
            rng.gen_range(ls[i + 1]..=rs[i + 1])
        };
    }
    ls.into_iter().zip(rs).collect()
}

pub fn random_staircase(rng: &mut StdRng, max_m: usize, max_n: usize) -> Ladder {
    let m = rng.gen_range(1..=max_m);
    let n = rng.gen_range(1..=max_n);
    Ladder::from_row_intervals(&random_intervals(rng, m, n)).expect("staircases are ladders")
}

pub fn is_two_connected(y: &Ladder) -> bool {
    minor_connectivity(y) == (true, true)
}

pub fn random_two_connected(rng: &mut StdRng, max_m: usize, max_n: usize) -> Ladder {
    loop {
        let m = rng.gen_range(2..=max_m);
        let n = rng.gen_range(2..=max_n);
        let y = Ladder::from_row_intervals(&random_intervals(rng, m, n)).unwrap();
        if is_two_connected(&y) {
            return y;
        }
    }
}

/// 2-connected, no coincidental corners, within `max x max`.
pub fn random_factor(rng: &mut StdRng, max: usize) -> Ladder {
    loop {
        let y = random_two_connected(rng, max, max);
        if coincidental_corners(&y).is_empty() {
            return y;
        }
    }
}

/// Every staircase ladder (row intervals, both ends non-increasing) whose
/// bounding box is exactly `m x n` with `m, n <= max`.
pub fn all_staircases(max: usize) -> Vec<Ladder> {
    fn extend(rows: &mut Vec<(usize, usize)>, m: usize, n: usize, out: &mut Vec<Ladder>) {
        if rows.len() == m {
            if rows[0].1 == n && rows[m - 1].0 == 1 {
                out.push(Ladder::from_row_intervals(rows).unwrap());
            }
            return;
        }
        let (pl, pr) = rows.last().copied().unwrap_or((n, n));
        for r in 1..=pr {
            for l in 1..=r.min(pl) {
                rows.push((l, r));
                extend(rows, m, n, out);
                rows.pop();
            }
        }
    }
    let mut out = Vec::new();
    for m in 1..=max {
        for n in 1..=max {
            extend(&mut Vec::new(), m, n, &mut out);
        }
    }
    out
}

pub fn rect(m: usize, n: usize) -> Ladder {
    Ladder::rectangle(m, n).unwrap()
}

pub fn l1() -> Ladder {
    Ladder::parse_ascii(".##\n###\n###\n##.\n##.").unwrap()
}

pub fn l2() -> Ladder {
    Ladder::parse_ascii(".####\n.####\n.###.\n###..\n###..").unwrap()
}

pub fn l3() -> Ladder {
    Ladder::parse_ascii(".##\n.##\n###\n##.\n##.").unwrap()
}

pub fn cell(r: usize, c: usize) -> Cell {
    Cell::new(r, c)
}
