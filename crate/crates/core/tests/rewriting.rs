mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::*;
use ladder_det::{Cell, Ladder, Monomial, RewriteSystem};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Image under `x_ij -> s_i t_j`: row and column exponent vectors.
fn bidegree(m: &Monomial) -> (BTreeMap<usize, u32>, BTreeMap<usize, u32>) {
    let mut rows = BTreeMap::new();
    let mut cols = BTreeMap::new();
    for (c, e) in m.iter() {
        *rows.entry(c.row).or_insert(0) += e;
        *cols.entry(c.col).or_insert(0) += e;
    }
    (rows, cols)
}

fn random_monomial(rng: &mut StdRng, y: &Ladder, degree: usize) -> Monomial {
    let cells: Vec<Cell> = y.cells().collect();
    Monomial::product((0..degree).map(|_| *cells.choose(rng).unwrap()))
}

/// Closure of `m` under single rewrites applied in either direction.
fn two_way_closure(y: &Ladder, m: &Monomial) -> BTreeSet<Monomial> {
    let rules: BTreeSet<(Cell, Cell)> = y.minors().into_iter().collect();
    let mut seen = BTreeSet::from([m.clone()]);
    let mut stack = vec![m.clone()];
    while let Some(cur) = stack.pop() {
        let support: Vec<Cell> = cur.support().collect();
        for &a in &support {
            for &b in &support {
                let (lo, hi) = (a.min(b), a.max(b));
                if lo.row == hi.row || lo.col == hi.col {
                    continue;
                }
                // (nw, se) for a diagonal pair, else the rule whose antidiagonal it is
                let rule = if lo.col < hi.col {
                    (lo, hi)
                } else {
                    (cell(lo.row, hi.col), cell(hi.row, lo.col))
                };
                if !rules.contains(&rule) {
                    continue;
                }
                let swapped = [cell(lo.row, hi.col), cell(hi.row, lo.col)];
                let mut exps: BTreeMap<Cell, u32> = cur.iter().collect();
                for c in [lo, hi] {
                    *exps.get_mut(&c).unwrap() -= 1;
                }
                for c in swapped {
                    *exps.entry(c).or_insert(0) += 1;
                }
                let next = Monomial::from_exponents(exps);
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
    }
    seen
}

#[test]
fn equality_matches_toric_image_on_two_connected_ladders() {
    let mut rng = StdRng::seed_from_u64(31);
    for _ in 0..60 {
        let y = random_two_connected(&mut rng, 5, 5);
        let rs = RewriteSystem::new(&y);
        for _ in 0..40 {
            let d = rng.gen_range(1..=4);
            let a = random_monomial(&mut rng, &y, d);
            let b = random_monomial(&mut rng, &y, d);
            assert_eq!(
                rs.equal_mod_minors(&a, &b).unwrap(),
                bidegree(&a) == bidegree(&b),
                "{a} vs {b} on\n{}",
                y.render_ascii(false)
            );
        }
    }
}

#[test]
fn standard_monomials_count_bidegrees() {
    let mut rng = StdRng::seed_from_u64(32);
    for _ in 0..20 {
        let y = random_two_connected(&mut rng, 4, 4);
        let rs = RewriteSystem::new(&y);
        let layers = rs.standard_monomials(3);
        // every degree-d monomial, by brute force, grouped by image
        let mut all = BTreeSet::from([Monomial::one()]);
        for (d, layer) in layers.iter().enumerate() {
            if d > 0 {
                all = all
                    .iter()
                    .flat_map(|m| y.cells().map(move |c| m.mul(&Monomial::var(c))))
                    .collect();
            }
            let images: BTreeSet<_> = all.iter().map(bidegree).collect();
            assert_eq!(layer.len(), images.len());
            assert!(layer.iter().all(|m| rs.is_normal(m)));
        }
    }
}

#[test]
fn classes_are_two_way_rewrite_closures() {
    let mut rng = StdRng::seed_from_u64(33);
    for _ in 0..30 {
        let y = random_staircase(&mut rng, 4, 4);
        let rs = RewriteSystem::new(&y);
        for _ in 0..10 {
            let d = rng.gen_range(1..=3);
            let m = random_monomial(&mut rng, &y, d);
            let closure = two_way_closure(&y, &m);
            let nf = rs.normal_form(&m).unwrap();
            for other in &closure {
                assert_eq!(rs.normal_form(other).unwrap(), nf);
            }
            // the class of m among all degree-d monomials is exactly the closure
            let mut class = BTreeSet::new();
            let mut all = BTreeSet::from([Monomial::one()]);
            for _ in 0..m.degree() {
                all = all
                    .iter()
                    .flat_map(|a| y.cells().map(move |c| a.mul(&Monomial::var(c))))
                    .collect();
            }
            for a in all {
                if rs.normal_form(&a).unwrap() == nf {
                    class.insert(a);
                }
            }
            assert_eq!(class, closure);
        }
    }
}

#[test]
fn ideal_enumeration_is_monotone() {
    let mut rng = StdRng::seed_from_u64(34);
    for _ in 0..20 {
        let y = random_two_connected(&mut rng, 4, 4);
        let rs = RewriteSystem::new(&y);
        let cells: Vec<Cell> = y.cells().collect();
        let small: BTreeSet<Cell> = cells
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.3))
            .collect();
        let mut big = small.clone();
        big.extend(cells.iter().copied().filter(|_| rng.gen_bool(0.3)));
        let mut prev = BTreeSet::new();
        for d in 1..=3 {
            let cur = rs.ideal_monomials_bounded(&small, d).unwrap();
            assert!(prev.is_subset(&cur));
            assert!(cur.is_subset(&rs.ideal_monomials_bounded(&big, d).unwrap()));
            assert!(cur
                .iter()
                .all(|m| m.degree() as usize <= d && rs.is_normal(m)));
            prev = cur;
        }
    }
}

#[test]
fn intersection_generators_lie_in_both_ideals() {
    let mut rng = StdRng::seed_from_u64(35);
    for _ in 0..15 {
        let y = random_two_connected(&mut rng, 4, 4);
        let rs = RewriteSystem::new(&y);
        let cells: Vec<Cell> = y.cells().collect();
        let g1: BTreeSet<Cell> = cells.choose_multiple(&mut rng, 2).copied().collect();
        let g2: BTreeSet<Cell> = cells.choose_multiple(&mut rng, 2).copied().collect();
        let i1 = rs.ideal_monomials_bounded(&g1, 2).unwrap();
        let i2 = rs.ideal_monomials_bounded(&g2, 2).unwrap();
        let min = rs.intersect_bounded(&g1, &g2, 2).unwrap();
        for m in &min {
            assert!(i1.contains(m) && i2.contains(m));
        }
        // every common element of degree 1 is a generator
        for m in i1.intersection(&i2).filter(|m| m.degree() == 1) {
            assert!(min.contains(m));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn normal_forms_are_stable(seed in any::<u64>(), d in 0usize..=5) {
        let mut rng = StdRng::seed_from_u64(seed);
        let y = random_staircase(&mut rng, 6, 6);
        let rs = RewriteSystem::new(&y);
        let m = random_monomial(&mut rng, &y, d);
        let nf = rs.normal_form(&m).unwrap();
        prop_assert_eq!(nf.degree(), m.degree());
        prop_assert_eq!(bidegree(&nf), bidegree(&m));
        prop_assert!(rs.is_normal(&nf));
        prop_assert_eq!(rs.normal_form(&nf).unwrap(), nf.clone());
        let n2 = random_monomial(&mut rng, &y, d);
        // equal_mod_minors is compatible with multiplication
        if rs.equal_mod_minors(&m, &n2).unwrap() {
            let t = random_monomial(&mut rng, &y, 1);
            prop_assert!(rs.equal_mod_minors(&m.mul(&t), &n2.mul(&t)).unwrap());
        }
    }
}
