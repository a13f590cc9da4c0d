//! Monomials of `R_2(Y) = k[Y]/I_2(Y)` via rewriting with the 2-minors.
//!
//! Every generator `x_ij x_pq - x_iq x_pj` (`i < p`, `j < q`) is oriented
//! from the diagonal product to the antidiagonal one. A rewrite lowers the
//! exponent of the northwest cell `x_ij` and leaves every row-major earlier
//! cell alone, so each step strictly decreases the monomial in the
//! lexicographic order on row-major exponent vectors and chains terminate.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ladder::{Cell, Ladder};

/// Upper limit on degree bounds accepted by the enumeration routines.
pub const MAX_DEGREE_BOUND: usize = 8;

/// A monomial over the cells of a ladder; zero exponents are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: BTreeMap<Cell, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(cell: Cell) -> Self {
        Monomial::var_pow(cell, 1)
    }

    pub fn var_pow(cell: Cell, e: u32) -> Self {
        let mut m = Monomial::one();
        m.bump(cell, e);
        m
    }

    /// Product of the listed variables, with repetition.
    pub fn product<I: IntoIterator<Item = Cell>>(cells: I) -> Self {
        let mut m = Monomial::one();
        for c in cells {
            m.bump(c, 1);
        }
        m
    }

    pub fn from_exponents<I: IntoIterator<Item = (Cell, u32)>>(pairs: I) -> Self {
        let mut m = Monomial::one();
        for (c, e) in pairs {
            m.bump(c, e);
        }
        m
    }

    fn bump(&mut self, cell: Cell, e: u32) {
        if e > 0 {
            *self.exps.entry(cell).or_insert(0) += e;
        }
    }

    fn drop_one(&mut self, cell: Cell) {
        let e = self.exps.get_mut(&cell).expect("cell in support");
        *e -= 1;
        if *e == 0 {
            self.exps.remove(&cell);
        }
    }

    pub fn degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn exponent(&self, cell: Cell) -> u32 {
        self.exps.get(&cell).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = Cell> + '_ {
        self.exps.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.exps.iter().map(|(c, e)| (*c, *e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (c, e) in other.iter() {
            out.bump(c, e);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: if k == 0 {
                BTreeMap::new()
            } else {
                self.exps.iter().map(|(c, e)| (*c, e * k)).collect()
            },
        }
    }

    /// Total exponent carried by cells in `set`.
    pub fn weight_in(&self, set: &BTreeSet<Cell>) -> u32 {
        self.iter()
            .filter(|(c, _)| set.contains(c))
            .map(|(_, e)| e)
            .sum()
    }

    pub fn to_json(&self) -> Value {
        let exps: Vec<Value> = self.iter().map(|(c, e)| json!([c.row, c.col, e])).collect();
        json!({ "exps": exps })
    }

    /// Parses `{"exps": [[row, col, e], ...]}`; repeated cells accumulate.
    pub fn parse_json(text: &str) -> Result<Monomial> {
        #[derive(Deserialize)]
        struct Doc {
            exps: Vec<(usize, usize, u32)>,
        }
        let doc: Doc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut m = Monomial::one();
        for (r, c, e) in doc.exps {
            if r == 0 || c == 0 {
                return Err(Error::ZeroCoordinate(r, c));
            }
            m.bump(Cell::new(r, c), e);
        }
        Ok(m)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (n, (c, e)) in self.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            write!(f, "x_{{{},{}}}", c.row, c.col)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// The 2-minor rewrite rules of a ladder, as (northwest, southeast) pairs.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    ambient: Ladder,
    rules: BTreeSet<(Cell, Cell)>,
}

impl RewriteSystem {
    pub fn new(ambient: &Ladder) -> Self {
        let rules = ambient.minors().into_iter().collect();
        RewriteSystem {
            ambient: ambient.clone(),
            rules,
        }
    }

    pub fn ambient(&self) -> &Ladder {
        &self.ambient
    }

    pub fn rules(&self) -> &BTreeSet<(Cell, Cell)> {
        &self.rules
    }

    pub fn check_support(&self, m: &Monomial) -> Result<()> {
        match m.support().find(|c| !self.ambient.contains(*c)) {
            Some(c) => Err(Error::CellNotInLadder(c)),
            None => Ok(()),
        }
    }

    fn redexes<'a>(&'a self, m: &'a Monomial) -> impl Iterator<Item = (Cell, Cell)> + 'a {
        m.exps.keys().flat_map(move |&nw| {
            m.exps
                .range(Cell::new(nw.row + 1, 0)..)
                .map(move |(&se, _)| (nw, se))
                .filter(move |&(nw, se)| nw.is_diagonal_with(se) && self.rules.contains(&(nw, se)))
        })
    }

    fn apply(m: &Monomial, (nw, se): (Cell, Cell)) -> Monomial {
        let mut out = m.clone();
        out.drop_one(nw);
        out.drop_one(se);
        out.bump(Cell::new(nw.row, se.col), 1);
        out.bump(Cell::new(se.row, nw.col), 1);
        out
    }

    /// Rewrites with the lexicographically smallest applicable rule until
    /// none applies.
    pub fn normal_form(&self, m: &Monomial) -> Result<Monomial> {
        self.check_support(m)?;
        Ok(self.nf_unchecked(m.clone()))
    }

    fn nf_unchecked(&self, mut m: Monomial) -> Monomial {
        loop {
            let rule = self.redexes(&m).next();
            match rule {
                Some(rule) => m = Self::apply(&m, rule),
                None => return m,
            }
        }
    }

    pub fn is_normal(&self, m: &Monomial) -> bool {
        self.redexes(m).next().is_none()
    }

    /// Every monomial one rewrite step away, over all applicable rules.
    pub fn successors(&self, m: &Monomial) -> Vec<Monomial> {
        self.redexes(m).map(|r| Self::apply(m, r)).collect()
    }

    /// Terminal monomials of every maximal rewrite sequence from `m`, found by
    /// exploring all rule choices.
    pub fn reachable_normal_forms(&self, m: &Monomial) -> Result<BTreeSet<Monomial>> {
        self.check_support(m)?;
        let mut seen = BTreeSet::from([m.clone()]);
        let mut stack = vec![m.clone()];
        let mut terminals = BTreeSet::new();
        while let Some(cur) = stack.pop() {
            let next = self.successors(&cur);
            if next.is_empty() {
                terminals.insert(cur);
                continue;
            }
            for n in next {
                if seen.insert(n.clone()) {
                    stack.push(n);
                }
            }
        }
        Ok(terminals)
    }

    pub fn equal_mod_minors(&self, a: &Monomial, b: &Monomial) -> Result<bool> {
        Ok(self.normal_form(a)? == self.normal_form(b)?)
    }

    /// Normal-form monomials of each degree `0..=max_degree`.
    pub fn standard_monomials(&self, max_degree: usize) -> Vec<BTreeSet<Monomial>> {
        let mut layers = vec![BTreeSet::from([Monomial::one()])];
        for _ in 0..max_degree {
            let prev = layers.last().unwrap();
            let next: BTreeSet<Monomial> = prev
                .iter()
                .flat_map(|m| {
                    self.ambient
                        .cells()
                        .map(move |c| self.nf_unchecked(m.mul(&Monomial::var(c))))
                })
                .collect();
            layers.push(next);
        }
        layers
    }

    fn check_bound(d: usize) -> Result<()> {
        if (1..=MAX_DEGREE_BOUND).contains(&d) {
            Ok(())
        } else {
            Err(Error::DegreeBound(d, MAX_DEGREE_BOUND))
        }
    }

    fn check_gens(&self, gens: &BTreeSet<Cell>) -> Result<()> {
        match gens.iter().find(|c| !self.ambient.contains(**c)) {
            Some(&c) => Err(Error::CellNotInLadder(c)),
            None => Ok(()),
        }
    }

    fn ideal_with(
        &self,
        gens: &BTreeSet<Cell>,
        layers: &[BTreeSet<Monomial>],
        d: usize,
    ) -> BTreeSet<Monomial> {
        let mut out = BTreeSet::new();
        for layer in &layers[..d] {
            for m in layer {
                for &g in gens {
                    out.insert(self.nf_unchecked(m.mul(&Monomial::var(g))));
                }
            }
        }
        out
    }

    /// Normal forms of all monomials of degree `<= d` in the ideal generated
    /// by the variables `gens`.
    pub fn ideal_monomials_bounded(
        &self,
        gens: &BTreeSet<Cell>,
        d: usize,
    ) -> Result<BTreeSet<Monomial>> {
        Self::check_bound(d)?;
        self.check_gens(gens)?;
        let layers = self.standard_monomials(d - 1);
        Ok(self.ideal_with(gens, &layers, d))
    }

    /// `m` is a multiple of `divisor` in `R_2(Y)`: some normal-form `t` of the
    /// complementary degree has `NF(t * divisor) = m`.
    fn divides(&self, divisor: &Monomial, m: &Monomial, layers: &[BTreeSet<Monomial>]) -> bool {
        let (dd, dm) = (divisor.degree() as usize, m.degree() as usize);
        if dd > dm {
            return false;
        }
        layers[dm - dd]
            .iter()
            .any(|t| &self.nf_unchecked(t.mul(divisor)) == m)
    }

    /// Minimal monomial generators of the degree-`<= d` part of the
    /// intersection of the two variable-generated ideals.
    pub fn intersect_bounded(
        &self,
        gens1: &BTreeSet<Cell>,
        gens2: &BTreeSet<Cell>,
        d: usize,
    ) -> Result<BTreeSet<Monomial>> {
        Self::check_bound(d)?;
        self.check_gens(gens1)?;
        self.check_gens(gens2)?;
        let layers = self.standard_monomials(d);
        let a = self.ideal_with(gens1, &layers, d);
        let b = self.ideal_with(gens2, &layers, d);
        let common: Vec<Monomial> = a.intersection(&b).cloned().collect();
        let minimal = common
            .iter()
            .filter(|m| {
                !common
                    .iter()
                    .any(|other| other != *m && self.divides(other, m, &layers))
            })
            .cloned()
            .collect();
        Ok(minimal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l3() -> Ladder {
        Ladder::parse_ascii(".##\n.##\n###\n##.\n##.").unwrap()
    }

    fn x(r: usize, c: usize) -> Monomial {
        Monomial::var(Cell::new(r, c))
    }

    fn cells(v: &[(usize, usize)]) -> BTreeSet<Cell> {
        v.iter().map(|&p| p.into()).collect()
    }

    #[test]
    fn single_rewrite() {
        let rs = RewriteSystem::new(&l3());
        assert_eq!(
            rs.normal_form(&x(1, 2).mul(&x(3, 3))).unwrap(),
            x(1, 3).mul(&x(3, 2))
        );
    }

    #[test]
    fn antidiagonal_pair_is_normal() {
        let rs = RewriteSystem::new(&l3());
        let m = x(2, 2).mul(&x(5, 1));
        assert_eq!(rs.normal_form(&m).unwrap(), m);
        assert_eq!(rs.normal_form(&Monomial::one()).unwrap(), Monomial::one());
    }

    #[test]
    fn unsupported_cell() {
        let rs = RewriteSystem::new(&l3());
        assert_eq!(
            rs.normal_form(&x(1, 1)),
            Err(Error::CellNotInLadder(Cell::new(1, 1)))
        );
    }

    #[test]
    fn equalities() {
        let rs = RewriteSystem::new(&l3());
        assert!(rs
            .equal_mod_minors(&x(1, 2).mul(&x(2, 3)), &x(1, 3).mul(&x(2, 2)))
            .unwrap());
        let m = x(4, 1).pow(2).mul(&x(1, 3));
        assert!(rs.equal_mod_minors(&m, &m).unwrap());
        assert!(!rs
            .equal_mod_minors(&x(1, 2).mul(&x(5, 1)), &x(1, 3).mul(&x(5, 1)))
            .unwrap());
    }

    #[test]
    fn generators_in_degree_one() {
        let rs = RewriteSystem::new(&l3());
        let got = rs
            .ideal_monomials_bounded(&cells(&[(1, 2), (1, 3)]), 1)
            .unwrap();
        assert_eq!(got, [x(1, 2), x(1, 3)].into_iter().collect());
        assert!(rs
            .ideal_monomials_bounded(&BTreeSet::new(), 3)
            .unwrap()
            .is_empty());
        assert_eq!(
            rs.ideal_monomials_bounded(&cells(&[(1, 2)]), 9),
            Err(Error::DegreeBound(9, MAX_DEGREE_BOUND))
        );
        assert_eq!(
            rs.ideal_monomials_bounded(&cells(&[(1, 1)]), 2),
            Err(Error::CellNotInLadder(Cell::new(1, 1)))
        );
    }

    #[test]
    fn worked_intersection() {
        let rs = RewriteSystem::new(&l3());
        let q11 = cells(&[(3, 1), (3, 2), (3, 3)]);
        let p10 = cells(&[(1, 2), (2, 2), (3, 1), (3, 2)]);
        let got = rs.intersect_bounded(&q11, &p10, 2).unwrap();
        assert_eq!(got, [x(3, 1), x(3, 2)].into_iter().collect());
    }

    #[test]
    fn identical_generators() {
        let rs = RewriteSystem::new(&l3());
        let g = cells(&[(1, 2), (4, 1)]);
        let got = rs.intersect_bounded(&g, &g, 3).unwrap();
        assert_eq!(got, [x(1, 2), x(4, 1)].into_iter().collect());
    }

    #[test]
    fn corner_to_corner_intersection() {
        let rs = RewriteSystem::new(&l3());
        let got = rs
            .intersect_bounded(&cells(&[(1, 2)]), &cells(&[(3, 3)]), 2)
            .unwrap();
        assert_eq!(got, [x(1, 3).mul(&x(3, 2))].into_iter().collect());
    }

    #[test]
    fn json_roundtrip_and_display() {
        let m = Monomial::parse_json(r#"{"exps": [[1,2,1],[3,3,2],[1,2,1]]}"#).unwrap();
        assert_eq!(m, x(1, 2).pow(2).mul(&x(3, 3).pow(2)));
        assert_eq!(Monomial::parse_json(&m.to_json().to_string()).unwrap(), m);
        assert_eq!(m.to_string(), "x_{1,2}^2*x_{3,3}^2");
        assert_eq!(m.degree(), 4);
    }

    #[test]
    fn exhaustive_exploration_agrees() {
        let rs = RewriteSystem::new(&Ladder::rectangle(3, 3).unwrap());
        let m = x(1, 1).mul(&x(2, 2)).mul(&x(3, 3));
        let nfs = rs.reachable_normal_forms(&m).unwrap();
        assert_eq!(nfs.len(), 1);
        assert_eq!(nfs.into_iter().next().unwrap(), rs.normal_form(&m).unwrap());
    }
}
