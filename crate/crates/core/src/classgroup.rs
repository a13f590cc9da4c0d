//! Exact arithmetic in `Cl(R_2(Y))`, a free abelian group of rank `h + k + 1`.
//!
//! The basis is `[q_1], ..., [q_{h+1}], [p_1], ..., [p_k]`, keyed by the
//! global (ambient ladder) indices. Double indices `q_{ui}`, `p_{uj}`,
//! `p_{u0}` for the factors of a decomposition are a view provided by
//! [`RelabelMap`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde_json::{Map, Value};

use crate::corners::CornerProfile;
use crate::decompose::Factorization;
use crate::error::{Error, Result};
use crate::ladder::{Cell, Ladder};
use crate::validate::require_two_connected;

/// Exact signed integers usable as class-group coordinates.
pub trait Coefficient:
    Clone + fmt::Debug + fmt::Display + Ord + Hash + Integer + Signed + ToPrimitive + From<i64>
{
}

impl<T> Coefficient for T where
    T: Clone + fmt::Debug + fmt::Display + Ord + Hash + Integer + Signed + ToPrimitive + From<i64>
{
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisLabel {
    /// `[q_i]`, the prime generated by row `a_{i-1}`; `1 <= i <= h+1`.
    Q(usize),
    /// `[p_j]`, the prime generated by the cells northwest of `(c_j, d_j)`; `1 <= j <= k`.
    P(usize),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Q(i) => write!(f, "Q{i}"),
            BasisLabel::P(j) => write!(f, "P{j}"),
        }
    }
}

/// Corner counts of the ambient ladder; fixes the group `Z^{h+k+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupShape {
    pub h: usize,
    pub k: usize,
}

impl GroupShape {
    pub fn of(profile: &CornerProfile) -> Self {
        GroupShape {
            h: profile.h(),
            k: profile.k(),
        }
    }

    pub fn rank(&self) -> usize {
        self.h + self.k + 1
    }

    pub fn contains(&self, label: BasisLabel) -> bool {
        match label {
            BasisLabel::Q(i) => (1..=self.h + 1).contains(&i),
            BasisLabel::P(j) => (1..=self.k).contains(&j),
        }
    }

    pub fn basis(&self) -> Vec<BasisLabel> {
        (1..=self.h + 1)
            .map(BasisLabel::Q)
            .chain((1..=self.k).map(BasisLabel::P))
            .collect()
    }
}

/// An element of `Cl(R_2(Y))` as a sparse coefficient vector. Zero
/// coefficients are never stored, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisorClass<T> {
    shape: GroupShape,
    coeffs: BTreeMap<BasisLabel, T>,
}

impl<T: Coefficient> DivisorClass<T> {
    pub fn zero(shape: GroupShape) -> Self {
        DivisorClass {
            shape,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis_element(shape: GroupShape, label: BasisLabel) -> Result<Self> {
        Self::from_coeffs(shape, [(label, T::one())])
    }

    pub fn from_coeffs<I>(shape: GroupShape, coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BasisLabel, T)>,
    {
        let mut class = Self::zero(shape);
        for (label, c) in coeffs {
            class.add_term(label, c)?;
        }
        Ok(class)
    }

    fn add_term(&mut self, label: BasisLabel, c: T) -> Result<()> {
        if !self.shape.contains(label) {
            return Err(Error::LabelOutOfRange(label.to_string()));
        }
        let entry = self.coeffs.entry(label).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.coeffs.remove(&label);
        }
        Ok(())
    }

    pub fn shape(&self) -> GroupShape {
        self.shape
    }

    pub fn get(&self, label: BasisLabel) -> T {
        self.coeffs.get(&label).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero coordinates in basis order.
    pub fn iter(&self) -> impl Iterator<Item = (BasisLabel, &T)> {
        self.coeffs.iter().map(|(l, c)| (*l, c))
    }

    /// Dense coordinate vector over [`GroupShape::basis`].
    pub fn to_vec(&self) -> Vec<T> {
        self.shape
            .basis()
            .into_iter()
            .map(|l| self.get(l))
            .collect()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.shape != other.shape {
            return Err(Error::GroupMismatch);
        }
        let mut out = self.clone();
        for (l, c) in other.iter() {
            out.add_term(l, c.clone())?;
        }
        Ok(out)
    }

    pub fn scaled(&self, factor: &T) -> Self {
        let coeffs = if factor.is_zero() {
            BTreeMap::new()
        } else {
            self.coeffs
                .iter()
                .map(|(l, c)| (*l, c.clone() * factor.clone()))
                .collect()
        };
        DivisorClass {
            shape: self.shape,
            coeffs,
        }
    }

    /// `{"P": {"1": c, ...}, "Q": {"1": c, ...}}` with zeros omitted.
    pub fn to_json(&self) -> Result<Value> {
        let mut q = Map::new();
        let mut p = Map::new();
        for (label, c) in self.iter() {
            let n = c.to_i64().ok_or(Error::Overflow)?;
            match label {
                BasisLabel::Q(i) => q.insert(i.to_string(), n.into()),
                BasisLabel::P(j) => p.insert(j.to_string(), n.into()),
            };
        }
        let mut out = Map::new();
        out.insert("P".into(), Value::Object(p));
        out.insert("Q".into(), Value::Object(q));
        Ok(Value::Object(out))
    }
}

impl<T: Coefficient> fmt::Display for DivisorClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        f.write_str("{")?;
        for (n, (label, c)) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{label}:{c}")?;
        }
        f.write_str("}")
    }
}

impl<T: Coefficient> Add for &DivisorClass<T> {
    type Output = DivisorClass<T>;

    fn add(self, rhs: Self) -> DivisorClass<T> {
        self.checked_add(rhs)
            .expect("adding classes of different groups")
    }
}

impl<T: Coefficient> Add for DivisorClass<T> {
    type Output = DivisorClass<T>;

    fn add(self, rhs: Self) -> DivisorClass<T> {
        &self + &rhs
    }
}

impl<T: Coefficient> Neg for &DivisorClass<T> {
    type Output = DivisorClass<T>;

    fn neg(self) -> DivisorClass<T> {
        self.scaled(&-T::one())
    }
}

impl<T: Coefficient> Neg for DivisorClass<T> {
    type Output = DivisorClass<T>;

    fn neg(self) -> DivisorClass<T> {
        -&self
    }
}

impl<T: Coefficient> Sub for &DivisorClass<T> {
    type Output = DivisorClass<T>;

    fn sub(self, rhs: Self) -> DivisorClass<T> {
        self + &(-rhs)
    }
}

impl<T: Coefficient> Sub for DivisorClass<T> {
    type Output = DivisorClass<T>;

    fn sub(self, rhs: Self) -> DivisorClass<T> {
        &self - &rhs
    }
}

pub fn basis(y: &Ladder) -> Result<Vec<BasisLabel>> {
    let profile = require_two_connected(y)?;
    Ok(GroupShape::of(&profile).basis())
}

/// Height-one primes whose generators can be listed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealLabel {
    Basis(BasisLabel),
    /// `q_i'`, generated by column `b_i`.
    QPrime(usize),
}

impl From<BasisLabel> for IdealLabel {
    fn from(l: BasisLabel) -> Self {
        IdealLabel::Basis(l)
    }
}

pub fn ideal_generators(y: &Ladder, label: IdealLabel) -> Result<BTreeSet<Cell>> {
    let profile = require_two_connected(y)?;
    generators_in(y, &profile, label)
}

pub(crate) fn generators_in(
    y: &Ladder,
    profile: &CornerProfile,
    label: IdealLabel,
) -> Result<BTreeSet<Cell>> {
    let shape = GroupShape::of(profile);
    let out = match label {
        IdealLabel::Basis(l) if !shape.contains(l) => {
            return Err(Error::LabelOutOfRange(l.to_string()))
        }
        IdealLabel::Basis(BasisLabel::Q(i)) => y.row(profile.a(i - 1).row).collect(),
        IdealLabel::Basis(BasisLabel::P(j)) => {
            let corner = profile.c(j);
            y.cells().filter(|c| c.le_componentwise(corner)).collect()
        }
        IdealLabel::QPrime(i) => {
            if !(1..=profile.h() + 1).contains(&i) {
                return Err(Error::LabelOutOfRange(format!("Q'{i}")));
            }
            let col = profile.a(i).col;
            y.cells().filter(|c| c.col == col).collect()
        }
    };
    Ok(out)
}

fn corner_sum(c: Cell) -> i64 {
    (c.row + c.col) as i64
}

/// Canonical class from corner data: `lambda_i = a_i + b_i - a_{i-1} - b_{i-1}`
/// on `[q_i]` and `delta_j = a_{i_j} + b_{i_j} - c_j - d_j` on `[p_j]`, where
/// `i_j` is the first lower corner (sentinels included) below row `c_j`.
pub fn canonical_from_profile<T: Coefficient>(profile: &CornerProfile) -> Result<DivisorClass<T>> {
    let shape = GroupShape::of(profile);
    let h = profile.h();
    let mut terms = Vec::with_capacity(shape.rank());
    for i in 1..=h + 1 {
        let lambda = corner_sum(profile.a(i)) - corner_sum(profile.a(i - 1));
        terms.push((BasisLabel::Q(i), T::from(lambda)));
    }
    for j in 1..=profile.k() {
        let c = profile.c(j);
        let i_j = (0..=h + 1)
            .find(|&i| profile.a(i).row > c.row)
            .ok_or(Error::UnorderedCorners)?;
        let delta = corner_sum(profile.a(i_j)) - corner_sum(c);
        terms.push((BasisLabel::P(j), T::from(delta)));
    }
    DivisorClass::from_coeffs(shape, terms)
}

pub fn canonical_class<T: Coefficient>(y: &Ladder) -> Result<DivisorClass<T>> {
    canonical_from_profile(&require_two_connected(y)?)
}

/// `I_i = { j : (a_{i-1}, b_i) <= (c_j, d_j) }`.
pub fn qprime_index_set(profile: &CornerProfile, i: usize) -> Result<Vec<usize>> {
    if !(1..=profile.h() + 1).contains(&i) {
        return Err(Error::LabelOutOfRange(format!("Q'{i}")));
    }
    let key = Cell::new(profile.a(i - 1).row, profile.a(i).col);
    Ok((1..=profile.k())
        .filter(|&j| key.le_componentwise(profile.c(j)))
        .collect())
}

/// `[q_i'] = -[q_i] - sum_{j in I_i} [p_j]`.
pub fn qprime_class<T: Coefficient>(y: &Ladder, i: usize) -> Result<DivisorClass<T>> {
    let profile = require_two_connected(y)?;
    let shape = GroupShape::of(&profile);
    let minus_one = -T::one();
    let terms = std::iter::once((BasisLabel::Q(i), minus_one.clone())).chain(
        qprime_index_set(&profile, i)?
            .into_iter()
            .map(|j| (BasisLabel::P(j), minus_one.clone())),
    );
    DivisorClass::from_coeffs(shape, terms)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LocalRole {
    /// `q_{ui}`, `1 <= i <= h_u + 1`.
    Q(usize),
    /// `p_{uj}`, `1 <= j <= k_u`.
    P(usize),
    /// `p_{u0}`, the prime through the `u`-th coincidental corner.
    P0,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LocalLabel {
    pub factor: usize,
    pub role: LocalRole,
}

impl fmt::Display for LocalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u = self.factor;
        match self.role {
            LocalRole::Q(i) => write!(f, "q_{{{u},{i}}}"),
            LocalRole::P(j) => write!(f, "p_{{{u},{j}}}"),
            LocalRole::P0 => write!(f, "p_{{{u},0}}"),
        }
    }
}

/// Bijection between the global basis and the double-indexed labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelabelMap {
    forward: BTreeMap<BasisLabel, LocalLabel>,
    backward: BTreeMap<LocalLabel, BasisLabel>,
}

impl RelabelMap {
    pub fn local(&self, label: BasisLabel) -> Option<LocalLabel> {
        self.forward.get(&label).copied()
    }

    pub fn global(&self, label: LocalLabel) -> Option<BasisLabel> {
        self.backward.get(&label).copied()
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (BasisLabel, LocalLabel)> + '_ {
        self.forward.iter().map(|(g, l)| (*g, *l))
    }

    fn insert(&mut self, global: BasisLabel, local: LocalLabel) -> Result<()> {
        if self.forward.insert(global, local).is_some()
            || self.backward.insert(local, global).is_some()
        {
            return Err(Error::Inconsistent(format!(
                "{global} or {local} labelled twice"
            )));
        }
        Ok(())
    }
}

pub fn relabel(f: &Factorization) -> Result<RelabelMap> {
    let global = &f.profile;
    let shape = GroupShape::of(global);
    let q_by_row: BTreeMap<usize, usize> = (1..=global.h() + 1)
        .map(|i| (global.a(i - 1).row, i))
        .collect();
    let p_by_cell: BTreeMap<Cell, usize> = (1..=global.k()).map(|j| (global.c(j), j)).collect();
    let missing = |what: String| Error::Inconsistent(format!("{what} has no global counterpart"));

    let mut map = RelabelMap {
        forward: BTreeMap::new(),
        backward: BTreeMap::new(),
    };
    for (u, local) in f.per_factor_corners.iter().enumerate() {
        let dr = f.offsets[u].0;
        for i in 1..=local.h() + 1 {
            let row = local.a(i - 1).row + dr;
            let gi = *q_by_row
                .get(&row)
                .ok_or_else(|| missing(format!("q_{{{u},{i}}}")))?;
            map.insert(
                BasisLabel::Q(gi),
                LocalLabel {
                    factor: u,
                    role: LocalRole::Q(i),
                },
            )?;
        }
        for j in 1..=local.k() {
            let cell = f.to_ambient(u, local.c(j));
            let gj = *p_by_cell
                .get(&cell)
                .ok_or_else(|| missing(format!("p_{{{u},{j}}}")))?;
            map.insert(
                BasisLabel::P(gj),
                LocalLabel {
                    factor: u,
                    role: LocalRole::P(j),
                },
            )?;
        }
        if u >= 1 {
            let cell = f.coincidental[u - 1];
            let gj = *p_by_cell
                .get(&cell)
                .ok_or_else(|| missing(format!("p_{{{u},0}}")))?;
            map.insert(
                BasisLabel::P(gj),
                LocalLabel {
                    factor: u,
                    role: LocalRole::P0,
                },
            )?;
        }
    }
    if map.len() != shape.rank() {
        return Err(Error::Inconsistent(format!(
            "relabelling covers {} of {} basis elements",
            map.len(),
            shape.rank()
        )));
    }
    Ok(map)
}

/// Image of `[omega_{R_2(Z_u)}]` in `Cl(R_2(Y))`: the factor's own canonical
/// coordinates carried over by [`relabel`], with `lambda_{u1}` also placed on
/// `p_{u0}` when `u >= 1`.
pub fn embed_factor_omega<T: Coefficient>(f: &Factorization, u: usize) -> Result<DivisorClass<T>> {
    let map = relabel(f)?;
    embed_with(f, &map, u)
}

pub(crate) fn embed_with<T: Coefficient>(
    f: &Factorization,
    map: &RelabelMap,
    u: usize,
) -> Result<DivisorClass<T>> {
    let local_profile = f
        .per_factor_corners
        .get(u)
        .ok_or(Error::FactorOutOfRange(u))?;
    let local: DivisorClass<T> = canonical_from_profile(local_profile)?;
    let shape = GroupShape::of(&f.profile);
    let lookup = |role| {
        map.global(LocalLabel { factor: u, role })
            .ok_or_else(|| Error::Inconsistent(format!("factor {u} role {role:?} unmapped")))
    };
    let mut terms = Vec::new();
    for (label, c) in local.iter() {
        let role = match label {
            BasisLabel::Q(i) => LocalRole::Q(i),
            BasisLabel::P(j) => LocalRole::P(j),
        };
        terms.push((lookup(role)?, c.clone()));
    }
    if u >= 1 {
        terms.push((lookup(LocalRole::P0)?, local.get(BasisLabel::Q(1))));
    }
    DivisorClass::from_coeffs(shape, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::decompose;
    use crate::ladder::compose;
    use num_bigint::BigInt;

    type C = DivisorClass<i64>;

    fn l1() -> Ladder {
        Ladder::parse_ascii(".##\n###\n###\n##.\n##.").unwrap()
    }

    fn l2() -> Ladder {
        Ladder::parse_ascii(".####\n.####\n.###.\n###..\n###..").unwrap()
    }

    fn l3() -> Ladder {
        Ladder::parse_ascii(".##\n.##\n###\n##.\n##.").unwrap()
    }

    fn class(y: &Ladder, terms: &[(BasisLabel, i64)]) -> C {
        let shape = GroupShape::of(&require_two_connected(y).unwrap());
        C::from_coeffs(shape, terms.iter().copied()).unwrap()
    }

    use BasisLabel::{P, Q};

    #[test]
    fn bases() {
        assert_eq!(basis(&l3()).unwrap(), vec![Q(1), Q(2), P(1)]);
        assert_eq!(
            basis(&Ladder::rectangle(4, 3).unwrap()).unwrap(),
            vec![Q(1)]
        );
        let z = Ladder::rectangle(3, 2).unwrap();
        let y = compose(&[l1(), l2(), z.clone(), z]).unwrap();
        assert_eq!(basis(&y).unwrap().len(), 12);
        assert_eq!(
            basis(&Ladder::rectangle(1, 3).unwrap()),
            Err(Error::NotTwoConnected)
        );
    }

    #[test]
    fn l3_generators() {
        let y = l3();
        let cells =
            |v: &[(usize, usize)]| -> BTreeSet<Cell> { v.iter().map(|&p| p.into()).collect() };
        assert_eq!(
            ideal_generators(&y, Q(1).into()).unwrap(),
            cells(&[(1, 2), (1, 3)])
        );
        assert_eq!(
            ideal_generators(&y, P(1).into()).unwrap(),
            cells(&[(1, 2), (2, 2), (3, 1), (3, 2)])
        );
        assert_eq!(
            ideal_generators(&y, Q(2).into()).unwrap(),
            cells(&[(3, 1), (3, 2), (3, 3)])
        );
        // q'_1 is column b_1 = 2
        assert_eq!(
            ideal_generators(&y, IdealLabel::QPrime(1)).unwrap(),
            cells(&[(1, 2), (2, 2), (3, 2), (4, 2), (5, 2)])
        );
        assert!(matches!(
            ideal_generators(&y, Q(3).into()),
            Err(Error::LabelOutOfRange(_))
        ));
        assert!(matches!(
            ideal_generators(&y, P(2).into()),
            Err(Error::LabelOutOfRange(_))
        ));
    }

    #[test]
    fn canonical_classes() {
        assert_eq!(
            canonical_class::<i64>(&l3()).unwrap(),
            class(&l3(), &[(Q(1), 1), (Q(2), 1), (P(1), 1)])
        );
        assert!(canonical_class::<i64>(&l2()).unwrap().is_zero());
        assert_eq!(
            canonical_class::<i64>(&l1()).unwrap(),
            class(&l1(), &[(Q(2), 2), (P(1), 1)])
        );
        let big: DivisorClass<BigInt> = canonical_class(&l1()).unwrap();
        assert_eq!(big.get(Q(2)), BigInt::from(2));
    }

    #[test]
    fn matrix_canonical_class() {
        // lambda_1 = m + 1 - 1 - n
        let c = canonical_class::<i64>(&Ladder::rectangle(5, 2).unwrap()).unwrap();
        assert_eq!(c.to_vec(), vec![3]);
        assert!(canonical_class::<i64>(&Ladder::rectangle(4, 4).unwrap())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn qprime_classes() {
        let y = l3();
        assert_eq!(
            qprime_class::<i64>(&y, 1).unwrap(),
            class(&y, &[(Q(1), -1), (P(1), -1)])
        );
        assert_eq!(
            qprime_class::<i64>(&y, 2).unwrap(),
            class(&y, &[(Q(2), -1), (P(1), -1)])
        );
        let m = Ladder::rectangle(3, 3).unwrap();
        assert_eq!(
            qprime_class::<i64>(&m, 1).unwrap(),
            class(&m, &[(Q(1), -1)])
        );
        assert!(matches!(
            qprime_class::<i64>(&y, 3),
            Err(Error::LabelOutOfRange(_))
        ));
    }

    #[test]
    fn relabel_l3() {
        let f = decompose(&l3()).unwrap();
        let map = relabel(&f).unwrap();
        let loc = |factor, role| LocalLabel { factor, role };
        assert_eq!(map.local(Q(1)), Some(loc(0, LocalRole::Q(1))));
        assert_eq!(map.local(Q(2)), Some(loc(1, LocalRole::Q(1))));
        assert_eq!(map.local(P(1)), Some(loc(1, LocalRole::P0)));
        assert_eq!(map.local(P(1)).unwrap().to_string(), "p_{1,0}");
    }

    #[test]
    fn relabel_without_coincidental_corner_is_identity() {
        let f = decompose(&l2()).unwrap();
        let map = relabel(&f).unwrap();
        for (g, l) in map.iter() {
            assert_eq!(l.factor, 0);
            match (g, l.role) {
                (Q(i), LocalRole::Q(li)) => assert_eq!(i, li),
                (P(j), LocalRole::P(lj)) => assert_eq!(j, lj),
                other => panic!("unexpected pair {other:?}"),
            }
        }
        assert_eq!(map.len(), 4);
    }

    #[test]
    fn relabel_composite() {
        let z = Ladder::rectangle(3, 2).unwrap();
        let f = decompose(&compose(&[l1(), l2(), z.clone(), z]).unwrap()).unwrap();
        let map = relabel(&f).unwrap();
        assert_eq!(map.len(), 12);
        assert_eq!(
            map.iter().filter(|(_, l)| l.role == LocalRole::P0).count(),
            3
        );
    }

    #[test]
    fn embedded_factor_classes_l3() {
        let y = l3();
        let f = decompose(&y).unwrap();
        assert_eq!(
            embed_factor_omega::<i64>(&f, 0).unwrap(),
            class(&y, &[(Q(1), 1)])
        );
        assert_eq!(
            embed_factor_omega::<i64>(&f, 1).unwrap(),
            class(&y, &[(Q(2), 1), (P(1), 1)])
        );
        assert_eq!(
            embed_factor_omega::<i64>(&f, 2),
            Err(Error::FactorOutOfRange(2))
        );
    }

    #[test]
    fn gorenstein_factor_embeds_to_zero() {
        let y = compose(&[Ladder::rectangle(2, 3).unwrap(), l2()]).unwrap();
        let f = decompose(&y).unwrap();
        assert!(embed_factor_omega::<i64>(&f, 1).unwrap().is_zero());
        let total = embed_factor_omega::<i64>(&f, 0).unwrap() + embed_factor_omega(&f, 1).unwrap();
        assert_eq!(total, canonical_class(&y).unwrap());
    }

    #[test]
    fn arithmetic_and_json() {
        let y = l3();
        let a = class(&y, &[(Q(1), 2), (P(1), -1)]);
        let b = class(&y, &[(Q(1), -2), (Q(2), 5)]);
        assert_eq!(&a + &b, class(&y, &[(Q(2), 5), (P(1), -1)]));
        assert!((&a - &a).is_zero());
        assert_eq!(-&a, class(&y, &[(Q(1), -2), (P(1), 1)]));
        assert_eq!(a.to_string(), "{Q1:2, P1:-1}");
        assert_eq!(
            serde_json::to_string(&a.to_json().unwrap()).unwrap(),
            r#"{"P":{"1":-1},"Q":{"1":2}}"#
        );
        let other = C::zero(GroupShape { h: 0, k: 0 });
        assert_eq!(a.checked_add(&other), Err(Error::GroupMismatch));
    }
}
