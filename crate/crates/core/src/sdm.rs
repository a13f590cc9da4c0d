//! Gorenstein test and the semidualizing classes `S_0(R_2(Y))`.
//!
//! For `Y = Z_0 # ... # Z_w` the semidualizing classes are exactly the sums
//! `sum_u theta_u [omega_{R_2(Z_u)}]` with `theta_u` in `{0, 1}`, so there are
//! `2^(number of non-Gorenstein factors)` of them.

use serde_json::{json, Value};

use crate::classgroup::{
    canonical_from_profile, embed_with, relabel, Coefficient, DivisorClass, GroupShape,
};
use crate::corners::CornerProfile;
use crate::decompose::{decompose, Factorization};
use crate::error::{Error, Result};
use crate::ladder::{compose, Ladder};
use crate::validate::require_two_connected;

pub(crate) fn gorenstein_profile(profile: &CornerProfile) -> bool {
    let m = profile.rows;
    profile.rows == profile.cols
        && profile
            .lower
            .iter()
            .chain(&profile.upper)
            .all(|c| c.row + c.col == m + 1)
}

/// Square bounding box and every inside corner on the antidiagonal `i + j = m + 1`.
pub fn is_gorenstein(y: &Ladder) -> Result<bool> {
    Ok(gorenstein_profile(&require_two_connected(y)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSummary<T> {
    pub rows: usize,
    pub cols: usize,
    pub gorenstein: bool,
    pub epsilon: u8,
    pub omega_image: DivisorClass<T>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdmReport<T> {
    pub rank: usize,
    pub omega: DivisorClass<T>,
    pub factors: Vec<FactorSummary<T>>,
    pub count: u128,
    pub classes: Vec<DivisorClass<T>>,
    pub thetas: Vec<Vec<u8>>,
    /// `w = 0`: the answer is the two-sided ladder base case, which is
    /// taken as given rather than derived here.
    pub base_case_external: bool,
}

impl<T: Coefficient> SdmReport<T> {
    pub fn epsilons(&self) -> Vec<u8> {
        self.factors.iter().map(|f| f.epsilon).collect()
    }

    pub fn to_json(&self) -> Result<Value> {
        let factors = self
            .factors
            .iter()
            .map(|f| {
                Ok(json!({
                    "gorenstein": f.gorenstein,
                    "m": f.rows,
                    "n": f.cols,
                    "omega_image": f.omega_image.to_json()?,
                }))
            })
            .collect::<Result<Vec<_>>>()?;
        let classes = self
            .classes
            .iter()
            .map(DivisorClass::to_json)
            .collect::<Result<Vec<_>>>()?;
        let count = u64::try_from(self.count).map_err(|_| Error::Overflow)?;
        Ok(json!({
            "classes": classes,
            "count": count,
            "factors": factors,
            "omega": self.omega.to_json()?,
            "rank": self.rank,
            "thetas": self.thetas,
        }))
    }
}

/// All `theta` vectors with `theta_u = 0` on Gorenstein factors, in
/// lexicographic order.
fn theta_vectors(epsilons: &[u8]) -> Vec<Vec<u8>> {
    let free: Vec<usize> = (0..epsilons.len()).filter(|&u| epsilons[u] == 1).collect();
    let e = free.len();
    (0..1u128 << e)
        .map(|bits| {
            let mut theta = vec![0u8; epsilons.len()];
            for (pos, &u) in free.iter().enumerate() {
                // first free factor is the most significant bit
                theta[u] = ((bits >> (e - 1 - pos)) & 1) as u8;
            }
            theta
        })
        .collect()
}

pub fn classify<T: Coefficient>(y: &Ladder) -> Result<SdmReport<T>> {
    let f = decompose(y)?;
    classify_factorization(&f)
}

pub fn classify_factorization<T: Coefficient>(f: &Factorization) -> Result<SdmReport<T>> {
    let shape = GroupShape::of(&f.profile);
    let map = relabel(f)?;
    let mut factors = Vec::with_capacity(f.factors.len());
    for (u, z) in f.factors.iter().enumerate() {
        let gorenstein = gorenstein_profile(&f.per_factor_corners[u]);
        let omega_image: DivisorClass<T> = embed_with(f, &map, u)?;
        if gorenstein != omega_image.is_zero() {
            return Err(Error::Inconsistent(format!(
                "factor {u}: Gorenstein = {gorenstein} but canonical image is {omega_image}"
            )));
        }
        factors.push(FactorSummary {
            rows: z.rows(),
            cols: z.cols(),
            gorenstein,
            epsilon: u8::from(!gorenstein),
            omega_image,
        });
    }

    let omega: DivisorClass<T> = canonical_from_profile(&f.profile)?;
    let summed = factors
        .iter()
        .try_fold(DivisorClass::zero(shape), |acc, fs| {
            acc.checked_add(&fs.omega_image)
        })?;
    if summed != omega {
        return Err(Error::Inconsistent(format!(
            "canonical class {omega} differs from the sum of factor images {summed}"
        )));
    }

    let epsilons: Vec<u8> = factors.iter().map(|fs| fs.epsilon).collect();
    let exponent: u32 = epsilons.iter().map(|&e| u32::from(e)).sum();
    if exponent >= 128 {
        return Err(Error::Overflow);
    }
    let thetas = theta_vectors(&epsilons);
    let classes = thetas
        .iter()
        .map(|theta| {
            theta
                .iter()
                .zip(&factors)
                .filter(|(&t, _)| t == 1)
                .try_fold(DivisorClass::zero(shape), |acc, (_, fs)| {
                    acc.checked_add(&fs.omega_image)
                })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(SdmReport {
        rank: shape.rank(),
        omega,
        factors,
        count: 1u128 << exponent,
        classes,
        thetas,
        base_case_external: f.w() == 0,
    })
}

/// `Z_0 # ... # Z_{N-1}` of full non-square matrices, whose ring has exactly
/// `2^N` semidualizing classes.
pub fn construct_2n(n: usize, sizes: &[(usize, usize)]) -> Result<Ladder> {
    if n == 0 || sizes.len() != n {
        return Err(Error::BlockCount);
    }
    let blocks = sizes
        .iter()
        .map(|&(r, c)| {
            if r < 2 || c < 2 {
                Err(Error::BlockTooSmall(r, c))
            } else if r == c {
                Err(Error::SquareBlock(r, c))
            } else {
                Ladder::rectangle(r, c)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    compose(&blocks)
}
