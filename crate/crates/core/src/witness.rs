//! Non-injectivity witnesses for `Y = Z_0 # Z_1` with `Z_0`, `Z_1` full matrices.
//!
//! With `c` the coincidental corner, `lambda_01 = m_0 - n_0` and
//! `lambda_11 = m_1 - n_1`. When `lambda_11 = -lambda_01 > 0` (or
//! `lambda_11 = lambda_01 > 0`) two different pure tensors of monomials have
//! the same product in `R_2(Y)`. The mirrored sign patterns are checked on the
//! antitranspose, which negates both values.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use crate::decompose::decompose;
use crate::error::{Error, Result};
use crate::ladder::{Cell, Ladder};
use crate::rewrite::{Monomial, RewriteSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WitnessCase {
    /// `lambda_11 = -lambda_01 > 0`.
    Negative,
    /// `lambda_11 = lambda_01 > 0`.
    Positive,
    /// `lambda_01 = -lambda_11 > 0`, handled on the antitranspose.
    NegativeMirrored,
    /// `lambda_01 = lambda_11 < 0`, handled on the antitranspose.
    PositiveMirrored,
}

impl WitnessCase {
    pub fn name(self) -> &'static str {
        match self {
            WitnessCase::Negative => "lambda11 = -lambda01 > 0",
            WitnessCase::Positive => "lambda11 = lambda01 > 0",
            WitnessCase::NegativeMirrored => "lambda01 = -lambda11 > 0",
            WitnessCase::PositiveMirrored => "lambda01 = lambda11 < 0",
        }
    }

    pub fn is_mirrored(self) -> bool {
        matches!(
            self,
            WitnessCase::NegativeMirrored | WitnessCase::PositiveMirrored
        )
    }
}

impl fmt::Display for WitnessCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One checked identity `mu(left.0 ⊗ left.1) = mu(right.0 ⊗ right.1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseOutcome {
    pub case: WitnessCase,
    pub lambda: u32,
    /// Ladder the monomials live on: `Y`, or its antitranspose for mirrored cases.
    pub ladder: Ladder,
    pub left: (Monomial, Monomial),
    pub right: (Monomial, Monomial),
    /// The two tensors are distinct as pairs of monomials in `R_2`.
    pub tensors_differ: bool,
    /// Each tensor factor is a product of `lambda` generators of its ideal.
    pub memberships_hold: bool,
    pub identity_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub corner: Cell,
    pub lambda01: i64,
    pub lambda11: i64,
    pub outcome: Option<CaseOutcome>,
}

impl WitnessReport {
    pub fn is_vacuous(&self) -> bool {
        self.outcome.is_none()
    }

    /// Vacuous, or the applicable identity holds with valid memberships.
    pub fn all_hold(&self) -> bool {
        self.outcome
            .as_ref()
            .is_none_or(|o| o.identity_holds && o.memberships_hold && o.tensors_differ)
    }

    pub fn to_json(&self) -> Value {
        let outcome = match &self.outcome {
            None => Value::Null,
            Some(o) => json!({
                "case": o.case.name(),
                "identity_holds": o.identity_holds,
                "lambda": o.lambda,
                "left": [o.left.0.to_json(), o.left.1.to_json()],
                "memberships_hold": o.memberships_hold,
                "mirrored": o.case.is_mirrored(),
                "right": [o.right.0.to_json(), o.right.1.to_json()],
                "tensors_differ": o.tensors_differ,
            }),
        };
        json!({
            "corner": [self.corner.row, self.corner.col],
            "lambda01": self.lambda01,
            "lambda11": self.lambda11,
            "outcome": outcome,
            "vacuous": self.is_vacuous(),
        })
    }
}

/// Coordinates of a `Z_0 # Z_1` of full matrices, with its two lambda values.
struct Shape {
    corner: Cell,
    cols: usize,
    lambda01: i64,
    lambda11: i64,
}

fn shape_of(y: &Ladder) -> Result<Shape> {
    let f = decompose(y).map_err(|e| Error::WitnessShape(e.to_string()))?;
    if f.w() != 1 {
        return Err(Error::WitnessShape(format!(
            "expected exactly one coincidental corner, found {}",
            f.w()
        )));
    }
    if let Some(u) = f.factors.iter().position(|z| !z.is_rectangle()) {
        return Err(Error::WitnessShape(format!(
            "factor {u} is not a full matrix"
        )));
    }
    let c = f.coincidental[0];
    let (m, n) = (y.rows() as i64, y.cols() as i64);
    let (r, s) = (c.row as i64, c.col as i64);
    Ok(Shape {
        corner: c,
        cols: y.cols(),
        lambda01: r + s - 1 - n,
        lambda11: m + 1 - r - s,
    })
}

fn x(r: usize, c: usize) -> Monomial {
    Monomial::var(Cell::new(r, c))
}

fn xp(r: usize, c: usize, e: u32) -> Monomial {
    Monomial::var_pow(Cell::new(r, c), e)
}

struct Ideals {
    q01: BTreeSet<Cell>,
    p10: BTreeSet<Cell>,
    q11: BTreeSet<Cell>,
    q01_prime: BTreeSet<Cell>,
}

fn ideals(y: &Ladder, c: Cell) -> Ideals {
    let pick = |f: &dyn Fn(Cell) -> bool| y.cells().filter(|&z| f(z)).collect();
    Ideals {
        q01: pick(&|z| z.row == 1),
        p10: pick(&|z| z.le_componentwise(c)),
        q11: pick(&|z| z.row == c.row),
        q01_prime: pick(&|z| z.col == c.col),
    }
}

fn in_power(m: &Monomial, gens: &BTreeSet<Cell>, lambda: u32) -> bool {
    m.weight_in(gens) >= lambda
}

/// The base-case identity on `y`, whose lambda values satisfy the hypothesis
/// of `case` (unmirrored form) with `lambda > 0`.
fn check_case(
    y: &Ladder,
    sh: &Shape,
    positive: bool,
    lambda: u32,
    case: WitnessCase,
) -> Result<CaseOutcome> {
    let c = sh.corner;
    let (a, b, n) = (c.row, c.col, sh.cols);
    let ids = ideals(y, c);
    let rs = RewriteSystem::new(y);
    let (left, right, memberships_hold) = if positive {
        // C_9 = q01^l ∩ p10^l, C_10 = q11^l
        let l0 = xp(1, b, lambda - 1).mul(&x(1, n)).mul(&x(a, 1));
        let l1 = x(a, b).mul(&xp(a, n, lambda - 1));
        let r0 = x(a, 1).mul(&xp(1, b, lambda));
        let r1 = xp(a, n, lambda);
        let in_c9 = |m: &Monomial| in_power(m, &ids.q01, lambda) && in_power(m, &ids.p10, lambda);
        let in_c10 = |m: &Monomial| in_power(m, &ids.q11, lambda);
        let ok = in_c9(&l0) && in_c10(&l1) && in_c9(&r0) && in_c10(&r1);
        ((l0, l1), (r0, r1), ok)
    } else {
        // C_8 = p10^l, C_11 = q01'^l ∩ p10^l ∩ q11^l
        let l0 = xp(a, b, lambda);
        let l1 = x(1, b).mul(&x(a, 1)).mul(&xp(a, b, lambda - 1));
        let (r0, r1) = (l1.clone(), l0.clone());
        let in_c8 = |m: &Monomial| in_power(m, &ids.p10, lambda);
        let in_c11 = |m: &Monomial| {
            in_power(m, &ids.q01_prime, lambda)
                && in_power(m, &ids.p10, lambda)
                && in_power(m, &ids.q11, lambda)
        };
        let ok = in_c8(&l0) && in_c11(&l1) && in_c8(&r0) && in_c11(&r1);
        ((l0, l1), (r0, r1), ok)
    };
    let identity_holds = rs.equal_mod_minors(&left.0.mul(&left.1), &right.0.mul(&right.1))?;
    let tensors_differ =
        !(rs.equal_mod_minors(&left.0, &right.0)? && rs.equal_mod_minors(&left.1, &right.1)?);
    Ok(CaseOutcome {
        case,
        lambda,
        ladder: y.clone(),
        left,
        right,
        tensors_differ,
        memberships_hold,
        identity_holds,
    })
}

pub fn verify_witnesses(y: &Ladder) -> Result<WitnessReport> {
    let sh = shape_of(y)?;
    let (l01, l11) = (sh.lambda01, sh.lambda11);
    let outcome = if l11 > 0 && l11 == -l01 {
        Some(check_case(
            y,
            &sh,
            false,
            l11 as u32,
            WitnessCase::Negative,
        )?)
    } else if l11 > 0 && l11 == l01 {
        Some(check_case(y, &sh, true, l11 as u32, WitnessCase::Positive)?)
    } else if l01 > 0 && l01 == -l11 {
        let t = y.antitranspose();
        let st = shape_of(&t)?;
        Some(check_case(
            &t,
            &st,
            false,
            st.lambda11 as u32,
            WitnessCase::NegativeMirrored,
        )?)
    } else if l01 < 0 && l01 == l11 {
        let t = y.antitranspose();
        let st = shape_of(&t)?;
        Some(check_case(
            &t,
            &st,
            true,
            st.lambda11 as u32,
            WitnessCase::PositiveMirrored,
        )?)
    } else {
        None
    };
    Ok(WitnessReport {
        corner: sh.corner,
        lambda01: l01,
        lambda11: l11,
        outcome,
    })
}
