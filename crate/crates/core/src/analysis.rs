//! Sign scans of the quadratic remainder and of the coefficients `b_k(α)`.
//!
//! All functions take `β = (1−α)/2` and compare against `c = (α−1)²/4`.

use crate::error::{HardyError, Result};
use crate::numerics::{g_minus_quadratic, CoefficientTable, TOL_ZERO};
use crate::scalar::Scalar;
use crate::weights::{hardy_constant, WeightParams};

/// Margins `E(x) = g(x) − ((α−1)²/4)x²` on a uniform grid in `(0, x_max]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport<T> {
    pub alpha: T,
    pub x_max: T,
    pub points: usize,
    pub min_margin: T,
    pub argmin_x: T,
    /// `E(x_max)`.
    pub margin_at_end: T,
    /// Grid intervals `[x_a, x_b]` between consecutive definitely-signed
    /// samples of opposite sign, ordered and disjoint.
    pub sign_changes: Vec<(T, T)>,
}

/// `E(x)` for `0 < x ≤ 1`. At `x = 1` the closed formula is used
/// (`g(1) = 1 + 2^α − 0^β − 2^{α+β}`, which is `−∞` when `β < 0`).
pub fn remainder<T: Scalar>(alpha: T, x: T) -> Result<T> {
    let params = WeightParams::hardy_optimal(alpha);
    let c = hardy_constant(alpha);
    if x == T::one() {
        let two = T::lit(2.0);
        let g = T::one() + two.powf(alpha)
            - T::zero().powf(params.beta)
            - two.powf(alpha + params.beta);
        return Ok(g - c);
    }
    g_minus_quadratic(&params, c, x)
}

/// `(x_i, E(x_i))` for `x_i = i·x_max/points`, `i = 1..=points`.
pub fn remainder_grid<T: Scalar>(alpha: T, x_max: T, points: usize) -> Result<Vec<(T, T)>> {
    if !(x_max > T::zero() && x_max <= T::one()) {
        return Err(HardyError::InvalidArgument(format!(
            "x_max must lie in (0, 1], got {:?}",
            x_max
        )));
    }
    if points == 0 {
        return Err(HardyError::InvalidArgument(
            "scan needs at least one point".into(),
        ));
    }
    let step = x_max / T::from_index(points);
    (1..=points)
        .map(|i| {
            let x = if i == points {
                x_max
            } else {
                step * T::from_index(i)
            };
            Ok((x, remainder(alpha, x)?))
        })
        .collect()
}

/// Sign of `E(x)` with zero band `TOL_ZERO·(1+c)·x²`; the summands of
/// `E` are `O(x²)` so this is the rounding floor of the evaluation.
fn margin_sign<T: Scalar>(margin: T, x: T, c: T) -> i8 {
    let tol = T::lit(TOL_ZERO) * (T::one() + c) * x * x;
    if margin > tol {
        1
    } else if margin < -tol {
        -1
    } else {
        0
    }
}

/// Scan of `E` over `(0, x_max]`.
pub fn remainder_scan<T: Scalar>(alpha: T, x_max: T, points: usize) -> Result<ScanReport<T>> {
    let samples = remainder_grid(alpha, x_max, points)?;
    let c = hardy_constant(alpha);

    let (mut argmin_x, mut min_margin) = samples[0];
    for &(x, m) in &samples[1..] {
        if m < min_margin {
            min_margin = m;
            argmin_x = x;
        }
    }

    let mut sign_changes = Vec::new();
    let mut last: Option<(T, i8)> = None;
    for &(x, m) in &samples {
        let s = margin_sign(m, x, c);
        if s == 0 {
            continue;
        }
        if let Some((x_prev, s_prev)) = last {
            if s_prev != s {
                sign_changes.push((x_prev, x));
            }
        }
        last = Some((x, s));
    }

    Ok(ScanReport {
        alpha,
        x_max,
        points,
        min_margin,
        argmin_x,
        margin_at_end: samples[samples.len() - 1].1,
        sign_changes,
    })
}

/// `w_{α,(1−α)/2}(1) − (α−1)²/4 = 1 + 2^α − 2^{(1+α)/2} − (α−1)²/4`.
pub fn boundary_weight_margin<T: Scalar>(alpha: T) -> T {
    let two = T::lit(2.0);
    T::one() + two.powf(alpha) - two.powf((T::one() + alpha) / two) - hardy_constant(alpha)
}

/// `b_k(α)` with sign classes for `2 ≤ k ≤ k_max`.
pub fn coefficient_signs<T: Scalar>(alpha: T, k_max: usize) -> Result<CoefficientTable<T>> {
    if k_max < 2 {
        return Err(HardyError::IndexTooSmall { k: k_max, min: 2 });
    }
    CoefficientTable::build(alpha, 2, k_max)
}

/// First `k ≤ k_max` with `b_k(α)` classified negative, if any.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjectureFinding<T> {
    pub alpha: T,
    pub first_negative_k: Option<usize>,
}

/// Looks for a negative `b_k(α)` at each `α`. Findings are raw evidence;
/// an empty result says nothing beyond `k_max`.
pub fn conjecture_scan<T: Scalar>(alphas: &[T], k_max: usize) -> Result<Vec<ConjectureFinding<T>>> {
    if k_max < 3 {
        return Err(HardyError::IndexTooSmall { k: k_max, min: 3 });
    }
    alphas
        .iter()
        .map(|&alpha| {
            let table = coefficient_signs(alpha, k_max)?;
            Ok(ConjectureFinding {
                alpha,
                first_negative_k: table.first_negative(),
            })
        })
        .collect()
}
