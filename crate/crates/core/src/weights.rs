//! The two-parameter weight family `w_{α,β}` and its comparison against the
//! power target `c·n^{α−2}`.

use crate::error::{HardyError, Result};
use crate::numerics::{g_minus_quadratic, g_value};
use crate::scalar::{lattice_pow, Scalar};

/// Power-weight exponent `alpha` and supersolution exponent `beta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightParams<T> {
    pub alpha: T,
    pub beta: T,
}

impl<T: Scalar> WeightParams<T> {
    pub fn new(alpha: T, beta: T) -> Self {
        Self { alpha, beta }
    }

    /// `β = (1−α)/2`, the choice that maximizes the `x²` coefficient of `g`.
    pub fn hardy_optimal(alpha: T) -> Self {
        Self {
            alpha,
            beta: (T::one() - alpha) / T::lit(2.0),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.alpha.is_finite() && self.beta.is_finite()
    }

    /// `(α−1)²/4`.
    pub fn hardy_constant(&self) -> T {
        hardy_constant(self.alpha)
    }
}

/// `(α−1)²/4`, the sharp constant for `α ∈ [0,1) ∪ [5,∞)`.
pub fn hardy_constant<T: Scalar>(alpha: T) -> T {
    let d = alpha - T::one();
    d * d / T::lit(4.0)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(HardyError::LatticePoint { n, min: 1 })
    } else {
        Ok(())
    }
}

fn boundary_weight<T: Scalar>(params: &WeightParams<T>) -> T {
    let two = T::lit(2.0);
    T::one() + two.powf(params.alpha) - two.powf(params.alpha + params.beta)
}

/// `w_{α,β}(n)`: `n^α·g_{α,β}(1/n)` for `n ≥ 2` and `1 + 2^α − 2^{α+β}` at `n = 1`.
pub fn weight_w<T: Scalar>(params: &WeightParams<T>, n: usize) -> Result<T> {
    check_n(n)?;
    if n == 1 {
        return Ok(boundary_weight(params));
    }
    let x = T::one() / T::from_index(n);
    Ok(lattice_pow(n, params.alpha) * g_value(params, x)?)
}

/// `w_{α,β}(n) − c·n^{α−2}`; nonnegative exactly when the pointwise bound holds at `n`.
pub fn lower_bound_margin<T: Scalar>(params: &WeightParams<T>, c: T, n: usize) -> Result<T> {
    check_n(n)?;
    if n == 1 {
        return Ok(boundary_weight(params) - c);
    }
    let x = T::one() / T::from_index(n);
    Ok(lattice_pow(n, params.alpha) * g_minus_quadratic(params, c, x)?)
}

/// Scale `max(1, c·n^{α−2})` against which margins are judged.
pub fn margin_scale<T: Scalar>(alpha: T, c: T, n: usize) -> T {
    let target = c * lattice_pow(n, alpha - T::lit(2.0));
    T::one().max(target.abs())
}

/// Margin together with its scale, as reported by batch checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightMargin<T> {
    pub n: usize,
    pub weight: T,
    pub margin: T,
    pub scale: T,
}

impl<T: Scalar> WeightMargin<T> {
    pub fn evaluate(params: &WeightParams<T>, c: T, n: usize) -> Result<Self> {
        Ok(Self {
            n,
            weight: weight_w(params, n)?,
            margin: lower_bound_margin(params, c, n)?,
            scale: margin_scale(params.alpha, c, n),
        })
    }

    /// `margin ≥ −rtol·scale`.
    pub fn holds(&self, rtol: T) -> bool {
        self.margin >= -rtol * self.scale
    }
}
