//! Cancellation-safe scalar kernels.
//!
//! The remainder function
//!
//! ```text
//! g(x) = 1 + (1+x)^α − (1−x)^β − (1+x)^(α+β)
//! ```
//!
//! is `O(x²)` while its four summands are `O(1)`, so it is evaluated either
//! through its Taylor series (whose coefficients are differences of
//! generalized binomial coefficients) or through `expm1`/`log1p` so that the
//! unit parts cancel exactly.

use num_traits::{FromPrimitive, Num};

use crate::error::{HardyError, Result};
use crate::scalar::Scalar;
use crate::sum::CompensatedSum;
use crate::weights::WeightParams;

/// Largest `x` evaluated by the Taylor series; above it the direct path is used.
pub const SERIES_SWITCH: f64 = 0.5;

/// Series terms are dropped once their envelope falls below this fraction
/// of the accumulated sum.
pub const SERIES_RTOL: f64 = 1e-17;

/// Hard cap on the number of series terms.
pub const SERIES_MAX_K: usize = 200;

/// Relative zero tolerance used by [`SignClass::classify`].
pub const TOL_ZERO: f64 = 1e-11;

/// Arithmetic needed by the coefficient kernels: a field with small-integer
/// embedding. Satisfied by the float types and by exact rationals.
pub trait Field: Clone + Num + FromPrimitive {}

impl<T: Clone + Num + FromPrimitive> Field for T {}

fn field_int<T: Field>(n: usize) -> T {
    T::from_usize(n).expect("small integer must embed")
}

/// Generalized binomial coefficient `r(r−1)⋯(r−k+1)/k!`.
///
/// Evaluated by the product recurrence `t_{j+1} = t_j·(r−j)/(j+1)`, so it
/// never forms a factorial.
pub fn gen_binomial<T: Field>(r: T, k: usize) -> T {
    let mut term = T::one();
    for j in 0..k {
        term = term * (r.clone() - field_int::<T>(j)) / field_int::<T>(j + 1);
    }
    term
}

/// Coefficient of `x^k` in the Taylor expansion of `g_{α,β}`.
fn g_coefficient<T: Field>(alpha: T, beta: T, k: usize) -> T {
    let sign_flip = if k.is_multiple_of(2) {
        T::one()
    } else {
        T::zero() - T::one()
    };
    gen_binomial(alpha.clone(), k)
        - sign_flip * gen_binomial(beta.clone(), k)
        - gen_binomial(alpha + beta, k)
}

/// `b_k(α) = C(α,k) − (−1)^k C((1−α)/2, k) − C((1+α)/2, k)`: the Taylor
/// coefficients of `g` at the optimal `β = (1−α)/2`.
///
/// For `k = 2` this is `(α−1)²/4` up to rounding.
pub fn b_k<T: Field>(alpha: T, k: usize) -> Result<T> {
    if k < 2 {
        return Err(HardyError::IndexTooSmall { k, min: 2 });
    }
    let two = field_int::<T>(2);
    let beta = (T::one() - alpha.clone()) / two;
    Ok(g_coefficient(alpha, beta, k))
}

/// `b_k(α)` together with the magnitude of its three binomial summands,
/// which sets the scale for sign classification.
pub fn b_k_scaled<T: Scalar>(alpha: T, k: usize) -> Result<(T, T)> {
    let value = b_k(alpha, k)?;
    let beta = (T::one() - alpha) / T::lit(2.0);
    let scale = gen_binomial(alpha, k).abs()
        + gen_binomial(beta, k).abs()
        + gen_binomial(alpha + beta, k).abs();
    Ok((value, scale))
}

/// Closed form `(5−α)(1−α)(7α²−6α+3)/192` of `b_4`.
pub fn b4_closed<T: Field>(alpha: T) -> T {
    let c = |n: usize| field_int::<T>(n);
    let a = alpha;
    (c(5) - a.clone()) * (c(1) - a.clone()) * (c(7) * a.clone() * a.clone() - c(6) * a + c(3))
        / c(192)
}

/// Closed form `(1−α)(9−α)(31α⁴−170α³+536α²−310α+105)/23040` of `b_6`.
pub fn b6_closed<T: Field>(alpha: T) -> T {
    let c = |n: usize| field_int::<T>(n);
    let a = alpha;
    // Horner: (((31a − 170)a + 536)a − 310)a + 105
    let quartic = (((c(31) * a.clone() - c(170)) * a.clone() + c(536)) * a.clone() - c(310))
        * a.clone()
        + c(105);
    (c(1) - a.clone()) * (c(9) - a) * quartic / c(23040)
}

/// `(1+x)^r` as `exp(r·log1p(x))`, accurate for small `|x|`.
pub fn stable_pow1p<T: Scalar>(x: T, r: T) -> T {
    (r * x.ln_1p()).exp()
}

/// `(1+x)^r − 1` as `expm1(r·log1p(x))`, with full relative accuracy near 0.
pub fn pow1p_m1<T: Scalar>(x: T, r: T) -> T {
    (r * x.ln_1p()).exp_m1()
}

fn check_open_unit<T: Scalar>(x: T) -> Result<()> {
    if x > T::zero() && x < T::one() {
        Ok(())
    } else {
        Err(HardyError::OutOfDomain {
            x: x.to_f64_lossy(),
        })
    }
}

/// Taylor path: `Σ_{k≥2} [C(α,k) − (−1)^k C(β,k) − C(α+β,k)] x^k − c·x²`.
///
/// The three binomials are advanced by their product recurrences in lock
/// step. Summation stops when the envelope `(|C(α,k)|+|C(β,k)|+|C(α+β,k)|)x^k`
/// of the last term drops below [`SERIES_RTOL`] times the partial sum, which
/// keeps exact zero coefficients (e.g. odd `k` at `α = 0`) from ending the
/// series early.
pub fn g_series_shifted<T: Scalar>(params: &WeightParams<T>, quad_shift: T, x: T) -> T {
    let (alpha, beta) = (params.alpha, params.beta);
    let gamma = alpha + beta;
    let rtol = T::lit(SERIES_RTOL).min(T::epsilon() / T::lit(16.0));

    let mut ca = T::one();
    let mut cb = T::one();
    let mut cg = T::one();
    let mut xk = T::one();
    let mut acc = CompensatedSum::new();

    for k in 1..=SERIES_MAX_K {
        let j = T::from_index(k - 1);
        let kk = T::from_index(k);
        ca = ca * (alpha - j) / kk;
        cb = cb * (beta - j) / kk;
        cg = cg * (gamma - j) / kk;
        xk = xk * x;
        if k < 2 {
            continue;
        }
        let signed_cb = if k % 2 == 0 { cb } else { -cb };
        let mut coeff = ca - signed_cb - cg;
        if k == 2 {
            coeff = coeff - quad_shift;
        }
        acc.add(coeff * xk);

        let envelope = (ca.abs() + cb.abs() + cg.abs()) * xk;
        if k >= 3 && envelope <= rtol * acc.value().abs() {
            break;
        }
        if xk == T::zero() {
            break;
        }
    }
    acc.value()
}

/// Taylor path for `g_{α,β}(x)`.
pub fn g_series<T: Scalar>(params: &WeightParams<T>, x: T) -> T {
    g_series_shifted(params, T::zero(), x)
}

/// Direct path for `g_{α,β}(x)`: the unit parts of the four summands cancel
/// exactly, leaving `[(1+x)^α−1] − [(1−x)^β−1] − [(1+x)^{α+β}−1]`, each
/// bracket evaluated with `expm1`/`log1p` and summed with compensation.
pub fn g_direct<T: Scalar>(params: &WeightParams<T>, x: T) -> T {
    let mut acc = CompensatedSum::new();
    acc.add(pow1p_m1(x, params.alpha));
    acc.add(-pow1p_m1(-x, params.beta));
    acc.add(-pow1p_m1(x, params.alpha + params.beta));
    acc.value()
}

/// `g_{α,β}(x) = 1 + (1+x)^α − (1−x)^β − (1+x)^{α+β}` on `0 < x < 1`.
pub fn g_value<T: Scalar>(params: &WeightParams<T>, x: T) -> Result<T> {
    check_open_unit(x)?;
    if x <= T::lit(SERIES_SWITCH) {
        Ok(g_series(params, x))
    } else {
        Ok(g_direct(params, x))
    }
}

/// `g_{α,β}(x) − c·x²` on `0 < x < 1`, with the quadratic term removed
/// inside the series so no cancellation occurs for small `x`.
pub fn g_minus_quadratic<T: Scalar>(params: &WeightParams<T>, c: T, x: T) -> Result<T> {
    check_open_unit(x)?;
    if x <= T::lit(SERIES_SWITCH) {
        Ok(g_series_shifted(params, c, x))
    } else {
        let mut acc = CompensatedSum::new();
        acc.add(g_direct(params, x));
        acc.add(-c * x * x);
        Ok(acc.value())
    }
}

/// Ternary sign of a computed coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignClass {
    Positive,
    Zero,
    Negative,
}

impl SignClass {
    /// Classify `value` as zero when `|value| ≤ TOL_ZERO·(1+|scale|)`.
    pub fn classify<T: Scalar>(value: T, scale: T) -> Self {
        let tol = T::lit(TOL_ZERO) * (T::one() + scale.abs());
        if value.abs() <= tol {
            SignClass::Zero
        } else if value > T::zero() {
            SignClass::Positive
        } else {
            SignClass::Negative
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SignClass::Positive => "positive",
            SignClass::Zero => "zero",
            SignClass::Negative => "negative",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientEntry<T> {
    pub k: usize,
    pub value: T,
    pub sign: SignClass,
}

/// `b_k(α)` for consecutive `k` starting at `k_min`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTable<T> {
    pub alpha: T,
    pub k_min: usize,
    pub entries: Vec<CoefficientEntry<T>>,
}

impl<T: Scalar> CoefficientTable<T> {
    /// Tabulate `b_k(α)` for `k_min ≤ k ≤ k_max`.
    pub fn build(alpha: T, k_min: usize, k_max: usize) -> Result<Self> {
        if k_min < 2 {
            return Err(HardyError::IndexTooSmall { k: k_min, min: 2 });
        }
        let entries = (k_min..=k_max)
            .map(|k| {
                let (value, scale) = b_k_scaled(alpha, k)?;
                Ok(CoefficientEntry {
                    k,
                    value,
                    sign: SignClass::classify(value, scale),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            alpha,
            k_min,
            entries,
        })
    }

    pub fn get(&self, k: usize) -> Option<&CoefficientEntry<T>> {
        k.checked_sub(self.k_min).and_then(|i| self.entries.get(i))
    }

    /// Smallest `k` classified as negative.
    pub fn first_negative(&self) -> Option<usize> {
        self.entries
            .iter()
            .find(|e| e.sign == SignClass::Negative)
            .map(|e| e.k)
    }
}
