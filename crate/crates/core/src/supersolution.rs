//! Discrete supersolution machinery on the half-line path.
//!
//! A positive `φ` with
//!
//! ```text
//! Δφ(n)·v(n) − (φ(n+1)−φ(n))·(v(n+1)−v(n)) ≥ w(n)·φ(n)    for all n ≥ 1
//! ```
//!
//! certifies `Σ |u(n)−u(n−1)|² v(n) ≥ Σ w(n)|u(n)|²` for every finitely
//! supported `u` with `u(0) = 0`.

use crate::error::{HardyError, Result};
use crate::lattice::LatticeFunction;
use crate::scalar::{lattice_pow, Scalar};
use crate::sum::CompensatedSum;
use crate::weights::{weight_w, WeightParams};

/// Relative slack allowed on a criterion margin before it counts as violated.
pub const CRITERION_RTOL: f64 = 1e-12;

/// Relative slack in `lhs ≥ rhs − tol`, `tol = INEQUALITY_RTOL·(1+|lhs|)`.
pub const INEQUALITY_RTOL: f64 = 1e-10;

/// A real function on the lattice, total on the queried range.
pub trait LatticeFn<T> {
    fn at(&self, n: usize) -> T;
}

impl<T, F: Fn(usize) -> T> LatticeFn<T> for F {
    #[inline]
    fn at(&self, n: usize) -> T {
        self(n)
    }
}

/// `n ↦ n^p` on `ℕ`, with value `0` at the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerFn<T> {
    pub exponent: T,
}

impl<T: Scalar> LatticeFn<T> for PowerFn<T> {
    #[inline]
    fn at(&self, n: usize) -> T {
        if n == 0 {
            T::zero()
        } else {
            lattice_pow(n, self.exponent)
        }
    }
}

/// `n ↦ w_{α,β}(n)` on `ℕ`, `0` at the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerWeight<T> {
    pub params: WeightParams<T>,
}

impl<T: Scalar> LatticeFn<T> for PowerWeight<T> {
    fn at(&self, n: usize) -> T {
        if n == 0 {
            T::zero()
        } else {
            weight_w(&self.params, n).expect("n ≥ 1")
        }
    }
}

/// Values of a handle on `0..len`, evaluated once.
#[derive(Debug, Clone, PartialEq)]
pub struct Tabulated<T> {
    values: Vec<T>,
}

impl<T: Scalar> Tabulated<T> {
    pub fn new<F: LatticeFn<T> + ?Sized>(f: &F, len: usize) -> Self {
        Self {
            values: (0..len).map(|n| f.at(n)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl<T: Scalar> LatticeFn<T> for Tabulated<T> {
    #[inline]
    fn at(&self, n: usize) -> T {
        self.values[n]
    }
}

/// Edge weight `v`, candidate supersolution `phi`, target weight `w`.
#[derive(Debug, Clone)]
pub struct SupersolutionTriplet<V, P, W> {
    pub v: V,
    pub phi: P,
    pub w: W,
}

/// `v = n^α`, `φ = n^β` (with `φ(0) = 0`), `w = w_{α,β}`.
pub type PowerTriplet<T> = SupersolutionTriplet<PowerFn<T>, PowerFn<T>, PowerWeight<T>>;

pub fn power_triplet<T: Scalar>(params: WeightParams<T>) -> PowerTriplet<T> {
    SupersolutionTriplet {
        v: PowerFn {
            exponent: params.alpha,
        },
        phi: PowerFn {
            exponent: params.beta,
        },
        w: PowerWeight { params },
    }
}

impl<V, P, W> SupersolutionTriplet<V, P, W> {
    /// Checks `v ≥ 0`, `w ≥ 0` on `1..=n_max`, `φ(0) ≥ 0` and `φ > 0` on `1..=n_max`;
    /// returns the first offending point.
    pub fn first_invariant_violation<T>(&self, n_max: usize) -> Option<usize>
    where
        T: Scalar,
        V: LatticeFn<T>,
        P: LatticeFn<T>,
        W: LatticeFn<T>,
    {
        if self.phi.at(0) < T::zero() {
            return Some(0);
        }
        (1..=n_max).find(|&n| {
            !(self.v.at(n) >= T::zero() && self.w.at(n) >= T::zero() && self.phi.at(n) > T::zero())
        })
    }

    /// Tabulate all three handles on the range a check over `1..=n_max` touches.
    pub fn tabulate<T>(
        &self,
        n_max: usize,
    ) -> SupersolutionTriplet<Tabulated<T>, Tabulated<T>, Tabulated<T>>
    where
        T: Scalar,
        V: LatticeFn<T>,
        P: LatticeFn<T>,
        W: LatticeFn<T>,
    {
        SupersolutionTriplet {
            v: Tabulated::new(&self.v, n_max + 2),
            phi: Tabulated::new(&self.phi, n_max + 2),
            w: Tabulated::new(&self.w, n_max + 1),
        }
    }
}

/// `Δφ(n) = 2φ(n) − φ(n−1) − φ(n+1)` for `n ≥ 1`, and `φ(0) − φ(1)` at `n = 0`.
pub fn combinatorial_laplacian<T: Scalar, P: LatticeFn<T> + ?Sized>(phi: &P, n: usize) -> T {
    if n == 0 {
        phi.at(0) - phi.at(1)
    } else {
        let center = phi.at(n);
        (center - phi.at(n - 1)) + (center - phi.at(n + 1))
    }
}

fn flux_form<T: Scalar, V: LatticeFn<T> + ?Sized, P: LatticeFn<T> + ?Sized>(
    v: &V,
    phi: &P,
    n: usize,
) -> T {
    let dphi = phi.at(n + 1) - phi.at(n);
    let dv = v.at(n + 1) - v.at(n);
    combinatorial_laplacian(phi, n) * v.at(n) - dphi * dv
}

/// `Δφ(n)v(n) − (φ(n+1)−φ(n))(v(n+1)−v(n)) − w(n)φ(n)`; nonnegative exactly
/// when the supersolution criterion holds at `n`.
pub fn criterion_margin<T, V, P, W>(t: &SupersolutionTriplet<V, P, W>, n: usize) -> T
where
    T: Scalar,
    V: LatticeFn<T>,
    P: LatticeFn<T>,
    W: LatticeFn<T>,
{
    flux_form(&t.v, &t.phi, n) - t.w.at(n) * t.phi.at(n)
}

/// Magnitude of the summands entering [`criterion_margin`], used to judge
/// rounding in the margin.
pub fn criterion_scale<T, V, P, W>(t: &SupersolutionTriplet<V, P, W>, n: usize) -> T
where
    T: Scalar,
    V: LatticeFn<T>,
    P: LatticeFn<T>,
    W: LatticeFn<T>,
{
    let (pm, p0, pp) = (
        t.phi.at(n - 1).abs(),
        t.phi.at(n).abs(),
        t.phi.at(n + 1).abs(),
    );
    let (v0, vp) = (t.v.at(n).abs(), t.v.at(n + 1).abs());
    (p0 + p0 + pm + pp) * v0 + (pp + p0) * (vp + v0) + (t.w.at(n) * t.phi.at(n)).abs()
}

/// The largest `w(n)` for which the criterion holds with equality:
/// `[Δφ(n)v(n) − (φ(n+1)−φ(n))(v(n+1)−v(n))] / φ(n)`.
pub fn derived_weight<T, V, P>(v: &V, phi: &P, n: usize) -> Result<T>
where
    T: Scalar,
    V: LatticeFn<T> + ?Sized,
    P: LatticeFn<T> + ?Sized,
{
    if n == 0 {
        return Err(HardyError::LatticePoint { n, min: 1 });
    }
    let p = phi.at(n);
    if p.is_nan() || p <= T::zero() {
        return Err(HardyError::DegenerateSupersolution {
            n,
            value: p.to_f64_lossy(),
        });
    }
    Ok(flux_form(v, phi, n) / p)
}

/// [`derived_weight`] on `1..=n_max`, evaluating each handle once per point.
pub fn derived_weights<T, V, P>(v: &V, phi: &P, n_max: usize) -> Result<Vec<T>>
where
    T: Scalar,
    V: LatticeFn<T> + ?Sized,
    P: LatticeFn<T> + ?Sized,
{
    let v = Tabulated::new(v, n_max + 2);
    let phi = Tabulated::new(phi, n_max + 2);
    (1..=n_max).map(|n| derived_weight(&v, &phi, n)).collect()
}

/// `Σ_{n≥1} (u(n)−u(n−1))² v(n)`, accumulated from the top of the support down.
pub fn lhs_form_weighted<T: Scalar, V: LatticeFn<T> + ?Sized>(u: &LatticeFunction<T>, v: &V) -> T {
    let mut acc = CompensatedSum::new();
    for n in (1..=u.support_end()).rev() {
        let d = u.get(n) - u.get(n - 1);
        acc.add(d * d * v.at(n));
    }
    acc.value()
}

/// `Σ_{n≥1} (u(n)−u(n−1))² n^α`.
pub fn lhs_form<T: Scalar>(u: &LatticeFunction<T>, alpha: T) -> T {
    lhs_form_weighted(u, &PowerFn { exponent: alpha })
}

/// `Σ_{n≥1} w(n) u(n)²`.
pub fn rhs_form<T: Scalar, W: LatticeFn<T> + ?Sized>(u: &LatticeFunction<T>, w: &W) -> T {
    let mut acc = CompensatedSum::new();
    for n in (1..u.support_end()).rev() {
        let x = u.get(n);
        acc.add(w.at(n) * x * x);
    }
    acc.value()
}

/// Outcome of one `lhs ≥ rhs` check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityCheck<T> {
    pub lhs: T,
    pub rhs: T,
    /// `lhs − rhs`.
    pub gap: T,
    pub tol: T,
    pub pass: bool,
}

/// Checks the supersolution criterion on the support of `u`, then compares
/// `Σ |u(n)−u(n−1)|² v(n)` against `Σ w(n)|u(n)|²`.
///
/// Returns [`HardyError::CriterionViolated`] at the first point of the
/// support where the criterion fails beyond rounding.
pub fn verify_inequality<T, V, P, W>(
    t: &SupersolutionTriplet<V, P, W>,
    u: &LatticeFunction<T>,
) -> Result<InequalityCheck<T>>
where
    T: Scalar,
    V: LatticeFn<T>,
    P: LatticeFn<T>,
    W: LatticeFn<T>,
{
    let rtol = T::lit(CRITERION_RTOL);
    for n in 1..u.support_end() {
        if u.get(n) == T::zero() {
            continue;
        }
        let margin = criterion_margin(t, n);
        if margin < -rtol * criterion_scale(t, n) {
            return Err(HardyError::CriterionViolated {
                n,
                margin: margin.to_f64_lossy(),
            });
        }
    }
    let lhs = lhs_form_weighted(u, &t.v);
    let rhs = rhs_form(u, &t.w);
    let tol = T::lit(INEQUALITY_RTOL) * (T::one() + lhs.abs());
    Ok(InequalityCheck {
        lhs,
        rhs,
        gap: lhs - rhs,
        tol,
        pass: lhs >= rhs - tol,
    })
}
