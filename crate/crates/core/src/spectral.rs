//! Finite-section estimates of the sharp constant.
//!
//! Restricting `u` to `{1..N}` (with `u(N+1) = 0`) turns both sides of the
//! weighted inequality into quadratic forms `uᵀAu` and `uᵀBu`, with `A`
//! symmetric tridiagonal and `B` positive diagonal. The smallest generalized
//! eigenvalue of `(A, B)` is the minimum Rayleigh quotient over the section;
//! it decreases in `N` toward the sharp constant.
//!
//! The eigenvalue is bracketed by bisection on the inertia of `A − λB`: the
//! number of negative pivots of its `LDLᵀ` factorization equals the number
//! of eigenvalues below `λ`.

use crate::error::{HardyError, Result};
use crate::scalar::{lattice_pow, Scalar};
use crate::sum::CompensatedSum;

/// Default bracket-width tolerance for [`min_eigenvalue`].
pub const DEFAULT_TOL: f64 = 1e-10;

/// Default finite-section sizes for [`sharp_constant_estimate`].
pub const DEFAULT_SCHEDULE: [usize; 4] = [100, 1_000, 10_000, 100_000];

const MAX_BISECTIONS: usize = 400;

/// Stiffness `A` (tridiagonal) and mass `B` (diagonal) of one finite section.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalPencil<T> {
    /// `a_n = n^α + (n+1)^α`, `n = 1..=N`.
    pub stiff_diag: Vec<T>,
    /// `c_n = −(n+1)^α`, `n = 1..N`.
    pub stiff_off: Vec<T>,
    /// `m_n = n^{α−2}`.
    pub mass_diag: Vec<T>,
}

impl<T: Scalar> TridiagonalPencil<T> {
    pub fn size(&self) -> usize {
        self.stiff_diag.len()
    }

    /// `uᵀAu` for `u = (u_1, …, u_N)`.
    pub fn stiff_form(&self, u: &[T]) -> T {
        assert_eq!(u.len(), self.size());
        let mut acc = CompensatedSum::new();
        for (i, (&a, &x)) in self.stiff_diag.iter().zip(u).enumerate() {
            acc.add(a * x * x);
            if let Some(&c) = self.stiff_off.get(i) {
                acc.add(T::lit(2.0) * c * x * u[i + 1]);
            }
        }
        acc.value()
    }

    /// `uᵀBu`.
    pub fn mass_form(&self, u: &[T]) -> T {
        assert_eq!(u.len(), self.size());
        let mut acc = CompensatedSum::new();
        for (&m, &x) in self.mass_diag.iter().zip(u) {
            acc.add(m * x * x);
        }
        acc.value()
    }

    /// `min_n a_n / m_n`: the Rayleigh quotient of the best unit vector, an
    /// upper bound for the smallest eigenvalue.
    pub fn diagonal_bound(&self) -> T {
        self.stiff_diag
            .iter()
            .zip(&self.mass_diag)
            .map(|(&a, &m)| a / m)
            .fold(T::infinity(), T::min)
    }

    /// Number of negative pivots in the `LDLᵀ` factorization of `A − λB`.
    ///
    /// Pivots smaller in magnitude than the underflow guard are replaced by
    /// `±guard` with their sign kept.
    pub fn negative_pivot_count(&self, lambda: T) -> usize {
        let guard = T::min_positive_value().sqrt();
        let mut count = 0;
        let mut pivot = T::zero();
        for (i, (&a, &m)) in self.stiff_diag.iter().zip(&self.mass_diag).enumerate() {
            let shifted = a - lambda * m;
            pivot = if i == 0 {
                shifted
            } else {
                let c = self.stiff_off[i - 1];
                shifted - c * (c / pivot)
            };
            if pivot.abs() < guard {
                pivot = if pivot.is_sign_negative() {
                    -guard
                } else {
                    guard
                };
            }
            if pivot < T::zero() {
                count += 1;
            }
        }
        count
    }
}

/// Finite section of size `n_max` for the power weight `n^α`, with the
/// Dirichlet condition `u(N+1) = 0` folded into `a_N`.
pub fn build_pencil<T: Scalar>(alpha: T, n_max: usize) -> Result<TridiagonalPencil<T>> {
    if n_max == 0 {
        return Err(HardyError::LatticePoint { n: 0, min: 1 });
    }
    let powers: Vec<T> = (1..=n_max + 1).map(|n| lattice_pow(n, alpha)).collect();
    let stiff_diag = (0..n_max).map(|i| powers[i] + powers[i + 1]).collect();
    let stiff_off = (1..n_max).map(|i| -powers[i]).collect();
    let mass_exp = alpha - T::lit(2.0);
    let mass_diag = (1..=n_max).map(|n| lattice_pow(n, mass_exp)).collect();
    Ok(TridiagonalPencil {
        stiff_diag,
        stiff_off,
        mass_diag,
    })
}

/// Smallest eigenvalue of `Au = λBu` by inertia bisection on
/// `[0, min_n a_n/m_n]`, stopped once the bracket is narrower than
/// `tol·(1+|λ|)`.
pub fn min_eigenvalue<T: Scalar>(p: &TridiagonalPencil<T>, tol: T) -> Result<T> {
    if tol.is_nan() || tol <= T::zero() {
        return Err(HardyError::InvalidArgument(format!(
            "tolerance must be positive, got {:?}",
            tol
        )));
    }
    let mut lo = T::zero();
    let mut hi = p.diagonal_bound();
    let below_lo = p.negative_pivot_count(lo);
    if below_lo != 0 || !hi.is_finite() {
        return Err(HardyError::BracketFailure {
            lambda: lo.to_f64_lossy(),
            count: below_lo,
        });
    }
    if p.negative_pivot_count(hi) == 0 {
        // λ_min ≥ hi and λ_min ≤ hi.
        return Ok(hi);
    }
    let half = T::lit(0.5);
    for _ in 0..MAX_BISECTIONS {
        let mid = lo + (hi - lo) * half;
        if hi - lo < tol * (T::one() + mid.abs()) {
            return Ok(mid);
        }
        if p.negative_pivot_count(mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(lo + (hi - lo) * half)
}

/// `(N, λ_min(N))` for each section size in an increasing schedule.
pub fn sharp_constant_estimate<T: Scalar>(
    alpha: T,
    schedule: &[usize],
    tol: T,
) -> Result<Vec<(usize, T)>> {
    if schedule.windows(2).any(|w| w[0] >= w[1]) {
        return Err(HardyError::InvalidArgument(
            "section sizes must be strictly increasing".into(),
        ));
    }
    schedule
        .iter()
        .map(|&n| Ok((n, min_eigenvalue(&build_pencil(alpha, n)?, tol)?)))
        .collect()
}
