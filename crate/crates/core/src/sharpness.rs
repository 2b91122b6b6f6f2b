//! Explicit test functions showing that `(α−1)²/4` cannot be improved.
//!
//! `u_{β,N}` follows `n^β` up to `N` and then decays linearly to zero at
//! `2N`. Its Rayleigh quotient `Σ|Δu|² n^α / Σ u² n^{α−2}` is an upper bound
//! for the sharp constant, and tends to `(α−1)²/4` as `β ↑ (1−α)/2` and
//! `N → ∞`.

use crate::error::{HardyError, Result};
use crate::lattice::LatticeFunction;
use crate::scalar::{lattice_pow, Scalar};
use crate::supersolution::{lhs_form, rhs_form, PowerFn};

/// Offsets below `(1−α)/2` used when no `β` grid is given.
pub const DEFAULT_BETA_OFFSETS: [f64; 4] = [0.1, 0.03, 0.01, 0.003];

/// `u_{β,N}(n)`: `n^β` on `1..=N`, `−N^{β−1}n + 2N^β` on `N..=2N`, zero elsewhere.
pub fn test_function<T: Scalar>(beta: T, n_cut: usize) -> Result<LatticeFunction<T>> {
    if n_cut == 0 {
        return Err(HardyError::LatticePoint { n: 0, min: 1 });
    }
    let top = lattice_pow(n_cut, beta);
    let slope = top / T::from_index(n_cut);
    let mut values = Vec::with_capacity(2 * n_cut + 1);
    values.push(T::zero());
    for n in 1..=n_cut {
        values.push(lattice_pow(n, beta));
    }
    for n in n_cut + 1..2 * n_cut {
        values.push(top + top - slope * T::from_index(n));
    }
    values.push(T::zero());
    LatticeFunction::from_values(values)
}

/// `(1−α)/2 − offset` for each default offset.
pub fn default_beta_grid<T: Scalar>(alpha: T) -> Vec<T> {
    let crit = (T::one() - alpha) / T::lit(2.0);
    DEFAULT_BETA_OFFSETS
        .iter()
        .map(|&d| crit - T::lit(d))
        .collect()
}

/// `2β + α − 2 < −1`: the power profile `n^β` has a summable right-hand side.
pub fn is_summable<T: Scalar>(alpha: T, beta: T) -> bool {
    beta + beta + alpha - T::lit(2.0) < -T::one()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow<T> {
    pub beta: T,
    pub n_cut: usize,
    pub lhs: T,
    pub rhs: T,
    pub quotient: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SharpnessSweepResult<T> {
    pub alpha: T,
    pub rows: Vec<SweepRow<T>>,
}

impl<T: Scalar> SharpnessSweepResult<T> {
    pub fn min_quotient(&self) -> Option<T> {
        self.rows.iter().map(|r| r.quotient).reduce(T::min)
    }
}

/// Rayleigh quotient of `u_{β,N}` for one `(β, N)` pair.
pub fn sweep_row<T: Scalar>(alpha: T, beta: T, n_cut: usize) -> Result<SweepRow<T>> {
    if !is_summable(alpha, beta) {
        return Err(HardyError::NotSummable {
            alpha: alpha.to_f64_lossy(),
            beta: beta.to_f64_lossy(),
        });
    }
    let u = test_function(beta, n_cut)?;
    let lhs = lhs_form(&u, alpha);
    let rhs = rhs_form(
        &u,
        &PowerFn {
            exponent: alpha - T::lit(2.0),
        },
    );
    Ok(SweepRow {
        beta,
        n_cut,
        lhs,
        rhs,
        quotient: lhs / rhs,
    })
}

/// Quotients for every `β` in `betas` and `N` in `n_cuts`, `β`-major.
pub fn sweep<T: Scalar>(
    alpha: T,
    betas: &[T],
    n_cuts: &[usize],
) -> Result<SharpnessSweepResult<T>> {
    if let Some(&bad) = betas.iter().find(|&&b| !is_summable(alpha, b)) {
        return Err(HardyError::NotSummable {
            alpha: alpha.to_f64_lossy(),
            beta: bad.to_f64_lossy(),
        });
    }
    let rows = betas
        .iter()
        .flat_map(|&beta| n_cuts.iter().map(move |&n| (beta, n)))
        .map(|(beta, n)| sweep_row(alpha, beta, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(SharpnessSweepResult { alpha, rows })
}
