//! Finitely supported sequences on `{0, 1, 2, …}` with `u(0) = 0`.

use crate::error::{HardyError, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct LatticeFunction<T> {
    values: Vec<T>,
}

impl<T: Scalar> LatticeFunction<T> {
    /// Values indexed from `0`; `values[0]` must be zero.
    pub fn from_values(mut values: Vec<T>) -> Result<Self> {
        if let Some(&first) = values.first() {
            if first != T::zero() {
                return Err(HardyError::BoundaryValue {
                    value: first.to_f64_lossy(),
                });
            }
        }
        while values.last().is_some_and(|v| *v == T::zero()) {
            values.pop();
        }
        Ok(Self { values })
    }

    /// Values at `n = 1, 2, …`; the origin is set to zero.
    pub fn from_interior<I: IntoIterator<Item = T>>(interior: I) -> Self {
        let values = std::iter::once(T::zero()).chain(interior).collect();
        Self::from_values(values).expect("origin is zero by construction")
    }

    pub fn zero() -> Self {
        Self { values: Vec::new() }
    }

    /// Indicator of the single point `{n}`, `n ≥ 1`.
    pub fn indicator(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(HardyError::LatticePoint { n, min: 1 });
        }
        let mut values = vec![T::zero(); n + 1];
        values[n] = T::one();
        Ok(Self { values })
    }

    #[inline]
    pub fn get(&self, n: usize) -> T {
        self.values.get(n).copied().unwrap_or_else(T::zero)
    }

    /// Smallest `M` with `u(n) = 0` for every `n ≥ M`.
    pub fn support_end(&self) -> usize {
        self.values.len()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Stored values `u(0), …, u(support_end − 1)`.
    pub fn values(&self) -> &[T] {
        &self.values
    }
}
