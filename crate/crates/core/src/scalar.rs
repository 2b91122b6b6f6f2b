//! Scalar abstraction shared by every kernel in the crate.

use std::fmt::Debug;

use num_traits::{Float, FromPrimitive};

/// A binary floating-point scalar: `f32`, `f64`, or any wider type that
/// implements the `num-traits` float surface (quad precision in tests).
pub trait Scalar: Float + FromPrimitive + Debug + Send + Sync + 'static {
    /// Lossy conversion from an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal must be representable")
    }

    /// Conversion from a lattice index.
    #[inline]
    fn from_index(n: usize) -> Self {
        Self::from_usize(n).expect("index must be representable")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Scalar for T where T: Float + FromPrimitive + Debug + Send + Sync + 'static {}

/// `n^p` for a lattice point `n ≥ 1`.
///
/// Integer exponents with `|p| ≤ 4` are evaluated by repeated
/// multiplication so small cases are bit-exact; everything else goes
/// through `exp(p·ln n)`.
#[inline]
pub fn lattice_pow<T: Scalar>(n: usize, p: T) -> T {
    let base = T::from_index(n);
    if p == p.round() && p.abs() <= T::lit(4.0) {
        let k = p.to_i32().unwrap_or(0);
        let mut acc = T::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc * base;
        }
        return if k < 0 { T::one() / acc } else { acc };
    }
    (p * base.ln()).exp()
}

/// Relative discrepancy `|a − b| / max(|a|, |b|)`, with `0` when both vanish.
pub fn relative_error<T: Scalar>(a: T, b: T) -> T {
    let scale = a.abs().max(b.abs());
    if scale == T::zero() {
        T::zero()
    } else {
        (a - b).abs() / scale
    }
}
