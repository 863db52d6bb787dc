// SPDX-License-Identifier: Apache-2.0

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real scalar backing the complex linear algebra: `f32` or `f64`.
///
/// The default tolerances scale with the precision of the type, so generic
/// code can ask for "unitary within tolerance" without hard-coding `1e-10`.
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
    /// Bound on `‖M·M† − I‖_max` for a matrix to count as unitary.
    fn unitary_tol() -> Self;

    /// Threshold below which a quantity is treated as exactly zero when
    /// picking between decomposition branches.
    fn branch_tol() -> Self;

    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    fn unitary_tol() -> Self {
        1e-10
    }

    fn branch_tol() -> Self {
        1e-10
    }
}

impl Real for f32 {
    fn unitary_tol() -> Self {
        1e-4
    }

    fn branch_tol() -> Self {
        1e-5
    }
}

/// Reduces an angle into `[0, 2π)`.
pub fn reduce_angle<T: Real>(theta: T) -> T {
    let two_pi = T::TAU();
    let mut r = theta % two_pi;
    if r < T::zero() {
        r += two_pi;
    }
    // `-tiny % 2π + 2π` can round up to exactly 2π.
    if r >= two_pi {
        r = T::zero();
    }
    r
}
