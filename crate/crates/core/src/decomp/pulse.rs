// SPDX-License-Identifier: Apache-2.0

use num_complex::Complex;

use crate::numerics::ComplexMatrix;
use crate::scalar::Real;

/// A constant-amplitude drive pulse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseParams<T> {
    /// Drive phase, radians.
    pub gamma: T,
    /// Amplitude, rad/s.
    pub omega: T,
    /// Duration, s.
    pub duration: T,
}

/// `A(γ, Ω, T) = exp(−i·(ΩT/2)·(cos γ·X + sin γ·Y))` with `X`, `Y` the Pauli
/// matrices, i.e. a rotation by `ΩT` about the equatorial axis at angle `γ`
/// from `x`. Evaluated in closed form:
/// `cos(ΩT/2)·I − i·sin(ΩT/2)·(cos γ·X + sin γ·Y)`.
pub fn pulse_unitary<T: Real>(p: &PulseParams<T>) -> ComplexMatrix<T> {
    let (s, c) = (p.omega * p.duration / T::lit(2.0)).sin_cos();
    let z = T::zero();
    let mut m = ComplexMatrix::zeros(2, 2);
    m[(0, 0)] = Complex::new(c, z);
    m[(1, 1)] = Complex::new(c, z);
    // −i·s·(cos γ·X + sin γ·Y) has off-diagonals −i·s·e^{∓iγ}
    let minus_is = Complex::new(z, -s);
    m[(0, 1)] = minus_is * Complex::from_polar(T::one(), -p.gamma);
    m[(1, 0)] = minus_is * Complex::from_polar(T::one(), p.gamma);
    m
}
