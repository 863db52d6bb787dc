// SPDX-License-Identifier: Apache-2.0

//! Fixed matrices for the physical gate set.
//!
//! Rotation conventions: `Z_θ = diag(e^{−iθ/2}, e^{iθ/2})` and
//! `X_φ = cos(φ/2)·I − i·sin(φ/2)·X`; `SX = X_{π/2}`.

use num_complex::Complex;

use crate::circuit::GateKind;
use crate::error::{Error, Result};
use crate::numerics::ComplexMatrix;
use crate::scalar::Real;

fn c<T: Real>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

pub fn pauli_x<T: Real>() -> ComplexMatrix<T> {
    ComplexMatrix::from_pairs([[(0., 0.), (1., 0.)], [(1., 0.), (0., 0.)]])
}

pub fn pauli_y<T: Real>() -> ComplexMatrix<T> {
    ComplexMatrix::from_pairs([[(0., 0.), (0., -1.)], [(0., 1.), (0., 0.)]])
}

pub fn pauli_z<T: Real>() -> ComplexMatrix<T> {
    ComplexMatrix::from_pairs([[(1., 0.), (0., 0.)], [(0., 0.), (-1., 0.)]])
}

pub fn hadamard<T: Real>() -> ComplexMatrix<T> {
    let s = T::FRAC_1_SQRT_2();
    let z = T::zero();
    ComplexMatrix::from_fn(2, 2, |r, col| {
        if r == 1 && col == 1 {
            c(-s, z)
        } else {
            c(s, z)
        }
    })
}

/// Controlled-NOT with qubit 0 (the most significant) as control.
pub fn cnot<T: Real>() -> ComplexMatrix<T> {
    let mut m = ComplexMatrix::zeros(4, 4);
    for (r, col) in [(0, 0), (1, 1), (2, 3), (3, 2)] {
        m[(r, col)] = c(T::one(), T::zero());
    }
    m
}

pub fn swap<T: Real>() -> ComplexMatrix<T> {
    let mut m = ComplexMatrix::zeros(4, 4);
    for (r, col) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
        m[(r, col)] = c(T::one(), T::zero());
    }
    m
}

/// `Z_θ`.
pub fn rz<T: Real>(theta: T) -> ComplexMatrix<T> {
    let h = theta / T::lit(2.0);
    ComplexMatrix::diagonal(&[
        Complex::from_polar(T::one(), -h),
        Complex::from_polar(T::one(), h),
    ])
}

/// `X_θ`.
pub fn rx<T: Real>(theta: T) -> ComplexMatrix<T> {
    let (s, co) = (theta / T::lit(2.0)).sin_cos();
    let z = T::zero();
    ComplexMatrix::from_fn(2, 2, |r, col| if r == col { c(co, z) } else { c(z, -s) })
}

/// `Y_θ`.
pub fn ry<T: Real>(theta: T) -> ComplexMatrix<T> {
    let (s, co) = (theta / T::lit(2.0)).sin_cos();
    let z = T::zero();
    let mut m = ComplexMatrix::zeros(2, 2);
    m[(0, 0)] = c(co, z);
    m[(0, 1)] = c(-s, z);
    m[(1, 0)] = c(s, z);
    m[(1, 1)] = c(co, z);
    m
}

pub fn sx<T: Real>() -> ComplexMatrix<T> {
    rx(T::FRAC_PI_2())
}

/// `U(θ, φ, λ) = Z_θ · X_φ · Z_λ`.
pub fn u3<T: Real>(theta: T, phi: T, lambda: T) -> ComplexMatrix<T> {
    rz(theta).mul_unchecked(&rx(phi)).mul_unchecked(&rz(lambda))
}

/// Matrix of a fixed gate kind. Opaque kinds carry their own matrix and are
/// rejected here.
pub fn gate_matrix<T: Real>(kind: &GateKind) -> Result<ComplexMatrix<T>> {
    Ok(match kind {
        GateKind::Id(m) => ComplexMatrix::identity(1usize << m),
        GateKind::X => pauli_x(),
        GateKind::Sx => sx(),
        GateKind::Rz(t) => rz(T::lit(*t)),
        GateKind::U3 { theta, phi, lambda } => u3(T::lit(*theta), T::lit(*phi), T::lit(*lambda)),
        GateKind::Cx => cnot(),
        GateKind::Opaque(_) => return Err(Error::OpaqueGate("gate_matrix".into())),
    })
}
