// SPDX-License-Identifier: Apache-2.0

//! ZXZ Euler angles and the virtual-Z rewrite of a one-qubit unitary.

use num_complex::Complex;
use num_traits::Zero;

use super::gates::{rx, rz, u3};
use crate::circuit::GateKind;
use crate::error::{Error, Result};
use crate::numerics::ComplexMatrix;
use crate::scalar::{reduce_angle, Real};

/// `U = e^{iα} · Z_θ · X_φ · Z_λ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerAngles<T> {
    pub theta: T,
    pub phi: T,
    pub lam: T,
    pub alpha: T,
}

impl<T: Real> EulerAngles<T> {
    pub fn new(theta: T, phi: T, lam: T, alpha: T) -> Self {
        Self {
            theta,
            phi,
            lam,
            alpha,
        }
    }

    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        u3(self.theta, self.phi, self.lam).scale(Complex::from_polar(T::one(), self.alpha))
    }

    /// Angles of the three virtual `Z` rotations, in the order applied.
    ///
    /// `Z_θ X_φ Z_λ = Z_{θ−π/2} · X_{π/2} · Z_{π−φ} · X_{π/2} · Z_{λ−π/2}`
    /// up to global phase, so the rotations run `λ−π/2`, `π−φ`, `θ−π/2`
    /// with an `X_{π/2}` between consecutive ones.
    pub fn virtual_z_angles(&self) -> [T; 3] {
        let half_pi = T::FRAC_PI_2();
        [self.lam - half_pi, T::PI() - self.phi, self.theta - half_pi]
    }
}

/// Decomposes a one-qubit unitary into ZXZ Euler angles.
///
/// Branches: `φ ∈ [0, π]`; `θ`, `λ`, `α` in `[0, 2π)`. When `φ` is within
/// the branch threshold of `0` or `π` only `θ ± λ` is determined, and `λ` is
/// fixed to `0`.
pub fn euler_zxz<T: Real>(u: &ComplexMatrix<T>) -> Result<EulerAngles<T>> {
    if u.rows() != 2 || u.cols() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "expected a 2x2 unitary, got {}x{}",
            u.rows(),
            u.cols()
        )));
    }
    u.ensure_unitary()?;
    let two = T::lit(2.0);
    let det = u[(0, 0)] * u[(1, 1)] - u[(0, 1)] * u[(1, 0)];
    let special = u.scale(Complex::from_polar(T::one(), -det.arg() / two));

    let diag = special[(1, 1)];
    // i·V₁₀ = sin(φ/2)·e^{i(θ−λ)/2}
    let off = special[(1, 0)] * Complex::i();
    let phi = two * off.norm().atan2(diag.norm());

    let tol = T::branch_tol();
    let (theta, lam) = if off.norm() <= tol {
        (two * diag.arg(), T::zero())
    } else if diag.norm() <= tol {
        (two * off.arg(), T::zero())
    } else {
        (diag.arg() + off.arg(), diag.arg() - off.arg())
    };
    let theta = reduce_angle(theta);
    let lam = reduce_angle(lam);

    // Z has period 4π, so the reductions above may have flipped the sign;
    // read the remaining phase off the trace.
    let overlap = u3(theta, phi, lam).inner(u)?;
    let alpha = if overlap.is_zero() {
        T::zero()
    } else {
        reduce_angle(overlap.arg())
    };
    Ok(EulerAngles::new(theta, phi, lam, alpha))
}

/// The five-gate virtual-Z form of `Z_θ X_φ Z_λ`, first-applied first:
/// `[RZ(λ−π/2), SX, RZ(π−φ), SX, RZ(θ−π/2)]`.
pub fn virtual_z_rewrite(angles: &EulerAngles<f64>) -> Vec<GateKind> {
    let [a, b, c] = angles.virtual_z_angles();
    vec![
        GateKind::rz(a),
        GateKind::Sx,
        GateKind::rz(b),
        GateKind::Sx,
        GateKind::rz(c),
    ]
}

/// Matrix product of the virtual-Z form, built directly from rotations.
pub fn virtual_z_product<T: Real>(angles: &EulerAngles<T>) -> ComplexMatrix<T> {
    let [a, b, c] = angles.virtual_z_angles();
    let sx = rx(T::FRAC_PI_2());
    rz(c)
        .mul_unchecked(&sx)
        .mul_unchecked(&rz(b))
        .mul_unchecked(&sx)
        .mul_unchecked(&rz(a))
}
