// SPDX-License-Identifier: Apache-2.0

//! Three-CNOT synthesis of arbitrary two-qubit unitaries.
//!
//! The unitary is moved to the magic basis, where local gates become real
//! orthogonal matrices. Diagonalizing `Uᵀ·U` there by a real orthogonal
//! matrix splits `U = e^{iψ}·(K₁ ⊗ K₂)·exp(i(a·XX + b·YY + c·ZZ))·(K₃ ⊗ K₄)`.
//! The interaction term has the exact three-CNOT form
//!
//! ```text
//! (Z_{π/2} ⊗ I) · CX₂₁ · (I ⊗ Y_{π/2−2b}) · CX₁₂ · (Z_{π/2−2c} ⊗ Y_{2a−π/2}) · CX₂₁ · (I ⊗ Z_{−π/2})
//! ```
//!
//! up to global phase, and each reversed CNOT is `(H ⊗ H)·CX₁₂·(H ⊗ H)`. All
//! local factors are then folded into the eight one-qubit slots between three
//! control-first CNOTs.

use num_complex::Complex;
use num_traits::{One, Zero};

use super::gates::{cnot, hadamard, ry, rz};
use crate::error::{Error, Result};
use crate::numerics::{phase_distance, ComplexMatrix};
use crate::scalar::Real;

/// `U = e^{iψ}·(u₄⊗u₈)·CX·(u₃⊗u₇)·CX·(u₂⊗u₆)·CX·(u₁⊗u₅)`, CNOT control on
/// the first qubit. `locals[i]` holds `u_{i+1}`; every local has unit
/// determinant.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitDecomposition<T> {
    pub locals: [ComplexMatrix<T>; 8],
    pub global_phase: T,
    /// Interaction coefficients `(a, b, c)` of the canonical core.
    pub interaction: [T; 3],
}

impl<T: Real> TwoQubitDecomposition<T> {
    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        let u = &self.locals;
        let cx = cnot::<T>();
        let layer = |i: usize| u[i].tensor(&u[i + 4]);
        let m = layer(3)
            .mul_unchecked(&cx)
            .mul_unchecked(&layer(2))
            .mul_unchecked(&cx)
            .mul_unchecked(&layer(1))
            .mul_unchecked(&cx)
            .mul_unchecked(&layer(0));
        m.scale(Complex::from_polar(T::one(), self.global_phase))
    }
}

/// Magic basis, columns `(|00⟩+|11⟩, i|01⟩+i|10⟩, |01⟩−|10⟩, i|00⟩−i|11⟩)/√2`.
fn magic_basis<T: Real>() -> ComplexMatrix<T> {
    let s = T::FRAC_1_SQRT_2();
    let z = T::zero();
    let mut b = ComplexMatrix::zeros(4, 4);
    b[(0, 0)] = Complex::new(s, z);
    b[(0, 3)] = Complex::new(z, s);
    b[(1, 1)] = Complex::new(z, s);
    b[(1, 2)] = Complex::new(s, z);
    b[(2, 1)] = Complex::new(z, s);
    b[(2, 2)] = Complex::new(-s, z);
    b[(3, 0)] = Complex::new(s, z);
    b[(3, 3)] = Complex::new(z, -s);
    b
}

// Diagonals of XX, YY and ZZ in the magic basis.
const XX_DIAG: [f64; 4] = [1.0, 1.0, -1.0, -1.0];
const YY_DIAG: [f64; 4] = [-1.0, 1.0, -1.0, 1.0];
const ZZ_DIAG: [f64; 4] = [1.0, -1.0, -1.0, 1.0];

// Mixing weights for the imaginary part when diagonalizing Re + w·Im. A
// degenerate combination for one weight is almost never degenerate for
// another.
const MIX_WEIGHTS: [f64; 10] = [
    1.0,
    0.618_033_988_749_894_9,
    -1.732_050_807_568_877_2,
    std::f64::consts::E,
    std::f64::consts::FRAC_1_PI,
    -0.577_215_664_901_532_9,
    std::f64::consts::SQRT_2,
    -std::f64::consts::PI,
    0.207_879_576_350_761_9,
    4.669_201_609_102_99,
];

/// Cyclic Jacobi eigensolver for a real symmetric matrix. Returns the
/// eigenvector matrix (columns).
#[allow(clippy::needless_range_loop)]
fn jacobi_eigenvectors<T: Real, const N: usize>(mut a: [[T; N]; N]) -> [[T; N]; N] {
    let mut v = [[T::zero(); N]; N];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = T::one();
    }
    for _sweep in 0..100 {
        let off: T = (0..N)
            .flat_map(|i| (0..N).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .fold(T::zero(), |x, y| x + y);
        if off <= T::min_positive_value() {
            break;
        }
        for p in 0..N {
            for q in p + 1..N {
                if a[p][q] == T::zero() {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (T::lit(2.0) * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..N {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..N {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let vkp = row[p];
                    let vkq = row[q];
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }
    v
}

fn real_to_complex<T: Real>(m: &[[T; 4]; 4]) -> ComplexMatrix<T> {
    ComplexMatrix::from_fn(4, 4, |r, c| Complex::new(m[r][c], T::zero()))
}

fn max_off_diagonal<T: Real>(m: &ComplexMatrix<T>) -> T {
    let mut worst = T::zero();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if r != c {
                worst = worst.max(m[(r, c)].norm());
            }
        }
    }
    worst
}

/// Splits a `4 × 4` product state operator into `A ⊗ C` with `det C = 1`.
fn factor_tensor<T: Real>(m: &ComplexMatrix<T>) -> (ComplexMatrix<T>, ComplexMatrix<T>) {
    let block = |i: usize, j: usize| ComplexMatrix::from_fn(2, 2, |k, l| m[(2 * i + k, 2 * j + l)]);
    let norm = |b: &ComplexMatrix<T>| {
        b.as_slice()
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |a, x| a + x)
    };
    let (bi, bj) = [(0, 0), (0, 1), (1, 0), (1, 1)]
        .into_iter()
        .max_by(|&(a, b), &(c, d)| {
            norm(&block(a, b))
                .partial_cmp(&norm(&block(c, d)))
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .expect("four blocks");
    let big = block(bi, bj);
    let det = big[(0, 0)] * big[(1, 1)] - big[(0, 1)] * big[(1, 0)];
    let right = big.scale(Complex::<T>::one() / det.sqrt());
    let right_dag = right.dagger();
    let half = T::lit(0.5);
    let left = ComplexMatrix::from_fn(2, 2, |i, j| {
        right_dag.mul_unchecked(&block(i, j)).trace() * half
    });
    (left, right)
}

/// Scales a one-qubit unitary to unit determinant, returning the removed phase.
fn to_special<T: Real>(u: &ComplexMatrix<T>) -> (ComplexMatrix<T>, T) {
    let det = u[(0, 0)] * u[(1, 1)] - u[(0, 1)] * u[(1, 0)];
    let phase = det.arg() / T::lit(2.0);
    (u.scale(Complex::from_polar(T::one(), -phase)), phase)
}

/// Decomposes a two-qubit unitary into eight one-qubit gates around three
/// control-first CNOTs.
pub fn kak_three_cnot<T: Real>(u: &ComplexMatrix<T>) -> Result<TwoQubitDecomposition<T>> {
    if u.rows() != 4 || u.cols() != 4 {
        return Err(Error::DimensionMismatch(format!(
            "expected a 4x4 unitary, got {}x{}",
            u.rows(),
            u.cols()
        )));
    }
    u.ensure_unitary()?;
    let fail_tol = T::unitary_tol() * T::lit(100.0);

    let det = u.determinant()?;
    let special = u.scale(Complex::from_polar(T::one(), -det.arg() / T::lit(4.0)));
    let b = magic_basis::<T>();
    let b_dag = b.dagger();
    let up = b_dag.mul_unchecked(&special).mul_unchecked(&b);
    let m2 = up.transpose().mul_unchecked(&up);

    // Real orthogonal diagonalizer of the complex symmetric M2: its real and
    // imaginary parts commute, so a generic real combination shares the
    // eigenvectors.
    let mut best: Option<(T, [[T; 4]; 4])> = None;
    for w in MIX_WEIGHTS {
        let w = T::lit(w);
        let mut s = [[T::zero(); 4]; 4];
        for (r, row) in s.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                // symmetrize against rounding
                let z = (m2[(r, c)] + m2[(c, r)]) * T::lit(0.5);
                *x = z.re + w * z.im;
            }
        }
        let p = jacobi_eigenvectors(s);
        let pc = real_to_complex(&p);
        let off = max_off_diagonal(&pc.transpose().mul_unchecked(&m2).mul_unchecked(&pc));
        if best.as_ref().is_none_or(|(o, _)| off < *o) {
            best = Some((off, p));
        }
        if off <= T::unitary_tol() {
            break;
        }
    }
    let (off, mut p) = best.expect("at least one mixing weight");
    if off > fail_tol {
        return Err(Error::DecompositionFailed(off.to_f64_lossy()));
    }
    if real_to_complex(&p).determinant()?.re < T::zero() {
        for row in p.iter_mut() {
            row[0] = -row[0];
        }
    }
    let pc = real_to_complex(&p);
    let diag = pc.transpose().mul_unchecked(&m2).mul_unchecked(&pc);
    let mut half_phases: [T; 4] = std::array::from_fn(|k| diag[(k, k)].arg() / T::lit(2.0));

    let k1_of = |th: &[T; 4]| {
        let d: Vec<Complex<T>> = th
            .iter()
            .map(|&t| Complex::from_polar(T::one(), -t))
            .collect();
        up.mul_unchecked(&pc)
            .mul_unchecked(&ComplexMatrix::diagonal(&d))
    };
    let mut k1 = k1_of(&half_phases);
    if k1.determinant()?.re < T::zero() {
        half_phases[0] += T::PI();
        k1 = k1_of(&half_phases);
    }
    // K1 is real orthogonal up to rounding; drop the imaginary residue.
    let k1 = ComplexMatrix::from_fn(4, 4, |r, c| Complex::new(k1[(r, c)].re, T::zero()));

    let dot = |d: &[f64; 4]| {
        half_phases
            .iter()
            .zip(d)
            .map(|(&t, &s)| t * T::lit(s))
            .fold(T::zero(), |a, x| a + x)
            / T::lit(4.0)
    };
    let (a, bb, c) = (dot(&XX_DIAG), dot(&YY_DIAG), dot(&ZZ_DIAG));

    let left = b.mul_unchecked(&k1).mul_unchecked(&b_dag);
    let right = b.mul_unchecked(&pc.transpose()).mul_unchecked(&b_dag);
    let (left_a, left_b) = factor_tensor(&left);
    let (right_a, right_b) = factor_tensor(&right);

    let h = hadamard::<T>();
    let half_pi = T::FRAC_PI_2();
    let two = T::lit(2.0);
    let raw = [
        h.mul_unchecked(&right_a),
        rz(half_pi - two * c).mul_unchecked(&h),
        h.clone(),
        left_a.mul_unchecked(&rz(half_pi)).mul_unchecked(&h),
        h.mul_unchecked(&rz(-half_pi)).mul_unchecked(&right_b),
        ry(two * a - half_pi).mul_unchecked(&h),
        h.mul_unchecked(&ry(half_pi - two * bb)),
        left_b.mul_unchecked(&h),
    ];
    let locals: [ComplexMatrix<T>; 8] = std::array::from_fn(|i| to_special(&raw[i]).0);

    let mut dec = TwoQubitDecomposition {
        locals,
        global_phase: T::zero(),
        interaction: [a, bb, c],
    };
    let overlap = dec.reconstruct().inner(u)?;
    if !overlap.is_zero() {
        dec.global_phase = overlap.arg();
    }
    let err = phase_distance(&dec.reconstruct(), u)?.value();
    if err.is_nan() || err > fail_tol {
        return Err(Error::DecompositionFailed(err.to_f64_lossy()));
    }
    Ok(dec)
}
