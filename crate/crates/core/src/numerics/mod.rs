// SPDX-License-Identifier: Apache-2.0

//! Dense complex linear algebra for desk-scale circuit unitaries.
//!
//! Storage is row-major. Qubit `0` is the most significant bit of a basis
//! state index: on `n` qubits, qubit `q` owns bit `n - 1 - q`. Every fixture
//! and gate embedding in the crate follows this convention.

mod random;
mod unitary;

use std::fmt;
use std::ops::{Index, IndexMut};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;

pub use random::random_unitary;
pub use unitary::{circuit_unitary, circuit_unitary_with_cap, DEFAULT_QUBIT_CAP};

/// A dense complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> ComplexMatrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<Complex<T>>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if rows * cols != data.len() {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![Complex::zero(); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m[(i, i)] = Complex::one();
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Complex<T>,
    ) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a square matrix from rows of `(re, im)` pairs given as `f64`.
    pub fn from_pairs<const N: usize>(rows: [[(f64, f64); N]; N]) -> Self {
        Self::from_fn(N, N, |r, c| {
            let (re, im) = rows[r][c];
            Complex::new(T::lit(re), T::lit(im))
        })
    }

    pub fn diagonal(entries: &[Complex<T>]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Complex<T>> {
        self.data
    }

    /// Number of qubits for a `2^k × 2^k` matrix.
    pub fn qubit_count(&self) -> Option<usize> {
        if self.is_square() && self.rows.is_power_of_two() {
            Some(self.rows.trailing_zeros() as usize)
        } else {
            None
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        debug_assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let row = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        out
    }

    /// Kronecker product `self ⊗ other`.
    pub fn tensor(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        Self::from_fn(rows, cols, |r, c| {
            self[(r / other.rows, c / other.cols)] * other[(r % other.rows, c % other.cols)]
        })
    }

    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| z * s).collect(),
        }
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<T> {
        self.check_same_shape(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max))
    }

    /// Frobenius inner product `⟨self, other⟩ = Σ conj(self_ij)·other_ij`.
    pub fn inner(&self, other: &Self) -> Result<Complex<T>> {
        self.check_same_shape(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `‖M·M† − I‖_max`, or `+∞` for a non-square matrix.
    pub fn unitarity_deviation(&self) -> T {
        if !self.is_square() {
            return T::infinity();
        }
        let prod = self.mul_unchecked(&self.dagger());
        prod.max_abs_diff(&Self::identity(self.rows))
            .unwrap_or_else(|_| T::infinity())
    }

    pub fn is_unitary(&self) -> bool {
        self.unitarity_deviation() <= T::unitary_tol()
    }

    pub fn ensure_unitary(&self) -> Result<()> {
        let deviation = self.unitarity_deviation();
        if deviation <= T::unitary_tol() {
            Ok(())
        } else {
            Err(Error::NotUnitary {
                deviation: deviation.to_f64_lossy(),
            })
        }
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn determinant(&self) -> Result<Complex<T>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = Complex::<T>::one();
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| {
                    a[i * n + col]
                        .norm()
                        .partial_cmp(&a[j * n + col].norm())
                        .unwrap_or(std::cmp::Ordering::Equal)
                })
                .unwrap_or(col);
            if a[pivot * n + col].is_zero() {
                return Ok(Complex::zero());
            }
            if pivot != col {
                for k in 0..n {
                    a.swap(col * n + k, pivot * n + k);
                }
                det = -det;
            }
            let p = a[col * n + col];
            det *= p;
            for r in col + 1..n {
                let f = a[r * n + col] / p;
                if f.is_zero() {
                    continue;
                }
                for k in col..n {
                    let v = a[col * n + k];
                    a[r * n + k] -= f * v;
                }
            }
        }
        Ok(det)
    }

    /// Converts the entries to another scalar type.
    pub fn cast<U: Real>(&self) -> ComplexMatrix<U> {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|z| {
                    Complex::new(
                        U::from_f64(z.re.to_f64_lossy()).unwrap_or_else(U::nan),
                        U::from_f64(z.im.to_f64_lossy()).unwrap_or_else(U::nan),
                    )
                })
                .collect(),
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }
}

impl<T> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;

    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Complex<T> {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for ComplexMatrix<T> {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex<T> {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

impl<T: fmt::Debug> fmt::Debug for ComplexMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                let z = &self.data[r * self.cols + c];
                write!(f, "({:?}, {:?}) ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

pub fn tensor<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    a.tensor(b)
}

pub fn matmul<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    a.matmul(b)
}

pub fn dagger<T: Real>(a: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    a.dagger()
}

/// Distance between two matrices modulo a global phase.
///
/// Zero means the matrices are equal up to a unit-modulus scalar.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct PhaseDistance<T>(T);

impl<T: Real> PhaseDistance<T> {
    #[inline]
    pub fn value(self) -> T {
        self.0
    }

    #[inline]
    pub fn within(self, tol: T) -> bool {
        self.0 <= tol
    }
}

impl<T: fmt::Display> fmt::Display for PhaseDistance<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `‖A − c·B‖_max` with the phase `c = ⟨B,A⟩ / |⟨B,A⟩|` aligning `B` to `A`
/// in the Frobenius inner product.
///
/// This choice of `c` is exact whenever `A` is a phase multiple of `B`, and
/// is symmetric in its arguments. Returns `+∞` when `⟨B,A⟩ = 0`, i.e. when
/// no phase brings the matrices together.
pub fn phase_distance<T: Real>(
    a: &ComplexMatrix<T>,
    b: &ComplexMatrix<T>,
) -> Result<PhaseDistance<T>> {
    let ip = b.inner(a)?;
    let mag = ip.norm();
    if mag.is_zero() {
        return Ok(PhaseDistance(T::infinity()));
    }
    let c = ip / mag;
    let d = a
        .as_slice()
        .iter()
        .zip(b.as_slice())
        .map(|(&x, &y)| (x - c * y).norm())
        .fold(T::zero(), T::max);
    Ok(PhaseDistance(d))
}

fn check_operands(k: usize, operands: &[usize], n: usize) -> Result<()> {
    if operands.len() != k {
        return Err(Error::DimensionMismatch(format!(
            "gate acts on {k} qubits but {} operands were given",
            operands.len()
        )));
    }
    for (i, &q) in operands.iter().enumerate() {
        if q >= n {
            return Err(Error::OperandOutOfRange { operand: q, n });
        }
        if operands[..i].contains(&q) {
            return Err(Error::DuplicateOperand(q));
        }
    }
    Ok(())
}

/// Basis-index bit masks for each operand, most significant gate input first.
fn operand_masks(operands: &[usize], n: usize) -> Vec<usize> {
    operands.iter().map(|&q| 1usize << (n - 1 - q)).collect()
}

/// Spreads the bits of a local gate index `l` onto the operand masks.
#[inline]
fn scatter(l: usize, masks: &[usize]) -> usize {
    let k = masks.len();
    masks
        .iter()
        .enumerate()
        .filter(|(i, _)| (l >> (k - 1 - i)) & 1 == 1)
        .fold(0, |acc, (_, &m)| acc | m)
}

/// Lifts a `2^k × 2^k` gate acting on `operands` to the full `2^n × 2^n`
/// unitary. The first operand feeds the most significant input of `g`.
pub fn embed_gate<T: Real>(
    g: &ComplexMatrix<T>,
    operands: &[usize],
    n: usize,
) -> Result<ComplexMatrix<T>> {
    let k = g
        .qubit_count()
        .ok_or_else(|| Error::DimensionMismatch(format!("{}x{} is not a gate", g.rows, g.cols)))?;
    check_operands(k, operands, n)?;
    let dim = 1usize << n;
    let masks = operand_masks(operands, n);
    let all = masks.iter().fold(0, |a, m| a | m);
    let local: Vec<usize> = (0..1usize << k).map(|l| scatter(l, &masks)).collect();
    let mut out = ComplexMatrix::zeros(dim, dim);
    for base in (0..dim).filter(|b| b & all == 0) {
        for (lr, &r) in local.iter().enumerate() {
            for (lc, &c) in local.iter().enumerate() {
                out[(base | r, base | c)] = g[(lr, lc)];
            }
        }
    }
    Ok(out)
}

/// `acc ← embed(g, operands) · acc` without materializing the embedding.
pub(crate) fn apply_gate_left<T: Real>(
    acc: &mut ComplexMatrix<T>,
    g: &ComplexMatrix<T>,
    operands: &[usize],
    n: usize,
) -> Result<()> {
    let k = g
        .qubit_count()
        .ok_or_else(|| Error::DimensionMismatch(format!("{}x{} is not a gate", g.rows, g.cols)))?;
    check_operands(k, operands, n)?;
    let dim = 1usize << n;
    if acc.rows != dim {
        return Err(Error::DimensionMismatch(format!(
            "accumulator has {} rows, expected {dim}",
            acc.rows
        )));
    }
    let masks = operand_masks(operands, n);
    let all = masks.iter().fold(0, |a, m| a | m);
    let local: Vec<usize> = (0..1usize << k).map(|l| scatter(l, &masks)).collect();
    let width = local.len();
    let mut buf = vec![Complex::<T>::zero(); width];
    let cols = acc.cols;
    for base in (0..dim).filter(|b| b & all == 0) {
        for col in 0..cols {
            for (l, &off) in local.iter().enumerate() {
                buf[l] = acc.data[(base | off) * cols + col];
            }
            for (lr, &off) in local.iter().enumerate() {
                let mut s = Complex::zero();
                for (lc, &v) in buf.iter().enumerate().take(width) {
                    s += g.data[lr * width + lc] * v;
                }
                acc.data[(base | off) * cols + col] = s;
            }
        }
    }
    Ok(())
}
