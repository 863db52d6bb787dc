// SPDX-License-Identifier: Apache-2.0

use super::{apply_gate_left, ComplexMatrix};
use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Largest register `circuit_unitary` will expand densely.
pub const DEFAULT_QUBIT_CAP: usize = 10;

/// The overall unitary `U_T ··· U_2 · U_1` of a circuit; step 1 acts on the
/// input state first.
pub fn circuit_unitary<T: Real>(c: &Circuit) -> Result<ComplexMatrix<T>> {
    circuit_unitary_with_cap(c, DEFAULT_QUBIT_CAP)
}

pub fn circuit_unitary_with_cap<T: Real>(c: &Circuit, cap: usize) -> Result<ComplexMatrix<T>> {
    if c.n > cap {
        return Err(Error::Capacity { n: c.n, cap });
    }
    c.validate()?;
    let mut acc = ComplexMatrix::identity(1usize << c.n);
    for (_, g) in c.gates() {
        if g.kind.is_identity() {
            continue;
        }
        apply_gate_left(&mut acc, &g.kind.matrix(), &g.operands, c.n)?;
    }
    Ok(acc)
}
