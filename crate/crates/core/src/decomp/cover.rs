// SPDX-License-Identifier: Apache-2.0

//! Covering templates: every one- and two-qubit gate is emitted as
//! alternating layers of virtual `RZ` gates and a fixed non-virtual
//! skeleton, so the skeleton carries no information about the gate.

use super::euler::euler_zxz;
use super::gates::swap;
use super::kak::kak_three_cnot;
use crate::circuit::{Gate, GateKind};
use crate::error::{Error, Result};
use crate::numerics::ComplexMatrix;

/// One time step of emitted gates.
pub type Layer = Vec<Gate>;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CoverOptions {
    /// Drop the trailing identity step of each template (and the layer it
    /// occupies), giving 5 instead of 6 gates per one-qubit gate and depth
    /// 23 instead of 24 per two-qubit gate.
    pub elide_trailing_identity: bool,
}

/// One template step, as gate kinds over the operand slots in order. `Cx`
/// occupies both slots of a two-qubit step.
pub type TemplateStep = Vec<GateKind>;

/// The fixed non-virtual tuple `(S₁, …, S_r)` for gates of size `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoveringTemplate {
    pub m: usize,
    pub steps: Vec<TemplateStep>,
}

impl CoveringTemplate {
    /// `(SX, SX, I)`.
    pub fn single_qubit() -> Self {
        Self {
            m: 1,
            steps: vec![
                vec![GateKind::Sx],
                vec![GateKind::Sx],
                vec![GateKind::Id(1)],
            ],
        }
    }

    /// Four blocks of `(SX⊗SX, SX⊗SX, ·)`, the first three closed by a CNOT
    /// and the last by `I⊗I`.
    pub fn two_qubit() -> Self {
        let pair = || vec![GateKind::Sx, GateKind::Sx];
        let mut steps = Vec::with_capacity(12);
        for block in 0..4 {
            steps.push(pair());
            steps.push(pair());
            steps.push(if block < 3 {
                vec![GateKind::Cx]
            } else {
                vec![GateKind::Id(1), GateKind::Id(1)]
            });
        }
        Self { m: 2, steps }
    }

    pub fn for_size(m: usize) -> Result<Self> {
        match m {
            1 => Ok(Self::single_qubit()),
            2 => Ok(Self::two_qubit()),
            other => Err(Error::OversizeGate(other)),
        }
    }

    /// `r_m`.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Places a template step on concrete qubits.
    fn place(step: &TemplateStep, operands: &[usize]) -> Layer {
        let mut slot = 0;
        let mut out = Vec::with_capacity(step.len());
        for kind in step {
            let width = kind.size();
            out.push(Gate::new(
                kind.clone(),
                operands[slot..slot + width].to_vec(),
            ));
            slot += width;
        }
        out
    }
}

/// Largest template length; every covered gate spans at most `2·R_MAX` layers.
pub const R_MAX: usize = 12;

/// Covers a non-virtual gate of size 1 or 2.
///
/// The output alternates an `RZ` layer with a template step, starting with
/// `RZ`, so it has `2·r_m` layers. Every `RZ` slot is filled (angle 0
/// allowed) so the non-`RZ` gates are the template exactly. Two-qubit gates
/// are laid out on their operands in ascending order: the CNOT control is
/// always the lower-indexed qubit.
pub fn cover_gate(g: &Gate, opts: CoverOptions) -> Result<Vec<Layer>> {
    if g.kind.is_r() {
        return Err(Error::RGateInput(g.kind.to_string()));
    }
    cover_unitary(&g.kind.matrix(), &g.operands, opts)
}

/// Covers an arbitrary one- or two-qubit unitary on the given operands.
pub(crate) fn cover_unitary(
    matrix: &ComplexMatrix<f64>,
    operands: &[usize],
    opts: CoverOptions,
) -> Result<Vec<Layer>> {
    let m = operands.len();
    let template = CoveringTemplate::for_size(m)?;
    if matrix.qubit_count() != Some(m) {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix on {m} operands",
            matrix.rows(),
            matrix.cols()
        )));
    }

    // Virtual angles per qubit slot, three per template block.
    let (slots, angles): (Vec<usize>, Vec<Vec<f64>>) = if m == 1 {
        let e = euler_zxz(matrix)?;
        (operands.to_vec(), vec![e.virtual_z_angles().to_vec()])
    } else {
        let (lo, hi) = if operands[0] < operands[1] {
            (operands[0], operands[1])
        } else {
            (operands[1], operands[0])
        };
        let ordered = if operands[0] < operands[1] {
            matrix.clone()
        } else {
            let sw = swap::<f64>();
            sw.mul_unchecked(matrix).mul_unchecked(&sw)
        };
        let dec = kak_three_cnot(&ordered)?;
        let mut per_slot = vec![Vec::with_capacity(12), Vec::with_capacity(12)];
        for (i, u) in dec.locals.iter().enumerate() {
            let e = euler_zxz(u)?;
            per_slot[i / 4].extend_from_slice(&e.virtual_z_angles());
        }
        (vec![lo, hi], per_slot)
    };

    let mut layers = Vec::with_capacity(2 * template.len());
    for (i, step) in template.steps.iter().enumerate() {
        layers.push(
            slots
                .iter()
                .zip(&angles)
                .map(|(&q, a)| Gate::rz(a[i], q))
                .collect(),
        );
        layers.push(CoveringTemplate::place(step, &slots));
    }
    if opts.elide_trailing_identity {
        layers.pop();
    }
    Ok(layers)
}
