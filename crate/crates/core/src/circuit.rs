// SPDX-License-Identifier: Apache-2.0

//! Circuit data model.
//!
//! A [`Circuit`] is an ordered list of time steps over `n` qubits; each time
//! step is a list of [`Gate`]s with pairwise disjoint wire labels, i.e. a
//! tensor decomposition of that step's unitary. A gate's index is its step
//! position and is never stored on the gate itself.

use std::collections::BTreeMap;
use std::fmt;

use crate::decomp::gates;
use crate::error::{Error, Result};
use crate::numerics::ComplexMatrix;
use crate::scalar::{reduce_angle, Real};

/// Gate identification.
#[derive(Debug, Clone, PartialEq)]
pub enum GateKind {
    /// Identity on the given number of qubits.
    Id(usize),
    X,
    /// `X_{π/2}`.
    Sx,
    /// `Z_θ`, angle kept in `[0, 2π)`.
    Rz(f64),
    /// `Z_θ · X_φ · Z_λ`.
    U3 {
        theta: f64,
        phi: f64,
        lambda: f64,
    },
    /// Controlled-NOT; the first operand is the control.
    Cx,
    /// Arbitrary `2^m × 2^m` unitary.
    Opaque(ComplexMatrix<f64>),
}

impl GateKind {
    pub fn rz(theta: f64) -> Self {
        GateKind::Rz(reduce_angle(theta))
    }

    pub fn u3(theta: f64, phi: f64, lambda: f64) -> Self {
        GateKind::U3 { theta, phi, lambda }
    }

    pub fn opaque(matrix: ComplexMatrix<f64>) -> Result<Self> {
        let kind = GateKind::Opaque(matrix);
        kind.check()?;
        Ok(kind)
    }

    /// Number of qubits the kind acts on.
    pub fn size(&self) -> usize {
        match self {
            GateKind::Id(m) => *m,
            GateKind::X | GateKind::Sx | GateKind::Rz(_) | GateKind::U3 { .. } => 1,
            GateKind::Cx => 2,
            GateKind::Opaque(m) => m.qubit_count().unwrap_or(0),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GateKind::Id(_) => "id",
            GateKind::X => "x",
            GateKind::Sx => "sx",
            GateKind::Rz(_) => "rz",
            GateKind::U3 { .. } => "u",
            GateKind::Cx => "cx",
            GateKind::Opaque(_) => "opaque",
        }
    }

    pub fn params(&self) -> Vec<f64> {
        match self {
            GateKind::Rz(t) => vec![*t],
            GateKind::U3 { theta, phi, lambda } => vec![*theta, *phi, *lambda],
            _ => Vec::new(),
        }
    }

    /// Membership in the virtual-gate family `{Z_θ}`.
    pub fn is_r(&self) -> bool {
        matches!(self, GateKind::Rz(_))
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, GateKind::Id(_))
    }

    /// The matrix this kind realizes, including opaque matrices.
    pub fn matrix<T: Real>(&self) -> ComplexMatrix<T> {
        match self {
            GateKind::Opaque(m) => m.cast(),
            other => gates::gate_matrix(other).expect("non-opaque kinds have a fixed matrix"),
        }
    }

    fn check(&self) -> Result<()> {
        match self {
            GateKind::Id(0) => Err(Error::InvalidGate("identity of size 0".into())),
            GateKind::Rz(t) if !(t.is_finite() && (0.0..std::f64::consts::TAU).contains(t)) => Err(
                Error::InvalidGate(format!("rz angle {t} is not reduced to [0, 2π)")),
            ),
            GateKind::U3 { theta, phi, lambda }
                if !(theta.is_finite() && phi.is_finite() && lambda.is_finite()) =>
            {
                Err(Error::InvalidGate("u angles must be finite".into()))
            }
            GateKind::Opaque(m) => {
                match m.qubit_count() {
                    Some(k) if k >= 1 => {}
                    _ => {
                        return Err(Error::InvalidGate(format!(
                            "opaque matrix is {}x{}, not 2^m x 2^m",
                            m.rows(),
                            m.cols()
                        )))
                    }
                }
                m.ensure_unitary()
                    .map_err(|e| Error::InvalidGate(format!("opaque matrix: {e}")))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        let p = self.params();
        if !p.is_empty() {
            let parts: Vec<String> = p.iter().map(|x| format!("{x}")).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

/// A gate placed on an ordered operand list.
#[derive(Debug, Clone, PartialEq)]
pub struct Gate {
    pub kind: GateKind,
    pub operands: Vec<usize>,
}

impl Gate {
    pub fn new(kind: GateKind, operands: Vec<usize>) -> Self {
        Self { kind, operands }
    }

    pub fn id(q: usize) -> Self {
        Self::new(GateKind::Id(1), vec![q])
    }

    pub fn id2(a: usize, b: usize) -> Self {
        Self::new(GateKind::Id(2), vec![a, b])
    }

    pub fn x(q: usize) -> Self {
        Self::new(GateKind::X, vec![q])
    }

    pub fn sx(q: usize) -> Self {
        Self::new(GateKind::Sx, vec![q])
    }

    pub fn rz(theta: f64, q: usize) -> Self {
        Self::new(GateKind::rz(theta), vec![q])
    }

    pub fn u3(theta: f64, phi: f64, lambda: f64, q: usize) -> Self {
        Self::new(GateKind::u3(theta, phi, lambda), vec![q])
    }

    pub fn cx(control: usize, target: usize) -> Self {
        Self::new(GateKind::Cx, vec![control, target])
    }

    pub fn opaque(matrix: ComplexMatrix<f64>, operands: Vec<usize>) -> Result<Self> {
        Ok(Self::new(GateKind::opaque(matrix)?, operands))
    }

    pub fn size(&self) -> usize {
        self.operands.len()
    }

    /// The operand set, sorted ascending.
    pub fn wire_label(&self) -> Vec<usize> {
        let mut w = self.operands.clone();
        w.sort_unstable();
        w
    }

    fn check(&self, n: usize) -> Result<()> {
        self.kind.check()?;
        if self.operands.len() != self.kind.size() {
            return Err(Error::InvalidGate(format!(
                "{} acts on {} qubits but has {} operands",
                self.kind.name(),
                self.kind.size(),
                self.operands.len()
            )));
        }
        for (i, &q) in self.operands.iter().enumerate() {
            if q >= n {
                return Err(Error::OperandOutOfRange { operand: q, n });
            }
            if self.operands[..i].contains(&q) {
                return Err(Error::DuplicateOperand(q));
            }
        }
        Ok(())
    }
}

/// An `n`-qubit circuit as an ordered list of time steps.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Circuit {
    pub n: usize,
    pub steps: Vec<Vec<Gate>>,
}

impl Circuit {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            steps: Vec::new(),
        }
    }

    pub fn from_steps(n: usize, steps: Vec<Vec<Gate>>) -> Self {
        Self { n, steps }
    }

    pub fn push_step(&mut self, step: Vec<Gate>) {
        self.steps.push(step);
    }

    pub fn depth(&self) -> usize {
        self.steps.len()
    }

    /// All gates with their step index.
    pub fn gates(&self) -> impl Iterator<Item = (usize, &Gate)> {
        self.steps
            .iter()
            .enumerate()
            .flat_map(|(i, s)| s.iter().map(move |g| (i, g)))
    }

    pub fn gate_count(&self) -> usize {
        self.steps.iter().map(Vec::len).sum()
    }

    /// Histogram of gate kind names.
    pub fn gate_counts(&self) -> BTreeMap<String, usize> {
        let mut counts = BTreeMap::new();
        for (_, g) in self.gates() {
            *counts.entry(g.kind.name().to_string()).or_insert(0) += 1;
        }
        counts
    }

    /// Checks every structural invariant, reporting the first violation.
    pub fn validate(&self) -> Result<()> {
        for (i, step) in self.steps.iter().enumerate() {
            let mut busy = vec![false; self.n];
            for g in step {
                g.check(self.n).map_err(|e| Error::InvalidCircuit {
                    step: i,
                    reason: e.to_string(),
                })?;
                for &q in &g.operands {
                    if busy[q] {
                        return Err(Error::InvalidCircuit {
                            step: i,
                            reason: format!("qubit {q} is used by two gates"),
                        });
                    }
                    busy[q] = true;
                }
            }
        }
        Ok(())
    }

    /// Appends all-wire identity steps until the depth reaches `target`.
    pub fn pad_to_depth(&self, target: usize) -> Result<Circuit> {
        if target < self.depth() {
            return Err(Error::PadBelowDepth {
                target,
                depth: self.depth(),
            });
        }
        let mut out = self.clone();
        while out.depth() < target {
            out.push_step((0..self.n).map(Gate::id).collect());
        }
        Ok(out)
    }
}
