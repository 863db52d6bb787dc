// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not unitary (deviation {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("operand {operand} out of range for {n} qubits")]
    OperandOutOfRange { operand: usize, n: usize },

    #[error("duplicate operand {0}")]
    DuplicateOperand(usize),

    #[error("circuit has {n} qubits, above the dense-simulation cap of {cap}")]
    Capacity { n: usize, cap: usize },

    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),

    #[error("invalid circuit at step {step}: {reason}")]
    InvalidCircuit { step: usize, reason: String },

    #[error("invalid gate: {0}")]
    InvalidGate(String),

    #[error("invalid topology: {0}")]
    InvalidTopology(String),

    #[error("cannot pad to depth {target}: circuit already has depth {depth}")]
    PadBelowDepth { target: usize, depth: usize },

    #[error("leakage views have different modes ({0} vs {1})")]
    ModeMismatch(String, String),

    #[error("graph has {0} edges; exact chromatic index is limited to 16")]
    TooManyEdges(usize),

    #[error("gate of size {0} cannot be masked (maximum size is 2)")]
    OversizeGate(usize),

    #[error("R gate {0} cannot be covered")]
    RGateInput(String),

    #[error("opaque gate {0} has no matrix-free form")]
    OpaqueGate(String),

    #[error("two-qubit decomposition failed: reconstruction error {0:e}")]
    DecompositionFailed(f64),

    #[error("wire label {0:?} is not allowed by the topology")]
    LabelNotInTopology(Vec<usize>),

    #[error("qubit count mismatch: circuit has {circuit}, topology has {topology}")]
    QubitCountMismatch { circuit: usize, topology: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("depth bound violated: output depth {depth} exceeds bound {bound}")]
    BoundViolation { depth: usize, bound: usize },

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("schema error at {pointer}: {message}")]
    Schema { pointer: String, message: String },
}

impl Error {
    pub(crate) fn schema(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            pointer: pointer.into(),
            message: message.into(),
        }
    }

    /// Short machine-readable tag for the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::NotUnitary { .. } => "not_unitary",
            Error::OperandOutOfRange { .. } => "operand_out_of_range",
            Error::DuplicateOperand(_) => "duplicate_operand",
            Error::Capacity { .. } => "capacity",
            Error::UnsupportedDimension(_) => "unsupported_dimension",
            Error::InvalidCircuit { .. } => "invalid_circuit",
            Error::InvalidGate(_) => "invalid_gate",
            Error::InvalidTopology(_) => "invalid_topology",
            Error::PadBelowDepth { .. } => "pad_below_depth",
            Error::ModeMismatch(..) => "mode_mismatch",
            Error::TooManyEdges(_) => "too_many_edges",
            Error::OversizeGate(_) => "oversize_gate",
            Error::RGateInput(_) => "r_gate_input",
            Error::OpaqueGate(_) => "opaque_gate",
            Error::DecompositionFailed(_) => "decomposition_failed",
            Error::LabelNotInTopology(_) => "label_not_in_topology",
            Error::QubitCountMismatch { .. } => "qubit_count_mismatch",
            Error::Precondition(_) => "precondition",
            Error::BoundViolation { .. } => "bound_violation",
            Error::Syntax { .. } => "syntax",
            Error::Schema { .. } => "schema",
        }
    }
}
