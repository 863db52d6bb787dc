// SPDX-License-Identifier: Apache-2.0

//! Side-channel masking for quantum circuits.
//!
//! Gates are rewritten so that every gate identification lives in virtual
//! `RZ` angles while the physically executed skeleton is fixed. Two passes
//! are provided: [`mask_gates`] hides which gates run, [`mask_total`] also
//! hides where they run by embedding the circuit in copies of an all-label
//! identity circuit built from the hardware topology.
//!
//! Linear algebra and decompositions are generic over [`Real`] (`f32` or
//! `f64`); the circuit model itself stores `f64` angles.

pub mod circuit;
pub mod decomp;
pub mod error;
pub mod fixtures;
pub mod formats;
pub mod leakage;
pub mod masking;
pub mod numerics;
pub mod sample;
pub mod scalar;
pub mod topology;

pub use circuit::{Circuit, Gate, GateKind};
pub use decomp::{
    cover_gate, euler_zxz, kak_three_cnot, pulse_unitary, virtual_z_rewrite, CoverOptions,
    CoveringTemplate, EulerAngles, PulseParams, TwoQubitDecomposition, R_MAX,
};
pub use error::{Error, Result};
pub use formats::{
    circuit_from_json, circuit_to_json, emit_qasm, parse_circuit, parse_qasm, topology_from_json,
    topology_to_json,
};
pub use leakage::{extract_view, views_equal, LeakageView, RSet, ViewMode};
pub use masking::{
    depth_report, indistinguishable, mask_gates, mask_total, MaskMode, MaskReport, Verdict,
};
pub use numerics::{
    circuit_unitary, embed_gate, phase_distance, random_unitary, ComplexMatrix, PhaseDistance,
};
pub use scalar::Real;
pub use topology::{
    build_y, edge_color, exact_chromatic_index, wire_labels, EdgeColoring, Topology, WireLabelSet,
};

pub type CMatrix = ComplexMatrix<f64>;
pub type CMatrix32 = ComplexMatrix<f32>;
pub type Euler = EulerAngles<f64>;
pub type Euler32 = EulerAngles<f32>;
pub type TwoQubitKak = TwoQubitDecomposition<f64>;
pub type TwoQubitKak32 = TwoQubitDecomposition<f32>;
pub type Pulse = PulseParams<f64>;
pub type Pulse32 = PulseParams<f32>;
