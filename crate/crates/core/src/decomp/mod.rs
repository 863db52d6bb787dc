// SPDX-License-Identifier: Apache-2.0

//! Gate matrices and decompositions onto `{Z_θ, X_{π/2}, X, CNOT}`.

pub mod cover;
pub mod euler;
pub mod gates;
pub mod kak;
pub mod pulse;

pub use cover::{cover_gate, CoverOptions, CoveringTemplate, Layer, R_MAX};
pub use euler::{euler_zxz, virtual_z_product, virtual_z_rewrite, EulerAngles};
pub use gates::gate_matrix;
pub use kak::{kak_three_cnot, TwoQubitDecomposition};
pub use pulse::{pulse_unitary, PulseParams};
