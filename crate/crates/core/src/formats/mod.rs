// SPDX-License-Identifier: Apache-2.0

//! Circuit and topology file formats.

pub mod json;
pub mod qasm;

pub use json::{circuit_from_json, circuit_to_json, topology_from_json, topology_to_json};
pub use qasm::{emit_qasm, parse_qasm};

use crate::circuit::Circuit;
use crate::error::Result;

/// Parses either format: JSON when the first non-blank character is `{`,
/// QASM otherwise.
pub fn parse_circuit(text: &str) -> Result<Circuit> {
    if text.trim_start().starts_with('{') {
        circuit_from_json(text)
    } else {
        parse_qasm(text)
    }
}
