// SPDX-License-Identifier: Apache-2.0

//! Small reference circuits and topologies used by tests, the acceptance
//! suite and the CLI examples.

use crate::circuit::{Circuit, Gate};
use crate::decomp::gates::{hadamard, swap};
use crate::numerics::ComplexMatrix;
use crate::topology::Topology;

pub fn hadamard_gate(q: usize) -> Gate {
    Gate::opaque(hadamard(), vec![q]).expect("hadamard is unitary")
}

/// `(I, H)` as two one-qubit gates and `I ⊗ H` as one two-qubit gate.
pub fn split_vs_joined_identity_hadamard() -> (Circuit, Circuit) {
    let split = Circuit::from_steps(2, vec![vec![Gate::id(0), hadamard_gate(1)]]);
    let joined_matrix = ComplexMatrix::identity(2).tensor(&hadamard());
    let joined = Circuit::from_steps(
        2,
        vec![vec![
            Gate::opaque(joined_matrix, vec![0, 1]).expect("unitary")
        ]],
    );
    (split, joined)
}

/// Teleportation written with H, CNOT and SWAP: six time steps.
pub fn teleportation_high_level() -> Circuit {
    Circuit::from_steps(
        3,
        vec![
            vec![hadamard_gate(1)],
            vec![Gate::cx(1, 2)],
            vec![Gate::cx(0, 1)],
            vec![Gate::cx(1, 2)],
            vec![Gate::opaque(swap(), vec![0, 1]).expect("unitary")],
            vec![Gate::cx(2, 1)],
        ],
    )
}

/// The same algorithm with SWAP and the reversed CNOT expanded into
/// Hadamard-conjugated CNOTs: twelve time steps.
pub fn teleportation_implemented() -> Circuit {
    let h = hadamard_gate;
    Circuit::from_steps(
        3,
        vec![
            vec![h(1)],
            vec![Gate::cx(1, 2)],
            vec![Gate::cx(0, 1)],
            vec![Gate::cx(1, 2)],
            vec![Gate::cx(0, 1)],
            vec![h(0), h(1)],
            vec![Gate::cx(0, 1)],
            vec![h(0), h(1)],
            vec![Gate::cx(0, 1)],
            vec![h(1), h(2)],
            vec![Gate::cx(1, 2)],
            vec![h(1), h(2)],
        ],
    )
}

/// Teleportation in the QASM subset: `h` as `u(pi/2,pi/2,pi/2)` and SWAP as
/// three alternating CNOTs.
pub const TELEPORTATION_QASM: &str = "\
OPENQASM 2.0;
qreg q[3];
u(pi/2,pi/2,pi/2) q[1];
cx q[1],q[2];
cx q[0],q[1];
cx q[1],q[2];
cx q[0],q[1];
cx q[1],q[0];
cx q[0],q[1];
cx q[2],q[1];
";

/// Four qubits in a line: 0-1-2-3.
pub fn path4() -> Topology {
    Topology::path(4)
}

/// Depth-2 circuit on the four-qubit line: a two-qubit gate on `{0,1}` and a
/// one-qubit gate on 2, then one-qubit gates on 1 and 3.
pub fn two_step_line_circuit() -> Circuit {
    let u = |seed| crate::numerics::random_unitary::<f64>(2, seed).expect("dim 2");
    let u1 = crate::numerics::random_unitary::<f64>(4, 1).expect("dim 4");
    Circuit::from_steps(
        4,
        vec![
            vec![
                Gate::opaque(u1, vec![0, 1]).expect("unitary"),
                Gate::opaque(u(2), vec![2]).expect("unitary"),
            ],
            vec![
                Gate::opaque(u(3), vec![1]).expect("unitary"),
                Gate::opaque(u(4), vec![3]).expect("unitary"),
            ],
        ],
    )
}
