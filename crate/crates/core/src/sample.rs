// SPDX-License-Identifier: Apache-2.0

//! Seeded random circuits and topologies for tests and benchmarks.

use std::f64::consts::TAU;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuit::{Circuit, Gate};
use crate::numerics::random_unitary;
use crate::topology::Topology;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn angle(r: &mut ChaCha8Rng) -> f64 {
    r.gen_range(0.0..TAU)
}

fn opaque(r: &mut ChaCha8Rng, operands: Vec<usize>) -> Gate {
    let dim = 1 << operands.len();
    let u = random_unitary::<f64>(dim, r.gen()).expect("dim is 2 or 4");
    Gate::opaque(u, operands).expect("Haar samples are unitary")
}

/// A non-identity gate of the given size: `U3` on one qubit, `CX` or a
/// Haar-random `Opaque` on two.
fn identified(r: &mut ChaCha8Rng, operands: Vec<usize>) -> Gate {
    match operands.len() {
        1 => Gate::u3(angle(r), angle(r), angle(r), operands[0]),
        2 if r.gen_bool(0.5) => Gate::cx(operands[0], operands[1]),
        _ => opaque(r, operands),
    }
}

/// Random operand layout for one step: disjoint groups of size 1 or 2,
/// leaving some qubits idle.
fn layout(r: &mut ChaCha8Rng, n: usize) -> Vec<Vec<usize>> {
    let mut qs: Vec<usize> = (0..n).collect();
    qs.shuffle(r);
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let roll: f64 = r.gen();
        if roll < 0.15 {
            i += 1;
        } else if roll < 0.55 && i + 1 < n {
            out.push(vec![qs[i], qs[i + 1]]);
            i += 2;
        } else {
            out.push(vec![qs[i]]);
            i += 1;
        }
    }
    out
}

/// Gates drawn from `{U3, CX, Opaque(2)}`.
pub fn random_circuit(seed: u64, n: usize, depth: usize) -> Circuit {
    let mut r = rng(seed);
    let mut c = Circuit::new(n);
    for _ in 0..depth {
        let step = layout(&mut r, n)
            .into_iter()
            .map(|ops| identified(&mut r, ops))
            .collect();
        c.push_step(step);
    }
    c
}

/// Gates drawn from the QASM-expressible set `{Id, X, SX, RZ, U3, CX}`.
pub fn random_circuit_with_rz(seed: u64, n: usize, depth: usize) -> Circuit {
    let mut r = rng(seed);
    let mut c = Circuit::new(n);
    for _ in 0..depth {
        let step = layout(&mut r, n)
            .into_iter()
            .map(|ops| {
                if ops.len() == 2 {
                    return if r.gen_bool(0.8) {
                        Gate::cx(ops[0], ops[1])
                    } else {
                        Gate::id2(ops[0], ops[1])
                    };
                }
                let q = ops[0];
                match r.gen_range(0..5) {
                    0 => Gate::id(q),
                    1 => Gate::x(q),
                    2 => Gate::sx(q),
                    3 => Gate::rz(angle(&mut r), q),
                    _ => Gate::u3(angle(&mut r), angle(&mut r), angle(&mut r), q),
                }
            })
            .collect();
        c.push_step(step);
    }
    c
}

/// Replaces every gate's identification with an independent random one of
/// the same size, keeping operands. Identity gates stay identities.
pub fn reidentify(c: &Circuit, seed: u64) -> Circuit {
    let mut r = rng(seed);
    let steps = c
        .steps
        .iter()
        .map(|s| {
            s.iter()
                .map(|g| {
                    if g.kind.is_identity() {
                        g.clone()
                    } else {
                        identified(&mut r, g.operands.clone())
                    }
                })
                .collect()
        })
        .collect();
    Circuit::from_steps(c.n, steps)
}

/// Two circuits with equal positional views and independent gate
/// identifications.
pub fn same_positions_pair(seed: u64, n: usize, depth: usize) -> (Circuit, Circuit) {
    let a = random_circuit(seed, n, depth);
    let b = reidentify(&a, seed ^ 0x9e37_79b9_7f4a_7c15);
    (a, b)
}

/// A random circuit whose every wire label lies in `W(t)`.
pub fn random_circuit_on(seed: u64, t: &Topology, depth: usize) -> Circuit {
    let mut r = rng(seed);
    let edges: Vec<(usize, usize)> = t.edges().collect();
    let mut c = Circuit::new(t.n());
    for _ in 0..depth {
        let mut busy = vec![false; t.n()];
        let mut step = Vec::new();
        let mut order = edges.clone();
        order.shuffle(&mut r);
        for (a, b) in order {
            if !busy[a] && !busy[b] && r.gen_bool(0.4) {
                busy[a] = true;
                busy[b] = true;
                let ops = if r.gen_bool(0.5) {
                    vec![a, b]
                } else {
                    vec![b, a]
                };
                step.push(identified(&mut r, ops));
            }
        }
        for (q, &b) in busy.iter().enumerate() {
            if !b && r.gen_bool(0.7) {
                step.push(identified(&mut r, vec![q]));
            }
        }
        c.push_step(step);
    }
    c
}

/// A random connected graph: a random spanning tree plus extra edges.
pub fn random_connected_topology(seed: u64, n: usize) -> Topology {
    let mut r = rng(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut r);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[r.gen_range(0..i)];
        edges.push((parent, order[i]));
    }
    for a in 0..n {
        for b in a + 1..n {
            if r.gen_bool(0.25) {
                edges.push((a, b));
            }
        }
    }
    Topology::new(n, edges).expect("generated edges are in range and loop-free")
}
