// SPDX-License-Identifier: Apache-2.0

//! R-gate masking and total R-gate masking.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::circuit::{Circuit, Gate, GateKind};
use crate::decomp::cover::{cover_unitary, CoverOptions, Layer, R_MAX};
use crate::error::{Error, Result};
use crate::leakage::{extract_view, RSet, ViewMode};
use crate::topology::{build_y, wire_labels, Topology};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MaskMode {
    /// Hide gate identifications only.
    Gates,
    /// Hide identifications and positions.
    Total,
}

impl MaskMode {
    pub fn as_str(self) -> &'static str {
        match self {
            MaskMode::Gates => "gates",
            MaskMode::Total => "total",
        }
    }
}

impl fmt::Display for MaskMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MaskMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gates" => Ok(MaskMode::Gates),
            "total" => Ok(MaskMode::Total),
            other => Err(Error::Precondition(format!("unknown mask mode {other:?}"))),
        }
    }
}

/// Depth accounting for one masking run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaskReport {
    pub mode: MaskMode,
    pub input_depth: usize,
    pub output_depth: usize,
    pub r: usize,
    /// Depth of `Y`; total mode only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    pub bound: usize,
    pub gate_counts: BTreeMap<String, usize>,
}

/// Fills in the depth bound for `mode` and checks the masked depth against it.
pub fn depth_report(
    c: &Circuit,
    masked: &Circuit,
    mode: MaskMode,
    p: Option<usize>,
) -> Result<MaskReport> {
    let t = c.depth();
    let bound = match mode {
        MaskMode::Gates => 2 * R_MAX * t,
        MaskMode::Total => {
            let p =
                p.ok_or_else(|| Error::Precondition("total mode needs the depth of Y".into()))?;
            2 * R_MAX * p * t
        }
    };
    let report = MaskReport {
        mode,
        input_depth: t,
        output_depth: masked.depth(),
        r: R_MAX,
        p: if mode == MaskMode::Total { p } else { None },
        bound,
        gate_counts: masked.gate_counts(),
    };
    if report.output_depth > bound {
        return Err(Error::BoundViolation {
            depth: report.output_depth,
            bound,
        });
    }
    Ok(report)
}

fn check_sizes(c: &Circuit) -> Result<()> {
    c.validate()?;
    match c.gates().map(|(_, g)| g.size()).find(|&m| m > 2) {
        Some(m) => Err(Error::OversizeGate(m)),
        None => Ok(()),
    }
}

fn pad(g: &Gate) -> Gate {
    Gate::new(GateKind::Id(g.size()), g.operands.clone())
}

/// Lays out per-gate expansions side by side, padding the shorter ones with
/// identities on the same operands so the step spans a fixed number of
/// layers.
fn align(expansions: Vec<(Gate, Vec<Layer>)>, out: &mut Circuit) {
    let len = expansions
        .iter()
        .map(|(_, e)| e.len())
        .max()
        .unwrap_or(0)
        .max(1);
    let mut layers: Vec<Layer> = vec![Vec::new(); len];
    for (g, e) in expansions {
        let filler = pad(&g);
        for (i, layer) in layers.iter_mut().enumerate() {
            match e.get(i) {
                Some(gates) => layer.extend(gates.iter().cloned()),
                None => layer.push(filler.clone()),
            }
        }
    }
    for l in layers {
        out.push_step(l);
    }
}

fn cover(g: &Gate, opts: CoverOptions) -> Result<Vec<Layer>> {
    cover_unitary(&g.kind.matrix(), &g.operands, opts)
}

/// R-gate masking: every non-identity gate is replaced by its covering
/// expansion. Identity gates are kept. The gates of one input step stay
/// aligned: the step expands to the longest expansion it holds.
pub fn mask_gates(c: &Circuit, opts: CoverOptions) -> Result<(Circuit, MaskReport)> {
    check_sizes(c)?;
    let mut out = Circuit::new(c.n);
    for step in &c.steps {
        let mut expansions = Vec::with_capacity(step.len());
        for g in step {
            let e = if g.kind.is_identity() {
                vec![vec![g.clone()]]
            } else {
                cover(g, opts)?
            };
            expansions.push((g.clone(), e));
        }
        align(expansions, &mut out);
    }
    let report = depth_report(c, &out, MaskMode::Gates, None)?;
    Ok((out, report))
}

/// Embeds `c` into `T` copies of `Y`: the identity at each gate's wire label
/// in copy `i` is replaced by that gate.
pub fn embed_in_y(c: &Circuit, t: &Topology) -> Result<(Circuit, usize)> {
    check_sizes(c)?;
    if c.n != t.n() {
        return Err(Error::QubitCountMismatch {
            circuit: c.n,
            topology: t.n(),
        });
    }
    let w = wire_labels(t);
    let y = build_y(t);
    let p = y.depth();
    // label -> layer of Y holding it
    let mut slot: BTreeMap<Vec<usize>, (usize, usize)> = BTreeMap::new();
    for (i, layer) in y.steps.iter().enumerate() {
        for (j, g) in layer.iter().enumerate() {
            slot.insert(g.wire_label(), (i, j));
        }
    }
    let mut out = Circuit::new(c.n);
    for step in &c.steps {
        let mut copy = y.steps.clone();
        for g in step {
            let label = g.wire_label();
            if !w.contains(&label) {
                return Err(Error::LabelNotInTopology(label));
            }
            let (i, j) = slot[&label];
            copy[i][j] = g.clone();
        }
        for layer in copy {
            out.push_step(layer);
        }
    }
    Ok((out, p))
}

/// Total R-gate masking over topology `t`. Every gate of the embedded
/// circuit is covered, identities included.
pub fn mask_total(c: &Circuit, t: &Topology, opts: CoverOptions) -> Result<(Circuit, MaskReport)> {
    let (embedded, p) = embed_in_y(c, t)?;
    let mut out = Circuit::new(c.n);
    for layer in &embedded.steps {
        let mut expansions = Vec::with_capacity(layer.len());
        for g in layer {
            expansions.push((g.clone(), cover(g, opts)?));
        }
        align(expansions, &mut out);
    }
    let report = depth_report(c, &out, MaskMode::Total, Some(p))?;
    Ok((out, report))
}

/// Outcome of comparing the R-positional views of two masked circuits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub equal: bool,
    /// First time step whose view lines differ.
    pub first_difference: Option<usize>,
    pub left: Option<String>,
    pub right: Option<String>,
}

/// Masks both circuits and compares their R-positional views. Unmet
/// preconditions are returned as [`Error::Precondition`], never as an
/// unequal verdict.
pub fn indistinguishable(
    c1: &Circuit,
    c2: &Circuit,
    t: Option<&Topology>,
    mode: MaskMode,
    opts: CoverOptions,
) -> Result<Verdict> {
    let (m1, m2) = match mode {
        MaskMode::Gates => {
            let p1 = extract_view(c1, ViewMode::Positional, RSet::VirtualZ);
            let p2 = extract_view(c2, ViewMode::Positional, RSet::VirtualZ);
            if c1.n != c2.n || p1 != p2 {
                return Err(Error::Precondition(
                    "gate mode needs equal positional views".into(),
                ));
            }
            (mask_gates(c1, opts)?.0, mask_gates(c2, opts)?.0)
        }
        MaskMode::Total => {
            let t = t.ok_or_else(|| Error::Precondition("total mode needs a topology".into()))?;
            if c1.depth() != c2.depth() || c1.n != c2.n {
                return Err(Error::Precondition(
                    "total mode needs equal depth and qubit count".into(),
                ));
            }
            let w = wire_labels(t);
            for (_, g) in c1.gates().chain(c2.gates()) {
                if !w.contains(&g.operands) {
                    return Err(Error::Precondition(format!(
                        "wire label {:?} is not allowed by the topology",
                        g.wire_label()
                    )));
                }
            }
            (mask_total(c1, t, opts)?.0, mask_total(c2, t, opts)?.0)
        }
    };
    let v1 = extract_view(&m1, ViewMode::RPositional, RSet::VirtualZ);
    let v2 = extract_view(&m2, ViewMode::RPositional, RSet::VirtualZ);
    let first = v1.first_difference(&v2);
    Ok(Verdict {
        equal: first.is_none(),
        first_difference: first,
        left: first.and_then(|i| v1.step_line(i)),
        right: first.and_then(|i| v2.step_line(i)),
    })
}
