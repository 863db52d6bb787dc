// SPDX-License-Identifier: Apache-2.0

//! Attacker-visible projections of a circuit.
//!
//! A view keeps, per time step, one record per gate. What a record shows
//! depends on the [`ViewMode`]:
//!
//! | mode           | non-R gate                 | R gate                    |
//! |----------------|----------------------------|---------------------------|
//! | `total`        | identification + operands  | identification + operands |
//! | `r-absent`     | identification + operands  | omitted                   |
//! | `r-positional` | identification + operands  | `R` + wire label          |
//! | `positional`   | wire label                 | wire label                |
//!
//! The text form has one line per time step, `"<index>: "` followed by the
//! step's records joined with `"; "`. Records are sorted by wire label (the
//! sorted operand set). Parameters are printed in scientific notation with
//! 12 significant digits. Two views carry the same information exactly when
//! their text forms are byte-identical.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::circuit::{Circuit, Gate, GateKind};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViewMode {
    Total,
    Positional,
    RAbsent,
    RPositional,
}

impl ViewMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ViewMode::Total => "total",
            ViewMode::Positional => "positional",
            ViewMode::RAbsent => "r-absent",
            ViewMode::RPositional => "r-positional",
        }
    }
}

impl fmt::Display for ViewMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ViewMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "total" => Ok(ViewMode::Total),
            "positional" => Ok(ViewMode::Positional),
            "r-absent" | "r_absent" => Ok(ViewMode::RAbsent),
            "r-positional" | "r_positional" => Ok(ViewMode::RPositional),
            other => Err(format!("unknown view mode {other:?}")),
        }
    }
}

/// The gate family treated as invisible to the attacker.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum RSet {
    /// Virtual `Z_θ` rotations, for every `θ`.
    #[default]
    VirtualZ,
}

impl RSet {
    pub fn contains(self, kind: &GateKind) -> bool {
        match self {
            RSet::VirtualZ => kind.is_r(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Shown {
    /// Serialized identification; the flag records R membership so a total
    /// view can be coarsened.
    Full(String, bool),
    RMarker,
    Hidden,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Record {
    shown: Shown,
    operands: Vec<usize>,
    label: Vec<usize>,
}

impl Record {
    fn write(&self, out: &mut String) {
        let list = |out: &mut String, qs: &[usize]| {
            out.push('[');
            for (i, q) in qs.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{q}");
            }
            out.push(']');
        };
        match &self.shown {
            Shown::Full(id, _) => {
                out.push_str(id);
                list(out, &self.operands);
            }
            Shown::RMarker => {
                out.push('R');
                list(out, &self.label);
            }
            Shown::Hidden => list(out, &self.label),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeakageView {
    mode: ViewMode,
    steps: Vec<Vec<Record>>,
}

fn fmt_param(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

fn identification(kind: &GateKind) -> String {
    let mut s = kind.name().to_string();
    match kind {
        GateKind::Opaque(m) => {
            s.push('{');
            for (i, z) in m.as_slice().iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                let _ = write!(s, "{}:{}", fmt_param(z.re), fmt_param(z.im));
            }
            s.push('}');
        }
        GateKind::Id(m) => {
            let _ = write!(s, "{m}");
        }
        _ => {
            let p = kind.params();
            if !p.is_empty() {
                let parts: Vec<String> = p.into_iter().map(fmt_param).collect();
                let _ = write!(s, "({})", parts.join(","));
            }
        }
    }
    s
}

fn record(g: &Gate, mode: ViewMode, r_set: RSet) -> Option<Record> {
    let is_r = r_set.contains(&g.kind);
    let shown = match (mode, is_r) {
        (ViewMode::Total, _) => Shown::Full(identification(&g.kind), is_r),
        (ViewMode::Positional, _) => Shown::Hidden,
        (ViewMode::RAbsent, true) => return None,
        (ViewMode::RPositional, true) => Shown::RMarker,
        (_, false) => Shown::Full(identification(&g.kind), false),
    };
    Some(Record {
        shown,
        operands: g.operands.clone(),
        label: g.wire_label(),
    })
}

fn sorted(mut step: Vec<Record>) -> Vec<Record> {
    step.sort_by(|a, b| {
        a.label
            .cmp(&b.label)
            .then_with(|| a.operands.cmp(&b.operands))
    });
    step
}

/// Projects a circuit onto the information visible in `mode`.
pub fn extract_view(c: &Circuit, mode: ViewMode, r_set: RSet) -> LeakageView {
    let steps = c
        .steps
        .iter()
        .map(|s| sorted(s.iter().filter_map(|g| record(g, mode, r_set)).collect()))
        .collect();
    LeakageView { mode, steps }
}

/// Byte-equality of the canonical text forms.
pub fn views_equal(a: &LeakageView, b: &LeakageView) -> Result<bool> {
    if a.mode != b.mode {
        return Err(Error::ModeMismatch(a.mode.to_string(), b.mode.to_string()));
    }
    Ok(a.to_text() == b.to_text())
}

impl LeakageView {
    pub fn mode(&self) -> ViewMode {
        self.mode
    }

    pub fn depth(&self) -> usize {
        self.steps.len()
    }

    pub fn step_line(&self, i: usize) -> Option<String> {
        let step = self.steps.get(i)?;
        let mut out = format!("{i}: ");
        for (k, r) in step.iter().enumerate() {
            if k > 0 {
                out.push_str("; ");
            }
            r.write(&mut out);
        }
        Some(out)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.steps.len() {
            out.push_str(&self.step_line(i).expect("index in range"));
            out.push('\n');
        }
        out
    }

    /// Index of the first time step whose lines differ, if any.
    pub fn first_difference(&self, other: &LeakageView) -> Option<usize> {
        let n = self.depth().max(other.depth());
        (0..n).find(|&i| self.step_line(i) != other.step_line(i))
    }

    /// Derives a coarser view from a total view.
    pub fn coarsen(&self, mode: ViewMode) -> Result<LeakageView> {
        if self.mode != ViewMode::Total && self.mode != mode {
            return Err(Error::ModeMismatch(self.mode.to_string(), mode.to_string()));
        }
        let steps = self
            .steps
            .iter()
            .map(|s| {
                sorted(
                    s.iter()
                        .filter_map(|r| {
                            let is_r = match &r.shown {
                                Shown::Full(_, is_r) => *is_r,
                                Shown::RMarker => true,
                                Shown::Hidden => false,
                            };
                            let shown = match (mode, is_r) {
                                (ViewMode::Total, _) => r.shown.clone(),
                                (ViewMode::Positional, _) => Shown::Hidden,
                                (ViewMode::RAbsent, true) => return None,
                                (ViewMode::RPositional, true) => Shown::RMarker,
                                (_, false) => r.shown.clone(),
                            };
                            Some(Record { shown, ..r.clone() })
                        })
                        .collect(),
                )
            })
            .collect();
        Ok(LeakageView { mode, steps })
    }
}

impl fmt::Display for LeakageView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
