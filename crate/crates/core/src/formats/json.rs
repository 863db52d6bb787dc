// SPDX-License-Identifier: Apache-2.0

//! Lossless JSON forms of circuits and topologies.
//!
//! ```json
//! {"n": 2, "steps": [[{"kind": "opaque", "params": [], "qubits": [0, 1],
//!                      "matrix": [[[1.0, 0.0], ...], ...]}]]}
//! ```

use num_complex::Complex;
use serde_json::{json, Map, Value};

use crate::circuit::{Circuit, Gate, GateKind};
use crate::error::{Error, Result};
use crate::numerics::ComplexMatrix;
use crate::topology::Topology;

fn gate_to_json(g: &Gate) -> Value {
    let mut obj = Map::new();
    obj.insert("kind".into(), json!(g.kind.name()));
    obj.insert("params".into(), json!(g.kind.params()));
    obj.insert("qubits".into(), json!(g.operands));
    if let GateKind::Opaque(m) = &g.kind {
        let rows: Vec<Value> = (0..m.rows())
            .map(|r| {
                Value::Array(
                    (0..m.cols())
                        .map(|c| json!([m[(r, c)].re, m[(r, c)].im]))
                        .collect(),
                )
            })
            .collect();
        obj.insert("matrix".into(), Value::Array(rows));
    }
    Value::Object(obj)
}

pub fn circuit_to_value(c: &Circuit) -> Value {
    let steps: Vec<Value> = c
        .steps
        .iter()
        .map(|s| Value::Array(s.iter().map(gate_to_json).collect()))
        .collect();
    json!({ "n": c.n, "steps": steps })
}

pub fn circuit_to_json(c: &Circuit) -> String {
    let mut s = serde_json::to_string_pretty(&circuit_to_value(c)).expect("values serialize");
    s.push('\n');
    s
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, at: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::schema(format!("{at}/{key}"), format!("missing field {key:?}")))
}

fn object<'a>(v: &'a Value, at: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::schema(at_or_root(at), "expected an object"))
}

fn array<'a>(v: &'a Value, at: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::schema(at_or_root(at), "expected an array"))
}

fn uint(v: &Value, at: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| Error::schema(at, "expected a non-negative integer"))
}

fn float(v: &Value, at: &str) -> Result<f64> {
    v.as_f64()
        .ok_or_else(|| Error::schema(at, "expected a number"))
}

fn at_or_root(at: &str) -> String {
    if at.is_empty() {
        "/".into()
    } else {
        at.into()
    }
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn matrix_from_value(v: &Value, at: &str) -> Result<ComplexMatrix<f64>> {
    let rows = array(v, at)?;
    let dim = rows.len();
    let mut data = Vec::with_capacity(dim * dim);
    for (r, row) in rows.iter().enumerate() {
        let at_r = format!("{at}/{r}");
        let row = array(row, &at_r)?;
        if row.len() != dim {
            return Err(Error::schema(at_r, format!("expected {dim} entries")));
        }
        for (c, entry) in row.iter().enumerate() {
            let at_c = format!("{at_r}/{c}");
            let pair = array(entry, &at_c)?;
            if pair.len() != 2 {
                return Err(Error::schema(at_c, "expected [re, im]"));
            }
            let re = float(&pair[0], &format!("{at_c}/0"))?;
            let im = float(&pair[1], &format!("{at_c}/1"))?;
            data.push(Complex::new(re, im));
        }
    }
    ComplexMatrix::new(dim, dim, data).map_err(|e| Error::schema(at, e.to_string()))
}

fn gate_from_value(v: &Value, at: &str) -> Result<Gate> {
    let obj = object(v, at)?;
    let kind_at = format!("{at}/kind");
    let kind = field(obj, "kind", at)?
        .as_str()
        .ok_or_else(|| Error::schema(&kind_at, "expected a string"))?;
    let qubits_at = format!("{at}/qubits");
    let qubits = array(field(obj, "qubits", at)?, &qubits_at)?
        .iter()
        .enumerate()
        .map(|(i, q)| uint(q, &format!("{qubits_at}/{i}")))
        .collect::<Result<Vec<_>>>()?;
    let params_at = format!("{at}/params");
    let params = match obj.get("params") {
        None => Vec::new(),
        Some(p) => array(p, &params_at)?
            .iter()
            .enumerate()
            .map(|(i, x)| float(x, &format!("{params_at}/{i}")))
            .collect::<Result<Vec<_>>>()?,
    };
    let want_params = match kind {
        "rz" => 1,
        "u" => 3,
        _ => 0,
    };
    if params.len() != want_params {
        return Err(Error::schema(
            params_at,
            format!(
                "{kind} takes {want_params} parameters, found {}",
                params.len()
            ),
        ));
    }
    if obj.contains_key("matrix") != (kind == "opaque") {
        return Err(Error::schema(
            format!("{at}/matrix"),
            "matrix is required for opaque gates and forbidden otherwise",
        ));
    }
    let want_qubits = match kind {
        "x" | "sx" | "rz" | "u" => Some(1),
        "cx" => Some(2),
        "id" | "opaque" => None,
        other => {
            return Err(Error::schema(
                kind_at,
                format!("unknown gate kind {other:?}"),
            ))
        }
    };
    if want_qubits.is_some_and(|k| k != qubits.len()) || qubits.is_empty() {
        return Err(Error::schema(
            qubits_at,
            format!("wrong operand count for {kind}"),
        ));
    }
    let kind = match kind {
        "id" => GateKind::Id(qubits.len()),
        "x" => GateKind::X,
        "sx" => GateKind::Sx,
        "rz" => GateKind::rz(params[0]),
        "u" => GateKind::u3(params[0], params[1], params[2]),
        "cx" => GateKind::Cx,
        _ => {
            let m_at = format!("{at}/matrix");
            let m = matrix_from_value(&obj["matrix"], &m_at)?;
            if m.qubit_count() != Some(qubits.len()) {
                return Err(Error::schema(
                    m_at,
                    "matrix size does not match operand count",
                ));
            }
            GateKind::opaque(m).map_err(|e| Error::schema(m_at, e.to_string()))?
        }
    };
    Ok(Gate::new(kind, qubits))
}

pub fn circuit_from_value(v: &Value) -> Result<Circuit> {
    let obj = object(v, "")?;
    let n = uint(field(obj, "n", "")?, "/n")?;
    let steps = array(field(obj, "steps", "")?, "/steps")?;
    let mut c = Circuit::new(n);
    for (i, s) in steps.iter().enumerate() {
        let at = format!("/steps/{i}");
        let gates = array(s, &at)?
            .iter()
            .enumerate()
            .map(|(j, g)| gate_from_value(g, &format!("{at}/{j}")))
            .collect::<Result<Vec<_>>>()?;
        c.push_step(gates);
    }
    c.validate()?;
    Ok(c)
}

pub fn circuit_from_json(text: &str) -> Result<Circuit> {
    circuit_from_value(&parse_json(text)?)
}

pub fn topology_to_json(t: &Topology) -> String {
    let edges: Vec<[usize; 2]> = t.edges().map(|(a, b)| [a, b]).collect();
    let mut s =
        serde_json::to_string(&json!({ "n": t.n(), "edges": edges })).expect("values serialize");
    s.push('\n');
    s
}

/// `{"n": int, "edges": [[i, j], ...]}`.
pub fn topology_from_json(text: &str) -> Result<Topology> {
    let v = parse_json(text)?;
    let obj = object(&v, "")?;
    let n = uint(field(obj, "n", "")?, "/n")?;
    let mut edges = Vec::new();
    for (i, e) in array(field(obj, "edges", "")?, "/edges")?
        .iter()
        .enumerate()
    {
        let at = format!("/edges/{i}");
        let pair = array(e, &at)?;
        if pair.len() != 2 {
            return Err(Error::schema(at, "expected [i, j]"));
        }
        let a = uint(&pair[0], &format!("{at}/0"))?;
        let b = uint(&pair[1], &format!("{at}/1"))?;
        if a == b || a >= n || b >= n {
            return Err(Error::schema(
                at,
                format!("invalid edge ({a}, {b}) for {n} qubits"),
            ));
        }
        edges.push((a, b));
    }
    Topology::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::leakage::{extract_view, RSet, ViewMode};
    use crate::sample;

    fn total(c: &Circuit) -> String {
        extract_view(c, ViewMode::Total, RSet::VirtualZ).to_text()
    }

    fn pointer(e: Error) -> String {
        match e {
            Error::Schema { pointer, .. } => pointer,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn round_trips() {
        for c in [
            fixtures::teleportation_high_level(),
            fixtures::two_step_line_circuit(),
            sample::random_circuit_with_rz(3, 3, 4),
            Circuit::new(0),
        ] {
            let back = circuit_from_json(&circuit_to_json(&c)).unwrap();
            assert_eq!(total(&back), total(&c));
            assert_eq!(back, c);
        }
    }

    #[test]
    fn opaque_is_bit_exact() {
        for seed in 0..20 {
            let c = sample::random_circuit(seed, 4, 3);
            let back = circuit_from_json(&circuit_to_json(&c)).unwrap();
            for ((_, a), (_, b)) in c.gates().zip(back.gates()) {
                if let (GateKind::Opaque(x), GateKind::Opaque(y)) = (&a.kind, &b.kind) {
                    for (p, q) in x.as_slice().iter().zip(y.as_slice()) {
                        assert_eq!(p.re.to_bits(), q.re.to_bits());
                        assert_eq!(p.im.to_bits(), q.im.to_bits());
                    }
                } else {
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn schema_pointers() {
        assert_eq!(
            pointer(circuit_from_json(r#"{"steps": []}"#).unwrap_err()),
            "/n"
        );
        assert_eq!(pointer(circuit_from_json(r#"[]"#).unwrap_err()), "/");
        assert_eq!(
            pointer(circuit_from_json(r#"{"n": -1, "steps": []}"#).unwrap_err()),
            "/n"
        );
        assert_eq!(
            pointer(
                circuit_from_json(r#"{"n": 1, "steps": [[{"kind": "h", "qubits": [0]}]]}"#)
                    .unwrap_err()
            ),
            "/steps/0/0/kind"
        );
        assert_eq!(
            pointer(
                circuit_from_json(r#"{"n": 1, "steps": [[], [{"kind": "rz", "qubits": [0]}]]}"#)
                    .unwrap_err()
            ),
            "/steps/1/0/params"
        );
        assert_eq!(
            pointer(
                circuit_from_json(
                    r#"{"n": 1, "steps": [[{"kind": "opaque", "qubits": [0], "matrix": [[[1,0],[0,0]],[[0,0],[2,0]]]}]]}"#
                )
                .unwrap_err()
            ),
            "/steps/0/0/matrix"
        );
        assert_eq!(
            pointer(
                circuit_from_json(
                    r#"{"n": 1, "steps": [[{"kind": "opaque", "qubits": [0], "matrix": [[[1,0],[0,0]],[[0,0],[1,"x"]]]}]]}"#
                )
                .unwrap_err()
            ),
            "/steps/0/0/matrix/1/1/1"
        );
    }

    #[test]
    fn structural_errors() {
        let e = circuit_from_json(r#"{"n": 1, "steps": [[{"kind": "x", "qubits": [3]}]]}"#)
            .unwrap_err();
        assert!(matches!(e, Error::InvalidCircuit { step: 0, .. }));
        assert!(matches!(circuit_from_json("{"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn topology_json() {
        let t = topology_from_json(r#"{"n": 4, "edges": [[0,1],[2,1],[2,3]]}"#).unwrap();
        assert_eq!(t, fixtures::path4());
        assert_eq!(topology_from_json(&topology_to_json(&t)).unwrap(), t);
        assert_eq!(
            pointer(topology_from_json(r#"{"n": 2, "edges": [[0,0]]}"#).unwrap_err()),
            "/edges/0"
        );
        assert_eq!(
            pointer(topology_from_json(r#"{"edges": []}"#).unwrap_err()),
            "/n"
        );
    }
}
