// SPDX-License-Identifier: Apache-2.0

//! The OpenQASM 2.0 subset used for interchange.
//!
//! ```text
//! program := "OPENQASM 2.0;" "qreg" ident "[" int "];" stmt*
//! stmt    := gate ";" | "barrier" args ";"
//! gate    := "id" q ("," q)? | "x" q | "sx" q | "rz(" real ")" q
//!          | "u(" real "," real "," real ")" q | "cx" q "," q
//! ```
//!
//! Gates are scheduled as soon as possible; `barrier` aligns the listed
//! qubits. `//` comments are allowed.

use std::fmt::Write as _;

use crate::circuit::{Circuit, Gate, GateKind};
use crate::error::{Error, Result};

/// Largest register the parser accepts.
pub const MAX_QUBITS: usize = 4096;
const MAX_NESTING: usize = 64;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Num(f64, bool),
    Sym(char),
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("{s:?}"),
        Tok::Num(x, _) => format!("number {x}"),
        Tok::Sym(c) => format!("'{c}'"),
        Tok::Eof => "end of input".into(),
    }
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let err = |line, column, message: String| Error::Syntax {
        line,
        column,
        message,
    };
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '/' && chars.get(i + 1) == Some(&'/') {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let start = (line, col);
        if c.is_ascii_alphabetic() || c == '_' {
            let s: String = chars[i..]
                .iter()
                .take_while(|c| c.is_ascii_alphanumeric() || **c == '_')
                .collect();
            i += s.len();
            col += s.len();
            out.push(Token {
                tok: Tok::Ident(s),
                line: start.0,
                column: start.1,
            });
        } else if c.is_ascii_digit()
            || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()))
        {
            let mut j = i;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            let mut integral = true;
            if j < chars.len() && chars[j] == '.' {
                integral = false;
                j += 1;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
            }
            if j < chars.len() && (chars[j] == 'e' || chars[j] == 'E') {
                let mut k = j + 1;
                if k < chars.len() && (chars[k] == '+' || chars[k] == '-') {
                    k += 1;
                }
                if k < chars.len() && chars[k].is_ascii_digit() {
                    integral = false;
                    j = k;
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                }
            }
            let s: String = chars[i..j].iter().collect();
            let x: f64 = s
                .parse()
                .map_err(|_| err(start.0, start.1, format!("malformed number {s:?}")))?;
            col += j - i;
            i = j;
            out.push(Token {
                tok: Tok::Num(x, integral),
                line: start.0,
                column: start.1,
            });
        } else if ";[](),*/+-".contains(c) {
            i += 1;
            col += 1;
            out.push(Token {
                tok: Tok::Sym(c),
                line: start.0,
                column: start.1,
            });
        } else {
            return Err(err(line, col, format!("unexpected character {c:?}")));
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    reg: String,
    n: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(t: &Token, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: t.line,
            column: t.column,
            message: message.into(),
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<Token> {
        let t = self.next();
        if t.tok == Tok::Sym(c) {
            Ok(t)
        } else {
            Err(Self::error_at(
                &t,
                format!("expected '{c}', found {}", describe(&t.tok)),
            ))
        }
    }

    fn expect_ident(&mut self) -> Result<(String, Token)> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) => Ok((s.clone(), t.clone())),
            other => Err(Self::error_at(
                &t,
                format!("expected identifier, found {}", describe(other)),
            )),
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        let (s, t) = self.expect_ident()?;
        if s == kw {
            Ok(())
        } else {
            Err(Self::error_at(&t, format!("expected {kw:?}, found {s:?}")))
        }
    }

    fn expect_int(&mut self) -> Result<usize> {
        let t = self.next();
        match t.tok {
            Tok::Num(x, true) if x >= 0.0 && x <= MAX_QUBITS as f64 => Ok(x as usize),
            Tok::Num(x, true) => Err(Self::error_at(&t, format!("integer {x} out of range"))),
            ref other => Err(Self::error_at(
                &t,
                format!("expected integer, found {}", describe(other)),
            )),
        }
    }

    fn header(&mut self) -> Result<()> {
        self.expect_keyword("OPENQASM")?;
        let t = self.next();
        if !matches!(t.tok, Tok::Num(v, false) if v == 2.0) {
            return Err(Self::error_at(&t, "expected version 2.0"));
        }
        self.expect_sym(';')?;
        self.expect_keyword("qreg")?;
        let (name, _) = self.expect_ident()?;
        self.expect_sym('[')?;
        let size_tok = self.peek().clone();
        let n = self.expect_int()?;
        if n > MAX_QUBITS {
            return Err(Self::error_at(
                &size_tok,
                format!("register larger than {MAX_QUBITS}"),
            ));
        }
        self.expect_sym(']')?;
        self.expect_sym(';')?;
        self.reg = name;
        self.n = n;
        Ok(())
    }

    fn qubit(&mut self) -> Result<usize> {
        let (name, t) = self.expect_ident()?;
        if name != self.reg {
            return Err(Self::error_at(&t, format!("unknown register {name:?}")));
        }
        self.expect_sym('[')?;
        let idx_tok = self.peek().clone();
        let q = self.expect_int()?;
        if q >= self.n {
            return Err(Self::error_at(
                &idx_tok,
                format!("qubit {q} out of range for register of size {}", self.n),
            ));
        }
        self.expect_sym(']')?;
        Ok(q)
    }

    fn real(&mut self) -> Result<f64> {
        let start = self.peek().clone();
        let x = self.expr(0)?;
        if x.is_finite() {
            Ok(x)
        } else {
            Err(Self::error_at(&start, "angle is not finite"))
        }
    }

    fn expr(&mut self, depth: usize) -> Result<f64> {
        let mut acc = self.term(depth)?;
        loop {
            match self.peek().tok {
                Tok::Sym('+') => {
                    self.next();
                    acc += self.term(depth)?;
                }
                Tok::Sym('-') => {
                    self.next();
                    acc -= self.term(depth)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self, depth: usize) -> Result<f64> {
        let mut acc = self.unary(depth)?;
        loop {
            match self.peek().tok {
                Tok::Sym('*') => {
                    self.next();
                    acc *= self.unary(depth)?;
                }
                Tok::Sym('/') => {
                    self.next();
                    acc /= self.unary(depth)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self, depth: usize) -> Result<f64> {
        if depth > MAX_NESTING {
            return Err(Self::error_at(self.peek(), "expression nested too deeply"));
        }
        let t = self.next();
        match &t.tok {
            Tok::Sym('-') => Ok(-self.unary(depth + 1)?),
            Tok::Sym('+') => self.unary(depth + 1),
            Tok::Sym('(') => {
                let x = self.expr(depth + 1)?;
                self.expect_sym(')')?;
                Ok(x)
            }
            Tok::Num(x, _) => Ok(*x),
            Tok::Ident(s) if s == "pi" => Ok(std::f64::consts::PI),
            other => Err(Self::error_at(
                &t,
                format!("expected a number, found {}", describe(other)),
            )),
        }
    }

    fn params<const N: usize>(&mut self) -> Result<[f64; N]> {
        self.expect_sym('(')?;
        let mut out = [0.0; N];
        for (i, slot) in out.iter_mut().enumerate() {
            if i > 0 {
                self.expect_sym(',')?;
            }
            *slot = self.real()?;
        }
        self.expect_sym(')')?;
        Ok(out)
    }

    fn operands(&mut self, at: &Token, count: usize) -> Result<Vec<usize>> {
        let mut qs = vec![self.qubit()?];
        while qs.len() < count {
            self.expect_sym(',')?;
            let q = self.qubit()?;
            if qs.contains(&q) {
                return Err(Self::error_at(at, format!("qubit {q} used twice")));
            }
            qs.push(q);
        }
        Ok(qs)
    }

    fn statement(&mut self, sched: &mut Schedule) -> Result<()> {
        let (name, t) = self.expect_ident()?;
        let gate = match name.as_str() {
            "barrier" => {
                let qs = self.barrier_args()?;
                self.expect_sym(';')?;
                sched.barrier(&qs);
                return Ok(());
            }
            "id" => {
                let mut qs = vec![self.qubit()?];
                if self.peek().tok == Tok::Sym(',') {
                    self.next();
                    let q = self.qubit()?;
                    if q == qs[0] {
                        return Err(Self::error_at(&t, format!("qubit {q} used twice")));
                    }
                    qs.push(q);
                }
                Gate::new(GateKind::Id(qs.len()), qs)
            }
            "x" => Gate::x(self.qubit()?),
            "sx" => Gate::sx(self.qubit()?),
            "rz" => {
                let [theta] = self.params::<1>()?;
                Gate::rz(theta, self.qubit()?)
            }
            "u" => {
                let [theta, phi, lambda] = self.params::<3>()?;
                Gate::u3(theta, phi, lambda, self.qubit()?)
            }
            "cx" => {
                let qs = self.operands(&t, 2)?;
                Gate::cx(qs[0], qs[1])
            }
            other => return Err(Self::error_at(&t, format!("unknown gate {other:?}"))),
        };
        self.expect_sym(';')?;
        sched.place(gate);
        Ok(())
    }

    fn barrier_args(&mut self) -> Result<Vec<usize>> {
        // A bare register name covers every qubit.
        if let (Tok::Ident(s), Some(next)) = (&self.peek().tok, self.toks.get(self.pos + 1)) {
            if *s == self.reg && next.tok != Tok::Sym('[') {
                self.next();
                return Ok((0..self.n).collect());
            }
        }
        let mut qs = vec![self.qubit()?];
        while self.peek().tok == Tok::Sym(',') {
            self.next();
            qs.push(self.qubit()?);
        }
        Ok(qs)
    }
}

struct Schedule {
    frontier: Vec<usize>,
    steps: Vec<Vec<Gate>>,
}

impl Schedule {
    fn place(&mut self, g: Gate) {
        let at = g
            .operands
            .iter()
            .map(|&q| self.frontier[q])
            .max()
            .unwrap_or(0);
        for &q in &g.operands {
            self.frontier[q] = at + 1;
        }
        if self.steps.len() <= at {
            self.steps.resize_with(at + 1, Vec::new);
        }
        self.steps[at].push(g);
    }

    fn barrier(&mut self, qs: &[usize]) {
        let top = qs.iter().map(|&q| self.frontier[q]).max().unwrap_or(0);
        for &q in qs {
            self.frontier[q] = top;
        }
    }
}

/// Parses the QASM subset, scheduling gates as soon as possible.
pub fn parse_qasm(text: &str) -> Result<Circuit> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        reg: String::new(),
        n: 0,
    };
    p.header()?;
    let mut sched = Schedule {
        frontier: vec![0; p.n],
        steps: Vec::new(),
    };
    while p.peek().tok != Tok::Eof {
        p.statement(&mut sched)?;
    }
    Ok(Circuit::from_steps(p.n, sched.steps))
}

fn angle(x: f64) -> String {
    format!("{x:.16e}")
}

/// Writes `c` in the QASM subset with a full-register barrier between
/// steps. Opaque gates and empty steps have no textual form.
pub fn emit_qasm(c: &Circuit) -> Result<String> {
    c.validate()?;
    let mut out = format!("OPENQASM 2.0;\nqreg q[{}];\n", c.n);
    for (i, step) in c.steps.iter().enumerate() {
        if step.is_empty() {
            return Err(Error::InvalidCircuit {
                step: i,
                reason: "empty time step cannot be written as QASM".into(),
            });
        }
        if i > 0 {
            out.push_str("barrier q;\n");
        }
        for g in step {
            let ops: Vec<String> = g.operands.iter().map(|q| format!("q[{q}]")).collect();
            let ops = ops.join(",");
            let _ = match &g.kind {
                GateKind::Id(_) => writeln!(out, "id {ops};"),
                GateKind::X => writeln!(out, "x {ops};"),
                GateKind::Sx => writeln!(out, "sx {ops};"),
                GateKind::Rz(t) => writeln!(out, "rz({}) {ops};", angle(*t)),
                GateKind::U3 { theta, phi, lambda } => writeln!(
                    out,
                    "u({},{},{}) {ops};",
                    angle(*theta),
                    angle(*phi),
                    angle(*lambda)
                ),
                GateKind::Cx => writeln!(out, "cx {ops};"),
                GateKind::Opaque(_) => {
                    return Err(Error::OpaqueGate(format!(
                        "at step {i} on {:?}",
                        g.operands
                    )))
                }
            };
        }
    }
    Ok(out)
}
