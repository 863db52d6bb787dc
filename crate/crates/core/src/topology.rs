// SPDX-License-Identifier: Apache-2.0

//! Hardware connectivity and the all-label identity circuit `Y`.

use std::collections::{BTreeMap, BTreeSet};

use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};

pub type Edge = (usize, usize);

/// Undirected qubit connectivity. Edges are stored as `(low, high)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl Topology {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidTopology(format!("self-loop on qubit {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidTopology(format!(
                    "edge ({a}, {b}) out of range for {n} qubits"
                )));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Self { n, edges: set })
    }

    /// `0 - 1 - … - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).expect("valid")
    }

    pub fn star(leaves: usize) -> Self {
        Self::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid")
    }

    pub fn edgeless(n: usize) -> Self {
        Self::new(n, []).expect("valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Maximum degree `Δ(G)`.
    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Every wire label the topology allows: all singletons and all edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WireLabelSet {
    labels: Vec<Vec<usize>>,
}

impl WireLabelSet {
    pub fn labels(&self) -> &[Vec<usize>] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Membership of an operand set, in any order.
    pub fn contains(&self, operands: &[usize]) -> bool {
        let mut w = operands.to_vec();
        w.sort_unstable();
        self.labels.binary_search_by(|l| cmp_label(l, &w)).is_ok()
    }
}

// singletons first, then pairs, each group lexicographic
fn cmp_label(a: &[usize], b: &[usize]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

pub fn wire_labels(t: &Topology) -> WireLabelSet {
    let mut labels: Vec<Vec<usize>> = (0..t.n).map(|i| vec![i]).collect();
    labels.extend(t.edges().map(|(a, b)| vec![a, b]));
    WireLabelSet { labels }
}

/// A proper edge coloring with colors `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    pub color: BTreeMap<Edge, usize>,
    pub k: usize,
}

impl EdgeColoring {
    pub fn is_proper(&self) -> bool {
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (&(a, b), &c) in &self.color {
            if c >= self.k || !seen.insert((a, c)) || !seen.insert((b, c)) {
                return false;
            }
        }
        true
    }

    /// Edges of one color, sorted.
    pub fn class(&self, c: usize) -> Vec<Edge> {
        self.color
            .iter()
            .filter(|(_, &col)| col == c)
            .map(|(&e, _)| e)
            .collect()
    }
}

struct MisraGries {
    adj: Vec<Vec<usize>>,
    color: Vec<Vec<Option<usize>>>,
    palette: usize,
}

impl MisraGries {
    fn edge_color(&self, u: usize, v: usize) -> Option<usize> {
        self.color[u][v]
    }

    fn set(&mut self, u: usize, v: usize, c: Option<usize>) {
        self.color[u][v] = c;
        self.color[v][u] = c;
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.adj[v].iter().all(|&w| self.color[v][w] != Some(c))
    }

    fn free_color(&self, v: usize) -> usize {
        (0..self.palette)
            .find(|&c| self.is_free(v, c))
            .expect("a vertex of degree ≤ Δ always has a free color among Δ+1")
    }

    /// Maximal fan at `u` starting with the uncolored edge `(u, v)`.
    fn fan(&self, u: usize, v: usize) -> Vec<usize> {
        let mut fan = vec![v];
        loop {
            let last = *fan.last().expect("non-empty");
            let next = self.adj[u].iter().copied().find(|&w| {
                !fan.contains(&w) && self.edge_color(u, w).is_some_and(|c| self.is_free(last, c))
            });
            match next {
                Some(w) => fan.push(w),
                None => return fan,
            }
        }
    }

    /// Swaps colors `c` and `d` along the maximal `cd`-path from `u`.
    fn invert_path(&mut self, u: usize, c: usize, d: usize) {
        let mut path = Vec::new();
        let mut at = u;
        let mut prev = usize::MAX;
        let mut want = d;
        while let Some(w) = self.adj[at]
            .iter()
            .copied()
            .find(|&w| w != prev && self.color[at][w] == Some(want))
        {
            path.push((at, w));
            prev = at;
            at = w;
            want = if want == d { c } else { d };
        }
        for (a, b) in path {
            let old = self.color[a][b].expect("path edges are colored");
            self.set(a, b, Some(if old == c { d } else { c }));
        }
    }

    fn color_edge(&mut self, u: usize, v: usize) {
        if let Some(c) = (0..self.palette).find(|&c| self.is_free(u, c) && self.is_free(v, c)) {
            self.set(u, v, Some(c));
            return;
        }
        let fan = self.fan(u, v);
        let c = self.free_color(u);
        let d = self.free_color(*fan.last().expect("non-empty"));
        if c != d {
            self.invert_path(u, c, d);
        }
        let end = (0..fan.len())
            .find(|&i| {
                self.is_free(fan[i], d)
                    && (1..=i).all(|j| {
                        self.edge_color(u, fan[j])
                            .is_some_and(|col| self.is_free(fan[j - 1], col))
                    })
            })
            .expect("Misra–Gries guarantees a rotatable fan prefix");
        for j in 0..end {
            let next = self.edge_color(u, fan[j + 1]);
            self.set(u, fan[j], next);
        }
        self.set(u, fan[end], Some(d));
    }
}

/// Proper edge coloring with at most `Δ + 1` colors (Misra–Gries). Edges
/// are processed in sorted order and colors are renumbered by first use, so
/// the result is deterministic.
pub fn edge_color(t: &Topology) -> EdgeColoring {
    let mut adj = vec![Vec::new(); t.n];
    for (a, b) in t.edges() {
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut mg = MisraGries {
        adj,
        color: vec![vec![None; t.n]; t.n],
        palette: t.max_degree() + 1,
    };
    for (a, b) in t.edges() {
        mg.color_edge(a, b);
    }
    let mut renumber = BTreeMap::new();
    let mut color = BTreeMap::new();
    for (a, b) in t.edges() {
        let raw = mg.color[a][b].expect("every edge colored");
        let next = renumber.len();
        let c = *renumber.entry(raw).or_insert(next);
        color.insert((a, b), c);
    }
    EdgeColoring {
        color,
        k: renumber.len(),
    }
}

/// Largest edge count accepted by [`exact_chromatic_index`].
pub const EXACT_EDGE_CAP: usize = 16;

/// The edge chromatic number `χ′(G)` by exhaustive backtracking.
pub fn exact_chromatic_index(t: &Topology) -> Result<usize> {
    let edges: Vec<Edge> = t.edges().collect();
    if edges.len() > EXACT_EDGE_CAP {
        return Err(Error::TooManyEdges(edges.len()));
    }
    if edges.is_empty() {
        return Ok(0);
    }
    // Edges at a max-degree vertex need distinct colors, so start at Δ.
    let mut k = t.max_degree();
    loop {
        let mut assign = vec![usize::MAX; edges.len()];
        if colorable(&edges, &mut assign, 0, k, 0) {
            return Ok(k);
        }
        k += 1;
    }
}

fn colorable(edges: &[Edge], assign: &mut [usize], i: usize, k: usize, used: usize) -> bool {
    if i == edges.len() {
        return true;
    }
    let (a, b) = edges[i];
    // Colors beyond the first unused one are interchangeable.
    for c in 0..k.min(used + 1) {
        let clash = (0..i).any(|j| {
            assign[j] == c && {
                let (x, y) = edges[j];
                x == a || x == b || y == a || y == b
            }
        });
        if !clash {
            assign[i] = c;
            if colorable(edges, assign, i + 1, k, used.max(c + 1)) {
                return true;
            }
        }
    }
    assign[i] = usize::MAX;
    false
}

/// The identity circuit with exactly one gate per wire label.
///
/// One layer per edge color holds that color's two-qubit identities; each
/// one-qubit identity goes into the lowest layer where its qubit is idle,
/// and a single extra layer takes the qubits that are busy in every color
/// layer. Depth is `χ′(G)` or `χ′(G) + 1`, and at most `Δ(G) + 2`.
pub fn build_y(t: &Topology) -> Circuit {
    let coloring = edge_color(t);
    let mut layers: Vec<Vec<Gate>> = (0..coloring.k)
        .map(|c| {
            coloring
                .class(c)
                .into_iter()
                .map(|(a, b)| Gate::id2(a, b))
                .collect()
        })
        .collect();
    let busy: Vec<BTreeSet<usize>> = layers
        .iter()
        .map(|l| l.iter().flat_map(|g| g.operands.iter().copied()).collect())
        .collect();
    let mut extra = Vec::new();
    for q in 0..t.n {
        match busy.iter().position(|b| !b.contains(&q)) {
            Some(i) => layers[i].push(Gate::id(q)),
            None => extra.push(Gate::id(q)),
        }
    }
    if !extra.is_empty() {
        layers.push(extra);
    }
    for l in &mut layers {
        l.sort_by_key(|g| g.wire_label());
    }
    Circuit::from_steps(t.n, layers)
}
