//! Dart-based multigraphs.
//!
//! Edge `e` owns darts `2e` (at its first endpoint) and `2e + 1` (at its
//! second endpoint); the involution pairing the two darts of an edge is
//! `d ^ 1`. Loops are allowed and contribute two darts to their vertex.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::partition::Partition;

pub type Vertex = usize;
pub type Dart = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    labels: Vec<String>,
    edges: Vec<(Vertex, Vertex)>,
    darts_at: Vec<Vec<Dart>>,
}

impl Multigraph {
    /// Builds a graph from token pairs. Vertices are numbered densely in
    /// order of first appearance.
    pub fn build<S: AsRef<str>>(edge_list: &[(S, S)]) -> Result<Self> {
        let mut index: HashMap<String, Vertex> = HashMap::new();
        let mut labels = Vec::new();
        let mut edges = Vec::with_capacity(edge_list.len());
        let mut intern = |token: &str| -> Vertex {
            *index.entry(token.to_string()).or_insert_with(|| {
                labels.push(token.to_string());
                labels.len() - 1
            })
        };
        for (u, v) in edge_list {
            let u = intern(u.as_ref());
            let v = intern(v.as_ref());
            edges.push((u, v));
        }
        Self::with_labels(labels, edges)
    }

    /// Builds a graph on vertices `0..vertex_count`, labelled by their index.
    pub fn from_edges(vertex_count: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let labels = (0..vertex_count).map(|v| v.to_string()).collect();
        Self::with_labels(labels, edges.to_vec())
    }

    fn with_labels(labels: Vec<String>, edges: Vec<(Vertex, Vertex)>) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::InvalidGraph("empty edge list".into()));
        }
        let n = labels.len();
        let mut darts_at = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {e} = ({u}, {v}) uses a vertex outside 0..{n}"
                )));
            }
            darts_at[u].push(2 * e);
            darts_at[v].push(2 * e + 1);
        }
        if let Some(v) = darts_at.iter().position(Vec::is_empty) {
            return Err(Error::InvalidGraph(format!(
                "vertex {} lies on no edge",
                labels[v]
            )));
        }
        Ok(Multigraph {
            labels,
            edges,
            darts_at,
        })
    }

    /// Parses the edge-list text format: one `u v` pair per line, `#` comment
    /// lines and blank lines ignored, repeated lines give parallel edges and
    /// `u u` is a loop.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                [u, v] => pairs.push((u.to_string(), v.to_string())),
                _ => {
                    return Err(Error::Parse(format!(
                        "line {}: expected two vertex tokens, found {}",
                        lineno + 1,
                        tokens.len()
                    )))
                }
            }
        }
        if pairs.is_empty() {
            return Err(Error::Parse("edge list contains no edges".into()));
        }
        Self::build(&pairs)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&self.labels[u]);
            out.push(' ');
            out.push_str(&self.labels[v]);
            out.push('\n');
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<Vertex> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn tail(&self, d: Dart) -> Vertex {
        let (u, v) = self.edges[d / 2];
        if d.is_multiple_of(2) {
            u
        } else {
            v
        }
    }

    /// The other dart of the same edge.
    pub fn mate(&self, d: Dart) -> Dart {
        d ^ 1
    }

    pub fn head(&self, d: Dart) -> Vertex {
        self.tail(d ^ 1)
    }

    /// Darts with tail `v`, in increasing order.
    pub fn darts_at(&self, v: Vertex) -> &[Dart] {
        &self.darts_at[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.darts_at[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.darts_at.iter().map(Vec::len).collect()
    }

    pub fn has_loop_at(&self, v: Vertex) -> bool {
        self.darts_at[v].iter().any(|&d| self.head(d) == v)
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    pub fn is_simple(&self) -> bool {
        if self.has_loops() {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        self.edges
            .iter()
            .all(|&(u, v)| seen.insert((u.min(v), u.max(v))))
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
            .count()
    }

    /// Distinct neighbors of `v` (excluding `v` itself), sorted.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.darts_at[v]
            .iter()
            .map(|&d| self.head(d))
            .filter(|&u| u != v)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Component index of every vertex (numbered by least vertex) and the
    /// number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &d in &self.darts_at[u] {
                    let w = self.head(d);
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 == 1
    }

    /// Simple cycles with at least three distinct vertices and at most
    /// `max_len` vertices, each listed once: it starts at its least vertex
    /// and its second vertex is smaller than its last.
    pub fn short_cycles(&self, max_len: usize) -> Vec<Vec<Vertex>> {
        let adj: Vec<Vec<Vertex>> = (0..self.vertex_count())
            .map(|v| self.neighbors(v))
            .collect();
        let mut out = Vec::new();
        let mut path = Vec::new();
        let mut on_path = vec![false; self.vertex_count()];
        for start in 0..self.vertex_count() {
            path.push(start);
            on_path[start] = true;
            extend_cycles(&adj, start, max_len, &mut path, &mut on_path, &mut out);
            on_path[start] = false;
            path.pop();
        }
        out
    }
}

fn extend_cycles(
    adj: &[Vec<Vertex>],
    start: Vertex,
    max_len: usize,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<Vertex>>,
) {
    let last = *path.last().unwrap();
    for &w in &adj[last] {
        if w == start && path.len() >= 3 && path[1] < last {
            out.push(path.clone());
        }
        if w > start && !on_path[w] && path.len() < max_len {
            path.push(w);
            on_path[w] = true;
            extend_cycles(adj, start, max_len, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }
}

/// Standard graph families used by the CLI, the examples and the tests.
pub mod families {
    use super::*;

    /// Two vertices joined by `n` parallel edges.
    pub fn dipole(n: usize) -> Result<Multigraph> {
        Multigraph::from_edges(2, &vec![(0, 1); n])
    }

    /// One vertex with `n` loops.
    pub fn bouquet(n: usize) -> Result<Multigraph> {
        Multigraph::from_edges(1, &vec![(0, 0); n])
    }

    /// Center `0` joined to outer vertex `i + 1` by `lambda[i]` edges.
    pub fn multistar(lambda: &Partition) -> Result<Multigraph> {
        let mut edges = Vec::new();
        for (i, &p) in lambda.parts().iter().enumerate() {
            edges.extend(std::iter::repeat_n((0, i + 1), p));
        }
        Multigraph::from_edges(lambda.len() + 1, &edges)
    }

    pub fn complete(n: usize) -> Result<Multigraph> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Multigraph::from_edges(n, &edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Multigraph> {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Multigraph::from_edges(a + b, &edges)
    }

    pub fn cycle(n: usize) -> Result<Multigraph> {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph::from_edges(n, &edges)
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Result<Multigraph> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Multigraph::from_edges(n, &edges)
    }

    /// Star with center `0` and `leaves` leaves.
    pub fn star(leaves: usize) -> Result<Multigraph> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Multigraph::from_edges(leaves + 1, &edges)
    }

    /// Path on `vertices` vertices in which edges `0, 2, 4, ...` have
    /// multiplicity `mu`.
    pub fn dipole_chain(vertices: usize, mu: usize) -> Result<Multigraph> {
        let mut edges = Vec::new();
        for i in 1..vertices {
            let m = if (i - 1) % 2 == 0 { mu } else { 1 };
            edges.extend(std::iter::repeat_n((i - 1, i), m));
        }
        Multigraph::from_edges(vertices, &edges)
    }

    /// A connected simple 3-regular graph on `n` vertices (n even, n >= 4)
    /// from the pairing model with rejection.
    pub fn random_cubic<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Multigraph> {
        if n < 4 || n % 2 == 1 {
            return Err(Error::InvalidGraph(format!(
                "cubic graphs need an even order >= 4, got {n}"
            )));
        }
        let mut points: Vec<Vertex> = (0..3 * n).map(|p| p / 3).collect();
        loop {
            points.shuffle(rng);
            let edges: Vec<(Vertex, Vertex)> = points
                .chunks(2)
                .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
                .collect();
            let g = Multigraph::from_edges(n, &edges)?;
            if g.is_simple() && g.is_connected() {
                return Ok(g);
            }
        }
    }
}
