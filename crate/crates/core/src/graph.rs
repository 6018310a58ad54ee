//! Simple undirected graphs over opaque node labels.
//!
//! Labels are mapped to dense indices `0..N` in first-appearance order. All
//! analysis works on indices; labels only matter at the I/O boundary.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A node index into a [`Graph`].
pub type Node = usize;

/// An undirected edge between two node indices.
pub type Edge = (Node, Node);

/// Orient an unordered pair as `(min, max)`.
pub fn normalize(e: Edge) -> Edge {
    if e.0 <= e.1 {
        e
    } else {
        (e.1, e.0)
    }
}

/// Simple undirected graph. Immutable once built.
#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, Node>,
    adj: Vec<Vec<Node>>,
    // insertion order, as given; used when printing
    edges: Vec<Edge>,
}

impl Graph {
    /// Build a graph from labels and index pairs. Rejects self-loops and
    /// duplicate edges.
    pub fn from_edges<S, I>(labels: impl IntoIterator<Item = S>, edges: I) -> Result<Self>
    where
        S: Into<String>,
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Self::with_labels(labels)?;
        for (u, v) in edges {
            g.push_edge(u, v).map_err(Error::input)?;
        }
        Ok(g)
    }

    /// Build a graph from labeled pairs; node order is first appearance.
    pub fn from_labeled_edges<S, I>(pairs: I) -> Result<Self>
    where
        S: AsRef<str>,
        I: IntoIterator<Item = (S, S)>,
    {
        let mut g = Self::with_labels(Vec::<String>::new())?;
        for (a, b) in pairs {
            let u = g.intern(a.as_ref());
            let v = g.intern(b.as_ref());
            g.push_edge(u, v).map_err(Error::input)?;
        }
        Ok(g)
    }

    /// Parse the edge-list text format: one edge per line as two
    /// whitespace-separated labels, `#` comments and blank lines ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut g = Self::with_labels(Vec::<String>::new())?;
        for (lineno, line) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut toks = line.split_whitespace();
            let (a, b) = match (toks.next(), toks.next(), toks.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => {
                    return Err(Error::at_line(
                        lineno,
                        format!("expected two node labels, got {line:?}"),
                    ))
                }
            };
            let u = g.intern(a);
            let v = g.intern(b);
            g.push_edge(u, v).map_err(|m| Error::at_line(lineno, m))?;
        }
        if g.labels.is_empty() {
            return Err(Error::input("edge list contains no edges"));
        }
        Ok(g)
    }

    fn with_labels<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::input(format!("invalid node label {l:?}")));
            }
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::input(format!("duplicate node label {l:?}")));
            }
        }
        Ok(Graph {
            adj: vec![Vec::new(); labels.len()],
            labels,
            index,
            edges: Vec::new(),
        })
    }

    fn intern(&mut self, label: &str) -> Node {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), i);
        self.adj.push(Vec::new());
        i
    }

    fn push_edge(&mut self, u: Node, v: Node) -> std::result::Result<(), String> {
        let n = self.labels.len();
        if u >= n || v >= n {
            return Err(format!("edge ({u}, {v}) references a node outside 0..{n}"));
        }
        if u == v {
            return Err(format!("self-loop on node {}", self.labels[u]));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(format!(
                "duplicate edge ({}, {})",
                self.labels[u], self.labels[v]
            )),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edges.push((u, v));
                Ok(())
            }
        }
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, u: Node) -> &str {
        &self.labels[u]
    }

    pub fn index_of(&self, label: &str) -> Option<Node> {
        self.index.get(label).copied()
    }

    /// Sorted neighbor list of `u`.
    pub fn neighbors(&self, u: Node) -> &[Node] {
        &self.adj[u]
    }

    pub fn degree(&self, u: Node) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Node, v: Node) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut es: Vec<Edge> = self.edges.iter().map(|&e| normalize(e)).collect();
        es.sort_unstable();
        es
    }

    /// Edges as label pairs; independent of internal node numbering.
    pub fn labeled_edge_set(&self) -> BTreeSet<(&str, &str)> {
        self.edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (self.label(u), self.label(v));
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }

    /// Unordered non-adjacent pairs `(i, j)` with `i < j`, lexicographic.
    pub fn non_edges(&self) -> Vec<Edge> {
        let n = self.node_count();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if !self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// A copy of this graph with edge `(u, v)` removed.
    pub fn without_edge(&self, u: Node, v: Node) -> Result<Self> {
        if !self.has_edge(u, v) {
            return Err(self.missing_edge(u, v));
        }
        let e = normalize((u, v));
        Graph::from_edges(
            self.labels.clone(),
            self.edges.iter().copied().filter(|&x| normalize(x) != e),
        )
    }

    /// A copy of this graph with edge `(u, v)` added.
    pub fn with_edge(&self, u: Node, v: Node) -> Result<Self> {
        Graph::from_edges(
            self.labels.clone(),
            self.edges.iter().copied().chain(std::iter::once((u, v))),
        )
    }

    pub(crate) fn missing_edge(&self, u: Node, v: Node) -> Error {
        let name = |x: Node| self.labels.get(x).map_or_else(|| x.to_string(), Clone::clone);
        Error::input(format!("({}, {}) is not an edge", name(u), name(v)))
    }

    /// Some pair of mutually unreachable nodes, or `None` when connected.
    pub fn disconnected_pair(&self) -> Option<(Node, Node)> {
        let n = self.node_count();
        if n == 0 {
            return None;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.iter().position(|&s| !s).map(|v| (0, v))
    }

    pub fn is_connected(&self) -> bool {
        self.disconnected_pair().is_none()
    }

    /// Render in edge-list format, edges in insertion order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", self.labels[u], self.labels[v]);
        }
        out
    }
}

/// Two graphs are equal when they have the same node labels and the same
/// labeled edges, regardless of internal numbering.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.node_count() == other.node_count()
            && self.edge_count() == other.edge_count()
            && self.labels.iter().all(|l| other.index.contains_key(l))
            && self.labeled_edge_set() == other.labeled_edge_set()
    }
}

impl Eq for Graph {}
