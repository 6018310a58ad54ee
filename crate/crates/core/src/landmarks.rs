//! Landmark sets, distance-vector coordinates and edge visibility.
//!
//! A node's coordinates are its hop distances to each landmark. Two nodes can
//! only be adjacent when no coordinate differs by more than one, so the
//! largest per-landmark difference (the *delta* of a pair) drives both the
//! resolution test and the search for edges the coordinates cannot see.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::distance::{bfs, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{normalize, Edge, Graph, Node};
use crate::par::{self, Strategy};

/// Ordered, duplicate-free, nonempty list of landmark nodes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LandmarkSet {
    nodes: Vec<Node>,
}

impl LandmarkSet {
    /// Validate indices against a graph of `order` nodes.
    pub fn new(nodes: Vec<Node>, order: usize) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::input("landmark set is empty"));
        }
        let mut seen = vec![false; order];
        for &v in &nodes {
            if v >= order {
                return Err(Error::input(format!("landmark index {v} outside 0..{order}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::input(format!("landmark index {v} listed twice")));
            }
        }
        Ok(LandmarkSet { nodes })
    }

    /// Resolve labels against a graph's node labels.
    pub fn from_labels<S: AsRef<str>>(
        node_labels: &[String],
        landmarks: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let index: HashMap<&str, Node> = node_labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let nodes = landmarks
            .into_iter()
            .map(|l| {
                let l = l.as_ref();
                index
                    .get(l)
                    .copied()
                    .ok_or_else(|| Error::input(format!("unknown landmark {l:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let set = Self::new(nodes, node_labels.len());
        set.map_err(|e| match e {
            Error::Input { msg, .. } if msg.contains("twice") => {
                Error::input("duplicate landmark label")
            }
            e => e,
        })
    }

    /// Parse a comma-separated label list such as `1,2,3`.
    pub fn parse(node_labels: &[String], list: &str) -> Result<Self> {
        Self::from_labels(
            node_labels,
            list.split(',').map(str::trim).filter(|s| !s.is_empty()),
        )
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, v: Node) -> bool {
        self.nodes.contains(&v)
    }

    /// This set followed by `extra` (ignored if already present).
    pub fn with(&self, extra: Node) -> Self {
        let mut nodes = self.nodes.clone();
        if !nodes.contains(&extra) {
            nodes.push(extra);
        }
        LandmarkSet { nodes }
    }

    pub fn labels<'a>(&self, node_labels: &'a [String]) -> Vec<&'a str> {
        self.nodes.iter().map(|&v| node_labels[v].as_str()).collect()
    }
}

/// Per-pair coordinate differences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaProfile {
    pub pair: (Node, Node),
    pub per_landmark: Vec<u32>,
    pub max: u32,
}

/// N x m matrix of node coordinates with row and column labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceVectorMatrix {
    node_labels: Vec<String>,
    landmark_labels: Vec<String>,
    entries: Vec<u32>,
}

impl DistanceVectorMatrix {
    /// Build from raw rows. Checks shape and label uniqueness only; see
    /// [`check_landmark_structure`](Self::check_landmark_structure) for the
    /// zero pattern.
    pub fn from_rows(
        node_labels: Vec<String>,
        landmark_labels: Vec<String>,
        rows: Vec<Vec<u32>>,
    ) -> Result<Self> {
        if landmark_labels.is_empty() {
            return Err(Error::input("coordinates need at least one landmark column"));
        }
        if rows.len() != node_labels.len() {
            return Err(Error::input("row count does not match node label count"));
        }
        let mut seen = HashMap::new();
        for l in &node_labels {
            if seen.insert(l.as_str(), ()).is_some() {
                return Err(Error::input(format!("duplicate node label {l:?}")));
            }
        }
        let m = landmark_labels.len();
        let mut entries = Vec::with_capacity(rows.len() * m);
        for (label, row) in node_labels.iter().zip(&rows) {
            if row.len() != m {
                return Err(Error::input(format!(
                    "row {label:?} has {} coordinates, expected {m}",
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        Ok(DistanceVectorMatrix {
            node_labels,
            landmark_labels,
            entries,
        })
    }

    pub fn order(&self) -> usize {
        self.node_labels.len()
    }

    pub fn width(&self) -> usize {
        self.landmark_labels.len()
    }

    pub fn node_labels(&self) -> &[String] {
        &self.node_labels
    }

    pub fn landmark_labels(&self) -> &[String] {
        &self.landmark_labels
    }

    pub fn row(&self, i: Node) -> &[u32] {
        let m = self.width();
        &self.entries[i * m..(i + 1) * m]
    }

    pub fn get(&self, i: Node, k: usize) -> u32 {
        self.entries[i * self.width() + k]
    }

    /// Largest coordinate difference between rows `i` and `j`.
    pub fn max_delta(&self, i: Node, j: Node) -> u32 {
        self.row(i)
            .iter()
            .zip(self.row(j))
            .map(|(a, b)| a.abs_diff(*b))
            .max()
            .unwrap_or(0)
    }

    pub fn delta(&self, i: Node, j: Node) -> Result<DeltaProfile> {
        if i == j {
            return Err(Error::input("delta needs two distinct nodes"));
        }
        if i >= self.order() || j >= self.order() {
            return Err(Error::input("delta node out of range"));
        }
        let per_landmark: Vec<u32> = self
            .row(i)
            .iter()
            .zip(self.row(j))
            .map(|(a, b)| a.abs_diff(*b))
            .collect();
        let max = per_landmark.iter().copied().max().unwrap_or(0);
        Ok(DeltaProfile {
            pair: (i, j),
            per_landmark,
            max,
        })
    }

    /// Lexicographically smallest pair of rows with identical coordinates.
    pub fn first_collision(&self) -> Option<(Node, Node)> {
        let mut groups: HashMap<&[u32], (Node, Option<Node>)> = HashMap::new();
        for i in 0..self.order() {
            groups
                .entry(self.row(i))
                .and_modify(|g| {
                    g.1.get_or_insert(i);
                })
                .or_insert((i, None));
        }
        groups
            .into_values()
            .filter_map(|(a, b)| b.map(|b| (a, b)))
            .min()
    }

    /// Row index of each landmark column's unique zero.
    ///
    /// Every landmark column must contain exactly one zero, in the row
    /// carrying the landmark's own label.
    pub fn check_landmark_structure(&self) -> Result<Vec<Node>> {
        let mut rows = Vec::with_capacity(self.width());
        for (k, name) in self.landmark_labels.iter().enumerate() {
            let zeros: Vec<Node> = (0..self.order()).filter(|&i| self.get(i, k) == 0).collect();
            match zeros.as_slice() {
                [z] if &self.node_labels[*z] == name => rows.push(*z),
                [z] => {
                    return Err(Error::input(format!(
                        "landmark column {name:?} has its zero at node {:?}",
                        self.node_labels[*z]
                    )))
                }
                _ => {
                    return Err(Error::input(format!(
                        "landmark column {name:?} must contain exactly one zero, found {}",
                        zeros.len()
                    )))
                }
            }
        }
        let mut sorted = rows.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input("landmark columns repeat a landmark"));
        }
        Ok(rows)
    }

    /// Render as CSV: `node,<A1>,...` header then one row per node.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("node");
        for l in &self.landmark_labels {
            out.push(',');
            out.push_str(l);
        }
        out.push('\n');
        for (i, label) in self.node_labels.iter().enumerate() {
            out.push_str(label);
            for v in self.row(i) {
                let _ = write!(out, ",{v}");
            }
            out.push('\n');
        }
        out
    }

    pub fn parse_csv(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::input("empty coordinate file"))?;
        let mut cols = header.split(',').map(str::trim);
        if cols.next() != Some("node") {
            return Err(Error::at_line(hline, "header must start with `node`"));
        }
        let landmark_labels: Vec<String> = cols.map(String::from).collect();
        if landmark_labels.is_empty() || landmark_labels.iter().any(String::is_empty) {
            return Err(Error::at_line(hline, "header needs nonempty landmark labels"));
        }
        let mut node_labels = Vec::new();
        let mut rows = Vec::new();
        for (lineno, line) in lines {
            let mut fields = line.split(',').map(str::trim);
            let label = fields.next().unwrap_or_default();
            if label.is_empty() {
                return Err(Error::at_line(lineno, "missing node label"));
            }
            let row = fields
                .map(|f| {
                    f.parse::<u32>()
                        .map_err(|_| Error::at_line(lineno, format!("bad coordinate {f:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != landmark_labels.len() {
                return Err(Error::at_line(
                    lineno,
                    format!("expected {} coordinates, got {}", landmark_labels.len(), row.len()),
                ));
            }
            node_labels.push(label.to_string());
            rows.push(row);
        }
        Self::from_rows(node_labels, landmark_labels, rows)
    }
}

/// Coordinates of every node with respect to `m`.
pub fn coordinates(h: &DistanceMatrix, m: &LandmarkSet) -> DistanceVectorMatrix {
    let n = h.order();
    let mut entries = Vec::with_capacity(n * m.len());
    for i in 0..n {
        entries.extend(m.nodes().iter().map(|&a| h.get(i, a)));
    }
    DistanceVectorMatrix {
        node_labels: h.labels().to_vec(),
        landmark_labels: m.labels(h.labels()).into_iter().map(String::from).collect(),
        entries,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolution {
    Resolving,
    /// Two nodes with identical coordinates (lexicographically first pair).
    Collision(Node, Node),
}

impl Resolution {
    pub fn is_resolving(self) -> bool {
        self == Resolution::Resolving
    }
}

pub fn is_resolution_set(h: &DistanceMatrix, m: &LandmarkSet) -> Resolution {
    match coordinates(h, m).first_collision() {
        None => Resolution::Resolving,
        Some((a, b)) => Resolution::Collision(a, b),
    }
}

/// Whether deleting edge `e` leaves every coordinate of every node unchanged.
/// A deletion that disconnects the graph changes the coordinates.
pub fn is_edge_invisible(g: &Graph, m: &LandmarkSet, e: Edge) -> Result<bool> {
    if !g.has_edge(e.0, e.1) {
        return Err(g.missing_edge(e.0, e.1));
    }
    let columns: Vec<Vec<u32>> = m.nodes().iter().map(|&a| bfs(g, a, None)).collect();
    Ok(edge_invisible(g, m, &columns, e))
}

fn edge_invisible<C: AsRef<[u32]>>(g: &Graph, m: &LandmarkSet, columns: &[C], e: Edge) -> bool {
    m.nodes()
        .iter()
        .zip(columns)
        .all(|(&a, col)| bfs(g, a, Some(e)) == col.as_ref())
}

/// Whether a non-adjacent pair has delta exactly one, so adding the edge
/// would leave the coordinates unchanged.
pub fn is_nonedge_ambiguous_candidate(
    h: &DistanceMatrix,
    m: &LandmarkSet,
    i: Node,
    j: Node,
) -> Result<bool> {
    if i == j || i >= h.order() || j >= h.order() {
        return Err(Error::input("need two distinct nodes of the graph"));
    }
    if h.is_edge(i, j) {
        return Err(Error::input(format!(
            "({}, {}) is an edge",
            h.labels()[i],
            h.labels()[j]
        )));
    }
    Ok(pair_delta(h, m, i, j) == 1)
}

fn pair_delta(h: &DistanceMatrix, m: &LandmarkSet, i: Node, j: Node) -> u32 {
    m.nodes()
        .iter()
        .map(|&a| h.get(i, a).abs_diff(h.get(j, a)))
        .max()
        .unwrap_or(0)
}

/// Edges the coordinates fail to pin down.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AmbiguityReport {
    /// Present edges whose removal leaves all coordinates unchanged.
    pub invisible_present_edges: Vec<Edge>,
    /// Absent pairs with delta one.
    pub ambiguous_absent_edges: Vec<Edge>,
}

impl AmbiguityReport {
    pub fn is_empty(&self) -> bool {
        self.invisible_present_edges.is_empty() && self.ambiguous_absent_edges.is_empty()
    }

    /// All pairs of the report, present edges first.
    pub fn pairs(&self) -> impl Iterator<Item = Edge> + '_ {
        self.invisible_present_edges
            .iter()
            .chain(&self.ambiguous_absent_edges)
            .copied()
    }
}

pub fn ambiguity_report(g: &Graph, h: &DistanceMatrix, m: &LandmarkSet) -> AmbiguityReport {
    ambiguity_report_with(g, h, m, Strategy::default())
}

pub fn ambiguity_report_with(
    g: &Graph,
    h: &DistanceMatrix,
    m: &LandmarkSet,
    strategy: Strategy,
) -> AmbiguityReport {
    let columns: Vec<&[u32]> = m.nodes().iter().map(|&a| h.row(a)).collect();
    let edges = g.edges();
    let invisible = par::map(&edges, strategy, |&e| edge_invisible(g, m, &columns, e));
    let invisible_present_edges = edges
        .iter()
        .zip(invisible)
        .filter_map(|(&e, inv)| inv.then_some(e))
        .collect();
    let ambiguous_absent_edges = g
        .non_edges()
        .into_iter()
        .filter(|&(i, j)| pair_delta(h, m, i, j) == 1)
        .collect();
    AmbiguityReport {
        invisible_present_edges,
        ambiguous_absent_edges,
    }
}

/// Early-exit form of `ambiguity_report(..).is_empty()` negated.
pub(crate) fn has_ambiguity(g: &Graph, h: &DistanceMatrix, m: &LandmarkSet) -> bool {
    let n = g.node_count();
    for i in 0..n {
        for j in (i + 1)..n {
            if !h.is_edge(i, j) && pair_delta(h, m, i, j) == 1 {
                return true;
            }
        }
    }
    let columns: Vec<&[u32]> = m.nodes().iter().map(|&a| h.row(a)).collect();
    g.edges().into_iter().any(|e| {
        let e = normalize(e);
        !m.contains(e.0) && !m.contains(e.1) && edge_invisible(g, m, &columns, e)
    })
}
