//! Metric, link and strong metric dimension.
//!
//! Exact mode enumerates landmark subsets by increasing size, lexicographic
//! within a size, and reports the first passing subset. Each size is scanned
//! in ordered batches so parallel runs return the same witness as sequential
//! ones. Greedy mode gives a verified upper bound for larger graphs.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, Node};
use crate::landmarks::{
    ambiguity_report_with, has_ambiguity, is_resolution_set, AmbiguityReport, LandmarkSet,
    Resolution,
};
use crate::par::{self, Strategy};

pub const DEFAULT_EXACT_LIMIT: usize = 16;
pub const DEFAULT_STRONG_EXACT_LIMIT: usize = 14;

// candidate subsets materialized per ordered scan step
const BATCH: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DimensionKind {
    Metric,
    Link,
    Strong,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exact,
    GreedyUpperBound,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exact => "exact",
            Method::GreedyUpperBound => "greedy-upper-bound",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionResult {
    pub kind: DimensionKind,
    pub value: usize,
    pub witness: LandmarkSet,
    pub method: Method,
}

/// Solver configuration.
#[derive(Debug, Clone, Copy, Default)]
pub struct SearchOptions {
    /// Largest node count for exhaustive search; `None` uses the per-kind default.
    pub exact_limit: Option<usize>,
    /// Use the greedy heuristic instead of exhaustive search.
    pub greedy: bool,
    pub strategy: Strategy,
}

impl SearchOptions {
    pub fn exact() -> Self {
        Self::default()
    }

    pub fn greedy() -> Self {
        SearchOptions {
            greedy: true,
            ..Self::default()
        }
    }

    pub fn with_strategy(self, strategy: Strategy) -> Self {
        SearchOptions { strategy, ..self }
    }

    fn check_limit(&self, n: usize, default: usize) -> Result<()> {
        let limit = self.exact_limit.unwrap_or(default).min(64);
        if n > limit {
            return Err(Error::ExactLimit { nodes: n, limit });
        }
        Ok(())
    }
}

/// Outcome of the construction-set test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionCheck {
    pub resolution: Resolution,
    pub report: AmbiguityReport,
}

impl ConstructionCheck {
    pub fn is_construction_set(&self) -> bool {
        self.resolution.is_resolving() && self.report.is_empty()
    }
}

/// A landmark set is a construction set when it resolves every node and
/// leaves no invisible edge or ambiguous non-edge.
pub fn is_construction_set(g: &Graph, h: &DistanceMatrix, m: &LandmarkSet) -> ConstructionCheck {
    ConstructionCheck {
        resolution: is_resolution_set(h, m),
        report: ambiguity_report_with(g, h, m, Strategy::default()),
    }
}

/// `w` strongly resolves `u` and `v` when one of them lies on a shortest
/// path from the other to `w`.
pub fn strongly_resolves(h: &DistanceMatrix, w: Node, u: Node, v: Node) -> bool {
    h.get(v, w) == h.get(v, u) + h.get(u, w) || h.get(u, w) == h.get(u, v) + h.get(v, w)
}

pub fn is_strong_resolving_set(h: &DistanceMatrix, m: &LandmarkSet) -> bool {
    let n = h.order();
    (0..n).all(|u| {
        ((u + 1)..n).all(|v| m.nodes().iter().any(|&w| strongly_resolves(h, w, u, v)))
    })
}

/// Distinct coordinate rows, tested on packed integer keys.
fn resolves(h: &DistanceMatrix, nodes: &[Node]) -> bool {
    let base = u128::from(h.diameter()) + 1;
    let fits = (base as f64).log2() * nodes.len() as f64 <= 127.0;
    if !fits {
        let m = LandmarkSet::new(nodes.to_vec(), h.order()).expect("valid subset");
        return is_resolution_set(h, &m).is_resolving();
    }
    let mut keys: Vec<u128> = (0..h.order())
        .map(|i| {
            nodes
                .iter()
                .fold(0u128, |acc, &a| acc * base + u128::from(h.get(i, a)))
        })
        .collect();
    keys.sort_unstable();
    keys.windows(2).all(|w| w[0] != w[1])
}

/// First subset (by size, then lexicographic) accepted by `pred`.
fn first_subset<F>(n: usize, strategy: Strategy, pred: F) -> Vec<Node>
where
    F: Fn(&[Node]) -> bool + Sync + Send,
{
    for size in 1..=n {
        let mut combos = (0..n).combinations(size);
        loop {
            let batch: Vec<Vec<Node>> = combos.by_ref().take(BATCH).collect();
            if batch.is_empty() {
                break;
            }
            if let Some(i) = par::position_first(&batch, strategy, |s| pred(s)) {
                return batch.into_iter().nth(i).expect("index from batch");
            }
        }
    }
    unreachable!("the full node set always passes")
}

fn result(kind: DimensionKind, witness: LandmarkSet, method: Method) -> DimensionResult {
    DimensionResult {
        kind,
        value: witness.len(),
        witness,
        method,
    }
}

fn subset(nodes: Vec<Node>, n: usize) -> LandmarkSet {
    LandmarkSet::new(nodes, n).expect("solver subsets are valid")
}

pub fn metric_dimension(h: &DistanceMatrix, opts: SearchOptions) -> Result<DimensionResult> {
    let n = h.order();
    if opts.greedy {
        let w = greedy_resolution_set(h, opts.strategy);
        return Ok(result(DimensionKind::Metric, w, Method::GreedyUpperBound));
    }
    opts.check_limit(n, DEFAULT_EXACT_LIMIT)?;
    let w = first_subset(n, opts.strategy, |s| resolves(h, s));
    Ok(result(DimensionKind::Metric, subset(w, n), Method::Exact))
}

pub fn link_dimension(g: &Graph, h: &DistanceMatrix, opts: SearchOptions) -> Result<DimensionResult> {
    let n = h.order();
    if opts.greedy {
        let r = greedy_resolution_set(h, opts.strategy);
        let w = upgrade_to_construction_set(g, h, &r)?;
        return Ok(result(DimensionKind::Link, w, Method::GreedyUpperBound));
    }
    opts.check_limit(n, DEFAULT_EXACT_LIMIT)?;
    let w = first_subset(n, opts.strategy, |s| {
        resolves(h, s) && !has_ambiguity(g, h, &subset(s.to_vec(), n))
    });
    Ok(result(DimensionKind::Link, subset(w, n), Method::Exact))
}

pub fn strong_metric_dimension(h: &DistanceMatrix, opts: SearchOptions) -> Result<DimensionResult> {
    let n = h.order();
    if opts.greedy {
        let w = greedy_strong_set(h);
        return Ok(result(DimensionKind::Strong, w, Method::GreedyUpperBound));
    }
    opts.check_limit(n, DEFAULT_STRONG_EXACT_LIMIT)?;
    // bit w of a pair's mask is set when w strongly resolves the pair
    let masks: Vec<u64> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .map(|(u, v)| {
            (0..n)
                .filter(|&w| strongly_resolves(h, w, u, v))
                .fold(0u64, |acc, w| acc | (1 << w))
        })
        .collect();
    let w = first_subset(n, opts.strategy, |s| {
        let set = s.iter().fold(0u64, |acc, &w| acc | (1 << w));
        masks.iter().all(|m| m & set != 0)
    });
    Ok(result(DimensionKind::Strong, subset(w, n), Method::Exact))
}

/// Add, one at a time, the node that leaves the fewest pairs with identical
/// coordinates. Ties go to the smallest index.
pub fn greedy_resolution_set(h: &DistanceMatrix, strategy: Strategy) -> LandmarkSet {
    let n = h.order();
    let mut class = vec![0u32; n];
    let mut chosen: Vec<Node> = Vec::new();
    let unresolved = |class: &[u32], c: Option<Node>| -> usize {
        let mut counts: HashMap<(u32, u32), usize> = HashMap::new();
        for i in 0..n {
            let d = c.map_or(0, |c| h.get(i, c));
            *counts.entry((class[i], d)).or_default() += 1;
        }
        counts.values().map(|&k| k * (k - 1) / 2).sum()
    };
    while unresolved(&class, None) > 0 {
        let candidates: Vec<Node> = (0..n).filter(|v| !chosen.contains(v)).collect();
        let scores = par::map(&candidates, strategy, |&c| unresolved(&class, Some(c)));
        let (best, _) = candidates
            .iter()
            .zip(&scores)
            .min_by_key(|(&c, &s)| (s, c))
            .expect("an unresolved pair implies a candidate");
        let best = *best;
        chosen.push(best);
        let mut ids: HashMap<(u32, u32), u32> = HashMap::new();
        for i in 0..n {
            let next = ids.len() as u32;
            class[i] = *ids.entry((class[i], h.get(i, best))).or_insert(next);
        }
    }
    if chosen.is_empty() {
        chosen.push(0);
    }
    subset(chosen, n)
}

fn greedy_strong_set(h: &DistanceMatrix) -> LandmarkSet {
    let n = h.order();
    let mut uncovered: Vec<(Node, Node)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let mut chosen = Vec::new();
    while !uncovered.is_empty() {
        let best = (0..n)
            .filter(|w| !chosen.contains(w))
            .max_by_key(|&w| {
                let covered = uncovered
                    .iter()
                    .filter(|&&(u, v)| strongly_resolves(h, w, u, v))
                    .count();
                (covered, std::cmp::Reverse(w))
            })
            .expect("uncovered pairs imply candidates");
        chosen.push(best);
        uncovered.retain(|&(u, v)| !strongly_resolves(h, best, u, v));
    }
    subset(chosen, n)
}

/// Extend a resolution set until no invisible or ambiguous edge remains.
///
/// Each round adds the non-landmark node incident to the most reported
/// pairs, smallest index on ties.
pub fn upgrade_to_construction_set(
    g: &Graph,
    h: &DistanceMatrix,
    r: &LandmarkSet,
) -> Result<LandmarkSet> {
    if let Resolution::Collision(a, b) = is_resolution_set(h, r) {
        return Err(Error::NotResolving(g.label(a).into(), g.label(b).into()));
    }
    let n = g.node_count();
    let mut set = r.clone();
    loop {
        let report = ambiguity_report_with(g, h, &set, Strategy::default());
        if report.is_empty() {
            return Ok(set);
        }
        let mut incidence = vec![0usize; n];
        for (i, j) in report.pairs() {
            incidence[i] += 1;
            incidence[j] += 1;
        }
        let next = (0..n)
            .filter(|&v| !set.contains(v))
            .max_by_key(|&v| (incidence[v], std::cmp::Reverse(v)))
            .expect("a nonempty report leaves a non-landmark node");
        set = set.with(next);
    }
}
