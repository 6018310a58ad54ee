//! Graph construction from landmark coordinates.
//!
//! [`reconstruct`] joins every pair whose coordinates differ by at most one
//! in each position and then verifies the result. [`enumerate_consistent_graphs`]
//! is an exhaustive oracle listing every connected graph that reproduces a
//! coordinate matrix.

use crate::distance::{all_pairs_distances, bfs, DistanceMatrix, UNREACHABLE};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Node};
use crate::landmarks::{ambiguity_report, coordinates, DistanceVectorMatrix, LandmarkSet};

/// Largest node count accepted by [`is_unique_realization`].
pub const ORACLE_LIMIT: usize = 12;

/// Rebuild the graph behind construction-set coordinates.
///
/// Fails closed: the unit-difference graph must reproduce every landmark
/// column and must itself leave no invisible or ambiguous edge for these
/// landmarks, otherwise the coordinates do not pin down a single graph.
pub fn reconstruct(p: &DistanceVectorMatrix) -> Result<Graph> {
    let landmark_rows = p.check_landmark_structure()?;
    if let Some((a, b)) = p.first_collision() {
        return Err(Error::NotResolving(
            p.node_labels()[a].clone(),
            p.node_labels()[b].clone(),
        ));
    }
    let n = p.order();
    let edges = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .filter(|&(i, j)| p.max_delta(i, j) == 1);
    let g = Graph::from_edges(p.node_labels().to_vec(), edges)?;
    if n < 2 {
        return Err(Error::Unrealizable("fewer than two nodes".into()));
    }
    if !reproduces(&g, p, &landmark_rows) {
        return Err(Error::Unrealizable(
            "landmark distances of the rebuilt graph differ from the input".into(),
        ));
    }
    let h = all_pairs_distances(&g)?;
    let m = LandmarkSet::new(landmark_rows, n)?;
    let report = ambiguity_report(&g, &h, &m);
    if let Some((a, b)) = report.pairs().next() {
        return Err(Error::Unrealizable(format!(
            "several graphs share these coordinates; pair ({}, {}) is undetermined",
            g.label(a),
            g.label(b)
        )));
    }
    Ok(g)
}

fn reproduces(g: &Graph, p: &DistanceVectorMatrix, landmark_rows: &[Node]) -> bool {
    landmark_rows.iter().enumerate().all(|(k, &a)| {
        bfs(g, a, None)
            .iter()
            .enumerate()
            .all(|(i, &d)| d == p.get(i, k))
    })
}

/// Every connected simple graph whose landmark distances equal `p`, up to
/// `limit` graphs, in depth-first order over lexicographic candidate edges.
///
/// Only pairs whose coordinates differ by at most one anywhere can be edges.
/// Pairs touching a landmark are forced. The search prunes a branch when
/// the graph of all still-possible edges puts some node too far from a
/// landmark, or the graph of chosen edges already puts it too close.
pub fn enumerate_consistent_graphs(p: &DistanceVectorMatrix, limit: usize) -> Result<Vec<Graph>> {
    let landmark_rows = p.check_landmark_structure()?;
    let n = p.order();
    let mut state = vec![vec![Slot::Absent; n]; n];
    let mut free = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if p.max_delta(i, j) > 1 {
                continue;
            }
            let touches_landmark = landmark_rows.contains(&i) || landmark_rows.contains(&j);
            let slot = if touches_landmark { Slot::In } else { Slot::Free };
            state[i][j] = slot;
            state[j][i] = slot;
            if !touches_landmark {
                free.push((i, j));
            }
        }
    }
    let mut search = Search {
        p,
        landmark_rows,
        state,
        free,
        limit,
        found: Vec::new(),
    };
    if limit > 0 {
        search.descend(0)?;
    }
    Ok(search.found)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Absent,
    Free,
    In,
}

struct Search<'a> {
    p: &'a DistanceVectorMatrix,
    landmark_rows: Vec<Node>,
    state: Vec<Vec<Slot>>,
    free: Vec<Edge>,
    limit: usize,
    found: Vec<Graph>,
}

impl Search<'_> {
    fn descend(&mut self, depth: usize) -> Result<()> {
        if self.found.len() >= self.limit || !self.feasible() {
            return Ok(());
        }
        let Some(&(i, j)) = self.free.get(depth) else {
            return self.accept();
        };
        for slot in [Slot::In, Slot::Absent] {
            self.state[i][j] = slot;
            self.state[j][i] = slot;
            self.descend(depth + 1)?;
        }
        self.state[i][j] = Slot::Free;
        self.state[j][i] = Slot::Free;
        Ok(())
    }

    fn feasible(&self) -> bool {
        self.landmark_rows.iter().enumerate().all(|(k, &a)| {
            let loose = self.distances(a, |s| s != Slot::Absent);
            let tight = self.distances(a, |s| s == Slot::In);
            (0..self.p.order()).all(|i| {
                let target = self.p.get(i, k);
                loose[i] <= target && (tight[i] == UNREACHABLE || tight[i] >= target)
            })
        })
    }

    fn distances(&self, src: Node, usable: impl Fn(Slot) -> bool) -> Vec<u32> {
        let n = self.p.order();
        let mut dist = vec![UNREACHABLE; n];
        let mut queue = std::collections::VecDeque::from([src]);
        dist[src] = 0;
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if dist[v] == UNREACHABLE && usable(self.state[u][v]) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    fn accept(&mut self) -> Result<()> {
        let n = self.p.order();
        let edges = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.state[i][j] == Slot::In);
        let g = Graph::from_edges(self.p.node_labels().to_vec(), edges)?;
        if g.is_connected() && reproduces(&g, self.p, &self.landmark_rows) {
            self.found.push(g);
        }
        Ok(())
    }
}

/// Whether `g` is the only connected graph consistent with its coordinates
/// under `m`, decided by the exhaustive oracle.
pub fn is_unique_realization(g: &Graph, h: &DistanceMatrix, m: &LandmarkSet) -> Result<bool> {
    if g.node_count() > ORACLE_LIMIT {
        return Err(Error::ExactLimit {
            nodes: g.node_count(),
            limit: ORACLE_LIMIT,
        });
    }
    let found = enumerate_consistent_graphs(&coordinates(h, m), 2)?;
    Ok(found.len() == 1 && found[0] == *g)
}
