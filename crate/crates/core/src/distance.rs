//! Hop-count distances by breadth-first search.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{normalize, Edge, Graph, Node};
use crate::par::{self, Strategy};

/// Marker for an unreachable node in raw BFS output.
pub const UNREACHABLE: u32 = u32::MAX;

/// BFS distances from `src`, skipping `removed` if given.
pub fn bfs(g: &Graph, src: Node, removed: Option<Edge>) -> Vec<u32> {
    let removed = removed.map(normalize);
    let mut dist = vec![UNREACHABLE; g.node_count()];
    let mut queue = VecDeque::with_capacity(g.node_count());
    dist[src] = 0;
    queue.push_back(src);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &v in g.neighbors(u) {
            if dist[v] != UNREACHABLE || removed == Some(normalize((u, v))) {
                continue;
            }
            dist[v] = next;
            queue.push_back(v);
        }
    }
    dist
}

/// Dense all-pairs hop-distance matrix of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    labels: Vec<String>,
    order: usize,
    entries: Vec<u32>,
    diameter: u32,
    max_degree: usize,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: Node, j: Node) -> u32 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: Node) -> &[u32] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Node labels of the source graph, in index order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_edge(&self, i: Node, j: Node) -> bool {
        self.get(i, j) == 1
    }
}

/// All-pairs distances with the default strategy.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    all_pairs_distances_with(g, Strategy::default())
}

/// One BFS per source node. Fails on a disconnected graph, naming two
/// nodes with no path between them.
pub fn all_pairs_distances_with(g: &Graph, strategy: Strategy) -> Result<DistanceMatrix> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::input("graph needs at least two nodes"));
    }
    if let Some((a, b)) = g.disconnected_pair() {
        return Err(Error::Disconnected(g.label(a).into(), g.label(b).into()));
    }
    let rows = par::map_range(n, strategy, |s| bfs(g, s, None));
    let entries: Vec<u32> = rows.into_iter().flatten().collect();
    let diameter = entries.iter().copied().max().unwrap_or(0);
    Ok(DistanceMatrix {
        labels: g.labels().to_vec(),
        order: n,
        entries,
        diameter,
        max_degree: g.max_degree(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::parse("1 2\n2 3\n3 4\n4 5\n5 1\n").unwrap()
    }

    #[test]
    fn five_cycle() {
        let h = all_pairs_distances(&c5()).unwrap();
        assert_eq!(h.get(0, 2), 2);
        assert_eq!(h.diameter(), 2);
        assert_eq!(h.max_degree(), 2);
    }

    #[test]
    fn chord_keeps_other_distances() {
        let g = c5().with_edge(2, 4).unwrap();
        let h = all_pairs_distances(&g).unwrap();
        assert_eq!(h.get(2, 4), 1);
        assert_eq!(h.get(0, 2), 2);
    }

    #[test]
    fn path_distances() {
        let g = Graph::parse("1 2\n2 3\n3 4\n4 5\n").unwrap();
        let h = all_pairs_distances(&g).unwrap();
        assert_eq!(h.get(0, 4), 4);
        assert_eq!(h.diameter(), 4);
    }

    #[test]
    fn disconnected_names_nodes() {
        let g = Graph::parse("a b\nc d\n").unwrap();
        assert_eq!(
            all_pairs_distances(&g).unwrap_err(),
            Error::Disconnected("a".into(), "c".into())
        );
    }

    #[test]
    fn bfs_with_removed_edge() {
        let g = c5();
        // removing (3,4) pushes node 4 to distance 3 from node 2
        let d = bfs(&g, 1, Some((3, 2)));
        assert_eq!(d[3], 3);
        let p = Graph::parse("a b\nb c\n").unwrap();
        assert_eq!(bfs(&p, 0, Some((1, 2)))[2], UNREACHABLE);
    }

    #[test]
    fn strategies_agree() {
        let g = crate::generate::generate(crate::Family::ErdosRenyi, 30, Some(0.2), Some(3)).unwrap();
        assert_eq!(
            all_pairs_distances_with(&g, Strategy::Sequential).unwrap(),
            all_pairs_distances_with(&g, Strategy::Parallel).unwrap()
        );
    }
}
