//! Deterministic generators for the graph families used throughout the
//! crate's tests and CLI. Nodes are labeled `1..=n`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Number of G(n, p) draws attempted before giving up on connectivity.
pub const ER_RETRY_BUDGET: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    ErdosRenyi,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            "erdos-renyi" | "er" => Ok(Family::ErdosRenyi),
            _ => Err(Error::input(format!("unknown graph family {s:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::ErdosRenyi => "erdos-renyi",
        })
    }
}

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(labels(n), (1..n).map(|i| (i - 1, i))).expect("path edges are simple")
}

/// The cycle `1-2-...-n-1`. Requires `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a simple cycle needs at least 3 nodes");
    Graph::from_edges(labels(n), (1..n).map(|i| (i - 1, i)).chain([(n - 1, 0)]))
        .expect("cycle edges are simple")
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j)));
    Graph::from_edges(labels(n), edges).expect("complete edges are simple")
}

/// Connected G(n, p): redraw from one seeded stream until the sample is
/// connected, up to [`ER_RETRY_BUDGET`] attempts.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::input(format!("edge probability {p} outside (0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ER_RETRY_BUDGET {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.random_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(labels(n), edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::Infeasible(format!(
        "no connected G({n}, {p}) sample within {ER_RETRY_BUDGET} attempts"
    )))
}

/// Generate a member of `family` on `n` nodes. `p` is required for
/// Erdős–Rényi graphs; `seed` defaults to 0.
pub fn generate(family: Family, n: usize, p: Option<f64>, seed: Option<u64>) -> Result<Graph> {
    if n < 2 {
        return Err(Error::input(format!("need n >= 2, got {n}")));
    }
    match family {
        Family::Path => Ok(path(n)),
        Family::Cycle if n < 3 => Err(Error::input("a cycle needs n >= 3")),
        Family::Cycle => Ok(cycle(n)),
        Family::Complete => Ok(complete(n)),
        Family::ErdosRenyi => {
            let p = p.ok_or_else(|| Error::input("erdos-renyi requires an edge probability"))?;
            erdos_renyi(n, p, seed.unwrap_or(0))
        }
    }
}
