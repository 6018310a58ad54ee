#![allow(dead_code)]

use linkdim::generate::{complete, cycle, erdos_renyi, path};
use linkdim::Graph;

const DENSITIES: [f64; 4] = [0.3, 0.45, 0.6, 0.8];

/// `count` seeded connected G(n, p) graphs with n cycling through `min_n..=max_n`.
pub fn er_corpus(count: u64, min_n: usize, max_n: usize) -> Vec<Graph> {
    let span = (max_n - min_n + 1) as u64;
    (0..count)
        .map(|s| {
            let n = min_n + (s % span) as usize;
            let p = DENSITIES[(s / span) as usize % DENSITIES.len()];
            erdos_renyi(n, p, 1000 + s).expect("dense enough to connect")
        })
        .collect()
}

/// Paths, cycles and complete graphs on at most `max_n` nodes.
pub fn families(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        out.push(path(n));
        out.push(complete(n));
        if n >= 3 {
            out.push(cycle(n));
        }
    }
    out
}

/// The five-cycle plus the chord between nodes 3 and 5.
pub fn c5_chord() -> Graph {
    cycle(5).with_edge(2, 4).unwrap()
}
