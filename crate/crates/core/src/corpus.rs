//! Named graph families and random generators used by the test and property
//! suites.

use crate::graph::Graph;
use rand::Rng;
use std::collections::BTreeSet;

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n as u32 {
        for v in u + 1..=n as u32 {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).expect("complete graph")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n as u32).map(|u| (u, u + 1)).collect();
    Graph::new(n, &edges).expect("path graph")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<_> = (1..n as u32).map(|u| (u, u + 1)).collect();
    edges.push((1, n as u32));
    Graph::new(n, &edges).expect("cycle graph")
}

pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (2..=leaves as u32 + 1).map(|v| (1, v)).collect();
    Graph::new(leaves + 1, &edges).expect("star graph")
}

pub fn edgeless(n: usize) -> Graph {
    Graph::new(n, &[]).expect("edgeless graph")
}

/// Wheel on `n` vertices: hub 1 joined to every rim vertex, rim 2..n a cycle.
pub fn wheel(n: usize) -> Graph {
    assert!(n >= 4);
    let mut edges: Vec<_> = (2..=n as u32).map(|v| (1, v)).collect();
    for i in 0..(n - 1) {
        let a = 2 + i as u32;
        let b = 2 + ((i + 1) % (n - 1)) as u32;
        if a != b {
            edges.push((a.min(b), a.max(b)));
        }
    }
    Graph::new(n, &edges).expect("wheel graph")
}

/// The 3-regular triangle-free graph on 10 vertices: outer 5-cycle 1..5,
/// spokes to 6..10, inner pentagram.
pub fn petersen() -> Graph {
    let outer = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)];
    let spokes = [(1, 6), (2, 7), (3, 8), (4, 9), (5, 10)];
    let inner = [(6, 8), (8, 10), (7, 10), (7, 9), (6, 9)];
    let edges: Vec<_> = outer.iter().chain(&spokes).chain(&inner).copied().collect();
    Graph::new(10, &edges).expect("petersen graph")
}

/// Complete multipartite graph with the given part sizes.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(p).take(size));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u as u32 + 1, v as u32 + 1));
            }
        }
    }
    Graph::new(n, &edges).expect("complete multipartite graph")
}

/// Erdos-Renyi G(n, p).
pub fn random_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n as u32 {
        for v in u + 1..=n as u32 {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("gnp graph")
}

/// Rejection-samples a connected G(n, p).
pub fn random_connected_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    loop {
        let g = random_gnp(n, p, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// At least `count` distinct connected graphs with 2..=`max_n` vertices.
/// Distinctness is on labeled edge sets; edge densities are mixed so sparse
/// and dense shapes both appear.
pub fn connected_corpus<R: Rng>(max_n: usize, count: usize, rng: &mut R) -> Vec<Graph> {
    let mut seen: BTreeSet<(usize, Vec<(u32, u32)>)> = BTreeSet::new();
    let mut out = Vec::new();
    // All connected graphs this small are cheap to cover by sampling.
    while out.len() < count {
        let n = rng.random_range(2..=max_n);
        let p = rng.random_range(0.25..0.95);
        let g = random_connected_gnp(n, p, rng);
        let key = (g.n(), g.edges().collect::<Vec<_>>());
        if seen.insert(key) {
            out.push(g);
        }
    }
    out
}

/// The curated suite named by the acceptance criteria.
pub fn curated_suite() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 2..=8 {
        out.push((format!("K{n}"), complete(n)));
    }
    for n in 3..=6 {
        out.push((format!("P{n}"), path(n)));
    }
    for n in 4..=7 {
        out.push((format!("C{n}"), cycle(n)));
    }
    out.push(("Petersen".into(), petersen()));
    out.push(("W6".into(), wheel(6)));
    out.push(("K222".into(), complete_multipartite(&[2, 2, 2])));
    out
}
