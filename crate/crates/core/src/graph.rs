//! Undirected simple graphs in DIMACS clique format, plus the exact
//! brute-force oracle used by the verification harness.
//!
//! Vertices are 1-indexed everywhere, matching DIMACS.

use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt::Write as _;

pub const DEFAULT_ORACLE_CAP: usize = 20;

/// Undirected simple graph: symmetric adjacency, zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    edges: BTreeSet<(u32, u32)>,
}

/// Sorted, duplicate-free set of 1-indexed vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct VertexSet(Vec<u32>);

impl VertexSet {
    pub fn new(mut members: Vec<u32>, n: usize) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        for &v in &members {
            if v == 0 || v as usize > n {
                return Err(Error::Validation(format!(
                    "vertex {v} out of range 1..={n}"
                )));
            }
        }
        Ok(VertexSet(members))
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn members(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl Graph {
    pub fn new(n: usize, edge_list: &[(u32, u32)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Validation("vertex count must be positive".into()));
        }
        let mut adj = vec![false; n * n];
        let mut edges = BTreeSet::new();
        for &(u, v) in edge_list {
            if u == 0 || v == 0 || u as usize > n || v as usize > n {
                return Err(Error::Validation(format!(
                    "edge ({u},{v}) out of range 1..={n}"
                )));
            }
            if u == v {
                return Err(Error::Validation(format!("self-loop at vertex {u}")));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            edges.insert((a, b));
            let (i, j) = (a as usize - 1, b as usize - 1);
            adj[i * n + j] = true;
            adj[j * n + i] = true;
        }
        Ok(Graph { n, adj, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    /// Adjacency test on 1-indexed vertices.
    pub fn adjacent(&self, u: u32, v: u32) -> bool {
        self.adj[(u as usize - 1) * self.n + (v as usize - 1)]
    }

    pub fn degree(&self, v: u32) -> usize {
        let i = v as usize - 1;
        (0..self.n).filter(|&j| self.adj[i * self.n + j]).count()
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.n as u32).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Dense adjacency matrix as 0/1 reals, row-major, zero diagonal.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        self.adj.iter().map(|&b| if b { 1.0 } else { 0.0 }).collect()
    }

    /// Connectivity is a diagnostic, not a requirement: several structural
    /// lemmas checked by the harness assume it.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for j in 0..self.n {
                if self.adj[i * self.n + j] && !seen[j] {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        count == self.n
    }

    /// Lexicographically least edge, if any.
    pub fn least_edge(&self) -> Option<(u32, u32)> {
        self.edges.iter().next().copied()
    }
}

/// Parses the DIMACS ASCII clique format: one `p edge n m` problem line,
/// `e u v` edge lines, `c` comments. Duplicate and reversed edges collapse;
/// self-loops are rejected.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("p") => {
                if n.is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "duplicate problem line".into(),
                    });
                }
                let fmt = fields.next().unwrap_or("");
                if fmt != "edge" && fmt != "col" {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("unsupported problem format `{fmt}`"),
                    });
                }
                let nv: usize = fields
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or(Error::Parse {
                        line: line_no,
                        msg: "missing or malformed vertex count".into(),
                    })?;
                let _m: usize = fields
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or(Error::Parse {
                        line: line_no,
                        msg: "missing or malformed edge count".into(),
                    })?;
                if nv == 0 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "vertex count must be positive".into(),
                    });
                }
                n = Some(nv);
            }
            Some("e") => {
                let nv = n.ok_or(Error::Parse {
                    line: line_no,
                    msg: "edge line before problem line".into(),
                })?;
                let u: u32 = fields
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or(Error::Parse {
                        line: line_no,
                        msg: "malformed edge endpoint".into(),
                    })?;
                let v: u32 = fields
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or(Error::Parse {
                        line: line_no,
                        msg: "malformed edge endpoint".into(),
                    })?;
                if u == 0 || v == 0 || u as usize > nv || v as usize > nv {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("vertex index out of range in edge ({u},{v})"),
                    });
                }
                if u == v {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("self-loop at vertex {u}"),
                    });
                }
                edges.push((u, v));
            }
            Some(other) => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("unrecognized line kind `{other}`"),
                })
            }
            None => {}
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        msg: "missing problem line".into(),
    })?;
    Graph::new(n, &edges)
}

/// Emits `c`, `p edge n m`, then `e u v` with u < v, newline-terminated.
pub fn serialize_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "c undirected simple graph");
    let _ = writeln!(out, "p edge {} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

/// True iff every pair in `s` is an edge. Empty and singleton sets are cliques.
pub fn is_clique(g: &Graph, s: &VertexSet) -> bool {
    let m = s.members();
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            if !g.adjacent(m[i], m[j]) {
                return false;
            }
        }
    }
    true
}

/// Maximal clique of the subgraph induced by `s`, grown greedily by ascending
/// vertex index.
pub fn greedy_clique_within(g: &Graph, s: &VertexSet) -> VertexSet {
    let mut out: Vec<u32> = Vec::new();
    for &v in s.members() {
        if out.iter().all(|&u| g.adjacent(u, v)) {
            out.push(v);
        }
    }
    VertexSet(out)
}

/// Exact clique number and the lexicographically least maximum clique, by
/// branch-and-bound over maximal cliques. Refuses above `cap` so derived test
/// values stay cheap and certain.
pub fn max_clique_bruteforce(g: &Graph, cap: usize) -> Result<(usize, VertexSet)> {
    let n = g.n();
    if n > cap || n > 64 {
        return Err(Error::OracleCap { n, cap: cap.min(64) });
    }
    // Bitset Bron-Kerbosch. Pruning keeps every candidate that could still tie
    // the best size, so the lexicographic comparison among maximum cliques is
    // exact.
    let neighbors: Vec<u64> = (0..n)
        .map(|i| {
            let mut mask = 0u64;
            for j in 0..n {
                if g.adj[i * n + j] {
                    mask |= 1 << j;
                }
            }
            mask
        })
        .collect();
    struct Ctx<'a> {
        neighbors: &'a [u64],
        best: Vec<u32>,
    }
    fn expand(ctx: &mut Ctx, r: &mut Vec<u32>, p: u64, x: u64) {
        if p == 0 && x == 0 {
            // r is built in ascending vertex order, so the slice comparison
            // below is the lexicographic order on sorted member lists.
            if r.len() > ctx.best.len() || (r.len() == ctx.best.len() && r[..] < ctx.best[..]) {
                ctx.best = r.clone();
            }
            return;
        }
        if r.len() + (p.count_ones() as usize) < ctx.best.len() {
            return;
        }
        let mut p_work = p;
        let mut x_work = x;
        while p_work != 0 {
            let v = p_work.trailing_zeros() as usize;
            let bit = 1u64 << v;
            r.push(v as u32 + 1);
            expand(
                ctx,
                r,
                p_work & ctx.neighbors[v],
                x_work & ctx.neighbors[v],
            );
            r.pop();
            p_work &= !bit;
            x_work |= bit;
        }
    }
    let mut ctx = Ctx {
        neighbors: &neighbors,
        best: vec![1],
    };
    let all: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    expand(&mut ctx, &mut Vec::new(), all, 0);
    let witness = VertexSet(ctx.best);
    Ok((witness.len(), witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn parse_triangle() {
        let g = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.adjacent(1, 2) && g.adjacent(2, 3) && g.adjacent(1, 3));
    }

    #[test]
    fn parse_edgeless() {
        let g = parse_dimacs("p edge 2 0\n").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_rejects_self_loop() {
        let err = parse_dimacs("p edge 3 1\ne 1 1\n").unwrap_err();
        match err {
            Error::Parse { line, msg } => {
                assert_eq!(line, 2);
                assert!(msg.contains("self-loop"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_out_of_range() {
        assert!(matches!(
            parse_dimacs("p edge 3 1\ne 1 4\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn parse_dedupes_reversed_edges() {
        let g = parse_dimacs("p edge 3 3\ne 1 2\ne 2 1\ne 1 2\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn roundtrip_preserves_edge_set() {
        let g = corpus::petersen();
        let g2 = parse_dimacs(&serialize_dimacs(&g)).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn oracle_complete_graph() {
        let g = corpus::complete(4);
        let (size, w) = max_clique_bruteforce(&g, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(size, 4);
        assert_eq!(w.members(), &[1, 2, 3, 4]);
    }

    #[test]
    fn oracle_c5() {
        let g = corpus::cycle(5);
        let (size, w) = max_clique_bruteforce(&g, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(size, 2);
        assert_eq!(w.members(), &[1, 2]);
    }

    #[test]
    fn oracle_petersen_triangle_free() {
        let g = corpus::petersen();
        let (size, w) = max_clique_bruteforce(&g, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(size, 2);
        assert_eq!(w.members(), &[1, 2]);
    }

    #[test]
    fn oracle_refuses_above_cap() {
        let g = corpus::complete(6);
        assert!(matches!(
            max_clique_bruteforce(&g, 5),
            Err(Error::OracleCap { n: 6, cap: 5 })
        ));
    }

    #[test]
    fn clique_predicates() {
        let k3 = corpus::complete(3);
        let c5 = corpus::cycle(5);
        assert!(is_clique(&k3, &VertexSet::new(vec![1, 2, 3], 3).unwrap()));
        assert!(!is_clique(&c5, &VertexSet::new(vec![1, 2, 3], 5).unwrap()));
        assert!(is_clique(&c5, &VertexSet::new(vec![4], 5).unwrap()));
        assert!(is_clique(&c5, &VertexSet::empty()));
    }

    #[test]
    fn greedy_growth() {
        let k4 = corpus::complete(4);
        let c5 = corpus::cycle(5);
        let all4 = VertexSet::new(vec![1, 2, 3, 4], 4).unwrap();
        assert_eq!(greedy_clique_within(&k4, &all4).members(), &[1, 2, 3, 4]);
        let s = VertexSet::new(vec![1, 2, 3], 5).unwrap();
        assert_eq!(greedy_clique_within(&c5, &s).members(), &[1, 2]);
        assert!(greedy_clique_within(&c5, &VertexSet::empty()).is_empty());
    }

    #[test]
    fn oracle_witness_is_clique_and_optimal_small() {
        // Exhaustive optimality audit on random graphs with n <= 8: the
        // witness is a clique and no subset one larger is.
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.random_range(2..=8usize);
            let g = corpus::random_gnp(n, 0.5, &mut rng);
            let (size, w) = max_clique_bruteforce(&g, DEFAULT_ORACLE_CAP).unwrap();
            assert!(is_clique(&g, &w));
            assert_eq!(w.len(), size);
            // no clique of size+1 anywhere
            let verts: Vec<u32> = (1..=n as u32).collect();
            let mut found_bigger = false;
            let target = size + 1;
            fn search(
                g: &Graph,
                verts: &[u32],
                start: usize,
                cur: &mut Vec<u32>,
                target: usize,
                found: &mut bool,
            ) {
                if *found || cur.len() == target {
                    *found = *found || cur.len() == target;
                    return;
                }
                for idx in start..verts.len() {
                    let v = verts[idx];
                    if cur.iter().all(|&u| g.adjacent(u, v)) {
                        cur.push(v);
                        search(g, verts, idx + 1, cur, target, found);
                        cur.pop();
                    }
                }
            }
            search(&g, &verts, 0, &mut Vec::new(), target, &mut found_bigger);
            assert!(!found_bigger, "oracle missed a larger clique");
        }
    }

    #[test]
    fn connectivity_flag() {
        assert!(corpus::path(4).is_connected());
        let g = Graph::new(4, &[(1, 2)]).unwrap();
        assert!(!g.is_connected());
    }
}
