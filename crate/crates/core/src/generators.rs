//! Graph families used throughout the crate and its tests.

use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{input, Result};
use crate::graph::{EdgeKind, Graph, MultiGraph};
use crate::iso::{canonical_form, Certificate};

pub use crate::analysis::domino;

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
}

/// The cycle `C_n` for `n >= 3`; smaller `n` degrade to a path.
pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(n - 1, 0).expect("closing edge is valid");
    }
    g
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).expect("clique edges are valid");
        }
    }
    g
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v).expect("bipartite edges are valid");
        }
    }
    g
}

pub fn star(leaves: usize) -> Graph {
    complete_bipartite(1, leaves)
}

/// The k-bond: two vertices joined by `k` parallel edges.
pub fn bond(k: usize) -> MultiGraph {
    let mut m = MultiGraph::new(2);
    for _ in 0..k {
        m.add_edge(0, 1, EdgeKind::Original).expect("bond edges are valid");
    }
    m
}

/// The nine-vertex worked example: two 4-cycles and a triangle hanging off a
/// central square, vertices labelled `v1..v9` (ids 0..8).
pub fn fig1() -> Graph {
    let edges = [
        (1, 3),
        (3, 5),
        (5, 8),
        (8, 9),
        (9, 6),
        (6, 7),
        (7, 5),
        (6, 4),
        (4, 3),
        (4, 2),
        (2, 1),
    ];
    Graph::from_edges(9, edges.iter().map(|&(a, b)| (a - 1, b - 1)))
        .expect("fixed edge list")
        .with_labels((1..=9).map(|i| format!("v{i}")))
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// A random connected graph: a random spanning tree plus `G(n, p)` extra edges.
pub fn random_connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = random_gnp(n, p, rng);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let _ = g.add_edge(order[i], order[j]);
    }
    g
}

/// A random 2-connected graph on `n >= 3` vertices built from a cycle by
/// adding ears (paths between two distinct existing vertices) and chords.
pub fn random_two_connected<R: Rng + ?Sized>(n: usize, extra_chords: usize, rng: &mut R) -> Result<Graph> {
    if n < 3 {
        return input("a 2-connected simple graph needs at least 3 vertices");
    }
    let start = rng.gen_range(3..=n);
    let mut g = cycle(start);
    while g.n() < n {
        let remaining = n - g.n();
        let len = rng.gen_range(1..=remaining.min(3));
        let a = rng.gen_range(0..g.n());
        let mut b = rng.gen_range(0..g.n() - 1);
        if b >= a {
            b += 1;
        }
        let mut prev = a;
        for _ in 0..len {
            let v = g.add_vertex();
            g.add_edge(prev, v)?;
            prev = v;
        }
        g.add_edge(prev, b)?;
    }
    for _ in 0..extra_chords {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            let _ = g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// All graphs on `n` vertices up to isomorphism, in canonical form, sorted by
/// certificate. Built by vertex augmentation with canonical deduplication.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut layer: Vec<Certificate> = vec![canonical_form(&Graph::new(0)).expect("empty graph")];
    for size in 1..=n {
        let mut next: HashSet<Certificate> = HashSet::new();
        for cert in &layer {
            let base = cert.to_graph();
            for mask in 0u64..(1u64 << (size - 1)) {
                let mut g = base.clone();
                let v = g.add_vertex();
                for u in 0..size - 1 {
                    if mask & (1 << u) != 0 {
                        g.add_edge(u, v).expect("in range");
                    }
                }
                next.insert(canonical_form(&g).expect("small graph"));
            }
        }
        layer = next.into_iter().collect();
        layer.sort();
    }
    layer.iter().map(Certificate::to_graph).collect()
}

pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(|g| g.is_connected()).collect()
}

/// Vertex sets of size `k` drawn from `0..n`, in lexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<BTreeSet<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<BTreeSet<usize>>) {
        if cur.len() == k {
            out.push(cur.iter().copied().collect());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}
