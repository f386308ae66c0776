//! Vertex connectivity by internally disjoint paths, plus the block-cut tree.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{input, Result};
use crate::graph::{Graph, Vertex};

/// Internally disjoint `a`-`b` paths, each listed from `a` to `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisjointPaths {
    pub count: usize,
    pub paths: Vec<Vec<Vertex>>,
}

/// Maximum set of internally vertex-disjoint `a`-`b` paths, found by
/// unit-capacity max-flow on the vertex-split graph. A direct edge `ab`
/// counts as one path.
pub fn vertex_disjoint_paths(g: &Graph, a: Vertex, b: Vertex) -> Result<DisjointPaths> {
    if a >= g.n() || b >= g.n() {
        return input(format!("vertex out of range 0..{}", g.n()));
    }
    if a == b {
        return input("endpoints must differ");
    }
    // node 2v is v_in, 2v+1 is v_out
    let mut net = Network::new(2 * g.n());
    for v in g.vertices() {
        let cap = if v == a || v == b { 0 } else { 1 };
        net.add(2 * v, 2 * v + 1, cap);
    }
    for (u, v) in g.edges() {
        if (u, v) == (a.min(b), a.max(b)) {
            continue;
        }
        net.add(2 * u + 1, 2 * v, 1);
        net.add(2 * v + 1, 2 * u, 1);
    }
    let (s, t) = (2 * a + 1, 2 * b);
    while net.augment(s, t) {}

    let mut paths = Vec::new();
    if g.has_edge(a, b) {
        paths.push(vec![a, b]);
    }
    // peel flow paths off the saturated arcs
    let mut used = vec![false; net.to.len()];
    loop {
        let mut path = vec![a];
        let mut node = s;
        while node != t {
            let Some(e) = net.out[node]
                .iter()
                .copied()
                .find(|&e| e % 2 == 0 && net.cap[e] == 0 && net.orig[e] > 0 && !used[e])
            else {
                break;
            };
            used[e] = true;
            node = net.to[e];
            if node % 2 == 0 {
                path.push(node / 2);
            }
        }
        if node != t {
            break;
        }
        paths.push(path);
    }
    paths.sort();
    Ok(DisjointPaths {
        count: paths.len(),
        paths,
    })
}

struct Network {
    to: Vec<usize>,
    cap: Vec<u32>,
    orig: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            to: Vec::new(),
            cap: Vec::new(),
            orig: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    /// Adds arc `u -> v` (even index) and its residual twin (odd index).
    fn add(&mut self, u: usize, v: usize, cap: u32) {
        for (x, y, c) in [(u, v, cap), (v, u, 0)] {
            self.out[x].push(self.to.len());
            self.to.push(y);
            self.cap.push(c);
            self.orig.push(c);
        }
    }

    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut via = vec![usize::MAX; self.out.len()];
        let mut queue = VecDeque::from([s]);
        let mut reached = vec![false; self.out.len()];
        reached[s] = true;
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for &e in &self.out[u] {
                let w = self.to[e];
                if self.cap[e] > 0 && !reached[w] {
                    reached[w] = true;
                    via[w] = e;
                    queue.push_back(w);
                }
            }
        }
        if !reached[t] {
            return false;
        }
        let mut v = t;
        while v != s {
            let e = via[v];
            self.cap[e] -= 1;
            self.cap[e ^ 1] += 1;
            v = self.to[e ^ 1];
        }
        true
    }
}

/// Vertex connectivity; complete graphs have no separating set at all and
/// are infinitely connected unless the clique convention applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Connectivity {
    Finite(usize),
    Infinite,
}

impl Connectivity {
    /// True iff the value is at least `k`.
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Connectivity::Finite(c) => c >= k,
            Connectivity::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Connectivity::Finite(c) => Some(c),
            Connectivity::Infinite => None,
        }
    }
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Connectivity::Finite(c) => write!(f, "{c}"),
            Connectivity::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Connectivity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Connectivity::Finite(c) => s.serialize_u64(*c as u64),
            Connectivity::Infinite => s.serialize_str("infinite"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectivityValue {
    pub value: Connectivity,
    /// The clique convention turned an infinite value into `n - 1`.
    pub convention_applied: bool,
}

/// Minimum over non-adjacent pairs of the number of disjoint paths. Graphs
/// without a non-adjacent pair (K_1, K_2, larger cliques) are infinitely
/// connected; with `apply_convention` a clique on `n >= 3` vertices gets
/// `n - 1`.
pub fn connectivity(g: &Graph, apply_convention: bool) -> ConnectivityValue {
    let n = g.n();
    if g.is_complete() {
        if apply_convention && n >= 3 {
            return ConnectivityValue {
                value: Connectivity::Finite(n - 1),
                convention_applied: true,
            };
        }
        return ConnectivityValue {
            value: Connectivity::Infinite,
            convention_applied: false,
        };
    }
    if !g.is_connected() {
        return ConnectivityValue {
            value: Connectivity::Finite(0),
            convention_applied: false,
        };
    }
    let mut best = usize::MAX;
    for a in g.vertices() {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            let c = vertex_disjoint_paths(g, a, b).expect("valid pair").count;
            best = best.min(c);
        }
    }
    ConnectivityValue {
        value: Connectivity::Finite(best),
        convention_applied: false,
    }
}

/// Connectivity with the clique convention, capped at `n - 1`: the largest
/// `k` for which the usual lower bounds on `k`-connected graphs apply.
pub fn effective_connectivity(g: &Graph) -> usize {
    let cap = g.n().saturating_sub(1);
    connectivity(g, true).value.finite().unwrap_or(cap).min(cap)
}

/// No separating set of fewer than `k` vertices exists.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    k == 0 || connectivity(g, false).value.at_least(k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockCutTree {
    pub articulation_points: BTreeSet<Vertex>,
    /// Blocks as sorted vertex lists, ordered lexicographically.
    pub blocks: Vec<Vec<Vertex>>,
    /// `(articulation point, block index)` for each membership.
    pub tree_edges: Vec<(Vertex, usize)>,
    /// The input was connected, so the structure is a single tree.
    pub connected: bool,
}

/// Biconnected components via the Hopcroft-Tarjan lowpoint recursion (run
/// iteratively). Bridges are 2-vertex blocks; isolated vertices are trivial
/// blocks.
pub fn block_cut_tree(g: &Graph) -> BlockCutTree {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut cut = BTreeSet::new();
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let adj: Vec<Vec<Vertex>> = g.vertices().map(|v| g.neighbors(v).collect()).collect();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if adj[root].is_empty() {
            disc[root] = time;
            time += 1;
            blocks.push(vec![root]);
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // frames: (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut i)) = stack.last_mut() {
            if *i < adj[v].len() {
                let w = adj[v][*i];
                *i += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if parent == usize::MAX {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                if parent != root {
                    cut.insert(parent);
                }
                let mut block = BTreeSet::new();
                while let Some((x, y)) = edge_stack.pop() {
                    block.insert(x);
                    block.insert(y);
                    if (x, y) == (parent, v) {
                        break;
                    }
                }
                blocks.push(block.into_iter().collect());
            }
        }
        if root_children > 1 {
            cut.insert(root);
        }
    }
    blocks.sort();
    let tree_edges = blocks
        .iter()
        .enumerate()
        .flat_map(|(i, b)| b.iter().filter(|v| cut.contains(v)).map(move |&v| (v, i)))
        .collect();
    BlockCutTree {
        articulation_points: cut,
        blocks,
        tree_edges,
        connected: g.is_connected(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::domino;
    use crate::generators::{all_graphs, complete, complete_bipartite, cycle, fig1, path, subsets_of_size};

    /// Smallest vertex set whose removal disconnects `g`, by enumeration.
    fn brute_separator(g: &Graph) -> Option<usize> {
        (0..g.n()).find(|&k| {
            subsets_of_size(g.n(), k)
                .iter()
                .any(|s| g.components_avoiding(s).len() >= 2)
        })
    }

    /// Smallest vertex set avoiding `a`, `b` that separates them.
    fn brute_pair_separator(g: &Graph, a: Vertex, b: Vertex) -> usize {
        (0..g.n())
            .find(|&k| {
                subsets_of_size(g.n(), k).iter().any(|s| {
                    !s.contains(&a)
                        && !s.contains(&b)
                        && g.components_avoiding(s).iter().all(|c| !(c.contains(&a) && c.contains(&b)))
                })
            })
            .unwrap()
    }

    #[test]
    fn cycle_has_two_paths() {
        let c5 = cycle(5);
        for a in 0..5 {
            for b in 0..5 {
                if a != b {
                    assert_eq!(vertex_disjoint_paths(&c5, a, b).unwrap().count, 2);
                }
            }
        }
    }

    #[test]
    fn k33_opposite_sides() {
        let r = vertex_disjoint_paths(&complete_bipartite(3, 3), 0, 4).unwrap();
        assert_eq!(r.count, 3);
    }

    #[test]
    fn fig1_v7_v1() {
        let g = fig1();
        let r = vertex_disjoint_paths(&g, 6, 0).unwrap();
        assert_eq!(r.count, 2);
        let inner: Vec<&Vertex> = r.paths.iter().flat_map(|p| &p[1..p.len() - 1]).collect();
        let distinct: BTreeSet<_> = inner.iter().collect();
        assert_eq!(inner.len(), distinct.len());
        for p in &r.paths {
            assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
        }
    }

    #[test]
    fn menger_matches_brute_force() {
        for g in all_graphs(6) {
            for a in g.vertices() {
                for b in a + 1..g.n() {
                    if !g.has_edge(a, b) {
                        let flow = vertex_disjoint_paths(&g, a, b).unwrap().count;
                        assert_eq!(flow, brute_pair_separator(&g, a, b), "{g:?} {a} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn clique_convention() {
        let k4 = connectivity(&complete(4), true);
        assert_eq!(k4.value, Connectivity::Finite(3));
        assert!(k4.convention_applied);
        assert_eq!(connectivity(&complete(3), false).value, Connectivity::Infinite);
        assert_eq!(connectivity(&complete(2), true).value, Connectivity::Infinite);
        assert_eq!(connectivity(&complete(1), true).value, Connectivity::Infinite);
    }

    #[test]
    fn connectivity_matches_brute_force() {
        for n in 1..=6 {
            for g in all_graphs(n) {
                let c = connectivity(&g, false).value;
                match brute_separator(&g) {
                    Some(k) => assert_eq!(c, Connectivity::Finite(k), "{g:?}"),
                    None => assert_eq!(c, Connectivity::Infinite, "{g:?}"),
                }
                if !g.is_complete() {
                    assert!(c.finite().unwrap() <= g.min_degree().unwrap());
                }
            }
        }
    }

    #[test]
    fn k_connectivity_examples() {
        let d14 = domino(14);
        assert!(is_k_connected(&d14, 2));
        assert!(!is_k_connected(&d14, 3));
        assert!(is_k_connected(&complete_bipartite(3, 3), 3));
        assert!(is_k_connected(&path(4), 0));
    }

    #[test]
    fn blocks_of_bowtie() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        let t = block_cut_tree(&g);
        assert_eq!(t.articulation_points, BTreeSet::from([0]));
        assert_eq!(t.blocks.len(), 2);
        assert_eq!(t.tree_edges.len(), 2);
    }

    #[test]
    fn blocks_of_fig1_and_path() {
        let t = block_cut_tree(&fig1());
        assert!(t.articulation_points.is_empty());
        assert_eq!(t.blocks.len(), 1);
        let p = block_cut_tree(&path(4));
        assert_eq!(p.articulation_points, BTreeSet::from([1, 2]));
        assert_eq!(p.blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn blocks_overlap_in_cut_vertices() {
        for g in all_graphs(6) {
            let t = block_cut_tree(&g);
            for (i, a) in t.blocks.iter().enumerate() {
                for b in &t.blocks[i + 1..] {
                    let shared: Vec<_> = a.iter().filter(|v| b.contains(v)).collect();
                    assert!(shared.len() <= 1);
                    assert!(shared.iter().all(|v| t.articulation_points.contains(v)));
                }
            }
            // brute articulation points
            let base = g.components().len();
            let brute: BTreeSet<Vertex> = g
                .vertices()
                .filter(|&v| g.components_avoiding(&BTreeSet::from([v])).len() > base)
                .collect();
            assert_eq!(t.articulation_points, brute, "{g:?}");
            if t.connected {
                // a tree: |edges| = |nodes| - 1
                assert_eq!(t.tree_edges.len(), t.blocks.len() + t.articulation_points.len() - 1);
            }
        }
    }
}
