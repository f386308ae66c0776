//! Simple undirected graphs, digraphs and edge-tagged multigraphs on dense
//! vertex ids `0..n`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};

pub type Vertex = usize;
pub type Edge = (Vertex, Vertex);

fn norm(u: Vertex, v: Vertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A finite simple undirected graph. Vertices are `0..n`; labels are cosmetic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    adj: Vec<BTreeSet<Vertex>>,
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<BTreeMap<Vertex, String>>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = crate::Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        let mut g = Graph::from_edges(r.n, r.edges.iter().map(|e| (e[0], e[1])))?;
        if let Some(labels) = r.labels {
            for (v, name) in labels {
                g.set_label(v, name)?;
            }
        }
        Ok(g)
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        let labels = g.labels.as_ref().map(|ls| {
            ls.iter()
                .enumerate()
                .filter(|(_, s)| !s.is_empty())
                .map(|(i, s)| (i, s.clone()))
                .collect()
        });
        GraphRepr {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            labels,
        }
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Duplicate pairs are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, a)| a.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbor_set(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].contains(&v)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        let n = self.n();
        if u >= n || v >= n {
            return input(format!("edge {u}-{v} has an endpoint outside 0..{n}"));
        }
        if u == v {
            return input(format!("self-loop on vertex {u}"));
        }
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(fresh)
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(BTreeSet::new());
        if let Some(ls) = &mut self.labels {
            ls.push(String::new());
        }
        self.adj.len() - 1
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels
            .as_ref()
            .and_then(|ls| ls.get(v))
            .map(|s| s.as_str())
            .filter(|s| !s.is_empty())
    }

    /// Display name: the label if present, otherwise the numeric id.
    pub fn name(&self, v: Vertex) -> String {
        self.label(v).map_or_else(|| v.to_string(), str::to_string)
    }

    pub fn set_label(&mut self, v: Vertex, name: impl Into<String>) -> Result<()> {
        if v >= self.n() {
            return input(format!("label for unknown vertex {v}"));
        }
        let n = self.n();
        self.labels.get_or_insert_with(|| vec![String::new(); n])[v] = name.into();
        Ok(())
    }

    pub fn with_labels<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Self {
        for (v, s) in names.into_iter().enumerate().take(self.n()) {
            let _ = self.set_label(v, s);
        }
        self
    }

    pub fn has_labels(&self) -> bool {
        self.labels.is_some()
    }

    /// The same graph with all labels dropped.
    pub fn without_labels(&self) -> Graph {
        Graph {
            adj: self.adj.clone(),
            labels: None,
        }
    }

    /// Finds a vertex by label.
    pub fn vertex_named(&self, name: &str) -> Option<Vertex> {
        self.labels.as_ref()?.iter().position(|s| s == name)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|a| a.len() + 1 == n)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(|a| a.len()).min()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(|a| a.len()).collect();
        d.sort_unstable();
        d
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_avoiding(&BTreeSet::new())
    }

    /// Components of `self - removed`.
    pub fn components_avoiding(&self, removed: &BTreeSet<Vertex>) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] || removed.contains(&s) {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] && !removed.contains(&w) {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `keep`. Vertex `i` of the result is `map[i]` in `self`
    /// (`keep` in ascending order).
    pub fn induced_subgraph(&self, keep: &BTreeSet<Vertex>) -> Result<(Graph, Vec<Vertex>)> {
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.n()) {
            return input(format!("vertex {bad} out of range 0..{}", self.n()));
        }
        let map: Vec<Vertex> = keep.iter().copied().collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(map.len());
        for (u, v) in self.edges() {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                g.add_edge(index[u], index[v])?;
            }
        }
        if self.labels.is_some() {
            g = g.with_labels(map.iter().map(|&v| self.name(v)));
        }
        Ok((g, map))
    }

    /// Applies `perm` (old id -> new id) to every vertex.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        if perm.len() != self.n() {
            return input("permutation length differs from vertex count");
        }
        let mut g = Graph::new(self.n());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    /// The symmetric digraph: every edge `uv` becomes arcs `(u,v)` and `(v,u)`.
    pub fn to_digraph(&self) -> Digraph {
        let mut d = Digraph::new(self.n());
        for (u, v) in self.edges() {
            d.out[u].insert(v);
            d.out[v].insert(u);
        }
        d
    }

    /// Adjacency rows as bitmasks; requires `n <= 64`.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        if self.n() > 64 {
            return input(format!("{} vertices exceed the 64-vertex bitset limit", self.n()));
        }
        Ok(self
            .adj
            .iter()
            .map(|a| a.iter().fold(0u64, |m, &w| m | 1 << w))
            .collect())
    }

    pub fn apply(&self, op: MinorOp) -> Result<Graph> {
        match op {
            MinorOp::DeleteEdge(u, v) => self.delete_edge(u, v),
            MinorOp::ContractEdge(u, v) => self.contract_edge(u, v),
            MinorOp::DeleteIsolatedVertex(v) => self.delete_isolated_vertex(v),
        }
    }

    pub fn delete_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return input(format!("no edge {u}-{v} to delete"));
        }
        let mut g = self.clone();
        g.adj[u].remove(&v);
        g.adj[v].remove(&u);
        Ok(g)
    }

    /// Contracts edge `uv`: `v` is merged into `u`, then ids above `v` shift down
    /// by one. Loops and parallel edges created by the merge are dropped.
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return input(format!("cannot contract non-edge {u}-{v}"));
        }
        let (keep, gone) = (u, v);
        let shift = |x: Vertex| if x > gone { x - 1 } else { x };
        let mut g = Graph::new(self.n() - 1);
        for (a, b) in self.edges() {
            let a = if a == gone { keep } else { a };
            let b = if b == gone { keep } else { b };
            if a != b {
                g.add_edge(shift(a), shift(b))?;
            }
        }
        if self.labels.is_some() {
            let names: Vec<String> = self.vertices().filter(|&x| x != gone).map(|x| self.name(x)).collect();
            g = g.with_labels(names);
        }
        Ok(g)
    }

    pub fn delete_isolated_vertex(&self, v: Vertex) -> Result<Graph> {
        if v >= self.n() {
            return input(format!("vertex {v} out of range"));
        }
        if self.degree(v) != 0 {
            return input(format!("vertex {v} is not isolated (degree {})", self.degree(v)));
        }
        let keep: BTreeSet<Vertex> = self.vertices().filter(|&x| x != v).collect();
        Ok(self.induced_subgraph(&keep)?.0)
    }

    /// Every single minor operation applicable to this graph.
    pub fn minor_ops(&self) -> Vec<MinorOp> {
        let mut ops: Vec<MinorOp> = self
            .edges()
            .flat_map(|(u, v)| [MinorOp::DeleteEdge(u, v), MinorOp::ContractEdge(u, v)])
            .collect();
        ops.extend(
            self.vertices()
                .filter(|&v| self.degree(v) == 0)
                .map(MinorOp::DeleteIsolatedVertex),
        );
        ops
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut g = Graph::new(off + other.n());
        for (u, v) in self.edges() {
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        for (u, v) in other.edges() {
            g.adj[u + off].insert(v + off);
            g.adj[v + off].insert(u + off);
        }
        g
    }
}

/// One of the three minor operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinorOp {
    DeleteEdge(Vertex, Vertex),
    ContractEdge(Vertex, Vertex),
    DeleteIsolatedVertex(Vertex),
}

/// A finite digraph. Self-loops are allowed and count as cycles of length one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Digraph {
    out: Vec<BTreeSet<Vertex>>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph {
            out: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut d = Digraph::new(n);
        for (u, v) in arcs {
            if u >= n || v >= n {
                return input(format!("arc {u}->{v} has an endpoint outside 0..{n}"));
            }
            if !d.out[u].insert(v) {
                return input(format!("duplicate arc {u}->{v}"));
            }
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|o| o.len()).sum()
    }

    pub fn arcs(&self) -> impl Iterator<Item = Edge> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, o)| o.iter().map(move |&v| (u, v)))
    }

    pub fn successors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.out[v].iter().copied()
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.out[u].contains(&v)
    }

    pub fn is_symmetric(&self) -> bool {
        self.arcs().all(|(u, v)| self.has_arc(v, u))
    }

    /// The underlying simple graph of a symmetric, loop-free digraph.
    pub fn to_graph(&self) -> Result<Graph> {
        if !self.is_symmetric() {
            return input("digraph is not symmetric");
        }
        Graph::from_edges(self.n(), self.arcs().filter(|(u, v)| u < v))
    }

    /// Whether the subgraph on vertices outside `removed` has a directed cycle.
    pub fn has_cycle_avoiding(&self, removed: &[bool]) -> bool {
        // Kahn's algorithm on the surviving vertices.
        let n = self.n();
        let mut indeg = vec![0usize; n];
        for (u, v) in self.arcs() {
            if !removed[u] && !removed[v] {
                indeg[v] += 1;
            }
        }
        let mut stack: Vec<Vertex> = (0..n).filter(|&v| !removed[v] && indeg[v] == 0).collect();
        let mut seen = stack.len();
        while let Some(u) = stack.pop() {
            for &v in &self.out[u] {
                if removed[v] {
                    continue;
                }
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    seen += 1;
                    stack.push(v);
                }
            }
        }
        let alive = removed.iter().filter(|r| !**r).count();
        seen < alive
    }

    pub fn is_acyclic(&self) -> bool {
        !self.has_cycle_avoiding(&vec![false; self.n()])
    }
}

impl From<&Graph> for Digraph {
    fn from(g: &Graph) -> Self {
        g.to_digraph()
    }
}

/// Whether an edge of a torso is an edge of the original graph or was added
/// between the two vertices of a hinge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Original,
    Virtual,
}

/// Undirected multigraph whose edges carry an [`EdgeKind`] tag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiGraph {
    pub n: usize,
    /// `(u, v, kind)` with `u < v`; repeated pairs are parallel edges.
    pub edges: Vec<(Vertex, Vertex, EdgeKind)>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        MultiGraph { n, edges: Vec::new() }
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex, kind: EdgeKind) -> Result<()> {
        if u >= self.n || v >= self.n || u == v {
            return input(format!("bad multigraph edge {u}-{v}"));
        }
        let (a, b) = norm(u, v);
        self.edges.push((a, b, kind));
        Ok(())
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        let e = norm(u, v);
        self.edges.iter().filter(|(a, b, _)| (*a, *b) == e).count()
    }

    pub fn virtual_count(&self) -> usize {
        self.edges.iter().filter(|e| e.2 == EdgeKind::Virtual).count()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|(a, b, _)| *a == v || *b == v).count()
    }

    /// Underlying simple graph (parallel edges merged, tags dropped).
    pub fn simple(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for &(u, v, _) in &self.edges {
            let _ = g.add_edge(u, v);
        }
        g
    }

    pub fn from_graph(g: &Graph) -> Self {
        MultiGraph {
            n: g.n(),
            edges: g.edges().map(|(u, v)| (u, v, EdgeKind::Original)).collect(),
        }
    }
}
