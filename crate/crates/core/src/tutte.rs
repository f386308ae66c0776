//! Tutte decomposition of 2-connected graphs.
//!
//! A hinge is a 2-separator `{x, y}` with at least three `[x,y]`-bridges, or
//! exactly two of which one is 2-connected; the edge `xy`, when present,
//! counts as a bridge of its own. The graph is cut along every hinge: a hinge
//! with three or more bridges becomes a bond node joined to one piece per
//! component, a hinge with two becomes a direct tree edge. Each piece gets one
//! virtual edge per incident tree edge, and every resulting torso is a cycle, a
//! bond of multiplicity at least three, or 3-connected.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::connectivity::is_k_connected;
use crate::error::{input, Error, Result};
use crate::graph::{Edge, EdgeKind, Graph, MultiGraph, Vertex};

/// A separation `(A, B)`: `A ∪ B = V` and no edge joins `A - B` to `B - A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub a: BTreeSet<Vertex>,
    pub b: BTreeSet<Vertex>,
}

impl Separation {
    pub fn separator(&self) -> BTreeSet<Vertex> {
        self.a.intersection(&self.b).copied().collect()
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        let all: BTreeSet<Vertex> = self.a.union(&self.b).copied().collect();
        all.len() == g.n()
            && all.iter().all(|&v| v < g.n())
            && g.edges().all(|(u, v)| {
                let ua = self.a.contains(&u) && !self.b.contains(&u);
                let ub = self.b.contains(&u) && !self.a.contains(&u);
                let va = self.a.contains(&v) && !self.b.contains(&v);
                let vb = self.b.contains(&v) && !self.a.contains(&v);
                !(ua && vb || ub && va)
            })
    }
}

/// A component of `G - S` with its attachment edges into `S`, or a single
/// edge inside `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bridge {
    pub vertices: BTreeSet<Vertex>,
    pub edges: Vec<Edge>,
}

impl Bridge {
    pub fn is_trivial_edge(&self) -> bool {
        self.edges.len() == 1 && self.vertices.len() == 2
    }

    /// The bridge as a graph on its own vertices (in increasing order).
    pub fn as_graph(&self) -> Graph {
        let ids: Vec<Vertex> = self.vertices.iter().copied().collect();
        let idx = |v: Vertex| ids.binary_search(&v).expect("bridge vertex");
        Graph::from_edges(ids.len(), self.edges.iter().map(|&(u, v)| (idx(u), idx(v)))).expect("bridge edges")
    }

    pub fn is_two_connected(&self) -> bool {
        self.vertices.len() >= 3 && is_k_connected(&self.as_graph(), 2)
    }
}

/// The `S`-bridges of `g`: one per component of `g - S`, plus one trivial
/// bridge per edge with both ends in `S`.
pub fn bridges_of(g: &Graph, s: &BTreeSet<Vertex>) -> Vec<Bridge> {
    let mut out = Vec::new();
    for comp in g.components_avoiding(s) {
        let inside: BTreeSet<Vertex> = comp.iter().copied().collect();
        let mut vertices = inside.clone();
        let mut edges = Vec::new();
        for (u, v) in g.edges() {
            let touches = inside.contains(&u) || inside.contains(&v);
            if touches {
                vertices.insert(u);
                vertices.insert(v);
                edges.push((u, v));
            }
        }
        out.push(Bridge { vertices, edges });
    }
    for (u, v) in g.edges() {
        if s.contains(&u) && s.contains(&v) {
            out.push(Bridge {
                vertices: BTreeSet::from([u, v]),
                edges: vec![(u, v)],
            });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hinge {
    pub x: Vertex,
    pub y: Vertex,
    pub bridges: Vec<Bridge>,
}

impl Hinge {
    pub fn pair(&self) -> (Vertex, Vertex) {
        (self.x, self.y)
    }

    /// The separation with `A` the first bridge's vertices and `B` the rest.
    pub fn separation(&self, g: &Graph) -> Separation {
        let a = self.bridges[0].vertices.clone();
        let mut b: BTreeSet<Vertex> = g.vertices().filter(|v| !a.contains(v)).collect();
        b.insert(self.x);
        b.insert(self.y);
        Separation { a, b }
    }
}

/// Whether `{x, y}` is a hinge of `g`.
pub fn hinge_at(g: &Graph, x: Vertex, y: Vertex) -> Option<Hinge> {
    let s = BTreeSet::from([x, y]);
    if x == y || g.components_avoiding(&s).len() < 2 {
        return None;
    }
    let bridges = bridges_of(g, &s);
    let ok = bridges.len() >= 3 || bridges.len() == 2 && bridges.iter().any(Bridge::is_two_connected);
    ok.then(|| Hinge {
        x: x.min(y),
        y: x.max(y),
        bridges,
    })
}

fn require_two_connected(g: &Graph) -> Result<()> {
    if g.n() < 3 || !is_k_connected(g, 2) {
        return input("graph must be 2-connected with at least 3 vertices");
    }
    Ok(())
}

/// All hinges, by scanning every vertex pair. Sorted by pair.
pub fn hinges(g: &Graph) -> Result<Vec<Hinge>> {
    require_two_connected(g)?;
    let mut out = Vec::new();
    for x in g.vertices() {
        for y in x + 1..g.n() {
            if let Some(h) = hinge_at(g, x, y) {
                out.push(h);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum TorsoKind {
    Cycle,
    /// Two vertices joined by this many parallel edges (at least three).
    Bond(usize),
    ThreeConnected,
}

impl fmt::Display for TorsoKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorsoKind::Cycle => f.write_str("cycle"),
            TorsoKind::Bond(k) => write!(f, "{k}-bond"),
            TorsoKind::ThreeConnected => f.write_str("3-connected"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TutteNode {
    /// Sorted vertices of the bag.
    pub bag: Vec<Vertex>,
    /// Torso on local ids: local `i` is `bag[i]`.
    pub torso: MultiGraph,
    pub kind: TorsoKind,
}

impl TutteNode {
    pub fn local(&self, v: Vertex) -> Option<usize> {
        self.bag.binary_search(&v).ok()
    }

    /// Torso edges in host ids.
    pub fn torso_edges(&self) -> Vec<(Vertex, Vertex, EdgeKind)> {
        self.torso
            .edges
            .iter()
            .map(|&(u, v, k)| (self.bag[u], self.bag[v], k))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    /// The shared hinge, `x < y`.
    pub hinge: (Vertex, Vertex),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TutteTree {
    pub nodes: Vec<TutteNode>,
    pub edges: Vec<TreeEdge>,
}

struct Piece {
    verts: BTreeSet<Vertex>,
    /// `(u, v, virtual id)`; `None` marks an original edge.
    edges: Vec<(Vertex, Vertex, Option<usize>)>,
}

impl Piece {
    /// A simple cycle on at least three vertices.
    fn is_cycle(&self) -> bool {
        if self.verts.len() < 3 || self.edges.len() != self.verts.len() {
            return false;
        }
        let mut deg: BTreeMap<Vertex, usize> = BTreeMap::new();
        for &(u, v, _) in &self.edges {
            *deg.entry(u).or_default() += 1;
            *deg.entry(v).or_default() += 1;
        }
        let x = *self.verts.first().expect("nonempty");
        deg.values().all(|&d| d == 2) && self.components_without(x, x).len() == 1
    }

    fn components_without(&self, x: Vertex, y: Vertex) -> Vec<BTreeSet<Vertex>> {
        let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        for &(u, v, _) in &self.edges {
            adj.entry(u).or_default().push(v);
            adj.entry(v).or_default().push(u);
        }
        let mut seen: BTreeSet<Vertex> = BTreeSet::from([x, y]);
        let mut out = Vec::new();
        for &s in &self.verts {
            if seen.contains(&s) {
                continue;
            }
            seen.insert(s);
            let mut comp = BTreeSet::from([s]);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in adj.get(&u).into_iter().flatten() {
                    if seen.insert(w) {
                        comp.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }
}

/// Builds the decomposition tree, splitting on the least hinge first.
pub fn build_tutte_tree(g: &Graph) -> Result<TutteTree> {
    let hinge_pairs: Vec<(Vertex, Vertex)> = hinges(g)?.iter().map(Hinge::pair).collect();
    let mut next_virtual = 0;
    let mut work = vec![Piece {
        verts: g.vertices().collect(),
        edges: g.edges().map(|(u, v)| (u, v, None)).collect(),
    }];
    let mut done = Vec::new();
    while let Some(p) = work.pop() {
        let split = hinge_pairs.iter().find_map(|&(x, y)| {
            if !p.verts.contains(&x) || !p.verts.contains(&y) || p.verts.len() == 2 {
                return None;
            }
            let comps = p.components_without(x, y);
            (comps.len() >= 2).then_some((x, y, comps))
        });
        let Some((x, y, comps)) = split else {
            done.push(p);
            continue;
        };
        let is_xy = |u: Vertex, v: Vertex| (u, v) == (x, y) || (u, v) == (y, x);
        let xy_edges: Vec<_> = p.edges.iter().copied().filter(|&(u, v, _)| is_xy(u, v)).collect();
        let parts = comps.len() + xy_edges.len();
        let mut children = Vec::new();
        for comp in &comps {
            let mut verts = comp.clone();
            verts.insert(x);
            verts.insert(y);
            let edges = p
                .edges
                .iter()
                .copied()
                .filter(|&(u, v, _)| !is_xy(u, v) && (comp.contains(&u) || comp.contains(&v)))
                .collect();
            children.push(Piece { verts, edges });
        }
        if parts >= 3 {
            let mut bond = Piece {
                verts: BTreeSet::from([x, y]),
                edges: xy_edges,
            };
            for child in &mut children {
                child.edges.push((x, y, Some(next_virtual)));
                bond.edges.push((x, y, Some(next_virtual)));
                next_virtual += 1;
            }
            work.push(bond);
        } else {
            for child in &mut children {
                child.edges.push((x, y, Some(next_virtual)));
            }
            next_virtual += 1;
        }
        work.extend(children);
    }
    merge_adjacent_cycles(&mut done);

    // canonical node order: by sorted bag, ties by edge list
    done.sort_by(|a, b| {
        let ka: Vec<_> = a.verts.iter().collect();
        let kb: Vec<_> = b.verts.iter().collect();
        ka.cmp(&kb).then_with(|| a.edges.len().cmp(&b.edges.len()))
    });
    let mut owners: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut nodes = Vec::with_capacity(done.len());
    for (i, p) in done.iter().enumerate() {
        let bag: Vec<Vertex> = p.verts.iter().copied().collect();
        let idx = |v: Vertex| bag.binary_search(&v).expect("edge inside bag");
        let mut torso = MultiGraph::new(bag.len());
        let mut edges: Vec<_> = p.edges.clone();
        edges.sort_by_key(|&(u, v, id)| (u.min(v), u.max(v), id.is_some()));
        for (u, v, id) in edges {
            let kind = match id {
                Some(id) => {
                    owners.entry(id).or_default().push(i);
                    EdgeKind::Virtual
                }
                None => EdgeKind::Original,
            };
            torso.add_edge(idx(u), idx(v), kind)?;
        }
        let kind = classify_torso(&torso)?;
        nodes.push(TutteNode { bag, torso, kind });
    }
    let mut edges = Vec::new();
    for (id, own) in owners {
        let [a, b] = own[..] else {
            return Err(Error::Invariant(format!("virtual edge {id} has {} owners", own.len())));
        };
        let shared: Vec<Vertex> = nodes[a].bag.iter().copied().filter(|v| nodes[b].bag.contains(v)).collect();
        let [x, y] = shared[..] else {
            return Err(Error::Invariant("adjacent bags must share exactly two vertices".into()));
        };
        edges.push(TreeEdge {
            a: a.min(b),
            b: a.max(b),
            hinge: (x, y),
        });
    }
    edges.sort();
    let tree = TutteTree { nodes, edges };
    let report = validate_tree_decomposition(g, &tree);
    if !report.is_valid() {
        return Err(Error::Invariant(format!("decomposition failed validation: {report}")));
    }
    Ok(tree)
}

/// Two cycles glued along a virtual edge form one cycle; the split between
/// them depends on the order hinges were tried, so it is undone here.
fn merge_adjacent_cycles(done: &mut Vec<Piece>) {
    loop {
        let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
        let mut hit = None;
        'scan: for (i, p) in done.iter().enumerate() {
            if !p.is_cycle() {
                continue;
            }
            for &(_, _, id) in &p.edges {
                if let Some(id) = id {
                    if let Some(&j) = owner.get(&id) {
                        hit = Some((j, i, id));
                        break 'scan;
                    }
                    owner.insert(id, i);
                }
            }
        }
        let Some((a, b, id)) = hit else {
            return;
        };
        let pb = done.remove(b);
        let pa = &mut done[a];
        pa.verts.extend(pb.verts);
        pa.edges.extend(pb.edges);
        pa.edges.retain(|&(_, _, e)| e != Some(id));
    }
}

/// Classifies a torso; a bond of multiplicity two is rejected.
pub fn classify_torso(t: &MultiGraph) -> Result<TorsoKind> {
    if t.n == 2 {
        let k = t.edges.len();
        if k < 3 {
            return Err(Error::Invariant(format!("{k}-bond torso")));
        }
        return Ok(TorsoKind::Bond(k));
    }
    let simple = t.simple();
    if simple.edge_count() != t.edges.len() {
        return Err(Error::Invariant("parallel edges in a non-bond torso".into()));
    }
    if simple.is_connected() && simple.vertices().all(|v| simple.degree(v) == 2) {
        return Ok(TorsoKind::Cycle);
    }
    if simple.n() >= 4 && is_k_connected(&simple, 3) {
        return Ok(TorsoKind::ThreeConnected);
    }
    Err(Error::Invariant(format!("torso on {} vertices is neither a cycle nor 3-connected", t.n)))
}

impl TutteTree {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn neighbors(&self, t: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|e| {
                if e.a == t {
                    Some(e.b)
                } else if e.b == t {
                    Some(e.a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.len()).filter(|&t| self.neighbors(t).len() <= 1).collect()
    }

    /// Node sequence of the unique tree path from `a` to `b`.
    pub fn path(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.len()];
        let mut seen = vec![false; self.len()];
        seen[a] = true;
        let mut queue = VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if !seen[b] {
            return None;
        }
        let mut path = vec![b];
        while *path.last().unwrap() != a {
            path.push(prev[*path.last().unwrap()]);
        }
        path.reverse();
        Some(path)
    }

    fn edge_between(&self, a: usize, b: usize) -> Option<&TreeEdge> {
        self.edges.iter().find(|e| (e.a, e.b) == (a.min(b), a.max(b)))
    }

    /// Hinges met along a node path, in order and without repeats: bond
    /// bags, and the labels of edges joining two non-bond nodes.
    pub fn hinge_sequence(&self, path: &[usize]) -> Vec<(Vertex, Vertex)> {
        let mut out: Vec<(Vertex, Vertex)> = Vec::new();
        let mut push = |h: (Vertex, Vertex)| {
            if out.last() != Some(&h) {
                out.push(h);
            }
        };
        for (i, &t) in path.iter().enumerate() {
            if let TorsoKind::Bond(_) = self.nodes[t].kind {
                push((self.nodes[t].bag[0], self.nodes[t].bag[1]));
            }
            if let Some(&next) = path.get(i + 1) {
                if let Some(e) = self.edge_between(t, next) {
                    push(e.hinge);
                }
            }
        }
        out
    }

    /// All distinct hinges labelling tree edges, sorted.
    pub fn hinge_labels(&self) -> Vec<(Vertex, Vertex)> {
        let set: BTreeSet<_> = self.edges.iter().map(|e| e.hinge).collect();
        set.into_iter().collect()
    }

    /// Vertices of bag `t` that also lie in some neighbouring bag.
    pub fn interface(&self, t: usize) -> BTreeSet<Vertex> {
        let nb = self.neighbors(t);
        self.nodes[t]
            .bag
            .iter()
            .copied()
            .filter(|v| nb.iter().any(|&u| self.nodes[u].bag.contains(v)))
            .collect()
    }

    /// Bonds of multiplicity above three.
    pub fn large_bonds(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&t| matches!(self.nodes[t].kind, TorsoKind::Bond(k) if k > 3))
            .collect()
    }

    pub fn kind_counts(&self) -> BTreeMap<String, usize> {
        let mut m = BTreeMap::new();
        for n in &self.nodes {
            *m.entry(n.kind.to_string()).or_insert(0) += 1;
        }
        m
    }

    /// DOT rendering: bags as boxes joined by hinge-labelled edges, then each
    /// torso as a cluster with virtual edges dashed.
    pub fn to_dot(&self, g: &Graph) -> String {
        let name = |v: Vertex| g.name(v);
        let mut out = String::from("graph tutte {\n  node [shape=box];\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let bag: Vec<String> = n.bag.iter().map(|&v| name(v)).collect();
            let _ = writeln!(out, "  t{i} [label=\"t{i} {}: {}\"];", n.kind, bag.join(" "));
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  t{} -- t{} [label=\"{} {}\"];",
                e.a,
                e.b,
                name(e.hinge.0),
                name(e.hinge.1)
            );
        }
        for (i, n) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  subgraph cluster_t{i} {{\n    label=\"t{i}\";\n    node [shape=circle];");
            for &v in &n.bag {
                let _ = writeln!(out, "    t{i}_{v} [label=\"{}\"];", name(v));
            }
            for (u, v, kind) in n.torso_edges() {
                let style = if kind == EdgeKind::Virtual { " [style=dashed]" } else { "" };
                let _ = writeln!(out, "    t{i}_{u} -- t{i}_{v}{style};");
            }
            out.push_str("  }\n");
        }
        out.push_str("}\n");
        out
    }
}

/// Glues `m2` onto `m1` along edge `e1` of `m1` and edge `e2` of `m2`, then
/// deletes both. Endpoints are identified in stored order, or crosswise with
/// `swap`. Returns the sum and the image of each `m2` vertex.
pub fn two_sum_multi(
    m1: &MultiGraph,
    e1: usize,
    m2: &MultiGraph,
    e2: usize,
    swap: bool,
) -> Result<(MultiGraph, Vec<Vertex>)> {
    let (Some(&(a1, b1, _)), Some(&(a2, b2, _))) = (m1.edges.get(e1), m2.edges.get(e2)) else {
        return input("2-sum edge index out of range");
    };
    let (a2, b2) = if swap { (b2, a2) } else { (a2, b2) };
    let mut map = vec![usize::MAX; m2.n];
    map[a2] = a1;
    map[b2] = b1;
    let mut next = m1.n;
    for (v, slot) in map.iter_mut().enumerate() {
        if v != a2 && v != b2 {
            *slot = next;
            next += 1;
        }
    }
    let mut out = MultiGraph::new(next);
    for (i, &(u, v, k)) in m1.edges.iter().enumerate() {
        if i != e1 {
            out.add_edge(u, v, k)?;
        }
    }
    for (i, &(u, v, k)) in m2.edges.iter().enumerate() {
        if i != e2 {
            out.add_edge(map[u], map[v], k)?;
        }
    }
    Ok((out, map))
}

/// 2-sum of simple graphs: `e2 = (a2, b2)` is glued onto `e1 = (a1, b1)` with
/// `a2 -> a1`, `b2 -> b1`. Vertices of `g2` other than `a2, b2` follow those of
/// `g1` in increasing order; parallel edges are merged.
pub fn two_sum(g1: &Graph, e1: Edge, g2: &Graph, e2: Edge) -> Result<Graph> {
    let find = |g: &Graph, (u, v): Edge| {
        let norm = (u.min(v), u.max(v));
        g.edges().position(|e| e == norm)
    };
    let (Some(i1), Some(i2)) = (find(g1, e1), find(g2, e2)) else {
        return input("2-sum needs an existing edge in each graph");
    };
    let m1 = MultiGraph::from_graph(g1);
    let m2 = MultiGraph::from_graph(g2);
    // stored edges are (min, max); swap when the requested orientations differ
    let swap = (e1.0 < e1.1) != (e2.0 < e2.1);
    Ok(two_sum_multi(&m1, i1, &m2, i2, swap)?.0.simple())
}

/// Folds all torsos back together by 2-sums along the tree edges, starting
/// at node 0. The result uses host ids when the bags cover `0..n`.
pub fn recompose(t: &TutteTree) -> Result<Graph> {
    if t.is_empty() {
        return Ok(Graph::new(0));
    }
    let mut acc = t.nodes[0].torso.clone();
    // host id of each accumulated vertex
    let mut host: Vec<Vertex> = t.nodes[0].bag.clone();
    let mut visited = vec![false; t.len()];
    visited[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for w in t.neighbors(u) {
            if visited[w] {
                continue;
            }
            visited[w] = true;
            queue.push_back(w);
            let (x, y) = t.edge_between(u, w).expect("neighbour edge").hinge;
            let pos = |v: Vertex| host.iter().position(|&h| h == v);
            let (Some(ax), Some(ay)) = (pos(x), pos(y)) else {
                return Err(Error::Invariant("hinge missing from the accumulated graph".into()));
            };
            let virt = |m: &MultiGraph, p: Vertex, q: Vertex| {
                m.edges
                    .iter()
                    .position(|&(a, b, k)| k == EdgeKind::Virtual && (a, b) == (p.min(q), p.max(q)))
            };
            let node = &t.nodes[w];
            let (lx, ly) = (node.local(x).expect("hinge in bag"), node.local(y).expect("hinge in bag"));
            let (Some(e1), Some(e2)) = (virt(&acc, ax, ay), virt(&node.torso, lx, ly)) else {
                return Err(Error::Invariant(format!("no virtual edge for hinge {x} {y}")));
            };
            // stored order of e1 is (min(ax,ay), ..); match x to x
            let acc_first_is_x = ax < ay;
            let node_first_is_x = lx < ly;
            let (sum, map) = two_sum_multi(&acc, e1, &node.torso, e2, acc_first_is_x != node_first_is_x)?;
            let mut new_host = host.clone();
            new_host.resize(sum.n, usize::MAX);
            for (local, &img) in map.iter().enumerate() {
                new_host[img] = node.bag[local];
            }
            acc = sum;
            host = new_host;
        }
    }
    if acc.virtual_count() != 0 {
        return Err(Error::Invariant("virtual edges left after recomposition".into()));
    }
    let g = acc.simple();
    if g.edge_count() != acc.edges.len() {
        return Err(Error::Invariant("recomposition produced parallel edges".into()));
    }
    let mut sorted = host.clone();
    sorted.sort_unstable();
    if sorted.iter().copied().eq(0..host.len()) {
        g.relabel(&host)
    } else {
        Ok(g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, rule: &str) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }

    fn push(&mut self, rule: &'static str, detail: String) {
        self.violations.push(Violation { rule, detail });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| format!("{}: {}", v.rule, v.detail)).collect();
        f.write_str(&parts.join("; "))
    }
}

/// Checks that `t` is a tree decomposition of `g` whose adhesion sets are the
/// hinge labels, and that every tree edge's label separates the two sides.
///
/// Rules: `vertex-coverage` (every vertex in a bag), `edge-coverage` (every
/// edge inside a bag), `connected-occurrence` (bags holding a vertex form a
/// subtree), `tree`, `adhesion` (adjacent bags share exactly the label, of
/// size two), `separation`.
pub fn validate_tree_decomposition(g: &Graph, t: &TutteTree) -> ValidationReport {
    let mut r = ValidationReport::default();
    let m = t.len();
    for v in g.vertices() {
        if !t.nodes.iter().any(|n| n.bag.contains(&v)) {
            r.push("vertex-coverage", format!("vertex {v} in no bag"));
        }
    }
    for (u, v) in g.edges() {
        if !t.nodes.iter().any(|n| n.bag.contains(&u) && n.bag.contains(&v)) {
            r.push("edge-coverage", format!("edge {u} {v} in no bag"));
        }
    }
    let in_range = t.edges.iter().all(|e| e.a < m && e.b < m && e.a != e.b);
    let connected = m == 0 || (in_range && t.path(0, m - 1).is_some() && (0..m).all(|b| t.path(0, b).is_some()));
    if !in_range || t.edges.len() + 1 != m.max(1) || !connected {
        r.push("tree", format!("{} nodes, {} edges", m, t.edges.len()));
        return r;
    }
    for v in g.vertices() {
        let holders: Vec<usize> = (0..m).filter(|&i| t.nodes[i].bag.contains(&v)).collect();
        // a vertex set of a tree is a subtree iff it spans |set| - 1 edges
        let inner = t
            .edges
            .iter()
            .filter(|e| holders.contains(&e.a) && holders.contains(&e.b))
            .count();
        if !holders.is_empty() && inner + 1 != holders.len() {
            r.push("connected-occurrence", format!("bags holding {v} are not connected"));
        }
    }
    for e in &t.edges {
        let shared: BTreeSet<Vertex> = t.nodes[e.a]
            .bag
            .iter()
            .copied()
            .filter(|v| t.nodes[e.b].bag.contains(v))
            .collect();
        let label = BTreeSet::from([e.hinge.0, e.hinge.1]);
        if shared != label || label.len() != 2 {
            r.push("adhesion", format!("t{} t{} share {:?}, label {:?}", e.a, e.b, shared, e.hinge));
            continue;
        }
        // the two sides of the tree edge
        let side_a = tree_side(t, e.a, e.b);
        let verts = |side: &BTreeSet<usize>| -> BTreeSet<Vertex> {
            side.iter()
                .flat_map(|&i| t.nodes[i].bag.iter().copied())
                .filter(|v| !label.contains(v))
                .collect()
        };
        let side_b: BTreeSet<usize> = (0..m).filter(|i| !side_a.contains(i)).collect();
        let (ua, ub) = (verts(&side_a), verts(&side_b));
        for comp in g.components_avoiding(&label) {
            if comp.iter().any(|v| ua.contains(v)) && comp.iter().any(|v| ub.contains(v)) {
                r.push("separation", format!("label {:?} of t{} t{} does not separate", e.hinge, e.a, e.b));
                break;
            }
        }
    }
    r
}

/// Nodes on `from`'s side after removing the tree edge `from`-`cut`.
fn tree_side(t: &TutteTree, from: usize, cut: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([from]);
    let mut stack = vec![from];
    while let Some(u) = stack.pop() {
        for w in t.neighbors(u) {
            if (u, w) == (from, cut) {
                continue;
            }
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen
}
