//! Exhaustive isomorphism testing and canonical labeling for small graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph accepted by [`is_isomorphic_small`].
pub const ISO_VERTEX_BUDGET: usize = 12;

/// Exact isomorphism test by backtracking with degree pruning.
///
/// Both graphs must have at most [`ISO_VERTEX_BUDGET`] vertices; larger input
/// is a budget error rather than `false`.
pub fn is_isomorphic_small(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.n() > ISO_VERTEX_BUDGET {
            return Err(Error::Budget {
                what: "isomorphism vertex count".into(),
                needed: x.n() as u64,
                budget: ISO_VERTEX_BUDGET as u64,
                lower_bound: None,
            });
        }
    }
    Ok(find_isomorphism(g, h).is_some())
}

/// An isomorphism `g -> h` as a vertex map, if one exists. No size budget;
/// callers are expected to keep the graphs small.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let n = g.n();
    let ga = g.adjacency_masks().ok()?;
    let ha = h.adjacency_masks().ok()?;

    // Map vertices of g in an order where each vertex tends to touch already
    // mapped ones: repeatedly take the unmapped vertex with most mapped
    // neighbours, ties to higher degree.
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| placed & (1 << v) == 0)
            .max_by_key(|&v| ((ga[v] & placed).count_ones(), ga[v].count_ones(), usize::MAX - v))
            .unwrap();
        placed |= 1 << v;
        order.push(v);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    if extend(0, &order, &ga, &ha, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(i: usize, order: &[usize], ga: &[u64], ha: &[u64], map: &mut [usize], used: &mut u64) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    let dv = ga[v].count_ones();
    for w in 0..ha.len() {
        if *used & (1 << w) != 0 || ha[w].count_ones() != dv {
            continue;
        }
        let consistent = order[..i].iter().all(|&u| {
            let gu = ga[v] & (1 << u) != 0;
            let hu = ha[w] & (1 << map[u]) != 0;
            gu == hu
        });
        if !consistent {
            continue;
        }
        map[v] = w;
        *used |= 1 << w;
        if extend(i + 1, order, ga, ha, map, used) {
            return true;
        }
        *used &= !(1 << w);
        map[v] = usize::MAX;
    }
    false
}

/// Canonical form: isomorphic graphs (and only those) map to equal values.
/// Vertex count is limited to 64.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate {
    pub n: usize,
    rows: Vec<u64>,
}

impl Certificate {
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, row) in self.rows.iter().enumerate() {
            for v in u + 1..self.n {
                if row & (1 << v) != 0 {
                    g.add_edge(u, v).expect("certificate rows are in range");
                }
            }
        }
        g
    }
}

/// Canonical labeling by individualization and colour refinement, exploring
/// every leaf of the search tree (no automorphism pruning). Intended for graphs
/// of at most ~10 vertices.
pub fn canonical_form(g: &Graph) -> Result<Certificate> {
    let adj = g.adjacency_masks()?;
    let n = g.n();
    let mut best: Option<Vec<u64>> = None;
    let start = if n == 0 { Vec::new() } else { refine(vec![(0..n).collect()], &adj) };
    search(start, &adj, &mut best);
    Ok(Certificate {
        n,
        rows: best.unwrap_or_default(),
    })
}

pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(canonical_form(g)?.to_graph())
}

type Partition = Vec<Vec<usize>>;

fn refine(mut cells: Partition, adj: &[u64]) -> Partition {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        let mut next: Partition = Vec::with_capacity(cells.len());
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = c
                .iter()
                .map(|&v| (masks.iter().map(|m| (adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut cur: Vec<usize> = Vec::new();
            let mut cur_key: Option<&Vec<u32>> = None;
            for (k, v) in &keyed {
                if cur_key.is_some_and(|ck| ck != k) {
                    next.push(std::mem::take(&mut cur));
                }
                cur_key = Some(k);
                cur.push(*v);
            }
            next.push(cur);
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(cells: Partition, adj: &[u64], best: &mut Option<Vec<u64>>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let mut pos = vec![0usize; adj.len()];
        for (i, c) in cells.iter().enumerate() {
            pos[c[0]] = i;
        }
        let mut rows = vec![0u64; adj.len()];
        for (v, &row) in adj.iter().enumerate() {
            let mut r = 0u64;
            let mut bits = row;
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                r |= 1 << pos[w];
            }
            rows[pos[v]] = r;
        }
        if best.as_ref().is_none_or(|b| rows > *b) {
            *best = Some(rows);
        }
        return;
    };
    for &v in &cells[target] {
        let mut next = cells[..target].to_vec();
        next.push(vec![v]);
        next.push(cells[target].iter().copied().filter(|&x| x != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        search(refine(next, adj), adj, best);
    }
}
