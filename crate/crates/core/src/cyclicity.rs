//! Cyclicity: minimum feedback vertex sets of digraphs and, for undirected
//! graphs, minimum vertex covers (every edge is a 2-cycle of the symmetric
//! digraph, so the two notions coincide).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::graph::{Digraph, Graph, Vertex};

/// Default cap on the number of enumerated optimal witnesses.
pub const WITNESS_CAP: usize = 10_000;

/// Largest digraph for the exhaustive feedback-vertex-set search.
pub const FVS_VERTEX_BUDGET: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverSolution {
    pub size: usize,
    /// Optimal sets, sorted; truncated at the cap.
    pub witnesses: Vec<BTreeSet<Vertex>>,
    pub capped: bool,
}

pub fn is_edge_cover(g: &Graph, x: &BTreeSet<Vertex>) -> bool {
    g.edges().all(|(u, v)| x.contains(&u) || x.contains(&v))
}

fn to_set(mask: u64) -> BTreeSet<Vertex> {
    (0..64).filter(|&v| mask & (1 << v) != 0).collect()
}

fn masks(g: &Graph) -> Result<Vec<u64>> {
    g.adjacency_masks()
        .map_err(|_| Error::Input(format!("{} vertices exceed the 64-vertex limit", g.n())))
}

/// Vertices with an edge not yet covered by `cover`, and one such edge.
fn uncovered_edge(adj: &[u64], cover: u64) -> Option<(Vertex, Vertex)> {
    let mut best: Option<(u32, Vertex)> = None;
    for (u, &row) in adj.iter().enumerate() {
        if cover & (1 << u) != 0 {
            continue;
        }
        let d = (row & !cover).count_ones();
        if d > 0 && best.is_none_or(|(bd, _)| d > bd) {
            best = Some((d, u));
        }
    }
    best.map(|(_, u)| (u, (adj[u] & !cover).trailing_zeros() as usize))
}

/// Size of a greedy maximal matching among edges not covered by `cover`.
fn matching_bound(adj: &[u64], cover: u64) -> usize {
    let mut used = cover;
    let mut m = 0;
    for (u, &row) in adj.iter().enumerate() {
        if used & (1 << u) != 0 {
            continue;
        }
        let free = row & !used;
        if free != 0 {
            used |= 1 << u | 1 << free.trailing_zeros();
            m += 1;
        }
    }
    m
}

fn greedy_cover(adj: &[u64], mut cover: u64) -> u64 {
    while let Some((u, _)) = uncovered_edge(adj, cover) {
        cover |= 1 << u;
    }
    cover
}

/// Minimum cover containing `forced`, by branch and bound.
fn minimum_cover(adj: &[u64], forced: u64) -> u64 {
    fn go(adj: &[u64], cover: u64, excluded: u64, best: &mut u64) {
        let size = cover.count_ones() as usize;
        if size + matching_bound(adj, cover) >= best.count_ones() as usize {
            return;
        }
        let Some((u, _)) = uncovered_edge(adj, cover) else {
            *best = cover;
            return;
        };
        if excluded & (1 << u) == 0 {
            go(adj, cover | 1 << u, excluded, best);
        }
        let nb = adj[u] & !cover;
        if nb & excluded == 0 {
            go(adj, cover | nb, excluded | 1 << u, best);
        }
    }
    let mut best = greedy_cover(adj, forced);
    // the greedy bound may already be optimal; search for anything smaller
    go(adj, forced, 0, &mut best);
    best
}

/// Every cover of exactly `size` vertices containing `forced`, up to `cap`.
fn enumerate_covers(adj: &[u64], forced: u64, size: usize, cap: usize) -> (Vec<u64>, bool) {
    fn go(adj: &[u64], cover: u64, excluded: u64, size: usize, cap: usize, out: &mut Vec<u64>) -> bool {
        let c = cover.count_ones() as usize;
        if c + matching_bound(adj, cover) > size {
            return true;
        }
        let Some((u, _)) = uncovered_edge(adj, cover) else {
            // a minimum cover is inclusion-minimal, so it has exactly `size`
            if c == size {
                if out.len() == cap {
                    return false;
                }
                out.push(cover);
            }
            return true;
        };
        if excluded & (1 << u) == 0 && !go(adj, cover | 1 << u, excluded, size, cap, out) {
            return false;
        }
        let nb = adj[u] & !cover;
        if nb & excluded == 0 {
            return go(adj, cover | nb, excluded | 1 << u, size, cap, out);
        }
        true
    }
    let mut out = Vec::new();
    let complete = go(adj, forced, 0, size, cap, &mut out);
    out.sort_unstable_by_key(|&m| to_set(m));
    (out, !complete)
}

pub fn cyclicity_undirected(g: &Graph) -> Result<CoverSolution> {
    cyclicity_undirected_with_cap(g, WITNESS_CAP)
}

/// Minimum vertex cover size plus all minimum covers (up to `cap`).
pub fn cyclicity_undirected_with_cap(g: &Graph, cap: usize) -> Result<CoverSolution> {
    let adj = masks(g)?;
    let size = minimum_cover(&adj, 0).count_ones() as usize;
    let (found, capped) = enumerate_covers(&adj, 0, size, cap.max(1));
    Ok(CoverSolution {
        size,
        witnesses: found.into_iter().map(to_set).collect(),
        capped,
    })
}

/// Just the minimum cover size.
pub fn cyclicity_value(g: &Graph) -> Result<usize> {
    Ok(minimum_cover(&masks(g)?, 0).count_ones() as usize)
}

/// Whether some minimum cover contains all of `s`.
pub fn covers_containing(g: &Graph, s: &BTreeSet<Vertex>) -> Result<bool> {
    if let Some(&bad) = s.iter().find(|&&v| v >= g.n()) {
        return input(format!("vertex {bad} out of range 0..{}", g.n()));
    }
    let sol = cyclicity_undirected(g)?;
    if sol.witnesses.iter().any(|w| s.is_subset(w)) {
        return Ok(true);
    }
    if !sol.capped {
        return Ok(false);
    }
    let adj = masks(g)?;
    let forced = s.iter().fold(0u64, |m, &v| m | 1 << v);
    Ok(minimum_cover(&adj, forced).count_ones() as usize == sol.size)
}

/// Minimum feedback vertex set by increasing-size subset search. Vertices
/// with a self-loop belong to every feedback set and are fixed up front;
/// vertices on no cycle are never tried.
pub fn cyclicity_digraph(g: &Digraph) -> Result<CoverSolution> {
    let n = g.n();
    if n > FVS_VERTEX_BUDGET {
        return Err(Error::Budget {
            what: "feedback vertex set search vertices".into(),
            needed: n as u64,
            budget: FVS_VERTEX_BUDGET as u64,
            lower_bound: None,
        });
    }
    let forced: Vec<Vertex> = (0..n).filter(|&v| g.has_arc(v, v)).collect();
    let on_cycle: Vec<Vertex> = (0..n)
        .filter(|&v| !g.has_arc(v, v) && on_some_cycle(g, v))
        .collect();
    let mut removed = vec![false; n];
    for &v in &forced {
        removed[v] = true;
    }
    for extra in 0..=on_cycle.len() {
        let mut witnesses = Vec::new();
        let mut capped = false;
        for combo in crate::generators::subsets_of_size(on_cycle.len(), extra) {
            let chosen: Vec<Vertex> = combo.iter().map(|&i| on_cycle[i]).collect();
            for &v in &chosen {
                removed[v] = true;
            }
            if !g.has_cycle_avoiding(&removed) {
                if witnesses.len() == WITNESS_CAP {
                    capped = true;
                } else {
                    witnesses.push(forced.iter().chain(&chosen).copied().collect());
                }
            }
            for &v in &chosen {
                removed[v] = false;
            }
            if capped {
                break;
            }
        }
        if !witnesses.is_empty() {
            witnesses.sort();
            return Ok(CoverSolution {
                size: forced.len() + extra,
                witnesses,
                capped,
            });
        }
    }
    Err(Error::Invariant("removing every cycle vertex left a cycle".into()))
}

fn on_some_cycle(g: &Digraph, v: Vertex) -> bool {
    // v lies on a cycle iff v is reachable from one of its successors
    let mut seen = vec![false; g.n()];
    let mut stack: Vec<Vertex> = g.successors(v).collect();
    while let Some(u) = stack.pop() {
        if u == v {
            return true;
        }
        if !seen[u] {
            seen[u] = true;
            stack.extend(g.successors(u));
        }
    }
    false
}
