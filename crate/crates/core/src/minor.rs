//! Budgeted minor containment for small patterns.
//!
//! A pattern `P` is a minor of `G` iff `P` is a subgraph of some graph obtained
//! from `G` by contracting edges. Contractions are tracked as partitions of
//! `V(G)` into connected branch sets; the search walks merges of adjacent
//! branch sets depth-first, memoising visited partitions, and tests subgraph
//! containment of `P` in every quotient it reaches.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug)]
pub struct MinorBudget {
    pub max_host: usize,
    pub max_pattern: usize,
    /// Number of distinct partitions the search may visit.
    pub max_states: u64,
}

impl Default for MinorBudget {
    fn default() -> Self {
        MinorBudget {
            max_host: 16,
            max_pattern: 8,
            max_states: 2_000_000,
        }
    }
}

/// Branch sets: `model[i]` is the set of host vertices contracted onto pattern
/// vertex `i`.
pub type MinorModel = Vec<Vec<Vertex>>;

pub fn has_minor_small(g: &Graph, pattern: &Graph) -> Result<bool> {
    Ok(find_minor(g, pattern, MinorBudget::default())?.is_some())
}

pub fn find_minor(g: &Graph, pattern: &Graph, budget: MinorBudget) -> Result<Option<MinorModel>> {
    if pattern.n() > budget.max_pattern {
        return Err(budget_err("pattern vertices", pattern.n() as u64, budget.max_pattern as u64));
    }
    if g.n() > budget.max_host {
        return Err(budget_err("host vertices", g.n() as u64, budget.max_host as u64));
    }
    if pattern.n() > g.n() || pattern.edge_count() > g.edge_count() {
        return Ok(None);
    }
    let mut search = Search {
        host: g.adjacency_masks()?,
        pattern: pattern.adjacency_masks()?,
        pattern_edges: pattern.edge_count(),
        seen: HashSet::new(),
        budget: budget.max_states,
    };
    let start: Vec<u64> = (0..g.n()).map(|v| 1u64 << v).collect();
    search.visit(start)
}

fn budget_err(what: &str, needed: u64, budget: u64) -> Error {
    Error::Budget {
        what: what.into(),
        needed,
        budget,
        lower_bound: None,
    }
}

struct Search {
    host: Vec<u64>,
    pattern: Vec<u64>,
    pattern_edges: usize,
    seen: HashSet<Vec<u64>>,
    budget: u64,
}

impl Search {
    fn quotient(&self, blocks: &[u64]) -> Vec<u64> {
        let reach: Vec<u64> = blocks
            .iter()
            .map(|&b| {
                let mut r = 0u64;
                let mut bits = b;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    r |= self.host[v];
                }
                r & !b
            })
            .collect();
        (0..blocks.len())
            .map(|i| {
                (0..blocks.len())
                    .filter(|&j| j != i && reach[i] & blocks[j] != 0)
                    .fold(0u64, |m, j| m | 1 << j)
            })
            .collect()
    }

    fn visit(&mut self, mut blocks: Vec<u64>) -> Result<Option<MinorModel>> {
        blocks.sort_unstable();
        if !self.seen.insert(blocks.clone()) {
            return Ok(None);
        }
        if self.seen.len() as u64 > self.budget {
            return Err(budget_err("minor search states", self.seen.len() as u64, self.budget));
        }
        let q = self.quotient(&blocks);
        if let Some(emb) = subgraph_embedding(&self.pattern, &q) {
            let model = emb
                .iter()
                .map(|&b| (0..64).filter(|&v| blocks[b] & (1 << v) != 0).collect())
                .collect();
            return Ok(Some(model));
        }
        if blocks.len() <= self.pattern.len() {
            return Ok(None);
        }
        let edges: usize = q.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        if edges <= self.pattern_edges {
            // every merge removes at least one quotient edge
            return Ok(None);
        }
        for i in 0..blocks.len() {
            let mut nb = q[i] & !((1u64 << (i + 1)) - 1);
            while nb != 0 {
                let j = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                let mut next: Vec<u64> = Vec::with_capacity(blocks.len() - 1);
                for (k, &b) in blocks.iter().enumerate() {
                    if k == i {
                        next.push(b | blocks[j]);
                    } else if k != j {
                        next.push(b);
                    }
                }
                if let Some(m) = self.visit(next)? {
                    return Ok(Some(m));
                }
            }
        }
        Ok(None)
    }
}

/// Injective edge-preserving map from `pattern` into `host` (not necessarily
/// induced), as pattern vertex -> host vertex.
pub(crate) fn subgraph_embedding(pattern: &[u64], host: &[u64]) -> Option<Vec<usize>> {
    let p = pattern.len();
    if p > host.len() {
        return None;
    }
    let mut order = Vec::with_capacity(p);
    let mut placed = 0u64;
    for _ in 0..p {
        let v = (0..p)
            .filter(|&v| placed & (1 << v) == 0)
            .max_by_key(|&v| ((pattern[v] & placed).count_ones(), pattern[v].count_ones(), usize::MAX - v))
            .unwrap();
        placed |= 1 << v;
        order.push(v);
    }
    let mut map = vec![usize::MAX; p];
    if embed(0, &order, pattern, host, &mut map, 0) {
        Some(map)
    } else {
        None
    }
}

fn embed(i: usize, order: &[usize], pat: &[u64], host: &[u64], map: &mut [usize], used: u64) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    let need = pat[v].count_ones();
    for w in 0..host.len() {
        if used & (1 << w) != 0 || host[w].count_ones() < need {
            continue;
        }
        let ok = order[..i]
            .iter()
            .all(|&u| pat[v] & (1 << u) == 0 || host[w] & (1 << map[u]) != 0);
        if !ok {
            continue;
        }
        map[v] = w;
        if embed(i + 1, order, pat, host, map, used | 1 << w) {
            return true;
        }
    }
    map[v] = usize::MAX;
    false
}

/// Checks that `model` is a valid minor model of `pattern` in `g`: branch sets
/// are non-empty, pairwise disjoint, connected, and every pattern edge is
/// realised by a host edge between the corresponding branch sets.
pub fn is_minor_model(g: &Graph, pattern: &Graph, model: &MinorModel) -> bool {
    if model.len() != pattern.n() {
        return false;
    }
    let mut owner = vec![usize::MAX; g.n()];
    for (i, set) in model.iter().enumerate() {
        if set.is_empty() {
            return false;
        }
        for &v in set {
            if v >= g.n() || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = i;
        }
        let keep = set.iter().copied().collect();
        match g.induced_subgraph(&keep) {
            Ok((sub, _)) if sub.is_connected() => {}
            _ => return false,
        }
    }
    pattern.edges().all(|(a, b)| {
        model[a]
            .iter()
            .any(|&u| g.neighbors(u).any(|w| owner[w] == b))
    })
}
