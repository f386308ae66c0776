//! k-molecules: a base of `k` vertices with arbitrary internal edges plus `h`
//! pairwise non-adjacent apexes, each joined to the whole base, subject to
//! `h >= 1` and `h >= k - k'` where `k'` is the base's connectivity.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::connectivity::{connectivity, Connectivity};
use crate::error::{input, Error, Result};
use crate::graph::{Edge, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoleculeSpec {
    pub k: usize,
    /// Edges among base ids `0..k`, each with `u < v`, sorted.
    pub base_edges: Vec<Edge>,
    pub h: usize,
}

impl MoleculeSpec {
    pub fn new(k: usize, base_edges: Vec<Edge>, h: usize) -> Self {
        let mut base_edges: Vec<Edge> = base_edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        base_edges.sort_unstable();
        base_edges.dedup();
        MoleculeSpec { k, base_edges, h }
    }

    pub fn base_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.k, self.base_edges.iter().copied())
    }

    /// Connectivity of the base with the clique convention.
    pub fn base_connectivity(&self) -> Result<Connectivity> {
        Ok(connectivity(&self.base_graph()?, true).value)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return input("molecule base must be non-empty (k >= 1)");
        }
        if self.h == 0 {
            return input("molecule needs at least one apex (h >= 1)");
        }
        if let Connectivity::Finite(kp) = self.base_connectivity()? {
            if self.h + kp < self.k {
                return input(format!(
                    "h >= k - k' fails: {} < {} - {kp}",
                    self.h, self.k
                ));
            }
        }
        Ok(())
    }

    pub fn is_legal(&self) -> bool {
        self.validate().is_ok()
    }
}

/// Base ids `0..k`, apex ids `k..k+h`.
pub fn make_molecule(spec: &MoleculeSpec) -> Result<Graph> {
    spec.validate()?;
    let mut g = spec.base_graph()?;
    for _ in 0..spec.h {
        let a = g.add_vertex();
        for b in 0..spec.k {
            g.add_edge(a, b)?;
        }
    }
    Ok(g)
}

/// Every legal spec with base size `k` (one base graph per isomorphism class)
/// and `1 <= h <= max_h`.
pub fn legal_specs(k: usize, max_h: usize) -> Vec<MoleculeSpec> {
    let mut out = Vec::new();
    for base in crate::generators::all_graphs(k) {
        for h in 1..=max_h {
            let spec = MoleculeSpec::new(k, base.edges().collect(), h);
            if spec.is_legal() {
                out.push(spec);
            }
        }
    }
    out.sort_by_key(|s| (s.base_edges.len(), s.h, s.base_edges.clone()));
    out
}

/// All bases of `g`: sets `B` such that `V - B` is a non-empty independent
/// set of vertices each adjacent to all of `B`, and `|V - B| >= |B| - k'`.
///
/// Every apex has neighbourhood exactly `B`, so the candidates are the
/// neighbourhoods of single vertices. Sorted by size, then lexicographically.
pub fn bases(g: &Graph) -> Vec<BTreeSet<Vertex>> {
    let mut found: BTreeSet<(usize, BTreeSet<Vertex>)> = BTreeSet::new();
    for a in g.vertices() {
        let b = g.neighbor_set(a).clone();
        if b.is_empty() || found.iter().any(|(_, x)| *x == b) {
            continue;
        }
        let apexes_ok = g
            .vertices()
            .filter(|v| !b.contains(v))
            .all(|v| *g.neighbor_set(v) == b);
        if !apexes_ok {
            continue;
        }
        let (base, _) = g.induced_subgraph(&b).expect("neighbourhood in range");
        let spec = MoleculeSpec::new(b.len(), base.edges().collect(), g.n() - b.len());
        if spec.is_legal() {
            found.insert((b.len(), b));
        }
    }
    found.into_iter().map(|(_, b)| b).collect()
}

/// A base together with the isomorphism onto the standard molecule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoleculeWitness {
    pub base: BTreeSet<Vertex>,
    pub spec: MoleculeSpec,
    /// `iso[v]` is the image of host vertex `v`; base vertices go to `0..k` in
    /// increasing order, the others to `k..`.
    pub iso: Vec<Vertex>,
}

fn witness_for(g: &Graph, base: &BTreeSet<Vertex>) -> Result<MoleculeWitness> {
    let k = base.len();
    let mut iso = vec![usize::MAX; g.n()];
    for (i, &b) in base.iter().enumerate() {
        iso[b] = i;
    }
    for (i, v) in g.vertices().filter(|v| !base.contains(v)).enumerate() {
        iso[v] = k + i;
    }
    let base_edges = g
        .edges()
        .filter(|(u, v)| base.contains(u) && base.contains(v))
        .map(|(u, v)| (iso[u], iso[v]))
        .collect();
    let spec = MoleculeSpec::new(k, base_edges, g.n() - k);
    let target = make_molecule(&spec)?;
    if g.relabel(&iso)?.edges().ne(target.edges()) {
        return Err(Error::Invariant("base does not map onto its molecule".into()));
    }
    Ok(MoleculeWitness {
        base: base.clone(),
        spec,
        iso,
    })
}

/// The first base in canonical order, with its witness.
pub fn recognize_molecule(g: &Graph) -> Option<MoleculeWitness> {
    bases(g).first().map(|b| witness_for(g, b).expect("bases are valid"))
}

/// Witnesses for every base.
pub fn all_witnesses(g: &Graph) -> Vec<MoleculeWitness> {
    bases(g)
        .iter()
        .map(|b| witness_for(g, b).expect("bases are valid"))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Ambiguity {
    NonAmbiguous,
    /// Three base edges, one apex: the 4-clique.
    AmbiguousI,
    /// Two base edges, two apexes.
    AmbiguousII,
    /// No base edges, three apexes: `K_{3,3}`.
    AmbiguousIII,
}

impl Ambiguity {
    pub fn is_ambiguous(self) -> bool {
        self != Ambiguity::NonAmbiguous
    }

    /// The case predicted from the number of base edges and apexes.
    pub fn from_shape(base_edges: usize, h: usize) -> Ambiguity {
        match (base_edges, h) {
            (3, 1) => Ambiguity::AmbiguousI,
            (2, 2) => Ambiguity::AmbiguousII,
            (0, 3) => Ambiguity::AmbiguousIII,
            _ => Ambiguity::NonAmbiguous,
        }
    }
}

impl fmt::Display for Ambiguity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ambiguity::NonAmbiguous => "nonAmbiguous",
            Ambiguity::AmbiguousI => "ambiguousI",
            Ambiguity::AmbiguousII => "ambiguousII",
            Ambiguity::AmbiguousIII => "ambiguousIII",
        })
    }
}

/// Classifies a 3-molecule. The case comes from the shape of its first base
/// and must agree with whether it has more than one base.
pub fn classify_ambiguity_3(g: &Graph) -> Result<Ambiguity> {
    let all = bases(g);
    let Some(first) = all.first() else {
        return input("not a molecule");
    };
    let w = witness_for(g, first)?;
    if w.spec.k != 3 {
        return input(format!("not a 3-molecule (base size {})", w.spec.k));
    }
    let tag = Ambiguity::from_shape(w.spec.base_edges.len(), w.spec.h);
    if tag.is_ambiguous() != (all.len() >= 2) {
        return Err(Error::Invariant(format!(
            "shape says {tag} but the graph has {} bases",
            all.len()
        )));
    }
    Ok(tag)
}
