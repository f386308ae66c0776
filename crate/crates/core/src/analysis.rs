//! Structure of Tutte trees against entanglement: spread, diameter, parallel
//! hinges, dominoes, and a checker for the necessary conditions on
//! 2-connected graphs of entanglement 3.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::cyclicity::covers_containing;
use crate::error::{input, Result};
use crate::generators::{complete, cycle};
use crate::graph::{Edge, Graph, Vertex};
use crate::molecules::{all_witnesses, bases, make_molecule, MoleculeSpec, MoleculeWitness};
use crate::tutte::{build_tutte_tree, hinges, two_sum, TorsoKind, TutteTree};

/// Multiplier in the diameter bound `diameter <= DIAMETER_FACTOR * spread`.
pub const DIAMETER_FACTOR: usize = 128;

/// The domino `D_n`: two rails `v_0..v_n` (ids `0..=n`) and `w_0..w_n` (ids
/// `n+1..=2n+1`) joined by the rungs `v_i w_i`.
pub fn domino(n: usize) -> Graph {
    let w = |i: usize| n + 1 + i;
    let mut g = Graph::new(2 * (n + 1));
    for i in 0..=n {
        g.add_edge(i, w(i)).expect("rung");
        if i < n {
            g.add_edge(i, i + 1).expect("rail");
            g.add_edge(w(i), w(i + 1)).expect("rail");
        }
    }
    g
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpreadReport {
    /// Number of hinges containing each vertex.
    pub per_vertex: Vec<usize>,
    pub max: usize,
}

pub fn spread(g: &Graph) -> Result<SpreadReport> {
    let mut per_vertex = vec![0; g.n()];
    for h in hinges(g)? {
        per_vertex[h.x] += 1;
        per_vertex[h.y] += 1;
    }
    let max = per_vertex.iter().copied().max().unwrap_or(0);
    Ok(SpreadReport { per_vertex, max })
}

/// Longest path, in edges, of the tree as built (bond nodes included).
pub fn tree_diameter(t: &TutteTree) -> usize {
    if t.len() <= 1 {
        return 0;
    }
    let far = |from: usize| -> (usize, usize) {
        let mut dist = vec![usize::MAX; t.len()];
        dist[from] = 0;
        let mut queue = std::collections::VecDeque::from([from]);
        let mut best = (0, from);
        while let Some(u) = queue.pop_front() {
            best = best.max((dist[u], u));
            for w in t.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        best
    };
    let (_, end) = far(0);
    far(end).0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParallelHinges {
    pub count: usize,
    pub hinges: Vec<(Vertex, Vertex)>,
    /// Tree path carrying them.
    pub path: Vec<usize>,
}

fn disjoint(p: &(Vertex, Vertex), q: &(Vertex, Vertex)) -> bool {
    p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1
}

/// Greedy maximum pairwise-disjoint subsequence of a path's hinge sequence.
/// Along a tree path a hinge disjoint from one met earlier is disjoint from
/// everything before that, so taking the first hinge disjoint from the last
/// pick is optimal.
pub fn greedy_disjoint(seq: &[(Vertex, Vertex)]) -> Vec<(Vertex, Vertex)> {
    let mut out: Vec<(Vertex, Vertex)> = Vec::new();
    for h in seq {
        if out.last().is_none_or(|l| disjoint(l, h)) {
            out.push(*h);
        }
    }
    out
}

/// Largest family of pairwise-disjoint hinges lying on one tree path, over
/// all leaf-to-leaf paths.
pub fn max_parallel_hinges(t: &TutteTree) -> ParallelHinges {
    let mut best = ParallelHinges {
        count: 0,
        hinges: Vec::new(),
        path: if t.is_empty() { Vec::new() } else { vec![0] },
    };
    let leaves = t.leaves();
    for (i, &a) in leaves.iter().enumerate() {
        for &b in &leaves[i..] {
            let path = t.path(a, b).expect("tree is connected");
            let picked = greedy_disjoint(&t.hinge_sequence(&path));
            if picked.len() > best.count {
                best = ParallelHinges {
                    count: picked.len(),
                    hinges: picked,
                    path,
                };
            }
        }
    }
    best
}

/// Some leaf-to-leaf path meets every hinge.
pub fn hinges_path_like(t: &TutteTree) -> bool {
    let all: BTreeSet<(Vertex, Vertex)> = t.hinge_labels().into_iter().collect();
    if all.is_empty() {
        return true;
    }
    let leaves = t.leaves();
    leaves.iter().enumerate().any(|(i, &a)| {
        leaves[i..].iter().any(|&b| {
            let seen: BTreeSet<_> = t.hinge_sequence(&t.path(a, b).expect("connected")).into_iter().collect();
            seen == all
        })
    })
}

/// Index of the domino guaranteed as a minor by this many parallel hinges.
pub fn parallel_to_domino_bound(n_parallel: usize) -> Result<usize> {
    if n_parallel < 8 {
        return input(format!("need at least 8 parallel hinges, got {n_parallel}"));
    }
    Ok(n_parallel / 4 - 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsoFinding {
    pub node: usize,
    pub bag: Vec<Vertex>,
    /// Bases of size three, in host ids.
    pub bases: Vec<BTreeSet<Vertex>>,
    /// Witness for the first such base (local torso ids).
    pub witness: Option<MoleculeWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InterfaceFinding {
    pub node: usize,
    pub interface: BTreeSet<Vertex>,
    /// The first base containing the interface.
    pub base: Option<BTreeSet<Vertex>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiameterFinding {
    pub diameter: usize,
    pub spread: usize,
    pub bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "reasons", rename_all = "lowercase")]
pub enum Verdict {
    Consistent,
    Violated(Vec<String>),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Consistent => f.write_str("consistent"),
            Verdict::Violated(r) => write!(f, "violated ({})", r.join("; ")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ent3Report {
    pub torso_findings: Vec<TorsoFinding>,
    pub interface_findings: Vec<InterfaceFinding>,
    pub diameter_finding: DiameterFinding,
    pub verdict: Verdict,
}

impl Ent3Report {
    /// Every 3-connected torso is a 3-molecule.
    pub fn molecules_ok(&self) -> bool {
        self.torso_findings.iter().all(|f| f.witness.is_some())
    }

    /// Every 3-connected torso's interface lies inside one of its bases.
    pub fn interfaces_ok(&self) -> bool {
        self.interface_findings.iter().all(|f| f.base.is_some())
    }

    pub fn diameter_ok(&self) -> bool {
        self.diameter_finding.diameter <= self.diameter_finding.bound
    }

    pub fn is_consistent(&self) -> bool {
        self.verdict == Verdict::Consistent
    }
}

/// Checks the three necessary conditions for entanglement 3 on the Tutte
/// tree of `g`: each 3-connected torso is a 3-molecule, its interface lies in
/// one base, and the tree diameter is at most `128 * spread`.
pub fn check_ent3(g: &Graph) -> Result<Ent3Report> {
    let t = build_tutte_tree(g)?;
    check_ent3_tree(g, &t)
}

pub fn check_ent3_tree(g: &Graph, t: &TutteTree) -> Result<Ent3Report> {
    let mut torso_findings = Vec::new();
    let mut interface_findings = Vec::new();
    let mut reasons = Vec::new();
    for (i, node) in t.nodes.iter().enumerate() {
        if node.kind != TorsoKind::ThreeConnected {
            continue;
        }
        let torso = node.torso.simple();
        let local_bases: Vec<BTreeSet<Vertex>> = bases(&torso).into_iter().filter(|b| b.len() == 3).collect();
        let host_bases: Vec<BTreeSet<Vertex>> = local_bases
            .iter()
            .map(|b| b.iter().map(|&v| node.bag[v]).collect())
            .collect();
        let witness = all_witnesses(&torso).into_iter().find(|w| w.spec.k == 3);
        if witness.is_none() {
            reasons.push(format!("torso t{i} is not a 3-molecule"));
        }
        let interface = t.interface(i);
        let base = host_bases.iter().find(|b| interface.is_subset(b)).cloned();
        if base.is_none() {
            reasons.push(format!("interface of t{i} lies in no base"));
        }
        torso_findings.push(TorsoFinding {
            node: i,
            bag: node.bag.clone(),
            bases: host_bases,
            witness,
        });
        interface_findings.push(InterfaceFinding {
            node: i,
            interface,
            base,
        });
    }
    let spread = spread(g)?.max;
    let diameter_finding = DiameterFinding {
        diameter: tree_diameter(t),
        spread,
        bound: DIAMETER_FACTOR * spread,
    };
    if diameter_finding.diameter > diameter_finding.bound {
        reasons.push(format!(
            "tree diameter {} exceeds {}",
            diameter_finding.diameter, diameter_finding.bound
        ));
    }
    let verdict = if reasons.is_empty() {
        Verdict::Consistent
    } else {
        Verdict::Violated(reasons)
    };
    Ok(Ent3Report {
        torso_findings,
        interface_findings,
        diameter_finding,
        verdict,
    })
}

/// Folds `parts` into a chain: each part's edge `(0, 1)` is glued onto the
/// lexicographically last edge (by larger endpoint, then smaller) of the
/// graph built so far.
pub fn twosum_chain(parts: &[Graph]) -> Result<Graph> {
    let Some(first) = parts.first() else {
        return input("empty chain");
    };
    let mut acc = first.without_labels();
    for p in &parts[1..] {
        let e = acc
            .edges()
            .max_by_key(|&(u, v)| (v, u))
            .ok_or_else(|| crate::Error::Input("chain part without edges".into()))?;
        acc = two_sum(&acc, e, p, (0, 1))?;
    }
    Ok(acc)
}

/// A triangle with a 4-clique 2-summed onto each of its edges.
pub fn star_of_k4s() -> Graph {
    let mut g = cycle(3);
    for e in [(0, 1), (1, 2), (0, 2)] {
        g = two_sum(&g, e, &complete(4), (0, 1)).expect("triangle edges exist");
    }
    g
}

/// `g` with edge `e` subdivided, i.e. a triangle 2-summed onto `e`.
pub fn triangle_on_edge(g: &Graph, e: Edge) -> Result<Graph> {
    two_sum(g, e, &cycle(3), (0, 1))
}

/// Edges of the molecule lying in no minimum vertex cover.
pub fn cover_avoiding_edges(g: &Graph) -> Result<Vec<Edge>> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if !covers_containing(g, &BTreeSet::from([u, v]))? {
            out.push((u, v));
        }
    }
    Ok(out)
}

/// For every legal 3-molecule with `h <= max_h`, each graph obtained by
/// subdividing an edge from a base vertex to an apex that lies in no minimum
/// cover. Returns `(spec, edge, graph)`.
pub fn cover_avoiding_family(max_h: usize) -> Result<Vec<(MoleculeSpec, Edge, Graph)>> {
    let mut out = Vec::new();
    for spec in crate::molecules::legal_specs(3, max_h) {
        let m = make_molecule(&spec)?;
        for (u, v) in cover_avoiding_edges(&m)? {
            if u < 3 && v >= 3 {
                out.push((spec.clone(), (u, v), triangle_on_edge(&m, (u, v))?));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::fig1;
    use crate::iso::is_isomorphic_small;
    use crate::minor::has_minor_small;

    #[test]
    fn domino_shapes() {
        assert_eq!(domino(0), complete(2));
        assert!(is_isomorphic_small(&domino(1), &cycle(4)).unwrap());
        let d14 = domino(14);
        assert_eq!((d14.n(), d14.edge_count()), (30, 43));
    }

    #[test]
    fn spread_examples() {
        assert_eq!(spread(&domino(5)).unwrap().max, 1);
        assert_eq!(spread(&fig1()).unwrap().max, 1);
        assert!(spread(&cycle(6)).unwrap().per_vertex.iter().all(|&d| d == 0));
    }

    #[test]
    fn diameters() {
        assert_eq!(tree_diameter(&build_tutte_tree(&complete(4)).unwrap()), 0);
        assert_eq!(tree_diameter(&build_tutte_tree(&fig1()).unwrap()), 4);
        // D_n: n cycles and n - 1 bonds in a row
        for n in 2..6 {
            assert_eq!(tree_diameter(&build_tutte_tree(&domino(n)).unwrap()), 2 * n - 2);
        }
    }

    fn brute_max_disjoint(seq: &[(Vertex, Vertex)]) -> usize {
        (0u32..1 << seq.len())
            .filter(|m| {
                let picked: Vec<_> = (0..seq.len()).filter(|i| m & (1 << i) != 0).map(|i| seq[i]).collect();
                picked
                    .iter()
                    .enumerate()
                    .all(|(i, p)| picked[i + 1..].iter().all(|q| disjoint(p, q)))
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn parallel_hinges_of_dominoes() {
        for n in 2..=8 {
            let t = build_tutte_tree(&domino(n)).unwrap();
            assert_eq!(max_parallel_hinges(&t).count, n - 1);
        }
        assert_eq!(max_parallel_hinges(&build_tutte_tree(&cycle(7)).unwrap()).count, 0);
    }

    #[test]
    fn greedy_matches_brute_force() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(21);
        let mut graphs = vec![fig1(), star_of_k4s(), domino(4)];
        for i in 0..40 {
            graphs.push(crate::generators::random_two_connected(6 + i % 7, i % 4, &mut rng).unwrap());
        }
        for g in graphs {
            let t = build_tutte_tree(&g).unwrap();
            if t.len() > 12 {
                continue;
            }
            for a in 0..t.len() {
                for b in 0..t.len() {
                    let seq = t.hinge_sequence(&t.path(a, b).unwrap());
                    assert_eq!(greedy_disjoint(&seq).len(), brute_max_disjoint(&seq));
                }
            }
        }
    }

    #[test]
    fn path_likeness() {
        assert!(hinges_path_like(&build_tutte_tree(&domino(6)).unwrap()));
        assert!(hinges_path_like(&build_tutte_tree(&fig1()).unwrap()));
        assert!(!hinges_path_like(&build_tutte_tree(&star_of_k4s()).unwrap()));
    }

    #[test]
    fn domino_bounds() {
        assert_eq!(parallel_to_domino_bound(8).unwrap(), 1);
        assert_eq!(parallel_to_domino_bound(60).unwrap(), 14);
        assert!(parallel_to_domino_bound(7).is_err());
        let d9 = domino(9);
        let t = build_tutte_tree(&d9).unwrap();
        let p = max_parallel_hinges(&t).count;
        assert_eq!(p, 8);
        let k = parallel_to_domino_bound(p).unwrap();
        assert!(has_minor_small(&domino(2), &domino(k)).unwrap());
    }

    #[test]
    fn fig1_is_consistent() {
        let r = check_ent3(&fig1()).unwrap();
        assert!(r.is_consistent());
        assert!(r.torso_findings.is_empty());
    }

    #[test]
    fn cover_avoiding_sum_fails_interface() {
        // K_{3,4}: the base is the only minimum cover
        let m = make_molecule(&MoleculeSpec::new(3, vec![], 4)).unwrap();
        assert!(cover_avoiding_edges(&m).unwrap().contains(&(0, 3)));
        let g = triangle_on_edge(&m, (0, 3)).unwrap();
        let r = check_ent3(&g).unwrap();
        assert!(r.molecules_ok());
        assert!(!r.interfaces_ok());
        assert!(!r.is_consistent());
    }

    #[test]
    fn chains() {
        let g = twosum_chain(&[complete(4), complete(4), complete(4)]).unwrap();
        assert_eq!(g.n(), 8);
        let t = build_tutte_tree(&g).unwrap();
        assert_eq!(t.len(), 3);
        assert!(hinges_path_like(&t));
    }
}
