//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; the process exits non-zero if
//! any criterion fails.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use entangle::analysis::{check_ent3, cover_avoiding_family, domino, hinges_path_like, max_parallel_hinges};
use entangle::connectivity::{effective_connectivity, is_k_connected};
use entangle::cyclicity::{cyclicity_digraph, cyclicity_undirected, cyclicity_value};
use entangle::game::{entanglement, entanglement_value, solve, verify_strategy, Player, Rules};
use entangle::generators::{all_connected_graphs, all_graphs, cycle, fig1, random_connected};
use entangle::iso::is_isomorphic_small;
use entangle::molecules::{classify_ambiguity_3, legal_specs, make_molecule, Ambiguity, MoleculeSpec};
use entangle::tutte::{build_tutte_tree, hinge_at, hinges, recompose, two_sum, TorsoKind};
use entangle::{Graph, Vertex};

// ---- independent oracles -------------------------------------------------

fn subsets(n: usize) -> impl Iterator<Item = u32> {
    0u32..(1u32 << n)
}

fn members(n: usize, mask: u32) -> BTreeSet<Vertex> {
    (0..n).filter(|v| mask & (1 << v) != 0).collect()
}

/// Smallest vertex cover by exhaustive subset search, with all minimum ones.
fn brute_covers(g: &Graph) -> (usize, BTreeSet<BTreeSet<Vertex>>) {
    let n = g.n();
    let mut best = usize::MAX;
    let mut all = BTreeSet::new();
    for m in subsets(n) {
        let size = m.count_ones() as usize;
        if size > best || !g.edges().all(|(u, v)| m & (1 << u) != 0 || m & (1 << v) != 0) {
            continue;
        }
        if size < best {
            best = size;
            all.clear();
        }
        all.insert(members(n, m));
    }
    (best, all)
}

/// Vertex connectivity by searching for the smallest separating set; a
/// clique on `n` vertices counts as `n - 1`.
fn brute_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    (0..n)
        .find(|&s| {
            subsets(n)
                .filter(|m| m.count_ones() as usize == s)
                .any(|m| g.components_avoiding(&members(n, m)).len() >= 2)
        })
        .expect("a non-complete graph has a separator")
}

/// 3-bases by definition: `V - S` is a non-empty independent set of vertices
/// adjacent to all of `S`, with enough of them for the legality bound.
fn brute_three_bases(g: &Graph) -> usize {
    let n = g.n();
    subsets(n)
        .filter(|m| m.count_ones() == 3)
        .filter(|&m| {
            let s = members(n, m);
            let rest: Vec<Vertex> = (0..n).filter(|v| !s.contains(v)).collect();
            let apex_ok = rest.iter().all(|&a| s.iter().all(|&b| g.has_edge(a, b)))
                && rest.iter().all(|&a| rest.iter().all(|&b| !g.has_edge(a, b)));
            let inside = s.iter().flat_map(|&a| s.iter().map(move |&b| (a, b))).filter(|&(a, b)| a < b && g.has_edge(a, b)).count();
            // base connectivity with the clique convention: K3 -> 2, P3 -> 1, else 0
            let kp = match inside {
                3 => 2,
                2 => 1,
                _ => 0,
            };
            apex_ok && !rest.is_empty() && rest.len() + kp >= 3
        })
        .count()
}

/// Cops win with `k` cops, by naive fixed-point iteration over all positions
/// `(thief vertex, cop mask, mover)`. Cops may skip, add a cop on Thief's
/// vertex while fewer than `k` are placed, or move one cop there.
fn naive_cops_win(g: &Graph, k: usize) -> bool {
    let n = g.n();
    let masks: Vec<u32> = subsets(n).filter(|m| m.count_ones() as usize <= k).collect();
    let idx = |v: usize, m: u32, cops_turn: bool| (v, m, cops_turn);
    let mut win: std::collections::HashSet<(usize, u32, bool)> = std::collections::HashSet::new();
    loop {
        let before = win.len();
        for v in 0..n {
            for &m in &masks {
                if !win.contains(&idx(v, m, false)) && g.neighbors(v).filter(|&w| m & (1 << w) == 0).all(|w| win.contains(&idx(w, m, true))) {
                    win.insert(idx(v, m, false));
                }
                if !win.contains(&idx(v, m, true)) {
                    let mut options = vec![m];
                    if (m | 1 << v).count_ones() as usize <= k {
                        options.push(m | 1 << v);
                    }
                    for x in 0..n {
                        if m & (1 << x) != 0 {
                            options.push((m & !(1 << x)) | 1 << v);
                        }
                    }
                    if options.iter().any(|&c| win.contains(&idx(v, c, false))) {
                        win.insert(idx(v, m, true));
                    }
                }
            }
        }
        if win.len() == before {
            return (0..n).all(|v| win.contains(&idx(v, 0, true)));
        }
    }
}

// ---- corpora -------------------------------------------------------------

/// All connected graphs up to 6 vertices plus 200 random connected graphs on
/// 7 or 8 vertices.
fn game_corpus() -> Vec<Graph> {
    let mut out: Vec<Graph> = (1..=6).flat_map(all_connected_graphs).collect();
    let mut rng = StdRng::seed_from_u64(0xE47);
    for i in 0..200 {
        let n = 7 + i % 2;
        let p = rng.gen_range(0.25..0.7);
        out.push(random_connected(n, p, &mut rng));
    }
    out
}

// ---- criteria ------------------------------------------------------------

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn c1_domino_14() -> Outcome {
    let d = domino(14).to_digraph();
    let t3 = solve(&d, 3, Rules::Standard).expect("k=3 fits the budget");
    let t4 = solve(&d, 4, Rules::Standard).expect("k=4 fits the budget");
    let verified = verify_strategy(&d, 3, Rules::Standard, &t3).is_ok() && verify_strategy(&d, 4, Rules::Standard, &t4).is_ok();
    outcome(
        t3.winner() == Player::Thief && t4.winner() == Player::Cops && verified,
        format!(
            "k=3 {}, k=4 {}, strategies verified {verified}, {} positions at k=4",
            t3.winner(),
            t4.winner(),
            t4.position_count()
        ),
    )
}

fn c2_molecule_triple() -> Outcome {
    let specs = legal_specs(3, 4);
    let mut bad = Vec::new();
    let mut shapes = BTreeSet::new();
    for spec in &specs {
        let g = make_molecule(spec).expect("legal spec");
        shapes.insert(spec.base_edges.len());
        let kappa = effective_connectivity(&g);
        let cycl = cyclicity_value(&g).expect("small");
        let ent = entanglement_value(&g).expect("small");
        if (kappa, cycl, ent) != (3, 3, 3) || brute_connectivity(&g) != 3 || brute_covers(&g).0 != 3 {
            bad.push(format!("b={:?} h={}: ({kappa},{cycl},{ent})", spec.base_edges, spec.h));
        }
    }
    outcome(
        bad.is_empty() && shapes == BTreeSet::from([0, 1, 2, 3]),
        format!("{} legal specs, base sizes {shapes:?}, mismatches {bad:?}", specs.len()),
    )
}

fn c3_fig1() -> Outcome {
    let g = fig1();
    let v = |name: &str| g.vertex_named(name).expect("labelled");
    let pair = |a: &str, b: &str| (v(a).min(v(b)), v(a).max(v(b)));
    let found: BTreeSet<_> = hinges(&g).expect("2-connected").iter().map(|h| h.pair()).collect();
    let expected = BTreeSet::from([pair("v1", "v2"), pair("v3", "v4"), pair("v5", "v6"), pair("v8", "v9")]);
    let hinges_ok = found == expected;
    let v6v8_rejected = hinge_at(&g, v("v6"), v("v8")).is_none();
    let t = build_tutte_tree(&g).expect("decomposes");
    let cycles: Vec<usize> = t.nodes.iter().filter(|n| n.kind == TorsoKind::Cycle).map(|n| n.bag.len()).collect();
    let bonds = t.nodes.iter().filter(|n| n.kind == TorsoKind::Bond(3)).count();
    let torsos_ok = t.len() == 6 && cycles.len() == 4 && cycles.contains(&3) && bonds == 2;
    let back = recompose(&t).expect("recomposes");
    let iso_ok = is_isomorphic_small(&back, &g.without_labels()).expect("small");
    let names = |s: &BTreeSet<(Vertex, Vertex)>| {
        s.iter()
            .map(|&(x, y)| format!("{{{},{}}}", g.name(x), g.name(y)))
            .collect::<Vec<_>>()
            .join(" ")
    };
    outcome(
        hinges_ok && v6v8_rejected && torsos_ok && iso_ok,
        format!(
            "hinges found [{}] expected [{}]; {{v6,v8}} rejected {v6v8_rejected}; {} torsos ({} cycles, {bonds} 3-bonds); recompose isomorphic {iso_ok}",
            names(&found),
            names(&expected),
            t.len(),
            cycles.len()
        ),
    )
}

fn c4_ambiguity() -> Outcome {
    let specs = legal_specs(3, 5);
    let expected = [(3, 1), (2, 2), (0, 3)];
    let mut bad = Vec::new();
    for spec in &specs {
        let g = make_molecule(spec).expect("legal");
        let shape = (spec.base_edges.len(), spec.h);
        let ambiguous = brute_three_bases(&g) >= 2;
        let tag = classify_ambiguity_3(&g).expect("3-molecule");
        if ambiguous != expected.contains(&shape) || tag.is_ambiguous() != ambiguous || tag != Ambiguity::from_shape(shape.0, shape.1) {
            bad.push(format!("{shape:?}"));
        }
    }
    outcome(bad.is_empty(), format!("{} legal specs, mismatches {bad:?}", specs.len()))
}

fn c5_rule_equivalence(corpus: &[Graph]) -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for (i, g) in corpus.iter().enumerate() {
        let d = g.to_digraph();
        for k in 0..=4.min(g.n()) {
            let a = solve(&d, k, Rules::Standard).expect("small").winner();
            let b = solve(&d, k, Rules::Generalized).expect("small").winner();
            checked += 1;
            if a != b {
                bad.push((i, k));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{} graphs, {checked} (graph, k) games, disagreements {bad:?}", corpus.len()),
    )
}

fn c6_sandwich_collapse(corpus: &[Graph]) -> Outcome {
    let (mut sandwich_bad, mut collapse_bad, mut collapse_cases) = (Vec::new(), Vec::new(), 0);
    for (i, g) in corpus.iter().enumerate() {
        let k = effective_connectivity(g);
        if g.n() < k + 1 {
            continue;
        }
        let ent = entanglement_value(g).expect("small");
        let cycl = cyclicity_value(g).expect("small");
        if !(k <= ent && ent <= cycl) {
            sandwich_bad.push(i);
        }
        if ent == k {
            collapse_cases += 1;
            if cycl != ent {
                collapse_bad.push((i, k, ent, cycl));
            }
        }
    }
    outcome(
        sandwich_bad.is_empty() && collapse_bad.is_empty(),
        format!(
            "{} graphs; sandwich violations {sandwich_bad:?}; {collapse_cases} with Ent = connectivity, collapse violations {collapse_bad:?}",
            corpus.len()
        ),
    )
}

fn c7_minor_closure() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5EED);
    let mut bad = Vec::new();
    let mut sampled = 0;
    while sampled < 500 {
        let n = rng.gen_range(2..=7);
        let g = entangle::generators::random_gnp(n, rng.gen_range(0.2..0.8), &mut rng);
        let Some(&op) = g.minor_ops().choose(&mut rng) else {
            continue;
        };
        let h = g.apply(op).expect("op from minor_ops");
        sampled += 1;
        let (eg, eh) = (entanglement_value(&g).expect("small"), entanglement_value(&h).expect("small"));
        if eh > eg {
            bad.push(format!("{op:?}: {eg} -> {eh}"));
        }
    }
    outcome(bad.is_empty(), format!("{sampled} (graph, op) pairs, increases {bad:?}"))
}

fn c8_necessity() -> Outcome {
    let started = Instant::now();
    let mut ent3 = 0;
    let mut violated = Vec::new();
    let mut oracle_disagrees = 0;
    for n in 3..=8 {
        for g in all_graphs(n) {
            if !is_k_connected(&g, 2) || entanglement_value(&g).expect("small") != 3 {
                continue;
            }
            ent3 += 1;
            if !check_ent3(&g).expect("2-connected").is_consistent() {
                if g.n() <= 6 && !(naive_cops_win(&g, 3) && !naive_cops_win(&g, 2)) {
                    oracle_disagrees += 1;
                }
                violated.push(entangle::io::emit_edge_list(&g).replace('\n', " "));
            }
        }
    }
    let family = cover_avoiding_family(4).expect("family builds");
    let mut family_bad = Vec::new();
    for (spec, e, g) in &family {
        let r = check_ent3(g).expect("2-connected");
        let ent = entanglement(g, Rules::Standard).expect("small");
        if r.interfaces_ok() || ent.value < 4 {
            family_bad.push(format!("b={:?} h={} edge {e:?}: cond2 holds {} ent {}", spec.base_edges, spec.h, r.interfaces_ok(), ent.value));
        }
    }
    outcome(
        violated.is_empty() && !family.is_empty() && family_bad.is_empty(),
        format!(
            "{ent3} 2-connected graphs with Ent = 3 on <= 8 vertices, {} violated verdicts (naive solver disagrees on {oracle_disagrees} of those with <= 6 vertices), first {:?}; {} cover-avoiding sums, failures {family_bad:?} ({:.1?})",
            violated.len(),
            violated.first(),
            family.len(),
            started.elapsed()
        ),
    )
}

/// Random chains of cycles and 3-molecules glued by 2-sums, each new piece
/// attached to the edge the previous piece left free. Molecules are glued
/// along base edges only, so interfaces stay inside a base.
fn path_like_chain(rng: &mut StdRng) -> Graph {
    let pieces = rng.gen_range(2..=3);
    let mut g = Graph::new(0);
    let mut exit = (0, 0);
    for i in 0..pieces {
        let (piece, entry, out) = if rng.gen_bool(0.5) {
            let m = rng.gen_range(3..=5);
            // entry (0,1), exit on the far side of the cycle
            (cycle(m), (0, 1), (m / 2, m / 2 + 1))
        } else {
            let base_edges = match rng.gen_range(0..3) {
                0 => vec![(0, 1), (1, 2)],
                1 => vec![(0, 1), (0, 2), (1, 2)],
                _ => vec![(0, 1)],
            };
            // smallest legal apex count: 3 - k' for base connectivity k'
            let least = match base_edges.len() {
                3 => 1,
                2 => 2,
                _ => 3,
            };
            let h = rng.gen_range(least..=3);
            let two = base_edges.len() >= 2;
            let spec = MoleculeSpec::new(3, base_edges, h);
            (make_molecule(&spec).expect("legal"), (0, 1), if two { (1, 2) } else { (0, 1) })
        };
        if i == 0 {
            g = piece;
            exit = out;
            continue;
        }
        let old_n = g.n();
        let next = two_sum(&g, exit, &piece, entry).expect("edges exist");
        // ids of the new piece in the sum: entry ends map onto the exit edge
        let mut map = vec![0; piece.n()];
        map[entry.0] = exit.0;
        map[entry.1] = exit.1;
        for (j, v) in (0..piece.n()).filter(|&v| v != entry.0 && v != entry.1).enumerate() {
            map[v] = old_n + j;
        }
        exit = (map[out.0], map[out.1]);
        if !next.has_edge(exit.0, exit.1) {
            // the piece had no second free edge; stop growing
            return next;
        }
        g = next;
    }
    g
}

fn c9_path_like() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xBA7);
    let mut accepted = 0;
    let mut tried = 0;
    let mut bad = Vec::new();
    while accepted < 50 && tried < 5000 {
        tried += 1;
        let g = path_like_chain(&mut rng);
        let Ok(t) = build_tutte_tree(&g) else {
            continue;
        };
        let r = check_ent3(&g).expect("2-connected");
        if !(r.molecules_ok() && r.interfaces_ok() && hinges_path_like(&t)) {
            continue;
        }
        accepted += 1;
        let ent = entanglement_value(&g).expect("small");
        if ent > 4 {
            bad.push((g.n(), ent));
        }
    }
    outcome(
        accepted == 50 && bad.is_empty(),
        format!("{accepted} graphs accepted out of {tried} generated, Ent > 4 in {bad:?}"),
    )
}

fn c10_parallel_and_fvs() -> Outcome {
    let counts: Vec<usize> = (2..=10)
        .map(|n| max_parallel_hinges(&build_tutte_tree(&domino(n)).expect("2-connected")).count)
        .collect();
    let dominoes_ok = counts.iter().zip(2..).all(|(&c, n): (&usize, usize)| c == n - 1);
    let mut rng = StdRng::seed_from_u64(0xF75);
    let mut bad = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=9);
        let g = entangle::generators::random_gnp(n, rng.gen_range(0.1..0.7), &mut rng);
        let fvs = cyclicity_digraph(&g.to_digraph()).expect("small");
        let vc = cyclicity_undirected(&g).expect("small");
        let (size, oracle) = brute_covers(&g);
        let fvs_sets: BTreeSet<_> = fvs.witnesses.iter().cloned().collect();
        let vc_sets: BTreeSet<_> = vc.witnesses.iter().cloned().collect();
        if fvs.size != size || vc.size != size || fvs_sets != oracle || vc_sets != oracle {
            bad += 1;
        }
    }
    outcome(
        dominoes_ok && bad == 0,
        format!("parallel hinges of D_2..D_10 {counts:?}; FVS/vertex-cover mismatches {bad} of 200"),
    )
}

fn main() {
    let corpus = game_corpus();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("D_14 entanglement is exactly 4", Box::new(c1_domino_14)),
        ("3-molecules: connectivity = cyclicity = entanglement = 3", Box::new(c2_molecule_triple)),
        ("worked example hinges, torsos and recomposition", Box::new(c3_fig1)),
        ("ambiguous 3-molecules are exactly the three shapes", Box::new(c4_ambiguity)),
        ("standard and generalized rules agree", Box::new(|| c5_rule_equivalence(&corpus))),
        ("connectivity <= Ent <= Cycl, and Ent = connectivity forces Cycl = Ent", Box::new(|| c6_sandwich_collapse(&corpus))),
        ("entanglement never increases under a minor operation", Box::new(c7_minor_closure)),
        ("necessary conditions for Ent = 3", Box::new(c8_necessity)),
        ("path-like hinges give Ent <= 4", Box::new(c9_path_like)),
        ("parallel hinges of dominoes; FVS equals vertex cover", Box::new(c10_parallel_and_fvs)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let o = check();
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {} ({}) [{:.1?}]",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            name,
            o.detail,
            started.elapsed()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
