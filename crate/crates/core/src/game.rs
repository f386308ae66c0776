//! The cops-and-thief entanglement game, solved exactly on its full arena.
//!
//! Positions `(v, C, mover)` are interned as integers: cop sets of size `<= k`
//! are ranked in colexicographic order within each size class, and the id of
//! a position is `((rank(C) * n + v) << 1) | mover`. One extra virtual root
//! owned by Thief models the initial choice of vertex.
//!
//! Cops' winning region is the attractor of the dead Thief positions,
//! computed by backward BFS over an explicit predecessor table with
//! per-position successor counters for the Thief-owned positions.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, Vertex};

/// Default limit on the number of arena positions for a single solve.
pub const DEFAULT_ARENA_BUDGET: u64 = 16_000_000;

/// Largest vertex count the solver accepts (cop sets are 64-bit masks).
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rules {
    /// Skip, place a new cop on Thief's vertex, or move one placed cop there.
    Standard,
    /// Retire any subset of the placed cops, optionally also putting one on
    /// Thief's vertex.
    Generalized,
}

impl fmt::Display for Rules {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rules::Standard => "standard",
            Rules::Generalized => "generalized",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Player {
    Cops,
    Thief,
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Cops => "cops",
            Player::Thief => "thief",
        })
    }
}

/// A set of vertices occupied by cops, as a bitmask over ids `0..64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CopSet(pub u64);

impl CopSet {
    pub const EMPTY: CopSet = CopSet(0);

    pub fn contains(self, v: Vertex) -> bool {
        self.0 & (1 << v) != 0
    }

    pub fn with(self, v: Vertex) -> CopSet {
        CopSet(self.0 | 1 << v)
    }

    pub fn without(self, v: Vertex) -> CopSet {
        CopSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Vertex> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<Vertex> for CopSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        CopSet(iter.into_iter().fold(0, |m, v| m | 1 << v))
    }
}

impl fmt::Debug for CopSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for CopSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for CopSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<Vertex> = Vec::deserialize(d)?;
        if let Some(bad) = v.iter().find(|&&x| x >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("cop on vertex {bad} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

/// One node of the arena: Thief's vertex, the occupied vertices, whose turn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GamePosition {
    pub vertex: Vertex,
    pub cops: CopSet,
    pub mover: Player,
}

impl GamePosition {
    pub fn new(vertex: Vertex, cops: CopSet, mover: Player) -> Self {
        GamePosition { vertex, cops, mover }
    }
}

/// Cop sets reachable in one Cops move from `cops` when Thief stands on `v`,
/// sorted and without duplicates.
pub fn cop_set_moves(cops: CopSet, v: Vertex, k: usize, rules: Rules) -> Vec<CopSet> {
    let mut out = Vec::new();
    match rules {
        Rules::Standard => {
            out.push(cops);
            let placed = cops.with(v);
            if placed.len() <= k {
                out.push(placed);
            }
            for x in cops.iter() {
                out.push(cops.without(x).with(v));
            }
        }
        Rules::Generalized => {
            // every subset of `cops`, and every such subset plus v
            let full = cops.0;
            let mut sub = full;
            loop {
                let c = CopSet(sub);
                out.push(c);
                if c.with(v).len() <= k {
                    out.push(c.with(v));
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & full;
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Cops' successors of a Cops position.
pub fn cops_moves(p: &GamePosition, k: usize, rules: Rules) -> Vec<GamePosition> {
    debug_assert_eq!(p.mover, Player::Cops);
    cop_set_moves(p.cops, p.vertex, k, rules)
        .into_iter()
        .map(|c| GamePosition::new(p.vertex, c, Player::Thief))
        .collect()
}

/// Thief's successors of a Thief position; empty means Thief is caught.
pub fn thief_moves(p: &GamePosition, g: &Digraph) -> Vec<GamePosition> {
    debug_assert_eq!(p.mover, Player::Thief);
    g.successors(p.vertex)
        .filter(|&w| !p.cops.contains(w))
        .map(|w| GamePosition::new(w, p.cops, Player::Cops))
        .collect()
}

/// Number of positions in the arena of an `n`-vertex digraph with `k` cops:
/// `n * sum_{i<=k} C(n,i) * 2` (the virtual root is not counted).
pub fn arena_size(n: usize, k: usize) -> u64 {
    let mut sets: u128 = 0;
    let mut c: u128 = 1;
    for i in 0..=k.min(n) {
        sets += c;
        c = c * (n - i) as u128 / (i + 1) as u128;
    }
    let total = sets * n as u128 * 2;
    total.min(u64::MAX as u128) as u64
}

/// Position indexing for one `(digraph, k, rules)` triple.
#[derive(Clone, Debug)]
struct Arena {
    n: usize,
    k: usize,
    rules: Rules,
    out: Vec<u64>,
    sets: Vec<u64>,
    offsets: Vec<usize>,
    binom: Vec<Vec<u64>>,
}

const NONE: u32 = u32::MAX;

impl Arena {
    fn new(g: &Digraph, k: usize, rules: Rules) -> Self {
        let n = g.n();
        let k = k.min(n);
        let out = (0..n)
            .map(|v| g.successors(v).fold(0u64, |m, w| m | 1 << w))
            .collect();
        let mut binom = vec![vec![0u64; k + 2]; n + 1];
        for (a, row) in binom.iter_mut().enumerate() {
            row[0] = 1;
            for b in 1..=k + 1 {
                row[b] = if a == 0 {
                    0
                } else {
                    // C(a,b) = C(a-1,b-1) * a / b, exact in u128
                    (row_val(a - 1, b - 1) * a as u128 / b as u128) as u64
                };
            }
        }
        fn row_val(a: usize, b: usize) -> u128 {
            let mut c: u128 = 1;
            for i in 0..b {
                if i >= a {
                    return 0;
                }
                c = c * (a - i) as u128 / (i + 1) as u128;
            }
            c
        }
        let mut sets = Vec::new();
        let mut offsets = Vec::with_capacity(k + 2);
        let limit: u128 = 1u128 << n;
        for size in 0..=k {
            offsets.push(sets.len());
            if size == 0 {
                sets.push(0);
                continue;
            }
            // Gosper's hack: same-popcount masks in increasing (colex) order
            let mut m: u128 = (1u128 << size) - 1;
            while m < limit {
                sets.push(m as u64);
                let c = m & m.wrapping_neg();
                let r = m + c;
                m = (((r ^ m) >> 2) / c) | r;
            }
        }
        offsets.push(sets.len());
        Arena {
            n,
            k,
            rules,
            out,
            sets,
            offsets,
            binom,
        }
    }

    fn positions(&self) -> usize {
        self.sets.len() * self.n * 2
    }

    fn root(&self) -> usize {
        self.positions()
    }

    fn set_rank(&self, set: u64) -> usize {
        let size = set.count_ones() as usize;
        let mut r = self.offsets[size];
        let mut bits = set;
        let mut i = 1;
        while bits != 0 {
            let c = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            r += self.binom[c][i] as usize;
            i += 1;
        }
        r
    }

    fn id(&self, v: Vertex, set: u64, mover: Player) -> usize {
        ((self.set_rank(set) * self.n + v) << 1) | (mover == Player::Thief) as usize
    }

    fn id_of(&self, p: &GamePosition) -> Option<usize> {
        if p.vertex >= self.n || p.cops.len() > self.k || p.cops.0 >> self.n != 0 {
            return None;
        }
        Some(self.id(p.vertex, p.cops.0, p.mover))
    }

    fn decode(&self, id: usize) -> GamePosition {
        let mover = if id & 1 == 1 { Player::Thief } else { Player::Cops };
        let rest = id >> 1;
        GamePosition::new(rest % self.n, CopSet(self.sets[rest / self.n]), mover)
    }

    /// Owner of a node: Thief owns Thief positions and the root.
    fn thief_owned(&self, id: usize) -> bool {
        id == self.root() || id & 1 == 1
    }

    fn successors(&self, id: usize, buf: &mut Vec<u32>) {
        buf.clear();
        if id == self.root() {
            buf.extend((0..self.n).map(|v| self.id(v, 0, Player::Cops) as u32));
            return;
        }
        let rest = id >> 1;
        let v = rest % self.n;
        let set = self.sets[rest / self.n];
        if id & 1 == 0 {
            for c in cop_set_moves(CopSet(set), v, self.k, self.rules) {
                buf.push(self.id(v, c.0, Player::Thief) as u32);
            }
            buf.sort_unstable();
        } else {
            let set_idx = rest / self.n;
            let mut free = self.out[v] & !set;
            while free != 0 {
                let w = free.trailing_zeros() as usize;
                free &= free - 1;
                buf.push(((set_idx * self.n + w) << 1) as u32);
            }
        }
    }
}

/// Result of solving the arena for one cop budget.
#[derive(Clone, Debug)]
pub struct ArenaSolution {
    pub k: usize,
    pub rules: Rules,
    arena: Arena,
    cops_win: Vec<bool>,
    rank: Vec<u32>,
    strategy: Vec<u32>,
}

/// Where Thief starts: the virtual root, or an actual position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Node {
    Root,
    Position(GamePosition),
}

impl ArenaSolution {
    pub fn winner(&self) -> Player {
        if self.cops_win[self.arena.root()] {
            Player::Cops
        } else {
            Player::Thief
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.arena.n
    }

    /// Positions in the arena, excluding the virtual root.
    pub fn position_count(&self) -> usize {
        self.arena.positions()
    }

    pub fn cops_win_count(&self) -> usize {
        self.cops_win[..self.arena.positions()].iter().filter(|w| **w).count()
    }

    pub fn is_cops_won(&self, p: &GamePosition) -> Option<bool> {
        self.arena.id_of(p).map(|id| self.cops_win[id])
    }

    /// Attractor rank (number of BFS layers from the dead Thief positions).
    pub fn rank(&self, p: &GamePosition) -> Option<u32> {
        let id = self.arena.id_of(p)?;
        (self.rank[id] != NONE).then_some(self.rank[id])
    }

    /// The winner's chosen successor at `p`, if `p` belongs to a winning
    /// region of its owner.
    pub fn strategy_at(&self, p: &GamePosition) -> Option<GamePosition> {
        let id = self.arena.id_of(p)?;
        let s = self.strategy[id];
        (s != NONE).then(|| self.arena.decode(s as usize))
    }

    /// Thief's winning choice of start vertex, when Thief wins.
    pub fn thief_start(&self) -> Option<Vertex> {
        let s = self.strategy[self.arena.root()];
        (s != NONE).then(|| self.arena.decode(s as usize).vertex)
    }

    pub fn successors_of(&self, p: &GamePosition) -> Vec<GamePosition> {
        let Some(id) = self.arena.id_of(p) else {
            return Vec::new();
        };
        let mut buf = Vec::new();
        self.arena.successors(id, &mut buf);
        buf.iter().map(|&s| self.arena.decode(s as usize)).collect()
    }

    /// The winner's strategy restricted to positions reachable from the
    /// initial positions when the winner follows it and the loser plays
    /// anything. Sorted by position.
    pub fn reachable_strategy(&self) -> Vec<(GamePosition, GamePosition)> {
        let winner_is_cops = self.winner() == Player::Cops;
        let mut seen = vec![false; self.cops_win.len()];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        let root = self.arena.root();
        seen[root] = true;
        queue.push_back(root);
        let mut buf = Vec::new();
        while let Some(id) = queue.pop_front() {
            let winner_moves = self.arena.thief_owned(id) != winner_is_cops;
            if winner_moves {
                let s = self.strategy[id] as usize;
                if id != root {
                    out.push((self.arena.decode(id), self.arena.decode(s)));
                }
                buf.clear();
                buf.push(s as u32);
            } else {
                self.arena.successors(id, &mut buf);
            }
            for &s in &buf {
                if !seen[s as usize] {
                    seen[s as usize] = true;
                    queue.push_back(s as usize);
                }
            }
        }
        out.sort();
        out
    }

    /// Structured certificate: budget, rules, winner and the reachable part of
    /// the winner's strategy.
    pub fn certificate(&self) -> Certificate {
        Certificate {
            k: self.k,
            rules: self.rules,
            winner: self.winner(),
            thief_start: self.thief_start(),
            strategy: self
                .reachable_strategy()
                .into_iter()
                .map(|(at, to)| StrategyEntry { at, to })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyEntry {
    pub at: GamePosition,
    pub to: GamePosition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub k: usize,
    pub rules: Rules,
    pub winner: Player,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub thief_start: Option<Vertex>,
    pub strategy: Vec<StrategyEntry>,
}

/// Solves the `k`-cop game on `g` with the given rules.
pub fn solve(g: &Digraph, k: usize, rules: Rules) -> Result<ArenaSolution> {
    solve_with_budget(g, k, rules, DEFAULT_ARENA_BUDGET)
}

pub fn solve_with_budget(g: &Digraph, k: usize, rules: Rules, budget: u64) -> Result<ArenaSolution> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Error::Input(format!("{n} vertices exceed the {MAX_VERTICES}-vertex solver limit")));
    }
    if k > n {
        return Err(Error::Input(format!("cop budget {k} exceeds vertex count {n}")));
    }
    let estimate = arena_size(n, k);
    if estimate > budget {
        return Err(Error::Budget {
            what: format!("arena positions for k={k}"),
            needed: estimate,
            budget,
            lower_bound: None,
        });
    }
    let arena = Arena::new(g, k, rules);
    let total = arena.positions() + 1;

    // successor counts, then the transposed (predecessor) table
    let mut buf = Vec::new();
    let mut counter = vec![0u32; total];
    let mut pred_start = vec![0u32; total + 1];
    for id in 0..total {
        arena.successors(id, &mut buf);
        counter[id] = buf.len() as u32;
        for &s in &buf {
            pred_start[s as usize + 1] += 1;
        }
    }
    for i in 0..total {
        pred_start[i + 1] += pred_start[i];
    }
    let mut fill = pred_start.clone();
    let mut preds = vec![0u32; pred_start[total] as usize];
    for id in 0..total {
        arena.successors(id, &mut buf);
        for &s in &buf {
            let slot = &mut fill[s as usize];
            preds[*slot as usize] = id as u32;
            *slot += 1;
        }
    }

    let mut cops_win = vec![false; total];
    let mut rank = vec![NONE; total];
    let mut queue: Vec<u32> = Vec::new();
    for id in 0..total {
        if arena.thief_owned(id) && counter[id] == 0 {
            cops_win[id] = true;
            rank[id] = 0;
            queue.push(id as u32);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let p = queue[head] as usize;
        head += 1;
        let r = rank[p] + 1;
        for &q in &preds[pred_start[p] as usize..pred_start[p + 1] as usize] {
            let q = q as usize;
            if cops_win[q] {
                continue;
            }
            if arena.thief_owned(q) {
                counter[q] -= 1;
                if counter[q] != 0 {
                    continue;
                }
            }
            cops_win[q] = true;
            rank[q] = r;
            queue.push(q as u32);
        }
    }
    drop(preds);

    let mut strategy = vec![NONE; total];
    for id in 0..total {
        let thief = arena.thief_owned(id);
        if thief == cops_win[id] {
            // loser's turn: no choice to record
            continue;
        }
        arena.successors(id, &mut buf);
        let pick = if thief {
            buf.iter().copied().find(|&s| !cops_win[s as usize])
        } else {
            buf.iter()
                .copied()
                .find(|&s| cops_win[s as usize] && rank[s as usize] < rank[id])
        };
        strategy[id] = pick.ok_or_else(|| Error::Invariant(format!("no strategy move at node {id}")))?;
    }

    Ok(ArenaSolution {
        k,
        rules,
        arena,
        cops_win,
        rank,
        strategy,
    })
}

/// A position at which a claimed solution fails to certify itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyViolation {
    pub at: Node,
    pub reason: String,
}

impl fmt::Display for StrategyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.at, self.reason)
    }
}

/// Independently re-checks a solution against the game rules of `g`.
///
/// Cops-won Thief positions must have only Cops-won successors of smaller
/// rank; Cops-won Cops positions must have a strategy move to a Cops-won
/// position of smaller rank. Outside the Cops region, Thief's strategy must
/// stay outside it and no Cops move may enter it. Move generation is redone
/// from scratch via [`cops_moves`] and [`thief_moves`].
pub fn verify_strategy(
    g: &Digraph,
    k: usize,
    rules: Rules,
    sol: &ArenaSolution,
) -> std::result::Result<(), StrategyViolation> {
    let fail = |at: Node, reason: String| Err(StrategyViolation { at, reason });
    if sol.k != k || sol.rules != rules || sol.arena.n != g.n() {
        return fail(Node::Root, "solution was computed for a different game".into());
    }
    let arena = &sol.arena;
    let won = |p: &GamePosition| sol.cops_win[arena.id_of(p).expect("successor in arena")];
    let rank = |p: &GamePosition| sol.rank[arena.id_of(p).expect("successor in arena")];
    for id in 0..arena.positions() {
        let p = arena.decode(id);
        let here = Node::Position(p);
        let succ = match p.mover {
            Player::Cops => cops_moves(&p, k, rules),
            Player::Thief => thief_moves(&p, g),
        };
        let strat = (sol.strategy[id] != NONE).then(|| arena.decode(sol.strategy[id] as usize));
        let r = sol.rank[id];
        match (p.mover, sol.cops_win[id]) {
            (Player::Thief, true) => {
                if let Some(s) = succ.iter().find(|s| !won(s) || rank(s) >= r) {
                    return fail(here, format!("Thief escapes to {s:?}"));
                }
            }
            (Player::Cops, true) => match strat {
                Some(s) if succ.contains(&s) && won(&s) && rank(&s) < r => {}
                other => return fail(here, format!("bad Cops move {other:?}")),
            },
            (Player::Thief, false) => match strat {
                Some(s) if succ.contains(&s) && !won(&s) => {}
                other => return fail(here, format!("bad Thief move {other:?}")),
            },
            (Player::Cops, false) => {
                if let Some(s) = succ.iter().find(|s| won(s)) {
                    return fail(here, format!("Cops could win via {s:?}"));
                }
            }
        }
    }
    let starts: Vec<GamePosition> = (0..g.n())
        .map(|v| GamePosition::new(v, CopSet::EMPTY, Player::Cops))
        .collect();
    let all_won = starts.iter().all(&won);
    match (sol.winner(), all_won) {
        (Player::Cops, true) => Ok(()),
        (Player::Thief, false) => match sol.thief_start() {
            Some(v) if !won(&starts[v]) => Ok(()),
            other => fail(Node::Root, format!("bad Thief start {other:?}")),
        },
        _ => fail(Node::Root, "winner disagrees with the initial positions".into()),
    }
}

/// How the Cops opponent plays when replaying a Thief win.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CopsPolicy {
    /// Always the lowest-numbered successor.
    Lowest,
    /// Occupy Thief's vertex whenever it is free: place a new cop if the budget
    /// allows, otherwise move the cop farthest from Thief.
    Chase,
}

/// Replays Thief's winning strategy against `policy` until a position repeats,
/// returning the repeating cycle of positions. `None` if Cops win.
pub fn thief_cycle(g: &Digraph, sol: &ArenaSolution, policy: CopsPolicy) -> Option<Vec<GamePosition>> {
    let start = sol.thief_start()?;
    let mut cur = GamePosition::new(start, CopSet::EMPTY, Player::Cops);
    let mut seen: BTreeMap<GamePosition, usize> = BTreeMap::new();
    let mut trail = Vec::new();
    loop {
        if let Some(&i) = seen.get(&cur) {
            return Some(trail[i..].to_vec());
        }
        seen.insert(cur, trail.len());
        trail.push(cur);
        cur = match cur.mover {
            Player::Thief => sol.strategy_at(&cur)?,
            Player::Cops => {
                let moves = cops_moves(&cur, sol.k, sol.rules);
                match policy {
                    CopsPolicy::Lowest => moves[0],
                    CopsPolicy::Chase => chase_move(g, &cur, sol.k, &moves),
                }
            }
        };
    }
}

fn chase_move(g: &Digraph, p: &GamePosition, k: usize, moves: &[GamePosition]) -> GamePosition {
    let v = p.vertex;
    if p.cops.contains(v) {
        return GamePosition::new(v, p.cops, Player::Thief);
    }
    if p.cops.len() < k {
        return GamePosition::new(v, p.cops.with(v), Player::Thief);
    }
    // undirected distance from v
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    dist[v] = 0;
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        for w in g.successors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let far = p.cops.iter().max_by_key(|&x| (dist[x], usize::MAX - x));
    match far {
        Some(x) => GamePosition::new(v, p.cops.without(x).with(v), Player::Thief),
        None => moves[0],
    }
}

/// Entanglement together with the per-budget winners and the two decisive
/// arena solutions (the last Thief win and the first Cops win).
#[derive(Clone, Debug)]
pub struct EntanglementResult {
    pub value: usize,
    pub rules: Rules,
    pub per_budget: BTreeMap<usize, Player>,
    pub certificates: BTreeMap<usize, ArenaSolution>,
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub rules: Rules,
    pub budget: u64,
    /// Give up (with a budget error carrying the lower bound) past this k.
    pub max_k: Option<usize>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            rules: Rules::Standard,
            budget: DEFAULT_ARENA_BUDGET,
            max_k: None,
        }
    }
}

pub fn entanglement(g: &Graph, rules: Rules) -> Result<EntanglementResult> {
    entanglement_digraph(
        &g.to_digraph(),
        SolveOptions {
            rules,
            ..SolveOptions::default()
        },
    )
}

/// Just the number; no certificates are kept.
pub fn entanglement_value(g: &Graph) -> Result<usize> {
    Ok(entanglement(g, Rules::Standard)?.value)
}

pub fn entanglement_digraph(g: &Digraph, opts: SolveOptions) -> Result<EntanglementResult> {
    let mut per_budget = BTreeMap::new();
    let mut last_thief: Option<ArenaSolution> = None;
    for k in 0..=g.n() {
        if opts.max_k.is_some_and(|m| k > m) {
            return Err(Error::Budget {
                what: "cop budget".into(),
                needed: k as u64,
                budget: opts.max_k.unwrap() as u64,
                lower_bound: Some(k),
            });
        }
        let sol = solve_with_budget(g, k, opts.rules, opts.budget).map_err(|e| match e {
            Error::Budget {
                what, needed, budget, ..
            } => Error::Budget {
                what,
                needed,
                budget,
                lower_bound: Some(k),
            },
            other => other,
        })?;
        let w = sol.winner();
        per_budget.insert(k, w);
        if w == Player::Cops {
            let mut certificates = BTreeMap::new();
            if let Some(t) = last_thief {
                certificates.insert(k - 1, t);
            }
            certificates.insert(k, sol);
            return Ok(EntanglementResult {
                value: k,
                rules: opts.rules,
                per_budget,
                certificates,
            });
        }
        last_thief = Some(sol);
    }
    Err(Error::Invariant("Cops did not win with one cop per vertex".into()))
}

/// Vertices visited by Thief along a cycle.
pub fn cycle_vertices(cycle: &[GamePosition]) -> BTreeSet<Vertex> {
    cycle.iter().map(|p| p.vertex).collect()
}
