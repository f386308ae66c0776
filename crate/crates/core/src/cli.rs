//! Command-line front end. `run` takes the argument list and the three
//! standard streams so that tests can drive it in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use serde::Serialize;
use serde_json::json;

use crate::analysis::{check_ent3, domino, max_parallel_hinges, spread, twosum_chain};
use crate::connectivity::{block_cut_tree, connectivity};
use crate::cyclicity::{cyclicity_digraph, cyclicity_undirected_with_cap};
use crate::error::{Error, Result};
use crate::game::{entanglement_digraph, Rules, SolveOptions, DEFAULT_ARENA_BUDGET};
use crate::generators::{bond, complete, cycle, random_two_connected};
use crate::graph::{Digraph, Graph};
use crate::io::{emit_dot, emit_edge_list, emit_json, emit_multigraph_edge_list, parse_graph};
use crate::molecules::{all_witnesses, classify_ambiguity_3, make_molecule, MoleculeSpec};
use crate::tutte::{build_tutte_tree, hinges, recompose};

/// Version of every structured (JSON) output.
pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable overriding the arena budget.
pub const BUDGET_ENV: &str = "ENTANGLE_BUDGET";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "entangle", version, about = "Entanglement and Tutte decompositions of small graphs")]
pub struct Cli {
    /// Output format for results.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,

    /// Maximum arena positions per solve (overrides ENTANGLE_BUDGET).
    #[arg(long, global = true)]
    pub budget: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RulesArg {
    Std,
    Gen,
}

impl From<RulesArg> for Rules {
    fn from(r: RulesArg) -> Rules {
        match r {
            RulesArg::Std => Rules::Standard,
            RulesArg::Gen => Rules::Generalized,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConvertTo {
    Edges,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact entanglement by solving the cops-and-thief game.
    Entanglement {
        graph: String,
        #[arg(long, value_enum, default_value_t = RulesArg::Std)]
        rules: RulesArg,
        #[arg(long)]
        max_k: Option<usize>,
        /// Write the decisive certificates (JSON) here.
        #[arg(long)]
        cert: Option<String>,
    },
    /// Minimum feedback vertex set (vertex cover for undirected graphs).
    Cyclicity {
        graph: String,
        /// Read the edge list as arcs `u -> v`.
        #[arg(long)]
        digraph: bool,
        /// Enumerate up to this many minimum witnesses.
        #[arg(long, default_value_t = 1)]
        witnesses: usize,
    },
    /// Vertex connectivity.
    Connectivity {
        graph: String,
        /// Report complete graphs as infinitely connected.
        #[arg(long)]
        raw: bool,
    },
    /// Blocks and articulation points.
    Blocks {
        graph: String,
        #[arg(long)]
        dot: Option<String>,
    },
    /// Tutte decomposition of a 2-connected graph.
    Decompose {
        graph: String,
        #[arg(long)]
        dot: Option<String>,
        #[arg(long)]
        json: Option<String>,
    },
    /// Molecule construction and recognition.
    Molecule {
        #[command(subcommand)]
        action: MoleculeCmd,
    },
    /// Hinge count per vertex.
    Spread { graph: String },
    /// Necessary conditions for entanglement 3.
    CheckEnt3 {
        graph: String,
        #[arg(long)]
        json: Option<String>,
        /// Exit with status 1 on a violated verdict.
        #[arg(long)]
        strict: bool,
    },
    /// Emit a generated graph as an edge list.
    Generate {
        #[command(subcommand)]
        family: GenerateCmd,
    },
    /// Re-emit a graph in another format.
    Convert {
        graph: String,
        #[arg(long, value_enum, default_value_t = ConvertTo::Json)]
        to: ConvertTo,
    },
}

#[derive(Subcommand, Debug)]
pub enum MoleculeCmd {
    /// Build a molecule from `k=.. b=.. h=..`.
    Make(MoleculeArgs),
    /// Find every base of a graph.
    Recognize { graph: String },
    /// Ambiguity class of a 3-molecule.
    Classify { graph: String },
}

#[derive(Args, Debug)]
pub struct MoleculeArgs {
    /// `k=<base size>`, `b=<edge count or u-v,u-v list>`, `h=<apexes>`.
    #[arg(required = true, num_args = 3)]
    pub params: Vec<String>,
}

#[derive(Subcommand, Debug)]
pub enum GenerateCmd {
    /// Domino D_n: two paths on n + 1 vertices joined rung by rung.
    Domino { n: usize },
    /// Cycle on n vertices.
    Cycle { n: usize },
    /// Complete graph on n vertices.
    Clique { n: usize },
    /// Two vertices with `k` parallel edges (multigraph edge list).
    Bond { k: usize },
    /// Molecule from `k= b= h=`, as for `molecule make`.
    Molecule(MoleculeArgs),
    /// Comma-separated pieces such as `K4,C5,D2`, glued in order.
    TwosumChain { pieces: String },
    /// Random 2-connected graph grown by ears from a cycle, plus chords.
    Random2conn {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        chords: usize,
    },
}

/// Runs one command. Returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if code == EXIT_OK {
                write!(stdout, "{e}")
            } else {
                write!(stderr, "{e}")
            };
            return code;
        }
    };
    let mut ctx = Ctx {
        stdin,
        stdout,
        format: cli.format,
        budget: cli.budget.or_else(env_budget).unwrap_or(DEFAULT_ARENA_BUDGET),
    };
    match dispatch(&cli.command, &mut ctx) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "{}", error_json(&e));
            exit_code(&e)
        }
    }
}

fn env_budget() -> Option<u64> {
    std::env::var(BUDGET_ENV).ok()?.trim().parse().ok()
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget { .. } => EXIT_BUDGET,
        Error::Input(_) | Error::Parse { .. } | Error::Invariant(_) => EXIT_INPUT,
    }
}

/// The structured form written to standard error.
pub fn error_json(e: &Error) -> serde_json::Value {
    let kind = match e {
        Error::Input(_) => "input",
        Error::Parse { .. } => "parse",
        Error::Budget { .. } => "budget",
        Error::Invariant(_) => "invariant",
    };
    let mut v = json!({ "schema": SCHEMA_VERSION, "error": kind, "message": e.to_string() });
    match e {
        Error::Parse { line, .. } => v["line"] = json!(line),
        Error::Budget {
            needed,
            budget,
            lower_bound,
            ..
        } => {
            v["needed"] = json!(needed);
            v["budget"] = json!(budget);
            v["lower_bound"] = json!(lower_bound);
        }
        _ => {}
    }
    v
}

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    format: Format,
    budget: u64,
}

impl Ctx<'_> {
    fn read_text(&mut self, path: &str) -> Result<String> {
        if path == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::Input(format!("stdin: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{path}: {e}")))
        }
    }

    fn read_graph(&mut self, path: &str) -> Result<Graph> {
        let text = self.read_text(path)?;
        parse_graph(&text)
    }

    fn write_to(&mut self, path: &str, text: &str) -> Result<()> {
        if path == "-" {
            self.out(text)
        } else {
            std::fs::write(path, text).map_err(|e| Error::Input(format!("{path}: {e}")))
        }
    }

    fn out(&mut self, text: &str) -> Result<()> {
        self.stdout
            .write_all(text.as_bytes())
            .map_err(|e| Error::Input(format!("stdout: {e}")))
    }

    /// Prints `text` or, in JSON mode, `value` tagged with the schema version.
    fn emit(&mut self, text: &str, value: impl Serialize) -> Result<()> {
        match self.format {
            Format::Text => self.out(text),
            Format::Json => {
                let s = versioned(value);
                self.out(&format!("{s}\n"))
            }
        }
    }
}

fn versioned(value: impl Serialize) -> String {
    let mut v = serde_json::to_value(value).expect("serialisable");
    if let serde_json::Value::Object(m) = &mut v {
        m.insert("schema".into(), json!(SCHEMA_VERSION));
    }
    serde_json::to_string_pretty(&v).expect("serialisable")
}

fn dispatch(cmd: &Command, ctx: &mut Ctx) -> Result<i32> {
    match cmd {
        Command::Entanglement {
            graph,
            rules,
            max_k,
            cert,
        } => {
            let g = ctx.read_graph(graph)?;
            let r = entanglement_digraph(
                &g.to_digraph(),
                SolveOptions {
                    rules: (*rules).into(),
                    budget: ctx.budget,
                    max_k: *max_k,
                },
            )?;
            if let Some(path) = cert {
                let certs: Vec<_> = r.certificates.values().map(|s| s.certificate()).collect();
                let text = versioned(json!({ "certificates": certs }));
                ctx.write_to(path, &format!("{text}\n"))?;
            }
            let mut text = format!("entanglement: {}\n", r.value);
            for (k, w) in &r.per_budget {
                let _ = writeln!(text, "  k={k}: {w}");
            }
            ctx.emit(
                &text,
                json!({ "entanglement": r.value, "rules": r.rules, "per_budget": r.per_budget }),
            )?;
        }
        Command::Cyclicity {
            graph,
            digraph,
            witnesses,
        } => {
            let text = ctx.read_text(graph)?;
            let sol = if *digraph {
                let g = parse_graph(&text)?;
                let d = Digraph::from_arcs(g.n(), g.edges())?;
                cyclicity_digraph(&d)?
            } else {
                cyclicity_undirected_with_cap(&parse_graph(&text)?, (*witnesses).max(1))?
            };
            let shown: Vec<_> = sol.witnesses.iter().take(*witnesses).collect();
            let mut out = format!("cyclicity: {}\n", sol.size);
            for w in &shown {
                let _ = writeln!(out, "  {:?}", w);
            }
            ctx.emit(&out, json!({ "cyclicity": sol.size, "witnesses": shown }))?;
        }
        Command::Connectivity { graph, raw } => {
            let g = ctx.read_graph(graph)?;
            let c = connectivity(&g, !raw);
            ctx.emit(&format!("connectivity: {}\n", c.value), c)?;
        }
        Command::Blocks { graph, dot } => {
            let g = ctx.read_graph(graph)?;
            let b = block_cut_tree(&g);
            if let Some(path) = dot {
                let mut d = String::from("graph blocks {\n");
                for (i, blk) in b.blocks.iter().enumerate() {
                    let _ = writeln!(d, "  b{i} [shape=box, label=\"{blk:?}\"];");
                }
                for a in &b.articulation_points {
                    let _ = writeln!(d, "  c{a} [label=\"{}\"];", g.name(*a));
                }
                for (a, i) in &b.tree_edges {
                    let _ = writeln!(d, "  c{a} -- b{i};");
                }
                d.push_str("}\n");
                ctx.write_to(path, &d)?;
            }
            let mut text = format!(
                "blocks: {}\narticulation points: {:?}\n",
                b.blocks.len(),
                b.articulation_points
            );
            for blk in &b.blocks {
                let _ = writeln!(text, "  {blk:?}");
            }
            ctx.emit(&text, &b)?;
        }
        Command::Decompose { graph, dot, json } => {
            let g = ctx.read_graph(graph)?;
            let t = build_tutte_tree(&g)?;
            let hs: Vec<_> = hinges(&g)?.iter().map(|h| h.pair()).collect();
            let recomposed = recompose(&t)? == g.without_labels();
            if let Some(path) = dot {
                let d = t.to_dot(&g);
                ctx.write_to(path, &d)?;
            }
            let value = json!({
                "torsos": t.len(),
                "hinges": hs,
                "kinds": t.kind_counts(),
                "parallel_hinges": max_parallel_hinges(&t).count,
                "recomposes": recomposed,
                "tree": t,
            });
            if let Some(path) = json {
                let text = versioned(&value);
                ctx.write_to(path, &format!("{text}\n"))?;
            }
            let mut text = format!("torsos: {}\nhinges: {}\n", t.len(), hs.len());
            for (x, y) in &hs {
                let _ = writeln!(text, "  {{{}, {}}}", g.name(*x), g.name(*y));
            }
            for (i, n) in t.nodes.iter().enumerate() {
                let names: Vec<String> = n.bag.iter().map(|&v| g.name(v)).collect();
                let _ = writeln!(text, "t{i} {} [{}]", n.kind, names.join(" "));
            }
            if json.as_deref() != Some("-") {
                ctx.emit(&text, &value)?;
            }
        }
        Command::Molecule { action } => match action {
            MoleculeCmd::Make(args) => {
                let g = make_molecule(&parse_molecule_args(&args.params)?)?;
                ctx.out(&emit_edge_list(&g))?;
            }
            MoleculeCmd::Recognize { graph } => {
                let g = ctx.read_graph(graph)?;
                let ws = all_witnesses(&g);
                let mut text = match ws.first() {
                    None => String::from("molecule: no\n"),
                    Some(w) => format!(
                        "molecule: k={} b={} h={}\nbases: {}\n",
                        w.spec.k,
                        w.spec.base_edges.len(),
                        w.spec.h,
                        ws.len()
                    ),
                };
                for w in &ws {
                    let _ = writeln!(text, "  {:?}", w.base);
                }
                ctx.emit(&text, json!({ "molecule": !ws.is_empty(), "witnesses": ws }))?;
            }
            MoleculeCmd::Classify { graph } => {
                let g = ctx.read_graph(graph)?;
                let a = classify_ambiguity_3(&g)?;
                ctx.emit(&format!("{a}\n"), json!({ "ambiguity": a }))?;
            }
        },
        Command::Spread { graph } => {
            let g = ctx.read_graph(graph)?;
            let s = spread(&g)?;
            let mut text = format!("spread: {}\n", s.max);
            for (v, d) in s.per_vertex.iter().enumerate() {
                if *d > 0 {
                    let _ = writeln!(text, "  {}: {d}", g.name(v));
                }
            }
            ctx.emit(&text, &s)?;
        }
        Command::CheckEnt3 { graph, json, strict } => {
            let g = ctx.read_graph(graph)?;
            let r = check_ent3(&g)?;
            if let Some(path) = json {
                let text = versioned(&r);
                ctx.write_to(path, &format!("{text}\n"))?;
            }
            if json.as_deref() != Some("-") {
                let text = format!(
                    "verdict: {}\nmolecules: {}\ninterfaces: {}\ndiameter: {} <= {}: {}\n",
                    r.verdict,
                    r.molecules_ok(),
                    r.interfaces_ok(),
                    r.diameter_finding.diameter,
                    r.diameter_finding.bound,
                    r.diameter_ok()
                );
                ctx.emit(&text, &r)?;
            }
            if *strict && !r.is_consistent() {
                return Ok(EXIT_VIOLATED);
            }
        }
        Command::Generate { family } => {
            let text = match family {
                GenerateCmd::Domino { n } => emit_edge_list(&domino(*n)),
                GenerateCmd::Cycle { n } => emit_edge_list(&cycle(*n)),
                GenerateCmd::Clique { n } => emit_edge_list(&complete(*n)),
                GenerateCmd::Bond { k } => emit_multigraph_edge_list(&bond(*k)),
                GenerateCmd::Molecule(args) => emit_edge_list(&make_molecule(&parse_molecule_args(&args.params)?)?),
                GenerateCmd::TwosumChain { pieces } => {
                    let parts = pieces.split(',').map(parse_piece).collect::<Result<Vec<_>>>()?;
                    emit_edge_list(&twosum_chain(&parts)?)
                }
                GenerateCmd::Random2conn { n, seed, chords } => {
                    let mut rng = rand::rngs::StdRng::seed_from_u64(*seed);
                    emit_edge_list(&random_two_connected(*n, *chords, &mut rng)?)
                }
            };
            ctx.out(&text)?;
        }
        Command::Convert { graph, to } => {
            let g = ctx.read_graph(graph)?;
            let text = match to {
                ConvertTo::Edges => emit_edge_list(&g),
                ConvertTo::Json => format!("{}\n", emit_json(&g)),
                ConvertTo::Dot => emit_dot(&g, "g"),
            };
            ctx.out(&text)?;
        }
    }
    Ok(EXIT_OK)
}

/// Parses `k=3 b=2 h=1`. `b` is either an edge count (the first edges of the
/// base clique in lexicographic order) or a list like `0-1,1-2`.
pub fn parse_molecule_args(params: &[String]) -> Result<MoleculeSpec> {
    let (mut k, mut b, mut h) = (None, None, None);
    for p in params {
        let Some((key, value)) = p.split_once('=') else {
            return Err(Error::Input(format!("expected key=value, found {p:?}")));
        };
        match key {
            "k" => k = Some(parse_num(value)?),
            "b" => b = Some(value.to_string()),
            "h" => h = Some(parse_num(value)?),
            _ => return Err(Error::Input(format!("unknown molecule parameter {key:?}"))),
        }
    }
    let (Some(k), Some(b), Some(h)) = (k, b, h) else {
        return Err(Error::Input("molecule needs k=, b= and h=".into()));
    };
    let edges = if let Ok(count) = b.parse::<usize>() {
        let all: Vec<_> = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect();
        if count > all.len() {
            return Err(Error::Input(format!("a base of size {k} has at most {} edges", all.len())));
        }
        all[..count].to_vec()
    } else {
        b.split(',')
            .map(|e| {
                let (u, v) = e
                    .split_once('-')
                    .ok_or_else(|| Error::Input(format!("bad base edge {e:?}")))?;
                let (u, v) = (parse_num(u)?, parse_num(v)?);
                if u >= k || v >= k || u == v {
                    return Err(Error::Input(format!("base edge {e:?} outside 0..{k}")));
                }
                Ok((u, v))
            })
            .collect::<Result<Vec<_>>>()?
    };
    let spec = MoleculeSpec::new(k, edges, h);
    spec.validate()?;
    Ok(spec)
}

fn parse_num(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Input(format!("expected a number, found {s:?}")))
}

/// `K<n>`, `C<n>` or `D<n>`.
fn parse_piece(s: &str) -> Result<Graph> {
    let s = s.trim();
    let (head, n) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
    let n = parse_num(n)?;
    match head {
        "K" if n >= 3 => Ok(complete(n)),
        "C" if n >= 3 => Ok(cycle(n)),
        "D" if n >= 1 => Ok(domino(n)),
        _ => Err(Error::Input(format!("unknown chain piece {s:?}"))),
    }
}
