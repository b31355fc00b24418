//! `hamlink`: Hamiltonian linkage, path cover and labelling queries from the
//! command line. Decisions are printed as JSON reports; generators print
//! edge lists.

mod report;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use hamlink::constructor::{construct_ham_linkage, min_path_cover, path_cover_witness};
use hamlink::labelling::{lambda_prime_via_pc, lambda_via_pc, LambdaValue};
use hamlink::oracle::{self, Defect, LinkageInstance};
use hamlink::reductions::{gadget_linkage, gadget_linkedness, gadget_path_cover, random_kk1_free};
use hamlink::solver::{self, resolve_k, SolverConfig, Stats as SolverStats};
use hamlink::structural::{self, StructuralConfig};
use hamlink::{parse_graph, Graph};

use report::{Answer, Promise, Report, Stats, Witness};

#[derive(Parser)]
#[command(
    name = "hamlink",
    version,
    about = "Hamiltonian linkages and path covers in graphs of bounded independence number"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Graph file (edge list or DIMACS); standard input when omitted.
    #[arg(short, long, global = true)]
    input: Option<PathBuf>,
    /// Promise: the graph has no independent set of size k. Computed when omitted.
    #[arg(long, global = true)]
    k: Option<usize>,
    /// Worker threads for the solver; 1 keeps reports byte-reproducible.
    #[arg(long, global = true, env = "HAMLINK_THREADS", default_value_t = 1)]
    threads: usize,
    /// Largest graph handed to brute-force searches.
    #[arg(long, global = true, default_value_t = oracle::DEFAULT_MAX_ORACLE_N)]
    max_oracle_n: usize,
    /// Largest graph whose independence number is computed exactly.
    #[arg(long, global = true, default_value_t = 30)]
    max_alpha_n: usize,
    /// Include a witness (paths or labels) in the report.
    #[arg(long, global = true)]
    witness: bool,
    /// Trust --k without checking it.
    #[arg(long, global = true)]
    no_promise_check: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Hamiltonian path, cycle or Hamiltonian-connectedness.
    Decide {
        #[arg(value_enum)]
        property: Property,
    },
    /// Spanning linkage for the given terminal pairs.
    Linkage {
        #[arg(long)]
        pairs: Pairs,
    },
    /// Whether every choice of 2l terminals has a spanning linkage.
    Linkedness {
        #[arg(short, long)]
        l: usize,
    },
    /// Whether l disjoint paths cover the graph.
    PathCover {
        #[arg(short, long)]
        l: usize,
    },
    /// Minimum number of disjoint paths covering the graph.
    PcNumber,
    /// Fewest vertices left uncovered by a linkage for the pairs.
    MinDefect {
        #[arg(long)]
        pairs: Pairs,
    },
    /// Closed-form deciders for independence number 2, 3 or 4 (--k 3, 4, 5).
    Structural {
        #[arg(value_enum)]
        query: Query,
        #[arg(long)]
        from: Option<usize>,
        #[arg(long)]
        to: Option<usize>,
        /// Cross-check against brute force and report divergences.
        #[arg(long)]
        validate: bool,
    },
    /// Brute-force answers for small graphs.
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
    /// Hardness gadgets, printed as edge lists.
    Gadget {
        #[command(subcommand)]
        kind: GadgetKind,
    },
    /// Random graphs, printed as edge lists.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// L(2,1) labelling number through a path cover of the complement.
    Lambda {
        #[arg(long)]
        injective: bool,
        /// Settle the bound case by exhaustive search when small enough.
        #[arg(long)]
        resolve_exact: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    HamPath,
    HamCycle,
    HamConnected,
}

#[derive(Clone, Copy, ValueEnum)]
enum Query {
    /// Hamiltonian path anywhere (k = 4, 5).
    Path,
    /// Hamiltonian path starting at --from (k = 3, 4).
    From,
    /// Hamiltonian path from --from to --to (k = 3).
    Between,
    /// Two covering paths starting at --from and --to (k = 3, 4).
    Pc,
}

#[derive(Subcommand)]
enum OracleQuery {
    Linkage {
        #[arg(long)]
        pairs: Pairs,
    },
    MinDefect {
        #[arg(long)]
        pairs: Pairs,
    },
    PcNumber,
    Linked {
        #[arg(short, long)]
        l: usize,
    },
    Lambda {
        #[arg(long)]
        injective: bool,
    },
}

#[derive(Subcommand)]
enum GadgetKind {
    Linkage {
        #[arg(short, long)]
        l: usize,
    },
    PathCover {
        #[arg(short, long)]
        l: usize,
    },
    Linkedness {
        #[arg(short, long)]
        l: usize,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Cliques plus random edges; independence number below k.
    Kk1free {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Terminal pairs written `s1:t1,s2:t2`.
#[derive(Clone, Debug)]
struct Pairs(Vec<(usize, usize)>);

impl std::str::FromStr for Pairs {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| {
                let (a, b) = p
                    .split_once(':')
                    .ok_or_else(|| format!("pair `{p}` is not s:t"))?;
                let a = a.trim().parse().map_err(|_| format!("bad vertex `{a}`"))?;
                let b = b.trim().parse().map_err(|_| format!("bad vertex `{b}`"))?;
                Ok((a, b))
            })
            .collect::<Result<_, _>>()
            .map(Pairs)
    }
}

fn usage_error(msg: &str) -> ! {
    Cli::command()
        .error(clap::error::ErrorKind::ArgumentConflict, msg)
        .exit()
}

fn read_graph(path: &Option<PathBuf>) -> anyhow::Result<Graph> {
    let text = match path {
        Some(p) => {
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
        }
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .context("reading standard input")?;
            s
        }
    };
    Ok(parse_graph(&text)?)
}

struct Run {
    cfg: SolverConfig,
    stats: Arc<SolverStats>,
    witness: bool,
    promise: Promise,
}

impl Run {
    fn k(&mut self, g: &Graph) -> hamlink::Result<usize> {
        let k = resolve_k(g, &self.cfg)?;
        self.promise = Promise {
            k: Some(k),
            checked: self.cfg.k.is_none()
                || (self.cfg.verify_promise && g.n() <= self.cfg.max_alpha_n),
        };
        Ok(k)
    }
}

fn paths_of(linkage: Option<oracle::Linkage>) -> Option<Witness> {
    linkage.map(|l| Witness::Paths(l.paths))
}

fn defect_answer(d: Defect) -> Answer {
    match d {
        Defect::Finite(v) => Answer::Count(v),
        Defect::Infinite => Answer::Infinite("inf"),
    }
}

/// Runs a decision command; returns the answer, witness and diagnostic.
fn decide(
    cmd: &Command,
    g: &Graph,
    run: &mut Run,
) -> anyhow::Result<(Answer, Option<Witness>, Option<String>)> {
    let cfg = run.cfg.clone();
    let max_oracle = cfg.max_oracle_n;
    Ok(match cmd {
        Command::Decide { property } => {
            run.k(g)?;
            match property {
                Property::HamPath => {
                    let yes = solver::ham_path(g, &cfg)?;
                    let w = if run.witness && yes {
                        path_cover_witness(g, 1, &cfg)?.map(Witness::Paths)
                    } else {
                        None
                    };
                    (Answer::Bool(yes), w, None)
                }
                Property::HamCycle => {
                    let edge = solver::ham_cycle_edge(g, &cfg)?;
                    let w = match (run.witness, edge) {
                        (true, Some(e)) => {
                            let inst = LinkageInstance::new(g.clone(), vec![e])?;
                            paths_of(construct_ham_linkage(&inst, &cfg)?)
                        }
                        _ => None,
                    };
                    (Answer::Bool(edge.is_some()), w, None)
                }
                Property::HamConnected => {
                    let fail = if g.n() == 0 {
                        Some((0, 0))
                    } else {
                        solver::ham_connected_failure(g, &cfg)?
                    };
                    let diag = fail
                        .filter(|_| g.n() > 0)
                        .map(|(u, v)| format!("no Hamiltonian path between {u} and {v}"));
                    (Answer::Bool(fail.is_none()), None, diag)
                }
            }
        }
        Command::Linkage { pairs } => {
            run.k(g)?;
            let inst = LinkageInstance::new(g.clone(), pairs.0.clone())?;
            if run.witness {
                let w = construct_ham_linkage(&inst, &cfg)?;
                (Answer::Bool(w.is_some()), paths_of(w), None)
            } else {
                (Answer::Bool(solver::ham_linkage(&inst, &cfg)?), None, None)
            }
        }
        Command::Linkedness { l } => {
            run.k(g)?;
            let v = solver::ham_linkedness(g, *l, &cfg)?;
            (Answer::Bool(v.answer), None, v.diagnostic)
        }
        Command::PathCover { l } => {
            run.k(g)?;
            if run.witness {
                let w = path_cover_witness(g, *l, &cfg)?;
                (Answer::Bool(w.is_some()), w.map(Witness::Paths), None)
            } else {
                (
                    Answer::Bool(solver::path_cover_exists(g, *l, &cfg)?),
                    None,
                    None,
                )
            }
        }
        Command::PcNumber => {
            run.k(g)?;
            if run.witness {
                let cover = min_path_cover(g, &cfg)?;
                (
                    Answer::Count(cover.len()),
                    Some(Witness::Paths(cover)),
                    None,
                )
            } else {
                (
                    Answer::Count(solver::path_cover_number(g, &cfg)?),
                    None,
                    None,
                )
            }
        }
        Command::MinDefect { pairs } => {
            run.k(g)?;
            let inst = LinkageInstance::new(g.clone(), pairs.0.clone())?;
            (defect_answer(solver::min_defect(&inst, &cfg)?), None, None)
        }
        Command::Structural {
            query,
            from,
            to,
            validate,
        } => {
            let k = cfg
                .k
                .unwrap_or_else(|| usage_error("structural queries need --k 3, 4 or 5"));
            let scfg = StructuralConfig {
                check_promise: cfg.verify_promise,
                validate_up_to: validate.then_some(max_oracle),
                ..Default::default()
            };
            run.promise = Promise {
                k: Some(k),
                checked: scfg.check_promise,
            };
            let need = |v: &Option<usize>, flag: &str| {
                v.unwrap_or_else(|| usage_error(&format!("this query needs {flag}")))
            };
            let answer = match (k, query) {
                (3, Query::From) => structural::ham_path_from_3k1(g, need(from, "--from"), &scfg)?,
                (3, Query::Between) => structural::ham_path_between_3k1(
                    g,
                    need(from, "--from"),
                    need(to, "--to"),
                    &scfg,
                )?,
                (3, Query::Pc) => {
                    structural::pc2_from_pair_3k1(g, need(from, "--from"), need(to, "--to"), &scfg)?
                }
                (4, Query::Path) => {
                    let d = structural::ham_path_4k1(g, &scfg)?;
                    let diag = d
                        .pc2_guarantee
                        .then(|| "two paths cover the graph".to_string());
                    return Ok((Answer::Bool(d.ham_path), None, diag));
                }
                (4, Query::From) => structural::ham_path_from_4k1(g, need(from, "--from"), &scfg)?,
                (4, Query::Pc) => {
                    structural::pc_uv_4k1(g, need(from, "--from"), need(to, "--to"), &scfg)?
                }
                (5, Query::Path) => structural::ham_path_5k1(g, &scfg)?,
                _ => usage_error("no structural decider for this k and query"),
            };
            let diverged = scfg.divergences();
            let diag = (!diverged.is_empty())
                .then(|| format!("{} divergence(s) from brute force", diverged.len()));
            (Answer::Bool(answer), None, diag)
        }
        Command::Oracle { query } => match query {
            OracleQuery::Linkage { pairs } => {
                let inst = LinkageInstance::new(g.clone(), pairs.0.clone())?;
                let w = oracle::oracle_linkage(&inst, true, max_oracle)?;
                let yes = w.is_some();
                (
                    Answer::Bool(yes),
                    if run.witness { paths_of(w) } else { None },
                    None,
                )
            }
            OracleQuery::MinDefect { pairs } => {
                let inst = LinkageInstance::new(g.clone(), pairs.0.clone())?;
                (
                    defect_answer(oracle::oracle_min_defect(&inst, max_oracle)?),
                    None,
                    None,
                )
            }
            OracleQuery::PcNumber => (
                Answer::Count(oracle::oracle_path_cover_number(g, max_oracle)?),
                None,
                None,
            ),
            OracleQuery::Linked { l } => (
                Answer::Bool(oracle::oracle_is_ham_linked(g, *l, max_oracle)?),
                None,
                None,
            ),
            OracleQuery::Lambda { injective } => {
                let (value, labels) = oracle::oracle_lambda(g, *injective, max_oracle)?;
                (
                    Answer::Count(value),
                    run.witness.then_some(Witness::Labels(labels)),
                    None,
                )
            }
        },
        Command::Lambda {
            injective,
            resolve_exact,
        } => {
            let comp = g.complement();
            run.k(&comp)?;
            let r = if *injective {
                lambda_prime_via_pc(g, &cfg)?
            } else {
                lambda_via_pc(g, &cfg)?
            };
            let diag = Some(format!("complement path cover number {}", r.complement_pc));
            let mut witness = r.witness.labels;
            let answer = match r.value {
                LambdaValue::Exact(v) => Answer::Count(v),
                LambdaValue::AtMost(_) if *resolve_exact && g.n() <= max_oracle => {
                    let (exact, labels) = oracle::oracle_lambda(g, *injective, max_oracle)?;
                    witness = labels;
                    Answer::Count(exact)
                }
                LambdaValue::AtMost(v) => Answer::Bound { at_most: v },
            };
            (
                answer,
                run.witness.then_some(Witness::Labels(witness)),
                diag,
            )
        }
        Command::Gadget { .. } | Command::Gen { .. } => unreachable!("handled before"),
    })
}

fn emit_graph(cmd: &Command, common: &Common) -> anyhow::Result<String> {
    Ok(match cmd {
        Command::Gadget { kind } => {
            let g = read_graph(&common.input)?;
            let n = g.n();
            match kind {
                GadgetKind::Linkage { l } => {
                    let inst = gadget_linkage(&g, *l)?;
                    let pairs: Vec<String> =
                        inst.pairs.iter().map(|(s, t)| format!("{s}:{t}")).collect();
                    inst.graph.to_edge_list(&[
                        format!("linkage gadget for l = {l} on a graph with {n} vertices"),
                        format!("pairs {}", pairs.join(",")),
                    ])
                }
                GadgetKind::PathCover { l } => {
                    let gad = gadget_path_cover(&g, *l)?;
                    gad.graph.to_edge_list(&[
                        format!("path cover gadget for l = {l} on a graph with {n} vertices"),
                        format!(
                            "a b c = {} {} {}; leaves {:?}",
                            n,
                            n + 1,
                            n + 2,
                            &gad.added[3..]
                        ),
                    ])
                }
                GadgetKind::Linkedness { l } => {
                    let gad = gadget_linkedness(&g, *l)?;
                    gad.graph.to_edge_list(&[
                        format!("linkedness gadget for l = {l} on a graph with {n} vertices"),
                        format!("added {:?}", gad.added),
                    ])
                }
            }
        }
        Command::Gen {
            kind: GenKind::Kk1free { n, p, seed },
        } => {
            let k = common
                .k
                .unwrap_or_else(|| usage_error("gen kk1free needs --k"));
            random_kk1_free(k, *n, *p, *seed)?
                .to_edge_list(&[format!("kk1free k = {k} n = {n} p = {p} seed = {seed}")])
        }
        _ => unreachable!("only generators print graphs"),
    })
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<hamlink::Error>() {
        Some(hamlink::Error::PromiseViolation { .. } | hamlink::Error::Disconnected) => 3,
        Some(hamlink::Error::SizeGuard { .. }) => 4,
        _ => 1,
    }
}

fn configure_threads(threads: usize) -> bool {
    #[cfg(feature = "parallel")]
    {
        if threads != 1 {
            // a second initialisation only fails if a pool already exists
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global();
            return true;
        }
    }
    let _ = threads;
    false
}

fn command_echo() -> String {
    let args: Vec<String> = std::env::args().skip(1).collect();
    args.join(" ")
}

fn execute(cli: &Cli) -> anyhow::Result<()> {
    let common = &cli.common;
    if matches!(cli.command, Command::Gadget { .. } | Command::Gen { .. }) {
        return emit(&emit_graph(&cli.command, common)?);
    }
    let g = read_graph(&common.input)?;
    let stats = Arc::new(SolverStats::default());
    let cfg = SolverConfig {
        k: common.k,
        verify_promise: !common.no_promise_check,
        max_alpha_n: common.max_alpha_n,
        max_oracle_n: common.max_oracle_n,
        parallel: configure_threads(common.threads),
        stats: stats.clone(),
    };
    let mut run = Run {
        cfg,
        stats,
        witness: common.witness,
        promise: Promise::default(),
    };
    let start = Instant::now();
    let (answer, witness, diagnostic) = decide(&cli.command, &g, &mut run)?;
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let report = Report {
        command: command_echo(),
        answer,
        witness,
        diagnostic,
        promise: run.promise,
        stats: Stats::from_snapshot(run.stats.snapshot(), elapsed_ms),
    };
    emit(&format!("{}\n", serde_json::to_string_pretty(&report)?))
}

/// Writes to stdout; a closed pipe downstream is not an error.
fn emit(text: &str) -> anyhow::Result<()> {
    use std::io::Write;
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hamlink: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
