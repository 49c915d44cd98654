//! Command-line front end. [`run`] returns the process exit code.
//!
//! | command    | exit 0                     | exit 1                | exit 2 |
//! |------------|----------------------------|-----------------------|--------|
//! | `solve`    | feasible within budget     | infeasible / over     | error  |
//! | `classify` | always on valid input      |                       | error  |
//! | `reduce`   | reduced instance written   |                       | error  |
//! | `verify`   | reduction agrees           | disagreement          | error  |
//! | `gen`      | document written           |                       | error  |

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::format::InstanceDocument;
use crate::generate::{generate, Family};
use crate::graph::{Graph, VertexNames};
use crate::recognition::{
    builtin_pattern, classify_target, embed_pattern, find_long_induced_cycle, Certificate,
    PatternEmbedding, PatternKind,
};
use crate::reductions::{
    eliminate_weights, reduce_claw, reduce_hexagon, reduce_long_cycle, verify_reduction,
    ReductionKind, ReductionOutput, Seed, VerifyReport, DEFAULT_WEIGHT_CAP,
};
use crate::solvers::{solve, Limits, SolverChoice, SolverUsed};

#[derive(Parser, Debug)]
#[command(name = "mincost-hom", about = "Minimum constrained cost homomorphisms", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Optimal homomorphism and decision against the budget.
    Solve {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = SolverArg::Auto)]
        solver: SolverArg,
        /// Overrides the document budget.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Complexity verdict for the target graph `h`.
    Classify { path: PathBuf },
    /// Builds a reduced instance from a seed document.
    Reduce {
        path: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Independent set size (claw).
        #[arg(long)]
        k: Option<usize>,
        /// Cycle length when no embedding is given (cycle).
        #[arg(long)]
        cycle_len: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Runs a reduction and checks it against the source oracle.
    Verify {
        path: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Independent set size; all of 1..=n when absent (claw).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        cycle_len: Option<usize>,
    },
    /// Writes a seeded random document.
    Gen {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SolverArg {
    Auto,
    Brute,
    Mincut,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Hexagon,
    Cycle,
    Claw,
    Deweight,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    RandomBipartite,
    Pib,
    Tree,
    #[value(name = "3partite")]
    ThreePartite,
    Cycle,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::RandomBipartite => Family::RandomBipartite,
            FamilyArg::Pib => Family::Pib,
            FamilyArg::Tree => Family::Tree,
            FamilyArg::ThreePartite => Family::ThreePartite,
            FamilyArg::Cycle => Family::Cycle,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Solve { path, solver, budget } => cmd_solve(&path, solver, budget, out),
        Command::Classify { path } => cmd_classify(&path, out),
        Command::Reduce { path, kind, k, cycle_len, output } => {
            let doc = read_doc(&path)?;
            let out_doc = reduce_document(&doc, kind, k, cycle_len)?;
            let text = out_doc.to_text()?;
            let inst = out_doc.weighted_instance()?;
            let stats = format!(
                "n = {}\nm = {}\nT = {}\n",
                inst.g.n(),
                inst.g.m(),
                inst.budget.map_or("none".into(), |t| t.to_string())
            );
            match output {
                Some(p) => {
                    std::fs::write(&p, text).map_err(|e| io_error(&p, e))?;
                    write!(out, "{stats}").map_err(write_error)?;
                }
                None => {
                    for line in stats.lines() {
                        writeln!(out, "# {line}").map_err(write_error)?;
                    }
                    write!(out, "{text}").map_err(write_error)?;
                }
            }
            Ok(0)
        }
        Command::Verify { path, kind, k, cycle_len } => cmd_verify(&path, kind, k, cycle_len, out),
        Command::Gen { family, n, seed, output } => {
            let text = generate(family.into(), n, seed)?.to_text()?;
            match output {
                Some(p) => std::fs::write(&p, text).map_err(|e| io_error(&p, e))?,
                None => write!(out, "{text}").map_err(write_error)?,
            }
            Ok(0)
        }
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Format(format!("{}: {e}", path.display()))
}

fn write_error(e: std::io::Error) -> Error {
    Error::Format(format!("writing output: {e}"))
}

fn read_doc(path: &Path) -> Result<InstanceDocument> {
    let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    InstanceDocument::parse(&text).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

fn label(names: &Option<VertexNames>, v: usize) -> String {
    names
        .as_ref()
        .and_then(|n| n.name(v))
        .map_or_else(|| v.to_string(), str::to_string)
}

fn cmd_solve(path: &Path, solver: SolverArg, budget: Option<u64>, out: &mut dyn Write) -> Result<i32> {
    let doc = read_doc(path)?;
    let mut inst = doc.weighted_instance()?;
    if budget.is_some() {
        inst.budget = budget;
    }
    let choice = match solver {
        SolverArg::Auto => SolverChoice::Auto,
        SolverArg::Brute => SolverChoice::BruteForce,
        SolverArg::Mincut => SolverChoice::MinCut,
    };
    let (hom, used) = solve(&inst, choice, &Limits::default())?;
    let names_g = doc.names_g()?;
    let names_h = doc.names_h()?;
    let used = match used {
        SolverUsed::BruteForce => "brute",
        SolverUsed::MinCut => "mincut",
    };
    let w = |out: &mut dyn Write, s: String| writeln!(out, "{s}").map_err(write_error);
    w(out, format!("solver: {used}"))?;
    let feasible = match &hom {
        None => {
            w(out, "optimum: none (no homomorphism)".into())?;
            false
        }
        Some(hom) => {
            w(out, format!("optimum: {}", hom.cost))?;
            let pairs: Vec<String> = hom
                .map
                .iter()
                .enumerate()
                .map(|(v, &x)| format!("{}->{}", label(&names_g, v), label(&names_h, x)))
                .collect();
            w(out, format!("map: {}", pairs.join(" ")))?;
            inst.budget.is_none_or(|t| hom.cost <= t)
        }
    };
    if let Some(t) = inst.budget {
        w(out, format!("budget: {t}"))?;
    }
    w(out, format!("decision: {}", if feasible { "yes" } else { "no" }))?;
    Ok(if feasible { 0 } else { 1 })
}

fn describe_certificate(cert: &Certificate) -> String {
    match cert {
        Certificate::Bipartition(b) => format!("bipartition {:?} / {:?}", b.part(0), b.part(1)),
        Certificate::Ordering(o) => {
            format!("min-max ordering X = {:?}, Y = {:?}", o.order_x, o.order_y)
        }
        Certificate::Pattern(p) => {
            let roles: Vec<String> =
                p.roles.iter().zip(&p.image).map(|(r, x)| format!("{r}={x}")).collect();
            format!("induced {} at {}", p.kind, roles.join(" "))
        }
        Certificate::InducedCycle(c) => format!("induced cycle {c:?}"),
        Certificate::OddCycle(c) => format!("odd cycle {c:?}"),
    }
}

fn cmd_classify(path: &Path, out: &mut dyn Write) -> Result<i32> {
    let doc = read_doc(path)?;
    let h = doc.graph_h()?;
    let verdict = classify_target(&h);
    let text = format!(
        "verdict: {}({})\nreason: {}\ncertificate: {}\n",
        verdict.kind,
        verdict.reason,
        verdict.reason.explanation(),
        describe_certificate(&verdict.certificate)
    );
    write!(out, "{text}").map_err(write_error)?;
    Ok(0)
}

// Target graph and embedding for a gadget reduction: the document's `h` and
// `embedding` when present, otherwise the bare pattern or a search in `h`.
fn target_and_embedding(
    doc: &InstanceDocument,
    kind: KindArg,
    cycle_len: Option<usize>,
) -> Result<(Graph, PatternEmbedding)> {
    let pattern = match kind {
        KindArg::Hexagon => PatternKind::Hexagon,
        KindArg::Claw => PatternKind::BipartiteClaw,
        KindArg::Cycle => PatternKind::EvenCycle(cycle_len.unwrap_or(8)),
        KindArg::Deweight => unreachable!("weight elimination needs no embedding"),
    };
    let h = match &doc.h {
        Some(_) => doc.graph_h()?,
        None => {
            if let PatternKind::EvenCycle(len) = pattern {
                if len < 4 || len % 2 != 0 {
                    return Err(Error::Precondition(format!("bad cycle length {len}")));
                }
            }
            builtin_pattern(pattern)
        }
    };
    if let Some(emb) = doc.embedding(&h)? {
        return Ok((h, emb));
    }
    let emb = match (kind, cycle_len) {
        (KindArg::Cycle, None) => find_long_induced_cycle(&h, 8).map(|c| PatternEmbedding {
            kind: PatternKind::EvenCycle(c.len()),
            roles: crate::recognition::role_names(PatternKind::EvenCycle(c.len())),
            image: c,
        }),
        _ => embed_pattern(&h, pattern),
    };
    let emb = emb.ok_or_else(|| Error::Precondition(format!("no induced {pattern} in h")))?;
    Ok((h, emb))
}

fn reduce(
    doc: &InstanceDocument,
    kind: KindArg,
    k: Option<usize>,
    cycle_len: Option<usize>,
) -> Result<ReductionOutput> {
    let (h, emb) = target_and_embedding(doc, kind, cycle_len)?;
    match kind {
        KindArg::Hexagon | KindArg::Cycle => {
            let g = doc.graph_g()?;
            let pre = doc.precolouring(&g, &h)?;
            if kind == KindArg::Hexagon {
                reduce_hexagon(&g, &pre, &h, &emb)
            } else {
                reduce_long_cycle(&g, &pre, &h, &emb)
            }
        }
        KindArg::Claw => reduce_claw(&doc.mis_instance(k)?, &h, &emb),
        KindArg::Deweight => unreachable!(),
    }
}

fn reduce_document(
    doc: &InstanceDocument,
    kind: KindArg,
    k: Option<usize>,
    cycle_len: Option<usize>,
) -> Result<InstanceDocument> {
    if kind == KindArg::Deweight {
        let (inst, origin) = eliminate_weights(&doc.weighted_instance()?, DEFAULT_WEIGHT_CAP)?;
        let mut out = InstanceDocument::from_instance(&inst);
        let names_g = doc.names_g()?;
        let mut seen = vec![0usize; origin.len()];
        let names = origin
            .iter()
            .map(|&v| {
                seen[v] += 1;
                format!("{}#{}", label(&names_g, v), seen[v])
            })
            .collect();
        out.names = Some(crate::format::NamesDoc { g: Some(names), h: None });
        return Ok(out);
    }
    Ok(InstanceDocument::from_reduction(&reduce(doc, kind, k, cycle_len)?))
}

fn cmd_verify(
    path: &Path,
    kind: KindArg,
    k: Option<usize>,
    cycle_len: Option<usize>,
    out: &mut dyn Write,
) -> Result<i32> {
    let doc = read_doc(path)?;
    let limits = Limits::default();
    let mut reports = Vec::new();
    match kind {
        KindArg::Deweight => {
            let seed = Seed::Weighted(doc.weighted_instance()?);
            reports.push(verify_reduction(ReductionKind::Deweight, &seed, &Graph::empty(0), None, &limits)?);
        }
        KindArg::Hexagon | KindArg::Cycle => {
            let (h, emb) = target_and_embedding(&doc, kind, cycle_len)?;
            let g = doc.graph_g()?;
            let pre = doc.precolouring(&g, &h)?;
            let rk = if kind == KindArg::Hexagon { ReductionKind::Hexagon } else { ReductionKind::LongCycle };
            reports.push(verify_reduction(rk, &Seed::Precolouring { g, pre }, &h, Some(&emb), &limits)?);
        }
        KindArg::Claw => {
            let (h, emb) = target_and_embedding(&doc, kind, cycle_len)?;
            let ks: Vec<usize> = match k.or(doc.k) {
                Some(k) => vec![k],
                None => (1..=doc.graph_g()?.n()).collect(),
            };
            for k in ks {
                let seed = Seed::Mis(doc.mis_instance(Some(k))?);
                reports.push(verify_reduction(ReductionKind::Claw, &seed, &h, Some(&emb), &limits)?);
            }
        }
    }
    for r in &reports {
        writeln!(out, "{}", report_line(r)).map_err(write_error)?;
    }
    let agree = reports.iter().all(|r| r.agree);
    writeln!(out, "{}", if agree { "agree" } else { "DISAGREE" }).map_err(write_error)?;
    Ok(if agree { 0 } else { 1 })
}

fn report_line(r: &VerifyReport) -> String {
    let opt = |x: Option<u64>| x.map_or("none".to_string(), |v| v.to_string());
    let mut line = format!(
        "{:?}: source {} target optimum {} budget {} certificate {} ({:.1?})",
        r.kind,
        if r.source_yes { "yes" } else { "no" },
        opt(r.target_optimum),
        opt(r.budget),
        match r.forward_certificate {
            Some(true) => "ok",
            Some(false) => "FAILED",
            None => "-",
        },
        r.elapsed
    );
    if r.kind == ReductionKind::Deweight {
        line.push_str(&format!(" source optimum {}", opt(r.source_optimum)));
    }
    line
}
