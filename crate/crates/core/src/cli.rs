//! Command-line front end.
//!
//! Exit codes: 0 when a verdict or value was computed, 1 for usage and input
//! errors, 2 when a computation could not be carried out (no oracle for a
//! component, an enumeration cap or a search bound).

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::artin_words::{
    delta_decompose, delta_word, iota_intersection, kappa, kappa_global, pi_tilde, tau_tilde, theta,
    ArtinWord, WordOracle,
};
use crate::coxeter::{CoxeterGraph, Engine};
use crate::cubepath::{is_trivial, normalize, word_to_prepath, OracleRegistry, SolverOracle};
use crate::error::Error;
use crate::garside::{build_garside_capped, GarsideNF};
use crate::genset::GenSet;
use crate::refcheck::{bfs_equal, Bounds, Presentation, Verdict};
use crate::virtual_braids::{rewrite_to_semidirect, spherical_dimension, VbSolver, VbWord};

#[derive(Parser, Debug)]
#[command(name = "artin-tits", version, about = "Word problems in Artin-Tits and virtual braid groups")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Element cap when enumerating finite parabolic subgroups.
    #[arg(long, global = true, default_value_t = crate::coxeter::DEFAULT_ENUMERATION_CAP,
          value_parser = positive)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coxeter group computations.
    #[command(subcommand)]
    Coxeter(CoxeterCmd),
    /// Artin group computations.
    #[command(subcommand)]
    Artin(ArtinCmd),
    /// Word oracles for free-of-infinity subsets.
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Virtual braid groups.
    #[command(subcommand)]
    Vb(VbCmd),
    /// Bounded search for a derivation of `u = v` from the relators.
    Refcheck(RefcheckArgs),
}

#[derive(Args, Debug)]
struct GraphArg {
    /// Coxeter graph in JSON.
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EngineArg {
    Auto,
    Geometric,
    Combinatorial,
}

#[derive(Subcommand, Debug)]
enum CoxeterCmd {
    /// Canonical reduced word of a Coxeter word.
    Reduce {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
        /// Word file, `-` for stdin.
        word: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum ArtinCmd {
    /// Decide `u = v`.
    Equal {
        #[command(flatten)]
        graph: GraphArg,
        u: PathBuf,
        v: PathBuf,
    },
    /// Decide whether a word represents the identity.
    Trivial {
        #[command(flatten)]
        graph: GraphArg,
        word: PathBuf,
    },
    /// Decide membership in the parabolic subgroup `A_T`.
    Member {
        #[command(flatten)]
        graph: GraphArg,
        /// Generators of `T`, comma or space separated.
        #[arg(long)]
        subset: String,
        word: PathBuf,
    },
    /// Normal cube path of the word's prepath.
    Normalize {
        #[command(flatten)]
        graph: GraphArg,
        word: PathBuf,
        /// Also write the normalized prepath as JSON.
        #[arg(long)]
        emit_prepath: Option<PathBuf>,
    },
    /// Retraction of a colored word onto `A_T`.
    Pi {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        subset: String,
        word: PathBuf,
    },
    /// Decomposition into `δ(w,s)` factors and a residual.
    Delta {
        #[command(flatten)]
        graph: GraphArg,
        word: PathBuf,
    },
    /// Image in the Coxeter group.
    Theta {
        #[command(flatten)]
        graph: GraphArg,
        word: PathBuf,
    },
    /// Positive lift of a Coxeter word's canonical reduced form.
    Tau {
        #[command(flatten)]
        graph: GraphArg,
        word: PathBuf,
    },
    /// Decide `αA_X ∩ A_Y ≠ ∅` for a word supported in a free-of-infinity set.
    Iota {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        word: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCmd {
    /// Build the oracle for a subset and evaluate a word with it.
    Check {
        #[command(flatten)]
        graph: GraphArg,
        /// Defaults to the word's support.
        #[arg(long)]
        subset: Option<String>,
        word: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum VbCmd {
    /// Decide `u = v` in `VB_n`.
    Equal {
        #[arg(short)]
        n: usize,
        u: PathBuf,
        v: PathBuf,
    },
    /// Rewrite a word as `κ · p` with `κ ∈ K_n`.
    Rewrite {
        #[arg(short)]
        n: usize,
        word: PathBuf,
    },
    /// Largest spherical subset of `Γ_{VB,n}`.
    Dim {
        #[arg(short)]
        n: usize,
    },
}

#[derive(Args, Debug)]
struct RefcheckArgs {
    /// Coxeter graph in JSON; use `--vb` for a virtual braid presentation.
    #[arg(long, conflicts_with = "vb", required_unless_present = "vb")]
    graph: Option<PathBuf>,
    /// Strand count of a `VB_n` presentation.
    #[arg(long)]
    vb: Option<usize>,
    #[arg(long, default_value_t = 8)]
    depth: usize,
    #[arg(long, default_value_t = 20_000, value_parser = positive)]
    width: usize,
    #[arg(long, default_value_t = 24)]
    max_len: usize,
    u: PathBuf,
    v: PathBuf,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

struct Output {
    text: String,
    json: Value,
}

fn out(text: impl Into<String>, json: Value) -> Output {
    Output { text: text.into(), json }
}

/// Runs the command line `argv` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() {
                write!(stderr, "{}", e.render())
            } else {
                write!(stdout, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            let _ = match cli.format {
                Format::Text => writeln!(stdout, "{}", o.text.trim_end()),
                Format::Json => writeln!(stdout, "{}", o.json),
            };
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NoOracleAvailable { .. }
        | Error::CapExceeded(_)
        | Error::BoundsExceeded(_)
        | Error::InvariantBreach(_)
        | Error::EmbeddingSelfCheckFailed(_) => 2,
        _ => 1,
    }
}

/// Entry point for the binary.
pub fn main_exit_code() -> i32 {
    run(std::env::args_os(), &mut io::stdout(), &mut io::stderr())
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {}: {e}", path.display())))
}

fn load_graph(arg: &GraphArg) -> Result<Arc<CoxeterGraph>, Failure> {
    Ok(Arc::new(CoxeterGraph::from_json(&read_text(&arg.graph)?)?))
}

fn read_word(g: &CoxeterGraph, path: &Path) -> Result<ArtinWord, Failure> {
    Ok(ArtinWord::parse(g, &read_text(path)?)?)
}

fn read_vb(n: usize, path: &Path) -> Result<VbWord, Failure> {
    Ok(VbWord::parse(n, &read_text(path)?)?)
}

fn names(g: &CoxeterGraph, set: GenSet) -> Value {
    json!(set.iter().map(|s| g.name(s)).collect::<Vec<_>>())
}

fn word_out(g: &CoxeterGraph, w: &ArtinWord) -> (String, Value) {
    let text = w.display(g).to_string();
    let shown = if text.is_empty() { "(empty)".to_string() } else { text.clone() };
    (shown, json!(text))
}

fn verdict(flag: bool, yes: &str, no: &str) -> Output {
    let word = if flag { yes } else { no };
    out(word, json!({ "verdict": word }))
}

fn dispatch(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Coxeter(CoxeterCmd::Reduce { graph, engine, word }) => {
            let g = load_graph(graph)?;
            let names: Vec<String> = read_text(word)?.split_whitespace().map(String::from).collect();
            let raw = names.iter().map(|n| g.generator(n)).collect::<Result<Vec<_>, _>>()?;
            let engine = match engine {
                EngineArg::Auto => Engine::Auto,
                EngineArg::Geometric => Engine::Geometric,
                EngineArg::Combinatorial => Engine::Combinatorial,
            };
            let e = g.reduce_with(&raw, engine)?;
            Ok(out(e.to_string(), json!({ "word": e.names(), "length": e.length() })))
        }
        Command::Artin(cmd) => artin(cmd),
        Command::Oracle(OracleCmd::Check { graph, subset, word }) => {
            let g = load_graph(graph)?;
            let w = read_word(&g, word)?;
            let set = match subset {
                Some(s) => g.subset(s)?,
                None => w.support(),
            };
            oracle_check(cli, &g, set, &w)
        }
        Command::Vb(cmd) => vb(cmd),
        Command::Refcheck(args) => refcheck(args),
    }
}

fn artin(cmd: &ArtinCmd) -> Result<Output, Failure> {
    match cmd {
        ArtinCmd::Equal { graph, u, v } => {
            let g = load_graph(graph)?;
            let (u, v) = (read_word(&g, u)?, read_word(&g, v)?);
            let reg = OracleRegistry::new(g);
            Ok(verdict(is_trivial(&reg, &u.concat(&v.inverse()))?, "equal", "not equal"))
        }
        ArtinCmd::Trivial { graph, word } => {
            let g = load_graph(graph)?;
            let w = read_word(&g, word)?;
            let reg = OracleRegistry::new(g);
            Ok(verdict(is_trivial(&reg, &w)?, "trivial", "not trivial"))
        }
        ArtinCmd::Member { graph, subset, word } => {
            let g = load_graph(graph)?;
            let t = g.subset(subset)?;
            let w = read_word(&g, word)?;
            let z = w.support();
            let reg = Arc::new(OracleRegistry::new(g.clone()));
            let found = if g.is_free_of_infinity(z) {
                kappa(&g, &w, t, z, &*reg.get(z)?)?
            } else {
                kappa_global(&g, &w, t, &SolverOracle::new(reg))?
            };
            Ok(match found {
                Some(r) => {
                    let (text, js) = word_out(&g, &r);
                    out(format!("member\n{text}"), json!({ "verdict": "member", "word": js }))
                }
                None => verdict(false, "member", "not member"),
            })
        }
        ArtinCmd::Normalize { graph, word, emit_prepath } => {
            let g = load_graph(graph)?;
            let w = read_word(&g, word)?;
            let reg = OracleRegistry::new(g.clone());
            let (p, _) = normalize(&reg, &word_to_prepath(&w))?;
            let js = p.to_json(&g);
            if let Some(path) = emit_prepath {
                fs::write(path, &js).map_err(|e| Failure::Usage(format!("writing {}: {e}", path.display())))?;
            }
            let value: Value = serde_json::from_str(&js).expect("prepath JSON");
            let text = p.display(&g).to_string();
            Ok(out(text, value))
        }
        ArtinCmd::Pi { graph, subset, word } => {
            let g = load_graph(graph)?;
            let t = g.subset(subset)?;
            let w = read_word(&g, word)?;
            let (text, js) = word_out(&g, &pi_tilde(&g, &w, t)?);
            Ok(out(text, json!({ "word": js })))
        }
        ArtinCmd::Delta { graph, word } => {
            let g = load_graph(graph)?;
            let w = read_word(&g, word)?;
            let (factors, residual) = delta_decompose(&g, &w)?;
            let mut lines = Vec::new();
            let mut items = Vec::new();
            for f in &factors {
                let expanded = delta_word(f)?;
                lines.push(format!("delta({}, {})^{}", f.w, g.name(f.s), f.sign));
                items.push(json!({
                    "w": f.w.names(), "s": g.name(f.s), "sign": f.sign,
                    "word": expanded.display(&g).to_string(),
                }));
            }
            lines.push(format!("residual {residual}"));
            Ok(out(lines.join("\n"), json!({ "factors": items, "residual": residual.names() })))
        }
        ArtinCmd::Theta { graph, word } => {
            let g = load_graph(graph)?;
            let e = theta(&g, &read_word(&g, word)?)?;
            Ok(out(e.to_string(), json!({ "word": e.names(), "length": e.length() })))
        }
        ArtinCmd::Tau { graph, word } => {
            let g = load_graph(graph)?;
            let e = g.parse_element(&read_text(word)?)?;
            let (text, js) = word_out(&g, &tau_tilde(&e));
            Ok(out(text, json!({ "word": js })))
        }
        ArtinCmd::Iota { graph, x, y, word } => {
            let g = load_graph(graph)?;
            let (x, y) = (g.subset(x)?, g.subset(y)?);
            let w = read_word(&g, word)?;
            let z = w.support().union(x).union(y);
            let reg = OracleRegistry::new(g.clone());
            Ok(match iota_intersection(&g, &w, x, y, z, &*reg.get(z)?)? {
                Some(r) => {
                    let (text, js) = word_out(&g, &r);
                    out(format!("intersect\n{text}"), json!({ "verdict": "intersect", "word": js }))
                }
                None => verdict(false, "intersect", "disjoint"),
            })
        }
    }
}

fn oracle_check(cli: &Cli, g: &Arc<CoxeterGraph>, set: GenSet, w: &ArtinWord) -> Result<Output, Failure> {
    if !w.support().is_subset(set) {
        return Err(Error::SupportViolation {
            support: g.format_subset(w.support()),
            allowed: g.format_subset(set),
        }
        .into());
    }
    if g.classify_finite(set).is_finite() {
        let gs = build_garside_capped(g, set, cli.cap)?;
        let nf = gs.to_normal_form(w)?;
        return Ok(out(format_nf(&nf), nf_json(&nf)));
    }
    let reg = OracleRegistry::new(g.clone());
    let oracle = reg.get(set)?;
    let trivial = oracle.is_trivial(w)?;
    let word = if trivial { "trivial" } else { "not trivial" };
    Ok(out(word, json!({ "verdict": word, "subset": names(g, set) })))
}

fn format_nf(nf: &GarsideNF) -> String {
    let mut parts = vec![format!("Delta^{}", nf.inf)];
    parts.extend(nf.canon.iter().map(|c| format!("[{c}]")));
    parts.join(" ")
}

fn nf_json(nf: &GarsideNF) -> Value {
    json!({
        "inf": nf.inf,
        "canon": nf.canon.iter().map(|c| c.names()).collect::<Vec<_>>(),
    })
}

fn vb(cmd: &VbCmd) -> Result<Output, Failure> {
    match cmd {
        VbCmd::Equal { n, u, v } => {
            let (u, v) = (read_vb(*n, u)?, read_vb(*n, v)?);
            let solver = VbSolver::new(*n)?;
            Ok(verdict(solver.equal(&u, &v)?, "equal", "not equal"))
        }
        VbCmd::Rewrite { n, word } => {
            let w = read_vb(*n, word)?;
            let (kappa, perm) = rewrite_to_semidirect(&w);
            let shown = if kappa.is_empty() { "(empty)".to_string() } else { kappa.to_string() };
            Ok(out(
                format!("kappa {shown}\nperm {perm}"),
                json!({ "kappa": kappa.to_json_value(), "perm": perm }),
            ))
        }
        VbCmd::Dim { n } => {
            let d = spherical_dimension(*n)?;
            Ok(out(d.to_string(), json!({ "dim": d })))
        }
    }
}

fn refcheck(args: &RefcheckArgs) -> Result<Output, Failure> {
    let bounds = Bounds { depth: args.depth, width: args.width, max_len: args.max_len };
    let (pres, u, v) = match (&args.graph, args.vb) {
        (Some(path), _) => {
            let g = load_graph(&GraphArg { graph: path.clone() })?;
            (Presentation::artin(&g), read_word(&g, &args.u)?, read_word(&g, &args.v)?)
        }
        (None, Some(n)) => {
            let (u, v) = (read_vb(n, &args.u)?, read_vb(n, &args.v)?);
            let pres = crate::virtual_braids::vb_presentation(n)?;
            (pres, u.to_presentation_word(), v.to_presentation_word())
        }
        (None, None) => return Err(Failure::Usage("either --graph or --vb is required".into())),
    };
    Ok(match bfs_equal(&pres, &u, &v, bounds) {
        Verdict::Equal => out("equal", json!({ "verdict": "equal" })),
        Verdict::Unknown { truncated } => out(
            if truncated { "unknown (frontier truncated)" } else { "unknown" },
            json!({ "verdict": "unknown", "truncated": truncated }),
        ),
    })
}
