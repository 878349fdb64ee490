use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use glcaps::caps::{caps_of_string, is_oriented, overlay, render_caps, render_svg, CapKind};
use glcaps::diagrams::{arrow_diagram, header, preceq, render_two_rows};
use glcaps::jantzen::{full_jsf, reduced_jsf};
use glcaps::multiplicities::{
    block_below, decomposition_matrix, explain_decomp, explain_tilting, order_witness, Verdict,
};
use glcaps::verify::{
    arrow_pairs_suite, brauer_suite, characters_suite, jsf_reduced_suite, order_suite, structural_suite, BrauerBounds,
    SuiteReport,
};
use glcaps::walled_brauer::{
    cell_labels, dimension_identity_check, enumerate_diagrams, explain_walled, multiply, specht_dim_walled,
    walled_decomp_number, WalledDiagram, WalledQuery,
};
use glcaps::{Character, DominantWeight, Error, Partition};
use num_bigint::BigInt;
use serde_json::{json, Value};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "glcaps", version, about = "Arrow diagrams, cap diagrams and multiplicities for GL_n and walled Brauer algebras")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    output: Format,
    /// Draw arrows as ∧ ∨ × o instead of A V X O.
    #[arg(long, global = true)]
    unicode: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone)]
struct Walls {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    s1: usize,
    #[arg(long)]
    s2: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Arrow diagram of λ ∈ Λ(s1, s2).
    Diagram {
        #[command(flatten)]
        walls: Walls,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Cap diagram c_λ, optionally placed on the arrows of μ.
    Caps(CapArgs),
    /// Cap codiagram co_λ, optionally placed on the arrows of μ.
    Cocaps(CapArgs),
    /// Jantzen sum of λ.
    Jsf {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Only the roots that can contribute for bipartitions of p-cores.
        #[arg(long)]
        reduced: bool,
        /// List the individual reflection terms.
        #[arg(short, long)]
        verbose: bool,
    },
    /// Whether μ ≼ λ.
    Preceq {
        #[command(flatten)]
        walls: Walls,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(short, long)]
        verbose: bool,
    },
    /// All μ ≼ λ, λ first.
    Block {
        #[command(flatten)]
        walls: Walls,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Tilting multiplicity (T(λ):∇(μ)).
    Tilting(PairArgs),
    /// Decomposition number [Δ(λ):L(μ)].
    Decnum(PairArgs),
    /// Decomposition matrix of the block below λ.
    Decmat {
        #[command(flatten)]
        walls: Walls,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// λ† on Λ(s, s).
    Dagger {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Walled Brauer algebra B_{r,s}(δ).
    #[command(subcommand)]
    Brauer(BrauerCommand),
    /// Run a verification suite over ranges of small parameters.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CapArgs {
    #[command(flatten)]
    walls: Walls,
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Weight whose arrows the caps are placed on.
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    /// Also write an SVG drawing to this path.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct PairArgs {
    #[command(flatten)]
    walls: Walls,
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    /// Show the ≼ witness chain and per-cap orientations.
    #[arg(short, long)]
    verbose: bool,
}

#[derive(Subcommand)]
enum BrauerCommand {
    /// Number of walled diagrams, (r+s)!.
    Count {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    /// Product of two diagrams given as "r s | T1-B1,...".
    Mul {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Cell module dimensions and the dimension identities.
    Dims {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    /// Decomposition number [𝒮(μ¹,μ²):𝒟(λ¹,λ²)].
    Decnum {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, allow_hyphen_values = true)]
        delta: i64,
        #[arg(long)]
        p: u32,
        /// λ¹/λ²
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// μ¹/μ²
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(short, long)]
        verbose: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    JsfReduced,
    ArrowPairs,
    Order,
    Structural,
    Characters,
    Brauer,
}

#[derive(Args)]
struct VerifyArgs {
    suite: Suite,
    /// Largest prime p to include.
    #[arg(long, default_value_t = 5)]
    p: u32,
    /// Largest rank n to include.
    #[arg(long, default_value_t = 6)]
    n: usize,
    /// Largest wall parameter s1, s2.
    #[arg(long, default_value_t = 2)]
    s: usize,
    /// Largest |λ¹| + |λ²| for jsf-reduced.
    #[arg(long, default_value_t = 8)]
    max_size: u32,
    /// Largest r + s for characters and brauer.
    #[arg(long, default_value_t = 6)]
    max_rs: usize,
}

/// What the command produced: the text form and the JSON payload.
struct Output {
    text: String,
    json: Value,
}

fn weight(n: usize, s: &str) -> glcaps::Result<DominantWeight> {
    DominantWeight::parse(n, s)
}

fn pair(s: &str) -> glcaps::Result<(Partition, Partition)> {
    let (a, b) = s.split_once('/').ok_or_else(|| Error::Parse(format!("expected 'a,b/c,d', got {s:?}")))?;
    Ok((a.parse()?, b.parse()?))
}

fn walls_json(w: &Walls) -> Value {
    json!({"p": w.p, "n": w.n, "s1": w.s1, "s2": w.s2})
}

fn character_text(c: &Character) -> String {
    if c.is_zero() {
        return "0".into();
    }
    c.iter()
        .map(|(w, k)| format!("{k} χ[{w}]"))
        .collect::<Vec<_>>()
        .join(" + ")
        .replace("+ -", "- ")
}

fn verdict_text(v: &Verdict, out: &mut String) {
    match &v.witness {
        None => out.push_str("μ ≼ λ fails\n"),
        Some(chain) => {
            let names: Vec<String> = chain.iter().map(|w| format!("[{w}]")).collect();
            let _ = writeln!(out, "≼ witness: {}", names.join(" → "));
            for c in &v.caps {
                let _ = writeln!(out, "cap {}-{}: {}", c.left_label, c.right_label, c.orientation);
            }
        }
    }
}

fn run_caps(args: &CapArgs, kind: CapKind, unicode: bool) -> Result<Output> {
    let w = &args.walls;
    let lambda = weight(w.n, &args.lambda)?;
    let d = arrow_diagram(&lambda, w.s1, w.s2, w.p)?;
    let lin = d.linearise()?;
    let caps = caps_of_string(&lin, kind);
    let over = match &args.mu {
        Some(m) => {
            let mu = weight(w.n, m)?;
            let mu_lin = arrow_diagram(&mu, w.s1, w.s2, w.p)?.linearise()?;
            let related = match kind {
                CapKind::Cap => preceq(&mu, &lambda, w.s1, w.s2, w.p)?,
                CapKind::Cocap => preceq(&lambda, &mu, w.s1, w.s2, w.p)?,
            };
            if !related {
                return Err(Error::IncompatibleDiagrams.into());
            }
            Some((mu, overlay(&caps, &mu_lin)?))
        }
        None => None,
    };
    let arrows = over.as_ref().map(|(_, o)| &o.arrows);
    let mut text = format!("{}\n{}", header(&d, &lin), render_caps(&caps, arrows, unicode));
    if let Some((_, o)) = &over {
        let _ = write!(text, "\noriented: {}", if is_oriented(o) { "yes" } else { "no" });
    }
    if let Some(path) = &args.svg {
        std::fs::write(path, render_svg(&caps, arrows)).with_context(|| format!("writing {}", path.display()))?;
    }
    let pairs: Vec<Value> = caps
        .caps
        .iter()
        .map(|c| json!({"left": c.left, "right": c.right, "left_label": lin.label_at(c.left), "right_label": lin.label_at(c.right), "segment": c.segment}))
        .collect();
    let json = json!({
        "walls": walls_json(w),
        "lambda": lambda,
        "kind": if kind == CapKind::Cap { "cap" } else { "cocap" },
        "string": if unicode { lin.unicode() } else { lin.ascii() },
        "shift": lin.shift,
        "wall": lin.wall,
        "caps": pairs,
        "mu": over.as_ref().map(|(m, _)| m.to_string()),
        "oriented": over.as_ref().map(|(_, o)| is_oriented(o)),
    });
    Ok(Output { text, json })
}

fn run_pair(args: &PairArgs, tilting: bool) -> Result<Output> {
    let w = &args.walls;
    let lambda = weight(w.n, &args.lambda)?;
    let mu = weight(w.n, &args.mu)?;
    let v = if tilting {
        explain_tilting(&lambda, &mu, w.s1, w.s2, w.p)?
    } else {
        explain_decomp(&lambda, &mu, w.s1, w.s2, w.p)?
    };
    let mut text = v.value.to_string();
    if args.verbose {
        text.push('\n');
        verdict_text(&v, &mut text);
        text = text.trim_end().to_string();
    }
    let json = json!({"walls": walls_json(w), "lambda": lambda, "mu": mu, "value": v.value, "explanation": v});
    Ok(Output { text, json })
}

fn suite_output(r: SuiteReport) -> Result<Output> {
    let mut text = format!("{}: {} cases, {}", r.name, r.cases, if r.passed() { "all passed" } else { "FAILED" });
    for f in &r.failures {
        let _ = write!(text, "\n  {f}");
    }
    if !r.passed() {
        anyhow::bail!(SuiteFailed(text));
    }
    let json = json!({"suite": r.name, "cases": r.cases, "passed": true, "failures": r.failures});
    Ok(Output { text, json })
}

#[derive(Debug)]
struct SuiteFailed(String);

impl std::fmt::Display for SuiteFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for SuiteFailed {}

fn run_verify(v: &VerifyArgs) -> Result<Output> {
    let primes: Vec<u32> = (2..=v.p).filter(|q| (2..*q).take_while(|d| d * d <= *q).all(|d| q % d != 0)).collect();
    let report = match v.suite {
        Suite::JsfReduced => jsf_reduced_suite(&primes, v.n, v.max_size),
        Suite::ArrowPairs => arrow_pairs_suite(v.p, v.n, v.s),
        Suite::Order => order_suite(v.p, v.n),
        Suite::Structural => structural_suite(v.p, v.n, v.s),
        Suite::Characters => characters_suite(v.max_rs),
        Suite::Brauer => brauer_suite(BrauerBounds {
            count_max: v.max_rs.min(7),
            assoc_max: v.max_rs.min(5),
            dims_max: v.max_rs.max(1),
            ..BrauerBounds::default()
        }),
    };
    suite_output(report)
}

fn run_brauer(cmd: &BrauerCommand) -> Result<Output> {
    match cmd {
        BrauerCommand::Count { r, s } => {
            let count = enumerate_diagrams(*r, *s).len();
            Ok(Output { text: count.to_string(), json: json!({"r": r, "s": s, "count": count}) })
        }
        BrauerCommand::Mul { a, b } => {
            let a: WalledDiagram = a.parse()?;
            let b: WalledDiagram = b.parse()?;
            let prod = multiply::<BigInt>(&a, &b)?;
            let (d, c) = prod.terms().next().expect("a product of diagrams is a single term");
            let loops = c.degree().unwrap_or(0);
            Ok(Output {
                text: prod.to_string(),
                json: json!({"a": a.to_string(), "b": b.to_string(), "diagram": d.to_string(), "loops": loops}),
            })
        }
        BrauerCommand::Dims { r, s } => {
            let mut text = String::new();
            let mut rows = Vec::new();
            let mut total = BigInt::from(0);
            for (a, b) in cell_labels(*r, *s) {
                let d = specht_dim_walled(&a, &b, *r, *s)?;
                total += &d * &d;
                let _ = writeln!(text, "({a}, {b}): {d}");
                rows.push(json!({"lambda1": a.to_string(), "lambda2": b.to_string(), "dimension": d.to_string()}));
            }
            let identity = dimension_identity_check(*r, *s);
            let _ = write!(text, "sum of squares: {total}\nblock dimension identity: {}", if identity { "holds" } else { "fails" });
            Ok(Output {
                text,
                json: json!({"r": r, "s": s, "cells": rows, "sum_of_squares": total.to_string(), "identity_holds": identity}),
            })
        }
        BrauerCommand::Decnum { r, s, delta, p, lambda, mu, verbose } => {
            let (lambda1, lambda2) = pair(lambda)?;
            let (mu1, mu2) = pair(mu)?;
            let q = WalledQuery { mu1, mu2, lambda1, lambda2, r: *r, s: *s, delta: *delta, p: *p };
            let value = walled_decomp_number(&q)?;
            let (e, below, oriented) = explain_walled(&q)?;
            let mut text = value.to_string();
            if *verbose {
                let _ = write!(
                    text,
                    "\nn = {}, s1 = {}, s2 = {}, λ = [{}], μ = [{}]\nμ ≼ λ: {below}",
                    e.n, e.s1, e.s2, e.lambda, e.mu
                );
                if let Some(o) = oriented {
                    let _ = write!(text, "\nc_λμ oriented: {o}");
                }
            }
            Ok(Output {
                text,
                json: json!({"r": r, "s": s, "delta": delta, "p": p, "lambda": lambda, "mu": mu, "value": value,
                    "n": e.n, "s1": e.s1, "s2": e.s2, "preceq": below, "oriented": oriented}),
            })
        }
    }
}

fn run(cli: &Cli) -> Result<Output> {
    let unicode = cli.unicode;
    match &cli.command {
        Command::Diagram { walls: w, lambda } => {
            let lambda = weight(w.n, lambda)?;
            let d = arrow_diagram(&lambda, w.s1, w.s2, w.p)?;
            let lin = d.linearise()?;
            let string = if unicode { lin.unicode() } else { lin.ascii() };
            let picture = render_two_rows(&d, unicode)?;
            let body = picture.split_once('\n').map_or("", |(_, rest)| rest);
            let text = format!("{}\n{string}\n{body}", header(&d, &lin));
            let labels: Vec<usize> = (0..lin.p()).map(|k| lin.label_at(k)).collect();
            let json = json!({
                "walls": walls_json(w),
                "lambda": lambda,
                "string": string,
                "labels": labels,
                "shift": lin.shift,
                "wall": lin.wall,
                "below_wall_gap": d.below_gap(),
                "above_wall_gap": d.above_gap(),
            });
            Ok(Output { text, json })
        }
        Command::Caps(args) => run_caps(args, CapKind::Cap, unicode),
        Command::Cocaps(args) => run_caps(args, CapKind::Cocap, unicode),
        Command::Jsf { p, n, lambda, reduced, verbose } => {
            let lambda = weight(*n, lambda)?;
            let r = if *reduced { reduced_jsf::<BigInt>(&lambda, *p)? } else { full_jsf::<BigInt>(&lambda, *p)? };
            let mut text = character_text(&r.sum);
            if *verbose {
                for t in &r.terms {
                    let _ = write!(
                        text,
                        "\n  α = ε{} - ε{}, l = {}, a = {}, ν = {}, sign {:+}: χ[{}]",
                        t.reflection.i, t.reflection.j, t.reflection.level, t.a, t.valuation, t.sign, t.target
                    );
                }
            }
            let json = json!({"p": p, "n": n, "lambda": lambda, "reduced": reduced, "sum": r.sum, "terms": r.terms});
            Ok(Output { text, json })
        }
        Command::Preceq { walls: w, lambda, mu, verbose } => {
            let lambda = weight(w.n, lambda)?;
            let mu = weight(w.n, mu)?;
            let witness = order_witness(&mu, &lambda, w.s1, w.s2, w.p)?;
            let mut text = witness.is_some().to_string();
            if *verbose {
                if let Some(chain) = &witness {
                    let names: Vec<String> = chain.iter().map(|x| format!("[{x}]")).collect();
                    let _ = write!(text, "\n{}", names.join(" → "));
                }
            }
            let json = json!({"walls": walls_json(w), "lambda": lambda, "mu": mu, "preceq": witness.is_some(), "witness": witness});
            Ok(Output { text, json })
        }
        Command::Block { walls: w, lambda } => {
            let lambda = weight(w.n, lambda)?;
            let block = block_below(&lambda, w.s1, w.s2, w.p)?;
            let text = block.iter().map(|x| format!("[{x}]")).collect::<Vec<_>>().join("\n");
            Ok(Output { text, json: json!({"walls": walls_json(w), "lambda": lambda, "block": block}) })
        }
        Command::Tilting(args) => run_pair(args, true),
        Command::Decnum(args) => run_pair(args, false),
        Command::Decmat { walls: w, lambda } => {
            let lambda = weight(w.n, lambda)?;
            let m = decomposition_matrix(&lambda, w.s1, w.s2, w.p)?;
            let text = m.to_string().trim_end().to_string();
            let json = json!({"walls": walls_json(w), "lambda": lambda, "weights": m.weights, "rows": m.rows()});
            Ok(Output { text, json })
        }
        Command::Dagger { p, n, s, lambda } => {
            let lambda = weight(*n, lambda)?;
            let d = glcaps::caps::dagger(&lambda, *s, *p)?;
            Ok(Output { text: d.to_string(), json: json!({"p": p, "n": n, "s": s, "lambda": lambda, "dagger": d}) })
        }
        Command::Brauer(cmd) => run_brauer(cmd),
        Command::Verify(v) => run_verify(v),
    }
}

fn configure_threads() {
    if let Some(k) = std::env::var("GLCAPS_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    configure_threads();
    match run(&cli) {
        Ok(out) => {
            match cli.output {
                Format::Text => println!("{}", out.text),
                Format::Json => {
                    let mut v = out.json;
                    if let Value::Object(map) = &mut v {
                        map.insert("schema_version".into(), json!(SCHEMA_VERSION));
                    }
                    println!("{}", serde_json::to_string_pretty(&v).expect("JSON values serialise"));
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let code = match e.downcast_ref::<Error>() {
                Some(Error::Parse(_)) => 1,
                _ => 2,
            };
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
