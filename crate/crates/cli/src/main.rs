use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use plethysm_core::hwv::{decompose, hwv_words, DecompositionReport, HwvWord, Variant};
use plethysm_core::oracle::{max_dim_from_env, OracleReport};
use plethysm_core::verify::{run_all, VerifyConfig};
use plethysm_core::{kostka, Content, Polynomial, YoungDiagram};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "plethysm",
    version,
    about = "Highest weight vectors and decompositions of S^k(S^m(C^n)) and Λ^k(S^m(C^n))"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose into irreducibles, listing a highest weight vector basis for each.
    Decompose(Space),
    /// List the highest weight vectors of one weight.
    Hwv {
        #[command(flatten)]
        space: Space,
        /// Young diagram, e.g. `9,6`.
        #[arg(long)]
        shape: YoungDiagram,
    },
    /// Count semistandard tableaux of a shape and content.
    Kostka {
        #[arg(long)]
        shape: YoungDiagram,
        #[arg(long)]
        content: Content,
        #[command(flatten)]
        out: Output,
    },
    /// Multiplicities from the weight-count oracle.
    Oracle {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long)]
        variant: Variant,
        #[command(flatten)]
        out: Output,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value_t = 3)]
        m: u32,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Require the relation with γ₁ in place of γ₂; that check then fails.
        #[arg(long)]
        force_gamma1_relation: bool,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Space {
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(2..=3))]
    k: u8,
    #[arg(long)]
    m: u32,
    #[arg(long, default_value_t = 4)]
    n: usize,
    #[arg(long)]
    variant: Variant,
    /// Also print each vector as a polynomial in the x[i][j].
    #[arg(long)]
    expand: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl Output {
    fn emit(&self, text: &str) -> Result<()> {
        match &self.output {
            Some(path) => std::fs::write(path, text)
                .with_context(|| format!("cannot write {}", path.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

impl Space {
    fn validate(&self) -> Result<usize> {
        let k = usize::from(self.k);
        if self.n < k {
            bail!("n must be at least k: got n = {}, k = {k}", self.n);
        }
        Ok(k)
    }
}

fn space_name(k: usize, m: u32, n: usize, variant: Variant) -> String {
    let outer = match variant {
        Variant::Sym => "S",
        Variant::Alt => "Λ",
    };
    format!("{outer}^{k}(S^{m}(C^{n}))")
}

fn json_text(v: &Value) -> String {
    format!(
        "{}\n",
        serde_json::to_string_pretty(v).expect("json value serializes")
    )
}

fn expansions(words: &[HwvWord]) -> Vec<(String, Polynomial)> {
    words.iter().map(|w| (w.to_string(), w.expand())).collect()
}

fn render_report(report: &DecompositionReport, n: usize, expand: bool) -> String {
    let mut s = String::new();
    writeln!(s, "{}", space_name(report.k, report.m, n, report.variant)).unwrap();
    let width = report
        .entries
        .iter()
        .map(|e| e.diagram.to_string().len())
        .max()
        .unwrap_or(0)
        .max("diagram".len());
    writeln!(s, "{:<width$}  mult  words", "diagram").unwrap();
    for e in &report.entries {
        let words: Vec<String> = e.words.iter().map(ToString::to_string).collect();
        writeln!(
            s,
            "{:<width$}  {:<4}  {}",
            e.diagram.to_string(),
            e.multiplicity,
            words.join(", ")
        )
        .unwrap();
    }
    if expand {
        let all: Vec<HwvWord> = report
            .entries
            .iter()
            .flat_map(|e| e.words.clone())
            .collect();
        for (name, p) in expansions(&all) {
            writeln!(s, "{name} = {p}").unwrap();
        }
    }
    s
}

fn with_expansions(mut v: Value, words: &[HwvWord]) -> Value {
    let list: Vec<Value> = expansions(words)
        .into_iter()
        .map(|(w, p)| json!({ "word": w, "polynomial": p }))
        .collect();
    v["expansions"] = Value::Array(list);
    v
}

fn cmd_decompose(space: &Space) -> Result<()> {
    let k = space.validate()?;
    let report = decompose(k, space.m, space.variant)?;
    let text = match space.out.format {
        Format::Text => render_report(&report, space.n, space.expand),
        Format::Json => {
            let mut v = serde_json::to_value(&report)?;
            if space.expand {
                let all: Vec<HwvWord> = report
                    .entries
                    .iter()
                    .flat_map(|e| e.words.clone())
                    .collect();
                v = with_expansions(v, &all);
            }
            json_text(&v)
        }
    };
    space.out.emit(&text)
}

fn cmd_hwv(space: &Space, shape: &YoungDiagram) -> Result<()> {
    let k = space.validate()?;
    if shape.len() > k {
        bail!(
            "shape {shape} has {} rows but k = {k} allows at most {k}",
            shape.len()
        );
    }
    let words = hwv_words(k, space.m, space.variant, shape)?;
    let text = match space.out.format {
        Format::Text => {
            let mut s = String::new();
            if space.expand {
                for (w, p) in expansions(&words) {
                    writeln!(s, "{w} = {p}").unwrap();
                }
            } else {
                for w in &words {
                    writeln!(s, "{w}").unwrap();
                }
            }
            s
        }
        Format::Json => {
            let mut v = json!({
                "k": k,
                "m": space.m,
                "variant": space.variant,
                "diagram": shape.padded(k),
                "words": words,
            });
            if space.expand {
                v = with_expansions(v, &words);
            }
            json_text(&v)
        }
    };
    space.out.emit(&text)
}

fn cmd_kostka(shape: &YoungDiagram, content: &Content, out: &Output) -> Result<()> {
    let value = kostka(shape, content);
    let text = match out.format {
        Format::Text => format!("{value}\n"),
        Format::Json => json_text(&json!({
            "shape": shape.parts(),
            "content": content.0,
            "kostka": value,
        })),
    };
    out.emit(&text)
}

fn cmd_oracle(m: u32, n: usize, variant: Variant, out: &Output) -> Result<()> {
    if n == 0 {
        bail!("n must be positive");
    }
    let report = OracleReport::by_kostka(m, n, variant);
    let text = match out.format {
        Format::Text => {
            let mut s = format!("{}\n", space_name(3, m, n, variant));
            for e in &report.multiplicities {
                let d = YoungDiagram::new(e.diagram.clone())?;
                writeln!(s, "{d}  {}", e.mult).unwrap();
            }
            s
        }
        Format::Json => format!("{}\n", report.to_json_pretty()),
    };
    out.emit(&text)
}

fn cmd_verify(m: u32, n: usize, force: bool, out: &Output) -> Result<bool> {
    if n < 3 {
        bail!("n must be at least 3 for three columns, got {n}");
    }
    let cfg = VerifyConfig {
        max_m: m,
        n,
        max_dim: max_dim_from_env(),
        force_gamma1_relation: force,
    };
    let outcomes = run_all(&cfg);
    let passed = outcomes.iter().all(|c| c.passed);
    let text = match out.format {
        Format::Text => outcomes.iter().map(|c| format!("{c}\n")).collect(),
        Format::Json => json_text(&json!({
            "passed": passed,
            "checks": outcomes
                .iter()
                .map(|c| json!({ "id": c.id, "passed": c.passed, "detail": c.detail }))
                .collect::<Vec<_>>(),
        })),
    };
    out.emit(&text)?;
    Ok(passed)
}

fn run(cli: Cli) -> Result<bool> {
    match &cli.command {
        Command::Decompose(space) => cmd_decompose(space).map(|()| true),
        Command::Hwv { space, shape } => cmd_hwv(space, shape).map(|()| true),
        Command::Kostka {
            shape,
            content,
            out,
        } => cmd_kostka(shape, content, out).map(|()| true),
        Command::Oracle { m, n, variant, out } => cmd_oracle(*m, *n, *variant, out).map(|()| true),
        Command::Verify {
            m,
            n,
            force_gamma1_relation,
            out,
        } => cmd_verify(*m, *n, *force_gamma1_relation, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
