use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use aalpha::closed_forms::NamedFamily;
use aalpha::families::{parse_graph_spec, Family};
use aalpha::graph::{format_edge_list, parse_edge_list};
use aalpha::groups::{power_graph, FiniteGroup, GroupKind};
use aalpha::spectra::{a_alpha_matrix, eig_symmetric, Alpha, DEFAULT_TOL};
use aalpha::verify::{
    check_named_pair, format_float, printed_form_findings, render_report, run_suite, verify_family,
    ReportFormat, Suite, SweepSummary, ALPHA_GRID, DEFAULT_SEED,
};
use aalpha::{Error, Graph};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "aalpha", version, about = "A_alpha spectra of joined unions and power graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// json or csv
    #[arg(long, default_value = "json")]
    format: String,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum of a graph given by constructor string or edge-list file.
    Spectrum {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Power graph of a finite group.
    Powergraph {
        /// e.g. cyclic:12, dihedral:8, dicyclic:8, elementary_abelian:2,3
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        /// Also write the edge list here.
        #[arg(long)]
        edges: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Closed-form prediction against a direct eigensolve.
    Verify {
        /// Family name, optionally with parameters (`cone:5,2`).
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, value_delimiter = ',')]
        params: Vec<u64>,
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Run a verification suite over an alpha grid.
    Sweep {
        #[arg(long, default_value = "acceptance")]
        suite: String,
        /// Comma-separated alpha grid; defaults to 0,0.25,0.5,0.75,1.
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<f64>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Report printed closed forms that disagree with the construction.
        #[arg(long)]
        errata: bool,
        #[command(flatten)]
        output: Output,
    },
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Spectrum { graph, alpha, output } => {
            let format = parse_format(&output.format)?;
            let g = load_graph(&graph)?;
            emit(&spectrum_text(&g, alpha, format, &[])?, output.out.as_deref())
        }
        Command::Powergraph { group, alpha, edges, output } => {
            let format = parse_format(&output.format)?;
            let kind: GroupKind = group.parse()?;
            let pg = power_graph(&FiniteGroup::build(kind)?)?;
            if let Some(path) = edges {
                write_file(&path, &format_edge_list(&pg.graph))?;
            }
            emit(&spectrum_text(&pg.graph, alpha, format, &pg.universal)?, output.out.as_deref())
        }
        Command::Verify { family, n, params, alpha, tol, output } => {
            let format = parse_format(&output.format)?;
            let family: Family = family_string(&family, n, &params)?.parse()?;
            let report = verify_family(&family, alpha, tol)?;
            if let Family::Named(named) = family {
                printed_pair_note(named, alpha);
            }
            let matched = report.matched;
            emit(&render_report(&[report], format), output.out.as_deref())?;
            if matched {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
        Command::Sweep { suite, alpha, tol, seed, errata, output } => {
            let format = parse_format(&output.format)?;
            let suite: Suite = suite.parse()?;
            let alphas = if alpha.is_empty() { ALPHA_GRID.to_vec() } else { alpha };
            let reports = run_suite(suite, seed, &alphas, tol)?;
            emit(&render_report(&reports, format), output.out.as_deref())?;
            let summary = SweepSummary::of(&reports);
            eprintln!("{}: {}/{} matched", suite.name(), summary.matched, summary.total);
            if errata {
                for &a in &alphas {
                    for f in printed_form_findings(a)?.into_iter().filter(|f| !f.agrees) {
                        eprintln!("printed form differs: {} (deviation {})", f.name, format_float(f.deviation));
                    }
                }
            }
            if summary.all_matched() {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
    }
}

fn parse_format(s: &str) -> Result<ReportFormat, Failure> {
    Ok(s.parse()?)
}

/// A spec containing `:` that is not an existing file is a constructor string.
fn load_graph(spec: &str) -> Result<Graph, Failure> {
    let path = Path::new(spec);
    if path.is_file() || !spec.contains(':') {
        let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{spec}: {e}")))?;
        Ok(parse_edge_list(&text)?)
    } else {
        Ok(parse_graph_spec(spec)?)
    }
}

fn family_string(family: &str, n: Option<u64>, params: &[u64]) -> Result<String, Failure> {
    let mut args: Vec<u64> = n.into_iter().collect();
    args.extend_from_slice(params);
    match (family.contains(':'), args.is_empty()) {
        (true, false) => Err(Failure::Usage("parameters given twice".into())),
        (true, true) => Ok(family.to_string()),
        (false, true) => Err(Failure::Usage(format!("family `{family}` needs --n or --params"))),
        (false, false) => {
            let joined: Vec<String> = args.iter().map(u64::to_string).collect();
            Ok(format!("{family}:{}", joined.join(",")))
        }
    }
}

fn printed_pair_note(family: NamedFamily, alpha: f64) {
    if let Ok(f) = check_named_pair(family, alpha) {
        if !f.agrees {
            eprintln!("printed pair differs from the construction by {}: {}", format_float(f.deviation), f.detail);
        }
    }
}

fn spectrum_text(g: &Graph, alpha: f64, format: ReportFormat, universal: &[usize]) -> Result<String, Failure> {
    let a = Alpha::new(alpha)?;
    let spectrum = eig_symmetric(&a_alpha_matrix(g, &a))?;
    let values: Vec<String> = spectrum.values().iter().map(|&x| format_float(x)).collect();
    Ok(match format {
        ReportFormat::Json => {
            let mut out = format!("{{\"n\":{},\"alpha\":{},", g.order(), format_float(alpha));
            if !universal.is_empty() {
                let u: Vec<String> = universal.iter().map(usize::to_string).collect();
                out.push_str(&format!("\"universal\":[{}],", u.join(",")));
            }
            out.push_str(&format!("\"eigenvalues\":[{}]}}\n", values.join(",")));
            out
        }
        ReportFormat::Csv => {
            let mut out = String::from("index,eigenvalue\n");
            for (i, v) in values.iter().enumerate() {
                out.push_str(&format!("{i},{v}\n"));
            }
            out
        }
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => write_file(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Usage(format!("stdout: {e}")))
        }
    }
}
