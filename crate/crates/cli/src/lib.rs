//! Command-line front end for `zonotope-core`.
//!
//! Exit status: 0 on success (and agreement for `verify`), 1 when the
//! f-polynomial routes disagree, 2 on malformed input, 3 when an
//! enumeration budget would be exceeded.

pub mod report;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use zonotope_core::combinat::fubini;
use zonotope_core::graph::{family, whitney_twist, FamilyKind};
use zonotope_core::{io, Error, Graph};

/// Vertex limit for the q-chromatic routes unless `--budget` is given.
pub const DEFAULT_PSI_BUDGET: usize = 8;
/// Vertex limit for the covector sweep unless `--budget` is given.
pub const DEFAULT_ORACLE_BUDGET: usize = 7;

#[derive(Parser, Debug)]
#[command(name = "gzono", version, about = "Face counts of graphical zonotopes")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Override the vertex limit of the exhaustive routes.
    #[arg(long, global = true, value_name = "N")]
    pub budget: Option<usize>,

    /// Seed for random graph generation.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct GraphInput {
    /// Graph file in text ("n m" + edge lines) or JSON form; "-" reads stdin.
    pub file: Option<PathBuf>,

    /// Inline graph in text form, lines separated by ';' or newlines, or JSON.
    #[arg(long, value_name = "GRAPH")]
    pub inline: Option<String>,

    /// Standard family instead of an explicit graph.
    #[arg(long, value_enum)]
    pub family: Option<Family>,

    /// Number of vertices for --family (and for random graphs).
    #[arg(long, short = 'n')]
    pub n: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum Family {
    Complete,
    Cycle,
    Path,
    Star,
}

impl From<Family> for FamilyKind {
    fn from(f: Family) -> Self {
        match f {
            Family::Complete => FamilyKind::Complete,
            Family::Cycle => FamilyKind::Cycle,
            Family::Path => FamilyKind::Path,
            Family::Star => FamilyKind::Star,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, Default)]
pub enum Route {
    #[default]
    Flats,
    Main,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// f-polynomial of the graphical zonotope.
    Fpoly {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = Route::Flats)]
        route: Route,
    },
    /// f-vector from the flat expansion.
    Fvector {
        #[command(flatten)]
        input: GraphInput,
    },
    /// q-chromatic symmetric function in the monomial basis.
    Psiq {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Chromatic polynomial.
    Chromatic {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Number of acyclic orientations.
    Acyclic {
        #[command(flatten)]
        input: GraphInput,
        /// Also count by enumerating every orientation.
        #[arg(long)]
        brute: bool,
    },
    /// Cancellation-free antipode, one term per flat.
    Antipode {
        #[command(flatten)]
        input: GraphInput,
    },
    /// f-vector by brute-force covector enumeration.
    Oracle {
        #[command(flatten)]
        input: GraphInput,
        /// Print every covector as a sign string, one per line.
        #[arg(long)]
        dump_covectors: bool,
    },
    /// Whitney twist around {u, v} on the given side, comparing invariants.
    Twist {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        /// Comma-separated vertices of the twisted side.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        side: Vec<usize>,
    },
    /// Compare all three f-polynomial routes.
    Verify {
        #[command(flatten)]
        input: GraphInput,
        /// Check seeded random graphs G(n, p) instead of one input graph.
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
    },
    /// Print a family member as a graph file.
    Family {
        #[command(flatten)]
        input: GraphInput,
    },
}

/// Failure categories mapped onto exit codes.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Budget(_) => 3,
        }
    }
}

pub fn parse_graph_input(input: &GraphInput) -> Result<Graph, Failure> {
    let sources = [
        input.file.is_some(),
        input.inline.is_some(),
        input.family.is_some(),
    ]
    .iter()
    .filter(|&&s| s)
    .count();
    if sources != 1 {
        return Err(Failure::Input(
            "give exactly one graph source: FILE, --inline or --family".into(),
        ));
    }
    if let Some(kind) = input.family {
        let n = input
            .n
            .ok_or_else(|| Failure::Input("--family needs --n".into()))?;
        return Ok(family(kind.into(), n)?);
    }
    let text = match (&input.file, &input.inline) {
        (Some(path), _) if path.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("reading stdin: {e}")))?;
            s
        }
        (Some(path), _) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("reading {}: {e}", path.display())))?,
        (None, Some(inline)) if inline.trim_start().starts_with('{') => inline.clone(),
        (None, Some(inline)) => inline.replace(';', "\n"),
        (None, None) => unreachable!(),
    };
    Ok(io::parse_any(&text)?)
}

/// Applies a budget override, announcing the enumeration size first.
fn budget_for(cli_budget: Option<usize>, default: usize, g: &Graph, what: &str) -> usize {
    match cli_budget {
        Some(b) => {
            eprintln!(
                "budget override: {what} on n = {} walks about {} ordered set partitions",
                g.n(),
                fubini(g.n())
            );
            b
        }
        None => default,
    }
}

/// Output of a command: text for humans, JSON for machines, and whether
/// the command found a disagreement.
pub struct Outcome {
    pub text: String,
    pub json: serde_json::Value,
    pub disagreement: bool,
}

impl Outcome {
    fn ok(text: String, json: serde_json::Value) -> Self {
        Outcome {
            text,
            json,
            disagreement: false,
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    use zonotope_core::{chromatic, oracle, qsym, zonotope};

    match &cli.command {
        Command::Fpoly { input, route } => {
            let g = parse_graph_input(input)?;
            let f = match route {
                Route::Flats => zonotope::f_poly_flats(&g),
                Route::Main => {
                    let b = budget_for(cli.budget, DEFAULT_PSI_BUDGET, &g, "fpoly --route main");
                    zonotope::f_poly_main_with_budget(&g, b)?
                }
            };
            Ok(Outcome::ok(
                f.to_string(),
                json!({ "graph": g, "f_polynomial": f.to_decimal_strings() }),
            ))
        }
        Command::Fvector { input } => {
            let g = parse_graph_input(input)?;
            let fv = zonotope::f_vector(&g);
            Ok(Outcome::ok(
                fv.to_string(),
                json!({ "graph": g, "f_vector": fv.to_decimal_strings() }),
            ))
        }
        Command::Psiq { input } => {
            let g = parse_graph_input(input)?;
            let b = budget_for(cli.budget, DEFAULT_PSI_BUDGET, &g, "psiq");
            let psi = qsym::psi_q_with_budget(&g, b)?;
            Ok(Outcome::ok(
                psi.to_string(),
                json!({ "graph": g, "psi_q": psi.to_json() }),
            ))
        }
        Command::Chromatic { input } => {
            let g = parse_graph_input(input)?;
            let p = chromatic::chromatic_poly(&g);
            Ok(Outcome::ok(
                p.to_string(),
                json!({ "graph": g, "chromatic_polynomial": p.to_decimal_strings() }),
            ))
        }
        Command::Acyclic { input, brute } => {
            let g = parse_graph_input(input)?;
            let a = chromatic::acyclic_count(&g);
            let mut text = a.to_string();
            let mut out = json!({ "graph": g, "acyclic_orientations": a.to_string() });
            if *brute {
                let b = chromatic::acyclic_count_brute(&g)?;
                text = format!("{a} (enumerated: {b})");
                out["enumerated"] = json!(b.to_string());
            }
            Ok(Outcome::ok(text, out))
        }
        Command::Antipode { input } => {
            let g = parse_graph_input(input)?;
            let s = zonotope::antipode(&g);
            Ok(Outcome::ok(
                report::antipode_text(&s),
                report::antipode_json(&s),
            ))
        }
        Command::Oracle {
            input,
            dump_covectors,
        } => {
            let g = parse_graph_input(input)?;
            let b = budget_for(cli.budget, DEFAULT_ORACLE_BUDGET, &g, "oracle");
            let covectors = oracle::enumerate_covectors_with_budget(&g, b)?;
            let fv = oracle::tally(&g, &covectors);
            let mut text = format!("{fv}\ncovectors: {}", covectors.len());
            let mut out = json!({
                "graph": g,
                "f_vector": fv.to_decimal_strings(),
                "covector_count": covectors.len(),
            });
            if *dump_covectors {
                let mut lines: Vec<String> = covectors.iter().map(ToString::to_string).collect();
                lines.sort_unstable();
                text = lines.join("\n");
                out["covectors"] = json!(lines);
            }
            Ok(Outcome::ok(text, out))
        }
        Command::Twist { input, u, v, side } => {
            let g = parse_graph_input(input)?;
            let twisted = whitney_twist(&g, *u, *v, side)?;
            let r = report::run_twist_demo(&g, &twisted)?;
            Ok(Outcome {
                text: r.to_text(),
                json: r.to_json(),
                disagreement: !r.f_match,
            })
        }
        Command::Verify {
            input,
            random,
            count,
            p,
        } => {
            let psi_budget = cli.budget.unwrap_or(DEFAULT_PSI_BUDGET);
            let oracle_budget = cli.budget.unwrap_or(DEFAULT_ORACLE_BUDGET);
            let graphs = if *random {
                if !(0.0..=1.0).contains(p) {
                    return Err(Failure::Input(format!(
                        "edge probability {p} outside [0, 1]"
                    )));
                }
                let n = input.n.unwrap_or(6);
                if n == 0 {
                    return Err(Failure::Input("random graphs need n >= 1".into()));
                }
                let mut sampler = zonotope_core::random::GraphSampler::new(cli.seed);
                (0..*count).map(|_| sampler.gnp(n, *p)).collect()
            } else {
                vec![parse_graph_input(input)?]
            };
            if let Some(b) = cli.budget {
                let n = graphs.iter().map(Graph::n).max().unwrap_or(0);
                eprintln!(
                    "budget override {b}: up to {} ordered set partitions per graph",
                    fubini(n)
                );
            }
            let reports = graphs
                .iter()
                .map(|g| report::run_verify(g, psi_budget, oracle_budget))
                .collect::<Result<Vec<_>, _>>()?;
            let disagreement = reports.iter().any(|r| !r.agree);
            let text = reports
                .iter()
                .map(report::VerifyReport::to_text)
                .collect::<Vec<_>>()
                .join("\n");
            let json = if *random {
                json!({ "seed": cli.seed, "reports": reports.iter().map(report::VerifyReport::to_json).collect::<Vec<_>>() })
            } else {
                reports[0].to_json()
            };
            Ok(Outcome {
                text,
                json,
                disagreement,
            })
        }
        Command::Family { input } => {
            let g = parse_graph_input(input)?;
            Ok(Outcome::ok(
                io::to_text(&g).trim_end().to_string(),
                json!(g),
            ))
        }
    }
}

pub fn run(cli: &Cli) -> ExitCode {
    match execute(cli) {
        Ok(out) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("JSON values serialize")
            } else {
                out.text
            };
            // A closed pipe downstream is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            ExitCode::from(if out.disagreement { 1 } else { 0 })
        }
        Err(f) => {
            match &f {
                Failure::Input(m) => eprintln!("error: {m}"),
                Failure::Budget(m) => eprintln!("error: {m} (raise it with --budget)"),
            }
            ExitCode::from(f.exit_code())
        }
    }
}
