use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use matchcert::caps::Caps;
use matchcert::generators::generate;
use matchcert::graph6::write_graph6;

use matchcert_cli::catalog::{self, CatalogEntry};
use matchcert_cli::checks::CheckKind;
use matchcert_cli::report::Record;
use matchcert_cli::{evaluate, exit_code, sweep, to_jsonl, verify, EXIT_FAILED, EXIT_INPUT, EXIT_OK};

#[derive(Parser)]
#[command(name = "matchcert", version, about = "Perfect matchings, odd cuts and joins in cubic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Perfect matchings enumerated per graph before giving up.
    #[arg(long, global = true)]
    cap_matchings: Option<u64>,
    /// Largest order for which odd vertex sets are enumerated.
    #[arg(long, global = true)]
    cap_oddsets: Option<usize>,
    /// Backtracking nodes for colouring and Hamiltonian path searches.
    #[arg(long, global = true)]
    cap_nodes: Option<u64>,
    /// Base seed for random graphs.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Graphs {
    /// Generator spec, `name` or `name:p1,p2` (e.g. `prism:5`). Repeatable.
    #[arg(long = "gen")]
    specs: Vec<String>,
    /// A graph6 string. Repeatable.
    #[arg(long = "g6")]
    graph6: Vec<String>,
    /// File with one graph6 string per line.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckName {
    Ms,
    Kr,
    Fr,
    Thm1,
    Thm3,
    Thm45,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Traceable,
}

#[derive(Subcommand)]
enum Command {
    /// Order, girth, chromatic index, oddness, cyclic connectivity.
    Invariants(Graphs),
    /// Search for a conjecture witness or check a bound.
    Check {
        which: CheckName,
        #[command(flatten)]
        graphs: Graphs,
    },
    /// Matchings and joins from a Hamiltonian path.
    Construct {
        which: Construction,
        #[command(flatten)]
        graphs: Graphs,
    },
    /// Print graph6 strings of a generated family member. Random families
    /// take their seed from `--seed`.
    Gen {
        name: String,
        params: Vec<u64>,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// Run every check over a catalog.
    Sweep {
        /// File with one graph6 string per line.
        #[arg(long, conflicts_with = "builtin")]
        catalog: Option<PathBuf>,
        /// The built-in catalog of named families and random graphs.
        #[arg(long)]
        builtin: bool,
        /// Add wall-clock times to each record (makes reports differ run to run).
        #[arg(long)]
        timings: bool,
    },
    /// Re-check every certificate in a report.
    Verify { report: PathBuf },
}

fn caps(cli: &Cli) -> Caps {
    let mut c = Caps::default();
    if let Some(x) = cli.cap_matchings {
        c.matchings = x;
    }
    if let Some(x) = cli.cap_oddsets {
        c.oddsets = x;
    }
    if let Some(x) = cli.cap_nodes {
        c.nodes = x;
    }
    c
}

fn load(graphs: &Graphs) -> Result<Vec<CatalogEntry>, String> {
    let mut out = Vec::new();
    for s in &graphs.specs {
        out.push(catalog::from_spec(s).map_err(|e| format!("--gen {s}: {e}"))?);
    }
    for (i, s) in graphs.graph6.iter().enumerate() {
        out.push(catalog::from_graph6(s, format!("g6-{:03}", i + 1)).map_err(|e| format!("--g6 {s}: {e}"))?);
    }
    if let Some(p) = &graphs.input {
        out.extend(catalog::from_graph6_file(p)?);
    }
    if out.is_empty() {
        return Err("no graph given; use --gen, --g6 or --input".into());
    }
    Ok(out)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn gen_lines(name: &str, params: &[u64], count: u64, seed: u64) -> Result<String, String> {
    let random = name.starts_with("random_");
    if count > 1 && !random {
        return Err(format!("--count needs a random family, got {name}"));
    }
    let mut text = String::new();
    for i in 0..count {
        let mut p = params.to_vec();
        if random {
            p.push(seed + i);
        }
        let g = generate(name, &p).map_err(|e| e.to_string())?;
        text.push_str(&write_graph6(&g).map_err(|e| e.to_string())?);
        text.push('\n');
    }
    Ok(text)
}

fn records_for(cli: &Cli, graphs: &Graphs, kinds: &[CheckKind]) -> Result<Vec<Record>, String> {
    let caps = caps(cli);
    Ok(load(graphs)?.iter().map(|e| evaluate(e, kinds, &caps, false)).collect())
}

fn run(cli: &Cli) -> Result<i32, String> {
    let records = match &cli.command {
        Command::Invariants(graphs) => records_for(cli, graphs, &[CheckKind::Invariants])?,
        Command::Check { which, graphs } => {
            let kind = match which {
                CheckName::Ms => CheckKind::Ms,
                CheckName::Kr => CheckKind::Kr,
                CheckName::Fr => CheckKind::Fr,
                CheckName::Thm1 => CheckKind::Thm1,
                CheckName::Thm3 => CheckKind::Thm3,
                CheckName::Thm45 => CheckKind::Thm45,
            };
            records_for(cli, graphs, &[kind])?
        }
        Command::Construct {
            which: Construction::Traceable,
            graphs,
        } => records_for(cli, graphs, &[CheckKind::Traceable])?,
        Command::Gen { name, params, count } => {
            emit(&cli.out, &gen_lines(name, params, *count, cli.seed)?)?;
            return Ok(EXIT_OK);
        }
        Command::Sweep {
            catalog: file,
            builtin,
            timings,
        } => {
            let entries = match (file, builtin) {
                (Some(p), _) => catalog::from_graph6_file(p)?,
                (None, true) => catalog::builtin(cli.seed).map_err(|e| e.to_string())?,
                (None, false) => return Err("sweep needs --catalog FILE or --builtin".into()),
            };
            let mut ids: Vec<&str> = entries.iter().map(|e| e.id.as_str()).collect();
            ids.sort_unstable();
            if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
                return Err(format!("duplicate id {}", w[0]));
            }
            sweep(&entries, &CheckKind::ALL, &caps(cli), cli.jobs, *timings).map_err(|e| e.to_string())?
        }
        Command::Verify { report } => {
            let text = std::fs::read_to_string(report).map_err(|e| format!("{}: {e}", report.display()))?;
            let mut bad = false;
            let mut lines = String::new();
            for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
                let rec: Record =
                    serde_json::from_str(line).map_err(|e| format!("{}:{}: {e}", report.display(), i + 1))?;
                let errs = verify::verify_record(&rec);
                bad |= !errs.is_empty();
                let status = serde_json::json!({ "id": rec.id, "ok": errs.is_empty(), "errors": errs });
                lines.push_str(&status.to_string());
                lines.push('\n');
            }
            emit(&cli.out, &lines)?;
            return Ok(if bad { EXIT_FAILED } else { EXIT_OK });
        }
    };
    emit(&cli.out, &to_jsonl(&records))?;
    Ok(exit_code(&records))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
