use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use tourtypes::tournament::{parse_many, sample_tournament, MAX_ORDER};
use tourtypes::verify::{verify, Property, Scope};
use tourtypes::{all_tournaments, census, check_complement_invariance, count_copies};
use tourtypes::{Digraph2Spec, Error, Tournament};

#[derive(Parser)]
#[command(
    name = "tourtypes",
    version,
    about = "Typed Hamiltonian paths and cycles in tournaments"
)]
struct Cli {
    /// Worker threads (default: available parallelism). Output does not
    /// depend on this.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Path and cycle counts of every type.
    Census(CensusArgs),
    /// Check a property over a family of tournaments.
    Verify(VerifyArgs),
    /// Count copies of a path/cycle/vertex union.
    Hcount(HcountArgs),
    /// Emit tournaments in text format.
    Gen(GenArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["tournament", "input", "random"])))]
struct CensusArgs {
    #[arg(long)]
    order: usize,
    #[arg(long)]
    tournament: Option<String>,
    /// File with one tournament per line; `#` starts a comment line.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, requires = "seed")]
    random: bool,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["exhaustive", "random"])))]
struct VerifyArgs {
    #[arg(long)]
    property: String,
    #[arg(long)]
    exhaustive: bool,
    #[arg(long, requires_all = ["samples", "seed"])]
    random: bool,
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    order: usize,
    /// Exhaustive scopes up to order 7.
    #[arg(long)]
    allow_large: bool,
    /// Report wall time in `ms` (otherwise null).
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct HcountArgs {
    #[arg(long)]
    tournament: String,
    /// Components separated by `;`, e.g. `P(2,-1);C(3);V`.
    #[arg(long)]
    digraph: String,
    /// Also count in the reversed tournament; exit 1 if the counts differ.
    #[arg(long)]
    complement_check: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("kind").required(true).args(["all", "random", "transitive"])))]
struct GenArgs {
    #[arg(long)]
    all: bool,
    #[arg(long, requires_all = ["seed", "count"])]
    random: bool,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    count: Option<u64>,
    #[arg(long)]
    transitive: bool,
    #[arg(long)]
    order: usize,
    /// `--all` up to order 7.
    #[arg(long)]
    allow_large: bool,
}

enum Failure {
    Usage(String),
    Violated(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn check_order(order: usize) -> Result<(), Failure> {
    if order > MAX_ORDER {
        return Err(Failure::Usage(format!("order {order} exceeds {MAX_ORDER}")));
    }
    Ok(())
}

fn parse_tournament(text: &str, order: Option<usize>) -> Result<Tournament, Failure> {
    let t: Tournament = text.trim().parse()?;
    match order {
        Some(n) if t.order() != n => Err(Failure::Usage(format!(
            "tournament {t} has order {}, expected {n}",
            t.order()
        ))),
        _ => Ok(t),
    }
}

fn census_json(t: &Tournament) -> Result<Value, Failure> {
    let mut v = census(t)?.to_json();
    v["tournament"] = json!(t.to_text());
    Ok(v)
}

fn run_census(args: CensusArgs) -> Result<Value, Failure> {
    check_order(args.order)?;
    if let Some(path) = &args.input {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let ts = parse_many(&text)?;
        if let Some(t) = ts.iter().find(|t| t.order() != args.order) {
            return Err(Failure::Usage(format!(
                "tournament {t} has order {}, expected {}",
                t.order(),
                args.order
            )));
        }
        let results = ts
            .par_iter()
            .map(|t| {
                let mut v = census_json(t)?;
                v.as_object_mut().expect("object").remove("schema");
                Ok(v)
            })
            .collect::<Result<Vec<Value>, Failure>>()?;
        return Ok(json!({"schema": 1, "n": args.order, "results": results}));
    }
    let t = match (&args.tournament, args.seed) {
        (Some(text), _) => parse_tournament(text, Some(args.order))?,
        (None, Some(seed)) => sample_tournament(args.order, seed, 0),
        (None, None) => unreachable!("clap enforces a source"),
    };
    census_json(&t)
}

fn run_verify(args: VerifyArgs) -> Result<Value, Failure> {
    let property: Property = args.property.parse()?;
    let scope = if args.exhaustive {
        Scope::Exhaustive {
            order: args.order,
            allow_large: args.allow_large,
        }
    } else {
        Scope::Random {
            order: args.order,
            samples: args.samples.expect("clap requires samples"),
            seed: args.seed.expect("clap requires seed"),
        }
    };
    let start = Instant::now();
    let mut report = verify(property, scope)?;
    if args.timing {
        report.ms = Some(start.elapsed().as_millis() as u64);
    }
    let pass = report.pass;
    let v = report.to_json();
    if pass {
        Ok(v)
    } else {
        Err(Failure::Violated(v))
    }
}

fn run_hcount(args: HcountArgs) -> Result<Value, Failure> {
    let t = parse_tournament(&args.tournament, None)?;
    let h: Digraph2Spec = args.digraph.parse()?;
    let mut v = json!({
        "schema": 1,
        "tournament": t.to_text(),
        "digraph": h.to_string(),
    });
    if args.complement_check {
        let r = check_complement_invariance(&t, &h)?;
        v["count"] = json!(r.count);
        v["complement_count"] = json!(r.complement_count);
        v["pass"] = json!(r.equal);
        if !r.equal {
            return Err(Failure::Violated(v));
        }
    } else {
        v["count"] = json!(count_copies(&t, &h)?);
    }
    Ok(v)
}

fn run_gen(args: GenArgs) -> Result<Value, Failure> {
    check_order(args.order)?;
    let n = args.order;
    let ts: Vec<String> = if args.all {
        all_tournaments(n, args.allow_large)?
            .map(|t| t.to_text())
            .collect()
    } else if args.random {
        let seed = args.seed.expect("clap requires seed");
        let count = args.count.expect("clap requires count");
        (0..count)
            .into_par_iter()
            .map(|i| sample_tournament(n, seed, i).to_text())
            .collect()
    } else {
        vec![Tournament::transitive(n).to_text()]
    };
    Ok(json!({"schema": 1, "n": n, "tournaments": ts}))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if threads == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .expect("thread pool is configured once");
    }
    let outcome = match cli.command {
        Command::Census(a) => run_census(a),
        Command::Verify(a) => run_verify(a),
        Command::Hcount(a) => run_hcount(a),
        Command::Gen(a) => run_gen(a),
    };
    match outcome {
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(Failure::Violated(v)) => {
            println!("{v}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
