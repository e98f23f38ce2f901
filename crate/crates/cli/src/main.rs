use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use scoid_core::predicates::{coidempotent_z, fully_coidempotent_z};
use scoid_core::theorems::corpus::CorpusConfig;
use scoid_core::{
    decide, enumerate_submodules, generate_corpus, parse_module, parse_ring, parse_set, parse_submodule,
    reproduce_examples, resolve_set, verify_all, Error, ModuleSpec, MultSet, Options, Property, PropertyName, Query,
    SetSpec, SubmoduleSpec, VerifyConfig, Workbench, ZMultSet, PROPERTY_NAMES,
};

#[derive(Parser)]
#[command(name = "scoid", version, about = "Decide S-coidempotence and related submodule properties")]
struct Cli {
    /// Directory for cached submodule lattices.
    #[arg(long, global = true, env = "SCOID_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Require N ∩ K = 0 for direct summands (the default).
    #[arg(long, global = true, conflicts_with = "loose_ds")]
    strict_ds: bool,
    /// Read direct summands without requiring N ∩ K = 0.
    #[arg(long, global = true)]
    loose_ds: bool,
    /// Require a single s for every submodule in "fully" queries.
    #[arg(long, global = true)]
    uniform_witness: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide one property and print the verdict as JSON.
    Check(CheckArgs),
    /// List the submodules of a module.
    Enumerate(EnumerateArgs),
    /// Run the theorem harness over a generated corpus.
    Verify(VerifyArgs),
    /// Reproduce the worked examples.
    ReproduceExamples {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    ring: String,
    #[arg(long)]
    module: String,
    #[arg(long)]
    sub: Option<String>,
    #[arg(long, default_value = "trivial")]
    s: String,
    #[arg(long)]
    property: String,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    ring: String,
    #[arg(long)]
    module: String,
    /// Also print the covering relation.
    #[arg(long)]
    hasse: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 32)]
    max_order: u128,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Comma-separated theorem ids.
    #[arg(long, value_delimiter = ',')]
    theorems: Vec<String>,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Record per-check wall time (makes reports non-reproducible).
    #[arg(long)]
    timings: bool,
}

enum Failure {
    Usage(String),
    Run(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) | Error::CrossCheck(_) => Failure::Run(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn bench(cli: &Cli) -> Workbench {
    match &cli.cache_dir {
        Some(d) => Workbench::with_cache_dir(d),
        None => Workbench::new(),
    }
}

fn options(cli: &Cli) -> Options {
    Options { strict_ds: !cli.loose_ds, uniform: cli.uniform_witness }
}

fn parse_property(name: &str) -> Result<PropertyName, Failure> {
    name.parse().map_err(|_| {
        let lower = name.to_ascii_lowercase();
        let close: Vec<&str> =
            PROPERTY_NAMES.iter().copied().filter(|p| strsim::levenshtein(&lower, p) <= 2).collect();
        let hint = if close.is_empty() { String::new() } else { format!("; did you mean {}?", close.join(" or ")) };
        Failure::Usage(format!("unknown property '{name}'{hint}\nvalid properties: {}", PROPERTY_NAMES.join(", ")))
    })
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn exit_for(holds: bool) -> u8 {
    if holds {
        0
    } else {
        1
    }
}

fn check(cli: &Cli, a: &CheckArgs) -> Result<u8, Failure> {
    let prop = parse_property(&a.property)?;
    let ring = parse_ring(&a.ring)?;
    let module = parse_module(&ring, &a.module)?;
    let set_spec = if prop.classical { parse_set("trivial")? } else { parse_set(&a.s)? };
    let sub = match (&a.sub, prop.needs_submodule()) {
        (Some(s), true) => Some(parse_submodule(&module, s)?),
        (None, true) => return Err(Failure::Usage(format!("'{}' needs --sub", a.property))),
        (_, false) => None,
    };
    let header = json!({"ring": a.ring, "module": a.module, "sub": a.sub, "s": if prop.classical { "trivial" } else { a.s.as_str() }, "property": a.property});
    let verdict = match module {
        ModuleSpec::Integers => {
            let s = match set_spec {
                SetSpec::Integer(z) => z,
                _ => return Err(Failure::Usage("sets for Z must be given as integer presentations".into())),
            };
            let s = if prop.classical { ZMultSet::Units } else { s };
            match (prop.query, sub) {
                (Query::Pointwise(Property::Coidempotent), Some(SubmoduleSpec::Integer(n))) => coidempotent_z(&n, &s).to_json(),
                (Query::Fully(Property::Coidempotent), _) => fully_coidempotent_z(&s).to_json(),
                _ => {
                    return Err(Failure::Usage(format!(
                        "'{}' is only decided for finite modules; over Z use (fully-)(s-)coidempotent",
                        a.property
                    )))
                }
            }
        }
        ModuleSpec::Finite(m) => {
            let s: MultSet = resolve_set(&set_spec, m.ring())?;
            let ctx = bench(cli).context(&m)?;
            let n = match &sub {
                Some(SubmoduleSpec::Finite(n)) => Some(n),
                _ => None,
            };
            decide(&ctx, prop.query, n, &s, options(cli))?.to_json()
        }
    };
    let holds = verdict["holds"].as_bool().unwrap_or(false);
    print_json(&json!({"query": header, "verdict": verdict}));
    Ok(exit_for(holds))
}

fn enumerate(cli: &Cli, a: &EnumerateArgs) -> Result<u8, Failure> {
    let ring = parse_ring(&a.ring)?;
    let ModuleSpec::Finite(m) = parse_module(&ring, &a.module)? else {
        return Err(Failure::Usage("Z has infinitely many submodules (nZ for n >= 0)".into()));
    };
    let lattice = match &cli.cache_dir {
        Some(_) => bench(cli).context(&m)?.lattice().clone(),
        None => enumerate_submodules(&m)?,
    };
    let rows: Vec<Value> = lattice
        .all()
        .iter()
        .enumerate()
        .map(|(i, n)| {
            json!({
                "index": i,
                "generators": n.to_string(),
                "order": n.order().to_string(),
                "completely_irreducible": lattice.is_completely_irreducible(i),
            })
        })
        .collect();
    let edges = a.hasse.then(|| lattice.hasse_edges());
    if a.json {
        let mut v = json!({"module": m.to_string(), "submodules": rows});
        if let Some(e) = &edges {
            v["hasse"] = json!(e);
        }
        print_json(&v);
    } else {
        println!("{} ({} submodules)", m, rows.len());
        for r in &rows {
            let ci = if r["completely_irreducible"].as_bool() == Some(true) { "  CI" } else { "" };
            println!(
                "{:>4}  {:<30} order {}{ci}",
                r["index"].as_u64().unwrap_or(0),
                r["generators"].as_str().unwrap_or(""),
                r["order"].as_str().unwrap_or("")
            );
        }
        if let Some(e) = &edges {
            println!("hasse edges (lower -> upper):");
            for (x, y) in e {
                println!("  {x} -> {y}");
            }
        }
    }
    Ok(0)
}

fn verify(cli: &Cli, a: &VerifyArgs) -> Result<u8, Failure> {
    let known: Vec<&str> = scoid_core::theorems::theorem_registry().iter().map(|t| t.id).collect();
    for t in &a.theorems {
        if !known.iter().any(|k| k.eq_ignore_ascii_case(t)) {
            return Err(Failure::Usage(format!("unknown theorem '{t}'; valid ids: {}", known.join(", "))));
        }
    }
    let start = Instant::now();
    let corpus = generate_corpus(&CorpusConfig::with_max_order(a.max_order))?;
    let cfg = VerifyConfig { theorems: a.theorems.clone(), timings: a.timings, strict_ds: !cli.loose_ds, jobs: a.jobs };
    let report = verify_all(&corpus, &bench(cli), &cfg)?;
    let text = report.to_json();
    match &a.out {
        Some(p) => std::fs::write(p, text + "\n").map_err(|e| Failure::Run(format!("{}: {e}", p.display())))?,
        None => println!("{text}"),
    }
    eprintln!("{} instances, {} results in {:.1}s", report.corpus.instances, report.results.len(), start.elapsed().as_secs_f64());
    eprintln!("{:<5} {:>8} {:>10} {:>13}", "id", "pass", "violation", "inapplicable");
    for (id, c) in &report.summary {
        eprintln!("{id:<5} {:>8} {:>10} {:>13}", c.pass, c.violation, c.inapplicable);
    }
    for p in &report.probes {
        eprintln!("probe: {} -> {} found", p.claim, p.found);
    }
    let w = &report.witness_audit;
    eprintln!(
        "witness audit: {} witnesses ({} rejected), {} refutations ({} contradicted)",
        w.witnesses_checked, w.witnesses_failed, w.refutations_checked, w.refutations_failed
    );
    Ok(exit_for(report.is_clean()))
}

fn examples(cli: &Cli, json_out: bool) -> Result<u8, Failure> {
    let outcomes = reproduce_examples(&bench(cli))?;
    let matched = outcomes.iter().filter(|o| o.matched).count();
    if json_out {
        print_json(&json!({"schema": 1, "matched": matched, "total": outcomes.len(), "examples": outcomes}));
    } else {
        for o in &outcomes {
            println!("{} {}: {}", if o.matched { "ok  " } else { "FAIL" }, o.id, o.observed);
        }
        println!("{matched}/{} matched", outcomes.len());
    }
    if let Some(o) = outcomes.iter().find(|o| !o.matched) {
        eprintln!("mismatch in {}: expected {}, observed {}", o.id, o.expected, o.observed);
        return Ok(1);
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check(a) => check(&cli, a),
        Command::Enumerate(a) => enumerate(&cli, a),
        Command::Verify(a) => verify(&cli, a),
        Command::ReproduceExamples { json } => examples(&cli, *json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
