//! `tutteforge`: load matroids and graphs, compute Tutte polynomials, and
//! machine-verify the exchange, linking, order-independence and involution
//! properties on them.
//!
//! Exit codes: 0 when all checked properties hold, 1 when a property is
//! violated (a counterexample is emitted), 2 on input or usage errors.

mod json;
mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use tutteforge_core::{oracle, path_between, tutte, Budget, LinearOrder, LinkingClass, PreMatroid};

use json::{load_input, Input};
use report::CheckList;
use verify::{OrderSelection, SuiteContext};

#[derive(Parser)]
#[command(
    name = "tutteforge",
    version,
    about = "Matroid activity toolkit and verifier"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Tutte polynomial of a matroid or graph file
    Tutte(TutteArgs),
    /// Run verification suites against a matroid or graph file
    Verify(VerifyArgs),
    /// Print the dual of a matroid file
    Dual { input: PathBuf },
    /// Connect two linear orders by swaps of consecutive elements
    OrdersPath(OrdersPathArgs),
    /// Verify a linking between two matroid files and classify it
    LinkingClassify(LinkingClassifyArgs),
}

#[derive(Args)]
struct TutteArgs {
    input: PathBuf,
    /// Element labels from smallest to largest, comma-separated
    #[arg(long)]
    order: Option<String>,
    #[arg(long, value_enum, default_value_t = Method::Activity)]
    method: Method,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Completion/reduction fiber expansion under the chosen order
    Activity,
    /// Corank-nullity subset expansion
    Corank,
    /// Deletion-contraction recursion (graph inputs only)
    Delcon,
}

#[derive(Args)]
struct VerifyArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// `all` or `random:N`
    #[arg(long, default_value = "all")]
    orders: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Restrict the involution sweep to the edge swapping this pair, e.g. `1,2`
    #[arg(long)]
    edge: Option<String>,
    /// Report every failure instead of stopping at the first
    #[arg(long)]
    full: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Exchange,
    Independence,
    Linkings,
    Sigma,
    All,
}

#[derive(Args)]
struct OrdersPathArgs {
    /// Ground set size; elements are labeled 1..=n
    #[arg(long)]
    n: usize,
    /// Starting order, labels from smallest to largest
    #[arg(long)]
    from: String,
    /// Target order
    #[arg(long)]
    to: String,
}

#[derive(Args)]
struct LinkingClassifyArgs {
    source: PathBuf,
    target: PathBuf,
    /// JSON file with {"map": {"<source basis>": "<target basis>"}}
    #[arg(long)]
    map: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn budget_from_env() -> Result<Budget> {
    match std::env::var("TUTTEFORGE_BUDGET") {
        Ok(text) => {
            let subsets: u64 = text
                .parse()
                .with_context(|| format!("TUTTEFORGE_BUDGET=`{text}` is not a number"))?;
            Ok(Budget::new(subsets))
        }
        Err(_) => Ok(Budget::DEFAULT),
    }
}

fn run(cli: Cli) -> Result<u8> {
    let budget = budget_from_env()?;
    match cli.command {
        Command::Tutte(args) => cmd_tutte(args, cli.json, budget),
        Command::Verify(args) => cmd_verify(args, cli.json, budget),
        Command::Dual { input } => cmd_dual(&input, budget),
        Command::OrdersPath(args) => cmd_orders_path(args, cli.json),
        Command::LinkingClassify(args) => cmd_linking_classify(args, cli.json, budget),
    }
}

fn parse_order(m: &PreMatroid, text: &str) -> Result<LinearOrder> {
    let labels: Vec<&str> = text.split(',').collect();
    if labels.len() != m.ground().len() {
        bail!(
            "--order lists {} labels but the ground set has {}",
            labels.len(),
            m.ground().len()
        );
    }
    let seq: Vec<u8> = labels
        .iter()
        .map(|l| m.ground().index_of(l))
        .collect::<Result<_, _>>()?;
    Ok(LinearOrder::from_sequence(&seq)?)
}

fn cmd_tutte(args: TutteArgs, as_json: bool, budget: Budget) -> Result<u8> {
    let input = load_input(&args.input, budget)?;
    let m = input.matroid();
    let polynomial = match args.method {
        Method::Activity => {
            let order = match &args.order {
                Some(text) => parse_order(m, text)?,
                None => LinearOrder::natural(m.ground().len()),
            };
            tutte(m, &order)
        }
        Method::Corank => oracle::tutte_corank_nullity(m, budget)?,
        Method::Delcon => {
            let graph = input
                .graph()
                .ok_or_else(|| anyhow!("--method delcon needs a graph input"))?;
            oracle::tutte_deletion_contraction(graph)
        }
    };
    if as_json {
        println!(
            "{}",
            serde_json::to_string(&json::polynomial_to_json(&polynomial))?
        );
    } else {
        println!("{}", polynomial.render());
    }
    Ok(0)
}

fn cmd_verify(args: VerifyArgs, as_json: bool, budget: Budget) -> Result<u8> {
    let started = Instant::now();
    let input = load_input(&args.input, budget)?;
    let m = input.matroid();
    let selection = OrderSelection::parse(&args.orders)?;
    let orders = verify::sample_orders(m.ground().len(), selection, args.seed)?;
    let edge_filter = match &args.edge {
        None => None,
        Some(text) => {
            let (a, b) = text
                .split_once(',')
                .ok_or_else(|| anyhow!("--edge expects two labels, e.g. `1,2`"))?;
            Some((m.ground().index_of(a)?, m.ground().index_of(b)?))
        }
    };
    let ctx = SuiteContext {
        input: &input,
        orders,
        budget,
        edge_filter,
        collect_all: args.full,
    };

    let mut checks = CheckList::new();
    let suite_name = match args.suite {
        Suite::Exchange => "exchange",
        Suite::Independence => "independence",
        Suite::Linkings => "linkings",
        Suite::Sigma => "sigma",
        Suite::All => "all",
    };
    if matches!(args.suite, Suite::Exchange | Suite::All) {
        verify::run_exchange_suite(&ctx, &mut checks);
    }
    if matches!(args.suite, Suite::Independence | Suite::All) {
        verify::run_independence_suite(&ctx, &mut checks);
    }
    if matches!(args.suite, Suite::Linkings | Suite::All) {
        verify::run_linkings_suite(&ctx, &mut checks);
    }
    if matches!(args.suite, Suite::Sigma | Suite::All) {
        verify::run_involution_suite(&ctx, &mut checks);
    }

    let report = checks.into_report(
        render_command(&args),
        args.input.display().to_string(),
        suite_name.to_string(),
        args.orders.clone(),
        args.seed,
    );
    if as_json {
        println!("{}", serde_json::to_string(&report)?);
    } else {
        print!("{}", report.render_text());
    }
    eprintln!("verify took {} ms", started.elapsed().as_millis());
    Ok(if report.failed() { 1 } else { 0 })
}

fn render_command(args: &VerifyArgs) -> String {
    let mut parts = vec![
        "verify".to_string(),
        args.input.display().to_string(),
        format!("--suite {}", suite_label(args.suite)),
        format!("--orders {}", args.orders),
        format!("--seed {}", args.seed),
    ];
    if let Some(edge) = &args.edge {
        parts.push(format!("--edge {edge}"));
    }
    if args.full {
        parts.push("--full".to_string());
    }
    parts.join(" ")
}

fn suite_label(suite: Suite) -> &'static str {
    match suite {
        Suite::Exchange => "exchange",
        Suite::Independence => "independence",
        Suite::Linkings => "linkings",
        Suite::Sigma => "sigma",
        Suite::All => "all",
    }
}

fn cmd_dual(input: &std::path::Path, budget: Budget) -> Result<u8> {
    let input = load_input(input, budget)?;
    let dual = input.matroid().dual();
    println!("{}", serde_json::to_string(&json::matroid_to_json(&dual))?);
    Ok(0)
}

fn cmd_orders_path(args: OrdersPathArgs, as_json: bool) -> Result<u8> {
    if args.n == 0 || args.n > 64 {
        bail!("--n must be between 1 and 64");
    }
    let ground = tutteforge_core::GroundSet::numbered(args.n)?;
    let parse = |text: &str| -> Result<LinearOrder> {
        let labels: Vec<&str> = text.split(',').collect();
        if labels.len() != args.n {
            bail!("order `{text}` must list exactly {} labels", args.n);
        }
        let seq: Vec<u8> = labels
            .iter()
            .map(|l| ground.index_of(l))
            .collect::<Result<_, _>>()?;
        Ok(LinearOrder::from_sequence(&seq)?)
    };
    let from = parse(&args.from)?;
    let to = parse(&args.to)?;
    let path = path_between(&from, &to)?;

    let label_seq = |order: &LinearOrder| -> Vec<String> {
        order
            .sequence()
            .iter()
            .map(|&e| ground.label(e).to_string())
            .collect()
    };
    if as_json {
        let steps: Vec<_> = path
            .iter()
            .map(|edge| {
                json!({
                    "from": label_seq(edge.base()),
                    "to": label_seq(edge.swapped()),
                    "swap": [ground.label(edge.lower()), ground.label(edge.upper())],
                })
            })
            .collect();
        println!("{}", serde_json::to_string(&json!({ "steps": steps }))?);
    } else {
        for edge in &path {
            println!(
                "{} -> {}  (swap {},{})",
                label_seq(edge.base()).join(","),
                label_seq(edge.swapped()).join(","),
                ground.label(edge.lower()),
                ground.label(edge.upper()),
            );
        }
        println!("steps: {}", path.len());
    }
    Ok(0)
}

fn cmd_linking_classify(args: LinkingClassifyArgs, as_json: bool, budget: Budget) -> Result<u8> {
    let source = match load_input(&args.source, budget)? {
        Input::Matroid(m) => m,
        Input::Graph { matroid, .. } => matroid,
    };
    let target = match load_input(&args.target, budget)? {
        Input::Matroid(m) => m,
        Input::Graph { matroid, .. } => matroid,
    };
    let map_text = std::fs::read_to_string(&args.map)
        .with_context(|| format!("cannot read `{}`", args.map.display()))?;
    let map_json: json::LinkingMapJson = serde_json::from_str(&map_text)
        .with_context(|| format!("`{}` is not a linking map", args.map.display()))?;
    let mut linking = json::linking_from_json(source, target, &map_json)?;

    let report = linking.verify();
    if !report.is_linking {
        let v = report
            .violation
            .expect("failing report carries a violation");
        let m = linking.source();
        let payload = json!({
            "status": "fail",
            "property": "linking-conditions",
            "basis": m.ground().labels_of(v.basis),
            "swap": [m.ground().label(v.swap.a), m.ground().label(v.swap.b)],
        });
        if as_json {
            println!("{}", serde_json::to_string(&payload)?);
        } else {
            println!(
                "not a linking: conditions fail at basis {{{}}} under swap {},{}",
                m.ground().labels_of(v.basis).join(","),
                m.ground().label(v.swap.a),
                m.ground().label(v.swap.b),
            );
        }
        return Ok(1);
    }

    match linking.classify() {
        Ok(class) => {
            let name = match class {
                LinkingClass::Identity => "Identity",
                LinkingClass::Complement => "Complement",
            };
            if as_json {
                println!("{}", serde_json::to_string(&json!({"class": name}))?);
            } else {
                println!("{name}");
            }
            Ok(0)
        }
        Err(_) => {
            // Possible for genuine pre-matroids; a property violation for
            // matroid inputs.
            let payload = json!({
                "status": "fail",
                "property": "linking-classification",
                "detail": "verified linking is neither the identity nor complementation",
            });
            if as_json {
                println!("{}", serde_json::to_string(&payload)?);
            } else {
                println!("verified linking is neither the identity nor complementation");
            }
            Ok(1)
        }
    }
}
