mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use symdepth::claims;
use symdepth::depth::{
    depth, depth_at_least_1_unmixed, depth_at_least_2_unmixed, depth_unmixed, DepthOptions, DepthReport, Strategy,
};
use symdepth::functions::{check_node, decompose, pd_report, realize, Realization, Step, StepFunction};
use symdepth::{Coefficients, Decomposition, Ring};

use input::{CliError, CliResult, FamilyParams, Source};

/// Depth of symbolic powers of monomial ideals.
#[derive(Parser)]
#[command(name = "symdepth", version)]
struct Cli {
    /// Worker threads; results do not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Depth of R/I^(t) with a witness degree.
    Depth {
        #[command(flatten)]
        source: SourceArgs,
        /// Symbolic power to take.
        #[arg(long, default_value_t = 1)]
        t: u32,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Depth of R/I^(t) for t = 1..t_max.
    Scan {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        t_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Report wall time per row instead of 0.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Check a named claim, or `all`.
    Verify { claim: String },
    /// Decompose a function `prefix;period` into basic depth functions.
    Plan {
        function: String,
        /// Run the engine on checkable nodes for t = 1..check_t; 0 skips it.
        #[arg(long, default_value_t = 3)]
        check_t: u32,
        /// Also report projective dimensions in this many variables.
        #[arg(long)]
        ambient: Option<u32>,
    },
}

#[derive(Args)]
struct SourceArgs {
    /// Comma-separated generators such as `x^2*y,y*z`.
    #[arg(long)]
    gens: Option<String>,
    /// Comma-separated variable names; defaults to order of appearance.
    #[arg(long)]
    vars: Option<String>,
    /// JSON ideal document.
    #[arg(long)]
    input: Option<PathBuf>,
    /// typeA, typeB, typeC, thm28 or example6.
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
}

impl SourceArgs {
    fn resolve(&self) -> CliResult<Source> {
        let params = FamilyParams { m: self.m, d: self.d, s: self.s };
        input::resolve(
            self.gens.as_deref(),
            self.vars.as_deref(),
            self.input.as_deref(),
            self.family.as_deref(),
            &params,
        )
    }
}

#[derive(Args)]
struct EngineArgs {
    /// Field characteristic: 0 or a prime.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,
}

impl EngineArgs {
    fn options(&self) -> CliResult<DepthOptions> {
        let strategy = match self.strategy {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::Lcm => Strategy::Lcm,
            StrategyArg::Box => Strategy::Box { extra: 0, dense: false },
            StrategyArg::WideBox => Strategy::Box { extra: 2, dense: false },
        };
        Ok(DepthOptions { coefficients: Coefficients::from_characteristic(self.characteristic)?, strategy })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Lcm,
    Box,
    /// The box enlarged by two values per coordinate.
    WideBox,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Serialize)]
struct Row {
    t: u32,
    depth: usize,
    ge1: bool,
    ge2: bool,
    millis: u64,
}

fn print_report(ring: &Ring, report: &DepthReport) {
    println!("depth {}", report.depth);
    println!("witness a = {}, j = {}", report.witness, report.j);
    println!("negative support {}", ring.format_set(report.witness.negative_support()));
    println!("complex {}", report.complex.display_with(ring));
    println!("candidates {}", report.candidates);
}

fn cmd_depth(source: &SourceArgs, t: u32, engine: &EngineArgs) -> CliResult<()> {
    let options = engine.options()?;
    if t == 0 {
        return Err(symdepth::Error::ParameterOutOfRange("t must be at least 1".into()).into());
    }
    let source = source.resolve()?;
    let report = match &source {
        Source::Ideal(ideal) if !ideal.is_squarefree() => {
            if t > 1 {
                return Err(symdepth::Error::NotSquarefree.into());
            }
            depth(ideal, options)?
        }
        _ => depth_unmixed(&source.decomposition()?.power(t), options)?,
    };
    print_report(source.ring(), &report);
    Ok(())
}

fn scan_rows(decomposition: &Decomposition, t_max: u32, options: DepthOptions, timing: bool) -> CliResult<Vec<Row>> {
    let rows: Vec<symdepth::Result<Row>> = (1..=t_max)
        .into_par_iter()
        .map(|t| {
            let start = Instant::now();
            let power = decomposition.power(t);
            let report = depth_unmixed(&power, options)?;
            let ge1 = depth_at_least_1_unmixed(&power);
            let ge2 = depth_at_least_2_unmixed(&power, options.strategy)?;
            let millis = if timing { start.elapsed().as_millis() as u64 } else { 0 };
            Ok(Row { t, depth: report.depth, ge1, ge2, millis })
        })
        .collect();
    rows.into_iter().map(|r| r.map_err(CliError::from)).collect()
}

fn cmd_scan(source: &SourceArgs, t_max: u32, format: Format, timing: bool, engine: &EngineArgs) -> CliResult<()> {
    let options = engine.options()?;
    if t_max == 0 {
        return Err(symdepth::Error::ParameterOutOfRange("--t-max must be at least 1".into()).into());
    }
    let decomposition = source.resolve()?.decomposition()?;
    let rows = scan_rows(&decomposition, t_max, options, timing)?;
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str("t,depth,ge1,ge2,millis\n");
            for r in &rows {
                out.push_str(&format!("{},{},{},{},{}\n", r.t, r.depth, r.ge1, r.ge2, r.millis));
            }
        }
        Format::Json => {
            out = serde_json::to_string_pretty(&rows).map_err(|e| CliError::input(e.to_string()))?;
            out.push('\n');
        }
    }
    print!("{out}");
    Ok(())
}

fn cmd_verify(id: &str) -> CliResult<()> {
    let selected = claims::select(id).ok_or_else(|| {
        let known: Vec<&str> = claims::CLAIMS.iter().map(|c| c.id).collect();
        CliError::input(format!("unknown claim {id:?}; known claims: {}, all", known.join(", ")))
    })?;
    let mut failed = Vec::new();
    for claim in &selected {
        let report = claim.run();
        println!("[criterion {}] {}", claim.criterion, claim.summary);
        print!("{report}");
        std::io::stdout().flush().ok();
        if !report.passed() {
            failed.push(claim.id);
        }
    }
    println!("{} of {} claims passed", selected.len() - failed.len(), selected.len());
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::mismatch(format!("failed: {}", failed.join(", "))))
    }
}

fn describe_step(node: &Realization) -> String {
    match &node.step {
        Step::Family { name, decomposition } => {
            format!("ideal {name} in {} variables, verifiable", decomposition.ring().n())
        }
        Step::Product { product: Some(p), product_function } => format!(
            "product in {} variables with depth {product_function}, then 2 SYMBOLIC hyperplane sections",
            p.ring().n()
        ),
        Step::Product { product: None, product_function } => format!(
            "product of symbolic factors with depth {product_function}, then 2 SYMBOLIC hyperplane sections"
        ),
        Step::Section => "1 SYMBOLIC hyperplane section".into(),
    }
}

fn print_node(node: &Realization, depth: usize, check_t: u32, mismatches: &mut usize) -> CliResult<()> {
    let indent = "  ".repeat(depth + 1);
    let head = match &node.recipe {
        symdepth::functions::Recipe::Star(..) => "star".to_string(),
        symdepth::functions::Recipe::Overline(..) => "overline".to_string(),
        base => base.to_string(),
    };
    println!("{indent}{head} = {}: {}", node.target, describe_step(node));
    if check_t > 0 {
        if let Some((values, ok)) = check_node(node, check_t, DepthOptions::default())? {
            println!("{indent}  engine t=1..{check_t}: {values:?} {}", if ok { "confirmed" } else { "MISMATCH" });
            if !ok {
                *mismatches += 1;
            }
        }
    }
    for child in &node.children {
        print_node(child, depth + 1, check_t, mismatches)?;
    }
    Ok(())
}

fn cmd_plan(text: &str, check_t: u32, ambient: Option<u32>) -> CliResult<()> {
    let f = StepFunction::parse(text)?;
    let recipe = decompose(&f)?;
    println!("function {f}");
    println!("recipe {recipe}");
    println!("realization");
    let mut mismatches = 0;
    print_node(&realize(&recipe)?, 0, check_t, &mut mismatches)?;
    if let Some(n) = ambient {
        println!("pd in {n} variables {}", pd_report(&recipe, n)?);
    }
    if mismatches > 0 {
        return Err(CliError::mismatch(format!("{mismatches} realization checks failed")));
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .map_err(|e| CliError::input(e.to_string()))?;
    }
    match &cli.command {
        Command::Depth { source, t, engine } => cmd_depth(source, *t, engine),
        Command::Scan { source, t_max, format, timing, engine } => {
            cmd_scan(source, *t_max, *format, *timing, engine)
        }
        Command::Verify { claim } => cmd_verify(claim),
        Command::Plan { function, check_t, ambient } => cmd_plan(function, *check_t, *ambient),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            e.print().ok();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
