mod error;
mod input;
mod report;
mod solve;
mod svg;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use annuli::{Objective, PointSet, Shape};
use clap::Parser;

use error::CliError;
use solve::{Mode, Problem};

/// Optimal square and rectangular annuli and largest empty rectangles and
/// squares of a planar point set.
#[derive(Debug, Parser)]
#[command(name = "annuli", version)]
struct Args {
    /// square, urect, rect, empty-rect or empty-square.
    #[arg(long)]
    shape: Shape,
    /// width, area, area-width, width-area, or largest for empty shapes.
    /// Defaults to largest for empty shapes.
    #[arg(long)]
    objective: Option<Objective>,
    /// "any" or "fixed:<radians>".
    #[arg(long, default_value = "any")]
    orientation: Mode,
    /// CSV file with one "x,y" point per line.
    #[arg(long, conflicts_with = "random", required_unless_present = "random")]
    input: Option<PathBuf>,
    /// Use this many uniform random points in the unit square instead of an input file.
    #[arg(long)]
    random: Option<usize>,
    /// Seed for --random.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// JSON report path; standard output when absent.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Also write an SVG figure here.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Add the brute-force reference value to the report (at most 12 points).
    #[arg(long)]
    oracle: bool,
    /// θ samples for the reference scan over all orientations.
    #[arg(long, default_value_t = 20_000)]
    theta_samples: usize,
    /// Worker threads; all cores when absent.
    #[arg(long)]
    threads: Option<usize>,
}

fn run(args: Args) -> Result<(), CliError> {
    if let Some(n) = args.threads {
        if n == 0 {
            return Err(CliError::Input("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Other(format!("thread pool: {e}")))?;
    }
    let objective = match (args.objective, args.shape.is_empty_shape()) {
        (Some(o), _) => o,
        (None, true) => Objective::Largest,
        (None, false) => return Err(CliError::Input(format!("--objective is required for shape {}", args.shape))),
    };
    let problem = Problem::new(args.shape, objective, args.orientation)?;

    let raw = match (&args.input, args.random) {
        (Some(path), _) => input::read_points(path)?,
        (None, Some(n)) => input::random_points(n, args.seed),
        (None, None) => unreachable!("clap requires --input or --random"),
    };
    let set = PointSet::new(&raw)?;
    let points = set.points();
    let sol = solve::solve(points, problem)?;
    let oracle = if args.oracle { Some(solve::oracle(points, problem, args.theta_samples)?) } else { None };

    let original = |v: &[usize]| -> Vec<usize> { v.iter().map(|&i| set.original_index(i)).collect() };
    let sol = solve::Solution {
        outer_supports: original(&sol.outer_supports),
        inner_supports: original(&sol.inner_supports),
        ..sol
    };
    let orientation = match args.orientation {
        Mode::Any => "any".to_string(),
        Mode::Fixed(t) => format!("fixed:{t}"),
    };
    let spec = report::SpecOut {
        shape: args.shape.to_string(),
        objective: objective.to_string(),
        orientation,
        input: args.input.as_ref().map(|p| p.display().to_string()),
        random: args.random,
        seed: args.seed,
        oracle: args.oracle,
    };
    let json = report::render(spec, set.len(), set.duplicates_removed(), &sol, oracle.as_ref());

    if let Some(path) = &args.svg {
        let figure = svg::render(points, &sol, !args.shape.is_empty_shape());
        fs::write(path, figure).map_err(|e| CliError::Other(format!("{}: {e}", path.display())))?;
    }
    match &args.output {
        Some(path) => fs::write(path, json).map_err(|e| CliError::Other(format!("{}: {e}", path.display())))?,
        None => std::io::stdout().write_all(json.as_bytes()).map_err(|e| CliError::Other(e.to_string()))?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("annuli: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
