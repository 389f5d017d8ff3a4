use clap::{ArgAction, Args, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use stanley_core::conjectures::test_conjecture;
use stanley_core::coxeter::all_elements;
use stanley_core::stanley::DEFAULT_LENGTH_CAP;
use stanley_core::{ConjectureReport, ConjectureStatus, PatternReading, SignedPermutation};

use crate::config::Config;
use crate::{Failure, Output};

#[derive(Args)]
pub struct ConjectureArgs {
    /// Which expansion to test: 1, 2, 3, or all.
    #[arg(long, value_enum, default_value_t = Which::All)]
    which: Which,

    /// Hyperoctahedral rank; sweeps windows of rank+1 entries.
    #[arg(long)]
    rank: Option<usize>,

    /// Only elements of at most this length are swept.
    #[arg(long = "max-length")]
    max_length: Option<usize>,

    /// Test a single element instead of sweeping a rank.
    #[arg(long, value_name = "WINDOW")]
    window: Option<String>,

    /// Read the knot patterns as contiguous factors (false reads them as
    /// scattered subsequences).
    #[arg(long = "strict-factor", value_name = "BOOL", default_value_t = true, action = ArgAction::Set)]
    strict_factor: bool,

    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,

    /// Worker threads; output is identical for every setting.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    All,
}

impl Which {
    fn list(self) -> Vec<u8> {
        match self {
            Which::One => vec![1],
            Which::Two => vec![2],
            Which::Three => vec![3],
            Which::All => vec![1, 2, 3],
        }
    }
}

pub fn run(args: ConjectureArgs, cfg: &Config) -> Result<(), Failure> {
    let rank = args.rank.or(cfg.rank).unwrap_or(2);
    let max_length = args.max_length.or(cfg.max_length).unwrap_or(6);
    let cap = cfg.cap.unwrap_or(DEFAULT_LENGTH_CAP);
    let k = cfg.k.unwrap_or(1);
    let reading = if args.strict_factor {
        PatternReading::Factor
    } else {
        PatternReading::Subsequence
    };

    let elements: Vec<SignedPermutation> = match &args.window {
        Some(text) => vec![text.parse::<SignedPermutation>()?],
        None => all_elements(rank + 1, true, max_length),
    };
    let cases: Vec<(SignedPermutation, u8)> = elements
        .iter()
        .flat_map(|w| args.which.list().into_iter().map(move |n| (w.clone(), n)))
        .collect();

    let reports = execute(cases, args.jobs.or(cfg.jobs), k, reading, cap)?;

    let mut equal = 0usize;
    let mut counterexamples = 0usize;
    let mut skipped = 0usize;
    for report in &reports {
        match report.status {
            ConjectureStatus::Equal => equal += 1,
            ConjectureStatus::Counterexample => counterexamples += 1,
            ConjectureStatus::Skipped => skipped += 1,
        }
    }

    match args.output {
        Output::Text => {
            for report in &reports {
                println!("{}", text_line(report));
            }
            println!(
                "tally: {equal} equal, {counterexamples} counterexamples, {skipped} skipped ({} reading)",
                reading
            );
        }
        Output::Json => {
            let mut items = Vec::with_capacity(reports.len());
            for report in &reports {
                items.push(report.to_json()?);
            }
            let envelope = json!({
                "command": "conjecture",
                "reading": reading.to_string(),
                "reports": items,
                "tally": {
                    "equal": equal,
                    "counterexamples": counterexamples,
                    "skipped": skipped,
                },
            });
            println!("{envelope}");
        }
    }
    Ok(())
}

fn execute(
    cases: Vec<(SignedPermutation, u8)>,
    jobs: Option<usize>,
    k: usize,
    reading: PatternReading,
    cap: usize,
) -> Result<Vec<ConjectureReport>, Failure> {
    let run_all = |cases: Vec<(SignedPermutation, u8)>| {
        cases
            .into_par_iter()
            .map(|(w, which)| test_conjecture(&w, which, k, reading, cap))
            .collect::<Result<Vec<_>, _>>()
    };
    let outcome = match jobs {
        None => run_all(cases),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Failure::Resource(format!("cannot build thread pool: {e}")))?;
            pool.install(|| run_all(cases))
        }
    };
    Ok(outcome?)
}

fn text_line(report: &ConjectureReport) -> String {
    let headline = format!(
        "{} conjecture {}: {}",
        report.element, report.conjecture, report.status
    );
    match report.status {
        ConjectureStatus::Equal => format!("{headline} ({} terms)", report.lhs.len()),
        ConjectureStatus::Counterexample => {
            let reason = report.reason.as_deref().unwrap_or("sides differ");
            format!("{headline} ({reason}; {} differing terms)", report.diff.len())
        }
        ConjectureStatus::Skipped => {
            let reason = report.reason.as_deref().unwrap_or("hypotheses not met");
            format!("{headline} ({reason})")
        }
    }
}
