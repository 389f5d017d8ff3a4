use std::fs;
use std::path::PathBuf;

use clap::{Args, ValueEnum};

use stanley_core::crystal::crystal_component;
use stanley_core::Tableau;

use crate::config::Config;
use crate::Failure;

#[derive(Args)]
pub struct ExportArgs {
    /// Start tableau, e.g. "1' 1 / 1 2'"; its whole component is exported.
    #[arg(long, value_name = "TABLEAU")]
    tableau: String,

    /// Largest letter the operators may produce.
    #[arg(long)]
    k: Option<usize>,

    /// Output path; stdout when omitted.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
    format: ExportFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

pub fn run(args: ExportArgs, cfg: &Config) -> Result<(), Failure> {
    let k = args.k.or(cfg.k).unwrap_or(3) as u32;
    let start: Tableau = args.tableau.parse()?;
    let graph = crystal_component(&start, k)?;
    let content = match args.format {
        ExportFormat::Dot => graph.to_dot(),
        ExportFormat::Json => {
            let mut text = serde_json::to_string_pretty(&graph.to_json())
                .map_err(|e| Failure::Domain(format!("cannot serialize graph: {e}")))?;
            text.push('\n');
            text
        }
    };
    match &args.out {
        Some(path) => fs::write(path, content).map_err(|e| {
            Failure::Resource(format!("cannot write {}: {e}", path.display()))
        })?,
        None => print!("{content}"),
    }
    Ok(())
}
