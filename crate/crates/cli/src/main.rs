use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod output;
mod svg;

#[derive(Parser)]
#[command(
    name = "assoc",
    version,
    about = "Face census of associahedra and real moduli spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; svg is only accepted by `atlas`.
    #[arg(long, value_enum, global = true, default_value = "csv")]
    format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    A,
    V,
    B,
    F,
    Dissections,
}

#[derive(Subcommand)]
enum Command {
    /// Codimension-k faces of K_n (all k when omitted).
    Faces {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: Option<i64>,
    },
    /// Face counts of K_n by type.
    Types {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: Option<i64>,
    },
    /// Classes of k-diagonal dissections of the n-gon.
    Classes {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Class atlas of the n-gon with isotropy data (all k when omitted).
    Atlas {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Isotropy group of every class of the n-gon with k diagonals.
    Isotropy {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Codimension-k faces of the moduli space with n + 1 points.
    Moduli {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: Option<i64>,
        /// Also count by brute-force orbits of labeled polygons.
        #[arg(long)]
        census: bool,
    },
    /// One of the published tables.
    Tables {
        #[arg(long, value_enum)]
        which: Which,
    },
    /// Run the acceptance checks; exits nonzero on any failure.
    Verify {
        /// Largest polygon for the exhaustive checks.
        #[arg(long, default_value_t = 10)]
        max_size: usize,
    },
}

fn run(cli: &Cli) -> Result<(String, bool), String> {
    if cli.format == Format::Svg && !matches!(cli.command, Command::Atlas { .. }) {
        return Err("--format svg is only valid for atlas".into());
    }
    let table = match &cli.command {
        Command::Faces { n, k } => commands::faces(*n, *k),
        Command::Types { n, k } => commands::types(*n, *k),
        Command::Classes { n, k } => commands::classes(*n, *k),
        Command::Atlas { n, k } => {
            let atlas = commands::atlas(*n, *k).map_err(|e| e.to_string())?;
            if cli.format == Format::Svg {
                return Ok((svg::atlas_svg(&atlas), true));
            }
            Ok(commands::atlas_table(&atlas))
        }
        Command::Isotropy { n, k } => commands::isotropy(*n, *k),
        Command::Moduli { n, k, census } => commands::moduli(*n, *k, *census),
        Command::Tables { which } => commands::tables(*which),
        Command::Verify { max_size } => {
            let (table, ok) = commands::verify(*max_size);
            return Ok((table.render(cli.format), ok));
        }
    }
    .map_err(|e| e.to_string())?;
    Ok((table.render(cli.format), true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, ok) = match run(&cli) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("assoc: {msg}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, text.as_bytes()),
        None => io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("assoc: {e}");
        return ExitCode::from(2);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
