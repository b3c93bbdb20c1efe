//! `qtlink`: quandle cocycle invariants of links from the command line.

mod commands;
mod inputs;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qtlink::exec::{init_thread_pool, Exec};
use qtlink::invariant::InvariantMode;

use commands::{Failure, Output};

#[derive(Parser, Debug)]
#[command(name = "qtlink", version, about = "Quandle cocycle invariants of links up to link-homotopy")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Invariant mode; link-homotopy requires a quasi-trivial quandle.
    #[arg(long, global = true, value_enum, default_value_t = Mode::LinkHomotopy)]
    mode: Mode,
    /// Coefficient modulus (0 for the integers); overrides the cocycle's own.
    #[arg(long = "mod", global = true, value_name = "M")]
    modulus: Option<u64>,
    /// Worker threads; 1 runs sequentially, 0 uses every core.
    #[arg(long, global = true, default_value_t = 0, value_name = "K")]
    jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    LinkHomotopy,
    Ambient,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    /// One JSON document.
    Doc,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the quandle axioms and report quasi-triviality, orbits and |Inn|.
    CheckQuandle {
        /// Catalog name or quandle file.
        quandle: String,
        /// Stop the Inn closure after this many elements.
        #[arg(long, default_value_t = 1_000_000)]
        inn_cap: usize,
    },
    /// Check the 2-cocycle conditions.
    CheckCocycle {
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        cocycle: String,
    },
    /// Count or list the colorings of a link diagram.
    Colorings {
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        link: String,
        /// Print every coloring as `edge=color` pairs.
        #[arg(long)]
        dump: bool,
        /// Restrict component i to orbit k, as a comma-separated list.
        #[arg(long, value_delimiter = ',', value_name = "K,..")]
        orbits: Option<Vec<usize>>,
    },
    /// The cocycle invariant, one multiset of weights per component.
    Invariant {
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        cocycle: String,
        #[arg(long)]
        link: String,
    },
    /// The invariant split by the orbit of each component.
    Refined {
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        cocycle: String,
        #[arg(long)]
        link: String,
    },
    /// Second cohomology, and whether a cocycle is a coboundary.
    Cohomology {
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        cocycle: Option<String>,
    },
    /// Pairwise linking numbers.
    Linking {
        #[arg(long)]
        link: String,
    },
    /// Change one crossing and emit the new link file.
    Flip {
        #[arg(long)]
        link: String,
        /// 1-based crossing index in file order.
        #[arg(long)]
        crossing: usize,
        /// Write the new diagram here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// List the built-in quandles, cochains and diagrams.
    Catalog {
        #[arg(long, value_enum)]
        kind: Option<Kind>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Quandle,
    Cochain,
    Diagram,
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let exec = match cli.jobs {
        1 => Exec::Sequential,
        0 => Exec::Parallel,
        k => {
            init_thread_pool(k);
            Exec::Parallel
        }
    };
    let mode = match cli.mode {
        Mode::LinkHomotopy => InvariantMode::LinkHomotopy,
        Mode::Ambient => InvariantMode::Ambient,
    };
    let m = cli.modulus;
    match cli.command {
        Command::CheckQuandle { quandle, inn_cap } => commands::check_quandle(&quandle, inn_cap),
        Command::CheckCocycle { quandle, cocycle } => commands::check_cocycle(&quandle, &cocycle, mode, m),
        Command::Colorings { quandle, link, dump, orbits } => {
            commands::colorings(&quandle, &link, dump, orbits.as_deref(), exec)
        }
        Command::Invariant { quandle, cocycle, link } => commands::invariant(&quandle, &cocycle, &link, mode, m, exec),
        Command::Refined { quandle, cocycle, link } => commands::refined(&quandle, &cocycle, &link, mode, m, exec),
        Command::Cohomology { quandle, cocycle } => commands::cohomology(&quandle, cocycle.as_deref(), mode, m, exec),
        Command::Linking { link } => commands::linking(&link),
        Command::Flip { link, crossing, output } => commands::flip(&link, crossing, output.as_deref()),
        Command::Catalog { kind } => commands::catalog(kind.map(|k| match k {
            Kind::Quandle => qtlink::catalog::CatalogKind::Quandle,
            Kind::Cochain => qtlink::catalog::CatalogKind::Cochain,
            Kind::Diagram => qtlink::catalog::CatalogKind::Diagram,
        })),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            match format {
                Format::Text => print!("{}", out.text),
                Format::Doc => println!("{}", serde_json::to_string_pretty(&out.doc).expect("serializable")),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("invalid input: {msg}");
            ExitCode::from(1)
        }
    }
}
