//! Command-line front end.
//!
//! Exit statuses: 0 success (or a lower bound was established), 1 usage, I/O
//! or validation failure, 2 the search hit `--max-vertices` with colorings
//! left, 3 `check` found a repetitive path.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::checker::{find_repetitive, Coloring};
use crate::checkpoint::{expect_run, read_checkpoint_file, write_checkpoint_file};
use crate::enumerator::{self, CountsTable, Frontier};
use crate::error::{Error, Result};
use crate::lattice::{build_order, Family, PrefixGraph, MAX_VERTICES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_REPETITIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "thue-grid",
    version,
    about = "Non-repetitive coloring search on lattice graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Grow the frontier of non-repetitive colorings and print n(i) per step.
    Run(RunConfig),
    /// Check whether a coloring of a prefix graph is non-repetitive.
    Check {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        colors: usize,
        /// One color id per vertex, whitespace separated.
        file: PathBuf,
    },
    /// Print the vertex-addition order as `index x y` lines.
    Order {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        count: usize,
    },
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub colors: usize,
    #[arg(long = "max-vertices")]
    pub max_vertices: usize,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Rewritten after every completed step.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Continue from a checkpoint written by an earlier run.
    #[arg(long)]
    pub resume: Option<PathBuf>,
    /// Write the counts as CSV with header `i,n`.
    #[arg(long)]
    pub table: Option<PathBuf>,
}

impl RunConfig {
    fn validate(&self) -> Result<()> {
        crate::checker::validate_palette(self.colors)?;
        if self.max_vertices < enumerator::SEED_LEN {
            return Err(Error::MaxVerticesTooSmall(self.max_vertices));
        }
        if self.max_vertices > MAX_VERTICES {
            return Err(Error::TooManyVertices(self.max_vertices));
        }
        if self.threads == 0 {
            return Err(Error::Table("thread count must be at least 1".into()));
        }
        Ok(())
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit status.
pub fn run_cli<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_FAILURE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Run(config) => cmd_run(&config, out, err),
        Command::Check {
            family,
            colors,
            file,
        } => cmd_check(family, colors, &file, out),
        Command::Order { family, count } => cmd_order(family, count, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

pub fn cmd_run(
    config: &RunConfig,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> Result<i32> {
    config.validate()?;
    let resumed = match &config.resume {
        Some(path) => {
            let (frontier, family) = read_checkpoint_file(path)?;
            expect_run(&frontier, family, config.family, config.colors)?;
            Some(frontier)
        }
        None => None,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| Error::Io(std::io::Error::other(e)))?;

    let family = config.family;
    let checkpoint = config.checkpoint.as_deref();
    let mut sink = |frontier: &Frontier| -> Result<()> {
        writeln!(out, "{},{}", frontier.len(), frontier.count())?;
        out.flush()?;
        if let Some(path) = checkpoint {
            write_checkpoint_file(path, frontier, family)?;
        }
        Ok(())
    };
    let table = pool.install(|| match resumed {
        Some(frontier) => enumerator::resume(frontier, family, config.max_vertices, &mut sink),
        None => enumerator::run(family, config.colors, config.max_vertices, &mut sink),
    })?;

    if let Some(path) = &config.table {
        fs::write(path, table.to_csv()?)?;
    }
    report(&table, out, err)
}

fn report(table: &CountsTable, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match table.derived_bound {
        Some(bound) => {
            writeln!(out, "pi >= {bound}")?;
            Ok(EXIT_OK)
        }
        None => {
            let last = table
                .rows
                .last()
                .map(|&(i, n)| format!("n({i}) = {n}"))
                .unwrap_or_else(|| "no steps computed".into());
            writeln!(err, "inconclusive: {last} at the vertex limit")?;
            Ok(EXIT_INCONCLUSIVE)
        }
    }
}

/// Parses whitespace-separated decimal color ids.
pub fn parse_coloring(text: &str, palette: usize) -> Result<Coloring> {
    let mut colors = Vec::new();
    for token in text.split_whitespace() {
        let id: usize = token
            .parse()
            .map_err(|_| Error::Table(format!("malformed color id `{token}`")))?;
        if id >= palette {
            return Err(Error::ColorOutOfRange {
                color: id,
                colors: palette,
            });
        }
        colors.push(id as u8);
    }
    Coloring::new(colors, palette)
}

pub fn cmd_check(
    family: Family,
    palette: usize,
    file: &std::path::Path,
    out: &mut dyn Write,
) -> Result<i32> {
    crate::checker::validate_palette(palette)?;
    let text = fs::read_to_string(file)?;
    let coloring = parse_coloring(&text, palette)?;
    let i = coloring.len();
    if i < enumerator::SEED_LEN {
        return Err(Error::PrefixOutOfRange {
            requested: i,
            available: MAX_VERTICES,
        });
    }
    if i > MAX_VERTICES {
        return Err(Error::TooManyVertices(i));
    }
    let order = build_order(family, i)?;
    let g = PrefixGraph::from_order(&order, i)?;
    match find_repetitive(&g, &coloring)? {
        None => {
            writeln!(out, "non-repetitive")?;
            Ok(EXIT_OK)
        }
        Some(w) => {
            let join = |half: &[usize]| {
                half.iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            writeln!(out, "repetitive (k={})", w.half_len())?;
            writeln!(out, "{}", join(&w.first_half))?;
            writeln!(out, "{}", join(&w.second_half))?;
            writeln!(out, "join: {}", w.joined_at)?;
            Ok(EXIT_REPETITIVE)
        }
    }
}

pub fn cmd_order(family: Family, count: usize, out: &mut dyn Write) -> Result<i32> {
    let order = build_order(family, count)?;
    for (idx, c) in order.coords().iter().enumerate() {
        writeln!(out, "{idx} {} {}", c.x, c.y)?;
    }
    Ok(EXIT_OK)
}
