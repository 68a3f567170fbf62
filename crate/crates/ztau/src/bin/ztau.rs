//! Command-line front end: model-set queries, triple tools, window shifts,
//! the bounded power-equation search, and SVG rendering.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 generation cap
//! exceeded, 4 domain error (zero components, non-solutions, markers
//! outside the drawn interval), 5 i/o failure.

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use ztau::error::Error;
use ztau::fermat::{self, SearchConfig};
use ztau::json;
use ztau::model_set::{self, Patch};
use ztau::render::{render_svg, RenderSpec};
use ztau::ring::RingElement;
use ztau::triples::{decompose, enumerate, Parametrization, PowerTriple};
use ztau::window_shift::min_shift;

#[derive(Parser)]
#[command(
    name = "ztau",
    version,
    about = "Exact arithmetic in Z[tau] and the Fibonacci model set"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fibonacci model set: patches, membership, interval enumeration
    Modelset {
        #[command(subcommand)]
        action: ModelsetCmd,
    },
    /// Pythagorean triples: generate, enumerate, verify, decompose
    Triples {
        #[command(subcommand)]
        action: TriplesCmd,
    },
    /// Minimal tau-power shift placing a solution triple in the model set
    Shift(ShiftArgs),
    /// Exhaustive bounded search for solutions of x^k + y^k = z^k
    Fermat(FermatArgs),
    /// Render a patch of the tiling to SVG
    Render(RenderArgs),
}

#[derive(Subcommand)]
enum ModelsetCmd {
    /// Print the patch after N doubled substitutions of a|a
    Patch {
        #[arg(long, default_value_t = 0)]
        iterations: u32,
        /// Emit a JSON array of [m, n] pairs instead of element lines
        #[arg(long)]
        json: bool,
    },
    /// Test membership of an element, printing its sigma image
    Contains {
        #[arg(allow_hyphen_values = true)]
        element: RingElement,
        #[arg(long)]
        json: bool,
    },
    /// List members whose real value lies in [from, to]
    Interval {
        #[arg(long, allow_hyphen_values = true)]
        from: RingElement,
        #[arg(long, allow_hyphen_values = true)]
        to: RingElement,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum TriplesCmd {
    /// Generate the triple of a witness (l, m, n)
    Gen {
        #[arg(long, allow_hyphen_values = true)]
        l: RingElement,
        #[arg(long, allow_hyphen_values = true)]
        m: RingElement,
        #[arg(long, allow_hyphen_values = true)]
        n: RingElement,
        /// Use the negative sign on the 2lmn term
        #[arg(long)]
        negative: bool,
        /// Interchange x and y in the result
        #[arg(long)]
        swapped: bool,
    },
    /// Stream distinct nontrivial Pythagorean triples as JSONL
    Enum {
        #[arg(long)]
        bound: u32,
        #[arg(long, default_value_t = u64::MAX)]
        limit: u64,
    },
    /// Recover a parametrization witness for a Pythagorean triple
    Decompose {
        #[arg(allow_hyphen_values = true)]
        x: RingElement,
        #[arg(allow_hyphen_values = true)]
        y: RingElement,
        #[arg(allow_hyphen_values = true)]
        z: RingElement,
    },
    /// Check x^k + y^k = z^k exactly
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=64))]
        k: u32,
        #[arg(allow_hyphen_values = true)]
        x: RingElement,
        #[arg(allow_hyphen_values = true)]
        y: RingElement,
        #[arg(allow_hyphen_values = true)]
        z: RingElement,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct ShiftArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..=64))]
    k: u32,
    #[arg(allow_hyphen_values = true)]
    x: RingElement,
    #[arg(allow_hyphen_values = true)]
    y: RingElement,
    #[arg(allow_hyphen_values = true)]
    z: RingElement,
}

#[derive(Args)]
struct FermatArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..=64))]
    k: u32,
    /// Coefficient box radius for x and y
    #[arg(long, default_value_t = 30)]
    bound: u32,
    /// Worker threads (default: ZTAU_WORKERS or available parallelism)
    #[arg(long)]
    workers: Option<usize>,
    /// Report every ordered (x, y) hit instead of canonical unique forms
    #[arg(long)]
    no_dedup: bool,
    /// Allow bounds beyond the desk-scale limit of 30
    #[arg(long)]
    long_run: bool,
    /// Resumable progress file, one line per completed shard
    #[arg(long)]
    checkpoint: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long, default_value_t = 2)]
    iterations: u32,
    /// Marked point with label, as ELEMENT:LABEL (repeatable)
    #[arg(long = "mark")]
    marks: Vec<String>,
    /// Output SVG path
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 40)]
    px_per_unit: u32,
    #[arg(long, default_value_t = 120)]
    height: u32,
    #[arg(long)]
    width: Option<u32>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse(_) => 2,
        Error::CapExceeded { .. } => 3,
        Error::Io(_) => 5,
        _ => 4,
    }
}

/// Write one line to stdout; a closed reader (downstream `head`, a broken
/// pipe) ends the process quietly instead of panicking mid-stream.
fn emit(line: impl std::fmt::Display) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{line}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(5);
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Modelset { action } => run_modelset(action),
        Command::Triples { action } => run_triples(action),
        Command::Shift(args) => run_shift(args),
        Command::Fermat(args) => run_fermat(args),
        Command::Render(args) => run_render(args),
    }
}

fn run_modelset(action: ModelsetCmd) -> Result<(), Error> {
    match action {
        ModelsetCmd::Patch {
            iterations,
            json: as_json,
        } => {
            let patch = Patch::generate(iterations)?;
            if as_json {
                let values: Vec<_> = patch.points().iter().map(json::element_value).collect();
                emit(serde_json::Value::Array(values));
            } else {
                for point in patch.points() {
                    emit(point);
                }
            }
        }
        ModelsetCmd::Contains {
            element,
            json: as_json,
        } => {
            let member = model_set::contains(&element);
            let sigma = element.conj();
            let decimal = sigma.embed().decimal_string(6);
            if as_json {
                emit(serde_json::json!({
                    "member": member,
                    "sigma": json::element_value(&sigma),
                    "sigma_decimal": decimal,
                }));
            } else {
                emit(member);
                emit(format_args!("sigma = {sigma} = {decimal}"));
            }
        }
        ModelsetCmd::Interval {
            from,
            to,
            json: as_json,
        } => {
            let members = model_set::members_in_interval(&from.embed(), &to.embed());
            if as_json {
                let values: Vec<_> = members.iter().map(json::element_value).collect();
                emit(serde_json::Value::Array(values));
            } else {
                for member in &members {
                    emit(member);
                }
            }
        }
    }
    Ok(())
}

fn run_triples(action: TriplesCmd) -> Result<(), Error> {
    match action {
        TriplesCmd::Gen {
            l,
            m,
            n,
            negative,
            swapped,
        } => {
            let p = Parametrization::new(l, m, n, negative, swapped);
            emit(json::triple_value(&p.triple()));
        }
        TriplesCmd::Enum { bound, limit } => {
            let limit = usize::try_from(limit).unwrap_or(usize::MAX);
            for t in enumerate(bound, limit) {
                emit(json::triple_value(&t));
            }
        }
        TriplesCmd::Decompose { x, y, z } => {
            let p = decompose(&PowerTriple::new(x, y, z, 2))?;
            emit(json::parametrization_value(&p));
        }
        TriplesCmd::Verify {
            k,
            x,
            y,
            z,
            json: as_json,
        } => {
            let valid = PowerTriple::new(x, y, z, k).verify();
            if as_json {
                emit(serde_json::json!({ "valid": valid }));
            } else {
                emit(valid);
            }
        }
    }
    Ok(())
}

fn run_shift(args: ShiftArgs) -> Result<(), Error> {
    let result = min_shift(&PowerTriple::new(args.x, args.y, args.z, args.k))?;
    emit(json::shift_value(&result));
    Ok(())
}

fn default_workers() -> usize {
    if let Ok(value) = std::env::var("ZTAU_WORKERS") {
        if let Ok(parsed) = value.parse::<usize>() {
            if parsed >= 1 {
                return parsed;
            }
        }
    }
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

fn run_fermat(args: FermatArgs) -> Result<(), Error> {
    if args.bound > 30 && !args.long_run {
        eprintln!(
            "error: --bound {} exceeds the desk-scale limit of 30; pass --long-run \
             (ideally with --checkpoint) to confirm",
            args.bound
        );
        std::process::exit(2);
    }
    let cfg = SearchConfig::new(args.k, args.bound)
        .with_workers(args.workers.unwrap_or_else(default_workers))
        .with_dedup(!args.no_dedup);
    let sink = |t: &PowerTriple| emit(json::triple_value(t));
    let report = match &args.checkpoint {
        Some(path) => fermat::search_resumable(&cfg, path, sink)?,
        None => fermat::search_streaming(&cfg, sink),
    };
    emit(json::report_value(&report));
    Ok(())
}

fn run_render(args: RenderArgs) -> Result<(), Error> {
    let mut markers = Vec::with_capacity(args.marks.len());
    for mark in &args.marks {
        let (element_text, label) = match mark.split_once(':') {
            Some((e, l)) => (e, l.to_string()),
            None => (mark.as_str(), mark.clone()),
        };
        let element: RingElement = element_text.trim().parse()?;
        markers.push((element, label));
    }
    let spec = RenderSpec {
        iterations: args.iterations,
        markers,
        px_per_unit: args.px_per_unit,
        height: args.height,
        width: args.width,
    };
    let svg = render_svg(&spec)?;
    std::fs::write(&args.out, svg)?;
    Ok(())
}
