use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use log::info;

use spherecover::covering::{covering_radius, verify_dimension, CoveringError, CoveringOptions, VerifyError};
use spherecover::polytope::dump::Dump;
use spherecover::polytope::{enumerate_vertices, polar_hrep};
use spherecover::{report, with_configuration, AnyConfiguration, Backend, Configuration, Field};

mod oracle;

#[derive(Parser)]
#[command(name = "spherecover", version)]
#[command(about = "Exact covering radii of symmetric spherical configurations")]
struct Cli {
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// More log output on stderr (-v, -vv)
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Exact,
    Float,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(clap::Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,

    /// Digits after the decimal point
    #[arg(long, default_value_t = 5)]
    digits: usize,

    /// Include wall time
    #[arg(long)]
    timing: bool,

    /// Write to a file instead of stdout
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the built-in constructions for n = 5..15
    Verify {
        #[arg(long, conflicts_with = "dim", required_unless_present = "dim")]
        all: bool,

        /// Dimension to check; repeatable
        #[arg(long, value_parser = clap::value_parser!(u32).range(5..=15))]
        dim: Vec<u32>,

        #[arg(long, value_enum)]
        backend: Option<BackendArg>,

        /// Enumerate the whole polar polytope instead of one cone
        #[arg(long)]
        no_symmetry: bool,

        /// Keep every polar halfspace from the start
        #[arg(long)]
        no_prefilter: bool,

        #[command(flatten)]
        out: OutputArgs,
    },
    /// Covering radius of a configuration file or `table1:<n>`
    Radius {
        config: String,

        /// Require invariance under coordinate permutations and negation and
        /// search one fundamental cone (default: only when invariant)
        #[arg(long, conflicts_with = "no_symmetry")]
        symmetry: bool,

        /// Enumerate the whole polar polytope
        #[arg(long)]
        no_symmetry: bool,

        #[arg(long)]
        no_prefilter: bool,

        #[arg(long, value_enum)]
        backend: Option<BackendArg>,

        #[command(flatten)]
        out: OutputArgs,
    },
    /// Cross-check the engine against brute force and random sampling
    Oracle {
        /// Configuration file or `table1:<n>`
        #[arg(required_unless_present = "hrep", conflicts_with = "hrep")]
        config: Option<String>,

        /// Halfspace dump to enumerate
        #[arg(long)]
        hrep: Option<PathBuf>,

        /// Expected vertices (dump format); defaults to vertex lines in --hrep
        #[arg(long, requires = "hrep")]
        vrep: Option<PathBuf>,

        #[arg(long, default_value_t = 100_000)]
        samples: usize,

        #[arg(long, default_value_t = 0)]
        seed: u64,

        #[arg(long, value_enum)]
        backend: Option<BackendArg>,
    },
    /// Write the polar halfspaces of a configuration in dump format
    Dump {
        config: String,

        /// Prepend the symmetry cone rows
        #[arg(long)]
        symmetry: bool,

        /// Append the enumerated vertices
        #[arg(long)]
        vertices: bool,

        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Print a built-in construction as a JSON configuration file
    Export {
        #[arg(value_parser = clap::value_parser!(u32).range(5..=15))]
        dim: u32,
    },
}

/// A failed command: exit status and message for stderr.
pub(crate) struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn math(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

pub(crate) fn backend(arg: Option<BackendArg>) -> Backend {
    match arg {
        None => Backend::Auto,
        Some(BackendArg::Exact) => Backend::Exact,
        Some(BackendArg::Float) => Backend::Float,
    }
}

pub(crate) fn load(source: &str, arg: Option<BackendArg>) -> Result<AnyConfiguration, Failure> {
    AnyConfiguration::load(source, backend(arg)).map_err(|e| Failure::usage(e.to_string()))
}

fn emit(text: &str, path: Option<&PathBuf>) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn covering_failure(e: CoveringError) -> Failure {
    match e {
        CoveringError::Polytope(_) => Failure::math(e.to_string()),
        other => Failure::usage(other.to_string()),
    }
}

fn run_verify(
    all: bool,
    dims: Vec<u32>,
    backend_arg: Option<BackendArg>,
    opts: CoveringOptions,
    out: &OutputArgs,
) -> Result<(), Failure> {
    let mut dims: Vec<usize> = if all {
        (5..=15).collect()
    } else {
        dims.into_iter().map(|d| d as usize).collect()
    };
    dims.sort_unstable();
    dims.dedup();
    let backend = backend(backend_arg);
    if backend == Backend::Exact {
        if let Some(n) = dims.iter().find(|&&n| n >= 11) {
            return Err(Failure::usage(format!(
                "no exact backend for n = {n}: its coordinates do not fit one quadratic field"
            )));
        }
    }
    let mut reports = Vec::new();
    let mut failures = Vec::new();
    for n in dims {
        match verify_dimension(n, backend, &opts) {
            Ok(r) => reports.push(r),
            Err(e) => {
                if let Some(r) = e.report() {
                    reports.push(r.clone());
                }
                if let VerifyError::Covering {
                    source: CoveringError::Config(_),
                    ..
                } = e
                {
                    return Err(Failure::usage(e.to_string()));
                }
                failures.push(e.to_string());
            }
        }
    }
    let text = match out.format {
        Format::Text => report::to_text(&reports, out.digits, out.timing),
        Format::Json => report::to_json(&reports, out.digits, out.timing),
        Format::Csv => report::to_csv(&reports, out.digits, out.timing),
    };
    emit(&text, out.output.as_ref())?;
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::math(failures.join("\n")))
    }
}

fn run_radius(
    config: &str,
    backend_arg: Option<BackendArg>,
    symmetry: Option<bool>,
    prefilter: bool,
    out: &OutputArgs,
) -> Result<(), Failure> {
    let config = load(config, backend_arg)?;
    info!("{} points in dimension {} over {}", config.len(), config.dimension(), config.field());
    let use_symmetry =
        symmetry.unwrap_or_else(|| with_configuration!(&config, c => c.is_permutation_symmetric()));
    let opts = CoveringOptions {
        use_symmetry,
        prefilter,
        adjacency: None,
    };
    let r = with_configuration!(&config, c => covering_radius(c, &opts)).map_err(covering_failure)?;
    let text = match out.format {
        Format::Text => report::to_text_single(&r, out.digits, out.timing),
        Format::Json => report::to_json_single(&r, out.digits, out.timing),
        Format::Csv => report::to_csv(std::slice::from_ref(&r), out.digits, out.timing),
    };
    emit(&text, out.output.as_ref())
}

fn dump_config<F: Field>(c: &Configuration<F>, symmetry: bool, vertices: bool) -> Result<String, Failure> {
    let mut p = polar_hrep(c);
    if symmetry {
        p = p.with_symmetry_cone();
    }
    let mut dump = Dump::from_polytope(c.field, &p);
    if vertices {
        let v = enumerate_vertices(&p).map_err(|e| Failure::math(e.to_string()))?;
        dump.vertices = v
            .vertices
            .iter()
            .map(|x| x.iter().map(Field::to_scalar).collect())
            .collect();
    }
    Ok(dump.write())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Verify {
            all,
            dim,
            backend,
            no_symmetry,
            no_prefilter,
            out,
        } => {
            let opts = CoveringOptions {
                use_symmetry: !no_symmetry,
                prefilter: !no_prefilter,
                adjacency: None,
            };
            run_verify(all, dim, backend, opts, &out)
        }
        Command::Radius {
            config,
            symmetry,
            no_symmetry,
            no_prefilter,
            backend,
            out,
        } => {
            let mode = match (symmetry, no_symmetry) {
                (true, _) => Some(true),
                (_, true) => Some(false),
                _ => None,
            };
            run_radius(&config, backend, mode, !no_prefilter, &out)
        }
        Command::Oracle {
            config,
            hrep,
            vrep,
            samples,
            seed,
            backend,
        } => match (config, hrep) {
            (Some(config), _) => oracle::run_config(&config, backend, samples, seed),
            (None, Some(hrep)) => oracle::run_hrep(&hrep, vrep.as_deref()),
            (None, None) => Err(Failure::usage("give a configuration or --hrep")),
        },
        Command::Dump {
            config,
            symmetry,
            vertices,
            output,
        } => {
            let config = load(&config, None)?;
            let text = with_configuration!(&config, c => dump_config(c, symmetry, vertices))?;
            emit(&text, output.as_ref())
        }
        Command::Export { dim } => {
            let config = load(&format!("table1:{dim}"), None)?;
            emit(&(config.to_file().to_json() + "\n"), None)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .format_timestamp(None)
        .init();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
