//! Command-line front end for shadow enumeration, classification of Gabriel
//! quivers and the block tools.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 bad arguments,
//! 3 unreadable input or unwritable output, 4 domain error.

mod error;
pub mod fixtures;
pub mod manifest;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use quiver_core::{canonical, io, Quiver};
use reconstruction::{classify, reconstruct, verify_against_reference, Mode};
use shadow_engine::{enumerate, shadow, Shadow};
use surface_algebra::{decomposition_to_json, mutate_block, recognize_gwsa_gabriel};

pub use error::CliError;
use manifest::{content_hash, input_hash, manifest_path, RunManifest};

#[derive(Parser, Debug)]
#[command(
    name = "tsp4",
    version,
    about = "Shadows and Gabriel quivers of tame symmetric algebras of period four"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads; output does not depend on this.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the result here instead of standard output, with a run manifest beside it.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ShadowMode {
    Basic,
    Essential,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate shadows on N vertices and print their number.
    Shadows {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ShadowMode::Essential)]
        mode: ShadowMode,
    },
    /// Classify Gabriel quivers on N vertices.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "tsp4")]
        mode: Mode,
        /// Compare with the bundled reference lists; exit 1 on a difference.
        #[arg(long)]
        verify: bool,
    },
    /// Build and filter every candidate over one shadow.
    Reconstruct {
        #[arg(long)]
        shadow: PathBuf,
        #[arg(long, default_value = "tsp4")]
        mode: Mode,
        /// Include the exclusion report of every candidate.
        #[arg(long)]
        report: bool,
    },
    /// Rewrite a block at a vertex (1-based).
    Mutate {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        vertex: usize,
    },
    /// Decompose a quiver into blocks.
    Recognize {
        #[arg(long)]
        quiver: PathBuf,
    },
    /// Canonical relabeling of a quiver.
    Canon {
        #[arg(long)]
        quiver: PathBuf,
    },
    /// List bundled fixtures, or print one.
    Fixtures {
        #[arg(long)]
        name: Option<String>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Shadows { .. } => "shadows",
            Command::Classify { .. } => "classify",
            Command::Reconstruct { .. } => "reconstruct",
            Command::Mutate { .. } => "mutate",
            Command::Recognize { .. } => "recognize",
            Command::Canon { .. } => "canon",
            Command::Fixtures { .. } => "fixtures",
        }
    }
}

/// What a command produced before it is written out.
struct Output {
    /// Lines for standard output in every case.
    summary: String,
    /// The result document; goes to `--out`, or to standard output when
    /// `to_stdout` is set and no `--out` was given.
    document: String,
    to_stdout: bool,
    /// Argument values that determine the document.
    key: Vec<String>,
    inputs: Vec<Vec<u8>>,
    /// Error to report after the document has been written.
    deferred: Option<CliError>,
    diagnostics: String,
}

impl Output {
    fn document(document: String) -> Self {
        Output {
            summary: String::new(),
            document,
            to_stdout: true,
            key: Vec::new(),
            inputs: Vec::new(),
            deferred: None,
            diagnostics: String::new(),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    let started = Instant::now();
    let output = match cli.threads {
        Some(0) => return Err(CliError::Usage("--threads must be at least 1".into())),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| CliError::Domain(e.to_string()))?
            .install(|| dispatch(cli))?,
        None => dispatch(cli)?,
    };
    let console = |w: &mut dyn Write, text: &str| {
        w.write_all(text.as_bytes()).map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        })
    };
    console(stdout, &output.summary)?;
    match &cli.out {
        Some(path) => {
            write_file(path, output.document.as_bytes())?;
            let manifest = RunManifest {
                command: cli.command.name().to_string(),
                arguments: output.key.clone(),
                input_hash: input_hash(cli.command.name(), &output.key, &output.inputs),
                output_hash: content_hash(output.document.as_bytes()),
                threads: cli.threads,
                wall_time_ms: started.elapsed().as_millis(),
                output: path.clone(),
            };
            let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes") + "\n";
            write_file(&manifest_path(path), text.as_bytes())?;
        }
        None if output.to_stdout => console(stdout, &output.document)?,
        None => {}
    }
    let _ = stderr.write_all(output.diagnostics.as_bytes());
    output.deferred.map_or(Ok(()), Err)
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    std::fs::write(path, bytes).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_file(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_quiver(path: &Path) -> Result<(Quiver, Vec<u8>), CliError> {
    let bytes = read_file(path)?;
    let text = String::from_utf8_lossy(&bytes);
    let q = io::from_json(&text).map_err(|e| CliError::Input {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    Ok((q, bytes))
}

fn read_shadow(path: &Path) -> Result<(Shadow, Vec<u8>), CliError> {
    let bytes = read_file(path)?;
    let text = String::from_utf8_lossy(&bytes);
    let s = shadow::from_json(&text).map_err(|e| CliError::Input {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    Ok((s, bytes))
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"
}

fn render_quiver(q: &Quiver, format: Format) -> String {
    match format {
        Format::Json => io::to_json(q) + "\n",
        Format::Dot => io::to_dot(q),
    }
}

fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    let quiver_only = matches!(cli.command, Command::Mutate { .. } | Command::Canon { .. });
    if cli.format == Format::Dot && !quiver_only {
        return Err(CliError::Usage(
            "--format dot applies to mutate and canon".into(),
        ));
    }
    match &cli.command {
        Command::Shadows { n, mode } => cmd_shadows(*n, *mode),
        Command::Classify { n, mode, verify } => cmd_classify(*n, *mode, *verify),
        Command::Reconstruct {
            shadow,
            mode,
            report,
        } => cmd_reconstruct(shadow, *mode, *report),
        Command::Mutate { quiver, vertex } => {
            let (q, bytes) = read_quiver(quiver)?;
            if *vertex == 0 {
                return Err(CliError::Usage("vertices are numbered from 1".into()));
            }
            let m = mutate_block(&q, vertex - 1)?;
            let mut out = Output::document(render_quiver(&m, cli.format));
            out.key = vec![vertex.to_string()];
            out.inputs = vec![bytes];
            Ok(out)
        }
        Command::Recognize { quiver } => {
            let (q, bytes) = read_quiver(quiver)?;
            let d = recognize_gwsa_gabriel(&q)
                .ok_or_else(|| CliError::Domain("the quiver is not glued from blocks".into()))?;
            let mut out = Output::document(pretty(&decomposition_to_json(&d)));
            out.inputs = vec![bytes];
            Ok(out)
        }
        Command::Canon { quiver } => {
            let (q, bytes) = read_quiver(quiver)?;
            let mut out = Output::document(render_quiver(&canonical(&q)?, cli.format));
            out.inputs = vec![bytes];
            Ok(out)
        }
        Command::Fixtures { name: None } => {
            let mut out = Output::document(fixtures::FIXTURE_NAMES.join("\n") + "\n");
            out.key = vec!["--list".into()];
            Ok(out)
        }
        Command::Fixtures { name: Some(name) } => {
            let f = fixtures::fixture(name)
                .ok_or_else(|| CliError::Usage(format!("unknown fixture {name:?}")))?;
            let mut out = Output::document(pretty(&f.to_json_value()));
            out.key = vec![name.clone()];
            Ok(out)
        }
    }
}

fn cmd_shadows(n: usize, mode: ShadowMode) -> Result<Output, CliError> {
    if !(1..=6).contains(&n) {
        return Err(CliError::Usage(format!(
            "--n must be between 1 and 6, got {n}"
        )));
    }
    let (engine_mode, label) = match mode {
        ShadowMode::Basic => (shadow_engine::Mode::BasicTame, "basic"),
        ShadowMode::Essential => (shadow_engine::Mode::Essential, "essential"),
    };
    let list = enumerate(n, engine_mode)?;
    let doc = serde_json::json!({
        "n": n,
        "mode": label,
        "count": list.len(),
        "shadows": list.iter().map(shadow::to_json_value).collect::<Vec<_>>(),
    });
    let mut out = Output::document(pretty(&doc));
    out.summary = format!("{}\n", list.len());
    out.to_stdout = false;
    out.key = vec![n.to_string(), label.to_string()];
    Ok(out)
}

fn cmd_classify(n: usize, mode: Mode, verify: bool) -> Result<Output, CliError> {
    if !(3..=5).contains(&n) {
        let e = reconstruction::ReconstructionError::UnsupportedSize(n);
        return Err(CliError::Usage(e.to_string()));
    }
    let c = classify(n, mode)?;
    let mut summary = format!(
        "n={n} mode={}: {} quivers from {} essential shadows\n",
        mode.name(),
        c.survivors.len(),
        c.shadows.len()
    );
    for q in &c.survivors {
        summary.push_str(&io::to_json(q));
        summary.push('\n');
    }
    let mut out = Output::document(pretty(&c.to_json_value()));
    out.to_stdout = false;
    out.key = vec![n.to_string(), mode.name().to_string(), verify.to_string()];
    if verify {
        let report = verify_against_reference(&c);
        for id in &report.undecided {
            summary.push_str(&format!("undecided: {id}\n"));
        }
        if report.passed() {
            summary.push_str("verified: matches the reference list\n");
        } else {
            out.diagnostics = pretty(&report.to_json_value());
            out.deferred = Some(CliError::Mismatch);
        }
    }
    out.summary = summary;
    Ok(out)
}

fn cmd_reconstruct(path: &Path, mode: Mode, report: bool) -> Result<Output, CliError> {
    let (a, bytes) = read_shadow(path)?;
    let outcomes = reconstruct(&a, mode)?;
    let survivors: Vec<_> = outcomes
        .iter()
        .filter(|o| !o.report.is_excluded())
        .map(|o| io::to_json_value(&o.candidate.assembled))
        .collect();
    let mut doc = serde_json::json!({
        "shadow": shadow::to_json_value(&a),
        "mode": mode.name(),
        "candidates": outcomes.len(),
        "survivors": survivors,
    });
    if report {
        doc["reports"] = outcomes
            .iter()
            .map(|o| {
                let mut r = o.report.to_json_value();
                r["candidate"] = io::to_json_value(&o.candidate.assembled);
                r
            })
            .collect();
    }
    let mut out = Output::document(pretty(&doc));
    out.key = vec![mode.name().to_string(), report.to_string()];
    out.inputs = vec![bytes];
    Ok(out)
}
