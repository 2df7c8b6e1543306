use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use radiogrid::io::{self, Format, OracleKind};
use radiogrid::oracle::OracleLimits;
use radiogrid::Error;

#[derive(Parser)]
#[command(
    name = "radiogrid",
    version,
    about = "Radio numbers and optimal radio labelings of grid graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args)]
struct Dims {
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Closed-form radio number and bounds.
    Rn(Dims),
    /// Closed-form upper traceable number.
    Tplus(Dims),
    /// Emit an optimal labeling.
    Label {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, value_enum, default_value = "json")]
        format: Fmt,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Accepted for compatibility; constructions are deterministic.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check a JSON labeling document ("-" reads stdin).
    Verify { path: PathBuf },
    /// Per-step report of the optimal ordering.
    Analyze(Dims),
    /// Exact search, compared with the closed form.
    Oracle {
        #[arg(value_enum)]
        kind: Kind,
        #[command(flatten)]
        dims: Dims,
        /// Lift the default size guard.
        #[arg(long)]
        force: bool,
        /// Give up after this many search nodes.
        #[arg(long)]
        max_nodes: Option<u64>,
        /// Write the witness as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Fmt {
    Json,
    Ascii,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Rn,
    Tplus,
}

fn write_out(path: Option<&PathBuf>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Error::Input(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_in(path: &PathBuf) -> Result<String, Error> {
    let mut s = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| s = t)
    };
    res.map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    Ok(s)
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.cmd {
        Cmd::Rn(d) => write_out(None, &io::cmd_rn(d.a, d.b)?)?,
        Cmd::Tplus(d) => write_out(None, &io::cmd_tplus(d.a, d.b)?)?,
        Cmd::Label {
            dims, format, out, ..
        } => {
            let format = match format {
                Fmt::Json => Format::Json,
                Fmt::Ascii => Format::Ascii,
                Fmt::Dot => Format::Dot,
            };
            write_out(out.as_ref(), &io::cmd_label(dims.a, dims.b, format)?)?;
        }
        Cmd::Verify { path } => {
            let outcome = io::cmd_verify(&read_in(&path)?)?;
            print!("{}", outcome.text);
            return Ok(outcome.exit_code());
        }
        Cmd::Analyze(d) => write_out(None, &io::cmd_analyze(d.a, d.b)?)?,
        Cmd::Oracle {
            kind,
            dims,
            force,
            max_nodes,
            out,
        } => {
            let kind = match kind {
                Kind::Rn => OracleKind::Rn,
                Kind::Tplus => OracleKind::TPlus,
            };
            let mut limits = if force {
                io::forced_limits(kind)
            } else {
                OracleLimits::default()
            };
            limits.max_nodes = max_nodes;
            let (outcome, res) = io::cmd_oracle(kind, dims.a, dims.b, limits)?;
            print!("{}", outcome.text);
            if let Some(p) = out {
                write_out(Some(&p), &io::witness_json(kind, &res))?;
            }
            return Ok(outcome.exit_code());
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::ResourceLimit {
                incumbent: Some(best),
                ..
            } = &e
            {
                eprintln!("best span found before stopping: {best}");
            }
            if matches!(
                e,
                Error::ResourceLimit {
                    incumbent: None,
                    ..
                }
            ) {
                eprintln!("pass --force to lift the size guard");
            }
            ExitCode::from(io::error_exit_code(&e))
        }
    }
}
