//! Batch front end for `orbinv-core`: one subcommand, one JSON document.

pub mod args;
pub mod commands;
pub mod report;

use std::ffi::OsString;
use std::panic::{self, AssertUnwindSafe};

use clap::error::ErrorKind;
use clap::Parser;
use orbinv_core::Error;
use serde::Serialize;

use args::{Cli, Command};
use commands::GrowthDoc;
use report::ErrorDoc;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Exit status and the text destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failure(status: i32, error: &'static str, detail: String) -> Self {
        Outcome {
            status,
            stdout: String::new(),
            stderr: render(&ErrorDoc { error, detail }),
        }
    }
}

fn render<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents are plain data");
    s.push('\n');
    s
}

pub fn error_code(e: &Error) -> &'static str {
    match e {
        Error::SignOfZero => "sign_of_zero",
        Error::ZeroArgument(_) => "zero_argument",
        Error::FieldMismatch(_) => "field_mismatch",
        Error::InvalidPlace { .. } => "invalid_place",
        Error::NotSquarefree(_) => "not_squarefree",
        Error::Parse { .. } => "parse_error",
        Error::UnsupportedDegree(_) => "unsupported_degree",
        Error::IsotropicVector => "isotropic_vector",
        Error::NotIsometry => "not_isometry",
        Error::NotSpecial => "not_special",
        Error::DimensionMismatch { .. } => "dimension_mismatch",
        Error::NotAdmissible => "not_admissible",
        Error::ThetaDataUnavailable => "theta_data_unavailable",
        Error::InsufficientPrecision(_) => "insufficient_precision",
        Error::InvalidArgument(_) => "invalid_argument",
        Error::Internal(_) => "internal",
    }
}

pub fn exit_status(e: &Error) -> i32 {
    if e.is_internal() {
        EXIT_INTERNAL
    } else {
        EXIT_INVALID
    }
}

fn execute(command: &Command) -> orbinv_core::Result<String> {
    Ok(match command {
        Command::FieldInvariants(a) => render(&commands::field_invariants(a)?),
        Command::SpinorNorm(a) => render(&commands::spinor_norm(a)?),
        Command::Decompose(a) => render(&commands::decompose(a)?),
        Command::CheckNormalizer(a) => render(&commands::check_normalizer(a)?),
        Command::GrowthBound(a) => match commands::growth_bound(a)? {
            GrowthDoc::Value(doc) => render(&doc),
            GrowthDoc::Certificate(doc) => render(&doc),
        },
        Command::Sweep(a) => render(&commands::sweep(a)?),
    })
}

/// Parses `argv` (program name first) and runs the subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Outcome {
                status: EXIT_OK,
                stdout: e.to_string(),
                stderr: String::new(),
            }
        }
        Err(e) => {
            return Outcome::failure(EXIT_INVALID, "usage", e.render().to_string().trim().into())
        }
    };

    let result = panic::catch_unwind(AssertUnwindSafe(|| execute(&cli.command)));
    let stdout = match result {
        Ok(Ok(stdout)) => stdout,
        Ok(Err(e)) => return Outcome::failure(exit_status(&e), error_code(&e), e.to_string()),
        Err(payload) => {
            let detail = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            return Outcome::failure(EXIT_INTERNAL, "internal", detail);
        }
    };

    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &stdout) {
            return Outcome::failure(EXIT_INVALID, "io_error", format!("{}: {e}", path.display()));
        }
    }
    Outcome {
        status: EXIT_OK,
        stdout,
        stderr: String::new(),
    }
}
