use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use num_bigint::BigInt;
use serde::Serialize;

pub struct Output {
    pub body: String,
    pub exit: ExitCode,
}

impl Output {
    pub fn ok(body: String) -> Self {
        Output {
            body,
            exit: ExitCode::SUCCESS,
        }
    }
}

pub struct Failure {
    pub message: String,
    pub code: ExitCode,
}

impl Failure {
    /// Bad input: unparsable flags or parameters outside the domain.
    pub fn usage(message: impl ToString) -> Self {
        Failure {
            message: message.to_string(),
            code: ExitCode::from(2),
        }
    }

    pub fn runtime(message: impl ToString) -> Self {
        Failure {
            message: message.to_string(),
            code: ExitCode::from(1),
        }
    }
}

impl From<maxgenus::Error> for Failure {
    fn from(e: maxgenus::Error) -> Self {
        Failure::usage(e)
    }
}

pub type CliResult<T> = Result<T, Failure>;

pub fn json<T: Serialize + ?Sized>(value: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(Failure::runtime)?;
    s.push('\n');
    Ok(s)
}

pub fn csv<T: Serialize>(rows: impl IntoIterator<Item = T>) -> CliResult<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(Failure::runtime)?;
    }
    let bytes = w.into_inner().map_err(Failure::runtime)?;
    String::from_utf8(bytes).map_err(Failure::runtime)
}

/// A big integer as a JSON number when it fits, as a string otherwise.
pub fn big(n: &BigInt) -> serde_json::Value {
    i64::try_from(n)
        .map(Into::into)
        .unwrap_or_else(|_| n.to_string().into())
}

pub fn emit(out: &Output, path: Option<&Path>) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, &out.body).map_err(|e| Failure::runtime(format!("{}: {e}", p.display()))),
        None => std::io::stdout()
            .lock()
            .write_all(out.body.as_bytes())
            .map_err(Failure::runtime),
    }
}
