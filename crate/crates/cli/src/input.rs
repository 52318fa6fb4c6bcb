use std::io::Read;

use mintrellis::fixtures::fixture;
use mintrellis::text::MatrixText;

/// Input or usage error; the process exits with status 2.
#[derive(Debug)]
pub struct CliError(pub String);

impl From<mintrellis::Error> for CliError {
    fn from(e: mintrellis::Error) -> Self {
        CliError(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Reads `-` (stdin), `fixture:NAME[/MATRIX]` or a file path. A fixture key may also name a golden table.
pub fn read_source(src: &str) -> CliResult<String> {
    if src == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    if let Some(spec) = src.strip_prefix("fixture:") {
        let (name, which) = spec.split_once('/').map_or((spec, None), |(a, b)| (a, Some(b)));
        let f = fixture(name).ok_or_else(|| CliError(format!("unknown fixture {name:?}")))?;
        let text = match which {
            Some(m) => f.matrix(m).or_else(|| f.golden(m)),
            None => f.code(),
        };
        return text
            .map(str::to_owned)
            .ok_or_else(|| CliError(format!("fixture {name:?} has no matrix {:?}", which.unwrap_or("code"))));
    }
    std::fs::read_to_string(src).map_err(|e| CliError(format!("{src}: {e}")))
}

pub fn load(src: &str) -> CliResult<MatrixText> {
    Ok(MatrixText::parse(&read_source(src)?)?)
}

/// Runs `$body` with `$F` bound to the field type for prime `$p`.
macro_rules! with_field {
    ($p:expr, $F:ident => $body:expr) => {
        match $p {
            2 => {
                type $F = mintrellis::Fp<2>;
                $body
            }
            3 => {
                type $F = mintrellis::Fp<3>;
                $body
            }
            5 => {
                type $F = mintrellis::Fp<5>;
                $body
            }
            7 => {
                type $F = mintrellis::Fp<7>;
                $body
            }
            11 => {
                type $F = mintrellis::Fp<11>;
                $body
            }
            13 => {
                type $F = mintrellis::Fp<13>;
                $body
            }
            p => {
                mintrellis::Field::new(p as u64)?;
                Err($crate::input::CliError(format!("GF({p}) is valid but not built in; use 2, 3, 5, 7, 11 or 13")))
            }
        }
    };
}

pub(crate) use with_field;
