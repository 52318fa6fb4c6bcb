use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod input;

use input::CliError;

#[derive(Parser, Debug)]
#[command(name = "mintrellis", version, about = "Minimal span forms, characteristic matrices and tail-biting trellises")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Matrix source: a file path, `-` for stdin, or `fixture:NAME`.
#[derive(Args, Debug, Clone)]
struct Source {
    input: String,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal span form of a generator matrix.
    Msf {
        #[command(flatten)]
        src: Source,
        /// Reduce the minimal span form.
        #[arg(long)]
        reduce: bool,
        #[arg(long, value_enum, default_value_t = Side::Left)]
        flavor: Side,
    },
    /// `A = L P U` factorization of a square matrix.
    Lpu {
        #[command(flatten)]
        src: Source,
    },
    /// Bruhat permutation of a square matrix for one corner.
    Bruhat {
        #[command(flatten)]
        src: Source,
        #[arg(long, value_enum, default_value_t = CornerArg::Sw)]
        corner: CornerArg,
    },
    /// Characteristic pair `X`, `Y` of a code.
    Char {
        #[command(flatten)]
        src: Source,
        #[arg(long, value_enum, default_value_t = Method::Reduced)]
        method: Method,
    },
    /// Tail-biting trellis on selected rows of `X`.
    Trellis {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        opts: TrellisOpts,
    },
    /// Label code table of the characteristic pair.
    Labelcode {
        #[command(flatten)]
        src: Source,
        /// Generator rows to keep (0-based, comma separated); others are masked.
        #[arg(long, value_delimiter = ',')]
        rows: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = DirectionArg::YX)]
        direction: DirectionArg,
    },
    /// Runs every identity check on a code or a characteristic matrix.
    Verify {
        /// Matrix source; omit with `--random`.
        input: Option<String>,
        #[arg(long)]
        json: bool,
        /// Treat the input as a left-ordered characteristic matrix `X`.
        #[arg(long)]
        x: bool,
        #[command(flatten)]
        random: RandomOpts,
    },
    /// Rook board of the characteristic spans, or of a periodic span list.
    Rooks {
        input: Option<String>,
        #[arg(long)]
        json: bool,
        /// Periodic spans `i:j,...` on a board of size `--period`.
        #[arg(long, value_delimiter = ',', requires = "period")]
        spans: Option<Vec<String>>,
        #[arg(long)]
        period: Option<usize>,
    },
    /// Block-banded display of the unit-memory codes of `X` and `Y`.
    Band {
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value_t = 2)]
        windows: usize,
    },
    /// Lists fixtures, or prints one of their matrices or golden tables.
    Fixture {
        name: Option<String>,
        /// Matrix to print (defaults to the code).
        #[arg(long, conflicts_with = "golden")]
        matrix: Option<String>,
        /// Golden table to print.
        #[arg(long)]
        golden: Option<String>,
    },
}

#[derive(Args, Debug, Clone)]
struct TrellisOpts {
    /// Rows of `X` used as generators (0-based, comma separated).
    #[arg(long, value_delimiter = ',')]
    rows: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t = Construction::Product)]
    construction: Construction,
    /// Vertex labels for the BCJR construction.
    #[arg(long, value_enum, default_value_t = LabelsArg::H)]
    labels: LabelsArg,
    /// Parity matrix file used with `--labels h` instead of the reduced one.
    #[arg(long)]
    parity: Option<String>,
    /// Print Graphviz DOT instead of the label table.
    #[arg(long)]
    dot: bool,
    /// Write the DOT output to a file.
    #[arg(long, requires = "dot")]
    out: Option<PathBuf>,
    /// Also build the dual trellis on the complementary rows of `Y`.
    #[arg(long)]
    dual: bool,
}

#[derive(Args, Debug, Clone)]
struct RandomOpts {
    /// Check a random full-rank code instead of an input matrix.
    #[arg(long)]
    random: bool,
    #[arg(long, default_value_t = 2)]
    p: u32,
    #[arg(long, default_value_t = 6)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum CornerArg {
    Nw,
    Ne,
    Sw,
    Se,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Method {
    Reduced,
    Direct,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Construction {
    Product,
    Bcjr,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum LabelsArg {
    H,
    Y,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum DirectionArg {
    /// Rows of `X`, labels from `Y`.
    #[value(name = "yx")]
    YX,
    /// Rows of `Y`, labels from `X`.
    #[value(name = "xy")]
    XY,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
