use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Tsv,
    Latex,
}

/// Settings shared by every command.
#[derive(Args, Clone, Debug)]
pub struct CliConfig {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,
    /// Largest n accepted by exhaustive commands
    #[arg(long, default_value_t = 7, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub nmax: u32,
    /// Seed for randomized commands
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Print polynomials as sums of y_ij = x_i - t_j and z_ij = t_j - t_i products
    #[arg(long, global = true)]
    pub factored_style: bool,
}

#[derive(Parser, Debug)]
#[command(name = "eqsym", version, about = "Double forest and double Schubert polynomial calculator")]
struct Cli {
    #[command(flatten)]
    config: CliConfig,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Double forest polynomial of a forest, given as a code "(0,2,1)" or factorization "1.2"
    ForestPoly { forest: String },
    /// Double Schubert polynomial of a permutation
    Schubert {
        perm: String,
        #[arg(long, value_enum, default_value_t = Method::Vine)]
        method: Method,
    },
    /// Evaluate at a permutation (x_i -> t_{w(i)}) or a depleted alphabet
    Evaluate(EvaluateArgs),
    /// Expand in the double forest basis
    #[command(subcommand)]
    Expand(ExpandCmd),
    /// Graham positivity test of a polynomial in t
    Graham { poly: String },
    /// Noncrossing permutations
    #[command(subcommand)]
    Nc(NcCmd),
    /// Vine diagrams
    #[command(subcommand)]
    Vine(VineCmd),
    /// Regenerate a reference table and compare it with the checked-in golden
    Tables {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
    },
    /// Randomized self-checks
    #[command(subcommand)]
    Check(CheckCmd),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Vine,
    Dd,
    Pipedream,
}

#[derive(Args, Debug)]
pub struct EvaluateArgs {
    #[command(flatten)]
    pub target: Target,
    #[command(flatten)]
    pub point: Point,
}

/// What to evaluate.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Target {
    /// A forest code or factorization
    #[arg(long)]
    pub forest: Option<String>,
    /// The double Schubert polynomial of a permutation
    #[arg(long)]
    pub schubert: Option<String>,
    /// A polynomial in x_i, t_i
    #[arg(long)]
    pub poly: Option<String>,
}

/// Where to evaluate.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Point {
    /// Permutation in one-line notation
    #[arg(long)]
    pub perm: Option<String>,
    /// Removed indices, comma separated: x_i -> t of the i-th remaining index
    #[arg(long)]
    pub deplete: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum ExpandCmd {
    /// S_w with Graham certificates
    Schubert { perm: String },
    /// Any polynomial, by coefficient extraction
    Monomial { poly: String },
    /// P_F P_G with Graham certificates
    Product { f: String, g: String },
    /// Lower-degree summands of F_c F_d in the double fundamental basis
    Fundamental { c: String, d: String },
}

#[derive(Subcommand, Debug)]
pub enum NcCmd {
    /// Classes of S_n under w ~ w s_i for i in {w(i), w(i+1)}
    Classes { n: u32 },
    /// Noncrossing descents
    Descents { perm: String },
    /// Noncrossing reduced words
    Rednc { perm: String },
    /// The vert code
    Vert { perm: String },
    /// The noncrossing permutation of a forest
    ForToNc {
        forest: String,
        #[arg(long)]
        n: Option<u32>,
    },
    /// The forest of a noncrossing permutation
    ToForest { perm: String },
    /// Noncrossing inversions
    Inv { perm: String },
    /// Blocks, as backward cycles
    Blocks { perm: String },
    /// Canonical words ncrmin, sylcont and sylmin
    Canonical { perm: String },
    /// Deplete a noncrossing descent
    Deplete { perm: String, a: u32 },
}

#[derive(Subcommand, Debug)]
pub enum VineCmd {
    /// Draw the subwords of a forest or a permutation
    #[command(after_help = eqsym::vine::TILE_LEGEND)]
    Render {
        #[arg(long, conflicts_with = "schubert", required_unless_present = "schubert")]
        forest: Option<String>,
        #[arg(long)]
        schubert: Option<String>,
    },
    /// Print the long word of size n
    LongWord { n: u32 },
    /// Read a diagram on stdin and print its subword
    Parse,
}

#[derive(Subcommand, Debug)]
pub enum CheckCmd {
    /// Random combinations of forest polynomials with Graham-positive coefficients
    Random {
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli.cmd, &cli.config) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.mismatch { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
