//! Argument parsing and validation: every request is checked against the
//! root-system data before any computation runs.

use clap::{Args, Parser, Subcommand, ValueEnum};

use stringval::rootdata::{Family, RootSystemSpec, WeylWord};
use stringval::Error;

/// Exit code for a failed theorem-level assertion.
pub const EXIT_ASSERTION: i32 = 1;
/// Exit code for unusable configuration; clap parse errors share it.
pub const EXIT_USAGE: i32 = 2;

/// CLI-level failure, split by exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Assertion(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Assertion(_) => EXIT_ASSERTION,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Assertion(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::UnsupportedRootSystem(_)
            | Error::InvalidWord(_)
            | Error::InvalidWeight(_)
            | Error::DimensionCap { .. }
            | Error::ZeroInput
            | Error::ShapeMismatch(_)
            | Error::InvalidIsotypicData(_)
            | Error::Parse(_) => CliError::Usage(e.to_string()),
            Error::LeafSeparation(_)
            | Error::ProductOutsideSpan(_)
            | Error::NotRepresentable(_)
            | Error::NotAdditivelyClosed(_)
            | Error::InconsistentGrowth(_)
            | Error::SubductionInconclusive(_)
            | Error::HullNotStabilized(_)
            | Error::Degenerate(_)
            | Error::Internal(_) => CliError::Assertion(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

// ---------------------------------------------------------------------------
// Top-level command tree
// ---------------------------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "stringval",
    version,
    about = "Exact string parametrizations, term valuations, and their polytopes"
)]
pub struct Cli {
    /// Output format for stdout; the JSON artifact written to
    /// $STRINGVAL_OUTDIR (when set) is unaffected.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand)]
pub enum Command {
    /// Root-system data: Cartan matrix, simple roots, longest words.
    Roots(SystemArgs),
    /// Build a highest-weight module and export its operators.
    Module(ModuleArgs),
    /// String-parametrization queries.
    Strings {
        #[command(subcommand)]
        cmd: StringsCmd,
    },
    /// Polynomial term-valuation queries and property suites.
    Poly {
        #[command(subcommand)]
        cmd: PolyCmd,
    },
    /// Compare string parameters with the negated chart valuation over a
    /// module's dual space.
    VerifyMainTheorem(VerifyArgs),
    /// Expand all basis products of two modules in their target module.
    Expand(ExpandArgs),
    /// Newton-Okounkov bodies, string polytopes, and growth checks.
    Nok {
        #[command(subcommand)]
        cmd: NokCmd,
    },
    /// Subduction, generator checks, and the degeneration family.
    Sagbi {
        #[command(subcommand)]
        cmd: SagbiCmd,
    },
}

// ---------------------------------------------------------------------------
// Shared argument groups
// ---------------------------------------------------------------------------

#[derive(Args)]
pub struct SystemArgs {
    /// Root-system family: A or C.
    #[arg(long)]
    pub family: String,
    /// Rank: 1-4 for family A, 2 for family C.
    #[arg(long)]
    pub rank: usize,
}

impl SystemArgs {
    pub fn spec(&self) -> CliResult<RootSystemSpec> {
        let family = match self.family.as_str() {
            "A" | "a" => Family::A,
            "C" | "c" => Family::C,
            other => {
                return Err(CliError::Usage(format!(
                    "unknown family {other:?}; expected A or C"
                )))
            }
        };
        Ok(RootSystemSpec::new(family, self.rank)?)
    }
}

/// Resolves an optional word argument: validates a given word against the
/// root system, or falls back to the canonical longest word.
pub fn resolve_word(spec: &RootSystemSpec, word: &Option<Vec<usize>>) -> CliResult<WeylWord> {
    match word {
        Some(w) => {
            spec.check_word(w)?;
            Ok(w.clone())
        }
        None => Ok(spec.some_longest_word()),
    }
}

#[derive(Args)]
pub struct ModuleArgs {
    #[command(flatten)]
    pub sys: SystemArgs,
    /// Dominant weight in fundamental-weight coordinates.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub lambda: Vec<i64>,
}

#[derive(Subcommand)]
pub enum StringsCmd {
    /// Emit the value set of a module: one string-parameter tuple per
    /// basis functional.
    ValueSet(WordWeightArgs),
}

#[derive(Args)]
pub struct WordWeightArgs {
    #[command(flatten)]
    pub sys: SystemArgs,
    /// Reduced word for the longest element, comma separated; defaults to
    /// the canonical one.
    #[arg(long, value_delimiter = ',')]
    pub word: Option<Vec<usize>>,
    /// Dominant weight in fundamental-weight coordinates.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub lambda: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ValKind {
    Highest,
    Lowest,
}

#[derive(Subcommand)]
pub enum PolyCmd {
    /// Valuation and leading term of a polynomial read from a JSON file
    /// ("-" for stdin).
    Value(PolyValueArgs),
    /// Property suite: pre-valuation axioms over seeded random pairs.
    Axioms(PolyAxiomsArgs),
}

#[derive(Args)]
pub struct PolyValueArgs {
    /// Path to a polynomial JSON file, or "-" for stdin.
    #[arg(long)]
    pub input: String,
    #[arg(long, value_enum, default_value_t = ValKind::Highest)]
    pub valuation: ValKind,
}

#[derive(Args)]
pub struct PolyAxiomsArgs {
    /// Number of variables in the random polynomials.
    #[arg(long, default_value_t = 3)]
    pub vars: usize,
    /// Number of random polynomial pairs.
    #[arg(long, default_value_t = 200)]
    pub random: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = ValKind::Highest)]
    pub valuation: ValKind,
    /// Replace the valuation by a deliberately broken map and require the
    /// suite to flag it.
    #[arg(long)]
    pub negative_control: bool,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub sys: SystemArgs,
    #[arg(long, value_delimiter = ',')]
    pub word: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub lambda: Vec<i64>,
    /// Extra seeded random functionals beyond the full dual basis.
    #[arg(long, default_value_t = 0)]
    pub random: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args)]
pub struct ExpandArgs {
    #[command(flatten)]
    pub sys: SystemArgs,
    #[arg(long, value_delimiter = ',')]
    pub word: Option<Vec<usize>>,
    /// Highest weight of the left factor.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub lambda: Vec<i64>,
    /// Highest weight of the right factor.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub mu: Vec<i64>,
}

#[derive(Subcommand)]
pub enum NokCmd {
    /// String polytope of a dominant weight, with lattice count and
    /// volume.
    StringPolytope(NokPolytopeArgs),
    /// Fit the Hilbert growth of the weight ray and compare with the
    /// polytope volume.
    Degree(NokDegreeArgs),
    /// Fibered polytope of built-in isotypic data, with level counts.
    Fibered(NokFiberedArgs),
}

#[derive(Args)]
pub struct NokPolytopeArgs {
    #[command(flatten)]
    pub sys: SystemArgs,
    #[arg(long, value_delimiter = ',')]
    pub word: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub lambda: Vec<i64>,
    /// Semigroup sampling depth; 2 suffices to certify stabilization.
    #[arg(long, default_value_t = 2)]
    pub level_cap: u32,
}

#[derive(Args)]
pub struct NokDegreeArgs {
    #[command(flatten)]
    pub sys: SystemArgs,
    #[arg(long, value_delimiter = ',')]
    pub word: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub lambda: Vec<i64>,
    /// Highest level of exact Hilbert values to fit.
    #[arg(long, default_value_t = 6)]
    pub levels: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BuiltinData {
    /// Level k supports every weight m with 0 <= m <= k (family A1).
    A1Interval,
    /// Level k supports exactly k times lambda.
    FlagRay,
}

#[derive(Args)]
pub struct NokFiberedArgs {
    /// Built-in isotypic datum.
    #[arg(long, value_enum)]
    pub data: BuiltinData,
    /// Root-system family; required for flag-ray data.
    #[arg(long)]
    pub family: Option<String>,
    /// Rank; required for flag-ray data.
    #[arg(long)]
    pub rank: Option<usize>,
    /// Base weight; required for flag-ray data.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub lambda: Option<Vec<i64>>,
    #[arg(long, value_delimiter = ',')]
    pub word: Option<Vec<usize>>,
    /// Levels contributing points to the hull.
    #[arg(long, default_value_t = 2)]
    pub level_cap: u32,
    /// Levels at which lattice counts are compared with dimension sums.
    #[arg(long, default_value_t = 4)]
    pub count_levels: u32,
}

#[derive(Subcommand)]
pub enum SagbiCmd {
    /// Subduct a spanning set of the section ring from its level-1
    /// generators, emitting the traces.
    Subduct(SagbiSampleArgs),
    /// Check that the level-1 generator values generate the sampled value
    /// semigroup.
    Check(SagbiCheckArgs),
    /// Expand all basis products and compare the leading-term table with
    /// the semigroup algebra.
    Degenerate(SagbiDegenerateArgs),
}

#[derive(Args)]
pub struct SagbiSampleArgs {
    #[command(flatten)]
    pub sys: SystemArgs,
    #[arg(long, value_delimiter = ',')]
    pub word: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub lambda: Vec<i64>,
    /// Sample the section ring through this level.
    #[arg(long, default_value_t = 3)]
    pub level_cap: u32,
    /// Bound on subduction steps per element.
    #[arg(long, default_value_t = stringval::sagbi::DEFAULT_STEP_CAP)]
    pub step_cap: usize,
}

#[derive(Args)]
pub struct SagbiCheckArgs {
    #[command(flatten)]
    pub base: SagbiSampleArgs,
    /// Drop the generator with this index (0-based) before checking; a
    /// deliberately incomplete set demonstrates the failure witness.
    #[arg(long)]
    pub drop_generator: Option<usize>,
}

#[derive(Args)]
pub struct SagbiDegenerateArgs {
    #[command(flatten)]
    pub sys: SystemArgs,
    #[arg(long, value_delimiter = ',')]
    pub word: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub lambda: Vec<i64>,
    /// Products are formed within this total level.
    #[arg(long, default_value_t = 2)]
    pub level_cap: u32,
}
