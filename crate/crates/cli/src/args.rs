use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "shabat",
    version,
    about = "Theta functions, Chebyshev-Blaschke products, monodromy and moduli"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// τ and series settings shared by the numerical commands.
#[derive(Clone, Debug, Args)]
pub struct Series {
    /// τ = i·y
    #[arg(long, allow_hyphen_values = true, conflicts_with = "tau")]
    pub tau_im: Option<f64>,

    /// τ as "re,im"
    #[arg(long, allow_hyphen_values = true)]
    pub tau: Option<String>,

    /// Relative truncation tolerance
    #[arg(long, allow_hyphen_values = true)]
    pub tol: Option<f64>,

    /// Largest series index
    #[arg(long)]
    pub max_terms: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate ϑ_j(v, τ)
    Theta {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=3))]
        j: u8,
        /// v as "re,im" or "re"
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        v: String,
        #[command(flatten)]
        series: Series,
    },
    /// ω₁, k, √k and sn, cn, dn, cd at u
    Elliptic {
        /// u as "re,im" or "re"
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        u: String,
        #[command(flatten)]
        series: Series,
    },
    /// Chebyshev-Blaschke products
    Cb {
        #[command(subcommand)]
        command: CbCommand,
    },
    /// Permutation-pair monodromy
    Monodromy {
        #[command(subcommand)]
        command: MonodromyCommand,
    },
    /// Conformal moduli
    Modulus {
        #[command(subcommand)]
        command: ModulusCommand,
    },
    /// Landen-type identities
    #[command(args_conflicts_with_subcommands = true)]
    Landen {
        #[command(subcommand)]
        command: Option<LandenCommand>,
        #[command(flatten)]
        verify: LandenVerify,
    },
    /// Run the acceptance suite
    VerifyAll {
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Clone, Debug, Args)]
pub struct Degree {
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub series: Series,
    /// Allow τ off the imaginary axis
    #[arg(long)]
    pub relaxed: bool,
}

#[derive(Debug, Subcommand)]
pub enum CbCommand {
    /// Squared zeros, coefficients and parity
    Build(Degree),
    /// Product and expanded forms at z
    Eval {
        #[command(flatten)]
        degree: Degree,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Coefficients by all three routes
    Coeffs(Degree),
    /// Derivatives at 0
    Derivs {
        #[command(flatten)]
        degree: Degree,
        /// Highest order
        #[arg(long, default_value_t = 5)]
        j: usize,
    },
    /// Critical points and values
    Critical(Degree),
    /// λ and the normalized modulus
    Modulus(Degree),
    /// f_{m,nτ} ∘ f_{n,τ} against f_{mn,τ}
    Compose {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        degree: Degree,
    },
}

#[derive(Clone, Debug, Args)]
pub struct Pair {
    /// Degree
    #[arg(long)]
    pub n: usize,
    /// σ₁ as cycles "(1 2)(3 4)" or one-line "2 1 4 3"
    #[arg(long, default_value = "")]
    pub sigma1: String,
    #[arg(long, default_value = "")]
    pub sigma2: String,
}

#[derive(Debug, Subcommand)]
pub enum MonodromyCommand {
    /// Transitivity, cycle counts, tree test, Euler characteristic
    Analyze(Pair),
    /// Whether two pairs are conjugate
    Equiv {
        #[command(flatten)]
        first: Pair,
        #[arg(long, default_value = "")]
        other1: String,
        #[arg(long, default_value = "")]
        other2: String,
    },
    /// The path-tree pair of degree n
    Chebyshev {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum ModulusCommand {
    /// (1/2π) log(1/r)
    Annulus {
        #[arg(long, allow_hyphen_values = true)]
        r: f64,
    },
    /// Disk slit along [0, t]
    Grotzsch {
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
    },
    /// Distance and slit-disk modulus for the geodesic from a to b
    Geodesic {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Modulus of the complement of the dessin of f_{n,τ}
    DessinSize(Degree),
}

#[derive(Clone, Debug, Args)]
pub struct LandenVerify {
    /// Catalog identity, e.g. n4_sum
    #[arg(long)]
    pub id: Option<String>,
    /// Product identity for degree n
    #[arg(long, conflicts_with = "id")]
    pub n: Option<usize>,
    #[command(flatten)]
    pub series: Series,
}

#[derive(Debug, Subcommand)]
pub enum LandenCommand {
    /// One identity at one τ
    Verify(LandenVerify),
    /// Trigonometric limit of a catalog identity
    Limit {
        #[arg(long)]
        id: String,
        /// Height y of τ = iy
        #[arg(long, allow_hyphen_values = true, default_value_t = 30.0)]
        y: f64,
    },
    /// Every catalog identity on the standard grid
    All,
}
