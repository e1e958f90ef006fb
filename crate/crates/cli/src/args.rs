//! Command-line grammar. Flags shared by every verb live on [`Cli`].

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Seed used by randomized checks when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 0x6d63_7562;

#[derive(Parser, Debug, Clone)]
#[command(name = "mcub", version, about = "Exact algebra for cubic curves, descent pages, cobar charts and Steenrod comodules")]
pub struct Cli {
    /// Output format; defaults to svg for `chart render`, json otherwise.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Directory for outputs named after the verb, used when --out is absent.
    #[arg(long, global = true, env = "MCUB_OUT_DIR")]
    pub out_dir: Option<PathBuf>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Weight or degree cutoff, for verbs that truncate.
    #[arg(long, global = true)]
    pub cutoff: Option<u32>,
    /// Prime, for verbs that work at a prime.
    #[arg(long, global = true)]
    pub prime: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Svg,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Tsv => "tsv",
            Format::Svg => "svg",
        }
    }
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Weierstrass curves and their formal groups.
    #[command(subcommand)]
    Curve(CurveCommand),
    /// Fibers of the flat covers of the moduli of cubics.
    #[command(subcommand)]
    Cover(CoverCommand),
    /// Čech cohomology of ω^j on a weighted projective line.
    Cech(CechArgs),
    /// Homotopy ranks read off a two-row descent page.
    Descent(DescentArgs),
    /// The two-row page for Tmf ∧ MU.
    TmfMu(TmfMuArgs),
    /// Hopf algebroids and their cobar cohomology.
    #[command(subcommand)]
    Hopf(HopfCommand),
    /// The mod 2 dual Steenrod algebra and its subcomodule algebras.
    #[command(subcommand)]
    Steenrod(SteenrodCommand),
    /// Rendering of bigraded charts.
    #[command(subcommand)]
    Chart(ChartCommand),
}

#[derive(Args, Debug, Clone)]
pub struct CurveArg {
    /// Five comma-separated coefficients a1,a2,a3,a4,a6: integers or
    /// polynomials in named generators, or `universal`.
    #[arg(long, default_value = "universal", allow_hyphen_values = true)]
    pub curve: String,
}

#[derive(Subcommand, Debug, Clone)]
pub enum CurveCommand {
    /// b2, b4, b6, b8, c4, c6 and the discriminant.
    Invariants {
        #[command(flatten)]
        curve: CurveArg,
        /// Check c4^3 - c6^2 = 1728 Δ on this many random integer curves instead.
        #[arg(long)]
        random: Option<usize>,
        /// Coefficients of random curves are drawn from -bound..=bound.
        #[arg(long, default_value_t = 50)]
        bound: i64,
    },
    /// Coefficients of the formal group law F(x, y).
    Fgl {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long, default_value_t = 5)]
        order: usize,
    },
    /// Coefficients of the [n]-series.
    Nseries {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
    /// v_0, ..., v_h read off the [p]-series.
    Hasse {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long, default_value_t = 2)]
        heights: u32,
        /// Series order; defaults to p^heights.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Regularity of (p, v_1, ..., v_h) and powers of c4 and Δ in its ideal.
    Landweber {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long, default_value_t = 2)]
        heights: u32,
        #[arg(long, default_value_t = 8)]
        max_power: u32,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum CoverCommand {
    /// Basis and multiplication table of the fiber of the cover at p.
    Fiber {
        /// The cuspidal curve y^2 = x^3.
        #[arg(long, conflicts_with = "curve")]
        cusp: bool,
        /// Five comma-separated integers a1,a2,a3,a4,a6.
        #[arg(long, allow_hyphen_values = true)]
        curve: Option<String>,
        /// Field of definition: Q, or F followed by a prime. Defaults to F_p.
        #[arg(long)]
        field: Option<String>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct CechArgs {
    #[arg(long, default_value = "1,3")]
    pub weights: String,
    /// Inclusive twist range a..b.
    #[arg(long, allow_hyphen_values = true, default_value = "-6..6")]
    pub twists: String,
    /// Names of the two coordinates; default alpha<w>.
    #[arg(long)]
    pub names: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct DescentArgs {
    #[arg(long, default_value = "1,3")]
    pub weights: String,
    /// Inclusive range of topological degrees a..b.
    #[arg(long, allow_hyphen_values = true, default_value = "0..12")]
    pub degrees: String,
    #[arg(long)]
    pub names: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct TmfMuArgs {
    #[arg(long, allow_hyphen_values = true, default_value = "-6..6")]
    pub twists: String,
    /// Largest n with a generator e_n in the ambient ring.
    #[arg(long, default_value_t = 12)]
    pub e_cutoff: u32,
    /// Set a2 = a4 = a6 = e_n = 0.
    #[arg(long)]
    pub specialized: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum HopfCommand {
    /// Presentation of a built-in algebroid with its axiom report.
    Synthesize {
        #[arg(long, default_value = "weierstrass")]
        algebroid: String,
        /// Weight through which coassociativity is rechecked on a basis.
        #[arg(long, default_value_t = 24)]
        depth: u32,
    },
    /// E_2 chart of the cobar complex.
    Cobar {
        #[arg(long, default_value = "weierstrass")]
        algebroid: String,
        /// unit, extended, sign, or character:<element of Γ>.
        #[arg(long, default_value = "unit")]
        comodule: String,
        #[arg(long, default_value_t = 2)]
        s_max: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "0..12")]
        t_range: String,
        /// Z, local (at --prime) or mod (at --prime).
        #[arg(long, default_value = "Z")]
        coefficients: String,
        /// Abort when a cochain group is larger than this.
        #[arg(long, default_value_t = 20000)]
        max_dim: usize,
    },
    /// H^0 from the kernel of η_R − η_L, twist by twist.
    H0 {
        #[arg(long, default_value = "weierstrass")]
        algebroid: String,
        #[arg(long, default_value = "unit")]
        comodule: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-12..12")]
        twists: String,
    },
    /// The involution of KU^0(CP^2) induced by complex conjugation.
    Kucp2,
}

#[derive(Subcommand, Debug, Clone)]
pub enum SteenrodCommand {
    /// An element in both coordinate systems, and the conjugates ξ̄_k.
    Conjugate {
        /// Text in xi<i> and xibar<i>.
        #[arg(long)]
        element: Option<String>,
        /// List ξ̄_k in Milnor coordinates for k up to this, with the
        /// antipode identity. Defaults to 6, or fewer if the cutoff is low.
        #[arg(long)]
        through: Option<usize>,
    },
    /// Coproduct of an element.
    Coproduct {
        #[arg(long)]
        element: String,
        /// milnor or conjugate.
        #[arg(long, default_value = "milnor")]
        coords: String,
    },
    /// Closure, freeness and uniqueness checks for a subcomodule algebra.
    Verify {
        /// ko, ku, tmf, hz, dual, squares or bp:<n>.
        #[arg(long, conflicts_with = "generators")]
        target: Option<String>,
        /// Comma-separated generators of a custom subalgebra.
        #[arg(long)]
        generators: Option<String>,
        /// Cutoff of the Milnor-coordinate closure route.
        #[arg(long)]
        milnor_cutoff: Option<u32>,
    },
    /// Primitives of 𝔸 or of a quotient comodule 𝔸/C.
    Primitives {
        /// dual, ground, a named subalgebra, or gens:<comma list>.
        #[arg(long, default_value = "dual")]
        quotient: String,
        #[arg(long, default_value = "0..16")]
        window: String,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum ChartCommand {
    /// Draw a chart JSON file in Adams coordinates.
    Render {
        #[arg(long)]
        input: PathBuf,
        /// JSON list of arrows {from: [s, t], to: [s, t], label}.
        #[arg(long)]
        arrows: Option<PathBuf>,
        /// Horizontal window a..b in t − s; defaults to the chart's extent.
        #[arg(long, allow_hyphen_values = true)]
        x_range: Option<String>,
        /// Largest s drawn; defaults to the chart's s_max.
        #[arg(long)]
        s_max: Option<usize>,
    },
}
