use clap::{Parser, Subcommand};
use reesag::rees::{DEFAULT_CAP, DEFAULT_TRIALS};

#[derive(Parser, Debug, Clone)]
#[command(name = "reesag", version, about = "Almost Gorenstein checks for Rees algebras over k[x,y]")]
pub struct Cli {
    /// Coefficient field: `fp:<p>` or `q`.
    #[arg(long, global = true, default_value = "fp:32003")]
    pub field: String,
    /// Monomial order of the base ring: `grevlex` or `lex`.
    #[arg(long, global = true, default_value = "grevlex")]
    pub order: String,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Trials per randomized search.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
    /// Largest reduction number tried.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Hypersurface modulus, e.g. `x^2 - y*z`.
    #[arg(long = "mod", global = true)]
    pub modulus: Option<String>,
    /// Comma separated variable names; `x,y` by default (`x,y,z` for
    /// `hypersurface`).
    #[arg(long, global = true)]
    pub vars: Option<String>,
    #[arg(long, global = true)]
    pub json: bool,
    /// Include wall-clock milliseconds in the report. Off by default so
    /// reports are byte-identical across runs.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Reduced Gröbner basis.
    Gb {
        #[arg(long)]
        ideal: String,
    },
    /// Normal form of a polynomial.
    Nf {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        poly: String,
    },
    /// Ideal membership with a certificate.
    Member {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        poly: String,
    },
    /// `I : J`.
    Colon {
        #[arg(long = "I")]
        i: String,
        #[arg(long = "J")]
        j: String,
    },
    /// `I·J`.
    Product {
        #[arg(long = "I")]
        i: String,
        #[arg(long = "J")]
        j: String,
    },
    /// `I^k`.
    Power {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        k: u32,
    },
    /// `I ∩ J`.
    Intersect {
        #[arg(long = "I")]
        i: String,
        #[arg(long = "J")]
        j: String,
    },
    /// Whether `I = J`.
    Equal {
        #[arg(long = "I")]
        i: String,
        #[arg(long = "J")]
        j: String,
    },
    /// Minimal number of generators (graded, or at the origin).
    Mingens {
        #[arg(long)]
        ideal: String,
    },
    /// Whether the ideal is primary to the maximal ideal at the origin.
    Mprimary {
        #[arg(long)]
        ideal: String,
    },
    /// Colength `dim_k k[x,y]/I`.
    Vdim {
        #[arg(long)]
        ideal: String,
    },
    /// Integral closure of a monomial ideal in two variables.
    Closure {
        #[arg(long)]
        ideal: String,
    },
    /// Whether a monomial ideal in two variables is integrally closed.
    Isclosed {
        #[arg(long)]
        ideal: String,
    },
    /// Reduction number of `I` with respect to `Q`.
    Redno {
        #[arg(long = "Q")]
        q: String,
        #[arg(long = "I")]
        i: String,
    },
    /// Random parameter ideal `Q` with `I² = QI`.
    Findred {
        #[arg(long)]
        ideal: String,
    },
    /// Presentation ideal of the Rees algebra.
    Reesideal {
        #[arg(long)]
        ideal: String,
    },
    /// `a ∈ I`, `b ∈ J` with `IJ = aJ + Ib`.
    Jointred {
        #[arg(long = "I")]
        i: String,
        #[arg(long = "J")]
        j: String,
    },
    /// Reduction, canonical colon and witness search.
    Agcheck {
        #[arg(long)]
        ideal: String,
    },
    /// Socle ideal `Q : m` and its obstruction.
    Socle {
        #[arg(long = "Q")]
        q: String,
    },
    /// The forms `F, G, H` presenting the Rees algebra of `Q : m`.
    Fgh {
        #[arg(long = "Q")]
        q: String,
    },
    /// `I = m^ℓ` on the quadric `k[x,y,z]/(f3)`, `f3` from `--mod`.
    Hypersurface {
        #[arg(long, default_value_t = 1)]
        ell: u32,
        /// Linear forms with `m² = (a,b)m` modulo `f3`; searched when absent.
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
    },
    /// Every built-in claim; nonzero exit on any failure.
    #[command(name = "paper-suite")]
    ClaimSuite {
        /// Corrupt the expected value of this entry (harness self-test).
        #[arg(long)]
        tamper: Vec<String>,
    },
}

impl Command {
    pub fn verb(&self) -> &'static str {
        match self {
            Command::Gb { .. } => "gb",
            Command::Nf { .. } => "nf",
            Command::Member { .. } => "member",
            Command::Colon { .. } => "colon",
            Command::Product { .. } => "product",
            Command::Power { .. } => "power",
            Command::Intersect { .. } => "intersect",
            Command::Equal { .. } => "equal",
            Command::Mingens { .. } => "mingens",
            Command::Mprimary { .. } => "mprimary",
            Command::Vdim { .. } => "vdim",
            Command::Closure { .. } => "closure",
            Command::Isclosed { .. } => "isclosed",
            Command::Redno { .. } => "redno",
            Command::Findred { .. } => "findred",
            Command::Reesideal { .. } => "reesideal",
            Command::Jointred { .. } => "jointred",
            Command::Agcheck { .. } => "agcheck",
            Command::Socle { .. } => "socle",
            Command::Fgh { .. } => "fgh",
            Command::Hypersurface { .. } => "hypersurface",
            Command::ClaimSuite { .. } => "paper-suite",
        }
    }
}
