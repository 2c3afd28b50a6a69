use std::path::PathBuf;

use aztec::render::Palette;
use aztec::{AztecError, Edge, KCoord, Param, Precision, WeightScheme};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Inverse Kasteleyn matrices, edge statistics and random tilings of the
/// Aztec diamond. All numeric output is JSON on standard output.
#[derive(Debug, Parser)]
#[command(name = "aztec", version)]
pub struct Cli {
    /// Arithmetic backend; defaults to the AZTEC_PRECISION variable, then double.
    #[arg(long, global = true, value_enum)]
    pub precision: Option<PrecisionArg>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PrecisionArg {
    Double,
    Exact,
}

impl From<PrecisionArg> for Precision {
    fn from(p: PrecisionArg) -> Self {
        match p {
            PrecisionArg::Double => Precision::Double,
            PrecisionArg::Exact => Precision::Exact,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemeKind {
    Uniform,
    OnePeriodic,
    #[value(alias = "qvol")]
    Qcol,
    Qdiag,
    TwoPeriodic,
}

#[derive(Debug, Clone, Args)]
pub struct SchemeArgs {
    #[arg(long, value_enum)]
    pub scheme: SchemeKind,
    /// Order of the diamond.
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub b: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub q: f64,
}

impl SchemeArgs {
    pub fn scheme(&self) -> Result<WeightScheme, AztecError> {
        let a = Param::named("a", self.a)?;
        Ok(match self.scheme {
            SchemeKind::Uniform => WeightScheme::Uniform,
            SchemeKind::OnePeriodic => WeightScheme::OnePeriodic { a },
            SchemeKind::Qcol => WeightScheme::QCol { a, q: Param::named("q", self.q)? },
            SchemeKind::Qdiag => WeightScheme::QDiag { a, q: Param::named("q", self.q)? },
            SchemeKind::TwoPeriodic => WeightScheme::two_periodic(a, Param::named("b", self.b)?, self.n),
        })
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PaletteArg {
    #[value(name = "4")]
    Four,
    #[value(name = "8")]
    Eight,
}

impl From<PaletteArg> for Palette {
    fn from(p: PaletteArg) -> Self {
        match p {
            PaletteArg::Four => Palette::Four,
            PaletteArg::Eight => Palette::Eight,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum EntryMethod {
    /// Closed form when one exists, otherwise direct inversion.
    Auto,
    ClosedForm,
    Oracle,
}

fn parse_vertex(s: &str) -> Result<KCoord, String> {
    let (x1, x2) = s.split_once(',').ok_or_else(|| format!("expected x1,x2, got `{s}`"))?;
    let p = |t: &str| t.trim().parse::<i32>().map_err(|e| format!("`{t}`: {e}"));
    Ok(KCoord::new(p(x1)?, p(x2)?))
}

fn parse_edge(s: &str) -> Result<Edge, String> {
    let (b, w) = s.split_once(':').ok_or_else(|| format!("expected bx,by:wx,wy, got `{s}`"))?;
    Ok(Edge { black: parse_vertex(b)?, white: parse_vertex(w)? })
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Partition function Z_n.
    Partition {
        #[command(flatten)]
        scheme: SchemeArgs,
    },
    /// One entry K^{-1}(white, black).
    InverseEntry {
        #[command(flatten)]
        scheme: SchemeArgs,
        #[arg(long, value_parser = parse_vertex)]
        white: KCoord,
        #[arg(long, value_parser = parse_vertex)]
        black: KCoord,
        #[arg(long, value_enum, default_value_t = EntryMethod::Auto)]
        method: EntryMethod,
    },
    /// Removed-vertex ratio Z(i, j) / Z_n for a boundary pair.
    BoundaryEntry {
        #[command(flatten)]
        scheme: SchemeArgs,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// Placement probability of every edge.
    Density {
        #[command(flatten)]
        scheme: SchemeArgs,
        /// Also write an SVG heat map.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, default_value_t = 8.0)]
        scale: f64,
    },
    /// Probability that all given edges are matched.
    JointProb {
        #[command(flatten)]
        scheme: SchemeArgs,
        /// An edge as bx,by:wx,wy; repeat for more edges.
        #[arg(long = "edge", value_parser = parse_edge, required = true)]
        edges: Vec<Edge>,
    },
    /// Random tiling by domino shuffling.
    Sample {
        #[command(flatten)]
        scheme: SchemeArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of samples used for --edge.
        #[arg(long, default_value_t = 1000)]
        count: usize,
        /// Report the empirical frequency of this edge (bx,by:wx,wy).
        #[arg(long, value_parser = parse_edge)]
        edge: Option<Edge>,
        /// Write the first sample as SVG.
        #[arg(long)]
        render: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "4")]
        palette: PaletteArg,
        #[arg(long, default_value_t = 4.0)]
        scale: f64,
        /// Write the first sample as JSON, for `render`.
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Render a tiling saved by `sample --save`.
    Render {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "4")]
        palette: PaletteArg,
        #[arg(long, default_value_t = 4.0)]
        scale: f64,
    },
    /// Run the acceptance suite.
    Verify {
        /// Directory for the order-200 renders.
        #[arg(long)]
        figures: Option<PathBuf>,
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}
