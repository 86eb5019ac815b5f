use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "polyface", version, about = "Exact face lattices of convex polyhedra")]
pub struct Cli {
    /// Row count above which Fourier-Motzkin steps run LP-based redundancy removal.
    #[arg(long, global = true, default_value_t = polyface::hrep::DEFAULT_FM_THRESHOLD)]
    pub fm_threshold: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Input {
    /// H-format (`ineq`/`eq` rows) or V-format (`point` rows) file.
    pub file: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension, emptiness, compactness and affine hull.
    Info(Input),
    /// Minimize a linear objective; prints the outcome and its certificate.
    Lp {
        #[command(flatten)]
        input: Input,
        /// Objective coefficients `c1,...,cn`.
        #[arg(long, allow_hyphen_values = true)]
        min: String,
    },
    /// Eliminate coordinates (1-based), printing the projection in H-format.
    Project {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        drop: String,
    },
    /// Image under a linear map read from a matrix file, in H-format.
    Image {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Convex hull of a V-format point list, in H-format.
    Conv(Input),
    /// Face lattice as JSON (or DOT with `--dot`).
    Faces {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Hasse diagram of the face lattice as DOT (or JSON with `--json`).
    Hasse {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Vertices, one per line; `--json` adds the edges of the vertex graph.
    Vertices {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Facet-defining inequalities in H-format.
    Facets(Input),
    /// Structural checks; all applicable ones when none is selected.
    Check(CheckArgs),
    /// Slice a polytope next to a vertex and compare lattices.
    VertexFigure {
        #[command(flatten)]
        input: Input,
        /// The vertex, `x1,...,xn`.
        #[arg(long, allow_hyphen_values = true)]
        vertex: String,
    },
    /// A path between two vertices avoiding `n - 1` removed ones.
    Balinski {
        #[command(flatten)]
        input: Input,
        /// Removed vertices, `x1,...,xn;y1,...,yn;...`.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        remove: String,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        /// Print the path points as JSON instead of vertex indices.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Input file; optional with `--random`.
    #[arg(required_unless_present = "random")]
    pub file: Option<PathBuf>,
    #[arg(long)]
    pub graded: bool,
    #[arg(long)]
    pub atomistic: bool,
    #[arg(long)]
    pub coatomistic: bool,
    #[arg(long)]
    pub diamond: bool,
    #[arg(long)]
    pub euler: bool,
    #[arg(long)]
    pub minkowski: bool,
    /// Also check `count` random polytopes, each the hull of `k` points in dimension `d`.
    #[arg(long, value_name = "K,D,COUNT")]
    pub random: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
