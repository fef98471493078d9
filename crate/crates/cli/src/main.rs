//! `mmst`: build and recognize monotone spanning trees from the command
//! line.
//!
//! Exit status is 0 on success, 2 when the input is invalid or degenerate
//! and 1 when a file cannot be read or written.

mod bench;
mod direction;
mod documents;
mod svg;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monotone_mst::geometry::{validate_general_position, GeometricGraph, RootedPointSet, RootedTree};
use monotone_mst::oracle::{
    brute_is_rooted_monotone, brute_parent_ymmst, brute_parent_ymmst_closed, brute_ummst, brute_ummst2d, brute_uniform_axis,
    brute_uniform_system, brute_xymmst, brute_xymmst_closed, Monotonicity,
};
use monotone_mst::recognition::{
    is_rooted_xy_monotone, is_rooted_y_monotone, root_line_edges, uniform_2d_monotone_system, uniform_monotone_axis,
};
use monotone_mst::{ummst, ummst2d, xymmst, xymmst_closed, ymmst, ymmst_closed};

use documents::{Input, Orientation, TreeDocument};

#[derive(Debug)]
pub enum Failure {
    /// Exit status 2.
    Invalid(String),
    /// Exit status 1.
    Io(String),
}

impl Failure {
    pub fn invalid(e: impl std::fmt::Display) -> Failure {
        Failure::Invalid(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    /// Fixed axis, given by `--direction`.
    Y,
    /// Fixed orthogonal system whose y axis is given by `--direction`.
    Xy,
    /// Best axis.
    Uniform,
    /// Best orthogonal system.
    #[value(name = "uniform-2d")]
    Uniform2d,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Y => "y",
            Variant::Xy => "xy",
            Variant::Uniform => "uniform",
            Variant::Uniform2d => "uniform-2d",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "mmst", version, about = "Monotone minimum spanning trees of rooted point sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Point set or graph: JSON document, or CSV with one `x,y` per line
    /// (root first).
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    variant: Variant,
    /// Slope in degrees of the axis (or of the system's y axis); required
    /// by the `y` and `xy` variants, rejected by the others.
    #[arg(long, allow_hyphen_values = true)]
    direction: Option<f64>,
    /// Skip the general-position check and let points on the root line or
    /// on a system axis join both adjacent halves or quadrants.
    #[arg(long)]
    allow_degenerate: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a tree and write it as JSON.
    Build {
        #[command(flatten)]
        common: Common,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also draw the tree as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Decide whether a graph is rooted monotone.
    Recognize {
        #[command(flatten)]
        common: Common,
    },
    /// Time the constructions on random point sets.
    Bench {
        /// Comma-separated point counts.
        #[arg(long, value_delimiter = ',', default_values_t = [1024usize, 2048, 4096])]
        sizes: Vec<usize>,
        /// Comma-separated variants.
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Variant::Y, Variant::Xy])]
        variants: Vec<Variant>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Runs per row; the median time is reported.
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        /// Print costs only, for reproducible output.
        #[arg(long)]
        omit_times: bool,
    },
    /// Same as `build` (or, with `--recognize`, `recognize`) using the
    /// brute-force reference implementations. Small inputs only.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        recognize: bool,
    },
}

fn load(common: &Common) -> Result<Input, Failure> {
    let input = documents::load(&common.input)?;
    if !common.allow_degenerate {
        validate_general_position(&input.points).map_err(|e| Failure::Invalid(format!("input is degenerate: {e}")))?;
    }
    match (common.variant, common.direction) {
        (Variant::Y | Variant::Xy, None) => Err(Failure::Invalid(format!(
            "--variant {} needs --direction",
            common.variant.name()
        ))),
        (Variant::Uniform | Variant::Uniform2d, Some(_)) => Err(Failure::Invalid(format!(
            "--variant {} takes no --direction",
            common.variant.name()
        ))),
        _ => Ok(input),
    }
}

fn write(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

type Builder = fn(&RootedPointSet, Orientation, bool) -> monotone_mst::Result<RootedTree>;

fn fast_fixed(ps: &RootedPointSet, o: Orientation, closed: bool) -> monotone_mst::Result<RootedTree> {
    match (o, closed) {
        (Orientation::Axis(a), false) => ymmst(ps, &a),
        (Orientation::Axis(a), true) => Ok(ymmst_closed(ps, &a)?.tree),
        (Orientation::System(s), false) => xymmst(ps, &s),
        (Orientation::System(s), true) => xymmst_closed(ps, &s),
    }
}

fn brute_fixed(ps: &RootedPointSet, o: Orientation, closed: bool) -> monotone_mst::Result<RootedTree> {
    match (o, closed) {
        (Orientation::Axis(a), false) => brute_parent_ymmst(ps, &a),
        (Orientation::Axis(a), true) => brute_parent_ymmst_closed(ps, &a),
        (Orientation::System(s), false) => brute_xymmst(ps, &s),
        (Orientation::System(s), true) => brute_xymmst_closed(ps, &s),
    }
}

fn construct(common: &Common, input: &Input, use_oracle: bool) -> Result<(Orientation, RootedTree), Failure> {
    let ps = &input.points;
    let fixed: Builder = if use_oracle { brute_fixed } else { fast_fixed };
    let degrees = common.direction.unwrap_or_default();
    let (o, tree) = match common.variant {
        Variant::Y => {
            let o = Orientation::Axis(direction::axis(degrees, ps, &[])?);
            (o, fixed(ps, o, common.allow_degenerate).map_err(Failure::invalid)?)
        }
        Variant::Xy => {
            let o = Orientation::System(direction::system(degrees, ps, &[])?);
            (o, fixed(ps, o, common.allow_degenerate).map_err(Failure::invalid)?)
        }
        Variant::Uniform => {
            let r = if use_oracle { brute_ummst(ps) } else { ummst(ps) };
            r.map(|(a, t)| (Orientation::Axis(a), t)).map_err(Failure::invalid)?
        }
        Variant::Uniform2d => {
            let r = if use_oracle { brute_ummst2d(ps) } else { ummst2d(ps) };
            r.map(|(s, t)| (Orientation::System(s), t)).map_err(Failure::invalid)?
        }
    };
    Ok((o, tree))
}

fn cmd_build(common: &Common, out: Option<&Path>, svg_path: Option<&Path>, use_oracle: bool) -> Result<(), Failure> {
    let input = load(common)?;
    let (o, tree) = construct(common, &input, use_oracle)?;
    let doc = TreeDocument::new(&input.points, &tree, o);
    write(out, &doc.to_json())?;
    if let Some(p) = svg_path {
        let dir = match o {
            Orientation::Axis(a) => a.direction(),
            Orientation::System(s) => s.y_direction(),
        };
        write(Some(p), &svg::render(&input.points, &tree, dir))?;
    }
    Ok(())
}

fn cmd_recognize(common: &Common, use_oracle: bool) -> Result<(), Failure> {
    let input = load(common)?;
    let ps = &input.points;
    let edges = input
        .edges
        .clone()
        .ok_or_else(|| Failure::Invalid("input has no edges".into()))?;
    let g = GeometricGraph::new(ps, edges.clone()).map_err(Failure::invalid)?;
    g.check_connected().map_err(Failure::invalid)?;
    let degrees = common.direction.unwrap_or_default();
    let witness = match common.variant {
        Variant::Y => {
            let a = direction::axis(degrees, ps, &edges)?;
            for (p, q) in root_line_edges(&g, &a) {
                eprintln!("note: edge ({p}, {q}) lies on the root line and is usable in both directions");
            }
            let ok = if use_oracle {
                brute_is_rooted_monotone(&g, Monotonicity::Axis(a))
            } else {
                is_rooted_y_monotone(&g, &a)
            };
            ok.map_err(Failure::invalid)?.then(|| a.slope_degrees())
        }
        Variant::Xy => {
            let s = direction::system(degrees, ps, &edges)?;
            let ok = if use_oracle {
                brute_is_rooted_monotone(&g, Monotonicity::System(s))
            } else {
                is_rooted_xy_monotone(&g, &s)
            };
            ok.map_err(Failure::invalid)?.then(|| s.y_slope_degrees())
        }
        Variant::Uniform => {
            let a = if use_oracle {
                brute_uniform_axis(&g)
            } else {
                uniform_monotone_axis(&g)
            };
            a.map_err(Failure::invalid)?.map(|a| a.slope_degrees())
        }
        Variant::Uniform2d => {
            let s = if use_oracle {
                brute_uniform_system(&g)
            } else {
                uniform_2d_monotone_system(&g)
            };
            s.map_err(Failure::invalid)?.map(|s| s.y_slope_degrees())
        }
    };
    match witness {
        Some(deg) => println!("true {deg}"),
        None => println!("false"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Build { common, out, svg } => cmd_build(common, out.as_deref(), svg.as_deref(), false),
        Command::Recognize { common } => cmd_recognize(common, false),
        Command::Bench {
            sizes,
            variants,
            seed,
            repeats,
            omit_times,
        } => bench::table(sizes, variants, *seed, *repeats, *omit_times).map(|t| print!("{t}")),
        Command::Oracle { common, out, recognize } => {
            if *recognize {
                cmd_recognize(common, true)
            } else {
                cmd_build(common, out.as_deref(), None, true)
            }
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
