//! Command-line front end for the `k3walls` library.
//!
//! [`run`] executes a parsed [`Cli`] and returns the rendered document. The
//! binary only adds I/O and exit codes on top, so tests drive the same code
//! path without spawning processes.

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use k3walls::rational::{format_rational, parse_rational, to_f64};
use k3walls::{
    candidate_walls, decompositions, mukai_square, path_intersection, phi_pushforward, stratum_dims,
    transport_walls, walls_for, MukaiVector, PathCrossing, Rational, SearchBounds, SurfaceParams, WallCurve,
    WallRecord, WallTable,
};

pub mod render;
pub mod report;
pub mod svg;

use report::{
    DecomposeReport, DecompositionRow, Fraction, Mode, PathHit, PathReport, Surface, WallRow, WallTableReport,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
    #[doc = include_str!("../../../book/src/json.md")]
    pub mod json {}
}

/// Environment variable holding the default `--format`.
pub const FORMAT_ENV: &str = "K3WALLS_FORMAT";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Parser)]
#[command(
    name = "k3walls",
    version,
    about = "Walls and chambers for Mukai vectors on a K3 surface of Picard rank one"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = FORMAT_ENV, default_value = "text")]
    pub format: Format,
    /// Degree parameter `d` of the polarization, `H² = 2d`.
    #[arg(long, global = true, default_value_t = 1)]
    pub degree: i64,
    /// Digits after the point for floating-point output.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=17))]
    pub precision: u32,
    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Exit with status 3 when a search could not certify completeness.
    #[arg(long, global = true)]
    pub strict_complete: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// The Mukai vector to study.
#[derive(Debug, Clone, Args)]
pub struct Target {
    /// Hilbert scheme of `n` points, `v = (1, 0, 1 - n)`.
    #[arg(long, required_unless_present = "vector", conflicts_with = "vector")]
    pub n: Option<i64>,
    /// Mukai vector `r,c,s`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_vector)]
    pub vector: Option<MukaiVector>,
    /// Search bound; defaults to `4n` with `n = v²/2 + 1`.
    #[arg(long)]
    pub r_max: Option<i64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Wall table of a vector.
    Walls {
        #[command(flatten)]
        target: Target,
        /// Use the bounded candidate search even when an exact table exists.
        #[arg(long)]
        candidates: bool,
        /// Candidate search: only circles of radius above this.
        #[arg(long, default_value = "0", value_parser = parse_fraction)]
        ymin: Rational,
    },
    /// Walls crossed by the vertical path `x = x0`, from the top down.
    Path {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_fraction)]
        x0: Rational,
        /// Lower end of the path.
        #[arg(long, default_value = "1", value_parser = parse_fraction)]
        ymin: Rational,
        #[arg(long)]
        candidates: bool,
    },
    /// Decompositions of the vector on one wall with their dimension counts.
    Decompose {
        #[command(flatten)]
        target: Target,
        /// Select the wall by its slope.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_fraction, conflicts_with = "wall_index")]
        gamma: Option<Rational>,
        /// Select the wall by its 0-based row in the wall table.
        #[arg(long, required_unless_present = "gamma")]
        wall_index: Option<usize>,
        #[arg(long, default_value_t = 3)]
        parts_max: usize,
        #[arg(long)]
        candidates: bool,
        #[arg(long, default_value = "0", value_parser = parse_fraction)]
        ymin: Rational,
    },
    /// SVG picture of the walls. Always emits SVG.
    Figure {
        #[command(flatten)]
        target: Target,
        /// Horizontal view range `lo,hi`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        xrange: Option<(f64, f64)>,
        /// Vertical view range `lo,hi`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        yrange: Option<(f64, f64)>,
        /// Only walls of radius above this; also the height of the marker line.
        #[arg(long, default_value = "1", value_parser = parse_fraction)]
        ymin: Rational,
        /// Only walls crossed by the path `x = x0` above `ymin`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_fraction)]
        x0: Option<Rational>,
        #[arg(long)]
        candidates: bool,
    },
    /// Push a wall table forward along `Phi_m`.
    Transport {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        /// Keep only walls with slope at least this.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_fraction)]
        gamma_min: Option<Rational>,
    },
}

fn parse_vector(text: &str) -> Result<MukaiVector, String> {
    MukaiVector::parse(text).ok_or_else(|| format!("expected `r,c,s`, got {text:?}"))
}

fn parse_fraction(text: &str) -> Result<Rational, String> {
    parse_rational(text).ok_or_else(|| format!("expected a rational such as 2/11 or -0.5, got {text:?}"))
}

fn parse_range(text: &str) -> Result<(f64, f64), String> {
    let err = || format!("expected `lo,hi` with lo < hi, got {text:?}");
    let (lo, hi) = text.split_once(',').ok_or_else(err)?;
    let lo: f64 = lo.trim().parse().map_err(|_| err())?;
    let hi: f64 = hi.trim().parse().map_err(|_| err())?;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(err());
    }
    Ok((lo, hi))
}

/// A failure reported on standard error with exit status 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError(pub String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CliError {}

impl From<k3walls::Error> for CliError {
    fn from(e: k3walls::Error) -> Self {
        CliError(e.to_string())
    }
}

/// A rendered document and whether the underlying search was certified complete.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub body: String,
    pub complete: bool,
}

impl Target {
    pub fn vector(&self) -> Result<MukaiVector, CliError> {
        match (self.n, self.vector) {
            (Some(n), _) if n < 2 => Err(CliError(format!("--n must be at least 2, got {n}"))),
            (Some(n), _) => Ok(MukaiVector::hilbert(n)),
            (None, Some(v)) if v.is_zero() => Err(CliError("the zero vector has no walls".into())),
            (None, Some(v)) => Ok(v),
            (None, None) => Err(CliError("one of --n or --vector is required".into())),
        }
    }

    fn bounds(&self, v: MukaiVector, y_min: Rational, p: SurfaceParams) -> Result<SearchBounds, CliError> {
        let n = v.hilbert_n().unwrap_or((mukai_square(v, p) / 2 + 1).max(2));
        let mut bounds = SearchBounds::for_n(n);
        if let Some(r) = self.r_max {
            if r < 1 {
                return Err(CliError(format!("--r-max must be positive, got {r}")));
            }
            bounds.r_max = r;
        }
        bounds.y_min = y_min;
        Ok(bounds)
    }

    fn table(&self, candidates: bool, y_min: Rational, p: SurfaceParams) -> Result<WallTable, CliError> {
        if y_min < Rational::from_integer(0) {
            return Err(CliError("--ymin must not be negative".into()));
        }
        let v = self.vector()?;
        let bounds = self.bounds(v, y_min, p)?;
        let table = if candidates { candidate_walls(v, &bounds, p)? } else { walls_for(v, &bounds, p)? };
        Ok(table)
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn svg_only() -> CliError {
    CliError("svg output is only produced by the figure subcommand".into())
}

pub fn render_walls(report: &WallTableReport, format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Text => render::walls_text(report),
        Format::Csv => render::walls_csv(report),
        Format::Json => json(report),
        Format::Svg => return Err(svg_only()),
    })
}

pub fn render_path(report: &PathReport, format: Format, precision: usize) -> Result<String, CliError> {
    Ok(match format {
        Format::Text => render::path_text(report, precision),
        Format::Csv => render::path_csv(report),
        Format::Json => json(report),
        Format::Svg => return Err(svg_only()),
    })
}

pub fn render_decompose(report: &DecomposeReport, format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Text => render::decompose_text(report),
        Format::Csv => render::decompose_csv(report),
        Format::Json => json(report),
        Format::Svg => return Err(svg_only()),
    })
}

/// Walls met by `x = x0` strictly above `y_min`, ordered by decreasing height.
pub fn path_hits(table: &WallTable, x0: &Rational, y_min: &Rational) -> Vec<PathHit> {
    let floor = y_min * y_min;
    let mut hits: Vec<PathHit> = table
        .walls
        .iter()
        .filter_map(|w| match path_intersection(w.curve.as_ref()?, x0)? {
            PathCrossing::At { y_sq } if y_sq > floor => Some(PathHit {
                gamma: w.gamma.as_ref().map(Fraction::from),
                a: w.a.to_array(),
                y_sq: (&y_sq).into(),
            }),
            _ => None,
        })
        .collect();
    hits.sort_by(|a, b| Rational::from(b.y_sq).cmp(&Rational::from(a.y_sq)));
    hits
}

fn select_wall<'a>(
    table: &'a WallTable,
    gamma: Option<&Rational>,
    index: Option<usize>,
) -> Result<&'a WallRecord, CliError> {
    if let Some(g) = gamma {
        return table.by_gamma(g).ok_or_else(|| {
            let available: Vec<String> =
                table.walls.iter().filter_map(|w| w.gamma.as_ref()).map(format_rational).collect();
            let listing = if available.is_empty() {
                "none; select by --wall-index".to_string()
            } else {
                available.join(", ")
            };
            CliError(format!("no wall with gamma = {}; available: {listing}", format_rational(g)))
        });
    }
    let i = index.unwrap_or(0);
    table.walls.get(i).ok_or_else(|| match table.walls.len() {
        0 => CliError("the wall table is empty".into()),
        k => CliError(format!("no wall with index {i}; available: 0 to {}", k - 1)),
    })
}

fn decompose_report(
    table: &WallTable,
    wall: &WallRecord,
    parts_max: usize,
    p: SurfaceParams,
) -> Result<DecomposeReport, CliError> {
    let rows = decompositions(table.vector, wall, parts_max, p)?
        .iter()
        .map(|dec| {
            let (dims, note) = match stratum_dims(dec, p) {
                Ok(d) => (Some((&d).into()), None),
                Err(e) => (None, Some(e.to_string())),
            };
            DecompositionRow {
                parts: dec.parts.iter().map(|u| u.to_array()).collect(),
                weights: dec.weights.iter().map(Fraction::from).collect(),
                dims,
                note,
            }
        })
        .collect();
    Ok(DecomposeReport {
        surface: Surface { d: p.d() },
        vector: table.vector.to_array(),
        wall: wall.into(),
        parts_max,
        decompositions: rows,
    })
}

fn figure_label(w: &WallRecord) -> String {
    match (&w.gamma, &w.curve) {
        (Some(g), _) => format!("Γ = {}", format_rational(g)),
        (None, Some(WallCurve::Semicircle { radius_sq, .. })) => {
            format!("r² = {}", format_rational(radius_sq))
        }
        (None, _) => w.a.to_string(),
    }
}

/// Walls drawn by `figure`: semicircles of radius above `y_min`, vertical
/// lines, and with `x0` only those crossed by that path above `y_min`.
pub fn figure_walls(table: &WallTable, y_min: &Rational, x0: Option<&Rational>) -> Vec<(String, WallCurve)> {
    let floor = y_min * y_min;
    table
        .walls
        .iter()
        .filter_map(|w| {
            let curve = w.curve.as_ref()?;
            let keep = match (x0, curve) {
                (Some(x), c) => {
                    matches!(path_intersection(c, x), Some(PathCrossing::At { y_sq }) if y_sq > floor)
                }
                (None, WallCurve::Semicircle { radius_sq, .. }) => *radius_sq > floor,
                (None, WallCurve::VerticalLine { .. }) => true,
            };
            keep.then(|| (figure_label(w), curve.clone()))
        })
        .collect()
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let p = SurfaceParams::new(cli.degree)?;
    let precision = cli.precision as usize;
    match &cli.command {
        Command::Walls { target, candidates, ymin } => {
            let table = target.table(*candidates, *ymin, p)?;
            let report = WallTableReport::new(&table, p.d());
            Ok(Output { body: render_walls(&report, cli.format)?, complete: table.complete })
        }
        Command::Path { target, x0, ymin, candidates } => {
            let table = target.table(*candidates, Rational::from_integer(0), p)?;
            let report = PathReport {
                surface: Surface { d: p.d() },
                vector: table.vector.to_array(),
                x0: x0.into(),
                y_min: ymin.into(),
                hits: path_hits(&table, x0, ymin),
                complete: table.complete,
            };
            Ok(Output { body: render_path(&report, cli.format, precision)?, complete: table.complete })
        }
        Command::Decompose { target, gamma, wall_index, parts_max, candidates, ymin } => {
            let table = target.table(*candidates, *ymin, p)?;
            let wall = select_wall(&table, gamma.as_ref(), *wall_index)?;
            let report = decompose_report(&table, wall, *parts_max, p)?;
            Ok(Output { body: render_decompose(&report, cli.format)?, complete: table.complete })
        }
        Command::Figure { target, xrange, yrange, ymin, x0, candidates } => {
            let table = target.table(*candidates, *ymin, p)?;
            let figure = svg::Figure {
                title: format!("Walls for v = {}, d = {}", table.vector, p.d()),
                walls: figure_walls(&table, ymin, x0.as_ref()),
                x_range: *xrange,
                y_range: *yrange,
                marker_y: to_f64(ymin),
                precision,
            };
            Ok(Output { body: svg::render(&figure), complete: table.complete })
        }
        Command::Transport { target, m, gamma_min } => {
            let source = target.table(false, Rational::from_integer(0), p)?;
            let mut walls = transport_walls(&source.walls, *m, source.vector, p);
            if let Some(g) = gamma_min {
                walls.retain(|w| w.gamma.as_ref().is_some_and(|x| x >= g));
            }
            let report = WallTableReport {
                surface: Surface { d: p.d() },
                vector: phi_pushforward(source.vector, *m, p).to_array(),
                mode: Mode::Transported { from: source.vector.to_array(), m: *m },
                walls: walls.iter().map(WallRow::from).collect(),
                complete: source.complete,
            };
            Ok(Output { body: render_walls(&report, cli.format)?, complete: source.complete })
        }
    }
}
