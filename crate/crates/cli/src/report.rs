//! Serializable report models. Every renderer works from these alone, so a
//! JSON report can be loaded back and rendered in any other format.

use serde::{Deserialize, Serialize};

use k3walls::{DimReport, MukaiVector, Rational, TableMode, WallCurve, WallRecord, WallTable};

/// A reduced fraction with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: i64,
    pub den: i64,
}

impl From<&Rational> for Fraction {
    fn from(q: &Rational) -> Self {
        let narrow = |x: i128| i64::try_from(x).expect("report values fit in 64 bits");
        Fraction { num: narrow(*q.numer()), den: narrow(*q.denom()) }
    }
}

impl From<Fraction> for Rational {
    fn from(f: Fraction) -> Self {
        Rational::new(f.num.into(), f.den.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Surface {
    pub d: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Curve {
    Semicircle { center: Fraction, radius_sq: Fraction },
    Vertical { x0: Fraction },
}

impl From<&WallCurve> for Curve {
    fn from(c: &WallCurve) -> Self {
        match c {
            WallCurve::Semicircle { center, radius_sq } => {
                Curve::Semicircle { center: center.into(), radius_sq: radius_sq.into() }
            }
            WallCurve::VerticalLine { x0 } => Curve::Vertical { x0: x0.into() },
        }
    }
}

impl From<&Curve> for WallCurve {
    fn from(c: &Curve) -> Self {
        match c {
            Curve::Semicircle { center, radius_sq } => {
                WallCurve::Semicircle { center: (*center).into(), radius_sq: (*radius_sq).into() }
            }
            Curve::Vertical { x0 } => WallCurve::VerticalLine { x0: (*x0).into() },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallRow {
    pub gamma: Option<Fraction>,
    pub a: [i64; 3],
    pub a_sq: i64,
    pub pairing: i64,
    pub curve: Option<Curve>,
    #[serde(rename = "type")]
    pub wall_type: String,
}

impl From<&WallRecord> for WallRow {
    fn from(w: &WallRecord) -> Self {
        WallRow {
            gamma: w.gamma.as_ref().map(Fraction::from),
            a: w.a.to_array(),
            a_sq: w.a_sq,
            pairing: w.pairing_va,
            curve: w.curve.as_ref().map(Curve::from),
            wall_type: w.wall_type.as_str().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Mode {
    Hilbert { n: i64 },
    Transported { from: [i64; 3], m: i64 },
    Candidate,
}

impl From<TableMode> for Mode {
    fn from(m: TableMode) -> Self {
        match m {
            TableMode::Hilbert { n } => Mode::Hilbert { n },
            TableMode::Transported { n, m } => {
                Mode::Transported { from: MukaiVector::hilbert(n).to_array(), m }
            }
            TableMode::Candidate => Mode::Candidate,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallTableReport {
    pub surface: Surface,
    pub vector: [i64; 3],
    pub mode: Mode,
    pub walls: Vec<WallRow>,
    pub complete: bool,
}

impl WallTableReport {
    pub fn new(table: &WallTable, d: i64) -> Self {
        WallTableReport {
            surface: Surface { d },
            vector: table.vector.to_array(),
            mode: table.mode.into(),
            walls: table.walls.iter().map(WallRow::from).collect(),
            complete: table.complete,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathHit {
    pub gamma: Option<Fraction>,
    pub a: [i64; 3],
    pub y_sq: Fraction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathReport {
    pub surface: Surface,
    pub vector: [i64; 3],
    pub x0: Fraction,
    pub y_min: Fraction,
    /// Ordered by decreasing `y`.
    pub hits: Vec<PathHit>,
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims {
    pub part_moduli_dims: Vec<i64>,
    pub fiber_dims: Vec<i64>,
    pub stratum_dim: i64,
    pub total_space_dim: i64,
}

impl From<&DimReport> for Dims {
    fn from(r: &DimReport) -> Self {
        Dims {
            part_moduli_dims: r.part_moduli_dims.clone(),
            fiber_dims: r.fiber_dims.clone(),
            stratum_dim: r.stratum_dim,
            total_space_dim: r.total_space_dim,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionRow {
    pub parts: Vec<[i64; 3]>,
    pub weights: Vec<Fraction>,
    /// Absent when the chain has a step without extensions.
    pub dims: Option<Dims>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub surface: Surface,
    pub vector: [i64; 3],
    pub wall: WallRow,
    pub parts_max: usize,
    pub decompositions: Vec<DecompositionRow>,
}

pub fn vector_of(a: [i64; 3]) -> MukaiVector {
    MukaiVector::from_array(a)
}

/// Whether a vector is a Hilbert class `(1, 0, 1 − n)`.
pub fn is_hilbert(v: [i64; 3]) -> bool {
    vector_of(v).hilbert_n().is_some()
}
