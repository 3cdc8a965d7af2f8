//! Central charges `Z_{x,y}` on the upper half-plane and the walls they cut out.
//!
//! For `β = xH`, `ω = yH` the central charge of `u = (r, c, s)` is the pairing
//! `(e^{β + iω}, u)`. Writing `z = x + iy`,
//!
//! ```text
//! Z(u) = 2d·c·z − s − r·d·z²
//! Re Z = 2d·c·x − s − d·r·(x² − y²)
//! Im Z = 2d·y·(c − r·x)
//! ```
//!
//! `Re Z` is a polynomial in `x` and `y²` while `Im Z` is `y` times a
//! polynomial in `x`, so a point with rational `x` and rational `y²` keeps
//! every quantity that matters (alignment, ratios, signs) exact.

use std::cmp::Ordering;
use std::ops::Add;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{MukaiVector, SurfaceParams};
use crate::rational::{int, rat, to_f64};
use crate::Rational;

/// A point `σ_{x,y}` of the half-plane, stored through `x` and `y²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StabilityPoint {
    x: Rational,
    y_sq: Rational,
}

impl StabilityPoint {
    pub fn new(x: Rational, y_sq: Rational) -> Result<Self> {
        if !y_sq.is_positive() {
            return Err(Error::InvalidPoint(y_sq));
        }
        Ok(StabilityPoint { x, y_sq })
    }

    /// Point with rational `y`.
    pub fn with_y(x: Rational, y: Rational) -> Result<Self> {
        if !y.is_positive() {
            return Err(Error::InvalidPoint(y * y));
        }
        Self::new(x, y * y)
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn y_sq(&self) -> &Rational {
        &self.y_sq
    }

    pub fn y(&self) -> f64 {
        to_f64(&self.y_sq).sqrt()
    }
}

/// `re + i·y·im_per_y` with `y² = y_sq`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexValue {
    pub re: Rational,
    pub im_per_y: Rational,
    pub y_sq: Rational,
}

impl ComplexValue {
    pub fn re_f64(&self) -> f64 {
        to_f64(&self.re)
    }

    pub fn im_f64(&self) -> f64 {
        to_f64(&self.im_per_y) * to_f64(&self.y_sq).sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im_per_y.is_zero()
    }

    /// `Im(self · conj(other)) / y`, exact. Zero iff the two values are
    /// real multiples of each other.
    pub fn cross(&self, other: &ComplexValue) -> Rational {
        self.im_per_y * other.re - self.re * other.im_per_y
    }

    /// `Re(self · conj(other))`, exact.
    pub fn dot(&self, other: &ComplexValue) -> Rational {
        self.re * other.re + self.y_sq * self.im_per_y * other.im_per_y
    }

    /// The real `λ` with `self = λ·other`, when it exists.
    pub fn real_ratio(&self, other: &ComplexValue) -> Option<Rational> {
        let norm = other.dot(other);
        if norm.is_zero() || !self.cross(other).is_zero() {
            return None;
        }
        Some(self.dot(other) / norm)
    }
}

impl Add for ComplexValue {
    type Output = ComplexValue;
    fn add(self, o: ComplexValue) -> ComplexValue {
        debug_assert_eq!(self.y_sq, o.y_sq);
        ComplexValue { re: self.re + o.re, im_per_y: self.im_per_y + o.im_per_y, y_sq: self.y_sq }
    }
}

pub fn central_charge(u: MukaiVector, pt: &StabilityPoint, p: SurfaceParams) -> ComplexValue {
    let d = int(p.d());
    let (r, c, s) = (int(u.r), int(u.c), int(u.s));
    let x = pt.x;
    ComplexValue {
        re: int(2) * d * c * x - s - d * r * (x * x - pt.y_sq),
        im_per_y: int(2) * d * (c - r * x),
        y_sq: pt.y_sq,
    }
}

/// Phase of the line through `Z(u)`: `arg Z / π` reduced into `(0, 1]`.
///
/// Both real half-lines have phase 1 and `i` has phase 1/2. A class and its
/// negative share a phase, matching how wall classes are compared.
pub fn phase(u: MukaiVector, pt: &StabilityPoint, p: SurfaceParams) -> Result<f64> {
    let z = central_charge(u, pt, p);
    if z.is_zero() {
        return Err(Error::CollapsedCharge);
    }
    if z.im_per_y.is_zero() {
        return Ok(1.0);
    }
    let t = (z.im_f64().atan2(z.re_f64()) / std::f64::consts::PI).rem_euclid(1.0);
    Ok(if t == 0.0 { 1.0 } else { t })
}

/// Exact alignment test: `Z(u)` and `Z(w)` lie on a common real line.
pub fn aligned(u: MukaiVector, w: MukaiVector, pt: &StabilityPoint, p: SurfaceParams) -> bool {
    central_charge(u, pt, p).cross(&central_charge(w, pt, p)).is_zero()
}

/// A wall in the `(x, y)` half-plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum WallCurve {
    VerticalLine {
        x0: Rational,
    },
    /// The `y > 0` half of `(x − center)² + y² = radius_sq`.
    Semicircle {
        center: Rational,
        radius_sq: Rational,
    },
}

impl WallCurve {
    /// Exact membership of a point with the given `x` and `y²`.
    pub fn contains(&self, x: &Rational, y_sq: &Rational) -> bool {
        match self {
            WallCurve::VerticalLine { x0 } => x == x0,
            WallCurve::Semicircle { center, radius_sq } => {
                let dx = x - center;
                dx * dx + y_sq == *radius_sq
            }
        }
    }

    pub fn radius_sq(&self) -> Option<&Rational> {
        match self {
            WallCurve::Semicircle { radius_sq, .. } => Some(radius_sq),
            WallCurve::VerticalLine { .. } => None,
        }
    }

    pub fn center(&self) -> Option<&Rational> {
        match self {
            WallCurve::Semicircle { center, .. } => Some(center),
            WallCurve::VerticalLine { .. } => None,
        }
    }

    /// Nesting order: vertical lines first, then semicircles by decreasing
    /// radius, ties by center.
    pub fn cmp_by_radius_desc(&self, other: &WallCurve) -> Ordering {
        use WallCurve::*;
        match (self, other) {
            (VerticalLine { x0: a }, VerticalLine { x0: b }) => a.cmp(b),
            (VerticalLine { .. }, Semicircle { .. }) => Ordering::Less,
            (Semicircle { .. }, VerticalLine { .. }) => Ordering::Greater,
            (Semicircle { center: c1, radius_sq: r1 }, Semicircle { center: c2, radius_sq: r2 }) => {
                r2.cmp(r1).then(c1.cmp(c2))
            }
        }
    }
}

/// The locus where `Z(a)` and `Z(v)` are real-proportional.
///
/// `Im(Z(a)·conj Z(v)) / (2d·y)` equals `Q(x² + y²) + L·x + K` with
/// `Q = d(c_a r_v − r_a c_v)`, `L = r_a s_v − r_v s_a`, `K = c_v s_a − c_a s_v`.
pub fn wall_locus(v: MukaiVector, a: MukaiVector, p: SurfaceParams) -> Result<WallCurve> {
    if v.is_parallel(&a) {
        return Err(Error::Parallel(v, a));
    }
    let q = int(p.d()) * int(a.c * v.r - a.r * v.c);
    let l = int(a.r * v.s - v.r * a.s);
    let k = int(v.c * a.s - a.c * v.s);
    if q.is_zero() {
        if l.is_zero() {
            return Err(Error::EmptyWall);
        }
        return Ok(WallCurve::VerticalLine { x0: -k / l });
    }
    let center = -l / (int(2) * q);
    let radius_sq = center * center - k / q;
    if !radius_sq.is_positive() {
        return Err(Error::EmptyWall);
    }
    Ok(WallCurve::Semicircle { center, radius_sq })
}

/// Where the vertical path `x = x0` meets a wall.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathCrossing {
    At {
        y_sq: Rational,
    },
    /// The path runs inside the wall.
    AlongWall,
}

pub fn path_intersection(w: &WallCurve, x0: &Rational) -> Option<PathCrossing> {
    match w {
        WallCurve::VerticalLine { x0: line } => (line == x0).then_some(PathCrossing::AlongWall),
        WallCurve::Semicircle { center, radius_sq } => {
            let dx = x0 - center;
            let y_sq = radius_sq - dx * dx;
            y_sq.is_positive().then_some(PathCrossing::At { y_sq })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeometricCheck {
    Ok,
    /// A spherical sheaf whose central charge lands on `R≤0`.
    Obstructed(MukaiVector),
    Inconclusive,
}

/// Sufficient and witness-based tests for `σ_{x,y}` being a stability condition.
///
/// `ω² > 2` always suffices. Below that, a spherical sheaf `(r, c, s)` with
/// `x = c/r` has `Z = −1/r + d·r·y²`, which is `≤ 0` iff `d·r²·y² ≤ 1`.
pub fn geometric_check(pt: &StabilityPoint, p: SurfaceParams, rank_bound: u32) -> GeometricCheck {
    let d = int(p.d());
    if d * pt.y_sq > Rational::one() {
        return GeometricCheck::Ok;
    }
    let (num, den) = (*pt.x.numer(), *pt.x.denom());
    for r in 1..=rank_bound as i128 {
        if (num * r) % den != 0 {
            continue;
        }
        let c = num * r / den;
        let s_num = p.d() as i128 * c * c + 1;
        if s_num % r != 0 {
            continue;
        }
        if d * pt.y_sq * rat(r * r, 1) <= Rational::one() {
            return GeometricCheck::Obstructed(MukaiVector::new(r as i64, c as i64, (s_num / r) as i64));
        }
    }
    GeometricCheck::Inconclusive
}
