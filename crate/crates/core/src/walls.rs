//! Enumeration and classification of walls.
//!
//! For the Hilbert class `v = (1, 0, 1 − n)` walls are found from the
//! numerical criterion on `(a², (v, a))` and labelled by their slope `Γ` in
//! the movable cone. Other vectors either reach a Hilbert class through
//! `Φ_m` (and inherit its table) or get a bounded candidate search.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::charge::{wall_locus, WallCurve};
use crate::crossing::apex;
use crate::error::{Error, Result};
use crate::lattice::{
    cross, kernel_basis, mukai_pairing, mukai_square, pairing_row, phi_pushforward, MukaiVector,
    SurfaceParams,
};
use crate::plane::{admits_stable_objects, positive_region, SaturatedPlane};
use crate::rational::{exact_isqrt, int, rat};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WallType {
    Divisorial,
    Flopping,
    /// The far boundary of the movable cone when it is a Lagrangian fibration.
    BoundaryLagrangian,
    /// Found by the bounded search; not certified to be an actual wall.
    Candidate,
}

impl WallType {
    pub fn as_str(&self) -> &'static str {
        match self {
            WallType::Divisorial => "divisorial",
            WallType::Flopping => "flop",
            WallType::BoundaryLagrangian => "lagrangian",
            WallType::Candidate => "candidate",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        Some(match text {
            "divisorial" => WallType::Divisorial,
            "flop" => WallType::Flopping,
            "lagrangian" => WallType::BoundaryLagrangian,
            "candidate" => WallType::Candidate,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallRecord {
    pub a: MukaiVector,
    pub a_sq: i64,
    pub pairing_va: i64,
    /// Slope in the movable cone; absent for candidates.
    pub gamma: Option<Rational>,
    /// Absent when the wall misses the half-plane (the Lagrangian boundary).
    pub curve: Option<WallCurve>,
    pub wall_type: WallType,
}

impl WallRecord {
    /// `(v, a)² − v²·a²`, positive exactly when `⟨v, a⟩` is hyperbolic.
    pub fn discriminant(&self, v: MukaiVector, p: SurfaceParams) -> i64 {
        self.pairing_va * self.pairing_va - mukai_square(v, p) * self.a_sq
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBounds {
    pub r_max: i64,
    pub parts_max: usize,
    pub y_min: Rational,
}

impl SearchBounds {
    /// `r_max = 4n`, three parts, no radius filter.
    pub fn for_n(n: i64) -> Self {
        SearchBounds { r_max: (4 * n).max(1), parts_max: 3, y_min: Rational::zero() }
    }

    pub fn doubled(&self) -> Self {
        SearchBounds { r_max: 2 * self.r_max, ..self.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MovableCone {
    pub n: i64,
    pub gamma_min: Rational,
    pub gamma_max: Rational,
    /// `H̃ = θ(0, −1, 0)`.
    pub h_tilde: MukaiVector,
    /// `B = θ(−1, 0, 1 − n)`.
    pub b: MukaiVector,
}

/// How a wall table was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableMode {
    Hilbert {
        n: i64,
    },
    /// Pushed forward from the Hilbert table of `S^[n]` by `Φ_m`.
    Transported {
        n: i64,
        m: i64,
    },
    Candidate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallTable {
    pub vector: MukaiVector,
    pub walls: Vec<WallRecord>,
    /// Whether doubling the search bound left the table unchanged.
    pub complete: bool,
    pub mode: TableMode,
}

impl WallTable {
    pub fn by_gamma(&self, gamma: &Rational) -> Option<&WallRecord> {
        self.walls.iter().find(|w| w.gamma.as_ref() == Some(gamma))
    }
}

fn check_n(n: i64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidN(n));
    }
    Ok(())
}

/// The slope `Γ` of the wall spanned by `(1, 0, 1 − n)` and `a`.
///
/// The generator `w` of `v^⊥ ∩ a^⊥` is written as `α·H̃ + β·B` with `α > 0`
/// and `Γ = −β/α`.
pub fn gamma_of_wall(n: i64, a: MukaiVector, p: SurfaceParams) -> Result<Rational> {
    check_n(n)?;
    let v = MukaiVector::hilbert(n);
    if v.is_parallel(&a) || a.is_zero() {
        return Err(Error::Parallel(v, a));
    }
    let w = MukaiVector::from_array(cross(pairing_row(v, p), pairing_row(a, p))).primitive_part();
    let (alpha, beta) = (-w.c, -w.r);
    assert_eq!(w.s, beta * (1 - n), "generator of v^⊥ ∩ a^⊥ left the span of H̃ and B");
    if alpha == 0 {
        return Err(Error::GammaUndefined(a));
    }
    Ok(rat(-beta as i128, alpha as i128))
}

/// Numerical classes `(a², (v, a))` that can define a wall for `S^[n]`.
fn criterion_cells(n: i64) -> Vec<(i64, i64, WallType)> {
    let mut cells = vec![
        (-2, 0, WallType::Divisorial),
        (0, 1, WallType::Divisorial),
        (0, 2, WallType::Divisorial),
        (0, 0, WallType::BoundaryLagrangian),
    ];
    cells.extend((1..n).map(|k| (-2, k, WallType::Flopping)));
    cells.extend((3..n).map(|k| (0, k, WallType::Flopping)));
    let mut sq = 2;
    while 2 * sq < n - 1 {
        cells.extend((2 * sq + 1..n).map(|k| (sq, k, WallType::Flopping)));
        sq += 2;
    }
    cells
}

/// Every solution `a` of a criterion cell with `|r| ≤ r_max`, paired with its type and `Γ`.
fn criterion_solutions(n: i64, r_max: i64, p: SurfaceParams) -> Vec<(Rational, WallType, MukaiVector)> {
    let v = MukaiVector::hilbert(n);
    let d = p.d();
    let mut out = Vec::new();
    for (square, k, wall_type) in criterion_cells(n) {
        for r in -r_max..=r_max {
            // (v, a) = k fixes s; a² = square fixes c²
            let s = r * (n - 1) - k;
            let dc2 = r * s + square / 2;
            if dc2 < 0 || dc2 % d != 0 {
                continue;
            }
            let Some(c) = exact_isqrt((dc2 / d) as i128) else { continue };
            for c in [c as i64, -(c as i64)] {
                let a = MukaiVector::new(r, c, s);
                let hyperbolic = k * k - mukai_square(v, p) * square > 0;
                if !hyperbolic && wall_type != WallType::BoundaryLagrangian {
                    continue;
                }
                if let Ok(gamma) = gamma_of_wall(n, a, p) {
                    if !gamma.is_negative() {
                        out.push((gamma, wall_type, a));
                    }
                }
                if c == 0 {
                    break;
                }
            }
        }
    }
    out
}

fn cone_boundary(solutions: &[(Rational, WallType, MukaiVector)]) -> Option<Rational> {
    solutions.iter().filter(|(g, t, _)| g.is_positive() && *t != WallType::Flopping).map(|(g, _, _)| *g).min()
}

pub fn movable_cone(n: i64, bounds: &SearchBounds, p: SurfaceParams) -> Result<MovableCone> {
    check_n(n)?;
    let solutions = criterion_solutions(n, bounds.r_max, p);
    let gamma_max = cone_boundary(&solutions).ok_or(Error::NoConeBoundary)?;
    Ok(MovableCone {
        n,
        gamma_min: Rational::zero(),
        gamma_max,
        h_tilde: MukaiVector::new(0, -1, 0),
        b: MukaiVector::new(-1, 0, 1 - n),
    })
}

/// Sign convention: `(v, a) > 0`, or the first nonzero coordinate positive
/// when `(v, a) = 0`.
fn normalize_sign(a: MukaiVector, v: MukaiVector, p: SurfaceParams) -> MukaiVector {
    let k = mukai_pairing(v, a, p);
    let first = a.to_array().into_iter().find(|x| *x != 0).unwrap_or(0);
    if k < 0 || (k == 0 && first < 0) {
        -a
    } else {
        a
    }
}

fn representative_key(a: &MukaiVector) -> (bool, i64, i64, i64, MukaiVector) {
    (!a.is_primitive(), a.r.abs(), a.c.abs(), a.s.abs(), *a)
}

fn hilbert_table(n: i64, r_max: i64, p: SurfaceParams) -> Result<Vec<WallRecord>> {
    let v = MukaiVector::hilbert(n);
    let solutions = criterion_solutions(n, r_max, p);
    let gamma_max = cone_boundary(&solutions).ok_or(Error::NoConeBoundary)?;
    let mut by_gamma: BTreeMap<Rational, Vec<(WallType, MukaiVector)>> = BTreeMap::new();
    for (gamma, wall_type, a) in solutions {
        if gamma <= gamma_max {
            by_gamma.entry(gamma).or_default().push((wall_type, a));
        }
    }
    let priority = |t: &WallType| match t {
        WallType::BoundaryLagrangian => 0,
        WallType::Divisorial => 1,
        _ => 2,
    };
    let mut walls = Vec::new();
    for (gamma, mut classes) in by_gamma {
        let best = classes.iter().map(|(t, _)| priority(t)).min().expect("nonempty");
        classes.retain(|(t, _)| priority(t) == best);
        let (wall_type, a) = classes
            .into_iter()
            .map(|(t, a)| (t, normalize_sign(a, v, p)))
            .min_by_key(|(_, a)| representative_key(a))
            .expect("nonempty");
        walls.push(WallRecord {
            a,
            a_sq: mukai_square(a, p),
            pairing_va: mukai_pairing(v, a, p),
            gamma: Some(gamma),
            curve: wall_locus(v, a, p).ok(),
            wall_type,
        });
    }
    Ok(walls)
}

fn same_walls(x: &[WallRecord], y: &[WallRecord]) -> bool {
    x.len() == y.len()
        && x.iter()
            .zip(y)
            .all(|(a, b)| a.gamma == b.gamma && a.curve == b.curve && a.wall_type == b.wall_type)
}

/// The walls of the movable cone of `S^[n]`, ascending in `Γ` from the
/// Hilbert–Chow wall to the far boundary.
pub fn hilbert_walls(n: i64, bounds: &SearchBounds, p: SurfaceParams) -> Result<WallTable> {
    check_n(n)?;
    let walls = hilbert_table(n, bounds.r_max, p)?;
    let wider = hilbert_table(n, 2 * bounds.r_max, p)?;
    Ok(WallTable {
        vector: MukaiVector::hilbert(n),
        complete: same_walls(&walls, &wider),
        walls,
        mode: TableMode::Hilbert { n },
    })
}

/// Pushes wall records for `v` forward along `Φ_m`.
pub fn transport_walls(records: &[WallRecord], m: i64, v: MukaiVector, p: SurfaceParams) -> Vec<WallRecord> {
    let target = phi_pushforward(v, m, p);
    records
        .iter()
        .map(|rec| {
            let a = normalize_sign(phi_pushforward(rec.a, m, p), target, p);
            WallRecord {
                a,
                a_sq: mukai_square(a, p),
                pairing_va: mukai_pairing(target, a, p),
                gamma: rec.gamma,
                curve: wall_locus(target, a, p).ok(),
                wall_type: rec.wall_type,
            }
        })
        .collect()
}

/// `(n, m)` with `Φ_m(1, 0, 1 − n) = v`, searching `|m| ≤ 32`.
pub fn find_phi_preimage(v: MukaiVector, p: SurfaceParams) -> Option<(i64, i64)> {
    let square = mukai_square(v, p);
    if square < 2 || !v.is_primitive() {
        return None;
    }
    let n = square / 2 + 1;
    (-32..=32).find(|m| phi_pushforward(MukaiVector::hilbert(n), *m, p) == v).map(|m| (n, m))
}

/// The wall table of any primitive vector: the Hilbert criterion, its
/// transport along `Φ_m`, or the candidate search as a last resort.
pub fn walls_for(v: MukaiVector, bounds: &SearchBounds, p: SurfaceParams) -> Result<WallTable> {
    if let Some(n) = v.hilbert_n() {
        return hilbert_walls(n, bounds, p);
    }
    if let Some((n, m)) = find_phi_preimage(v, p) {
        let source = hilbert_walls(n, bounds, p)?;
        return Ok(WallTable {
            vector: v,
            walls: transport_walls(&source.walls, m, source.vector, p),
            complete: source.complete,
            mode: TableMode::Transported { n, m },
        });
    }
    candidate_walls(v, bounds, p)
}

fn candidate_list(v: MukaiVector, r_max: i64, y_min: &Rational, p: SurfaceParams) -> Vec<WallRecord> {
    let [e1, e2] = kernel_basis(pairing_row(v, p)).map(MukaiVector::from_array);
    let threshold = y_min * y_min;
    let mut seen: BTreeMap<(Rational, Rational), WallRecord> = BTreeMap::new();
    for i in 0..=r_max {
        for j in -r_max..=r_max {
            if (i == 0 && j <= 0) || num_integer::gcd(i, j) != 1 {
                continue;
            }
            let normal = i * e1 + j * e2;
            let plane = SaturatedPlane::orthogonal(normal, p);
            if !plane.is_hyperbolic(p) {
                continue;
            }
            let [b1, b2] = plane.basis();
            let other = if v.is_parallel(&b1) { b2 } else { b1 };
            let Ok(curve @ WallCurve::Semicircle { center, radius_sq }) = wall_locus(v, other, p) else {
                continue;
            };
            if radius_sq <= threshold || seen.contains_key(&(center, radius_sq)) {
                continue;
            }
            let Ok(pt) = apex(&curve) else { continue };
            let Ok(region) = positive_region(v, &plane, &pt, p) else { continue };
            let split = region
                .iter()
                .map(|(u, _)| *u)
                .filter(|u| {
                    !u.is_parallel(&v) && admits_stable_objects(*u, p) && mukai_square(v - *u, p) >= -2
                })
                .min_by_key(representative_key);
            if let Some(a) = split {
                seen.insert(
                    (center, radius_sq),
                    WallRecord {
                        a,
                        a_sq: mukai_square(a, p),
                        pairing_va: mukai_pairing(v, a, p),
                        gamma: None,
                        curve: Some(curve),
                        wall_type: WallType::Candidate,
                    },
                );
            }
        }
    }
    let mut walls: Vec<_> = seen.into_values().collect();
    walls.sort_by(|x, y| {
        let (cx, cy) = (x.curve.as_ref().expect("set"), y.curve.as_ref().expect("set"));
        cx.cmp_by_radius_desc(cy)
    });
    walls
}

/// Semicircular walls for `v` of radius above `y_min`, found by a bounded
/// search over the rank-two lattices through `v`.
///
/// Every hyperbolic saturated plane through `v` whose circle clears `y_min`
/// and which splits `v` into two classes positive at the apex is reported.
/// Pseudo-walls are possible, so every record is tagged [`WallType::Candidate`].
pub fn candidate_walls(v: MukaiVector, bounds: &SearchBounds, p: SurfaceParams) -> Result<WallTable> {
    if v.is_zero() {
        return Err(Error::NotPrimitive(v));
    }
    let square = mukai_square(v, p);
    if square < -2 {
        return Err(Error::SquareTooNegative { class: v, square });
    }
    let walls = candidate_list(v, bounds.r_max, &bounds.y_min, p);
    let wider = candidate_list(v, 2 * bounds.r_max, &bounds.y_min, p);
    Ok(WallTable { vector: v, complete: same_walls(&walls, &wider), walls, mode: TableMode::Candidate })
}

/// Centre `−1/Γ` and radius² `1/Γ² − (n − 1)` of the Hilbert wall of slope `Γ > 0`.
pub fn hilbert_circle(n: i64, gamma: &Rational) -> Option<WallCurve> {
    if !gamma.is_positive() {
        return None;
    }
    let inv = gamma.recip();
    let radius_sq = inv * inv - int(n - 1);
    radius_sq.is_positive().then(|| WallCurve::Semicircle { center: -inv, radius_sq })
}
