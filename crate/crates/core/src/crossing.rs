//! What happens to `v` on a single wall: the classes that become aligned
//! with it, the ways `v` splits into them, and the dimension count for each
//! splitting.

use std::cmp::Ordering;

use num_traits::{One, Signed};

use crate::charge::{central_charge, ComplexValue, StabilityPoint, WallCurve};
use crate::error::{Error, Result};
use crate::lattice::{mukai_pairing, mukai_square, MukaiVector, SurfaceParams};
use crate::plane::{admits_stable_objects, positive_region, SaturatedPlane};
use crate::walls::WallRecord;
use crate::Rational;

/// Which side of a wall a base point sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    On,
    /// Outside the semicircle.
    Plus,
    /// Inside the semicircle.
    Minus,
}

/// The top of a semicircle.
pub fn apex(curve: &WallCurve) -> Result<StabilityPoint> {
    match curve {
        WallCurve::Semicircle { center, radius_sq } => StabilityPoint::new(*center, *radius_sq),
        WallCurve::VerticalLine { .. } => Err(Error::NoBasePoint),
    }
}

/// The apex of the wall, or the point `y² ± ε` above or below it.
pub fn wall_base_point(wall: &WallRecord, side: Side, epsilon: &Rational) -> Result<StabilityPoint> {
    let top = apex(wall.curve.as_ref().ok_or(Error::EmptyWall)?)?;
    let y_sq = match side {
        Side::On => *top.y_sq(),
        Side::Plus => top.y_sq() + epsilon,
        Side::Minus => top.y_sq() - epsilon,
    };
    if !y_sq.is_positive() {
        return Err(Error::BasePointBelowAxis);
    }
    StabilityPoint::new(*top.x(), y_sq)
}

fn wall_plane(v: MukaiVector, wall: &WallRecord) -> Result<(SaturatedPlane, StabilityPoint)> {
    let plane = SaturatedPlane::span(v, wall.a)?;
    let pt = wall_base_point(wall, Side::On, &Rational::one())?;
    Ok((plane, pt))
}

/// Classes of the wall's lattice with central charge `λ·Z(v)`, `0 < λ < 1`,
/// at the apex, that can carry stable objects, with their `λ`; sorted by
/// decreasing `λ`.
pub fn weighted_positive_classes(
    v: MukaiVector,
    wall: &WallRecord,
    p: SurfaceParams,
) -> Result<Vec<(MukaiVector, Rational)>> {
    let (plane, pt) = wall_plane(v, wall)?;
    positive_region(v, &plane, &pt, p)
}

pub fn positive_classes(v: MukaiVector, wall: &WallRecord, p: SurfaceParams) -> Result<Vec<MukaiVector>> {
    Ok(weighted_positive_classes(v, wall, p)?.into_iter().map(|(u, _)| u).collect())
}

/// A splitting of `v` into classes positive on a wall.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Ordered by decreasing share `λ` of `Z(v)`, ties lexicographically.
    pub parts: Vec<MukaiVector>,
    /// `λ` of each part, summing to 1.
    pub weights: Vec<Rational>,
    pub wall: WallRecord,
}

impl Decomposition {
    pub fn total(&self) -> MukaiVector {
        self.parts.iter().copied().sum()
    }

    /// Sum of the parts' central charges.
    pub fn charge_sum(&self, pt: &StabilityPoint, p: SurfaceParams) -> ComplexValue {
        let mut parts = self.parts.iter().map(|u| central_charge(*u, pt, p));
        let first = parts.next().expect("at least two parts");
        parts.fold(first, |acc, z| acc + z)
    }
}

fn cmp_weighted(x: &(MukaiVector, Rational), y: &(MukaiVector, Rational)) -> Ordering {
    y.1.cmp(&x.1).then(x.0.cmp(&y.0))
}

/// All multisets of 2 to `parts_max` positive classes summing to `v`,
/// ordered by number of parts and then part by part.
pub fn decompositions(
    v: MukaiVector,
    wall: &WallRecord,
    parts_max: usize,
    p: SurfaceParams,
) -> Result<Vec<Decomposition>> {
    if parts_max < 2 {
        return Err(Error::TooFewParts);
    }
    let pool = weighted_positive_classes(v, wall, p)?;
    let mut found: Vec<Vec<(MukaiVector, Rational)>> = Vec::new();
    let mut chain = Vec::new();
    extend(&pool, 0, v, Rational::one(), parts_max, &mut chain, &mut found);
    for parts in &mut found {
        parts.sort_by(cmp_weighted);
    }
    found.sort_by(|x, y| {
        x.len().cmp(&y.len()).then_with(|| {
            x.iter().zip(y).map(|(a, b)| cmp_weighted(a, b)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
        })
    });
    Ok(found
        .into_iter()
        .map(|parts| Decomposition {
            weights: parts.iter().map(|(_, w)| *w).collect(),
            parts: parts.into_iter().map(|(u, _)| u).collect(),
            wall: wall.clone(),
        })
        .collect())
}

fn extend(
    pool: &[(MukaiVector, Rational)],
    start: usize,
    remainder: MukaiVector,
    weight_left: Rational,
    parts_max: usize,
    chain: &mut Vec<(MukaiVector, Rational)>,
    found: &mut Vec<Vec<(MukaiVector, Rational)>>,
) {
    if remainder.is_zero() {
        if chain.len() >= 2 {
            found.push(chain.clone());
        }
        return;
    }
    if chain.len() == parts_max {
        return;
    }
    for (i, (u, w)) in pool.iter().enumerate().skip(start) {
        if *w > weight_left {
            continue;
        }
        chain.push((*u, *w));
        extend(pool, i, remainder - *u, weight_left - w, parts_max, chain, found);
        chain.pop();
    }
}

/// Dimension `u² + 2` of the moduli space of stable objects of a primitive class.
pub fn moduli_dim(u: MukaiVector, p: SurfaceParams) -> Result<i64> {
    if !u.is_primitive() {
        return Err(Error::NotPrimitive(u));
    }
    let square = mukai_square(u, p);
    if square < -2 {
        return Err(Error::SquareTooNegative { class: u, square });
    }
    Ok(square + 2)
}

/// Dimension `u² + 2` of the stable locus, for any class that carries
/// stable objects (primitive with `u² ≥ −2`, or a multiple with `u² > 0`).
pub fn stable_dim(u: MukaiVector, p: SurfaceParams) -> Result<i64> {
    let square = mukai_square(u, p);
    if !admits_stable_objects(u, p) {
        return Err(if u.is_primitive() {
            Error::SquareTooNegative { class: u, square }
        } else {
            Error::NotPrimitive(u)
        });
    }
    Ok(square + 2)
}

/// `dim Ext¹` between stable objects of the same phase: the Mukai pairing.
pub fn ext_dim(u: MukaiVector, w: MukaiVector, p: SurfaceParams) -> i64 {
    mukai_pairing(u, w, p)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimReport {
    pub part_moduli_dims: Vec<i64>,
    /// Projective fibre dimension of each extension step of the chain.
    pub fiber_dims: Vec<i64>,
    pub stratum_dim: i64,
    pub total_space_dim: i64,
}

/// Dimension count for the stratum of objects filtered by the parts, in order.
///
/// Step `i` extends `u₁ + … + u_i` by `u_{i+1}`, giving a fibre `P^{k−1}` with
/// `k = (u₁ + … + u_i, u_{i+1})`.
pub fn stratum_dims(dec: &Decomposition, p: SurfaceParams) -> Result<DimReport> {
    if dec.parts.len() < 2 {
        return Err(Error::TooFewParts);
    }
    let part_moduli_dims = dec.parts.iter().map(|u| stable_dim(*u, p)).collect::<Result<Vec<_>>>()?;
    let mut fiber_dims = Vec::with_capacity(dec.parts.len() - 1);
    let mut prefix = dec.parts[0];
    for (step, u) in dec.parts.iter().enumerate().skip(1) {
        let pairing = mukai_pairing(prefix, *u, p);
        if pairing < 1 {
            return Err(Error::NonEffectiveExtension { step, pairing });
        }
        fiber_dims.push(pairing - 1);
        prefix = prefix + *u;
    }
    let stratum_dim = part_moduli_dims.iter().sum::<i64>() + fiber_dims.iter().sum::<i64>();
    Ok(DimReport { part_moduli_dims, fiber_dims, stratum_dim, total_space_dim: mukai_square(prefix, p) + 2 })
}
