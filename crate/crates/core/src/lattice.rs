//! The algebraic Mukai lattice of a K3 surface with `Pic = Z·H`, `H² = 2d`.
//!
//! A class is stored as the integer triple `(r, c, s)` where `c` is the
//! coefficient of `H`. The pairing is `(u, w) = 2d·c_u·c_w − r_u·s_w − r_w·s_u`,
//! and every autoequivalence acts by an isometry of this form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Polarisation data: `H² = 2d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceParams {
    d: i64,
}

impl SurfaceParams {
    pub fn new(d: i64) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidDegree(d));
        }
        Ok(SurfaceParams { d })
    }

    /// The genus-two surface, `H² = 2`.
    pub const fn genus_two() -> Self {
        SurfaceParams { d: 1 }
    }

    pub fn d(&self) -> i64 {
        self.d
    }
}

impl Default for SurfaceParams {
    fn default() -> Self {
        Self::genus_two()
    }
}

/// A Mukai vector `(r, c·H, s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MukaiVector {
    pub r: i64,
    pub c: i64,
    pub s: i64,
}

impl MukaiVector {
    pub const ZERO: MukaiVector = MukaiVector { r: 0, c: 0, s: 0 };

    pub const fn new(r: i64, c: i64, s: i64) -> Self {
        MukaiVector { r, c, s }
    }

    /// The Hilbert scheme class `(1, 0, 1 − n)` of `S^[n]`.
    pub const fn hilbert(n: i64) -> Self {
        MukaiVector { r: 1, c: 0, s: 1 - n }
    }

    pub fn to_array(self) -> [i64; 3] {
        [self.r, self.c, self.s]
    }

    pub fn from_array(a: [i64; 3]) -> Self {
        MukaiVector::new(a[0], a[1], a[2])
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }

    /// gcd of the absolute coordinates (0 for the zero vector).
    pub fn content(&self) -> i64 {
        self.r.gcd(&self.c).gcd(&self.s)
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    /// The primitive class on the same ray.
    pub fn primitive_part(&self) -> MukaiVector {
        match self.content() {
            0 => *self,
            g => MukaiVector::new(self.r / g, self.c / g, self.s / g),
        }
    }

    /// Whether `self` and `other` span a line over the rationals.
    pub fn is_parallel(&self, other: &MukaiVector) -> bool {
        cross(self.to_array(), other.to_array()) == [0, 0, 0]
    }

    /// `Some(n)` when this is the Hilbert class `(1, 0, 1 − n)`.
    pub fn hilbert_n(&self) -> Option<i64> {
        (self.r == 1 && self.c == 0 && self.s <= -1).then(|| 1 - self.s)
    }

    /// Parses `"r,c,s"` (whitespace and surrounding parentheses allowed).
    pub fn parse(text: &str) -> Option<Self> {
        let t = text.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<i64> =
            t.split(',').map(|p| p.trim().parse::<i64>()).collect::<std::result::Result<_, _>>().ok()?;
        match parts.as_slice() {
            [r, c, s] => Some(MukaiVector::new(*r, *c, *s)),
            _ => None,
        }
    }
}

impl fmt::Display for MukaiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.c, self.s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("expected a Mukai vector `r,c,s`, got {0:?}")]
pub struct ParseVectorError(pub String);

impl FromStr for MukaiVector {
    type Err = ParseVectorError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        MukaiVector::parse(s).ok_or_else(|| ParseVectorError(s.to_string()))
    }
}

impl Add for MukaiVector {
    type Output = MukaiVector;
    fn add(self, o: MukaiVector) -> MukaiVector {
        MukaiVector::new(self.r + o.r, self.c + o.c, self.s + o.s)
    }
}

impl Sub for MukaiVector {
    type Output = MukaiVector;
    fn sub(self, o: MukaiVector) -> MukaiVector {
        MukaiVector::new(self.r - o.r, self.c - o.c, self.s - o.s)
    }
}

impl Neg for MukaiVector {
    type Output = MukaiVector;
    fn neg(self) -> MukaiVector {
        MukaiVector::new(-self.r, -self.c, -self.s)
    }
}

impl Mul<MukaiVector> for i64 {
    type Output = MukaiVector;
    fn mul(self, v: MukaiVector) -> MukaiVector {
        MukaiVector::new(self * v.r, self * v.c, self * v.s)
    }
}

impl std::iter::Sum for MukaiVector {
    fn sum<I: Iterator<Item = MukaiVector>>(iter: I) -> Self {
        iter.fold(MukaiVector::ZERO, Add::add)
    }
}

pub fn mukai_pairing(u: MukaiVector, w: MukaiVector, p: SurfaceParams) -> i64 {
    2 * p.d * u.c * w.c - u.r * w.s - w.r * u.s
}

pub fn mukai_square(u: MukaiVector, p: SurfaceParams) -> i64 {
    mukai_pairing(u, u, p)
}

/// Mukai vector of the line bundle `O(kH)`: `(1, k, d·k² + 1)`.
pub fn line_bundle_vector(k: i64, p: SurfaceParams) -> MukaiVector {
    MukaiVector::new(1, k, p.d * k * k + 1)
}

/// Cohomological action of `− ⊗ O(kH)`.
pub fn tensor_twist(u: MukaiVector, k: i64, p: SurfaceParams) -> MukaiVector {
    MukaiVector::new(u.r, u.c + u.r * k, u.s + 2 * p.d * u.c * k + p.d * u.r * k * k)
}

/// Reflection in the spherical class `w`: `u ↦ u + (u, w)·w`.
pub fn spherical_reflect(u: MukaiVector, w: MukaiVector, p: SurfaceParams) -> Result<MukaiVector> {
    let square = mukai_square(w, p);
    if square != -2 {
        return Err(Error::NotSpherical { class: w, square });
    }
    Ok(u + mukai_pairing(u, w, p) * w)
}

/// Action of the shifted derived dual `RHom(−, O)[1]`.
pub fn dual_shift(u: MukaiVector) -> MukaiVector {
    MukaiVector::new(-u.r, u.c, -u.s)
}

/// `Φ_* = (⊗ O(mH)) ∘ T_{O(−mH)}` on cohomology.
pub fn phi_pushforward(u: MukaiVector, m: i64, p: SurfaceParams) -> MukaiVector {
    let w = line_bundle_vector(-m, p);
    let reflected = u + mukai_pairing(u, w, p) * w;
    tensor_twist(reflected, m, p)
}

/// Autoequivalences, through their action on the Mukai lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Autoequivalence {
    TensorTwist(i64),
    SphericalReflect(MukaiVector),
    DualShift,
    /// Applied left to right: the first entry acts first.
    Composite(Vec<Autoequivalence>),
}

impl Autoequivalence {
    /// Checked constructor for a spherical reflection.
    pub fn reflect(w: MukaiVector, p: SurfaceParams) -> Result<Self> {
        let square = mukai_square(w, p);
        if square != -2 {
            return Err(Error::NotSpherical { class: w, square });
        }
        Ok(Autoequivalence::SphericalReflect(w))
    }

    /// The composite `Φ` built from the twist by `O(−mH)` and tensoring by `O(mH)`.
    pub fn phi(m: i64, p: SurfaceParams) -> Self {
        Autoequivalence::Composite(vec![
            Autoequivalence::SphericalReflect(line_bundle_vector(-m, p)),
            Autoequivalence::TensorTwist(m),
        ])
    }

    pub fn apply(&self, u: MukaiVector, p: SurfaceParams) -> Result<MukaiVector> {
        match self {
            Autoequivalence::TensorTwist(k) => Ok(tensor_twist(u, *k, p)),
            Autoequivalence::SphericalReflect(w) => spherical_reflect(u, *w, p),
            Autoequivalence::DualShift => Ok(dual_shift(u)),
            Autoequivalence::Composite(steps) => steps.iter().try_fold(u, |acc, step| step.apply(acc, p)),
        }
    }
}

/// Classes equal up to sign.
pub fn same_up_to_sign(a: MukaiVector, b: MukaiVector) -> bool {
    a == b || a == -b
}

/// Whether `b = ±a + m·v` for some integer `m`.
pub fn equivalent_wall_class(a: MukaiVector, b: MukaiVector, v: MukaiVector) -> bool {
    [a, -a].into_iter().any(|x| {
        let diff = b - x;
        if diff.is_zero() {
            return true;
        }
        if !diff.is_parallel(&v) {
            return false;
        }
        // diff = m·v with m integral
        let (num, den) = [(diff.r, v.r), (diff.c, v.c), (diff.s, v.s)]
            .into_iter()
            .find(|(_, vv)| *vv != 0)
            .expect("v is nonzero");
        num % den == 0
    })
}

pub(crate) fn cross(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// The row `ℓ` with `ℓ·u = (v, u)` for every `u`.
pub(crate) fn pairing_row(v: MukaiVector, p: SurfaceParams) -> [i64; 3] {
    [-v.s, 2 * p.d * v.c, -v.r]
}

/// A basis of the integer kernel `{u ∈ Z³ : row·u = 0}` of a nonzero row.
pub(crate) fn kernel_basis(row: [i64; 3]) -> [[i64; 3]; 2] {
    // column operations on the identity keep a unimodular matrix whose
    // columns beyond the first span the kernel once row·U = (g, 0, 0)
    let mut row = row;
    let mut cols = [[1i64, 0, 0], [0, 1, 0], [0, 0, 1]];
    for j in 1..3 {
        while row[j] != 0 {
            if row[0] == 0 || row[j].abs() < row[0].abs() {
                row.swap(0, j);
                cols.swap(0, j);
                continue;
            }
            let q = row[j].div_euclid(row[0]);
            row[j] -= q * row[0];
            let pivot = cols[0];
            for (x, y) in cols[j].iter_mut().zip(pivot) {
                *x -= q * y;
            }
        }
    }
    debug_assert!(row[0] != 0, "kernel_basis needs a nonzero row");
    [cols[1], cols[2]]
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: SurfaceParams = SurfaceParams::genus_two();

    fn mv(r: i64, c: i64, s: i64) -> MukaiVector {
        MukaiVector::new(r, c, s)
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(mukai_pairing(mv(1, 0, -9), mv(1, -1, 2), P), 7);
        assert_eq!(mukai_pairing(mv(0, 0, 1), mv(0, 0, 1), P), 0);
        assert_eq!(mukai_pairing(mv(0, 3, -1), mv(1, 1, 2), P), 7);
    }

    #[test]
    fn square_examples() {
        assert_eq!(mukai_square(mv(1, -1, 2), P), -2);
        assert_eq!(mukai_square(mv(0, 1, -8), P), 2);
        // dim S^[10] = 18 + 2
        assert_eq!(mukai_square(mv(1, 0, -9), P), 18);
    }

    #[test]
    fn line_bundles_are_spherical() {
        assert_eq!(line_bundle_vector(0, P), mv(1, 0, 1));
        assert_eq!(line_bundle_vector(-3, P), mv(1, -3, 10));
        assert_eq!(line_bundle_vector(1, P), mv(1, 1, 2));
        for k in -20..=20 {
            assert_eq!(mukai_square(line_bundle_vector(k, P), P), -2);
        }
    }

    #[test]
    fn twist_examples() {
        assert_eq!(tensor_twist(mv(1, 0, 1), 3, P), line_bundle_vector(3, P));
        assert_eq!(tensor_twist(mv(0, 3, -19), 3, P), mv(0, 3, -1));
        assert_eq!(tensor_twist(mv(5, 2, 7), 0, P), mv(5, 2, 7));
    }

    #[test]
    fn reflection_examples() {
        let w = mv(1, -3, 10);
        assert_eq!(spherical_reflect(mv(1, 0, -9), w, P).unwrap(), mv(0, 3, -19));
        assert_eq!(spherical_reflect(w, w, P).unwrap(), mv(-1, 3, -10));
        assert_eq!(spherical_reflect(mv(0, -1, 0), mv(1, 0, 1), P).unwrap(), mv(0, -1, 0));
    }

    #[test]
    fn reflection_rejects_non_spherical() {
        let err = spherical_reflect(mv(1, 0, 0), mv(1, 0, -9), P).unwrap_err();
        assert_eq!(err, Error::NotSpherical { class: mv(1, 0, -9), square: 18 });
        assert!(Autoequivalence::reflect(mv(0, 1, 0), P).is_err());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual_shift(mv(0, 3, -8)), mv(0, 3, 8));
        assert_eq!(dual_shift(mv(0, 0, 1)), mv(0, 0, -1));
        assert_eq!(dual_shift(mv(1, 0, 1)), mv(-1, 0, -1));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_pushforward(mv(1, 0, -9), 3, P), mv(0, 3, -1));
        assert_eq!(phi_pushforward(mv(-1, 3, -9), 3, P), mv(0, 0, 1));
        assert_eq!(phi_pushforward(mv(-2, 7, -25), 3, P), mv(1, 1, 2));
        let phi = Autoequivalence::phi(3, P);
        assert_eq!(phi.apply(mv(1, 0, -9), P).unwrap(), mv(0, 3, -1));
    }

    #[test]
    fn phi_carries_table_one_classes_to_table_two() {
        let pairs = [
            (mv(-1, 3, -10), mv(1, 0, 1)),
            (mv(-1, 4, -16), mv(1, 1, 1)),
            (mv(2, -5, 13), mv(1, -1, 2)),
            (mv(-2, 7, -25), mv(1, 1, 2)),
        ];
        for (a, a_prime) in pairs {
            assert!(same_up_to_sign(phi_pushforward(a, 3, P), a_prime), "{a}");
        }
    }

    #[test]
    fn wall_class_equivalence() {
        let v = mv(1, 0, -9);
        assert!(equivalent_wall_class(mv(0, 1, -9), mv(1, -1, 0), v));
        assert!(equivalent_wall_class(mv(1, -1, 2), mv(-1, 1, -2), v));
        assert!(equivalent_wall_class(mv(1, -1, 2), mv(3, -1, -16), v));
        assert!(!equivalent_wall_class(mv(1, -1, 2), mv(1, -1, 1), v));
    }

    #[test]
    fn primitivity() {
        assert!(mv(1, 0, -9).is_primitive());
        assert!(!mv(0, 2, -14).is_primitive());
        assert!(!MukaiVector::ZERO.is_primitive());
        assert_eq!(mv(0, 2, -14).primitive_part(), mv(0, 1, -7));
    }

    #[test]
    fn parse_round_trip() {
        assert_eq!("0,3,-1".parse::<MukaiVector>().unwrap(), mv(0, 3, -1));
        assert_eq!(MukaiVector::parse("(1, -1, 2)"), Some(mv(1, -1, 2)));
        assert!(MukaiVector::parse("1,2").is_none());
        assert_eq!(mv(-2, 7, -25).to_string(), "(-2,7,-25)");
    }

    #[test]
    fn kernel_basis_spans_the_kernel() {
        for row in [[1, 12, 0], [9, 0, -1], [-6, 4, 10], [0, 0, 3], [7, -5, 0]] {
            let [e1, e2] = kernel_basis(row);
            for e in [e1, e2] {
                assert_eq!(row[0] * e[0] + row[1] * e[1] + row[2] * e[2], 0);
            }
            // the basis is saturated iff its cross product is primitive
            let n = cross(e1, e2);
            let g = n[0].gcd(&n[1]).gcd(&n[2]);
            assert_eq!(g, 1, "{row:?}");
        }
    }
}
