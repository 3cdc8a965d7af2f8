//! Saturated rank-two sublattices and the positive classes they contain at a
//! point of a wall.

use num_traits::Signed;

use crate::charge::{central_charge, StabilityPoint};
use crate::error::{Error, Result};
use crate::lattice::{cross, kernel_basis, mukai_pairing, pairing_row, MukaiVector, SurfaceParams};
use crate::rational::{int, to_f64};
use crate::Rational;

/// The saturation of a rank-two sublattice of the Mukai lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturatedPlane {
    basis: [MukaiVector; 2],
}

impl SaturatedPlane {
    /// `(Q·u + Q·w) ∩ Z³`.
    pub fn span(u: MukaiVector, w: MukaiVector) -> Result<Self> {
        let normal = cross(u.to_array(), w.to_array());
        if normal == [0, 0, 0] {
            return Err(Error::Parallel(u, w));
        }
        Ok(Self::from_normal(normal))
    }

    /// `w^⊥` for a nonzero class `w`, with respect to the Mukai pairing.
    pub fn orthogonal(w: MukaiVector, p: SurfaceParams) -> Self {
        Self::from_normal(pairing_row(w, p))
    }

    fn from_normal(normal: [i64; 3]) -> Self {
        let [e1, e2] = kernel_basis(normal);
        SaturatedPlane { basis: [MukaiVector::from_array(e1), MukaiVector::from_array(e2)] }
    }

    pub fn basis(&self) -> [MukaiVector; 2] {
        self.basis
    }

    pub fn combine(&self, m: i64, n: i64) -> MukaiVector {
        m * self.basis[0] + n * self.basis[1]
    }

    /// Rational coordinates of `u` in the basis, if `u` lies in the plane.
    pub fn coordinates(&self, u: MukaiVector) -> Option<(Rational, Rational)> {
        let [e1, e2] = self.basis.map(|e| e.to_array());
        let target = u.to_array();
        // pick two coordinate rows with an invertible 2×2 minor
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let det = e1[i] * e2[j] - e1[j] * e2[i];
            if det == 0 {
                continue;
            }
            let m = Rational::new((target[i] * e2[j] - target[j] * e2[i]) as i128, det as i128);
            let n = Rational::new((e1[i] * target[j] - e1[j] * target[i]) as i128, det as i128);
            let k = 3 - i - j;
            let check = m * int(e1[k]) + n * int(e2[k]);
            return (check == int(target[k])).then_some((m, n));
        }
        None
    }

    /// Gram matrix entries `(e1², (e1,e2), e2²)`.
    pub fn gram(&self, p: SurfaceParams) -> (i64, i64, i64) {
        let [e1, e2] = self.basis;
        (mukai_pairing(e1, e1, p), mukai_pairing(e1, e2, p), mukai_pairing(e2, e2, p))
    }

    /// Signature (1,1) with nonzero discriminant.
    pub fn is_hyperbolic(&self, p: SurfaceParams) -> bool {
        let (a, b, c) = self.gram(p);
        a * c - b * b < 0
    }
}

/// Whether moduli of stable objects of class `u` can be nonempty: `u² ≥ −2`
/// for primitive `u`, and `u² > 0` for multiples.
pub fn admits_stable_objects(u: MukaiVector, p: SurfaceParams) -> bool {
    let square = mukai_pairing(u, u, p);
    if u.is_primitive() {
        square >= -2
    } else {
        !u.is_zero() && square > 0
    }
}

/// Classes of a wall's lattice whose central charge at `pt` is `λ·Z(v)` with
/// `0 < λ < 1`, together with `λ`.
///
/// `pt` must lie on the wall so that every class of the plane is aligned
/// with `v`. The search region is compact because the kernel of `λ` is a
/// negative direction of the lattice.
pub fn positive_region(
    v: MukaiVector,
    plane: &SaturatedPlane,
    pt: &StabilityPoint,
    p: SurfaceParams,
) -> Result<Vec<(MukaiVector, Rational)>> {
    let zv = central_charge(v, pt, p);
    let [e1, e2] = plane.basis();
    let lambda = |u: MukaiVector| -> Option<Rational> { central_charge(u, pt, p).real_ratio(&zv) };
    let (l1, l2) = match (lambda(e1), lambda(e2)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::CollapsedCharge),
    };
    let (m0, n0) = plane.coordinates(v).ok_or(Error::Parallel(v, e1))?;

    let (g11, g12, g22) = plane.gram(p);
    let form = |m: Rational, n: Rational| -> Rational {
        int(g11) * m * m + int(2) * int(g12) * m * n + int(g22) * n * n
    };
    let bilinear = |m: Rational, n: Rational, m2: Rational, n2: Rational| -> Rational {
        int(g11) * m * m2 + int(g12) * (m * n2 + n * m2) + int(g22) * n * n2
    };
    // kernel direction of λ
    let (km, kn) = (l2, -l1);
    let q_kernel = form(km, kn);
    if !q_kernel.is_negative() {
        return Err(Error::UnboundedRegion);
    }
    let qk = to_f64(&(-q_kernel));
    let b = to_f64(&bilinear(m0, n0, km, kn)).abs();
    let qv = to_f64(&form(m0, n0)).max(0.0);
    let sigma = (b + (b * b + qk * (qv + 2.0)).sqrt()) / qk;

    let (m0f, n0f, kmf, knf) = (to_f64(&m0), to_f64(&n0), to_f64(&km), to_f64(&kn));
    let corners = [0.0, 1.0]
        .into_iter()
        .flat_map(|t| [-sigma, sigma].map(move |s| (t, s)))
        .map(|(t, s)| (t * m0f + s * kmf, t * n0f + s * knf));
    let (mut m_lo, mut m_hi, mut n_lo, mut n_hi) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for (m, n) in corners {
        m_lo = m_lo.min(m);
        m_hi = m_hi.max(m);
        n_lo = n_lo.min(n);
        n_hi = n_hi.max(n);
    }
    let (m_lo, m_hi) = (m_lo.floor() as i64 - 1, m_hi.ceil() as i64 + 1);
    let (n_lo, n_hi) = (n_lo.floor() as i64 - 1, n_hi.ceil() as i64 + 1);

    let mut out = Vec::new();
    for m in m_lo..=m_hi {
        for n in n_lo..=n_hi {
            let weight = int(m) * l1 + int(n) * l2;
            if !weight.is_positive() || weight >= int(1) {
                continue;
            }
            let u = plane.combine(m, n);
            if admits_stable_objects(u, p) {
                out.push((u, weight));
            }
        }
    }
    out.sort_by(|(u1, w1), (u2, w2)| w2.cmp(w1).then(u1.cmp(u2)));
    Ok(out)
}
