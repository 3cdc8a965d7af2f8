//! Walls and chambers for Mukai vectors on a K3 surface with `Pic = Z·H`.
//!
//! ```
//! use k3walls::{hilbert_walls, SearchBounds, SurfaceParams};
//!
//! let p = SurfaceParams::genus_two();
//! let table = hilbert_walls(10, &SearchBounds::for_n(10), p).unwrap();
//! assert_eq!(table.walls.len(), 12);
//! assert!(table.complete);
//! ```

pub mod charge;
pub mod crossing;
pub mod error;
pub mod lattice;
pub mod plane;
pub mod rational;
pub mod walls;

/// Exact rationals used for every coordinate, slope and radius.
pub type Rational = num_rational::Ratio<i128>;

pub use charge::{
    aligned, central_charge, geometric_check, path_intersection, phase, wall_locus, ComplexValue,
    GeometricCheck, PathCrossing, StabilityPoint, WallCurve,
};
pub use crossing::{
    apex, decompositions, ext_dim, moduli_dim, positive_classes, stable_dim, stratum_dims, wall_base_point,
    weighted_positive_classes, Decomposition, DimReport, Side,
};
pub use error::{Error, Result};
pub use lattice::{
    dual_shift, equivalent_wall_class, line_bundle_vector, mukai_pairing, mukai_square, phi_pushforward,
    same_up_to_sign, spherical_reflect, tensor_twist, Autoequivalence, MukaiVector, SurfaceParams,
};
pub use plane::{admits_stable_objects, positive_region, SaturatedPlane};
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/lattice.md")]
    pub mod lattice {}
    #[doc = include_str!("../../../book/src/stability.md")]
    pub mod stability {}
    #[doc = include_str!("../../../book/src/wall-tables.md")]
    pub mod wall_tables {}
    #[doc = include_str!("../../../book/src/transport.md")]
    pub mod transport {}
    #[doc = include_str!("../../../book/src/crossing.md")]
    pub mod crossing {}
}

pub use walls::{
    candidate_walls, find_phi_preimage, gamma_of_wall, hilbert_circle, hilbert_walls, movable_cone,
    transport_walls, walls_for, MovableCone, SearchBounds, TableMode, WallRecord, WallTable, WallType,
};
