use k3walls::rational::{int, rat};
use k3walls::{
    candidate_walls, equivalent_wall_class, gamma_of_wall, hilbert_circle, hilbert_walls, movable_cone,
    transport_walls, walls_for, MukaiVector, Rational, SearchBounds, SurfaceParams, TableMode, WallCurve,
    WallType,
};
use proptest::prelude::*;

const P: SurfaceParams = SurfaceParams::genus_two();

fn mv(r: i64, c: i64, s: i64) -> MukaiVector {
    MukaiVector::new(r, c, s)
}

fn circle(center: Rational, radius_sq: Rational) -> Option<WallCurve> {
    Some(WallCurve::Semicircle { center, radius_sq })
}

type Row = (Rational, MukaiVector, i64, i64, Option<WallCurve>, WallType);

fn check_table(n: i64, expected: &[Row]) {
    let table = hilbert_walls(n, &SearchBounds::for_n(n), P).unwrap();
    assert!(table.complete, "n = {n}");
    assert_eq!(table.walls.len(), expected.len(), "n = {n}");
    let v = MukaiVector::hilbert(n);
    for (wall, (gamma, a, a_sq, k, curve, wall_type)) in table.walls.iter().zip(expected) {
        assert_eq!(wall.gamma, Some(*gamma), "n = {n}");
        assert!(equivalent_wall_class(wall.a, *a, v), "n = {n}: {} vs {a}", wall.a);
        assert_eq!((wall.a_sq, wall.pairing_va), (*a_sq, *k), "n = {n}, Γ = {gamma}");
        assert_eq!(&wall.curve, curve, "n = {n}, Γ = {gamma}");
        assert_eq!(wall.wall_type, *wall_type, "n = {n}, Γ = {gamma}");
    }
}

fn line() -> Option<WallCurve> {
    Some(WallCurve::VerticalLine { x0: int(0) })
}

use WallType::{BoundaryLagrangian as Lag, Divisorial as Div, Flopping as Flop};

#[test]
fn ten_points() {
    let hilbert = |q: Rational| circle(-q / int(2), q * q / int(4) - int(9));
    check_table(
        10,
        &[
            (int(0), mv(0, 0, -1), 0, 1, line(), Div),
            (rat(2, 11), mv(1, -1, 2), -2, 7, hilbert(int(11)), Flop),
            (rat(1, 5), mv(1, -1, 1), 0, 8, hilbert(int(10)), Flop),
            (rat(2, 9), mv(1, -1, 0), 2, 9, hilbert(int(9)), Flop),
            (rat(1, 4), mv(0, 1, -8), 2, 8, hilbert(int(8)), Flop),
            (rat(2, 7), mv(0, 1, -7), 2, 7, hilbert(int(7)), Flop),
            (rat(4, 13), mv(1, -2, 4), 0, 5, hilbert(rat(13, 2)), Flop),
            (rat(6, 19), mv(-1, 3, -10), -2, 1, hilbert(rat(19, 3)), Flop),
            (rat(8, 25), mv(-1, 4, -16), 0, 7, hilbert(rat(25, 4)), Flop),
            (rat(10, 31), mv(2, -5, 13), -2, 5, hilbert(rat(31, 5)), Flop),
            (rat(14, 43), mv(-2, 7, -25), -2, 7, hilbert(rat(43, 7)), Flop),
            (rat(1, 3), mv(-1, 3, -9), 0, 0, None, Lag),
        ],
    );
}

#[test]
fn small_tables() {
    check_table(
        2,
        &[
            (int(0), mv(0, 0, -1), 0, 1, line(), Div),
            (rat(2, 3), mv(-1, 1, -2), -2, 1, circle(rat(-3, 2), rat(5, 4)), Flop),
            (int(1), mv(-1, 1, -1), 0, 0, None, Lag),
        ],
    );
    check_table(
        3,
        &[
            (int(0), mv(0, 0, -1), 0, 1, line(), Div),
            (rat(1, 2), mv(1, -1, 2), -2, 0, circle(int(-2), int(2)), Div),
        ],
    );
    check_table(
        4,
        &[
            (int(0), mv(0, 0, -1), 0, 1, line(), Div),
            (rat(2, 5), mv(1, -1, 2), -2, 1, circle(rat(-5, 2), rat(13, 4)), Flop),
            (rat(1, 2), mv(1, -1, 1), 0, 2, circle(int(-2), int(1)), Div),
        ],
    );
    check_table(
        8,
        &[
            (int(0), mv(0, 0, -1), 0, 1, line(), Div),
            (rat(2, 9), mv(1, -1, 2), -2, 5, circle(rat(-9, 2), rat(53, 4)), Flop),
            (rat(1, 4), mv(1, -1, 1), 0, 6, circle(int(-4), int(9)), Flop),
            (rat(2, 7), mv(0, 1, -7), 2, 7, circle(rat(-7, 2), rat(21, 4)), Flop),
            (rat(1, 3), mv(0, 1, -6), 2, 6, circle(int(-3), int(2)), Flop),
            (rat(6, 17), mv(-1, 3, -10), -2, 3, circle(rat(-17, 6), rat(37, 36)), Flop),
            (rat(4, 11), mv(1, -2, 4), 0, 3, circle(rat(-11, 4), rat(9, 16)), Flop),
            (rat(10, 27), mv(2, -5, 13), -2, 1, circle(rat(-27, 10), rat(29, 100)), Flop),
            (rat(3, 8), mv(-1, 3, -9), 0, 2, circle(rat(-8, 3), rat(1, 9)), Div),
        ],
    );
}

#[test]
fn movable_cones() {
    for (n, g) in [(2, int(1)), (3, rat(1, 2)), (4, rat(1, 2)), (8, rat(3, 8)), (10, rat(1, 3))] {
        let cone = movable_cone(n, &SearchBounds::for_n(n), P).unwrap();
        assert_eq!((cone.gamma_min, cone.gamma_max), (int(0), g), "n = {n}");
        assert_eq!(cone.b, mv(-1, 0, 1 - n));
    }
}

#[test]
fn doubling_the_bound_changes_nothing() {
    for n in [2, 3, 4, 8, 10] {
        let bounds = SearchBounds::for_n(n);
        let base = hilbert_walls(n, &bounds, P).unwrap();
        let wide = hilbert_walls(n, &bounds.doubled(), P).unwrap();
        assert_eq!(base.walls, wide.walls, "n = {n}");
        assert!(base.complete && wide.complete);
    }
}

#[test]
fn tiny_bounds_are_flagged() {
    let bounds = SearchBounds { r_max: 1, ..SearchBounds::for_n(10) };
    assert!(!hilbert_walls(10, &bounds, P).unwrap().complete);
}

#[test]
fn records_are_hyperbolic_and_on_their_curves() {
    for n in [2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12] {
        let table = hilbert_walls(n, &SearchBounds::for_n(n), P).unwrap();
        let v = table.vector;
        for w in &table.walls {
            if w.wall_type != WallType::BoundaryLagrangian {
                assert!(w.discriminant(v, P) > 0, "n = {n}: {}", w.a);
            }
            let gamma = w.gamma.unwrap();
            assert_eq!(gamma_of_wall(n, w.a, P).unwrap(), gamma);
            if gamma > int(0) {
                assert_eq!(w.curve, hilbert_circle(n, &gamma), "n = {n}: Γ = {gamma}");
            }
        }
    }
}

#[test]
fn transport_to_the_rank_three_system() {
    let table = hilbert_walls(10, &SearchBounds::for_n(10), P).unwrap();
    let v = table.vector;
    let moved = transport_walls(&table.walls, 3, v, P);
    let target = mv(0, 3, -1);
    for (before, after) in table.walls.iter().zip(&moved) {
        assert_eq!(before.gamma, after.gamma);
        assert_eq!(before.a_sq, after.a_sq);
        assert_eq!(before.pairing_va, after.pairing_va);
        let gamma = after.gamma.unwrap();
        if gamma > int(0) && gamma < rat(1, 3) {
            let expected = rat(1, 36) + gamma / (int(6) * (int(1) - int(3) * gamma));
            assert_eq!(after.curve, circle(rat(-1, 6), expected));
        }
    }
    let radii: Vec<_> =
        moved.iter().filter(|w| w.gamma >= Some(rat(6, 19))).filter_map(|w| w.curve.clone()).collect();
    assert_eq!(
        radii,
        [85, 61, 49, 37].iter().rev().map(|k| circle(rat(-1, 6), rat(*k, 36)).unwrap()).collect::<Vec<_>>()
    );
    assert_eq!(moved.last().unwrap().a, mv(0, 0, 1));
    let table = walls_for(target, &SearchBounds::for_n(10), P).unwrap();
    assert_eq!(table.mode, TableMode::Transported { n: 10, m: 3 });
    assert!(transport_walls(&[], 3, v, P).is_empty());
}

fn candidate_circles(v: MukaiVector) -> Vec<WallCurve> {
    let n = k3walls::mukai_square(v, P) / 2 + 1;
    let bounds = SearchBounds { y_min: int(1), ..SearchBounds::for_n(n) };
    let table = candidate_walls(v, &bounds, P).unwrap();
    assert!(table.complete);
    assert!(table.walls.iter().all(|w| w.wall_type == WallType::Candidate));
    table.walls.into_iter().filter_map(|w| w.curve).collect()
}

#[test]
fn torsion_candidates() {
    let found = candidate_circles(mv(0, 2, -1));
    assert!(found.contains(&circle(rat(-1, 4), rat(25, 16)).unwrap()));
    assert!(found.contains(&circle(rat(-1, 4), rat(17, 16)).unwrap()));
    assert!(candidate_circles(mv(0, 2, -2)).contains(&circle(rat(-1, 2), rat(5, 4)).unwrap()));
    assert!(candidate_circles(mv(0, 1, 0)).is_empty());
    let rank_three = candidate_circles(mv(0, 3, -1));
    for k in [85, 61, 49, 37] {
        assert!(rank_three.contains(&circle(rat(-1, 6), rat(k, 36)).unwrap()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gamma_is_invariant_under_sign_and_shift(n in 2i64..=14, r in -6i64..=6, c in -6i64..=6, s in -30i64..=30, m in -4i64..=4) {
        let v = MukaiVector::hilbert(n);
        let a = mv(r, c, s);
        prop_assume!(!a.is_zero() && !v.is_parallel(&a) && !v.is_parallel(&(a + m * v)));
        let g = gamma_of_wall(n, a, P);
        prop_assert_eq!(&g, &gamma_of_wall(n, -a, P));
        prop_assert_eq!(&g, &gamma_of_wall(n, a + m * v, P));
    }
}
