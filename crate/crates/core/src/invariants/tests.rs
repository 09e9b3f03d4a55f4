use proptest::prelude::*;

use super::*;
use crate::diagram::{checkerboard_coloring, parse_pd, Color};
use crate::generate::{generate, Kind};
use crate::oracle::{determinant_oracle, signature_oracle};

const TREFOIL: &str = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)";
const FIG8: &str = "X(8,5,1,6),X(4,1,5,2),X(2,8,3,7),X(6,4,7,3)";
const KINK: &str = "X(1,2,2,1)";

fn with_coloring(pd: &str) -> (CombinatorialMap, CheckerboardColoring) {
    let m = parse_pd(pd).unwrap();
    let col = checkerboard_coloring(&m).unwrap();
    (m, col)
}

#[test]
fn calibration_is_unique() {
    assert_eq!(calibrate().winners, vec![Convention::CALIBRATED]);
}

#[test]
fn trefoil_surfaces() {
    let (m, col) = with_coloring(TREFOIL);
    for col in [col.clone(), col.swapped()] {
        let (bb, bw) = betti_checkerboard(&m, &col);
        assert_eq!(bb + bw, 3);
        for (color, b1) in [(Color::Black, bb), (Color::White, bw)] {
            assert_eq!(surface_cycle_rank(&m, &col, color), b1);
            // The two-disk surface is an annulus, the three-disk one a Möbius band.
            assert_eq!(surface_orientable(&m, &col, color), b1 == 2);
        }
        let (gb, gw) = gl_forms(&m, &col).unwrap();
        assert_eq!((gb.size(), gw.size()), (bb, bw));
        assert_eq!(gb.determinant().magnitude(), &3u32.into());
        assert_eq!(gw.determinant().magnitude(), &3u32.into());
        assert_eq!(knot_signature(&m, &col).unwrap(), 2);
        assert_eq!(greene_definiteness(&m, &col).unwrap(), Definiteness::BothDefiniteOpposite);
        assert_eq!(defect_bound(&m, &col).unwrap(), 0);
        assert_eq!(howie_quantity(&m, &col).unwrap(), 2);
        assert_eq!(crosscap_bound(&m, &col).unwrap(), 1);
    }
}

#[test]
fn figure_eight_surfaces() {
    let (m, col) = with_coloring(FIG8);
    let (gb, gw) = gl_forms(&m, &col).unwrap();
    assert_eq!((gb.size(), gw.size()), (2, 2));
    assert_eq!(gb.determinant().magnitude(), &5u32.into());
    assert_eq!(knot_signature(&m, &col).unwrap(), 0);
    assert_eq!(greene_definiteness(&m, &col).unwrap(), Definiteness::BothDefiniteOpposite);
    assert_eq!(crosscap_bound(&m, &col).unwrap(), 2);
    let s = SurfacePairInvariants::compute(&m, &col).unwrap();
    assert_eq!((s.defect_bound, s.howie_quantity), (0, 2));
}

#[test]
fn kink_has_an_empty_form() {
    let (m, col) = with_coloring(KINK);
    let (gb, gw) = gl_forms(&m, &col).unwrap();
    assert_eq!(gb.size() + gw.size(), 1);
    assert_eq!(knot_signature(&m, &col).unwrap(), 0);
    assert_eq!(crosscap_bound(&m, &col).unwrap(), 1);
    let (eb, ew) = euler_numbers(&m, &col).unwrap();
    assert_eq!((eb - ew).abs(), 2);
}

#[test]
fn mirror_negates_signature() {
    let (m, _) = with_coloring(TREFOIL);
    let mirror = m.mirror();
    let col = checkerboard_coloring(&mirror).unwrap();
    assert_eq!(knot_signature(&mirror, &col).unwrap(), -2);
}

#[test]
fn torus_maps_have_no_goeritz_form() {
    let (m, _) = with_coloring(TREFOIL);
    let lift = crate::alternating::lift_to_torus(&m.flip_crossing(1).unwrap(), 1).unwrap();
    let col = checkerboard_coloring(&lift).unwrap();
    assert_eq!(goeritz_matrix(&lift, &col, Color::Black), Err(Error::NotPlanar(1)));
    let (bb, bw) = betti_checkerboard(&lift, &col);
    assert_eq!(bb + bw, 5);
}

fn diagram() -> impl Strategy<Value = CombinatorialMap> {
    (1usize..=10, any::<u64>(), prop_oneof![Just(Kind::Random), Just(Kind::Alternating)])
        .prop_map(|(n, seed, kind)| generate(n, seed, kind).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn betti_numbers_sum_to_first_betti_of_the_surface(m in diagram()) {
        let col = checkerboard_coloring(&m).unwrap();
        let (bb, bw) = betti_checkerboard(&m, &col);
        prop_assert_eq!(bb + bw, m.crossing_count());
        prop_assert_eq!(surface_cycle_rank(&m, &col, Color::Black), bb);
        prop_assert_eq!(surface_cycle_rank(&m, &col, Color::White), bw);
    }

    #[test]
    fn signature_matches_oracle(m in diagram()) {
        let col = checkerboard_coloring(&m).unwrap();
        prop_assert_eq!(knot_signature(&m, &col).unwrap(), signature_oracle(&m).unwrap());
        let det = gl_forms(&m, &col).unwrap().1.determinant();
        prop_assert_eq!(det.magnitude(), &determinant_oracle(&m).unwrap().into());
    }

    #[test]
    fn euler_difference_is_twice_sigma_difference(m in diagram()) {
        let col = checkerboard_coloring(&m).unwrap();
        let s = SurfacePairInvariants::compute(&m, &col).unwrap();
        let (gb, gw) = gl_forms(&m, &col).unwrap();
        prop_assert_eq!(s.half_e_b - s.half_e_w, s.sigma_diff);
        prop_assert_eq!(gw.signature() - gb.signature(), s.sigma_diff);
    }

    #[test]
    fn color_swap_exchanges_surfaces(m in diagram()) {
        let col = checkerboard_coloring(&m).unwrap();
        let a = SurfacePairInvariants::compute(&m, &col).unwrap();
        let b = SurfacePairInvariants::compute(&m, &col.swapped()).unwrap();
        prop_assert_eq!((a.b1_b, a.b1_w, a.e_b, a.e_w), (b.b1_w, b.b1_b, b.e_w, b.e_b));
        prop_assert_eq!(a.sigma_diff, -b.sigma_diff);
        prop_assert_eq!((a.defect_bound, a.howie_quantity), (b.defect_bound, b.howie_quantity));
        prop_assert_eq!(knot_signature(&m, &col).unwrap(), knot_signature(&m, &col.swapped()).unwrap());
    }

    #[test]
    fn reversal_keeps_euler_numbers(m in diagram()) {
        let col = checkerboard_coloring(&m).unwrap();
        let r = m.reversed();
        prop_assert_eq!(euler_numbers(&m, &col).unwrap(), euler_numbers(&r, &col).unwrap());
        prop_assert_eq!(knot_signature(&m, &col).unwrap(), knot_signature(&r, &col).unwrap());
    }

    #[test]
    fn parity(m in diagram()) {
        let col = checkerboard_coloring(&m).unwrap();
        let s = SurfacePairInvariants::compute(&m, &col).unwrap();
        let sigma = knot_signature(&m, &col).unwrap();
        prop_assert_eq!(sigma.rem_euclid(2), 0);
        prop_assert_eq!(s.defect_bound % 2, 0);
        prop_assert!(crosscap_bound(&m, &col).is_ok());
    }
}
