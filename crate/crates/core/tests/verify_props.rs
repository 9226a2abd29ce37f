mod common;

use proptest::prelude::*;
use simrac::gen::{gen_cycle_matching, gen_path_matching};
use simrac::geom::Point;
use simrac::layout::{layout_cycle_matching, layout_path_matching};
use simrac::{verify_all, Drawing, Profile};

fn geometric() -> Profile {
    Profile { structural: false, ..Profile::default() }
}

fn drawing(cycle: bool, n: usize, cov: f64, seed: u64) -> Option<Drawing<i64>> {
    if cycle {
        layout_cycle_matching(&gen_cycle_matching(n, cov, seed).ok()?).ok()
    } else {
        layout_path_matching(&gen_path_matching(n, cov, seed).ok()?).ok()
    }
}

const STEPS: [(i64, i64); 8] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn verifier_matches_oracle_on_outputs(cycle in any::<bool>(), n in 4usize..40, cov in 0.0..=1.0f64, seed in any::<u64>()) {
        let d = drawing(cycle, n, cov, seed);
        prop_assume!(d.is_some());
        let d = d.unwrap();
        let r = verify_all(&d, &geometric()).unwrap();
        prop_assert!(common::oracle(&d).is_empty());
        prop_assert!(r.is_ok());
        prop_assert!(r.summary.crossing_graph_bipartite);
    }

    #[test]
    fn verifier_matches_oracle_after_a_nudge(
        cycle in any::<bool>(), n in 4usize..40, cov in 0.0..=1.0f64, seed in any::<u64>(),
        pick in any::<prop::sample::Index>(), step in 0usize..8,
    ) {
        let d = drawing(cycle, n, cov, seed);
        prop_assume!(d.is_some());
        let mut d = d.unwrap();
        let v = pick.index(d.n());
        let (dx, dy) = STEPS[step];
        d.positions[v] = d.positions[v] + Point::new(dx, dy);
        let expected = common::canonical(common::oracle(&d));
        let got = common::findings(&verify_all(&d, &geometric()).unwrap());
        prop_assert_eq!(got, expected);
    }
}

#[test]
fn reports_are_byte_identical() {
    let mut d = drawing(false, 30, 1.0, 5).unwrap();
    d.positions[4] = d.positions[4] + Point::new(1, 1);
    let a = verify_all(&d, &Profile::default()).unwrap().to_json();
    let b = verify_all(&d.clone(), &Profile::default()).unwrap().to_json();
    assert_eq!(a, b);
}

#[test]
fn non_rac_crossings_can_make_the_crossing_graph_odd() {
    // three segments crossing pairwise: a triangle in the crossing graph
    let d = Drawing::new(
        vec![Point::new(0i64, 0), Point::new(6, 3), Point::new(0, 3), Point::new(6, 0), Point::new(3, -1), Point::new(3, 4)],
        simrac::model::edges(&[(1, 2), (3, 4)]),
        simrac::model::edges(&[(5, 6)]),
    );
    let r = verify_all(&d, &geometric()).unwrap();
    assert!(!r.summary.crossing_graph_bipartite);
    assert!(!r.is_ok());
}
