//! Decider soundness and completeness against the 2^k enumeration oracle.

mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{brute_force_colorable, random_mmph};
use mmph::{check_colorable, check_colorable_with_budget, parse_mmph, Coloring, KsOutcome};

#[test]
fn decider_matches_brute_force_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut colorable = 0usize;
    let mut noncolorable = 0usize;
    for case in 0..400 {
        let m = random_mmph(&mut rng, 18, 7);
        let verdict = check_colorable(&m);
        let oracle = brute_force_colorable(&m);
        match (&verdict.outcome, &oracle) {
            (KsOutcome::Colorable(w), Some(_)) => {
                assert!(w.satisfies(&m), "case {case}: witness fails re-check");
                colorable += 1;
            }
            (KsOutcome::Noncolorable, None) => noncolorable += 1,
            (got, want) => panic!(
                "case {case}: solver={got:?} oracle_found={} ({:?})",
                want.is_some(),
                m
            ),
        }
    }
    assert!(colorable > 0);
    assert!(noncolorable > 0, "suite never hit a noncolorable instance");
}

#[test]
fn witnesses_revalidate_independently() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let m = random_mmph(&mut rng, 30, 9);
        if let Some(w) = check_colorable(&m).witness() {
            assert!(w.satisfies(&m));
        }
    }
}

#[test]
fn colorability_is_monotone_under_edge_removal() {
    // a hyperedge subset of a colorable MMPH is colorable; equivalently,
    // adding hyperedges never destroys noncolorability
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut checked = 0usize;
    for _ in 0..300 {
        let m = random_mmph(&mut rng, 18, 7);
        if m.edge_count() < 2 {
            continue;
        }
        if check_colorable(&m).witness().is_some() {
            for i in 0..m.edge_count() {
                let sub = m.without_edge(i);
                assert!(
                    check_colorable(&sub).witness().is_some(),
                    "sub-MMPH of a colorable MMPH must be colorable"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn nodes_explored_is_reported_and_budget_respected() {
    let m = parse_mmph("12,23,13.", 3).unwrap();
    let free = check_colorable(&m);
    assert!(free.is_ks());
    assert!(free.nodes_explored > 0);
    let v = check_colorable_with_budget(&m, Some(1));
    assert!(matches!(v.outcome, KsOutcome::Undecided) || v.decided());
    assert!(v.nodes_explored <= free.nodes_explored);
}

#[test]
fn handcrafted_witness_semantics() {
    // (I) two 1s in one hyperedge and (II) an all-0 hyperedge both fail
    let m = parse_mmph("12,23.", 3).unwrap();
    let l = |c| mmph::VertexLabel::new(c, 0).unwrap();
    let good = Coloring::new([l('1'), l('3')].into());
    assert!(good.satisfies(&m));
    let two_ones = Coloring::new([l('1'), l('2')].into());
    assert!(!two_ones.satisfies(&m));
    let all_zero = Coloring::new([l('2')].into());
    assert!(all_zero.satisfies(&m)); // 2 covers both hyperedges
    let empty = Coloring::new([].into());
    assert!(!empty.satisfies(&m));
}
