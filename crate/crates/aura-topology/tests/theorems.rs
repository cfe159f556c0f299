//! Fixture-level checks of the operator calculus: every named space in the
//! catalog reproduces the values worked out for it by hand.

use aura_topology::classes::{classify_set, verify_hierarchy, ClassName};
use aura_topology::rough::{approximate, refinement_report, Ratio};
use aura_topology::separation::{separation_profile, t1_via_singletons};
use aura_topology::spread::{apply_quarantine, spread_step, spread_trace};
use aura_topology::{fixture_space, PointSet};

fn pts(n: usize, xs: &[usize]) -> PointSet {
    PointSet::from_indices(n, xs.iter().copied())
}

#[test]
fn basic_space_aura_topology_is_the_nested_chain() {
    let space = fixture_space("finite_aura_basic").unwrap();
    let opens = space.aura_topology().unwrap().opens().unwrap();
    assert_eq!(
        opens,
        vec![
            pts(4, &[]),
            pts(4, &[0]),
            pts(4, &[0, 1]),
            pts(4, &[0, 1, 2]),
            PointSet::full(4),
        ]
    );
    // {b} is open but not aura-open: the chain is strictly coarser.
    assert!(space.topology().is_open(&pts(4, &[1])));
    assert!(!space.is_aura_open(&pts(4, &[1])));
}

#[test]
fn basic_space_interior_and_closure() {
    let space = fixture_space("finite_aura_basic").unwrap();
    assert_eq!(space.topology().interior(&pts(4, &[0, 2])), pts(4, &[0]));
    assert_eq!(space.topology().closure(&pts(4, &[0])), pts(4, &[0, 2, 3]));
}

#[test]
fn non_idempotent_space_needs_two_steps() {
    let space = fixture_space("non_idempotent").unwrap();
    let c = pts(3, &[2]);
    assert_eq!(space.aura_closure(&c), pts(3, &[1, 2]));
    assert_eq!(space.iterate_closure(&c, 2), PointSet::full(3));
    let trace = space.closure_trace(&c);
    assert_eq!(trace.stabilized_at, 2);
    assert_eq!(trace.stages, vec![c, pts(3, &[1, 2]), PointSet::full(3)]);
}

#[test]
fn closure_gap_fixtures_compare_the_two_closures() {
    // Coarse space: both closures send {b} to {b,c}.
    let coarse = fixture_space("closure_gap_coarse").unwrap();
    let b = pts(3, &[1]);
    assert_eq!(coarse.topology().closure(&b), pts(3, &[1, 2]));
    assert_eq!(coarse.aura_closure(&b), pts(3, &[1, 2]));

    // Discrete space: the aura closure strictly exceeds the topological one,
    // and also escapes the union of the set's own auras.
    let discrete = fixture_space("closure_gap_discrete").unwrap();
    assert_eq!(discrete.topology().closure(&b), b);
    assert_eq!(discrete.aura_closure(&b), pts(3, &[0, 1]));
    assert_eq!(spread_step(&discrete, &b), b);
    assert!(!discrete.aura_closure(&b).is_subset_of(&spread_step(&discrete, &b)));
}

#[test]
fn strictness_fixtures_reproduce_their_class_flags() {
    let semi = fixture_space("semi_not_pre").unwrap();
    let profile = classify_set(&semi, &pts(4, &[0, 1]));
    assert!(profile.a_semi_open && !profile.a_pre_open && !profile.a_alpha_open);

    let pre = fixture_space("pre_not_semi").unwrap();
    let profile = classify_set(&pre, &pts(4, &[0, 2]));
    assert!(profile.a_pre_open && !profile.a_semi_open);
}

#[test]
fn hierarchy_reports_on_the_strictness_fixtures() {
    let report = verify_hierarchy(&fixture_space("semi_not_pre").unwrap()).unwrap();
    assert!(report.all_edges_hold());
    assert_eq!(report.semi_not_pre, Some(pts(4, &[0, 1])));

    let report = verify_hierarchy(&fixture_space("pre_not_semi").unwrap()).unwrap();
    assert!(report.all_edges_hold());
    assert!(report.pre_not_semi.is_some());
}

#[test]
fn medical_space_approximation_numbers() {
    let space = fixture_space("medical").unwrap();
    let target = pts(6, &[0, 1, 3, 4]);
    assert_eq!(space.aura_closure(&target), PointSet::full(6));
    assert_eq!(space.aura_interior(&target), pts(6, &[0, 3]));
    let report = approximate(&space, &target);
    assert_eq!(report.lower, pts(6, &[0, 3]));
    assert_eq!(report.upper, PointSet::full(6));
    assert_eq!(report.boundary.len(), 4);
    assert_eq!(report.accuracy, Ratio::new(2, 6));
}

#[test]
fn refined_medical_space_recovers_the_lower_approximation() {
    let coarse = fixture_space("medical").unwrap();
    let fine = fixture_space("medical_refined").unwrap();
    let target = pts(6, &[0, 1, 3, 4]);
    let comparison = refinement_report(&coarse, &fine, &target).unwrap();
    assert_eq!(comparison.fine.lower, target);
    assert!(comparison.lower_grows && comparison.upper_shrinks && comparison.boundary_shrinks);
    assert_eq!(comparison.coarse.boundary.len(), 4);
    assert_eq!(comparison.fine.boundary.len(), 2);
}

#[test]
fn trivial_scope_fixture_separates_classically_but_not_aura_wise() {
    let space = fixture_space("trivial_on_discrete").unwrap();
    let profile = separation_profile(&space).unwrap();
    assert!(profile.t2);
    assert!(!profile.a_t0);
    assert_eq!(profile.a_t0_witness, Some((0, 1)));
    assert_eq!(
        space.aura_topology().unwrap().opens().unwrap(),
        vec![PointSet::empty(3), PointSet::full(3)]
    );
}

#[test]
fn discrete_scope_fixture_is_aura_hausdorff_and_regular() {
    let space = fixture_space("discrete_aura").unwrap();
    let profile = separation_profile(&space).unwrap();
    assert!(profile.a_t2 && profile.a_regular);
    let (t1, _) = t1_via_singletons(&space).unwrap();
    assert!(t1);
}

#[test]
fn epidemic_fixture_trace_and_isolated_point() {
    let space = fixture_space("epidemic_seven").unwrap();
    let trace = spread_trace(&space, &pts(7, &[0]));
    assert_eq!(trace.stabilized_at, 4);
    assert_eq!(trace.reach, pts(7, &[0, 1, 2, 3, 4, 5]));
    assert_eq!(trace.unreached, pts(7, &[6]));

    // Backward detection and forward spread disagree on the seed.
    assert_eq!(space.aura_closure(&pts(7, &[0])), pts(7, &[0]));
    assert_eq!(spread_step(&space, &pts(7, &[0])), pts(7, &[0, 1]));
}

#[test]
fn quarantining_the_first_contact_caps_the_outbreak() {
    let space = fixture_space("epidemic_seven").unwrap();
    let restricted = apply_quarantine(&space, &pts(7, &[1])).unwrap();
    let trace = spread_trace(&restricted, &pts(7, &[0]));
    assert_eq!(trace.reach, pts(7, &[0, 1]));
}

#[test]
fn medical_space_honors_the_cover_base_property() {
    let space = fixture_space("medical").unwrap();
    for open in space.aura_topology().unwrap().opens().unwrap() {
        let mut union = PointSet::empty(6);
        for x in open.iter() {
            union = union.union(space.aura(x));
        }
        assert_eq!(union, open);
    }
}

#[test]
fn aura_open_class_matches_aura_topology_on_every_space_fixture() {
    for (name, _) in aura_topology::fixture_names() {
        if let Ok(space) = fixture_space(name) {
            if space.universe_size() > 12 {
                continue;
            }
            assert_eq!(
                aura_topology::enumerate_class(&space, ClassName::AOpen).unwrap(),
                space.aura_topology().unwrap().opens().unwrap(),
                "{name}"
            );
        }
    }
}
