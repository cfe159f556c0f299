//! Separation axioms evaluated against the aura topology.
//!
//! Because `τ_𝔞 ⊆ τ`, a space can satisfy a classical axiom while its aura
//! variant fails: the trivial scope on a discrete space separates nothing.
//! Flags are computed by exhaustive search over the relevant families, and
//! every failing axiom carries the lexicographically first witness.

use crate::error::AuraError;
use crate::point_set::PointSet;
use crate::scope::AuraSpace;
use crate::topology::{Topology, ENUMERATION_LIMIT};

const SEPARATION_LIMIT: usize = 12;

/// Separation flags for the aura topology and the ambient topology, with a
/// witness for each failing axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationProfile {
    pub a_t0: bool,
    pub a_t1: bool,
    pub a_t2: bool,
    pub a_regular: bool,
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
    pub a_t0_witness: Option<(usize, usize)>,
    pub a_t1_witness: Option<(usize, usize)>,
    pub a_t2_witness: Option<(usize, usize)>,
    /// A point and an aura-closed set it cannot be separated from.
    pub a_regular_witness: Option<(usize, PointSet)>,
    pub t0_witness: Option<(usize, usize)>,
    pub t1_witness: Option<(usize, usize)>,
    pub t2_witness: Option<(usize, usize)>,
}

fn separates_one_way(family: &[PointSet], x: usize, y: usize) -> bool {
    family.iter().any(|u| u.contains(x) && !u.contains(y))
}

fn separates_disjointly(family: &[PointSet], x: usize, y: usize) -> bool {
    family.iter().any(|u| {
        u.contains(x)
            && !u.contains(y)
            && family
                .iter()
                .any(|v| v.contains(y) && !v.contains(x) && !u.intersects(v))
    })
}

/// First pair failing the predicate, ordered `(x, y)` with `x < y`.
fn first_failing_pair(
    n: usize,
    mut ok: impl FnMut(usize, usize) -> bool,
) -> Option<(usize, usize)> {
    for x in 0..n {
        for y in x + 1..n {
            if !ok(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

fn point_separation(
    family: &[PointSet],
    n: usize,
) -> (
    Option<(usize, usize)>,
    Option<(usize, usize)>,
    Option<(usize, usize)>,
) {
    let t0 = first_failing_pair(n, |x, y| {
        separates_one_way(family, x, y) || separates_one_way(family, y, x)
    });
    let t1 = first_failing_pair(n, |x, y| {
        separates_one_way(family, x, y) && separates_one_way(family, y, x)
    });
    let t2 = first_failing_pair(n, |x, y| separates_disjointly(family, x, y));
    (t0, t1, t2)
}

fn regularity_witness(family: &[PointSet], n: usize) -> Option<(usize, PointSet)> {
    let closed: Vec<PointSet> = {
        let mut c: Vec<PointSet> = family.iter().map(PointSet::complement).collect();
        c.sort();
        c.dedup();
        c
    };
    for x in 0..n {
        for f in &closed {
            if f.contains(x) {
                continue;
            }
            let separated = family.iter().any(|u| {
                u.contains(x)
                    && family
                        .iter()
                        .any(|v| f.is_subset_of(v) && !u.intersects(v))
            });
            if !separated {
                return Some((x, f.clone()));
            }
        }
    }
    None
}

/// Evaluates all seven flags by exhaustive search; requires a universe small
/// enough to enumerate the aura topology.
pub fn separation_profile(space: &AuraSpace) -> Result<SeparationProfile, AuraError> {
    let n = space.universe_size();
    if n > SEPARATION_LIMIT {
        return Err(AuraError::UniverseTooLarge {
            n,
            max: SEPARATION_LIMIT,
            operation: "separation profiling",
        });
    }
    let aura_family = space.aura_topology()?.opens()?;
    let open_family = space.topology().opens()?;

    let (a_t0_witness, a_t1_witness, a_t2_witness) = point_separation(&aura_family, n);
    let (t0_witness, t1_witness, t2_witness) = point_separation(&open_family, n);
    let a_regular_witness = regularity_witness(&aura_family, n);

    Ok(SeparationProfile {
        a_t0: a_t0_witness.is_none(),
        a_t1: a_t1_witness.is_none(),
        a_t2: a_t2_witness.is_none(),
        a_regular: a_regular_witness.is_none(),
        t0: t0_witness.is_none(),
        t1: t1_witness.is_none(),
        t2: t2_witness.is_none(),
        a_t0_witness,
        a_t1_witness,
        a_t2_witness,
        a_regular_witness,
        t0_witness,
        t1_witness,
        t2_witness,
    })
}

/// The singleton characterization of the aura T₁ axiom: every `X \ {x}`
/// must be aura-open. Returns the flag plus a per-point report.
pub fn t1_via_singletons(space: &AuraSpace) -> Result<(bool, Vec<(usize, bool)>), AuraError> {
    let n = space.universe_size();
    if n > ENUMERATION_LIMIT {
        return Err(AuraError::UniverseTooLarge {
            n,
            max: ENUMERATION_LIMIT,
            operation: "singleton closedness scan",
        });
    }
    let per_point: Vec<(usize, bool)> = (0..n)
        .map(|x| {
            let co_singleton = PointSet::singleton(n, x).complement();
            (x, space.is_aura_open(&co_singleton))
        })
        .collect();
    let all = per_point.iter().all(|&(_, closed)| closed);
    Ok((all, per_point))
}

/// Convenience: classical separation flags of a bare topology.
pub fn classical_separation(topology: &Topology) -> Result<(bool, bool, bool), AuraError> {
    let n = topology.universe_size();
    let family = topology.opens()?;
    let (t0, t1, t2) = point_separation(&family, n);
    Ok((t0.is_none(), t1.is_none(), t2.is_none()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scope::ScopeFunction;
    use crate::topology::Topology;

    fn pts(n: usize, xs: &[usize]) -> PointSet {
        PointSet::from_indices(n, xs.iter().copied())
    }

    #[test]
    fn trivial_scope_on_discrete_space_fails_aura_t0() {
        let space = AuraSpace::new(Topology::discrete(3), ScopeFunction::trivial(3)).unwrap();
        let profile = separation_profile(&space).unwrap();
        assert!(!profile.a_t0);
        assert_eq!(profile.a_t0_witness, Some((0, 1)));
        assert!(profile.t2, "the ambient discrete topology is Hausdorff");
    }

    #[test]
    fn discrete_scope_is_aura_hausdorff_and_regular() {
        let space = AuraSpace::new(Topology::discrete(3), ScopeFunction::discrete(3)).unwrap();
        let profile = separation_profile(&space).unwrap();
        assert!(profile.a_t2);
        assert!(profile.a_regular);
        assert!(profile.a_t1 && profile.a_t0);
    }

    #[test]
    fn partition_scope_fails_aura_t0_with_first_pair() {
        // τ_𝔞 = {∅, {a,b}, X}: a and b are never told apart.
        let t = Topology::new(
            4,
            vec![pts(4, &[]), pts(4, &[0, 1]), pts(4, &[2, 3]), PointSet::full(4)],
        );
        let s = ScopeFunction::new(vec![
            pts(4, &[0, 1]),
            pts(4, &[0, 1]),
            pts(4, &[2, 3]),
            PointSet::full(4),
        ]);
        let space = AuraSpace::new(t, s).unwrap();
        let profile = separation_profile(&space).unwrap();
        assert!(!profile.a_t0);
        assert_eq!(profile.a_t0_witness, Some((0, 1)));
    }

    #[test]
    fn t1_singleton_scan_matches_profile() {
        for space in [
            AuraSpace::new(Topology::discrete(3), ScopeFunction::discrete(3)).unwrap(),
            AuraSpace::new(Topology::discrete(3), ScopeFunction::trivial(3)).unwrap(),
        ] {
            let (flag, _) = t1_via_singletons(&space).unwrap();
            assert_eq!(flag, separation_profile(&space).unwrap().a_t1);
        }
    }

    #[test]
    fn trivial_scope_closes_no_singleton() {
        let space = AuraSpace::new(Topology::discrete(3), ScopeFunction::trivial(3)).unwrap();
        let (flag, per_point) = t1_via_singletons(&space).unwrap();
        assert!(!flag);
        assert!(per_point.iter().all(|&(_, closed)| !closed));
    }

    #[test]
    fn nested_aura_space_fails_singleton_closedness() {
        // Auras {a} ⊆ {a,b} ⊆ {a,b,c} ⊆ X: removing a breaks b's aura.
        let t = Topology::new(
            4,
            vec![
                pts(4, &[]),
                pts(4, &[0]),
                pts(4, &[1]),
                pts(4, &[0, 1]),
                pts(4, &[0, 1, 2]),
                PointSet::full(4),
            ],
        );
        let s = ScopeFunction::new(vec![
            pts(4, &[0]),
            pts(4, &[0, 1]),
            pts(4, &[0, 1, 2]),
            PointSet::full(4),
        ]);
        let space = AuraSpace::new(t, s).unwrap();
        let (flag, per_point) = t1_via_singletons(&space).unwrap();
        assert!(!flag);
        assert_eq!(per_point[0], (0, false));
    }

    #[test]
    fn hierarchy_of_aura_axioms_is_monotone() {
        let spaces = [
            AuraSpace::new(Topology::discrete(4), ScopeFunction::discrete(4)).unwrap(),
            AuraSpace::new(Topology::discrete(4), ScopeFunction::trivial(4)).unwrap(),
        ];
        for space in spaces {
            let p = separation_profile(&space).unwrap();
            assert!(!p.a_t2 || p.a_t1);
            assert!(!p.a_t1 || p.a_t0);
        }
    }
}
