//! Scope functions and the aura operator calculus.
//!
//! A scope function assigns every point `x` an open set containing `x`,
//! its *aura*. The aura closure `{x : 𝔞(x) ∩ A ≠ ∅}` is an additive Čech
//! closure operator that is generally not idempotent; iterating it to a
//! fixpoint yields a Kuratowski closure. Both derived topologies sit below
//! the ambient one: `τ_𝔞^∞ ⊆ τ_𝔞 ⊆ τ`.

use crate::error::AuraError;
use crate::point_set::PointSet;
use crate::topology::{Topology, TopologyViolation, ENUMERATION_LIMIT};
use std::fmt;

/// The map `x ↦ 𝔞(x)` as a plain list indexed by point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScopeFunction {
    auras: Vec<PointSet>,
}

/// One broken scope axiom at a specific point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScopeViolation {
    /// `x ∉ 𝔞(x)`.
    PointOutsideAura(usize),
    /// `𝔞(x)` is not open in the companion topology.
    AuraNotOpen(usize),
}

impl fmt::Display for ScopeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScopeViolation::PointOutsideAura(x) => {
                write!(f, "point {x} is not a member of its own aura")
            }
            ScopeViolation::AuraNotOpen(x) => write!(f, "aura of point {x} is not an open set"),
        }
    }
}

impl ScopeFunction {
    pub fn new(auras: Vec<PointSet>) -> ScopeFunction {
        ScopeFunction { auras }
    }

    /// The trivial scope `𝔞(x) = X`.
    pub fn trivial(n: usize) -> ScopeFunction {
        ScopeFunction {
            auras: vec![PointSet::full(n); n],
        }
    }

    /// The discrete scope `𝔞(x) = {x}`.
    pub fn discrete(n: usize) -> ScopeFunction {
        ScopeFunction {
            auras: (0..n).map(|i| PointSet::singleton(n, i)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.auras.len()
    }

    pub fn is_empty(&self) -> bool {
        self.auras.is_empty()
    }

    pub fn aura(&self, point: usize) -> &PointSet {
        &self.auras[point]
    }

    pub fn auras(&self) -> &[PointSet] {
        &self.auras
    }

    /// True when every aura of `self` is contained in the matching aura of
    /// `coarser`.
    pub fn refines(&self, coarser: &ScopeFunction) -> bool {
        self.auras.len() == coarser.auras.len()
            && self
                .auras
                .iter()
                .zip(&coarser.auras)
                .all(|(fine, coarse)| fine.is_subset_of(coarse))
    }
}

/// Checks the scope axioms against a topology. A wrong assignment length is
/// an error; axiom failures are returned as data, first failing point first.
pub fn validate_scope(
    topology: &Topology,
    scope: &ScopeFunction,
) -> Result<Vec<ScopeViolation>, AuraError> {
    let n = topology.universe_size();
    if scope.auras.len() != n {
        return Err(AuraError::ScopeLengthMismatch {
            expected: n,
            got: scope.auras.len(),
        });
    }
    let mut violations = Vec::new();
    for (x, aura) in scope.auras.iter().enumerate() {
        if !aura.contains(x) {
            violations.push(ScopeViolation::PointOutsideAura(x));
        }
        if !topology.is_open(aura) {
            violations.push(ScopeViolation::AuraNotOpen(x));
        }
    }
    Ok(violations)
}

/// Structural classification of a scope function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScopeProfile {
    /// `𝔞(x) = X` everywhere.
    pub trivial: bool,
    /// `𝔞(x) = {x}` everywhere, each singleton open.
    pub discrete: bool,
    /// `y ∈ 𝔞(x)` implies `𝔞(y) ⊆ 𝔞(x)`.
    pub transitive: bool,
    /// `y ∈ 𝔞(x)` implies `x ∈ 𝔞(y)`.
    pub symmetric: bool,
}

/// The monotone chain of iterated aura closures up to its first fixpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureTrace {
    /// `A, cl_𝔞(A), cl_𝔞²(A), …` ending at the first stage that repeats.
    pub stages: Vec<PointSet>,
    /// Index of the fixpoint stage; at most the universe size.
    pub stabilized_at: usize,
}

impl ClosureTrace {
    /// The stabilized closure, i.e. the final stage.
    pub fn reach(&self) -> &PointSet {
        self.stages.last().expect("a trace has at least one stage")
    }
}

/// A topology paired with a validated scope function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuraSpace {
    topology: Topology,
    scope: ScopeFunction,
}

impl AuraSpace {
    /// Builds a space after checking both the topology axioms and the scope
    /// axioms; the error carries the first violation found.
    pub fn new(topology: Topology, scope: ScopeFunction) -> Result<AuraSpace, AuraError> {
        let mut messages: Vec<String> = topology
            .validate()
            .iter()
            .map(TopologyViolation::to_string)
            .collect();
        messages.extend(
            validate_scope(&topology, &scope)?
                .iter()
                .map(ScopeViolation::to_string),
        );
        if let Some(first) = messages.first() {
            return Err(AuraError::InvalidSpace(messages.len(), first.clone()));
        }
        Ok(AuraSpace { topology, scope })
    }

    pub fn universe_size(&self) -> usize {
        self.topology.universe_size()
    }

    pub fn topology(&self) -> &Topology {
        &self.topology
    }

    pub fn scope(&self) -> &ScopeFunction {
        &self.scope
    }

    pub fn aura(&self, point: usize) -> &PointSet {
        self.scope.aura(point)
    }

    /// Replaces the scope, revalidating against the same topology.
    pub fn with_scope(&self, scope: ScopeFunction) -> Result<AuraSpace, AuraError> {
        AuraSpace::new(self.topology.clone(), scope)
    }

    /// `cl_𝔞(A) = {x : 𝔞(x) ∩ A ≠ ∅}`.
    pub fn aura_closure(&self, a: &PointSet) -> PointSet {
        let n = self.universe_size();
        assert_eq!(a.universe_size(), n, "universe size mismatch");
        let mut out = PointSet::empty(n);
        for x in 0..n {
            if self.scope.aura(x).intersects(a) {
                out.insert(x);
            }
        }
        out
    }

    /// `int_𝔞(A) = {x ∈ A : 𝔞(x) ⊆ A}`.
    pub fn aura_interior(&self, a: &PointSet) -> PointSet {
        let n = self.universe_size();
        assert_eq!(a.universe_size(), n, "universe size mismatch");
        let mut out = PointSet::empty(n);
        for x in a.iter() {
            if self.scope.aura(x).is_subset_of(a) {
                out.insert(x);
            }
        }
        out
    }

    /// `k`-fold application of the aura closure; `k = 0` returns `A`.
    pub fn iterate_closure(&self, a: &PointSet, k: usize) -> PointSet {
        let mut current = a.clone();
        for _ in 0..k {
            let next = self.aura_closure(&current);
            if next == current {
                break;
            }
            current = next;
        }
        current
    }

    /// Iterates the aura closure from `A` until the first repeated stage.
    pub fn closure_trace(&self, a: &PointSet) -> ClosureTrace {
        let mut stages = vec![a.clone()];
        loop {
            let next = self.aura_closure(stages.last().unwrap());
            if &next == stages.last().unwrap() {
                return ClosureTrace {
                    stabilized_at: stages.len() - 1,
                    stages,
                };
            }
            stages.push(next);
        }
    }

    /// `cl_𝔞^∞(A)`: the stabilized iterated closure.
    pub fn infinity_closure(&self, a: &PointSet) -> PointSet {
        self.closure_trace(a).reach().clone()
    }

    /// Membership test for `τ_𝔞`: every member's aura stays inside the set.
    pub fn is_aura_open(&self, a: &PointSet) -> bool {
        assert_eq!(a.universe_size(), self.universe_size(), "universe size mismatch");
        a.iter().all(|x| self.scope.aura(x).is_subset_of(a))
    }

    /// The topology `τ_𝔞` of all aura-open sets, by exhaustive scan.
    ///
    /// Limited to enumerable universes; above the limit use
    /// [`AuraSpace::is_aura_open`] as the membership predicate instead.
    pub fn aura_topology(&self) -> Result<Topology, AuraError> {
        let n = self.universe_size();
        if n > ENUMERATION_LIMIT {
            return Err(AuraError::UniverseTooLarge {
                n,
                max: ENUMERATION_LIMIT,
                operation: "aura topology enumeration",
            });
        }
        let opens: Vec<PointSet> = PointSet::all_subsets(n)
            .filter(|a| self.is_aura_open(a))
            .collect();
        let t = Topology::new(n, opens);
        Ok(match self.topology.labels() {
            Some(labels) => t.with_labels(labels.to_vec()),
            None => t,
        })
    }

    /// The topology `τ_𝔞^∞` induced by the stabilized closure:
    /// sets whose complement is a fixpoint of `cl_𝔞^∞`.
    pub fn infinity_topology(&self) -> Result<Topology, AuraError> {
        let n = self.universe_size();
        if n > ENUMERATION_LIMIT {
            return Err(AuraError::UniverseTooLarge {
                n,
                max: ENUMERATION_LIMIT,
                operation: "stabilized-closure topology enumeration",
            });
        }
        let opens: Vec<PointSet> = PointSet::all_subsets(n)
            .filter(|a| {
                let complement = a.complement();
                self.infinity_closure(&complement) == complement
            })
            .collect();
        let t = Topology::new(n, opens);
        Ok(match self.topology.labels() {
            Some(labels) => t.with_labels(labels.to_vec()),
            None => t,
        })
    }

    /// Classifies the scope by direct quantifier scans.
    pub fn scope_profile(&self) -> ScopeProfile {
        let n = self.universe_size();
        let full = PointSet::full(n);
        let trivial = (0..n).all(|x| *self.aura(x) == full);
        let discrete = (0..n).all(|x| {
            let singleton = PointSet::singleton(n, x);
            *self.aura(x) == singleton && self.topology.is_open(&singleton)
        });
        let transitive = (0..n).all(|x| {
            self.aura(x)
                .iter()
                .all(|y| self.aura(y).is_subset_of(self.aura(x)))
        });
        let symmetric = (0..n).all(|x| self.aura(x).iter().all(|y| self.aura(y).contains(x)));
        ScopeProfile {
            trivial,
            discrete,
            transitive,
            symmetric,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(n: usize, xs: &[usize]) -> PointSet {
        PointSet::from_indices(n, xs.iter().copied())
    }

    /// Four points a..d, opens {∅,{a},{b},{a,b},{a,b,c},X}, auras nested
    /// {a} ⊆ {a,b} ⊆ {a,b,c} ⊆ X.
    fn nested_space() -> AuraSpace {
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
        AuraSpace::new(t, s).unwrap()
    }

    /// Discrete three-point space with auras {a,b}, {b,c}, {c}: the aura
    /// closure of {c} grows for two steps before stabilizing.
    fn chain_space() -> AuraSpace {
        let t = Topology::discrete(3);
        let s = ScopeFunction::new(vec![pts(3, &[0, 1]), pts(3, &[1, 2]), pts(3, &[2])]);
        AuraSpace::new(t, s).unwrap()
    }

    #[test]
    fn nested_space_scope_is_valid() {
        let space = nested_space();
        assert!(validate_scope(space.topology(), space.scope()).unwrap().is_empty());
    }

    #[test]
    fn trivial_scope_is_valid_on_any_topology() {
        let t = Topology::indiscrete(4);
        assert!(validate_scope(&t, &ScopeFunction::trivial(4)).unwrap().is_empty());
    }

    #[test]
    fn scope_missing_own_point_is_reported() {
        let t = Topology::discrete(2);
        let s = ScopeFunction::new(vec![pts(2, &[1]), pts(2, &[1])]);
        assert_eq!(
            validate_scope(&t, &s).unwrap(),
            vec![ScopeViolation::PointOutsideAura(0)]
        );
    }

    #[test]
    fn scope_length_mismatch_is_an_error() {
        let t = Topology::discrete(3);
        let s = ScopeFunction::new(vec![pts(3, &[0])]);
        assert_eq!(
            validate_scope(&t, &s),
            Err(AuraError::ScopeLengthMismatch { expected: 3, got: 1 })
        );
    }

    #[test]
    fn non_open_aura_is_reported() {
        let t = Topology::indiscrete(3);
        let s = ScopeFunction::new(vec![pts(3, &[0, 1]), PointSet::full(3), PointSet::full(3)]);
        assert_eq!(validate_scope(&t, &s).unwrap(), vec![ScopeViolation::AuraNotOpen(0)]);
    }

    #[test]
    fn aura_closure_of_chain_space() {
        let space = chain_space();
        assert_eq!(space.aura_closure(&pts(3, &[2])), pts(3, &[1, 2]));
        assert_eq!(space.aura_closure(&PointSet::empty(3)), PointSet::empty(3));
    }

    #[test]
    fn aura_closure_is_not_idempotent_on_chain_space() {
        let space = chain_space();
        let once = space.aura_closure(&pts(3, &[2]));
        let twice = space.aura_closure(&once);
        assert_eq!(once, pts(3, &[1, 2]));
        assert_eq!(twice, PointSet::full(3));
        assert_ne!(once, twice);
    }

    #[test]
    fn aura_interior_of_nested_space() {
        let space = nested_space();
        // Direct scan oracle: auras of a and b sit inside {a,b}.
        assert_eq!(space.aura_interior(&pts(4, &[0, 1])), pts(4, &[0, 1]));
        assert_eq!(space.aura_interior(&PointSet::full(4)), PointSet::full(4));
    }

    #[test]
    fn aura_interior_duality() {
        let space = chain_space();
        for a in PointSet::all_subsets(3) {
            let direct = space.aura_interior(&a);
            let dual = a.difference(&space.aura_closure(&a.complement()));
            assert_eq!(direct, dual);
        }
    }

    #[test]
    fn iterate_closure_reaches_and_keeps_fixpoint() {
        let space = chain_space();
        let a = pts(3, &[2]);
        assert_eq!(space.iterate_closure(&a, 0), a);
        assert_eq!(space.iterate_closure(&a, 2), PointSet::full(3));
        assert_eq!(space.iterate_closure(&a, 5), PointSet::full(3));
    }

    #[test]
    fn closure_trace_of_chain_space() {
        let space = chain_space();
        let trace = space.closure_trace(&pts(3, &[2]));
        assert_eq!(trace.stages, vec![pts(3, &[2]), pts(3, &[1, 2]), PointSet::full(3)]);
        assert_eq!(trace.stabilized_at, 2);
        assert_eq!(*trace.reach(), PointSet::full(3));
    }

    #[test]
    fn closure_trace_with_discrete_scope_is_immediate() {
        let t = Topology::discrete(4);
        let space = AuraSpace::new(t, ScopeFunction::discrete(4)).unwrap();
        let a = pts(4, &[1, 3]);
        let trace = space.closure_trace(&a);
        assert_eq!(trace.stages, vec![a]);
        assert_eq!(trace.stabilized_at, 0);
    }

    #[test]
    fn closure_trace_with_trivial_scope_saturates_in_one_step() {
        let t = Topology::discrete(3);
        let space = AuraSpace::new(t, ScopeFunction::trivial(3)).unwrap();
        let trace = space.closure_trace(&pts(3, &[0]));
        assert_eq!(trace.stages, vec![pts(3, &[0]), PointSet::full(3)]);
        assert_eq!(trace.stabilized_at, 1);
    }

    #[test]
    fn aura_topology_of_nested_space() {
        let space = nested_space();
        let expected = vec![
            pts(4, &[]),
            pts(4, &[0]),
            pts(4, &[0, 1]),
            pts(4, &[0, 1, 2]),
            PointSet::full(4),
        ];
        assert_eq!(space.aura_topology().unwrap().opens().unwrap(), expected);
    }

    #[test]
    fn trivial_scope_collapses_aura_topology() {
        let space = AuraSpace::new(Topology::discrete(3), ScopeFunction::trivial(3)).unwrap();
        assert_eq!(
            space.aura_topology().unwrap().opens().unwrap(),
            vec![PointSet::empty(3), PointSet::full(3)]
        );
    }

    #[test]
    fn discrete_scope_keeps_full_power_set() {
        let space = AuraSpace::new(Topology::discrete(3), ScopeFunction::discrete(3)).unwrap();
        assert_eq!(space.aura_topology().unwrap().opens().unwrap().len(), 8);
    }

    #[test]
    fn infinity_topology_of_nested_space() {
        let space = nested_space();
        let expected = vec![
            pts(4, &[]),
            pts(4, &[0]),
            pts(4, &[0, 1]),
            pts(4, &[0, 1, 2]),
            PointSet::full(4),
        ];
        assert_eq!(space.infinity_topology().unwrap().opens().unwrap(), expected);
    }

    #[test]
    fn scope_profile_of_chain_space() {
        let profile = chain_space().scope_profile();
        assert!(!profile.trivial);
        assert!(!profile.discrete);
        assert!(!profile.transitive);
        assert!(!profile.symmetric);
    }

    #[test]
    fn scope_profile_of_trivial_scope() {
        let space = AuraSpace::new(Topology::discrete(3), ScopeFunction::trivial(3)).unwrap();
        let profile = space.scope_profile();
        assert!(profile.trivial && profile.transitive && profile.symmetric);
        assert!(!profile.discrete);
    }

    #[test]
    fn scope_profile_of_discrete_scope() {
        let space = AuraSpace::new(Topology::discrete(3), ScopeFunction::discrete(3)).unwrap();
        let profile = space.scope_profile();
        assert!(profile.discrete && profile.transitive && profile.symmetric);
        assert!(!profile.trivial);
    }

    #[test]
    fn invalid_space_construction_fails() {
        let t = Topology::indiscrete(2);
        let s = ScopeFunction::new(vec![pts(2, &[0]), PointSet::full(2)]);
        assert!(AuraSpace::new(t, s).is_err());
    }
}
