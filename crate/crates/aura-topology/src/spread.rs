//! Forward spread along auras.
//!
//! One spread step replaces a set by the union of its members' auras; this
//! is the forward direction of influence, distinct from the aura closure,
//! which detects backwards (`cl_𝔞({a})` can be `{a}` while the spread of
//! `{a}` already covers `𝔞(a)`). Iteration stabilizes within `|X|` steps.
//! Interventions shrink auras and therefore never enlarge the reach.

use crate::error::AuraError;
use crate::point_set::PointSet;
use crate::scope::{AuraSpace, ScopeFunction};

/// The monotone spread sequence from a seed set to its first fixpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpreadTrace {
    /// `A₀, S(A₀), S²(A₀), …` ending at the first repeated stage.
    pub stages: Vec<PointSet>,
    /// Index of the fixpoint stage; at most the universe size.
    pub stabilized_at: usize,
    /// The final stage.
    pub reach: PointSet,
    /// Complement of the reach.
    pub unreached: PointSet,
}

/// `S(A) = ⋃_{x ∈ A} 𝔞(x)`.
pub fn spread_step(space: &AuraSpace, a: &PointSet) -> PointSet {
    let n = space.universe_size();
    assert_eq!(a.universe_size(), n, "universe size mismatch");
    let mut out = PointSet::empty(n);
    for x in a.iter() {
        out = out.union(space.aura(x));
    }
    out
}

/// Iterates the spread step from `a0` until the first fixpoint.
pub fn spread_trace(space: &AuraSpace, a0: &PointSet) -> SpreadTrace {
    let mut stages = vec![a0.clone()];
    loop {
        let next = spread_step(space, stages.last().unwrap());
        if &next == stages.last().unwrap() {
            let reach = next;
            return SpreadTrace {
                stabilized_at: stages.len() - 1,
                unreached: reach.complement(),
                reach,
                stages,
            };
        }
        stages.push(next);
    }
}

/// Replaces the aura of every quarantined point by its singleton. Each
/// singleton must be open, otherwise the result would not be a scope
/// function; no silent substitute is attempted.
pub fn apply_quarantine(space: &AuraSpace, quarantined: &PointSet) -> Result<AuraSpace, AuraError> {
    let n = space.universe_size();
    assert_eq!(quarantined.universe_size(), n, "universe size mismatch");
    for x in quarantined.iter() {
        if !space.topology().is_open(&PointSet::singleton(n, x)) {
            return Err(AuraError::QuarantineNotOpen { point: x });
        }
    }
    let auras = (0..n)
        .map(|x| {
            if quarantined.contains(x) {
                PointSet::singleton(n, x)
            } else {
                space.aura(x).clone()
            }
        })
        .collect();
    space.with_scope(ScopeFunction::new(auras))
}

/// Replaces the whole scope by a pointwise-smaller one. The replacement
/// must be a valid scope for the same topology and contained in the
/// original aura at every point.
pub fn apply_distancing(
    space: &AuraSpace,
    replacement: ScopeFunction,
) -> Result<AuraSpace, AuraError> {
    if replacement.len() != space.universe_size() {
        return Err(AuraError::ScopeLengthMismatch {
            expected: space.universe_size(),
            got: replacement.len(),
        });
    }
    if let Some(point) = replacement
        .auras()
        .iter()
        .zip(space.scope().auras())
        .position(|(new, old)| !new.is_subset_of(old))
    {
        return Err(AuraError::NotARefinement { point });
    }
    space.with_scope(replacement)
}

/// A distinct spread fixpoint together with every point generating it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpreadComponent {
    pub reach: PointSet,
    pub generators: PointSet,
}

/// The distinct single-seed reach sets `{S^∞({x}) : x ∈ X}`.
///
/// Components may overlap when the scope is not symmetric; no partition
/// structure is claimed. Components are ordered by their first generator.
pub fn spread_components(space: &AuraSpace) -> Vec<SpreadComponent> {
    let n = space.universe_size();
    let mut components: Vec<SpreadComponent> = Vec::new();
    for x in 0..n {
        let reach = spread_trace(space, &PointSet::singleton(n, x)).reach;
        match components.iter_mut().find(|c| c.reach == reach) {
            Some(component) => component.generators.insert(x),
            None => components.push(SpreadComponent {
                reach,
                generators: PointSet::singleton(n, x),
            }),
        }
    }
    components
}
