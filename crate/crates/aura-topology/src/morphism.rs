//! Maps between aura spaces and their continuity taxonomy.
//!
//! Plain aura continuity pulls aura-open sets back to aura-open sets; the
//! four generalized notions quantify over the target's full topology and
//! classify each preimage in the source space. The quantifier asymmetry is
//! deliberate and observable in tests.

use crate::classes::classify_set;
use crate::error::AuraError;
use crate::point_set::PointSet;
use crate::scope::AuraSpace;
use crate::topology::ENUMERATION_LIMIT;
use std::fmt;

/// A total function between the point sets of two aura spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceMap {
    source: AuraSpace,
    target: AuraSpace,
    mapping: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapViolation {
    LengthMismatch { expected: usize, got: usize },
    ValueOutOfRange { point: usize, value: usize, target_size: usize },
}

impl fmt::Display for MapViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapViolation::LengthMismatch { expected, got } => {
                write!(f, "mapping has {got} entries for a source of {expected} points")
            }
            MapViolation::ValueOutOfRange { point, value, target_size } => write!(
                f,
                "point {point} maps to {value}, outside the target universe of {target_size} points"
            ),
        }
    }
}

/// Continuity flags of one map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContinuityProfile {
    /// Preimages of target opens are open.
    pub continuous: bool,
    /// Preimages of target aura-opens are aura-open.
    pub a_continuous: bool,
    /// Preimages of target opens are aura-semi-open.
    pub a_semi: bool,
    /// Preimages of target opens are aura-pre-open.
    pub a_pre: bool,
    /// Preimages of target opens are aura-α-open.
    pub a_alpha: bool,
    /// Preimages of target opens are aura-β-open.
    pub a_beta: bool,
}

impl SpaceMap {
    /// Stores the parts without validation; run [`SpaceMap::validate`] to
    /// obtain violations as data.
    pub fn new(source: AuraSpace, target: AuraSpace, mapping: Vec<usize>) -> SpaceMap {
        SpaceMap {
            source,
            target,
            mapping,
        }
    }

    pub fn identity(space: AuraSpace) -> SpaceMap {
        let mapping = (0..space.universe_size()).collect();
        SpaceMap::new(space.clone(), space, mapping)
    }

    pub fn source(&self) -> &AuraSpace {
        &self.source
    }

    pub fn target(&self) -> &AuraSpace {
        &self.target
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn validate(&self) -> Vec<MapViolation> {
        let mut violations = Vec::new();
        let expected = self.source.universe_size();
        if self.mapping.len() != expected {
            violations.push(MapViolation::LengthMismatch {
                expected,
                got: self.mapping.len(),
            });
        }
        let target_size = self.target.universe_size();
        for (point, &value) in self.mapping.iter().enumerate() {
            if value >= target_size {
                violations.push(MapViolation::ValueOutOfRange {
                    point,
                    value,
                    target_size,
                });
            }
        }
        violations
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// `f⁻¹(V) = {x : f(x) ∈ V}`.
    pub fn preimage(&self, v: &PointSet) -> PointSet {
        assert_eq!(
            v.universe_size(),
            self.target.universe_size(),
            "universe size mismatch"
        );
        let n = self.source.universe_size();
        let mut out = PointSet::empty(n);
        for x in 0..n {
            if self.mapping.get(x).is_some_and(|&y| v.contains(y)) {
                out.insert(x);
            }
        }
        out
    }

    /// Computes all six continuity flags by scanning the relevant target
    /// families and classifying each preimage in the source space.
    pub fn continuity_profile(&self) -> Result<ContinuityProfile, AuraError> {
        if !self.is_valid() {
            return Err(AuraError::InvalidMap);
        }
        let target_n = self.target.universe_size();
        if target_n > ENUMERATION_LIMIT || self.source.universe_size() > ENUMERATION_LIMIT {
            return Err(AuraError::UniverseTooLarge {
                n: target_n.max(self.source.universe_size()),
                max: ENUMERATION_LIMIT,
                operation: "continuity profiling",
            });
        }

        let mut profile = ContinuityProfile {
            continuous: true,
            a_continuous: true,
            a_semi: true,
            a_pre: true,
            a_alpha: true,
            a_beta: true,
        };

        for v in self.target.aura_topology()?.opens()? {
            if !self.source.is_aura_open(&self.preimage(&v)) {
                profile.a_continuous = false;
                break;
            }
        }

        for v in self.target.topology().opens()? {
            let back = self.preimage(&v);
            let classes = classify_set(&self.source, &back);
            profile.continuous &= self.source.topology().is_open(&back);
            profile.a_semi &= classes.a_semi_open;
            profile.a_pre &= classes.a_pre_open;
            profile.a_alpha &= classes.a_alpha_open;
            profile.a_beta &= classes.a_beta_open;
        }
        Ok(profile)
    }
}

/// Pointwise composition: `compose(f, g)` is the map `x ↦ g(f(x))` and
/// requires `f`'s target to be `g`'s source.
pub fn compose(f: &SpaceMap, g: &SpaceMap) -> Result<SpaceMap, AuraError> {
    if f.target != g.source {
        return Err(AuraError::SpaceMismatch);
    }
    if !f.is_valid() || !g.is_valid() {
        return Err(AuraError::InvalidMap);
    }
    let mapping = f.mapping.iter().map(|&y| g.mapping[y]).collect();
    Ok(SpaceMap::new(f.source.clone(), g.target.clone(), mapping))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scope::ScopeFunction;
    use crate::topology::Topology;

    fn pts(n: usize, xs: &[usize]) -> PointSet {
        PointSet::from_indices(n, xs.iter().copied())
    }

    /// Partition opens {∅,{a,b},{c,d},X} with auras {a,b},{a,b},{c,d},X.
    fn partition_space() -> AuraSpace {
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
        AuraSpace::new(t, s).unwrap()
    }

    #[test]
    fn identity_map_is_valid_and_fully_continuous() {
        let f = SpaceMap::identity(partition_space());
        assert!(f.is_valid());
        let profile = f.continuity_profile().unwrap();
        assert!(profile.continuous && profile.a_continuous);
        assert!(profile.a_semi && profile.a_pre && profile.a_alpha && profile.a_beta);
    }

    #[test]
    fn out_of_range_value_is_reported() {
        let space = partition_space();
        let f = SpaceMap::new(space.clone(), space, vec![0, 1, 2, 9]);
        assert_eq!(
            f.validate(),
            vec![MapViolation::ValueOutOfRange { point: 3, value: 9, target_size: 4 }]
        );
    }

    #[test]
    fn short_mapping_is_reported() {
        let space = partition_space();
        let f = SpaceMap::new(space.clone(), space, vec![0, 1]);
        assert!(f
            .validate()
            .contains(&MapViolation::LengthMismatch { expected: 4, got: 2 }));
    }

    #[test]
    fn preimage_under_identity_and_constant_maps() {
        let space = partition_space();
        let id = SpaceMap::identity(space.clone());
        let v = pts(4, &[1, 2]);
        assert_eq!(id.preimage(&v), v);

        let constant = SpaceMap::new(space.clone(), space, vec![2; 4]);
        assert_eq!(constant.preimage(&pts(4, &[2])), PointSet::full(4));
        assert_eq!(constant.preimage(&pts(4, &[0, 1])), PointSet::empty(4));
    }

    #[test]
    fn folding_self_map_preimage_by_direct_scan() {
        // a↦a, b↦a, c↦c, d↦c on the partition space.
        let space = partition_space();
        let f = SpaceMap::new(space.clone(), space, vec![0, 0, 2, 2]);
        assert_eq!(f.preimage(&pts(4, &[0, 1])), pts(4, &[0, 1]));
    }

    #[test]
    fn folding_self_map_is_aura_continuous() {
        // τ_𝔞 here is {∅, {a,b}, X}; all three preimages are aura-open.
        let space = partition_space();
        let f = SpaceMap::new(space.clone(), space, vec![0, 0, 2, 2]);
        assert!(f.continuity_profile().unwrap().a_continuous);
    }

    #[test]
    fn constant_map_is_fully_continuous() {
        let space = partition_space();
        let constant = SpaceMap::new(space.clone(), space, vec![0; 4]);
        let profile = constant.continuity_profile().unwrap();
        assert!(profile.continuous && profile.a_continuous);
        assert!(profile.a_semi && profile.a_pre && profile.a_alpha && profile.a_beta);
    }

    #[test]
    fn composition_of_identities_is_identity() {
        let space = partition_space();
        let id = SpaceMap::identity(space);
        let composed = compose(&id, &id).unwrap();
        assert_eq!(composed.mapping(), id.mapping());
    }

    #[test]
    fn composition_with_constant_is_constant() {
        let space = partition_space();
        let f = SpaceMap::new(space.clone(), space.clone(), vec![1, 0, 3, 2]);
        let constant = SpaceMap::new(space.clone(), space, vec![2; 4]);
        let composed = compose(&f, &constant).unwrap();
        assert_eq!(composed.mapping(), &[2, 2, 2, 2]);
    }

    #[test]
    fn composition_across_different_spaces_fails() {
        let a = partition_space();
        let b = AuraSpace::new(Topology::discrete(3), ScopeFunction::discrete(3)).unwrap();
        let f = SpaceMap::identity(a);
        let g = SpaceMap::identity(b);
        assert_eq!(compose(&f, &g), Err(AuraError::SpaceMismatch));
    }
}
