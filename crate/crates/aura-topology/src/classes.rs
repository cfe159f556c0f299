//! Generalized open-set classes.
//!
//! Five aura classes arise by substituting the aura closure for the
//! topological closure in the classical definitions of semi-open, pre-open,
//! α-open and β-open sets (plus a b-open hybrid). Every classical class
//! embeds in its aura counterpart, and the aura classes form a strict
//! hierarchy below the open sets.

use crate::error::AuraError;
use crate::point_set::PointSet;
use crate::scope::AuraSpace;
use crate::topology::ENUMERATION_LIMIT;
use std::fmt;
use std::str::FromStr;

/// Hard-coded scan bound for the all-subsets hierarchy verification.
const HIERARCHY_LIMIT: usize = 12;

/// Membership of one set in each of the eleven open-set classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassProfile {
    pub open: bool,
    pub semi_open: bool,
    pub pre_open: bool,
    pub alpha_open: bool,
    pub beta_open: bool,
    pub a_open: bool,
    pub a_semi_open: bool,
    pub a_pre_open: bool,
    pub a_alpha_open: bool,
    pub a_beta_open: bool,
    pub a_b_open: bool,
}

/// Names of the eleven classes, as used by class enumeration and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassName {
    Open,
    SemiOpen,
    PreOpen,
    AlphaOpen,
    BetaOpen,
    AOpen,
    ASemiOpen,
    APreOpen,
    AAlphaOpen,
    ABetaOpen,
    ABOpen,
}

impl ClassName {
    pub const ALL: [ClassName; 11] = [
        ClassName::Open,
        ClassName::SemiOpen,
        ClassName::PreOpen,
        ClassName::AlphaOpen,
        ClassName::BetaOpen,
        ClassName::AOpen,
        ClassName::ASemiOpen,
        ClassName::APreOpen,
        ClassName::AAlphaOpen,
        ClassName::ABetaOpen,
        ClassName::ABOpen,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ClassName::Open => "open",
            ClassName::SemiOpen => "semi_open",
            ClassName::PreOpen => "pre_open",
            ClassName::AlphaOpen => "alpha_open",
            ClassName::BetaOpen => "beta_open",
            ClassName::AOpen => "a_open",
            ClassName::ASemiOpen => "a_semi_open",
            ClassName::APreOpen => "a_pre_open",
            ClassName::AAlphaOpen => "a_alpha_open",
            ClassName::ABetaOpen => "a_beta_open",
            ClassName::ABOpen => "a_b_open",
        }
    }
}

impl fmt::Display for ClassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassName {
    type Err = AuraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassName::ALL
            .iter()
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| AuraError::UnknownClass(s.to_string()))
    }
}

impl ClassProfile {
    pub fn class(&self, name: ClassName) -> bool {
        match name {
            ClassName::Open => self.open,
            ClassName::SemiOpen => self.semi_open,
            ClassName::PreOpen => self.pre_open,
            ClassName::AlphaOpen => self.alpha_open,
            ClassName::BetaOpen => self.beta_open,
            ClassName::AOpen => self.a_open,
            ClassName::ASemiOpen => self.a_semi_open,
            ClassName::APreOpen => self.a_pre_open,
            ClassName::AAlphaOpen => self.a_alpha_open,
            ClassName::ABetaOpen => self.a_beta_open,
            ClassName::ABOpen => self.a_b_open,
        }
    }
}

/// Evaluates every defining inclusion from first principles.
pub fn classify_set(space: &AuraSpace, a: &PointSet) -> ClassProfile {
    let t = space.topology();
    let int_a = t.interior(a);
    let cl_int_a = t.closure(&int_a);
    let cl_a = t.closure(a);
    let acl_a = space.aura_closure(a);
    let acl_int_a = space.aura_closure(&int_a);

    ClassProfile {
        open: t.is_open(a),
        semi_open: a.is_subset_of(&cl_int_a),
        pre_open: a.is_subset_of(&t.interior(&cl_a)),
        alpha_open: a.is_subset_of(&t.interior(&cl_int_a)),
        beta_open: a.is_subset_of(&t.closure(&t.interior(&cl_a))),
        a_open: space.is_aura_open(a),
        a_semi_open: a.is_subset_of(&acl_int_a),
        a_pre_open: a.is_subset_of(&t.interior(&acl_a)),
        a_alpha_open: a.is_subset_of(&t.interior(&acl_int_a)),
        a_beta_open: a.is_subset_of(&space.aura_closure(&t.interior(&acl_a))),
        a_b_open: a.is_subset_of(&acl_int_a.union(&t.interior(&acl_a))),
    }
}

/// All subsets carrying the named flag, in canonical numeric order.
pub fn enumerate_class(space: &AuraSpace, name: ClassName) -> Result<Vec<PointSet>, AuraError> {
    let n = space.universe_size();
    if n > ENUMERATION_LIMIT {
        return Err(AuraError::UniverseTooLarge {
            n,
            max: ENUMERATION_LIMIT,
            operation: "class enumeration",
        });
    }
    Ok(PointSet::all_subsets(n)
        .filter(|a| classify_set(space, a).class(name))
        .collect())
}

/// One inclusion edge `from ⊆ to` of the class hierarchy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HierarchyEdge {
    pub from: ClassName,
    pub to: ClassName,
    /// The inclusion is a theorem; `false` flags an implementation fault.
    pub holds: bool,
    /// A set in `from` but not in `to`, when the inclusion is broken.
    pub violation: Option<PointSet>,
    /// A set in `to` but not in `from`, when the inclusion is strict here.
    pub strictness_witness: Option<PointSet>,
}

/// Exhaustive check of every hierarchy inclusion over all subsets, plus the
/// two-way incomparability report for the aura-semi/aura-pre siblings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HierarchyReport {
    pub edges: Vec<HierarchyEdge>,
    /// A set that is aura-semi-open but not aura-pre-open, if one exists.
    pub semi_not_pre: Option<PointSet>,
    /// A set that is aura-pre-open but not aura-semi-open, if one exists.
    pub pre_not_semi: Option<PointSet>,
}

impl HierarchyReport {
    pub fn all_edges_hold(&self) -> bool {
        self.edges.iter().all(|e| e.holds)
    }
}

/// The ten inclusion edges: six among the aura classes and the ambient
/// opens, four comparing each classical class to its aura counterpart.
pub const HIERARCHY_EDGES: [(ClassName, ClassName); 10] = [
    (ClassName::Open, ClassName::AAlphaOpen),
    (ClassName::AAlphaOpen, ClassName::ASemiOpen),
    (ClassName::AAlphaOpen, ClassName::APreOpen),
    (ClassName::ASemiOpen, ClassName::ABOpen),
    (ClassName::APreOpen, ClassName::ABOpen),
    (ClassName::ABOpen, ClassName::ABetaOpen),
    (ClassName::SemiOpen, ClassName::ASemiOpen),
    (ClassName::PreOpen, ClassName::APreOpen),
    (ClassName::AlphaOpen, ClassName::AAlphaOpen),
    (ClassName::BetaOpen, ClassName::ABetaOpen),
];

pub fn verify_hierarchy(space: &AuraSpace) -> Result<HierarchyReport, AuraError> {
    let n = space.universe_size();
    if n > HIERARCHY_LIMIT {
        return Err(AuraError::UniverseTooLarge {
            n,
            max: HIERARCHY_LIMIT,
            operation: "hierarchy verification",
        });
    }
    let profiles: Vec<(PointSet, ClassProfile)> = PointSet::all_subsets(n)
        .map(|a| {
            let p = classify_set(space, &a);
            (a, p)
        })
        .collect();

    let edges = HIERARCHY_EDGES
        .iter()
        .map(|&(from, to)| {
            let violation = profiles
                .iter()
                .find(|(_, p)| p.class(from) && !p.class(to))
                .map(|(a, _)| a.clone());
            let strictness_witness = profiles
                .iter()
                .find(|(_, p)| p.class(to) && !p.class(from))
                .map(|(a, _)| a.clone());
            HierarchyEdge {
                from,
                to,
                holds: violation.is_none(),
                violation,
                strictness_witness,
            }
        })
        .collect();

    let semi_not_pre = profiles
        .iter()
        .find(|(_, p)| p.a_semi_open && !p.a_pre_open)
        .map(|(a, _)| a.clone());
    let pre_not_semi = profiles
        .iter()
        .find(|(_, p)| p.a_pre_open && !p.a_semi_open)
        .map(|(a, _)| a.clone());

    Ok(HierarchyReport {
        edges,
        semi_not_pre,
        pre_not_semi,
    })
}
