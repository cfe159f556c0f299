//! Finite topological spaces stored extensionally.
//!
//! A [`Topology`] is a universe size plus the full family of open sets.
//! Discrete topologies may instead be stored predicatively so that grid
//! spaces with hundreds of points never materialize `2^n` subsets.

use crate::error::AuraError;
use crate::point_set::PointSet;
use std::collections::BTreeSet;
use std::fmt;

/// Largest universe for which a full open-set family may be enumerated.
pub const ENUMERATION_LIMIT: usize = 16;

const FAMILY_CAP: usize = 1 << ENUMERATION_LIMIT;

#[derive(Clone)]
enum OpenFamily {
    /// Explicit family of opens, in construction order.
    Family(Vec<PointSet>),
    /// Every subset is open; membership is decided predicatively.
    Discrete,
}

/// A finite topological space `(X, τ)`.
#[derive(Clone)]
pub struct Topology {
    n: usize,
    opens: OpenFamily,
    labels: Option<Vec<String>>,
}

/// One broken topology axiom, naming the offending sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologyViolation {
    MissingEmptySet,
    MissingUniverse,
    DuplicateOpen(PointSet),
    IntersectionMissing(PointSet, PointSet),
    UnionMissing(PointSet, PointSet),
}

impl fmt::Display for TopologyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyViolation::MissingEmptySet => write!(f, "the empty set is not open"),
            TopologyViolation::MissingUniverse => write!(f, "the full universe is not open"),
            TopologyViolation::DuplicateOpen(s) => write!(f, "open set {s} is listed twice"),
            TopologyViolation::IntersectionMissing(a, b) => {
                write!(f, "intersection of {a} and {b} is not open")
            }
            TopologyViolation::UnionMissing(a, b) => {
                write!(f, "union of {a} and {b} is not open")
            }
        }
    }
}

impl Topology {
    /// Wraps a raw open-set family. No axiom is checked here; run
    /// [`Topology::validate`] to obtain violations as data.
    pub fn new(n: usize, opens: Vec<PointSet>) -> Topology {
        assert!(n >= 1, "universe must contain at least one point");
        for o in &opens {
            assert_eq!(o.universe_size(), n, "open set universe differs from topology universe");
        }
        Topology {
            n,
            opens: OpenFamily::Family(opens),
            labels: None,
        }
    }

    /// The discrete topology, stored predicatively.
    pub fn discrete(n: usize) -> Topology {
        assert!(n >= 1, "universe must contain at least one point");
        Topology {
            n,
            opens: OpenFamily::Discrete,
            labels: None,
        }
    }

    /// The indiscrete topology `{∅, X}`.
    pub fn indiscrete(n: usize) -> Topology {
        Topology::new(n, vec![PointSet::empty(n), PointSet::full(n)])
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Topology {
        assert_eq!(labels.len(), self.n, "label list length differs from universe size");
        self.labels = Some(labels);
        self
    }

    pub fn universe_size(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn is_discrete_by_construction(&self) -> bool {
        matches!(self.opens, OpenFamily::Discrete)
    }

    /// The open-set family, materialized in canonical numeric order.
    ///
    /// Fails for predicatively-stored discrete topologies above the
    /// enumeration limit.
    pub fn opens(&self) -> Result<Vec<PointSet>, AuraError> {
        match &self.opens {
            OpenFamily::Family(f) => {
                let mut out = f.clone();
                out.sort();
                out.dedup();
                Ok(out)
            }
            OpenFamily::Discrete => {
                if self.n > ENUMERATION_LIMIT {
                    return Err(AuraError::UniverseTooLarge {
                        n: self.n,
                        max: ENUMERATION_LIMIT,
                        operation: "open-set enumeration",
                    });
                }
                Ok(PointSet::all_subsets(self.n).collect())
            }
        }
    }

    /// The family exactly as constructed (duplicates preserved), for
    /// validation reports. Discrete topologies enumerate when small.
    pub fn raw_opens(&self) -> Result<Vec<PointSet>, AuraError> {
        match &self.opens {
            OpenFamily::Family(f) => Ok(f.clone()),
            OpenFamily::Discrete => self.opens(),
        }
    }

    pub fn is_open(&self, set: &PointSet) -> bool {
        assert_eq!(set.universe_size(), self.n, "universe size mismatch");
        match &self.opens {
            OpenFamily::Family(f) => f.contains(set),
            OpenFamily::Discrete => true,
        }
    }

    /// Checks the topology axioms and reports every failure found.
    pub fn validate(&self) -> Vec<TopologyViolation> {
        let family = match &self.opens {
            OpenFamily::Family(f) => f,
            OpenFamily::Discrete => return Vec::new(),
        };
        let mut violations = Vec::new();
        let members: BTreeSet<&PointSet> = family.iter().collect();
        if !members.contains(&PointSet::empty(self.n)) {
            violations.push(TopologyViolation::MissingEmptySet);
        }
        if !members.contains(&PointSet::full(self.n)) {
            violations.push(TopologyViolation::MissingUniverse);
        }
        let mut seen = BTreeSet::new();
        for open in family {
            if !seen.insert(open) {
                violations.push(TopologyViolation::DuplicateOpen(open.clone()));
            }
        }
        let distinct: Vec<&PointSet> = members.iter().copied().collect();
        for (i, a) in distinct.iter().enumerate() {
            for b in &distinct[i + 1..] {
                if !members.contains(&a.intersection(b)) {
                    violations.push(TopologyViolation::IntersectionMissing((*a).clone(), (*b).clone()));
                }
                if !members.contains(&a.union(b)) {
                    violations.push(TopologyViolation::UnionMissing((*a).clone(), (*b).clone()));
                }
            }
        }
        violations
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Largest open set contained in `a`: the union of all opens inside `a`.
    pub fn interior(&self, a: &PointSet) -> PointSet {
        assert_eq!(a.universe_size(), self.n, "universe size mismatch");
        match &self.opens {
            OpenFamily::Discrete => a.clone(),
            OpenFamily::Family(f) => {
                let mut out = PointSet::empty(self.n);
                for open in f {
                    if open.is_subset_of(a) {
                        out = out.union(open);
                    }
                }
                out
            }
        }
    }

    /// Smallest closed set containing `a`, computed as the complement of
    /// the interior of the complement.
    pub fn closure(&self, a: &PointSet) -> PointSet {
        self.interior(&a.complement()).complement()
    }

    /// Complements of the opens, deduplicated, in canonical order.
    pub fn closed_sets(&self) -> Result<Vec<PointSet>, AuraError> {
        let mut closed: Vec<PointSet> = self.opens()?.iter().map(PointSet::complement).collect();
        closed.sort();
        closed.dedup();
        Ok(closed)
    }

    /// The smallest topology containing every subbasis set: `∅` and `X` are
    /// added, then the family is closed under pairwise intersections and
    /// unions until it stabilizes.
    pub fn from_subbasis(n: usize, subbasis: &[PointSet]) -> Result<Topology, AuraError> {
        if n == 0 {
            return Err(AuraError::EmptyUniverse);
        }
        let mut family: BTreeSet<PointSet> = BTreeSet::new();
        family.insert(PointSet::empty(n));
        family.insert(PointSet::full(n));
        for s in subbasis {
            assert_eq!(s.universe_size(), n, "subbasis set universe differs from topology universe");
            family.insert(s.clone());
        }
        loop {
            let before = family.len();
            close_under(&mut family, PointSet::intersection)?;
            close_under(&mut family, PointSet::union)?;
            if family.len() == before {
                break;
            }
        }
        Ok(Topology {
            n,
            opens: OpenFamily::Family(family.into_iter().collect()),
            labels: None,
        })
    }
}

fn close_under(
    family: &mut BTreeSet<PointSet>,
    op: fn(&PointSet, &PointSet) -> PointSet,
) -> Result<(), AuraError> {
    loop {
        let items: Vec<PointSet> = family.iter().cloned().collect();
        let mut fresh = Vec::new();
        for (i, a) in items.iter().enumerate() {
            for b in &items[i + 1..] {
                let c = op(a, b);
                if !family.contains(&c) {
                    fresh.push(c);
                }
            }
        }
        if fresh.is_empty() {
            return Ok(());
        }
        for c in fresh {
            family.insert(c);
        }
        if family.len() > FAMILY_CAP {
            return Err(AuraError::FamilyCapExceeded { cap: FAMILY_CAP });
        }
    }
}

/// Structural equality: same universe and the same family of opens.
/// Labels are presentation data and do not participate.
impl PartialEq for Topology {
    fn eq(&self, other: &Self) -> bool {
        if self.n != other.n {
            return false;
        }
        match (&self.opens, &other.opens) {
            (OpenFamily::Discrete, OpenFamily::Discrete) => true,
            _ => match (self.opens(), other.opens()) {
                (Ok(a), Ok(b)) => a == b,
                // A materializable family can never equal an unenumerable
                // discrete one: it would need 2^n > 2^16 members.
                _ => false,
            },
        }
    }
}

impl Eq for Topology {}

impl fmt::Debug for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.opens {
            OpenFamily::Discrete => write!(f, "Topology(discrete, n={})", self.n),
            OpenFamily::Family(fam) => write!(f, "Topology(n={}, opens={:?})", self.n, fam),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(n: usize, xs: &[usize]) -> PointSet {
        PointSet::from_indices(n, xs.iter().copied())
    }

    /// Four-point space with opens {∅,{a},{b},{a,b},{a,b,c},X}.
    fn nested_space() -> Topology {
        Topology::new(
            4,
            vec![
                pts(4, &[]),
                pts(4, &[0]),
                pts(4, &[1]),
                pts(4, &[0, 1]),
                pts(4, &[0, 1, 2]),
                pts(4, &[0, 1, 2, 3]),
            ],
        )
    }

    #[test]
    fn nested_space_is_valid() {
        assert!(nested_space().is_valid());
    }

    #[test]
    fn indiscrete_is_valid() {
        assert!(Topology::indiscrete(5).is_valid());
    }

    #[test]
    fn union_closure_failure_is_reported() {
        let t = Topology::new(
            3,
            vec![pts(3, &[]), pts(3, &[0]), pts(3, &[1]), pts(3, &[0, 1, 2])],
        );
        let violations = t.validate();
        assert!(violations.contains(&TopologyViolation::UnionMissing(pts(3, &[0]), pts(3, &[1]))));
    }

    #[test]
    fn interior_of_nested_space() {
        let t = nested_space();
        assert_eq!(t.interior(&pts(4, &[0, 2])), pts(4, &[0]));
        assert_eq!(t.interior(&PointSet::full(4)), PointSet::full(4));
    }

    #[test]
    fn interior_in_partition_topology_can_vanish() {
        let t = Topology::new(
            4,
            vec![pts(4, &[]), pts(4, &[0, 1]), pts(4, &[2, 3]), PointSet::full(4)],
        );
        assert_eq!(t.interior(&pts(4, &[0, 2])), PointSet::empty(4));
    }

    #[test]
    fn closure_of_nested_space() {
        let t = nested_space();
        assert_eq!(t.closure(&pts(4, &[0])), pts(4, &[0, 2, 3]));
    }

    #[test]
    fn closure_in_discrete_space_is_identity() {
        let t = Topology::discrete(3);
        let a = pts(3, &[0, 2]);
        assert_eq!(t.closure(&a), a);
    }

    #[test]
    fn closure_matches_smallest_closed_superset() {
        // Independent oracle: scan the closed sets for the smallest superset.
        let t = Topology::new(
            4,
            vec![
                pts(4, &[]),
                pts(4, &[0]),
                pts(4, &[2]),
                pts(4, &[0, 2]),
                pts(4, &[0, 1, 2]),
                PointSet::full(4),
            ],
        );
        let a = pts(4, &[0]);
        let smallest = t
            .closed_sets()
            .unwrap()
            .into_iter()
            .filter(|c| a.is_subset_of(c))
            .min_by_key(|c| c.len())
            .unwrap();
        assert_eq!(smallest, pts(4, &[0, 1, 3]));
        assert_eq!(t.closure(&a), smallest);
    }

    #[test]
    fn closed_sets_of_nested_space() {
        let t = nested_space();
        let closed = t.closed_sets().unwrap();
        let expected = vec![
            pts(4, &[]),
            pts(4, &[3]),
            pts(4, &[2, 3]),
            pts(4, &[0, 2, 3]),
            pts(4, &[1, 2, 3]),
            PointSet::full(4),
        ];
        let mut expected = expected;
        expected.sort();
        assert_eq!(closed, expected);
    }

    #[test]
    fn closed_sets_of_discrete_space_is_power_set() {
        assert_eq!(Topology::discrete(3).closed_sets().unwrap().len(), 8);
    }

    #[test]
    fn subbasis_of_singletons_generates_discrete() {
        let singles: Vec<PointSet> = (0..3).map(|i| PointSet::singleton(3, i)).collect();
        let t = Topology::from_subbasis(3, &singles).unwrap();
        assert_eq!(t.opens().unwrap().len(), 8);
        assert!(t.is_valid());
    }

    #[test]
    fn empty_subbasis_generates_indiscrete() {
        let t = Topology::from_subbasis(2, &[]).unwrap();
        assert_eq!(t.opens().unwrap(), vec![PointSet::empty(2), PointSet::full(2)]);
    }

    #[test]
    fn subbasis_on_empty_universe_fails() {
        assert_eq!(Topology::from_subbasis(0, &[]), Err(AuraError::EmptyUniverse));
    }

    #[test]
    fn subbasis_output_is_always_valid() {
        let sets = vec![pts(5, &[0, 1]), pts(5, &[1, 2, 3]), pts(5, &[3, 4])];
        let t = Topology::from_subbasis(5, &sets).unwrap();
        assert!(t.is_valid());
        for s in &sets {
            assert!(t.is_open(s));
        }
    }
}
