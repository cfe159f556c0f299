//! Rough-set approximation through the aura operators.
//!
//! The aura interior and closure act as lower and upper approximations of a
//! target set — no equivalence relation required. When the scope happens to
//! be symmetric and transitive, the auras form a partition and the model
//! collapses to the classical partition-based approximation.

use crate::error::AuraError;
use crate::point_set::PointSet;
use crate::scope::AuraSpace;
use std::fmt;

/// An exact quotient of two set sizes, kept unreduced so reports can echo
/// counts like `2/6` verbatim. Equality compares the underlying rationals.
#[derive(Debug, Clone, Copy)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Ratio {
        Ratio { num, den }
    }

    pub fn one() -> Ratio {
        Ratio { num: 1, den: 1 }
    }

    /// `1 - self`, sharing the denominator.
    pub fn complement_to_one(&self) -> Ratio {
        Ratio {
            num: self.den - self.num,
            den: self.den,
        }
    }

    /// Decimal rendering rounded to three places, as in `0.333`.
    pub fn decimal3(&self) -> String {
        if self.den == 0 {
            return "1.000".to_string();
        }
        format!("{:.3}", self.num as f64 / self.den as f64)
    }
}

impl PartialEq for Ratio {
    fn eq(&self, other: &Self) -> bool {
        u128::from(self.num) * u128::from(other.den) == u128::from(other.num) * u128::from(self.den)
    }
}

impl Eq for Ratio {}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Lower/upper approximation of one target set with the derived measures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproximationReport {
    pub lower: PointSet,
    pub upper: PointSet,
    /// `upper \ lower`: the region of uncertainty.
    pub boundary: PointSet,
    /// `|lower| / |upper|`; an empty target is exact by convention.
    pub accuracy: Ratio,
    /// Lower and upper coincide.
    pub definable: bool,
}

impl ApproximationReport {
    /// `1 - accuracy`.
    pub fn roughness(&self) -> Ratio {
        self.accuracy.complement_to_one()
    }
}

fn report_from(lower: PointSet, upper: PointSet) -> ApproximationReport {
    let boundary = upper.difference(&lower);
    let definable = lower == upper;
    // The accuracy quotient is undefined for an empty upper approximation;
    // an empty target is reported as exact.
    let accuracy = if upper.is_empty() {
        Ratio::one()
    } else {
        Ratio::new(lower.len() as u64, upper.len() as u64)
    };
    ApproximationReport {
        lower,
        upper,
        boundary,
        accuracy,
        definable,
    }
}

/// Approximates `a` from below by the aura interior and from above by the
/// aura closure.
pub fn approximate(space: &AuraSpace, a: &PointSet) -> ApproximationReport {
    report_from(space.aura_interior(a), space.aura_closure(a))
}

/// A partition of the universe into disjoint nonempty blocks, the classical
/// approximation oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionOracle {
    n: usize,
    blocks: Vec<PointSet>,
}

impl PartitionOracle {
    pub fn new(n: usize, blocks: Vec<PointSet>) -> Result<PartitionOracle, AuraError> {
        let mut covered = PointSet::empty(n);
        for block in &blocks {
            if block.universe_size() != n {
                return Err(AuraError::InvalidPartition(
                    "block universe differs from partition universe".into(),
                ));
            }
            if block.is_empty() {
                return Err(AuraError::InvalidPartition("empty block".into()));
            }
            if covered.intersects(block) {
                return Err(AuraError::InvalidPartition(format!(
                    "block {block} overlaps another block"
                )));
            }
            covered = covered.union(block);
        }
        if !covered.is_full() {
            return Err(AuraError::InvalidPartition(format!(
                "blocks do not cover the universe; missing {}",
                covered.complement()
            )));
        }
        Ok(PartitionOracle { n, blocks })
    }

    pub fn universe_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[PointSet] {
        &self.blocks
    }

    pub fn block_of(&self, point: usize) -> &PointSet {
        self.blocks
            .iter()
            .find(|b| b.contains(point))
            .expect("partition blocks cover the universe")
    }
}

/// Classical partition-based approximation of `a`.
pub fn pawlak_approximate(partition: &PartitionOracle, a: &PointSet) -> ApproximationReport {
    let n = partition.universe_size();
    assert_eq!(a.universe_size(), n, "universe size mismatch");
    let mut lower = PointSet::empty(n);
    let mut upper = PointSet::empty(n);
    for x in 0..n {
        let block = partition.block_of(x);
        if block.is_subset_of(a) {
            lower.insert(x);
        }
        if block.intersects(a) {
            upper.insert(x);
        }
    }
    report_from(lower, upper)
}

/// True when `fine` assigns every point an aura contained in the one
/// `coarse` assigns it. Both spaces must share one topology.
pub fn is_refinement(coarse: &AuraSpace, fine: &AuraSpace) -> Result<bool, AuraError> {
    if coarse.topology() != fine.topology() {
        return Err(AuraError::TopologyMismatch);
    }
    Ok(fine.scope().refines(coarse.scope()))
}

/// Side-by-side approximations under a scope and one of its refinements,
/// with the three monotonicity facts reported as flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinementReport {
    pub coarse: ApproximationReport,
    pub fine: ApproximationReport,
    /// Lower approximation grows under refinement.
    pub lower_grows: bool,
    /// Upper approximation shrinks under refinement.
    pub upper_shrinks: bool,
    /// Boundary loses points under refinement.
    pub boundary_shrinks: bool,
}

pub fn refinement_report(
    coarse: &AuraSpace,
    fine: &AuraSpace,
    a: &PointSet,
) -> Result<RefinementReport, AuraError> {
    if !is_refinement(coarse, fine)? {
        let point = fine
            .scope()
            .auras()
            .iter()
            .zip(coarse.scope().auras())
            .position(|(f, c)| !f.is_subset_of(c))
            .unwrap_or(0);
        return Err(AuraError::NotARefinement { point });
    }
    let coarse_report = approximate(coarse, a);
    let fine_report = approximate(fine, a);
    let lower_grows = coarse_report.lower.is_subset_of(&fine_report.lower);
    let upper_shrinks = fine_report.upper.is_subset_of(&coarse_report.upper);
    let boundary_shrinks = fine_report.boundary.len() <= coarse_report.boundary.len();
    Ok(RefinementReport {
        coarse: coarse_report,
        fine: fine_report,
        lower_grows,
        upper_shrinks,
        boundary_shrinks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scope::ScopeFunction;
    use crate::topology::Topology;

    fn pts(n: usize, xs: &[usize]) -> PointSet {
        PointSet::from_indices(n, xs.iter().copied())
    }

    /// Six patients with overlapping similarity auras; the topology is
    /// generated from the auras themselves.
    fn patient_space() -> AuraSpace {
        let auras = vec![
            pts(6, &[0, 1]),
            pts(6, &[0, 1, 2]),
            pts(6, &[1, 2]),
            pts(6, &[3, 4]),
            pts(6, &[3, 4, 5]),
            pts(6, &[4, 5]),
        ];
        let t = Topology::from_subbasis(6, &auras).unwrap();
        AuraSpace::new(t, ScopeFunction::new(auras)).unwrap()
    }

    /// The same space with the auras of p2 and p5 tightened.
    fn refined_patient_space() -> AuraSpace {
        let auras = vec![
            pts(6, &[0, 1]),
            pts(6, &[0, 1]),
            pts(6, &[1, 2]),
            pts(6, &[3, 4]),
            pts(6, &[3, 4]),
            pts(6, &[4, 5]),
        ];
        patient_space().with_scope(ScopeFunction::new(auras)).unwrap()
    }

    fn diagnosed() -> PointSet {
        pts(6, &[0, 1, 3, 4])
    }

    #[test]
    fn patient_approximation_numbers() {
        let report = approximate(&patient_space(), &diagnosed());
        assert_eq!(report.lower, pts(6, &[0, 3]));
        assert_eq!(report.upper, PointSet::full(6));
        assert_eq!(report.boundary, pts(6, &[1, 2, 4, 5]));
        assert_eq!(report.accuracy, Ratio::new(2, 6));
        assert_eq!(report.accuracy.decimal3(), "0.333");
        assert!(!report.definable);
        assert_eq!(report.roughness(), Ratio::new(4, 6));
    }

    #[test]
    fn refined_patient_lower_approximation_recovers_target() {
        let report = approximate(&refined_patient_space(), &diagnosed());
        assert_eq!(report.lower, diagnosed());
        // p3's smallest open neighbourhood {p2,p3} always meets the target,
        // so the upper approximation keeps all six patients and the target
        // stays undefinable even after this refinement.
        assert_eq!(report.upper, PointSet::full(6));
        assert_eq!(report.accuracy, Ratio::new(4, 6));
        assert!(!report.definable);
    }

    #[test]
    fn full_universe_is_definable() {
        let report = approximate(&patient_space(), &PointSet::full(6));
        assert_eq!(report.lower, PointSet::full(6));
        assert_eq!(report.upper, PointSet::full(6));
        assert_eq!(report.accuracy, Ratio::one());
        assert!(report.definable);
    }

    #[test]
    fn empty_target_is_exact_by_convention() {
        let report = approximate(&patient_space(), &PointSet::empty(6));
        assert!(report.definable);
        assert_eq!(report.accuracy, Ratio::one());
    }

    #[test]
    fn pawlak_lower_and_upper_through_blocks() {
        let partition =
            PartitionOracle::new(3, vec![pts(3, &[0, 1]), pts(3, &[2])]).unwrap();
        let union_of_blocks = pawlak_approximate(&partition, &pts(3, &[0, 1]));
        assert_eq!(union_of_blocks.lower, pts(3, &[0, 1]));
        assert_eq!(union_of_blocks.upper, pts(3, &[0, 1]));

        let split = pawlak_approximate(&partition, &pts(3, &[0]));
        assert_eq!(split.lower, PointSet::empty(3));
        assert_eq!(split.upper, pts(3, &[0, 1]));
    }

    #[test]
    fn singleton_partition_approximates_exactly() {
        let partition = PartitionOracle::new(
            3,
            (0..3).map(|i| PointSet::singleton(3, i)).collect(),
        )
        .unwrap();
        let a = pts(3, &[0, 2]);
        let report = pawlak_approximate(&partition, &a);
        assert_eq!(report.lower, a);
        assert_eq!(report.upper, a);
    }

    #[test]
    fn overlapping_blocks_are_rejected() {
        assert!(PartitionOracle::new(3, vec![pts(3, &[0, 1]), pts(3, &[1, 2])]).is_err());
    }

    #[test]
    fn refinement_detection_is_directional() {
        let coarse = patient_space();
        let fine = refined_patient_space();
        assert!(is_refinement(&coarse, &fine).unwrap());
        assert!(is_refinement(&coarse, &coarse).unwrap());
        assert!(!is_refinement(&fine, &coarse).unwrap());
    }

    #[test]
    fn refinement_report_shows_monotone_improvement() {
        let coarse = patient_space();
        let fine = refined_patient_space();
        let report = refinement_report(&coarse, &fine, &diagnosed()).unwrap();
        assert!(report.lower_grows && report.upper_shrinks && report.boundary_shrinks);
        assert_eq!(report.coarse.boundary.len(), 4);
        assert_eq!(report.fine.boundary.len(), 2);
    }

    #[test]
    fn identical_spaces_produce_equal_reports() {
        let space = patient_space();
        let report = refinement_report(&space, &space, &diagnosed()).unwrap();
        assert_eq!(report.coarse, report.fine);
    }

    #[test]
    fn non_refinement_is_rejected_with_the_offending_point() {
        let coarse = patient_space();
        let fine = refined_patient_space();
        assert_eq!(
            refinement_report(&fine, &coarse, &diagnosed()),
            Err(AuraError::NotARefinement { point: 1 })
        );
    }
}
