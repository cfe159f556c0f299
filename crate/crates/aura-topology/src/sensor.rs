//! Discretized sensor-coverage model.
//!
//! A deployment places sensors with open detection disks over a rectangular
//! region; the region is sampled on a regular grid and each grid point's
//! aura becomes the grid trace of the disk of the nearest sensor covering
//! it. Points no disk covers keep a singleton aura (or a small ball, when
//! configured). The grid topology is discrete and stored predicatively, so
//! grids may far exceed the enumeration limits of the exhaustive analyses.

use crate::error::AuraError;
use crate::point_set::PointSet;
use crate::rough::{approximate, ApproximationReport};
use crate::scope::{AuraSpace, ScopeFunction};
use crate::topology::Topology;

const EPS: f64 = 1e-9;

/// An axis-aligned rectangle, also used for target regions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Region {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Region {
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Region {
        Region { x0, y0, x1, y1 }
    }

    /// Closed-rectangle membership; boundary points count.
    pub fn contains(&self, x: f64, y: f64) -> bool {
        x >= self.x0 - EPS && x <= self.x1 + EPS && y >= self.y0 - EPS && y <= self.y1 + EPS
    }

    fn is_finite(&self) -> bool {
        self.x0.is_finite() && self.y0.is_finite() && self.x1.is_finite() && self.y1.is_finite()
    }
}

/// One sensor: a position and a detection radius. Detection is the open
/// disk `d(s, ·) < range`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sensor {
    pub x: f64,
    pub y: f64,
    pub range: f64,
}

impl Sensor {
    pub fn new(x: f64, y: f64, range: f64) -> Sensor {
        Sensor { x, y, range }
    }

    pub fn covers(&self, x: f64, y: f64) -> bool {
        let dx = x - self.x;
        let dy = y - self.y;
        dx * dx + dy * dy < self.range * self.range
    }

    fn distance_squared(&self, x: f64, y: f64) -> f64 {
        let dx = x - self.x;
        let dy = y - self.y;
        dx * dx + dy * dy
    }
}

/// Aura assignment for grid points no sensor disk covers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UncoveredAura {
    /// The point only sees itself.
    Singleton,
    /// The point sees every grid point within an open ball of this radius.
    DeltaBall(f64),
}

/// A sensor placement over a rectangular region, sampled at a fixed grid
/// spacing.
#[derive(Debug, Clone, PartialEq)]
pub struct SensorDeployment {
    pub sensors: Vec<Sensor>,
    pub region: Region,
    pub resolution: f64,
    pub uncovered: UncoveredAura,
}

impl SensorDeployment {
    pub fn new(sensors: Vec<Sensor>, region: Region, resolution: f64) -> SensorDeployment {
        SensorDeployment {
            sensors,
            region,
            resolution,
            uncovered: UncoveredAura::Singleton,
        }
    }

    pub fn with_uncovered(mut self, uncovered: UncoveredAura) -> SensorDeployment {
        self.uncovered = uncovered;
        self
    }
}

/// The discretization of a deployment: an aura space over the grid points
/// plus the planar data needed to go back and forth.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpace {
    space: AuraSpace,
    coords: Vec<(f64, f64)>,
    /// Index of the sensor owning each point: the nearest sensor among
    /// those whose disk covers it (ties to the lowest index).
    owner: Vec<Option<usize>>,
    nx: usize,
    ny: usize,
}

impl GridSpace {
    pub fn build(deployment: &SensorDeployment) -> Result<GridSpace, AuraError> {
        let region = &deployment.region;
        if !region.is_finite()
            || !deployment.resolution.is_finite()
            || deployment
                .sensors
                .iter()
                .any(|s| !s.x.is_finite() || !s.y.is_finite() || !s.range.is_finite())
        {
            return Err(AuraError::NonFiniteCoordinate);
        }
        if deployment.resolution <= 0.0 {
            return Err(AuraError::InvalidDeployment(
                "resolution must be positive".into(),
            ));
        }
        if let Some(i) = deployment.sensors.iter().position(|s| s.range <= 0.0) {
            return Err(AuraError::InvalidDeployment(format!(
                "sensor {i} has a non-positive range"
            )));
        }
        if let UncoveredAura::DeltaBall(delta) = deployment.uncovered {
            if !(delta > 0.0) || !delta.is_finite() {
                return Err(AuraError::InvalidDeployment(
                    "uncovered-ball radius must be positive".into(),
                ));
            }
        }
        if region.x1 < region.x0 || region.y1 < region.y0 {
            return Err(AuraError::EmptyGrid);
        }

        let step = deployment.resolution;
        let nx = ((region.x1 - region.x0) / step + EPS).floor() as usize + 1;
        let ny = ((region.y1 - region.y0) / step + EPS).floor() as usize + 1;
        let n = nx * ny;
        if n == 0 {
            return Err(AuraError::EmptyGrid);
        }

        let mut coords = Vec::with_capacity(n);
        for iy in 0..ny {
            for ix in 0..nx {
                coords.push((region.x0 + ix as f64 * step, region.y0 + iy as f64 * step));
            }
        }

        let owner: Vec<Option<usize>> = coords
            .iter()
            .map(|&(x, y)| {
                deployment
                    .sensors
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| s.covers(x, y))
                    .min_by(|(i, a), (j, b)| {
                        a.distance_squared(x, y)
                            .partial_cmp(&b.distance_squared(x, y))
                            .unwrap()
                            .then(i.cmp(j))
                    })
                    .map(|(i, _)| i)
            })
            .collect();

        // Grid trace of each sensor disk, shared by every point it owns.
        let disk_traces: Vec<PointSet> = deployment
            .sensors
            .iter()
            .map(|s| {
                PointSet::from_indices(
                    n,
                    coords
                        .iter()
                        .enumerate()
                        .filter(|(_, &(x, y))| s.covers(x, y))
                        .map(|(i, _)| i),
                )
            })
            .collect();

        let auras: Vec<PointSet> = (0..n)
            .map(|i| match owner[i] {
                Some(s) => disk_traces[s].clone(),
                None => match deployment.uncovered {
                    UncoveredAura::Singleton => PointSet::singleton(n, i),
                    UncoveredAura::DeltaBall(delta) => {
                        let (px, py) = coords[i];
                        PointSet::from_indices(
                            n,
                            coords
                                .iter()
                                .enumerate()
                                .filter(|(_, &(x, y))| {
                                    let dx = x - px;
                                    let dy = y - py;
                                    dx * dx + dy * dy < delta * delta
                                })
                                .map(|(j, _)| j),
                        )
                    }
                },
            })
            .collect();

        let labels = coords.iter().map(|&(x, y)| format!("({x},{y})")).collect();
        let topology = Topology::discrete(n).with_labels(labels);
        let space = AuraSpace::new(topology, ScopeFunction::new(auras))?;

        Ok(GridSpace {
            space,
            coords,
            owner,
            nx,
            ny,
        })
    }

    pub fn space(&self) -> &AuraSpace {
        &self.space
    }

    pub fn universe_size(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[(f64, f64)] {
        &self.coords
    }

    pub fn owner(&self) -> &[Option<usize>] {
        &self.owner
    }

    pub fn dimensions(&self) -> (usize, usize) {
        (self.nx, self.ny)
    }

    /// Grid points falling inside a closed rectangle.
    pub fn rect_points(&self, rect: &Region) -> PointSet {
        PointSet::from_indices(
            self.coords.len(),
            self.coords
                .iter()
                .enumerate()
                .filter(|(_, &(x, y))| rect.contains(x, y))
                .map(|(i, _)| i),
        )
    }
}

/// Coverage analysis of one target set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageReport {
    pub approximation: ApproximationReport,
    /// The target equals its own lower approximation, equivalently the
    /// target is aura-open: every point's whole aura stays inside it.
    pub full_coverage: bool,
}

pub fn coverage_report(grid: &GridSpace, target: &PointSet) -> CoverageReport {
    let approximation = approximate(grid.space(), target);
    let full_coverage = approximation.lower == *target;
    CoverageReport {
        approximation,
        full_coverage,
    }
}

/// Points alerted after `steps` relay rounds from a source set: iterated
/// aura closure of the source.
pub fn relay_reach(grid: &GridSpace, alert_source: &PointSet, steps: usize) -> PointSet {
    grid.space().iterate_closure(alert_source, steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::classify_set;

    /// Three sensors over a rectangle at half-unit spacing.
    fn three_sensor_deployment() -> SensorDeployment {
        SensorDeployment::new(
            vec![
                Sensor::new(0.0, 0.0, 3.0),
                Sensor::new(4.0, 0.0, 2.0),
                Sensor::new(2.0, 3.0, 2.0),
            ],
            Region::new(-4.0, -4.0, 7.0, 6.0),
            0.5,
        )
    }

    #[test]
    fn grid_has_expected_dimensions() {
        let grid = GridSpace::build(&three_sensor_deployment()).unwrap();
        assert_eq!(grid.dimensions(), (23, 21));
        assert_eq!(grid.universe_size(), 483);
    }

    #[test]
    fn every_aura_contains_its_point() {
        let grid = GridSpace::build(&three_sensor_deployment()).unwrap();
        for i in 0..grid.universe_size() {
            assert!(grid.space().aura(i).contains(i));
        }
    }

    #[test]
    fn owner_is_the_nearest_covering_sensor() {
        let grid = GridSpace::build(&three_sensor_deployment()).unwrap();
        for (i, &(x, y)) in grid.coords().iter().enumerate() {
            match grid.owner()[i] {
                Some(s) => {
                    let deployment = three_sensor_deployment();
                    let owner = deployment.sensors[s];
                    assert!(owner.covers(x, y));
                    for other in deployment
                        .sensors
                        .iter()
                        .filter(|o| o.covers(x, y))
                    {
                        assert!(
                            owner.distance_squared(x, y) <= other.distance_squared(x, y) + EPS
                        );
                    }
                }
                None => {
                    assert_eq!(grid.space().aura(i), &PointSet::singleton(483, i));
                }
            }
        }
    }

    #[test]
    fn target_box_has_empty_lower_and_strictly_larger_upper() {
        let grid = GridSpace::build(&three_sensor_deployment()).unwrap();
        let target = grid.rect_points(&Region::new(1.0, 0.0, 3.0, 2.0));
        assert_eq!(target.len(), 25);
        let report = coverage_report(&grid, &target);
        assert!(report.approximation.lower.is_empty());
        assert!(target.is_subset_of(&report.approximation.upper));
        assert!(report.approximation.upper.len() > target.len());
        assert!(!report.full_coverage);
    }

    #[test]
    fn full_coverage_coincides_with_aura_openness() {
        let grid = GridSpace::build(&three_sensor_deployment()).unwrap();
        for rect in [
            Region::new(1.0, 0.0, 3.0, 2.0),
            Region::new(-4.0, -4.0, -3.0, -3.0),
            Region::new(-4.0, -4.0, 7.0, 6.0),
        ] {
            let target = grid.rect_points(&rect);
            let report = coverage_report(&grid, &target);
            assert_eq!(report.full_coverage, grid.space().is_aura_open(&target));
            assert_eq!(
                report.full_coverage,
                classify_set(grid.space(), &target).a_open
            );
        }
    }

    #[test]
    fn no_sensors_means_every_target_is_fully_covered() {
        let deployment =
            SensorDeployment::new(Vec::new(), Region::new(0.0, 0.0, 2.0, 2.0), 1.0);
        let grid = GridSpace::build(&deployment).unwrap();
        let target = grid.rect_points(&Region::new(0.0, 0.0, 1.0, 1.0));
        let report = coverage_report(&grid, &target);
        assert_eq!(report.approximation.lower, target);
        assert!(report.full_coverage);
    }

    #[test]
    fn single_dominating_sensor_shares_one_aura() {
        let deployment = SensorDeployment::new(
            vec![Sensor::new(1.0, 1.0, 10.0)],
            Region::new(0.0, 0.0, 2.0, 2.0),
            1.0,
        );
        let grid = GridSpace::build(&deployment).unwrap();
        let first = grid.space().aura(0).clone();
        assert_eq!(first, PointSet::full(9));
        for i in 1..9 {
            assert_eq!(grid.space().aura(i), &first);
        }
    }

    #[test]
    fn relay_reach_iterates_to_the_trace_fixpoint() {
        let grid = GridSpace::build(&three_sensor_deployment()).unwrap();
        let n = grid.universe_size();
        let source_index = grid
            .coords()
            .iter()
            .position(|&(x, y)| x == 0.0 && y == 0.0)
            .unwrap();
        let source = PointSet::singleton(n, source_index);
        assert_eq!(relay_reach(&grid, &source, 0), source);
        let trace = grid.space().closure_trace(&source);
        assert_eq!(relay_reach(&grid, &source, n), *trace.reach());
    }

    #[test]
    fn relay_reach_with_no_sensors_stays_put() {
        let deployment =
            SensorDeployment::new(Vec::new(), Region::new(0.0, 0.0, 1.0, 1.0), 1.0);
        let grid = GridSpace::build(&deployment).unwrap();
        let source = PointSet::singleton(4, 2);
        assert_eq!(relay_reach(&grid, &source, 7), source);
    }

    #[test]
    fn delta_ball_config_grows_uncovered_auras() {
        let deployment = SensorDeployment::new(
            vec![Sensor::new(0.0, 0.0, 0.6)],
            Region::new(0.0, 0.0, 2.0, 0.0),
            1.0,
        )
        .with_uncovered(UncoveredAura::DeltaBall(1.5));
        let grid = GridSpace::build(&deployment).unwrap();
        // (1,0) and (2,0) are uncovered; each sees neighbours within 1.5.
        assert_eq!(grid.owner()[1], None);
        assert_eq!(grid.space().aura(1), &PointSet::full(3));
        assert_eq!(grid.space().aura(2), &PointSet::from_indices(3, [1, 2]));
    }

    #[test]
    fn degenerate_deployments_are_rejected() {
        let bad_resolution =
            SensorDeployment::new(Vec::new(), Region::new(0.0, 0.0, 1.0, 1.0), 0.0);
        assert!(matches!(
            GridSpace::build(&bad_resolution),
            Err(AuraError::InvalidDeployment(_))
        ));

        let empty_region =
            SensorDeployment::new(Vec::new(), Region::new(1.0, 0.0, 0.0, 1.0), 0.5);
        assert_eq!(GridSpace::build(&empty_region), Err(AuraError::EmptyGrid));

        let non_finite = SensorDeployment::new(
            vec![Sensor::new(f64::NAN, 0.0, 1.0)],
            Region::new(0.0, 0.0, 1.0, 1.0),
            0.5,
        );
        assert_eq!(GridSpace::build(&non_finite), Err(AuraError::NonFiniteCoordinate));
    }
}
