//! Canonical named spaces shared by the tests, the demos, and the CLI.
//!
//! Fixture names are stable public identifiers. Every entry is constructed
//! fresh and passes its validators by construction.

use crate::error::AuraError;
use crate::point_set::PointSet;
use crate::scope::{AuraSpace, ScopeFunction};
use crate::sensor::{Region, Sensor, SensorDeployment};
use crate::topology::Topology;

/// A catalog entry: either an aura space or a sensor deployment.
#[derive(Debug, Clone, PartialEq)]
pub enum Fixture {
    Space(AuraSpace),
    Deployment(SensorDeployment),
}

/// `(name, description)` for every fixture, in catalog order.
pub fn fixture_names() -> Vec<(&'static str, &'static str)> {
    CATALOG.iter().map(|(n, d, _)| (*n, *d)).collect()
}

type Builder = fn() -> Fixture;

const CATALOG: &[(&str, &str, Builder)] = &[
    (
        "finite_aura_basic",
        "four points with a nested chain of auras {a} through X",
        || Fixture::Space(finite_aura_basic()),
    ),
    (
        "non_idempotent",
        "three-point discrete space whose aura closure grows for two steps",
        || Fixture::Space(non_idempotent()),
    ),
    (
        "closure_gap_coarse",
        "coarse three-point space where topological and aura closure agree on {b}",
        || Fixture::Space(closure_gap_coarse()),
    ),
    (
        "closure_gap_discrete",
        "discrete three-point space where the aura closure strictly exceeds the topological one",
        || Fixture::Space(closure_gap_discrete()),
    ),
    (
        "semi_not_pre",
        "four-point space whose set {a,b} is aura-semi-open but neither aura-pre-open nor aura-alpha-open",
        || Fixture::Space(semi_not_pre()),
    ),
    (
        "pre_not_semi",
        "partition-style four-point space whose set {a,c} is aura-pre-open but not aura-semi-open",
        || Fixture::Space(pre_not_semi()),
    ),
    (
        "trivial_on_discrete",
        "discrete three-point space with the trivial scope: Hausdorff classically, separates nothing aura-wise",
        || Fixture::Space(trivial_on_discrete()),
    ),
    (
        "discrete_aura",
        "discrete three-point space with singleton auras: aura-Hausdorff and aura-regular",
        || Fixture::Space(discrete_aura()),
    ),
    (
        "medical",
        "six patients with diagnostic-similarity auras; topology generated from the auras",
        || Fixture::Space(medical()),
    ),
    (
        "medical_refined",
        "the medical space with the auras of p2 and p5 tightened",
        || Fixture::Space(medical_refined()),
    ),
    (
        "epidemic_seven",
        "seven-person contact network with one isolated individual",
        || Fixture::Space(epidemic_seven()),
    ),
    (
        "sensor_three",
        "three sensors of ranges 3, 2, 2 over [-4,7]x[-4,6] at half-unit grid spacing",
        || Fixture::Deployment(sensor_three()),
    ),
];

/// Looks a fixture up by name and constructs it.
pub fn fixture(name: &str) -> Result<Fixture, AuraError> {
    CATALOG
        .iter()
        .find(|(n, _, _)| *n == name)
        .map(|(_, _, build)| build())
        .ok_or_else(|| AuraError::UnknownFixture(name.to_string()))
}

/// Looks up a fixture that must be an aura space.
pub fn fixture_space(name: &str) -> Result<AuraSpace, AuraError> {
    match fixture(name)? {
        Fixture::Space(space) => Ok(space),
        Fixture::Deployment(_) => Err(AuraError::FixtureKindMismatch(
            name.to_string(),
            "sensor deployment",
            "aura space",
        )),
    }
}

/// Looks up a fixture that must be a sensor deployment.
pub fn fixture_deployment(name: &str) -> Result<SensorDeployment, AuraError> {
    match fixture(name)? {
        Fixture::Deployment(d) => Ok(d),
        Fixture::Space(_) => Err(AuraError::FixtureKindMismatch(
            name.to_string(),
            "aura space",
            "sensor deployment",
        )),
    }
}

fn pts(n: usize, xs: &[usize]) -> PointSet {
    PointSet::from_indices(n, xs.iter().copied())
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn space(topology: Topology, auras: Vec<PointSet>) -> AuraSpace {
    AuraSpace::new(topology, ScopeFunction::new(auras)).expect("fixtures are valid by construction")
}

fn finite_aura_basic() -> AuraSpace {
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
    )
    .with_labels(labels(&["a", "b", "c", "d"]));
    space(
        t,
        vec![
            pts(4, &[0]),
            pts(4, &[0, 1]),
            pts(4, &[0, 1, 2]),
            PointSet::full(4),
        ],
    )
}

fn non_idempotent() -> AuraSpace {
    let t = Topology::discrete(3).with_labels(labels(&["a", "b", "c"]));
    space(t, vec![pts(3, &[0, 1]), pts(3, &[1, 2]), pts(3, &[2])])
}

fn closure_gap_coarse() -> AuraSpace {
    let t = Topology::new(
        3,
        vec![pts(3, &[]), pts(3, &[0]), pts(3, &[1, 2]), PointSet::full(3)],
    )
    .with_labels(labels(&["a", "b", "c"]));
    space(t, vec![pts(3, &[0]), pts(3, &[1, 2]), pts(3, &[1, 2])])
}

fn closure_gap_discrete() -> AuraSpace {
    let t = Topology::discrete(3).with_labels(labels(&["a", "b", "c"]));
    space(t, vec![pts(3, &[0, 1]), pts(3, &[1]), pts(3, &[2])])
}

fn semi_not_pre() -> AuraSpace {
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
    )
    .with_labels(labels(&["a", "b", "c", "d"]));
    space(
        t,
        vec![
            pts(4, &[0]),
            pts(4, &[0, 1, 2]),
            pts(4, &[2]),
            PointSet::full(4),
        ],
    )
}

fn pre_not_semi() -> AuraSpace {
    let t = Topology::new(
        4,
        vec![pts(4, &[]), pts(4, &[0, 1]), pts(4, &[2, 3]), PointSet::full(4)],
    )
    .with_labels(labels(&["a", "b", "c", "d"]));
    space(
        t,
        vec![
            pts(4, &[0, 1]),
            pts(4, &[0, 1]),
            pts(4, &[2, 3]),
            PointSet::full(4),
        ],
    )
}

fn trivial_on_discrete() -> AuraSpace {
    let t = Topology::discrete(3).with_labels(labels(&["a", "b", "c"]));
    space(t, vec![PointSet::full(3); 3])
}

fn discrete_aura() -> AuraSpace {
    let t = Topology::discrete(3).with_labels(labels(&["a", "b", "c"]));
    space(t, (0..3).map(|i| PointSet::singleton(3, i)).collect())
}

fn medical_auras() -> Vec<PointSet> {
    vec![
        pts(6, &[0, 1]),
        pts(6, &[0, 1, 2]),
        pts(6, &[1, 2]),
        pts(6, &[3, 4]),
        pts(6, &[3, 4, 5]),
        pts(6, &[4, 5]),
    ]
}

fn medical() -> AuraSpace {
    let auras = medical_auras();
    let t = Topology::from_subbasis(6, &auras)
        .expect("subbasis closure of the patient auras succeeds")
        .with_labels(labels(&["p1", "p2", "p3", "p4", "p5", "p6"]));
    space(t, auras)
}

fn medical_refined() -> AuraSpace {
    let mut auras = medical_auras();
    auras[1] = pts(6, &[0, 1]);
    auras[4] = pts(6, &[3, 4]);
    medical()
        .with_scope(ScopeFunction::new(auras))
        .expect("the tightened auras stay open")
}

fn epidemic_seven() -> AuraSpace {
    let t = Topology::discrete(7).with_labels(labels(&["a", "b", "c", "d", "e", "f", "g"]));
    space(
        t,
        vec![
            pts(7, &[0, 1]),
            pts(7, &[1, 2, 3]),
            pts(7, &[2]),
            pts(7, &[3, 4]),
            pts(7, &[4, 5]),
            pts(7, &[5]),
            pts(7, &[6]),
        ],
    )
}

fn sensor_three() -> SensorDeployment {
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
