//! Report documents.
//!
//! Every command emits one JSON report: the command name, an echo of each
//! input with a content digest, an `ok` flag, and a command-specific result
//! payload. Sets appear as label lists in point order and ratios as
//! `{num, den, decimal}` objects, so reports are deterministic for fixed
//! inputs and seeds.

use aura_topology::rough::{ApproximationReport, Ratio};
use aura_topology::scope::ClosureTrace;
use aura_topology::spread::SpreadTrace;
use aura_topology::{AuraSpace, ClassProfile, ContinuityProfile, PointSet, SeparationProfile};
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Serialize)]
pub struct InputEcho {
    pub source: String,
    pub digest: String,
}

impl InputEcho {
    pub fn new(source: impl Into<String>, bytes: &[u8]) -> InputEcho {
        let mut hasher = Sha256::new();
        hasher.update(bytes);
        InputEcho {
            source: source.into(),
            digest: format!("sha256:{}", hex::encode(hasher.finalize())),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report<T: Serialize> {
    pub command: String,
    pub inputs: Vec<InputEcho>,
    pub ok: bool,
    pub result: T,
}

/// How reports are printed: indented or single-line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Report,
    Compact,
}

impl<T: Serialize> Report<T> {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Report => serde_json::to_string_pretty(self).expect("reports serialize"),
            Format::Compact => serde_json::to_string(self).expect("reports serialize"),
        }
    }
}

/// Renders a set as its members' labels, in point order.
pub fn labels_of(space: &AuraSpace, set: &PointSet) -> Vec<String> {
    let labels = space
        .topology()
        .labels()
        .expect("spaces handled by the CLI carry labels");
    set.iter().map(|i| labels[i].clone()).collect()
}

pub fn label_of(space: &AuraSpace, point: usize) -> String {
    space
        .topology()
        .labels()
        .expect("spaces handled by the CLI carry labels")[point]
        .clone()
}

#[derive(Debug, Clone, Serialize)]
pub struct RatioJson {
    pub num: u64,
    pub den: u64,
    pub decimal: String,
}

impl From<Ratio> for RatioJson {
    fn from(r: Ratio) -> RatioJson {
        RatioJson {
            num: r.num,
            den: r.den,
            decimal: r.decimal3(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ApproximationJson {
    pub lower: Vec<String>,
    pub upper: Vec<String>,
    pub boundary: Vec<String>,
    pub accuracy: RatioJson,
    pub roughness: RatioJson,
    pub definable: bool,
}

pub fn approximation_json(space: &AuraSpace, report: &ApproximationReport) -> ApproximationJson {
    ApproximationJson {
        lower: labels_of(space, &report.lower),
        upper: labels_of(space, &report.upper),
        boundary: labels_of(space, &report.boundary),
        accuracy: report.accuracy.into(),
        roughness: report.roughness().into(),
        definable: report.definable,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TraceJson {
    pub stages: Vec<Vec<String>>,
    pub stabilized_at: usize,
}

pub fn closure_trace_json(space: &AuraSpace, trace: &ClosureTrace) -> TraceJson {
    TraceJson {
        stages: trace.stages.iter().map(|s| labels_of(space, s)).collect(),
        stabilized_at: trace.stabilized_at,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpreadTraceJson {
    pub stages: Vec<Vec<String>>,
    pub stabilized_at: usize,
    pub reach: Vec<String>,
    pub unreached: Vec<String>,
}

pub fn spread_trace_json(space: &AuraSpace, trace: &SpreadTrace) -> SpreadTraceJson {
    SpreadTraceJson {
        stages: trace.stages.iter().map(|s| labels_of(space, s)).collect(),
        stabilized_at: trace.stabilized_at,
        reach: labels_of(space, &trace.reach),
        unreached: labels_of(space, &trace.unreached),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassProfileJson {
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

impl From<ClassProfile> for ClassProfileJson {
    fn from(p: ClassProfile) -> ClassProfileJson {
        ClassProfileJson {
            open: p.open,
            semi_open: p.semi_open,
            pre_open: p.pre_open,
            alpha_open: p.alpha_open,
            beta_open: p.beta_open,
            a_open: p.a_open,
            a_semi_open: p.a_semi_open,
            a_pre_open: p.a_pre_open,
            a_alpha_open: p.a_alpha_open,
            a_beta_open: p.a_beta_open,
            a_b_open: p.a_b_open,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ContinuityJson {
    pub continuous: bool,
    pub a_continuous: bool,
    pub a_semi: bool,
    pub a_pre: bool,
    pub a_alpha: bool,
    pub a_beta: bool,
}

impl From<ContinuityProfile> for ContinuityJson {
    fn from(p: ContinuityProfile) -> ContinuityJson {
        ContinuityJson {
            continuous: p.continuous,
            a_continuous: p.a_continuous,
            a_semi: p.a_semi,
            a_pre: p.a_pre,
            a_alpha: p.a_alpha,
            a_beta: p.a_beta,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SeparationJson {
    pub a_t0: bool,
    pub a_t1: bool,
    pub a_t2: bool,
    pub a_regular: bool,
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_t0_witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_t1_witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_t2_witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_regular_witness: Option<(String, Vec<String>)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t0_witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t1_witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t2_witness: Option<Vec<String>>,
}

pub fn separation_json(space: &AuraSpace, p: &SeparationProfile) -> SeparationJson {
    let pair = |w: Option<(usize, usize)>| {
        w.map(|(x, y)| vec![label_of(space, x), label_of(space, y)])
    };
    SeparationJson {
        a_t0: p.a_t0,
        a_t1: p.a_t1,
        a_t2: p.a_t2,
        a_regular: p.a_regular,
        t0: p.t0,
        t1: p.t1,
        t2: p.t2,
        a_t0_witness: pair(p.a_t0_witness),
        a_t1_witness: pair(p.a_t1_witness),
        a_t2_witness: pair(p.a_t2_witness),
        a_regular_witness: p
            .a_regular_witness
            .as_ref()
            .map(|(x, f)| (label_of(space, *x), labels_of(space, f))),
        t0_witness: pair(p.t0_witness),
        t1_witness: pair(p.t1_witness),
        t2_witness: pair(p.t2_witness),
    }
}
