//! The space document format.
//!
//! A space document is a TOML file with a point list, an open-set family as
//! label lists, and an aura table mapping each point to its aura. Sets
//! always serialize as label lists sorted in point order, and the encoder
//! emits opens in canonical numeric order, so encoding is byte-stable.
//!
//! Decoding is purely syntactic: label resolution failures (unknown or
//! duplicate labels) are errors, while broken axioms (a non-open aura, a
//! missing aura entry) surface as violations from [`DecodedSpace::violations`].

use aura_topology::scope::validate_scope;
use aura_topology::{AuraSpace, PointSet, ScopeFunction, Topology};
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A syntactic failure: the document cannot be resolved against its own
/// point list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocumentError(pub String);

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for DocumentError {}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawSpaceDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    points: Vec<String>,
    opens: Vec<Vec<String>>,
    aura: IndexMap<String, Vec<String>>,
}

/// A syntactically resolved document, not yet validated against the axioms.
#[derive(Debug, Clone)]
pub struct DecodedSpace {
    pub name: Option<String>,
    pub description: Option<String>,
    pub topology: Topology,
    /// Aura per point; `None` when the aura table omits the point.
    pub auras: Vec<Option<PointSet>>,
}

/// One axiom violation found in a decoded document, rendered with labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: String,
    pub message: String,
}

fn check_label(label: &str) -> Result<(), DocumentError> {
    if label.is_empty() {
        return Err(DocumentError("empty point label".into()));
    }
    if label
        .chars()
        .any(|c| c.is_whitespace() || c == ',' || c == '=' || c == ':')
    {
        return Err(DocumentError(format!(
            "label `{label}` contains whitespace or a reserved character"
        )));
    }
    Ok(())
}

fn resolve_set(
    points: &[String],
    labels: &[String],
    context: &str,
) -> Result<PointSet, DocumentError> {
    let mut set = PointSet::empty(points.len());
    for label in labels {
        let index = points
            .iter()
            .position(|p| p == label)
            .ok_or_else(|| DocumentError(format!("unknown label `{label}` in {context}")))?;
        if set.contains(index) {
            return Err(DocumentError(format!(
                "label `{label}` repeated in {context}"
            )));
        }
        set.insert(index);
    }
    Ok(set)
}

/// Parses and resolves a space document. Malformed TOML, unknown labels,
/// and duplicate points are errors; axiom violations are not detected here.
pub fn decode_space(text: &str) -> Result<DecodedSpace, DocumentError> {
    let raw: RawSpaceDocument =
        toml::from_str(text).map_err(|e| DocumentError(format!("malformed document: {e}")))?;
    if raw.points.is_empty() {
        return Err(DocumentError("the point list is empty".into()));
    }
    for (i, label) in raw.points.iter().enumerate() {
        check_label(label)?;
        if raw.points[..i].contains(label) {
            return Err(DocumentError(format!("duplicate point `{label}`")));
        }
    }

    let opens = raw
        .opens
        .iter()
        .enumerate()
        .map(|(i, labels)| resolve_set(&raw.points, labels, &format!("open set #{i}")))
        .collect::<Result<Vec<_>, _>>()?;

    let mut auras: Vec<Option<PointSet>> = vec![None; raw.points.len()];
    for (label, value) in &raw.aura {
        let index = raw
            .points
            .iter()
            .position(|p| p == label)
            .ok_or_else(|| DocumentError(format!("aura table names unknown point `{label}`")))?;
        auras[index] = Some(resolve_set(
            &raw.points,
            value,
            &format!("aura of `{label}`"),
        )?);
    }

    let topology = Topology::new(raw.points.len(), opens).with_labels(raw.points);
    Ok(DecodedSpace {
        name: raw.name,
        description: raw.description,
        topology,
        auras,
    })
}

impl DecodedSpace {
    fn labels(&self) -> &[String] {
        self.topology.labels().expect("decoded topologies carry labels")
    }

    fn render(&self, set: &PointSet) -> String {
        let labels = self.labels();
        let names: Vec<&str> = set.iter().map(|i| labels[i].as_str()).collect();
        format!("{{{}}}", names.join(", "))
    }

    /// Every axiom violation, rendered with the document's labels.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for v in self.topology.validate() {
            use aura_topology::TopologyViolation::*;
            let (kind, message) = match &v {
                MissingEmptySet => ("missing_empty_set".into(), v.to_string()),
                MissingUniverse => ("missing_universe".into(), v.to_string()),
                DuplicateOpen(s) => (
                    "duplicate_open".to_string(),
                    format!("open set {} is listed twice", self.render(s)),
                ),
                IntersectionMissing(a, b) => (
                    "intersection_missing".to_string(),
                    format!(
                        "intersection of {} and {} is not open",
                        self.render(a),
                        self.render(b)
                    ),
                ),
                UnionMissing(a, b) => (
                    "union_missing".to_string(),
                    format!(
                        "union of {} and {} is not open",
                        self.render(a),
                        self.render(b)
                    ),
                ),
            };
            out.push(Violation { kind, message });
        }

        let labels = self.labels();
        for (x, aura) in self.auras.iter().enumerate() {
            if aura.is_none() {
                out.push(Violation {
                    kind: "missing_aura".into(),
                    message: format!("the aura table omits point `{}`", labels[x]),
                });
            }
        }
        if self.auras.iter().all(Option::is_some) {
            let scope = ScopeFunction::new(
                self.auras.iter().map(|a| a.clone().unwrap()).collect(),
            );
            if let Ok(scope_violations) = validate_scope(&self.topology, &scope) {
                for v in scope_violations {
                    use aura_topology::ScopeViolation::*;
                    let (kind, message) = match v {
                        PointOutsideAura(x) => (
                            "point_outside_aura".to_string(),
                            format!("point `{}` is not a member of its own aura", labels[x]),
                        ),
                        AuraNotOpen(x) => (
                            "aura_not_open".to_string(),
                            format!(
                                "the aura {} of point `{}` is not an open set",
                                self.render(self.auras[x].as_ref().unwrap()),
                                labels[x]
                            ),
                        ),
                    };
                    out.push(Violation { kind, message });
                }
            }
        }
        out
    }

    /// Builds the validated space; fails when any violation is present.
    pub fn into_space(self) -> Result<AuraSpace, DocumentError> {
        let violations = self.violations();
        if let Some(first) = violations.first() {
            return Err(DocumentError(format!(
                "invalid space ({} violation(s); first: {})",
                violations.len(),
                first.message
            )));
        }
        let scope = ScopeFunction::new(self.auras.into_iter().map(Option::unwrap).collect());
        AuraSpace::new(self.topology, scope).map_err(|e| DocumentError(e.to_string()))
    }
}

/// Encodes a space as a document. Opens are emitted in canonical numeric
/// order and the aura table in point order, making the encoding canonical.
pub fn encode_space(
    space: &AuraSpace,
    name: Option<&str>,
    description: Option<&str>,
) -> Result<String, DocumentError> {
    let labels: Vec<String> = match space.topology().labels() {
        Some(labels) => labels.to_vec(),
        None => (0..space.universe_size()).map(|i| format!("p{i}")).collect(),
    };
    let as_labels = |set: &PointSet| -> Vec<String> {
        set.iter().map(|i| labels[i].clone()).collect()
    };
    let opens = space
        .topology()
        .opens()
        .map_err(|e| DocumentError(e.to_string()))?
        .iter()
        .map(&as_labels)
        .collect();
    let aura = labels
        .iter()
        .cloned()
        .zip(space.scope().auras().iter().map(&as_labels))
        .collect();
    let raw = RawSpaceDocument {
        name: name.map(str::to_string),
        description: description.map(str::to_string),
        points: labels.clone(),
        opens,
        aura,
    };
    toml::to_string(&raw).map_err(|e| DocumentError(format!("encoding failed: {e}")))
}

/// Resolves a comma-separated label list against a space's points.
pub fn parse_label_set(space: &AuraSpace, text: &str) -> Result<PointSet, DocumentError> {
    let labels: Vec<String> = if text.trim().is_empty() {
        Vec::new()
    } else {
        text.split(',').map(|s| s.trim().to_string()).collect()
    };
    let points = space
        .topology()
        .labels()
        .expect("spaces handled by the CLI carry labels")
        .to_vec();
    resolve_set(&points, &labels, "the requested set")
}

/// A partial document carrying only an aura table, used for distancing
/// interventions; resolved against an existing space.
pub fn decode_aura_table(space: &AuraSpace, text: &str) -> Result<ScopeFunction, DocumentError> {
    #[derive(Deserialize)]
    struct AuraOnly {
        aura: IndexMap<String, Vec<String>>,
    }
    let raw: AuraOnly =
        toml::from_str(text).map_err(|e| DocumentError(format!("malformed aura table: {e}")))?;
    let points = space
        .topology()
        .labels()
        .expect("spaces handled by the CLI carry labels")
        .to_vec();
    let mut auras: Vec<Option<PointSet>> = vec![None; points.len()];
    for (label, value) in &raw.aura {
        let index = points
            .iter()
            .position(|p| p == label)
            .ok_or_else(|| DocumentError(format!("aura table names unknown point `{label}`")))?;
        auras[index] = Some(resolve_set(&points, value, &format!("aura of `{label}`"))?);
    }
    if let Some(missing) = auras.iter().position(Option::is_none) {
        return Err(DocumentError(format!(
            "the aura table omits point `{}`",
            points[missing]
        )));
    }
    Ok(ScopeFunction::new(
        auras.into_iter().map(Option::unwrap).collect(),
    ))
}
