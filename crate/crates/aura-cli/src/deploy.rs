//! Sensor deployment files.
//!
//! A deployment document is a TOML file with a region rectangle, a grid
//! resolution, a list of `[x, y, range]` sensor triples, and optionally a
//! ball radius for points outside every detection disk.

use crate::document::DocumentError;
use aura_topology::{Region, Sensor, SensorDeployment, UncoveredAura};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawDeployment {
    /// `[x0, y0, x1, y1]`.
    region: [f64; 4],
    resolution: f64,
    /// Each sensor as `[x, y, range]`.
    sensors: Vec<[f64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    uncovered_delta: Option<f64>,
}

pub fn decode_deployment(text: &str) -> Result<SensorDeployment, DocumentError> {
    let raw: RawDeployment =
        toml::from_str(text).map_err(|e| DocumentError(format!("malformed deployment: {e}")))?;
    let [x0, y0, x1, y1] = raw.region;
    let deployment = SensorDeployment::new(
        raw.sensors
            .iter()
            .map(|&[x, y, r]| Sensor::new(x, y, r))
            .collect(),
        Region::new(x0, y0, x1, y1),
        raw.resolution,
    );
    Ok(match raw.uncovered_delta {
        Some(delta) => deployment.with_uncovered(UncoveredAura::DeltaBall(delta)),
        None => deployment,
    })
}

pub fn encode_deployment(deployment: &SensorDeployment) -> Result<String, DocumentError> {
    let raw = RawDeployment {
        region: [
            deployment.region.x0,
            deployment.region.y0,
            deployment.region.x1,
            deployment.region.y1,
        ],
        resolution: deployment.resolution,
        sensors: deployment
            .sensors
            .iter()
            .map(|s| [s.x, s.y, s.range])
            .collect(),
        uncovered_delta: match deployment.uncovered {
            UncoveredAura::Singleton => None,
            UncoveredAura::DeltaBall(delta) => Some(delta),
        },
    };
    toml::to_string(&raw).map_err(|e| DocumentError(format!("encoding failed: {e}")))
}

/// Parses a rectangle given as `x0,y0,x1,y1`.
pub fn parse_rect(text: &str) -> Result<Region, DocumentError> {
    let parts: Vec<f64> = text
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| DocumentError(format!("bad rectangle `{text}`: {e}")))?;
    if parts.len() != 4 {
        return Err(DocumentError(format!(
            "a rectangle needs four coordinates, got {}",
            parts.len()
        )));
    }
    Ok(Region::new(parts[0], parts[1], parts[2], parts[3]))
}
