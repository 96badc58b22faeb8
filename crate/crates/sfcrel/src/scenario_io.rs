//! Scenario JSON format: a field-for-field mirror of [`Scenario`] with two
//! conveniences for authors. The `hierarchy` block may be omitted (the
//! standard four levels apply), and each class may give a `preset`
//! (`{nr, delta}`) instead of an explicit `epsilon`/`delta` pair, expanded
//! on load. Class indices inside `common_roots.classes` are 1-based in the
//! file and 0-based in memory.

use serde::{Deserialize, Serialize};

use crate::model::{
    expand_preset, CommonRoot, Hierarchy, PlacementPreset, ReliabilityClassSpec, Scenario,
    ServiceDemand,
};

/// Serialized form of a scenario.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScenarioFile {
    pub demand: DemandFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hierarchy: Option<HierarchyFile>,
    pub classes: Vec<ClassEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub common_roots: Vec<RootEntry>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct DemandFile {
    pub k: u64,
    pub r: u64,
    pub psi: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HierarchyFile {
    pub levels: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClassEntry {
    Preset { preset: PresetEntry, n_sub: u64, reliabilities: Vec<f64> },
    Explicit { n_sub: u64, epsilon: Vec<u64>, delta: usize, reliabilities: Vec<f64> },
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct PresetEntry {
    pub nr: usize,
    pub delta: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootEntry {
    pub level: usize,
    /// 1-based class indices.
    pub classes: Vec<usize>,
}

#[derive(Debug, thiserror::Error)]
pub enum ScenarioIoError {
    #[error("malformed scenario JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("classes[{index}]: {source}")]
    Preset { index: usize, source: crate::model::PresetError },
    #[error("common_roots[{index}].classes: class index {given} is 1-based and must be at least 1")]
    RootIndex { index: usize, given: usize },
}

impl ScenarioFile {
    pub fn from_scenario(scenario: &Scenario) -> Self {
        Self {
            demand: DemandFile {
                k: scenario.demand.k,
                r: scenario.demand.r,
                psi: scenario.demand.psi,
            },
            hierarchy: Some(HierarchyFile { levels: scenario.hierarchy.level_names().to_vec() }),
            classes: scenario
                .classes
                .iter()
                .map(|class| ClassEntry::Explicit {
                    n_sub: class.n_sub,
                    epsilon: class.epsilon.clone(),
                    delta: class.delta,
                    reliabilities: class.reliabilities.clone(),
                })
                .collect(),
            common_roots: scenario
                .common_roots
                .iter()
                .map(|root| RootEntry {
                    level: root.level,
                    classes: root.classes.iter().map(|&c| c + 1).collect(),
                })
                .collect(),
        }
    }

    pub fn into_scenario(self) -> Result<Scenario, ScenarioIoError> {
        let hierarchy = match self.hierarchy {
            Some(h) => Hierarchy::new(h.levels),
            None => Hierarchy::standard(),
        };
        let mut classes = Vec::with_capacity(self.classes.len());
        for (index, entry) in self.classes.into_iter().enumerate() {
            let class = match entry {
                ClassEntry::Explicit { n_sub, epsilon, delta, reliabilities } => {
                    ReliabilityClassSpec { n_sub, epsilon, delta, reliabilities }
                }
                ClassEntry::Preset { preset, n_sub, reliabilities } => expand_preset(
                    PlacementPreset::new(preset.nr, preset.delta),
                    n_sub,
                    reliabilities,
                    &hierarchy,
                )
                .map_err(|source| ScenarioIoError::Preset { index, source })?,
            };
            classes.push(class);
        }
        let mut common_roots = Vec::with_capacity(self.common_roots.len());
        for (index, entry) in self.common_roots.into_iter().enumerate() {
            let mut zero_based = Vec::with_capacity(entry.classes.len());
            for given in entry.classes {
                if given == 0 {
                    return Err(ScenarioIoError::RootIndex { index, given });
                }
                zero_based.push(given - 1);
            }
            common_roots.push(CommonRoot::new(entry.level, zero_based));
        }
        Ok(Scenario {
            demand: ServiceDemand::new(self.demand.k, self.demand.r, self.demand.psi),
            hierarchy,
            classes,
            common_roots,
        })
    }
}

/// Parse a scenario from its JSON document. The result is not yet
/// validated; call [`Scenario::validate`] or let the evaluators do it.
pub fn scenario_from_json(json: &str) -> Result<Scenario, ScenarioIoError> {
    let file: ScenarioFile = serde_json::from_str(json)?;
    file.into_scenario()
}

/// Canonical JSON for a scenario: explicit classes, 1-based root indices.
pub fn scenario_to_json(scenario: &Scenario) -> String {
    let mut text = serde_json::to_string_pretty(&ScenarioFile::from_scenario(scenario))
        .expect("scenario serialization cannot fail");
    text.push('\n');
    text
}
