//! Scenario data model: service demand, component hierarchy, reliability
//! classes, common roots, and placement presets.
//!
//! Levels are 1-based: level 1 is the top of the hierarchy (data center),
//! level `depth` is the bottom (one VM per VNF instance). Class indices are
//! 0-based everywhere in this crate; the JSON scenario format uses 1-based
//! class indices in `common_roots` and is converted on load (see
//! [`crate::scenario_io`]).

use serde::{Deserialize, Serialize};

/// Traffic/redundancy demand: `k` active sub-chains, `r` backups, `psi`
/// VNF types per chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ServiceDemand {
    /// Number of parallel active sub-flows (and active sub-chains), >= 1.
    pub k: u64,
    /// Number of backup sub-chains, >= 0.
    pub r: u64,
    /// Chain length: number of VNF types, >= 1.
    pub psi: u32,
}

impl ServiceDemand {
    pub fn new(k: u64, r: u64, psi: u32) -> Self {
        Self { k, r, psi }
    }

    /// Total sub-chain count `n = k + r`.
    pub fn total_subchains(&self) -> u64 {
        self.k + self.r
    }
}

/// Ordered component levels, highest first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hierarchy {
    level_names: Vec<String>,
}

impl Hierarchy {
    /// The standard four-level data-center hierarchy.
    pub fn standard() -> Self {
        Self::new(["dc", "rack", "server", "vm"].map(String::from).to_vec())
    }

    pub fn new(level_names: Vec<String>) -> Self {
        Self { level_names }
    }

    /// Number of component levels.
    pub fn depth(&self) -> usize {
        self.level_names.len()
    }

    /// Name of a 1-based level.
    pub fn level_name(&self, level: usize) -> &str {
        &self.level_names[level - 1]
    }

    pub fn level_names(&self) -> &[String] {
        &self.level_names
    }
}

impl Default for Hierarchy {
    fn default() -> Self {
        Self::standard()
    }
}

/// Placement of one reliability class: how its `n_sub` same-type VNF
/// replicas spread over the hierarchy and how far apart different VNF
/// types of one sub-chain are kept.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReliabilityClassSpec {
    /// Number of sub-chains in this class, >= 1.
    pub n_sub: u64,
    /// Per-level replica counts: `epsilon[c-1]` components of level `c`
    /// inside each level-`c-1` component (the first entry counts top-level
    /// components). The product over all levels must equal `n_sub`.
    pub epsilon: Vec<u64>,
    /// Disjointedness level: the bottom `delta` levels are not shared
    /// between different VNF types of one sub-chain. In `1..=depth`.
    pub delta: usize,
    /// Per-level component success probabilities, each in `[0, 1]`.
    pub reliabilities: Vec<f64>,
}

impl ReliabilityClassSpec {
    /// Count of top levels shared by all VNF types of one sub-chain.
    pub fn shared_level_count(&self) -> usize {
        self.epsilon.len() - self.delta
    }

    /// Heterogeneity degree: how many bottom levels separate same-type
    /// replicas. For single-multiplicity layouts this is `depth - c* + 1`
    /// where `c*` is the highest level with more than one component per
    /// parent. A class with `n_sub = 1` has nothing to separate and is
    /// reported as `depth` by convention.
    pub fn heterogeneity_degree(&self) -> usize {
        let depth = self.epsilon.len();
        match self.epsilon.iter().position(|&n| n > 1) {
            Some(idx) => depth - idx, // idx is 0-based, so depth - (c*-1) - 1 + 1
            None => depth,
        }
    }
}

/// A single component instance shared as an ancestor by every sub-chain of
/// two or more reliability classes. Its failure takes down all of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommonRoot {
    /// 1-based hierarchy level of the shared component; never the bottom
    /// level (VMs are always disjoint).
    pub level: usize,
    /// 0-based indices of the reliability classes joined by this root.
    pub classes: Vec<usize>,
}

impl CommonRoot {
    pub fn new(level: usize, mut classes: Vec<usize>) -> Self {
        classes.sort_unstable();
        classes.dedup();
        Self { level, classes }
    }

    pub fn contains_class(&self, class: usize) -> bool {
        self.classes.binary_search(&class).is_ok()
    }

    /// True when `self`'s class set is a (non-strict) subset of `other`'s.
    pub fn is_subset_of(&self, other: &CommonRoot) -> bool {
        self.classes.iter().all(|c| other.contains_class(*c))
    }

    pub fn overlaps(&self, other: &CommonRoot) -> bool {
        self.classes.iter().any(|c| other.contains_class(*c))
    }
}

/// A complete problem instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub demand: ServiceDemand,
    pub hierarchy: Hierarchy,
    /// Reliability classes in canonical evaluation order. The order is
    /// significant: failure-budget accounting walks classes in this order.
    pub classes: Vec<ReliabilityClassSpec>,
    /// Common roots, ancestors first (a root whose class set contains
    /// another root's class set must precede it).
    pub common_roots: Vec<CommonRoot>,
}

impl Scenario {
    /// Scenario without common roots.
    pub fn new(
        demand: ServiceDemand,
        hierarchy: Hierarchy,
        classes: Vec<ReliabilityClassSpec>,
    ) -> Self {
        Self { demand, hierarchy, classes, common_roots: Vec::new() }
    }

    pub fn depth(&self) -> usize {
        self.hierarchy.depth()
    }

    /// Indices into `common_roots` of the roots containing `class`,
    /// in declaration order.
    pub fn roots_of_class(&self, class: usize) -> Vec<usize> {
        self.common_roots
            .iter()
            .enumerate()
            .filter(|(_, root)| root.contains_class(class))
            .map(|(idx, _)| idx)
            .collect()
    }

    /// Highest modeled level of a class: the level of its topmost common
    /// root, or 1 for a root-free class. Levels above a class's topmost
    /// root are outside the model.
    pub fn class_top_level(&self, class: usize) -> usize {
        self.common_roots
            .iter()
            .filter(|root| root.contains_class(class))
            .map(|root| root.level)
            .min()
            .unwrap_or(1)
    }

    /// Check every model invariant; an empty report means the scenario is
    /// well formed. Never aborts: all violations are collected.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let depth = self.depth();
        let mut push = |field: &str, message: String| {
            out.push(Violation { field: field.to_string(), message });
        };

        if depth == 0 {
            push("hierarchy", "hierarchy must have at least one level".into());
            return out;
        }
        if self.demand.k == 0 {
            push("demand.k", "at least one active sub-chain is required".into());
        }
        if self.demand.psi == 0 {
            push("demand.psi", "chain length must be at least 1".into());
        }
        if self.classes.is_empty() {
            push("classes", "at least one reliability class is required".into());
        }

        for (idx, class) in self.classes.iter().enumerate() {
            let field = format!("classes[{idx}]");
            if class.n_sub == 0 {
                push(&field, "n_sub must be at least 1".into());
            }
            if class.epsilon.len() != depth {
                push(&field, format!(
                    "epsilon has {} entries, hierarchy has {} levels",
                    class.epsilon.len(),
                    depth
                ));
                continue;
            }
            if class.epsilon.iter().any(|&n| n == 0) {
                push(&field, "every epsilon entry must be at least 1".into());
            } else {
                let product: u64 = class.epsilon.iter().product();
                if product != class.n_sub {
                    push(&field, format!(
                        "epsilon accounts for {} replicas but n_sub is {}",
                        product, class.n_sub
                    ));
                }
            }
            if class.delta < 1 || class.delta > depth {
                push(&field, format!("delta {} outside 1..={}", class.delta, depth));
            }
            if class.reliabilities.len() != depth {
                push(&field, format!(
                    "{} reliabilities given, hierarchy has {} levels",
                    class.reliabilities.len(),
                    depth
                ));
            }
            for (lvl, p) in class.reliabilities.iter().enumerate() {
                if !(0.0..=1.0).contains(p) || p.is_nan() {
                    push(&field, format!(
                        "reliability {} at level {} outside [0, 1]",
                        p,
                        lvl + 1
                    ));
                }
            }
        }

        let covered: u64 = self.classes.iter().map(|c| c.n_sub).sum();
        if covered != self.demand.total_subchains() {
            push("classes", format!(
                "class counts do not cover n: sum of n_sub is {}, k + r is {}",
                covered,
                self.demand.total_subchains()
            ));
        }
        if self.classes.len() as u64 > self.demand.total_subchains() {
            push("classes", format!(
                "{} reliability classes exceed the {} sub-chains available",
                self.classes.len(),
                self.demand.total_subchains()
            ));
        }

        self.validate_roots(&mut out);
        out
    }

    fn validate_roots(&self, out: &mut Vec<Violation>) {
        let depth = self.depth();
        for (idx, root) in self.common_roots.iter().enumerate() {
            let field = format!("common_roots[{idx}]");
            let mut push = |message: String| {
                out.push(Violation { field: field.clone(), message });
            };

            if root.level >= depth {
                push(format!(
                    "level {} is the {} level and cannot be a common root",
                    root.level,
                    self.hierarchy.level_name(depth)
                ));
            }
            if root.level == 0 {
                push("root level must be at least 1".into());
            }
            if root.classes.len() < 2 {
                push("a common root must join at least two classes".into());
            }
            let mut members_ok = true;
            for &class in &root.classes {
                if class >= self.classes.len() {
                    push(format!("class index {} does not exist", class + 1));
                    members_ok = false;
                }
            }
            if !members_ok || root.level == 0 || root.level >= depth {
                continue;
            }

            for &class in &root.classes {
                let spec = &self.classes[class];
                if spec.epsilon.len() != depth {
                    continue;
                }
                let shared_end = spec.shared_level_count();
                if root.level > shared_end {
                    push(format!(
                        "level {} lies inside the disjoint zone of class {} (shared levels end at {})",
                        root.level,
                        class + 1,
                        shared_end
                    ));
                }
                if spec.epsilon[..root.level].iter().any(|&n| n != 1) {
                    push(format!(
                        "class {} must have single components at and above root level {}",
                        class + 1,
                        root.level
                    ));
                }
                let p_root = spec.reliabilities.get(root.level - 1).copied();
                let p_first =
                    self.classes[root.classes[0]].reliabilities.get(root.level - 1).copied();
                if let (Some(a), Some(b)) = (p_root, p_first) {
                    if a != b {
                        push(format!(
                            "classes joined by one root must agree on its reliability: class {} has {}, class {} has {}",
                            class + 1,
                            a,
                            root.classes[0] + 1,
                            b
                        ));
                    }
                }
            }

            // Overlapping roots must form nested chains, ancestors first,
            // with strictly higher levels outward and no level gaps.
            for (jdx, other) in self.common_roots.iter().enumerate().take(idx) {
                if !root.overlaps(other) {
                    continue;
                }
                let sub = root.is_subset_of(other);
                let sup = other.is_subset_of(root);
                if !sub && !sup {
                    push(format!(
                        "overlapping class sets with common_roots[{jdx}] are not nested"
                    ));
                } else if sub && sup {
                    if other.level == root.level {
                        push(format!(
                            "duplicate root at level {} for the same classes as common_roots[{jdx}]",
                            root.level
                        ));
                    } else if other.level > root.level {
                        push(format!(
                            "ancestor root at level {} must be declared before common_roots[{jdx}]",
                            root.level
                        ));
                    }
                } else if sub {
                    if other.level >= root.level {
                        push(format!(
                            "root must sit strictly below its ancestor common_roots[{jdx}] (levels {} vs {})",
                            root.level, other.level
                        ));
                    }
                } else {
                    push(format!(
                        "ancestor root common_roots[{idx}] must be declared before its descendant common_roots[{jdx}]"
                    ));
                }
            }
            let is_top = !self
                .common_roots
                .iter()
                .enumerate()
                .any(|(jdx, other)| jdx != idx && root.is_subset_of(other) && other.level < root.level);
            if !is_top {
                let has_direct_parent = self.common_roots.iter().enumerate().any(|(jdx, other)| {
                    jdx != idx && root.is_subset_of(other) && other.level + 1 == root.level
                });
                if !has_direct_parent {
                    push(format!(
                        "nested root at level {} has no enclosing root at level {}",
                        root.level,
                        root.level - 1
                    ));
                }
            }
        }
    }

    /// Validate and return the scenario, or the full violation list.
    pub fn validated(self) -> Result<Self, InvalidScenario> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(self)
        } else {
            Err(InvalidScenario { violations })
        }
    }
}

/// One broken invariant found by [`Scenario::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Dotted path of the offending field.
    pub field: String,
    pub message: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

/// Error carrying every violation of a rejected scenario.
#[derive(Debug, Clone, thiserror::Error)]
#[error("invalid scenario: {}", .violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
pub struct InvalidScenario {
    pub violations: Vec<Violation>,
}

/// High-level placement strategy: heterogeneity degree for same-type
/// replicas and disjointedness level for different VNF types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlacementPreset {
    /// Target heterogeneity degree, in `1..=depth`.
    pub nr: usize,
    /// Disjointedness level, in `1..=depth`.
    pub delta: usize,
}

impl PlacementPreset {
    pub fn new(nr: usize, delta: usize) -> Self {
        Self { nr, delta }
    }

    /// Placement label as used in the published taxonomy: `v` when VNFs of
    /// the same type are kept together more tightly than whole chains,
    /// `s` for the chain-based layouts, `v, s` when both coincide.
    pub fn placement_label(&self, depth: usize) -> &'static str {
        let spread = depth - self.nr + 1; // separation level of same-type replicas
        let chain = depth - self.delta + 1; // first disjoint level between types
        use std::cmp::Ordering::*;
        match spread.cmp(&chain) {
            Less => "s",
            Equal => "v, s",
            Greater => "v",
        }
    }
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum PresetError {
    #[error("heterogeneity degree {nr} outside 1..={depth}")]
    InvalidNr { nr: usize, depth: usize },
    #[error("disjointedness level {delta} outside 1..={depth}")]
    InvalidDelta { delta: usize, depth: usize },
    #[error("a class needs at least one sub-chain")]
    EmptyClass,
    #[error("{given} reliabilities given, hierarchy has {depth} levels")]
    ReliabilityCount { given: usize, depth: usize },
}

/// Expand an `(nr, delta)` preset into an explicit class layout: all
/// same-type multiplicity sits at the single separation level
/// `depth - nr + 1`, every other level holds one component per parent.
pub fn expand_preset(
    preset: PlacementPreset,
    n_sub: u64,
    reliabilities: Vec<f64>,
    hierarchy: &Hierarchy,
) -> Result<ReliabilityClassSpec, PresetError> {
    let depth = hierarchy.depth();
    if preset.nr < 1 || preset.nr > depth {
        return Err(PresetError::InvalidNr { nr: preset.nr, depth });
    }
    if preset.delta < 1 || preset.delta > depth {
        return Err(PresetError::InvalidDelta { delta: preset.delta, depth });
    }
    if n_sub == 0 {
        return Err(PresetError::EmptyClass);
    }
    if reliabilities.len() != depth {
        return Err(PresetError::ReliabilityCount { given: reliabilities.len(), depth });
    }
    let mut epsilon = vec![1u64; depth];
    epsilon[depth - preset.nr] = n_sub;
    Ok(ReliabilityClassSpec { n_sub, epsilon, delta: preset.delta, reliabilities })
}
