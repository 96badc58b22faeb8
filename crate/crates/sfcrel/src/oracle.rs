//! Ground-truth engines over an explicit component-instance tree: exact
//! exhaustive enumeration over all intrinsic failure states, and seeded
//! Monte-Carlo simulation with a counter-based generator that is
//! bit-reproducible for a fixed `(seed, trials)` regardless of how the
//! trials are partitioned across workers.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analytic::CompensatedSum;
use crate::model::{InvalidScenario, Scenario, ServiceDemand};

/// Default node-count cap for exhaustive enumeration.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 24;

/// Owner of a tree node: a reliability class or a common root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeTag {
    Class(usize),
    Root(usize),
}

/// One component instance.
#[derive(Debug, Clone)]
pub struct Node {
    /// 1-based hierarchy level.
    pub level: usize,
    /// Parent node id; `None` for forest roots. Parents always precede
    /// children in the node list.
    pub parent: Option<usize>,
    pub tag: NodeTag,
    /// VNF type hosted by a bottom-level node, 1-based.
    pub vnf_type: Option<usize>,
    pub reliability: f64,
}

/// Explicit instance tree for a scenario: shared ancestor levels per class,
/// a merged single instance per common root, and one branch per VNF type
/// through the disjoint levels.
#[derive(Debug, Clone)]
pub struct ComponentTree {
    nodes: Vec<Node>,
    /// Per VNF type (0-based), the ids of its bottom-level nodes.
    vm_index: Vec<Vec<usize>>,
    depth: usize,
}

impl ComponentTree {
    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Bottom-level node ids hosting the given 1-based VNF type.
    pub fn vms_of_type(&self, vnf_type: usize) -> &[usize] {
        &self.vm_index[vnf_type - 1]
    }

    /// Number of nodes at a 1-based level.
    pub fn level_count(&self, level: usize) -> usize {
        self.nodes.iter().filter(|n| n.level == level).count()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum OracleError {
    #[error(transparent)]
    Invalid(#[from] InvalidScenario),
    #[error("tree has {nodes} nodes, exhaustive cap is {cap}")]
    TooManyNodes { nodes: usize, cap: usize },
}

/// Build the deterministic component-instance tree of a scenario.
pub fn instantiate_tree(scenario: &Scenario) -> Result<ComponentTree, OracleError> {
    let violations = scenario.validate();
    if !violations.is_empty() {
        return Err(InvalidScenario { violations }.into());
    }
    let depth = scenario.depth();
    let psi = scenario.demand.psi as usize;
    let mut nodes: Vec<Node> = Vec::new();
    let mut vm_index = vec![Vec::new(); psi];

    // Common roots first, in declaration order (ancestors precede
    // descendants), each attached to its enclosing root when nested.
    let mut root_node: Vec<usize> = Vec::with_capacity(scenario.common_roots.len());
    for (idx, root) in scenario.common_roots.iter().enumerate() {
        let parent = scenario.common_roots[..idx]
            .iter()
            .enumerate()
            .find(|(_, other)| root.is_subset_of(other) && other.level + 1 == root.level)
            .map(|(jdx, _)| root_node[jdx]);
        nodes.push(Node {
            level: root.level,
            parent,
            tag: NodeTag::Root(idx),
            vnf_type: None,
            reliability: scenario.classes[root.classes[0]].reliabilities[root.level - 1],
        });
        root_node.push(nodes.len() - 1);
    }

    for (class_idx, class) in scenario.classes.iter().enumerate() {
        let anchor = scenario
            .roots_of_class(class_idx)
            .into_iter()
            .max_by_key(|&r| scenario.common_roots[r].level)
            .map(|r| root_node[r]);
        let start = anchor.map_or(1, |n| nodes[n].level + 1);
        let shared_end = class.shared_level_count();

        // Shared zone below the root chain.
        let mut frontier: Vec<Option<usize>> = vec![anchor];
        for level in start..=shared_end {
            let mut next = Vec::new();
            for &parent in &frontier {
                for _ in 0..class.epsilon[level - 1] {
                    nodes.push(Node {
                        level,
                        parent,
                        tag: NodeTag::Class(class_idx),
                        vnf_type: None,
                        reliability: class.reliabilities[level - 1],
                    });
                    next.push(Some(nodes.len() - 1));
                }
            }
            frontier = next;
        }

        // One branch per VNF type through the disjoint zone.
        for &shared_parent in &frontier {
            for vnf_type in 1..=psi {
                let mut branch: Vec<Option<usize>> = vec![shared_parent];
                for level in shared_end + 1..=depth {
                    let mut next = Vec::new();
                    for &parent in &branch {
                        for _ in 0..class.epsilon[level - 1] {
                            let id = nodes.len();
                            nodes.push(Node {
                                level,
                                parent,
                                tag: NodeTag::Class(class_idx),
                                vnf_type: (level == depth).then_some(vnf_type),
                                reliability: class.reliabilities[level - 1],
                            });
                            if level == depth {
                                vm_index[vnf_type - 1].push(id);
                            }
                            next.push(Some(id));
                        }
                    }
                    branch = next;
                }
            }
        }

        for index in &vm_index {
            debug_assert!(index.len() as u64 >= class.n_sub);
        }
    }

    debug_assert!(nodes
        .iter()
        .enumerate()
        .all(|(id, n)| n.parent.map_or(true, |p| p < id)));
    Ok(ComponentTree { nodes, vm_index, depth })
}

/// True when every VNF type has at least `k` effective-alive instances,
/// where a node is effective-alive only if it and all its ancestors drew
/// an intrinsic up state.
pub fn service_success(tree: &ComponentTree, alive: &[bool], demand: &ServiceDemand) -> bool {
    assert_eq!(alive.len(), tree.nodes.len());
    let mut effective = vec![false; tree.nodes.len()];
    for (id, node) in tree.nodes.iter().enumerate() {
        effective[id] = alive[id] && node.parent.map_or(true, |p| effective[p]);
    }
    tree.vm_index.iter().all(|vms| {
        vms.iter().filter(|&&id| effective[id]).count() as u64 >= demand.k
    })
}

/// Exact service reliability: the success-weighted sum over all `2^nodes`
/// intrinsic states. Subtrees under a failed node are summed out in one
/// step, so the walk only branches along effective-alive prefixes.
pub fn exhaustive_reliability(
    tree: &ComponentTree,
    demand: &ServiceDemand,
    cap: usize,
) -> Result<f64, OracleError> {
    if tree.node_count() > cap {
        return Err(OracleError::TooManyNodes { nodes: tree.node_count(), cap });
    }
    let n = tree.node_count();
    let psi = tree.vm_index.len();

    // Preorder with subtree spans so a dead node can skip its descendants.
    let mut children = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    for (id, node) in tree.nodes.iter().enumerate() {
        match node.parent {
            Some(p) => children[p].push(id),
            None => order.push(id),
        }
    }
    let mut preorder = Vec::with_capacity(n);
    let mut span = vec![0usize; n];
    let mut stack: Vec<(usize, bool)> = order.iter().rev().map(|&id| (id, false)).collect();
    let mut open = Vec::new();
    while let Some((id, done)) = stack.pop() {
        if done {
            let at = open.pop().unwrap();
            span[at] = preorder.len() - at;
            continue;
        }
        open.push(preorder.len());
        stack.push((id, true));
        preorder.push(id);
        for &child in children[id].iter().rev() {
            stack.push((child, false));
        }
    }

    // suffix[i][t]: VMs of type t+1 among preorder[i..].
    let mut suffix = vec![vec![0u64; psi]; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1].clone();
        if let Some(t) = tree.nodes[preorder[i]].vnf_type {
            suffix[i][t - 1] += 1;
        }
    }

    struct Walk<'a> {
        tree: &'a ComponentTree,
        preorder: &'a [usize],
        span: &'a [usize],
        suffix: &'a [Vec<u64>],
        k: u64,
        counts: Vec<u64>,
        acc: CompensatedSum,
    }

    impl Walk<'_> {
        fn run(&mut self, i: usize, prob: f64) {
            if self.counts.iter().all(|&c| c >= self.k) {
                self.acc.add(prob);
                return;
            }
            if self
                .counts
                .iter()
                .zip(&self.suffix[i])
                .any(|(&have, &ahead)| have + ahead < self.k)
            {
                return;
            }
            let id = self.preorder[i];
            let node = &self.tree.nodes[id];
            // Dead: every descendant is effectively dead, their intrinsic
            // states integrate to one.
            self.run(i + self.span[i], prob * (1.0 - node.reliability));
            // Alive.
            if let Some(t) = node.vnf_type {
                self.counts[t - 1] += 1;
                self.run(i + 1, prob * node.reliability);
                self.counts[t - 1] -= 1;
            } else {
                self.run(i + 1, prob * node.reliability);
            }
        }
    }

    let mut walk = Walk {
        tree,
        preorder: &preorder,
        span: &span,
        suffix: &suffix,
        k: demand.k,
        counts: vec![0; psi],
        acc: CompensatedSum::default(),
    };
    walk.run(0, 1.0);
    Ok(walk.acc.value())
}

/// Monte-Carlo estimate with a normal-approximation 95% interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub mean: f64,
    pub ci_half_width: f64,
    pub trials: u64,
    pub seed: u64,
    pub successes: u64,
}

impl McEstimate {
    /// True when `value` lies inside the 95% confidence interval.
    pub fn covers(&self, value: f64) -> bool {
        (value - self.mean).abs() <= self.ci_half_width
    }
}

#[inline]
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Counter-based draw keyed on `(seed, trial, node)`: the stream is
/// splittable and independent of trial scheduling.
#[inline]
fn draw(seed: u64, trial: u64, node: u64) -> u64 {
    let a = mix64(seed ^ 0x9E37_79B9_7F4A_7C15u64.wrapping_mul(trial.wrapping_add(1)));
    mix64(a ^ 0xD1B5_4A32_D192_ED03u64.wrapping_mul(node.wrapping_add(1)))
}

/// Estimate service reliability from `trials` independent failure draws.
/// Bit-reproducible for fixed `(seed, trials)` under any worker count.
pub fn monte_carlo_estimate(
    tree: &ComponentTree,
    demand: &ServiceDemand,
    trials: u64,
    seed: u64,
) -> McEstimate {
    assert!(trials >= 1, "at least one trial is required");
    let n = tree.node_count();
    let thresholds: Vec<u64> = tree
        .nodes
        .iter()
        .map(|node| {
            if node.reliability >= 1.0 {
                u64::MAX
            } else {
                (node.reliability * 18_446_744_073_709_551_616.0) as u64
            }
        })
        .collect();
    let always_alive: Vec<bool> = tree.nodes.iter().map(|n| n.reliability >= 1.0).collect();
    let k = demand.k;

    let successes: u64 = (0..trials)
        .into_par_iter()
        .fold(
            || (vec![false; n], 0u64),
            |(mut effective, count), trial| {
                for (id, node) in tree.nodes.iter().enumerate() {
                    let alive = always_alive[id] || draw(seed, trial, id as u64) < thresholds[id];
                    effective[id] = alive && node.parent.map_or(true, |p| effective[p]);
                }
                let ok = tree
                    .vm_index
                    .iter()
                    .all(|vms| vms.iter().filter(|&&id| effective[id]).count() as u64 >= k);
                (effective, count + u64::from(ok))
            },
        )
        .map(|(_, count)| count)
        .sum();

    let mean = successes as f64 / trials as f64;
    let ci_half_width = 1.96 * (mean * (1.0 - mean) / trials as f64).sqrt();
    McEstimate { mean, ci_half_width, trials, seed, successes }
}
