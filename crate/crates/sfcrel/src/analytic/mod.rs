//! Closed-form chain reliability: the nested-summation engine with
//! failure-budget bounds, plus the two reduced forms (VM-only failures and
//! the single-class case) kept as independent evaluation routes.
//!
//! All evaluation walks summation slots in a canonical order: common roots
//! in declaration order, then shared levels class by class from the top,
//! then the disjoint levels inside a bracket that is evaluated once per
//! outer assignment and raised to the chain length.

mod binom;
mod engine;

pub use binom::{binom_pmf, CompensatedSum};

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::model::{InvalidScenario, Scenario, ServiceDemand};

/// Evaluation knobs.
#[derive(Debug, Clone)]
pub struct EvalOptions {
    /// Abort once this many leaf terms have been evaluated.
    pub term_budget: u64,
    /// Cache the disjoint-level bracket keyed on the failure budgets and
    /// component counts visible to it. Purely an optimization.
    pub memoize: bool,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self { term_budget: 1_000_000_000, memoize: true }
    }
}

/// Result of one reliability evaluation.
///
/// `term_count` counts the work actually performed: every evaluated outer
/// assignment plus every bracket term computed (memoized bracket reuse does
/// not recount). `eval_time` is informational and excluded from serialized
/// reports so identical runs stay byte-identical.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReliabilityValue {
    pub value: f64,
    pub term_count: u64,
    #[serde(skip, default)]
    pub eval_time: Duration,
}

#[derive(Debug, thiserror::Error)]
pub enum EvalError {
    #[error(transparent)]
    Invalid(#[from] InvalidScenario),
    #[error("term budget of {budget} leaf terms exceeded")]
    TermBudgetExceeded { budget: u64 },
    #[error("{0}")]
    Unsupported(String),
}

/// `base` raised to the chain length by exact binary powering.
pub(crate) fn chain_power(base: f64, psi: u32) -> f64 {
    base.powi(i32::try_from(psi).unwrap_or(i32::MAX))
}

/// False exactly when some common root occupies the `(class, level)` slot,
/// in which case the slot is already covered by the root summation.
pub fn phi_indicator(scenario: &Scenario, class: usize, level: usize) -> bool {
    !scenario
        .common_roots
        .iter()
        .any(|root| root.level == level && root.contains_class(class))
}

/// Running state of the nested summation: assumed failure counts `f` per
/// (class, level) slot and per root, with the derived caches for remaining
/// available components and cumulative VNF losses.
///
/// Slots must be assigned in evaluation order: roots in declaration order
/// first, then class levels top-down. Reassigning a slot overwrites it;
/// the derived caches only ever read levels at or above the queried one.
pub struct SummationState<'a> {
    scenario: &'a Scenario,
    depth: usize,
    top_level: Vec<usize>,
    shared_end: Vec<usize>,
    /// `under[class][level]` = same-type VNFs under one level-`level`
    /// component of the class (`level` indexes `0..=depth`, level 0 being
    /// the whole class).
    under: Vec<Vec<u64>>,
    root_at: Vec<Vec<Option<usize>>>,
    roots: Vec<RootInfo>,
    f: Vec<Vec<u64>>,
    lambda: Vec<Vec<u64>>,
    fcum: Vec<Vec<u64>>,
    root_f: Vec<u64>,
    root_loss_spent: u64,
}

struct RootInfo {
    level: usize,
    members: Vec<usize>,
    reliability: f64,
    /// Same-type VNFs lost across all member classes if this root fails.
    loss: u64,
    /// Indices of earlier roots whose class set contains this root's.
    ancestors: Vec<usize>,
}

impl<'a> SummationState<'a> {
    pub fn new(scenario: &'a Scenario) -> Result<Self, InvalidScenario> {
        let violations = scenario.validate();
        if !violations.is_empty() {
            return Err(InvalidScenario { violations });
        }
        let depth = scenario.depth();
        let class_count = scenario.classes.len();

        let mut under = Vec::with_capacity(class_count);
        for class in &scenario.classes {
            let mut u = vec![1u64; depth + 1];
            for level in (0..depth).rev() {
                u[level] = u[level + 1] * class.epsilon[level];
            }
            under.push(u);
        }

        let mut root_at = vec![vec![None; depth + 1]; class_count];
        let mut roots = Vec::with_capacity(scenario.common_roots.len());
        for (idx, root) in scenario.common_roots.iter().enumerate() {
            for &class in &root.classes {
                root_at[class][root.level] = Some(idx);
            }
            let loss = root.classes.iter().map(|&class| under[class][root.level]).sum();
            let ancestors = scenario.common_roots[..idx]
                .iter()
                .enumerate()
                .filter(|(_, other)| root.is_subset_of(other))
                .map(|(jdx, _)| jdx)
                .collect();
            roots.push(RootInfo {
                level: root.level,
                members: root.classes.clone(),
                reliability: scenario.classes[root.classes[0]].reliabilities[root.level - 1],
                loss,
                ancestors,
            });
        }

        let top_level = (0..class_count).map(|c| scenario.class_top_level(c)).collect();
        let shared_end = scenario.classes.iter().map(|c| c.shared_level_count()).collect();

        Ok(Self {
            scenario,
            depth,
            top_level,
            shared_end,
            under,
            root_at,
            roots,
            f: vec![vec![0; depth]; class_count],
            lambda: vec![vec![0; depth]; class_count],
            fcum: vec![vec![0; depth]; class_count],
            root_f: vec![0; scenario.common_roots.len()],
            root_loss_spent: 0,
        })
    }

    pub fn scenario(&self) -> &Scenario {
        self.scenario
    }

    fn demand(&self) -> &ServiceDemand {
        &self.scenario.demand
    }

    pub fn root_count(&self) -> usize {
        self.roots.len()
    }

    pub fn root_level(&self, root: usize) -> usize {
        self.roots[root].level
    }

    pub fn root_reliability(&self, root: usize) -> f64 {
        self.roots[root].reliability
    }

    pub fn class_top_level(&self, class: usize) -> usize {
        self.top_level[class]
    }

    pub fn shared_end(&self, class: usize) -> usize {
        self.shared_end[class]
    }

    /// Root index occupying the `(class, level)` slot, if any.
    pub fn root_slot(&self, class: usize, level: usize) -> Option<usize> {
        self.root_at[class][level]
    }

    /// Cumulative same-type VNF losses of a class from its assigned slots
    /// down to `level` (0 for levels above the class's top).
    pub fn failed_vnf_count(&self, class: usize, level: usize) -> u64 {
        if level < self.top_level[class] || level == 0 {
            0
        } else {
            self.fcum[class][level.min(self.depth) - 1]
        }
    }

    /// Remaining available common roots: 1 unless an ancestor root has an
    /// assumed failure.
    pub fn root_availability(&self, root: usize) -> u64 {
        let failed: u64 =
            self.roots[root].ancestors.iter().map(|&ancestor| self.root_f[ancestor]).sum();
        u64::from(failed == 0)
    }

    /// Acceptable failures of a common root: 1 exactly when the root is
    /// available and one more root failure keeps the total same-type VNF
    /// loss across all failed roots within the backup budget.
    pub fn root_acf(&self, root: usize) -> u64 {
        let available = self.root_availability(root) == 1;
        let affordable =
            self.demand().r >= self.root_loss_spent + self.roots[root].loss;
        u64::from(available && affordable)
    }

    /// Remaining available components of `(class, level)` given every
    /// assignment strictly above: the root's availability on a root slot,
    /// the configured top-level count at the top of a root-free class, and
    /// the survivors of the level above expanded by the per-parent count
    /// otherwise.
    pub fn available_components(&self, class: usize, level: usize) -> u64 {
        if let Some(root) = self.root_at[class][level] {
            return self.root_availability(root);
        }
        if level == self.top_level[class] {
            return self.scenario.classes[class].epsilon[0];
        }
        let prev = level - 1;
        let survivors = self.lambda[class][prev - 1].saturating_sub(self.f[class][prev - 1]);
        survivors * self.scenario.classes[class].epsilon[level - 1]
    }

    fn shared_f(&self, class: usize) -> u64 {
        let end = self.shared_end[class];
        if end >= self.top_level[class] && end >= 1 {
            self.fcum[class][end - 1]
        } else {
            0
        }
    }

    fn prev_f(&self, class: usize, level: usize) -> u64 {
        if level == self.top_level[class] {
            0
        } else {
            self.fcum[class][level - 2]
        }
    }

    /// Acceptable failures of a shared component: how many level-`level`
    /// components of the class may fail so that its same-type VNF losses,
    /// on top of the shared-zone losses of every earlier class, still fit
    /// the backup budget.
    pub fn acf_shared(&self, class: usize, level: usize) -> u64 {
        debug_assert!(level <= self.shared_end[class]);
        let weight = self.under[class][level] as i128;
        let lambda = self.available_components(class, level) as i128;
        let mut budget = self.demand().r as i128;
        for earlier in 0..class {
            budget -= self.shared_f(earlier) as i128;
        }
        budget -= self.prev_f(class, level) as i128;
        let allowed = (lambda * weight).min(budget.max(0));
        (allowed / weight).max(0) as u64
    }

    /// Acceptable failures of a disjoint component: like [`acf_shared`] but
    /// against the budget left after the full losses of earlier classes and
    /// the shared-zone losses of later ones (their disjoint levels are
    /// still ahead in the bracket).
    ///
    /// [`acf_shared`]: Self::acf_shared
    pub fn acf_disjoint(&self, class: usize, level: usize) -> u64 {
        debug_assert!(level > self.shared_end[class]);
        let weight = self.under[class][level] as i128;
        let lambda = self.available_components(class, level) as i128;
        let mut budget = self.demand().r as i128;
        for earlier in 0..class {
            budget -= self.fcum[earlier][self.depth - 1] as i128;
        }
        budget -= self.prev_f(class, level) as i128;
        for later in class + 1..self.scenario.classes.len() {
            budget -= self.shared_f(later) as i128;
        }
        let allowed = (lambda * weight).min(budget.max(0));
        (allowed / weight).max(0) as u64
    }

    /// Fix the failure count of a class slot. Levels above must already be
    /// assigned.
    pub fn assign(&mut self, class: usize, level: usize, failures: u64) {
        let lambda = self.available_components(class, level);
        debug_assert!(failures <= lambda, "assigned {failures} failures to {lambda} components");
        self.lambda[class][level - 1] = lambda;
        self.f[class][level - 1] = failures;
        self.fcum[class][level - 1] =
            self.prev_f(class, level) + failures * self.under[class][level];
    }

    /// Fix the failure count of a common root, updating every member
    /// class's slot at the root's level. Reassignment is allowed.
    pub fn assign_root(&mut self, root: usize, failures: u64) {
        let info = &self.roots[root];
        let old = self.root_f[root];
        self.root_loss_spent = self.root_loss_spent + failures * info.loss - old * info.loss;
        self.root_f[root] = failures;
        let lambda = self.root_availability(root);
        for idx in 0..self.roots[root].members.len() {
            let class = self.roots[root].members[idx];
            let level = self.roots[root].level;
            self.lambda[class][level - 1] = lambda;
            self.f[class][level - 1] = failures;
            self.fcum[class][level - 1] =
                self.prev_f(class, level) + failures * self.under[class][level];
        }
    }

    /// Survivor count feeding the first disjoint level of a class, and the
    /// class's committed shared-zone losses. Together these determine the
    /// bracket value for the current outer assignment.
    fn bracket_seed(&self, class: usize) -> (u64, u64) {
        let end = self.shared_end[class];
        let avail = if end >= self.top_level[class] && end >= 1 {
            self.lambda[class][end - 1].saturating_sub(self.f[class][end - 1])
        } else {
            self.scenario.classes[class].epsilon[0]
        };
        (avail, self.shared_f(class))
    }
}

/// Evaluate the general placement-dependent reliability over shared,
/// disjoint, and common-root components.
pub fn reliability_general(
    scenario: &Scenario,
    options: &EvalOptions,
) -> Result<ReliabilityValue, EvalError> {
    engine::evaluate(scenario, options)
}

/// Single-class reduced form, kept as an independent route: one class, no
/// common roots, shared levels outside the bracket and disjoint levels
/// inside it.
pub fn reliability_single_class(
    scenario: &Scenario,
    options: &EvalOptions,
) -> Result<ReliabilityValue, EvalError> {
    let start = std::time::Instant::now();
    let violations = scenario.validate();
    if !violations.is_empty() {
        return Err(InvalidScenario { violations }.into());
    }
    if scenario.classes.len() != 1 || !scenario.common_roots.is_empty() {
        return Err(EvalError::Unsupported(
            "single-class evaluation requires exactly one class and no common roots".into(),
        ));
    }
    let class = &scenario.classes[0];
    let depth = scenario.depth();
    let mut under = vec![1u64; depth + 1];
    for level in (0..depth).rev() {
        under[level] = under[level + 1] * class.epsilon[level];
    }
    let mut eval = SingleClassEval {
        epsilon: &class.epsilon,
        reliabilities: &class.reliabilities,
        under,
        r: scenario.demand.r,
        shared_end: class.shared_level_count(),
        depth,
        budget: options.term_budget,
        terms: 0,
        acc: CompensatedSum::default(),
        psi: scenario.demand.psi,
    };
    eval.shared(1, 1, 0, 1.0)?;
    Ok(ReliabilityValue {
        value: eval.acc.value(),
        term_count: eval.terms,
        eval_time: start.elapsed(),
    })
}

struct SingleClassEval<'a> {
    epsilon: &'a [u64],
    reliabilities: &'a [f64],
    under: Vec<u64>,
    r: u64,
    shared_end: usize,
    depth: usize,
    budget: u64,
    terms: u64,
    acc: CompensatedSum,
    psi: u32,
}

impl SingleClassEval<'_> {
    fn bump(&mut self) -> Result<(), EvalError> {
        self.terms += 1;
        if self.terms > self.budget {
            return Err(EvalError::TermBudgetExceeded { budget: self.budget });
        }
        Ok(())
    }

    fn shared(
        &mut self,
        level: usize,
        survivors: u64,
        failed_vnfs: u64,
        prob: f64,
    ) -> Result<(), EvalError> {
        if level > self.shared_end {
            self.bump()?;
            let mut bracket = CompensatedSum::default();
            self.disjoint(level, survivors, failed_vnfs, 1.0, &mut bracket)?;
            self.acc.add(prob * chain_power(bracket.value(), self.psi));
            return Ok(());
        }
        let lambda = survivors * self.epsilon[level - 1];
        let weight = self.under[level] as i128;
        let budget = (self.r as i128 - failed_vnfs as i128).max(0);
        let bound = (((lambda as i128 * weight).min(budget) / weight).max(0) as u64).min(lambda);
        for failures in 0..=bound {
            let w = binom_pmf(lambda, failures, self.reliabilities[level - 1]);
            if w == 0.0 {
                continue;
            }
            self.shared(
                level + 1,
                lambda - failures,
                failed_vnfs + failures * self.under[level],
                prob * w,
            )?;
        }
        Ok(())
    }

    fn disjoint(
        &mut self,
        level: usize,
        survivors: u64,
        failed_vnfs: u64,
        prob: f64,
        bracket: &mut CompensatedSum,
    ) -> Result<(), EvalError> {
        if level > self.depth {
            self.bump()?;
            bracket.add(prob);
            return Ok(());
        }
        let lambda = survivors * self.epsilon[level - 1];
        let weight = self.under[level] as i128;
        let budget = (self.r as i128 - failed_vnfs as i128).max(0);
        let allowed = (lambda as i128 * weight).min(budget);
        let bound = ((allowed / weight).max(0) as u64).min(lambda);
        for failures in 0..=bound {
            let w = binom_pmf(lambda, failures, self.reliabilities[level - 1]);
            if w == 0.0 {
                continue;
            }
            self.disjoint(
                level + 1,
                lambda - failures,
                failed_vnfs + failures * self.under[level],
                prob * w,
                bracket,
            )?;
        }
        Ok(())
    }
}

/// One class of the VM-only reduced form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VmClass {
    pub n_sub: u64,
    pub p_vm: f64,
}

/// Placement-independent reliability: every level above the VMs is perfect,
/// so the value depends only on the class sizes and VM reliabilities.
pub fn reliability_placement_independent(
    demand: &ServiceDemand,
    classes: &[VmClass],
) -> Result<ReliabilityValue, EvalError> {
    let start = std::time::Instant::now();
    let mut violations = Vec::new();
    if demand.k == 0 {
        violations.push(crate::model::Violation {
            field: "demand.k".into(),
            message: "at least one active sub-chain is required".into(),
        });
    }
    if demand.psi == 0 {
        violations.push(crate::model::Violation {
            field: "demand.psi".into(),
            message: "chain length must be at least 1".into(),
        });
    }
    if classes.is_empty() {
        violations.push(crate::model::Violation {
            field: "classes".into(),
            message: "at least one reliability class is required".into(),
        });
    }
    let covered: u64 = classes.iter().map(|c| c.n_sub).sum();
    if covered != demand.total_subchains() {
        violations.push(crate::model::Violation {
            field: "classes".into(),
            message: format!(
                "class counts do not cover n: sum of n_sub is {}, k + r is {}",
                covered,
                demand.total_subchains()
            ),
        });
    }
    for (idx, class) in classes.iter().enumerate() {
        if !(0.0..=1.0).contains(&class.p_vm) || class.p_vm.is_nan() {
            violations.push(crate::model::Violation {
                field: format!("classes[{idx}]"),
                message: format!("reliability {} outside [0, 1]", class.p_vm),
            });
        }
    }
    if !violations.is_empty() {
        return Err(InvalidScenario { violations }.into());
    }

    let mut terms = 0u64;
    let chain = vm_chain(demand.r, classes, 0, 0, &mut terms);
    Ok(ReliabilityValue {
        value: chain_power(chain, demand.psi),
        term_count: terms,
        eval_time: start.elapsed(),
    })
}

fn vm_chain(r: u64, classes: &[VmClass], idx: usize, spent: u64, terms: &mut u64) -> f64 {
    if idx == classes.len() {
        *terms += 1;
        return 1.0;
    }
    let class = &classes[idx];
    let bound = class.n_sub.min(r - spent);
    let mut acc = CompensatedSum::default();
    for failures in 0..=bound {
        let w = binom_pmf(class.n_sub, failures, class.p_vm);
        if w == 0.0 {
            continue;
        }
        acc.add(w * vm_chain(r, classes, idx + 1, spent + failures, terms));
    }
    acc.value()
}
