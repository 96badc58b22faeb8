//! Depth-first evaluation of the general reliability expression over
//! summation slots: roots, shared levels, then the disjoint-level bracket.

use std::collections::HashMap;
use std::time::Instant;

use super::binom::{binom_pmf, CompensatedSum};
use super::{EvalError, EvalOptions, ReliabilityValue, SummationState};
use crate::model::Scenario;

#[derive(Debug, Clone, Copy)]
enum OuterSlot {
    Root(usize),
    Shared { class: usize, level: usize },
}

pub(super) fn evaluate(
    scenario: &Scenario,
    options: &EvalOptions,
) -> Result<ReliabilityValue, EvalError> {
    let start = Instant::now();
    let state = SummationState::new(scenario)?;

    let mut outer_slots: Vec<OuterSlot> = (0..state.root_count()).map(OuterSlot::Root).collect();
    let mut bracket_slots = Vec::new();
    for class in 0..scenario.classes.len() {
        for level in state.class_top_level(class)..=state.shared_end(class) {
            if state.root_slot(class, level).is_none() {
                outer_slots.push(OuterSlot::Shared { class, level });
            }
        }
        for level in state.shared_end(class) + 1..=scenario.depth() {
            bracket_slots.push((class, level));
        }
    }

    let mut evaluator = Evaluator {
        state,
        psi: scenario.demand.psi,
        outer_slots,
        bracket_slots,
        term_budget: options.term_budget,
        memoize: options.memoize,
        terms: 0,
        memo: HashMap::new(),
        acc: CompensatedSum::default(),
    };
    evaluator.outer(0, 1.0)?;
    Ok(ReliabilityValue {
        value: evaluator.acc.value(),
        term_count: evaluator.terms,
        eval_time: start.elapsed(),
    })
}

struct Evaluator<'a> {
    state: SummationState<'a>,
    psi: u32,
    outer_slots: Vec<OuterSlot>,
    bracket_slots: Vec<(usize, usize)>,
    term_budget: u64,
    memoize: bool,
    terms: u64,
    memo: HashMap<Vec<(u64, u64)>, f64>,
    acc: CompensatedSum,
}

impl Evaluator<'_> {
    fn bump(&mut self) -> Result<(), EvalError> {
        self.terms += 1;
        if self.terms > self.term_budget {
            return Err(EvalError::TermBudgetExceeded { budget: self.term_budget });
        }
        Ok(())
    }

    fn outer(&mut self, idx: usize, prob: f64) -> Result<(), EvalError> {
        if idx == self.outer_slots.len() {
            self.bump()?;
            let bracket = self.bracket_value()?;
            self.acc.add(prob * super::chain_power(bracket, self.psi));
            return Ok(());
        }
        match self.outer_slots[idx] {
            OuterSlot::Root(root) => {
                let lambda = self.state.root_availability(root);
                let bound = self.state.root_acf(root).min(lambda);
                let p = self.state.root_reliability(root);
                for failures in 0..=bound {
                    let weight = binom_pmf(lambda, failures, p);
                    if weight == 0.0 {
                        continue;
                    }
                    self.state.assign_root(root, failures);
                    self.outer(idx + 1, prob * weight)?;
                }
                // Other slots only ever read earlier assignments, but the
                // root failure feeds the global loss bookkeeping: reset it.
                self.state.assign_root(root, 0);
            }
            OuterSlot::Shared { class, level } => {
                let lambda = self.state.available_components(class, level);
                let bound = self.state.acf_shared(class, level).min(lambda);
                let p = self.state.scenario().classes[class].reliabilities[level - 1];
                for failures in 0..=bound {
                    let weight = binom_pmf(lambda, failures, p);
                    if weight == 0.0 {
                        continue;
                    }
                    self.state.assign(class, level, failures);
                    self.outer(idx + 1, prob * weight)?;
                }
            }
        }
        Ok(())
    }

    fn bracket_value(&mut self) -> Result<f64, EvalError> {
        let key = if self.memoize {
            let key: Vec<(u64, u64)> = (0..self.state.scenario().classes.len())
                .map(|class| self.state.bracket_seed(class))
                .collect();
            if let Some(&value) = self.memo.get(&key) {
                return Ok(value);
            }
            Some(key)
        } else {
            None
        };
        let mut acc = CompensatedSum::default();
        self.bracket(0, 1.0, &mut acc)?;
        let value = acc.value();
        if let Some(key) = key {
            self.memo.insert(key, value);
        }
        Ok(value)
    }

    fn bracket(
        &mut self,
        idx: usize,
        prob: f64,
        acc: &mut CompensatedSum,
    ) -> Result<(), EvalError> {
        if idx == self.bracket_slots.len() {
            self.bump()?;
            acc.add(prob);
            return Ok(());
        }
        let (class, level) = self.bracket_slots[idx];
        let lambda = self.state.available_components(class, level);
        let bound = self.state.acf_disjoint(class, level).min(lambda);
        let p = self.state.scenario().classes[class].reliabilities[level - 1];
        for failures in 0..=bound {
            let weight = binom_pmf(lambda, failures, p);
            if weight == 0.0 {
                continue;
            }
            self.state.assign(class, level, failures);
            self.bracket(idx + 1, prob * weight, acc)?;
        }
        Ok(())
    }
}
