//! Reproduction of the published numerical studies and triple-engine
//! verification (closed form vs exhaustive enumeration vs Monte-Carlo).

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analytic::{reliability_general, EvalError, EvalOptions, ReliabilityValue};
use crate::model::{
    expand_preset, CommonRoot, Hierarchy, PlacementPreset, ReliabilityClassSpec, Scenario,
    ServiceDemand,
};
use crate::oracle::{exhaustive_reliability, instantiate_tree, monte_carlo_estimate, McEstimate};

/// Absolute tolerance for analytic-vs-exhaustive agreement.
pub const EXHAUSTIVE_MATCH_TOLERANCE: f64 = 1e-10;

/// Reliability profile of the numerical studies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReliabilityCase {
    /// Case 1: practice-like per-level reliabilities
    /// `[0.99999, 0.9999, 0.999, 0.99]` from the top down.
    Practical,
    /// Case 2: idealized, `0.99999` at every level.
    Idealized,
}

impl ReliabilityCase {
    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(Self::Practical),
            2 => Some(Self::Idealized),
            _ => None,
        }
    }

    pub fn number(&self) -> u8 {
        match self {
            Self::Practical => 1,
            Self::Idealized => 2,
        }
    }

    /// Per-level reliabilities for the hierarchy, top level first. The
    /// practical profile loses one decade of unreliability per level down.
    pub fn reliabilities(&self, hierarchy: &Hierarchy) -> Vec<f64> {
        (1..=hierarchy.depth())
            .map(|level| match self {
                Self::Practical => 1.0 - 10f64.powi(level as i32 - 6),
                Self::Idealized => 0.99999,
            })
            .map(|p| p.clamp(0.0, 1.0))
            .collect()
    }
}

/// Single-class scenario with all `k + r` sub-chains in one placement.
pub fn preset_scenario(
    case: ReliabilityCase,
    k: u64,
    r: u64,
    psi: u32,
    nr: usize,
    delta: usize,
) -> Scenario {
    let hierarchy = Hierarchy::standard();
    let class = expand_preset(
        PlacementPreset::new(nr, delta),
        k + r,
        case.reliabilities(&hierarchy),
        &hierarchy,
    )
    .expect("preset within hierarchy bounds");
    Scenario::new(ServiceDemand::new(k, r, psi), hierarchy, vec![class])
}

/// Two-class scenario: actives placed by `active`, backups by `backup`,
/// sharing no hardware.
pub fn two_class_scenario(
    case: ReliabilityCase,
    k: u64,
    r: u64,
    psi: u32,
    n_active: u64,
    active: PlacementPreset,
    n_backup: u64,
    backup: PlacementPreset,
) -> Scenario {
    let hierarchy = Hierarchy::standard();
    let p = case.reliabilities(&hierarchy);
    let classes = vec![
        expand_preset(active, n_active, p.clone(), &hierarchy).expect("active preset"),
        expand_preset(backup, n_backup, p, &hierarchy).expect("backup preset"),
    ];
    Scenario::new(ServiceDemand::new(k, r, psi), hierarchy, classes)
}

/// The four-class common-root layout: three active chains placed with
/// disjointedness 1, 2, and 3 inside one data center (the first two also
/// sharing a rack), plus one backup chain spread over separate data
/// centers. Demand is `k = 3`, `r = 1`.
pub fn fig2_scenario(case: ReliabilityCase, psi: u32) -> Scenario {
    let hierarchy = Hierarchy::standard();
    let p = case.reliabilities(&hierarchy);
    let class = |delta: usize| ReliabilityClassSpec {
        n_sub: 1,
        epsilon: vec![1; hierarchy.depth()],
        delta,
        reliabilities: p.clone(),
    };
    let classes = vec![class(1), class(2), class(3), class(4)];
    let mut scenario = Scenario::new(ServiceDemand::new(3, 1, psi), hierarchy, classes);
    scenario.common_roots = vec![
        CommonRoot::new(1, vec![0, 1, 2]),
        CommonRoot::new(2, vec![0, 1]),
    ];
    scenario
}

/// One cell of the 16-placement sweep (single class, `k = 1`).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Table2Row {
    pub nr: usize,
    pub delta: usize,
    pub placement: String,
    pub psi: u32,
    pub r: u64,
    pub value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

/// Sweep all 16 `(nr, delta)` placements for `k = 1`. Cells that exceed
/// the term budget are emitted as skipped rather than failing the sweep.
pub fn run_table2(
    case: ReliabilityCase,
    psi_list: &[u32],
    r_list: &[u64],
    options: &EvalOptions,
) -> Result<Vec<Table2Row>, EvalError> {
    let mut cells = Vec::new();
    for nr in (1..=4).rev() {
        for delta in 1..=4 {
            for &psi in psi_list {
                for &r in r_list {
                    cells.push((nr, delta, psi, r));
                }
            }
        }
    }
    cells
        .into_par_iter()
        .map(|(nr, delta, psi, r)| {
            let scenario = preset_scenario(case, 1, r, psi, nr, delta);
            let placement = PlacementPreset::new(nr, delta).placement_label(4).to_string();
            match reliability_general(&scenario, options) {
                Ok(result) => Ok(Table2Row {
                    nr,
                    delta,
                    placement,
                    psi,
                    r,
                    value: Some(result.value),
                    skipped: None,
                }),
                Err(EvalError::TermBudgetExceeded { .. }) => Ok(Table2Row {
                    nr,
                    delta,
                    placement,
                    psi,
                    r,
                    value: None,
                    skipped: Some("term budget".to_string()),
                }),
                Err(other) => Err(other),
            }
        })
        .collect()
}

/// One cell of the `k`-vs-`r` study at the `(nr = 4, delta = 1)` placement.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Table3Row {
    /// Backup ratio `r / k` in eighths.
    pub ratio_eighths: u32,
    pub k: u64,
    pub r: u64,
    pub psi: u32,
    pub value: f64,
}

impl Table3Row {
    pub fn ratio(&self) -> f64 {
        self.ratio_eighths as f64 / 8.0
    }
}

/// Sweep the published `(k, r, psi)` grid: ratios `r/k` in eighths from 0
/// to 11/8, keeping only integral `r`.
pub fn run_table3(
    case: ReliabilityCase,
    k_list: &[u64],
    psi_list: &[u32],
    options: &EvalOptions,
) -> Result<Vec<Table3Row>, EvalError> {
    let mut cells = Vec::new();
    for &psi in psi_list {
        for ratio_eighths in 0..=11u32 {
            for &k in k_list {
                if (ratio_eighths as u64 * k) % 8 != 0 {
                    continue;
                }
                let r = ratio_eighths as u64 * k / 8;
                cells.push((ratio_eighths, k, r, psi));
            }
        }
    }
    cells
        .into_par_iter()
        .map(|(ratio_eighths, k, r, psi)| {
            let scenario = preset_scenario(case, k, r, psi, 4, 1);
            let result = reliability_general(&scenario, options)?;
            Ok(Table3Row { ratio_eighths, k, r, psi, value: result.value })
        })
        .collect()
}

/// One cell of the two-class study: active and backup sub-chains under
/// separate placement strategies.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Table4Row {
    pub active_nr: usize,
    pub active_delta: usize,
    pub backup_nr: usize,
    pub backup_delta: usize,
    pub value: f64,
}

/// Sweep the 16x8 grid: all active placements against backup placements
/// with heterogeneity 4 and 3, at `k = 4`, `r = 3`, `psi = 4`.
pub fn run_table4(
    case: ReliabilityCase,
    options: &EvalOptions,
) -> Result<Vec<Table4Row>, EvalError> {
    let mut cells = Vec::new();
    for active_nr in (1..=4).rev() {
        for active_delta in 1..=4 {
            for backup_nr in (3..=4).rev() {
                for backup_delta in 1..=4 {
                    cells.push((active_nr, active_delta, backup_nr, backup_delta));
                }
            }
        }
    }
    cells
        .into_par_iter()
        .map(|(active_nr, active_delta, backup_nr, backup_delta)| {
            let scenario = two_class_scenario(
                case,
                4,
                3,
                4,
                4,
                PlacementPreset::new(active_nr, active_delta),
                3,
                PlacementPreset::new(backup_nr, backup_delta),
            );
            let result = reliability_general(&scenario, options)?;
            Ok(Table4Row { active_nr, active_delta, backup_nr, backup_delta, value: result.value })
        })
        .collect()
}

/// Triple-engine comparison for one scenario.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub analytic: ReliabilityValue,
    pub node_count: usize,
    /// Exact value when the tree fits the exhaustive cap.
    pub exhaustive: Option<f64>,
    pub monte_carlo: McEstimate,
    /// Set when exhaustive ran: agreement within
    /// [`EXHAUSTIVE_MATCH_TOLERANCE`].
    pub exhaustive_ok: Option<bool>,
    /// Analytic value inside the Monte-Carlo 95% interval.
    pub mc_ok: bool,
    pub pass: bool,
}

/// Flag agreement between the engines; split out so negative controls can
/// exercise the failure paths.
pub fn judge_agreement(
    analytic: f64,
    exhaustive: Option<f64>,
    monte_carlo: &McEstimate,
) -> (Option<bool>, bool, bool) {
    let exhaustive_ok =
        exhaustive.map(|exact| (analytic - exact).abs() <= EXHAUSTIVE_MATCH_TOLERANCE);
    let mc_ok = monte_carlo.covers(analytic);
    let pass = exhaustive_ok.unwrap_or(true) && mc_ok;
    (exhaustive_ok, mc_ok, pass)
}

/// Run the closed form, the exhaustive oracle (when the tree is small
/// enough), and the Monte-Carlo oracle, and compare.
pub fn verify(
    scenario: &Scenario,
    trials: u64,
    seed: u64,
    exhaustive_cap: usize,
    options: &EvalOptions,
) -> Result<VerifyReport, EvalError> {
    let analytic = reliability_general(scenario, options)?;
    let tree = instantiate_tree(scenario).map_err(|e| match e {
        crate::oracle::OracleError::Invalid(v) => EvalError::Invalid(v),
        other => EvalError::Unsupported(other.to_string()),
    })?;
    let exhaustive = if tree.node_count() <= exhaustive_cap {
        Some(
            exhaustive_reliability(&tree, &scenario.demand, exhaustive_cap)
                .expect("cap checked above"),
        )
    } else {
        None
    };
    let monte_carlo = monte_carlo_estimate(&tree, &scenario.demand, trials, seed);
    let (exhaustive_ok, mc_ok, pass) = judge_agreement(analytic.value, exhaustive, &monte_carlo);
    Ok(VerifyReport {
        analytic,
        node_count: tree.node_count(),
        exhaustive,
        monte_carlo,
        exhaustive_ok,
        mc_ok,
        pass,
    })
}

/// Format with a fixed number of significant digits in plain decimal.
pub fn format_significant(value: f64, digits: usize) -> String {
    if value == 0.0 || !value.is_finite() {
        return format!("{value}");
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    format!("{value:.decimals$}")
}

fn csv_field(text: &str) -> String {
    if text.contains(',') || text.contains('"') {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

fn csv_value(value: Option<f64>, skipped: &Option<String>) -> String {
    match value {
        Some(v) => format_significant(v, 12),
        None => csv_field(&format!(
            "skipped: {}",
            skipped.as_deref().unwrap_or("unknown")
        )),
    }
}

/// CSV for the 16-placement sweep. LF line endings, 12 significant digits.
pub fn table2_csv(rows: &[Table2Row]) -> String {
    let mut out = String::from("nr,delta,placement,psi,r,value\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.nr,
            row.delta,
            csv_field(&row.placement),
            row.psi,
            row.r,
            csv_value(row.value, &row.skipped)
        ));
    }
    out
}

/// CSV for the `k`-vs-`r` sweep.
pub fn table3_csv(rows: &[Table3Row]) -> String {
    let mut out = String::from("r_over_k,k,r,psi,value\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.ratio(),
            row.k,
            row.r,
            row.psi,
            format_significant(row.value, 12)
        ));
    }
    out
}

/// CSV for the two-class placement matrix.
pub fn table4_csv(rows: &[Table4Row]) -> String {
    let mut out = String::from("active_nr,active_delta,backup_nr,backup_delta,value\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.active_nr,
            row.active_delta,
            row.backup_nr,
            row.backup_delta,
            format_significant(row.value, 12)
        ));
    }
    out
}
