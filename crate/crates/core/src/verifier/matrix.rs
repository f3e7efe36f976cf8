use serde::{Deserialize, Serialize};

use super::verify_cop_strategy;
use crate::error::{Error, Result};
use crate::game::{
    localization_number_with, verify_hideout_family, Board, Outcome, PairFamily, SolveBudget, Solver,
    ZetaResult,
};
use crate::graph::make_torus;
use crate::strategies::{robber_family_c2pc4, robber_family_c3c3, scripted_for_torus, short_cycle_family};

/// Built-in battery of `C_m □ C_n` instances.
pub const DEFAULT_BATTERY: &str = include_str!("../../battery.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Exact solver up to `exact_order_limit` vertices, certificates above.
    #[default]
    Auto,
    Exact,
    Certified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BatteryEntry {
    pub m: usize,
    pub n: usize,
    pub expected: usize,
    #[serde(default)]
    pub method: Method,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Battery {
    pub instances: Vec<BatteryEntry>,
}

impl Battery {
    pub fn from_json(text: &str) -> Result<Self> {
        let battery: Battery =
            serde_json::from_str(text).map_err(|e| Error::Malformed(format!("battery: {e}")))?;
        for e in &battery.instances {
            if e.m < 3 || e.n < 3 {
                return Err(Error::Malformed(format!("battery: cycles need order >= 3, got m={}, n={}", e.m, e.n)));
            }
        }
        Ok(battery)
    }

    pub fn builtin() -> Self {
        Self::from_json(DEFAULT_BATTERY).expect("built-in battery parses")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatrixConfig {
    pub budget: SolveBudget,
    pub max_turns: usize,
    pub exact_order_limit: usize,
}

impl Default for MatrixConfig {
    fn default() -> Self {
        Self { budget: SolveBudget::default(), max_turns: super::DEFAULT_MAX_TURNS, exact_order_limit: 16 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: usize,
    pub method: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Match,
    Mismatch,
    Unresolved,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixRow {
    pub m: usize,
    pub n: usize,
    pub expected: usize,
    pub lower: Bound,
    pub upper: Option<Bound>,
    pub observed: Option<usize>,
    pub status: RowStatus,
    pub notes: Vec<String>,
}

fn bound(value: usize, method: impl Into<String>) -> Bound {
    Bound { value, method: method.into() }
}

/// Hideout certificate giving the best available lower bound.
fn certified_lower(m: usize, n: usize, notes: &mut Vec<String>) -> Result<Bound> {
    let mut candidates: Vec<(usize, usize, usize, PairFamily, String)> = Vec::new();
    if (m, n) == (3, 3) {
        candidates.push((3, 3, 2, robber_family_c3c3(), "hideout c3c3".into()));
    }
    for (a, b) in [(m, n), (n, m)] {
        if b == 4 && a % 2 == 0 && a >= 4 {
            candidates.push((a, 4, 2, robber_family_c2pc4(a / 2)?, format!("hideout c2pc4(p={})", a / 2)));
            break;
        }
    }
    let g = make_torus(m, n)?;
    if let Some(f) = short_cycle_family(&g) {
        candidates.push((m, n, 1, f, "short-cycle hideout".into()));
    }
    for (a, b, k, family, method) in candidates {
        let board = Board::new(&make_torus(a, b)?)?;
        let check = verify_hideout_family(&board, k, &family)?;
        if check.certified {
            return Ok(bound(k + 1, method));
        }
        notes.push(format!("{method} refuted at k={k}: {:?}", check.counterexample));
    }
    Ok(bound(1, "trivial"))
}

fn evaluate(entry: &BatteryEntry, cfg: &MatrixConfig) -> Result<MatrixRow> {
    let (m, n) = (entry.m, entry.n);
    let g = make_torus(m, n)?;
    let board = Board::new(&g)?;
    let mut notes = Vec::new();
    let exact = match entry.method {
        Method::Exact => true,
        Method::Certified => false,
        Method::Auto => m * n <= cfg.exact_order_limit,
    };
    let mut lower;
    let mut upper = None;
    if exact {
        lower = match localization_number_with(&board, entry.expected + 1, cfg.budget, 0)? {
            ZetaResult::Exact { value } => {
                upper = Some(bound(value, "solver"));
                bound(value, "solver")
            }
            ZetaResult::AboveMax { k_max } => bound(k_max + 1, "solver"),
            ZetaResult::BudgetExceeded { k } => {
                notes.push(format!("solver budget exceeded at k={k}"));
                bound(k, "solver")
            }
        };
    } else {
        lower = certified_lower(m, n, &mut notes)?;
        if let Some(script) = scripted_for_torus(m, n) {
            let sboard = Board::new(&make_torus(script.m, script.n)?)?;
            let report = verify_cop_strategy(&sboard, &script, cfg.max_turns)?;
            if report.won {
                upper = Some(bound(2, format!("strategy {} in {} probes", report.strategy, report.max_turns)));
            } else {
                notes.push(format!("strategy {} failed: {:?}", report.strategy, report.failure_trace));
            }
        }
        // solver fallback for whichever side is still open
        let mut k = lower.value;
        while k <= entry.expected + 1 && upper.as_ref().is_none_or(|u| k < u.value) {
            match Solver::new(&board, k).budget(cfg.budget).solve()?.report.outcome {
                Outcome::CopWins => upper = Some(bound(k, "solver")),
                Outcome::RobberWins => lower = bound(k + 1, "solver"),
                Outcome::BudgetExceeded => {
                    notes.push(format!("solver budget exceeded at k={k}"));
                    break;
                }
            }
            k += 1;
        }
    }
    let observed = upper.as_ref().filter(|u| u.value == lower.value).map(|u| u.value);
    let status = if observed == Some(entry.expected) {
        RowStatus::Match
    } else if lower.value > entry.expected || upper.as_ref().is_some_and(|u| u.value < entry.expected) {
        RowStatus::Mismatch
    } else {
        RowStatus::Unresolved
    };
    Ok(MatrixRow { m, n, expected: entry.expected, lower, upper, observed, status, notes })
}

/// Evaluates `ζ(C_m □ C_n)` for each battery instance and compares with the
/// expected value. Unresolved instances are reported as such.
pub fn acceptance_matrix(battery: &Battery, cfg: &MatrixConfig) -> Result<Vec<MatrixRow>> {
    battery.instances.iter().map(|e| evaluate(e, cfg)).collect()
}
