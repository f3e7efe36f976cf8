//! Exhaustive adversarial checks of Cop strategies and of the product bounds.

mod bounds;
mod matrix;

pub use bounds::{bounds_table, check_bounds, BoundStatus, BoundsBudget, BoundsReport, BoundsRow};
pub use matrix::{
    acceptance_matrix, Battery, BatteryEntry, Bound, MatrixConfig, MatrixRow, Method, RowStatus,
    DEFAULT_BATTERY,
};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{Board, Probe};
use crate::strategies::{CopStrategy, Step, TurnContext};
use crate::vertex_set::VertexSet;

pub const DEFAULT_MAX_TURNS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub probe: Vec<usize>,
    pub class: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureTrace {
    pub steps: Vec<TraceStep>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub strategy: String,
    pub won: bool,
    /// Most probes used on any explored branch.
    pub max_turns: usize,
    pub turn_limit: usize,
    /// Non-singleton classes the adversary branched into.
    pub branches_explored: u64,
    pub failure_trace: Option<FailureTrace>,
}

#[derive(Default)]
struct Walk {
    depth: usize,
    branches: u64,
    failure: Option<FailureTrace>,
}

impl Walk {
    fn absorb(&mut self, other: Walk) {
        self.depth = self.depth.max(other.depth);
        self.branches += other.branches;
        if self.failure.is_none() {
            self.failure = other.failure;
        }
    }
}

fn trace(history: &[Step]) -> Vec<TraceStep> {
    history.iter().map(|s| TraceStep { probe: s.probe.clone(), class: s.class.to_vec() }).collect()
}

fn fail(history: &[Step], reason: String) -> Walk {
    Walk { depth: history.len(), branches: 0, failure: Some(FailureTrace { steps: trace(history), reason }) }
}

struct Explorer<'a> {
    board: &'a Board,
    strategy: &'a dyn CopStrategy,
    limit: usize,
}

impl Explorer<'_> {
    /// Probe for the position after `history`, checked for arity and range.
    fn probe(&self, state: VertexSet, history: &[Step]) -> std::result::Result<Vec<usize>, String> {
        let ctx = TurnContext { turn: history.len() + 1, state, history };
        let probe = self.strategy.next_probe(self.board, &ctx).map_err(|e| e.to_string())?;
        Probe::new(probe.clone(), self.board.order()).map_err(|e| e.to_string())?;
        if probe.len() != self.strategy.cop_count() {
            return Err(
                Error::ProbeArity { expected: self.strategy.cop_count(), got: probe.len() }.to_string()
            );
        }
        Ok(probe)
    }

    /// Non-singleton classes of the next turn, or a failure.
    fn expand(&self, state: VertexSet, history: &[Step]) -> std::result::Result<Vec<Step>, Walk> {
        if history.len() >= self.limit {
            return Err(fail(history, format!("turn limit {} reached with {} candidates", self.limit, state.len())));
        }
        let probe = self.probe(state, history).map_err(|reason| fail(history, reason))?;
        Ok(self
            .board
            .partition(state, &probe)
            .into_iter()
            .filter(|c| c.len() >= 2)
            .map(|class| Step { probe: probe.clone(), class })
            .collect())
    }

    fn walk(&self, state: VertexSet, history: &mut Vec<Step>) -> Walk {
        let children = match self.expand(state, history) {
            Ok(c) => c,
            Err(w) => return w,
        };
        let mut out = Walk { depth: history.len() + 1, ..Walk::default() };
        for step in children {
            let next = self.board.expand(step.class);
            history.push(step);
            let mut sub = self.walk(next, history);
            sub.branches += 1;
            history.pop();
            out.absorb(sub);
            if out.failure.is_some() {
                break;
            }
        }
        out
    }

    fn run(&self) -> Walk {
        let root = self.board.all();
        let children = match self.expand(root, &[]) {
            Ok(c) => c,
            Err(w) => return w,
        };
        let subs: Vec<Walk> = children
            .into_par_iter()
            .map(|step| {
                let next = self.board.expand(step.class);
                let mut history = vec![step];
                let mut sub = self.walk(next, &mut history);
                sub.branches += 1;
                sub
            })
            .collect();
        let mut out = Walk { depth: 1, ..Walk::default() };
        for sub in subs {
            out.absorb(sub);
        }
        out
    }
}

/// Plays `strategy` against every Robber choice: at each turn the adversary
/// may pick any non-singleton class, in distance-vector order. The Cop wins
/// iff every branch ends in singletons within `max_turns` probes.
pub fn verify_cop_strategy(board: &Board, strategy: &dyn CopStrategy, max_turns: usize) -> Result<VerificationReport> {
    if max_turns == 0 {
        return Err(Error::InvalidParameter("max_turns must be positive".into()));
    }
    strategy.check_board(board)?;
    let walk = Explorer { board, strategy, limit: max_turns }.run();
    Ok(VerificationReport {
        strategy: strategy.name(),
        won: walk.failure.is_none(),
        max_turns: walk.depth,
        turn_limit: max_turns,
        branches_explored: walk.branches,
        failure_trace: walk.failure,
    })
}

/// One turn of a single played game.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceTurn {
    pub turn: usize,
    pub probe: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
    /// Index into `classes` of the Robber's choice; `None` once located.
    pub chosen: Option<usize>,
}

/// Plays one game, letting `choose` pick among the non-singleton classes
/// (given in distance-vector order). Stops when the Robber is located or
/// after `max_turns` probes.
pub fn play_game(
    board: &Board,
    strategy: &dyn CopStrategy,
    max_turns: usize,
    mut choose: impl FnMut(&[VertexSet]) -> usize,
) -> Result<Vec<TraceTurn>> {
    strategy.check_board(board)?;
    let mut state = board.all();
    let mut history: Vec<Step> = Vec::new();
    let mut out = Vec::new();
    for turn in 1..=max_turns {
        let probe = strategy.next_probe(board, &TurnContext { turn, state, history: &history })?;
        board.check_probe(&probe)?;
        let classes = board.partition(state, &probe);
        let open: Vec<VertexSet> = classes.iter().copied().filter(|c| c.len() >= 2).collect();
        let chosen = (!open.is_empty()).then(|| {
            let pick = open[choose(&open).min(open.len() - 1)];
            classes.iter().position(|&c| c == pick).expect("open classes come from classes")
        });
        out.push(TraceTurn {
            turn,
            probe: probe.clone(),
            classes: classes.iter().map(|c| c.to_vec()).collect(),
            chosen,
        });
        let Some(idx) = chosen else { break };
        history.push(Step { probe, class: classes[idx] });
        state = board.expand(classes[idx]);
    }
    Ok(out)
}
