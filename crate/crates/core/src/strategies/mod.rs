//! Cop strategies and Robber certificates.
//!
//! A [`CopStrategy`] is a pure function of the game so far: the verifier
//! replays it along every branch of the adversary tree, so strategies keep no
//! per-game state of their own.

mod product;
mod robber;
mod torus;

pub use product::{product_strategy, ProductStrategy};
pub use robber::{
    robber_family_c2pc4, robber_family_c3c3, robber_projection_strategy, short_cycle_family,
    RobberProjection,
};
pub use torus::{
    scripted_for_torus, strategy_c2p_c6, strategy_c5c3, strategy_c5c5, strategy_even_even,
    strategy_odd_even, Script, TorusScript,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{Board, Outcome, Solution};
use crate::vertex_set::VertexSet;

/// One completed turn: the probe and the class the Robber was localized to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub probe: Vec<usize>,
    pub class: VertexSet,
}

/// What the Cop knows when choosing the probe for `turn` (1-based).
#[derive(Debug, Clone, Copy)]
pub struct TurnContext<'a> {
    pub turn: usize,
    pub state: VertexSet,
    pub history: &'a [Step],
}

impl<'a> TurnContext<'a> {
    pub fn previous_class(&self) -> Option<VertexSet> {
        self.history.last().map(|s| s.class)
    }

    pub(crate) fn unexpected(&self, detail: impl Into<String>) -> Error {
        Error::UnexpectedState { turn: self.turn, detail: detail.into() }
    }
}

pub trait CopStrategy: Send + Sync {
    fn name(&self) -> String;

    fn cop_count(&self) -> usize;

    /// Rejects boards the strategy was not written for.
    fn check_board(&self, board: &Board) -> Result<()>;

    fn next_probe(&self, board: &Board, ctx: &TurnContext<'_>) -> Result<Vec<usize>>;
}

impl<S: CopStrategy + ?Sized> CopStrategy for Box<S> {
    fn name(&self) -> String {
        (**self).name()
    }
    fn cop_count(&self) -> usize {
        (**self).cop_count()
    }
    fn check_board(&self, board: &Board) -> Result<()> {
        (**self).check_board(board)
    }
    fn next_probe(&self, board: &Board, ctx: &TurnContext<'_>) -> Result<Vec<usize>> {
        (**self).next_probe(board, ctx)
    }
}

/// Strategy family and parameters, as selected on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum StrategyParams {
    C5c5,
    C5c3,
    OddEven { p: usize, q: usize },
    EvenEven { p: usize, q: usize },
    C2pC6 { p: usize },
}

impl StrategyParams {
    pub fn build(self) -> Result<TorusScript> {
        match self {
            StrategyParams::C5c5 => Ok(strategy_c5c5()),
            StrategyParams::C5c3 => Ok(strategy_c5c3()),
            StrategyParams::OddEven { p, q } => strategy_odd_even(p, q),
            StrategyParams::EvenEven { p, q } => strategy_even_even(p, q),
            StrategyParams::C2pC6 { p } => strategy_c2p_c6(p),
        }
    }
}

/// Plays the solver's winning probes.
#[derive(Debug, Clone)]
pub struct TableStrategy {
    solution: Solution,
}

impl TableStrategy {
    pub fn new(solution: Solution) -> Result<Self> {
        if solution.report.outcome != Outcome::CopWins {
            return Err(Error::InvalidParameter(format!(
                "solver outcome is {:?}, not a Cop win",
                solution.report.outcome
            )));
        }
        Ok(Self { solution })
    }
}

impl CopStrategy for TableStrategy {
    fn name(&self) -> String {
        format!("solver(k={})", self.solution.report.k)
    }

    fn cop_count(&self) -> usize {
        self.solution.report.k
    }

    fn check_board(&self, board: &Board) -> Result<()> {
        if self.solution.states().first() != Some(&board.all()) {
            return Err(Error::StrategyMismatch("solution was computed for another graph".into()));
        }
        Ok(())
    }

    fn next_probe(&self, _board: &Board, ctx: &TurnContext<'_>) -> Result<Vec<usize>> {
        self.solution
            .best_probe(ctx.state)
            .map(<[usize]>::to_vec)
            .ok_or_else(|| ctx.unexpected(format!("state {:?} has no winning probe", ctx.state)))
    }
}

/// Replays a fixed probe every turn.
#[derive(Debug, Clone)]
pub struct ConstantStrategy {
    pub probe: Vec<usize>,
}

impl CopStrategy for ConstantStrategy {
    fn name(&self) -> String {
        format!("constant{:?}", self.probe)
    }

    fn cop_count(&self) -> usize {
        self.probe.len()
    }

    fn check_board(&self, board: &Board) -> Result<()> {
        board.check_probe(&self.probe)
    }

    fn next_probe(&self, _board: &Board, _ctx: &TurnContext<'_>) -> Result<Vec<usize>> {
        Ok(self.probe.clone())
    }
}
