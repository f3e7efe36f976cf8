//! Exact solver for the knowledge-set game.
//!
//! `WIN(S)` holds iff some probe splits `S` so that every class `T` with
//! `|T| >= 2` has `WIN(N[T])`. The solver first enumerates every state
//! reachable from `V`, then labels states in synchronous rounds: a state
//! gets rank `r` in round `r` if some probe sends all its non-singleton
//! classes to states ranked in earlier rounds. The rank of `V` is the number
//! of probes the Cop needs; states never ranked form a Robber certificate.

use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::Board;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

const UNRANKED: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveBudget {
    pub max_states: usize,
    /// Cap on (state, probe) evaluations across exploration and labeling.
    pub max_evaluations: u64,
    pub time_limit: Option<Duration>,
}

impl Default for SolveBudget {
    fn default() -> Self {
        Self {
            max_states: 4_000_000,
            max_evaluations: 50_000_000_000,
            time_limit: Some(Duration::from_secs(600)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    CopWins,
    RobberWins,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub outcome: Outcome,
    pub k: usize,
    /// Probes needed by an optimal Cop; present iff the Cop wins.
    pub turns: Option<u32>,
    pub states_explored: usize,
    /// First winning probe for the initial state, in lexicographic probe order.
    pub witness: Option<Vec<usize>>,
    #[serde(skip)]
    pub evaluations: u64,
}

/// Solver configuration for one graph and cop count.
pub struct Solver<'a> {
    board: &'a Board,
    k: usize,
    budget: SolveBudget,
    threads: usize,
}

/// Full solver output: the report plus the labeled state table.
#[derive(Debug, Clone)]
pub struct Solution {
    pub report: SolveReport,
    probes: Vec<Vec<usize>>,
    states: Vec<VertexSet>,
    index: HashMap<VertexSet, u32>,
    rank: Vec<u32>,
    best: Vec<u32>,
    complete: bool,
}

struct Tripped;

impl<'a> Solver<'a> {
    pub fn new(board: &'a Board, k: usize) -> Self {
        Self { board, k, budget: SolveBudget::default(), threads: 0 }
    }

    pub fn budget(mut self, budget: SolveBudget) -> Self {
        self.budget = budget;
        self
    }

    /// Worker threads; `0` uses the global rayon pool.
    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn solve(&self) -> Result<Solution> {
        if self.k == 0 {
            return Err(Error::InvalidParameter("at least one cop is required".into()));
        }
        if self.threads == 0 {
            return Ok(self.run());
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
        Ok(pool.install(|| self.run()))
    }

    fn run(&self) -> Solution {
        let start = Instant::now();
        let n = self.board.order();
        let k = self.k.min(n);
        let probes: Vec<Vec<usize>> = (0..n).combinations(k).collect();
        let mut sol = Solution {
            report: SolveReport {
                outcome: Outcome::BudgetExceeded,
                k: self.k,
                turns: None,
                states_explored: 0,
                witness: None,
                evaluations: 0,
            },
            probes,
            states: Vec::new(),
            index: HashMap::new(),
            rank: Vec::new(),
            best: Vec::new(),
            complete: false,
        };
        if self.explore(&mut sol, start).is_err() {
            sol.report.states_explored = sol.states.len();
            return sol;
        }
        sol.report.states_explored = sol.states.len();
        sol.rank = vec![UNRANKED; sol.states.len()];
        sol.best = vec![UNRANKED; sol.states.len()];
        if self.label(&mut sol, start).is_err() {
            return sol;
        }
        sol.complete = true;
        if sol.rank[0] != UNRANKED {
            sol.report.outcome = Outcome::CopWins;
            sol.report.turns = Some(sol.rank[0]);
            sol.report.witness = Some(sol.probes[sol.best[0] as usize].clone());
        } else {
            sol.report.outcome = Outcome::RobberWins;
        }
        sol
    }

    fn check_clock(&self, start: Instant) -> std::result::Result<(), Tripped> {
        match self.budget.time_limit {
            Some(limit) if start.elapsed() > limit => Err(Tripped),
            _ => Ok(()),
        }
    }

    fn charge(&self, sol: &mut Solution, evaluations: u64) -> std::result::Result<(), Tripped> {
        sol.report.evaluations += evaluations;
        if sol.report.evaluations > self.budget.max_evaluations {
            Err(Tripped)
        } else {
            Ok(())
        }
    }

    fn explore(&self, sol: &mut Solution, start: Instant) -> std::result::Result<(), Tripped> {
        let board = self.board;
        let root = board.all();
        sol.states.push(root);
        sol.index.insert(root, 0);
        let mut frontier = vec![root];
        while !frontier.is_empty() {
            self.check_clock(start)?;
            self.charge(sol, frontier.len() as u64 * sol.probes.len() as u64)?;
            let probes = &sol.probes;
            let successors: Vec<Vec<VertexSet>> = frontier
                .par_iter()
                .map_init(
                    || (Vec::new(), Vec::new()),
                    |(out, scratch), &s| {
                        let mut found = Vec::new();
                        for probe in probes {
                            board.partition_into(s, probe, out, scratch);
                            found.extend(out.iter().filter(|c| c.len() >= 2).map(|&c| board.expand(c)));
                        }
                        found.sort_unstable();
                        found.dedup();
                        found
                    },
                )
                .collect();
            let mut next = Vec::new();
            for list in successors {
                for s in list {
                    if !sol.index.contains_key(&s) {
                        sol.index.insert(s, sol.states.len() as u32);
                        sol.states.push(s);
                        next.push(s);
                        if sol.states.len() > self.budget.max_states {
                            return Err(Tripped);
                        }
                    }
                }
            }
            frontier = next;
        }
        Ok(())
    }

    fn label(&self, sol: &mut Solution, start: Instant) -> std::result::Result<(), Tripped> {
        let board = self.board;
        let mut round = 1u32;
        loop {
            self.check_clock(start)?;
            let unranked = sol.rank.iter().filter(|&&r| r == UNRANKED).count() as u64;
            self.charge(sol, unranked * sol.probes.len() as u64)?;
            let (states, index, rank, probes) = (&sol.states, &sol.index, &sol.rank, &sol.probes);
            let newly: Vec<(usize, u32)> = (0..states.len())
                .into_par_iter()
                .filter(|&id| rank[id] == UNRANKED)
                .map_init(
                    || (Vec::new(), Vec::new()),
                    |(out, scratch), id| {
                        let s = states[id];
                        probes
                            .iter()
                            .position(|probe| {
                                board.partition_into(s, probe, out, scratch);
                                out.iter().filter(|c| c.len() >= 2).all(|&c| {
                                    let succ = index[&board.expand(c)];
                                    rank[succ as usize] < round
                                })
                            })
                            .map(|p| (id, p as u32))
                    },
                )
                .flatten()
                .collect();
            if newly.is_empty() {
                return Ok(());
            }
            for (id, p) in newly {
                sol.rank[id] = round;
                sol.best[id] = p;
            }
            if sol.rank[0] != UNRANKED {
                return Ok(());
            }
            round += 1;
        }
    }
}

impl Solution {
    pub fn board_probes(&self) -> &[Vec<usize>] {
        &self.probes
    }

    /// Reachable states in discovery order; index 0 is `V`.
    pub fn states(&self) -> &[VertexSet] {
        &self.states
    }

    /// Whether labeling ran to completion (no budget trip).
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Rank of a recorded state: the number of probes that suffice from it.
    pub fn rank(&self, state: VertexSet) -> Option<u32> {
        let &id = self.index.get(&state)?;
        let r = *self.rank.get(id as usize)?;
        (r != UNRANKED).then_some(r)
    }

    pub fn is_recorded(&self, state: VertexSet) -> bool {
        self.index.contains_key(&state)
    }

    /// Probe that wins from `state` within its rank.
    pub fn best_probe(&self, state: VertexSet) -> Option<&[usize]> {
        let &id = self.index.get(&state)?;
        let p = *self.best.get(id as usize)?;
        (p != UNRANKED).then(|| self.probes[p as usize].as_slice())
    }

    /// States never labeled winning, when the Robber wins.
    pub fn certificate(&self) -> Option<SurvivalCertificate> {
        if self.report.outcome != Outcome::RobberWins {
            return None;
        }
        let states = self
            .states
            .iter()
            .zip(&self.rank)
            .filter(|(_, &r)| r == UNRANKED)
            .map(|(&s, _)| s)
            .collect();
        Some(SurvivalCertificate { k: self.report.k, states })
    }
}

/// Knowledge states from which the Robber survives forever against `k` cops:
/// for every member and every `k`-probe some non-singleton class expands to
/// another member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurvivalCertificate {
    pub k: usize,
    pub states: BTreeSet<VertexSet>,
}

impl SurvivalCertificate {
    /// Checks the closure property and that `V` is a member.
    pub fn validate(&self, board: &Board) -> Result<()> {
        let members = &self.states;
        if !members.contains(&board.all()) {
            return Err(Error::InvalidCertificate("initial state V is not certified".into()));
        }
        let k = self.k.min(board.order());
        let mut out = Vec::new();
        let mut scratch = Vec::new();
        for &s in &self.states {
            board.check_set(s).map_err(|e| Error::InvalidCertificate(e.to_string()))?;
            for probe in (0..board.order()).combinations(k) {
                board.partition_into(s, &probe, &mut out, &mut scratch);
                let escapes =
                    out.iter().any(|&c| c.len() >= 2 && members.contains(&board.expand(c)));
                if !escapes {
                    return Err(Error::InvalidCertificate(format!(
                        "state {s:?} is lost to probe {probe:?}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// First class of `state` under `probe` (in distance-vector order) whose
    /// expansion stays certified.
    pub fn escape(&self, board: &Board, state: VertexSet, probe: &[usize]) -> Option<VertexSet> {
        board
            .partition(state, probe)
            .into_iter()
            .find(|&c| c.len() >= 2 && self.states.contains(&board.expand(c)))
    }
}

/// Decides whether `k` cops win on `g`.
pub fn cop_wins(g: &Graph, k: usize, budget: SolveBudget) -> Result<SolveReport> {
    let board = Board::new(g)?;
    Ok(Solver::new(&board, k).budget(budget).solve()?.report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ZetaResult {
    /// `ζ(G)` found.
    Exact { value: usize },
    /// The Robber beats every `k <= k_max`.
    AboveMax { k_max: usize },
    /// The solve at `k` tripped the budget.
    BudgetExceeded { k: usize },
}

impl ZetaResult {
    pub fn value(self) -> Option<usize> {
        match self {
            ZetaResult::Exact { value } => Some(value),
            _ => None,
        }
    }
}

/// Smallest `k <= k_max` for which the Cop wins.
pub fn localization_number(g: &Graph, k_max: usize, budget: SolveBudget) -> Result<ZetaResult> {
    localization_number_with(&Board::new(g)?, k_max, budget, 0)
}

pub fn localization_number_with(
    board: &Board,
    k_max: usize,
    budget: SolveBudget,
    threads: usize,
) -> Result<ZetaResult> {
    if k_max == 0 {
        return Err(Error::InvalidParameter("k_max must be at least 1".into()));
    }
    for k in 1..=k_max {
        let report = Solver::new(board, k).budget(budget).threads(threads).solve()?.report;
        match report.outcome {
            Outcome::CopWins => return Ok(ZetaResult::Exact { value: k }),
            Outcome::RobberWins => continue,
            Outcome::BudgetExceeded => return Ok(ZetaResult::BudgetExceeded { k }),
        }
    }
    Ok(ZetaResult::AboveMax { k_max })
}
