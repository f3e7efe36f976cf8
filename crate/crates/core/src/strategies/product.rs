use super::{CopStrategy, Step, TurnContext};
use crate::error::{Error, Result};
use crate::game::Board;
use crate::graph::{all_pairs_distances, cartesian_product, Graph, ProductLabels};
use crate::resolving::is_doubly_resolving_set;
use crate::vertex_set::VertexSet;

/// Cop strategy on `G □ H` that imagines `inner` on `G` and adds a doubly
/// resolving set `T` of `H` around one probed vertex per turn.
pub struct ProductStrategy<S> {
    inner: S,
    g_board: Board,
    product: Graph,
    t: Vec<usize>,
}

/// `inner` must be a strategy for `g`; `t` must doubly resolve `h`.
pub fn product_strategy<S: CopStrategy>(inner: S, g: &Graph, h: &Graph, t: &[usize]) -> Result<ProductStrategy<S>> {
    let mut t = t.to_vec();
    t.sort_unstable();
    t.dedup();
    if t.is_empty() {
        return Err(Error::InvalidParameter("T must be nonempty".into()));
    }
    if !is_doubly_resolving_set(&all_pairs_distances(h)?, &t)? {
        return Err(Error::InvalidParameter(format!("{t:?} does not doubly resolve H")));
    }
    let g_board = Board::new(g)?;
    inner.check_board(&g_board)?;
    Ok(ProductStrategy { inner, g_board, product: cartesian_product(g, h)?, t })
}

impl<S: CopStrategy> ProductStrategy<S> {
    fn labels(&self) -> ProductLabels {
        self.product.labels().expect("products are labeled")
    }

    /// `X = {(b, t) : t ∈ T} ∪ {(b_i, t*) : b_i ∈ B}` with `b = min B`, `t* = min T`.
    pub fn lift(&self, inner_probe: &[usize]) -> Vec<usize> {
        let l = self.labels();
        let b = *inner_probe.iter().min().expect("probes are nonempty");
        let t_star = self.t[0];
        let mut out: Vec<usize> = self.t.iter().map(|&t| t * l.columns + b).collect();
        out.extend(inner_probe.iter().filter(|&&bi| bi != b).map(|&bi| t_star * l.columns + bi));
        out
    }

    /// Replays the imagined game on `G` along `history` and returns the inner
    /// state and history at the current turn.
    fn imagine(&self, ctx: &TurnContext<'_>) -> Result<(VertexSet, Vec<Step>)> {
        let l = self.labels();
        let mut state = self.g_board.all();
        let mut inner: Vec<Step> = Vec::with_capacity(ctx.history.len());
        for (idx, step) in ctx.history.iter().enumerate() {
            let turn = idx + 1;
            let probe = self.inner.next_probe(&self.g_board, &TurnContext { turn, state, history: &inner })?;
            let rows: VertexSet = step.class.iter().map(|v| l.coords(v).1).collect();
            if rows.len() != 1 {
                return Err(Error::SoundnessViolation(format!(
                    "turn {turn}: class spans rows {:?}",
                    rows.to_vec()
                )));
            }
            let projection: VertexSet = step.class.iter().map(|v| l.coords(v).0).collect();
            let first = projection.first().expect("classes are nonempty");
            let class = self
                .g_board
                .partition(state, &probe)
                .into_iter()
                .find(|c| c.contains(first))
                .filter(|c| projection.is_subset(*c))
                .ok_or_else(|| {
                    Error::SoundnessViolation(format!(
                        "turn {turn}: projection {projection:?} is not inside one imagined class"
                    ))
                })?;
            inner.push(Step { probe, class });
            state = self.g_board.expand(class);
        }
        Ok((state, inner))
    }
}

impl<S: CopStrategy> CopStrategy for ProductStrategy<S> {
    fn name(&self) -> String {
        format!("product({}, T={:?})", self.inner.name(), self.t)
    }

    fn cop_count(&self) -> usize {
        self.inner.cop_count() + self.t.len() - 1
    }

    fn check_board(&self, board: &Board) -> Result<()> {
        let g = board.graph();
        if g.labels() != self.product.labels() || g.edges() != self.product.edges() {
            return Err(Error::StrategyMismatch("board is not G □ H for this product strategy".into()));
        }
        Ok(())
    }

    fn next_probe(&self, _board: &Board, ctx: &TurnContext<'_>) -> Result<Vec<usize>> {
        let (state, history) = self.imagine(ctx)?;
        let inner_ctx = TurnContext { turn: ctx.turn, state, history: &history };
        let probe = self.inner.next_probe(&self.g_board, &inner_ctx)?;
        Ok(self.lift(&probe))
    }
}
