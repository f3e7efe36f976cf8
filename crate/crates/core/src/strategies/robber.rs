use itertools::Itertools;

use crate::error::{Error, Result};
use crate::game::{Board, PairFamily, SurvivalCertificate};
use crate::graph::{cartesian_product, Graph, ProductLabels};
use crate::vertex_set::VertexSet;

/// Every pair of vertices of `C_3 □ C_3`.
pub fn robber_family_c3c3() -> PairFamily {
    PairFamily::new((0..9).tuple_combinations()).expect("distinct pairs")
}

/// Diagonal pairs `{v_{a,b}, v_{a+1,b±1}}` and vertical pairs
/// `{v_{a,b}, v_{a,b+2}}` of `C_{2p} □ C_4`.
pub fn robber_family_c2pc4(p: usize) -> Result<PairFamily> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!("c2pc4 needs p >= 2, got p={p}")));
    }
    let l = ProductLabels { columns: 2 * p, rows: 4 };
    let mut pairs = Vec::new();
    for a in 0..l.columns as isize {
        for b in 0..4isize {
            pairs.push((l.id(a, b), l.id(a + 1, b + 1)));
            pairs.push((l.id(a, b), l.id(a + 1, b - 1)));
            pairs.push((l.id(a, b), l.id(a, b + 2)));
        }
    }
    PairFamily::new(pairs)
}

/// All pairs on a shortest cycle, if that cycle has length at most five.
/// Such a family certifies that one cop does not suffice.
pub fn short_cycle_family(g: &Graph) -> Option<PairFamily> {
    let cycle = g.shortest_cycle().filter(|c| c.len() <= 5)?;
    PairFamily::new(cycle.into_iter().tuple_combinations()).ok()
}

/// Robber on `G □ H` who imagines the game on `G` against a survival
/// certificate and answers inside one fixed row.
#[derive(Debug, Clone)]
pub struct RobberProjection {
    cert: SurvivalCertificate,
    g_board: Board,
    labels: ProductLabels,
    row: usize,
    state: VertexSet,
}

pub fn robber_projection_strategy(
    cert: SurvivalCertificate,
    g: &Graph,
    h: &Graph,
    row: usize,
) -> Result<RobberProjection> {
    let g_board = Board::new(g)?;
    cert.validate(&g_board)?;
    h.check_vertex(row)?;
    let labels = cartesian_product(g, h)?.labels().expect("products are labeled");
    let state = g_board.all();
    Ok(RobberProjection { cert, g_board, labels, row, state })
}

impl RobberProjection {
    pub fn row(&self) -> usize {
        self.row
    }

    /// The Robber's candidate set in the imagined game.
    pub fn imagined_state(&self) -> VertexSet {
        self.state
    }

    /// Projection of `probe` onto `G`, padded with the smallest unprobed
    /// vertices to exactly `k` entries.
    pub fn project(&self, probe: &[usize]) -> Result<Vec<usize>> {
        let mut s: Vec<usize> = Vec::new();
        for &x in probe {
            if x >= self.labels.columns * self.labels.rows {
                return Err(Error::VertexOutOfRange { vertex: x, order: self.labels.columns * self.labels.rows });
            }
            let g = self.labels.coords(x).0;
            if !s.contains(&g) {
                s.push(g);
            }
        }
        let k = self.cert.k.min(self.g_board.order());
        if s.len() > k {
            return Err(Error::ProbeArity { expected: k, got: s.len() });
        }
        let pad: Vec<usize> = (0..self.g_board.order()).filter(|v| !s.contains(v)).collect();
        s.extend(pad.into_iter().take(k - s.len()));
        Ok(s)
    }

    /// Answers a probe with a set `T × {row}` of equal distance vectors,
    /// `|T| >= 2`, and advances the imagined game.
    pub fn respond(&mut self, probe: &[usize]) -> Result<VertexSet> {
        let s = self.project(probe)?;
        let t = self
            .cert
            .escape(&self.g_board, self.state, &s)
            .ok_or_else(|| Error::InvalidCertificate(format!("no escape from {:?} under {s:?}", self.state)))?;
        self.state = self.g_board.expand(t);
        let base = self.row * self.labels.columns;
        Ok(t.iter().map(|g| base + g).collect())
    }
}
