//! Knowledge-set semantics of the localization game.
//!
//! The Cop's information is a candidate set of vertices. A probe splits the
//! set into classes of equal distance vectors; a singleton class locates the
//! Robber, otherwise the Robber may stay or step to a neighbour and the
//! candidate set grows to the closed neighbourhood of the class.

mod hideout;
mod solver;

pub use hideout::{verify_hideout_family, HideoutCheck, PairFamily};
pub use solver::{
    cop_wins, localization_number, localization_number_with, Outcome, SolveBudget, SolveReport, Solution, Solver,
    SurvivalCertificate, ZetaResult,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph, ProductLabels};
use crate::vertex_set::{VertexSet, MAX_GAME_ORDER};

/// Candidate locations of the Robber as known to the Cop.
pub type KnowledgeState = VertexSet;

/// Ordered list of distinct probed vertices. The order fixes the component
/// order of distance vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Probe(Vec<usize>);

impl Probe {
    pub fn new(vertices: Vec<usize>, order: usize) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidProbe("probe is empty".into()));
        }
        for (idx, &v) in vertices.iter().enumerate() {
            if v >= order {
                return Err(Error::VertexOutOfRange { vertex: v, order });
            }
            if vertices[..idx].contains(&v) {
                return Err(Error::InvalidProbe(format!("vertex {v} probed twice")));
            }
        }
        Ok(Probe(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl AsRef<[usize]> for Probe {
    fn as_ref(&self) -> &[usize] {
        &self.0
    }
}

/// Precomputed distance data for playing on one graph.
#[derive(Debug, Clone)]
pub struct Board {
    graph: Graph,
    dm: DistanceMatrix,
    closed: Vec<VertexSet>,
    /// `layers[b][d]`: vertices at distance `d` from `b`.
    layers: Vec<Vec<VertexSet>>,
}

impl Board {
    pub fn new(graph: &Graph) -> Result<Self> {
        let n = graph.order();
        if n > MAX_GAME_ORDER {
            return Err(Error::GraphTooLarge { order: n, limit: MAX_GAME_ORDER });
        }
        if n == 0 {
            return Err(Error::InvalidOrder("game needs at least one vertex".into()));
        }
        let dm = all_pairs_distances(graph)?;
        let closed = (0..n)
            .map(|v| {
                let mut s = VertexSet::singleton(v);
                for &w in graph.neighbors(v) {
                    s.insert(w);
                }
                s
            })
            .collect();
        let layers = (0..n)
            .map(|b| {
                let row = dm.row(b);
                let ecc = *row.iter().max().unwrap() as usize;
                let mut out = vec![VertexSet::EMPTY; ecc + 1];
                for (v, &d) in row.iter().enumerate() {
                    out[d as usize].insert(v);
                }
                out
            })
            .collect();
        Ok(Self { graph: graph.clone(), dm, closed, layers })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dm
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.closed[v]
    }

    /// `N[t]`.
    #[inline]
    pub fn expand(&self, t: VertexSet) -> VertexSet {
        t.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.closed[v])
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        let stray = s & !self.all();
        match stray.first() {
            Some(vertex) => Err(Error::VertexOutOfRange { vertex, order: self.order() }),
            None => Ok(()),
        }
    }

    pub fn check_probe(&self, probe: &[usize]) -> Result<()> {
        Probe::new(probe.to_vec(), self.order()).map(|_| ())
    }

    /// Splits `s` into classes of equal distance vectors, appending them to
    /// `out` in lexicographic order of their vectors. `scratch` is reused
    /// between calls.
    #[inline]
    pub fn partition_into(
        &self,
        s: VertexSet,
        probe: &[usize],
        out: &mut Vec<VertexSet>,
        scratch: &mut Vec<VertexSet>,
    ) {
        out.clear();
        out.push(s);
        for &b in probe {
            scratch.clear();
            for &class in out.iter() {
                if class.len() == 1 {
                    scratch.push(class);
                    continue;
                }
                for &layer in &self.layers[b] {
                    let part = class & layer;
                    if !part.is_empty() {
                        scratch.push(part);
                    }
                }
            }
            std::mem::swap(out, scratch);
        }
    }

    pub fn partition(&self, s: VertexSet, probe: &[usize]) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut scratch = Vec::new();
        self.partition_into(s, probe, &mut out, &mut scratch);
        out
    }

    pub fn distance_vector(&self, probe: &[usize], v: usize) -> Vec<u32> {
        probe.iter().map(|&b| self.dm.get(v, b)).collect()
    }
}

/// Classes of `s` under `probe`, ordered lexicographically by distance vector.
pub fn partition_by_probe(board: &Board, s: KnowledgeState, probe: &[usize]) -> Result<Vec<KnowledgeState>> {
    board.check_set(s)?;
    board.check_probe(probe)?;
    if s.is_empty() {
        return Err(Error::InvalidParameter("knowledge state is empty".into()));
    }
    Ok(board.partition(s, probe))
}

/// `N[t]`: where the Robber may be after one more move.
pub fn robber_expand(board: &Board, t: KnowledgeState) -> Result<KnowledgeState> {
    board.check_set(t)?;
    Ok(board.expand(t))
}

/// `DD(B, v) = b - a` for `D(B, v) = [a, b]`.
pub fn second_difference(dm: &DistanceMatrix, probe: &[usize], v: usize) -> Result<i64> {
    if probe.len() != 2 {
        return Err(Error::ProbeArity { expected: 2, got: probe.len() });
    }
    for &x in probe.iter().chain(std::iter::once(&v)) {
        if x >= dm.order() {
            return Err(Error::VertexOutOfRange { vertex: x, order: dm.order() });
        }
    }
    Ok(dm.get(v, probe[1]) as i64 - dm.get(v, probe[0]) as i64)
}

/// Non-singleton classes of `V` under `probe`.
pub fn safe_sets(board: &Board, probe: &[usize]) -> Result<Vec<KnowledgeState>> {
    board.check_probe(probe)?;
    Ok(board.partition(board.all(), probe).into_iter().filter(|c| c.len() >= 2).collect())
}

/// Vertices grouped by second difference under a 2-probe, in ascending order of `h`.
pub fn safe_houses(board: &Board, probe: &[usize]) -> Result<Vec<(i64, VertexSet)>> {
    board.check_probe(probe)?;
    let mut houses: std::collections::BTreeMap<i64, VertexSet> = Default::default();
    for v in 0..board.order() {
        let h = second_difference(board.distances(), probe, v)?;
        houses.entry(h).or_default().insert(v);
    }
    Ok(houses.into_iter().collect())
}

/// True iff no two vertices of `region` share a distance vector to `probe`.
pub fn is_cop_house(board: &Board, region: VertexSet, probe: &[usize]) -> Result<bool> {
    board.check_set(region)?;
    board.check_probe(probe)?;
    if region.is_empty() {
        return Ok(true);
    }
    Ok(board.partition(region, probe).iter().all(|c| c.len() == 1))
}

/// Rectangle description `{v_{a,b}, v_{a+d_i,b}, v_{a,b+d_j}, v_{a+d_i,b+d_j}}`
/// of a candidate set on a product graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SafeSetForm {
    pub a: usize,
    pub b: usize,
    pub d_i: usize,
    pub d_j: usize,
}

impl SafeSetForm {
    pub fn corners(&self, labels: ProductLabels) -> VertexSet {
        let (a, b) = (self.a as isize, self.b as isize);
        let (di, dj) = (self.d_i as isize, self.d_j as isize);
        [labels.id(a, b), labels.id(a + di, b), labels.id(a, b + dj), labels.id(a + di, b + dj)]
            .into_iter()
            .collect()
    }

    /// First fit in the order (base corner by ascending id, then `d_i`, then
    /// `d_j`), with `d_i <= columns/2` and `d_j <= rows/2`.
    pub fn fit(labels: ProductLabels, class: VertexSet) -> Option<SafeSetForm> {
        if class.is_empty() || class.len() > 4 {
            return None;
        }
        for base in class.iter() {
            let (a, b) = labels.coords(base);
            for d_i in 0..=labels.columns / 2 {
                for d_j in 0..=labels.rows / 2 {
                    let form = SafeSetForm { a, b, d_i, d_j };
                    if form.corners(labels) == class {
                        return Some(form);
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_torus};

    fn set(g: &Graph, coords: &[(isize, isize)]) -> VertexSet {
        coords.iter().map(|&(i, j)| g.vertex_at(i, j).unwrap()).collect()
    }

    #[test]
    fn probe_validation() {
        assert!(Probe::new(vec![], 4).is_err());
        assert!(Probe::new(vec![1, 1], 4).is_err());
        assert!(Probe::new(vec![4], 4).is_err());
        assert_eq!(Probe::new(vec![3, 1], 4).unwrap().vertices(), &[3, 1]);
    }

    #[test]
    fn c5c5_first_probe_classes() {
        let t = make_torus(5, 5).unwrap();
        let board = Board::new(&t).unwrap();
        let probe = [t.vertex_at(2, 4).unwrap(), t.vertex_at(2, 2).unwrap()];
        let classes = partition_by_probe(&board, board.all(), &probe).unwrap();
        assert_eq!(classes.len(), 15);
        let pairs: Vec<_> = classes.iter().filter(|c| c.len() == 2).collect();
        let singles: Vec<_> = classes.iter().filter(|c| c.len() == 1).collect();
        assert_eq!(pairs.len(), 10);
        assert_eq!(singles.len(), 5);
        for c in pairs {
            let v: Vec<_> = c.iter().map(|x| t.coords(x).unwrap()).collect();
            assert_eq!(v[0].1, v[1].1);
            assert_eq!(v[0].0 + v[1].0, 4);
        }
        for c in singles {
            assert_eq!(t.coords(c.first().unwrap()).unwrap().0, 2);
        }
    }

    #[test]
    fn partition_trivial_cases() {
        let t = make_torus(4, 3).unwrap();
        let board = Board::new(&t).unwrap();
        let s = VertexSet::singleton(5);
        assert_eq!(partition_by_probe(&board, s, &[0]).unwrap(), vec![s]);
        let s: VertexSet = [1, 2, 7].into_iter().collect();
        let classes = partition_by_probe(&board, s, &[1, 2, 7]).unwrap();
        assert!(classes.iter().all(|c| c.len() == 1));
        assert_eq!(classes.len(), 3);
        assert!(partition_by_probe(&board, VertexSet::EMPTY, &[0]).is_err());
    }

    #[test]
    fn classes_are_ordered_by_vector() {
        let t = make_torus(5, 4).unwrap();
        let board = Board::new(&t).unwrap();
        let probe = [3, 11];
        let classes = board.partition(board.all(), &probe);
        let vectors: Vec<_> =
            classes.iter().map(|c| board.distance_vector(&probe, c.first().unwrap())).collect();
        assert!(vectors.windows(2).all(|w| w[0] < w[1]));
        for c in &classes {
            let first = board.distance_vector(&probe, c.first().unwrap());
            assert!(c.iter().all(|v| board.distance_vector(&probe, v) == first));
        }
    }

    #[test]
    fn robber_expansion() {
        let t = make_torus(3, 3).unwrap();
        let board = Board::new(&t).unwrap();
        let pair = set(&t, &[(0, 0), (1, 0)]);
        assert!(robber_expand(&board, pair).unwrap().len() >= 5);
        assert_eq!(robber_expand(&board, board.all()).unwrap(), board.all());
        let t = make_torus(5, 6).unwrap();
        let board = Board::new(&t).unwrap();
        assert_eq!(robber_expand(&board, VertexSet::singleton(8)).unwrap().len(), 5);
    }

    #[test]
    fn second_difference_values() {
        let t = make_torus(7, 6).unwrap();
        let board = Board::new(&t).unwrap();
        let probe = [t.vertex_at(3, 5).unwrap(), t.vertex_at(3, 2).unwrap()];
        assert_eq!(second_difference(board.distances(), &probe, 0).unwrap(), 1);
        assert!(matches!(
            second_difference(board.distances(), &[0], 0),
            Err(Error::ProbeArity { expected: 2, got: 1 })
        ));
        let k = make_complete(4).unwrap();
        let board = Board::new(&k).unwrap();
        assert_eq!(second_difference(board.distances(), &[0, 1], 2).unwrap(), 0);
    }

    #[test]
    fn second_difference_closed_form() {
        // DD(B_1, v_{i,j}) = 2|q-1-j| - q for B_1 = (v_{p,2q-1}, v_{p,q-1})
        for p in 1..=3isize {
            for q in 2..=3isize {
                let t = make_torus((2 * p + 1) as usize, (2 * q) as usize).unwrap();
                let board = Board::new(&t).unwrap();
                let probe = [t.vertex_at(p, 2 * q - 1).unwrap(), t.vertex_at(p, q - 1).unwrap()];
                for v in 0..t.order() {
                    let (_, j) = t.coords(v).unwrap();
                    let expected = 2 * (q - 1 - j as isize).abs() - q;
                    assert_eq!(second_difference(board.distances(), &probe, v).unwrap(), expected as i64);
                }
            }
        }
    }

    #[test]
    fn safe_sets_lie_in_safe_houses() {
        let t = make_torus(7, 6).unwrap();
        let board = Board::new(&t).unwrap();
        let probe = [t.vertex_at(3, 5).unwrap(), t.vertex_at(3, 2).unwrap()];
        let houses = safe_houses(&board, &probe).unwrap();
        for s in safe_sets(&board, &probe).unwrap() {
            assert_eq!(houses.iter().filter(|(_, h)| s.is_subset(*h)).count(), 1);
        }
        for (_, h) in &houses {
            let mut rows: Vec<usize> = h.iter().map(|v| t.coords(v).unwrap().1).collect();
            rows.dedup();
            rows.sort_unstable();
            rows.dedup();
            assert!(rows.len() <= 2);
        }
    }

    #[test]
    fn resolving_probe_has_no_safe_sets() {
        let t = make_torus(4, 4).unwrap();
        let board = Board::new(&t).unwrap();
        // frozen: lexicographically first minimum resolving set of C4□C4
        let witness = crate::resolving::metric_dimension(board.distances(), Default::default())
            .unwrap()
            .witness
            .unwrap();
        assert!(safe_sets(&board, &witness).unwrap().is_empty());
    }

    #[test]
    fn cop_house_region() {
        let t = make_torus(7, 6).unwrap();
        let board = Board::new(&t).unwrap();
        let (p, q) = (3isize, 3isize);
        let probe = [t.vertex_at(p, 2 * q - 1).unwrap(), t.vertex_at(p, q - 1).unwrap()];
        let region: VertexSet = (0..=p)
            .flat_map(|x| (q - 1..=2 * q - 1).map(move |y| (x, y)))
            .map(|(x, y)| t.vertex_at(x, y).unwrap())
            .collect();
        assert!(is_cop_house(&board, region, &probe).unwrap());
        let pair = safe_sets(&board, &probe).unwrap()[0];
        assert!(!is_cop_house(&board, pair, &probe).unwrap());
    }

    #[test]
    fn rectangle_fitting() {
        let t = make_torus(7, 6).unwrap();
        let labels = t.labels().unwrap();
        let s = set(&t, &[(6, 0), (0, 0)]);
        let form = SafeSetForm::fit(labels, s).unwrap();
        assert_eq!(form, SafeSetForm { a: 6, b: 0, d_i: 1, d_j: 0 });
        let s = set(&t, &[(1, 1), (5, 1), (1, 3), (5, 3)]);
        let form = SafeSetForm::fit(labels, s).unwrap();
        assert_eq!(form.corners(labels), s);
        assert_eq!((form.d_i, form.d_j), (3, 2));
        assert!(SafeSetForm::fit(labels, set(&t, &[(0, 0), (1, 1), (2, 2)])).is_none());
    }
}
