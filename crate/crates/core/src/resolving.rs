//! Resolving sets, metric dimension, doubly resolving sets and projections
//! onto the factors of a product graph.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

/// `[d(v, b_1), ..., d(v, b_k)]` in probe order.
pub fn distance_vector(dm: &DistanceMatrix, probe: &[usize], v: usize) -> Result<Vec<u32>> {
    if probe.is_empty() {
        return Err(Error::InvalidProbe("probe is empty".into()));
    }
    check_range(dm, probe)?;
    check_range(dm, &[v])?;
    Ok(probe.iter().map(|&b| dm.get(v, b)).collect())
}

fn check_range(dm: &DistanceMatrix, vs: &[usize]) -> Result<()> {
    match vs.iter().find(|&&v| v >= dm.order()) {
        Some(&vertex) => Err(Error::VertexOutOfRange { vertex, order: dm.order() }),
        None => Ok(()),
    }
}

/// True iff every vertex has a distinct distance vector to `s`.
pub fn is_resolving_set(dm: &DistanceMatrix, s: &[usize]) -> Result<bool> {
    check_range(dm, s)?;
    Ok(resolves(dm, s))
}

fn resolves(dm: &DistanceMatrix, s: &[usize]) -> bool {
    let mut keys: Vec<Vec<u32>> =
        (0..dm.order()).map(|v| s.iter().map(|&b| dm.get(v, b)).collect()).collect();
    keys.sort_unstable();
    keys.windows(2).all(|w| w[0] != w[1])
}

/// Whether `u1, u2` doubly resolve the pair `v1, v2`:
/// `d(v1,u1) - d(v2,u1) != d(v1,u2) - d(v2,u2)`.
pub fn doubly_resolves(dm: &DistanceMatrix, u1: usize, u2: usize, v1: usize, v2: usize) -> Result<bool> {
    check_range(dm, &[u1, u2, v1, v2])?;
    if v1 == v2 {
        return Err(Error::DegeneratePair(v1));
    }
    Ok(difference(dm, v1, v2, u1) != difference(dm, v1, v2, u2))
}

#[inline]
fn difference(dm: &DistanceMatrix, v1: usize, v2: usize, u: usize) -> i64 {
    dm.get(v1, u) as i64 - dm.get(v2, u) as i64
}

/// True iff every pair of distinct vertices is doubly resolved by two members of `w`.
pub fn is_doubly_resolving_set(dm: &DistanceMatrix, w: &[usize]) -> Result<bool> {
    check_range(dm, w)?;
    if dm.order() < 2 {
        return Err(Error::TrivialGraph);
    }
    Ok(doubly_resolves_all(dm, w))
}

fn doubly_resolves_all(dm: &DistanceMatrix, w: &[usize]) -> bool {
    let Some((&first, rest)) = w.split_first() else {
        return false;
    };
    let n = dm.order();
    (0..n).all(|v1| {
        (v1 + 1..n).all(|v2| {
            let base = difference(dm, v1, v2, first);
            rest.iter().any(|&u| difference(dm, v1, v2, u) != base)
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Found,
    BudgetExceeded,
}

/// Result of a brute-force minimum-subset search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetSearch {
    pub value: Option<usize>,
    pub witness: Option<Vec<usize>>,
    pub status: SearchStatus,
    #[serde(skip)]
    pub subsets_tested: u64,
}

/// Cap on the number of candidate subsets a brute-force search may test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetBudget {
    pub max_subsets: u64,
}

impl Default for SubsetBudget {
    fn default() -> Self {
        Self { max_subsets: 50_000_000 }
    }
}

/// Smallest cardinality from `start` upward for which `accept` holds on some
/// subset. Subsets of each size are tried in lexicographic order; the first
/// hit is the witness.
fn minimum_subset(
    order: usize,
    start: usize,
    budget: SubsetBudget,
    accept: impl Fn(&[usize]) -> bool,
) -> SubsetSearch {
    let mut tested = 0u64;
    for size in start..=order {
        for subset in (0..order).combinations(size) {
            if tested >= budget.max_subsets {
                return SubsetSearch {
                    value: None,
                    witness: None,
                    status: SearchStatus::BudgetExceeded,
                    subsets_tested: tested,
                };
            }
            tested += 1;
            if accept(&subset) {
                return SubsetSearch {
                    value: Some(size),
                    witness: Some(subset),
                    status: SearchStatus::Found,
                    subsets_tested: tested,
                };
            }
        }
    }
    unreachable!("the full vertex set always qualifies")
}

/// `dim(G)` with a lexicographically first minimum resolving set.
pub fn metric_dimension(dm: &DistanceMatrix, budget: SubsetBudget) -> Result<SubsetSearch> {
    if dm.order() < 2 {
        return Err(Error::TrivialGraph);
    }
    Ok(minimum_subset(dm.order(), 1, budget, |s| resolves(dm, s)))
}

/// `ψ(G)`, the doubly resolving number, with a witness set.
pub fn psi(dm: &DistanceMatrix, budget: SubsetBudget) -> Result<SubsetSearch> {
    if dm.order() < 2 {
        return Err(Error::TrivialGraph);
    }
    Ok(minimum_subset(dm.order(), 2, budget, |w| doubly_resolves_all(dm, w)))
}

/// Which factor of `G □ H` to project onto.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    /// `G`, the column coordinate `i`.
    First,
    /// `H`, the row coordinate `j`.
    Second,
}

/// Sorted set of the chosen coordinate over the members of `s`.
pub fn project_onto_factor(product: &Graph, s: &[usize], factor: Factor) -> Result<Vec<usize>> {
    let labels = product.product_labels()?;
    let mut out = Vec::with_capacity(s.len());
    for &v in s {
        product.check_vertex(v)?;
        let (i, j) = labels.coords(v);
        out.push(match factor {
            Factor::First => i,
            Factor::Second => j,
        });
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}
