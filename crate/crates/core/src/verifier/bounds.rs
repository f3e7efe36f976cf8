use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::game::{localization_number_with, Board, SolveBudget, ZetaResult};
use crate::graph::{all_pairs_distances, cartesian_product, Graph};
use crate::resolving::{psi, SearchStatus, SubsetBudget, SubsetSearch};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BoundsBudget {
    pub solve: SolveBudget,
    pub subsets: SubsetBudget,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundStatus {
    Holds,
    Violated,
    Unresolved,
}

impl BoundStatus {
    fn of(check: Option<bool>) -> Self {
        match check {
            Some(true) => BoundStatus::Holds,
            Some(false) => BoundStatus::Violated,
            None => BoundStatus::Unresolved,
        }
    }
}

/// `max{ζ(G), ζ(H)} <= ζ(G □ H) <= ζ(G) + ψ(H) - 1` on one pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub zeta_g: ZetaResult,
    pub zeta_h: ZetaResult,
    pub psi_h: SubsetSearch,
    pub zeta_product: ZetaResult,
    pub lower: BoundStatus,
    pub upper: BoundStatus,
}

impl BoundsReport {
    pub fn lower_ok(&self) -> bool {
        self.lower == BoundStatus::Holds
    }

    pub fn upper_ok(&self) -> bool {
        self.upper == BoundStatus::Holds
    }
}

fn zeta(g: &Graph, budget: SolveBudget) -> Result<ZetaResult> {
    let k_max = g.order().saturating_sub(1).max(1);
    localization_number_with(&Board::new(g)?, k_max, budget, 0)
}

fn assemble(zeta_g: ZetaResult, zeta_h: ZetaResult, psi_h: SubsetSearch, zeta_product: ZetaResult) -> BoundsReport {
    let (zg, zh, zp) = (zeta_g.value(), zeta_h.value(), zeta_product.value());
    let ps = (psi_h.status == SearchStatus::Found).then_some(psi_h.value).flatten();
    let lower = BoundStatus::of(zg.zip(zh).zip(zp).map(|((a, b), p)| p >= a.max(b)));
    let upper = BoundStatus::of(zg.zip(ps).zip(zp).map(|((a, s), p)| p < a + s));
    BoundsReport { zeta_g, zeta_h, psi_h, zeta_product, lower, upper }
}

/// Computes every quantity exactly (within `budget`) and evaluates both
/// inequalities; anything over budget leaves its inequality unresolved.
pub fn check_bounds(g: &Graph, h: &Graph, budget: BoundsBudget) -> Result<BoundsReport> {
    let zeta_g = zeta(g, budget.solve)?;
    let zeta_h = zeta(h, budget.solve)?;
    let psi_h = psi(&all_pairs_distances(h)?, budget.subsets)?;
    let zeta_product = zeta(&cartesian_product(g, h)?, budget.solve)?;
    Ok(assemble(zeta_g, zeta_h, psi_h, zeta_product))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsRow {
    pub g: String,
    pub h: String,
    pub order: usize,
    #[serde(flatten)]
    pub report: BoundsReport,
}

/// [`check_bounds`] over all ordered pairs of `graphs` whose product has at
/// most `max_order` vertices. Factor values are computed once; rows follow
/// the input order.
pub fn bounds_table(graphs: &[(String, Graph)], max_order: usize, budget: BoundsBudget) -> Result<Vec<BoundsRow>> {
    let factors: Vec<(ZetaResult, SubsetSearch)> = graphs
        .par_iter()
        .map(|(_, g)| Ok((zeta(g, budget.solve)?, psi(&all_pairs_distances(g)?, budget.subsets)?)))
        .collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = (0..graphs.len())
        .flat_map(|a| (0..graphs.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| graphs[a].1.order() * graphs[b].1.order() <= max_order)
        .collect();
    pairs
        .par_iter()
        .map(|&(a, b)| {
            let product = cartesian_product(&graphs[a].1, &graphs[b].1)?;
            let zeta_product = zeta(&product, budget.solve)?;
            Ok(BoundsRow {
                g: graphs[a].0.clone(),
                h: graphs[b].0.clone(),
                order: product.order(),
                report: assemble(factors[a].0, factors[b].0, factors[b].1.clone(), zeta_product),
            })
        })
        .collect()
}
