use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use super::Board;
use crate::error::{Error, Result};

/// Set of unordered vertex pairs `{u, v}`, stored as `(min, max)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PairFamily {
    pairs: BTreeSet<(usize, usize)>,
}

impl PairFamily {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = BTreeSet::new();
        for (u, v) in pairs {
            if u == v {
                return Err(Error::DegeneratePair(u));
            }
            out.insert((u.min(v), u.max(v)));
        }
        Ok(Self { pairs: out })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.pairs.contains(&(u.min(v), u.max(v)))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    /// `[[u,v],...]`, sorted, no whitespace.
    pub fn to_json(&self) -> String {
        let list: Vec<[usize; 2]> = self.iter().map(|(u, v)| [u, v]).collect();
        serde_json::to_string(&list).expect("pair list serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let list: Vec<[usize; 2]> =
            serde_json::from_str(text).map_err(|e| Error::Malformed(format!("pairs: {e}")))?;
        Self::new(list.into_iter().map(|[u, v]| (u, v)))
            .map_err(|e| Error::Malformed(format!("pairs: {e}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HideoutCheck {
    pub certified: bool,
    /// First pair (in sorted order) together with the first probe that
    /// separates it from every successor pair.
    pub counterexample: Option<((usize, usize), Vec<usize>)>,
    pub probes_checked: usize,
}

/// Checks that `family` is closed under probing: for each pair `{u, v}` and
/// each `k`-probe there is a member `{u', v'} ⊆ N[{u, v}]` whose endpoints have
/// equal distance vectors.
///
/// A certified family keeps the Robber alive from any knowledge state that
/// contains `N[{u, v}]` for some member pair, in particular from `V`.
pub fn verify_hideout_family(board: &Board, k: usize, family: &PairFamily) -> Result<HideoutCheck> {
    if family.is_empty() {
        return Err(Error::InvalidParameter("pair family is empty".into()));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("at least one cop is required".into()));
    }
    for (u, v) in family.iter() {
        for x in [u, v] {
            board.graph().check_vertex(x)?;
        }
    }
    let n = board.order();
    let probes: Vec<Vec<usize>> = (0..n).combinations(k.min(n)).collect();
    // per probe: family pairs whose endpoints share a distance vector
    let tied: Vec<Vec<(usize, usize)>> = probes
        .iter()
        .map(|probe| {
            let mut class_of = vec![0usize; n];
            for (idx, class) in board.partition(board.all(), probe).into_iter().enumerate() {
                for v in class {
                    class_of[v] = idx;
                }
            }
            family.iter().filter(|&(a, b)| class_of[a] == class_of[b]).collect()
        })
        .collect();
    for (u, v) in family.iter() {
        let reach = board.closed_neighborhood(u) | board.closed_neighborhood(v);
        for (probe, ties) in probes.iter().zip(&tied) {
            let survives = ties.iter().any(|&(a, b)| reach.contains(a) && reach.contains(b));
            if !survives {
                return Ok(HideoutCheck {
                    certified: false,
                    counterexample: Some(((u, v), probe.clone())),
                    probes_checked: probes.len(),
                });
            }
        }
    }
    Ok(HideoutCheck { certified: true, counterexample: None, probes_checked: probes.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_cycle, make_torus};

    fn all_pairs(n: usize) -> PairFamily {
        PairFamily::new((0..n).tuple_combinations()).unwrap()
    }

    #[test]
    fn c3c3_all_pairs_certified() {
        let board = Board::new(&make_torus(3, 3).unwrap()).unwrap();
        let fam = all_pairs(9);
        assert_eq!(fam.len(), 36);
        let check = verify_hideout_family(&board, 2, &fam).unwrap();
        assert!(check.certified, "{check:?}");
    }

    #[test]
    fn c5c5_all_pairs_refuted() {
        let board = Board::new(&make_torus(5, 5).unwrap()).unwrap();
        let check = verify_hideout_family(&board, 2, &all_pairs(25)).unwrap();
        assert!(!check.certified);
        let ((u, v), probe) = check.counterexample.unwrap();
        // the witness really separates every successor pair
        let reach = board.closed_neighborhood(u) | board.closed_neighborhood(v);
        for a in reach {
            for b in reach {
                if a < b {
                    assert_ne!(board.distance_vector(&probe, a), board.distance_vector(&probe, b));
                }
            }
        }
    }

    #[test]
    fn short_cycle_is_a_one_cop_hideout() {
        let board = Board::new(&make_cycle(5).unwrap()).unwrap();
        assert!(verify_hideout_family(&board, 1, &all_pairs(5)).unwrap().certified);
        let board = Board::new(&make_cycle(7).unwrap()).unwrap();
        assert!(!verify_hideout_family(&board, 1, &all_pairs(7)).unwrap().certified);
    }

    #[test]
    fn json_roundtrip_and_errors() {
        let fam = PairFamily::new([(3, 1), (0, 2), (1, 3)]).unwrap();
        assert_eq!(fam.len(), 2);
        assert_eq!(fam.to_json(), "[[0,2],[1,3]]");
        assert_eq!(PairFamily::from_json(&fam.to_json()).unwrap(), fam);
        assert!(PairFamily::from_json("[[1,1]]").is_err());
        assert!(PairFamily::from_json("{\"pairs\":[]}").is_err());
        assert!(PairFamily::new([(2, 2)]).is_err());
    }

    #[test]
    fn empty_family_rejected() {
        let board = Board::new(&make_cycle(5).unwrap()).unwrap();
        assert!(verify_hideout_family(&board, 1, &PairFamily::default()).is_err());
    }
}
