//! Acceptance checks, one line per criterion. Run with
//! `cargo test --release --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{bfs_distances, mini_corpus, Minimax};
use locgame::game::{
    cop_wins, is_cop_house, localization_number, safe_sets, verify_hideout_family, Board, Outcome, SolveBudget,
};
use locgame::graph::{
    all_pairs_distances, cartesian_product, make_complete, make_complete_bipartite, make_cycle, make_grid,
    make_path, make_torus, Graph,
};
use locgame::resolving::{metric_dimension, psi, SubsetBudget};
use locgame::strategies::{
    robber_family_c2pc4, robber_family_c3c3, strategy_c2p_c6, strategy_c5c3, strategy_c5c5, strategy_even_even,
    strategy_odd_even, CopStrategy, TorusScript,
};
use locgame::verifier::{
    acceptance_matrix, bounds_table, verify_cop_strategy, Battery, BoundStatus, BoundsBudget, MatrixConfig,
    RowStatus, DEFAULT_MAX_TURNS,
};
use locgame::vertex_set::VertexSet;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn zeta(g: &Graph, k_max: usize) -> Option<usize> {
    localization_number(g, k_max, SolveBudget::default()).unwrap().value()
}

fn criterion_1() -> Check {
    let rows = acceptance_matrix(&Battery::builtin(), &MatrixConfig::default()).map_err(|e| e.to_string())?;
    let required = [
        (3, 3, 3),
        (4, 3, 2),
        (5, 3, 2),
        (4, 4, 3),
        (5, 5, 2),
        (5, 4, 2),
        (6, 4, 3),
        (7, 6, 2),
    ];
    for (m, n, z) in required {
        let row = rows
            .iter()
            .find(|r| (r.m, r.n) == (m, n))
            .ok_or_else(|| format!("battery lacks C{m} □ C{n}"))?;
        ensure(row.status == RowStatus::Match && row.observed == Some(z), || {
            format!("C{m} □ C{n}: expected {z}, row {row:?}")
        })?;
    }
    for r in &rows {
        ensure(r.status == RowStatus::Match, || format!("row {r:?}"))?;
    }
    // certified rows small enough to solve outright
    for (m, n, z) in [(5, 5, 2), (5, 4, 2), (6, 4, 3)] {
        let got = zeta(&make_torus(m, n).unwrap(), 3);
        ensure(got == Some(z), || format!("solver gives ζ(C{m} □ C{n}) = {got:?}"))?;
    }
    Ok(format!("{} battery rows match; 3 certified rows re-solved exactly", rows.len()))
}

fn criterion_2() -> Check {
    let mut cases: Vec<(TorusScript, usize)> = vec![(strategy_c5c5(), 2), (strategy_c5c3(), 2)];
    for p in 1..=3 {
        for q in 2..=3 {
            cases.push((strategy_odd_even(p, q).unwrap(), 4));
        }
    }
    cases.push((strategy_c2p_c6(3).unwrap(), 4));
    cases.push((strategy_c2p_c6(4).unwrap(), 4));
    cases.push((strategy_even_even(4, 4).unwrap(), 4));
    for (s, bound) in &cases {
        let board = Board::new(&make_torus(s.m, s.n).unwrap()).unwrap();
        let r = verify_cop_strategy(&board, s, DEFAULT_MAX_TURNS).map_err(|e| e.to_string())?;
        ensure(r.won && r.max_turns <= *bound, || format!("{} on C{} □ C{}: {r:?}", s.name(), s.m, s.n))?;
    }
    Ok(format!("{} scripted strategies win within their probe bounds", cases.len()))
}

fn criterion_3() -> Check {
    let c3c3 = make_torus(3, 3).unwrap();
    let fam = robber_family_c3c3();
    ensure(fam.len() == 36, || format!("C3 □ C3 family has {} pairs", fam.len()))?;
    let check = verify_hideout_family(&Board::new(&c3c3).unwrap(), 2, &fam).unwrap();
    ensure(check.certified, || format!("C3 □ C3 refuted: {check:?}"))?;
    for p in 2..=4 {
        let g = make_torus(2 * p, 4).unwrap();
        let fam = robber_family_c2pc4(p).unwrap();
        let check = verify_hideout_family(&Board::new(&g).unwrap(), 2, &fam).unwrap();
        ensure(check.certified, || format!("C{} □ C4 refuted: {check:?}", 2 * p))?;
    }
    // the solver agrees that two cops lose where it can afford to look
    for (m, n) in [(3, 3), (4, 4), (6, 4)] {
        let r = cop_wins(&make_torus(m, n).unwrap(), 2, SolveBudget::default()).unwrap();
        ensure(r.outcome == Outcome::RobberWins, || format!("solver on C{m} □ C{n}, k=2: {:?}", r.outcome))?;
    }
    Ok("C3 □ C3 and C2p □ C4 (p = 2, 3, 4) certified; solver confirms at k=2 on three".into())
}

fn criterion_4() -> Check {
    for n in 3..=9 {
        let got = psi(&all_pairs_distances(&make_cycle(n).unwrap()).unwrap(), SubsetBudget::default())
            .unwrap()
            .value;
        let want = if n % 2 == 1 { 2 } else { 3 };
        ensure(got == Some(want), || format!("ψ(C{n}) = {got:?}, want {want}"))?;
    }
    Ok("ψ(C_n) for n = 3..9 follows parity".into())
}

fn dim(g: &Graph) -> Option<usize> {
    metric_dimension(&all_pairs_distances(g).unwrap(), SubsetBudget::default()).unwrap().value
}

fn criterion_5() -> Check {
    for m in 2..=5 {
        for n in 2..=5 {
            let got = dim(&make_grid(m, n).unwrap());
            ensure(got == Some(2), || format!("dim(P{m} □ P{n}) = {got:?}"))?;
        }
    }
    for m in 3..=6 {
        for n in 3..=6 {
            let want = if m % 2 == 1 || n % 2 == 1 { 3 } else { 4 };
            let got = dim(&make_torus(m, n).unwrap());
            ensure(got == Some(want), || format!("dim(C{m} □ C{n}) = {got:?}, want {want}"))?;
        }
    }
    for n in 3..=5 {
        let got = dim(&make_complete_bipartite(2, n).unwrap());
        ensure(got == Some(n), || format!("dim(K2,{n}) = {got:?}"))?;
    }
    Ok("16 grids, 16 tori and K2,n (n = 3, 4, 5)".into())
}

fn criterion_6() -> Check {
    let factors: Vec<(String, Graph)> = vec![
        ("P2".into(), make_path(2).unwrap()),
        ("P3".into(), make_path(3).unwrap()),
        ("P4".into(), make_path(4).unwrap()),
        ("C3".into(), make_cycle(3).unwrap()),
        ("C4".into(), make_cycle(4).unwrap()),
        ("C5".into(), make_cycle(5).unwrap()),
        ("K4".into(), make_complete(4).unwrap()),
    ];
    let rows = bounds_table(&factors, 28, BoundsBudget::default()).map_err(|e| e.to_string())?;
    let expected_pairs = factors
        .iter()
        .flat_map(|a| factors.iter().map(move |b| a.1.order() * b.1.order()))
        .filter(|&o| o <= 28)
        .count();
    ensure(rows.len() == expected_pairs, || format!("{} rows for {expected_pairs} pairs", rows.len()))?;
    for r in &rows {
        let b = &r.report;
        ensure(b.lower == BoundStatus::Holds && b.upper == BoundStatus::Holds, || {
            format!("{} □ {}: {b:?}", r.g, r.h)
        })?;
    }
    Ok(format!("{} ordered pairs, both inequalities hold, all values exact", rows.len()))
}

/// Closed-form class of `v_{i,j}` under the first probe on `C_{2p+1} □ C_{2q}`.
fn rectangle(g: &Graph, p: isize, q: isize, i: isize, j: isize) -> VertexSet {
    [(i, j), (2 * p - i, j), (i, 2 * q - 2 - j), (2 * p - i, 2 * q - 2 - j)]
        .into_iter()
        .map(|(a, b)| g.vertex_at(a, b).unwrap())
        .collect()
}

fn criterion_7() -> Check {
    for (p, q) in [(1usize, 2usize), (2, 2), (3, 3)] {
        let g = make_torus(2 * p + 1, 2 * q).unwrap();
        let board = Board::new(&g).unwrap();
        let (pi, qi) = (p as isize, q as isize);
        let b1 = [g.vertex_at(pi, 2 * qi - 1).unwrap(), g.vertex_at(pi, qi - 1).unwrap()];
        let mut predicted: Vec<VertexSet> = (0..g.order())
            .map(|v| {
                let (i, j) = g.coords(v).unwrap();
                rectangle(&g, pi, qi, i as isize, j as isize)
            })
            .filter(|c| c.len() >= 2)
            .collect();
        predicted.sort();
        predicted.dedup();
        let mut computed = safe_sets(&board, &b1).unwrap();
        computed.sort();
        ensure(computed == predicted, || format!("p={p}, q={q}: {computed:?} vs {predicted:?}"))?;
        let r1: VertexSet = (0..=pi)
            .flat_map(|i| (qi - 1..=2 * qi - 1).map(move |j| (i, j)))
            .map(|(i, j)| g.vertex_at(i, j).unwrap())
            .collect();
        ensure(is_cop_house(&board, r1, &b1).unwrap(), || format!("p={p}, q={q}: R1 is not a cop house"))?;
    }
    Ok("safe sets equal the rectangle formula and R1 is a cop house for 3 tori".into())
}

fn criterion_8() -> Check {
    let corpus = mini_corpus(40, 0x5eed);
    let mut compared = 0;
    for (name, g) in &corpus {
        for k in 1..=2 {
            let report = cop_wins(g, k, SolveBudget::default()).map_err(|e| e.to_string())?;
            let oracle = Minimax::new(g, k).optimal_turns();
            let solver = match report.outcome {
                Outcome::CopWins => report.turns,
                Outcome::RobberWins => None,
                Outcome::BudgetExceeded => return Err(format!("{name}, k={k}: budget exceeded")),
            };
            ensure(solver == oracle, || format!("{name}, k={k}: solver {solver:?}, oracle {oracle:?}"))?;
            compared += 1;
        }
    }
    Ok(format!("{} graphs, {compared} (graph, k) outcomes and turn counts agree", corpus.len()))
}

fn criterion_9() -> Check {
    let corpus = mini_corpus(40, 0x9a11);
    for (name, g) in &corpus {
        let d = bfs_distances(g);
        let lib = all_pairs_distances(g).unwrap();
        for (u, row) in d.iter().enumerate() {
            ensure(lib.row(u) == row.as_slice(), || format!("{name}: distances from {u}"))?;
        }
        if g.is_bipartite() {
            for (u, v) in g.edges() {
                for (w, (du, dv)) in d[u].iter().zip(&d[v]).enumerate() {
                    ensure(du.abs_diff(*dv) == 1, || format!("{name}: parity at edge ({u},{v}), {w}"))?;
                }
            }
        }
        let mut won = false;
        for k in 1..=3.min(g.order()) {
            let now = cop_wins(g, k, SolveBudget::default()).unwrap().outcome == Outcome::CopWins;
            ensure(!won || now, || format!("{name}: Cop wins with {} cops but not {k}", k - 1))?;
            won |= now;
        }
        let z = zeta(g, g.order() - 1).ok_or_else(|| format!("{name}: ζ unresolved"))?;
        let dm = dim(g).unwrap();
        ensure(z <= dm, || format!("{name}: ζ = {z} > dim = {dm}"))?;
    }
    for (a, b) in [(0, 5), (3, 8), (7, 12)] {
        let (g, h) = (&corpus[a].1, &corpus[b].1);
        let prod = cartesian_product(g, h).unwrap();
        let (dg, dh, dp) = (bfs_distances(g), bfs_distances(h), bfs_distances(&prod));
        let id = |u: usize, u2: usize| u2 * g.order() + u;
        for (u, u2) in (0..g.order()).flat_map(|u| (0..h.order()).map(move |u2| (u, u2))) {
            for (v, v2) in (0..g.order()).flat_map(|v| (0..h.order()).map(move |v2| (v, v2))) {
                ensure(dp[id(u, u2)][id(v, v2)] == dg[u][v] + dh[u2][v2], || {
                    format!("additivity on {} □ {}", corpus[a].0, corpus[b].0)
                })?;
            }
        }
    }
    Ok(format!("{} graphs: distances, bipartite parity, monotonicity, ζ <= dim; 3 products additive", corpus.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("torus localization numbers", criterion_1),
        ("scripted strategy verification", criterion_2),
        ("hideout certificates", criterion_3),
        ("doubly resolving number of cycles", criterion_4),
        ("metric dimension", criterion_5),
        ("product bound inequalities", criterion_6),
        ("closed-form safe sets", criterion_7),
        ("oracle equivalence", criterion_8),
        ("property sweeps", criterion_9),
    ];
    let mut failed = 0;
    for (idx, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {title}: {detail} [{secs:.2}s]", idx + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {title}: {detail} [{secs:.2}s]", idx + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
