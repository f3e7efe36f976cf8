//! Exhaustive verification of the two-cop torus strategies, followed by one
//! narrated game.
//!
//! `cargo run --release --example scripted_strategies`

use locgame::game::Board;
use locgame::graph::make_torus;
use locgame::strategies::{
    strategy_c2p_c6, strategy_c5c3, strategy_c5c5, strategy_even_even, strategy_odd_even, CopStrategy, TorusScript,
};
use locgame::verifier::{play_game, verify_cop_strategy, DEFAULT_MAX_TURNS};

fn main() -> locgame::error::Result<()> {
    let mut scripts: Vec<TorusScript> = vec![strategy_c5c5(), strategy_c5c3()];
    for p in 1..=3 {
        for q in 2..=3 {
            scripts.push(strategy_odd_even(p, q)?);
        }
    }
    scripts.push(strategy_c2p_c6(3)?);
    scripts.push(strategy_c2p_c6(4)?);
    scripts.push(strategy_even_even(4, 4)?);
    scripts.push(strategy_even_even(5, 4)?);

    for s in &scripts {
        let board = Board::new(&make_torus(s.m, s.n)?)?;
        let r = verify_cop_strategy(&board, s, DEFAULT_MAX_TURNS)?;
        println!(
            "C{:<2} □ C{:<2} {:<22} {} in {} probes over {} branches",
            s.m,
            s.n,
            s.name(),
            if r.won { "wins" } else { "FAILS" },
            r.max_turns,
            r.branches_explored
        );
    }

    // The Robber always picks the largest remaining class.
    let s = strategy_odd_even(2, 2)?;
    let t = make_torus(s.m, s.n)?;
    let board = Board::new(&t)?;
    println!("\none game of {} on C5 □ C4:", s.name());
    let coords = |v: &usize| t.coords(*v).unwrap();
    for turn in play_game(&board, &s, DEFAULT_MAX_TURNS, |open| {
        (0..open.len()).max_by_key(|&i| open[i].len()).unwrap()
    })? {
        let probe: Vec<_> = turn.probe.iter().map(coords).collect();
        match turn.chosen {
            Some(i) => {
                let class: Vec<_> = turn.classes[i].iter().map(coords).collect();
                println!("  turn {}: probe {probe:?}, Robber hides in {class:?}", turn.turn);
            }
            None => println!("  turn {}: probe {probe:?} locates the Robber", turn.turn),
        }
    }
    Ok(())
}
