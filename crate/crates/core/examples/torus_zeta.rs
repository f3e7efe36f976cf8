//! Exact localization numbers of small tori by solving the knowledge-set game.
//!
//! `cargo run --release --example torus_zeta`

use locgame::game::{localization_number_with, Board, SolveBudget, Solver};
use locgame::graph::make_torus;

fn main() -> locgame::error::Result<()> {
    for (m, n) in [(3, 3), (4, 3), (5, 3), (4, 4), (5, 4), (5, 5)] {
        let board = Board::new(&make_torus(m, n)?)?;
        let zeta = localization_number_with(&board, 3, SolveBudget::default(), 0)?;
        let value = zeta.value().expect("small tori solve within the default budget");
        let report = Solver::new(&board, value).solve()?.report;
        println!(
            "zeta(C{m} □ C{n}) = {value}   ({} knowledge states, {} probe rounds)",
            report.states_explored,
            report.turns.unwrap_or(0)
        );
    }
    Ok(())
}
