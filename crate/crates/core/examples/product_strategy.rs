//! Imagination strategy on a product: an optimal strategy on G is lifted to
//! G □ H using a doubly resolving set of H.
//!
//! `cargo run --release --example product_strategy`

use locgame::game::{Board, Solver};
use locgame::graph::{all_pairs_distances, cartesian_product, make_cycle};
use locgame::resolving::{psi, SubsetBudget};
use locgame::strategies::{product_strategy, CopStrategy, TableStrategy};
use locgame::verifier::{verify_cop_strategy, DEFAULT_MAX_TURNS};

fn main() -> locgame::error::Result<()> {
    let g = make_cycle(7)?;
    let h = make_cycle(5)?;
    let inner = TableStrategy::new(Solver::new(&Board::new(&g)?, 1).solve()?)?;
    let t = psi(&all_pairs_distances(&h)?, SubsetBudget::default())?.witness.unwrap();
    let strategy = product_strategy(inner, &g, &h, &t)?;
    println!("doubly resolving set of C5: {t:?}");
    println!("inner probe [3] lifts to {:?}", strategy.lift(&[3]));

    let product = cartesian_product(&g, &h)?;
    let report = verify_cop_strategy(&Board::new(&product)?, &strategy, DEFAULT_MAX_TURNS)?;
    println!(
        "{} on C7 □ C5 with {} cops: won = {}, {} probes",
        strategy.name(),
        strategy.cop_count(),
        report.won,
        report.max_turns
    );
    Ok(())
}
