//! The Robber copies a winning strategy on G inside one row of G □ H,
//! answering probes through their projection onto G.
//!
//! `cargo run --release --example robber_projection`

use locgame::game::{Board, Solver};
use locgame::graph::{cartesian_product, make_cycle, make_path};
use locgame::strategies::robber_projection_strategy;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> locgame::error::Result<()> {
    let g = make_cycle(5)?;
    let h = make_path(3)?;
    let cert = Solver::new(&Board::new(&g)?, 1).solve()?.certificate().expect("one cop cannot locate on C5");
    let product = cartesian_product(&g, &h)?;
    let mut robber = robber_projection_strategy(cert, &g, &h, 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for turn in 1..=6 {
        let probe = vec![rng.gen_range(0..product.order())];
        let class = robber.respond(&probe)?;
        let coords: Vec<_> = class.iter().map(|v| product.coords(v).unwrap()).collect();
        println!("turn {turn}: probe {:?} -> Robber still among {coords:?}", product.coords(probe[0])?);
    }
    println!("row {} never changed", robber.row());
    Ok(())
}
