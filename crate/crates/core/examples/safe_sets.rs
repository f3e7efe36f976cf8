//! Safe sets of a two-vertex probe on a torus, with their second
//! differences, and a region on which the probe separates everything.
//!
//! `cargo run --release --example safe_sets`

use locgame::game::{is_cop_house, safe_houses, Board};
use locgame::graph::make_torus;
use locgame::vertex_set::VertexSet;

fn main() -> locgame::error::Result<()> {
    let t = make_torus(7, 6)?;
    let board = Board::new(&t)?;
    let probe = [t.vertex_at(3, 5)?, t.vertex_at(3, 2)?];
    println!("C7 □ C6, probe at (3,5) and (3,2):");
    for (dd, class) in safe_houses(&board, &probe)? {
        let coords: Vec<_> = class.iter().map(|v| t.coords(v).unwrap()).collect();
        let vector = board.distance_vector(&probe, class.first().unwrap());
        println!("  {vector:?}  d1-d0 = {dd:>2}  {coords:?}");
    }

    // Columns 0..=2 within rows 2..=5 are told apart by this probe.
    let region: VertexSet = (0..=2)
        .flat_map(|i| (2..=5).map(move |j| (i, j)))
        .map(|(i, j)| t.vertex_at(i, j).unwrap())
        .collect();
    println!("\nregion of {} vertices is a cop house: {}", region.len(), is_cop_house(&board, region, &probe)?);
    Ok(())
}
