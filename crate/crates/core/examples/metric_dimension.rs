//! Metric dimension and doubly resolving number of named families.
//!
//! `cargo run --release --example metric_dimension`

use locgame::graph::{all_pairs_distances, make_complete_bipartite, make_cycle, make_grid, make_path, make_torus, Graph};
use locgame::resolving::{metric_dimension, psi, SubsetBudget};

fn main() -> locgame::error::Result<()> {
    let graphs: Vec<(String, Graph)> = vec![
        ("P5".into(), make_path(5)?),
        ("C6".into(), make_cycle(6)?),
        ("C7".into(), make_cycle(7)?),
        ("K2,4".into(), make_complete_bipartite(2, 4)?),
        ("P3 □ P4".into(), make_grid(3, 4)?),
        ("C4 □ C5".into(), make_torus(4, 5)?),
        ("C4 □ C6".into(), make_torus(4, 6)?),
    ];
    println!("{:<10} {:>4} {:>4}  resolving set", "graph", "dim", "psi");
    for (name, g) in &graphs {
        let dm = all_pairs_distances(g)?;
        let dim = metric_dimension(&dm, SubsetBudget::default())?;
        let ps = psi(&dm, SubsetBudget::default())?;
        println!(
            "{name:<10} {:>4} {:>4}  {:?}",
            dim.value.unwrap(),
            ps.value.unwrap(),
            dim.witness.unwrap()
        );
    }
    Ok(())
}
