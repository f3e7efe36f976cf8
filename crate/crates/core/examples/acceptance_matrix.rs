//! The built-in torus battery, each entry settled by exact solving or by a
//! hideout certificate plus a verified strategy.
//!
//! `cargo run --release --example acceptance_matrix`

use locgame::verifier::{acceptance_matrix, Battery, MatrixConfig, RowStatus};

fn main() -> locgame::error::Result<()> {
    let rows = acceptance_matrix(&Battery::builtin(), &MatrixConfig::default())?;
    for r in &rows {
        let upper = r.upper.as_ref().expect("battery entries close");
        println!(
            "C{} □ C{}: expected {}, lower {} ({}), upper {} ({}) -> {:?}",
            r.m, r.n, r.expected, r.lower.value, r.lower.method, upper.value, upper.method, r.status
        );
    }
    let ok = rows.iter().all(|r| r.status == RowStatus::Match);
    println!("\nall {} rows match: {ok}", rows.len());
    Ok(())
}
