//! Checks max{ζ(G), ζ(H)} <= ζ(G □ H) <= ζ(G) + ψ(H) - 1 over small factors.
//!
//! `cargo run --release --example product_bounds`

use locgame::graph::{make_complete, make_cycle, make_path, Graph};
use locgame::verifier::{bounds_table, BoundsBudget};

fn main() -> locgame::error::Result<()> {
    let factors: Vec<(String, Graph)> = vec![
        ("P2".into(), make_path(2)?),
        ("P3".into(), make_path(3)?),
        ("P4".into(), make_path(4)?),
        ("C3".into(), make_cycle(3)?),
        ("C4".into(), make_cycle(4)?),
        ("C5".into(), make_cycle(5)?),
        ("K4".into(), make_complete(4)?),
    ];
    let rows = bounds_table(&factors, 20, BoundsBudget::default())?;
    println!("{:<4} {:<4} {:>3} {:>3} {:>3} {:>3} {:>5}  lower  upper", "G", "H", "zG", "zH", "psH", "zGH", "order");
    let show = |v: Option<usize>| v.map_or("?".to_string(), |v| v.to_string());
    for r in &rows {
        let b = &r.report;
        println!(
            "{:<4} {:<4} {:>3} {:>3} {:>3} {:>3} {:>5}  {:<6} {:?}",
            r.g,
            r.h,
            show(b.zeta_g.value()),
            show(b.zeta_h.value()),
            show(b.psi_h.value),
            show(b.zeta_product.value()),
            r.order,
            format!("{:?}", b.lower),
            b.upper
        );
    }
    let all_hold = rows.iter().all(|r| r.report.lower_ok() && r.report.upper_ok());
    println!("\n{} pairs, both bounds hold on all: {all_hold}", rows.len());
    Ok(())
}
