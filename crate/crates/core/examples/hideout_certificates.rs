//! Robber hideouts: pair families that survive every probe of a given size,
//! giving lower bounds without solving the game.
//!
//! `cargo run --release --example hideout_certificates`

use locgame::game::{verify_hideout_family, Board, Solver};
use locgame::graph::{make_cycle, make_torus};
use locgame::strategies::{robber_family_c2pc4, robber_family_c3c3, short_cycle_family};

fn main() -> locgame::error::Result<()> {
    let c3c3 = Board::new(&make_torus(3, 3)?)?;
    let check = verify_hideout_family(&c3c3, 2, &robber_family_c3c3())?;
    println!("C3 □ C3, 2 cops: {} pairs, certified = {}", robber_family_c3c3().len(), check.certified);

    for p in 2..=5 {
        let fam = robber_family_c2pc4(p)?;
        let board = Board::new(&make_torus(2 * p, 4)?)?;
        let check = verify_hideout_family(&board, 2, &fam)?;
        println!("C{} □ C4, 2 cops: {} pairs, certified = {}", 2 * p, fam.len(), check.certified);
    }

    for n in [5, 6, 7] {
        let g = make_cycle(n)?;
        let board = Board::new(&g)?;
        let fam = short_cycle_family(&g);
        let one_cop = fam.as_ref().map(|f| verify_hideout_family(&board, 1, f)).transpose()?;
        println!(
            "C{n}, 1 cop: short-cycle family {}",
            match one_cop {
                Some(c) if c.certified => "certified".to_string(),
                Some(c) => format!("refuted by {:?}", c.counterexample.unwrap()),
                None => "absent (girth > 5)".to_string(),
            }
        );
    }

    // The solver's own survival certificate is another kind of hideout.
    let board = Board::new(&make_torus(3, 3)?)?;
    let cert = Solver::new(&board, 2).solve()?.certificate().expect("the Robber survives two cops");
    cert.validate(&board)?;
    println!("solver certificate on C3 □ C3 with 2 cops: {} knowledge states", cert.states.len());
    Ok(())
}
