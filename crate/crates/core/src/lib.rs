//! The localization game on graphs.
//!
//! A Cop probes `k` vertices per turn and learns the distance from each to
//! the Robber; the Robber then stays put or moves to a neighbour. The
//! localization number `ζ(G)` is the least `k` for which the Cop can always
//! pin the Robber down. This crate solves the game exactly on graphs of up
//! to 128 vertices, computes metric and doubly resolving dimensions, and
//! verifies hand-written Cop and Robber strategies on tori and products.
//!
//! Modules:
//! - [`graph`]: generators, Cartesian products with grid labels, distances, JSON.
//! - [`resolving`]: resolving and doubly resolving sets, `dim` and `ψ`.
//! - [`game`]: the knowledge-set game, the solver, survival certificates and hideouts.
//! - [`strategies`]: scripted torus strategies, table and product strategies, Robber families.
//! - [`verifier`]: exhaustive strategy checks, product bounds, the torus battery.
//! - [`cli`]: the `locgame` command line.
//!
//! Runnable examples (`cargo run --release --example <name>`):
//! - `torus_zeta`: exact `ζ` of small tori.
//! - `metric_dimension`: `dim` and `ψ` of named families.
//! - `scripted_strategies`: every two-cop torus strategy, verified, plus one narrated game.
//! - `hideout_certificates`: lower bounds from pair families and solver certificates.
//! - `product_bounds`: `max{ζ(G), ζ(H)} <= ζ(G □ H) <= ζ(G) + ψ(H) - 1` over small factors.
//! - `safe_sets`: classes of a two-vertex probe and a region it separates.
//! - `product_strategy`: lifting a strategy on `G` to `G □ H`.
//! - `robber_projection`: the Robber copying a winning strategy inside one row.
//! - `acceptance_matrix`: the built-in torus battery.

pub mod cli;
pub mod error;
pub mod game;
pub mod graph;
pub mod resolving;
pub mod strategies;
pub mod verifier;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph};
pub use vertex_set::VertexSet;
