//! The Boolean engine works in F2[vars]/(v^2 + v) directly. Lifting its
//! reduced basis back to the full ring and adjoining the field polynomials
//! gives the full engine's answer.
//!
//! cargo run --release --example boolean_engine -- 4

use boolgb::construction::make_h;
use boolgb::groebner::reduced_basis;
use boolgb::{Limits, MonomialOrder, RingMode};

fn main() -> boolgb::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let h = make_h(n, MonomialOrder::DegRevLex)?;

    let (full, full_stats) = reduced_basis(&h, &Limits::default())?;
    let (boolean, bool_stats) = reduced_basis(&h.to_mode(RingMode::Boolean), &Limits::default())?;

    println!(
        "full engine   : {} elements, {} pairs reduced",
        full.len(),
        full_stats.pairs_reduced
    );
    println!(
        "boolean engine: {} elements, {} pairs reduced",
        boolean.len(),
        bool_stats.pairs_reduced
    );
    println!(
        "lifted boolean basis equals full basis: {}",
        boolean.lift_to_full() == full
    );
    Ok(())
}
