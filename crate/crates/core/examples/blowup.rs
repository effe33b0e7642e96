//! Growth table for the H_n family: 4n + 1 small generators whose reduced
//! Groebner basis has 6n + 3^n elements.
//!
//! cargo run --release --example blowup -- 6

use boolgb::construction::{input_bitsize, make_h, predicted_gb_size};
use boolgb::groebner::reduced_basis;
use boolgb::{Limits, MonomialOrder};

fn main() -> boolgb::Result<()> {
    let n_max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    println!(
        "{:>3} {:>7} {:>9} {:>8} {:>9} {:>10}",
        "n", "|H_n|", "bits", "|GB|", "6n+3^n", "time"
    );
    for n in 1..=n_max {
        let h = make_h(n, MonomialOrder::DegLex)?;
        let (gb, stats) = reduced_basis(&h, &Limits::default())?;
        println!(
            "{n:>3} {:>7} {:>9} {:>8} {:>9} {:>10.2?}",
            h.len(),
            input_bitsize(&h),
            gb.len(),
            predicted_gb_size(n),
            stats.wall_time
        );
    }
    Ok(())
}
