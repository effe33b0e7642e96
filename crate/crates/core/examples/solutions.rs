//! Exhaustive solution enumeration over F2^{3n} and the hex dump format.
//!
//! cargo run --example solutions -- 2

use boolgb::construction::make_h;
use boolgb::oracle::{enumerate_solutions, SolutionSet};
use boolgb::{MonomialOrder, VarId};

fn main() -> boolgb::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2);
    let sols = enumerate_solutions(&make_h(n, MonomialOrder::DegLex)?, 24)?;
    println!("|Sol(H_{n})| = {}", sols.len());

    for p in sols.points().take(8) {
        let assignment: Vec<String> = (0..3 * n)
            .map(|i| {
                let v = VarId::from_flat(i);
                format!("{v}={}", p.get(v) as u8)
            })
            .collect();
        println!("  {}", assignment.join(" "));
    }

    let dump = sols.to_dump();
    assert_eq!(SolutionSet::from_dump(&dump)?, sols);
    print!("{}", dump.lines().take(4).collect::<Vec<_>>().join("\n"));
    println!("\n  ...");
    Ok(())
}
