//! Parsing, arithmetic over F2 and the two term orders.
//!
//! cargo run --example polynomials

use boolgb::{format_poly, parse_poly, MonomialOrder, RingMode};

fn main() -> boolgb::Result<()> {
    let f = parse_poly("x1*y1 + x1 + y1 + z1", 1, RingMode::Full)?;
    let g = parse_poly("x1^2 + x1", 1, RingMode::Full)?;

    println!("f       = {f}");
    println!("g       = {g}");
    println!("f + f   = {}", &f + &f);
    println!("f * g   = {}", &f * &g);

    let fb = f.to_mode(RingMode::Boolean);
    println!(
        "boolean f * f = {}  (equals f: {})",
        &fb * &fb,
        &fb * &fb == fb
    );

    let h = parse_poly("x1*z2 + y1^2 + x2*y1 + z1", 2, RingMode::Full)?;
    for order in MonomialOrder::ALL {
        println!(
            "{order:>9}: {}  (leading {})",
            format_poly(&h, order),
            h.leading_monomial(order)?
        );
    }
    Ok(())
}
