//! Normal forms and ideal membership, cross-checked against brute-force
//! evaluation on the variety.
//!
//! cargo run --example membership

use boolgb::construction::make_h;
use boolgb::groebner::{ideal_membership, reduced_basis};
use boolgb::oracle::membership_by_evaluation;
use boolgb::{parse_poly, Limits, MonomialOrder, RingMode};

fn main() -> boolgb::Result<()> {
    let h = make_h(2, MonomialOrder::DegLex)?;
    let (gb, _) = reduced_basis(&h, &Limits::default())?;

    for text in ["z1*z2", "x1*z1 + x1", "x1", "x1*y1", "x1*x2*y2 + x1*z2 + 1"] {
        let f = parse_poly(text, 2, RingMode::Full)?;
        let nf = gb.normal_form(&f)?;
        let algebra = ideal_membership(&f, &gb)?;
        let oracle = membership_by_evaluation(&f, &h, 24)?;
        println!(
            "{text:>24}  nf = {:<16} member = {algebra:<5} oracle = {oracle}",
            nf.to_string()
        );
        assert_eq!(algebra, oracle);
    }
    Ok(())
}
