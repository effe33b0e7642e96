//! Checks that H_n and G_n generate the same ideal, that G_n is the reduced
//! basis, and that the solution count is 4^n - 3^n.
//!
//! cargo run --example verify_identities -- 3

use boolgb::construction::{count_standard_monomials, make_g, make_h, predicted_solution_count};
use boolgb::groebner::{is_groebner_basis, is_reduced_basis, reduced_basis};
use boolgb::oracle::{enumerate_solutions, solution_sets_equal};
use boolgb::{Limits, MonomialOrder};

fn main() -> boolgb::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    for order in MonomialOrder::ALL {
        let h = make_h(n, order)?;
        let g = make_g(n, order)?;
        let (gb, _) = reduced_basis(&h, &Limits::default())?;
        println!("[{order}] n = {n}");
        println!(
            "  GB(H_n) == G_n           : {}",
            gb.same_elements(g.polys())
        );
        println!(
            "  G_n is a Groebner basis  : {}",
            is_groebner_basis(g.polys(), order)
        );
        println!(
            "  G_n is reduced           : {}",
            is_reduced_basis(g.polys(), order)
        );
        println!(
            "  Sol(H_n) == Sol(G_n)     : {}",
            solution_sets_equal(&h, &g, 24)?
        );
        println!(
            "  |Sol| = {}, standard monomials = {}, 4^n - 3^n = {}",
            enumerate_solutions(&h, 24)?.len(),
            count_standard_monomials(&gb)?,
            predicted_solution_count(n)
        );
    }
    Ok(())
}
