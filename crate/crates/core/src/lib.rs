//! Groebner bases over F2 and over the Boolean ring `F2[vars]/(v^2 + v)`.
//!
//! The crate has four layers:
//!
//! * [`polyring`]: monomials, polynomials, deglex/degrevlex, text form;
//! * [`groebner`]: Buchberger with product/chain criteria, normal forms,
//!   interreduction and basis checks;
//! * [`construction`]: the `S, L, T, P, H, G` families over blocks of
//!   variables `x_i, y_i, z_i`, plus size metrics;
//! * [`oracle`]: exhaustive evaluation over `F2^{3n}`, independent of the
//!   algebra above.
//!
//! [`cli`] wires them into the `boolgb` command.
//!
//! ```
//! use boolgb::construction::make_h;
//! use boolgb::groebner::{reduced_basis, Limits};
//! use boolgb::MonomialOrder;
//!
//! let h = make_h(3, MonomialOrder::DegLex).unwrap();
//! assert_eq!(h.len(), 13);
//! let (gb, _stats) = reduced_basis(&h, &Limits::default()).unwrap();
//! assert_eq!(gb.len(), 6 * 3 + 27);
//! ```

pub mod caps;
pub mod cli;
pub mod construction;
pub mod error;
pub mod groebner;
pub mod oracle;
pub mod polyring;

pub use caps::Caps;
pub use error::{Error, Result};
pub use groebner::{GeneratorSet, GroebnerBasis, Limits, ReductionStats};
pub use polyring::{format_poly, parse_poly, Monomial, MonomialOrder, Polynomial, RingMode, VarId};
