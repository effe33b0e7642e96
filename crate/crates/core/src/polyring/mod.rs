//! Polynomials over F2 in the variables `x_i, y_i, z_i`, in two ring modes.

mod monomial;
pub(crate) mod order;
mod polynomial;
mod text;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub(crate) use monomial::SupportIter;
pub use monomial::{Monomial, VarId, VarKind, MAX_BLOCKS, MAX_VARS};
pub use order::MonomialOrder;
pub(crate) use order::{with_order, Keyed, TermOrder};
pub use polynomial::Polynomial;
pub(crate) use polynomial::{cancel_sorted, sym_diff};
pub use text::{format_poly, parse_poly};

/// Which ring the polynomials live in.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingMode {
    /// `F2[x1, y1, z1, ...]`.
    #[default]
    Full,
    /// The quotient by all `c^2 + c`: every element is idempotent.
    Boolean,
}

impl RingMode {
    pub fn name(self) -> &'static str {
        match self {
            RingMode::Full => "full",
            RingMode::Boolean => "boolean",
        }
    }
}

impl fmt::Display for RingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for RingMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "full" => Ok(RingMode::Full),
            "boolean" | "bool" => Ok(RingMode::Boolean),
            other => Err(format!("unknown ring mode `{other}`")),
        }
    }
}
