//! JSON dump of a basis.
//!
//! ```json
//! { "n": 2, "mode": "full", "order": "deglex",
//!   "elements": [ [ [[0, 2]], [[0, 1]] ], ... ] }
//! ```
//!
//! Each polynomial is a list of monomials (descending), each monomial a list
//! of `[flat variable index, exponent]` pairs; `[]` is the constant 1.
//! Polynomials are listed ascending by leading monomial.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, RingMode, VarId, MAX_BLOCKS};

use super::{is_reduced_basis, GroebnerBasis};

type DumpMonomial = Vec<(usize, u8)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisDump {
    pub n: usize,
    pub mode: RingMode,
    pub order: MonomialOrder,
    pub elements: Vec<Vec<DumpMonomial>>,
}

impl BasisDump {
    pub fn from_basis(basis: &GroebnerBasis) -> Self {
        let elements = basis
            .elements()
            .iter()
            .map(|p| {
                p.sorted_terms(basis.order())
                    .iter()
                    .map(|m| m.powers().map(|(v, e)| (v.flat(), e)).collect())
                    .collect()
            })
            .collect();
        BasisDump {
            n: basis.n(),
            mode: basis.mode(),
            order: basis.order(),
            elements,
        }
    }

    /// Rebuilds the basis. The reduced flag is recomputed, not trusted.
    pub fn to_basis(&self) -> Result<GroebnerBasis> {
        if self.n > MAX_BLOCKS {
            return Err(Error::TooManyVariables {
                vars: 3 * self.n,
                cap: 3 * MAX_BLOCKS,
            });
        }
        let mut polys = Vec::with_capacity(self.elements.len());
        for elem in &self.elements {
            let mut terms = Vec::with_capacity(elem.len());
            for mono in elem {
                let mut m = Monomial::one();
                for &(flat, e) in mono {
                    if flat >= 3 * self.n {
                        return Err(Error::format(
                            "basis dump",
                            format!("variable index {flat} outside 0..{}", 3 * self.n),
                        ));
                    }
                    m = m.mul(
                        &Monomial::var_pow(VarId::from_flat(flat), e),
                        RingMode::Full,
                    );
                }
                terms.push(m);
            }
            polys.push(Polynomial::from_terms(terms, self.mode));
        }
        let reduced = is_reduced_basis(&polys, self.order);
        Ok(GroebnerBasis::new_unchecked(
            self.n, self.mode, self.order, polys, reduced,
        ))
    }

    /// One polynomial per line inside the `elements` array.
    pub fn to_json(&self) -> String {
        let mut out = format!(
            "{{\n  \"n\": {},\n  \"mode\": \"{}\",\n  \"order\": \"{}\",\n  \"elements\": [",
            self.n,
            self.mode.name(),
            self.order.name()
        );
        for (k, e) in self.elements.iter().enumerate() {
            out.push_str(if k == 0 { "\n    " } else { ",\n    " });
            out.push_str(&serde_json::to_string(e).expect("plain data serializes"));
        }
        if !self.elements.is_empty() {
            out.push_str("\n  ");
        }
        out.push_str("]\n}\n");
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::format("basis dump", e.to_string()))
    }
}
