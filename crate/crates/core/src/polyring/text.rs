//! Text form of polynomials.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := var ('^' posint)? | int
//! var    := ('x'|'y'|'z') posint
//! ```
//!
//! Whitespace is ignored, `-` means `+`, and integer literals are reduced
//! mod 2. The formatter writes terms in descending order, joined by ` + `.

use std::fmt::Write as _;

use crate::error::{Error, Result};

use super::monomial::{Monomial, VarId, VarKind, MAX_BLOCKS};
use super::{MonomialOrder, Polynomial, RingMode};

/// Parses `text` as a polynomial in the variables of `n` blocks.
pub fn parse_poly(text: &str, n: usize, mode: RingMode) -> Result<Polynomial> {
    if n > MAX_BLOCKS {
        return Err(Error::TooManyVariables {
            vars: 3 * n,
            cap: 3 * MAX_BLOCKS,
        });
    }
    Parser {
        src: text.as_bytes(),
        pos: 0,
        n,
        mode,
    }
    .poly()
}

/// Canonical text: terms descending under `order`, `+` separators, `0` for zero.
pub fn format_poly(f: &Polynomial, order: MonomialOrder) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, m) in f.sorted_terms(order).iter().enumerate() {
        if k > 0 {
            out.push_str(" + ");
        }
        write!(out, "{m}").unwrap();
    }
    out
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
    mode: RingMode,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut terms = Vec::new();
        if matches!(self.peek(), Some(b'+' | b'-')) {
            self.pos += 1;
        }
        loop {
            if let Some(m) = self.term()? {
                terms.push(m);
            }
            match self.peek() {
                Some(b'+' | b'-') => self.pos += 1,
                None => break,
                Some(c) => {
                    return Err(Error::syntax(
                        self.pos,
                        format!("expected '+', '-' or end of input, found '{}'", c as char),
                    ))
                }
            }
        }
        Ok(Polynomial::from_terms(terms, self.mode))
    }

    /// A term, or `None` if its coefficient is even.
    fn term(&mut self) -> Result<Option<Monomial>> {
        let mut mono = Monomial::one();
        let mut odd = true;
        loop {
            let at = self.pos;
            match self.factor()? {
                Factor::Coeff(c) => odd &= c,
                Factor::Power(v, e) => {
                    if mono.exponent(v).checked_add(e).is_none() {
                        return Err(Error::syntax(at, format!("exponent of {v} exceeds 255")));
                    }
                    mono = mono.mul(&Monomial::var_pow(v, e), self.mode);
                }
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(odd.then_some(mono))
    }

    fn factor(&mut self) -> Result<Factor> {
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return Err(Error::syntax(self.pos, "unexpected end of input")),
        };
        let c = self.src[start];
        if c.is_ascii_digit() {
            let digits = self.digits();
            let odd = digits
                .as_bytes()
                .last()
                .is_some_and(|d| (d - b'0') % 2 == 1);
            return Ok(Factor::Coeff(odd));
        }
        let kind = match c {
            b'x' => VarKind::X,
            b'y' => VarKind::Y,
            b'z' => VarKind::Z,
            _ => {
                return Err(Error::syntax(
                    start,
                    format!("expected a variable or integer, found '{}'", c as char),
                ))
            }
        };
        self.pos += 1;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(Error::syntax(self.pos, "variable needs a block index"));
        }
        let name = format!("{}{}", c as char, digits);
        let block: usize = digits.parse().unwrap_or(usize::MAX);
        if block == 0 || block > self.n {
            return Err(Error::UnknownVariable { name, n: self.n });
        }
        let var = VarId::new(block, kind);

        let mut exp = 1u8;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let digits = self.digits();
            exp = match digits.parse::<u8>() {
                Ok(e) if e > 0 => e,
                _ if digits.is_empty() => return Err(Error::syntax(at, "expected exponent")),
                _ => {
                    return Err(Error::syntax(
                        at,
                        format!("exponent {digits} not in 1..=255"),
                    ))
                }
            };
        }
        Ok(Factor::Power(var, exp))
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }
}

enum Factor {
    Coeff(bool),
    Power(VarId, u8),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_l_element() {
        let f = parse_poly("x1*y1 + x1 + y1 - z1", 1, RingMode::Full).unwrap();
        assert_eq!(f.len(), 4);
        assert_eq!(
            format_poly(&f, MonomialOrder::DegLex),
            "x1*y1 + x1 + y1 + z1"
        );
    }

    #[test]
    fn zero_and_constants() {
        assert!(parse_poly("0", 1, RingMode::Full).unwrap().is_zero());
        assert!(parse_poly("2*x1 + 4", 1, RingMode::Full).unwrap().is_zero());
        assert!(parse_poly("1 + 1", 1, RingMode::Full).unwrap().is_zero());
        assert!(parse_poly("3", 1, RingMode::Full).unwrap().is_one());
        assert_eq!(
            format_poly(&Polynomial::zero(RingMode::Full), MonomialOrder::DegLex),
            "0"
        );
    }

    #[test]
    fn product_monomial() {
        let f = parse_poly("z1*z2*z3", 3, RingMode::Full).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.degree(), Some(3));
        assert_eq!(f.to_string(), "z1*z2*z3");
    }

    #[test]
    fn powers_and_whitespace() {
        let f = parse_poly(" - x1 ^ 2*y2+x1 * x1 ", 2, RingMode::Full).unwrap();
        assert_eq!(f.to_string(), "x1^2*y2 + x1^2");
        let b = parse_poly("x1^2*y2 + x1*x1", 2, RingMode::Boolean).unwrap();
        assert_eq!(b.to_string(), "x1*y2 + x1");
    }

    #[test]
    fn errors_carry_positions() {
        match parse_poly("x1 + * y1", 1, RingMode::Full) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_poly("x1 y1", 1, RingMode::Full),
            Err(Error::Syntax { pos: 3, .. })
        ));
        assert!(matches!(
            parse_poly("", 1, RingMode::Full),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_poly("x", 1, RingMode::Full),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_poly("x1^0", 1, RingMode::Full),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_poly("x1^", 1, RingMode::Full),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_poly("w1", 1, RingMode::Full),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn unknown_variables() {
        assert!(matches!(
            parse_poly("x2", 1, RingMode::Full),
            Err(Error::UnknownVariable { .. })
        ));
        assert!(matches!(
            parse_poly("y0", 3, RingMode::Full),
            Err(Error::UnknownVariable { .. })
        ));
    }

    #[test]
    fn format_follows_order() {
        let f = parse_poly("x1*z1 + y1^2", 1, RingMode::Full).unwrap();
        assert_eq!(format_poly(&f, MonomialOrder::DegLex), "x1*z1 + y1^2");
        assert_eq!(format_poly(&f, MonomialOrder::DegRevLex), "y1^2 + x1*z1");
    }
}
