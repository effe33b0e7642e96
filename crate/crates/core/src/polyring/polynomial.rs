use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};

use super::monomial::Monomial;
use super::order::{DegLex, TermOrder};
use super::{MonomialOrder, RingMode};

/// A polynomial over F2: a set of monomials, each with coefficient 1.
///
/// Terms are kept sorted descending under deglex with no duplicates, which
/// makes the derived equality and hashing set equality. In Boolean mode every
/// term is squarefree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<Monomial>,
    mode: RingMode,
}

impl Polynomial {
    pub fn zero(mode: RingMode) -> Self {
        Polynomial {
            terms: Vec::new(),
            mode,
        }
    }

    pub fn one(mode: RingMode) -> Self {
        Self::from_monomial(Monomial::one(), mode)
    }

    pub fn from_monomial(m: Monomial, mode: RingMode) -> Self {
        let m = match mode {
            RingMode::Full => m,
            RingMode::Boolean => m.squarefree(),
        };
        Polynomial {
            terms: vec![m],
            mode,
        }
    }

    /// Sums the given monomials mod 2: a monomial listed twice cancels.
    pub fn from_terms<I: IntoIterator<Item = Monomial>>(terms: I, mode: RingMode) -> Self {
        let mut terms: Vec<Monomial> = match mode {
            RingMode::Full => terms.into_iter().collect(),
            RingMode::Boolean => terms.into_iter().map(|m| m.squarefree()).collect(),
        };
        terms.sort_unstable_by(|a, b| DegLex::compare(b, a));
        Polynomial {
            terms: cancel_sorted(terms),
            mode,
        }
    }

    /// Terms already sorted descending under deglex and free of duplicates.
    pub(crate) fn from_canonical(terms: Vec<Monomial>, mode: RingMode) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| DegLex::compare(&w[0], &w[1]).is_gt()));
        Polynomial { terms, mode }
    }

    pub fn mode(&self) -> RingMode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending deglex order.
    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms
            .binary_search_by(|t| DegLex::compare(m, t))
            .is_ok()
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<Monomial> {
        let mut t = self.terms.clone();
        if order != MonomialOrder::DegLex {
            t.sort_unstable_by(|a, b| order.cmp(b, a));
        }
        t
    }

    /// Total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|m| m.degree())
    }

    /// Union of the supports of all terms.
    pub fn support(&self) -> u64 {
        self.terms.iter().fold(0, |acc, m| acc | m.support())
    }

    /// Number of flat variables needed to evaluate this polynomial.
    pub fn arity(&self) -> usize {
        self.terms
            .iter()
            .filter_map(|m| m.max_flat())
            .max()
            .map_or(0, |i| i + 1)
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Result<Monomial> {
        match order {
            MonomialOrder::DegLex => self.terms.first().copied(),
            _ => self.terms.iter().copied().max_by(|a, b| order.cmp(a, b)),
        }
        .ok_or(Error::ZeroPolynomial)
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_mode(other)?;
        Ok(Polynomial::from_canonical(
            sym_diff::<DegLex>(&self.terms, &other.terms),
            self.mode,
        ))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_mode(other)?;
        let mode = self.mode;
        let products = self
            .terms
            .iter()
            .flat_map(|a| other.terms.iter().map(move |b| a.mul(b, mode)));
        Ok(Polynomial::from_terms(products, mode))
    }

    /// `m * self`.
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|t| t.mul(m, self.mode)), self.mode)
    }

    /// Reinterprets the polynomial in another ring mode. Moving into the
    /// Boolean ring reduces modulo the field polynomials; moving out keeps the
    /// (squarefree) terms unchanged.
    pub fn to_mode(&self, mode: RingMode) -> Polynomial {
        match (self.mode, mode) {
            (RingMode::Full, RingMode::Boolean) => {
                Polynomial::from_terms(self.terms.iter().copied(), mode)
            }
            _ => Polynomial {
                terms: self.terms.clone(),
                mode,
            },
        }
    }

    fn check_mode(&self, other: &Polynomial) -> Result<()> {
        if self.mode != other.mode {
            return Err(Error::ModeMismatch {
                left: self.mode,
                right: other.mode,
            });
        }
        Ok(())
    }
}

/// Panics on mode mismatch; use [`Polynomial::try_add`] to get an error instead.
impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial addition")
    }
}

/// Panics on mode mismatch; use [`Polynomial::try_mul`] to get an error instead.
impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format_poly(self, MonomialOrder::DegLex))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{:?}]({self})", self.mode)
    }
}

/// Removes equal neighbours in pairs from a sorted list (addition mod 2).
pub(crate) fn cancel_sorted(sorted: Vec<Monomial>) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::with_capacity(sorted.len());
    for m in sorted {
        if out.last() == Some(&m) {
            out.pop();
        } else {
            out.push(m);
        }
    }
    out
}

/// Symmetric difference of two lists sorted descending under `O`.
pub(crate) fn sym_diff<O: TermOrder>(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match O::compare(&a[i], &b[j]) {
            std::cmp::Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}
