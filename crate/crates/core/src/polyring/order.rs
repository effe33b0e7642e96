//! Degree-compatible monomial orders.
//!
//! Both orders compare total degree first. Ties are broken on the flat
//! variable priority `x1 > y1 > z1 > x2 > ...`:
//!
//! * `DegLex`: the first variable where the exponents differ decides; the
//!   larger exponent wins. `x1*z1 > y1^2` because `x1` appears only on the left.
//! * `DegRevLex`: the *last* variable where the exponents differ decides; the
//!   smaller exponent wins. `y1^2 > x1*z1` because the last differing variable
//!   is `z1` and the left side has less of it.

use std::cmp::Ordering;
use std::fmt;
use std::marker::PhantomData;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::monomial::{Monomial, MAX_VARS};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    DegLex,
    DegRevLex,
}

impl MonomialOrder {
    pub const ALL: [MonomialOrder; 2] = [MonomialOrder::DegLex, MonomialOrder::DegRevLex];

    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegLex => DegLex::compare(a, b),
            MonomialOrder::DegRevLex => DegRevLex::compare(a, b),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::DegLex => "deglex",
            MonomialOrder::DegRevLex => "degrevlex",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "deglex" | "grlex" => Ok(MonomialOrder::DegLex),
            "degrevlex" | "grevlex" | "tdeg" => Ok(MonomialOrder::DegRevLex),
            other => Err(format!("unknown monomial order `{other}`")),
        }
    }
}

/// Static form of a [`MonomialOrder`], used to monomorphize the hot loops.
pub(crate) trait TermOrder: Copy + Default + Send + Sync + 'static {
    fn compare(a: &Monomial, b: &Monomial) -> Ordering;
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct DegLex;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct DegRevLex;

impl TermOrder for DegLex {
    #[inline]
    fn compare(a: &Monomial, b: &Monomial) -> Ordering {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.exps().cmp(b.exps()))
    }
}

impl TermOrder for DegRevLex {
    #[inline]
    fn compare(a: &Monomial, b: &Monomial) -> Ordering {
        a.degree().cmp(&b.degree()).then_with(|| {
            let top = 64 - (a.support() | b.support()).leading_zeros() as usize;
            let (ea, eb) = (a.exps(), b.exps());
            for i in (0..top.min(MAX_VARS)).rev() {
                if ea[i] != eb[i] {
                    return eb[i].cmp(&ea[i]);
                }
            }
            Ordering::Equal
        })
    }
}

/// A monomial ordered by `O`, for use in heaps and ordered sets.
#[derive(Clone, Copy)]
pub(crate) struct Keyed<O: TermOrder>(pub Monomial, PhantomData<O>);

impl<O: TermOrder> Keyed<O> {
    #[inline]
    pub fn new(m: Monomial) -> Self {
        Keyed(m, PhantomData)
    }
}

impl<O: TermOrder> PartialEq for Keyed<O> {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl<O: TermOrder> Eq for Keyed<O> {}

impl<O: TermOrder> PartialOrd for Keyed<O> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<O: TermOrder> Ord for Keyed<O> {
    fn cmp(&self, other: &Self) -> Ordering {
        O::compare(&self.0, &other.0)
    }
}

/// Runs `$body` with `$O` bound to the static order type matching `$order`.
macro_rules! with_order {
    ($order:expr, $O:ident => $body:expr) => {
        match $order {
            $crate::polyring::MonomialOrder::DegLex => {
                type $O = $crate::polyring::order::DegLex;
                $body
            }
            $crate::polyring::MonomialOrder::DegRevLex => {
                type $O = $crate::polyring::order::DegRevLex;
                $body
            }
        }
    };
}
pub(crate) use with_order;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::VarId;

    fn m(powers: &[(VarId, u8)]) -> Monomial {
        Monomial::from_powers(powers.iter().copied())
    }

    #[test]
    fn degree_first() {
        let x1y1 = m(&[(VarId::x(1), 1), (VarId::y(1), 1)]);
        let z1 = m(&[(VarId::z(1), 1)]);
        for o in MonomialOrder::ALL {
            assert_eq!(o.cmp(&x1y1, &z1), Ordering::Greater);
            assert_eq!(o.cmp(&z1, &x1y1), Ordering::Less);
        }
    }

    #[test]
    fn variable_priority() {
        let x1 = Monomial::var(VarId::x(1));
        let y1 = Monomial::var(VarId::y(1));
        let x2 = Monomial::var(VarId::x(2));
        for o in MonomialOrder::ALL {
            assert_eq!(o.cmp(&x1, &y1), Ordering::Greater);
            assert_eq!(o.cmp(&y1, &x2), Ordering::Greater);
        }
    }

    #[test]
    fn equal_is_equal() {
        let a = m(&[(VarId::x(1), 2), (VarId::z(3), 1)]);
        for o in MonomialOrder::ALL {
            assert_eq!(o.cmp(&a, &a), Ordering::Equal);
        }
    }

    #[test]
    fn deglex_and_degrevlex_differ() {
        // x1*z1 vs y1^2
        let xz = m(&[(VarId::x(1), 1), (VarId::z(1), 1)]);
        let yy = m(&[(VarId::y(1), 2)]);
        assert_eq!(MonomialOrder::DegLex.cmp(&xz, &yy), Ordering::Greater);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&xz, &yy), Ordering::Less);

        // x1*y2 vs y1*x2: lex says x1 wins; revlex looks at y2 (last) and the
        // side without it is larger
        let a = m(&[(VarId::x(1), 1), (VarId::y(2), 1)]);
        let b = m(&[(VarId::y(1), 1), (VarId::x(2), 1)]);
        assert_eq!(MonomialOrder::DegLex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&a, &b), Ordering::Less);
    }

    #[test]
    fn one_is_minimal() {
        let one = Monomial::one();
        let z = Monomial::var(VarId::z(5));
        for o in MonomialOrder::ALL {
            assert_eq!(o.cmp(&one, &z), Ordering::Less);
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!("deglex".parse::<MonomialOrder>(), Ok(MonomialOrder::DegLex));
        assert_eq!(
            "DegRevLex".parse::<MonomialOrder>(),
            Ok(MonomialOrder::DegRevLex)
        );
        assert!("lex".parse::<MonomialOrder>().is_err());
    }
}
