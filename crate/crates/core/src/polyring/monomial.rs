//! Variables and monomials.
//!
//! Variables live in a fixed block-major layout `x1, y1, z1, x2, y2, z2, ...`:
//! block `i` (1-based) owns flat indices `3(i-1)`, `3(i-1)+1`, `3(i-1)+2`.
//! A monomial is a dense exponent array over that layout plus a support mask,
//! so divisibility and evaluation on {0,1} points reduce to bit tests.

use std::fmt;

use crate::error::{Error, Result};

use super::RingMode;

/// Maximum number of variables a monomial can carry (16 blocks).
pub const MAX_VARS: usize = 48;

/// Maximum number of blocks, `MAX_VARS / 3`.
pub const MAX_BLOCKS: usize = MAX_VARS / 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarKind {
    X,
    Y,
    Z,
}

impl VarKind {
    pub const ALL: [VarKind; 3] = [VarKind::X, VarKind::Y, VarKind::Z];

    pub fn index(self) -> usize {
        match self {
            VarKind::X => 0,
            VarKind::Y => 1,
            VarKind::Z => 2,
        }
    }

    pub fn letter(self) -> char {
        match self {
            VarKind::X => 'x',
            VarKind::Y => 'y',
            VarKind::Z => 'z',
        }
    }
}

/// A variable `x_i`, `y_i` or `z_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId {
    block: usize,
    kind: VarKind,
}

impl VarId {
    /// `block` is 1-based. Panics if the block is outside `1..=MAX_BLOCKS`.
    pub fn new(block: usize, kind: VarKind) -> Self {
        assert!(
            (1..=MAX_BLOCKS).contains(&block),
            "block {block} outside 1..={MAX_BLOCKS}"
        );
        VarId { block, kind }
    }

    pub fn x(block: usize) -> Self {
        Self::new(block, VarKind::X)
    }

    pub fn y(block: usize) -> Self {
        Self::new(block, VarKind::Y)
    }

    pub fn z(block: usize) -> Self {
        Self::new(block, VarKind::Z)
    }

    pub fn from_flat(flat: usize) -> Self {
        assert!(flat < MAX_VARS, "flat index {flat} out of range");
        VarId {
            block: flat / 3 + 1,
            kind: VarKind::ALL[flat % 3],
        }
    }

    pub fn flat(self) -> usize {
        3 * (self.block - 1) + self.kind.index()
    }

    pub fn block(self) -> usize {
        self.block
    }

    pub fn kind(self) -> VarKind {
        self.kind
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.block)
    }
}

/// A power product of variables. The coefficient is implicit (always 1 over F2).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    mask: u64,
    deg: u32,
}

impl Default for Monomial {
    fn default() -> Self {
        Self::one()
    }
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial {
            exps: [0; MAX_VARS],
            mask: 0,
            deg: 0,
        }
    }

    pub fn var(v: VarId) -> Self {
        Self::var_pow(v, 1)
    }

    /// `v^e`; `e = 0` gives the unit monomial.
    pub fn var_pow(v: VarId, e: u8) -> Self {
        let mut m = Self::one();
        if e > 0 {
            let i = v.flat();
            m.exps[i] = e;
            m.mask = 1 << i;
            m.deg = e as u32;
        }
        m
    }

    /// Builds a monomial from `(variable, exponent)` pairs; repeated variables multiply.
    pub fn from_powers<I: IntoIterator<Item = (VarId, u8)>>(powers: I) -> Self {
        powers.into_iter().fold(Self::one(), |acc, (v, e)| {
            acc.mul(&Self::var_pow(v, e), RingMode::Full)
        })
    }

    /// Squarefree monomial with the given support mask.
    pub fn from_mask(mask: u64) -> Self {
        assert!(mask >> MAX_VARS == 0, "mask uses bits beyond MAX_VARS");
        let mut m = Self::one();
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            m.exps[i] = 1;
            bits &= bits - 1;
        }
        m.mask = mask;
        m.deg = mask.count_ones();
        m
    }

    pub fn exponent(&self, v: VarId) -> u8 {
        self.exps[v.flat()]
    }

    pub(crate) fn exps(&self) -> &[u8; MAX_VARS] {
        &self.exps
    }

    /// Bit `i` is set iff flat variable `i` occurs.
    pub fn support(&self) -> u64 {
        self.mask
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.mask == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.deg == self.mask.count_ones()
    }

    /// Highest flat index in the support, if any.
    pub fn max_flat(&self) -> Option<usize> {
        (self.mask != 0).then(|| 63 - self.mask.leading_zeros() as usize)
    }

    /// `(variable, exponent)` pairs in flat order.
    pub fn powers(&self) -> impl Iterator<Item = (VarId, u8)> + '_ {
        SupportIter(self.mask).map(move |i| (VarId::from_flat(i), self.exps[i]))
    }

    /// Drops every exponent to 1: the image of the monomial in the Boolean ring.
    pub fn squarefree(&self) -> Self {
        Self::from_mask(self.mask)
    }

    /// Product. In Boolean mode exponents are capped at 1 (`x*x = x`).
    ///
    /// Panics if a full-ring exponent would exceed 255.
    pub fn mul(&self, other: &Monomial, mode: RingMode) -> Monomial {
        match mode {
            RingMode::Boolean => Self::from_mask(self.mask | other.mask),
            RingMode::Full => {
                let mut m = *self;
                for i in SupportIter(other.mask) {
                    m.exps[i] = m.exps[i]
                        .checked_add(other.exps[i])
                        .expect("exponent overflow (max 255)");
                }
                m.mask |= other.mask;
                m.deg += other.deg;
                m
            }
        }
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.mask & !other.mask != 0 || self.deg > other.deg {
            return false;
        }
        SupportIter(self.mask).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `self / divisor`, or `Error::Division` when `divisor` does not divide `self`.
    pub fn div(&self, divisor: &Monomial) -> Result<Monomial> {
        if !divisor.divides(self) {
            return Err(Error::Division {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            });
        }
        Ok(self.div_unchecked(divisor))
    }

    pub(crate) fn div_unchecked(&self, divisor: &Monomial) -> Monomial {
        debug_assert!(divisor.divides(self));
        let mut m = *self;
        for i in SupportIter(divisor.mask) {
            m.exps[i] -= divisor.exps[i];
            if m.exps[i] == 0 {
                m.mask &= !(1 << i);
            }
        }
        m.deg -= divisor.deg;
        m
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in SupportIter(other.mask) {
            m.exps[i] = m.exps[i].max(other.exps[i]);
        }
        m.mask |= other.mask;
        m.deg = SupportIter(m.mask).map(|i| m.exps[i] as u32).sum();
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.mask & other.mask == 0
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.powers().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({self})")
    }
}

/// Iterates set bits of a mask, lowest first.
pub(crate) struct SupportIter(pub(crate) u64);

impl Iterator for SupportIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}
