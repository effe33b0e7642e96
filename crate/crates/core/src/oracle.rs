//! Brute-force semantics over `F2^{3n}`.
//!
//! A point is a `3n`-bit integer whose bit `i` is the value of flat variable
//! `i`. On such points `v^k = v`, so a monomial is 1 exactly when its support
//! is a subset of the point, and a polynomial is the parity of its true
//! monomials. None of this touches the Groebner machinery, which makes it a
//! ground truth for membership and for solution counts.
//!
//! Solution sets over `F2^{3n}` coincide with solution sets over the
//! algebraic closure only for ideals containing every `v^2 + v`; the
//! membership check refuses generator sets that lack them.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::groebner::GeneratorSet;
use crate::polyring::{Monomial, Polynomial, RingMode, VarId};

/// An assignment of 0/1 to each of `3n` variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    bits: u64,
    n: usize,
}

impl Point {
    pub fn new(bits: u64, n: usize) -> Self {
        assert!(3 * n <= 63, "too many variables for a point");
        assert!(bits >> (3 * n) == 0, "point has bits beyond 3n");
        Point { bits, n }
    }

    /// From `(variable, value)` pairs; unnamed variables are 0.
    pub fn from_assignment<I: IntoIterator<Item = (VarId, bool)>>(n: usize, values: I) -> Self {
        let bits = values
            .into_iter()
            .filter(|&(_, b)| b)
            .fold(0u64, |acc, (v, _)| acc | 1 << v.flat());
        Point::new(bits, n)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_vars(&self) -> usize {
        3 * self.n
    }

    pub fn get(&self, v: VarId) -> bool {
        self.bits >> v.flat() & 1 == 1
    }
}

/// The zero set of a generator set inside `F2^{3n}`, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    n: usize,
    points: Vec<u64>,
}

impl SolutionSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.n == self.n && self.points.binary_search(&p.bits).is_ok()
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.points
            .iter()
            .map(move |&bits| Point { bits, n: self.n })
    }

    /// `# n=<n> count=<k>` then one zero-padded lowercase hex point per line.
    pub fn to_dump(&self) -> String {
        let width = (3 * self.n).div_ceil(4).max(1);
        let mut out = format!("# n={} count={}\n", self.n, self.points.len());
        for p in &self.points {
            writeln!(out, "{p:0width$x}").unwrap();
        }
        out
    }

    pub fn from_dump(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::format("solution dump", "empty input"))?;
        let field = |key: &str| -> Result<usize> {
            header
                .trim_start_matches('#')
                .split_whitespace()
                .find_map(|t| t.strip_prefix(key))
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| Error::format("solution dump", format!("header lacks `{key}`")))
        };
        let (n, count) = (field("n=")?, field("count=")?);
        let mut points = Vec::with_capacity(count);
        for line in lines.map(str::trim).filter(|l| !l.is_empty()) {
            let p = u64::from_str_radix(line, 16)
                .map_err(|e| Error::format("solution dump", format!("`{line}`: {e}")))?;
            if 3 * n < 64 && p >> (3 * n) != 0 {
                return Err(Error::format(
                    "solution dump",
                    format!("`{line}` exceeds 3n bits"),
                ));
            }
            points.push(p);
        }
        if points.len() != count {
            return Err(Error::format(
                "solution dump",
                format!("header says {count} points, found {}", points.len()),
            ));
        }
        points.sort_unstable();
        points.dedup();
        Ok(SolutionSet { n, points })
    }
}

/// Value of `f` at `p`.
pub fn evaluate(f: &Polynomial, p: &Point) -> Result<bool> {
    if f.arity() > p.num_vars() {
        return Err(Error::ArityMismatch {
            need: f.arity(),
            got: p.num_vars(),
        });
    }
    Ok(eval_masks(&masks(f), p.bits))
}

fn masks(f: &Polynomial) -> Vec<u64> {
    f.terms().iter().map(Monomial::support).collect()
}

#[inline]
fn eval_masks(masks: &[u64], point: u64) -> bool {
    masks.iter().filter(|&&m| m & !point == 0).count() % 2 == 1
}

/// All points of `F2^{3n}` where every generator vanishes.
pub fn enumerate_solutions(set: &GeneratorSet, max_vars: usize) -> Result<SolutionSet> {
    let nvars = set.num_vars();
    if nvars > max_vars.min(40) {
        return Err(Error::TooManyVariables {
            vars: nvars,
            cap: max_vars.min(40),
        });
    }
    let mut gens: Vec<(u64, Vec<u64>)> = set
        .polys()
        .iter()
        .map(|p| (p.support(), masks(p)))
        .collect();
    // cheap generators first, so most points are rejected early
    gens.sort_by_key(|(s, m)| (s.count_ones(), m.len()));
    let points = (0..1u64 << nvars)
        .filter(|&pt| gens.iter().all(|(_, m)| !eval_masks(m, pt)))
        .collect();
    Ok(SolutionSet { n: set.n(), points })
}

/// Equality of the two zero sets in `F2^{3n}`.
pub fn solution_sets_equal(a: &GeneratorSet, b: &GeneratorSet, max_vars: usize) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::ArityMismatch {
            need: 3 * a.n(),
            got: 3 * b.n(),
        });
    }
    Ok(enumerate_solutions(a, max_vars)? == enumerate_solutions(b, max_vars)?)
}

/// True iff the generators include `v^2 + v` for every variable (always the
/// case in Boolean mode, where they are implicit).
pub fn has_field_polynomials(set: &GeneratorSet) -> std::result::Result<(), VarId> {
    if set.mode() == RingMode::Boolean {
        return Ok(());
    }
    for i in 0..set.num_vars() {
        let v = VarId::from_flat(i);
        let fp =
            Polynomial::from_terms([Monomial::var_pow(v, 2), Monomial::var(v)], RingMode::Full);
        if !set.contains(&fp) {
            return Err(v);
        }
    }
    Ok(())
}

/// Membership of `f` in the ideal of `set`, decided by evaluation: `f` must
/// vanish on every solution. Sound only when the field polynomials are
/// present, which is checked.
pub fn membership_by_evaluation(
    f: &Polynomial,
    set: &GeneratorSet,
    max_vars: usize,
) -> Result<bool> {
    has_field_polynomials(set).map_err(|v| Error::FieldPolysMissing(v.to_string()))?;
    if f.arity() > set.num_vars() {
        return Err(Error::ArityMismatch {
            need: f.arity(),
            got: set.num_vars(),
        });
    }
    let sols = enumerate_solutions(set, max_vars)?;
    let m = masks(f);
    Ok(sols.points.iter().all(|&p| !eval_masks(&m, p)))
}
