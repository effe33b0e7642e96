//! Buchberger's algorithm, normal forms, interreduction and basis checks.
//!
//! Everything public here takes [`Polynomial`]s and a runtime
//! [`MonomialOrder`]; the work happens in `engine`, specialised per order.
//!
//! In [`RingMode::Boolean`] the field polynomials `v^2 + v` are implicit: all
//! arithmetic is squarefree, and Buchberger additionally reduces `v * f` for
//! every variable `v` of each new leading monomial. The resulting basis plus
//! the explicit field polynomials is a Groebner basis of the full ring.

mod dump;
mod engine;

use std::fmt;
use std::time::Duration;

use crate::error::{Error, Result};
use crate::polyring::{with_order, Monomial, MonomialOrder, Polynomial, RingMode, MAX_BLOCKS};

pub use dump::BasisDump;
use engine::Terms;

/// Counters from a Buchberger run.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ReductionStats {
    pub pairs_generated: u64,
    pub pairs_skipped_by_criteria: u64,
    pub pairs_reduced: u64,
    pub reductions_to_zero: u64,
    pub basis_size: usize,
    pub wall_time: Duration,
}

impl ReductionStats {
    /// Flat `key=value` lines.
    pub fn to_key_values(&self) -> String {
        format!(
            "pairs_generated={}\npairs_skipped_by_criteria={}\npairs_reduced={}\nreductions_to_zero={}\nbasis_size={}\nwall_time_ms={:.3}\n",
            self.pairs_generated,
            self.pairs_skipped_by_criteria,
            self.pairs_reduced,
            self.reductions_to_zero,
            self.basis_size,
            self.wall_time.as_secs_f64() * 1e3,
        )
    }
}

/// Caps that turn runaway computations into [`Error::ResourceLimit`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of pairs reduced.
    pub max_pairs: u64,
    /// Maximum number of elements in the working basis.
    pub max_basis: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pairs: 1_000_000,
            max_basis: 100_000,
        }
    }
}

/// Nonzero generators of an ideal in the ring with `n` blocks of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    n: usize,
    mode: RingMode,
    order: MonomialOrder,
    polys: Vec<Polynomial>,
}

impl GeneratorSet {
    /// Drops zero polynomials and repeated polynomials (first occurrence wins).
    pub fn new<I>(n: usize, mode: RingMode, order: MonomialOrder, polys: I) -> Result<Self>
    where
        I: IntoIterator<Item = Polynomial>,
    {
        if n > MAX_BLOCKS {
            return Err(Error::TooManyVariables {
                vars: 3 * n,
                cap: 3 * MAX_BLOCKS,
            });
        }
        let mut out: Vec<Polynomial> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for p in polys {
            if p.mode() != mode {
                return Err(Error::ModeMismatch {
                    left: mode,
                    right: p.mode(),
                });
            }
            if p.arity() > 3 * n {
                return Err(Error::ArityMismatch {
                    need: p.arity(),
                    got: 3 * n,
                });
            }
            if !p.is_zero() && seen.insert(p.clone()) {
                out.push(p);
            }
        }
        Ok(GeneratorSet {
            n,
            mode,
            order,
            polys: out,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_vars(&self) -> usize {
        3 * self.n
    }

    pub fn mode(&self) -> RingMode {
        self.mode
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.polys.contains(f)
    }

    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        self.order = order;
        self
    }

    /// Same generators in another ring; moving to the Boolean ring reduces by
    /// the field polynomials and may drop generators that become zero.
    pub fn to_mode(&self, mode: RingMode) -> GeneratorSet {
        GeneratorSet::new(
            self.n,
            mode,
            self.order,
            self.polys.iter().map(|p| p.to_mode(mode)),
        )
        .expect("mode conversion preserves arity")
    }

    /// Appends generators, keeping the set semantics.
    pub fn extended<I: IntoIterator<Item = Polynomial>>(&self, more: I) -> Result<GeneratorSet> {
        GeneratorSet::new(
            self.n,
            self.mode,
            self.order,
            self.polys.iter().cloned().chain(more),
        )
    }
}

/// A Groebner basis, elements sorted ascending by leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    n: usize,
    mode: RingMode,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    /// Wraps polynomials the caller knows to be a Groebner basis. Nothing is
    /// checked; see [`GroebnerBasis::verified`].
    pub fn new_unchecked(
        n: usize,
        mode: RingMode,
        order: MonomialOrder,
        elements: Vec<Polynomial>,
        reduced: bool,
    ) -> Self {
        let mut elements: Vec<Polynomial> = elements.into_iter().filter(|p| !p.is_zero()).collect();
        sort_by_lm(&mut elements, order);
        GroebnerBasis {
            n,
            mode,
            order,
            elements,
            reduced,
        }
    }

    /// Wraps `set` after checking S-pair closure. The `reduced` flag is
    /// recomputed from the elements.
    pub fn verified(set: &GeneratorSet) -> Result<Self> {
        if !is_groebner_basis(set.polys(), set.order()) {
            return Err(Error::NotAGroebnerBasis(
                "some S-polynomial has a nonzero normal form".into(),
            ));
        }
        let reduced = is_reduced_basis(set.polys(), set.order());
        Ok(Self::new_unchecked(
            set.n(),
            set.mode(),
            set.order(),
            set.polys().to_vec(),
            reduced,
        ))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> RingMode {
        self.mode
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Cached flag; [`is_reduced_basis`] recomputes it.
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|p| p.leading_monomial(self.order).expect("nonzero element"))
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(f, &self.elements, self.order)
    }

    pub fn to_generator_set(&self) -> GeneratorSet {
        GeneratorSet::new(self.n, self.mode, self.order, self.elements.iter().cloned())
            .expect("basis elements are valid generators")
    }

    /// Elements as a sorted list of canonical strings, for set comparison.
    pub fn canonical_strings(&self) -> Vec<String> {
        canonical_strings(&self.elements, self.order)
    }

    /// Same-ideal comparison of two reduced bases (or any two polynomial
    /// sets) as sets.
    pub fn same_elements(&self, other: &[Polynomial]) -> bool {
        self.canonical_strings() == canonical_strings(other, self.order)
    }

    /// For a Boolean-mode basis: the reduced full-ring basis of the same ideal
    /// together with all field polynomials.
    pub fn lift_to_full(&self) -> GroebnerBasis {
        if self.mode == RingMode::Full {
            return self.clone();
        }
        let mut elems: Vec<Polynomial> = self
            .elements
            .iter()
            .map(|p| p.to_mode(RingMode::Full))
            .collect();
        elems.extend(crate::construction::field_polynomials(self.n));
        let lifted = GroebnerBasis::new_unchecked(self.n, RingMode::Full, self.order, elems, false);
        interreduce(&lifted)
    }
}

fn sort_by_lm(polys: &mut [Polynomial], order: MonomialOrder) {
    polys.sort_by_cached_key(|p| OrderKey(p.leading_monomial(order).ok(), order));
}

struct OrderKey(Option<Monomial>, MonomialOrder);

impl PartialEq for OrderKey {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other).is_eq()
    }
}
impl Eq for OrderKey {}
impl PartialOrd for OrderKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for OrderKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (&self.0, &other.0) {
            (Some(a), Some(b)) => self.1.cmp(a, b),
            (a, b) => a.is_some().cmp(&b.is_some()),
        }
    }
}

fn canonical_strings(polys: &[Polynomial], order: MonomialOrder) -> Vec<String> {
    let mut v: Vec<String> = polys
        .iter()
        .map(|p| crate::polyring::format_poly(p, order))
        .collect();
    v.sort();
    v
}

fn common_mode(polys: &[Polynomial]) -> Result<RingMode> {
    let mode = polys.first().map_or(RingMode::Full, |p| p.mode());
    match polys.iter().find(|p| p.mode() != mode) {
        Some(p) => Err(Error::ModeMismatch {
            left: mode,
            right: p.mode(),
        }),
        None => Ok(mode),
    }
}

fn to_terms(polys: &[Polynomial], order: MonomialOrder) -> Vec<Terms> {
    polys.iter().map(|p| p.sorted_terms(order)).collect()
}

fn from_terms(t: Terms, mode: RingMode) -> Polynomial {
    Polynomial::from_terms(t, mode)
}

/// `(lcm/lm(f)) f + (lcm/lm(g)) g`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Result<Polynomial> {
    let mode = common_mode(&[f.clone(), g.clone()])?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (tf, tg) = (f.sorted_terms(order), g.sorted_terms(order));
    let s = with_order!(order, O => engine::s_poly::<O>(&tf, &tg, mode));
    Ok(from_terms(s, mode))
}

/// Full reduction of `f` by `basis`: the largest reducible monomial is
/// eliminated first, using the first element (in list order) whose leading
/// monomial divides it. Zero elements of `basis` are ignored.
pub fn normal_form(
    f: &Polynomial,
    basis: &[Polynomial],
    order: MonomialOrder,
) -> Result<Polynomial> {
    if let Some(g) = basis.iter().find(|g| g.mode() != f.mode()) {
        return Err(Error::ModeMismatch {
            left: f.mode(),
            right: g.mode(),
        });
    }
    let mode = f.mode();
    let tf = f.sorted_terms(order);
    let tb = to_terms(basis, order);
    let r = with_order!(order, O => {
        let reducers = engine::Reducers::new(tb.iter().map(|p| p.as_slice()));
        engine::normal_form::<O>(&[&tf], &reducers, mode)
    });
    Ok(from_terms(r, mode))
}

/// Groebner basis of `set` (not yet reduced) plus run statistics.
///
/// Pairs are taken by smallest lcm degree, ties broken by the order on the
/// lcm. Useless pairs are dropped with the product and chain criteria
/// (Gebauer-Moeller). Elements whose leading monomial becomes divisible by a
/// newer one are retired, so the output is already minimal.
pub fn buchberger(set: &GeneratorSet, limits: &Limits) -> Result<(GroebnerBasis, ReductionStats)> {
    let order = set.order();
    let mode = set.mode();
    let input = to_terms(set.polys(), order);
    let (basis, stats) =
        with_order!(order, O => engine::Buchberger::<O>::new(mode, *limits).run(input))?;
    let elems = basis.into_iter().map(|t| from_terms(t, mode)).collect();
    Ok((
        GroebnerBasis::new_unchecked(set.n(), mode, order, elems, false),
        stats,
    ))
}

/// The reduced Groebner basis of the ideal `basis` generates.
pub fn interreduce(basis: &GroebnerBasis) -> GroebnerBasis {
    let order = basis.order();
    let mode = basis.mode();
    let terms = to_terms(basis.elements(), order);
    let red = with_order!(order, O => engine::interreduce::<O>(terms, mode));
    let elems = red.into_iter().map(|t| from_terms(t, mode)).collect();
    GroebnerBasis::new_unchecked(basis.n(), mode, order, elems, true)
}

/// [`interreduce`] that first checks S-pair closure of the input and
/// afterwards the reducedness of the output.
pub fn interreduce_strict(basis: &GroebnerBasis) -> Result<GroebnerBasis> {
    if !is_groebner_basis(basis.elements(), basis.order()) {
        return Err(Error::NotAGroebnerBasis(
            "input fails S-pair closure".into(),
        ));
    }
    let out = interreduce(basis);
    if !is_reduced_basis(out.elements(), out.order()) {
        return Err(Error::NotAGroebnerBasis(
            "interreduced output is not reduced".into(),
        ));
    }
    Ok(out)
}

/// `buchberger` followed by `interreduce`.
pub fn reduced_basis(
    set: &GeneratorSet,
    limits: &Limits,
) -> Result<(GroebnerBasis, ReductionStats)> {
    let (gb, stats) = buchberger(set, limits)?;
    Ok((interreduce(&gb), stats))
}

/// True iff every S-polynomial of `basis` reduces to zero against it.
/// Coprime leading monomials are the only pairs skipped. Boolean-mode input
/// is also checked against the implicit field polynomials.
pub fn is_groebner_basis(basis: &[Polynomial], order: MonomialOrder) -> bool {
    let Ok(mode) = common_mode(basis) else {
        return false;
    };
    let terms = to_terms(basis, order);
    with_order!(order, O => engine::is_groebner::<O>(&terms, mode))
}

/// Pairwise non-divisibility of leading monomials.
pub fn is_minimal_basis(basis: &[Polynomial], order: MonomialOrder) -> bool {
    let lms: Vec<Monomial> = match basis.iter().map(|p| p.leading_monomial(order)).collect() {
        Ok(v) => v,
        Err(_) => return false,
    };
    lms.iter()
        .enumerate()
        .all(|(i, a)| lms.iter().enumerate().all(|(j, b)| i == j || !a.divides(b)))
}

/// Minimal, and no monomial of any element is divisible by the leading
/// monomial of a different element.
pub fn is_reduced_basis(basis: &[Polynomial], order: MonomialOrder) -> bool {
    if !is_minimal_basis(basis, order) {
        return false;
    }
    let lms: Vec<Monomial> = basis
        .iter()
        .map(|p| p.leading_monomial(order).expect("checked above"))
        .collect();
    basis.iter().enumerate().all(|(i, p)| {
        p.terms().iter().all(|m| {
            lms.iter()
                .enumerate()
                .all(|(j, lm)| i == j || !lm.divides(m))
        })
    })
}

/// `f` lies in the ideal of the Groebner basis `basis`.
pub fn ideal_membership(f: &Polynomial, basis: &GroebnerBasis) -> Result<bool> {
    Ok(basis.normal_form(f)?.is_zero())
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.elements {
            writeln!(f, "{}", crate::polyring::format_poly(p, self.order))?;
        }
        Ok(())
    }
}
