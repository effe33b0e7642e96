//! Order-specialised internals. Polynomials here are plain term vectors sorted
//! descending under the static order `O`, so the leading monomial is `p[0]`.

use std::collections::{BTreeSet, BinaryHeap};
use std::time::Instant;

use crate::error::{Error, Result};
use crate::polyring::{Keyed, Monomial, RingMode, SupportIter, TermOrder};

use super::{Limits, ReductionStats};

pub(crate) type Terms = Vec<Monomial>;

pub(crate) fn sort_terms<O: TermOrder>(mut t: Terms) -> Terms {
    t.sort_unstable_by(|a, b| O::compare(b, a));
    t
}

/// `u * p` with the result sorted under `O`.
///
/// In the full ring the order is multiplicative, so the product of a sorted
/// list stays sorted and duplicate-free. Boolean multiplication can collapse
/// terms, so there we sort and cancel.
pub(crate) fn mul_terms<O: TermOrder>(p: &[Monomial], u: &Monomial, mode: RingMode) -> Terms {
    let prod: Terms = p.iter().map(|t| t.mul(u, mode)).collect();
    match mode {
        RingMode::Full => prod,
        RingMode::Boolean => crate::polyring::cancel_sorted(sort_terms::<O>(prod)),
    }
}

/// The two halves of an S-polynomial before summation: the tails of `f` and
/// `g` scaled up to the lcm of their leading monomials.
pub(crate) fn s_parts<O: TermOrder>(
    f: &[Monomial],
    g: &[Monomial],
    mode: RingMode,
) -> (Terms, Terms) {
    let lcm = f[0].lcm(&g[0]);
    let uf = lcm.div_unchecked(&f[0]);
    let ug = lcm.div_unchecked(&g[0]);
    (
        mul_terms::<O>(&f[1..], &uf, mode),
        mul_terms::<O>(&g[1..], &ug, mode),
    )
}

pub(crate) fn s_poly<O: TermOrder>(f: &[Monomial], g: &[Monomial], mode: RingMode) -> Terms {
    let (a, b) = s_parts::<O>(f, g, mode);
    crate::polyring::sym_diff::<O>(&a, &b)
}

/// Reducers addressed by position: `lms[k]` is the leading monomial of `polys[k]`.
pub(crate) struct Reducers<'a> {
    pub polys: Vec<&'a [Monomial]>,
    pub lms: Vec<Monomial>,
}

impl<'a> Reducers<'a> {
    pub fn new<I: IntoIterator<Item = &'a [Monomial]>>(polys: I) -> Self {
        let polys: Vec<&[Monomial]> = polys.into_iter().filter(|p| !p.is_empty()).collect();
        let lms = polys.iter().map(|p| p[0]).collect();
        Reducers { polys, lms }
    }

    #[inline]
    fn find(&self, t: &Monomial) -> Option<usize> {
        self.lms.iter().position(|lm| lm.divides(t))
    }
}

/// Full reduction of the sum of `inputs` (mod 2) against `reducers`.
///
/// Repeatedly takes the largest remaining monomial; if some leading monomial
/// divides it, the first such reducer in list order is applied, otherwise the
/// monomial moves to the remainder. The remainder comes out sorted descending.
pub(crate) fn normal_form<O: TermOrder>(
    inputs: &[&[Monomial]],
    reducers: &Reducers<'_>,
    mode: RingMode,
) -> Terms {
    let mut heap: BinaryHeap<Keyed<O>> = inputs
        .iter()
        .flat_map(|p| p.iter())
        .map(|&m| Keyed::new(m))
        .collect();
    let mut rem = Vec::new();
    while let Some(top) = heap.pop() {
        let mut odd = true;
        while heap.peek() == Some(&top) {
            heap.pop();
            odd = !odd;
        }
        if !odd {
            continue;
        }
        let t = top.0;
        match reducers.find(&t) {
            Some(k) => {
                let g = reducers.polys[k];
                let u = t.div_unchecked(&g[0]);
                heap.extend(g[1..].iter().map(|s| Keyed::new(s.mul(&u, mode))));
            }
            None => rem.push(t),
        }
    }
    rem
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum PairKind {
    /// Implicit field polynomial `v^2 + v` against element `i`: reduce `v * f_i`.
    Field(usize),
    /// Ordinary S-pair with the element at this index.
    With(usize),
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Pair<O: TermOrder + Ord> {
    deg: u32,
    lcm: Keyed<O>,
    i: usize,
    kind: PairKind,
}

/// Working state of one Buchberger run.
pub(crate) struct Buchberger<O: TermOrder + Ord> {
    mode: RingMode,
    limits: Limits,
    polys: Vec<Terms>,
    active: Vec<usize>,
    queue: BTreeSet<Pair<O>>,
    stats: ReductionStats,
    started: Instant,
}

impl<O: TermOrder + Ord> Buchberger<O> {
    pub fn new(mode: RingMode, limits: Limits) -> Self {
        Buchberger {
            mode,
            limits,
            polys: Vec::new(),
            active: Vec::new(),
            queue: BTreeSet::new(),
            stats: ReductionStats::default(),
            started: Instant::now(),
        }
    }

    /// Runs to completion and returns the (unreduced, minimalised) basis.
    pub fn run(mut self, input: Vec<Terms>) -> Result<(Vec<Terms>, ReductionStats)> {
        let mut input: Vec<Terms> = input.into_iter().filter(|p| !p.is_empty()).collect();
        input.sort_by(|a, b| O::compare(&a[0], &b[0]));
        for f in input {
            let h = self.reduce(&[&f]);
            if !h.is_empty() {
                self.insert(h)?;
            }
        }

        while let Some(pair) = self.queue.pop_first() {
            if self.stats.pairs_reduced >= self.limits.max_pairs {
                self.queue.insert(pair);
                return Err(self.limit_error("pairs", self.limits.max_pairs));
            }
            self.stats.pairs_reduced += 1;
            let h = match pair.kind {
                PairKind::With(j) => {
                    let (a, b) = s_parts::<O>(&self.polys[pair.i], &self.polys[j], self.mode);
                    self.reduce(&[&a, &b])
                }
                PairKind::Field(v) => {
                    let f = &self.polys[pair.i];
                    let prod = mul_terms::<O>(f, &Monomial::from_mask(1 << v), self.mode);
                    self.reduce(&[&prod])
                }
            };
            if h.is_empty() {
                self.stats.reductions_to_zero += 1;
            } else {
                self.insert(h)?;
            }
        }

        self.finish_stats();
        let basis = self.active.iter().map(|&k| self.polys[k].clone()).collect();
        Ok((basis, self.stats))
    }

    fn reduce(&self, inputs: &[&[Monomial]]) -> Terms {
        let reducers = Reducers::new(self.active.iter().map(|&k| self.polys[k].as_slice()));
        normal_form::<O>(inputs, &reducers, self.mode)
    }

    /// Adds a new element and updates the pair queue (Gebauer-Moeller).
    fn insert(&mut self, h: Terms) -> Result<()> {
        let t = self.polys.len();
        let lm_h = h[0];

        // New pairs (g, h): keep one pair per minimal lcm, then drop coprime ones.
        let mut cands: Vec<(usize, Monomial)> = self
            .active
            .iter()
            .map(|&g| (g, self.polys[g][0].lcm(&lm_h)))
            .collect();
        self.stats.pairs_generated += cands.len() as u64;
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g, lcm)) = cands.pop() {
            let coprime = self.polys[g][0].is_coprime(&lm_h);
            let dominated = || {
                cands
                    .iter()
                    .chain(kept.iter())
                    .any(|(_, other)| other.divides(&lcm))
            };
            if coprime || !dominated() {
                kept.push((g, lcm));
            }
        }

        // Chain criterion on old pairs.
        let polys = &self.polys;
        self.queue.retain(|p| match p.kind {
            PairKind::Field(_) => true,
            PairKind::With(j) => {
                let lcm = p.lcm.0;
                !lm_h.divides(&lcm)
                    || polys[p.i][0].lcm(&lm_h) == lcm
                    || polys[j][0].lcm(&lm_h) == lcm
            }
        });

        for (g, lcm) in kept {
            if !self.polys[g][0].is_coprime(&lm_h) {
                self.queue.insert(Pair {
                    deg: lcm.degree(),
                    lcm: Keyed::new(lcm),
                    i: g,
                    kind: PairKind::With(t),
                });
            }
        }

        if self.mode == RingMode::Boolean {
            for v in SupportIter(lm_h.support()) {
                let lcm = lm_h.mul(&Monomial::from_mask(1 << v), RingMode::Full);
                self.stats.pairs_generated += 1;
                self.queue.insert(Pair {
                    deg: lcm.degree(),
                    lcm: Keyed::new(lcm),
                    i: t,
                    kind: PairKind::Field(v),
                });
            }
        }

        let polys = &self.polys;
        self.active.retain(|&g| !lm_h.divides(&polys[g][0]));
        self.active.push(t);
        self.polys.push(h);

        if self.active.len() > self.limits.max_basis {
            return Err(self.limit_error("basis", self.limits.max_basis as u64));
        }
        Ok(())
    }

    fn finish_stats(&mut self) {
        let pending = self.queue.len() as u64;
        self.stats.pairs_skipped_by_criteria =
            self.stats.pairs_generated - self.stats.pairs_reduced - pending;
        self.stats.basis_size = self.active.len();
        self.stats.wall_time = self.started.elapsed();
    }

    fn limit_error(&mut self, what: &'static str, limit: u64) -> Error {
        self.finish_stats();
        Error::ResourceLimit {
            what,
            limit,
            stats: Some(Box::new(self.stats.clone())),
        }
    }
}

/// Turns a Groebner basis into the reduced one: drop elements whose leading
/// monomial is divisible by another's, then fully reduce each survivor
/// against the rest. Output is sorted ascending by leading monomial.
pub(crate) fn interreduce<O: TermOrder>(basis: Vec<Terms>, mode: RingMode) -> Vec<Terms> {
    let mut basis: Vec<Terms> = basis.into_iter().filter(|p| !p.is_empty()).collect();
    basis.sort_by(|a, b| O::compare(&a[0], &b[0]));
    let mut minimal: Vec<Terms> = Vec::with_capacity(basis.len());
    for p in basis {
        if !minimal.iter().any(|q| q[0].divides(&p[0])) {
            minimal.push(p);
        }
    }
    let reduced: Vec<Terms> = (0..minimal.len())
        .map(|k| {
            let reducers = Reducers::new(
                minimal
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .map(|(_, p)| p.as_slice()),
            );
            normal_form::<O>(&[&minimal[k]], &reducers, mode)
        })
        .collect();
    reduced
}

/// True iff every S-pair (and, in Boolean mode, every field pair) of `basis`
/// reduces to zero. Only the product criterion is used to skip pairs.
pub(crate) fn is_groebner<O: TermOrder>(basis: &[Terms], mode: RingMode) -> bool {
    let reducers = Reducers::new(basis.iter().map(|p| p.as_slice()));
    for (i, f) in basis.iter().enumerate() {
        if f.is_empty() {
            continue;
        }
        for g in &basis[i + 1..] {
            if g.is_empty() || f[0].is_coprime(&g[0]) {
                continue;
            }
            let (a, b) = s_parts::<O>(f, g, mode);
            if !normal_form::<O>(&[&a, &b], &reducers, mode).is_empty() {
                return false;
            }
        }
        if mode == RingMode::Boolean {
            for v in SupportIter(f[0].support()) {
                let prod = mul_terms::<O>(f, &Monomial::from_mask(1 << v), mode);
                if !normal_form::<O>(&[&prod], &reducers, mode).is_empty() {
                    return false;
                }
            }
        }
    }
    true
}
