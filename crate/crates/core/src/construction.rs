//! The instance families and the size metrics compared across `n`.
//!
//! With `c` ranging over all `3n` variables and `i` over blocks `1..=n`:
//!
//! * `S_n = { c^2 + c }` (field polynomials, `3n` elements)
//! * `L_n = { x_i y_i + x_i + y_i + z_i }` (`n`)
//! * `T_n = { x_i z_i + x_i, y_i z_i + y_i }` (`2n`)
//! * `P_n = { c_1 c_2 ... c_n : c_i in {x_i, y_i, z_i} }` (`3^n`)
//! * `H_n = S_n + L_n + { z_1 ... z_n }` (`4n + 1`)
//! * `G_n = S_n + L_n + T_n + P_n` (`6n + 3^n`)
//!
//! `H_n` and `G_n` generate the same ideal, and for `n > 1` `G_n` is its
//! reduced basis under every degree-compatible order.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::groebner::{reduced_basis, GeneratorSet, GroebnerBasis};
use crate::oracle;
use crate::polyring::{
    format_poly, parse_poly, Monomial, MonomialOrder, Polynomial, RingMode, VarId, VarKind,
    MAX_BLOCKS,
};

/// One of the named generator families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    S,
    L,
    T,
    P,
    H,
    G,
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "S" | "s" => Ok(Family::S),
            "L" | "l" => Ok(Family::L),
            "T" | "t" => Ok(Family::T),
            "P" | "p" => Ok(Family::P),
            "H" | "h" => Ok(Family::H),
            "G" | "g" => Ok(Family::G),
            other => Err(format!(
                "unknown family `{other}` (expected S, L, T, P, H or G)"
            )),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::S => "S",
            Family::L => "L",
            Family::T => "T",
            Family::P => "P",
            Family::H => "H",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceParams {
    pub n: usize,
    pub mode: RingMode,
    pub order: MonomialOrder,
}

impl InstanceParams {
    pub fn new(n: usize) -> Self {
        InstanceParams {
            n,
            mode: RingMode::Full,
            order: MonomialOrder::DegLex,
        }
    }

    pub fn with_mode(mut self, mode: RingMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        self.order = order;
        self
    }
}

fn var(block: usize, kind: VarKind) -> Monomial {
    Monomial::var(VarId::new(block, kind))
}

fn poly(terms: impl IntoIterator<Item = Monomial>) -> Polynomial {
    Polynomial::from_terms(terms, RingMode::Full)
}

fn check_n(n: usize, max_n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::format("instance", "n must be at least 1"));
    }
    if n > max_n.min(MAX_BLOCKS) {
        return Err(Error::ResourceLimit {
            what: "n",
            limit: max_n.min(MAX_BLOCKS) as u64,
            stats: None,
        });
    }
    Ok(())
}

/// `c^2 + c` for all `3n` variables, in flat order.
pub fn make_s(n: usize) -> Vec<Polynomial> {
    (0..3 * n)
        .map(|i| {
            let v = VarId::from_flat(i);
            poly([Monomial::var_pow(v, 2), Monomial::var(v)])
        })
        .collect()
}

/// Alias of [`make_s`].
pub fn field_polynomials(n: usize) -> Vec<Polynomial> {
    make_s(n)
}

pub fn make_l(n: usize) -> Vec<Polynomial> {
    (1..=n)
        .map(|i| {
            let (x, y, z) = (var(i, VarKind::X), var(i, VarKind::Y), var(i, VarKind::Z));
            poly([x.mul(&y, RingMode::Full), x, y, z])
        })
        .collect()
}

/// All `x_i z_i + x_i` first, then all `y_i z_i + y_i`.
pub fn make_t(n: usize) -> Vec<Polynomial> {
    let half = |kind| {
        (1..=n).map(move |i| {
            let c = var(i, kind);
            poly([c.mul(&var(i, VarKind::Z), RingMode::Full), c])
        })
    };
    half(VarKind::X).chain(half(VarKind::Y)).collect()
}

/// The `3^n` products `c_1 ... c_n`, block 1 most significant, `x < y < z`.
pub fn make_p(n: usize) -> Result<Vec<Polynomial>> {
    make_p_capped(n, Caps::default().max_n)
}

pub fn make_p_capped(n: usize, max_n: usize) -> Result<Vec<Polynomial>> {
    check_n(n, max_n)?;
    let count = 3usize.pow(n as u32);
    Ok((0..count)
        .map(|mut code| {
            let mut mask = 0u64;
            for block in (1..=n).rev() {
                mask |= 1 << (3 * (block - 1) + code % 3);
                code /= 3;
            }
            poly([Monomial::from_mask(mask)])
        })
        .collect())
}

/// `z_1 z_2 ... z_n`.
pub fn z_product(n: usize) -> Polynomial {
    let mask = (1..=n).fold(0u64, |m, i| m | 1 << VarId::z(i).flat());
    poly([Monomial::from_mask(mask)])
}

pub fn make_h(n: usize, order: MonomialOrder) -> Result<GeneratorSet> {
    build_family(
        Family::H,
        InstanceParams::new(n).with_order(order),
        &Caps::default(),
    )
}

pub fn make_g(n: usize, order: MonomialOrder) -> Result<GeneratorSet> {
    build_family(
        Family::G,
        InstanceParams::new(n).with_order(order),
        &Caps::default(),
    )
}

/// Builds a family as a generator set. The family is always constructed in
/// the full ring; a Boolean `params.mode` then maps it into the Boolean ring,
/// where `S_n` vanishes.
pub fn build_family(family: Family, params: InstanceParams, caps: &Caps) -> Result<GeneratorSet> {
    let n = params.n;
    check_n(n, caps.max_n)?;
    let polys: Vec<Polynomial> = match family {
        Family::S => make_s(n),
        Family::L => make_l(n),
        Family::T => make_t(n),
        Family::P => make_p_capped(n, caps.max_n)?,
        Family::H => {
            let mut v = make_s(n);
            v.extend(make_l(n));
            v.push(z_product(n));
            v
        }
        Family::G => {
            let mut v = make_s(n);
            v.extend(make_l(n));
            v.extend(make_t(n));
            v.extend(make_p_capped(n, caps.max_n)?);
            v
        }
    };
    let set = GeneratorSet::new(n, RingMode::Full, params.order, polys)?;
    Ok(match params.mode {
        RingMode::Full => set,
        RingMode::Boolean => set.to_mode(RingMode::Boolean),
    })
}

/// `8 *` the byte length of the canonical text of `set`: one polynomial per
/// line, terms descending, `+` separators, each line newline-terminated.
pub fn input_bitsize(set: &GeneratorSet) -> u64 {
    set.polys()
        .iter()
        .map(|p| 8 * (format_poly(p, set.order()).len() as u64 + 1))
        .sum()
}

/// Largest total degree of any term; 0 for an empty set.
pub fn max_degree(set: &GeneratorSet) -> u32 {
    set.polys()
        .iter()
        .filter_map(|p| p.degree())
        .max()
        .unwrap_or(0)
}

/// `|H_n| = 4n + 1`.
pub fn predicted_input_count(n: usize) -> u128 {
    4 * n as u128 + 1
}

/// `6n + 3^n`.
pub fn predicted_gb_size(n: usize) -> u128 {
    6 * n as u128 + 3u128.pow(n as u32)
}

/// `4^n - 3^n`.
pub fn predicted_solution_count(n: usize) -> u128 {
    4u128.pow(n as u32) - 3u128.pow(n as u32)
}

/// Number of monomials divisible by no leading monomial of `basis`.
///
/// Each variable needs a pure-power leading monomial `v^k` bounding its
/// exponent below `k`; in Boolean mode `v^2` is implicit. The search walks exponent vectors variable by
/// variable and prunes as soon as a prefix is already divisible.
pub fn count_standard_monomials(basis: &GroebnerBasis) -> Result<u64> {
    let nvars = 3 * basis.n();
    let lms = basis.leading_monomials();
    let mut bounds = vec![None::<u8>; nvars];
    if basis.mode() == RingMode::Boolean {
        bounds.iter_mut().for_each(|b| *b = Some(2));
    }
    for lm in &lms {
        let s = lm.support();
        if s.count_ones() == 1 {
            let i = s.trailing_zeros() as usize;
            let k = lm.degree() as u8;
            if i < nvars {
                bounds[i] = Some(bounds[i].map_or(k, |b| b.min(k)));
            }
        } else if s == 0 {
            // the unit ideal: no standard monomials at all
            return Ok(0);
        }
    }
    let bounds: Vec<u8> = bounds
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| Error::NotZeroDimensional(VarId::from_flat(i).to_string())))
        .collect::<Result<_>>()?;

    fn walk(var: usize, m: Monomial, bounds: &[u8], lms: &[Monomial]) -> u64 {
        if lms.iter().any(|lm| lm.divides(&m)) {
            return 0;
        }
        if var == bounds.len() {
            return 1;
        }
        let v = VarId::from_flat(var);
        (0..bounds[var])
            .map(|e| {
                walk(
                    var + 1,
                    m.mul(&Monomial::var_pow(v, e), RingMode::Full),
                    bounds,
                    lms,
                )
            })
            .sum()
    }
    Ok(walk(0, Monomial::one(), &bounds, &lms))
}

/// One row of the growth table.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthRecord {
    pub n: usize,
    pub input_count: usize,
    pub input_bitsize: u64,
    pub input_max_degree: u32,
    /// `None` when the basis computation hit a resource limit.
    pub gb_count: Option<usize>,
    pub predicted_gb_count: u128,
    /// `None` when enumeration exceeds the point cap.
    pub solution_count: Option<u128>,
    pub predicted_solution_count: u128,
    pub wall_time: Duration,
}

impl GrowthRecord {
    pub fn complete(&self) -> bool {
        self.gb_count.is_some()
    }
}

/// Builds `H_n`, computes its reduced basis (full ring) and counts solutions.
pub fn measure_growth(n: usize, order: MonomialOrder, caps: &Caps) -> Result<GrowthRecord> {
    let h = build_family(Family::H, InstanceParams::new(n).with_order(order), caps)?;
    let start = Instant::now();
    let gb_count = match reduced_basis(&h, &caps.limits) {
        Ok((gb, _)) => Some(gb.len()),
        Err(Error::ResourceLimit { .. }) => None,
        Err(e) => return Err(e),
    };
    let wall_time = start.elapsed();
    let solution_count = match oracle::enumerate_solutions(&h, caps.max_enum_vars) {
        Ok(sols) => Some(sols.len() as u128),
        Err(Error::TooManyVariables { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(GrowthRecord {
        n,
        input_count: h.len(),
        input_bitsize: input_bitsize(&h),
        input_max_degree: max_degree(&h),
        gb_count,
        predicted_gb_count: predicted_gb_size(n),
        solution_count,
        predicted_solution_count: predicted_solution_count(n),
        wall_time,
    })
}

/// Generator-set file: a `# n=<n> mode=<mode>` header, then one canonical
/// polynomial per line.
pub fn format_generator_file(set: &GeneratorSet) -> String {
    let mut out = format!("# n={} mode={}\n", set.n(), set.mode());
    for p in set.polys() {
        out.push_str(&format_poly(p, set.order()));
        out.push('\n');
    }
    out
}

/// Reads a generator-set file. Lines starting with `#` are comments, except
/// that `n=` and `mode=` are picked up from them; `n` is required.
pub fn parse_generator_file(text: &str, order: MonomialOrder) -> Result<GeneratorSet> {
    let mut n = None;
    let mut mode = RingMode::Full;
    let mut bodies = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if let Some(comment) = line.strip_prefix('#') {
            for tok in comment.split_whitespace() {
                if let Some(v) = tok.strip_prefix("n=") {
                    n = Some(v.parse::<usize>().map_err(|_| {
                        Error::format(
                            "generator file",
                            format!("line {}: bad n `{v}`", lineno + 1),
                        )
                    })?);
                } else if let Some(v) = tok.strip_prefix("mode=") {
                    mode = v.parse().map_err(|e: String| {
                        Error::format("generator file", format!("line {}: {e}", lineno + 1))
                    })?;
                }
            }
            continue;
        }
        if !line.is_empty() {
            bodies.push((lineno + 1, line));
        }
    }
    let n = n.ok_or_else(|| Error::format("generator file", "missing `# n=<n>` header"))?;
    let polys = bodies
        .into_iter()
        .map(|(lineno, line)| {
            parse_poly(line, n, mode).map_err(|e| match e {
                Error::Syntax { pos, msg } => Error::Syntax {
                    pos,
                    msg: format!("line {lineno}: {msg}"),
                },
                other => other,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    GeneratorSet::new(n, mode, order, polys)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(v: &[Polynomial]) -> Vec<String> {
        v.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn s_family() {
        assert_eq!(strs(&make_s(1)), ["x1^2 + x1", "y1^2 + y1", "z1^2 + z1"]);
        assert_eq!(make_s(2).len(), 6);
        assert!(make_s(3)
            .iter()
            .all(|p| p.degree() == Some(2) && p.len() == 2));
    }

    #[test]
    fn l_and_t_families() {
        assert_eq!(strs(&make_l(1)), ["x1*y1 + x1 + y1 + z1"]);
        assert_eq!(make_l(5).len(), 5);
        assert_eq!(strs(&make_t(1)), ["x1*z1 + x1", "y1*z1 + y1"]);
        assert_eq!(make_t(4).len(), 8);
    }

    #[test]
    fn l_relation_on_bits() {
        // z = xy + x + y vanishes exactly when x = y = 0
        for x in 0..2u8 {
            for y in 0..2u8 {
                let z = (x * y + x + y) % 2;
                assert_eq!(z == 0, x == 0 && y == 0);
            }
        }
    }

    #[test]
    fn p_family() {
        assert_eq!(strs(&make_p(1).unwrap()), ["x1", "y1", "z1"]);
        let p2 = strs(&make_p(2).unwrap());
        assert_eq!(p2.len(), 9);
        assert_eq!(p2[0], "x1*x2");
        assert_eq!(p2[1], "x1*y2");
        assert_eq!(p2[8], "z1*z2");
        assert_eq!(make_p(5).unwrap().len(), 243);
        assert!(matches!(make_p(13), Err(Error::ResourceLimit { .. })));
        assert!(make_p(0).is_err());
    }

    #[test]
    fn family_sizes() {
        assert_eq!(make_h(1, MonomialOrder::DegLex).unwrap().len(), 5);
        assert_eq!(make_h(4, MonomialOrder::DegLex).unwrap().len(), 17);
        assert_eq!(make_g(4, MonomialOrder::DegLex).unwrap().len(), 105);
        for n in 1..=6 {
            let h = make_h(n, MonomialOrder::DegLex).unwrap();
            let g = make_g(n, MonomialOrder::DegLex).unwrap();
            assert_eq!(h.len() as u128, predicted_input_count(n));
            assert_eq!(g.len() as u128, predicted_gb_size(n));
            assert!(h.polys().iter().all(|p| g.contains(p)));
            let bound = 2.max(n as u32);
            assert!(max_degree(&g) <= bound && max_degree(&h) <= bound);
        }
    }

    #[test]
    fn predictions() {
        assert_eq!(predicted_gb_size(4), 105);
        assert_eq!(predicted_solution_count(2), 7);
        assert_eq!(predicted_input_count(4), 17);
        assert_eq!(max_degree(&make_h(3, MonomialOrder::DegLex).unwrap()), 3);
    }

    #[test]
    fn bitsize() {
        let empty = GeneratorSet::new(2, RingMode::Full, MonomialOrder::DegLex, []).unwrap();
        assert_eq!(input_bitsize(&empty), 0);
        let b2 = input_bitsize(&make_h(2, MonomialOrder::DegLex).unwrap());
        let b4 = input_bitsize(&make_h(4, MonomialOrder::DegLex).unwrap());
        assert!(b4 > b2);
    }

    #[test]
    fn standard_monomials_of_variables() {
        let vars: Vec<Polynomial> = (0..6)
            .map(|i| Polynomial::from_monomial(Monomial::var(VarId::from_flat(i)), RingMode::Full))
            .collect();
        let b = GroebnerBasis::new_unchecked(2, RingMode::Full, MonomialOrder::DegLex, vars, true);
        assert_eq!(count_standard_monomials(&b).unwrap(), 1);
    }

    #[test]
    fn standard_monomials_need_bounds() {
        let b = GroebnerBasis::new_unchecked(
            1,
            RingMode::Full,
            MonomialOrder::DegLex,
            make_l(1),
            false,
        );
        assert!(matches!(
            count_standard_monomials(&b),
            Err(Error::NotZeroDimensional(_))
        ));
        let boolean = b.to_generator_set().to_mode(RingMode::Boolean);
        let b = GroebnerBasis::new_unchecked(
            1,
            RingMode::Boolean,
            MonomialOrder::DegLex,
            boolean.polys().to_vec(),
            false,
        );
        // squarefree monomials in x1, y1, z1 not divisible by x1*y1
        assert_eq!(count_standard_monomials(&b).unwrap(), 6);
    }

    #[test]
    fn generator_file_round_trip() {
        let g = make_g(2, MonomialOrder::DegLex).unwrap();
        let text = format_generator_file(&g);
        assert!(text.starts_with("# n=2 mode=full\n"));
        assert_eq!(text.lines().count(), 22);
        let back = parse_generator_file(&text, MonomialOrder::DegLex).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn generator_file_errors() {
        assert!(parse_generator_file("x1\n", MonomialOrder::DegLex).is_err());
        let e = parse_generator_file("# n=1\nx1 +\n", MonomialOrder::DegLex).unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        let b = parse_generator_file(
            "# comment\n# n=1 mode=boolean\nx1^2 + y1\n",
            MonomialOrder::DegLex,
        )
        .unwrap();
        assert_eq!(b.mode(), RingMode::Boolean);
        assert_eq!(b.polys()[0].to_string(), "x1 + y1");
    }
}
