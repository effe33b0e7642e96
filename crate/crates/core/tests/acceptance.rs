//! Acceptance gate. Prints one `PASS`/`FAIL` line per criterion and exits
//! non-zero if any gating criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use boolgb::cli::run_args;
use boolgb::construction::{
    count_standard_monomials, make_g, make_h, make_s, predicted_solution_count,
};
use boolgb::groebner::{
    buchberger, ideal_membership, interreduce, is_groebner_basis, is_reduced_basis, reduced_basis,
};
use boolgb::oracle::{
    enumerate_solutions, evaluate, membership_by_evaluation, solution_sets_equal,
};
use boolgb::{format_poly, parse_poly, GeneratorSet, Limits, MonomialOrder, Polynomial, RingMode};
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use rand::Rng;

use common::{poly_strategy, random_poly, rng};

const DL: MonomialOrder = MonomialOrder::DegLex;
const ENUM_VARS: usize = 24;
const PROPERTY_CASES: u32 = 1000;

type Outcome = Result<String, String>;

#[derive(Default)]
struct Gate {
    failed: Vec<&'static str>,
}

impl Gate {
    fn run(&mut self, name: &'static str, gating: bool, check: impl FnOnce() -> Outcome) {
        let started = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let tag = if gating { "" } else { " (non-gating)" };
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {name}{tag} [{secs:.2}s]: {detail}"),
            Err(detail) => {
                println!("FAIL {name}{tag} [{secs:.2}s]: {detail}");
                if gating {
                    self.failed.push(name);
                }
            }
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn blowup(sizes: &[(usize, usize, Duration)]) -> Outcome {
    let mut seen = Vec::new();
    for &(n, want, budget) in sizes {
        let h = make_h(n, DL).map_err(|e| e.to_string())?;
        let start = Instant::now();
        let (gb, _) = reduced_basis(&h, &Limits::default()).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        ensure(gb.len() == want, || {
            format!("n={n}: {} elements, want {want}", gb.len())
        })?;
        ensure(took <= budget, || {
            format!("n={n}: {took:.2?} exceeds {budget:?}")
        })?;
        seen.push(format!("n={n}:{} in {took:.2?}", gb.len()));
    }
    Ok(seen.join(", "))
}

fn basis_identity() -> Outcome {
    for n in 2..=4 {
        for order in MonomialOrder::ALL {
            let h = make_h(n, order).map_err(|e| e.to_string())?;
            let (gb, _) = buchberger(&h, &Limits::default()).map_err(|e| e.to_string())?;
            let red = interreduce(&gb);
            let g = make_g(n, order).map_err(|e| e.to_string())?;
            ensure(red.same_elements(g.polys()), || {
                format!("n={n} {order}: basis differs from G_n")
            })?;
        }
    }
    Ok("n=2..4 under deglex and degrevlex".into())
}

fn solution_identity() -> Outcome {
    for n in 1..=4 {
        let h = make_h(n, DL).map_err(|e| e.to_string())?;
        let g = make_g(n, DL).map_err(|e| e.to_string())?;
        ensure(
            solution_sets_equal(&h, &g, ENUM_VARS).map_err(|e| e.to_string())?,
            || format!("n={n}: Sol(H) != Sol(G)"),
        )?;
    }
    Ok("Sol(H_n) = Sol(G_n) for n=1..4".into())
}

fn counting() -> Outcome {
    let mut sols = Vec::new();
    for n in 1..=5 {
        let h = make_h(n, DL).map_err(|e| e.to_string())?;
        let got = enumerate_solutions(&h, ENUM_VARS)
            .map_err(|e| e.to_string())?
            .len() as u128;
        let want = predicted_solution_count(n);
        ensure(got == want, || format!("n={n}: |Sol| = {got}, want {want}"))?;
        sols.push(got.to_string());
    }
    let mut stds = Vec::new();
    for n in 2..=5 {
        let (gb, _) = reduced_basis(
            &make_h(n, DL).map_err(|e| e.to_string())?,
            &Limits::default(),
        )
        .map_err(|e| e.to_string())?;
        let got = count_standard_monomials(&gb).map_err(|e| e.to_string())? as u128;
        let want = predicted_solution_count(n);
        ensure(got == want, || {
            format!("n={n}: {got} standard monomials, want {want}")
        })?;
        stds.push(got.to_string());
    }
    Ok(format!(
        "|Sol| n=1..5: {}; standard monomials n=2..5: {}",
        sols.join(","),
        stds.join(",")
    ))
}

fn reducedness() -> Outcome {
    for n in 2..=5 {
        let g = make_g(n, DL).map_err(|e| e.to_string())?;
        ensure(is_reduced_basis(g.polys(), DL), || {
            format!("G_{n} should be reduced")
        })?;
    }
    let g1 = make_g(1, DL).map_err(|e| e.to_string())?;
    ensure(!is_reduced_basis(g1.polys(), DL), || {
        "G_1 should not be reduced".into()
    })?;
    for n in 2..=4 {
        let g = make_g(n, DL).map_err(|e| e.to_string())?;
        ensure(is_groebner_basis(g.polys(), DL), || {
            format!("G_{n} should be a Groebner basis")
        })?;
    }
    Ok("reduced for n=2..5, not for n=1; Groebner for n=2..4".into())
}

fn growth_table() -> Outcome {
    let report = run_args([
        "boolgb", "bench", "--n", "2", "--n-max", "5", "--format", "csv",
    ]);
    ensure(report.exit == 0, || {
        format!("bench exited {}: {}", report.exit, report.stderr)
    })?;
    let mut lines = report.stdout.lines();
    let header: Vec<&str> = lines.next().ok_or("empty output")?.split(',').collect();
    let col = |name: &str| {
        header
            .iter()
            .position(|h| *h == name)
            .ok_or(format!("missing column {name}"))
    };
    let (c_n, c_in, c_bits, c_gb) = (
        col("n")?,
        col("inputCount")?,
        col("inputBitsize")?,
        col("gbCount")?,
    );
    let rows: Vec<Vec<String>> = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    ensure(rows.len() == 4, || format!("{} rows, want 4", rows.len()))?;
    let num = |s: &str| s.parse::<u64>().map_err(|_| format!("not a number: {s}"));
    let bits2 = num(&rows[0][c_bits])?;
    let mut detail = Vec::new();
    for r in &rows {
        let n = num(&r[c_n])?;
        ensure(num(&r[c_in])? == 4 * n + 1, || {
            format!("n={n}: inputCount {}", r[c_in])
        })?;
        let gb = num(&r[c_gb])?;
        ensure(gb == 6 * n + 3u64.pow(n as u32), || {
            format!("n={n}: gbCount {gb}")
        })?;
        // bits(n) <= c n^2 with c = bits(2) / 4
        let bits = num(&r[c_bits])?;
        ensure(4 * bits <= bits2 * n * n, || {
            format!("n={n}: bitsize {bits} above c*n^2")
        })?;
        detail.push(format!("n={n}:{gb}/{bits}b"));
    }
    Ok(format!("c = {}/4 bits; {}", bits2, detail.join(", ")))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = rng(0x5eed_0001);
    let mut summary = Vec::new();
    for n in 1..=3 {
        let h = make_h(n, DL).map_err(|e| e.to_string())?;
        let (gb, _) = reduced_basis(&h, &Limits::default()).map_err(|e| e.to_string())?;
        let (mut total, mut members) = (0, 0);
        for k in 0..300 {
            // every third sample is built inside the ideal so both answers occur
            let f = if k % 3 == 0 {
                h.polys()
                    .iter()
                    .fold(Polynomial::zero(RingMode::Full), |acc, g| {
                        let q = random_poly(&mut rng, n, 2, 3, RingMode::Full);
                        &acc + &(&q * g)
                    })
            } else {
                random_poly(&mut rng, n, 4, 6, RingMode::Full)
            };
            let algebra = ideal_membership(&f, &gb).map_err(|e| e.to_string())?;
            let oracle = membership_by_evaluation(&f, &h, ENUM_VARS).map_err(|e| e.to_string())?;
            ensure(algebra == oracle, || format!("n={n}: disagreement on {f}"))?;
            total += 1;
            members += algebra as usize;
        }
        summary.push(format!("n={n}: {total} cases, {members} members"));
    }
    Ok(summary.join("; "))
}

fn cross_check(set: &GeneratorSet) -> Result<bool, String> {
    let full = set.extended(make_s(set.n())).map_err(|e| e.to_string())?;
    let (full_gb, _) = reduced_basis(&full, &Limits::default()).map_err(|e| e.to_string())?;
    let (bool_gb, _) = reduced_basis(&set.to_mode(RingMode::Boolean), &Limits::default())
        .map_err(|e| e.to_string())?;
    Ok(bool_gb.lift_to_full() == full_gb)
}

fn engine_cross_validation() -> Outcome {
    for n in 2..=4 {
        for order in MonomialOrder::ALL {
            let h = make_h(n, order).map_err(|e| e.to_string())?;
            ensure(cross_check(&h)?, || {
                format!("H_{n} {order}: engines disagree")
            })?;
        }
    }
    let mut rng = rng(0x5eed_0002);
    let mut vars_used = 0;
    for k in 0..50 {
        let n = rng.gen_range(1..=3);
        let order = MonomialOrder::ALL[k % 2];
        let count = rng.gen_range(1..=5);
        let polys: Vec<Polynomial> = (0..count)
            .map(|_| random_poly(&mut rng, n, 3, 5, RingMode::Full))
            .collect();
        let set = GeneratorSet::new(n, RingMode::Full, order, polys).map_err(|e| e.to_string())?;
        vars_used = vars_used.max(3 * n);
        ensure(cross_check(&set)?, || {
            format!("random system {k}: engines disagree")
        })?;
    }
    Ok(format!(
        "H_n n=2..4 both orders, 50 random systems over <= {vars_used} variables"
    ))
}

fn property<S, F>(strategy: S, test: F) -> Result<(), String>
where
    S: proptest::strategy::Strategy,
    S::Value: std::fmt::Debug,
    F: Fn(S::Value) -> Result<(), TestCaseError>,
{
    let mut runner = TestRunner::new(Config {
        cases: PROPERTY_CASES,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn property_suites() -> Outcome {
    use proptest::{prop_assert, prop_assert_eq};

    for mode in [RingMode::Full, RingMode::Boolean] {
        let p = || poly_strategy(2, 2, 5, mode);
        property((p(), p(), p()), |(a, b, c)| {
            prop_assert_eq!(&(&a + &b), &(&b + &a));
            prop_assert_eq!(&(&a * &b), &(&b * &a));
            prop_assert_eq!(&(&(&a + &b) + &c), &(&a + &(&b + &c)));
            prop_assert_eq!(&(&(&a * &b) * &c), &(&a * &(&b * &c)));
            prop_assert_eq!(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c)));
            prop_assert_eq!(&(&a + &Polynomial::zero(mode)), &a);
            prop_assert_eq!(&(&a * &Polynomial::one(mode)), &a);
            prop_assert!((&a + &a).is_zero());
            Ok(())
        })
        .map_err(|e| format!("ring axioms ({mode}): {e}"))?;
    }

    property(poly_strategy(3, 3, 6, RingMode::Boolean), |f| {
        prop_assert_eq!(&(&f * &f), &f);
        Ok(())
    })
    .map_err(|e| format!("boolean idempotence: {e}"))?;

    let h = make_h(2, DL).map_err(|e| e.to_string())?;
    let (gb, _) = reduced_basis(&h, &Limits::default()).map_err(|e| e.to_string())?;
    let sols = enumerate_solutions(&h, ENUM_VARS).map_err(|e| e.to_string())?;
    let p = || poly_strategy(2, 3, 6, RingMode::Full);
    property((p(), p()), |(f, g)| {
        let nf = gb.normal_form(&f).unwrap();
        prop_assert_eq!(&gb.normal_form(&nf).unwrap(), &nf);
        let sum = gb.normal_form(&(&f + &g)).unwrap();
        prop_assert_eq!(&sum, &(&nf + &gb.normal_form(&g).unwrap()));
        prop_assert!(ideal_membership(&(&f + &nf), &gb).unwrap());
        for pt in sols.points() {
            prop_assert_eq!(evaluate(&f, &pt).unwrap(), evaluate(&nf, &pt).unwrap());
        }
        Ok(())
    })
    .map_err(|e| format!("normal form: {e}"))?;

    for mode in [RingMode::Full, RingMode::Boolean] {
        property(poly_strategy(4, 3, 6, mode), |f| {
            for order in MonomialOrder::ALL {
                let text = format_poly(&f, order);
                prop_assert_eq!(&parse_poly(&text, 4, mode).unwrap(), &f);
            }
            Ok(())
        })
        .map_err(|e| format!("round-trip ({mode}): {e}"))?;
    }

    Ok(format!(
        "{PROPERTY_CASES} cases each: ring axioms, f*f = f, normal form, text round-trip"
    ))
}

fn main() -> ExitCode {
    let mut gate = Gate::default();
    gate.run("blowup", true, || {
        let s = Duration::from_secs;
        blowup(&[
            (2, 21, s(10)),
            (3, 45, s(10)),
            (4, 105, s(10)),
            (5, 273, s(120)),
        ])
    });
    gate.run("blowup-stretch-n6", false, || {
        blowup(&[(6, 765, Duration::from_secs(900))])
    });
    gate.run("basis-identity", true, basis_identity);
    gate.run("solution-identity", true, solution_identity);
    gate.run("counting", true, counting);
    gate.run("reducedness", true, reducedness);
    gate.run("growth-table", true, growth_table);
    gate.run("oracle-equivalence", true, oracle_equivalence);
    gate.run("engine-cross-validation", true, engine_cross_validation);
    gate.run("property-suites", true, property_suites);

    if gate.failed.is_empty() {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed {}", gate.failed.join(", "));
        ExitCode::FAILURE
    }
}
