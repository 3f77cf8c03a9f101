//! Acceptance suite: nine criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so every line is printed; the process
//! exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hecke_core::cherednik::DunklParams;
use hecke_core::psmodule::{assertion48_submodule, SchurBranch};
use hecke_core::rational::{rat, ratio};
use hecke_core::suite::{
    check_center_dimension, check_centers, check_commutation_formula, check_divided_differences, check_dunkl,
    check_graded_identification, check_isomorphisms, check_relations, extra_central_element, lift_mismatches,
    submodule_dimension_law, sample_characters, sweep, Check,
};
use hecke_core::weylgroup::all_wa;
use hecke_core::{build_m, criterion_b, AlgebraContext, FullCharacter, Rational, Result, SignCharacter};

struct Outcome {
    passed: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            passed: true,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, c: Check) {
        if !c.passed {
            self.passed = false;
            let mut detail = c.counterexample.unwrap_or_default();
            if let Some((cut, _)) = detail.char_indices().nth(160) {
                detail.truncate(cut);
                detail.push_str(" …");
            }
            self.notes.push(format!("{}: {detail}", c.name));
        }
    }

    fn require(&mut self, ok: bool, note: impl Into<String>) {
        if !ok {
            self.passed = false;
            self.notes.push(note.into());
        }
    }
}

fn chars(gamma: &[Rational], mus: &[SignCharacter]) -> Vec<FullCharacter> {
    mus.iter()
        .map(|mu| FullCharacter::new(gamma.to_vec(), mu.clone()).unwrap())
        .collect()
}

fn grid2(lo: i64, hi: i64) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    for a in lo..=hi {
        for b in lo..=hi {
            out.push(vec![rat(a), rat(b)]);
        }
    }
    out
}

fn type_b_points_n2() -> Vec<FullCharacter> {
    grid2(-3, 3)
        .iter()
        .flat_map(|g| chars(g, &SignCharacter::all(2)))
        .collect()
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.gen_range(-12..=12), rng.gen_range(1..=3))
}

/// 60 random rational points per character, plus every configuration with
/// `γ_a − γ_b = ±2` on a single pair.
fn type_b_points_n3() -> Vec<FullCharacter> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut out = Vec::new();
    for mu in SignCharacter::all(3) {
        for _ in 0..60 {
            let g: Vec<Rational> = (0..3).map(|_| random_rational(&mut rng)).collect();
            out.push(FullCharacter::new(g, mu.clone()).unwrap());
        }
        for a in 0..3 {
            for b in a + 1..3 {
                for d in [2, -2] {
                    let mut g: Vec<Rational> = (0..3).map(|_| random_rational(&mut rng)).collect();
                    g[b] = &g[a] - rat(d);
                    out.push(FullCharacter::new(g, mu.clone()).unwrap());
                }
            }
        }
    }
    out
}

fn criterion1() -> Result<Outcome> {
    let mut o = Outcome::new();
    for n in 1..=3 {
        let ctx = AlgebraContext::new(n, rat(1))?;
        o.check(check_relations(&ctx, 30, n as u64)?);
        o.check(check_commutation_formula(&ctx)?);
    }
    let ctx = AlgebraContext::new(3, ratio(-2, 3))?;
    o.check(check_commutation_formula(&ctx)?);
    Ok(o)
}

fn criterion2() -> Result<Outcome> {
    let mut o = Outcome::new();
    for n in 2..=3 {
        for k in [rat(1), ratio(3, 2)] {
            let ctx = AlgebraContext::new(n, k)?;
            let printed = check_divided_differences(&ctx, 1, 100, 4, 7)?;
            let corrected = check_divided_differences(&ctx, -1, 100, 4, 7)?;
            o.check(printed);
            if !corrected.passed {
                o.check(corrected);
            } else if n == 3 {
                o.notes.push(format!(
                    "with the opposite sign the identity holds on all {} cases",
                    corrected.cases
                ));
            }
        }
    }
    Ok(o)
}

fn criterion3() -> Result<Outcome> {
    let mut o = Outcome::new();
    for n in 1..=3 {
        for (k, kc) in [(rat(1), rat(0)), (rat(1), ratio(1, 2)), (rat(2), rat(-1))] {
            o.check(check_dunkl(&DunklParams::new(n, k, kc), 4)?);
        }
    }
    Ok(o)
}

fn criterion4() -> Result<Outcome> {
    let mut o = Outcome::new();
    for n in 2..=3 {
        o.check(check_centers(&AlgebraContext::new(n, rat(1))?)?);
    }
    let ctx = AlgebraContext::new(2, rat(1))?;
    let dim = check_center_dimension(&ctx, 2)?;
    if !dim.passed {
        let x = extra_central_element(&ctx)?;
        o.notes.push(format!("{} is central: {}", x.render(), ctx.is_central_b(&x)?));
    }
    o.check(dim);
    Ok(o)
}

fn agreement(o: &mut Outcome, label: &str, points: &[FullCharacter], n: usize, type_d: bool) -> Result<()> {
    let ctx = AlgebraContext::new(n, rat(1))?;
    let bad = sweep(points, &ctx, type_d)?;
    o.require(
        bad.is_empty(),
        format!("{label}: {} of {} disagree, first {:?}", bad.len(), points.len(), bad.first()),
    );
    if bad.is_empty() {
        o.notes.push(format!("{label}: {} points agree", points.len()));
    }
    Ok(())
}

fn criterion5() -> Result<Outcome> {
    let mut o = Outcome::new();
    agreement(&mut o, "n = 2", &type_b_points_n2(), 2, false)?;
    agreement(&mut o, "n = 3", &type_b_points_n3(), 3, false)?;
    Ok(o)
}

fn criterion6() -> Result<Outcome> {
    let mut o = Outcome::new();
    let points = type_b_points_n2();
    agreement(&mut o, "n = 2", &points, 2, true)?;
    let lifts = lift_mismatches(&points, &AlgebraContext::new(2, rat(1))?)?;
    o.notes.push(format!(
        "n = 2: the two lifts of μ̄ give isomorphic modules at {} of {} points",
        points.len() - lifts.len(),
        points.len()
    ));
    let targeted: Vec<Vec<Rational>> = vec![
        vec![rat(5), rat(1), rat(5), rat(1)],
        vec![rat(5), rat(1), rat(1), rat(5)],
        vec![rat(3), rat(1), rat(5), rat(7)],
        vec![rat(1), rat(3), rat(7), rat(5)],
        vec![rat(3), rat(1), rat(3), rat(1)],
        vec![rat(3), rat(1), rat(1), rat(3)],
        vec![ratio(1, 2), rat(7), ratio(1, 2), rat(7)],
        vec![rat(0), rat(1), rat(2), rat(3)],
        vec![rat(1), rat(2), rat(3), rat(4)],
        vec![rat(0), rat(10), rat(3), rat(20)],
    ];
    let mu: SignCharacter = "++--".parse()?;
    let points: Vec<FullCharacter> = targeted
        .iter()
        .map(|g| FullCharacter::new(g.clone(), mu.clone()))
        .collect::<Result<_>>()?;
    agreement(&mut o, "n = 4, μ = ++--", &points, 4, true)?;
    let lifts = lift_mismatches(&points, &AlgebraContext::new(4, rat(1))?)?;
    o.notes.push(format!(
        "n = 4: the two lifts of μ̄ give isomorphic modules at {} of {} points",
        points.len() - lifts.len(),
        points.len()
    ));
    Ok(o)
}

fn criterion7() -> Result<Outcome> {
    let mut o = Outcome::new();
    for n in 2..=3 {
        let ctx = AlgebraContext::new(n, rat(1))?;
        let cs = sample_characters(n, 5, 11 + n as u64);
        o.check(check_isomorphisms(&ctx, &cs)?);
        o.check(check_graded_identification(&ctx, &cs)?);
    }
    Ok(o)
}

fn criterion8() -> Result<Outcome> {
    let mut o = Outcome::new();
    let mut count = 0;
    for n in 1..=3usize {
        let ctx = AlgebraContext::new(n, rat(1))?;
        let mut gammas: Vec<Vec<Rational>> = match n {
            1 => (-2..=2).map(|a| vec![rat(a)]).collect(),
            2 => grid2(-2, 2),
            _ => vec![
                vec![rat(2), rat(0), rat(5)],
                vec![rat(2), rat(0), rat(-2)],
                vec![rat(4), rat(2), rat(0)],
                vec![rat(1), rat(1), rat(3)],
                vec![rat(0), rat(2), rat(0)],
                vec![ratio(1, 2), ratio(5, 2), ratio(-3, 2)],
            ],
        };
        gammas.dedup();
        for g in &gammas {
            for chi in chars(g, &SignCharacter::all(n)) {
                count += 1;
                if let Some(bad) = submodule_dimension_law(&build_m(&chi, &ctx)?)? {
                    o.require(false, bad);
                }
            }
        }
    }
    o.notes.push(format!("dimension law on {count} modules"));
    for c in [rat(0), rat(1), rat(-3), ratio(5, 2)] {
        let a = assertion48_submodule(&[c.clone(), c.clone()], &rat(1))?;
        o.require(
            a.closure_verified && a.v_dim > 0 && a.v_dim < a.f1_dim && matches!(a.branch, SchurBranch::Square { .. }),
            format!("γ = ({c},{c}): V of dim {} in F_1 of dim {}", a.v_dim, a.f1_dim),
        );
    }
    Ok(o)
}

fn criterion9() -> Result<Outcome> {
    let mut o = Outcome::new();
    let k = rat(1);
    let mut count = 0;
    for (n, points) in [(2, type_b_points_n2()), (3, type_b_points_n3())] {
        let group = all_wa(n);
        for chi in &points {
            let v = criterion_b(&chi.gamma, &chi.mu, &k)?.verdict;
            for w in &group {
                count += 1;
                let x = chi.act(w)?;
                if criterion_b(&x.gamma, &x.mu, &k)?.verdict != v {
                    o.require(false, format!("{chi} and ^{w} disagree"));
                }
            }
        }
    }
    o.notes.push(format!("{count} pairs compared"));
    Ok(o)
}

type Criterion = (&'static str, fn() -> Result<Outcome>, u64);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("relations and the commutation formula", criterion1, 10),
        ("divided-difference identity", criterion2, 10),
        ("Dunkl and Kakei operators", criterion3, 60),
        ("centers", criterion4, 20),
        ("type B criterion against the oracle", criterion5, 120),
        ("type D criterion against the oracle", criterion6, 300),
        ("isomorphism certificates", criterion7, 60),
        ("dimension law and the even-rank submodule", criterion8, 30),
        ("orbit invariance", criterion9, 30),
    ];
    let mut all = true;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (mut passed, notes) = match result {
            Ok(o) => (o.passed, o.notes),
            Err(e) => (false, vec![format!("error: {e}")]),
        };
        if elapsed > Duration::from_secs(*limit) {
            passed = false;
        }
        all &= passed;
        println!(
            "criterion {}: {} {name} ({:.2}s, limit {limit}s)",
            i + 1,
            if passed { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        for note in notes {
            println!("    {note}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
