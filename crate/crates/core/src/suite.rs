//! Executable checks of the algebra, the Dunkl realization and the module
//! theory, shared by the command line and the integration tests.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{AlgebraContext, AlgebraElement};
use crate::cherednik::{
    phi_check_failures, verify_cherednik_relation1, verify_cherednik_relation2, verify_cherednik_relation3,
    verify_dunkl_commute, verify_type_d_specialization, DunklParams,
};
use crate::criteria::{criterion_b, criterion_d};
use crate::error::{HeckeError, Result};
use crate::linalg::{unit_vector, Matrix};
use crate::polynomial::{elementary_symmetric, power_sum, random_poly, Poly};
use crate::psmodule::{
    f1_weights, assertion48_submodule, build_graded_hecke_ps, build_m, build_n, burnside_irreducible,
    e1_as_graded_hecke, find_proper_submodule, intertwiner, isotypic_decomposition, quotient,
    submodule_generated, weight_table, weight_table_with_candidates, FullCharacter, MatrixModule, TwistBy, Weight,
};
use crate::rational::{rat, ratio, Rational};
use crate::weylgroup::{all_torus, all_wa, all_wb, coset_reps, sigma_and_i, RootKind, SignCharacter, SignedPermutation};

/// Largest rank the suites accept.
pub const MAX_RANK: usize = 4;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub counterexample: Option<String>,
    #[serde(skip)]
    pub millis: u128,
}

impl Check {
    fn run(name: &str, body: impl FnOnce(&mut usize) -> Result<Option<String>>) -> Result<Check> {
        let start = Instant::now();
        let mut cases = 0;
        let counterexample = body(&mut cases)?;
        Ok(Check {
            name: name.to_string(),
            passed: counterexample.is_none(),
            cases,
            counterexample,
            millis: start.elapsed().as_millis(),
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub n: usize,
    #[serde(with = "crate::rational::serde_rational")]
    pub k: Rational,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub n: usize,
    pub k: Rational,
    pub k_c: Rational,
    pub degree: u32,
    pub seed: u64,
    pub samples: usize,
}

impl SuiteConfig {
    pub fn new(n: usize, k: Rational) -> Self {
        SuiteConfig {
            n,
            k,
            k_c: ratio(1, 2),
            degree: 3,
            seed: 0,
            samples: 20,
        }
    }
}

fn mono(n: usize, e: Vec<u32>, w: SignedPermutation, c: Rational) -> AlgebraElement {
    let mut x = AlgebraElement::zero(n);
    x.add_term(e, w, c);
    x
}

fn eps_exp(n: usize, l: usize) -> Vec<u32> {
    let mut e = vec![0; n];
    e[l] = 1;
    e
}

/// `k̃_α` for an `A`-root of either sign.
fn k_tilde_any(ctx: &AlgebraContext, kind: RootKind) -> AlgebraElement {
    match kind {
        RootKind::A { p, q } => ctx.k_tilde(p.min(q), p.max(q)),
        _ => unreachable!("only A-roots carry k̃ here"),
    }
}

/// The defining relations, associativity, and the (anti)automorphisms δ, ι.
pub fn check_relations(ctx: &AlgebraContext, samples: usize, seed: u64) -> Result<Check> {
    Check::run("defining relations", |cases| {
        let n = ctx.n();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for a in 1..=n {
            for b in 1..=n {
                *cases += 1;
                if !ctx.commutator(&ctx.eps(a)?, &ctx.eps(b)?)?.is_zero() {
                    return Ok(Some(format!("[e{a}, e{b}] ≠ 0")));
                }
            }
        }
        let wb = all_wb(n);
        for w in &wb {
            for u in &wb {
                *cases += 1;
                let lhs = ctx.multiply(&ctx.group(w)?, &ctx.group(u)?)?;
                if lhs != ctx.group(&w.compose(u)?)? {
                    return Ok(Some(format!("t_{w} t_{u} ≠ t_{{w∘u}}")));
                }
            }
        }
        for x in all_torus(n) {
            for l in 1..=n {
                *cases += 1;
                let tx = ctx.group(&x)?;
                if !ctx.commutator(&tx, &ctx.eps(l)?)?.is_zero() {
                    return Ok(Some(format!("t_{x} does not commute with e{l}")));
                }
            }
        }
        for i in 1..n {
            let s = SignedPermutation::simple(n, i)?;
            let pair = crate::weylgroup::Root::a(i - 1, i);
            for j in 1..=n {
                *cases += 1;
                let lhs = ctx.multiply(&ctx.ts(i)?, &ctx.eps(j)?)?;
                let mut rhs = mono(n, eps_exp(n, s.star(j - 1)), s.clone(), rat(1));
                let c = rat(-pair.coroot_pairing(j - 1, n));
                rhs.add_scaled(&ctx.k_tilde(i - 1, i), &c);
                if lhs != rhs {
                    return Ok(Some(format!("t_s{i} e{j}: {} ≠ {}", lhs.render(), rhs.render())));
                }
            }
        }
        for _ in 0..samples {
            *cases += 1;
            let a = ctx.random_element(&mut rng, 2, 2);
            let b = ctx.random_element(&mut rng, 2, 2);
            let c = ctx.random_element(&mut rng, 1, 2);
            let ab = ctx.multiply(&a, &b)?;
            if ctx.multiply(&ab, &c)? != ctx.multiply(&a, &ctx.multiply(&b, &c)?)? {
                return Ok(Some(format!("associativity fails for {} | {} | {}", a.render(), b.render(), c.render())));
            }
            if ab.delta() != ctx.multiply(&a.delta(), &b.delta())? {
                return Ok(Some(format!("δ not multiplicative on {} | {}", a.render(), b.render())));
            }
            if ctx.iota(&ab)? != ctx.multiply(&ctx.iota(&b)?, &ctx.iota(&a)?)? {
                return Ok(Some(format!("ι not anti-multiplicative on {} | {}", a.render(), b.render())));
            }
            if ctx.iota(&ctx.iota(&a)?)? != a || a.delta().delta() != a {
                return Ok(Some(format!("ι or δ not involutive on {}", a.render())));
            }
        }
        Ok(None)
    })
}

/// Both displayed forms of the commutation formula for `t_w ε_l`, all `w ∈ W_A`.
pub fn check_commutation_formula(ctx: &AlgebraContext) -> Result<Check> {
    Check::run("commutation formula", |cases| {
        let n = ctx.n();
        for w in all_wa(n) {
            let winv = w.inverse();
            for l in 0..n {
                *cases += 1;
                let wl = w.star(l);
                let lhs = ctx.multiply(&ctx.group(&w)?, &ctx.eps(l + 1)?)?;
                let lead = mono(n, eps_exp(n, wl), w.clone(), rat(1));
                let mut left = lead.clone();
                let mut right = lead;
                for alpha in w.inversion_set()? {
                    let c = rat(alpha.coroot_pairing(wl, n));
                    if c == rat(0) {
                        continue;
                    }
                    let sw = ctx.group(&alpha.reflection(n).compose(&w)?)?;
                    let ka = k_tilde_any(ctx, alpha.kind);
                    let RootKind::A { p, q } = alpha.kind else { unreachable!() };
                    let back = crate::weylgroup::Root::a(winv.star(p), winv.star(q));
                    let kb = k_tilde_any(ctx, back.kind);
                    left.add_scaled(&ctx.multiply(&ka, &sw)?, &c);
                    right.add_scaled(&ctx.multiply(&sw, &kb)?, &c);
                }
                if lhs != left || lhs != right {
                    return Ok(Some(format!(
                        "t_{w} e{}: product {} vs forms {} / {}",
                        l + 1,
                        lhs.render(),
                        left.render(),
                        right.render()
                    )));
                }
            }
        }
        Ok(None)
    })
}

/// `t_s p − s(p) t_s` against `sign · Δ_j(p)(1 + t_j t_{j+1})` on random `p`.
///
/// `sign = 1` is the identity as usually printed; the relation for `t_s ε_j`
/// forces `sign = −1`.
pub fn check_divided_differences(
    ctx: &AlgebraContext,
    sign: i64,
    samples: usize,
    degree: u32,
    seed: u64,
) -> Result<Check> {
    let name = if sign == 1 {
        "divided differences, printed sign"
    } else {
        "divided differences, sign from the defining relation"
    };
    Check::run(name, |cases| {
        let n = ctx.n();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for j in 1..n {
            for _ in 0..samples {
                *cases += 1;
                let p = random_poly(&mut rng, n, degree, 4);
                let lhs = ctx.tilde_delta(j, &p)?;
                let rhs = ctx.lemma_divided_difference(j, &p)?.scale(&rat(sign));
                if lhs != rhs {
                    return Ok(Some(format!(
                        "j = {j}, p = {}: {} ≠ {}",
                        p.render("e"),
                        lhs.render(),
                        rhs.render()
                    )));
                }
            }
            // Symmetric polynomials are killed.
            *cases += 1;
            let e = elementary_symmetric(n, 2);
            if !ctx.tilde_delta(j, &e)?.is_zero() {
                return Ok(Some(format!("Δ̃_{j}(e_2) ≠ 0")));
            }
        }
        Ok(None)
    })
}

/// Dunkl commutativity, the three Cherednik relations, the type-D
/// specialization and the relations of `(D_j, t_w)`.
pub fn check_dunkl(params: &DunklParams, bound: u32) -> Result<Check> {
    let name = format!("Dunkl/Kakei operators (k_c = {})", params.k_c);
    Check::run(&name, |cases| {
        let n = params.n;
        for i in 1..=n {
            for j in i + 1..=n {
                *cases += 1;
                if !verify_dunkl_commute(i, j, params, bound)? {
                    return Ok(Some(format!("[T_{i}, T_{j}] ≠ 0")));
                }
            }
        }
        for y in 1..=n {
            for x in 1..=n {
                *cases += 1;
                if !verify_cherednik_relation1(y, x, params, bound)? {
                    return Ok(Some(format!("[T_{y}, z_{x}] relation fails")));
                }
            }
        }
        for w in all_wb(n) {
            for x in 1..=n {
                *cases += 2;
                if !verify_cherednik_relation2(&w, x, bound)? {
                    return Ok(Some(format!("t_{w} z_{x} t_{w}^-1 relation fails")));
                }
                if !verify_cherednik_relation3(&w, x, params, bound)? {
                    return Ok(Some(format!("t_{w} T_{x} t_{w}^-1 relation fails")));
                }
            }
        }
        *cases += 1;
        if !verify_type_d_specialization(params, bound)? {
            return Ok(Some("type-D specialization fails".into()));
        }
        *cases += 1;
        let failures = phi_check_failures(params, bound)?;
        Ok(failures.first().map(|f| format!("Kakei relation fails: {f}")))
    })
}

fn central_candidates(n: usize) -> Vec<(String, Poly)> {
    let mut ps = vec![("1".to_string(), Poly::one(n)), ("e1".to_string(), elementary_symmetric(n, 1))];
    if n >= 2 {
        ps.push(("e2".to_string(), elementary_symmetric(n, 2)));
    }
    ps.push(("p2".to_string(), power_sum(n, 2)));
    ps
}

/// Products `p·ϑ_j` are central in `ℍ_B`, `p·ϑ_{2i}` in `ℍ_D`; known
/// non-central elements are flagged.
pub fn check_centers(ctx: &AlgebraContext) -> Result<Check> {
    Check::run("centers", |cases| {
        let n = ctx.n();
        for (name, p) in central_candidates(n) {
            let pe = AlgebraElement::from_poly(&p);
            for j in 0..=n {
                *cases += 1;
                let z = ctx.multiply(&pe, &ctx.theta(j)?)?;
                if !ctx.is_central_b(&z)? {
                    return Ok(Some(format!("{name}·ϑ_{j} not central in the type-B algebra")));
                }
                if j % 2 == 0 {
                    *cases += 1;
                    if !ctx.is_central_d(&z)? {
                        return Ok(Some(format!("{name}·ϑ_{j} not central in the type-D algebra")));
                    }
                }
            }
        }
        if n >= 2 {
            let e1t1 = ctx.multiply(&AlgebraElement::from_poly(&elementary_symmetric(n, 1)), &ctx.t(1)?)?;
            for (label, x) in [("e1", ctx.eps(1)?), ("t1", ctx.t(1)?), ("e1·t1", e1t1)] {
                *cases += 1;
                if ctx.is_central_b(&x)? {
                    return Ok(Some(format!("{label} flagged central")));
                }
            }
            *cases += 1;
            if !matches!(ctx.is_central_d(&ctx.theta(1)?), Err(HeckeError::NotInHD)) {
                return Ok(Some("ϑ_1 accepted by the type-D test".into()));
            }
            *cases += 1;
            if ctx.is_central_d(&ctx.eps(1)?)? {
                return Ok(Some("e1 flagged central in the type-D algebra".into()));
            }
        }
        Ok(None)
    })
}

/// The space of central elements of polynomial degree `≤ d` against the span
/// of `p·ϑ_j`, `p` symmetric, for `d ≤ max_degree`.
pub fn check_center_dimension(ctx: &AlgebraContext, max_degree: u32) -> Result<Check> {
    Check::run("center dimension", |cases| {
        for d in 0..=max_degree {
            *cases += 1;
            let (central, expected) = ctx.center_dimension_probe(d)?;
            if central != expected {
                return Ok(Some(format!("degree ≤ {d}: center has dim {central}, span has {expected}")));
            }
        }
        Ok(None)
    })
}

/// `Σ_i ε_i t_i`, central but outside `⊕_j S(V)^{W_A} ϑ_j`.
pub fn extra_central_element(ctx: &AlgebraContext) -> Result<AlgebraElement> {
    let mut x = ctx.zero();
    for i in 1..=ctx.n() {
        x = &x + &ctx.multiply(&ctx.eps(i)?, &ctx.t(i)?)?;
    }
    Ok(x)
}

/// Deterministic characters for the module checks.
pub fn sample_characters(n: usize, count: usize, seed: u64) -> Vec<FullCharacter> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|c| {
            let gamma = (0..n)
                .map(|_| ratio(rng.gen_range(-6..=6), rng.gen_range(1..=2)))
                .collect();
            let values = (0..n).map(|j| if (c >> j) & 1 == 0 { 1 } else { -1 }).collect();
            FullCharacter::new(gamma, SignCharacter::new(values).expect("±1")).expect("same rank")
        })
        .collect()
}

/// `A·ρ₁(g) = ρ₂(g)·A` for every generator.
fn intertwines(a: &Matrix, m1: &MatrixModule, m2: &MatrixModule) -> bool {
    m1.generators()
        .into_iter()
        .zip(m2.generators())
        .all(|(g1, g2)| a * g1 == g2 * a)
}

/// `A e_g = e_{f(g)}` in the label basis of `m`.
fn label_map(m: &MatrixModule, f: impl Fn(&SignedPermutation) -> SignedPermutation) -> Matrix {
    let index = m.label_index();
    let d = m.dim();
    let mut a = Matrix::zeros(d, d);
    for (c, g) in m.labels().iter().enumerate() {
        a[(index[&f(g)], c)] = rat(1);
    }
    a
}

/// Duality, twists and the `σ`-isomorphism as intertwiner certificates.
pub fn check_isomorphisms(ctx: &AlgebraContext, chars: &[FullCharacter]) -> Result<Check> {
    Check::run("module isomorphisms", |cases| {
        let n = ctx.n();
        for chi in chars {
            let m = build_m(chi, ctx)?;
            let pairs: Vec<(String, MatrixModule, MatrixModule)> = vec![
                ("dual ≅ M(γ̃*)".into(), m.dual()?, build_m(&chi.dual(), ctx)?),
                ("double dual ≅ M".into(), m.dual()?.dual()?, m.clone()),
                ("δ-twist ≅ M(γ⊗(−μ))".into(), m.twist(&TwistBy::Delta)?, build_m(&chi.negate_mu(), ctx)?),
            ];
            for (label, a, b) in pairs {
                *cases += 1;
                if !intertwiner(&a, &b)?.is_isomorphism() {
                    return Ok(Some(format!("{label} fails for {chi}")));
                }
            }
            *cases += 1;
            let id = m.twist(&TwistBy::Int(SignedPermutation::identity(n)))?;
            if id.eps() != m.eps() || id.simple() != m.simple() || id.torus() != m.torus() {
                return Ok(Some(format!("Int(id)-twist differs from M for {chi}")));
            }
            for w in all_wa(n) {
                *cases += 1;
                let tw = m.twist(&TwistBy::Int(w.clone()))?;
                let a = label_map(&m, |g| w.compose(g).expect("same rank"));
                if !intertwines(&a, &m, &tw) {
                    return Ok(Some(format!("t_g ↦ t_(wg) is not M → Int({w})M for {chi}")));
                }
            }
            *cases += 1;
            let (_, sigma) = sigma_and_i(&chi.mu);
            let ms = build_m(&chi.act(&sigma)?, ctx)?;
            let a = label_map(&ms, |g| g.compose(&sigma).expect("same rank"));
            if !intertwines(&a, &ms, &m) || !intertwiner(&ms, &m)?.is_isomorphism() {
                return Ok(Some(format!("M(σγ̃) ≇ M(γ̃) for {chi}")));
            }
        }
        Ok(None)
    })
}

/// `t_w ⊗ v_ν ↦ t_w ⊗ v_ν̃` identifies `M_i(ν)` with `E_1(ν ⊗ μ_i)`.
pub fn check_graded_identification(ctx: &AlgebraContext, chars: &[FullCharacter]) -> Result<Check> {
    Check::run("graded Hecke identification", |cases| {
        let n = ctx.n();
        let c = ctx.k() * rat(2);
        for chi in chars {
            for i in 0..=n {
                *cases += 1;
                let nu = FullCharacter::new(chi.gamma.clone(), SignCharacter::standard(n, i))?;
                let e1 = e1_as_graded_hecke(&build_m(&nu, ctx)?)?;
                let mi = build_graded_hecke_ps(n, i, &c, &chi.gamma)?;
                let id = Matrix::identity(mi.dim());
                if !intertwines(&id, &mi, &e1) || !intertwiner(&mi, &e1)?.is_isomorphism() {
                    return Ok(Some(format!("M_{i}(ν) ≇ E_1 for ν = {chi}")));
                }
            }
        }
        Ok(None)
    })
}

/// `S(μ)`: transpositions of consecutive indices with equal `μ`-value.
fn stabilizer_generators(mu: &SignCharacter) -> Vec<SignedPermutation> {
    let n = mu.rank();
    let mut out = Vec::new();
    for sign in [1, -1] {
        let idx: Vec<usize> = (0..n).filter(|&j| mu.value(j) == sign).collect();
        for w in idx.windows(2) {
            out.push(SignedPermutation::transposition(n, w[0] + 1, w[1] + 1).expect("distinct"));
        }
    }
    out
}

/// Dimension law for submodules generated by weight vectors of `E_1`.
pub fn submodule_dimension_law(m: &MatrixModule) -> Result<Option<String>> {
    let chi = m
        .character()
        .ok_or_else(|| HeckeError::Hypothesis("module has no recorded character".into()))?
        .clone();
    let s = coset_reps(&chi.mu).len();
    let mut gens: Vec<Matrix> = m.eps().to_vec();
    for w in stabilizer_generators(&chi.mu) {
        gens.push(m.group_matrix(&w)?);
    }
    let gen_refs: Vec<&Matrix> = gens.iter().collect();
    let mu_values = chi.mu.values().to_vec();
    for entry in weight_table(m)?.entries {
        if entry.weight.torus != mu_values {
            continue;
        }
        let es = &entry.eigenspace;
        let mut tries = es.clone();
        for a in 0..es.len() {
            for b in a + 1..es.len() {
                tries.push(es[a].iter().zip(&es[b]).map(|(x, y)| x + y).collect());
            }
        }
        for v in tries {
            let whole = submodule_generated(m, &v).len();
            let local = crate::psmodule::generated_by(&gen_refs, &v).len();
            if whole != s * local {
                return Ok(Some(format!(
                    "{chi}: weight {:?} generates dim {whole}, E_1 closure {local}, s = {s}",
                    entry.weight.eps
                )));
            }
        }
    }
    Ok(None)
}

pub fn check_dimension_law(ctx: &AlgebraContext, chars: &[FullCharacter]) -> Result<Check> {
    Check::run("submodule dimension law", |cases| {
        for chi in chars {
            *cases += 1;
            if let Some(bad) = submodule_dimension_law(&build_m(chi, ctx)?)? {
                return Ok(Some(bad));
            }
        }
        Ok(None)
    })
}

/// Repeatedly quotients by found submodules; every simple quotient reached
/// must have all its weights among `{^wγ̃}`.
pub fn simple_quotient_weights(m: &MatrixModule) -> Result<Option<String>> {
    let chi = m
        .character()
        .ok_or_else(|| HeckeError::Hypothesis("module has no recorded character".into()))?
        .clone();
    let mut candidates = Vec::new();
    for w in all_wa(m.rank()) {
        let x = chi.act(&w)?;
        let weight = Weight {
            eps: x.gamma,
            torus: match m.kind() {
                crate::psmodule::ModuleKind::D => x.mu.restrict_to_u(),
                _ => x.mu.values().to_vec(),
            },
        };
        if !candidates.contains(&weight) {
            candidates.push(weight);
        }
    }
    let mut q = m.clone();
    while let Some(sub) = find_proper_submodule(&q)? {
        q = quotient(&q, &sub)?;
    }
    if !burnside_irreducible(&q) {
        // No weight-vector submodule was found yet the quotient is not simple;
        // nothing is claimed about such a quotient.
        return Ok(None);
    }
    match weight_table_with_candidates(&q, &candidates) {
        Ok(_) => Ok(None),
        Err(e) => Ok(Some(format!("{chi}: simple quotient of dim {}: {e}", q.dim()))),
    }
}

/// Isotypic blocks cover the module and `E_1` is stable under `ε` and `W_A(μ)`.
pub fn check_isotypic(ctx: &AlgebraContext, chars: &[FullCharacter]) -> Result<Check> {
    Check::run("isotypic decomposition", |cases| {
        for chi in chars {
            *cases += 1;
            let m = build_m(chi, ctx)?;
            let blocks = isotypic_decomposition(&m, &chi.mu)?;
            if blocks.len() != coset_reps(&chi.mu).len() {
                return Ok(Some(format!("{chi}: {} blocks", blocks.len())));
            }
            let e1 = crate::linalg::Echelon::from_vectors(m.dim(), blocks[0].basis.iter().cloned());
            let mut gens: Vec<Matrix> = m.eps().to_vec();
            for w in stabilizer_generators(&chi.mu) {
                gens.push(m.group_matrix(&w)?);
            }
            for g in &gens {
                if blocks[0].basis.iter().any(|b| !e1.contains(&g.mul_vec(b))) {
                    return Ok(Some(format!("{chi}: E_1 not stable")));
                }
            }
            let n_mod = build_n(chi, ctx)?;
            let fblocks = isotypic_decomposition(&n_mod, &chi.mu)?;
            let total: usize = fblocks.iter().map(|b| b.basis.len()).sum();
            if total != n_mod.dim() {
                return Ok(Some(format!("{chi}: type-D blocks do not cover")));
            }
        }
        Ok(None)
    })
}

/// The even-rank comparisons: weight multisets of `F_1` and the submodule `V`.
pub fn check_even_rank(ctx: &AlgebraContext) -> Result<Check> {
    Check::run("even-rank F_1 block", |cases| {
        let n = ctx.n();
        if n % 2 != 0 {
            return Ok(None);
        }
        let m = n / 2;
        let mut gammas: Vec<Vec<Rational>> = vec![vec![rat(2); n], (0..n).map(|j| rat(j as i64 * 5)).collect()];
        let repeated: Vec<Rational> = (0..n).map(|j| rat(((j % m) * 4) as i64 + 1)).collect();
        gammas.push(repeated.clone());
        for g in &gammas {
            *cases += 1;
            if !f1_weights(g, ctx.k())?.holds() {
                return Ok(Some(format!("F_1 weights differ from M(γ) ⊕ M(τγ) for {g:?}")));
            }
        }
        for g in [vec![rat(2); n], repeated] {
            *cases += 1;
            let a = assertion48_submodule(&g, ctx.k())?;
            if !a.closure_verified || a.v_dim == 0 || a.v_dim >= a.f1_dim {
                return Ok(Some(format!("submodule V not certified for {g:?}")));
            }
        }
        Ok(None)
    })
}

/// Points where `N(γ⊗μ)` and `N(γ⊗(−μ))` are not isomorphic. Both lifts
/// restrict to the same character of `U`.
pub fn lift_mismatches(points: &[FullCharacter], ctx: &AlgebraContext) -> Result<Vec<String>> {
    let out: Result<Vec<Option<String>>> = points
        .par_iter()
        .map(|chi| {
            let a = build_n(chi, ctx)?;
            let b = build_n(&chi.negate_mu(), ctx)?;
            let same = a.eps() == b.eps() && a.simple() == b.simple() && a.torus() == b.torus();
            Ok((!same && !intertwiner(&a, &b)?.is_isomorphism()).then(|| chi.to_string()))
        })
        .collect();
    Ok(out?.into_iter().flatten().collect())
}

/// Criterion against the Burnside oracle for one point; `None` on agreement.
pub fn oracle_disagreement(chi: &FullCharacter, ctx: &AlgebraContext, type_d: bool) -> Result<Option<String>> {
    let (crit, module) = if type_d {
        (criterion_d(&chi.gamma, &chi.mu, ctx.k())?, build_n(chi, ctx)?)
    } else {
        (criterion_b(&chi.gamma, &chi.mu, ctx.k())?, build_m(chi, ctx)?)
    };
    let oracle = burnside_irreducible(&module);
    Ok((crit.verdict.is_simple() != oracle).then(|| {
        format!(
            "{chi} ({}): criterion {}, oracle {}",
            if type_d { "D" } else { "B" },
            crit.verdict,
            if oracle { "simple" } else { "not simple" }
        )
    }))
}

/// Runs `oracle_disagreement` over a list of points in parallel.
pub fn sweep(points: &[FullCharacter], ctx: &AlgebraContext, type_d: bool) -> Result<Vec<String>> {
    let out: Result<Vec<Option<String>>> = points
        .par_iter()
        .map(|chi| oracle_disagreement(chi, ctx, type_d))
        .collect();
    Ok(out?.into_iter().flatten().collect())
}

pub fn check_oracle(ctx: &AlgebraContext, chars: &[FullCharacter]) -> Result<Check> {
    Check::run("criterion agrees with oracle", |cases| {
        *cases = 2 * chars.len();
        let mut bad = sweep(chars, ctx, false)?;
        bad.extend(sweep(chars, ctx, true)?);
        Ok(bad.into_iter().next())
    })
}

/// The full `verify` suite.
pub fn run_verify(cfg: &SuiteConfig) -> Result<SuiteReport> {
    if cfg.n == 0 {
        return Err(HeckeError::IndexOutOfRange { index: 0, max: MAX_RANK });
    }
    if cfg.n > MAX_RANK {
        return Err(HeckeError::ResourceLimit(format!("rank {} exceeds {MAX_RANK}", cfg.n)));
    }
    if cfg.degree > 6 {
        return Err(HeckeError::ResourceLimit(format!("degree bound {} exceeds 6", cfg.degree)));
    }
    let ctx = AlgebraContext::new(cfg.n, cfg.k.clone())?;
    let chars = sample_characters(cfg.n, if cfg.n <= 3 { 5 } else { 2 }, cfg.seed);
    let params = DunklParams::new(cfg.n, cfg.k.clone(), cfg.k_c.clone());
    let mut reducible = chars.clone();
    // Points on the reducibility walls exercise the quotient checks.
    let mut shifted = chars[0].clone();
    shifted.mu = SignCharacter::trivial(cfg.n);
    if cfg.n >= 2 {
        shifted.gamma[1] = &shifted.gamma[0] - &(cfg.k.clone() * rat(2));
    }
    reducible.push(shifted);
    let samples = cfg.samples;
    let checks = vec![
        check_relations(&ctx, samples, cfg.seed)?,
        check_commutation_formula(&ctx)?,
        check_divided_differences(&ctx, -1, samples, cfg.degree.max(1), cfg.seed)?,
        check_dunkl(&params, cfg.degree)?,
        check_centers(&ctx)?,
        check_isomorphisms(&ctx, &chars)?,
        check_graded_identification(&ctx, &chars)?,
        check_isotypic(&ctx, &chars)?,
        check_dimension_law(&ctx, &reducible)?,
        Check::run("simple quotients", |cases| {
            for chi in &reducible {
                *cases += 1;
                if let Some(bad) = simple_quotient_weights(&build_m(chi, &ctx)?)? {
                    return Ok(Some(bad));
                }
            }
            Ok(None)
        })?,
        check_even_rank(&ctx)?,
        check_oracle(&ctx, &reducible)?,
    ];
    Ok(SuiteReport {
        n: cfg.n,
        k: cfg.k.clone(),
        checks,
    })
}

/// Unit vector helper re-exported for callers assembling weight vectors.
pub fn basis_vector(d: usize, i: usize) -> Vec<Rational> {
    unit_vector(d, i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two_suite_passes() {
        let report = run_verify(&SuiteConfig::new(2, rat(1))).unwrap();
        for c in &report.checks {
            assert!(c.passed, "{}: {:?}", c.name, c.counterexample);
        }
    }

    #[test]
    fn printed_sign_fails() {
        let ctx = AlgebraContext::new(2, rat(1)).unwrap();
        let c = check_divided_differences(&ctx, 1, 3, 2, 1).unwrap();
        assert!(!c.passed);
    }

    #[test]
    fn center_is_larger_than_theta_span() {
        let ctx = AlgebraContext::new(2, rat(1)).unwrap();
        let x = extra_central_element(&ctx).unwrap();
        assert!(ctx.is_central_b(&x).unwrap());
        assert_eq!(ctx.center_dimension_probe(1).unwrap(), (7, 6));
        assert!(!check_center_dimension(&ctx, 2).unwrap().passed);
        assert!(check_center_dimension(&ctx, 0).unwrap().passed);
    }

    #[test]
    fn lifts_agree_in_rank_two() {
        let ctx = AlgebraContext::new(2, rat(1)).unwrap();
        let pts: Vec<FullCharacter> = sample_characters(2, 4, 5)
            .into_iter()
            .chain([FullCharacter::new(vec![rat(1), rat(1)], "+-".parse().unwrap()).unwrap()])
            .collect();
        assert!(lift_mismatches(&pts, &ctx).unwrap().is_empty());
    }

    #[test]
    fn limits() {
        assert!(matches!(
            run_verify(&SuiteConfig::new(5, rat(1))),
            Err(HeckeError::ResourceLimit(_))
        ));
        assert_eq!(
            run_verify(&SuiteConfig::new(2, rat(0))).unwrap_err(),
            HeckeError::ZeroMultiplicity
        );
    }
}
