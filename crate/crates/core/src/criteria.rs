//! Closed-form simplicity tests for `M(γ̃)` and `N(γ̄)`.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{HeckeError, Result};
use crate::rational::{format_rational, Rational};
use crate::weylgroup::{sigma_and_i, SignCharacter, SignedPermutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Simple,
    NotSimple,
}

impl Verdict {
    pub fn is_simple(self) -> bool {
        self == Verdict::Simple
    }

    fn from_simple(simple: bool) -> Self {
        if simple {
            Verdict::Simple
        } else {
            Verdict::NotSimple
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Simple => "simple",
            Verdict::NotSimple => "not simple",
        })
    }
}

/// Whether `W_A(μ) = W_A(μ̄)` (case a) or not (case b, `n = 2m`, `i = m`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum StabilizerCase {
    A,
    B { m: usize },
}

pub fn stabilizer_case(mu: &SignCharacter) -> StabilizerCase {
    let n = mu.rank();
    if n % 2 == 0 && n > 0 && mu.plus_count() == n / 2 {
        StabilizerCase::B { m: n / 2 }
    } else {
        StabilizerCase::A
    }
}

/// A root `α_{p,q}` (1-based) of `R_i^+` with `ν(α) = ±2k`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PRoot {
    pub p: usize,
    pub q: usize,
    #[serde(with = "crate::rational::serde_rational")]
    pub value: Rational,
}

impl fmt::Display for PRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "α_{{{},{}}} (value {})", self.p, self.q, format_rational(&self.value))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionReport {
    pub verdict: Verdict,
    pub i: usize,
    #[serde(serialize_with = "display")]
    pub sigma: SignedPermutation,
    #[serde(with = "crate::rational::serde_rational::vec")]
    pub sigma_gamma: Vec<Rational>,
    pub p_set: Vec<PRoot>,
    pub case: Option<StabilizerCase>,
    #[serde(serialize_with = "opt_rationals")]
    pub tau_gamma: Option<Vec<Rational>>,
    #[serde(serialize_with = "opt_display")]
    pub orbit_hit: Option<SignedPermutation>,
}

fn display<S: serde::Serializer>(w: &SignedPermutation, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(w)
}

fn opt_display<S: serde::Serializer>(w: &Option<SignedPermutation>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match w {
        Some(w) => s.collect_str(w),
        None => s.serialize_none(),
    }
}

fn opt_rationals<S: serde::Serializer>(v: &Option<Vec<Rational>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_seq(v.iter().map(format_rational)),
        None => s.serialize_none(),
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict: {}", self.verdict)?;
        writeln!(f, "i = {}, sigma = {}", self.i, self.sigma)?;
        let sg: Vec<String> = self.sigma_gamma.iter().map(format_rational).collect();
        writeln!(f, "sigma.gamma = ({})", sg.join(","))?;
        if self.p_set.is_empty() {
            writeln!(f, "P = {{}}")?;
        } else {
            let ps: Vec<String> = self.p_set.iter().map(ToString::to_string).collect();
            writeln!(f, "P = {{{}}}", ps.join(", "))?;
        }
        if let Some(StabilizerCase::B { m }) = self.case {
            writeln!(f, "case b, m = {m}")?;
        } else if self.case.is_some() {
            writeln!(f, "case a")?;
        }
        if let Some(t) = &self.tau_gamma {
            let ts: Vec<String> = t.iter().map(format_rational).collect();
            writeln!(f, "tau.gamma = ({})", ts.join(","))?;
        }
        if let Some(w) = &self.orbit_hit {
            writeln!(f, "orbit hit: {w}")?;
        }
        Ok(())
    }
}

fn check(gamma: &[Rational], mu: &SignCharacter, k: &Rational) -> Result<()> {
    if k.is_zero() {
        return Err(HeckeError::ZeroMultiplicity);
    }
    if gamma.len() != mu.rank() {
        return Err(HeckeError::SizeMismatch {
            expected: mu.rank(),
            found: gamma.len(),
        });
    }
    Ok(())
}

/// `^σγ` together with `P_i(^σγ)`.
fn p_set(gamma: &[Rational], mu: &SignCharacter, k: &Rational) -> (usize, SignedPermutation, Vec<Rational>, Vec<PRoot>) {
    let (i, sigma) = sigma_and_i(mu);
    let sg = sigma.act_on_vector(gamma).expect("σ has the rank of μ");
    let n = gamma.len();
    let two_k = k + k;
    let neg = -two_k.clone();
    let mut ps = Vec::new();
    for p in 0..n {
        for q in p + 1..n {
            if (p < i) != (q < i) {
                continue;
            }
            let v = &sg[p] - &sg[q];
            if v == two_k || v == neg {
                ps.push(PRoot {
                    p: p + 1,
                    q: q + 1,
                    value: v,
                });
            }
        }
    }
    (i, sigma, sg, ps)
}

/// Simplicity of the `ℍ_B`-module `M(γ ⊗ μ)`.
pub fn criterion_b(gamma: &[Rational], mu: &SignCharacter, k: &Rational) -> Result<CriterionReport> {
    check(gamma, mu, k)?;
    let (i, sigma, sg, ps) = p_set(gamma, mu, k);
    Ok(CriterionReport {
        verdict: Verdict::from_simple(ps.is_empty()),
        i,
        sigma,
        sigma_gamma: sg,
        p_set: ps,
        case: None,
        tau_gamma: None,
        orbit_hit: None,
    })
}

/// `w ∈ W_m` with `^w ν = target`, if the blocks agree as multisets.
fn block_witness(nu: &[Rational], target: &[Rational], m: usize) -> Option<SignedPermutation> {
    let n = nu.len();
    // ^wν_p = ν_{w⁻¹p}; build w⁻¹ block by block.
    let mut inv = vec![usize::MAX; n];
    for (lo, hi) in [(0, m), (m, n)] {
        let mut used = vec![false; n];
        for p in lo..hi {
            let q = (lo..hi).find(|&q| !used[q] && nu[q] == target[p])?;
            used[q] = true;
            inv[p] = q;
        }
    }
    Some(SignedPermutation::from_perm(inv).ok()?.inverse())
}

/// Simplicity of the `ℍ_D`-module `N(γ ⊗ μ̄)`, with `μ̄` given by a lift `μ`.
pub fn criterion_d(gamma: &[Rational], mu: &SignCharacter, k: &Rational) -> Result<CriterionReport> {
    check(gamma, mu, k)?;
    let (i, sigma, sg, ps) = p_set(gamma, mu, k);
    let case = stabilizer_case(mu);
    let (tau_gamma, orbit_hit) = match case {
        StabilizerCase::A => (None, None),
        StabilizerCase::B { m } => {
            // τ is applied to ^σγ, which reduces to τγ when μ = μ_m.
            let tg: Vec<Rational> = sg[m..].iter().chain(&sg[..m]).cloned().collect();
            let hit = block_witness(&sg, &tg, m);
            (Some(tg), hit)
        }
    };
    Ok(CriterionReport {
        verdict: Verdict::from_simple(ps.is_empty() && orbit_hit.is_none()),
        i,
        sigma,
        sigma_gamma: sg,
        p_set: ps,
        case: Some(case),
        tau_gamma,
        orbit_hit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn g(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn mu(s: &str) -> SignCharacter {
        s.parse().unwrap()
    }

    #[test]
    fn type_b_examples() {
        assert!(criterion_b(&g(&[1, 0]), &mu("+-"), &rat(1)).unwrap().verdict.is_simple());
        assert!(criterion_b(&g(&[2, 2]), &mu("+-"), &rat(1)).unwrap().verdict.is_simple());
        let r = criterion_b(&g(&[2, 0]), &mu("++"), &rat(1)).unwrap();
        assert_eq!(r.verdict, Verdict::NotSimple);
        assert_eq!((r.p_set[0].p, r.p_set[0].q), (1, 2));
        let r = criterion_b(&g(&[5, 0, 3]), &mu("+-+"), &rat(1)).unwrap();
        assert_eq!(r.verdict, Verdict::NotSimple);
        assert_eq!(r.sigma_gamma, g(&[5, 3, 0]));
        assert!(criterion_b(&g(&[1, 0]), &mu("++"), &ratio(1, 2)).unwrap().verdict == Verdict::NotSimple);
        assert_eq!(criterion_b(&g(&[1, 0]), &mu("++"), &rat(0)), Err(HeckeError::ZeroMultiplicity));
    }

    #[test]
    fn stabilizer_cases() {
        assert_eq!(stabilizer_case(&mu("+-+")), StabilizerCase::A);
        assert_eq!(stabilizer_case(&mu("+-")), StabilizerCase::B { m: 1 });
        assert_eq!(stabilizer_case(&mu("+++-")), StabilizerCase::A);
        assert_eq!(stabilizer_case(&mu("-+-+")), StabilizerCase::B { m: 2 });
    }

    #[test]
    fn type_d_examples() {
        let r = criterion_d(&g(&[1, 1]), &mu("+-"), &rat(1)).unwrap();
        assert_eq!(r.verdict, Verdict::NotSimple);
        assert!(r.orbit_hit.is_some());
        assert!(criterion_d(&g(&[1, 0]), &mu("+-"), &rat(1)).unwrap().verdict.is_simple());
        assert!(!criterion_d(&g(&[3, 1]), &mu("++"), &rat(1)).unwrap().verdict.is_simple());
        let r = criterion_d(&g(&[5, 1, 5, 1]), &mu("++--"), &rat(1)).unwrap();
        assert!(r.p_set.is_empty());
        assert_eq!(r.verdict, Verdict::NotSimple);
        let r = criterion_d(&g(&[5, 1, 1, 5]), &mu("++--"), &rat(1)).unwrap();
        assert!(r.p_set.is_empty() && r.orbit_hit.is_some());
        let r = criterion_d(&g(&[3, 1, 5, 7]), &mu("++--"), &rat(1)).unwrap();
        assert!(r.orbit_hit.is_none() && !r.p_set.is_empty());
    }

    #[test]
    fn witness_moves_sigma_gamma_to_tau_gamma() {
        let gamma = g(&[1, 2, 2, 1]);
        let r = criterion_d(&gamma, &mu("+-+-"), &ratio(7, 3)).unwrap();
        let w = r.orbit_hit.unwrap();
        assert_eq!(w.act_on_vector(&r.sigma_gamma).unwrap(), r.tau_gamma.unwrap());
    }
}
