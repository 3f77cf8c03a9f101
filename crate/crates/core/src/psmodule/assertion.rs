//! The even-rank comparison between `F_1(γ̃)`, `M(γ)` and `M(τγ)` for
//! `μ = μ_m`, `n = 2m`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::intertwiner::intertwiner;
use super::weights::generalized_weight_multiset;
use super::{block_group, build_graded_hecke_ps, build_n, FullCharacter, MatrixModule, ModuleKind};
use crate::algebra::AlgebraContext;
use crate::error::{HeckeError, Result};
use crate::linalg::{Echelon, Matrix};
use crate::rational::{rat, rational_sqrt, Rational};
use crate::weylgroup::{SignCharacter, SignedPermutation};

/// How the Schur scalar `λ = f²` was handled.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum SchurBranch {
    /// `λ = z²` with `z` rational; `f` was replaced by `f / z`.
    Square {
        #[serde(with = "crate::rational::serde_rational")]
        z: Rational,
    },
    /// `λ` has no rational square root. `V` is defined over `ℚ(√λ)`; it is
    /// certified through the rational identities `f² = λ` and equivariance.
    NonSquare {
        #[serde(with = "crate::rational::serde_rational")]
        lambda: Rational,
    },
}

#[derive(Clone, Debug)]
pub struct Assertion48 {
    pub m: usize,
    pub branch: SchurBranch,
    /// The (rescaled) map `f` on `E_1` coordinates.
    pub f: Matrix,
    /// Basis of `V` in module coordinates; empty on the non-square branch.
    pub basis: Vec<Vec<Rational>>,
    pub f1_dim: usize,
    pub v_dim: usize,
    /// Every generator maps `V` into `V`, checked exactly.
    pub closure_verified: bool,
}

/// `τγ`: the two coordinate blocks of length `m` swapped.
pub fn tau(gamma: &[Rational]) -> Vec<Rational> {
    let m = gamma.len() / 2;
    gamma[m..].iter().chain(&gamma[..m]).cloned().collect()
}

fn split_rank(gamma: &[Rational]) -> Result<usize> {
    let n = gamma.len();
    if n == 0 || n % 2 != 0 {
        return Err(HeckeError::Hypothesis(format!("rank {n} is not even")));
    }
    Ok(n / 2)
}

fn restricted(
    kind: ModuleKind,
    big: &MatrixModule,
    idx: &[usize],
    labels: Vec<SignedPermutation>,
    conj: Option<&Matrix>,
    skip: usize,
) -> Result<MatrixModule> {
    let cut = |a: &Matrix| match conj {
        Some(p) => (&(p * a) * p).submatrix(idx, idx),
        None => a.submatrix(idx, idx),
    };
    MatrixModule::from_parts(
        kind,
        big.rank(),
        big.param() * rat(2),
        labels,
        big.eps().iter().map(cut).collect(),
        big.simple()
            .iter()
            .filter(|(j, _)| *j != skip)
            .map(|(j, s)| (*j, cut(s)))
            .collect(),
        Vec::new(),
        None,
    )
}

/// Builds the proper submodule `V = {x + t_{w_0}.f(x)}` of `F_1(γ̃)`.
///
/// Fails with [`HeckeError::Hypothesis`] unless `M(γ) ≅ M(τγ)` and `E_1` is
/// simple (so that `f²` is a scalar).
pub fn assertion48_submodule(gamma: &[Rational], k: &Rational) -> Result<Assertion48> {
    let m = split_rank(gamma)?;
    let n = 2 * m;
    let ctx = AlgebraContext::new(n, k.clone())?;
    let c = k * rat(2);
    let tg = tau(gamma);
    let mg = build_graded_hecke_ps(n, m, &c, gamma)?;
    let mt = build_graded_hecke_ps(n, m, &c, &tg)?;
    if !intertwiner(&mg, &mt)?.is_isomorphism() {
        return Err(HeckeError::Hypothesis("M(γ) and M(τγ) are not isomorphic".into()));
    }

    let chi = FullCharacter::new(gamma.to_vec(), SignCharacter::standard(n, m))?;
    let big = build_n(&chi, &ctx)?;
    let d = big.dim();
    let index = big.label_index();
    let w0 = SignedPermutation::longest_a(n);
    let p = big.group_matrix(&w0)?;
    let labels = block_group(n, m);
    let e1: Vec<usize> = labels.iter().map(|w| index[w]).collect();
    let kind = ModuleKind::GradedHecke { i: m };
    let plain = restricted(kind, &big, &e1, labels.clone(), None, m)?;
    let twisted = restricted(kind, &big, &e1, labels, Some(&p), m)?;
    let f = intertwiner(&plain, &twisted)?
        .isomorphism()
        .cloned()
        .ok_or_else(|| HeckeError::Hypothesis("no isomorphism E_1 → Int(w_0)E_1".into()))?;
    let ff = &f * &f;
    let lambda = ff[(0, 0)].clone();
    if ff != Matrix::scalar(ff.rows(), &lambda) {
        return Err(HeckeError::Hypothesis("f² is not scalar; E_1 is not simple".into()));
    }

    let mut gens: Vec<&Matrix> = big.eps().iter().collect();
    gens.extend(big.simple().iter().filter(|(j, _)| *j != m).map(|(_, s)| s));
    gens.extend(big.torus());
    gens.push(&p);
    let embed = |x: &[Rational]| {
        let mut v = vec![rat(0); d];
        for (i, &r) in e1.iter().enumerate() {
            v[r] = x[i].clone();
        }
        v
    };
    let e1_span = Echelon::from_vectors(d, (0..e1.len()).map(|i| embed(&crate::linalg::unit_vector(e1.len(), i))));
    let p_e1: Vec<Vec<Rational>> = e1_span.basis().iter().map(|v| p.mul_vec(v)).collect();
    let f1 = Echelon::from_vectors(d, e1_span.basis().iter().cloned().chain(p_e1.iter().cloned()));

    let (branch, f, basis, closure) = match rational_sqrt(&lambda) {
        Some(z) => {
            let g = f.scale(&(rat(1) / &z));
            let basis: Vec<Vec<Rational>> = (0..e1.len())
                .map(|i| {
                    let x = crate::linalg::unit_vector(e1.len(), i);
                    let fx = p.mul_vec(&embed(&g.mul_vec(&x)));
                    embed(&x).iter().zip(&fx).map(|(a, b)| a + b).collect()
                })
                .collect();
            let v = Echelon::from_vectors(d, basis.iter().cloned());
            let closed = v.rank() == e1.len()
                && basis.iter().all(|b| f1.contains(b))
                && gens.iter().all(|a| basis.iter().all(|b| v.contains(&a.mul_vec(b))));
            (SchurBranch::Square { z }, g, v.basis().to_vec(), closed)
        }
        None => {
            // E_1 and P·E_1 are stable under the non-P generators, P swaps
            // them, f intertwines, and f² = λ: together these make V stable.
            let stable = gens[..gens.len() - 1].iter().all(|a| {
                e1_span.basis().iter().all(|b| e1_span.contains(&a.mul_vec(b)))
                    && p_e1.iter().all(|b| {
                        Echelon::from_vectors(d, p_e1.iter().cloned()).contains(&a.mul_vec(b))
                    })
            });
            (SchurBranch::NonSquare { lambda }, f, Vec::new(), stable)
        }
    };
    Ok(Assertion48 {
        m,
        branch,
        f,
        v_dim: e1.len(),
        basis,
        f1_dim: f1.rank(),
        closure_verified: closure,
    })
}

/// Generalized `ε`-weight multisets of `F_1(γ̃)` and of `M(γ) ⊕ M(τγ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct F1Weights {
    pub f1: BTreeMap<Vec<Rational>, usize>,
    pub expected: BTreeMap<Vec<Rational>, usize>,
}

impl F1Weights {
    pub fn holds(&self) -> bool {
        self.f1 == self.expected
    }
}

pub fn f1_weights(gamma: &[Rational], k: &Rational) -> Result<F1Weights> {
    let m = split_rank(gamma)?;
    let n = 2 * m;
    let ctx = AlgebraContext::new(n, k.clone())?;
    let chi = FullCharacter::new(gamma.to_vec(), SignCharacter::standard(n, m))?;
    let big = build_n(&chi, &ctx)?;
    let index = big.label_index();
    let w0 = SignedPermutation::longest_a(n);
    let mut idx: Vec<usize> = block_group(n, m)
        .iter()
        .flat_map(|w| [index[w], index[&w0.compose(w).expect("same rank")]])
        .collect();
    idx.sort_unstable();
    let f1: Vec<Matrix> = big.eps().iter().map(|e| e.submatrix(&idx, &idx)).collect();
    let c = k * rat(2);
    let mut expected = BTreeMap::new();
    for nu in [gamma.to_vec(), tau(gamma)] {
        let g = build_graded_hecke_ps(n, m, &c, &nu)?;
        for (w, mult) in generalized_weight_multiset(g.eps()) {
            *expected.entry(w).or_insert(0) += mult;
        }
    }
    Ok(F1Weights {
        f1: generalized_weight_multiset(&f1),
        expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn diagonal_rank_two() {
        for c in [rat(0), rat(3), ratio(-1, 2)] {
            let a = assertion48_submodule(&[c.clone(), c], &rat(1)).unwrap();
            assert_eq!((a.f1_dim, a.v_dim), (2, 1));
            assert!(a.closure_verified);
            assert!(matches!(a.branch, SchurBranch::Square { .. }));
        }
    }

    #[test]
    fn precondition_fails_off_diagonal() {
        assert!(matches!(
            assertion48_submodule(&[rat(1), rat(0)], &rat(1)),
            Err(HeckeError::Hypothesis(_))
        ));
        assert!(matches!(assertion48_submodule(&[rat(1)], &rat(1)), Err(HeckeError::Hypothesis(_))));
    }

    #[test]
    fn rank_four_submodule() {
        let g = [5, 1, 5, 1].map(rat);
        let a = assertion48_submodule(&g, &rat(1)).unwrap();
        assert_eq!((a.f1_dim, a.v_dim), (8, 4));
        assert!(a.closure_verified);
    }

    #[test]
    fn weights_of_f1() {
        for g in [[rat(2), rat(2)], [rat(1), rat(0)]] {
            assert!(f1_weights(&g, &rat(1)).unwrap().holds());
        }
        assert!(f1_weights(&[5, 1, 1, 5].map(rat), &rat(1)).unwrap().holds());
        assert!(f1_weights(&[3, 1, 5, 7].map(rat), &ratio(1, 2)).unwrap().holds());
    }
}
