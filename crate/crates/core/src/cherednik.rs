//! Dunkl operators of type `B_n` on `𝒫 = ℚ[z_1, …, z_n]` and Kakei's `D_j`.
//!
//! Operators are procedures on polynomials; identities are checked on every
//! monomial up to a degree bound. The pairing identifies `e_i ↔ ε_i ↔ z_i`
//! orthonormally.

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::AlgebraElement;
use crate::error::{HeckeError, Result};
use crate::linalg::Matrix;
use crate::polynomial::{exponents_up_to, Poly};
use crate::rational::{rat, Rational};
use crate::weylgroup::{all_wb, positive_roots_b, Root, RootKind, SignedPermutation};

pub type ZPolynomial = Poly;

/// Multiplicities `k̄ = (k, k_c)` on long and short roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DunklParams {
    pub n: usize,
    pub k: Rational,
    pub k_c: Rational,
}

impl DunklParams {
    pub fn new(n: usize, k: Rational, k_c: Rational) -> Self {
        DunklParams { n, k, k_c }
    }

    /// `k̄_α`.
    pub fn multiplicity(&self, alpha: &Root) -> &Rational {
        match alpha.kind {
            RootKind::Short { .. } => &self.k_c,
            _ => &self.k,
        }
    }

    /// The specialization `k̄_0 = (k, 0)`.
    pub fn type_d(&self) -> DunklParams {
        DunklParams::new(self.n, self.k.clone(), Rational::zero())
    }
}

/// `t_w p`.
pub fn reflect(w: &SignedPermutation, p: &ZPolynomial) -> ZPolynomial {
    p.act(w)
}

fn root_form(alpha: &Root, n: usize) -> Vec<Rational> {
    alpha.coordinates(n).into_iter().map(rat).collect()
}

/// `(p − s_α p) / α`, exact.
pub fn root_difference(alpha: &Root, p: &ZPolynomial) -> Result<ZPolynomial> {
    let n = p.rank();
    let diff = p - &p.act(&alpha.reflection(n));
    diff.divide_by_linear(&root_form(alpha, n))
}

/// `T_y p` for an arbitrary `y = Σ y_i e_i`.
///
/// The half-sum over `R_B` equals the sum over `R_B^+`, since `α ↦ −α`
/// leaves each summand unchanged.
pub fn dunkl_vector(y: &[Rational], p: &ZPolynomial, params: &DunklParams) -> Result<ZPolynomial> {
    let n = params.n;
    let mut out = Poly::zero(n);
    for (i, yi) in y.iter().enumerate() {
        out.add_scaled(&p.derivative(i), yi);
    }
    for alpha in positive_roots_b(n) {
        let coords = alpha.coordinates(n);
        let pairing: Rational = coords.iter().zip(y).map(|(&a, yi)| rat(a) * yi).sum();
        let kbar = params.multiplicity(&alpha);
        if pairing.is_zero() || kbar.is_zero() {
            continue;
        }
        out.add_scaled(&root_difference(&alpha, p)?, &(kbar * pairing));
    }
    Ok(out)
}

/// `T_{e_y} p`, 1-based `y`.
pub fn dunkl(y: usize, p: &ZPolynomial, params: &DunklParams) -> Result<ZPolynomial> {
    check_index(y, params.n)?;
    let mut e = vec![Rational::zero(); params.n];
    e[y - 1] = Rational::one();
    dunkl_vector(&e, p, params)
}

/// Type-`D` Dunkl operator `∂_y + (k/2) Σ_{α∈R_D} ⟨α,y⟩/α (1 − s_α)`, summed over
/// both signs of every root.
pub fn dunkl_type_d(y: usize, p: &ZPolynomial, n: usize, k: &Rational) -> Result<ZPolynomial> {
    check_index(y, n)?;
    let mut out = p.derivative(y - 1);
    let half = Rational::new(1.into(), 2.into());
    for a in 0..n {
        for b in a + 1..n {
            for base in [Root::a(a, b), Root::long_sum(a, b)] {
                for sign in [1i8, -1] {
                    let alpha = Root { sign, ..base };
                    let pairing = alpha.coordinates(n)[y - 1];
                    if pairing == 0 {
                        continue;
                    }
                    let term = root_difference(&alpha, p)?;
                    out.add_scaled(&term, &(k * &half * rat(pairing)));
                }
            }
        }
    }
    Ok(out)
}

/// `D_j p = z_j T_{e_j} p + Σ_{i<j} k (1 + t_i t_j) s_{i,j} p`, 1-based `j`.
pub fn kakei_d(j: usize, p: &ZPolynomial, params: &DunklParams) -> Result<ZPolynomial> {
    let n = params.n;
    let tp = dunkl(j, p, params)?;
    let mut out = &Poly::var(n, j - 1) * &tp;
    for i in 1..j {
        let s = SignedPermutation::transposition(n, i, j)?;
        let sp = p.act(&s);
        let tt = t_pair(n, i - 1, j - 1);
        out.add_scaled(&sp, &params.k);
        out.add_scaled(&sp.act(&tt), &params.k);
    }
    Ok(out)
}

fn t_pair(n: usize, a: usize, b: usize) -> SignedPermutation {
    let mut signs = vec![1; n];
    signs[a] = -1;
    signs[b] = -1;
    SignedPermutation::torus(signs).expect("valid")
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        Err(HeckeError::IndexOutOfRange { index: i, max: n })
    } else {
        Ok(())
    }
}

/// `Φ(a) p` with `Φ(ε_j) = D_j`, `Φ(t_w) = t_w`.
pub fn apply_element(a: &AlgebraElement, p: &ZPolynomial, params: &DunklParams) -> Result<ZPolynomial> {
    let n = params.n;
    let mut out = Poly::zero(n);
    for (e, w, c) in a.terms() {
        let mut q = p.act(w);
        for (j, &m) in e.iter().enumerate().rev() {
            for _ in 0..m {
                q = kakei_d(j + 1, &q, params)?;
            }
        }
        out.add_scaled(&q, c);
    }
    Ok(out)
}

fn monomial_basis(n: usize, bound: u32) -> Vec<ZPolynomial> {
    exponents_up_to(n, bound)
        .into_iter()
        .map(|e| Poly::monomial(e, Rational::one()))
        .collect()
}

/// Checks an operator identity on all monomials of degree `≤ bound`; returns
/// the first monomial where it fails.
fn first_failure<F>(n: usize, bound: u32, f: F) -> Result<Option<ZPolynomial>>
where
    F: Fn(&ZPolynomial) -> Result<bool> + Sync,
{
    let basis = monomial_basis(n, bound);
    let results: Vec<Result<bool>> = basis.par_iter().map(&f).collect();
    for (p, r) in basis.into_iter().zip(results) {
        if !r? {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// `[T_{e_i}, T_{e_j}] = 0` on monomials of degree `≤ bound`.
pub fn verify_dunkl_commute(i: usize, j: usize, params: &DunklParams, bound: u32) -> Result<bool> {
    Ok(first_failure(params.n, bound, |p| {
        let a = dunkl(i, &dunkl(j, p, params)?, params)?;
        let b = dunkl(j, &dunkl(i, p, params)?, params)?;
        Ok(a == b)
    })?
    .is_none())
}

/// `[T_y, x] = ⟨y,x⟩ + Σ_{α∈R_B^+} k̄_α ⟨y,α⟩⟨α^∨,x⟩ t_{s_α}` with `y = e_y`, `x = z_x`.
pub fn verify_cherednik_relation1(y: usize, x: usize, params: &DunklParams, bound: u32) -> Result<bool> {
    let n = params.n;
    check_index(y, n)?;
    check_index(x, n)?;
    let zx = Poly::var(n, x - 1);
    Ok(first_failure(n, bound, |p| {
        let lhs = &dunkl(y, &(&zx * p), params)? - &(&zx * &dunkl(y, p, params)?);
        let mut rhs = if x == y { p.clone() } else { Poly::zero(n) };
        for alpha in positive_roots_b(n) {
            let ya = alpha.coordinates(n)[y - 1];
            let ax = alpha.coroot_pairing(x - 1, n);
            if ya == 0 || ax == 0 {
                continue;
            }
            let c = params.multiplicity(&alpha) * rat(ya * ax);
            rhs.add_scaled(&p.act(&alpha.reflection(n)), &c);
        }
        Ok(lhs == rhs)
    })?
    .is_none())
}

/// `t_w z_x t_{w^{-1}} = w(z_x)` as operators.
pub fn verify_cherednik_relation2(w: &SignedPermutation, x: usize, bound: u32) -> Result<bool> {
    let n = w.rank();
    check_index(x, n)?;
    let zx = Poly::var(n, x - 1);
    let winv = w.inverse();
    let wx = zx.act(w);
    Ok(first_failure(n, bound, |p| {
        let lhs = (&zx * &p.act(&winv)).act(w);
        Ok(lhs == &wx * p)
    })?
    .is_none())
}

/// `t_w T_y t_{w^{-1}} = T_{w(y)}` as operators.
pub fn verify_cherednik_relation3(
    w: &SignedPermutation,
    y: usize,
    params: &DunklParams,
    bound: u32,
) -> Result<bool> {
    let n = params.n;
    check_index(y, n)?;
    let mut e = vec![Rational::zero(); n];
    e[y - 1] = Rational::one();
    let wy = w.act_on_vector(&e)?;
    let winv = w.inverse();
    Ok(first_failure(n, bound, |p| {
        let lhs = dunkl(y, &p.act(&winv), params)?.act(w);
        Ok(lhs == dunkl_vector(&wy, p, params)?)
    })?
    .is_none())
}

/// `D_i D_j = D_j D_i`.
pub fn verify_kakei_commute(i: usize, j: usize, params: &DunklParams, bound: u32) -> Result<bool> {
    Ok(first_failure(params.n, bound, |p| {
        let a = kakei_d(i, &kakei_d(j, p, params)?, params)?;
        let b = kakei_d(j, &kakei_d(i, p, params)?, params)?;
        Ok(a == b)
    })?
    .is_none())
}

/// `D_j t_i = t_i D_j`.
pub fn verify_kakei_torus(i: usize, j: usize, params: &DunklParams, bound: u32) -> Result<bool> {
    let t = SignedPermutation::sign_flip(params.n, i)?;
    Ok(first_failure(params.n, bound, |p| {
        let a = kakei_d(j, &p.act(&t), params)?;
        let b = kakei_d(j, p, params)?.act(&t);
        Ok(a == b)
    })?
    .is_none())
}

/// `t_{s_{α_i}} D_j = D_{s_{α_i}*j} t_{s_{α_i}} − ⟨α_i^∨, ε_j⟩ k̃_{α_i}`.
pub fn verify_kakei_reflection(i: usize, j: usize, params: &DunklParams, bound: u32) -> Result<bool> {
    let n = params.n;
    let s = SignedPermutation::simple(n, i)?;
    check_index(j, n)?;
    let sj = s.star(j - 1) + 1;
    let pairing = Root::a(i - 1, i).coroot_pairing(j - 1, n);
    let tt = t_pair(n, i - 1, i);
    Ok(first_failure(n, bound, |p| {
        let lhs = kakei_d(j, p, params)?.act(&s);
        let mut rhs = kakei_d(sj, &p.act(&s), params)?;
        let kt = &(p + &p.act(&tt)).scale(&params.k);
        rhs.add_scaled(kt, &rat(-pairing));
        Ok(lhs == rhs)
    })?
    .is_none())
}

/// The defining relations of `ℍ_B` for `(D_j, t_w)` on polynomials of degree `≤ bound`.
pub fn phi_check(params: &DunklParams, bound: u32) -> Result<bool> {
    Ok(phi_check_failures(params, bound)?.is_empty())
}

/// Names of the relations that fail; empty when `phi_check` holds.
pub fn phi_check_failures(params: &DunklParams, bound: u32) -> Result<Vec<String>> {
    if params.k.is_zero() {
        return Err(HeckeError::ZeroMultiplicity);
    }
    let n = params.n;
    let mut failures = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if !verify_kakei_commute(i, j, params, bound)? {
                failures.push(format!("D_{i} D_{j} = D_{j} D_{i}"));
            }
        }
        for j in 1..=n {
            if !verify_kakei_torus(i, j, params, bound)? {
                failures.push(format!("D_{j} t_{i} = t_{i} D_{j}"));
            }
        }
    }
    for i in 1..n {
        for j in 1..=n {
            if !verify_kakei_reflection(i, j, params, bound)? {
                failures.push(format!("t_s{i} D_{j} relation"));
            }
        }
    }
    Ok(failures)
}

/// `T^B_y(k, 0) = T^D_y(k)` on monomials of degree `≤ bound`.
pub fn verify_type_d_specialization(params: &DunklParams, bound: u32) -> Result<bool> {
    let p0 = params.type_d();
    for y in 1..=params.n {
        let bad = first_failure(params.n, bound, |p| {
            Ok(dunkl(y, p, &p0)? == dunkl_type_d(y, p, params.n, &params.k)?)
        })?;
        if bad.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rank of the evaluation map from `{ε^a t_w : |a| ≤ elem_degree}` to operators on
/// polynomials of degree `≤ poly_degree`, together with the number of basis elements.
pub fn faithfulness_rank(params: &DunklParams, elem_degree: u32, poly_degree: u32) -> Result<(usize, usize)> {
    let n = params.n;
    let inputs = monomial_basis(n, poly_degree);
    let out_index: Vec<Vec<u32>> = exponents_up_to(n, poly_degree);
    let mut basis = Vec::new();
    for e in exponents_up_to(n, elem_degree) {
        for w in all_wb(n) {
            let mut a = AlgebraElement::zero(n);
            a.add_term(e.clone(), w, Rational::one());
            basis.push(a);
        }
    }
    let rows: Vec<Result<Vec<Rational>>> = basis
        .par_iter()
        .map(|a| {
            let mut row = Vec::with_capacity(inputs.len() * out_index.len());
            for p in &inputs {
                let img = apply_element(a, p, params)?;
                row.extend(out_index.iter().map(|e| img.coefficient(e)));
            }
            Ok(row)
        })
        .collect();
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    let count = rows.len();
    Ok((Matrix::from_rows(rows).rank(), count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn params(n: usize, k: i64, kc: Rational) -> DunklParams {
        DunklParams::new(n, rat(k), kc)
    }

    #[test]
    fn reflections_substitute() {
        let t1 = SignedPermutation::sign_flip(2, 1).unwrap();
        assert_eq!(reflect(&t1, &Poly::var(2, 0)), -&Poly::var(2, 0));
        let s = SignedPermutation::simple(2, 1).unwrap();
        let p = Poly::parse("z1*z2", 2, "z").unwrap();
        assert_eq!(reflect(&s, &p), p);
        let ls = Root::long_sum(0, 1).reflection(2);
        assert_eq!(reflect(&ls, &Poly::var(2, 0)), -&Poly::var(2, 1));
    }

    #[test]
    fn rank_one_dunkl() {
        let pr = params(1, 1, ratio(3, 4));
        assert!(dunkl(1, &Poly::one(1), &pr).unwrap().is_zero());
        // T(z) = 1 + k_c (z + z)/z
        let t = dunkl(1, &Poly::var(1, 0), &pr).unwrap();
        assert_eq!(t, Poly::constant(1, rat(1) + ratio(3, 2)));
    }

    #[test]
    fn kakei_on_constants() {
        let pr = params(3, 2, rat(-1));
        assert!(kakei_d(1, &Poly::one(3), &pr).unwrap().is_zero());
    }

    #[test]
    fn relation_checks_small() {
        let pr = params(2, 1, rat(1));
        for y in 1..=2 {
            for x in 1..=2 {
                assert!(verify_cherednik_relation1(y, x, &pr, 3).unwrap());
            }
        }
        let zero = params(2, 0, rat(0));
        assert!(verify_cherednik_relation1(1, 1, &zero, 3).unwrap());
        assert!(verify_dunkl_commute(1, 2, &pr, 3).unwrap());
        assert!(phi_check(&params(2, 1, rat(0)), 3).unwrap());
        assert!(phi_check(&params(2, 0, rat(0)), 3).is_err());
    }

    #[test]
    fn type_d_specialization() {
        assert!(verify_type_d_specialization(&params(3, 1, rat(5)), 3).unwrap());
    }

    #[test]
    fn exact_divisibility() {
        for n in 1..=3 {
            for alpha in positive_roots_b(n) {
                for e in exponents_up_to(n, 5) {
                    let p = Poly::monomial(e, Rational::one());
                    assert!(root_difference(&alpha, &p).is_ok());
                }
            }
        }
    }
}
