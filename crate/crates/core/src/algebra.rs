//! `ℍ_B(k̃)` in PBW normal form `Σ c · ε^a t_w`.
//!
//! Multiplication moves a `W_A` element past one degree-1 factor at a time:
//!
//! ```text
//! t_g ζ = g(ζ) t_g + Σ_{α ∈ R(g^{-1})} ⟨α^∨, g(ζ)⟩ k̃_α t_{s_α g},   k̃_{α_{a,b}} = k(1 + t_a t_b)
//! ```
//!
//! and `T` commutes with the polynomial part.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{HeckeError, Result};
use crate::linalg::Matrix;
use crate::polynomial::{
    exponents_up_to, parse_variable, random_poly, render_monomial, split_factors, split_terms,
    Exponent, Poly,
};
use crate::rational::{format_rational, parse_rational, rat, Rational};
use crate::weylgroup::{all_torus, all_wa, all_wb, SignedPermutation};

type Key = (Exponent, SignedPermutation);

/// Rank and the long-root multiplicity `k ≠ 0`.
pub struct AlgebraContext {
    n: usize,
    k: Rational,
    cache: Mutex<HashMap<(Vec<usize>, Exponent), AlgebraElement>>,
}

impl Clone for AlgebraContext {
    fn clone(&self) -> Self {
        AlgebraContext {
            n: self.n,
            k: self.k.clone(),
            cache: Mutex::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for AlgebraContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraContext {{ n: {}, k: {} }}", self.n, self.k)
    }
}

impl PartialEq for AlgebraContext {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    n: usize,
    terms: BTreeMap<Key, Rational>,
}

impl AlgebraContext {
    pub fn new(n: usize, k: Rational) -> Result<Self> {
        if k.is_zero() {
            return Err(HeckeError::ZeroMultiplicity);
        }
        Ok(AlgebraContext {
            n,
            k,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> &Rational {
        &self.k
    }

    fn check(&self, a: &AlgebraElement) -> Result<()> {
        if a.n == self.n {
            Ok(())
        } else {
            Err(HeckeError::ContextMismatch)
        }
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(self.n)
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::one(self.n)
    }

    pub fn scalar(&self, c: Rational) -> AlgebraElement {
        AlgebraElement::scalar(self.n, c)
    }

    /// `ε_l`, 1-based.
    pub fn eps(&self, l: usize) -> Result<AlgebraElement> {
        if l == 0 || l > self.n {
            return Err(HeckeError::IndexOutOfRange {
                index: l,
                max: self.n,
            });
        }
        Ok(AlgebraElement::from_poly(&Poly::var(self.n, l - 1)))
    }

    pub fn group(&self, w: &SignedPermutation) -> Result<AlgebraElement> {
        if w.rank() != self.n {
            return Err(HeckeError::SizeMismatch {
                expected: self.n,
                found: w.rank(),
            });
        }
        Ok(AlgebraElement::group(w.clone()))
    }

    /// `t_i = t_{s_{ε_i}}`, 1-based.
    pub fn t(&self, i: usize) -> Result<AlgebraElement> {
        Ok(AlgebraElement::group(SignedPermutation::sign_flip(self.n, i)?))
    }

    /// `t_{s_{α_j}}`, 1-based.
    pub fn ts(&self, j: usize) -> Result<AlgebraElement> {
        Ok(AlgebraElement::group(SignedPermutation::simple(self.n, j)?))
    }

    /// `k̃_{α_{a,b}} = k(1 + t_a t_b)`, 0-based indices.
    pub fn k_tilde(&self, a: usize, b: usize) -> AlgebraElement {
        let mut signs = vec![1; self.n];
        signs[a] = -1;
        signs[b] = -1;
        let tt = SignedPermutation::torus(signs).expect("valid");
        let mut e = AlgebraElement::zero(self.n);
        e.add_term(vec![0; self.n], SignedPermutation::identity(self.n), self.k.clone());
        e.add_term(vec![0; self.n], tt, self.k.clone());
        e
    }

    /// Generators `ε_l`, `t_{s_{α_j}}`, `t_i`.
    pub fn generators_b(&self) -> Vec<AlgebraElement> {
        let n = self.n;
        let mut g: Vec<AlgebraElement> = (1..=n).map(|l| self.eps(l).expect("in range")).collect();
        g.extend((1..n).map(|j| self.ts(j).expect("in range")));
        g.extend((1..=n).map(|i| self.t(i).expect("in range")));
        g
    }

    /// Generators `ε_l`, `t_{s_{α_j}}`, `t_i t_{i+1}` of `ℍ_D`.
    pub fn generators_d(&self) -> Vec<AlgebraElement> {
        let n = self.n;
        let mut g: Vec<AlgebraElement> = (1..=n).map(|l| self.eps(l).expect("in range")).collect();
        g.extend((1..n).map(|j| self.ts(j).expect("in range")));
        for i in 0..n.saturating_sub(1) {
            let mut signs = vec![1; n];
            signs[i] = -1;
            signs[i + 1] = -1;
            g.push(AlgebraElement::group(SignedPermutation::torus(signs).expect("valid")));
        }
        g
    }

    /// Normal form of `t_g ε^b` for `g ∈ W_A`.
    fn move_past(&self, g: &SignedPermutation, b: &Exponent) -> AlgebraElement {
        let key = (g.perm().to_vec(), b.clone());
        if let Some(hit) = self.cache.lock().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let n = self.n;
        let result = match b.iter().position(|&x| x > 0) {
            None => AlgebraElement::group(g.clone()),
            Some(l) => {
                let mut rest = b.clone();
                rest[l] -= 1;
                let gl = g.star(l);
                let tail = self.move_past(g, &rest);
                let mut out = tail.left_mul_poly(&Poly::var(n, gl));
                for alpha in g.inversion_set().expect("g in W_A") {
                    let pairing = alpha.coroot_pairing(gl, n);
                    if pairing == 0 {
                        continue;
                    }
                    let (a, bb) = match alpha.kind {
                        crate::weylgroup::RootKind::A { p, q } => (p, q),
                        _ => unreachable!("inversion sets hold A-roots"),
                    };
                    let sg = alpha.reflection(n).compose_unchecked(g);
                    let inner = self.move_past(&sg, &rest);
                    let kt = self.k_tilde(a, bb);
                    out.add_scaled(&kt.mul_group_part(&inner), &rat(pairing));
                }
                out
            }
        };
        self.cache
            .lock()
            .expect("cache lock")
            .insert(key, result.clone());
        result
    }

    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        self.check(b)?;
        let mut out = AlgebraElement::zero(self.n);
        for ((ea, wa), ca) in &a.terms {
            let x = wa.t_part();
            let g = wa.wa_part();
            for ((eb, wb), cb) in &b.terms {
                let moved = self.move_past(&g, eb);
                for ((er, h), cr) in &moved.terms {
                    let mut e = er.clone();
                    for (i, v) in ea.iter().enumerate() {
                        e[i] += v;
                    }
                    let w = x.compose_unchecked(h).compose_unchecked(wb);
                    out.add_term(e, w, cr * cb * ca);
                }
            }
        }
        Ok(out)
    }

    pub fn product(&self, factors: &[&AlgebraElement]) -> Result<AlgebraElement> {
        let mut acc = self.one();
        for f in factors {
            acc = self.multiply(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn commutator(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        Ok(&self.multiply(a, b)? - &self.multiply(b, a)?)
    }

    /// `ι(p t_w) = sgn(w) t_{w^{-1}} p(−ε)`, renormalized.
    pub fn iota(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        let mut out = self.zero();
        let minus = SignedPermutation::torus(vec![-1; self.n]).expect("valid");
        for ((e, w), c) in &a.terms {
            let p = Poly::monomial(e.clone(), c * rat(i64::from(w.det()))).act(&minus);
            let tw = AlgebraElement::group(w.inverse());
            out = &out + &self.multiply(&tw, &AlgebraElement::from_poly(&p))?;
        }
        Ok(out)
    }

    /// `Δ̃_j(p) = t_{s_{α_j}} p − s_{α_j}(p) t_{s_{α_j}}`.
    pub fn tilde_delta(&self, j: usize, p: &Poly) -> Result<AlgebraElement> {
        let s = SignedPermutation::simple(self.n, j)?;
        let ts = AlgebraElement::group(s.clone());
        let lhs = self.multiply(&ts, &AlgebraElement::from_poly(p))?;
        let rhs = self.multiply(&AlgebraElement::from_poly(&p.act(&s)), &ts)?;
        Ok(&lhs - &rhs)
    }

    /// `Δ_j(p) = k (p − s_{α_j} p) / α_j`.
    pub fn divided_difference(&self, j: usize, p: &Poly) -> Result<Poly> {
        let s = SignedPermutation::simple(self.n, j)?;
        let mut form = vec![Rational::zero(); self.n];
        form[j - 1] = Rational::one();
        form[j] = -Rational::one();
        Ok((p - &p.act(&s)).divide_by_linear(&form)?.scale(&self.k))
    }

    /// `Δ_j(p)(1 + t_j t_{j+1})`.
    pub fn lemma_divided_difference(&self, j: usize, p: &Poly) -> Result<AlgebraElement> {
        let d = self.divided_difference(j, p)?;
        let kt = self.k_tilde(j - 1, j).scale(&(Rational::one() / &self.k));
        self.multiply(&AlgebraElement::from_poly(&d), &kt)
    }

    /// `ϑ_j = Σ_{|I| = j} Π_{i ∈ I} t_i`.
    pub fn theta(&self, j: usize) -> Result<AlgebraElement> {
        if j > self.n {
            return Err(HeckeError::IndexOutOfRange {
                index: j,
                max: self.n,
            });
        }
        let mut out = self.zero();
        for x in all_torus(self.n) {
            if x.signs().iter().filter(|&&s| s < 0).count() == j {
                out.add_term(vec![0; self.n], x, Rational::one());
            }
        }
        Ok(out)
    }

    fn commutes_with_all(&self, a: &AlgebraElement, gens: &[AlgebraElement]) -> Result<bool> {
        for g in gens {
            if !self.commutator(a, g)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_central_b(&self, a: &AlgebraElement) -> Result<bool> {
        self.check(a)?;
        self.commutes_with_all(a, &self.generators_b())
    }

    pub fn is_central_d(&self, a: &AlgebraElement) -> Result<bool> {
        self.check(a)?;
        if !a.in_hd() {
            return Err(HeckeError::NotInHD);
        }
        self.commutes_with_all(a, &self.generators_d())
    }

    /// Random element with polynomial degree at most `d`.
    pub fn random_element<R: Rng>(&self, rng: &mut R, d: u32, max_terms: usize) -> AlgebraElement {
        let group = all_wb(self.n);
        let mut out = self.zero();
        for _ in 0..rng.gen_range(1..=max_terms.max(1)) {
            let p = random_poly(rng, self.n, d, 2);
            let w = group[rng.gen_range(0..group.len())].clone();
            out = &out + &AlgebraElement::from_poly(&p).right_group(&w);
        }
        out
    }

    /// Dimensions `(central, expected)` in polynomial degree `≤ d`: the space of
    /// central elements and the span of `p · ϑ_j`, `p` symmetric.
    pub fn center_dimension_probe(&self, d: u32) -> Result<(usize, usize)> {
        let n = self.n;
        let group = all_wb(n);
        let exps = exponents_up_to(n, d);
        let basis: Vec<AlgebraElement> = exps
            .iter()
            .flat_map(|e| {
                group.iter().map(move |w| {
                    let mut x = AlgebraElement::zero(n);
                    x.add_term(e.clone(), w.clone(), Rational::one());
                    x
                })
            })
            .collect();
        let gens = self.generators_b();
        // Column j holds the commutators of basis[j] with every generator.
        let mut index: HashMap<(usize, Key), usize> = HashMap::new();
        let mut columns: Vec<Vec<(usize, Rational)>> = Vec::new();
        for b in &basis {
            let mut col = Vec::new();
            for (gi, g) in gens.iter().enumerate() {
                for (key, c) in self.commutator(b, g)?.terms {
                    let next = index.len();
                    let row = *index.entry((gi, key)).or_insert(next);
                    col.push((row, c));
                }
            }
            columns.push(col);
        }
        let mut m = Matrix::zeros(index.len(), basis.len());
        for (j, col) in columns.into_iter().enumerate() {
            for (i, c) in col {
                m[(i, j)] = c;
            }
        }
        let central = basis.len() - m.rank();

        let wa = all_wa(n);
        let mut sym = Vec::new();
        for e in &exps {
            let mono = Poly::monomial(e.clone(), Rational::one());
            let mut s = Poly::zero(n);
            for w in &wa {
                s = &s + &mono.act(w);
            }
            sym.push(s);
        }
        let mut spanning = Vec::new();
        for p in &sym {
            for j in 0..=n {
                spanning.push(self.multiply(&AlgebraElement::from_poly(p), &self.theta(j)?)?);
            }
        }
        let keys: Vec<Key> = exps
            .iter()
            .flat_map(|e| group.iter().map(move |w| (e.clone(), w.clone())))
            .collect();
        let rows: Vec<Vec<Rational>> = spanning
            .iter()
            .map(|x| keys.iter().map(|k| x.terms.get(k).cloned().unwrap_or_else(Rational::zero)).collect())
            .collect();
        let expected = if rows.is_empty() {
            0
        } else {
            Matrix::from_rows(rows).rank()
        };
        Ok((central, expected))
    }
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, Rational::one())
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        let mut e = Self::zero(n);
        e.add_term(vec![0; n], SignedPermutation::identity(n), c);
        e
    }

    pub fn group(w: SignedPermutation) -> Self {
        let n = w.rank();
        let mut e = Self::zero(n);
        e.add_term(vec![0; n], w, Rational::one());
        e
    }

    pub fn from_poly(p: &Poly) -> Self {
        let n = p.rank();
        let mut e = Self::zero(n);
        for (x, c) in p.terms() {
            e.add_term(x.clone(), SignedPermutation::identity(n), c.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in normal-form order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &SignedPermutation, &Rational)> {
        self.terms.iter().map(|((e, w), c)| (e, w, c))
    }

    pub fn coefficient(&self, e: &[u32], w: &SignedPermutation) -> Rational {
        self.terms
            .get(&(e.to_vec(), w.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, e: Exponent, w: SignedPermutation, c: Rational) {
        if c.is_zero() {
            return;
        }
        assert_eq!(e.len(), self.n, "exponent length");
        assert_eq!(w.rank(), self.n, "group rank");
        match self.terms.entry((e, w)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &AlgebraElement, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for ((e, w), v) in &other.terms {
            self.add_term(e.clone(), w.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    /// `p · a`; exact since the polynomial part is on the left.
    pub fn left_mul_poly(&self, p: &Poly) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.n);
        for ((e, w), c) in &self.terms {
            for (pe, pc) in p.terms() {
                let sum: Exponent = e.iter().zip(pe).map(|(a, b)| a + b).collect();
                out.add_term(sum, w.clone(), c * pc);
            }
        }
        out
    }

    /// `a · t_w`.
    pub fn right_group(&self, w: &SignedPermutation) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.n);
        for ((e, h), c) in &self.terms {
            out.add_term(e.clone(), h.compose_unchecked(w), c.clone());
        }
        out
    }

    /// `x · a` for `x` a combination of `T` elements (which commute with polynomials).
    fn mul_group_part(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.n);
        for ((_, x), cx) in &self.terms {
            debug_assert!(x.is_in_t());
            for ((e, h), c) in &other.terms {
                out.add_term(e.clone(), x.compose_unchecked(h), cx * c);
            }
        }
        out
    }

    /// `δ(p t_w) = sgn(x) p t_w` where `x` is the `T`-factor of `w`.
    pub fn delta(&self) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.n);
        for ((e, w), c) in &self.terms {
            let c = if w.sign_product() < 0 { -c.clone() } else { c.clone() };
            out.add_term(e.clone(), w.clone(), c);
        }
        out
    }

    /// Membership in `ℍ_D = ℍ_B^δ`.
    pub fn in_hd(&self) -> bool {
        self.terms.keys().all(|(_, w)| w.sign_product() == 1)
    }

    /// Polynomial part attached to the group element `w`.
    pub fn poly_at(&self, w: &SignedPermutation) -> Poly {
        let mut p = Poly::zero(self.n);
        for ((e, h), c) in &self.terms {
            if h == w {
                p.add_term(e.clone(), c.clone());
            }
        }
        p
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, ((e, w), c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if !abs.is_one() {
                factors.push(format_rational(&abs));
            }
            let mono = render_monomial(e, "e");
            if !mono.is_empty() {
                factors.push(mono);
            }
            if !w.is_identity() {
                factors.push(w.to_string());
            }
            if factors.is_empty() {
                factors.push("1".into());
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parses `coeff * e1^a1*…*en^an * [group]` summands.
    pub fn parse(s: &str, n: usize) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero(n);
        for (sign, body) in split_terms(s)? {
            let mut c = rat(sign);
            let mut e = vec![0u32; n];
            let mut w = SignedPermutation::identity(n);
            for f in split_factors(&body) {
                if f.starts_with('[') {
                    let g: SignedPermutation = f.parse()?;
                    if g.rank() != n {
                        return Err(HeckeError::SizeMismatch {
                            expected: n,
                            found: g.rank(),
                        });
                    }
                    w = w.compose_unchecked(&g);
                } else if let Some((i, a)) = parse_variable(&f, "e", n)? {
                    if !w.is_identity() {
                        return Err(HeckeError::Parse(format!(
                            "term `{body}` is not in normal form (polynomial after group element)"
                        )));
                    }
                    e[i] += a;
                } else {
                    c *= parse_rational(&f)?;
                }
            }
            out.add_term(e, w, c);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> AlgebraElementJson {
        AlgebraElementJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|((e, w), c)| TermJson {
                    coeff: format_rational(c),
                    exponents: e.clone(),
                    group: w.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &AlgebraElementJson) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero(j.n);
        for t in &j.terms {
            if t.exponents.len() != j.n {
                return Err(HeckeError::SizeMismatch {
                    expected: j.n,
                    found: t.exponents.len(),
                });
            }
            let w: SignedPermutation = t.group.parse()?;
            if w.rank() != j.n {
                return Err(HeckeError::SizeMismatch {
                    expected: j.n,
                    found: w.rank(),
                });
            }
            out.add_term(t.exponents.clone(), w, parse_rational(&t.coeff)?);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exponents: Vec<u32>,
    pub group: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraElementJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

impl<'a> std::ops::Add for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &'a AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl<'a> std::ops::Sub for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &'a AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl std::ops::Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::elementary_symmetric;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ctx(n: usize) -> AlgebraContext {
        AlgebraContext::new(n, rat(1)).unwrap()
    }

    fn el(s: &str, n: usize) -> AlgebraElement {
        AlgebraElement::parse(s, n).unwrap()
    }

    #[test]
    fn zero_multiplicity_rejected() {
        assert_eq!(
            AlgebraContext::new(2, rat(0)).unwrap_err(),
            HeckeError::ZeroMultiplicity
        );
    }

    #[test]
    fn simple_reflection_past_eps() {
        let c = ctx(2);
        let lhs = c.multiply(&c.ts(1).unwrap(), &c.eps(1).unwrap()).unwrap();
        assert_eq!(lhs, el("e2*[2,1] - 1 - [-1,-2]", 2));
    }

    #[test]
    fn sign_flips_commute_with_eps() {
        let c = ctx(2);
        let lhs = c.multiply(&c.t(1).unwrap(), &c.eps(1).unwrap()).unwrap();
        assert_eq!(lhs, el("e1*[-1,2]", 2));
    }

    #[test]
    fn associativity_random() {
        let c = ctx(3);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..15 {
            let a = c.random_element(&mut rng, 2, 2);
            let b = c.random_element(&mut rng, 2, 2);
            let d = c.random_element(&mut rng, 2, 2);
            let l = c.multiply(&c.multiply(&a, &b).unwrap(), &d).unwrap();
            let r = c.multiply(&a, &c.multiply(&b, &d).unwrap()).unwrap();
            assert_eq!(l, r);
        }
    }

    #[test]
    fn delta_examples() {
        let c = ctx(2);
        let t1 = c.t(1).unwrap();
        assert_eq!(t1.delta(), -&t1);
        let t12 = c.multiply(&t1, &c.t(2).unwrap()).unwrap();
        assert_eq!(t12.delta(), t12);
        assert!(c.k_tilde(0, 1).in_hd());
        assert!(!t1.in_hd());
    }

    #[test]
    fn iota_examples() {
        let c = ctx(2);
        let e1 = c.eps(1).unwrap();
        assert_eq!(c.iota(&e1).unwrap(), -&e1);
        let ts = c.ts(1).unwrap();
        let x = c.multiply(&ts, &e1).unwrap();
        let expected = c.multiply(&c.iota(&e1).unwrap(), &c.iota(&ts).unwrap()).unwrap();
        assert_eq!(c.iota(&x).unwrap(), expected);
        // ι(ε_1)ι(t_s) = (−ε_1)(−t_s) = ε_1 t_s
        assert_eq!(expected, el("e1*[2,1]", 2));
        assert_eq!(c.iota(&c.iota(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn tilde_delta_on_eps1() {
        let c = ctx(2);
        let p = Poly::var(2, 0);
        // Relation (c) gives t_s ε_1 − ε_2 t_s = −k(1 + t_1 t_2).
        assert_eq!(c.tilde_delta(1, &p).unwrap(), -&c.k_tilde(0, 1));
        assert_eq!(c.divided_difference(1, &p).unwrap(), Poly::one(2));
        let sym = elementary_symmetric(2, 1);
        assert!(c.tilde_delta(1, &sym).unwrap().is_zero());
    }

    #[test]
    fn theta_values() {
        let c = ctx(3);
        assert_eq!(c.theta(0).unwrap(), c.one());
        assert_eq!(c.theta(1).unwrap(), el("[-1,2,3] + [1,-2,3] + [1,2,-3]", 3));
        assert_eq!(c.theta(3).unwrap(), el("[-1,-2,-3]", 3));
        assert!(c.theta(4).is_err());
    }

    #[test]
    fn centrality() {
        let c = ctx(2);
        let e2 = AlgebraElement::from_poly(&elementary_symmetric(2, 2));
        let z = c.multiply(&e2, &c.theta(1).unwrap()).unwrap();
        assert!(c.is_central_b(&z).unwrap());
        assert!(!c.is_central_b(&c.eps(1).unwrap()).unwrap());
        assert!(c.is_central_d(&c.theta(2).unwrap()).unwrap());
        assert_eq!(c.is_central_d(&c.theta(1).unwrap()), Err(HeckeError::NotInHD));
        let comm = c.commutator(&c.ts(1).unwrap(), &c.theta(1).unwrap()).unwrap();
        assert!(comm.is_zero());
    }

    #[test]
    fn text_and_json_round_trip() {
        let c = ctx(2);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let a = c.random_element(&mut rng, 2, 3);
            assert_eq!(AlgebraElement::parse(&a.render(), 2).unwrap(), a);
            let j = serde_json::to_string(&a.to_json()).unwrap();
            let back: AlgebraElementJson = serde_json::from_str(&j).unwrap();
            assert_eq!(AlgebraElement::from_json(&back).unwrap(), a);
        }
        assert!(AlgebraElement::parse("[2,1]*e1", 2).is_err());
    }

    #[test]
    fn context_mismatch() {
        let c = ctx(2);
        let x = AlgebraElement::one(3);
        assert_eq!(c.multiply(&x, &x), Err(HeckeError::ContextMismatch));
    }
}
