//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! The same type carries `S(V)` (variables `e1..en`) and the Dunkl side
//! `𝒫` (variables `z1..zn`); only the display prefix differs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{HeckeError, Result};
use crate::rational::{parse_rational, rat, Rational};
use crate::weylgroup::SignedPermutation;

pub type Exponent = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        Poly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut p = Self::zero(n);
        p.add_term(vec![0; n], c);
        p
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    /// The variable `x_i`, 0-based.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(exp: Exponent, c: Rational) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    /// `Σ c_i x_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            assert_eq!(e.len(), n, "exponent length");
            p.add_term(e, c);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
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

    pub fn add_scaled(&mut self, other: &Poly, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (e, v) in &other.terms {
            self.add_term(e.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        let mut p = Poly::zero(self.n);
        p.add_scaled(self, c);
        p
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Image under `w`, extending `w(x_i) = sign · x_{π(i)}` multiplicatively.
    pub fn act(&self, w: &SignedPermutation) -> Poly {
        assert_eq!(w.rank(), self.n, "rank mismatch");
        let mut out = Poly::zero(self.n);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.n];
            let mut sign = 1i8;
            for (i, &a) in e.iter().enumerate() {
                let (s, j) = w.image(i);
                ne[j] = a;
                if s < 0 && a % 2 == 1 {
                    sign = -sign;
                }
            }
            out.add_term(ne, if sign < 0 { -c.clone() } else { c.clone() });
        }
        out
    }

    /// `∂p/∂x_i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.n);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut ne = e.clone();
                ne[i] -= 1;
                out.add_term(ne, c * rat(i64::from(e[i])));
            }
        }
        out
    }

    /// Exact quotient by the linear form `Σ c_i x_i`.
    ///
    /// Synthetic division along a variable with nonzero coefficient; the
    /// remainder must vanish.
    pub fn divide_by_linear(&self, form: &[Rational]) -> Result<Poly> {
        assert_eq!(form.len(), self.n, "rank mismatch");
        let v = form
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(HeckeError::InexactDivision)?;
        let lead = form[v].clone();
        let divisor = Poly::linear(form);
        // Order monomials by the degree in x_v first so the leading term strictly drops.
        let key = |e: &Exponent| (e[v], e.clone());
        let mut rem = self.clone();
        let mut q = Poly::zero(self.n);
        while let Some((e, c)) = rem
            .terms
            .iter()
            .max_by(|a, b| key(a.0).cmp(&key(b.0)))
            .map(|(e, c)| (e.clone(), c.clone()))
        {
            if e[v] == 0 {
                return Err(HeckeError::InexactDivision);
            }
            let mut qe = e;
            qe[v] -= 1;
            let qc = c / &lead;
            let step = Poly::monomial(qe, qc);
            rem = &rem - &(&step * &divisor);
            q = &q + &step;
        }
        Ok(q)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &a) in point.iter().zip(e) {
                for _ in 0..a {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    pub fn render(&self, prefix: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono = render_monomial(e, prefix);
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match (abs.is_one(), mono.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&mono),
                (false, true) => out.push_str(&abs.to_string()),
                (false, false) => {
                    out.push_str(&abs.to_string());
                    out.push('*');
                    out.push_str(&mono);
                }
            }
        }
        out
    }

    /// Parses `3/2*z1^2*z3 - z2` with the given variable prefix.
    pub fn parse(s: &str, n: usize, prefix: &str) -> Result<Poly> {
        let mut p = Poly::zero(n);
        for (sign, body) in split_terms(s)? {
            let mut coeff = rat(sign);
            let mut exp = vec![0u32; n];
            for factor in split_factors(&body) {
                if let Some((i, a)) = parse_variable(&factor, prefix, n)? {
                    exp[i] += a;
                } else {
                    coeff *= parse_rational(&factor)?;
                }
            }
            p.add_term(exp, coeff);
        }
        Ok(p)
    }
}

pub(crate) fn render_monomial(e: &[u32], prefix: &str) -> String {
    let mut parts = Vec::new();
    for (i, &a) in e.iter().enumerate() {
        match a {
            0 => {}
            1 => parts.push(format!("{prefix}{}", i + 1)),
            _ => parts.push(format!("{prefix}{}^{a}", i + 1)),
        }
    }
    parts.join("*")
}

/// Splits a sum into signed terms, ignoring `+`/`-` inside brackets or after
/// an operator.
pub(crate) fn split_terms(s: &str) -> Result<Vec<(i64, String)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut sign = 1i64;
    let mut prev: Option<char> = None;
    for ch in s.chars() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            _ => {}
        }
        let is_sign = depth == 0 && (ch == '+' || ch == '-');
        let attached = matches!(prev, Some('*') | Some('/') | Some('^'));
        if is_sign && !attached {
            if !cur.trim().is_empty() {
                out.push((sign, cur.trim().to_string()));
                cur.clear();
                sign = 1;
            }
            if ch == '-' {
                sign = -sign;
            }
        } else {
            cur.push(ch);
        }
        if !ch.is_whitespace() {
            prev = Some(ch);
        }
    }
    if depth != 0 {
        return Err(HeckeError::Parse(format!("unbalanced brackets in `{s}`")));
    }
    if cur.trim().is_empty() {
        if s.trim().is_empty() || matches!(prev, Some('+') | Some('-')) {
            return Err(HeckeError::Parse(format!("empty term in `{s}`")));
        }
    } else if cur.trim() != "0" || !out.is_empty() || sign != 1 {
        out.push((sign, cur.trim().to_string()));
    }
    Ok(out)
}

pub(crate) fn split_factors(term: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in term.chars() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            _ => {}
        }
        if ch == '*' && depth == 0 {
            out.push(cur.trim().to_string());
            cur.clear();
        } else {
            cur.push(ch);
        }
    }
    out.push(cur.trim().to_string());
    out
}

/// `x3^2` → `Some((2, 2))` (0-based index).
pub(crate) fn parse_variable(factor: &str, prefix: &str, n: usize) -> Result<Option<(usize, u32)>> {
    let Some(rest) = factor.strip_prefix(prefix) else {
        return Ok(None);
    };
    let (idx, pow) = match rest.split_once('^') {
        Some((i, a)) => (i, a),
        None => (rest, "1"),
    };
    let i: usize = idx
        .trim()
        .parse()
        .map_err(|_| HeckeError::Parse(format!("bad variable `{factor}`")))?;
    if i == 0 || i > n {
        return Err(HeckeError::IndexOutOfRange { index: i, max: n });
    }
    let a: u32 = pow
        .trim()
        .parse()
        .map_err(|_| HeckeError::Parse(format!("bad exponent in `{factor}`")))?;
    Ok(Some((i - 1, a)))
}

impl<'a> Add for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl<'a> Sub for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl<'a> Mul for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        assert_eq!(self.n, rhs.n, "rank mismatch");
        let mut out = Poly::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

/// All exponent vectors of total degree exactly `d`.
pub fn exponents_of_degree(n: usize, d: u32) -> Vec<Exponent> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Exponent>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=d).rev() {
            prefix.push(a);
            rec(n, d - a, prefix, out);
            prefix.pop();
        }
    }
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// All exponent vectors of total degree at most `d`, by increasing degree.
pub fn exponents_up_to(n: usize, d: u32) -> Vec<Exponent> {
    (0..=d).flat_map(|k| exponents_of_degree(n, k)).collect()
}

/// Elementary symmetric polynomial `e_k`.
pub fn elementary_symmetric(n: usize, k: usize) -> Poly {
    let mut p = Poly::zero(n);
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize == k {
            let e = (0..n).map(|i| mask >> i & 1).collect();
            p.add_term(e, Rational::one());
        }
    }
    p
}

/// Power sum `x_1^k + … + x_n^k`.
pub fn power_sum(n: usize, k: u32) -> Poly {
    let mut p = Poly::zero(n);
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = k;
        p.add_term(e, Rational::one());
    }
    p
}

/// Random polynomial of degree at most `d` with small rational coefficients.
pub fn random_poly<R: Rng>(rng: &mut R, n: usize, d: u32, max_terms: usize) -> Poly {
    let pool = exponents_up_to(n, d);
    let count = rng.gen_range(1..=max_terms.max(1));
    let mut p = Poly::zero(n);
    for _ in 0..count {
        let e = pool[rng.gen_range(0..pool.len())].clone();
        let num = rng.gen_range(-5i64..=5);
        let den = rng.gen_range(1i64..=3);
        p.add_term(e, Rational::new(num.into(), den.into()));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn parse_and_render() {
        let p = Poly::parse("3/2*z1^2*z3 - z2", 3, "z").unwrap();
        assert_eq!(p.coefficient(&[2, 0, 1]), ratio(3, 2));
        assert_eq!(p.coefficient(&[0, 1, 0]), rat(-1));
        assert_eq!(Poly::parse(&p.render("z"), 3, "z").unwrap(), p);
        assert_eq!(Poly::parse("-2 + z1 - -z1", 1, "z").unwrap().render("z"), "2*z1 - 2");
        assert!(Poly::parse("z4", 3, "z").is_err());
        assert!(Poly::parse("z1 +", 3, "z").is_err());
        assert!(Poly::parse("0", 2, "z").unwrap().is_zero());
    }

    #[test]
    fn division_by_linear_forms() {
        // (x1^2 - x2^2) / (x1 - x2) = x1 + x2
        let p = Poly::parse("x1^2 - x2^2", 2, "x").unwrap();
        let q = p.divide_by_linear(&[rat(1), rat(-1)]).unwrap();
        assert_eq!(q, Poly::parse("x1 + x2", 2, "x").unwrap());
        let r = Poly::parse("x1^2 + 1", 2, "x").unwrap();
        assert_eq!(r.divide_by_linear(&[rat(1), rat(-1)]), Err(HeckeError::InexactDivision));
    }

    #[test]
    fn action_is_multiplicative() {
        let w: SignedPermutation = "[-2,3,1]".parse().unwrap();
        let p = Poly::parse("x1^2*x2 - 3*x3", 3, "x").unwrap();
        let q = Poly::parse("x2 + 1/2*x1*x3", 3, "x").unwrap();
        assert_eq!((&p * &q).act(&w), &p.act(&w) * &q.act(&w));
        let t1 = SignedPermutation::sign_flip(3, 1).unwrap();
        assert_eq!(Poly::var(3, 0).act(&t1), -&Poly::var(3, 0));
    }

    #[test]
    fn degree_enumeration() {
        assert_eq!(exponents_of_degree(3, 2).len(), 6);
        assert_eq!(exponents_up_to(2, 4).len(), 15);
        assert_eq!(elementary_symmetric(3, 2).num_terms(), 3);
    }
}
