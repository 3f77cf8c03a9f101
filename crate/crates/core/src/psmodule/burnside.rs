//! Burnside span test: a module is absolutely irreducible iff the algebra
//! generated by its matrices is the full matrix space.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::weights::{generated_by, weight_table};
use super::MatrixModule;
use crate::linalg::{Echelon, Matrix};
use crate::rational::Rational;

const PRIME: u64 = 2_147_483_647;
const EXACT_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BurnsideMethod {
    /// Span computed over the rationals.
    Exact,
    /// Full span modulo a prime; the rational span is then full as well.
    ModularFull,
    /// A proper submodule was exhibited exactly.
    Submodule,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurnsideVerdict {
    pub irreducible: bool,
    /// Rational span dimension when known exactly.
    pub span_dim: Option<usize>,
    /// Dimension of a proper submodule when one was exhibited.
    pub submodule_dim: Option<usize>,
    pub method: BurnsideMethod,
}

/// Dimension of the rational span of all words in the generators.
pub fn exact_span_dim(m: &MatrixModule) -> usize {
    let d = m.dim();
    let gens = m.generators();
    let flat = |a: &Matrix| a.as_slice().to_vec();
    let mut span = Echelon::new(d * d);
    let mut queue = VecDeque::new();
    let id = Matrix::identity(d);
    span.insert(flat(&id));
    queue.push_back(id);
    while let Some(b) = queue.pop_front() {
        if span.is_full() {
            break;
        }
        for g in &gens {
            let c = *g * &b;
            if span.insert(flat(&c)) {
                queue.push_back(c);
            }
        }
    }
    span.rank()
}

fn to_mod(r: &Rational) -> Option<u64> {
    let p = BigInt::from(PRIME);
    let num = r.numer().mod_floor(&p).to_u64()?;
    let den = r.denom().mod_floor(&p).to_u64()?;
    if den == 0 {
        return None;
    }
    Some(mulmod(num, powmod(den, PRIME - 2)))
}

fn mulmod(a: u64, b: u64) -> u64 {
    a * b % PRIME
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

struct ModEchelon {
    rows: Vec<(usize, Vec<u64>)>,
}

impl ModEchelon {
    fn insert(&mut self, mut v: Vec<u64>) -> bool {
        for (p, row) in &self.rows {
            let c = v[*p];
            if c == 0 {
                continue;
            }
            let neg = PRIME - c;
            for (x, y) in v.iter_mut().zip(row) {
                if *y != 0 {
                    *x = (*x + mulmod(neg, *y)) % PRIME;
                }
            }
        }
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = powmod(v[p], PRIME - 2);
        for x in &mut v {
            *x = mulmod(*x, inv);
        }
        self.rows.push((p, v));
        true
    }
}

fn mod_mul(a: &[u64], b: &[u64], d: usize) -> Vec<u64> {
    let mut c = vec![0u64; d * d];
    for i in 0..d {
        for l in 0..d {
            let x = a[i * d + l];
            if x == 0 {
                continue;
            }
            let row = &b[l * d..(l + 1) * d];
            let out = &mut c[i * d..(i + 1) * d];
            for (o, y) in out.iter_mut().zip(row) {
                if *y != 0 {
                    *o = (*o + mulmod(x, *y)) % PRIME;
                }
            }
        }
    }
    c
}

/// Span dimension modulo a fixed prime, or `None` if a denominator vanishes.
fn modular_span_dim(m: &MatrixModule) -> Option<usize> {
    let d = m.dim();
    let gens: Vec<Vec<u64>> = m
        .generators()
        .iter()
        .map(|g| g.as_slice().iter().map(to_mod).collect::<Option<Vec<_>>>())
        .collect::<Option<_>>()?;
    let mut id = vec![0u64; d * d];
    for i in 0..d {
        id[i * d + i] = 1;
    }
    let mut span = ModEchelon { rows: Vec::new() };
    span.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(b) = queue.pop_front() {
        if span.rows.len() == d * d {
            break;
        }
        for g in &gens {
            let c = mod_mul(g, &b, d);
            if span.insert(c.clone()) {
                queue.push_back(c);
            }
        }
    }
    Some(span.rows.len())
}

/// Searches weight eigenspaces over a small projective grid for a vector
/// generating a proper submodule.
fn weight_grid_submodule(m: &MatrixModule) -> Option<usize> {
    let d = m.dim();
    let table = weight_table(m).ok()?;
    let gens = m.generators();
    let coeffs: Vec<Rational> = [-2i64, -1, 1, 2].iter().map(|&c| Rational::from_integer(c.into())).collect();
    for entry in &table.entries {
        let es = &entry.eigenspace;
        let mut tries: Vec<Vec<Rational>> = es.clone();
        if es.len() <= 3 {
            for a in 0..es.len() {
                for b in a + 1..es.len() {
                    for c in &coeffs {
                        tries.push(es[a].iter().zip(&es[b]).map(|(x, y)| x + c * y).collect());
                    }
                }
            }
        }
        for v in tries {
            let sub = generated_by(&gens, &v);
            if !sub.is_empty() && sub.len() < d {
                return Some(sub.len());
            }
        }
    }
    None
}

/// Full verdict with the method that produced it.
pub fn burnside_span_dim(m: &MatrixModule) -> BurnsideVerdict {
    let d = m.dim();
    if d <= EXACT_LIMIT {
        let s = exact_span_dim(m);
        return BurnsideVerdict {
            irreducible: s == d * d,
            span_dim: Some(s),
            submodule_dim: None,
            method: BurnsideMethod::Exact,
        };
    }
    if modular_span_dim(m) == Some(d * d) {
        return BurnsideVerdict {
            irreducible: true,
            span_dim: Some(d * d),
            submodule_dim: None,
            method: BurnsideMethod::ModularFull,
        };
    }
    if let Some(s) = weight_grid_submodule(m) {
        return BurnsideVerdict {
            irreducible: false,
            span_dim: None,
            submodule_dim: Some(s),
            method: BurnsideMethod::Submodule,
        };
    }
    let s = exact_span_dim(m);
    BurnsideVerdict {
        irreducible: s == d * d,
        span_dim: Some(s),
        submodule_dim: None,
        method: BurnsideMethod::Exact,
    }
}

pub fn burnside_irreducible(m: &MatrixModule) -> bool {
    burnside_span_dim(m).irreducible
}

#[cfg(test)]
mod tests {
    use super::super::{build_m, FullCharacter};
    use super::*;
    use crate::algebra::AlgebraContext;
    use crate::rational::{rat, ratio};

    fn module(gamma: &[Rational], mu: &str, k: Rational) -> MatrixModule {
        let c = AlgebraContext::new(gamma.len(), k).unwrap();
        build_m(&FullCharacter::new(gamma.to_vec(), mu.parse().unwrap()).unwrap(), &c).unwrap()
    }

    #[test]
    fn small_verdicts() {
        let one = module(&[rat(7)], "-", rat(1));
        assert!(burnside_irreducible(&one));
        let v = burnside_span_dim(&module(&[rat(1), rat(0)], "++", rat(1)));
        assert_eq!((v.irreducible, v.span_dim), (true, Some(4)));
        assert!(!burnside_irreducible(&module(&[rat(2), rat(0)], "++", rat(1))));
    }

    #[test]
    fn modular_reduction() {
        assert_eq!(to_mod(&ratio(1, 2)), Some((PRIME + 1) / 2));
        assert_eq!(to_mod(&rat(-1)), Some(PRIME - 1));
        assert_eq!(to_mod(&Rational::new(1.into(), BigInt::from(PRIME))), None);
    }

    #[test]
    fn modular_and_exact_agree_on_rank_three() {
        for (g, mu) in [([1, 5, 9], "+++"), ([2, 0, 7], "+++"), ([3, 1, 3], "+-+"), ([5, 0, 3], "+-+")] {
            let m = module(&g.map(rat), mu, rat(1));
            let exact = exact_span_dim(&m);
            let modular = modular_span_dim(&m).unwrap();
            assert_eq!(exact, modular, "{g:?} {mu}");
        }
    }
}
