//! Signed permutations: the hyperoctahedral group `W_B = T ⋊ W_A`.
//!
//! An element is stored as a permutation `π` together with a sign attached to
//! each *target* coordinate, so that `w(ε_i) = signs[π(i)] · ε_{π(i)}`. With
//! this convention `w * i = π(i)` for `w ∈ W_A`, and the stored sign vector is
//! exactly the `T`-factor `x` in the factorization `w = x ∘ g`, `g ∈ W_A`.
//!
//! Indices are 0-based internally; every textual form is 1-based.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{HeckeError, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    /// Builds from a 0-based permutation and the target-indexed signs.
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(HeckeError::SizeMismatch {
                expected: n,
                found: signs.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(HeckeError::Parse(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(HeckeError::Parse("signs must be ±1".into()));
        }
        Ok(SignedPermutation { perm, signs })
    }

    /// Element of `W_A` from a 0-based permutation.
    pub fn from_perm(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        Self::new(perm, vec![1; n])
    }

    /// One-line notation: entry `i` is `±π(i)` (1-based) and gives `w(ε_i)`.
    pub fn from_one_line(entries: &[i64]) -> Result<Self> {
        let n = entries.len();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for (i, &e) in entries.iter().enumerate() {
            let j = e.unsigned_abs() as usize;
            if e == 0 || j > n {
                return Err(HeckeError::Parse(format!("bad one-line entry {e}")));
            }
            perm[i] = j - 1;
            signs[j - 1] = if e < 0 { -1 } else { 1 };
        }
        Self::new(perm, signs)
    }

    pub fn one_line(&self) -> Vec<i64> {
        self.perm
            .iter()
            .map(|&p| i64::from(self.signs[p]) * (p as i64 + 1))
            .collect()
    }

    /// `s_{p,q}`, the reflection in `ε_p − ε_q` (1-based, `p ≠ q`).
    pub fn transposition(n: usize, p: usize, q: usize) -> Result<Self> {
        check_index(p, n)?;
        check_index(q, n)?;
        if p == q {
            return Err(HeckeError::Parse("s_{p,q} needs p ≠ q".into()));
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(p - 1, q - 1);
        Self::from_perm(perm)
    }

    /// Simple reflection `s_{α_j}`, `1 ≤ j ≤ n − 1`.
    pub fn simple(n: usize, j: usize) -> Result<Self> {
        if j == 0 || j >= n {
            return Err(HeckeError::IndexOutOfRange {
                index: j,
                max: n.saturating_sub(1),
            });
        }
        Self::transposition(n, j, j + 1)
    }

    /// `t_i = s_{ε_i}` (1-based).
    pub fn sign_flip(n: usize, i: usize) -> Result<Self> {
        check_index(i, n)?;
        let mut signs = vec![1; n];
        signs[i - 1] = -1;
        Ok(SignedPermutation {
            perm: (0..n).collect(),
            signs,
        })
    }

    /// The element of `T` flipping the coordinates where `signs` is `-1`.
    pub fn torus(signs: Vec<i8>) -> Result<Self> {
        let n = signs.len();
        Self::new((0..n).collect(), signs)
    }

    /// Longest element `w_0` of `W_A`: `ε_j ↦ ε_{n+1−j}`.
    pub fn longest_a(n: usize) -> Self {
        SignedPermutation {
            perm: (0..n).rev().collect(),
            signs: vec![1; n],
        }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    /// `π` as a 0-based array.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Target-indexed signs.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// `w * i` for 0-based `i`.
    pub fn star(&self, i: usize) -> usize {
        self.perm[i]
    }

    /// Image of `ε_i` as `(sign, index)`, 0-based.
    pub fn image(&self, i: usize) -> (i8, usize) {
        let j = self.perm[i];
        (self.signs[j], j)
    }

    pub fn compose(&self, u: &SignedPermutation) -> Result<SignedPermutation> {
        if self.rank() != u.rank() {
            return Err(HeckeError::SizeMismatch {
                expected: self.rank(),
                found: u.rank(),
            });
        }
        Ok(self.compose_unchecked(u))
    }

    pub(crate) fn compose_unchecked(&self, u: &SignedPermutation) -> SignedPermutation {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            let (su, j) = u.image(i);
            let (sw, l) = self.image(j);
            perm[i] = l;
            signs[l] = su * sw;
        }
        SignedPermutation { perm, signs }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            let (s, j) = self.image(i);
            perm[j] = i;
            signs[i] = s;
        }
        SignedPermutation { perm, signs }
    }

    pub fn is_identity(&self) -> bool {
        self.is_in_t() && self.signs.iter().all(|&s| s == 1)
    }

    pub fn is_in_wa(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }

    pub fn is_in_t(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn is_in_u(&self) -> bool {
        self.is_in_t() && self.sign_product() == 1
    }

    /// Product of the signs: the sign character of the `T`-factor.
    pub fn sign_product(&self) -> i8 {
        self.signs.iter().product()
    }

    /// `det(w)` on `V`; this is the character `sgn` of `W_B`.
    pub fn det(&self) -> i8 {
        self.sign_product() * permutation_sign(&self.perm)
    }

    /// The `W_A`-factor `g` of `w = x ∘ g`.
    pub fn wa_part(&self) -> SignedPermutation {
        SignedPermutation {
            perm: self.perm.clone(),
            signs: vec![1; self.rank()],
        }
    }

    /// The `T`-factor `x` of `w = x ∘ g`.
    pub fn t_part(&self) -> SignedPermutation {
        SignedPermutation {
            perm: (0..self.rank()).collect(),
            signs: self.signs.clone(),
        }
    }

    pub fn act_on_vector(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.rank() {
            return Err(HeckeError::SizeMismatch {
                expected: self.rank(),
                found: v.len(),
            });
        }
        let mut out = vec![Rational::from_integer(0.into()); v.len()];
        for (i, x) in v.iter().enumerate() {
            let (s, j) = self.image(i);
            out[j] = if s < 0 { -x.clone() } else { x.clone() };
        }
        Ok(out)
    }

    /// `^wγ(ζ) = γ(w^{-1} ζ)` for a linear form given by its values on `ε_1..ε_n`.
    pub fn act_on_form(&self, gamma: &[Rational]) -> Result<Vec<Rational>> {
        // ^wγ(ε_l) = γ(w^{-1} ε_l); in coordinates this is again the vector action.
        self.act_on_vector(gamma)
    }

    /// Number of `A`-inversions; only meaningful on `W_A`.
    pub fn length_a(&self) -> Result<usize> {
        self.require_wa()?;
        Ok(inversions(&self.perm))
    }

    /// `R(w^{-1}) = {α ∈ R_A^+ : w^{-1}(α) ∈ R_A^-}`.
    pub fn inversion_set(&self) -> Result<Vec<Root>> {
        self.require_wa()?;
        let inv = self.inverse();
        let n = self.rank();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if inv.perm[a] > inv.perm[b] {
                    out.push(Root::a(a, b));
                }
            }
        }
        Ok(out)
    }

    /// Reduced word `[j_1, …, j_l]` (1-based) with `w = s_{j_1} ⋯ s_{j_l}`.
    pub fn reduced_word(&self) -> Result<Vec<usize>> {
        self.require_wa()?;
        let n = self.rank();
        let mut word = Vec::new();
        let mut g = self.clone();
        while !g.is_identity() {
            let inv = g.inverse();
            let j = (0..n - 1)
                .find(|&j| inv.perm[j] > inv.perm[j + 1])
                .expect("non-identity permutation has a left descent");
            word.push(j + 1);
            let s = SignedPermutation::simple(n, j + 1).expect("in range");
            g = s.compose_unchecked(&g);
        }
        Ok(word)
    }

    fn require_wa(&self) -> Result<()> {
        if self.is_in_wa() {
            Ok(())
        } else {
            Err(HeckeError::NotInWA(self.to_string()))
        }
    }

    /// Storage order: length of the `W_A` part, its one-line form, then signs.
    pub fn sort_key(&self) -> (usize, Vec<usize>, Vec<i8>) {
        (
            inversions(&self.perm),
            self.perm.clone(),
            self.signs.iter().map(|&s| if s < 0 { 1 } else { 0 }).collect(),
        )
    }
}

impl Ord for SignedPermutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for SignedPermutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SignedPermutation {
    type Err = HeckeError;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| HeckeError::Parse(format!("expected [..] one-line form, got `{s}`")))?;
        let entries: Vec<i64> = inner
            .split(',')
            .map(|e| {
                e.trim()
                    .parse::<i64>()
                    .map_err(|_| HeckeError::Parse(format!("bad entry `{e}` in `{s}`")))
            })
            .collect::<Result<_>>()?;
        Self::from_one_line(&entries)
    }
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        Err(HeckeError::IndexOutOfRange { index: i, max: n })
    } else {
        Ok(())
    }
}

fn inversions(perm: &[usize]) -> usize {
    let n = perm.len();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count()
}

fn permutation_sign(perm: &[usize]) -> i8 {
    if inversions(perm) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All of `W_A ≅ S_n`, sorted by length and then one-line form.
pub fn all_wa(n: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut out);
    let mut ws: Vec<SignedPermutation> = out
        .into_iter()
        .map(|p| SignedPermutation::from_perm(p).expect("valid"))
        .collect();
    ws.sort();
    ws
}

/// All of `W_B`, in storage order.
pub fn all_wb(n: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    for g in all_wa(n) {
        for x in all_torus(n) {
            out.push(x.compose_unchecked(&g));
        }
    }
    out.sort();
    out
}

/// All `2^n` elements of `T`.
pub fn all_torus(n: usize) -> Vec<SignedPermutation> {
    (0..1u32 << n)
        .map(|mask| {
            let signs = (0..n)
                .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                .collect();
            SignedPermutation::torus(signs).expect("valid")
        })
        .collect()
}

fn permutations(perm: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == perm.len() {
        out.push(perm.clone());
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permutations(perm, k + 1, out);
        perm.swap(k, i);
    }
}

/// A character `μ` of `T ≅ {±1}^n`, recorded by its values `μ(t_j)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignCharacter {
    values: Vec<i8>,
}

impl SignCharacter {
    pub fn new(values: Vec<i8>) -> Result<Self> {
        if values.iter().any(|&v| v != 1 && v != -1) {
            return Err(HeckeError::Parse("character values must be ±1".into()));
        }
        Ok(SignCharacter { values })
    }

    /// `μ_i`: `+1` on `t_1..t_i`, `-1` on the rest.
    pub fn standard(n: usize, i: usize) -> Self {
        SignCharacter {
            values: (0..n).map(|j| if j < i { 1 } else { -1 }).collect(),
        }
    }

    pub fn trivial(n: usize) -> Self {
        Self::standard(n, n)
    }

    pub fn all(n: usize) -> Vec<SignCharacter> {
        all_torus(n)
            .into_iter()
            .map(|x| SignCharacter {
                values: x.signs().to_vec(),
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    /// `μ(t_j)`, 0-based.
    pub fn value(&self, j: usize) -> i8 {
        self.values[j]
    }

    /// `μ(x)` for `x ∈ T`.
    pub fn evaluate(&self, x: &SignedPermutation) -> i8 {
        debug_assert!(x.is_in_t());
        x.signs()
            .iter()
            .zip(&self.values)
            .map(|(&s, &v)| if s < 0 { v } else { 1 })
            .product()
    }

    /// `−μ = sgn ⊗ μ`.
    pub fn negate(&self) -> Self {
        SignCharacter {
            values: self.values.iter().map(|v| -v).collect(),
        }
    }

    /// Number of `j` with `μ(t_j) = +1`.
    pub fn plus_count(&self) -> usize {
        self.values.iter().filter(|&&v| v == 1).count()
    }

    /// Values of the restriction `μ̄` on the generators `t_j t_{j+1}` of `U`.
    pub fn restrict_to_u(&self) -> Vec<i8> {
        self.values.windows(2).map(|w| w[0] * w[1]).collect()
    }
}

impl fmt::Display for SignCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.values {
            f.write_str(if v > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "μ({self})")
    }
}

impl FromStr for SignCharacter {
    type Err = HeckeError;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                _ => Err(HeckeError::Parse(format!("bad sign `{c}` in `{s}`"))),
            })
            .collect::<Result<Vec<i8>>>()
            .map(|values| SignCharacter { values })
    }
}

/// `^wμ(t_j) = μ(t_{w^{-1} * j})`.
pub fn char_action(w: &SignedPermutation, mu: &SignCharacter) -> Result<SignCharacter> {
    w.require_wa()?;
    if w.rank() != mu.rank() {
        return Err(HeckeError::SizeMismatch {
            expected: w.rank(),
            found: mu.rank(),
        });
    }
    let inv = w.inverse();
    Ok(SignCharacter {
        values: (0..mu.rank()).map(|j| mu.value(inv.star(j))).collect(),
    })
}

/// `(i, σ)` with `i = #{j : μ(t_j) = +1}` and `^σμ = μ_i`.
pub fn sigma_and_i(mu: &SignCharacter) -> (usize, SignedPermutation) {
    let n = mu.rank();
    let plus = (0..n).filter(|&j| mu.value(j) == 1);
    let minus = (0..n).filter(|&j| mu.value(j) == -1);
    let order: Vec<usize> = plus.chain(minus).collect();
    let mut perm = vec![0; n];
    for (p, &j) in order.iter().enumerate() {
        perm[j] = p;
    }
    (
        mu.plus_count(),
        SignedPermutation::from_perm(perm).expect("valid permutation"),
    )
}

/// Stabilizer `W_A(μ)` in storage order.
pub fn stabilizer(mu: &SignCharacter) -> Vec<SignedPermutation> {
    all_wa(mu.rank())
        .into_iter()
        .filter(|w| &char_action(w, mu).expect("in W_A") == mu)
        .collect()
}

/// Stabilizer `W_A(μ̄)` of the restriction to `U`: `^wμ ∈ {μ, −μ}`.
pub fn stabilizer_bar(mu: &SignCharacter) -> Vec<SignedPermutation> {
    let neg = mu.negate();
    all_wa(mu.rank())
        .into_iter()
        .filter(|w| {
            let wm = char_action(w, mu).expect("in W_A");
            wm == *mu || wm == neg
        })
        .collect()
}

/// Coset representatives of `W_A / W_A(μ)`, minimal length then lexicographic.
pub fn coset_reps(mu: &SignCharacter) -> Vec<SignedPermutation> {
    coset_reps_by(mu, |w| char_action(w, mu).expect("in W_A").values().to_vec())
}

/// Coset representatives of `W_A / W_A(μ̄)`.
pub fn coset_reps_bar(mu: &SignCharacter) -> Vec<SignedPermutation> {
    coset_reps_by(mu, |w| char_action(w, mu).expect("in W_A").restrict_to_u())
}

fn coset_reps_by(
    mu: &SignCharacter,
    key: impl Fn(&SignedPermutation) -> Vec<i8>,
) -> Vec<SignedPermutation> {
    let mut seen = std::collections::HashSet::new();
    all_wa(mu.rank())
        .into_iter()
        .filter(|w| seen.insert(key(w)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootKind {
    /// `α_{p,q} = ε_p − ε_q`.
    A { p: usize, q: usize },
    /// `ε_p`.
    Short { p: usize },
    /// `ε_p + ε_q`.
    LongSum { p: usize, q: usize },
}

/// A root of `R_B`, stored 0-based with an overall sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub kind: RootKind,
    pub sign: i8,
}

impl Root {
    /// Positive `A`-root `α_{p,q}` (0-based, `p < q`).
    pub fn a(p: usize, q: usize) -> Root {
        debug_assert!(p != q);
        if p < q {
            Root {
                kind: RootKind::A { p, q },
                sign: 1,
            }
        } else {
            Root {
                kind: RootKind::A { p: q, q: p },
                sign: -1,
            }
        }
    }

    pub fn short(p: usize) -> Root {
        Root {
            kind: RootKind::Short { p },
            sign: 1,
        }
    }

    pub fn long_sum(p: usize, q: usize) -> Root {
        let (p, q) = if p < q { (p, q) } else { (q, p) };
        Root {
            kind: RootKind::LongSum { p, q },
            sign: 1,
        }
    }

    /// Coordinates in the orthonormal basis `ε_1..ε_n`.
    pub fn coordinates(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0i64; n];
        match self.kind {
            RootKind::A { p, q } => {
                v[p] = 1;
                v[q] = -1;
            }
            RootKind::Short { p } => v[p] = 1,
            RootKind::LongSum { p, q } => {
                v[p] = 1;
                v[q] = 1;
            }
        }
        v.iter_mut().for_each(|x| *x *= i64::from(self.sign));
        v
    }

    /// `⟨α^∨, ε_l⟩` with `α^∨ = 2α/(α,α)`.
    pub fn coroot_pairing(&self, l: usize, n: usize) -> i64 {
        let c = self.coordinates(n)[l];
        match self.kind {
            RootKind::Short { .. } => 2 * c,
            _ => c,
        }
    }

    /// The reflection `s_α` as a signed permutation.
    pub fn reflection(&self, n: usize) -> SignedPermutation {
        let mut perm: Vec<usize> = (0..n).collect();
        let mut signs = vec![1i8; n];
        match self.kind {
            RootKind::A { p, q } => perm.swap(p, q),
            RootKind::Short { p } => signs[p] = -1,
            RootKind::LongSum { p, q } => {
                perm.swap(p, q);
                signs[p] = -1;
                signs[q] = -1;
            }
        }
        SignedPermutation::new(perm, signs).expect("valid reflection")
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign < 0 { "-" } else { "" };
        match self.kind {
            RootKind::A { p, q } => write!(f, "{s}α_{{{},{}}}", p + 1, q + 1),
            RootKind::Short { p } => write!(f, "{s}ε_{}", p + 1),
            RootKind::LongSum { p, q } => write!(f, "{s}(ε_{}+ε_{})", p + 1, q + 1),
        }
    }
}

/// Positive roots of `R_B`: long `ε_i ± ε_j` and short `ε_k`.
pub fn positive_roots_b(n: usize) -> Vec<Root> {
    let mut out = Vec::new();
    for p in 0..n {
        for q in p + 1..n {
            out.push(Root::a(p, q));
            out.push(Root::long_sum(p, q));
        }
    }
    for p in 0..n {
        out.push(Root::short(p));
    }
    out
}
