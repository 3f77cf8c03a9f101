//! Principal series modules as explicit matrices.
//!
//! `M(γ̃)` has basis `t_w ⊗ v`, `w ∈ W_A`, ordered by length and then one-line
//! form. On that basis
//!
//! ```text
//! ε_l · t_w⊗v = γ_{w^{-1}*l} t_w⊗v − Σ_{α_{a,b} ∈ R(w^{-1})} ⟨α^∨, ε_l⟩ k(1 + ^wμ(t_a t_b)) t_{s_α w}⊗v
//! t_i · t_w⊗v = ^wμ(t_i) t_w⊗v,      t_g · t_w⊗v = t_{gw}⊗v  (g ∈ W_A)
//! ```
//!
//! `N(γ̄)` is the same space with the `ℍ_D` generator list.

mod assertion;
mod burnside;
mod dump;
mod intertwiner;
mod weights;

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraContext, AlgebraElement};
use crate::error::{HeckeError, Result};
use crate::linalg::Matrix;
use crate::rational::{rat, Rational};
use crate::weylgroup::{all_wa, char_action, RootKind, SignCharacter, SignedPermutation};

pub use assertion::{f1_weights, assertion48_submodule, tau, F1Weights, Assertion48, SchurBranch};
pub use burnside::{burnside_irreducible, burnside_span_dim, exact_span_dim, BurnsideMethod, BurnsideVerdict};
pub use dump::{BlockDump, GeneratorDump, ModuleDump, OracleDump, WeightDump};
pub use intertwiner::{homomorphisms, intertwiner, IntertwinerResult};
pub(crate) use weights::generated_by;
pub use weights::{
    find_proper_submodule, generalized_weight_multiset, isotypic_decomposition, quotient,
    submodule_generated, weight_table, weight_table_with_candidates, IsotypicBlock, Weight,
    WeightEntry, WeightTable,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlgebraType {
    B,
    D,
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraType::B => "B",
            AlgebraType::D => "D",
        })
    }
}

/// Which algebra the generator matrices represent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModuleKind {
    /// `ℍ_B(k̃)`: `ε_l`, `t_{s_{α_j}}`, `t_i`.
    B,
    /// `ℍ_D`: `ε_l`, `t_{s_{α_j}}`, `u_i = t_i t_{i+1}`.
    D,
    /// Graded Hecke algebra of `R_i` (type `A_{i−1} × A_{n−i−1}`): `ε_l`, `t_{s_{α_j}}` for `j ≠ i`.
    GradedHecke { i: usize },
}

/// `γ̃ = γ ⊗ μ`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FullCharacter {
    #[serde(with = "crate::rational::serde_rational::vec")]
    pub gamma: Vec<Rational>,
    pub mu: SignCharacter,
}

impl FullCharacter {
    pub fn new(gamma: Vec<Rational>, mu: SignCharacter) -> Result<Self> {
        if gamma.len() != mu.rank() {
            return Err(HeckeError::SizeMismatch {
                expected: mu.rank(),
                found: gamma.len(),
            });
        }
        Ok(FullCharacter { gamma, mu })
    }

    pub fn rank(&self) -> usize {
        self.gamma.len()
    }

    /// `^wγ̃ = ^wγ ⊗ ^wμ` for `w ∈ W_A`.
    pub fn act(&self, w: &SignedPermutation) -> Result<FullCharacter> {
        Ok(FullCharacter {
            gamma: w.act_on_form(&self.gamma)?,
            mu: char_action(w, &self.mu)?,
        })
    }

    /// `γ̃^* = (−^{w_0}γ) ⊗ (−^{w_0}μ)`.
    pub fn dual(&self) -> FullCharacter {
        let w0 = SignedPermutation::longest_a(self.rank());
        let g = self.act(&w0).expect("w_0 in W_A");
        FullCharacter {
            gamma: g.gamma.iter().map(|x| -x).collect(),
            mu: g.mu.negate(),
        }
    }

    /// `γ ⊗ (−μ)`.
    pub fn negate_mu(&self) -> FullCharacter {
        FullCharacter {
            gamma: self.gamma.clone(),
            mu: self.mu.negate(),
        }
    }
}

impl fmt::Display for FullCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gamma.iter().map(ToString::to_string).collect();
        write!(f, "({})⊗{}", g.join(","), self.mu)
    }
}

impl fmt::Debug for FullCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite-dimensional module given by one matrix per generator.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixModule {
    kind: ModuleKind,
    n: usize,
    param: Rational,
    labels: Vec<SignedPermutation>,
    eps: Vec<Matrix>,
    simple: Vec<(usize, Matrix)>,
    torus: Vec<Matrix>,
    character: Option<FullCharacter>,
}

impl MatrixModule {
    /// Assembles a module and checks every defining relation exactly.
    pub fn from_parts(
        kind: ModuleKind,
        n: usize,
        param: Rational,
        labels: Vec<SignedPermutation>,
        eps: Vec<Matrix>,
        simple: Vec<(usize, Matrix)>,
        torus: Vec<Matrix>,
        character: Option<FullCharacter>,
    ) -> Result<Self> {
        let m = MatrixModule {
            kind,
            n,
            param,
            labels,
            eps,
            simple,
            torus,
            character,
        };
        m.check_shapes()?;
        m.verify_relations()?;
        Ok(m)
    }

    pub fn kind(&self) -> ModuleKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// `k` for `ℍ_B`/`ℍ_D`, `c` for the graded Hecke algebra.
    pub fn param(&self) -> &Rational {
        &self.param
    }

    pub fn labels(&self) -> &[SignedPermutation] {
        &self.labels
    }

    pub fn character(&self) -> Option<&FullCharacter> {
        self.character.as_ref()
    }

    pub fn eps(&self) -> &[Matrix] {
        &self.eps
    }

    /// `(j, t_{s_{α_j}})`, `j` 1-based.
    pub fn simple(&self) -> &[(usize, Matrix)] {
        &self.simple
    }

    /// `t_i` for type `B`, `u_i = t_i t_{i+1}` for type `D`.
    pub fn torus(&self) -> &[Matrix] {
        &self.torus
    }

    /// All generator matrices in the order `ε`, `t_s`, torus.
    pub fn generators(&self) -> Vec<&Matrix> {
        self.eps
            .iter()
            .chain(self.simple.iter().map(|(_, m)| m))
            .chain(self.torus.iter())
            .collect()
    }

    pub fn generator_names(&self) -> Vec<String> {
        let mut names: Vec<String> = (1..=self.eps.len()).map(|l| format!("e{l}")).collect();
        names.extend(self.simple.iter().map(|(j, _)| format!("ts{j}")));
        let t = if self.kind == ModuleKind::D { "u" } else { "t" };
        names.extend((1..=self.torus.len()).map(|i| format!("{t}{i}")));
        names
    }

    /// The commuting family `S(V) ⊗ ℂT` (or `ℂU`).
    pub fn commutative_generators(&self) -> Vec<&Matrix> {
        self.eps.iter().chain(self.torus.iter()).collect()
    }

    fn check_shapes(&self) -> Result<()> {
        let d = self.dim();
        let expected_torus = match self.kind {
            ModuleKind::B => self.n,
            ModuleKind::D => self.n.saturating_sub(1),
            ModuleKind::GradedHecke { .. } => 0,
        };
        if self.eps.len() != self.n || self.torus.len() != expected_torus {
            return Err(HeckeError::ShapeMismatch("generator count".into()));
        }
        if self.generators().iter().any(|m| m.rows() != d || m.cols() != d) {
            return Err(HeckeError::ShapeMismatch(format!("matrices must be {d}×{d}")));
        }
        Ok(())
    }

    fn simple_matrix(&self, j: usize) -> Option<&Matrix> {
        self.simple.iter().find(|(i, _)| *i == j).map(|(_, m)| m)
    }

    /// `ρ(t_a t_b)` for `a ≠ b` (0-based).
    fn torus_pair(&self, a: usize, b: usize) -> Result<Matrix> {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        match self.kind {
            ModuleKind::B => Ok(&self.torus[a] * &self.torus[b]),
            ModuleKind::D => {
                let mut m = Matrix::identity(self.dim());
                for u in &self.torus[a..b] {
                    m = &m * u;
                }
                Ok(m)
            }
            ModuleKind::GradedHecke { .. } => Err(HeckeError::ShapeMismatch(
                "graded Hecke modules carry no torus".into(),
            )),
        }
    }

    /// `ρ(k̃_{α_j})`, or `c · I` for the graded Hecke algebra.
    fn k_tilde_simple(&self, j: usize) -> Result<Matrix> {
        let d = self.dim();
        match self.kind {
            ModuleKind::GradedHecke { .. } => Ok(Matrix::scalar(d, &self.param)),
            _ => Ok((&Matrix::identity(d) + &self.torus_pair(j - 1, j)?).scale(&self.param)),
        }
    }

    /// Checks the defining relations; the error names the first violation.
    pub fn verify_relations(&self) -> Result<()> {
        let d = self.dim();
        let id = Matrix::identity(d);
        let fail = |what: String| Err(HeckeError::RelationViolated(what));
        for (a, ea) in self.eps.iter().enumerate() {
            for eb in &self.eps[a + 1..] {
                if &(ea * eb) - &(eb * ea) != Matrix::zeros(d, d) {
                    return fail("ε-matrices do not commute".into());
                }
            }
            for (i, t) in self.torus.iter().enumerate() {
                if ea * t != t * ea {
                    return fail(format!("ε_{} does not commute with torus generator {}", a + 1, i + 1));
                }
            }
        }
        for (i, t) in self.torus.iter().enumerate() {
            if t * t != id {
                return fail(format!("torus generator {} does not square to 1", i + 1));
            }
            for u in &self.torus[i + 1..] {
                if t * u != u * t {
                    return fail("torus generators do not commute".into());
                }
            }
        }
        for (j, s) in &self.simple {
            let j = *j;
            if s * s != id {
                return fail(format!("t_s{j}^2 ≠ 1"));
            }
            for (i, r) in &self.simple {
                let i = *i;
                if i <= j {
                    continue;
                }
                let ok = if i == j + 1 {
                    &(s * r) * s == &(r * s) * r
                } else {
                    s * r == r * s
                };
                if !ok {
                    return fail(format!("braid relation between t_s{j} and t_s{i}"));
                }
            }
            let sw = SignedPermutation::simple(self.n, j)?;
            match self.kind {
                ModuleKind::B => {
                    for (i, t) in self.torus.iter().enumerate() {
                        if &(s * t) * s != self.torus[sw.star(i)] {
                            return fail(format!("t_s{j} t_{} t_s{j} ≠ t_(s*{})", i + 1, i + 1));
                        }
                    }
                }
                ModuleKind::D => {
                    for (i, u) in self.torus.iter().enumerate() {
                        let target = self.torus_pair(sw.star(i), sw.star(i + 1))?;
                        if &(s * u) * s != target {
                            return fail(format!("t_s{j} u_{} t_s{j} relation", i + 1));
                        }
                    }
                }
                ModuleKind::GradedHecke { .. } => {}
            }
            let kt = self.k_tilde_simple(j)?;
            let alpha = crate::weylgroup::Root::a(j - 1, j);
            for (l, e) in self.eps.iter().enumerate() {
                let pairing = alpha.coroot_pairing(l, self.n);
                let mut rhs = &self.eps[sw.star(l)] * s;
                if pairing != 0 {
                    rhs = &rhs - &kt.scale(&rat(pairing));
                }
                if s * e != rhs {
                    return fail(format!("t_s{j} ε_{} relation", l + 1));
                }
            }
        }
        Ok(())
    }

    /// Whether the commuting family is upper triangular in the stored basis.
    pub fn is_triangular(&self) -> bool {
        self.commutative_generators()
            .iter()
            .all(|m| m.is_upper_triangular())
    }

    /// `ρ(t_x)` for `x ∈ T` (type `B`) or `x ∈ U` (type `D`).
    pub fn torus_matrix(&self, x: &SignedPermutation) -> Result<Matrix> {
        let neg: Vec<usize> = (0..self.n).filter(|&i| x.signs()[i] < 0).collect();
        let mut m = Matrix::identity(self.dim());
        match self.kind {
            ModuleKind::B => {
                for i in neg {
                    m = &m * &self.torus[i];
                }
            }
            ModuleKind::D => {
                if neg.len() % 2 == 1 {
                    return Err(HeckeError::NotInHD);
                }
                for pair in neg.chunks(2) {
                    m = &m * &self.torus_pair(pair[0], pair[1])?;
                }
            }
            ModuleKind::GradedHecke { .. } => {
                if !neg.is_empty() {
                    return Err(HeckeError::ShapeMismatch("no torus in graded Hecke".into()));
                }
            }
        }
        Ok(m)
    }

    /// `ρ(t_w)`.
    pub fn group_matrix(&self, w: &SignedPermutation) -> Result<Matrix> {
        if w.rank() != self.n {
            return Err(HeckeError::SizeMismatch {
                expected: self.n,
                found: w.rank(),
            });
        }
        let mut m = self.torus_matrix(&w.t_part())?;
        for j in w.wa_part().reduced_word()? {
            let s = self.simple_matrix(j).ok_or_else(|| {
                HeckeError::ShapeMismatch(format!("t_s{j} is not a generator of this module"))
            })?;
            m = &m * s;
        }
        Ok(m)
    }

    /// `ρ(a)` for an algebra element in normal form.
    pub fn element_matrix(&self, a: &AlgebraElement) -> Result<Matrix> {
        if a.rank() != self.n {
            return Err(HeckeError::ContextMismatch);
        }
        let d = self.dim();
        let mut out = Matrix::zeros(d, d);
        for (e, w, c) in a.terms() {
            let mut m = Matrix::identity(d);
            for (l, &p) in e.iter().enumerate() {
                for _ in 0..p {
                    m = &m * &self.eps[l];
                }
            }
            m = &m * &self.group_matrix(w)?;
            out = &out + &m.scale(c);
        }
        Ok(out)
    }

    /// The dual module: `a` acts by the transpose of `ι(a)`.
    pub fn dual(&self) -> Result<MatrixModule> {
        let neg_t = |m: &Matrix| -&m.transpose();
        let torus = match self.kind {
            ModuleKind::B => self.torus.iter().map(neg_t).collect(),
            _ => self.torus.iter().map(Matrix::transpose).collect(),
        };
        MatrixModule::from_parts(
            self.kind,
            self.n,
            self.param.clone(),
            self.labels.clone(),
            self.eps.iter().map(neg_t).collect(),
            self.simple.iter().map(|(j, m)| (*j, neg_t(m))).collect(),
            torus,
            self.character.as_ref().map(FullCharacter::dual),
        )
    }

    /// `^ϰM`: the generator `g` acts by `ρ(ϰ(g))`.
    pub fn twist(&self, aut: &TwistBy) -> Result<MatrixModule> {
        let (eps, simple, torus) = match aut {
            TwistBy::Delta => {
                let torus = match self.kind {
                    ModuleKind::B => self.torus.iter().map(|m| -m).collect(),
                    _ => self.torus.clone(),
                };
                (self.eps.clone(), self.simple.clone(), torus)
            }
            TwistBy::Int(w) => {
                let ctx = AlgebraContext::new(self.n, self.param.clone())?;
                let tw = ctx.group(w)?;
                let tw_inv = ctx.group(&w.inverse())?;
                let gens = match self.kind {
                    ModuleKind::B => ctx.generators_b(),
                    ModuleKind::D => ctx.generators_d(),
                    ModuleKind::GradedHecke { .. } => {
                        return Err(HeckeError::ShapeMismatch(
                            "Int(w) twists are defined for ℍ_B and ℍ_D modules".into(),
                        ))
                    }
                };
                let mut images = Vec::with_capacity(gens.len());
                for g in &gens {
                    images.push(self.element_matrix(&ctx.product(&[&tw, g, &tw_inv])?)?);
                }
                let mut it = images.into_iter();
                let eps: Vec<Matrix> = it.by_ref().take(self.n).collect();
                let simple: Vec<(usize, Matrix)> = self
                    .simple
                    .iter()
                    .map(|(j, _)| *j)
                    .zip(it.by_ref())
                    .collect();
                let torus: Vec<Matrix> = it.collect();
                (eps, simple, torus)
            }
        };
        MatrixModule::from_parts(
            self.kind,
            self.n,
            self.param.clone(),
            self.labels.clone(),
            eps,
            simple,
            torus,
            None,
        )
    }

    /// Index of each basis label.
    pub fn label_index(&self) -> HashMap<SignedPermutation, usize> {
        self.labels
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect()
    }
}

/// Automorphisms available for [`MatrixModule::twist`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwistBy {
    Delta,
    Int(SignedPermutation),
}

/// Shared construction of the `ε`-matrices on a set of `W_A` labels.
///
/// `factor(w, a, b)` is the scalar by which `k̃_{α_{a,b}}` acts on `t_{s_α w} ⊗ v`.
fn principal_series_matrices(
    labels: &[SignedPermutation],
    gamma: &[Rational],
    factor: impl Fn(&SignedPermutation, usize, usize) -> Rational,
) -> Result<Vec<Matrix>> {
    let n = gamma.len();
    let d = labels.len();
    let index: HashMap<&SignedPermutation, usize> = labels.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut eps = vec![Matrix::zeros(d, d); n];
    for (c, w) in labels.iter().enumerate() {
        let winv = w.inverse();
        for (l, e) in eps.iter_mut().enumerate() {
            e[(c, c)] = gamma[winv.star(l)].clone();
        }
        for alpha in w.inversion_set()? {
            let RootKind::A { p: a, q: b } = alpha.kind else {
                unreachable!("inversion sets hold A-roots")
            };
            let f = factor(w, a, b);
            if f.is_zero() {
                continue;
            }
            let target = alpha.reflection(n).compose(w)?;
            let r = *index
                .get(&target)
                .ok_or_else(|| HeckeError::ShapeMismatch(format!("label {target} missing")))?;
            eps[a][(r, c)] -= &f;
            eps[b][(r, c)] += &f;
        }
    }
    Ok(eps)
}

fn permutation_matrix(labels: &[SignedPermutation], g: &SignedPermutation) -> Result<Matrix> {
    let d = labels.len();
    let index: HashMap<&SignedPermutation, usize> = labels.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut m = Matrix::zeros(d, d);
    for (c, w) in labels.iter().enumerate() {
        let gw = g.compose(w)?;
        let r = *index
            .get(&gw)
            .ok_or_else(|| HeckeError::ShapeMismatch(format!("label {gw} missing")))?;
        m[(r, c)] = Rational::one();
    }
    Ok(m)
}

fn build_ps(kind: ModuleKind, chi: &FullCharacter, k: &Rational) -> Result<MatrixModule> {
    if k.is_zero() {
        return Err(HeckeError::ZeroMultiplicity);
    }
    let n = chi.rank();
    let labels = all_wa(n);
    let mu = &chi.mu;
    let eps = principal_series_matrices(&labels, &chi.gamma, |w, a, b| {
        let winv = w.inverse();
        let prod = mu.value(winv.star(a)) * mu.value(winv.star(b));
        k * rat(1 + i64::from(prod))
    })?;
    let simple = (1..n)
        .map(|j| Ok((j, permutation_matrix(&labels, &SignedPermutation::simple(n, j)?)?)))
        .collect::<Result<Vec<_>>>()?;
    let d = labels.len();
    let t_values: Vec<Vec<i8>> = labels
        .iter()
        .map(|w| char_action(w, mu).map(|m| m.values().to_vec()))
        .collect::<Result<_>>()?;
    let diag = |f: &dyn Fn(&[i8]) -> i8| {
        let mut m = Matrix::zeros(d, d);
        for (c, vals) in t_values.iter().enumerate() {
            m[(c, c)] = rat(i64::from(f(vals)));
        }
        m
    };
    let torus: Vec<Matrix> = match kind {
        ModuleKind::B => (0..n).map(|i| diag(&|v: &[i8]| v[i])).collect(),
        ModuleKind::D => (0..n.saturating_sub(1))
            .map(|i| diag(&|v: &[i8]| v[i] * v[i + 1]))
            .collect(),
        ModuleKind::GradedHecke { .. } => unreachable!("built separately"),
    };
    MatrixModule::from_parts(kind, n, k.clone(), labels, eps, simple, torus, Some(chi.clone()))
}

/// `M(γ̃)` over `ℍ_B(k̃)`.
pub fn build_m(chi: &FullCharacter, ctx: &AlgebraContext) -> Result<MatrixModule> {
    if chi.rank() != ctx.n() {
        return Err(HeckeError::SizeMismatch {
            expected: ctx.n(),
            found: chi.rank(),
        });
    }
    build_ps(ModuleKind::B, chi, ctx.k())
}

/// `N(γ̄)` over `ℍ_D`, given through either lift `μ` of `μ̄`.
pub fn build_n(chi: &FullCharacter, ctx: &AlgebraContext) -> Result<MatrixModule> {
    if chi.rank() != ctx.n() {
        return Err(HeckeError::SizeMismatch {
            expected: ctx.n(),
            found: chi.rank(),
        });
    }
    build_ps(ModuleKind::D, chi, ctx.k())
}

/// `W_i ≅ S_i × S_{n−i}`: permutations preserving `{1..i}` and `{i+1..n}`.
pub fn block_group(n: usize, i: usize) -> Vec<SignedPermutation> {
    all_wa(n)
        .into_iter()
        .filter(|w| (0..n).all(|j| (j < i) == (w.star(j) < i)))
        .collect()
}

/// Principal series `M_i(ν)` of the graded Hecke algebra `ℍ_gr(c, S_i)`.
pub fn build_graded_hecke_ps(n: usize, i: usize, c: &Rational, nu: &[Rational]) -> Result<MatrixModule> {
    if nu.len() != n {
        return Err(HeckeError::SizeMismatch {
            expected: n,
            found: nu.len(),
        });
    }
    if i > n {
        return Err(HeckeError::IndexOutOfRange { index: i, max: n });
    }
    let labels = block_group(n, i);
    let eps = principal_series_matrices(&labels, nu, |_, _, _| c.clone())?;
    let simple = (1..n)
        .filter(|&j| j != i)
        .map(|j| Ok((j, permutation_matrix(&labels, &SignedPermutation::simple(n, j)?)?)))
        .collect::<Result<Vec<_>>>()?;
    MatrixModule::from_parts(
        ModuleKind::GradedHecke { i },
        n,
        c.clone(),
        labels,
        eps,
        simple,
        Vec::new(),
        None,
    )
}

/// Restriction of the `ε` and `W_i`-generator matrices of `M(ν ⊗ μ_i)` to the
/// block `E_1`, as a graded Hecke module with `c = 2k`.
pub fn e1_as_graded_hecke(m: &MatrixModule) -> Result<MatrixModule> {
    let chi = m
        .character()
        .ok_or_else(|| HeckeError::Hypothesis("module has no recorded character".into()))?;
    let i = chi.mu.plus_count();
    if chi.mu != SignCharacter::standard(m.rank(), i) {
        return Err(HeckeError::Hypothesis("character must be μ_i".into()));
    }
    let index = m.label_index();
    let labels = block_group(m.rank(), i);
    let idx: Vec<usize> = labels.iter().map(|w| index[w]).collect();
    let eps = m.eps().iter().map(|e| e.submatrix(&idx, &idx)).collect();
    let simple = m
        .simple()
        .iter()
        .filter(|(j, _)| *j != i)
        .map(|(j, s)| (*j, s.submatrix(&idx, &idx)))
        .collect();
    MatrixModule::from_parts(
        ModuleKind::GradedHecke { i },
        m.rank(),
        m.param() * rat(2),
        labels,
        eps,
        simple,
        Vec::new(),
        None,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{ratio, rat};

    fn chi(gamma: &[i64], mu: &str) -> FullCharacter {
        FullCharacter::new(gamma.iter().map(|&g| rat(g)).collect(), mu.parse().unwrap()).unwrap()
    }

    fn ctx(n: usize) -> AlgebraContext {
        AlgebraContext::new(n, rat(1)).unwrap()
    }

    #[test]
    fn rank_one_module() {
        let m = build_m(&chi(&[3], "-"), &ctx(1)).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.eps()[0][(0, 0)], rat(3));
        assert_eq!(m.torus()[0][(0, 0)], rat(-1));
    }

    #[test]
    fn rank_two_eps_matrix() {
        let k = ratio(3, 2);
        let c = AlgebraContext::new(2, k.clone()).unwrap();
        let gamma = vec![rat(5), rat(-1)];
        let m = build_m(&FullCharacter::new(gamma, "++".parse().unwrap()).unwrap(), &c).unwrap();
        let e1 = Matrix::from_rows(vec![vec![rat(5), -(&k * rat(2))], vec![rat(0), rat(-1)]]);
        assert_eq!(m.eps()[0], e1);
        let split = build_m(&chi(&[5, -1], "+-"), &c).unwrap();
        assert!(split.eps()[0][(0, 1)].is_zero());
        assert!(m.is_triangular());
    }

    #[test]
    fn n_module_restricts_m() {
        let c = ctx(2);
        let x = chi(&[1, 0], "+-");
        let n = build_n(&x, &c).unwrap();
        let m = build_m(&x, &c).unwrap();
        assert_eq!(n.torus()[0], Matrix::scalar(2, &rat(-1)));
        assert_eq!(n.eps(), m.eps());
        assert_eq!(n.simple(), m.simple());
        assert_eq!(n.torus()[0], &m.torus()[0] * &m.torus()[1]);
    }

    #[test]
    fn relations_hold_n3() {
        let c = ctx(3);
        for mu in SignCharacter::all(3) {
            let x = FullCharacter::new(vec![rat(2), ratio(1, 3), rat(-4)], mu).unwrap();
            assert!(build_m(&x, &c).unwrap().is_triangular());
            build_n(&x, &c).unwrap();
        }
    }

    #[test]
    fn broken_relations_are_reported() {
        let m = build_m(&chi(&[1, 0], "++"), &ctx(2)).unwrap();
        let mut eps = m.eps().to_vec();
        eps[0][(0, 1)] = rat(7);
        let err = MatrixModule::from_parts(
            ModuleKind::B,
            2,
            rat(1),
            m.labels().to_vec(),
            eps,
            m.simple().to_vec(),
            m.torus().to_vec(),
            None,
        );
        assert!(matches!(err, Err(HeckeError::RelationViolated(_))));
    }

    #[test]
    fn element_matrix_matches_generators() {
        let c = ctx(3);
        let m = build_m(&chi(&[1, 4, -2], "+-+"), &c).unwrap();
        assert_eq!(m.element_matrix(&c.eps(2).unwrap()).unwrap(), m.eps()[1]);
        assert_eq!(m.element_matrix(&c.ts(2).unwrap()).unwrap(), m.simple()[1].1);
        // ρ is multiplicative on a product computed in the algebra.
        let a = c.multiply(&c.ts(1).unwrap(), &c.eps(1).unwrap()).unwrap();
        assert_eq!(
            m.element_matrix(&a).unwrap(),
            &m.simple()[0].1 * &m.eps()[0]
        );
    }

    #[test]
    fn graded_hecke_dimensions() {
        let m = build_graded_hecke_ps(2, 1, &rat(2), &[rat(1), rat(0)]).unwrap();
        assert_eq!(m.dim(), 1);
        let full = build_graded_hecke_ps(3, 3, &rat(2), &[rat(1), rat(5), rat(9)]).unwrap();
        assert_eq!(full.dim(), 6);
    }

    #[test]
    fn twists_and_duals_satisfy_relations() {
        let c = ctx(3);
        let m = build_m(&chi(&[1, 4, -2], "++-"), &c).unwrap();
        m.dual().unwrap();
        m.twist(&TwistBy::Delta).unwrap();
        let w: SignedPermutation = "[2,3,1]".parse().unwrap();
        m.twist(&TwistBy::Int(w)).unwrap();
        assert_eq!(m.twist(&TwistBy::Int(SignedPermutation::identity(3))).unwrap().generators(), m.generators());
    }
}
