//! Weights, generated submodules, quotients and isotypic blocks.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::{MatrixModule, ModuleKind};
use crate::error::{HeckeError, Result};
use crate::linalg::{common_kernel, is_zero_vector, unit_vector, Echelon, Matrix};
use crate::rational::{rat, Rational};
use crate::weylgroup::{char_action, coset_reps, coset_reps_bar, SignCharacter, SignedPermutation};

/// A character of the commutative subalgebra: values on `ε_1..ε_n` and on the
/// torus generators (`t_i` or `u_i`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    #[serde(with = "crate::rational::serde_rational::vec")]
    pub eps: Vec<Rational>,
    pub torus: Vec<i8>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeightEntry {
    pub weight: Weight,
    pub eigenspace: Vec<Vec<Rational>>,
    pub generalized_dim: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeightTable {
    pub entries: Vec<WeightEntry>,
}

impl WeightTable {
    pub fn weights(&self) -> Vec<&Weight> {
        self.entries.iter().map(|e| &e.weight).collect()
    }

    pub fn total_generalized_dim(&self) -> usize {
        self.entries.iter().map(|e| e.generalized_dim).sum()
    }
}

fn shifted(m: &Matrix, lambda: &Rational) -> Matrix {
    m - &Matrix::scalar(m.rows(), lambda)
}

fn weight_values(w: &Weight) -> Vec<Rational> {
    w.eps
        .iter()
        .cloned()
        .chain(w.torus.iter().map(|&t| rat(i64::from(t))))
        .collect()
}

fn torus_value(x: &Rational) -> Option<i8> {
    if *x == rat(1) {
        Some(1)
    } else if *x == rat(-1) {
        Some(-1)
    } else {
        None
    }
}

/// Diagonal tuples of a triangular commuting family; these are its eigenvalues.
fn diagonal_candidates(m: &MatrixModule) -> Result<Vec<Weight>> {
    let comm = m.commutative_generators();
    let triangular = comm.iter().all(|a| a.is_upper_triangular())
        || comm.iter().all(|a| a.transpose().is_upper_triangular());
    if !triangular {
        return Err(HeckeError::ShapeMismatch(
            "weight candidates need a triangular commuting family".into(),
        ));
    }
    let n = m.rank();
    let mut out: Vec<Weight> = Vec::new();
    for c in 0..m.dim() {
        let eps = m.eps()[..n].iter().map(|e| e[(c, c)].clone()).collect();
        let torus = m
            .torus()
            .iter()
            .map(|t| torus_value(&t[(c, c)]).ok_or_else(|| HeckeError::RelationViolated("torus eigenvalue ≠ ±1".into())))
            .collect::<Result<_>>()?;
        let w = Weight { eps, torus };
        if !out.contains(&w) {
            out.push(w);
        }
    }
    Ok(out)
}

/// Weight spaces and generalized weight spaces.
pub fn weight_table(m: &MatrixModule) -> Result<WeightTable> {
    let candidates = diagonal_candidates(m)?;
    weight_table_with_candidates(m, &candidates)
}

/// As [`weight_table`] with an explicit candidate list; fails unless the
/// generalized weight spaces of the candidates exhaust the module.
pub fn weight_table_with_candidates(m: &MatrixModule, candidates: &[Weight]) -> Result<WeightTable> {
    let d = m.dim();
    let comm = m.commutative_generators();
    let mut entries = Vec::new();
    for w in candidates {
        let values = weight_values(w);
        if values.len() != comm.len() {
            return Err(HeckeError::ShapeMismatch("weight length".into()));
        }
        let shifts: Vec<Matrix> = comm.iter().zip(&values).map(|(a, l)| shifted(a, l)).collect();
        let eigen = common_kernel(&shifts, d);
        if eigen.is_empty() {
            continue;
        }
        let powers: Vec<Matrix> = shifts.iter().map(|s| s.pow(d as u32)).collect();
        let generalized = common_kernel(&powers, d).len();
        entries.push(WeightEntry {
            weight: w.clone(),
            eigenspace: eigen,
            generalized_dim: generalized,
        });
    }
    let table = WeightTable { entries };
    if table.total_generalized_dim() != d {
        return Err(HeckeError::RelationViolated(format!(
            "generalized weight spaces have total dimension {} ≠ {d}",
            table.total_generalized_dim()
        )));
    }
    Ok(table)
}

/// Multiset of generalized weights of a triangular commuting family, keyed by
/// the diagonal tuple.
pub fn generalized_weight_multiset(mats: &[Matrix]) -> BTreeMap<Vec<Rational>, usize> {
    let d = mats.first().map_or(0, Matrix::rows);
    let mut out = BTreeMap::new();
    let mut seen = Vec::new();
    for c in 0..d {
        let key: Vec<Rational> = mats.iter().map(|a| a[(c, c)].clone()).collect();
        if seen.contains(&key) {
            continue;
        }
        seen.push(key.clone());
        let powers: Vec<Matrix> = mats
            .iter()
            .zip(&key)
            .map(|(a, l)| shifted(a, l).pow(d as u32))
            .collect();
        out.insert(key, common_kernel(&powers, d).len());
    }
    out
}

/// Smallest subspace containing `v` and stable under every generator.
pub fn submodule_generated(m: &MatrixModule, v: &[Rational]) -> Vec<Vec<Rational>> {
    generated_by(&m.generators(), v)
}

pub(crate) fn generated_by(gens: &[&Matrix], v: &[Rational]) -> Vec<Vec<Rational>> {
    let d = v.len();
    let mut span = Echelon::new(d);
    let mut queue = VecDeque::new();
    if span.insert(v.to_vec()) {
        queue.push_back(v.to_vec());
    }
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.mul_vec(&x);
            if span.insert(y.clone()) {
                queue.push_back(y);
            }
        }
        if span.is_full() {
            break;
        }
    }
    span.basis().to_vec()
}

/// A proper nonzero submodule generated by a weight vector, if one is found.
///
/// Tries every eigenspace basis vector and the pairwise sums within each
/// eigenspace; a `None` is not a proof of irreducibility.
pub fn find_proper_submodule(m: &MatrixModule) -> Result<Option<Vec<Vec<Rational>>>> {
    let d = m.dim();
    let table = weight_table(m)?;
    for entry in &table.entries {
        let es = &entry.eigenspace;
        let mut tries: Vec<Vec<Rational>> = es.clone();
        for a in 0..es.len() {
            for b in a + 1..es.len() {
                tries.push(es[a].iter().zip(&es[b]).map(|(x, y)| x + y).collect());
            }
        }
        for v in tries {
            let sub = submodule_generated(m, &v);
            if !sub.is_empty() && sub.len() < d {
                return Ok(Some(sub));
            }
        }
    }
    Ok(None)
}

/// `M / W` on the complement spanned by the non-pivot coordinates of `W`.
pub fn quotient(m: &MatrixModule, sub: &[Vec<Rational>]) -> Result<MatrixModule> {
    let d = m.dim();
    let w = Echelon::from_vectors(d, sub.iter().cloned());
    for g in m.generators() {
        for b in w.basis() {
            if !w.contains(&g.mul_vec(b)) {
                return Err(HeckeError::Hypothesis("subspace is not a submodule".into()));
            }
        }
    }
    let keep: Vec<usize> = (0..d).filter(|i| !w.pivots().contains(i)).collect();
    let project = |g: &Matrix| {
        let mut q = Matrix::zeros(keep.len(), keep.len());
        for (c, &j) in keep.iter().enumerate() {
            let img = w.reduce(g.mul_vec(&unit_vector(d, j)));
            for (r, &i) in keep.iter().enumerate() {
                q[(r, c)] = img[i].clone();
            }
        }
        q
    };
    MatrixModule::from_parts(
        m.kind(),
        m.rank(),
        m.param().clone(),
        keep.iter().map(|&i| m.labels()[i].clone()).collect(),
        m.eps().iter().map(project).collect(),
        m.simple().iter().map(|(j, s)| (*j, project(s))).collect(),
        m.torus().iter().map(project).collect(),
        None,
    )
}

/// One isotypic component of the torus action.
#[derive(Clone, Debug, PartialEq)]
pub struct IsotypicBlock {
    /// Coset representative `w_j`.
    pub rep: SignedPermutation,
    /// Values of `^{w_j}μ` on the torus generators of the module.
    pub values: Vec<i8>,
    pub basis: Vec<Vec<Rational>>,
}

/// `E_j(γ̃)` for type `B` or `F_j(γ̄)` for type `D`, ordered by the coset
/// representatives of `μ` (resp. `μ̄`).
pub fn isotypic_decomposition(m: &MatrixModule, mu: &SignCharacter) -> Result<Vec<IsotypicBlock>> {
    let own = m
        .character()
        .ok_or_else(|| HeckeError::Hypothesis("module has no recorded character".into()))?;
    if mu.rank() != m.rank() {
        return Err(HeckeError::SizeMismatch {
            expected: m.rank(),
            found: mu.rank(),
        });
    }
    let reps = match m.kind() {
        ModuleKind::B => coset_reps(mu),
        ModuleKind::D => coset_reps_bar(mu),
        ModuleKind::GradedHecke { .. } => {
            return Err(HeckeError::ShapeMismatch("graded Hecke modules carry no torus".into()))
        }
    };
    let in_orbit = reps.iter().any(|w| {
        let x = char_action(w, mu).expect("in W_A");
        match m.kind() {
            ModuleKind::B => x == own.mu,
            _ => x == own.mu || x == own.mu.negate(),
        }
    });
    if !in_orbit {
        return Err(HeckeError::NotInOrbit);
    }
    let d = m.dim();
    let mut blocks = Vec::new();
    for w in reps {
        let x = char_action(&w, mu)?;
        let values = match m.kind() {
            ModuleKind::B => x.values().to_vec(),
            _ => x.restrict_to_u(),
        };
        let shifts: Vec<Matrix> = m
            .torus()
            .iter()
            .zip(&values)
            .map(|(t, &v)| shifted(t, &rat(i64::from(v))))
            .collect();
        let basis = common_kernel(&shifts, d);
        if basis.is_empty() || basis.iter().all(|b| is_zero_vector(b)) {
            return Err(HeckeError::RelationViolated(format!("isotypic block for {w} is empty")));
        }
        blocks.push(IsotypicBlock {
            rep: w,
            values,
            basis,
        });
    }
    let total: usize = blocks.iter().map(|b| b.basis.len()).sum();
    if total != d {
        return Err(HeckeError::RelationViolated(format!(
            "isotypic blocks have total dimension {total} ≠ {d}"
        )));
    }
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::super::{build_m, build_n, FullCharacter};
    use super::*;
    use crate::algebra::AlgebraContext;

    fn module(gamma: &[i64], mu: &str) -> MatrixModule {
        let c = AlgebraContext::new(gamma.len(), rat(1)).unwrap();
        let x = FullCharacter::new(gamma.iter().map(|&g| rat(g)).collect(), mu.parse().unwrap()).unwrap();
        build_m(&x, &c).unwrap()
    }

    #[test]
    fn weights_of_small_modules() {
        let t = weight_table(&module(&[1, 0], "++")).unwrap();
        let ws: Vec<Vec<Rational>> = t.entries.iter().map(|e| e.weight.eps.clone()).collect();
        assert_eq!(ws, vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]]);
        assert!(t.entries.iter().all(|e| e.generalized_dim == 1));
        assert_eq!(weight_table(&module(&[4], "+")).unwrap().entries.len(), 1);
        assert_eq!(weight_table(&module(&[1, 5, 9], "+-+")).unwrap().entries.len(), 6);
    }

    #[test]
    fn generated_submodules() {
        let m = module(&[2, 0], "++");
        assert!(submodule_generated(&m, &[rat(0), rat(0)]).is_empty());
        assert_eq!(submodule_generated(&m, &unit_vector(2, 0)).len(), 2);
        // The weight vector for ^sγ̃ = (0,2) spans a submodule.
        let t = weight_table(&m).unwrap();
        let e = t.entries.iter().find(|e| e.weight.eps == vec![rat(0), rat(2)]).unwrap();
        assert_eq!(submodule_generated(&m, &e.eigenspace[0]).len(), 1);
        let sub = find_proper_submodule(&m).unwrap().unwrap();
        let q = quotient(&m, &sub).unwrap();
        assert_eq!(q.dim(), 1);
    }

    #[test]
    fn isotypic_blocks() {
        let m = module(&[3, 1], "+-");
        let blocks = isotypic_decomposition(&m, &"+-".parse().unwrap()).unwrap();
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| b.basis.len() == 1));
        let triv = module(&[3, 1], "++");
        assert_eq!(isotypic_decomposition(&triv, &"++".parse().unwrap()).unwrap().len(), 1);
        assert_eq!(
            isotypic_decomposition(&triv, &"+-".parse().unwrap()),
            Err(HeckeError::NotInOrbit)
        );
        let c = AlgebraContext::new(2, rat(1)).unwrap();
        let x = FullCharacter::new(vec![rat(3), rat(1)], "+-".parse().unwrap()).unwrap();
        let n = build_n(&x, &c).unwrap();
        assert_eq!(isotypic_decomposition(&n, &"-+".parse().unwrap()).unwrap().len(), 1);
    }
}
