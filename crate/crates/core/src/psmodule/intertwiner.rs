//! Module homomorphisms `A` with `A·ρ₁(g) = ρ₂(g)·A` for every generator.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::MatrixModule;
use crate::error::{HeckeError, Result};
use crate::linalg::Matrix;
use crate::rational::{rat, Rational};

const RANDOM_TRIES: usize = 64;
const GRID_LIMIT: usize = 2000;

#[derive(Clone, Debug, PartialEq)]
pub enum IntertwinerResult {
    Isomorphism(Matrix),
    /// Nonzero homomorphisms exist but none is invertible. `exhaustive` is
    /// false when the search was cut short, in which case this is not a proof.
    NoInvertibleFound { solution_dim: usize, exhaustive: bool },
    None,
}

impl IntertwinerResult {
    pub fn isomorphism(&self) -> Option<&Matrix> {
        match self {
            IntertwinerResult::Isomorphism(a) => Some(a),
            _ => None,
        }
    }

    pub fn is_isomorphism(&self) -> bool {
        self.isomorphism().is_some()
    }
}

fn combine(basis: &[Matrix], coeffs: &[Rational]) -> Matrix {
    let d = basis[0].rows();
    let mut out = Matrix::zeros(d, d);
    for (b, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            out = &out + &b.scale(c);
        }
    }
    out
}

/// Basis of `Hom(M1, M2)` as matrices.
pub fn homomorphisms(m1: &MatrixModule, m2: &MatrixModule) -> Result<Vec<Matrix>> {
    if m1.dim() != m2.dim() || m1.generator_names() != m2.generator_names() {
        return Err(HeckeError::ShapeMismatch("modules have different shapes".into()));
    }
    let d = m1.dim();
    let mut basis: Vec<Matrix> = (0..d * d)
        .map(|idx| {
            let mut e = Matrix::zeros(d, d);
            e[(idx / d, idx % d)] = rat(1);
            e
        })
        .collect();
    for (g1, g2) in m1.generators().into_iter().zip(m2.generators()) {
        if basis.is_empty() {
            break;
        }
        let images: Vec<Vec<Rational>> = basis
            .iter()
            .map(|b| (&(b * g1) - &(g2 * b)).as_slice().to_vec())
            .collect();
        let system = Matrix::from_columns(d * d, &images);
        let null = system.nullspace();
        basis = null.iter().map(|c| combine(&basis, c)).collect();
    }
    Ok(basis)
}

/// An invertible homomorphism `M1 → M2`, if one exists.
pub fn intertwiner(m1: &MatrixModule, m2: &MatrixModule) -> Result<IntertwinerResult> {
    let basis = homomorphisms(m1, m2)?;
    let r = basis.len();
    if r == 0 {
        return Ok(IntertwinerResult::None);
    }
    let invertible = |a: &Matrix| !a.determinant().is_zero();
    if let Some(a) = basis.iter().find(|a| invertible(a)) {
        return Ok(IntertwinerResult::Isomorphism(a.clone()));
    }
    // det(Σ c_j B_j) has degree ≤ d, so it vanishes on the grid {0..=d}^r
    // only if it vanishes identically.
    let d = m1.dim();
    let side = d + 1;
    let grid = side.checked_pow(r as u32).filter(|&g| g <= GRID_LIMIT);
    if let Some(total) = grid {
        for idx in 0..total {
            let mut rest = idx;
            let coeffs: Vec<Rational> = (0..r)
                .map(|_| {
                    let c = rest % side;
                    rest /= side;
                    rat(c as i64)
                })
                .collect();
            let a = combine(&basis, &coeffs);
            if invertible(&a) {
                return Ok(IntertwinerResult::Isomorphism(a));
            }
        }
        return Ok(IntertwinerResult::NoInvertibleFound {
            solution_dim: r,
            exhaustive: true,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..RANDOM_TRIES {
        let coeffs: Vec<Rational> = (0..r).map(|_| rat(rng.gen_range(-1000..=1000))).collect();
        let a = combine(&basis, &coeffs);
        if invertible(&a) {
            return Ok(IntertwinerResult::Isomorphism(a));
        }
    }
    Ok(IntertwinerResult::NoInvertibleFound {
        solution_dim: r,
        exhaustive: false,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{build_m, FullCharacter};
    use super::*;
    use crate::algebra::AlgebraContext;

    fn module(gamma: &[i64], mu: &str) -> MatrixModule {
        let c = AlgebraContext::new(gamma.len(), rat(1)).unwrap();
        let x = FullCharacter::new(gamma.iter().map(|&g| rat(g)).collect(), mu.parse().unwrap()).unwrap();
        build_m(&x, &c).unwrap()
    }

    #[test]
    fn self_intertwiner() {
        let m = module(&[1, 0], "++");
        let a = intertwiner(&m, &m).unwrap();
        let a = a.isomorphism().unwrap();
        // Simple module: Hom is the scalars.
        assert_eq!(homomorphisms(&m, &m).unwrap().len(), 1);
        assert!(a.scale(&(rat(1) / &a[(0, 0)])).is_identity());
    }

    #[test]
    fn disjoint_weights_give_nothing() {
        let a = module(&[1, 0], "++");
        let b = module(&[7, 3], "++");
        assert_eq!(intertwiner(&a, &b).unwrap(), IntertwinerResult::None);
    }

    #[test]
    fn reducible_pair_has_noninvertible_maps() {
        // M(2,0) and M(0,2) share composition factors but are not isomorphic.
        let a = module(&[2, 0], "++");
        let b = module(&[0, 2], "++");
        match intertwiner(&a, &b).unwrap() {
            IntertwinerResult::NoInvertibleFound { exhaustive, .. } => assert!(exhaustive),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn shape_mismatch() {
        let a = module(&[1, 0], "++");
        let b = module(&[1, 0, 2], "+++");
        assert!(matches!(intertwiner(&a, &b), Err(HeckeError::ShapeMismatch(_))));
    }
}
