//! Exact computations in the generalized graded Hecke algebra `ℍ_B(k̃)` of
//! type `B_n`, its type-`D` subalgebra, their principal series modules and
//! closed-form irreducibility criteria.
//!
//! All arithmetic is over exact rationals. Indices are 0-based inside the
//! crate and 1-based in every textual form.

pub mod algebra;
pub mod cherednik;
pub mod criteria;
pub mod error;
pub mod linalg;
pub mod polynomial;
pub mod psmodule;
pub mod rational;
pub mod suite;
pub mod weylgroup;

pub use algebra::{AlgebraContext, AlgebraElement};
pub use criteria::{criterion_b, criterion_d, stabilizer_case, CriterionReport, StabilizerCase, Verdict};
pub use error::{HeckeError, Result};
pub use linalg::Matrix;
pub use polynomial::Poly;
pub use psmodule::{build_m, build_n, burnside_irreducible, FullCharacter, MatrixModule, ModuleKind};
pub use rational::Rational;
pub use weylgroup::{Root, RootKind, SignCharacter, SignedPermutation};
