//! Exact-arithmetic engine for graded double brackets ("bibrackets") on
//! quiver algebras.
//!
//! The engine works over the free graded algebra of a finite quiver, with
//! optional Laurent generators (invertible, degree 0, source = target).
//! All coefficients are exact rationals; every check is bit-exact.
//!
//! Module map:
//!
//! * [`algebra`], [`ncpoly`], [`tensor`], [`expr`]: words, noncommutative
//!   polynomials, tensor powers, Koszul-signed permutations, bimodule
//!   actions, expression parsing.
//! * [`bracket`]: bibracket tables, the two-sided graded Leibniz extension,
//!   d-transpose, tribracket, axiom sweeps, the associated bracket and the
//!   scalar form. [`bracket::reference`] holds an independent slow evaluator
//!   used as a cross-check oracle.
//! * [`repalg`]: matrix-entry symbol algebras, the induced bracket on them,
//!   traces, and the matrix group/Lie algebra actions with equivariance
//!   checks. [`matrix`] supplies exact rational linear algebra.
//! * [`hopf`], [`moment`], [`reduce`]: coproduct/counit/antipode machinery,
//!   the Lambda and lambda pairings with reducibility checks, moment maps,
//!   and Hamiltonian reduction onto commutative quotients.
//! * [`lie`]: graded Lie algebras by structure constants, PBW normal forms,
//!   and presentations of their matrix representation algebras.
//! * [`specfile`], [`runner`], [`report`], [`presets`]: the declarative
//!   spec-file front end, check drivers, JSON reports, and built-in example
//!   constructors.

pub mod algebra;
pub mod bracket;
pub mod cyclic;
pub mod expr;
pub mod hopf;
pub mod lie;
pub mod matrix;
pub mod moment;
pub mod ncpoly;
pub mod presets;
pub mod reduce;
pub mod repalg;
pub mod report;
pub mod runner;
pub mod scalar;
pub mod specfile;
pub mod tensor;

pub use algebra::{Algebra, GenId, GeneratorDecl, Letter, ObjId, Word};
pub use ncpoly::{Degree, NCPoly};
pub use scalar::Scalar;
pub use tensor::TensorPoly;
