//! Exact computations with key polynomials (Demazure characters).
//!
//! * [`polynomial`]: sparse integer polynomials, divided differences,
//!   Demazure operators and the key-polynomial recursion.
//! * [`diagram`]: column-set diagrams, skyline diagrams and the order `C ≤ D`.
//! * [`filling`]: column-strict flagged fillings, optimization, and the
//!   constructions moving between fillings and `t`/`m` move chains.
//! * [`kappa`]: the moves, the order `≤_κ` and dominance.
//! * [`polytope`]: exact convex-hull membership and lattice points.
//! * [`bruhat`]: Bruhat order and interval polytopes.
//! * [`verify`]: batch cross-checks behind the `verify` command.
//!
//! The polynomial ring and the simplex kernel are generic over their scalar
//! type; the aliases below fix the exact instances used everywhere else.

pub mod bruhat;
pub mod cli;
pub mod composition;
pub mod diagram;
pub mod error;
pub mod filling;
pub mod fixtures;
pub mod kappa;
pub mod polynomial;
pub mod polytope;
pub mod scalar;
pub mod simplex;
pub mod verify;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use bruhat::{bruhat_interval, bruhat_leq, interval_polytope, verify_qww0, Permutation};
pub use composition::{Composition, ExponentVector};
pub use diagram::{diagram_leq, enumerate_lower_diagrams, monomial_of_diagram, subset_leq, Diagram};
pub use error::{Error, Result};
pub use filling::{
    descend_to_alpha, enumerate_fillings, enumerate_sorted_fillings, lemma_step, optimize, weight, witness_filling,
    Filling, LemmaCase, LemmaStep, Weight,
};
pub use kappa::{apply_move, closure, dominance_leq, dominated_rearrangements, leq_kappa, Move, MoveChain, MoveKind};
pub use polynomial::{key_polynomial, key_polynomial_with, Pivot, SparsePolynomial};
pub use polytope::{polytope_equal, snp_check, RationalVector, VPolytope};
pub use scalar::{Coefficient, LpScalar};
pub use simplex::FeasibilityProblem;

/// Polynomials with arbitrary-precision integer coefficients.
pub type Polynomial = SparsePolynomial<BigInt>;

/// Polynomials with machine-word coefficients, for small fast experiments.
pub type SmallPolynomial = SparsePolynomial<i64>;

/// Exact rational feasibility problems.
pub type ExactFeasibility = FeasibilityProblem<BigRational>;

/// Floating-point feasibility problems (tolerance-based).
pub type FloatFeasibility = FeasibilityProblem<f64>;
