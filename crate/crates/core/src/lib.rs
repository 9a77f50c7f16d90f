//! Exact computational algebra for hook Schur functions and for characters of
//! classical and level-1 affine Lie superalgebra modules.
//!
//! Everything is computed over `BigInt` coefficients, with truncation bounds
//! passed explicitly wherever an infinite object is cut off.  The main pieces:
//!
//! * [`partitions`]: partitions, generalized (weakly decreasing integer)
//!   partitions, conjugates with the zeroth/negative column convention.
//! * [`polyring`]: sparse multivariate Laurent polynomials over `BigInt` and
//!   formal power series in `q^(1/2)`.
//! * [`symfun`]: Schur, skew Schur and hook Schur polynomials on finite
//!   alphabets, plus the hook Cauchy product.
//! * [`glchar`]: rational gl_l characters, dominance-order decomposition,
//!   Littlewood-Richardson coefficients, mixed tensors and branching sums.
//! * [`superchar`]: weights, characters and q-characters of the level-l
//!   modules built from hook Schur data, affine gl(n|n) / gl(m|n) characters,
//!   and odd reflection chains.
//! * [`tensorprod`]: the tensor product decomposition rule for pairs of
//!   level-l and level-r modules, with a branching-based verifier.
//! * [`verify`]: identity verifiers producing serializable reports.

pub mod glchar;
pub mod partitions;
pub mod polyring;
pub mod superchar;
pub mod symfun;
pub mod tensorprod;
pub mod verify;

pub use partitions::{GeneralizedPartition, Partition, SkewShape};
pub use polyring::{Grading, HalfSeries, LaurentPoly, Monomial, Trunc, VarId, VarKind};
