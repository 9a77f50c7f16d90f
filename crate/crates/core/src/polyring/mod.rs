//! Sparse multivariate Laurent polynomials and `q^(1/2)`-power series.
//!
//! Seven variable families exist: `x`, `y`, `z`, their formal inverses
//! `xb`, `yb`, `zb` (independent positive-degree symbols, *not* computed
//! reciprocals), and the series variable `q`.  Exponents of `q` are stored
//! doubled so that `q^(k/2)` has integer exponent `k`.
//!
//! Truncation is explicit: a polynomial optionally carries a [`Trunc`]
//! (a grading plus a bound) and arithmetic keeps the tighter of the two
//! operand bounds.  Series carry the doubled exponent through which they are
//! exact.

mod laurent;
mod series;

pub use laurent::{
    xbv, xv, ybv, yv, zbv, zv, Grading, LaurentPoly, Monomial, PolyError, Trunc, VarId, VarKind,
};
pub use series::HalfSeries;

/// Renders `q^(e2/2)`: `q` for `e2 = 2`, `q^2` for `e2 = 4`, `q^1/2` for
/// `e2 = 1`, `q^-3/2` for `e2 = -3`.
pub(crate) fn fmt_half_power(e2: i64) -> String {
    if e2 == 2 {
        "q".to_string()
    } else if e2 % 2 == 0 {
        format!("q^{}", e2 / 2)
    } else {
        format!("q^{e2}/2")
    }
}
