//! Level-1 characters for the truncated (m|n) index set, and the odd
//! reflection walk that moves the highest weight between Borel subalgebras.
//!
//! The character of the level-1 module attached to an integer lambda is
//!
//! ```text
//!   q^{-|lambda|/2} sum_{k - k' = lambda, k, k' >= 0}
//!       HS_k(z q; y q) HS_{k'}(zb q; yb q)
//! ```
//!
//! where each one-row hook Schur polynomial runs over the alphabets
//! `z_j q^s` (even) and `y_i q^s` (odd) with s ranging over positive
//! half-integers.  The same sum, without the prefactor, is the coefficient
//! of x^lambda in a quadruple product of elementary factors; that identity
//! is the main consistency check.

use std::fmt;

use num_bigint::BigInt;
use serde_json::json;

use crate::polyring::{LaurentPoly, Monomial, Trunc, VarId, VarKind};
use crate::symfun::{for_each_filling, geometric_factor, one_plus_term};

/// A weight of the truncated algebra: integer coefficients on the odd basis
/// d(1..n), the even basis e(1..n), the level generator L0 and the null
/// root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineWeight {
    pub delta: Vec<i64>,
    pub eps: Vec<i64>,
    pub lambda0: i64,
    pub null: i64,
}

impl AffineWeight {
    pub fn zero(n: usize) -> Self {
        AffineWeight {
            delta: vec![0; n],
            eps: vec![0; n],
            lambda0: 0,
            null: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.delta.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank());
        AffineWeight {
            delta: self
                .delta
                .iter()
                .zip(&other.delta)
                .map(|(a, b)| a + b)
                .collect(),
            eps: self
                .eps
                .iter()
                .zip(&other.eps)
                .map(|(a, b)| a + b)
                .collect(),
            lambda0: self.lambda0 + other.lambda0,
            null: self.null + other.null,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        AffineWeight {
            delta: self.delta.iter().map(|a| -a).collect(),
            eps: self.eps.iter().map(|a| -a).collect(),
            lambda0: -self.lambda0,
            null: -self.null,
        }
    }

    /// Invariant bilinear form: (e_i|e_j) = delta_ij, (d_i|d_j) = -delta_ij,
    /// the two bases are orthogonal, and (L0|null root) = 1 with both
    /// isotropic.
    pub fn pairing(&self, other: &Self) -> i64 {
        let even: i64 = self
            .eps
            .iter()
            .zip(&other.eps)
            .map(|(a, b)| a * b)
            .sum();
        let odd: i64 = self
            .delta
            .iter()
            .zip(&other.delta)
            .map(|(a, b)| a * b)
            .sum();
        even - odd + self.lambda0 * other.null + self.null * other.lambda0
    }

    /// Is this exactly d(i) - e(j) for some i, j (an odd root of the kind
    /// the walk reflects at)?
    pub fn is_delta_minus_eps(&self) -> bool {
        if self.lambda0 != 0 || self.null != 0 {
            return false;
        }
        let dplus = self.delta.iter().filter(|&&c| c == 1).count();
        let eminus = self.eps.iter().filter(|&&c| c == -1).count();
        dplus == 1
            && eminus == 1
            && self.delta.iter().all(|&c| c == 0 || c == 1)
            && self.eps.iter().all(|&c| c == 0 || c == -1)
            && self.delta.iter().map(|c| c.abs()).sum::<i64>() == 1
            && self.eps.iter().map(|c| c.abs()).sum::<i64>() == 1
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "delta": self.delta,
            "eps": self.eps,
            "lambda0": self.lambda0,
            "null": self.null,
        })
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(String, i64)> = Vec::new();
        for (i, &c) in self.delta.iter().enumerate() {
            parts.push((format!("d({})", i + 1), c));
        }
        for (i, &c) in self.eps.iter().enumerate() {
            parts.push((format!("e({})", i + 1), c));
        }
        parts.push(("L0".to_string(), self.lambda0));
        parts.push(("del".to_string(), self.null));
        let mut first = true;
        for (name, c) in parts {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if c.abs() == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{}*{name}", c.abs())?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Highest weight of the level-1 module attached to the integer lambda, in
/// the standard Borel: lambda * d(1) + L0 for lambda >= 0, and
/// (lambda + 1) d(n) - e(n) + L0 for lambda < 0.
pub fn integrable_weight(lambda: i64, n: usize) -> AffineWeight {
    assert!(n >= 1);
    let mut w = AffineWeight::zero(n);
    w.lambda0 = 1;
    if lambda >= 0 {
        w.delta[0] = lambda;
    } else {
        w.delta[n - 1] = lambda + 1;
        w.eps[n - 1] = -1;
    }
    w
}

/// The simple roots of the standard Borel: index 0 is the affine root
/// e(n) - d(1) + null, then d(1)-e(1), e(1)-d(2), d(2)-e(2), ...,
/// d(n)-e(n) along the bottom row.
pub fn standard_simple_roots(n: usize) -> Vec<AffineWeight> {
    let mut roots = Vec::with_capacity(2 * n);
    let mut beta0 = AffineWeight::zero(n);
    beta0.eps[n - 1] = 1;
    beta0.delta[0] = -1;
    beta0.null = 1;
    roots.push(beta0);
    for i in 0..n {
        let mut b = AffineWeight::zero(n);
        b.delta[i] = 1;
        b.eps[i] = -1;
        roots.push(b);
        if i + 1 < n {
            let mut b = AffineWeight::zero(n);
            b.eps[i] = 1;
            b.delta[i + 1] = -1;
            roots.push(b);
        }
    }
    roots
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddReflectionStep {
    /// The root reflected at, before negation.
    pub root: AffineWeight,
    /// Whether the weight paired nontrivially with the root (and moved).
    pub paired: bool,
    /// The weight after this step.
    pub weight: AffineWeight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddReflectionChain {
    pub initial: AffineWeight,
    pub steps: Vec<OddReflectionStep>,
    pub final_weight: AffineWeight,
    pub final_simples: Vec<AffineWeight>,
}

/// Walk the highest weight from the standard Borel to the one whose even
/// basis comes first: repeatedly take the rightmost simple root of the form
/// d(i) - e(j), move the weight across it when they pair nontrivially, and
/// update the other simple roots.  Takes exactly n(n+1)/2 steps.
pub fn odd_reflect_chain(lambda: i64, n: usize) -> OddReflectionChain {
    let initial = integrable_weight(lambda, n);
    let mut simples = standard_simple_roots(n);
    let mut current = initial.clone();
    let mut steps = Vec::new();
    let cap = n * (n + 1) / 2;
    loop {
        let Some(k) = simples.iter().rposition(AffineWeight::is_delta_minus_eps) else {
            break;
        };
        assert!(
            steps.len() < cap,
            "odd reflection walk exceeded {cap} steps"
        );
        let gamma = simples[k].clone();
        let paired = current.pairing(&gamma) != 0;
        if paired {
            current = current.sub(&gamma);
        }
        for (idx, alpha) in simples.iter_mut().enumerate() {
            if idx != k && alpha.pairing(&gamma) != 0 {
                *alpha = alpha.add(&gamma);
            }
        }
        simples[k] = gamma.neg();
        steps.push(OddReflectionStep {
            root: gamma,
            paired,
            weight: current.clone(),
        });
    }
    OddReflectionChain {
        initial,
        steps,
        final_weight: current,
        final_simples: simples,
    }
}

fn half_exponents(order2: i64) -> impl Iterator<Item = i64> {
    (1..=order2.max(0)).step_by(2)
}

/// One-row hook Schur polynomial HS_(k) over the alphabets z_j q^s (even)
/// and y_i q^s (odd), with s over positive half-integers, exact through
/// q^(order2/2).  With `barred` the zb/yb variable kinds are used instead.
pub fn affine_hook_row(k: i64, m: usize, n: usize, order2: i64, barred: bool) -> LaurentPoly {
    assert!(k >= 0);
    let (zk, yk) = if barred {
        (VarKind::ZInv, VarKind::YInv)
    } else {
        (VarKind::Z, VarKind::Y)
    };
    let trunc = Trunc::q_only(order2);
    let mut letters: Vec<(VarId, i64)> = Vec::new();
    for s2 in half_exponents(order2) {
        for j in 1..=n as u32 {
            letters.push((VarId::new(zk, j), s2));
        }
    }
    let p = letters.len();
    for s2 in half_exponents(order2) {
        for i in 1..=m as u32 {
            letters.push((VarId::new(yk, i), s2));
        }
    }
    let q = letters.len() - p;
    let cost2: Vec<i64> = letters.iter().map(|&(_, c)| c).collect();
    let mut acc = LaurentPoly::zero(Some(trunc));
    for_each_filling(&[k], &[], p, q, &cost2, order2, &mut |rows, cost| {
        let mut pairs: Vec<(VarId, i64)> = Vec::new();
        for &e in &rows[0] {
            pairs.push((letters[e].0, 1));
        }
        pairs.push((VarId::q(), cost));
        acc.add_term(Monomial::from_pairs(pairs), BigInt::from(1));
    });
    acc
}

/// The unshifted character sum: over all k, k' >= 0 with k - k' = lambda,
/// the product HS_k(z q; y q) HS_{k'}(zb q; yb q), exact through
/// q^(order2/2).
pub fn affine_sum_unshifted(lambda: i64, m: usize, n: usize, order2: i64) -> LaurentPoly {
    let trunc = Trunc::q_only(order2);
    let mut acc = LaurentPoly::zero(Some(trunc));
    let mut k = lambda.max(0);
    while 2 * k - lambda <= order2 {
        let row = affine_hook_row(k, m, n, order2, false);
        let row_b = affine_hook_row(k - lambda, m, n, order2, true);
        acc = acc.add(&row.mul(&row_b));
        k += 1;
    }
    acc
}

/// Level-1 character of the module attached to lambda for the (m|n) index
/// set, exact through q^order, including the prefactor q^{-|lambda|/2}.
pub fn affine_character(lambda: i64, m: usize, n: usize, order: i64) -> LaurentPoly {
    let internal2 = 2 * order + lambda.abs();
    let sum = affine_sum_unshifted(lambda, m, n, internal2);
    let prefactor = LaurentPoly::from_monomial(
        Monomial::var(VarId::q(), -lambda.abs()),
        BigInt::from(1),
        None,
    );
    sum.without_trunc()
        .mul(&prefactor)
        .truncated(Trunc::q_only(2 * order))
}

/// Coefficient of x^lambda in the generating product
/// `prod_s prod_i (1 + x y_i q^s)(1 + xb yb_i q^s)
///  prod_j (1 - x z_j q^s)^{-1} (1 - xb zb_j q^s)^{-1}`,
/// exact through q^(order2/2).  Must agree with [`affine_sum_unshifted`].
pub fn affine_product_coefficient(lambda: i64, m: usize, n: usize, order2: i64) -> LaurentPoly {
    let trunc = Trunc::q_only(order2);
    let x = VarId::new(VarKind::X, 1);
    let xb = VarId::new(VarKind::XInv, 1);
    let mut acc = LaurentPoly::one(Some(trunc));
    for s2 in half_exponents(order2) {
        for i in 1..=m as u32 {
            let my = Monomial::from_pairs([
                (x, 1),
                (VarId::new(VarKind::Y, i), 1),
                (VarId::q(), s2),
            ]);
            acc = acc.mul(&one_plus_term(&my, Some(trunc)));
            let myb = Monomial::from_pairs([
                (xb, 1),
                (VarId::new(VarKind::YInv, i), 1),
                (VarId::q(), s2),
            ]);
            acc = acc.mul(&one_plus_term(&myb, Some(trunc)));
        }
        for j in 1..=n as u32 {
            let mz = Monomial::from_pairs([
                (x, 1),
                (VarId::new(VarKind::Z, j), 1),
                (VarId::q(), s2),
            ]);
            acc = acc.mul(&geometric_factor(&mz, trunc));
            let mzb = Monomial::from_pairs([
                (xb, 1),
                (VarId::new(VarKind::ZInv, j), 1),
                (VarId::q(), s2),
            ]);
            acc = acc.mul(&geometric_factor(&mzb, trunc));
        }
    }
    acc.without_trunc()
        .fold_inverse(VarKind::XInv, VarKind::X)
        .block_coefficient(&[x], &[lambda])
        .truncated(trunc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expected_final(lambda: i64, n: usize) -> AffineWeight {
        let mut w = AffineWeight::zero(n);
        w.lambda0 = 1;
        if lambda < 0 {
            w.delta[n - 1] = lambda;
        } else if lambda <= n as i64 {
            for i in 0..lambda as usize {
                w.eps[i] = 1;
            }
        } else {
            for i in 0..n {
                w.eps[i] = 1;
            }
            w.delta[0] = lambda - n as i64;
        }
        w
    }

    #[test]
    fn walk_length_and_final_families() {
        for n in 1..=3usize {
            for lambda in -3i64..=4 {
                let chain = odd_reflect_chain(lambda, n);
                assert_eq!(
                    chain.steps.len(),
                    n * (n + 1) / 2,
                    "step count for lambda = {lambda}, n = {n}"
                );
                assert_eq!(
                    chain.final_weight,
                    expected_final(lambda, n),
                    "final weight for lambda = {lambda}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn vacuum_weight_never_moves() {
        let chain = odd_reflect_chain(0, 3);
        assert!(chain.steps.iter().all(|s| !s.paired));
        assert_eq!(chain.final_weight, chain.initial);
    }

    #[test]
    fn final_simples_contain_no_reflectable_root() {
        for n in 1..=3usize {
            let chain = odd_reflect_chain(1, n);
            assert!(chain
                .final_simples
                .iter()
                .all(|r| !r.is_delta_minus_eps()));
        }
    }

    #[test]
    fn lowest_slice_of_the_vector_weight() {
        // For lambda = 1 and a single (1|1) pair, the q^0 slice of the
        // character is z1 + y1.
        let ch = affine_character(1, 1, 1, 2);
        let slice = ch.block_coefficient(&[VarId::q()], &[0]);
        let mut expected = LaurentPoly::zero(None);
        expected.add_term(Monomial::var(VarId::new(VarKind::Z, 1), 1), BigInt::from(1));
        expected.add_term(Monomial::var(VarId::new(VarKind::Y, 1), 1), BigInt::from(1));
        assert_eq!(slice, expected);
    }

    #[test]
    fn vacuum_character_slices() {
        let ch = affine_character(0, 1, 1, 1);
        assert_eq!(
            ch.block_coefficient(&[VarId::q()], &[0]),
            LaurentPoly::one(None)
        );
        // Nothing can appear at q^{1/2} for lambda = 0: the first excited
        // states sit at q^1.
        assert!(ch.block_coefficient(&[VarId::q()], &[1]).is_zero());
        assert!(!ch.block_coefficient(&[VarId::q()], &[2]).is_zero());
    }

    #[test]
    fn product_coefficient_matches_character_sum() {
        for lambda in -2i64..=2 {
            let lhs = affine_product_coefficient(lambda, 1, 1, 5);
            let rhs = affine_sum_unshifted(lambda, 1, 1, 5);
            assert_eq!(lhs, rhs, "lambda = {lambda}");
        }
        let lhs = affine_product_coefficient(1, 2, 1, 3);
        let rhs = affine_sum_unshifted(1, 2, 1, 3);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn bar_swap_negates_the_weight() {
        let swap = |v: VarId| match v.kind {
            VarKind::Y => VarId::new(VarKind::YInv, v.index),
            VarKind::YInv => VarId::new(VarKind::Y, v.index),
            VarKind::Z => VarId::new(VarKind::ZInv, v.index),
            VarKind::ZInv => VarId::new(VarKind::Z, v.index),
            _ => v,
        };
        for lambda in -2i64..=2 {
            let a = affine_sum_unshifted(lambda, 1, 2, 4).map_vars(swap);
            let b = affine_sum_unshifted(-lambda, 1, 2, 4);
            assert_eq!(a, b, "lambda = {lambda}");
        }
    }
}
