//! q-characters: the character specialised at the principal gradation, where
//! the even alphabet becomes q^{1/2}, q^{3/2}, ... and the odd alphabet
//! becomes q, q^2, ....  All exponents are stored doubled.
//!
//! The q-character of the level-l module attached to `lambda` is
//!
//! ```text
//!   ch_q = q^{-h(lambda)} sum_mu c^mu_lambda HS_mu(q^{1/2}, q^{3/2}, ..; q, q^2, ..)
//! ```
//!
//! summed over partitions mu with at most 2l rows, where the integer
//! coefficients come from a finite GL(l) computation:
//! `s_mu(x_1..x_l, x_1^{-1}..x_l^{-1}) prod_i (1 + x_i^{-1})` expanded into
//! irreducible characters has `c^mu_lambda` as the coefficient of the
//! character indexed by `lambda`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::glchar::decompose_character;
use crate::partitions::{enumerate_partitions, GeneralizedPartition, Partition};
use crate::polyring::{HalfSeries, LaurentPoly, Monomial, VarId, VarKind};
use crate::superchar::weights::h_of;
use crate::symfun::{for_each_filling, schur};

/// Hook Schur polynomial of `mu` evaluated at the principal specialisation,
/// exact through q^(order2/2).  Even letters cost 1, 3, 5, ... (doubled
/// exponents), odd letters cost 2, 4, ...; the tableau search is pruned by
/// the total cost, so only letters that can still contribute are offered.
pub fn hook_schur_qspec(mu: &Partition, order2: i64) -> HalfSeries {
    let mut acc = HalfSeries::zero(order2);
    if mu.size() > order2 {
        // Every cell costs at least q^{1/2}.
        return acc;
    }
    let p = ((order2 + 1) / 2).max(0) as usize;
    let q = (order2 / 2).max(0) as usize;
    let mut cost2: Vec<i64> = (0..p as i64).map(|i| 2 * i + 1).collect();
    cost2.extend((1..=q as i64).map(|i| 2 * i));
    for_each_filling(mu.parts(), &[], p, q, &cost2, order2, &mut |_, cost| {
        acc.add_coeff(cost, BigInt::from(1));
    });
    acc
}

/// Expansion coefficients `c^mu_lambda` over all `lambda` for a fixed
/// partition `mu` with at most 2l rows: decompose
/// `s_mu(x, x^{-1}) prod_i (1 + x_i^{-1})` into GL(l) characters.
pub fn qchar_coefficients(
    mu: &Partition,
    l: usize,
) -> BTreeMap<GeneralizedPartition, BigInt> {
    if mu.length() > 2 * l {
        return BTreeMap::new();
    }
    let folded = schur(mu, 2 * l, VarKind::X)
        .map_vars(|v| {
            if v.kind == VarKind::X && v.index > l as u32 {
                VarId::new(VarKind::XInv, v.index - l as u32)
            } else {
                v
            }
        })
        .fold_inverse(VarKind::XInv, VarKind::X);
    let mut prod = folded;
    for i in 1..=l as u32 {
        let mut f = LaurentPoly::one(None);
        f.add_term(Monomial::var(VarId::new(VarKind::X, i), -1), BigInt::from(1));
        prod = prod.mul(&f);
    }
    decompose_character(&prod, l, VarKind::X)
        .expect("a symmetric Laurent polynomial decomposes into GL(l) characters")
}

/// q-character of the level-l module attached to `lambda`, exact through
/// q^(order2/2).  Includes the normalising prefactor q^{-h(lambda)}, so the
/// series always starts at 1.
pub fn q_character(lambda: &GeneralizedPartition, order2: i64) -> HalfSeries {
    let l = lambda.length();
    let h2 = {
        let h = h_of(lambda);
        // h is a half-integer, so twice h is integral.
        (h * 2).to_integer()
    };
    let internal = order2 + h2.max(0);
    let mut acc = HalfSeries::zero(internal);
    for mu in enumerate_partitions(internal, 2 * l) {
        // Cheapest filling of mu costs at least 1 per first-row cell and 2
        // per deeper cell, so terms past the working order can be skipped
        // before their (expensive) branching coefficients are computed.
        if 2 * mu.size() - mu.part(0) > internal {
            continue;
        }
        let c = qchar_coefficients(&mu, l)
            .remove(lambda)
            .unwrap_or_else(BigInt::zero);
        if c.is_zero() {
            continue;
        }
        acc = acc.add(&hook_schur_qspec(&mu, internal).scale(&c));
    }
    acc.shift(-h2).restricted(order2)
}

/// Both sides of the charge-one closed form, exact through q^(order2/2).
///
/// Left: the sum of principal hook Schur specialisations over partitions
/// (a, b) with a - b >= lambda (for lambda >= 0) or a - b >= -lambda - 1
/// (for lambda < 0).  Right: the closed product
/// `q^{h} (1 + q^{|lambda + 1/2|})^{-1} prod_r (1 + q^r)^2 prod_n (1 - q^n)^{-2}`.
pub fn q_identity_sides(lambda: i64, order2: i64) -> (HalfSeries, HalfSeries) {
    let mut lhs = HalfSeries::zero(order2);
    let min_gap = if lambda >= 0 { lambda } else { -lambda - 1 };
    for a in 0..=order2 {
        for b in 0..=(order2 - a).min(a) {
            if a - b < min_gap {
                continue;
            }
            let mu = Partition::new(vec![a, b]);
            lhs = lhs.add(&hook_schur_qspec(&mu, order2));
        }
    }

    let h2 = if lambda >= 0 { lambda } else { -(lambda + 1) };
    let rhs = q_character_closed_form_charge_one(lambda, order2)
        .shift(h2)
        .restricted(order2);
    (lhs, rhs)
}

/// The charge-one q-character in closed form (the identity's right side
/// without its prefactor):
/// `(1 + q^{|lambda + 1/2|})^{-1} prod_r (1 + q^r)^2 prod_n (1 - q^n)^{-2}`.
pub fn q_character_closed_form_charge_one(lambda: i64, order2: i64) -> HalfSeries {
    let mut acc = HalfSeries::one(order2);
    let mut r2 = 1;
    while r2 <= order2 {
        let f = HalfSeries::one_plus(r2, order2);
        acc = acc.mul(&f).mul(&f);
        r2 += 2;
    }
    let mut n2 = 2;
    while n2 <= order2 {
        let g = HalfSeries::geometric(n2, order2);
        acc = acc.mul(&g).mul(&g);
        n2 += 2;
    }
    let gate = HalfSeries::one_plus((2 * lambda + 1).abs(), order2)
        .inv()
        .expect("1 + q^k with k > 0 is invertible");
    acc.mul(&gate)
}
