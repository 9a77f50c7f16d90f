//! Characters of the level-l modules in two dual pairs of alphabets.
//!
//! The generating object is the product, over l auxiliary variables x_i,
//!
//! ```text
//!   prod_i  prod_n (1 + x_i y_n) prod_m (1 + xb_i yb_m)
//!           prod_r (1 - x_i z_r)^{-1} prod_r (1 - xb_i zb_r)^{-1}
//! ```
//!
//! Expanding both Cauchy products gives
//! `sum_{mu,nu} s_mu(x) s_nu(xb) HS_mu(z; y) HS_nu(zb; yb)`, and folding
//! `xb = x^{-1}` turns `s_mu(x) s_nu(x^{-1})` into a sum of GL(l) characters.
//! The coefficient of an irreducible GL(l) character indexed by a generalized
//! partition is therefore
//!
//! ```text
//!   C_lambda = sum_{mu,nu} m^lambda_{mu,nu} HS_mu(z; y) HS_nu(zb; yb),
//! ```
//!
//! with `m` the mixed tensor multiplicities.  [`module_character`] computes
//! this sum directly; [`fock_coefficients`] peels the same data out of the
//! truncated product, which is what the consistency check compares against.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::glchar::{decompose_with_poly_coeffs, mixed_tensor_coefficients};
use crate::partitions::{enumerate_partitions, GeneralizedPartition, Partition};
use crate::polyring::{LaurentPoly, Monomial, Trunc, VarId, VarKind};
use crate::symfun::{geometric_factor, hook_schur_in, one_plus_term};

/// Sizes of the four truncated alphabets: y/yb are the odd pairs, z/zb the
/// even pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FockAlphabet {
    pub y: usize,
    pub yb: usize,
    pub z: usize,
    pub zb: usize,
}

/// Character of the level-l module attached to `lambda`, summed over all
/// pairs (mu, nu) with |mu| + |nu| <= degree.  Exact: the result is an
/// ordinary polynomial in the four alphabets.
pub fn module_character(
    lambda: &GeneralizedPartition,
    sizes: &FockAlphabet,
    degree: i64,
) -> LaurentPoly {
    let l = lambda.length();
    let mut acc = LaurentPoly::zero(None);
    for mu in enumerate_partitions(degree, l) {
        let hs_mu = hook_schur_in(&mu, sizes.z, VarKind::Z, sizes.y, VarKind::Y);
        if hs_mu.is_zero() {
            continue;
        }
        for nu in enumerate_partitions(degree - mu.size(), l) {
            let m = mixed_tensor_coefficients(&mu, &nu, l)
                .remove(lambda)
                .unwrap_or_else(BigInt::zero);
            if m.is_zero() {
                continue;
            }
            let hs_nu = hook_schur_in(&nu, sizes.zb, VarKind::ZInv, sizes.yb, VarKind::YInv);
            if hs_nu.is_zero() {
                continue;
            }
            acc = acc.add(&hs_mu.mul(&hs_nu).scale(&m));
        }
    }
    acc
}

/// Charge-one characters have a closed form: the mixed tensor multiplicity
/// of (a) times (b)* on the weight (k) is 1 exactly when a - b = k, so the
/// character is a single sum of products of one-row hook Schur polynomials.
pub fn level1_character_direct(lambda: i64, sizes: &FockAlphabet, degree: i64) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(None);
    let mut k = lambda.max(0);
    loop {
        let kb = k - lambda;
        if k + kb > degree {
            break;
        }
        let mu = Partition::new(vec![k]);
        let nu = Partition::new(vec![kb]);
        let hs_mu = hook_schur_in(&mu, sizes.z, VarKind::Z, sizes.y, VarKind::Y);
        let hs_nu = hook_schur_in(&nu, sizes.zb, VarKind::ZInv, sizes.yb, VarKind::YInv);
        acc = acc.add(&hs_mu.mul(&hs_nu));
        k += 1;
    }
    acc
}

/// The generating product, truncated at total degree 2 * degree.  Every
/// surviving monomial pairs each x (resp. xb) occurrence with one y or z
/// (resp. yb or zb) occurrence, so total degree 2d cuts exactly at
/// |mu| + |nu| <= d and the truncation respects the GL(l) action.
pub fn fock_product(l: usize, sizes: &FockAlphabet, degree: i64) -> LaurentPoly {
    let trunc = Trunc::total(2 * degree);
    let mut acc = LaurentPoly::one(Some(trunc));
    for i in 1..=l as u32 {
        let x = VarId::new(VarKind::X, i);
        let xb = VarId::new(VarKind::XInv, i);
        for n in 1..=sizes.y as u32 {
            let m = Monomial::from_pairs([(x, 1), (VarId::new(VarKind::Y, n), 1)]);
            acc = acc.mul(&one_plus_term(&m, Some(trunc)));
        }
        for mm in 1..=sizes.yb as u32 {
            let m = Monomial::from_pairs([(xb, 1), (VarId::new(VarKind::YInv, mm), 1)]);
            acc = acc.mul(&one_plus_term(&m, Some(trunc)));
        }
        for r in 1..=sizes.z as u32 {
            let m = Monomial::from_pairs([(x, 1), (VarId::new(VarKind::Z, r), 1)]);
            acc = acc.mul(&geometric_factor(&m, trunc));
        }
        for r in 1..=sizes.zb as u32 {
            let m = Monomial::from_pairs([(xb, 1), (VarId::new(VarKind::ZInv, r), 1)]);
            acc = acc.mul(&geometric_factor(&m, trunc));
        }
    }
    acc
}

/// Fold the generating product and peel off the GL(l) characters: the map
/// from generalized partitions to their coefficient polynomials.
pub fn fock_coefficients(
    l: usize,
    sizes: &FockAlphabet,
    degree: i64,
) -> BTreeMap<GeneralizedPartition, LaurentPoly> {
    let folded = fock_product(l, sizes, degree)
        .without_trunc()
        .fold_inverse(VarKind::XInv, VarKind::X);
    decompose_with_poly_coeffs(&folded, l, VarKind::X)
        .expect("the generating product decomposes into GL(l) characters")
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .collect()
}
