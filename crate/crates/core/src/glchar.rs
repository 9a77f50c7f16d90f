//! Rational characters of GL(l): Laurent Schur polynomials indexed by weakly
//! decreasing integer tuples, decomposition of symmetric Laurent polynomials
//! into them, Littlewood-Richardson coefficients, and the branching of a
//! GL(l+r) character under the block subgroup GL(l) x GL(r).
//!
//! Decomposition works by repeatedly peeling the lexicographically greatest
//! exponent vector: for an irreducible character that vector is the highest
//! weight and carries coefficient 1, so subtracting multiplicity times the
//! character strictly lowers the leading term.  The same peel run blockwise
//! (treating the coefficient of each leading x-monomial as a polynomial in
//! the remaining variables) gives branching coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::partitions::{enumerate_partitions, GeneralizedPartition, Partition};
use crate::polyring::{LaurentPoly, Monomial, VarId, VarKind};
use crate::symfun::{for_each_filling, schur};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharacterError {
    #[error("leading exponent vector {0:?} is not weakly decreasing; the polynomial is not a virtual GL({1}) character")]
    NonCharacter(Vec<i64>, usize),
    #[error("monomial contains variable {0}, which is outside the declared alphabet")]
    ForeignVariable(String),
}

/// Irreducible rational character of GL(l) with highest weight `lambda`
/// (length l, any signs), in variables `kind_1 .. kind_l`.  Computed as a
/// power of the determinant character times an ordinary Schur polynomial:
/// `chi_lambda = (v_1 .. v_l)^{lambda_l} s_{lambda - lambda_l}(v)`.
pub fn gl_character(lambda: &GeneralizedPartition, kind: VarKind) -> LaurentPoly {
    let l = lambda.length();
    if l == 0 {
        return LaurentPoly::one(None);
    }
    let base = lambda.part1(l as i64);
    let shifted = Partition::new(
        lambda
            .parts()
            .iter()
            .map(|&p| p - base)
            .collect::<Vec<_>>(),
    );
    let s = schur(&shifted, l, kind);
    if base == 0 {
        return s;
    }
    let det_power =
        Monomial::from_pairs((1..=l as u32).map(|i| (VarId::new(kind, i), base)));
    s.mul(&LaurentPoly::from_monomial(det_power, BigInt::from(1), None))
}

fn block_vars(rank: usize, kind: VarKind) -> Vec<VarId> {
    (1..=rank as u32).map(|i| VarId::new(kind, i)).collect()
}

fn exps_of(m: &Monomial, vars: &[VarId]) -> Vec<i64> {
    vars.iter().map(|&v| m.exponent_of(v)).collect()
}

/// Decompose an exact (untruncated) Laurent polynomial in `kind_1 .. kind_l`
/// as an integer combination of irreducible GL(l) characters.
pub fn decompose_character(
    poly: &LaurentPoly,
    rank: usize,
    kind: VarKind,
) -> Result<BTreeMap<GeneralizedPartition, BigInt>, CharacterError> {
    assert!(
        poly.trunc().is_none(),
        "character decomposition needs an exact polynomial"
    );
    let vars = block_vars(rank, kind);
    for (m, _) in poly.terms() {
        for &(v, _) in m.exponents() {
            if !vars.contains(&v) {
                return Err(CharacterError::ForeignVariable(v.name()));
            }
        }
    }
    let mut out = BTreeMap::new();
    let mut rem = poly.clone();
    while !rem.is_zero() {
        let (lead, coeff) = rem
            .terms()
            .map(|(m, c)| (exps_of(m, &vars), c.clone()))
            .max_by(|a, b| a.0.cmp(&b.0))
            .expect("nonzero polynomial has a leading term");
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(CharacterError::NonCharacter(lead, rank));
        }
        let lambda = GeneralizedPartition::new(lead);
        rem = rem.sub(&gl_character(&lambda, kind).scale(&coeff));
        out.insert(lambda, coeff);
    }
    Ok(out)
}

/// Blockwise peel: write an exact polynomial in `kind_1 .. kind_l` plus other
/// variables as `sum over lambda of chi_lambda(kind vars) * coefficient`,
/// where each coefficient is a polynomial in the other variables.
pub fn decompose_with_poly_coeffs(
    poly: &LaurentPoly,
    rank: usize,
    kind: VarKind,
) -> Result<BTreeMap<GeneralizedPartition, LaurentPoly>, CharacterError> {
    assert!(
        poly.trunc().is_none(),
        "character decomposition needs an exact polynomial"
    );
    let vars = block_vars(rank, kind);
    let mut out = BTreeMap::new();
    let mut rem = poly.clone();
    while !rem.is_zero() {
        let lead = rem
            .terms()
            .map(|(m, _)| exps_of(m, &vars))
            .max()
            .expect("nonzero polynomial has a leading term");
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(CharacterError::NonCharacter(lead, rank));
        }
        let coeff = rem.block_coefficient(&vars, &lead);
        let lambda = GeneralizedPartition::new(lead);
        rem = rem.sub(&gl_character(&lambda, kind).mul(&coeff));
        out.insert(lambda, coeff);
    }
    Ok(out)
}

/// Single Littlewood-Richardson coefficient `c^lambda_{mu nu}`: the number of
/// semistandard fillings of the skew shape `lambda/mu` with content `nu` whose
/// reverse reading word (rows top to bottom, each read right to left) is a
/// lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) {
        return BigInt::zero();
    }
    let n = nu.length();
    if n == 0 {
        // Content is empty, so the skew shape must be too.
        return BigInt::from(1);
    }
    let outer: Vec<i64> = lambda.parts().to_vec();
    let mut inner: Vec<i64> = mu.parts().to_vec();
    inner.resize(outer.len(), 0);
    let costs = vec![0i64; n];
    let mut count = BigInt::zero();
    for_each_filling(&outer, &inner, n, 0, &costs, 0, &mut |rows, _| {
        let mut seen = vec![0i64; n];
        let mut lattice = true;
        'scan: for row in rows {
            for &v in row.iter().rev() {
                seen[v] += 1;
                if v > 0 && seen[v] > seen[v - 1] {
                    lattice = false;
                    break 'scan;
                }
            }
        }
        if lattice && (0..n).all(|v| seen[v] == nu.part(v)) {
            count += 1;
        }
    });
    count
}

/// Littlewood-Richardson coefficients `c^lambda_{mu nu}` for all `lambda`,
/// counted by the lattice-word rule shape by shape.
pub fn lr_coefficients(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, BigInt> {
    let total = mu.size() + nu.size();
    let max_len = mu.length() + nu.length();
    let mut out = BTreeMap::new();
    for lambda in enumerate_partitions(total, max_len) {
        if lambda.size() != total {
            continue;
        }
        let c = lr_coefficient(&lambda, mu, nu);
        if !c.is_zero() {
            out.insert(lambda, c);
        }
    }
    out
}

/// The same coefficients read off by expanding `s_mu s_nu` in enough
/// variables and decomposing; an independent route used to cross-check the
/// lattice-word rule.
pub fn lr_from_characters(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, BigInt> {
    let n = mu.length() + nu.length();
    let prod = schur(mu, n, VarKind::X).mul(&schur(nu, n, VarKind::X));
    decompose_character(&prod, n, VarKind::X)
        .expect("a product of Schur polynomials is a character")
        .into_iter()
        .map(|(gp, c)| {
            (
                gp.to_partition()
                    .expect("leading vectors of a Schur product are partitions"),
                c,
            )
        })
        .collect()
}

/// Contragredient weight: the highest weight of the dual representation,
/// `(-lambda_l, .., -lambda_1)`.
pub fn contragredient(lambda: &GeneralizedPartition) -> GeneralizedPartition {
    GeneralizedPartition::new(
        lambda
            .parts()
            .iter()
            .rev()
            .map(|&p| -p)
            .collect::<Vec<_>>(),
    )
}

/// Decomposition of the mixed tensor `V^mu tensor (V^nu)^*` of GL(l):
/// coefficients of `s_mu(x) s_nu(x^{-1})` on irreducible characters.
/// Empty when either factor needs more than `l` rows.
pub fn mixed_tensor_coefficients(
    mu: &Partition,
    nu: &Partition,
    l: usize,
) -> BTreeMap<GeneralizedPartition, BigInt> {
    if mu.length() > l || nu.length() > l {
        return BTreeMap::new();
    }
    let covariant = schur(mu, l, VarKind::X);
    let contravariant = gl_character(&contragredient(&nu.to_generalized(l)), VarKind::X);
    decompose_character(&covariant.mul(&contravariant), l, VarKind::X)
        .expect("a product of GL characters is a character")
}

/// Branching of the irreducible GL(l+r) module with highest weight `kappa`
/// under GL(l) x GL(r): multiplicities `b^kappa_{mu nu}` in
/// `chi^kappa(x_1..x_l, z_1..z_r) = sum b^kappa_{mu nu} chi^mu(x) chi^nu(z)`.
pub fn branching_gl_sum(
    kappa: &GeneralizedPartition,
    l: usize,
    r: usize,
) -> BTreeMap<(GeneralizedPartition, GeneralizedPartition), BigInt> {
    assert_eq!(kappa.length(), l + r, "weight length must be l + r");
    let full = gl_character(kappa, VarKind::X).map_vars(|v| {
        if v.kind == VarKind::X && v.index > l as u32 {
            VarId::new(VarKind::Z, v.index - l as u32)
        } else {
            v
        }
    });
    let mut out = BTreeMap::new();
    let outer = decompose_with_poly_coeffs(&full, l, VarKind::X)
        .expect("restriction of a GL character splits into characters");
    for (mu, coeff) in outer {
        let inner = decompose_character(&coeff, r, VarKind::Z)
            .expect("branching coefficients are characters of the second block");
        for (nu, c) in inner {
            if !c.is_zero() {
                out.insert((mu.clone(), nu), c);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_generalized, enumerate_partitions};
    use crate::polyring::xv;
    use proptest::prelude::*;

    fn gp(parts: &[i64]) -> GeneralizedPartition {
        GeneralizedPartition::new(parts.to_vec())
    }

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn adjoint_weight_of_gl2() {
        let chi = gl_character(&gp(&[1, -1]), VarKind::X);
        assert_eq!(chi.num_terms(), 3);
        assert_eq!(
            chi.coeff(&Monomial::from_pairs([(xv(1), 1), (xv(2), -1)])),
            BigInt::from(1)
        );
        assert_eq!(chi.coeff(&Monomial::one()), BigInt::from(1));
        assert_eq!(
            chi.coeff(&Monomial::from_pairs([(xv(1), -1), (xv(2), 1)])),
            BigInt::from(1)
        );
    }

    #[test]
    fn determinant_powers_and_trivial() {
        assert_eq!(gl_character(&gp(&[0, 0, 0]), VarKind::X), LaurentPoly::one(None));
        let det_sq = gl_character(&gp(&[2, 2]), VarKind::X);
        assert_eq!(det_sq.num_terms(), 1);
        assert_eq!(
            det_sq.coeff(&Monomial::from_pairs([(xv(1), 2), (xv(2), 2)])),
            BigInt::from(1)
        );
        let vector = gl_character(&gp(&[1, 0, 0]), VarKind::X);
        assert_eq!(vector.num_terms(), 3);
        assert_eq!(vector.sum_of_coeffs(), BigInt::from(3));
    }

    #[test]
    fn decompose_laurent_line() {
        // x + 1 + x^{-1} + x^{-2} over GL(1).
        let mut poly = LaurentPoly::zero(None);
        for e in [-2i64, -1, 0, 1] {
            poly.add_term(Monomial::var(xv(1), e), BigInt::from(1));
        }
        let dec = decompose_character(&poly, 1, VarKind::X).unwrap();
        let expected: BTreeMap<_, _> = [-2i64, -1, 0, 1]
            .into_iter()
            .map(|e| (gp(&[e]), BigInt::from(1)))
            .collect();
        assert_eq!(dec, expected);
    }

    #[test]
    fn decompose_round_trips() {
        for lambda in enumerate_generalized(2, 2) {
            let dec = decompose_character(&gl_character(&lambda, VarKind::X), 2, VarKind::X)
                .unwrap();
            assert_eq!(dec.len(), 1, "lambda = {lambda}");
            assert_eq!(dec.get(&lambda), Some(&BigInt::from(1)));
        }
        // A small combination with mixed multiplicities.
        let combo = gl_character(&gp(&[2, -1]), VarKind::X)
            .scale(&BigInt::from(3))
            .add(&gl_character(&gp(&[1, 1]), VarKind::X).scale(&BigInt::from(2)));
        let dec = decompose_character(&combo, 2, VarKind::X).unwrap();
        assert_eq!(dec.get(&gp(&[2, -1])), Some(&BigInt::from(3)));
        assert_eq!(dec.get(&gp(&[1, 1])), Some(&BigInt::from(2)));
        assert_eq!(dec.len(), 2);
    }

    #[test]
    fn decompose_rejects_non_characters() {
        let poly = LaurentPoly::var(xv(2), None);
        assert_eq!(
            decompose_character(&poly, 2, VarKind::X),
            Err(CharacterError::NonCharacter(vec![0, 1], 2))
        );
        let foreign = LaurentPoly::var(VarId::new(VarKind::Y, 1), None);
        assert_eq!(
            decompose_character(&foreign, 2, VarKind::X),
            Err(CharacterError::ForeignVariable("y1".into()))
        );
    }

    #[test]
    fn littlewood_richardson_pinned() {
        let c = lr_coefficients(&p(&[2, 1]), &p(&[2, 1]));
        assert_eq!(c.get(&p(&[3, 2, 1])), Some(&BigInt::from(2)));
        assert_eq!(c.get(&p(&[4, 2])), Some(&BigInt::from(1)));
        assert_eq!(c.get(&p(&[2, 2, 1, 1])), Some(&BigInt::from(1)));
        assert_eq!(c.get(&p(&[3, 3])), Some(&BigInt::from(1)));
        // Total check: sum of c * (number of SSYT with 4 letters) must match
        // the product character evaluated at x = (1,1,1,1).
        let total: BigInt = c
            .iter()
            .map(|(lam, m)| m * schur(lam, 4, VarKind::X).sum_of_coeffs())
            .sum();
        let prod = schur(&p(&[2, 1]), 4, VarKind::X).sum_of_coeffs();
        assert_eq!(total, &prod * &prod);
    }

    #[test]
    fn pieri_rule() {
        let c = lr_coefficients(&p(&[2, 1]), &p(&[1]));
        let expected: BTreeMap<_, _> = [
            (p(&[3, 1]), BigInt::from(1)),
            (p(&[2, 2]), BigInt::from(1)),
            (p(&[2, 1, 1]), BigInt::from(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(c, expected);
    }

    #[test]
    fn lr_is_symmetric() {
        for mu in enumerate_partitions(3, 2) {
            for nu in enumerate_partitions(3, 2) {
                assert_eq!(
                    lr_coefficients(&mu, &nu),
                    lr_coefficients(&nu, &mu),
                    "mu = {mu}, nu = {nu}"
                );
            }
        }
    }

    #[test]
    fn lattice_word_rule_matches_character_expansion() {
        for mu in enumerate_partitions(3, 3) {
            for nu in enumerate_partitions(3, 3) {
                assert_eq!(
                    lr_coefficients(&mu, &nu),
                    lr_from_characters(&mu, &nu),
                    "mu = {mu}, nu = {nu}"
                );
            }
        }
    }

    #[test]
    fn mixed_tensor_gl2_vector_times_dual() {
        let dec = mixed_tensor_coefficients(&p(&[1]), &p(&[1]), 2);
        let expected: BTreeMap<_, _> = [
            (gp(&[1, -1]), BigInt::from(1)),
            (gp(&[0, 0]), BigInt::from(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(dec, expected);
        // In GL(1) the mixed tensor collapses to the trivial character.
        let dec1 = mixed_tensor_coefficients(&p(&[1]), &p(&[1]), 1);
        assert_eq!(dec1, [(gp(&[0]), BigInt::from(1))].into_iter().collect());
    }

    #[test]
    fn branching_of_vector_and_adjoint() {
        let b = branching_gl_sum(&gp(&[1, 0]), 1, 1);
        let expected: BTreeMap<_, _> = [
            ((gp(&[1]), gp(&[0])), BigInt::from(1)),
            ((gp(&[0]), gp(&[1])), BigInt::from(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(b, expected);

        let b = branching_gl_sum(&gp(&[1, -1]), 1, 1);
        let expected: BTreeMap<_, _> = [
            ((gp(&[1]), gp(&[-1])), BigInt::from(1)),
            ((gp(&[0]), gp(&[0])), BigInt::from(1)),
            ((gp(&[-1]), gp(&[1])), BigInt::from(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(b, expected);
    }

    #[test]
    fn branching_of_partition_weight_matches_lr() {
        // For a partition weight and full ranks, block branching is the
        // Littlewood-Richardson rule read sideways.
        let kappa = gp(&[3, 2, 1, 0, 0, 0]);
        let b = branching_gl_sum(&kappa, 3, 3);
        for ((mu, nu), c) in &b {
            let mu_p = mu.to_partition().unwrap();
            let nu_p = nu.to_partition().unwrap();
            let lr = lr_coefficients(&mu_p, &nu_p);
            assert_eq!(
                lr.get(&p(&[3, 2, 1])).cloned().unwrap_or_else(BigInt::zero),
                c.clone(),
                "mu = {mu_p}, nu = {nu_p}"
            );
        }
        assert_eq!(
            b.get(&(gp(&[2, 1, 0]), gp(&[2, 1, 0]))),
            Some(&BigInt::from(2))
        );
    }

    fn arb_generalized(len: usize) -> impl Strategy<Value = GeneralizedPartition> {
        proptest::collection::vec(-2i64..=2, len).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            GeneralizedPartition::new(v)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn prop_decompose_round_trip(lambda in arb_generalized(3)) {
            let dec = decompose_character(
                &gl_character(&lambda, VarKind::X),
                3,
                VarKind::X,
            ).unwrap();
            prop_assert_eq!(dec.len(), 1);
            prop_assert_eq!(dec.get(&lambda), Some(&BigInt::from(1)));
        }

        #[test]
        fn prop_mixed_tensor_dualises(
            mu in proptest::collection::vec(0i64..=2, 2),
            nu in proptest::collection::vec(0i64..=2, 2),
        ) {
            let sort = |mut v: Vec<i64>| { v.sort_unstable_by(|a, b| b.cmp(a)); Partition::new(v) };
            let (mu, nu) = (sort(mu), sort(nu));
            let fwd = mixed_tensor_coefficients(&mu, &nu, 2);
            let bwd = mixed_tensor_coefficients(&nu, &mu, 2);
            for (lam, c) in &fwd {
                prop_assert_eq!(bwd.get(&contragredient(lam)), Some(c));
            }
        }
    }
}
