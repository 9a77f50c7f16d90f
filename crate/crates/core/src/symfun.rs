//! Schur, skew Schur and hook Schur polynomials in finitely many variables.
//!
//! Everything here is tableau-based.  A single enumerator walks fillings of a
//! skew diagram with letters from an ordered alphabet that has `p` "even"
//! letters followed by `q` "odd" letters: entries weakly increase along rows
//! and down columns, an even letter may not repeat within a column, an odd
//! letter may not repeat within a row.  Setting `q = 0` gives semistandard
//! tableaux (Schur polynomials), `p = 0` gives their conjugates, and the mixed
//! case gives hook Schur polynomials directly.
//!
//! The enumerator carries an optional additive cost per letter with a budget;
//! callers that specialise variables to powers of `q` use it to prune the
//! search to the truncation order instead of materialising a huge polynomial.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::partitions::{enumerate_partitions, Partition, SkewShape};
use crate::polyring::{LaurentPoly, Monomial, Trunc, VarId, VarKind};

/// One cell of the walk order: (row, index within row, 1-based column).
type Cell = (usize, usize, i64);

fn cell_list(outer: &[i64], inner: &[i64]) -> Vec<Cell> {
    let mut cells = Vec::new();
    for (r, &out) in outer.iter().enumerate() {
        let inn = inner.get(r).copied().unwrap_or(0);
        debug_assert!(inn <= out, "inner row longer than outer row");
        for c in inn + 1..=out {
            cells.push((r, (c - inn - 1) as usize, c));
        }
    }
    cells
}

struct Filler<'a, F> {
    cells: &'a [Cell],
    inner: &'a [i64],
    p: usize,
    pq: usize,
    cost2: &'a [i64],
    budget2: i64,
    visit: &'a mut F,
}

impl<F: FnMut(&[Vec<usize>], i64)> Filler<'_, F> {
    fn run(&mut self, rows: &mut Vec<Vec<usize>>, k: usize, cost_acc: i64) {
        if k == self.cells.len() {
            (self.visit)(rows, cost_acc);
            return;
        }
        let (r, j, c) = self.cells[k];
        // Lower bound from the left neighbour: equality is allowed only for
        // even letters (index < p).
        let lb_left = if j > 0 {
            let l = rows[r][j - 1];
            if l < self.p {
                l
            } else {
                l + 1
            }
        } else {
            0
        };
        // Lower bound from the cell above: equality is allowed only for odd
        // letters (index >= p).
        let lb_above = if r > 0 {
            let inn_prev = self.inner.get(r - 1).copied().unwrap_or(0);
            if c > inn_prev && rows[r - 1].len() as i64 > c - inn_prev - 1 {
                let a = rows[r - 1][(c - inn_prev - 1) as usize];
                if a >= self.p {
                    a
                } else {
                    a + 1
                }
            } else {
                0
            }
        } else {
            0
        };
        let lb = lb_left.max(lb_above);
        for e in lb..self.pq {
            let cost = cost_acc.saturating_add(self.cost2[e]);
            if cost > self.budget2 {
                continue;
            }
            rows[r].push(e);
            self.run(rows, k + 1, cost);
            rows[r].pop();
        }
    }
}

/// Enumerate all admissible fillings of `outer/inner` with `p` even letters
/// `0..p` followed by `q` odd letters `p..p+q`.  `cost2[e]` is the additive
/// cost of letter `e`; fillings whose total cost exceeds `budget2` are pruned
/// (pass `i64::MAX` for no pruning).  The visitor receives the rows of the
/// filling (letters per row, skew rows left-aligned past their inner part)
/// and the total cost.
pub(crate) fn for_each_filling<F: FnMut(&[Vec<usize>], i64)>(
    outer: &[i64],
    inner: &[i64],
    p: usize,
    q: usize,
    cost2: &[i64],
    budget2: i64,
    visit: &mut F,
) {
    assert_eq!(cost2.len(), p + q);
    let cells = cell_list(outer, inner);
    let mut rows: Vec<Vec<usize>> = outer.iter().map(|_| Vec::new()).collect();
    let mut filler = Filler {
        cells: &cells,
        inner,
        p,
        pq: p + q,
        cost2,
        budget2,
        visit,
    };
    filler.run(&mut rows, 0, 0);
}

/// Monomial weight of a filling: letter `e < p` maps to variable
/// `(x_kind, e+1)`, letter `e >= p` to `(y_kind, e-p+1)`.
fn weight_monomial(rows: &[Vec<usize>], p: usize, x_kind: VarKind, y_kind: VarKind) -> Monomial {
    let mut counts: BTreeMap<VarId, i64> = BTreeMap::new();
    for row in rows {
        for &e in row {
            let v = if e < p {
                VarId::new(x_kind, (e + 1) as u32)
            } else {
                VarId::new(y_kind, (e - p + 1) as u32)
            };
            *counts.entry(v).or_insert(0) += 1;
        }
    }
    Monomial::from_pairs(counts)
}

fn fill_poly(outer: &[i64], inner: &[i64], p: usize, q: usize, xk: VarKind, yk: VarKind) -> LaurentPoly {
    let cost2 = vec![0i64; p + q];
    let mut acc = LaurentPoly::zero(None);
    for_each_filling(outer, inner, p, q, &cost2, i64::MAX, &mut |rows, _| {
        acc.add_term(weight_monomial(rows, p, xk, yk), BigInt::from(1));
    });
    acc
}

/// Schur polynomial `s_lambda` in `n` variables of the given kind.
/// Zero when `lambda` has more than `n` rows.
pub fn schur(lambda: &Partition, n: usize, kind: VarKind) -> LaurentPoly {
    debug_assert!(kind != VarKind::Q);
    fill_poly(lambda.parts(), &[], n, 0, kind, kind)
}

/// Skew Schur polynomial `s_{outer/inner}` in `n` variables.
pub fn skew_schur(shape: &SkewShape, n: usize, kind: VarKind) -> LaurentPoly {
    debug_assert!(kind != VarKind::Q);
    fill_poly(shape.outer().parts(), shape.inner().parts(), n, 0, kind, kind)
}

/// Conjugate-semistandard skew polynomial: rows strict, columns weak.  Equal
/// to `skew_schur` of the conjugate shape; kept as a direct enumeration so the
/// two can be checked against each other.
pub fn skew_schur_conj(shape: &SkewShape, n: usize, kind: VarKind) -> LaurentPoly {
    debug_assert!(kind != VarKind::Q);
    fill_poly(shape.outer().parts(), shape.inner().parts(), 0, n, kind, kind)
}

/// Hook Schur polynomial via the cancellation-free sum
/// `HS_lambda(x; y) = sum over mu inside lambda of s_mu(x) s_{lambda'/mu'}(y)`,
/// with arbitrary variable kinds for the two alphabets.
pub fn hook_schur_in(
    lambda: &Partition,
    x_size: usize,
    x_kind: VarKind,
    y_size: usize,
    y_kind: VarKind,
) -> LaurentPoly {
    let lam_conj = lambda.conjugate();
    let mut acc = LaurentPoly::zero(None);
    for mu in enumerate_partitions(lambda.size(), x_size) {
        if !lambda.contains(&mu) {
            continue;
        }
        let sx = schur(&mu, x_size, x_kind);
        if sx.is_zero() {
            continue;
        }
        let shape = SkewShape::new(lam_conj.clone(), mu.conjugate())
            .expect("mu inside lambda, so mu' inside lambda'");
        let sy = skew_schur(&shape, y_size, y_kind);
        if sy.is_zero() {
            continue;
        }
        acc = acc.add(&sx.mul(&sy));
    }
    acc
}

/// Hook Schur polynomial `HS_lambda(x_1..x_p; y_1..y_q)`.
pub fn hook_schur(lambda: &Partition, x_size: usize, y_size: usize) -> LaurentPoly {
    hook_schur_in(lambda, x_size, VarKind::X, y_size, VarKind::Y)
}

/// Hook Schur polynomial by direct enumeration of mixed tableaux: entries
/// from `x_1 < .. < x_p < y_1 < .. < y_q`, rows and columns weakly
/// increasing, no `x` repeats in a column, no `y` repeats in a row.
pub fn hook_schur_tableau(lambda: &Partition, x_size: usize, y_size: usize) -> LaurentPoly {
    fill_poly(
        lambda.parts(),
        &[],
        x_size,
        y_size,
        VarKind::X,
        VarKind::Y,
    )
}

/// Truncated expansion of `(1 - m)^{-1}` as `1 + m + m^2 + ...`.  The
/// monomial must have positive degree under the truncation grading.
pub fn geometric_factor(m: &Monomial, trunc: Trunc) -> LaurentPoly {
    assert!(
        m.degree(trunc.grading) > 0,
        "geometric series only converges for monomials of positive degree"
    );
    let mut acc = LaurentPoly::one(Some(trunc));
    let mut cur = m.clone();
    while trunc.keeps(&cur) {
        acc.add_term(cur.clone(), BigInt::from(1));
        cur = cur.mul(m);
    }
    acc
}

/// The polynomial `1 + m`.
pub fn one_plus_term(m: &Monomial, trunc: Option<Trunc>) -> LaurentPoly {
    let mut acc = LaurentPoly::one(trunc);
    acc.add_term(m.clone(), BigInt::from(1));
    acc
}

/// Left side of the hook Cauchy identity, truncated to total degree `2 * d`:
/// product over i <= x_size, j <= y_size, k <= z_size of
/// `(1 - x_i z_k)^{-1} (1 + y_j z_k)`.  Every monomial has equal (x,y)- and
/// z-degree, so total degree `2d` captures exactly the terms paired with
/// partitions of size at most `d`.
pub fn hook_cauchy_lhs(x_size: usize, y_size: usize, z_size: usize, d: i64) -> LaurentPoly {
    let trunc = Trunc::total(2 * d);
    let mut acc = LaurentPoly::one(Some(trunc));
    for k in 1..=z_size as u32 {
        let zk = VarId::new(VarKind::Z, k);
        for i in 1..=x_size as u32 {
            let m = Monomial::from_pairs([(VarId::new(VarKind::X, i), 1), (zk, 1)]);
            acc = acc.mul(&geometric_factor(&m, trunc));
        }
        for j in 1..=y_size as u32 {
            let m = Monomial::from_pairs([(VarId::new(VarKind::Y, j), 1), (zk, 1)]);
            acc = acc.mul(&one_plus_term(&m, Some(trunc)));
        }
    }
    acc
}

/// Right side of the hook Cauchy identity under the same truncation:
/// `sum over lambda with |lambda| <= d and at most z_size rows of
/// HS_lambda(x; y) s_lambda(z)`.
pub fn hook_cauchy_rhs(x_size: usize, y_size: usize, z_size: usize, d: i64) -> LaurentPoly {
    let trunc = Trunc::total(2 * d);
    let mut acc = LaurentPoly::zero(Some(trunc));
    for lambda in enumerate_partitions(d, z_size) {
        let hs = hook_schur(&lambda, x_size, y_size);
        if hs.is_zero() {
            continue;
        }
        let sz = schur(&lambda, z_size, VarKind::Z);
        acc = acc.add(&hs.mul(&sz).truncated(trunc));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{xv, Grading};
    use proptest::prelude::*;

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts.to_vec())
    }

    /// Complete homogeneous polynomial h_k in n variables, by recursion on
    /// the last variable.  Oracle for Jacobi-Trudi.
    fn complete_h(k: i64, n: usize, kind: VarKind) -> LaurentPoly {
        if k < 0 {
            return LaurentPoly::zero(None);
        }
        if n == 0 {
            return if k == 0 {
                LaurentPoly::one(None)
            } else {
                LaurentPoly::zero(None)
            };
        }
        let mut acc = LaurentPoly::zero(None);
        let xn = VarId::new(kind, n as u32);
        for j in 0..=k {
            let tail = complete_h(k - j, n - 1, kind);
            acc = acc.add(&tail.mul(&LaurentPoly::from_monomial(
                Monomial::var(xn, j),
                BigInt::from(1),
                None,
            )));
        }
        acc
    }

    fn det(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
        let n = m.len();
        if n == 0 {
            return LaurentPoly::one(None);
        }
        let mut acc = LaurentPoly::zero(None);
        for (c, entry) in m[0].iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            let minor: Vec<Vec<LaurentPoly>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(cc, _)| *cc != c)
                        .map(|(_, e)| e.clone())
                        .collect()
                })
                .collect();
            let term = entry.mul(&det(&minor));
            acc = if c % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        acc
    }

    fn jacobi_trudi(lambda: &Partition, n: usize, kind: VarKind) -> LaurentPoly {
        let r = lambda.length();
        let m: Vec<Vec<LaurentPoly>> = (1..=r as i64)
            .map(|i| {
                (1..=r as i64)
                    .map(|j| complete_h(lambda.part(i as usize - 1) - i + j, n, kind))
                    .collect()
            })
            .collect();
        det(&m)
    }

    #[test]
    fn schur_matches_jacobi_trudi() {
        for parts in [
            vec![1],
            vec![2],
            vec![1, 1],
            vec![2, 1],
            vec![2, 2],
            vec![3, 1],
            vec![2, 1, 1],
        ] {
            let lam = p(&parts);
            assert_eq!(
                schur(&lam, 3, VarKind::X),
                jacobi_trudi(&lam, 3, VarKind::X),
                "lambda = {lam}"
            );
        }
    }

    #[test]
    fn schur_edge_cases() {
        assert_eq!(schur(&Partition::empty(), 0, VarKind::X), LaurentPoly::one(None));
        assert_eq!(schur(&Partition::empty(), 3, VarKind::X), LaurentPoly::one(None));
        assert!(schur(&p(&[1, 1, 1, 1]), 3, VarKind::X).is_zero());
        assert!(schur(&p(&[1]), 0, VarKind::X).is_zero());
        // Number of semistandard tableaux of shape (2,1) with entries <= 3.
        assert_eq!(
            schur(&p(&[2, 1]), 3, VarKind::X).sum_of_coeffs(),
            BigInt::from(8)
        );
    }

    #[test]
    fn conjugate_filler_matches_conjugate_shape() {
        let shapes = [
            (vec![3, 2, 1], vec![1]),
            (vec![2, 2], vec![1]),
            (vec![3, 1], vec![]),
            (vec![4, 2], vec![2, 1]),
        ];
        for (outer, inner) in shapes {
            let shape = SkewShape::new(p(&outer), p(&inner)).unwrap();
            for n in 1..=3 {
                assert_eq!(
                    skew_schur_conj(&shape, n, VarKind::X),
                    skew_schur(&shape.conjugate(), n, VarKind::X),
                    "shape {}/{} with {n} vars",
                    shape.outer(),
                    shape.inner()
                );
            }
        }
    }

    #[test]
    fn hook_schur_small_pinned() {
        // HS_(2)(x1; y1) = x1^2 + x1 y1, HS_(1,1)(x1; y1) = x1 y1 + y1^2.
        assert_eq!(hook_schur(&p(&[2]), 1, 1).to_string(), "x1^2 + x1*y1");
        let mut exp = LaurentPoly::zero(None);
        exp.add_term(
            Monomial::from_pairs([(xv(1), 1), (VarId::new(VarKind::Y, 1), 1)]),
            BigInt::from(1),
        );
        exp.add_term(
            Monomial::var(VarId::new(VarKind::Y, 1), 2),
            BigInt::from(1),
        );
        assert_eq!(hook_schur(&p(&[1, 1]), 1, 1), exp);
        // HS_(2,1)(x1; y1) = x1^2 y1 + x1 y1^2 = x1 y1 (x1 + y1).
        let hs = hook_schur(&p(&[2, 1]), 1, 1);
        assert_eq!(hs.num_terms(), 2);
        assert_eq!(
            hs.coeff(&Monomial::from_pairs([
                (xv(1), 2),
                (VarId::new(VarKind::Y, 1), 1)
            ])),
            BigInt::from(1)
        );
        assert_eq!(
            hs.coeff(&Monomial::from_pairs([
                (xv(1), 1),
                (VarId::new(VarKind::Y, 1), 2)
            ])),
            BigInt::from(1)
        );
    }

    #[test]
    fn two_definitions_agree() {
        for lam in enumerate_partitions(4, 4) {
            for (px, qy) in [(1, 2), (2, 1), (2, 2)] {
                assert_eq!(
                    hook_schur(&lam, px, qy),
                    hook_schur_tableau(&lam, px, qy),
                    "lambda = {lam}, sizes ({px},{qy})"
                );
            }
        }
    }

    #[test]
    fn vanishing_outside_hook() {
        // HS_lambda(x_1..x_p; y_1..y_q) = 0 exactly when lambda_{p+1} > q.
        for lam in enumerate_partitions(5, 5) {
            for px in 1..=2usize {
                for qy in 1..=2i64 {
                    let zero = hook_schur(&lam, px, qy as usize).is_zero();
                    assert_eq!(
                        zero,
                        lam.part(px) > qy,
                        "lambda = {lam}, sizes ({px},{qy})"
                    );
                }
            }
        }
    }

    #[test]
    fn conjugation_swaps_alphabets() {
        let swap = |v: VarId| match v.kind {
            VarKind::X => VarId::new(VarKind::Y, v.index),
            VarKind::Y => VarId::new(VarKind::X, v.index),
            _ => v,
        };
        for lam in enumerate_partitions(4, 4) {
            assert_eq!(
                hook_schur(&lam, 2, 2).map_vars(swap),
                hook_schur(&lam.conjugate(), 2, 2),
                "lambda = {lam}"
            );
        }
        assert_eq!(
            hook_schur(&p(&[3, 1]), 1, 2).map_vars(swap),
            hook_schur(&p(&[2, 1, 1]), 2, 1)
        );
    }

    #[test]
    fn homogeneous_of_degree_size() {
        for lam in enumerate_partitions(4, 3) {
            let hs = hook_schur(&lam, 2, 2);
            for (m, _) in hs.terms() {
                assert_eq!(m.degree(Grading::Total), lam.size(), "lambda = {lam}");
            }
        }
    }

    #[test]
    fn stable_under_setting_last_variable_zero() {
        for parts in [vec![2, 1], vec![3, 1], vec![2, 2, 1]] {
            let lam = p(&parts);
            assert_eq!(
                hook_schur(&lam, 3, 2).set_var_zero(xv(3)),
                hook_schur(&lam, 2, 2),
                "lambda = {lam}"
            );
        }
    }

    #[test]
    fn cauchy_identity_truncated() {
        assert_eq!(hook_cauchy_lhs(2, 2, 2, 3), hook_cauchy_rhs(2, 2, 2, 3));
        assert_eq!(hook_cauchy_lhs(1, 2, 1, 4), hook_cauchy_rhs(1, 2, 1, 4));
        assert_eq!(hook_cauchy_lhs(2, 0, 2, 3), hook_cauchy_rhs(2, 0, 2, 3));
        assert_eq!(hook_cauchy_lhs(0, 2, 2, 3), hook_cauchy_rhs(0, 2, 2, 3));
    }

    #[test]
    fn geometric_factor_telescopes() {
        let m = Monomial::from_pairs([(xv(1), 1), (VarId::new(VarKind::Z, 1), 1)]);
        let trunc = Trunc::total(6);
        let geo = geometric_factor(&m, trunc);
        let mut one_minus = LaurentPoly::one(Some(trunc));
        one_minus.add_term(m, BigInt::from(-1));
        assert_eq!(geo.mul(&one_minus), LaurentPoly::one(Some(trunc)));
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(0i64..=3, 0..4).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn prop_two_definitions_agree(lam in arb_partition()) {
            prop_assert_eq!(hook_schur(&lam, 2, 2), hook_schur_tableau(&lam, 2, 2));
        }

        #[test]
        fn prop_schur_symmetric_in_first_two_vars(lam in arb_partition()) {
            let swap = |v: VarId| match (v.kind, v.index) {
                (VarKind::X, 1) => xv(2),
                (VarKind::X, 2) => xv(1),
                _ => v,
            };
            let s = schur(&lam, 3, VarKind::X);
            prop_assert_eq!(s.map_vars(swap), s.clone());
        }
    }
}
