//! Decomposition of a tensor product of two highest weight modules at
//! charges l and r into modules at charge l + r.
//!
//! Components are indexed by generalized partitions kappa of length l + r.
//! Each kappa determines a unique shift depth d = max(0, -kappa_{l+r});
//! un-shifting by d turns everything into ordinary partitions, where the
//! multiplicity is a Littlewood-Richardson coefficient:
//!
//! ```text
//!   mult(kappa) = c^{kappa + d}_{mu + d, nu + d}
//! ```
//!
//! with the conventions that mu + d and nu + d must be partitions (so
//! d >= -mu_l, -nu_r), and for d > 0 the un-shifted kappa + d must have a
//! zero last part (otherwise the component already arises at a smaller
//! depth).  The decomposition is infinite: components exist at every depth,
//! so the API takes an explicit depth bound.
//!
//! The independent check interprets the same numbers as branching
//! multiplicities of GL(l+r) restricted to GL(l) x GL(r).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::glchar::{branching_gl_sum, lr_coefficients};
use crate::partitions::{GeneralizedPartition, Partition};

fn shifted_partition(gp: &GeneralizedPartition, d: i64) -> Option<Partition> {
    gp.shifted(d).to_partition()
}

/// All components of the tensor product of the charge-l module `mu` with the
/// charge-r module `nu`, up to shift depth `max_depth`: the returned map
/// contains every kappa with max(0, -kappa_{l+r}) <= max_depth and its
/// multiplicity.
pub fn tensor_decompose(
    mu: &GeneralizedPartition,
    nu: &GeneralizedPartition,
    max_depth: i64,
) -> BTreeMap<GeneralizedPartition, BigInt> {
    let l = mu.length();
    let r = nu.length();
    let d_min = 0i64
        .max(if l > 0 { -mu.part1(l as i64) } else { 0 })
        .max(if r > 0 { -nu.part1(r as i64) } else { 0 });
    let mut out = BTreeMap::new();
    for d in d_min..=max_depth.max(d_min) {
        if d > max_depth {
            break;
        }
        let (Some(alpha), Some(beta)) = (shifted_partition(mu, d), shifted_partition(nu, d))
        else {
            continue;
        };
        for (lambda, c) in lr_coefficients(&alpha, &beta) {
            if lambda.length() > l + r {
                continue;
            }
            if d > 0 && lambda.length() == l + r {
                // This component is accounted for at a smaller depth.
                continue;
            }
            let kappa = lambda.to_generalized(l + r).shifted(-d);
            let prev = out.insert(kappa, c);
            debug_assert!(prev.is_none(), "each component has a unique depth");
        }
    }
    out
}

/// Independent multiplicity of a single component: the branching coefficient
/// of the GL(l+r) module `kappa` at the pair (mu, nu).
pub fn branching_multiplicity(
    kappa: &GeneralizedPartition,
    mu: &GeneralizedPartition,
    nu: &GeneralizedPartition,
) -> BigInt {
    let l = mu.length();
    let r = nu.length();
    branching_gl_sum(kappa, l, r)
        .remove(&(mu.clone(), nu.clone()))
        .unwrap_or_else(BigInt::zero)
}

/// Compare the tensor rule against the branching interpretation over every
/// candidate component with depth and entry size within `bound`.  Returns
/// the disagreements (kappa, rule value, branching value); empty means the
/// two computations agree on the whole window.
pub fn tensor_mismatches(
    mu: &GeneralizedPartition,
    nu: &GeneralizedPartition,
    bound: i64,
) -> Vec<(GeneralizedPartition, BigInt, BigInt)> {
    let l = mu.length();
    let r = nu.length();
    let total = mu.size() + nu.size();
    let computed = tensor_decompose(mu, nu, bound);
    let mut candidates: Vec<GeneralizedPartition> = computed.keys().cloned().collect();
    // Sweep every weakly decreasing vector with the right sum whose depth
    // stays within the bound and whose entries cannot outgrow the inputs.
    let hi = mu.part1(1).max(nu.part1(1)).max(0) + bound + 1;
    let mut stack: Vec<Vec<i64>> = vec![vec![]];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == l + r {
            let kappa = GeneralizedPartition::new(prefix);
            if kappa.size() == total && !candidates.contains(&kappa) {
                candidates.push(kappa);
            }
            continue;
        }
        let upper = prefix.last().copied().unwrap_or(hi);
        for next in -bound..=upper {
            let mut v = prefix.clone();
            v.push(next);
            stack.push(v);
        }
    }
    let mut bad = Vec::new();
    for kappa in candidates {
        let depth = (-kappa.part1((l + r) as i64)).max(0);
        if depth > bound {
            continue;
        }
        let rule = computed
            .get(&kappa)
            .cloned()
            .unwrap_or_else(BigInt::zero);
        let oracle = branching_multiplicity(&kappa, mu, nu);
        if rule != oracle {
            bad.push((kappa, rule, oracle));
        }
    }
    bad
}
