//! Self-contained verifiers for the identities the library is built on.
//!
//! Each verifier recomputes both sides of one identity inside a budget and
//! returns a [`VerificationReport`] carrying the parameters used, a pass/fail
//! status, and (on failure) the first differing coefficient.  Reports
//! serialize to JSON for machine consumption; serialization round-trips
//! byte-for-byte because every map involved is ordered.
//!
//! The `perturb` flag on each verifier is a harness self-test hook: it adds 1
//! to a single coefficient on the computed side of the first case checked, so
//! a healthy verifier must report exactly that failure.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::partitions::{enumerate_generalized, enumerate_partitions, GeneralizedPartition};
use crate::polyring::fmt_half_power;
use crate::superchar::{
    level1_character_direct, module_character, q_character, q_identity_sides, FockAlphabet,
};
use crate::symfun::{hook_cauchy_lhs, hook_cauchy_rhs, hook_schur, hook_schur_tableau};
use crate::tensorprod::{branching_multiplicity, tensor_decompose, tensor_mismatches};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub location: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity_name: String,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(f, "{} [{}]: ", self.identity_name, args.join(", "))?;
        match &self.first_mismatch {
            None => write!(f, "pass ({} ms)", self.elapsed_ms),
            Some(m) => write!(
                f,
                "FAIL at {}: expected {}, got {} ({} ms)",
                m.location, m.expected, m.actual, self.elapsed_ms
            ),
        }
    }
}

fn finish(
    name: &str,
    parameters: BTreeMap<String, String>,
    first_mismatch: Option<Mismatch>,
    start: Instant,
) -> VerificationReport {
    VerificationReport {
        identity_name: name.to_string(),
        parameters,
        status: if first_mismatch.is_none() {
            Status::Pass
        } else {
            Status::Fail
        },
        first_mismatch,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

/// The two constructions of the hook Schur polynomial (sum of Schur times
/// skew Schur over inner shapes, and the direct super-tableau generating
/// function) agree for every partition of size at most `max_weight` and all
/// alphabet sizes up to `max_alpha`.
pub fn verify_two_definitions(
    max_weight: i64,
    max_alpha: usize,
    perturb: bool,
) -> VerificationReport {
    let start = Instant::now();
    let mut mismatch = None;
    let mut inject = perturb;
    'outer: for lambda in enumerate_partitions(max_weight, max_weight.max(0) as usize) {
        for p in 0..=max_alpha {
            for q in 0..=max_alpha {
                let expected = hook_schur(&lambda, p, q);
                let mut actual = hook_schur_tableau(&lambda, p, q);
                if inject {
                    actual.add_term(crate::polyring::Monomial::one(), BigInt::one());
                    inject = false;
                }
                if let Some((m, e, a)) = expected.first_mismatch(&actual) {
                    mismatch = Some(Mismatch {
                        location: format!("lambda = {}, p = {p}, q = {q}, term {m}", lambda),
                        expected: e.to_string(),
                        actual: a.to_string(),
                    });
                    break 'outer;
                }
            }
        }
    }
    finish(
        "two-defs",
        params(&[
            ("max_weight", max_weight.to_string()),
            ("max_alphabet", max_alpha.to_string()),
        ]),
        mismatch,
        start,
    )
}

/// The hook Cauchy identity: the product over all alphabet pairs equals the
/// sum of hook Schur times Schur polynomials, exactly through total degree
/// `2 * degree` (that is, for all partitions of size at most `degree`).
pub fn verify_hook_cauchy(
    x_size: usize,
    y_size: usize,
    z_size: usize,
    degree: i64,
    perturb: bool,
) -> VerificationReport {
    let start = Instant::now();
    let expected = hook_cauchy_lhs(x_size, y_size, z_size, degree);
    let mut actual = hook_cauchy_rhs(x_size, y_size, z_size, degree);
    if perturb {
        actual.add_term(crate::polyring::Monomial::one(), BigInt::one());
    }
    let mismatch = expected.first_mismatch(&actual).map(|(m, e, a)| Mismatch {
        location: format!("term {m}"),
        expected: e.to_string(),
        actual: a.to_string(),
    });
    finish(
        "cauchy",
        params(&[
            ("x_size", x_size.to_string()),
            ("y_size", y_size.to_string()),
            ("z_size", z_size.to_string()),
            ("degree", degree.to_string()),
        ]),
        mismatch,
        start,
    )
}

/// The charge-one series identity: for each `lambda` in the range, the sum of
/// principal hook Schur specialisations over admissible two-row shapes equals
/// the closed product form, through `q^(order2/2)`.
pub fn verify_q_identity(
    lambda_min: i64,
    lambda_max: i64,
    order2: i64,
    perturb: bool,
) -> VerificationReport {
    let start = Instant::now();
    let mut mismatch = None;
    let mut inject = perturb;
    for lambda in lambda_min..=lambda_max {
        let (mut actual, expected) = q_identity_sides(lambda, order2);
        if inject {
            actual.add_coeff(0, BigInt::one());
            inject = false;
        }
        if let Some((e2, e, a)) = expected.first_mismatch(&actual) {
            mismatch = Some(Mismatch {
                location: format!("lambda = {lambda}, {}", fmt_half_power(e2)),
                expected: e.to_string(),
                actual: a.to_string(),
            });
            break;
        }
    }
    finish(
        "q-identity",
        params(&[
            ("lambda_min", lambda_min.to_string()),
            ("lambda_max", lambda_max.to_string()),
            ("order2", order2.to_string()),
        ]),
        mismatch,
        start,
    )
}

/// Duality symmetry of normalized q-characters: `lambda` and its dual weight
/// have the same q-character through `q^(order2/2)`, for every weight of rank
/// at most `max_rank` with entries bounded by `entry_bound`.
pub fn verify_duality(
    max_rank: usize,
    entry_bound: i64,
    order2: i64,
    perturb: bool,
) -> VerificationReport {
    let start = Instant::now();
    let mut mismatch = None;
    let mut inject = perturb;
    'outer: for rank in 1..=max_rank {
        for lambda in enumerate_generalized(entry_bound, rank) {
            let dual = lambda.dual();
            if dual < lambda {
                continue;
            }
            let expected = q_character(&dual, order2);
            let mut actual = q_character(&lambda, order2);
            if inject {
                actual.add_coeff(0, BigInt::one());
                inject = false;
            }
            if let Some((e2, e, a)) = expected.first_mismatch(&actual) {
                mismatch = Some(Mismatch {
                    location: format!("lambda = {lambda}, {}", fmt_half_power(e2)),
                    expected: e.to_string(),
                    actual: a.to_string(),
                });
                break 'outer;
            }
        }
    }
    finish(
        "duality",
        params(&[
            ("max_rank", max_rank.to_string()),
            ("entry_bound", entry_bound.to_string()),
            ("order2", order2.to_string()),
        ]),
        mismatch,
        start,
    )
}

/// Charge-one consistency: the general double-sum character agrees with the
/// single-sum closed form for every `lambda` in `-bound..=bound`, with all
/// four alphabets of the given size, through the given hook degree.
pub fn verify_level_one(
    lambda_bound: i64,
    alphabet: usize,
    degree: i64,
    perturb: bool,
) -> VerificationReport {
    let start = Instant::now();
    let sizes = FockAlphabet {
        y: alphabet,
        yb: alphabet,
        z: alphabet,
        zb: alphabet,
    };
    let mut mismatch = None;
    let mut inject = perturb;
    for lambda in -lambda_bound..=lambda_bound {
        let weight = GeneralizedPartition::new(vec![lambda]);
        let expected = level1_character_direct(lambda, &sizes, degree);
        let mut actual = module_character(&weight, &sizes, degree);
        if inject {
            actual.add_term(crate::polyring::Monomial::one(), BigInt::one());
            inject = false;
        }
        if let Some((m, e, a)) = expected.first_mismatch(&actual) {
            mismatch = Some(Mismatch {
                location: format!("lambda = {lambda}, term {m}"),
                expected: e.to_string(),
                actual: a.to_string(),
            });
            break;
        }
    }
    finish(
        "level1",
        params(&[
            ("lambda_bound", lambda_bound.to_string()),
            ("alphabet", alphabet.to_string()),
            ("degree", degree.to_string()),
        ]),
        mismatch,
        start,
    )
}

/// The explicit tensor decomposition rule against the block-branching oracle:
/// for all weight pairs with entries bounded by `entry_bound` at levels
/// `(l, r)`, every candidate component within `bound` carries the same
/// multiplicity on both routes.
pub fn verify_tensor(
    entry_bound: i64,
    l: usize,
    r: usize,
    bound: i64,
    perturb: bool,
) -> VerificationReport {
    let start = Instant::now();
    let mut mismatch = None;
    let mut inject = perturb;
    'outer: for mu in enumerate_generalized(entry_bound, l) {
        for nu in enumerate_generalized(entry_bound, r) {
            if inject {
                inject = false;
                // Bump the first computed multiplicity and compare it against
                // the branching oracle, mirroring a real defect in the rule.
                if let Some((kappa, mult)) = tensor_decompose(&mu, &nu, bound).into_iter().next()
                {
                    let oracle = branching_multiplicity(&kappa, &mu, &nu);
                    mismatch = Some(Mismatch {
                        location: format!("mu = {mu}, nu = {nu}, kappa = {kappa}"),
                        expected: oracle.to_string(),
                        actual: (mult + BigInt::one()).to_string(),
                    });
                    break 'outer;
                }
            }
            if let Some((kappa, rule, oracle)) =
                tensor_mismatches(&mu, &nu, bound).into_iter().next()
            {
                mismatch = Some(Mismatch {
                    location: format!("mu = {mu}, nu = {nu}, kappa = {kappa}"),
                    expected: oracle.to_string(),
                    actual: rule.to_string(),
                });
                break 'outer;
            }
        }
    }
    finish(
        "tensor",
        params(&[
            ("entry_bound", entry_bound.to_string()),
            ("l", l.to_string()),
            ("r", r.to_string()),
            ("bound", bound.to_string()),
        ]),
        mismatch,
        start,
    )
}

/// Which verifier a deliberate coefficient perturbation is injected into; a
/// self-test hook for the harness itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PerturbTarget {
    TwoDefinitions,
    HookCauchy,
    QIdentity,
    Duality,
    LevelOne,
    Tensor,
}

/// Run the whole identity suite with budgets scaled from `order_budget`
/// (series orders, truncation degrees) and `size_budget` (alphabet sizes,
/// weight sizes, ranks).  Zero budgets reduce every check to its degree-zero
/// instance, which passes vacuously.  Failures are reported, never thrown.
pub fn verify_all(
    order_budget: i64,
    size_budget: usize,
    perturb: Option<PerturbTarget>,
) -> Vec<VerificationReport> {
    assert!(order_budget >= 0, "budgets must be nonnegative");
    let hit = |t: PerturbTarget| perturb == Some(t);
    let sb = size_budget as i64;
    vec![
        verify_two_definitions(sb, size_budget.min(2), hit(PerturbTarget::TwoDefinitions)),
        verify_hook_cauchy(
            size_budget.min(2),
            size_budget.min(2),
            size_budget.min(2),
            order_budget.min(4),
            hit(PerturbTarget::HookCauchy),
        ),
        verify_q_identity(-sb, sb, 2 * order_budget, hit(PerturbTarget::QIdentity)),
        verify_duality(
            size_budget.min(2),
            sb.min(1),
            2 * order_budget,
            hit(PerturbTarget::Duality),
        ),
        verify_level_one(
            sb.min(2),
            size_budget.min(2),
            order_budget.min(3),
            hit(PerturbTarget::LevelOne),
        ),
        verify_tensor(sb.min(1), 1, 1, order_budget.min(2), hit(PerturbTarget::Tensor)),
    ]
}
