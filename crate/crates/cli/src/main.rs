//! Command-line front end for the hook Schur / q-character library.
//!
//! Exit codes: 0 on success (and on a passing verification), 1 when a
//! verification finds a mismatch, 2 on usage errors (malformed partitions,
//! negative truncation orders, unknown subcommands).

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hookschur::glchar::{gl_character, lr_coefficients, mixed_tensor_coefficients};
use hookschur::partitions::{GeneralizedPartition, Partition};
use hookschur::superchar::{
    affine_character, module_character, q_character, weight_of, FockAlphabet,
};
use hookschur::symfun::{hook_schur, schur};
use hookschur::tensorprod::{tensor_decompose, tensor_mismatches};
use hookschur::verify;
use hookschur::VarKind;

#[derive(Parser)]
#[command(
    name = "hsf",
    version,
    about = "Hook Schur functions, characters and q-characters of level-l modules, \
             and tensor product decompositions, all under explicit truncation"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Schur polynomial s_lambda(x_1..x_n).
    Schur {
        /// Partition, comma separated ("" or "0" for the empty one).
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        /// Number of variables (defaults to the number of parts).
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Hook Schur polynomial HS_lambda(x_1..x_p; y_1..y_q).
    Hookschur {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        /// Size of the even alphabet x.
        #[arg(long)]
        xsize: usize,
        /// Size of the odd alphabet y.
        #[arg(long)]
        ysize: usize,
    },
    /// Rational GL(l) character chi_lambda(x_1..x_l); lambda may have
    /// negative parts.
    Glchar {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        /// Rank l (defaults to the number of listed parts).
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Littlewood-Richardson coefficients of s_mu s_nu.
    Lrcoeff {
        #[arg(allow_hyphen_values = true)]
        mu: String,
        #[arg(allow_hyphen_values = true)]
        nu: String,
    },
    /// Decomposition of the GL(l) mixed tensor V^mu (x) (V^nu)^*.
    Mixedtensor {
        #[arg(allow_hyphen_values = true)]
        mu: String,
        #[arg(allow_hyphen_values = true)]
        nu: String,
        /// Rank l of the group.
        #[arg(long)]
        rank: usize,
    },
    /// Weight components, charge, and energy of the level-l module V(lambda).
    Weight {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        /// Level l (defaults to the number of listed parts).
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Character of the level-l module V(lambda): hook Schur double sum over
    /// all shapes with at most `trunc` boxes in total.
    Character {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        /// Level l (defaults to the number of listed parts).
        #[arg(long)]
        rank: Option<usize>,
        /// Size of each even alphabet (z and its bar).
        #[arg(long)]
        zsize: usize,
        /// Size of each odd alphabet (y and its bar).
        #[arg(long)]
        ysize: usize,
        /// Total box bound for the hook Schur sum.
        #[arg(long)]
        trunc: i64,
    },
    /// Normalized q-character of V(lambda) through q^order.
    Qcharacter {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        /// Level l (defaults to the number of listed parts).
        #[arg(long)]
        rank: Option<usize>,
        /// Series order in q (half powers included).
        #[arg(long)]
        order: i64,
    },
    /// Level-one affine character in the y/z alphabets with q coefficients.
    AffineChar {
        /// Family: `nn` (equal alphabets) or `mn`.
        #[arg(long = "type", value_enum)]
        family: Family,
        /// Charge lambda of the module.
        #[arg(long, allow_hyphen_values = true)]
        lambda: i64,
        /// Number of odd letters (defaults to n for type nn).
        #[arg(long)]
        m: Option<usize>,
        /// Number of even letters.
        #[arg(long)]
        n: usize,
        /// Series order in q.
        #[arg(long)]
        order: i64,
    },
    /// Tensor product decomposition of V(mu) (x) V(nu) up to a depth bound.
    Tensor {
        #[arg(allow_hyphen_values = true)]
        mu: String,
        /// Level of the left factor.
        #[arg(long)]
        llevel: usize,
        #[arg(allow_hyphen_values = true)]
        nu: String,
        /// Level of the right factor.
        #[arg(long)]
        rlevel: usize,
        /// Depth bound: components with depth at most this are listed.
        #[arg(long)]
        bound: i64,
        /// Cross-check every candidate against the branching oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Verify a single identity; exit 0 on pass, 1 on fail.
    Verify {
        #[command(subcommand)]
        identity: VerifyCmd,
    },
    /// Run the whole verification suite; exit 0 only if everything passes.
    VerifyAll {
        /// Series/truncation order budget.
        #[arg(long, default_value_t = 4)]
        order: i64,
        /// Alphabet/weight size budget.
        #[arg(long, default_value_t = 2)]
        size: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Nn,
    Mn,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// The two hook Schur constructions agree.
    #[command(name = "two-defs")]
    TwoDefs {
        /// Largest partition size checked.
        #[arg(long, default_value_t = 4)]
        bound: i64,
        /// Largest alphabet size checked (both even and odd).
        #[arg(long, default_value_t = 2)]
        xsize: usize,
    },
    /// Product and sum sides of the hook Cauchy identity.
    Cauchy {
        #[arg(long, default_value_t = 2)]
        xsize: usize,
        #[arg(long, default_value_t = 2)]
        ysize: usize,
        #[arg(long, default_value_t = 2)]
        zsize: usize,
        /// Partition size bound (total degree 2*trunc).
        #[arg(long, default_value_t = 4)]
        trunc: i64,
    },
    /// Charge-one q-series identity at one lambda.
    #[command(name = "q-identity")]
    QIdentity {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        lambda: i64,
        /// Series order in q.
        #[arg(long, default_value_t = 8)]
        order: i64,
    },
    /// q-characters of a weight and its dual agree.
    Duality {
        /// Largest level checked.
        #[arg(long, default_value_t = 2)]
        rank: usize,
        /// Entry bound for the weights.
        #[arg(long, default_value_t = 1)]
        bound: i64,
        /// Series order in q.
        #[arg(long, default_value_t = 3)]
        order: i64,
    },
    /// Double-sum and single-sum charge-one characters agree.
    Level1 {
        /// Charge range -bound..=bound.
        #[arg(long, default_value_t = 2)]
        bound: i64,
        /// Alphabet size for all four alphabets.
        #[arg(long, default_value_t = 2)]
        xsize: usize,
        /// Total box bound.
        #[arg(long, default_value_t = 3)]
        trunc: i64,
    },
    /// Tensor decomposition rule against the branching oracle.
    Tensor {
        /// Level of the left factor.
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Level of the right factor.
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Entry bound for the input weights.
        #[arg(long, default_value_t = 1)]
        entries: i64,
        /// Depth/sweep bound for candidate components.
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::parse(s).map_err(|e| e.to_string())
}

fn parse_weight(s: &str, rank: Option<usize>) -> Result<GeneralizedPartition, String> {
    let tokens = if s.trim().is_empty() {
        0
    } else {
        s.split(',').count()
    };
    let rank = match rank {
        Some(0) => return Err("rank must be at least 1".into()),
        Some(r) => r,
        None => tokens.max(1),
    };
    GeneralizedPartition::parse(s, rank).map_err(|e| e.to_string())
}

fn nonnegative(value: i64, what: &str) -> Result<i64, String> {
    if value < 0 {
        Err(format!("{what} must be nonnegative, got {value}"))
    } else {
        Ok(value)
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    let json = cli.json;
    match cli.command {
        Command::Schur { lambda, rank } => {
            let lambda = parse_partition(&lambda)?;
            let rank = rank.unwrap_or(lambda.length());
            let poly = schur(&lambda, rank, VarKind::X);
            if json {
                println!("{}", poly.to_json());
            } else {
                println!("{poly}");
            }
            Ok(true)
        }
        Command::Hookschur {
            lambda,
            xsize,
            ysize,
        } => {
            let lambda = parse_partition(&lambda)?;
            let poly = hook_schur(&lambda, xsize, ysize);
            if json {
                println!("{}", poly.to_json());
            } else {
                println!("{poly}");
            }
            Ok(true)
        }
        Command::Glchar { lambda, rank } => {
            let lambda = parse_weight(&lambda, rank)?;
            let poly = gl_character(&lambda, VarKind::X);
            if json {
                println!("{}", poly.to_json());
            } else {
                println!("{poly}");
            }
            Ok(true)
        }
        Command::Lrcoeff { mu, nu } => {
            let mu = parse_partition(&mu)?;
            let nu = parse_partition(&nu)?;
            let coeffs = lr_coefficients(&mu, &nu);
            if json {
                let list: Vec<_> = coeffs
                    .iter()
                    .map(|(lam, c)| {
                        json!({"lambda": lam.parts(), "coeff": c.to_string()})
                    })
                    .collect();
                println!("{}", serde_json::Value::Array(list));
            } else {
                for (lam, c) in &coeffs {
                    println!("{lam}: {c}");
                }
            }
            Ok(true)
        }
        Command::Mixedtensor { mu, nu, rank } => {
            let mu = parse_partition(&mu)?;
            let nu = parse_partition(&nu)?;
            if rank == 0 {
                return Err("rank must be at least 1".into());
            }
            let coeffs = mixed_tensor_coefficients(&mu, &nu, rank);
            if json {
                let list: Vec<_> = coeffs
                    .iter()
                    .map(|(lam, c)| {
                        json!({"lambda": lam.parts(), "coeff": c.to_string()})
                    })
                    .collect();
                println!("{}", serde_json::Value::Array(list));
            } else {
                for (lam, c) in &coeffs {
                    println!("{lam}: {c}");
                }
            }
            Ok(true)
        }
        Command::Weight { lambda, rank } => {
            let lambda = parse_weight(&lambda, rank)?;
            let weight = weight_of(&lambda);
            let h = weight.energy();
            if json {
                let mut value = weight.to_json();
                value["h"] = json!(h.to_string());
                println!("{value}");
            } else {
                println!("{weight}");
                println!("h = {h}");
            }
            Ok(true)
        }
        Command::Character {
            lambda,
            rank,
            zsize,
            ysize,
            trunc,
        } => {
            let lambda = parse_weight(&lambda, rank)?;
            let trunc = nonnegative(trunc, "truncation")?;
            let sizes = FockAlphabet {
                y: ysize,
                yb: ysize,
                z: zsize,
                zb: zsize,
            };
            let poly = module_character(&lambda, &sizes, trunc);
            if json {
                println!("{}", poly.to_json());
            } else {
                println!("{poly}");
            }
            Ok(true)
        }
        Command::Qcharacter {
            lambda,
            rank,
            order,
        } => {
            let lambda = parse_weight(&lambda, rank)?;
            let order = nonnegative(order, "series order")?;
            let series = q_character(&lambda, 2 * order);
            if json {
                println!("{}", series.to_json());
            } else {
                println!("{series}");
            }
            Ok(true)
        }
        Command::AffineChar {
            family,
            lambda,
            m,
            n,
            order,
        } => {
            let order = nonnegative(order, "series order")?;
            let m = match (family, m) {
                (Family::Nn, None) => n,
                (Family::Nn, Some(m)) if m == n => m,
                (Family::Nn, Some(m)) => {
                    return Err(format!(
                        "type nn has equal alphabets; got --m {m} with --n {n}"
                    ))
                }
                (Family::Mn, Some(m)) => m,
                (Family::Mn, None) => return Err("type mn needs --m".into()),
            };
            let poly = affine_character(lambda, m, n, order);
            if json {
                println!("{}", poly.to_json());
            } else {
                println!("{poly}");
            }
            Ok(true)
        }
        Command::Tensor {
            mu,
            llevel,
            nu,
            rlevel,
            bound,
            verify: check,
        } => {
            if llevel == 0 || rlevel == 0 {
                return Err("levels must be at least 1".into());
            }
            let bound = nonnegative(bound, "depth bound")?;
            let mu = GeneralizedPartition::parse(&mu, llevel).map_err(|e| e.to_string())?;
            let nu = GeneralizedPartition::parse(&nu, rlevel).map_err(|e| e.to_string())?;
            let components = tensor_decompose(&mu, &nu, bound);
            let total = mu.size() + nu.size();
            let depth_of = |kappa: &GeneralizedPartition| {
                (-kappa.part1(kappa.length() as i64)).max(0)
            };
            let mismatches = if check {
                tensor_mismatches(&mu, &nu, bound)
            } else {
                Vec::new()
            };
            if json {
                let list: Vec<_> = components
                    .iter()
                    .map(|(kappa, mult)| {
                        json!({
                            "lambda": kappa.parts(),
                            "depth": depth_of(kappa),
                            "multiplicity": mult.to_string(),
                        })
                    })
                    .collect();
                let mut report = json!({
                    "mu": mu.parts(),
                    "nu": nu.parts(),
                    "bound": bound,
                    "components": list,
                });
                if check {
                    report["oracle_mismatches"] = serde_json::Value::Array(
                        mismatches
                            .iter()
                            .map(|(kappa, rule, oracle)| {
                                json!({
                                    "lambda": kappa.parts(),
                                    "rule": rule.to_string(),
                                    "oracle": oracle.to_string(),
                                })
                            })
                            .collect(),
                    );
                }
                println!("{report}");
            } else {
                println!(
                    "tensor {} (level {llevel}) x {} (level {rlevel}), weight sum {total}, depth bound {bound}:",
                    mu, nu
                );
                for (kappa, mult) in &components {
                    println!("  {kappa}  depth {}  multiplicity {mult}", depth_of(kappa));
                }
                if check {
                    if mismatches.is_empty() {
                        println!("oracle check: pass");
                    } else {
                        for (kappa, rule, oracle) in &mismatches {
                            println!(
                                "oracle check: FAIL at {kappa}: rule {rule}, oracle {oracle}"
                            );
                        }
                    }
                }
            }
            Ok(mismatches.is_empty())
        }
        Command::Verify { identity } => {
            let report = match identity {
                VerifyCmd::TwoDefs { bound, xsize } => {
                    let bound = nonnegative(bound, "size bound")?;
                    verify::verify_two_definitions(bound, xsize, false)
                }
                VerifyCmd::Cauchy {
                    xsize,
                    ysize,
                    zsize,
                    trunc,
                } => {
                    let trunc = nonnegative(trunc, "truncation")?;
                    verify::verify_hook_cauchy(xsize, ysize, zsize, trunc, false)
                }
                VerifyCmd::QIdentity { lambda, order } => {
                    let order = nonnegative(order, "series order")?;
                    verify::verify_q_identity(lambda, lambda, 2 * order, false)
                }
                VerifyCmd::Duality {
                    rank,
                    bound,
                    order,
                } => {
                    let bound = nonnegative(bound, "entry bound")?;
                    let order = nonnegative(order, "series order")?;
                    verify::verify_duality(rank, bound, 2 * order, false)
                }
                VerifyCmd::Level1 {
                    bound,
                    xsize,
                    trunc,
                } => {
                    let bound = nonnegative(bound, "charge bound")?;
                    let trunc = nonnegative(trunc, "truncation")?;
                    verify::verify_level_one(bound, xsize, trunc, false)
                }
                VerifyCmd::Tensor {
                    m,
                    n,
                    entries,
                    bound,
                } => {
                    if m == 0 || n == 0 {
                        return Err("levels must be at least 1".into());
                    }
                    let entries = nonnegative(entries, "entry bound")?;
                    let bound = nonnegative(bound, "depth bound")?;
                    verify::verify_tensor(entries, m, n, bound, false)
                }
            };
            if json {
                println!("{}", serde_json::to_string(&report).expect("report serializes"));
            } else {
                println!("{report}");
            }
            Ok(report.passed())
        }
        Command::VerifyAll { order, size } => {
            let order = nonnegative(order, "order budget")?;
            let reports = verify::verify_all(order, size, None);
            let all_pass = reports.iter().all(|r| r.passed());
            if json {
                println!("{}", serde_json::to_string(&reports).expect("reports serialize"));
            } else {
                for report in &reports {
                    println!("{report}");
                }
            }
            Ok(all_pass)
        }
    }
}
