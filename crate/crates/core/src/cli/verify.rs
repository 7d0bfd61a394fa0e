//! Per-order drivers for each verifiable claim.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use clap::ValueEnum;
use rayon::prelude::*;

use super::cache::{cached_table, Cache};
use super::CliError;
use crate::arith::int;
use crate::error::{Error, Result};
use crate::poly::{verify_alpha_identities, verify_gn_reflection, IdentityReport};
use crate::refined::{
    drefined_f, extend_matrix, solve_sufficiency, verify_conjecture2, verify_conjecture3, verify_conjecture4,
    verify_f_from_table, verify_special_values, verify_structural, verify_theorem1, verify_theorem2,
    verify_theorem4, verify_triangular_system, verify_zw_chain, VerificationReport,
};
use crate::triangle::{
    asm_to_mt, asm_total_product, enumerate_asms, enumerate_complete_triangles, mt_to_asm, refined_product,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    Theorem1,
    Theorem2,
    Theorem4,
    SpecialValues,
    Ilse,
    ZwChain,
    Conj1,
    Conj2,
    Conj3,
    Conj4,
    AlphaIdentities,
    GnReflection,
    TriangularSystem,
    Structural,
    Bijection,
    ProductFormulas,
}

impl Claim {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }

    pub fn default_range(self) -> NRange {
        let (lo, hi) = match self {
            Self::Theorem1
            | Self::Theorem2
            | Self::SpecialValues
            | Self::Conj2
            | Self::TriangularSystem
            | Self::Structural => (3, 12),
            Self::Theorem4 | Self::Ilse => (3, 8),
            Self::ZwChain => (3, 6),
            Self::Conj1 => (3, 10),
            Self::Conj3 | Self::Conj4 => (4, 6),
            Self::AlphaIdentities | Self::GnReflection | Self::Bijection => (1, 5),
            Self::ProductFormulas => (1, 8),
        };
        NRange { lo, hi }
    }

    /// Smallest order at which the claim is stated.
    pub fn min_n(self) -> usize {
        match self {
            Self::AlphaIdentities | Self::GnReflection | Self::Bijection | Self::ProductFormulas => 1,
            _ => 3,
        }
    }
}

/// An inclusive range of orders, written `a..b`, `a..=b` or `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad order {t:?} in range {s:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Self { lo, hi })
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "n = {}", self.lo)
        } else {
            write!(f, "n = {}..{}", self.lo, self.hi)
        }
    }
}

pub struct Outcome {
    pub summary: VerificationReport,
    pub orders: Vec<VerificationReport>,
}

/// Runs `claim` for every order in `range` in parallel; reports come back
/// in increasing `n`.
pub fn run_claim(
    claim: Claim,
    range: NRange,
    d: Option<usize>,
    seed: u64,
    cache: Option<&Cache>,
) -> std::result::Result<Outcome, CliError> {
    if range.lo < claim.min_n() {
        return Err(CliError::Usage(format!("{} needs n >= {}", claim.name(), claim.min_n())));
    }
    let orders: Vec<VerificationReport> = (range.lo..=range.hi)
        .into_par_iter()
        .map(|n| check_order(claim, n, d, seed, cache))
        .collect::<std::result::Result<_, _>>()?;
    let summary = VerificationReport::combine(claim.name(), range.to_string(), orders.clone());
    Ok(Outcome { summary, orders })
}

/// Errors that mean the check itself could not be posed, as opposed to a
/// computation that contradicts the claim.
fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::SizeLimit { .. } | Error::InvalidArgument(_) | Error::MalformedIndices { .. }
    )
}

fn settle(claim: Claim, n: usize, r: Result<VerificationReport>) -> std::result::Result<VerificationReport, CliError> {
    match r {
        Ok(report) => Ok(report),
        Err(e) if is_usage(&e) => Err(e.into()),
        Err(e) => {
            let mut report = VerificationReport::for_order(claim.name(), n);
            report.record_error("computation", e);
            Ok(report)
        }
    }
}

fn check_order(
    claim: Claim,
    n: usize,
    d: Option<usize>,
    seed: u64,
    cache: Option<&Cache>,
) -> std::result::Result<VerificationReport, CliError> {
    let table = |n: usize, d: usize| cached_table(cache, n, d);
    let matrix = |n: usize| -> std::result::Result<_, CliError> { Ok(extend_matrix(&table(n, 2)?)?) };
    let report = match claim {
        Claim::Theorem1 => Ok(verify_theorem1(&matrix(n)?)),
        Claim::Theorem2 => {
            let a1 = table(n - 1, 1)?.total();
            let a2 = table(n - 2, 1)?.total();
            Ok(verify_theorem2(&matrix(n)?, &a1, &a2))
        }
        Claim::SpecialValues => Ok(verify_special_values(&matrix(n)?, &table(n - 1, 1)?)),
        Claim::TriangularSystem => Ok(verify_triangular_system(&matrix(n)?)),
        Claim::Structural => Ok(verify_structural(&table(n, 2)?, &table(n - 1, 1)?, &table(n, 1)?.total())),
        Claim::Conj2 => Ok(verify_conjecture2(&matrix(n)?)),
        Claim::Conj1 => {
            let expected = matrix(n)?;
            solve_sufficiency(n).map(|out| {
                let mut report = VerificationReport::for_order("conj1", n);
                report.compare(|| "rank".into(), &(n * n), &out.rank);
                match &out.solution {
                    Some(sol) => {
                        for i in 1..=n {
                            for j in 1..=n {
                                report.compare(|| format!("({i}, {j})"), expected.get(i, j), sol.get(i, j));
                            }
                        }
                    }
                    None => report.record_error("solution", "no unique integral solution"),
                }
                report
            })
        }
        Claim::Theorem4 => verify_theorem4(n),
        Claim::Ilse => verify_f_from_table(n),
        Claim::ZwChain => verify_zw_chain(n),
        Claim::Conj3 | Claim::Conj4 => {
            let d = d.unwrap_or(3);
            if d == 0 || d > n {
                return Err(CliError::Usage(format!("depth d = {d} must lie in 1..={n}")));
            }
            drefined_f(n, d).and_then(|f| {
                if claim == Claim::Conj3 {
                    Ok(verify_conjecture3(&f))
                } else {
                    verify_conjecture4(&f)
                }
            })
        }
        Claim::AlphaIdentities => identity_report(claim, n, verify_alpha_identities(n, seed)),
        Claim::GnReflection => {
            let depths: Vec<usize> = match d {
                Some(d) if d == 0 || d > n => {
                    return Err(CliError::Usage(format!("depth d = {d} must lie in 1..={n}")));
                }
                Some(d) => vec![d],
                None => (1..=2.min(n)).collect(),
            };
            let parts = depths
                .into_iter()
                .map(|d| identity_report(claim, n, verify_gn_reflection(n, d, seed)))
                .collect::<Result<Vec<_>>>();
            parts.map(|p| VerificationReport::combine(claim.name(), format!("n = {n}"), p))
        }
        Claim::Bijection => bijection(n),
        Claim::ProductFormulas => {
            let row = table(n, 1)?;
            let mut report = VerificationReport::for_order("product-formulas", n);
            for k in 1..=n {
                report.compare(|| format!("A({n}, {k})"), &refined_product(n, k), row.get(&[k]).expect("complete row"));
            }
            report.compare(|| format!("A({n})"), &asm_total_product(n), &row.total());
            Ok(report)
        }
    };
    settle(claim, n, report)
}

/// Folds an identity-suite result into a report counting sample points.
fn identity_report(claim: Claim, n: usize, r: Result<IdentityReport>) -> Result<VerificationReport> {
    let mut report = VerificationReport::for_order(claim.name(), n);
    match r {
        Ok(ids) => report.checked = ids.checks.iter().map(|c| c.points).sum(),
        Err(Error::IdentityViolation { identity, witness }) => report.record_error(identity, witness),
        Err(e) => return Err(e),
    }
    Ok(report)
}

fn bijection(n: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::for_order("bijection", n);
    let asms = enumerate_asms(n)?;
    let triangles = enumerate_complete_triangles(n)?;
    let total = asm_total_product(n);
    report.compare(|| "number of ASMs".into(), &total, &int(asms.len() as i64));
    report.compare(|| "number of triangles".into(), &total, &int(triangles.len() as i64));
    let mut image = BTreeSet::new();
    for a in &asms {
        let t = asm_to_mt(a);
        let back = mt_to_asm(&t)?;
        report.record(&back == a, || format!("{:?}", a.entries()), || "round trip".into(), || format!("{:?}", back.entries()));
        image.insert(t.rows().to_vec());
    }
    let all: BTreeSet<Vec<Vec<i64>>> = triangles.iter().map(|t| t.rows().to_vec()).collect();
    report.record(image == all, || "image".into(), || format!("{} triangles", all.len()), || format!("{} triangles", image.len()));
    Ok(report)
}
