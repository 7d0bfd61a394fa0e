//! The linear system in all `n^2` extended entries built from the
//! coefficient relations, near-symmetry, its exceptional values, and the
//! last-column boundary values.

use num_traits::{One, Zero};

use super::extended::integral_matrix;
use super::ExtendedMatrix;
use crate::arith::linalg::solve;
use crate::arith::{binom, rat_from_int, sign, Rat};
use crate::error::{Error, Result};
use crate::triangle::{asm_total_product, refined_product};

/// Largest order accepted by [`solve_sufficiency`].
pub const MAX_SUFFICIENCY_ORDER: usize = 10;

#[derive(Clone, Debug, PartialEq)]
pub struct LinearSystem {
    pub order: usize,
    pub matrix: Vec<Vec<Rat>>,
    pub rhs: Vec<Rat>,
    /// Unknown `t` is the entry `labels[t] = (i, j)`.
    pub labels: Vec<(usize, usize)>,
}

impl LinearSystem {
    fn new(n: usize) -> Self {
        let labels = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
        Self {
            order: n,
            matrix: Vec::new(),
            rhs: Vec::new(),
            labels,
        }
    }

    fn column(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.order + (j - 1)
    }

    fn push(&mut self, terms: &[((usize, usize), Rat)], value: Rat) {
        let mut row = vec![Rat::zero(); self.labels.len()];
        for ((i, j), c) in terms {
            row[self.column(*i, *j)] += c;
        }
        self.matrix.push(row);
        self.rhs.push(value);
    }

    pub fn unknowns(&self) -> usize {
        self.labels.len()
    }

    pub fn equations(&self) -> usize {
        self.matrix.len()
    }
}

/// Assembles the system for order `n`; the constants `A_{n-1}`, `A_{n-2}`
/// and `A_{n-1,i}` come from the product formulas.
pub fn sufficiency_system(n: usize) -> LinearSystem {
    assert!(n >= 3);
    let mut sys = LinearSystem::new(n);
    let ni = n as i64;
    let one = Rat::one();
    for i in 1..=n {
        for j in 1..=n {
            let mut terms = vec![((i, j), one.clone())];
            for p in i..=n {
                for q in j..=n {
                    let c = binom(2 * ni - i as i64 - 2, (p - i) as i64)
                        * binom(2 * ni - j as i64 - 2, (q - j) as i64)
                        * sign((p + q) as i64);
                    terms.push(((q, p), -rat_from_int(c)));
                }
            }
            sys.push(&terms, Rat::zero());
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            if (i, j) == (n - 1, 1) || (i, j) == (n, 2) {
                continue;
            }
            sys.push(&[((i, j), one.clone()), ((n + 1 - j, n + 1 - i), -one.clone())], Rat::zero());
        }
    }
    let a1 = asm_total_product(n - 1);
    let a2 = asm_total_product(n - 2);
    sys.push(&[((n - 1, 1), one.clone())], rat_from_int(a2.clone()));
    sys.push(&[((n, 2), one.clone())], rat_from_int(a2 - a1));
    for i in 1..n {
        sys.push(&[((i, n), one.clone())], rat_from_int(refined_product(n - 1, i)));
    }
    sys
}

#[derive(Clone, Debug, PartialEq)]
pub struct SufficiencyOutcome {
    pub n: usize,
    pub rank: usize,
    pub unknowns: usize,
    pub equations: usize,
    /// The unique solution, present iff `rank == unknowns` and it is integral.
    pub solution: Option<ExtendedMatrix>,
}

impl SufficiencyOutcome {
    pub fn is_unique(&self) -> bool {
        self.rank == self.unknowns
    }
}

/// Solves the assembled system exactly and reports its rank.
pub fn solve_sufficiency(n: usize) -> Result<SufficiencyOutcome> {
    if !(3..=MAX_SUFFICIENCY_ORDER).contains(&n) {
        return Err(Error::SizeLimit {
            what: "sufficiency system",
            n,
            limit: MAX_SUFFICIENCY_ORDER,
        });
    }
    let sys = sufficiency_system(n);
    let rhs: Vec<Vec<Rat>> = sys.rhs.iter().map(|v| vec![v.clone()]).collect();
    let elim = solve(&sys.matrix, &rhs)?;
    let solution = elim.solutions.as_ref().and_then(|sols| {
        let rows: Vec<Vec<Rat>> = sols[0].chunks(n).map(<[Rat]>::to_vec).collect();
        integral_matrix(&rows)
    });
    Ok(SufficiencyOutcome {
        n,
        rank: elim.rank,
        unknowns: sys.unknowns(),
        equations: sys.equations(),
        solution,
    })
}
