//! Fraction-free (Bareiss) elimination over the integers.
//!
//! Rational systems are first scaled row by row to integer rows; elimination
//! then runs entirely in `Int` with exact divisions by the previous pivot.

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Int, Rat};
use crate::error::{Error, Result};

/// Result of eliminating `A x = B` for one or more right-hand sides.
#[derive(Clone, Debug)]
pub struct Elimination {
    pub rank: usize,
    pub unknowns: usize,
    /// One solution vector per right-hand side, present iff `rank == unknowns`.
    pub solutions: Option<Vec<Vec<Rat>>>,
}

fn integer_row(row: &[Rat]) -> Vec<Int> {
    let lcm = row
        .iter()
        .fold(Int::one(), |acc, r| acc.lcm(r.denom()));
    row.iter()
        .map(|r| r.numer() * (&lcm / r.denom()))
        .collect()
}

/// Solves `matrix * X = rhs` exactly, where `rhs` holds one column per
/// right-hand side (`rhs[row][col]`).
///
/// Returns the rank of `matrix`. An inconsistent system is an error; an
/// underdetermined one yields `solutions: None`.
pub fn solve(matrix: &[Vec<Rat>], rhs: &[Vec<Rat>]) -> Result<Elimination> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let extra = rhs.first().map_or(0, Vec::len);
    assert_eq!(rhs.len(), rows, "rhs row count");

    let mut m: Vec<Vec<Int>> = matrix
        .iter()
        .zip(rhs)
        .map(|(a, b)| {
            assert_eq!(a.len(), cols, "ragged matrix");
            let joined: Vec<Rat> = a.iter().chain(b.iter()).cloned().collect();
            integer_row(&joined)
        })
        .collect();

    let width = cols + extra;
    let mut prev = Int::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        // Smallest nonzero pivot keeps intermediate minors short.
        let Some(p) = (r..rows)
            .filter(|&i| !m[i][col].is_zero())
            .min_by_key(|&i| m[i][col].bits())
        else {
            continue;
        };
        m.swap(r, p);
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            if row[col].is_zero() {
                // Still needs scaling so later divisions stay exact.
                for k in col + 1..width {
                    if !row[k].is_zero() {
                        let v = &pivot_row[col] * &row[k];
                        row[k] = exact_div(v, &prev);
                    }
                }
                continue;
            }
            let factor = row[col].clone();
            for k in col + 1..width {
                let v = &pivot_row[col] * &row[k] - &factor * &pivot_row[k];
                row[k] = exact_div(v, &prev);
            }
            row[col] = Int::zero();
        }
        prev = m[r][col].clone();
        pivots.push(col);
        r += 1;
    }
    let rank = r;

    for row in &m[rank..] {
        if row[cols..].iter().any(|v| !v.is_zero()) {
            return Err(Error::Inconsistent { rank });
        }
    }

    if rank < cols {
        return Ok(Elimination {
            rank,
            unknowns: cols,
            solutions: None,
        });
    }

    let mut solutions = Vec::with_capacity(extra);
    for e in 0..extra {
        let mut x = vec![Rat::zero(); cols];
        for (ri, &pc) in pivots.iter().enumerate().rev() {
            let row = &m[ri];
            let mut acc = Rat::from_integer(row[cols + e].clone());
            for k in pc + 1..cols {
                if !row[k].is_zero() {
                    acc -= Rat::from_integer(row[k].clone()) * &x[k];
                }
            }
            x[pc] = acc / Rat::from_integer(row[pc].clone());
        }
        solutions.push(x);
    }
    Ok(Elimination {
        rank,
        unknowns: cols,
        solutions: Some(solutions),
    })
}

/// Rank of a rational matrix.
pub fn rank(matrix: &[Vec<Rat>]) -> usize {
    let rhs = vec![Vec::new(); matrix.len()];
    solve(matrix, &rhs).map(|e| e.rank).unwrap_or(0)
}

fn exact_div(v: Int, d: &Int) -> Int {
    let (q, rem) = v.div_rem(d);
    debug_assert!(rem.is_zero(), "Bareiss division not exact");
    q
}

/// Inverse of a square rational matrix.
pub fn inverse(matrix: &[Vec<Rat>]) -> Result<Vec<Vec<Rat>>> {
    let n = matrix.len();
    let identity: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    let e = solve(matrix, &identity)?;
    let cols = e.solutions.ok_or(Error::Singular { rank: e.rank, size: n })?;
    // `cols[k]` is column k of the inverse.
    Ok((0..n)
        .map(|i| (0..n).map(|k| cols[k][i].clone()).collect())
        .collect())
}
