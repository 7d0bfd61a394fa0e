//! Expansion of a polynomial in the shifted binomial basis
//! `prod_r C(x_r + j_r + r - 2, j_r - 1)`, `1 <= j_r <= n`.

use num_traits::Zero;

use super::{multi_index, PolyMulti};
use crate::arith::linalg::inverse;
use crate::arith::{binom, binom_rat, rat, rat_from_int, rat_to_int, Int, Rat};
use crate::error::{Error, Result};

/// Coefficients `F_{j_1, ..., j_d}`, row-major with `j_1` most significant.
#[derive(Clone, Debug, PartialEq)]
pub struct BinomBasisExpansion {
    n: usize,
    d: usize,
    coeffs: Vec<Rat>,
}

/// Basis polynomial of variable `r` (1-based) with index `j` (1-based).
fn basis_value(x: &Rat, r: usize, j: usize) -> Rat {
    binom_rat(&(x + rat(j as i64 + r as i64 - 2, 1)), j as i64 - 1)
}

impl BinomBasisExpansion {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn coefficients(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient at the 1-based multi-index `js`.
    pub fn get(&self, js: &[usize]) -> &Rat {
        assert_eq!(js.len(), self.d, "index length");
        let flat = js.iter().fold(0, |acc, &j| {
            assert!((1..=self.n).contains(&j), "index {j} outside 1..={}", self.n);
            acc * self.n + (j - 1)
        });
        &self.coeffs[flat]
    }

    /// Sums the coefficients against the basis at `point`.
    pub fn evaluate(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.d, "point dimension");
        let table: Vec<Vec<Rat>> = point
            .iter()
            .enumerate()
            .map(|(r, x)| (1..=self.n).map(|j| basis_value(x, r + 1, j)).collect())
            .collect();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(flat, c)| {
                multi_index(flat, self.n, self.d)
                    .into_iter()
                    .enumerate()
                    .fold(c.clone(), |acc, (r, t)| acc * &table[r][t])
            })
            .sum()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rat::is_integer)
    }

    /// All coefficients as integers, or `None` if one has a denominator.
    pub fn to_integers(&self) -> Option<Vec<Int>> {
        self.coeffs.iter().map(rat_to_int).collect()
    }

    /// The `d = 2` coefficients as an `n x n` matrix indexed from 0.
    pub fn to_matrix(&self) -> Option<Vec<Vec<Rat>>> {
        (self.d == 2).then(|| self.coeffs.chunks(self.n).map(<[Rat]>::to_vec).collect())
    }
}

/// Expands `p` (degree at most `n - 1` in each of its `d` variables).
///
/// The polynomial is sampled on `{0, ..., n-1}^d`; the sample tensor equals
/// the coefficient tensor multiplied along each axis by the matrix
/// `M_r[x][j] = C(x + j + r - 2, j - 1)`, so each axis is undone with the
/// exact inverse of `M_r`.
pub fn expand_in_binomial_basis(p: &PolyMulti, n: usize, d: usize) -> Result<BinomBasisExpansion> {
    if n == 0 || d == 0 || p.num_vars() != d {
        return Err(Error::InvalidArgument(format!(
            "expansion needs a {d}-variate polynomial and n >= 1 (got {} variables, n = {n})",
            p.num_vars()
        )));
    }
    if p.degree_bound() >= n && (0..d).any(|v| p.degree_in(v) >= n) {
        return Err(Error::InvalidArgument(format!(
            "polynomial degree exceeds n - 1 = {}",
            n - 1
        )));
    }
    let total = n.pow(d as u32);
    let mut coeffs: Vec<Rat> = (0..total)
        .map(|flat| {
            let pt: Vec<i64> = multi_index(flat, n, d).into_iter().map(|t| t as i64).collect();
            p.eval_ints(&pt)
        })
        .collect();

    for ax in 0..d {
        let r = ax as i64 + 1;
        let m: Vec<Vec<Rat>> = (0..n as i64)
            .map(|x| {
                (1..=n as i64)
                    .map(|j| rat_from_int(binom(x + j + r - 2, j - 1)))
                    .collect()
            })
            .collect();
        let inv = inverse(&m)?;
        let stride = n.pow((d - 1 - ax) as u32);
        let block = stride * n;
        for base in (0..total).filter(|b| (b % block) / stride == 0) {
            let line: Vec<Rat> = (0..n).map(|t| coeffs[base + t * stride].clone()).collect();
            for (t, row) in inv.iter().enumerate() {
                coeffs[base + t * stride] = row.iter().zip(&line).map(|(a, b)| a * b).sum();
            }
        }
    }
    Ok(BinomBasisExpansion { n, d, coeffs })
}
