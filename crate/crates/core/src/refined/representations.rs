//! Closed representations of the expansion coefficients `F_{n,i,j}`: one in
//! terms of the doubly-refined numbers, one through the shifted sums `Z` and
//! their binomial transforms `W`.

use num_traits::Zero;

use super::{extend_matrix, VerificationReport};
use crate::arith::{binom, sign, Int};
use crate::error::Result;
use crate::triangle::{build_table, AlphaCounter, RefinedTable};

/// `F_{n,i,j}` from the table of `A_{n,a,b}`:
///
/// ```text
/// [i<j] A_{i,j} - [j<i] A_{j,i} + [i=n-1][j=1] A_{n-1}
///   + [i!=n] sum_{a<b<=i} (-1)^{a+j+1} C(i-b, j-1-a) A_{a,b}
///   + sum_{a<b<=i-1} (-1)^{a+j+1} C(i-1-b, j-a) A_{a,b}
/// ```
///
/// `A_{n-1}` is recovered from the table as `sum_a A_{n,a,n}`.
pub fn f_from_table(table: &RefinedTable, i: usize, j: usize) -> Int {
    let n = table.n();
    assert!(table.d() == 2 && (1..=n).contains(&i) && (1..=n).contains(&j));
    let mut f = Int::zero();
    if i < j {
        f += table.pair(i, j);
    }
    if j < i {
        f -= table.pair(j, i);
    }
    if i + 1 == n && j == 1 {
        f += (1..n).map(|a| table.pair(a, n)).sum::<Int>();
    }
    let (ii, jj) = (i as i64, j as i64);
    if i != n {
        for a in 1..i {
            for b in a + 1..=i {
                let c = binom(ii - b as i64, jj - 1 - a as i64);
                if !c.is_zero() {
                    f += c * table.pair(a, b) * sign(a as i64 + jj + 1);
                }
            }
        }
    }
    for a in 1..i.saturating_sub(1) {
        for b in a + 1..i {
            let c = binom(ii - 1 - b as i64, jj - a as i64);
            if !c.is_zero() {
                f += c * table.pair(a, b) * sign(a as i64 + jj + 1);
            }
        }
    }
    f
}

/// `Z(n, p, i)`: the sum of `alpha_{n-1}` over all ways to add 1 to `p` of
/// the first `n - 2` entries of `(1, ..., i-1, i+1, ..., n)`. Consecutive
/// entries differ by 1 or 2 and the last one never moves, so every shifted
/// row stays weakly increasing. `Z(n, p, 0) = 0`.
pub fn z_value(counter: &AlphaCounter, n: usize, p: usize, i: usize) -> Int {
    assert!(n >= 2 && i <= n);
    if i == 0 || p > n - 2 {
        return Int::zero();
    }
    let base: Vec<i64> = (1..=n as i64).filter(|&v| v != i as i64).collect();
    let mut total = Int::zero();
    for mask in 0usize..1 << (n - 2) {
        if mask.count_ones() as usize != p {
            continue;
        }
        let row: Vec<i64> = base
            .iter()
            .enumerate()
            .map(|(t, &v)| v + (mask >> t & 1) as i64)
            .collect();
        total += counter.count_weak(&row);
    }
    total
}

/// `Z(n, p, i)` for `0 <= p <= n - 2`, `0 <= i <= n`, indexed `[i][p]`.
pub fn z_table(counter: &AlphaCounter, n: usize) -> Vec<Vec<Int>> {
    (0..=n)
        .map(|i| (0..=n - 2).map(|p| z_value(counter, n, p, i)).collect())
        .collect()
}

/// `W(n, i, j) = sum_{p=0}^{n-2} (-1)^{p+j+n} Z(n, p, i) C(p, n - j)`, with
/// `z` from [`z_table`].
pub fn w_value(z: &[Vec<Int>], n: usize, i: usize, j: usize) -> Int {
    (0..=n - 2)
        .map(|p| {
            let c = binom(p as i64, n as i64 - j as i64);
            if c.is_zero() {
                Int::zero()
            } else {
                &z[i][p] * c * sign((p + j + n) as i64)
            }
        })
        .sum()
}

/// `F_{n,i,j} = [i!=n] W(n,i,j) - W(n,i-1,j+1) + [i=n-1][j=1] A_{n-1}`.
pub fn f_from_w(z: &[Vec<Int>], n: usize, i: usize, j: usize, a_prev: &Int) -> Int {
    let mut f = -w_value(z, n, i - 1, j + 1);
    if i != n {
        f += w_value(z, n, i, j);
    }
    if i + 1 == n && j == 1 {
        f += a_prev;
    }
    f
}

/// [`f_from_table`] against the extended matrix at every `(i, j)`.
pub fn verify_f_from_table(n: usize) -> Result<VerificationReport> {
    let table = build_table(n, 2)?;
    let m = extend_matrix(&table)?;
    let mut report = VerificationReport::for_order("ilse", n);
    for i in 1..=n {
        for j in 1..=n {
            report.compare(|| format!("({i}, {j})"), m.get(i, j), &f_from_table(&table, i, j));
        }
    }
    Ok(report)
}

/// [`f_from_w`] against the extended matrix at every `(i, j)`.
pub fn verify_zw_chain(n: usize) -> Result<VerificationReport> {
    let table = build_table(n, 2)?;
    let m = extend_matrix(&table)?;
    let a_prev = build_table(n - 1, 1)?.total();
    let z = z_table(AlphaCounter::global(), n);
    let mut report = VerificationReport::for_order("zw-chain", n);
    for i in 1..=n {
        for j in 1..=n {
            report.compare(|| format!("({i}, {j})"), m.get(i, j), &f_from_w(&z, n, i, j, &a_prev));
        }
    }
    Ok(report)
}
