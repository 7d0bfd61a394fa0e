//! Checks of the linear relations satisfied by the extended matrix.

use num_traits::Zero;

use super::{extend_matrix, ExtendedMatrix, VerificationReport};
use crate::arith::{binom, int, sign, Int};
use crate::error::Result;
use crate::poly::{expand_in_binomial_basis, gn_poly};
use crate::triangle::{build_table, RefinedTable};

/// `Â_{i,j} = sum_{p >= i, q >= j} (-1)^{p+q} C(2n-i-2, p-i) C(2n-j-2, q-j) Â_{q,p}`
/// for all `1 <= i, j <= n`. Note the transposed entry on the right.
pub fn verify_theorem1(m: &ExtendedMatrix) -> VerificationReport {
    let n = m.n();
    let mut report = VerificationReport::for_order("theorem1", n);
    let ni = n as i64;
    for i in 1..=n {
        for j in 1..=n {
            let mut rhs = Int::zero();
            for p in i..=n {
                let bp = binom(2 * ni - i as i64 - 2, (p - i) as i64);
                for q in j..=n {
                    let bq = binom(2 * ni - j as i64 - 2, (q - j) as i64);
                    rhs += &bp * bq * m.get(q, p) * sign((p + q) as i64);
                }
            }
            report.compare(|| format!("({i}, {j})"), m.get(i, j), &rhs);
        }
    }
    report
}

/// Near-symmetry `Â_{i,j} = Â_{n+1-j,n+1-i}` away from `(n-1, 1)` and
/// `(n, 2)`, where `Â_{n,n-1,1} = A_{n-2}` and `Â_{n,n,2} = A_{n-2} - A_{n-1}`.
/// The exceptional pair is also checked to be genuinely asymmetric.
pub fn verify_theorem2(m: &ExtendedMatrix, a_prev: &Int, a_prev2: &Int) -> VerificationReport {
    let n = m.n();
    let mut report = VerificationReport::for_order("theorem2", n);
    for i in 1..=n {
        for j in 1..=n {
            if (i, j) == (n - 1, 1) || (i, j) == (n, 2) {
                continue;
            }
            let (mi, mj) = (n + 1 - j, n + 1 - i);
            report.compare(|| format!("({i}, {j}) vs ({mi}, {mj})"), m.get(mi, mj), m.get(i, j));
        }
    }
    report.compare(|| format!("({}, 1)", n - 1), a_prev2, m.get(n - 1, 1));
    let low = a_prev2 - a_prev;
    report.compare(|| format!("({n}, 2)"), &low, m.get(n, 2));
    report.record(
        m.get(n - 1, 1) != m.get(n, 2),
        || format!("({}, 1) vs ({n}, 2)", n - 1),
        || "distinct values".into(),
        || m.get(n, 2).to_string(),
    );
    report
}

/// `Â_{n,n,j} = -sum_{r=j}^{n-1} A_{n-1,r}`, `Â_{n,n,1} = -A_{n-1}`,
/// `Â_{n,1,1} = sum_i (-1)^{i+1} A_{n,i,i+1}` and `Â_{n,n,n} = 0`.
/// `prev_row` is the singly-refined table of order `n - 1`.
pub fn verify_special_values(m: &ExtendedMatrix, prev_row: &RefinedTable) -> VerificationReport {
    let n = m.n();
    let mut report = VerificationReport::for_order("special-values", n);
    assert_eq!(prev_row.n() + 1, n, "previous row has order n - 1");
    for j in 1..=n {
        let tail: Int = (j..n).map(|r| prev_row.get(&[r]).expect("complete row").clone()).sum();
        report.compare(|| format!("({n}, {j})"), &-tail, m.get(n, j));
    }
    report.compare(|| format!("({n}, 1) total"), &-prev_row.total(), m.get(n, 1));
    let alternating: Int = (1..n).map(|i| m.get(i, i + 1) * sign(i as i64 + 1)).sum();
    report.compare(|| "(1, 1)".into(), &alternating, m.get(1, 1));
    report.compare(|| format!("({n}, {n})"), &Int::zero(), m.get(n, n));
    report
}

/// The six-term coefficient system
/// `F_{i,j} + sum_{p>i, q>=j} F_{p,q} = -F_{j,i} - sum_{p>=i, q>j} F_{q,p}`
/// for all `(i, j)`, and its triangular reduction.
pub fn verify_triangular_system(f: &ExtendedMatrix) -> VerificationReport {
    let n = f.n();
    let mut report = VerificationReport::for_order("triangular-system", n);
    let block = |i0: usize, j0: usize, transpose: bool| -> Int {
        let mut acc = Int::zero();
        for p in i0..=n {
            for q in j0..=n {
                acc += if transpose { f.get(q, p) } else { f.get(p, q) };
            }
        }
        acc
    };
    for i in 1..=n {
        for j in 1..=n {
            let lhs = f.get(i, j) + block(i + 1, j, false);
            let rhs = -f.get(j, i) - block(i, j + 1, true);
            report.compare(|| format!("main ({i}, {j})"), &rhs, &lhs);
        }
    }
    report.compare(|| "reduced F_{n,n}".into(), &Int::zero(), f.get(n, n));
    for i in 1..n {
        let lhs: Int = (i..=n).map(|k| f.get(k, i)).sum::<Int>() + (i + 2..=n).map(|k| f.get(i + 1, k)).sum::<Int>();
        report.compare(|| format!("reduced column {i}"), &Int::zero(), &lhs);
    }
    for i in 1..=n {
        for j in 1..i {
            let lhs: Int = (i..=n).map(|k| f.get(k, j)).sum::<Int>() - f.get(i, j + 1)
                + f.get(j, i)
                + (i + 1..=n).map(|k| f.get(j + 1, k)).sum::<Int>();
            report.compare(|| format!("reduced ({i}, {j})"), &Int::zero(), &lhs);
        }
    }
    report
}

/// Binomial-basis coefficients of `G_n(x, y)` against the extended matrix.
pub fn verify_theorem4(n: usize) -> Result<VerificationReport> {
    let m = extend_matrix(&build_table(n, 2)?)?;
    let e = expand_in_binomial_basis(&gn_poly(n, 2)?, n, 2)?;
    let mut report = VerificationReport::for_order("theorem4", n);
    for i in 1..=n {
        for j in 1..=n {
            let expected = crate::arith::rat_from_int(m.get(i, j).clone());
            report.compare(|| format!("({i}, {j})"), &expected, e.get(&[i, j]));
        }
    }
    Ok(report)
}

/// Relations among the doubly-refined numbers themselves: the second-row
/// decomposition `sum_{i<j} (j-i+1) A_{n,i,j} = A_n`, the last-column values
/// `A_{n,i,n} = A_{n-1,i}`, reflection symmetry, and the vanishing
/// alternating sum `sum_i (-1)^{i+1} A_{n,i,i+1}`.
pub fn verify_structural(
    pairs: &RefinedTable,
    prev_row: &RefinedTable,
    total: &Int,
) -> VerificationReport {
    let n = pairs.n();
    let mut report = VerificationReport::for_order("structural", n);
    let weighted: Int = pairs
        .iter()
        .map(|(ix, v)| v * int((ix[1] - ix[0] + 1) as i64))
        .sum();
    report.compare(|| "second-row decomposition".into(), total, &weighted);
    for i in 1..n {
        let expected = prev_row.get(&[i]).expect("complete row");
        report.compare(|| format!("A({i}, {n})"), expected, &pairs.pair(i, n));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let (mi, mj) = (n + 1 - j, n + 1 - i);
            report.compare(|| format!("A({i}, {j}) vs A({mi}, {mj})"), &pairs.pair(mi, mj), &pairs.pair(i, j));
        }
    }
    let alternating: Int = (1..n).map(|i| pairs.pair(i, i + 1) * sign(i as i64 + 1)).sum();
    report.compare(|| "alternating sum".into(), &Int::zero(), &alternating);
    report
}
