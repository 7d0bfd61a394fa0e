//! The square completion of the doubly-refined table.

use std::fmt;

use num_traits::Zero;

use crate::arith::{binom_plus, rat_to_int, sign, Int};
use crate::error::{Error, Result};
use crate::poly::BinomBasisExpansion;
use crate::triangle::RefinedTable;

/// `c_{i,j,p,q} = (-1)^{i+q+1} (C+(p-j+1, q-i) - C+(p-j-1, q-i-1))` for
/// `p >= j`, and 0 otherwise.
pub fn c_coeff(i: i64, j: i64, p: i64, q: i64) -> Int {
    if p < j {
        return Int::zero();
    }
    (binom_plus(p - j + 1, q - i) - binom_plus(p - j - 1, q - i - 1)) * sign(i + q + 1)
}

/// The `n x n` array `Â_{n,i,j}`, indexed from 1 in the accessors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedMatrix {
    n: usize,
    entries: Vec<Vec<Int>>,
}

impl ExtendedMatrix {
    pub fn from_rows(entries: Vec<Vec<Int>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("extended matrix must be square and nonempty".into()));
        }
        Ok(Self { n, entries })
    }

    /// The coefficients of a two-variable binomial-basis expansion, which
    /// must all be integers.
    pub fn from_expansion(e: &BinomBasisExpansion) -> Result<Self> {
        if e.d() != 2 {
            return Err(Error::InvalidArgument(format!(
                "expected a two-variable expansion, got d = {}",
                e.d()
            )));
        }
        let n = e.n();
        let values = e.to_integers().ok_or_else(|| {
            Error::InvalidArgument("expansion has non-integral coefficients".into())
        })?;
        Self::from_rows(values.chunks(n).map(<[Int]>::to_vec).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `Â_{n,i,j}` for `1 <= i, j <= n`.
    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.entries[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<Int>] {
        &self.entries
    }
}

impl fmt::Display for ExtendedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (t, row) in cells.iter().enumerate() {
            if t > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Copies `A_{n,i,j}` above the diagonal and fills `i >= j` with
/// `sum_{1 <= p < q <= n} c_{i,j,p,q} A_{n,p,q}`.
pub fn extend_matrix(table: &RefinedTable) -> Result<ExtendedMatrix> {
    let n = table.n();
    if table.d() != 2 {
        return Err(Error::InvalidArgument(format!(
            "extension needs the doubly-refined table, got d = {}",
            table.d()
        )));
    }
    let mut entries = vec![vec![Int::zero(); n]; n];
    for i in 1..=n {
        for j in 1..=n {
            entries[i - 1][j - 1] = if i < j {
                table.pair(i, j)
            } else {
                let mut acc = Int::zero();
                for p in j..=n {
                    for q in p + 1..=n {
                        let c = c_coeff(i as i64, j as i64, p as i64, q as i64);
                        if !c.is_zero() {
                            acc += c * table.pair(p, q);
                        }
                    }
                }
                acc
            };
        }
    }
    ExtendedMatrix::from_rows(entries)
}

/// Converts rational entries to an [`ExtendedMatrix`] when all are integral.
pub(crate) fn integral_matrix(rows: &[Vec<crate::arith::Rat>]) -> Option<ExtendedMatrix> {
    let entries: Option<Vec<Vec<Int>>> = rows
        .iter()
        .map(|r| r.iter().map(rat_to_int).collect())
        .collect();
    entries.and_then(|e| ExtendedMatrix::from_rows(e).ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::testdata;
    use crate::triangle::build_table;

    fn reference(n: usize) -> ExtendedMatrix {
        let rows = testdata::extended(n)
            .into_iter()
            .map(|r| r.into_iter().map(int).collect())
            .collect();
        ExtendedMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn c_coeff_examples() {
        assert_eq!(c_coeff(2, 1, 1, 2), int(-1));
        assert_eq!(c_coeff(2, 1, 2, 3), int(1));
        assert_eq!(c_coeff(2, 1, 1, 3), int(1));
        for (i, j, p, q) in [(1, 2, 1, 3), (3, 5, 4, 5), (2, 3, 1, 2)] {
            assert_eq!(c_coeff(i, j, p, q), int(0));
        }
    }

    #[test]
    fn reproduces_reference_matrices() {
        for n in 3..=7 {
            let m = extend_matrix(&build_table(n, 2).unwrap()).unwrap();
            assert_eq!(m, reference(n), "n={n}");
        }
    }

    #[test]
    fn spot_entries() {
        let m = extend_matrix(&build_table(5, 2).unwrap()).unwrap();
        assert_eq!(m.get(5, 1), &int(-42));
        assert_eq!(m.get(2, 3), &int(23));
        let m3 = extend_matrix(&build_table(3, 2).unwrap()).unwrap();
        assert_eq!(m3.get(2, 1), &int(1));
    }

    #[test]
    fn rejects_wrong_depth_and_shape() {
        assert!(extend_matrix(&build_table(4, 1).unwrap()).is_err());
        assert!(ExtendedMatrix::from_rows(vec![vec![int(1), int(2)]]).is_err());
        assert!(ExtendedMatrix::from_rows(Vec::new()).is_err());
    }

    #[test]
    fn display_aligns_columns() {
        let text = reference(3).to_string();
        assert_eq!(text, " 0  1  1\n 1  1  1\n-2 -1  0");
    }
}
