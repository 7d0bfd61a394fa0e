//! Alternating sign matrices, monotone triangles, and the column-sum
//! bijection between them. These are the brute-force oracles for the
//! counting code.

use std::fmt;

use crate::error::{Error, Result};

/// Largest order accepted by [`enumerate_asms`].
pub const MAX_ENUMERATION_ORDER: usize = 6;

/// An alternating sign matrix, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

impl Asm {
    pub fn new(n: usize, entries: Vec<i8>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidAsm("order must be positive".into()));
        }
        if entries.len() != n * n {
            return Err(Error::InvalidAsm(format!(
                "expected {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        if entries.iter().any(|&v| !(-1..=1).contains(&v)) {
            return Err(Error::InvalidAsm("entries must lie in {-1, 0, 1}".into()));
        }
        // Every row/column prefix sum in {0, 1} and every full sum equal to 1
        // is the same as alternating signs starting and ending with +1.
        for line in 0..n {
            let (mut row_sum, mut col_sum) = (0i32, 0i32);
            for t in 0..n {
                row_sum += i32::from(entries[line * n + t]);
                col_sum += i32::from(entries[t * n + line]);
                if !(0..=1).contains(&row_sum) || !(0..=1).contains(&col_sum) {
                    return Err(Error::InvalidAsm(format!(
                        "partial sum leaves {{0, 1}} in line {}",
                        line + 1
                    )));
                }
            }
            if row_sum != 1 || col_sum != 1 {
                return Err(Error::InvalidAsm(format!(
                    "line {} does not sum to 1",
                    line + 1
                )));
            }
        }
        Ok(Self { n, entries })
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Self { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry at 1-based position `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    /// Position (1-based) of the unique 1 in the first row.
    pub fn first_row_one(&self) -> usize {
        self.entries[..self.n]
            .iter()
            .position(|&v| v == 1)
            .map(|p| p + 1)
            .expect("first row of an ASM contains a 1")
    }
}

impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.n) {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// A monotone triangle: row `i` (1-based) has `i` entries, rows strictly
/// increase and diagonals weakly increase.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonotoneTriangle {
    rows: Vec<Vec<i64>>,
}

impl MonotoneTriangle {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidTriangle("no rows".into()));
        }
        for (idx, row) in rows.iter().enumerate() {
            if row.len() != idx + 1 {
                return Err(Error::InvalidTriangle(format!(
                    "row {} has {} entries",
                    idx + 1,
                    row.len()
                )));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTriangle(format!(
                    "row {} is not strictly increasing",
                    idx + 1
                )));
            }
        }
        for pair in rows.windows(2) {
            let (upper, lower) = (&pair[0], &pair[1]);
            for (j, &u) in upper.iter().enumerate() {
                if !(lower[j] <= u && u <= lower[j + 1]) {
                    return Err(Error::InvalidTriangle(format!(
                        "entry {u} of row {} does not interlace",
                        upper.len()
                    )));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn bottom(&self) -> &[i64] {
        self.rows.last().expect("nonempty")
    }

    pub fn is_complete(&self) -> bool {
        self.bottom()
            .iter()
            .enumerate()
            .all(|(t, &v)| v == t as i64 + 1)
    }
}

/// Maps an ASM to its monotone triangle: row `i` lists the columns where the
/// `i`-th row of the column-sum matrix equals 1.
pub fn asm_to_mt(a: &Asm) -> MonotoneTriangle {
    let n = a.order();
    let mut col_sums = vec![0i8; n];
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        for j in 1..=n {
            col_sums[j - 1] += a.get(i, j);
        }
        rows.push(
            col_sums
                .iter()
                .enumerate()
                .filter(|(_, &s)| s == 1)
                .map(|(j, _)| j as i64 + 1)
                .collect(),
        );
    }
    MonotoneTriangle::new(rows).expect("column sums of an ASM form a monotone triangle")
}

/// Inverse of [`asm_to_mt`] on complete monotone triangles.
pub fn mt_to_asm(t: &MonotoneTriangle) -> Result<Asm> {
    if !t.is_complete() {
        return Err(Error::NotComplete {
            bottom: t.bottom().to_vec(),
        });
    }
    let n = t.order();
    let mut entries = vec![0i8; n * n];
    let mut prev = vec![0i8; n];
    for (i, row) in t.rows().iter().enumerate() {
        let mut cur = vec![0i8; n];
        for &c in row {
            cur[(c - 1) as usize] = 1;
        }
        for j in 0..n {
            entries[i * n + j] = cur[j] - prev[j];
        }
        prev = cur;
    }
    Asm::new(n, entries)
}

/// Every interlacing row above `below` (strictly increasing, with
/// `below[t] <= row[t] <= below[t + 1]`), in lexicographic order.
pub fn interlacing_rows(below: &[i64]) -> Vec<Vec<i64>> {
    fn go(below: &[i64], t: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if t + 1 == below.len() {
            out.push(cur.clone());
            return;
        }
        let lo = match cur.last() {
            Some(&p) => below[t].max(p + 1),
            None => below[t],
        };
        for v in lo..=below[t + 1] {
            cur.push(v);
            go(below, t + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if !below.is_empty() {
        go(below, 0, &mut Vec::new(), &mut out);
    }
    out
}

/// All complete monotone triangles of order `n`, built from the bottom row up.
pub fn enumerate_complete_triangles(n: usize) -> Result<Vec<MonotoneTriangle>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::SizeLimit {
            what: "triangle enumeration",
            n,
            limit: MAX_ENUMERATION_ORDER,
        });
    }
    if n == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    fn grow(stack: &mut Vec<Vec<i64>>, out: &mut Vec<MonotoneTriangle>) {
        let top = stack.last().expect("nonempty");
        if top.len() == 1 {
            let rows: Vec<Vec<i64>> = stack.iter().rev().cloned().collect();
            out.push(MonotoneTriangle { rows });
            return;
        }
        for row in interlacing_rows(top) {
            stack.push(row);
            grow(stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    let mut stack = vec![(1..=n as i64).collect::<Vec<_>>()];
    grow(&mut stack, &mut out);
    out.sort();
    Ok(out)
}

/// All alternating sign matrices of order `n <= 6`, sorted lexicographically
/// by their row-major entries.
pub fn enumerate_asms(n: usize) -> Result<Vec<Asm>> {
    let mut asms = enumerate_complete_triangles(n)?
        .iter()
        .map(mt_to_asm)
        .collect::<Result<Vec<_>>>()?;
    asms.sort_by(|a, b| a.entries.cmp(&b.entries));
    Ok(asms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1_asm() -> Asm {
        #[rustfmt::skip]
        let entries = vec![
            0, 0, 1, 0, 0,
            0, 1, -1, 0, 1,
            1, -1, 0, 1, 0,
            0, 1, 0, 0, 0,
            0, 0, 1, 0, 0,
        ];
        Asm::new(5, entries).unwrap()
    }

    fn fig1_triangle() -> MonotoneTriangle {
        MonotoneTriangle::new(vec![
            vec![3],
            vec![2, 5],
            vec![1, 4, 5],
            vec![1, 2, 4, 5],
            vec![1, 2, 3, 4, 5],
        ])
        .unwrap()
    }

    #[test]
    fn figure_one_bijection() {
        assert_eq!(asm_to_mt(&fig1_asm()), fig1_triangle());
        assert_eq!(mt_to_asm(&fig1_triangle()).unwrap(), fig1_asm());
    }

    #[test]
    fn identity_maps_to_initial_segments() {
        for n in 1..=6 {
            let t = asm_to_mt(&Asm::identity(n));
            for (i, row) in t.rows().iter().enumerate() {
                assert_eq!(row, &(1..=i as i64 + 1).collect::<Vec<_>>());
            }
            assert_eq!(mt_to_asm(&t).unwrap(), Asm::identity(n));
        }
    }

    #[test]
    fn order_one() {
        let all = enumerate_asms(1).unwrap();
        assert_eq!(all, vec![Asm::new(1, vec![1]).unwrap()]);
        let t = asm_to_mt(&all[0]);
        assert_eq!(t.rows(), &[vec![1]]);
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_asms(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 7, 42, 429]);
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let all = enumerate_asms(4).unwrap();
        assert!(all.windows(2).all(|w| w[0].entries < w[1].entries));
    }

    #[test]
    fn size_guard() {
        assert!(matches!(
            enumerate_asms(7),
            Err(Error::SizeLimit { n: 7, limit: 6, .. })
        ));
    }

    #[test]
    fn rejects_invalid_matrices() {
        // Row sums to 1 but column 1 has partial sum 2.
        assert!(Asm::new(2, vec![1, 0, 1, 0]).is_err());
        // Row sums to 1 but starts with -1.
        assert!(Asm::new(3, vec![-1, 1, 1, 1, 0, 0, 1, 0, 0]).is_err());
        assert!(Asm::new(2, vec![1, 0, 0]).is_err());
        assert!(Asm::new(1, vec![2]).is_err());
        // The 3x3 matrix with a central -1 is a genuine ASM.
        assert!(Asm::new(3, vec![0, 1, 0, 1, -1, 1, 0, 1, 0]).is_ok());
    }

    #[test]
    fn rejects_incomplete_triangle() {
        let t = MonotoneTriangle::new(vec![vec![2], vec![1, 3]]).unwrap();
        assert!(matches!(mt_to_asm(&t), Err(Error::NotComplete { .. })));
    }

    #[test]
    fn rejects_non_interlacing_triangle() {
        assert!(MonotoneTriangle::new(vec![vec![4], vec![1, 3]]).is_err());
        assert!(MonotoneTriangle::new(vec![vec![1], vec![2, 2]]).is_err());
    }
}
