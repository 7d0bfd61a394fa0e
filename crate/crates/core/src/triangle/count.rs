//! Counting monotone triangles with a prescribed bottom row, and the refined
//! enumeration tables built on top of that count.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use num_traits::One;
use rayon::prelude::*;

use crate::arith::Int;
use crate::error::{Error, Result};

/// A weakly increasing, nonempty bottom row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BottomRow(Vec<i64>);

impl BottomRow {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.is_empty() || values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotWeaklyIncreasing(values));
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }
}

/// Memoized evaluation of the interlacing recurrence
/// `alpha(k) = sum over strictly increasing j with k_1 <= j_1 <= k_2 <= ... <= j_{m-1} <= k_m of alpha(j)`.
///
/// Keys are bottom rows reduced modulo translation and reversal-negation,
/// both of which leave the count unchanged. The cache is shared across
/// threads; values are a pure function of the key, so scheduling never
/// changes a result.
#[derive(Debug, Default)]
pub struct AlphaCounter {
    memo: RwLock<HashMap<Box<[i64]>, Int>>,
}

impl AlphaCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide counter used by the free functions of this module.
    pub fn global() -> &'static AlphaCounter {
        static GLOBAL: OnceLock<AlphaCounter> = OnceLock::new();
        GLOBAL.get_or_init(AlphaCounter::new)
    }

    pub fn cached_rows(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }

    pub fn count(&self, bottom: &BottomRow) -> Int {
        self.count_weak(bottom.values())
    }

    /// Caller guarantees `k` is nonempty and weakly increasing.
    pub(crate) fn count_weak(&self, k: &[i64]) -> Int {
        debug_assert!(!k.is_empty() && k.windows(2).all(|w| w[0] <= w[1]));
        match k.len() {
            1 => return Int::one(),
            2 => return Int::from(k[1] - k[0] + 1),
            _ => {}
        }
        let key = canonical_key(k);
        if let Some(v) = self.memo.read().expect("memo lock").get(&key[..]) {
            return v.clone();
        }
        let value = self.children_sum(&key);
        self.memo
            .write()
            .expect("memo lock")
            .entry(key.into_boxed_slice())
            .or_insert(value)
            .clone()
    }

    fn children_sum(&self, k: &[i64]) -> Int {
        let mut acc = Int::default();
        let mut row = Vec::with_capacity(k.len() - 1);
        self.accumulate(k, &mut row, &mut acc);
        acc
    }

    fn accumulate(&self, k: &[i64], row: &mut Vec<i64>, acc: &mut Int) {
        let t = row.len();
        if t + 1 == k.len() {
            *acc += self.count_weak(row);
            return;
        }
        let lo = match row.last() {
            Some(&p) => k[t].max(p + 1),
            None => k[t],
        };
        for v in lo..=k[t + 1] {
            row.push(v);
            self.accumulate(k, row, acc);
            row.pop();
        }
    }
}

/// Translate so the row starts at 0, then pick the lexicographically smaller
/// of the row and its reversal-negation.
fn canonical_key(k: &[i64]) -> Vec<i64> {
    let first = k[0];
    let last = k[k.len() - 1];
    let shifted = k.iter().map(|v| v - first);
    let reflected = k.iter().rev().map(|v| last - v);
    if shifted.clone().le(reflected.clone()) {
        shifted.collect()
    } else {
        reflected.collect()
    }
}

/// Number of (almost-)monotone triangles with the given bottom row.
pub fn alpha_count(bottom: &BottomRow) -> Int {
    AlphaCounter::global().count(bottom)
}

/// Validates `indices` as a strictly increasing tuple in `[1, n]` with
/// `1 <= d <= n` and returns the complementary bottom row.
pub fn complement(n: usize, indices: &[usize]) -> Result<Vec<i64>> {
    let malformed = || Error::MalformedIndices {
        n,
        indices: indices.to_vec(),
    };
    if indices.is_empty()
        || indices.len() > n
        || indices.windows(2).any(|w| w[0] >= w[1])
        || indices[0] < 1
        || indices[indices.len() - 1] > n
    {
        return Err(malformed());
    }
    Ok((1..=n)
        .filter(|v| indices.binary_search(v).is_err())
        .map(|v| v as i64)
        .collect())
}

/// `A_{n, i_1, ..., i_d}`: monotone triangles of order `n - d` whose bottom
/// row is the complement of the indices in `1..=n`; 1 when `d = n`.
pub fn refined_count(n: usize, indices: &[usize]) -> Result<Int> {
    refined_count_with(AlphaCounter::global(), n, indices)
}

pub fn refined_count_with(counter: &AlphaCounter, n: usize, indices: &[usize]) -> Result<Int> {
    let rest = complement(n, indices)?;
    if rest.is_empty() {
        return Ok(Int::one());
    }
    Ok(counter.count_weak(&rest))
}

/// Size limits for table construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest `n` for refinement depth `d <= 2`.
    pub max_n_shallow: usize,
    /// Largest `n` for refinement depth `d >= 3`.
    pub max_n_deep: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_n_shallow: 16,
            max_n_deep: 8,
        }
    }
}

impl Budget {
    pub fn check(&self, n: usize, d: usize) -> Result<()> {
        let limit = if d <= 2 {
            self.max_n_shallow
        } else {
            self.max_n_deep
        };
        if n > limit {
            return Err(Error::SizeLimit {
                what: "refined table",
                n,
                limit,
            });
        }
        Ok(())
    }
}

/// All strictly increasing `d`-tuples from `1..=n`, in lexicographic order.
pub fn increasing_tuples(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, d: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        let remaining = d - cur.len();
        for v in start..=n + 1 - remaining {
            cur.push(v);
            go(n, d, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if d <= n {
        go(n, d, 1, &mut Vec::new(), &mut out);
    }
    out
}

/// The numbers `A_{n, i_1, ..., i_d}` over every increasing index tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedTable {
    n: usize,
    d: usize,
    entries: BTreeMap<Vec<usize>, Int>,
}

impl RefinedTable {
    /// Builds a table from explicit entries, checking completeness.
    pub fn from_entries(n: usize, d: usize, entries: BTreeMap<Vec<usize>, Int>) -> Result<Self> {
        let expected = increasing_tuples(n, d);
        if d == 0 || d > n || entries.len() != expected.len() {
            return Err(Error::IncompleteTable { n, d });
        }
        if expected.iter().any(|t| !entries.contains_key(t)) {
            return Err(Error::IncompleteTable { n, d });
        }
        Ok(Self { n, d, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn get(&self, indices: &[usize]) -> Option<&Int> {
        self.entries.get(indices)
    }

    /// `A_{n,i,j}` for `i < j`, zero otherwise. Only meaningful for `d = 2`.
    pub fn pair(&self, i: usize, j: usize) -> Int {
        debug_assert_eq!(self.d, 2);
        if i < j {
            self.entries.get(&vec![i, j][..]).cloned().unwrap_or_default()
        } else {
            Int::default()
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &Int)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all entries. For `d = 1` this is `A_n`; for `d = 2`, the
    /// entries with `j = n` sum to `A_{n-1}`.
    pub fn total(&self) -> Int {
        self.entries.values().sum()
    }
}

pub fn build_table(n: usize, d: usize) -> Result<RefinedTable> {
    build_table_with(AlphaCounter::global(), Budget::default(), n, d)
}

/// Evaluates every tuple of the `(n, d)` table against one shared cache.
pub fn build_table_with(
    counter: &AlphaCounter,
    budget: Budget,
    n: usize,
    d: usize,
) -> Result<RefinedTable> {
    if n == 0 || d == 0 || d > n {
        return Err(Error::InvalidArgument(format!(
            "refinement depth d = {d} must satisfy 1 <= d <= n = {n}"
        )));
    }
    budget.check(n, d)?;
    let tuples = increasing_tuples(n, d);
    let values = tuples
        .par_iter()
        .map(|t| refined_count_with(counter, n, t))
        .collect::<Result<Vec<_>>>()?;
    let entries = tuples.into_iter().zip(values).collect();
    Ok(RefinedTable { n, d, entries })
}
