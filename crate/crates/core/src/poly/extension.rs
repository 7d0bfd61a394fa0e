//! Polynomial extensions of the monotone-triangle count: the full
//! `n`-variate `alpha_n` and the specializations `G_n(x_1, ..., x_d)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::ToPrimitive;

use super::{int_nodes, PolyMulti};
use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::triangle::AlphaCounter;

/// Size limits for polynomial construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolyBudget {
    pub max_n_alpha: usize,
    /// Largest `n` for `G_n` with one or two variables.
    pub max_n_gn_shallow: usize,
    /// Largest `n` for `G_n` with three variables.
    pub max_n_gn_deep: usize,
    pub max_d: usize,
}

impl Default for PolyBudget {
    fn default() -> Self {
        Self {
            max_n_alpha: 6,
            max_n_gn_shallow: 10,
            max_n_gn_deep: 7,
            max_d: 3,
        }
    }
}

fn to_ints(point: &[Rat]) -> Vec<i64> {
    point
        .iter()
        .map(|v| {
            debug_assert!(v.is_integer());
            v.to_integer().to_i64().expect("grid node fits in i64")
        })
        .collect()
}

/// Interpolates `alpha_n` on the block grid where variable `r` (0-based)
/// takes the values `r*m, ..., r*m + m - 1`. Every grid point is strictly
/// increasing, so it is counted directly by the recurrence.
pub fn alpha_polynomial_with_nodes(counter: &AlphaCounter, n: usize, m: usize) -> PolyMulti {
    assert!(n >= 1 && m >= 1);
    let nodes: Vec<Vec<Rat>> = (0..n)
        .map(|r| int_nodes((0..m).map(|t| (r * m + t) as i64)))
        .collect();
    PolyMulti::from_fn(nodes, |pt| Rat::from_integer(counter.count_weak(&to_ints(pt))))
}

/// The polynomial `alpha_n(k_1, ..., k_n)`, degree `n - 1` in every variable.
/// Built once per `n` and shared.
pub fn alpha_polynomial(n: usize) -> Result<Arc<PolyMulti>> {
    let budget = PolyBudget::default();
    if n == 0 {
        return Err(Error::InvalidArgument("alpha_0 is undefined".into()));
    }
    if n > budget.max_n_alpha {
        return Err(Error::SizeLimit {
            what: "alpha polynomial",
            n,
            limit: budget.max_n_alpha,
        });
    }
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<PolyMulti>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("poly cache").get(&n) {
        return Ok(Arc::clone(p));
    }
    let p = Arc::new(alpha_polynomial_with_nodes(AlphaCounter::global(), n, n));
    Ok(Arc::clone(
        cache.lock().expect("poly cache").entry(n).or_insert(p),
    ))
}

/// Value of the polynomial `alpha_n` at an arbitrary rational point.
pub fn alpha_eval(n: usize, point: &[Rat]) -> Result<Rat> {
    if point.len() != n {
        return Err(Error::InvalidArgument(format!(
            "alpha_{n} takes {n} arguments, got {}",
            point.len()
        )));
    }
    Ok(alpha_polynomial(n)?.eval(point))
}

/// Grid used for `G_n` with `m` nodes per variable: variable `r` (0-based)
/// takes `r*(m-2), ..., r*(m-2) + m - 1`. Consecutive ranges overlap by at
/// most one, which keeps every argument of `alpha_n` weakly increasing.
pub fn gn_grid_nodes(d: usize, m: usize) -> Vec<Vec<i64>> {
    let step = m as i64 - 2;
    (0..d as i64)
        .map(|r| (0..m as i64).map(|t| r * step.max(0) + t).collect())
        .collect()
}

/// The bottom row `(1, ..., n-d, n-d+1+x_1, ..., n+x_d)`.
pub(crate) fn gn_argument(n: usize, xs: &[i64]) -> Vec<i64> {
    let d = xs.len();
    let fixed = (1..=(n - d) as i64).collect::<Vec<_>>();
    let moved = xs
        .iter()
        .enumerate()
        .map(|(r, x)| (n - d + r + 1) as i64 + x);
    fixed.into_iter().chain(moved).collect()
}

pub fn gn_poly_with_nodes(counter: &AlphaCounter, n: usize, d: usize, m: usize) -> PolyMulti {
    assert!(1 <= d && d <= n && m >= 1);
    let nodes: Vec<Vec<Rat>> = gn_grid_nodes(d, m).into_iter().map(int_nodes).collect();
    PolyMulti::from_fn(nodes, |pt| {
        let arg = gn_argument(n, &to_ints(pt));
        debug_assert!(arg.windows(2).all(|w| w[0] <= w[1]), "{arg:?}");
        Rat::from_integer(counter.count_weak(&arg))
    })
}

/// `G_n(x_1, ..., x_d) = alpha_n(1, ..., n-d, n-d+1+x_1, ..., n+x_d)`,
/// interpolated from direct counts without the full `n`-variate polynomial.
pub fn gn_poly(n: usize, d: usize) -> Result<PolyMulti> {
    let budget = PolyBudget::default();
    if d == 0 || d > n {
        return Err(Error::InvalidArgument(format!(
            "G_n needs 1 <= d <= n, got n = {n}, d = {d}"
        )));
    }
    if d > budget.max_d {
        return Err(Error::SizeLimit {
            what: "G_n variable count",
            n: d,
            limit: budget.max_d,
        });
    }
    let limit = if d <= 2 {
        budget.max_n_gn_shallow
    } else {
        budget.max_n_gn_deep
    };
    if n > limit {
        return Err(Error::SizeLimit {
            what: "G_n polynomial",
            n,
            limit,
        });
    }
    Ok(gn_poly_with_nodes(AlphaCounter::global(), n, d, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::triangle::{alpha_count, BottomRow};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn alpha_one_is_constant() {
        let p = alpha_polynomial(1).unwrap();
        assert_eq!(p.eval(&[rat(-5, 3)]), rat(1, 1));
    }

    #[test]
    fn alpha_two_is_difference_plus_one() {
        let p = alpha_polynomial(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut checked = 0;
        while checked < 20 {
            let a = rng.gen_range(-30..30);
            let b = rng.gen_range(-30..30);
            if a >= b {
                continue;
            }
            let count = alpha_count(&BottomRow::new(vec![a, b]).unwrap());
            assert_eq!(count, int(b - a + 1));
            assert_eq!(p.eval(&ints(&[a, b])), rat(b - a + 1, 1));
            checked += 1;
        }
        assert_eq!(p.eval(&[rat(1, 2), rat(7, 3)]), rat(7, 3) - rat(1, 2) + rat(1, 1));
        assert_eq!(alpha_eval(2, &ints(&[5, 5])).unwrap(), rat(1, 1));
    }

    #[test]
    fn alpha_three_values() {
        assert_eq!(alpha_eval(3, &ints(&[1, 2, 3])).unwrap(), rat(7, 1));
        // The reversed argument lies outside the counting domain; the value
        // comes from the polynomial and is pinned by the symmetry identities.
        let reversed = alpha_eval(3, &ints(&[3, 2, 1])).unwrap();
        assert_eq!(reversed, rat(-1, 1));
        assert_eq!(reversed, alpha_eval(3, &ints(&[-1, -2, -3])).unwrap());
        // Rotation: alpha_3(k_2, k_3, k_1 - 3) = alpha_3(k_1, k_2, k_3).
        assert_eq!(alpha_eval(3, &ints(&[2, 3, -2])).unwrap(), rat(7, 1));
        assert_eq!(alpha_eval(3, &ints(&[2, 1, 0])).unwrap(), rat(-1, 1));
        assert!(alpha_eval(3, &ints(&[1, 2])).is_err());
    }

    #[test]
    fn alpha_budget() {
        assert!(matches!(alpha_polynomial(7), Err(Error::SizeLimit { .. })));
        assert!(alpha_polynomial(0).is_err());
    }

    #[test]
    fn gn_grid_is_weakly_increasing() {
        for n in 1..=7 {
            for d in 1..=n.min(3) {
                for m in [n, n + 1] {
                    let nodes = gn_grid_nodes(d, m);
                    for flat in 0..m.pow(d as u32) {
                        let xs: Vec<i64> = crate::poly::multi_index(flat, m, d)
                            .into_iter()
                            .enumerate()
                            .map(|(r, t)| nodes[r][t])
                            .collect();
                        let arg = gn_argument(n, &xs);
                        assert!(arg.windows(2).all(|w| w[0] <= w[1]), "{n} {d} {arg:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn gn_at_origin_is_total() {
        let totals = [1, 1, 2, 7, 42, 429, 7436, 218348];
        for n in 1..=7 {
            for d in 1..=n.min(3) {
                let g = gn_poly(n, d).unwrap();
                assert_eq!(g.eval(&vec![rat(0, 1); d]), rat(totals[n], 1), "n={n} d={d}");
            }
        }
        assert_eq!(gn_poly(3, 2).unwrap().eval(&ints(&[0, 0])), rat(7, 1));
    }

    #[test]
    fn gn_budget() {
        assert!(gn_poly(11, 2).is_err());
        assert!(gn_poly(8, 3).is_err());
        assert!(gn_poly(5, 4).is_err());
        assert!(gn_poly(2, 3).is_err());
    }
}
