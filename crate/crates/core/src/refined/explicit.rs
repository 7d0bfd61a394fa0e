//! The conjectured closed formula
//! `Â_{n,i,j} = B_{n,i,j} (n + j - i - 1 + P_{n,i,j} S_{n,i,j})`.

use num_traits::Zero;

use super::{ExtendedMatrix, VerificationReport};
use crate::arith::{binom, factorial, harmonic, rat, rat_from_int, rat_to_int, sign, Int, Rat};
use crate::error::{Error, Result};
use crate::triangle::asm_total_product;

/// True for the three pairs the formula does not cover directly.
pub fn is_excluded(n: usize, i: usize, j: usize) -> bool {
    (i, j) == (n - 1, 1) || (i, j) == (n, 1) || (i, j) == (n, 2)
}

fn fact(m: i64) -> Rat {
    rat_from_int(factorial(m as u64))
}

fn br(a: i64, b: i64) -> Rat {
    rat_from_int(binom(a, b))
}

struct Ctx {
    n: usize,
    i: usize,
    j: usize,
}

impl Ctx {
    fn pole(&self, k: i64) -> Error {
        Error::FormulaPole {
            n: self.n,
            i: self.i,
            j: self.j,
            k,
        }
    }

    /// Divides, reporting a zero denominator as a pole at `k`.
    fn div(&self, num: Rat, den: Rat, k: i64) -> Result<Rat> {
        if den.is_zero() {
            Err(self.pole(k))
        } else {
            Ok(num / den)
        }
    }

    fn x_term(&self, k: i64) -> Result<Rat> {
        let (n, i, j) = (self.n as i64, self.i as i64, self.j as i64);
        let lin = rat(k - j + 3 - n, 1);
        if j - i <= k && k <= j - 2 {
            let h = rat(3, 1) * harmonic(3 * j - 2 * k - 5) - rat(3, 1) * harmonic(3 * j - 3 * k - 5)
                + rat(2, 1) * harmonic(2 * j + i - 2 * k - 5)
                - rat(2, 1) * harmonic(2 * j - k - 4)
                + harmonic(k - j + i)
                - harmonic(j - k - 2)
                + self.div(rat(1, 1), lin.clone(), k)?;
            let lead = br(3 * k - 3 * j + 4, k)
                * br(2 * j + i - 2 * k - 5, i - k - 1)
                * br(i - 2, k - j + i)
                * rat(i - 1, 1);
            self.div(lead * rat(sign(j + k + 1), 1) * h, lin, k)
        } else {
            let num = br(3 * k - 3 * j + 4, k) * br(2 * j + i - 2 * k - 5, i - k - 1);
            self.div(num, br(k - j + i, i - 1) * lin, k)
        }
    }

    fn y_term(&self, k: i64) -> Result<Rat> {
        let (n, i, j) = (self.n as i64, self.i as i64, self.j as i64);
        let lin = rat(k - j + 3 - n, 1);
        if 0 <= k && k < i {
            let h = harmonic(3 * j - 2 * k - 5) - harmonic(2 * j - k - 4) - harmonic(k)
                + harmonic(i - k - 1);
            let lead = br(3 * k - 3 * j + 4, k + i - j)
                * br(3 * j - 2 * k - 5, j - k - 1)
                * br(i - 1, k)
                * rat(j - k - 1, 1);
            self.div(lead * rat(sign(i + k + 1), 1) * h, lin, k)
        } else {
            let num = br(3 * k - 3 * j + 4, k + i - j) * br(3 * j - 2 * k - 5, j - k - 1) * rat(j - k - 1, 1);
            self.div(num, br(k, i) * lin * rat(i, 1), k)
        }
    }
}

/// `B_{n,i,j} = A_{n-1} / ((3n-5)! (n-2)!) * (2n-2-i)! (2n-2-j)! (n+i-3)! (n+j-3)!
/// / ((i-1)! (j-1)! (n-i)! (n-j)!)`.
pub fn b_factor(n: usize, i: usize, j: usize) -> Rat {
    let (n, i, j) = (n as i64, i as i64, j as i64);
    rat_from_int(asm_total_product((n - 1) as usize)) / (fact(3 * n - 5) * fact(n - 2))
        * fact(2 * n - 2 - i)
        * fact(2 * n - 2 - j)
        * fact(n + i - 3)
        * fact(n + j - 3)
        / (fact(i - 1) * fact(j - 1) * fact(n - i) * fact(n - j))
}

/// `P_{n,i,j} = 2 + 2i + i^2 - 3j - ij + j^2 - 2n - 2in + jn + n^2`.
pub fn p_factor(n: usize, i: usize, j: usize) -> Int {
    let (n, i, j) = (n as i64, i as i64, j as i64);
    (2 + 2 * i + i * i - 3 * j - i * j + j * j - 2 * n - 2 * i * n + j * n + n * n).into()
}

/// `S_{n,i,j} = sum_{k=min(0,j-i)}^{max(i-1,j-2)} (X(k) - Y(k))`.
pub fn s_sum(n: usize, i: usize, j: usize) -> Result<Rat> {
    let ctx = Ctx { n, i, j };
    let (ii, jj) = (i as i64, j as i64);
    let mut s = Rat::zero();
    for k in 0.min(jj - ii)..=(ii - 1).max(jj - 2) {
        s += ctx.x_term(k)? - ctx.y_term(k)?;
    }
    Ok(s)
}

/// The formula's value as an exact rational.
pub fn explicit_formula_rat(n: usize, i: usize, j: usize) -> Result<Rat> {
    if n < 3 || !(1..=n).contains(&i) || !(1..=n).contains(&j) {
        return Err(Error::InvalidArgument(format!("({i}, {j}) outside 1..={n} or n < 3")));
    }
    if is_excluded(n, i, j) {
        return Err(Error::ExcludedIndex { n, i, j });
    }
    let inner = rat((n + j) as i64 - i as i64 - 1, 1) + rat_from_int(p_factor(n, i, j)) * s_sum(n, i, j)?;
    Ok(b_factor(n, i, j) * inner)
}

/// The formula's value, which must be an integer.
pub fn explicit_formula(n: usize, i: usize, j: usize) -> Result<Int> {
    let v = explicit_formula_rat(n, i, j)?;
    rat_to_int(&v).ok_or(Error::NonIntegral {
        n,
        i,
        j,
        value: v.to_string(),
    })
}

/// Compares the formula with `m` at every non-excluded entry.
pub fn verify_conjecture2(m: &ExtendedMatrix) -> VerificationReport {
    let n = m.n();
    let mut report = VerificationReport::for_order("conj2", n);
    for i in 1..=n {
        for j in 1..=n {
            if is_excluded(n, i, j) {
                continue;
            }
            match explicit_formula(n, i, j) {
                Ok(v) => {
                    report.compare(|| format!("({i}, {j})"), m.get(i, j), &v);
                }
                Err(e) => report.record_error(format!("({i}, {j})"), e),
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::refined::extend_matrix;
    use crate::triangle::build_table;

    #[test]
    fn examples() {
        assert_eq!(explicit_formula(5, 2, 3).unwrap(), int(23));
        assert_eq!(explicit_formula(5, 1, 2).unwrap(), int(7));
        assert_eq!(explicit_formula(5, 5, 5).unwrap(), int(0));
    }

    #[test]
    fn excluded_pairs_are_rejected() {
        for (i, j) in [(4, 1), (5, 1), (5, 2)] {
            assert!(matches!(explicit_formula(5, i, j), Err(Error::ExcludedIndex { .. })));
        }
        assert!(explicit_formula(5, 0, 1).is_err());
    }

    #[test]
    fn matches_extension() {
        for n in 3..=9 {
            let m = extend_matrix(&build_table(n, 2).unwrap()).unwrap();
            let r = verify_conjecture2(&m);
            assert!(r.passed(), "{r}");
            let expected = n * n - 3;
            assert_eq!(r.checked, expected);
        }
    }

    #[test]
    fn p_vanishes_at_excluded_pairs() {
        for n in 3..=12 {
            assert_eq!(p_factor(n, n - 1, 1), int(0), "n={n}");
            assert_eq!(p_factor(n, n, 2), int(0), "n={n}");
            assert_eq!(p_factor(n, n, 1), int(0), "n={n}");
        }
    }
}
