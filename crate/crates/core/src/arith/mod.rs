//! Exact integer and rational arithmetic.
//!
//! Every quantity in this crate is exact. `Int` and `Rat` are thin aliases
//! over `num-bigint` / `num-rational`; `Rat` is always kept in lowest terms
//! with a positive denominator.

pub mod linalg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// Exact rational number, normalized after every operation.
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn rat_from_int(v: Int) -> Rat {
    Rat::from_integer(v)
}

/// `(-1)^e` for any integer exponent.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn factorial(m: u64) -> Int {
    (2..=m).fold(Int::one(), |acc, t| acc * t)
}

/// Generalized binomial coefficient `n(n-1)...(n-k+1)/k!` for `k >= 0` and
/// zero for `k < 0`. The upper index may be negative.
///
/// The falling-factorial product is formed first and divided by `k!` once.
pub fn binom(n: i64, k: i64) -> Int {
    if k < 0 {
        return Int::zero();
    }
    // The product contains a zero factor.
    if n >= 0 && k > n {
        return Int::zero();
    }
    let num = (0..k).fold(Int::one(), |acc, t| acc * (n - t));
    num / factorial(k as u64)
}

/// Like [`binom`], but zero whenever the upper index is negative.
pub fn binom_plus(n: i64, k: i64) -> Int {
    if n < 0 {
        Int::zero()
    } else {
        binom(n, k)
    }
}

/// Binomial coefficient with a rational upper argument.
pub fn binom_rat(x: &Rat, k: i64) -> Rat {
    if k < 0 {
        return Rat::zero();
    }
    let mut num = Rat::one();
    for t in 0..k {
        num *= x - rat(t, 1);
    }
    num / rat_from_int(factorial(k as u64))
}

/// Harmonic number `H_m = 1 + 1/2 + ... + 1/m`, with `H_m = 0` for `m < 1`.
pub fn harmonic(m: i64) -> Rat {
    (1..=m).fold(Rat::zero(), |acc, d| acc + rat(1, d))
}

/// Returns the integer value of `r`, or `None` if the denominator is not 1.
pub fn rat_to_int(r: &Rat) -> Option<Int> {
    if r.is_integer() {
        Some(r.to_integer())
    } else {
        None
    }
}
