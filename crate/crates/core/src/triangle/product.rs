//! Closed product formulas for `A_n` and `A_{n,k}`.

use num_traits::One;

use crate::arith::{binom, factorial, rat_to_int, Int, Rat};

fn product_block(n: usize, upto: usize) -> Rat {
    (0..upto).fold(Rat::one(), |acc, j| {
        acc * Rat::new(factorial(3 * j as u64 + 1), factorial((n + j) as u64))
    })
}

/// `A_n = prod_{j=0}^{n-1} (3j+1)! / (n+j)!`, with `A_0 = 1`.
pub fn asm_total_product(n: usize) -> Int {
    rat_to_int(&product_block(n, n)).expect("product formula is integral")
}

/// `A_{n,k} = C(n+k-2, k-1) (2n-k-1)! / (n-k)! * prod_{j=0}^{n-2} (3j+1)! / (n+j)!`
/// for `1 <= k <= n`.
pub fn refined_product(n: usize, k: usize) -> Int {
    assert!(1 <= k && k <= n, "k = {k} outside 1..={n}");
    let lead = Rat::from_integer(binom((n + k) as i64 - 2, k as i64 - 1))
        * Rat::new(factorial((2 * n - k - 1) as u64), factorial((n - k) as u64));
    rat_to_int(&(lead * product_block(n, n - 1))).expect("refined product formula is integral")
}
