//! The `d`-refined numbers: expansion coefficients of `G_n(x_1, ..., x_d)`
//! and the linear relations they are expected to satisfy.

use num_traits::Zero;

use super::VerificationReport;
use crate::arith::{binom, rat_from_int, sign, Rat};
use crate::error::Result;
use crate::poly::{expand_in_binomial_basis, gn_poly, multi_index, BinomBasisExpansion};
use crate::triangle::{asm_total_product, build_table, increasing_tuples, refined_count};

/// Coefficients `F_{n,j_1,...,j_d}` of `G_n` in the shifted binomial basis.
pub fn drefined_f(n: usize, d: usize) -> Result<BinomBasisExpansion> {
    expand_in_binomial_basis(&gn_poly(n, d)?, n, d)
}

fn label(js: &[usize]) -> String {
    let parts: Vec<String> = js.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// `F_{n,J} = A_{n,J}` on every strictly increasing tuple `J`.
pub fn verify_conjecture4(f: &BinomBasisExpansion) -> Result<VerificationReport> {
    let (n, d) = (f.n(), f.d());
    let table = build_table(n, d)?;
    let mut report = VerificationReport::for_order(format!("conj4 (d = {d})"), n);
    for (js, a) in table.iter() {
        report.compare(|| label(js), &rat_from_int(a.clone()), f.get(js));
    }
    Ok(report)
}

/// `F_I = (-1)^{nd} sum_{J >= I} (-1)^{|J|} prod_r C(2n - i_r - d, j_r - i_r) F_{rev(J)}`
/// at all `n^d` tuples `I`, where `J >= I` is coordinatewise and `|J|` is
/// the coordinate sum.
pub fn verify_conjecture3(f: &BinomBasisExpansion) -> VerificationReport {
    let (n, d) = (f.n(), f.d());
    let (ni, di) = (n as i64, d as i64);
    let mut report = VerificationReport::for_order(format!("conj3 (d = {d})"), n);
    let outer = sign(ni * di);
    for flat in 0..n.pow(d as u32) {
        let is: Vec<usize> = multi_index(flat, n, d).into_iter().map(|t| t + 1).collect();
        let mut rhs = Rat::zero();
        let span: Vec<usize> = is.iter().map(|&i| n - i + 1).collect();
        let count: usize = span.iter().product();
        for t in 0..count {
            let mut rest = t;
            let mut js = vec![0; d];
            for r in (0..d).rev() {
                js[r] = is[r] + rest % span[r];
                rest /= span[r];
            }
            let mut coeff = rat_from_int(
                js.iter()
                    .zip(&is)
                    .map(|(&j, &i)| binom(2 * ni - i as i64 - di, (j - i) as i64))
                    .product(),
            );
            if coeff.is_zero() {
                continue;
            }
            let total: usize = js.iter().sum();
            coeff *= rat_from_int((sign(total as i64) * outer).into());
            let reversed: Vec<usize> = js.iter().rev().copied().collect();
            rhs += coeff * f.get(&reversed);
        }
        report.compare(|| label(&is), f.get(&is), &rhs);
    }
    report
}

/// `A_{n,i_1..i_{d-1},n} = A_{n-1,i_1..i_{d-1}}` and `A_{n,1..d} = A_{n-d}`.
pub fn verify_drefined_reductions(n: usize, d: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::for_order(format!("d-refined reductions (d = {d})"), n);
    let head: Vec<usize> = (1..=d).collect();
    report.compare(|| label(&head), &asm_total_product(n - d), &refined_count(n, &head)?);
    if d >= 2 && n >= 2 {
        for prefix in increasing_tuples(n - 1, d - 1) {
            let mut full = prefix.clone();
            full.push(n);
            let lower = refined_count(n - 1, &prefix)?;
            report.compare(|| label(&full), &lower, &refined_count(n, &full)?);
        }
    }
    Ok(report)
}
