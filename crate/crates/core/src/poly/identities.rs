//! Evaluation-based checks of the identities satisfied by `alpha_n` and `G_n`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{alpha_polynomial, gn_poly, PolyMulti};
use crate::arith::{binom, rat, rat_from_int, sign, Rat};
use crate::error::{Error, Result};

/// Seed used for identity sample points unless the caller supplies one.
pub const DEFAULT_SEED: u64 = 0x5eed_a5b1;

/// Sample points checked per identity.
pub const SAMPLE_COUNT: usize = 24;

/// `count` points in `dim` coordinates, each a fraction `a/b` with
/// `1 <= b <= 7` and `|a/b| <= 3n`. Deterministic in `(seed, n, dim)`.
pub fn sample_points(seed: u64, n: usize, dim: usize, count: usize) -> Vec<Vec<Rat>> {
    let stream = ((n as u64) << 16) | dim as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let bound = 3 * n.max(1) as i64;
    (0..count)
        .map(|_| {
            (0..dim)
                .map(|_| {
                    let den = rng.gen_range(1..=7);
                    rat(rng.gen_range(-bound * den..=bound * den), den)
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub points: usize,
}

/// Identities that held at every sample point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub n: usize,
    pub d: Option<usize>,
    pub seed: u64,
    pub checks: Vec<IdentityCheck>,
}

struct Checker {
    checks: Vec<IdentityCheck>,
}

impl Checker {
    fn check(&mut self, identity: String, point: &[Rat], lhs: Rat, rhs: Rat) -> Result<()> {
        if lhs != rhs {
            let coords: Vec<String> = point.iter().map(ToString::to_string).collect();
            return Err(Error::IdentityViolation {
                identity,
                witness: format!("({}): {lhs} != {rhs}", coords.join(", ")),
            });
        }
        match self.checks.iter_mut().find(|c| c.identity == identity) {
            Some(c) => c.points += 1,
            None => self.checks.push(IdentityCheck { identity, points: 1 }),
        }
        Ok(())
    }
}

/// `alpha(k + 1_S)` for every subset `S` of the coordinates, indexed by bitmask.
fn shift_table(p: &PolyMulti, k: &[Rat]) -> Vec<Rat> {
    (0..1usize << k.len())
        .map(|mask| {
            let pt: Vec<Rat> = k
                .iter()
                .enumerate()
                .map(|(t, v)| if mask >> t & 1 == 1 { v + rat(1, 1) } else { v.clone() })
                .collect();
            p.eval(&pt)
        })
        .collect()
}

/// Checks translation, reversal, rotation, the six-term swap identity,
/// annihilation by `e_q` of the difference operators, and the shift
/// expansion of `E^z` in one coordinate (`z <= 3`).
pub fn verify_alpha_identities(n: usize, seed: u64) -> Result<IdentityReport> {
    if n > 5 {
        return Err(Error::SizeLimit {
            what: "alpha identity suite",
            n,
            limit: 5,
        });
    }
    let p = alpha_polynomial(n)?;
    verify_alpha_identities_for(&p, n, seed)
}

pub(crate) fn verify_alpha_identities_for(p: &PolyMulti, n: usize, seed: u64) -> Result<IdentityReport> {
    let one = rat(1, 1);
    let mut ck = Checker { checks: Vec::new() };
    let points = sample_points(seed, n, n + 1, SAMPLE_COUNT);

    for sample in &points {
        let (k, t) = (&sample[..n], &sample[n]);
        let base = p.eval(k);

        let shifted: Vec<Rat> = k.iter().map(|v| v + t).collect();
        ck.check("translation".into(), sample, p.eval(&shifted), base.clone())?;

        let reversed: Vec<Rat> = k.iter().rev().map(|v| -v).collect();
        ck.check("reversal".into(), k, p.eval(&reversed), base.clone())?;

        let mut rotated: Vec<Rat> = k[1..].to_vec();
        rotated.push(&k[0] - rat(n as i64, 1));
        ck.check(
            "rotation".into(),
            k,
            p.eval(&rotated),
            &base * rat(sign(n as i64 - 1), 1),
        )?;

        for i in 0..n.saturating_sub(1) {
            let at = |a: Rat, b: Rat| {
                let mut v = k.to_vec();
                v[i] = a;
                v[i + 1] = b;
                p.eval(&v)
            };
            let (ki, kj) = (&k[i], &k[i + 1]);
            let lhs = at(ki.clone(), kj.clone()) + at(ki + &one, kj + &one) - at(ki.clone(), kj + &one);
            let rhs = -at(kj.clone(), ki.clone()) - at(kj + &one, ki + &one) + at(kj.clone(), ki + &one);
            ck.check(format!("six-term (i = {})", i + 1), k, lhs, rhs)?;
        }

        let table = shift_table(p, k);
        let full = (1usize << n) - 1;
        for q in 1..=n {
            // e_q(Delta) alpha = sum over |S| = q of sum over T in S of
            // (-1)^{|S| - |T|} alpha(k + 1_T).
            let mut total = Rat::from_integer(0.into());
            for s in (0..=full).filter(|s| s.count_ones() as usize == q) {
                let mut t = s;
                loop {
                    let sgn = sign((q - t.count_ones() as usize) as i64);
                    total += &table[t] * rat(sgn, 1);
                    if t == 0 {
                        break;
                    }
                    t = (t - 1) & s;
                }
            }
            ck.check(format!("e_{q} annihilation"), k, total, Rat::from_integer(0.into()))?;
        }

        for r in 0..n {
            for z in 0..=3i64 {
                let mut moved = k.to_vec();
                moved[r] += rat(z, 1);
                let lhs = p.eval(&moved);
                let mut rhs = Rat::from_integer(0.into());
                for pp in 0..=z {
                    let e_p: Rat = (0..=full)
                        .filter(|s| s >> r & 1 == 0 && s.count_ones() as i64 == pp)
                        .map(|s| table[s].clone())
                        .sum();
                    rhs += rat_from_int(binom(-(n as i64), z - pp)) * e_p;
                }
                rhs *= rat(sign(z), 1);
                ck.check(format!("shift expansion (r = {}, z = {z})", r + 1), k, lhs, rhs)?;
            }
        }
    }
    Ok(IdentityReport {
        n,
        d: None,
        seed,
        checks: ck.checks,
    })
}

/// Checks `G_n(x_1..x_d) = (-1)^{(n-1)d} G_n(-2n-x_d, ..., -2n-x_1)` and,
/// for `d = 2`, the six-term identity
/// `G(x,y) + G(x+1,y+1) - G(x,y+1) = -G(y+1,x-1) - G(y+2,x) + G(y+1,x)`.
pub fn verify_gn_reflection(n: usize, d: usize, seed: u64) -> Result<IdentityReport> {
    let g = gn_poly(n, d)?;
    verify_gn_identities_for(&g, n, d, seed)
}

pub(crate) fn verify_gn_identities_for(
    g: &PolyMulti,
    n: usize,
    d: usize,
    seed: u64,
) -> Result<IdentityReport> {
    let mut ck = Checker { checks: Vec::new() };
    let shift = rat(-2 * n as i64, 1);
    let sgn = rat(sign((n as i64 - 1) * d as i64), 1);
    let one = rat(1, 1);
    for x in sample_points(seed, n, d, SAMPLE_COUNT) {
        let reflected: Vec<Rat> = x.iter().rev().map(|v| &shift - v).collect();
        ck.check("reflection".into(), &x, g.eval(&x), &sgn * g.eval(&reflected))?;

        if d == 2 {
            let (a, b) = (&x[0], &x[1]);
            let at = |u: Rat, v: Rat| g.eval(&[u, v]);
            let lhs = at(a.clone(), b.clone()) + at(a + &one, b + &one) - at(a.clone(), b + &one);
            let rhs = -at(b + &one, a - &one) - at(b + rat(2, 1), a.clone()) + at(b + &one, a.clone());
            ck.check("six-term".into(), &x, lhs, rhs)?;
        }
    }
    Ok(IdentityReport {
        n,
        d: Some(d),
        seed,
        checks: ck.checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use crate::poly::{alpha_eval, alpha_polynomial_with_nodes, int_nodes};
    use crate::triangle::{alpha_count, AlphaCounter, BottomRow};

    #[test]
    fn sample_points_are_deterministic_and_bounded() {
        let a = sample_points(7, 4, 3, 30);
        assert_eq!(a, sample_points(7, 4, 3, 30));
        assert_ne!(a, sample_points(8, 4, 3, 30));
        for p in a.iter().flatten() {
            assert!(p.denom() <= &7.into());
            assert!(p.abs() <= rat(12, 1));
        }
    }

    #[test]
    fn alpha_suite_passes() {
        for n in 1..=4 {
            let report = verify_alpha_identities(n, DEFAULT_SEED).unwrap();
            assert!(report.checks.iter().all(|c| c.points == SAMPLE_COUNT), "{report:?}");
            let names: Vec<&str> = report.checks.iter().map(|c| c.identity.as_str()).collect();
            assert!(names.contains(&"rotation"));
            assert_eq!(names.iter().filter(|s| s.starts_with("six-term")).count(), n - 1);
            assert_eq!(names.iter().filter(|s| s.starts_with("shift")).count(), 4 * n);
        }
        assert!(verify_alpha_identities(6, DEFAULT_SEED).is_err());
    }

    #[test]
    fn detects_a_broken_polynomial() {
        // alpha_2 + 1 keeps translation and reversal but breaks rotation.
        let nodes = vec![int_nodes(0..2), int_nodes(2..4)];
        let p = PolyMulti::from_fn(nodes, |k| &k[1] - &k[0] + rat(2, 1));
        match verify_alpha_identities_for(&p, 2, DEFAULT_SEED) {
            Err(Error::IdentityViolation { identity, .. }) => assert_eq!(identity, "rotation"),
            other => panic!("expected a rotation violation, got {other:?}"),
        }
        let g = PolyMulti::from_fn(vec![int_nodes(0..3)], |x| &x[0] * &x[0]);
        assert!(verify_gn_identities_for(&g, 3, 1, DEFAULT_SEED).is_err());
    }

    #[test]
    fn gn_reflection_passes() {
        for (n, d) in [(3, 1), (4, 1), (5, 1), (3, 2), (4, 2), (5, 2), (4, 3)] {
            let report = verify_gn_reflection(n, d, DEFAULT_SEED).unwrap();
            let expect = if d == 2 { 2 } else { 1 };
            assert_eq!(report.checks.len(), expect);
        }
    }

    #[test]
    fn gn_reflection_examples() {
        let g5 = gn_poly(5, 2).unwrap();
        assert_eq!(g5.eval_ints(&[0, 0]), g5.eval_ints(&[-10, -10]));
        let g4 = gn_poly(4, 1).unwrap();
        for x in [-3, 0, 2] {
            assert_eq!(g4.eval_ints(&[x]), -g4.eval_ints(&[-8 - x]));
        }
    }

    #[test]
    fn degree_bound_holds_with_extra_nodes() {
        let counter = AlphaCounter::new();
        for n in 1..=4 {
            let p = alpha_polynomial_with_nodes(&counter, n, n + 1);
            for v in 0..n {
                assert!(p.degree_in(v) < n, "alpha_{n} variable {v}");
            }
        }
        for n in 2..=6 {
            for d in 1..=2 {
                let g = crate::poly::gn_poly_with_nodes(&counter, n, d, n + 1);
                for v in 0..d {
                    assert!(g.degree_in(v) < n, "G_{n} d={d}");
                }
            }
        }
    }

    #[test]
    fn alpha_matches_counts_off_grid() {
        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
        for n in 1..=5 {
            for _ in 0..100 {
                let mut k: Vec<i64> = (0..n).map(|_| rng.gen_range(-15..=15)).collect();
                k.sort_unstable();
                let pt: Vec<Rat> = k.iter().map(|&v| rat(v, 1)).collect();
                let count = alpha_count(&BottomRow::new(k.clone()).unwrap());
                assert_eq!(alpha_eval(n, &pt).unwrap(), rat_from_int(count), "{k:?}");
            }
        }
    }
}
