//! q-integers, Gaussian binomials and their balanced (v-symmetric) versions.

use super::laurent::LaurentPoly;
use crate::error::{domain, Result};

/// `[n]_+ = 1 + t + ⋯ + t^{n-1}` (zero for `n = 0`).
pub fn qint_plus(n: u32) -> LaurentPoly {
    LaurentPoly::from_terms((0..n as i64).map(|e| (e, 1)))
}

/// `[n]_+! = [1]_+ [2]_+ ⋯ [n]_+`.
pub fn qfactorial_plus(n: u32) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, i| &acc * &qint_plus(i))
}

/// The Gaussian binomial `[n choose r]_+`, i.e. the number of `r`-dimensional
/// subspaces of `F_t^n` as a polynomial in `t`.
pub fn gauss_binomial(n: u32, r: u32) -> Result<LaurentPoly> {
    if r > n {
        return domain(format!("gauss_binomial: r = {r} exceeds n = {n}"));
    }
    let r = r.min(n - r);
    let num = ((n - r + 1)..=n).fold(LaurentPoly::one(), |acc, i| &acc * &qint_plus(i));
    let den = qfactorial_plus(r);
    let out = num
        .exact_div(&den)
        .expect("Gaussian binomial numerator must be divisible by [r]!");
    Ok(out)
}

/// Like [`gauss_binomial`] but returns zero when `r > n`, which is the
/// convention needed when counting subspaces.
pub fn gauss_binomial_or_zero(n: u32, r: u32) -> LaurentPoly {
    gauss_binomial(n, r).unwrap_or_default()
}

/// The balanced quantum integer `[n] = (v^n − v^{-n})/(v − v^{-1})` in the variable `v`.
pub fn balanced_qint(n: i64) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    let m = n.abs();
    let p = LaurentPoly::from_terms((0..m).map(|k| (1 - m + 2 * k, 1)));
    if n < 0 {
        -p
    } else {
        p
    }
}

/// `[n]! = [1][2]⋯[n]` in the balanced convention.
pub fn balanced_factorial(n: u32) -> LaurentPoly {
    (1..=n as i64).fold(LaurentPoly::one(), |acc, i| &acc * &balanced_qint(i))
}

/// `[n choose r] = [n]! / ([r]! [n−r]!)` in the balanced convention.
pub fn balanced_binomial(n: u32, r: u32) -> Result<LaurentPoly> {
    if r > n {
        return domain(format!("balanced_binomial: r = {r} exceeds n = {n}"));
    }
    let den = &balanced_factorial(r) * &balanced_factorial(n - r);
    Ok(balanced_factorial(n)
        .exact_div(&den)
        .expect("balanced binomial must be a Laurent polynomial"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn binom(n: u64, r: u64) -> u64 {
        (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn gauss_examples() {
        assert_eq!(gauss_binomial(3, 1).unwrap(), LaurentPoly::from_dense(&[1, 1, 1]));
        assert_eq!(
            gauss_binomial(4, 2).unwrap(),
            LaurentPoly::from_dense(&[1, 1, 2, 1, 1])
        );
        assert_eq!(gauss_binomial(5, 0).unwrap(), LaurentPoly::one());
        assert!(gauss_binomial(2, 3).is_err());
    }

    #[test]
    fn gauss_degree_symmetry_and_pascal() {
        for n in 0..=12u32 {
            for r in 0..=n {
                let g = gauss_binomial(n, r).unwrap();
                assert_eq!(g, gauss_binomial(n, n - r).unwrap());
                assert_eq!(g.max_exp(), Some((r * (n - r)) as i64));
                assert!(g.terms().all(|(_, c)| *c > BigInt::from(0)));
                assert_eq!(g.eval_int(1).to_integer(), BigInt::from(binom(n as u64, r as u64)));
                if n >= 1 && r >= 1 && r < n {
                    let rhs = &gauss_binomial(n - 1, r - 1).unwrap()
                        + &gauss_binomial(n - 1, r).unwrap().shift(r as i64);
                    assert_eq!(g, rhs, "pascal n={n} r={r}");
                }
            }
        }
    }

    #[test]
    fn balanced_examples() {
        assert_eq!(balanced_qint(1), LaurentPoly::one());
        assert_eq!(balanced_qint(2), LaurentPoly::from_terms([(1, 1), (-1, 1)]));
        assert_eq!(balanced_qint(3), LaurentPoly::from_terms([(2, 1), (0, 1), (-2, 1)]));
        assert_eq!(balanced_qint(0), LaurentPoly::zero());
        assert_eq!(balanced_qint(-2), -balanced_qint(2));
        // (v - v^{-1})[n] = v^n - v^{-n}
        let d = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
        for n in 1..8 {
            assert_eq!(
                &d * &balanced_qint(n),
                LaurentPoly::from_terms([(n, 1), (-n, -1)])
            );
        }
    }

    #[test]
    fn balanced_binomial_vanishing_lemma() {
        for m in 1..=8i64 {
            for d in (1 - m)..=(m - 1) {
                if (d - (m - 1)).rem_euclid(2) != 0 {
                    continue;
                }
                let mut acc = LaurentPoly::zero();
                for n in 0..=m {
                    let term = balanced_binomial(m as u32, n as u32).unwrap().shift(-d * n);
                    if n % 2 == 0 {
                        acc += &term;
                    } else {
                        acc -= &term;
                    }
                }
                assert!(acc.is_zero(), "m={m} d={d}: {acc}");
            }
        }
    }

    #[test]
    fn balanced_binomial_relates_to_gauss() {
        // [n choose r] = v^{-r(n-r)} [n choose r]_+ (v^2)
        for n in 0..=7u32 {
            for r in 0..=n {
                let g = gauss_binomial(n, r).unwrap();
                let g_v2 = LaurentPoly::from_terms(g.terms().map(|(e, c)| (2 * e, c.clone())));
                let lhs = balanced_binomial(n, r).unwrap();
                assert_eq!(lhs, g_v2.shift(-((r * (n - r)) as i64)));
            }
        }
    }

    proptest! {
        #[test]
        fn gauss_symmetry_random(n in 0u32..16, r in 0u32..16) {
            prop_assume!(r <= n);
            prop_assert_eq!(gauss_binomial(n, r).unwrap(), gauss_binomial(n, n - r).unwrap());
        }
    }
}
