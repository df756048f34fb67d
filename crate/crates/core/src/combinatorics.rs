//! Factorials, binomial coefficients with rational tops, rising and falling
//! factorials, and Stirling-type triangles.
//!
//! Triangles are built row by row on every call. Nothing is cached, so every
//! function here is a pure function of its arguments.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{domain, Error};
use crate::poly::Polynomial;
use crate::rational::Rational;

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// `n(n-1)···(n-k+1) / k!` for any rational `n`.
pub fn binomial(n: &Rational, k: usize) -> Rational {
    falling_factorial(n, k) / Rational::from(factorial(k))
}

/// [`binomial`] with a signed lower index, for callers holding unchecked input.
pub fn binomial_checked(n: &Rational, k: i64) -> Result<Rational, Error> {
    let k = usize::try_from(k).map_err(|_| domain("binomial", "k must be >= 0"))?;
    Ok(binomial(n, k))
}

/// `C(x + offset, k)` as a degree-`k` polynomial in `x`.
pub fn binomial_poly(offset: &Rational, k: usize) -> Polynomial {
    let numerator = (0..k).fold(Polynomial::one(), |acc, i| {
        &acc * &Polynomial::linear(offset - Rational::from(i))
    });
    numerator.scale(&Rational::from(factorial(k)).recip().expect("k! > 0"))
}

/// `x(x+1)···(x+m-1)`.
pub fn rising_factorial(x: &Rational, m: usize) -> Rational {
    (0..m).map(|i| x + Rational::from(i)).product()
}

/// `x(x-1)···(x-m+1)`.
pub fn falling_factorial(x: &Rational, m: usize) -> Rational {
    (0..m).map(|i| x - Rational::from(i)).product()
}

/// Row `k` of the second-kind triangle: `{k, 0}, …, {k, k}`.
pub fn stirling2_row(k: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for n in 1..=k {
        let mut next = vec![BigUint::zero(); n + 1];
        for j in 1..=n {
            let carry = row.get(j).map(|s| s * BigUint::from(j)).unwrap_or_default();
            next[j] = carry + &row[j - 1];
        }
        row = next;
    }
    row
}

pub fn stirling2(k: usize, j: usize) -> BigUint {
    if j > k {
        return BigUint::zero();
    }
    stirling2_row(k).swap_remove(j)
}

/// Row `k` of the unsigned first-kind triangle: `[k, 0], …, [k, k]`.
pub fn stirling1_row(k: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for n in 1..=k {
        let mut next = vec![BigUint::zero(); n + 1];
        for j in 1..=n {
            let carry = row
                .get(j)
                .map(|s| s * BigUint::from(n - 1))
                .unwrap_or_default();
            next[j] = carry + &row[j - 1];
        }
        row = next;
    }
    row
}

pub fn stirling1_unsigned(k: usize, j: usize) -> BigUint {
    if j > k {
        return BigUint::zero();
    }
    stirling1_row(k).swap_remove(j)
}

/// r-Stirling number of the first kind `[n, k]_r`: permutations of `n`
/// elements with `k` cycles where the first `r` elements lie in distinct
/// cycles.
///
/// Base row `[r, k]_r = δ(k, r)`; for `n > r`,
/// `[n, k]_r = (n-1)[n-1, k]_r + [n-1, k-1]_r`.
pub fn r_stirling1(n: usize, k: usize, r: usize) -> Result<BigUint, Error> {
    if n < r {
        return Err(domain(
            "r_stirling1",
            format!("n >= r required, got n={n}, r={r}"),
        ));
    }
    if k > n || k < r {
        return Ok(BigUint::zero());
    }
    // Only columns r..=k matter; shift the index by r.
    let width = k - r + 1;
    let mut row = vec![BigUint::zero(); width];
    row[0] = BigUint::one();
    for m in r + 1..=n {
        let mult = BigUint::from(m - 1);
        for c in (0..width).rev() {
            let left = if c > 0 {
                row[c - 1].clone()
            } else {
                BigUint::zero()
            };
            row[c] = &row[c] * &mult + left;
        }
    }
    Ok(row.swap_remove(width - 1))
}

/// `a_{k,j} = (-1)^(k-j) j! {k, j}` for `j = 0..=k`: signed surjection counts,
/// the coefficients that expand `x^k` over rising binomials.
pub fn signed_surjections(k: usize) -> Vec<Rational> {
    stirling2_row(k)
        .into_iter()
        .enumerate()
        .map(|(j, s)| Rational::sign_pow(k - j) * Rational::from(factorial(j) * s))
        .collect()
}

/// Tag selecting one of the Stirling-type triangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StirlingKind {
    Second,
    FirstUnsigned,
    FirstR(usize),
}

impl StirlingKind {
    pub fn value(self, n: usize, k: usize) -> Result<BigUint, Error> {
        match self {
            StirlingKind::Second => Ok(stirling2(n, k)),
            StirlingKind::FirstUnsigned => Ok(stirling1_unsigned(n, k)),
            StirlingKind::FirstR(r) => r_stirling1(n, k, r),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::frac(p, d)
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    /// Counts set partitions of `{0..k}` into `j` blocks by walking
    /// restricted growth strings.
    fn partitions_oracle(k: usize, j: usize) -> u64 {
        fn walk(pos: usize, k: usize, blocks: usize, target: usize) -> u64 {
            if pos == k {
                return u64::from(blocks == target);
            }
            let mut total = 0;
            for b in 0..=blocks {
                let nb = if b == blocks { blocks + 1 } else { blocks };
                if nb <= target {
                    total += walk(pos + 1, k, nb, target);
                }
            }
            total
        }
        walk(0, k, 0, j)
    }

    /// Counts permutations of `k` elements by number of cycles.
    fn cycles_oracle(k: usize) -> Vec<u64> {
        fn permutations(items: &mut Vec<usize>, i: usize, out: &mut Vec<Vec<usize>>) {
            if i == items.len() {
                out.push(items.clone());
                return;
            }
            for s in i..items.len() {
                items.swap(i, s);
                permutations(items, i + 1, out);
                items.swap(i, s);
            }
        }
        let mut all = Vec::new();
        permutations(&mut (0..k).collect(), 0, &mut all);
        let mut counts = vec![0u64; k + 1];
        for p in all {
            let mut seen = vec![false; k];
            let mut cycles = 0;
            for start in 0..k {
                if !seen[start] {
                    cycles += 1;
                    let mut c = start;
                    while !seen[c] {
                        seen[c] = true;
                        c = p[c];
                    }
                }
            }
            counts[cycles] += 1;
        }
        counts
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(&q(5, 1), 2), q(10, 1));
        assert_eq!(binomial(&q(-1, 1), 3), q(-1, 1));
        assert_eq!(binomial(&q(1, 2), 2), q(-1, 8));
        assert_eq!(binomial(&q(3, 1), 5), q(0, 1));
        assert!(binomial_checked(&q(3, 1), -1).is_err());
    }

    #[test]
    fn binomial_of_minus_one_alternates() {
        for i in 0..15 {
            assert_eq!(binomial(&q(-1, 1), i), Rational::sign_pow(i));
        }
    }

    #[test]
    fn binomial_poly_examples() {
        assert_eq!(binomial_poly(&q(0, 1), 1), Polynomial::x());
        assert_eq!(binomial_poly(&q(0, 1), 0), Polynomial::one());
        assert_eq!(
            binomial_poly(&q(1, 1), 2),
            Polynomial::new(vec![q(0, 1), q(1, 2), q(1, 2)])
        );
        for k in 0..8 {
            assert_eq!(
                binomial_poly(&q(3, 2), k).leading(),
                Rational::from(factorial(k)).recip().unwrap()
            );
        }
    }

    #[test]
    fn stirling2_examples() {
        assert_eq!(stirling2(4, 2), big(7));
        assert_eq!(stirling2(4, 3), big(6));
        for k in 0..10 {
            assert_eq!(stirling2(k, k), big(1));
        }
        assert_eq!(stirling2(3, 0), big(0));
        assert_eq!(stirling2(0, 0), big(1));
        assert_eq!(stirling2(2, 5), big(0));
    }

    #[test]
    fn stirling2_matches_partition_enumeration() {
        for k in 0..=9 {
            for j in 0..=k {
                assert_eq!(stirling2(k, j), big(partitions_oracle(k, j)), "{{{k} {j}}}");
            }
        }
    }

    #[test]
    fn stirling1_examples() {
        assert_eq!(stirling1_unsigned(4, 2), big(11));
        assert_eq!(stirling1_unsigned(3, 1), big(2));
        for k in 0..10 {
            assert_eq!(stirling1_unsigned(k, k), big(1));
        }
    }

    #[test]
    fn stirling1_matches_cycle_enumeration() {
        for k in 0..=7 {
            let counts = cycles_oracle(k);
            for j in 0..=k {
                assert_eq!(stirling1_unsigned(k, j), big(counts[j]), "[{k} {j}]");
            }
        }
    }

    #[test]
    fn r_stirling_examples() {
        for r in 0..6 {
            assert_eq!(r_stirling1(r, r, r).unwrap(), big(1));
        }
        assert_eq!(r_stirling1(3, 2, 1).unwrap(), big(3));
        assert_eq!(r_stirling1(4, 3, 2).unwrap(), big(5));
        assert!(r_stirling1(2, 1, 3).is_err());
    }

    #[test]
    fn r_stirling_reduces_to_unsigned() {
        // r = 0 agrees everywhere; r = 1 agrees for n >= 1 (the [0,0] cell lies
        // outside the r = 1 domain).
        for n in 0..=12 {
            for k in 0..=n {
                assert_eq!(r_stirling1(n, k, 0).unwrap(), stirling1_unsigned(n, k));
                if n >= 1 {
                    assert_eq!(r_stirling1(n, k, 1).unwrap(), stirling1_unsigned(n, k));
                }
            }
        }
    }

    #[test]
    fn kind_tag_dispatch() {
        assert_eq!(StirlingKind::Second.value(4, 2).unwrap(), big(7));
        assert_eq!(StirlingKind::FirstUnsigned.value(4, 2).unwrap(), big(11));
        assert_eq!(StirlingKind::FirstR(1).value(3, 2).unwrap(), big(3));
        assert!(StirlingKind::FirstR(4).value(3, 2).is_err());
    }

    #[test]
    fn surjection_row() {
        // a_{4,j}: 0, -1, 14, -36, 24
        let row = signed_surjections(4);
        let expect: Vec<Rational> = [0, -1, 14, -36, 24].iter().map(|&v| q(v, 1)).collect();
        assert_eq!(row, expect);
        assert_eq!(signed_surjections(0), vec![q(1, 1)]);
    }

    #[test]
    fn factorial_products() {
        assert_eq!(rising_factorial(&q(3, 1), 2), q(12, 1));
        assert_eq!(rising_factorial(&q(4, 1), 3), q(120, 1));
        assert_eq!(rising_factorial(&q(7, 3), 0), q(1, 1));
        assert_eq!(falling_factorial(&q(4, 1), 3), q(24, 1));
        assert_eq!(falling_factorial(&q(7, 3), 0), q(1, 1));
        assert_eq!(falling_factorial(&q(3, 1), 4), q(0, 1));
    }
}
