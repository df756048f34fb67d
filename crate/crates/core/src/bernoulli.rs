//! Bernoulli numbers and polynomials, built from Stirling numbers and the
//! hyperharmonic polynomials. `B_1 = -1/2` throughout.

use std::sync::RwLock;

use crate::combinatorics::{factorial, signed_surjections, stirling1_row, stirling2_row};
use crate::error::{domain, Error};
use crate::harmonic::{harmonic, hyperharmonic_poly, script_h_poly};
use crate::poly::Polynomial;
use crate::rational::Rational;

/// `B_k = Σ_{j=1..k} (-1)^j j!/(j+1) {k, j}`, with `B_0 = 1`.
pub fn bernoulli_number(k: usize) -> Rational {
    if k == 0 {
        return Rational::one();
    }
    stirling2_row(k)
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(j, s)| {
            Rational::sign_pow(j) * Rational::from(factorial(j) * s) / Rational::from(j + 1)
        })
        .sum()
}

/// `B_k = (-1)^(k+1) Σ_{j=1..k} (-1)^j (j-1)!/(j+1) {k, j}`, for `k >= 1`.
pub fn bernoulli_number_variant(k: usize) -> Result<Rational, Error> {
    if k == 0 {
        return Err(domain("bernoulli_number_variant", "k >= 1 required"));
    }
    let sum: Rational = stirling2_row(k)
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(j, s)| {
            Rational::sign_pow(j) * Rational::from(factorial(j - 1) * s) / Rational::from(j + 1)
        })
        .sum();
    Ok(Rational::sign_pow(k + 1) * sum)
}

/// `B_k = (-1)^(k+1) k + Σ_{j=0..k} (-1)^j j! {k, j} H_{j+1}`.
pub fn bernoulli_number_harmonic(k: usize) -> Rational {
    let sum: Rational = stirling2_row(k)
        .into_iter()
        .enumerate()
        .map(|(j, s)| Rational::sign_pow(j) * Rational::from(factorial(j) * s) * harmonic(j + 1))
        .sum();
    Rational::sign_pow(k + 1) * Rational::from(k) + sum
}

/// `B_k(x) = Σ_{j=0..k} a_{k,j} 𝓗_j(x)`.
pub fn bernoulli_poly(k: usize) -> Polynomial {
    signed_surjections(k)
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(j, a)| script_h_poly(j).scale(a))
        .sum()
}

/// `B_k(x) = Σ_j a_{k,j} H_{j+1}^(x) - k x^(k-1)`, with the shifted family
/// `H_{j+1}^(x) = 𝓗_j(x + 1)`.
pub fn bernoulli_poly_alt(k: usize) -> Polynomial {
    let one = Rational::one();
    let sum: Polynomial = signed_surjections(k)
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(j, a)| script_h_poly(j).compose_shift(&one).scale(a))
        .sum();
    if k == 0 {
        return sum;
    }
    &sum - &Polynomial::monomial(Rational::from(k), k - 1)
}

/// `B_k(n + 1) = Σ_j a_{k,j} H_{j+1}^(n)` as a polynomial in `n`, then
/// substituted `n = x - 1`.
pub fn bernoulli_from_powersum(k: usize) -> Polynomial {
    let in_n: Polynomial = signed_surjections(k)
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(j, a)| hyperharmonic_poly(j).scale(a))
        .sum();
    in_n.compose_shift(&-Rational::one())
}

/// `𝓗_k(x) = (1/k!) Σ_{j=0..k} [k, j] B_j(x)`.
pub fn script_h_from_bernoulli(k: usize) -> Polynomial {
    let inv = Rational::from(factorial(k)).recip().expect("k! > 0");
    let sum: Polynomial = stirling1_row(k)
        .into_iter()
        .enumerate()
        .map(|(j, c)| bernoulli_poly(j).scale(&Rational::from(c)))
        .sum();
    sum.scale(&inv)
}

#[derive(Default)]
struct Tables {
    numbers: Vec<Rational>,
    polys: Vec<Polynomial>,
}

/// Append-only table of `B_k` and `B_k(x)`, safe to share between threads.
///
/// Entries are computed on first request and never change afterwards, so a
/// lookup returns the same value as the uncached functions.
#[derive(Default)]
pub struct BernoulliCache {
    inner: RwLock<Tables>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.inner.read().expect("cache lock").numbers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn number(&self, k: usize) -> Rational {
        self.ensure(k);
        self.inner.read().expect("cache lock").numbers[k].clone()
    }

    pub fn poly(&self, k: usize) -> Polynomial {
        self.ensure(k);
        self.inner.read().expect("cache lock").polys[k].clone()
    }

    fn ensure(&self, k: usize) {
        if self.len() > k {
            return;
        }
        let mut tables = self.inner.write().expect("cache lock");
        while tables.numbers.len() <= k {
            let i = tables.numbers.len();
            let poly = bernoulli_poly(i);
            let number = bernoulli_number(i);
            assert_eq!(poly.coeff(0), number, "B_{i}(0) != B_{i}");
            tables.numbers.push(number);
            tables.polys.push(poly);
        }
    }
}
