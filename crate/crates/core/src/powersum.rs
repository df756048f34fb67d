//! Sums of powers `S_k(n) = 1^k + … + n^k` and of arithmetic progressions,
//! by direct summation and by closed forms built from Stirling numbers,
//! hyperharmonic numbers and Bernoulli polynomials.
//!
//! [`powersum_direct`] and [`progression_direct`] are the reference values.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Pow;

use crate::bernoulli::{bernoulli_number, bernoulli_poly};
use crate::combinatorics::{
    binomial, binomial_poly, factorial, r_stirling1, rising_factorial, signed_surjections,
    stirling2_row,
};
use crate::error::{domain, Error};
use crate::harmonic::{hyperharmonic_explicit, hyperharmonic_poly};
use crate::poly::Polynomial;
use crate::rational::Rational;

fn int(n: usize) -> Rational {
    Rational::from(n)
}

/// `(-1)^(k+1) / (k+1)`, the prefactor shared by most closed forms.
fn prefactor(k: usize) -> Rational {
    Rational::sign_pow(k + 1) / int(k + 1)
}

/// `(-1)^j j! {k+1, j}` for `j = 0..=k+1`.
fn weights(k: usize) -> Vec<Rational> {
    stirling2_row(k + 1)
        .into_iter()
        .enumerate()
        .map(|(j, s)| Rational::sign_pow(j) * Rational::from(factorial(j) * s))
        .collect()
}

/// Limits on the arguments of the direct sums, which cost `O(n)` big-integer
/// powers. The library functions themselves are unguarded; callers holding
/// untrusted input go through [`DirectSumGuard::check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DirectSumGuard {
    pub max_k: usize,
    pub max_n: usize,
}

impl Default for DirectSumGuard {
    fn default() -> Self {
        DirectSumGuard {
            max_k: 64,
            max_n: 1_000_000,
        }
    }
}

impl DirectSumGuard {
    pub fn check(&self, k: usize, n: usize) -> Result<(), Error> {
        if k > self.max_k {
            return Err(Error::ResourceLimit(format!("k = {k} > {}", self.max_k)));
        }
        if n > self.max_n {
            return Err(Error::ResourceLimit(format!("n = {n} > {}", self.max_n)));
        }
        Ok(())
    }
}

pub fn powersum_direct(k: usize, n: usize) -> BigInt {
    (1..=n).map(|i| Pow::pow(BigInt::from(i), k)).sum()
}

/// `S_k(n) = Σ_{j=1..k} a_{k,j} C(n+j, j+1)` for `k >= 1`.
pub fn powersum_gould(k: usize, n: usize) -> Result<Rational, Error> {
    if k == 0 {
        return Err(domain("powersum_gould", "k >= 1 required"));
    }
    let n = int(n);
    Ok(signed_surjections(k)
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, a)| a * binomial(&(&n + int(j)), j + 1))
        .sum())
}

/// The hyperharmonic expansion of `S_k(n)`: the coefficient of each
/// `H_{j+1}^(n)` and the remaining constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperharmonicExpansion {
    /// `coefficients[i]` multiplies `H_{i+2}^(n)`, i.e. `j = i + 1`.
    pub coefficients: Vec<Rational>,
    pub constant: Rational,
}

impl HyperharmonicExpansion {
    pub fn new(k: usize) -> Self {
        let pre = prefactor(k);
        let w = weights(k);
        let coefficients: Vec<Rational> = w[1..].iter().map(|c| c * &pre).collect();
        let constant = -coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| c / int(i + 2))
            .sum::<Rational>();
        HyperharmonicExpansion {
            coefficients,
            constant,
        }
    }

    /// Coefficient of `H_index^(n)`.
    pub fn coefficient_of(&self, index: usize) -> Rational {
        index
            .checked_sub(2)
            .and_then(|i| self.coefficients.get(i).cloned())
            .unwrap_or_default()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let sum: Polynomial = self
            .coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| hyperharmonic_poly(i + 1).scale(c))
            .sum();
        &sum + &Polynomial::constant(self.constant.clone())
    }
}

/// `S_k(n) = ((-1)^(k+1)/(k+1)) Σ_{j=1..k+1} (-1)^j j! {k+1, j} (H_{j+1}^(n) - 1/(j+1))`.
pub fn powersum_hyperharmonic(k: usize, n: usize) -> Result<Rational, Error> {
    if n == 0 {
        return Err(domain("powersum_hyperharmonic", "n >= 1 required"));
    }
    let w = weights(k);
    let mut sum = Rational::zero();
    for (j, wj) in w.iter().enumerate().skip(1) {
        let h = hyperharmonic_explicit(j + 1, n)?;
        sum += wj * (h - Rational::frac(1, j as i64 + 1));
    }
    Ok(prefactor(k) * sum)
}

/// `V_{k,t}(n) = Σ_{i=t..k+1} (-1)^i i! {k+1, i} C(n+i-t, i+1-t)`.
pub fn v_poly(k: usize, t: usize) -> Result<Polynomial, Error> {
    if t == 0 || t > k + 1 {
        return Err(domain(
            "v_poly",
            format!("1 <= t <= k+1 required, got k={k}, t={t}"),
        ));
    }
    let w = weights(k);
    Ok((t..=k + 1)
        .map(|i| binomial_poly(&int(i - t), i + 1 - t).scale(&w[i]))
        .sum())
}

/// `((-1)^(k+1)/(k+1)) Σ_{t=1..k+1} V_{k,t}(x) / t`.
pub fn weighted_polynomial(k: usize) -> Polynomial {
    let sum: Polynomial = (1..=k + 1)
        .map(|t| {
            v_poly(k, t)
                .expect("t in range")
                .scale(&Rational::frac(1, t as i64))
        })
        .sum();
    sum.scale(&prefactor(k))
}

/// `S_k(n)` as a weighted sum of `1/1, …, 1/(k+1)`.
pub fn powersum_weighted(k: usize, n: usize) -> Result<Rational, Error> {
    if n == 0 {
        return Err(domain("powersum_weighted", "n >= 1 required"));
    }
    Ok(weighted_polynomial(k).eval(&int(n)))
}

/// `S_k(n) = ((-1)^(k+1)/(k+1)) Σ_j ((-1)^j/(j+1)) {k+1, j} ([n+j+1, n+1]_n - j!)`.
pub fn powersum_rstirling(k: usize, n: usize) -> Result<Rational, Error> {
    if n == 0 {
        return Err(domain("powersum_rstirling", "n >= 1 required"));
    }
    let mut sum = Rational::zero();
    for (j, s) in stirling2_row(k + 1).into_iter().enumerate().skip(1) {
        let cycles = Rational::from(r_stirling1(n + j + 1, n + 1, n)?);
        let bracket = cycles - Rational::from(factorial(j));
        sum += Rational::sign_pow(j) * Rational::from(s) * bracket / int(j + 1);
    }
    Ok(prefactor(k) * sum)
}

/// `Σ_{i=1..=last} (i-1)! C(j+1, i) n^(j+1-i rising)`. With `last = j + 1`
/// this equals `[n+j+1, n+1]_n`.
pub fn rising_factorial_sum(n: usize, j: usize, last: usize) -> Rational {
    let n = int(n);
    (1..=last)
        .map(|i| {
            Rational::from(factorial(i - 1))
                * binomial(&int(j + 1), i)
                * rising_factorial(&n, j + 1 - i)
        })
        .sum()
}

/// [`powersum_rstirling`] with the r-Stirling numbers replaced by rising
/// factorials; the `i = j + 1` term cancels the `-j!` and is left out.
pub fn powersum_rising(k: usize, n: usize) -> Result<Rational, Error> {
    if n == 0 {
        return Err(domain("powersum_rising", "n >= 1 required"));
    }
    let sum: Rational = stirling2_row(k + 1)
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(j, s)| {
            Rational::sign_pow(j) * Rational::from(s) * rising_factorial_sum(n, j, j) / int(j + 1)
        })
        .sum();
    Ok(prefactor(k) * sum)
}

/// The unique polynomial `S_k(x)` of degree `k+1` with `S_k(n) = 1^k + … + n^k`.
pub fn powersum_polynomial(k: usize) -> Polynomial {
    if k == 0 {
        return Polynomial::x();
    }
    signed_surjections(k)
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, a)| binomial_poly(&int(j), j + 1).scale(a))
        .sum()
}

/// `(B_{k+1}(n+1) - B_{k+1}) / (k+1)` for `k >= 1`. At `k = 0` the relation
/// is off by one under `B_1 = -1/2`.
pub fn powersum_bernoulli(k: usize, n: usize) -> Result<Rational, Error> {
    if k == 0 {
        return Err(domain("powersum_bernoulli", "k >= 1 required"));
    }
    let b = bernoulli_poly(k + 1);
    Ok((b.eval(&int(n + 1)) - bernoulli_number(k + 1)) / int(k + 1))
}

/// `S_k(-n)` from negative-order hyperharmonic numbers, for `n >= 1`.
pub fn powersum_negative(k: usize, n: usize) -> Result<Rational, Error> {
    if n == 0 {
        return Err(domain("powersum_negative", "n >= 1 required"));
    }
    Ok(prefactor(k) * negative_route_sum(k, &int(n)))
}

/// `Σ_{j=1..k+1} (-1)^j j! {k+1, j} Σ_{i=1..j} (-1)^i C(m, i) / (j+1-i)`.
fn negative_route_sum(k: usize, m: &Rational) -> Rational {
    weights(k)
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, w)| {
            let inner: Rational = (1..=j)
                .map(|i| Rational::sign_pow(i) * binomial(m, i) / int(j + 1 - i))
                .sum();
            w * inner
        })
        .sum()
}

/// `S_k(n)` through the reflection `S_k(-(n+1)) = (-1)^(k+1) S_k(n)` applied to
/// the negative-argument form, for `k >= 1`, `n >= 0`.
pub fn powersum_alt(k: usize, n: usize) -> Result<Rational, Error> {
    if k == 0 {
        return Err(domain("powersum_alt", "k >= 1 required"));
    }
    Ok(negative_route_sum(k, &int(n + 1)) / int(k + 1))
}

/// `Σ_{j=1..k+1} (-1)^j (j-1)! {k+1, j}`, which vanishes for `k >= 1`.
pub fn boya_sum(k: usize) -> Rational {
    stirling2_row(k + 1)
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(j, s)| Rational::sign_pow(j) * Rational::from(factorial(j - 1) * s))
        .sum()
}

/// `Σ_{j=1..n} (j+x)^k`, checked against `S_k(n+x) - S_k(x)`.
pub fn shifted_sum_check(k: usize, x: &Rational, n: usize) -> Result<Rational, Error> {
    let direct: Rational = (1..=n).map(|j| (int(j) + x).pow(k as u32)).sum();
    let s = powersum_polynomial(k);
    let closed = s.eval(&(int(n) + x)) - s.eval(x);
    if direct != closed {
        return Err(Error::IdentityViolation {
            identity: "shifted_sum",
            lhs: direct.to_string(),
            rhs: closed.to_string(),
        });
    }
    Ok(direct)
}

/// The progression `r, r+m, r+2m, …` with `n` terms raised to the power `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProgressionSpec {
    pub first: usize,
    pub difference: usize,
    pub power: usize,
    pub terms: usize,
}

impl ProgressionSpec {
    pub fn new(first: usize, difference: usize, power: usize, terms: usize) -> Result<Self, Error> {
        if difference == 0 {
            return Err(domain("progression", "common difference m >= 1 required"));
        }
        if terms == 0 {
            return Err(domain("progression", "term count n >= 1 required"));
        }
        Ok(ProgressionSpec {
            first,
            difference,
            power,
            terms,
        })
    }
}

/// `Σ_{j=1..n} (r + (j-1)m)^k`.
pub fn progression_direct(spec: &ProgressionSpec) -> BigInt {
    (0..spec.terms)
        .map(|j| Pow::pow(BigInt::from(spec.first + j * spec.difference), spec.power))
        .sum()
}

/// `(-1)^(k+1) m^k/(k+1) Σ_t (V_{k,t}(n-1+r/m) - V_{k,t}(r/m-1)) / t`.
pub fn progression_closed(spec: &ProgressionSpec) -> Rational {
    let k = spec.power;
    let ratio = Rational::frac(spec.first as i64, spec.difference as i64);
    let upper = &ratio + int(spec.terms) - Rational::one();
    let lower = &ratio - Rational::one();
    let sum: Rational = (1..=k + 1)
        .map(|t| {
            let v = v_poly(k, t).expect("t in range");
            (v.eval(&upper) - v.eval(&lower)) / int(t)
        })
        .sum();
    prefactor(k) * Rational::from(spec.difference).pow(k as u32) * sum
}

/// Which formula evaluates `S_k(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PowerSumMethod {
    Direct,
    Gould,
    Hyperharmonic,
    Weighted,
    RStirling,
    BernoulliPoly,
    AltNegativeRoute,
}

impl PowerSumMethod {
    pub const ALL: [PowerSumMethod; 7] = [
        PowerSumMethod::Direct,
        PowerSumMethod::Gould,
        PowerSumMethod::Hyperharmonic,
        PowerSumMethod::Weighted,
        PowerSumMethod::RStirling,
        PowerSumMethod::BernoulliPoly,
        PowerSumMethod::AltNegativeRoute,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PowerSumMethod::Direct => "direct",
            PowerSumMethod::Gould => "gould",
            PowerSumMethod::Hyperharmonic => "hyperharmonic",
            PowerSumMethod::Weighted => "weighted",
            PowerSumMethod::RStirling => "rstirling",
            PowerSumMethod::BernoulliPoly => "bernoulli-poly",
            PowerSumMethod::AltNegativeRoute => "alt-negative-route",
        }
    }

    /// Whether the method is defined at `(k, n)`.
    pub fn admits(self, k: usize, n: usize) -> bool {
        match self {
            PowerSumMethod::Direct => true,
            PowerSumMethod::Gould
            | PowerSumMethod::AltNegativeRoute
            | PowerSumMethod::BernoulliPoly => k >= 1,
            PowerSumMethod::Hyperharmonic
            | PowerSumMethod::Weighted
            | PowerSumMethod::RStirling => n >= 1,
        }
    }

    pub fn evaluate(self, k: usize, n: usize) -> Result<Rational, Error> {
        match self {
            PowerSumMethod::Direct => Ok(Rational::from(powersum_direct(k, n))),
            PowerSumMethod::Gould => powersum_gould(k, n),
            PowerSumMethod::Hyperharmonic => powersum_hyperharmonic(k, n),
            PowerSumMethod::Weighted => powersum_weighted(k, n),
            PowerSumMethod::RStirling => powersum_rstirling(k, n),
            PowerSumMethod::BernoulliPoly => powersum_bernoulli(k, n),
            PowerSumMethod::AltNegativeRoute => powersum_alt(k, n),
        }
    }
}

impl fmt::Display for PowerSumMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PowerSumMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PowerSumMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| domain("powersum", format!("unknown method {s:?}")))
    }
}

/// `S_k(n)` by the chosen method, narrowed to an integer. A non-integral
/// closed-form value is reported as [`Error::NotInteger`].
pub fn powersum(method: PowerSumMethod, k: usize, n: usize) -> Result<BigInt, Error> {
    let value = method.evaluate(k, n)?;
    value.to_integer().ok_or_else(|| Error::NotInteger {
        what: "power sum",
        value: value.to_string(),
    })
}
