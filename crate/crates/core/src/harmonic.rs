//! Harmonic and hyperharmonic numbers, and the polynomial families they
//! generate.
//!
//! Every function taking both arguments uses the order `(index, order)`, so
//! `f(index, order)` means `H_index^(order)`. Polynomials in the order
//! variable, such as [`hyperharmonic_poly`], are named by the fixed index.
//!
//! [`hyperharmonic_recursive`] is the reference definition. All the other
//! routes are checked against it.

use crate::combinatorics::{binomial, binomial_poly, factorial, falling_factorial, r_stirling1};
use crate::error::{domain, Error};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::series::TruncatedSeries;

fn int(n: usize) -> Rational {
    Rational::from(n)
}

fn signed(n: i64) -> Rational {
    Rational::from(n)
}

/// `1 + 1/2 + … + 1/n`, with `H_0 = 0`.
pub fn harmonic(n: usize) -> Rational {
    (1..=n).map(|i| Rational::frac(1, i as i64)).sum()
}

/// `H_index^(order)` by iterated partial sums, starting from
/// `H_m^(0) = 1/m` and `H_0^(r) = 0`.
pub fn hyperharmonic_recursive(index: usize, order: usize) -> Result<Rational, Error> {
    if index == 0 {
        if order == 0 {
            return Err(domain(
                "hyperharmonic_recursive",
                "H_0^(0) = 1/0 is undefined",
            ));
        }
        return Ok(Rational::zero());
    }
    let mut row: Vec<Rational> = (1..=index).map(|m| Rational::frac(1, m as i64)).collect();
    for _ in 0..order {
        let mut acc = Rational::zero();
        for v in row.iter_mut() {
            acc += &*v;
            *v = acc.clone();
        }
    }
    Ok(row.pop().expect("index >= 1"))
}

/// `C(n+r-1, r-1) (H_{n+r-1} - H_{r-1})`.
pub fn hyperharmonic_conway_guy(index: usize, order: usize) -> Result<Rational, Error> {
    if index == 0 || order == 0 {
        return Err(domain(
            "hyperharmonic_conway_guy",
            "index >= 1 and order >= 1 required",
        ));
    }
    let top = index + order - 1;
    Ok(binomial(&int(top), order - 1) * (harmonic(top) - harmonic(order - 1)))
}

/// `H_j^(n) = Σ_{t=1..j} C(n+j-t-1, j-t) / t`: a weighted sum of `1/1, …, 1/j`.
pub fn hyperharmonic_explicit(index: usize, order: usize) -> Result<Rational, Error> {
    if index == 0 {
        return Err(domain("hyperharmonic_explicit", "index >= 1 required"));
    }
    let (j, n) = (index as i64, order as i64);
    Ok((1..=j)
        .map(|t| binomial(&signed(n + j - t - 1), (j - t) as usize) / signed(t))
        .sum())
}

/// `H_n^(r) = [n+r, r+1]_r / n!`.
pub fn hyperharmonic_via_rstirling(index: usize, order: usize) -> Result<Rational, Error> {
    if index == 0 {
        return Err(domain("hyperharmonic_via_rstirling", "index >= 1 required"));
    }
    let count = r_stirling1(index + order, order + 1, order)?;
    Ok(Rational::from(count) / Rational::from(factorial(index)))
}

/// `d/dx C(x+n+r-1, n)` at `x = 0`, which equals `H_n^(r)`.
pub fn hyperharmonic_via_derivative(index: usize, order: usize) -> Result<Rational, Error> {
    if index == 0 {
        return Err(domain(
            "hyperharmonic_via_derivative",
            "index >= 1 required",
        ));
    }
    let offset = signed(index as i64 + order as i64 - 1);
    Ok(binomial_poly(&offset, index)
        .derivative()
        .eval(&Rational::zero()))
}

/// The degree-`j` polynomial `p` with `p(n) = H_{j+1}^(n)` for every `n >= 0`.
pub fn hyperharmonic_poly(j: usize) -> Polynomial {
    let j = j as i64;
    (1..=j + 1)
        .map(|t| binomial_poly(&signed(j - t), (j + 1 - t) as usize).scale(&Rational::frac(1, t)))
        .sum()
}

/// Negative order `H_n^(-r)` by the three-branch definition:
/// `(-1)^r r! / n^(r+1 falling)` for `n > r`, an alternating binomial sum for
/// `r >= n > 1`, and `1` for `n = 1`.
pub fn hyperharmonic_negative(index: usize, order: usize) -> Result<Rational, Error> {
    if index == 0 || order == 0 {
        return Err(domain(
            "hyperharmonic_negative",
            "index >= 1 and order >= 1 required",
        ));
    }
    let (n, r) = (index, order);
    if n == 1 {
        return Ok(Rational::one());
    }
    if n > r {
        let numer = Rational::sign_pow(r) * Rational::from(factorial(r));
        return Ok(numer / falling_factorial(&int(n), r + 1));
    }
    Ok((0..n)
        .map(|i| Rational::sign_pow(i) * binomial(&int(r), i) / int(n - i))
        .sum())
}

/// Negative order `H_{j+1}^(-n)` by the single-sum form
/// `Σ_{i=0..j} (-1)^i C(n, i) / (j+1-i)`, with `index = j + 1`.
///
/// Kept separate from [`hyperharmonic_negative`] so the two can be compared.
pub fn hyperharmonic_negative_unified(index: usize, order: usize) -> Result<Rational, Error> {
    if index == 0 || order == 0 {
        return Err(domain(
            "hyperharmonic_negative_unified",
            "index >= 1 and order >= 1 required",
        ));
    }
    if index == 1 {
        return Ok(Rational::one());
    }
    Ok(negative_unified_sum(index - 1, &int(order)))
}

/// The alternating sum without the `j = 0` special case.
pub(crate) fn negative_unified_sum(j: usize, n: &Rational) -> Rational {
    (0..=j)
        .map(|i| Rational::sign_pow(i) * binomial(n, i) / int(j + 1 - i))
        .sum()
}

/// `𝓗_j(x) = H_{j+1}^(x-1)`.
pub fn script_h_poly(j: usize) -> Polynomial {
    hyperharmonic_poly(j).compose_shift(&signed(-1))
}

/// Harmonic polynomial `H_j(x) = Σ_{t=1..j+1} C(j+1-t-x, j+1-t) / t`.
pub fn harmonic_poly(j: usize) -> Polynomial {
    (1..=j + 1)
        .map(|t| {
            let k = j + 1 - t;
            binomial_poly(&int(k), k)
                .reflect()
                .scale(&Rational::frac(1, t as i64))
        })
        .sum()
}

/// `H_j(x) = Σ_{i=0..j} (-1)^i C(x-1, i) / (j+1-i)`.
pub fn harmonic_poly_negative_rep(j: usize) -> Polynomial {
    (0..=j)
        .map(|i| binomial_poly(&signed(-1), i).scale(&(Rational::sign_pow(i) / int(j + 1 - i))))
        .sum()
}

/// Expansion of `-ln(1-t) / (t (1-t)^(1-x))` through `t^order`: the product
/// of `Σ t^j/(j+1)` and `(1-t)^(x-1) = Σ (-1)^j C(x-1, j) t^j`.
pub fn harmonic_gf_series(order: usize) -> TruncatedSeries {
    let log_part = TruncatedSeries::new(
        order,
        (0..=order)
            .map(|j| Polynomial::constant(Rational::frac(1, j as i64 + 1)))
            .collect(),
    );
    let power_part = TruncatedSeries::new(
        order,
        (0..=order)
            .map(|j| binomial_poly(&signed(-1), j).scale(&Rational::sign_pow(j)))
            .collect(),
    );
    log_part.mul(&power_part).expect("same order")
}

/// `H_index^(order)` for any integer order: recursive for `order >= 0`,
/// three-branch negative-order definition otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HyperharmonicQuery {
    pub index: i64,
    pub order: i64,
}

impl HyperharmonicQuery {
    pub fn new(index: i64, order: i64) -> Result<Self, Error> {
        let q = HyperharmonicQuery { index, order };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<(), Error> {
        let ok = if self.order >= 0 {
            self.index >= 0 && !(self.index == 0 && self.order == 0)
        } else {
            self.index >= 1
        };
        if ok {
            Ok(())
        } else {
            Err(domain(
                "hyperharmonic",
                format!(
                    "need index >= 0 with order >= 0 (not both zero), or index >= 1 with order < 0; got index={}, order={}",
                    self.index, self.order
                ),
            ))
        }
    }

    pub fn evaluate(&self) -> Result<Rational, Error> {
        self.validate()?;
        let index = self.index as usize;
        if self.order >= 0 {
            hyperharmonic_recursive(index, self.order as usize)
        } else {
            hyperharmonic_negative(index, self.order.unsigned_abs() as usize)
        }
    }
}
