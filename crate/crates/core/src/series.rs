//! Power series in a formal variable `t`, truncated at a fixed order, whose
//! coefficients are polynomials in `x`.

use crate::error::Error;
use crate::poly::Polynomial;

/// Always holds exactly `order + 1` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Polynomial>,
}

impl TruncatedSeries {
    /// Pads with zeros or truncates so the series has exactly `order + 1` terms.
    pub fn new(order: usize, mut coeffs: Vec<Polynomial>) -> Self {
        coeffs.resize(order + 1, Polynomial::zero());
        TruncatedSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::new(order, vec![Polynomial::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &Polynomial {
        &self.coeffs[j]
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        let coeffs = (0..=self.order())
            .map(|j| {
                (0..=j)
                    .map(|i| &self.coeffs[i] * &other.coeffs[j - i])
                    .sum()
            })
            .collect();
        Ok(TruncatedSeries { coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly_q;
    use crate::rational::Rational;

    fn consts(vals: &[(i64, i64)]) -> Vec<Polynomial> {
        vals.iter()
            .map(|&(p, q)| Polynomial::constant(Rational::frac(p, q)))
            .collect()
    }

    #[test]
    fn identity_element() {
        let one = TruncatedSeries::one(4);
        assert_eq!(one.mul(&one).unwrap(), one);
    }

    #[test]
    fn square_of_one_plus_t() {
        let a = TruncatedSeries::new(1, consts(&[(1, 1), (1, 1)]));
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq.coeffs(), &consts(&[(1, 1), (2, 1)])[..]);
    }

    #[test]
    fn log_times_binomial_first_coefficient() {
        // (1, 1/2) * (1, -(x-1)) at order 1
        let a = TruncatedSeries::new(1, consts(&[(1, 1), (1, 2)]));
        let b = TruncatedSeries::new(1, vec![Polynomial::one(), poly_q(&[(1, 1), (-1, 1)])]);
        let c = a.mul(&b).unwrap();
        assert_eq!(c.coeff(1), &poly_q(&[(3, 2), (-1, 1)]));
    }

    #[test]
    fn order_mismatch_is_rejected() {
        let err = TruncatedSeries::one(2)
            .mul(&TruncatedSeries::one(3))
            .unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 2, right: 3 });
    }

    #[test]
    fn exact_length_invariant() {
        let s = TruncatedSeries::new(3, consts(&[(1, 1), (1, 1), (1, 1), (1, 1), (9, 1)]));
        assert_eq!(s.coeffs().len(), 4);
        assert_eq!(TruncatedSeries::new(0, vec![]).coeffs().len(), 1);
    }
}
