//! Cross-module identity sweeps. Each closed form is compared with an
//! independent reference: direct summation, the hyperharmonic recursion, or a
//! test-local oracle.

use hypersum_core::bernoulli::*;
use hypersum_core::combinatorics::*;
use hypersum_core::harmonic::*;
use hypersum_core::powersum::*;
use hypersum_core::{Polynomial, Rational};
use num_bigint::BigUint;

fn q(p: i64, d: i64) -> Rational {
    Rational::frac(p, d)
}

fn int(n: usize) -> Rational {
    Rational::from(n)
}

/// Lagrange interpolation through `(x_i, y_i)`, used as a second witness for
/// the power-sum polynomials.
fn interpolate(points: &[(Rational, Rational)]) -> Polynomial {
    points
        .iter()
        .enumerate()
        .map(|(i, (xi, yi))| {
            let mut basis = Polynomial::constant(yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    let factor = Polynomial::linear(-xj).scale(&(xi - xj).recip().unwrap());
                    basis = &basis * &factor;
                }
            }
            basis
        })
        .sum()
}

/// Bell numbers from the Bell triangle.
fn bell_numbers(max: usize) -> Vec<BigUint> {
    let mut bells = vec![BigUint::from(1u32)];
    let mut row = vec![BigUint::from(1u32)];
    for _ in 0..max {
        let mut next = vec![row.last().unwrap().clone()];
        for v in &row {
            let add = next.last().unwrap() + v;
            next.push(add);
        }
        bells.push(next[0].clone());
        row = next;
    }
    bells
}

#[test]
fn alternating_binomial_sum() {
    for n in 1..=20usize {
        for r in 0..n {
            let lhs: Rational = (0..=r)
                .map(|i| Rational::sign_pow(i) * binomial(&int(r), i) / int(n - i))
                .sum();
            let rhs = Rational::sign_pow(r) / (int(n - r) * binomial(&int(n), r));
            assert_eq!(lhs, rhs, "n={n} r={r}");
        }
    }
}

#[test]
fn stirling2_row_sums_are_bell_numbers() {
    let bells = bell_numbers(12);
    for k in 0..=12 {
        let sum: BigUint = stirling2_row(k).into_iter().sum();
        assert_eq!(sum, bells[k], "k={k}");
    }
}

#[test]
fn rstirling_as_rising_factorials() {
    for n in 1..=10 {
        for j in 1..=10 {
            let lhs = Rational::from(r_stirling1(n + j + 1, n + 1, n).unwrap());
            let rhs: Rational = (1..=j + 1)
                .map(|i| {
                    Rational::from(factorial(i - 1))
                        * binomial(&int(j + 1), i)
                        * rising_factorial(&int(n), j + 1 - i)
                })
                .sum();
            assert_eq!(lhs, rhs, "n={n} j={j}");
        }
    }
}

#[test]
fn four_routes_to_hyperharmonic_numbers() {
    for n in 1..=15 {
        for r in 1..=15 {
            let reference = hyperharmonic_recursive(n, r).unwrap();
            assert_eq!(
                hyperharmonic_conway_guy(n, r).unwrap(),
                reference,
                "conway-guy n={n} r={r}"
            );
            assert_eq!(
                hyperharmonic_explicit(n, r).unwrap(),
                reference,
                "explicit n={n} r={r}"
            );
            assert_eq!(
                hyperharmonic_via_rstirling(n, r).unwrap(),
                reference,
                "r-stirling n={n} r={r}"
            );
        }
    }
}

#[test]
fn index_and_order_are_not_interchangeable() {
    // H_3^(5) and H_5^(3): the API roles must not be swapped silently.
    let a = hyperharmonic_recursive(3, 5).unwrap();
    let b = hyperharmonic_recursive(5, 3).unwrap();
    assert_ne!(a, b);
    assert_eq!(hyperharmonic_explicit(3, 5).unwrap(), a);
    assert_eq!(hyperharmonic_poly(2).eval(&int(5)), a);
    assert_eq!(hyperharmonic_poly(4).eval(&int(3)), b);
}

#[test]
fn hyperharmonic_poly_interpolates_recursion() {
    for j in 0..=12 {
        let p = hyperharmonic_poly(j);
        for n in 0..=15 {
            assert_eq!(
                p.eval(&int(n)),
                hyperharmonic_recursive(j + 1, n).unwrap(),
                "j={j} n={n}"
            );
        }
    }
}

#[test]
fn hyperharmonic_as_binomial_derivative() {
    for n in 1..=10 {
        for r in 1..=10 {
            let offset = int(n + r - 1);
            let d = binomial_poly(&offset, n)
                .derivative()
                .eval(&Rational::zero());
            assert_eq!(d, hyperharmonic_recursive(n, r).unwrap(), "n={n} r={r}");
            assert_eq!(hyperharmonic_via_derivative(n, r).unwrap(), d);
        }
    }
}

#[test]
fn negative_order_definitions_agree() {
    for j in 0..=15 {
        for n in 1..=15 {
            assert_eq!(
                hyperharmonic_negative_unified(j + 1, n).unwrap(),
                hyperharmonic_negative(j + 1, n).unwrap(),
                "j={j} n={n}"
            );
        }
    }
}

#[test]
fn harmonic_poly_is_reflected_script_h() {
    for j in 0..=12 {
        let reflected = script_h_poly(j).compose_affine(&q(-1, 1), &q(2, 1));
        assert_eq!(harmonic_poly(j), reflected, "j={j}");
        // H_j(x) = H_{j+1}^(1-x)
        assert_eq!(
            harmonic_poly(j),
            hyperharmonic_poly(j).compose_affine(&q(-1, 1), &q(1, 1))
        );
    }
}

#[test]
fn shifted_script_h_is_hyperharmonic_poly() {
    for j in 0..=12 {
        assert_eq!(
            script_h_poly(j).compose_shift(&q(1, 1)),
            hyperharmonic_poly(j)
        );
    }
    assert_eq!(script_h_poly(0).compose_shift(&q(1, 1)), Polynomial::one());
}

#[test]
fn every_powersum_method_matches_direct_sum() {
    for k in 0..=12 {
        for n in 1..=25 {
            let expected = Rational::from(powersum_direct(k, n));
            for method in PowerSumMethod::ALL {
                if method.admits(k, n) {
                    assert_eq!(
                        method.evaluate(k, n).unwrap(),
                        expected,
                        "{method} k={k} n={n}"
                    );
                }
            }
            assert_eq!(powersum_rising(k, n).unwrap(), expected);
        }
    }
}

#[test]
fn powersum_polynomial_matches_interpolation() {
    for k in 0..=10 {
        let points: Vec<(Rational, Rational)> = (0..=k + 1)
            .map(|n| (int(n), Rational::from(powersum_direct(k, n))))
            .collect();
        assert_eq!(powersum_polynomial(k), interpolate(&points), "k={k}");
        assert_eq!(weighted_polynomial(k), powersum_polynomial(k));
        assert_eq!(
            HyperharmonicExpansion::new(k).to_polynomial(),
            powersum_polynomial(k)
        );
    }
}

#[test]
fn powersum_derivative_identity() {
    for k in 1..=12 {
        let lhs = powersum_polynomial(k).derivative();
        let rhs = &powersum_polynomial(k - 1).scale(&int(k))
            + &Polynomial::constant(Rational::sign_pow(k) * bernoulli_number(k));
        assert_eq!(lhs, rhs, "k={k}");
    }
}

#[test]
fn powersum_derivative_through_hyperharmonics() {
    for k in 1..=10 {
        let derivative = powersum_polynomial(k).derivative();
        let a = signed_surjections(k);
        for n in 1..=10 {
            let rhs: Rational = (1..=k)
                .map(|j| &a[j] * hyperharmonic_recursive(j + 1, n).unwrap())
                .sum();
            assert_eq!(derivative.eval(&int(n)), rhs, "k={k} n={n}");
        }
    }
}

#[test]
fn powersum_symmetry() {
    for k in 1..=12 {
        let s = powersum_polynomial(k);
        for n in 0..=15i64 {
            let lhs = s.eval(&Rational::from(-(n + 1)));
            let rhs = Rational::sign_pow(k + 1) * s.eval(&Rational::from(n));
            assert_eq!(lhs, rhs, "k={k} n={n}");
        }
    }
}

#[test]
fn negative_argument_route() {
    for k in 0..=10 {
        let s = powersum_polynomial(k);
        for n in 1..=15 {
            assert_eq!(
                powersum_negative(k, n).unwrap(),
                s.eval(&-int(n)),
                "k={k} n={n}"
            );
        }
    }
}

#[test]
fn progression_closed_form() {
    for k in 0..=8 {
        for r in 1..=6 {
            for m in 1..=6 {
                for n in 1..=12 {
                    let spec = ProgressionSpec::new(r, m, k, n).unwrap();
                    let direct = Rational::from(progression_direct(&spec));
                    assert_eq!(progression_closed(&spec), direct, "{spec:?}");
                }
            }
        }
    }
}

#[test]
fn shifted_power_sums() {
    for k in 0..=8 {
        for x in [q(0, 1), q(1, 2), q(-1, 1), q(7, 3), q(-5, 4)] {
            for n in 1..=8 {
                shifted_sum_check(k, &x, n).unwrap();
            }
        }
    }
}

#[test]
fn bernoulli_number_formulas_agree() {
    for k in 0..=30 {
        let b = bernoulli_number(k);
        assert_eq!(bernoulli_number_harmonic(k), b, "harmonic k={k}");
        if k >= 1 {
            assert_eq!(bernoulli_number_variant(k).unwrap(), b, "variant k={k}");
        }
    }
}

#[test]
fn bernoulli_stirling1_recursion() {
    for k in 1..=20 {
        let lhs: Rational = stirling1_row(k)
            .into_iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| Rational::from(c) * bernoulli_number(j))
            .sum();
        let rhs = -Rational::from(factorial(k - 1)) / int(k + 1);
        assert_eq!(lhs, rhs, "k={k}");
    }
}

#[test]
fn bernoulli_difference_and_derivative() {
    for k in 0..=12 {
        let b = bernoulli_poly(k);
        let diff = &b.compose_shift(&q(1, 1)) - &b;
        let expected = if k == 0 {
            Polynomial::zero()
        } else {
            Polynomial::monomial(int(k), k - 1)
        };
        assert_eq!(diff, expected, "difference k={k}");
        assert_eq!(
            bernoulli_poly(k + 1).derivative(),
            b.scale(&int(k + 1)),
            "derivative k={k}"
        );
    }
}

#[test]
fn bernoulli_polynomials_rebuild_power_sums() {
    for k in 1..=10 {
        let b = bernoulli_poly(k + 1);
        let bk1 = bernoulli_number(k + 1);
        for n in 0..=15 {
            let s = (b.eval(&int(n + 1)) - &bk1) / int(k + 1);
            assert_eq!(s, Rational::from(powersum_direct(k, n)), "k={k} n={n}");
        }
    }
}

#[test]
fn generating_function_and_reflection() {
    let series = harmonic_gf_series(10);
    for j in 0..=10 {
        let reflected = script_h_poly(j).compose_affine(&q(-1, 1), &q(2, 1));
        assert_eq!(series.coeff(j), &harmonic_poly(j));
        assert_eq!(series.coeff(j), &reflected);
    }
}
