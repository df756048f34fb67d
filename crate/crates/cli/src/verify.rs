//! The identity-verification suite: every identity is a sweep over integer
//! parameter cells, each cell comparing two independently computed sides.

use std::time::Instant;

use hypersum_core::bernoulli::*;
use hypersum_core::combinatorics::*;
use hypersum_core::harmonic::*;
use hypersum_core::powersum::*;
use hypersum_core::{Error, Polynomial, Rational};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

/// Sweep bounds shared by every identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub k_max: usize,
    pub n_max: usize,
}

impl Bounds {
    /// Largest accepted bounds; beyond these a sweep stops being interactive.
    pub const LIMIT: Bounds = Bounds {
        k_max: 40,
        n_max: 200,
    };

    pub fn new(k_max: i64, n_max: i64) -> Result<Self, Error> {
        if k_max < 1 || n_max < 1 {
            return Err(Error::Domain {
                op: "verify",
                requirement: format!("k_max >= 1 and n_max >= 1 required, got {k_max} and {n_max}"),
            });
        }
        let (k, n) = (k_max as u64, n_max as u64);
        if k > Self::LIMIT.k_max as u64 || n > Self::LIMIT.n_max as u64 {
            return Err(Error::ResourceLimit(format!(
                "verify bounds are capped at k_max <= {}, n_max <= {}",
                Self::LIMIT.k_max,
                Self::LIMIT.n_max
            )));
        }
        Ok(Bounds {
            k_max: k as usize,
            n_max: n as usize,
        })
    }
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            k_max: 10,
            n_max: 15,
        }
    }
}

/// One parameter assignment of a sweep, in the identity's parameter order.
pub type Cell = Vec<i64>;

type Sides = Result<(String, String), Error>;

/// A named identity: its parameter names, the cells it sweeps and the
/// check comparing both sides at one cell.
pub struct Identity {
    pub id: &'static str,
    pub aliases: &'static [&'static str],
    pub summary: &'static str,
    pub params: &'static [&'static str],
    cells: fn(&Bounds) -> Vec<Cell>,
    check: fn(&[i64]) -> Sides,
}

impl Identity {
    pub fn cells(&self, bounds: &Bounds) -> Vec<Cell> {
        (self.cells)(bounds)
    }

    pub fn check(&self, cell: &[i64]) -> Sides {
        (self.check)(cell)
    }

    /// Runs the whole sweep; cells run in parallel, failures keep cell order.
    pub fn run(&self, bounds: &Bounds) -> IdentityReport {
        let start = Instant::now();
        let cells = self.cells(bounds);
        let failures: Vec<Failure> = cells
            .par_iter()
            .filter_map(|cell| {
                let (lhs, rhs) = match self.check(cell) {
                    Ok((lhs, rhs)) if lhs == rhs => return None,
                    Ok(sides) => sides,
                    Err(e) => ("error".to_string(), e.to_string()),
                };
                Some(Failure {
                    params: self
                        .params
                        .iter()
                        .copied()
                        .zip(cell.iter().copied())
                        .collect(),
                    lhs,
                    rhs,
                })
            })
            .collect();
        IdentityReport {
            identity_id: self.id,
            cells_checked: cells.len(),
            failures,
            elapsed_ms: start.elapsed().as_millis(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    #[serde(serialize_with = "serialize_params")]
    pub params: Vec<(&'static str, i64)>,
    pub lhs: String,
    pub rhs: String,
}

fn serialize_params<S: serde::Serializer>(
    params: &[(&'static str, i64)],
    serializer: S,
) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = serializer.serialize_map(Some(params.len()))?;
    for (name, value) in params {
        map.serialize_entry(name, value)?;
    }
    map.end()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity_id: &'static str,
    pub cells_checked: usize,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u128,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Looks an identity up by id or alias.
pub fn find(name: &str) -> Option<&'static Identity> {
    REGISTRY
        .iter()
        .find(|i| i.id == name || i.aliases.contains(&name))
}

/// Every identity, sorted by id.
pub fn registry() -> &'static [Identity] {
    REGISTRY
}

/// Runs several identities in parallel; reports keep the input order.
pub fn run_all(identities: &[&Identity], bounds: &Bounds) -> Vec<IdentityReport> {
    identities.par_iter().map(|i| i.run(bounds)).collect()
}

// ---------------------------------------------------------------------------
// cell generators

fn grid2(a: impl Iterator<Item = usize>, b: impl Fn(usize) -> Vec<usize>) -> Vec<Cell> {
    a.flat_map(|x| b(x).into_iter().map(move |y| vec![x as i64, y as i64]))
        .collect()
}

fn range(lo: usize, hi: usize) -> Vec<usize> {
    (lo..=hi).collect()
}

fn k0(b: &Bounds) -> Vec<Cell> {
    (0..=b.k_max).map(|k| vec![k as i64]).collect()
}

fn k1(b: &Bounds) -> Vec<Cell> {
    (1..=b.k_max).map(|k| vec![k as i64]).collect()
}

fn k0_n1(b: &Bounds) -> Vec<Cell> {
    grid2(0..=b.k_max, |_| range(1, b.n_max))
}

fn k1_n1(b: &Bounds) -> Vec<Cell> {
    grid2(1..=b.k_max, |_| range(1, b.n_max))
}

fn k1_n0(b: &Bounds) -> Vec<Cell> {
    grid2(1..=b.k_max, |_| range(0, b.n_max))
}

fn n1_r1(b: &Bounds) -> Vec<Cell> {
    grid2(1..=b.n_max, |_| range(1, b.n_max))
}

// ---------------------------------------------------------------------------
// helpers for checks

fn u(v: i64) -> usize {
    usize::try_from(v).expect("sweep parameters are non-negative")
}

fn int(v: usize) -> Rational {
    Rational::from(v)
}

fn sides(lhs: impl ToString, rhs: impl ToString) -> Sides {
    Ok((lhs.to_string(), rhs.to_string()))
}

fn direct(k: usize, n: usize) -> Rational {
    Rational::from(powersum_direct(k, n))
}

/// Bell numbers from the Bell triangle, an oracle independent of Stirling
/// recurrences.
fn bell(n: usize) -> BigUint {
    let mut row = vec![BigUint::from(1u32)];
    for _ in 0..n {
        let mut next = vec![row.last().expect("nonempty").clone()];
        for v in &row {
            let add = next.last().expect("nonempty") + v;
            next.push(add);
        }
        row = next;
    }
    row[0].clone()
}

/// The unique polynomial through the given points.
fn interpolate(points: &[(Rational, Rational)]) -> Polynomial {
    points
        .iter()
        .enumerate()
        .map(|(i, (xi, yi))| {
            let mut basis = Polynomial::constant(yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    let inv = (xi - xj).recip().expect("distinct nodes");
                    basis = &basis * &Polynomial::linear(-xj).scale(&inv);
                }
            }
            basis
        })
        .sum()
}

/// Shift arguments for the shifted power-sum sweep, as (numerator, denominator).
const SHIFTS: [(i64, i64); 5] = [(-5, 4), (-1, 1), (0, 1), (1, 2), (7, 3)];

// ---------------------------------------------------------------------------
// the registry, sorted by id

static REGISTRY: &[Identity] = &[
    Identity {
        id: "alternating-binomial-sum",
        aliases: &[],
        summary: "sum_{i<=r} (-1)^i C(r,i)/(n-i) = (-1)^r / ((n-r) C(n,r))",
        params: &["n", "r"],
        cells: |b| grid2(1..=b.n_max, |n| range(0, n - 1)),
        check: |c| {
            let (n, r) = (u(c[0]), u(c[1]));
            let lhs: Rational = (0..=r)
                .map(|i| Rational::sign_pow(i) * binomial(&int(r), i) / int(n - i))
                .sum();
            sides(
                lhs,
                Rational::sign_pow(r) / (int(n - r) * binomial(&int(n), r)),
            )
        },
    },
    Identity {
        id: "bernoulli-derivative",
        aliases: &[],
        summary: "B_{k+1}'(x) = (k+1) B_k(x)",
        params: &["k"],
        cells: k0,
        check: |c| {
            let k = u(c[0]);
            sides(
                bernoulli_poly(k + 1).derivative(),
                bernoulli_poly(k).scale(&int(k + 1)),
            )
        },
    },
    Identity {
        id: "bernoulli-difference",
        aliases: &[],
        summary: "B_k(x+1) - B_k(x) = k x^(k-1)",
        params: &["k"],
        cells: k0,
        check: |c| {
            let k = u(c[0]);
            let b = bernoulli_poly(k);
            let rhs = match k {
                0 => Polynomial::zero(),
                _ => Polynomial::monomial(int(k), k - 1),
            };
            sides(&b.compose_shift(&Rational::one()) - &b, rhs)
        },
    },
    Identity {
        id: "bernoulli-harmonic",
        aliases: &[],
        summary: "B_k through harmonic numbers equals B_k through Stirling numbers",
        params: &["k"],
        cells: k0,
        check: |c| {
            let k = u(c[0]);
            sides(bernoulli_number_harmonic(k), bernoulli_number(k))
        },
    },
    Identity {
        id: "bernoulli-inversion",
        aliases: &[],
        summary: "(1/k!) sum_j [k,j] B_j(x) = script-H_k(x)",
        params: &["k"],
        cells: k0,
        check: |c| {
            let k = u(c[0]);
            sides(script_h_from_bernoulli(k), script_h_poly(k))
        },
    },
    Identity {
        id: "bernoulli-odd-vanish",
        aliases: &[],
        summary: "B_{2j+1} = 0 for j >= 1",
        params: &["j"],
        cells: k1,
        check: |c| sides(bernoulli_number(2 * u(c[0]) + 1), 0),
    },
    Identity {
        id: "bernoulli-poly-constant",
        aliases: &[],
        summary: "B_k(0) = B_k",
        params: &["k"],
        cells: k0,
        check: |c| {
            let k = u(c[0]);
            sides(bernoulli_poly(k).coeff(0), bernoulli_number(k))
        },
    },
    Identity {
        id: "bernoulli-poly-hyperharmonic",
        aliases: &[],
        summary: "B_k(x) rebuilt from hyperharmonic polynomials shifted by -1",
        params: &["k"],
        cells: k0,
        check: |c| {
            let k = u(c[0]);
            sides(bernoulli_from_powersum(k), bernoulli_poly(k))
        },
    },
    Identity {
        id: "bernoulli-poly-shifted",
        aliases: &[],
        summary: "sum_j a_{k,j} H_{j+1}^(x) - k x^(k-1) = B_k(x)",
        params: &["k"],
        cells: k0,
        check: |c| {
            let k = u(c[0]);
            sides(bernoulli_poly_alt(k), bernoulli_poly(k))
        },
    },
    Identity {
        id: "bernoulli-powersum",
        aliases: &[],
        summary: "(B_{k+1}(n+1) - B_{k+1})/(k+1) = S_k(n)",
        params: &["k", "n"],
        cells: k1_n0,
        check: |c| {
            let (k, n) = (u(c[0]), u(c[1]));
            let b = bernoulli_poly(k + 1);
            let lhs = (b.eval(&int(n + 1)) - bernoulli_number(k + 1)) / int(k + 1);
            sides(lhs, direct(k, n))
        },
    },
    Identity {
        id: "bernoulli-stirling1-recursion",
        aliases: &[],
        summary: "sum_{j>=1} [k,j] B_j = -(k-1)!/(k+1)",
        params: &["k"],
        cells: k1,
        check: |c| {
            let k = u(c[0]);
            let lhs: Rational = stirling1_row(k)
                .into_iter()
                .enumerate()
                .skip(1)
                .map(|(j, s)| Rational::from(s) * bernoulli_number(j))
                .sum();
            sides(lhs, -Rational::from(factorial(k - 1)) / int(k + 1))
        },
    },
    Identity {
        id: "bernoulli-variant",
        aliases: &[],
        summary: "B_k through (j-1)!/(j+1) weights equals B_k through j!/(j+1) weights",
        params: &["k"],
        cells: k1,
        check: |c| {
            let k = u(c[0]);
            sides(bernoulli_number_variant(k)?, bernoulli_number(k))
        },
    },
    Identity {
        id: "boya-sum",
        aliases: &[],
        summary: "sum_j (-1)^j (j-1)! {k+1,j} = 0 for k >= 1",
        params: &["k"],
        cells: k1,
        check: |c| sides(boya_sum(u(c[0])), 0),
    },
    Identity {
        id: "harmonic-gf-series",
        aliases: &[],
        summary: "coefficients of the harmonic-polynomial generating function are H_j(x)",
        params: &["j"],
        cells: k0,
        check: |c| {
            let j = u(c[0]);
            sides(harmonic_gf_series(j).coeff(j), harmonic_poly(j))
        },
    },
    Identity {
        id: "harmonic-poly-at-zero",
        aliases: &[],
        summary: "H_j(0) = H_{j+1}",
        params: &["j"],
        cells: k0,
        check: |c| {
            let j = u(c[0]);
            sides(harmonic_poly(j).coeff(0), harmonic(j + 1))
        },
    },
    Identity {
        id: "harmonic-poly-negative-rep",
        aliases: &[],
        summary: "harmonic polynomials through negative-order hyperharmonic numbers",
        params: &["j"],
        cells: k0,
        check: |c| {
            let j = u(c[0]);
            sides(harmonic_poly_negative_rep(j), harmonic_poly(j))
        },
    },
    Identity {
        id: "harmonic-poly-reflection",
        aliases: &[],
        summary: "H_j(x) = script-H_j(2 - x)",
        params: &["j"],
        cells: k0,
        check: |c| {
            let j = u(c[0]);
            let reflected =
                script_h_poly(j).compose_affine(&Rational::frac(-1, 1), &Rational::frac(2, 1));
            sides(harmonic_poly(j), reflected)
        },
    },
    Identity {
        id: "hyperharmonic-conway-guy",
        aliases: &[],
        summary: "C(n+r-1, r-1)(H_{n+r-1} - H_{r-1}) = H_n^(r)",
        params: &["n", "r"],
        cells: n1_r1,
        check: |c| {
            let (n, r) = (u(c[0]), u(c[1]));
            sides(
                hyperharmonic_conway_guy(n, r)?,
                hyperharmonic_recursive(n, r)?,
            )
        },
    },
    Identity {
        id: "hyperharmonic-derivative",
        aliases: &[],
        summary: "d/dx C(x+n+r-1, n) at x = 0 equals H_n^(r)",
        params: &["n", "r"],
        cells: |b| grid2(1..=b.k_max, |_| range(1, b.k_max)),
        check: |c| {
            let (n, r) = (u(c[0]), u(c[1]));
            let d = binomial_poly(&int(n + r - 1), n)
                .derivative()
                .eval(&Rational::zero());
            sides(d, hyperharmonic_recursive(n, r)?)
        },
    },
    Identity {
        id: "hyperharmonic-explicit",
        aliases: &[],
        summary: "sum_t C(r+n-t-1, n-t)/t = H_n^(r)",
        params: &["n", "r"],
        cells: n1_r1,
        check: |c| {
            let (n, r) = (u(c[0]), u(c[1]));
            sides(
                hyperharmonic_explicit(n, r)?,
                hyperharmonic_recursive(n, r)?,
            )
        },
    },
    Identity {
        id: "hyperharmonic-negative-unified",
        aliases: &[],
        summary: "the unified negative-order sum equals the three-branch definition",
        params: &["index", "order"],
        cells: n1_r1,
        check: |c| {
            let (i, r) = (u(c[0]), u(c[1]));
            sides(
                hyperharmonic_negative_unified(i, r)?,
                hyperharmonic_negative(i, r)?,
            )
        },
    },
    Identity {
        id: "hyperharmonic-poly",
        aliases: &[],
        summary: "the degree-j polynomial in the order interpolates H_{j+1}^(n)",
        params: &["j", "n"],
        cells: |b| grid2(0..=b.k_max, |_| range(0, b.n_max)),
        check: |c| {
            let (j, n) = (u(c[0]), u(c[1]));
            sides(
                hyperharmonic_poly(j).eval(&int(n)),
                hyperharmonic_recursive(j + 1, n)?,
            )
        },
    },
    Identity {
        id: "hyperharmonic-rstirling",
        aliases: &[],
        summary: "[n+r, r+1]_r / n! = H_n^(r)",
        params: &["n", "r"],
        cells: n1_r1,
        check: |c| {
            let (n, r) = (u(c[0]), u(c[1]));
            let lhs = Rational::from(r_stirling1(n + r, r + 1, r)?) / Rational::from(factorial(n));
            sides(lhs, hyperharmonic_recursive(n, r)?)
        },
    },
    Identity {
        id: "powersum-alt-negative-route",
        aliases: &[],
        summary: "S_k(n) through the negative-argument double sum",
        params: &["k", "n"],
        cells: k1_n1,
        check: |c| {
            let (k, n) = (u(c[0]), u(c[1]));
            sides(powersum_alt(k, n)?, direct(k, n))
        },
    },
    Identity {
        id: "powersum-at-minus-one",
        aliases: &[],
        summary: "S_k(-1) = 0 for k >= 1",
        params: &["k"],
        cells: |b| (1..=2 * b.k_max).map(|k| vec![k as i64]).collect(),
        check: |c| sides(powersum_polynomial(u(c[0])).eval(&Rational::frac(-1, 1)), 0),
    },
    Identity {
        id: "powersum-derivative",
        aliases: &[],
        summary: "S_k'(x) = k S_{k-1}(x) + (-1)^k B_k",
        params: &["k"],
        cells: k1,
        check: |c| {
            let k = u(c[0]);
            let rhs = &powersum_polynomial(k - 1).scale(&int(k))
                + &Polynomial::constant(Rational::sign_pow(k) * bernoulli_number(k));
            sides(powersum_polynomial(k).derivative(), rhs)
        },
    },
    Identity {
        id: "powersum-derivative-hyperharmonic",
        aliases: &[],
        summary: "S_k'(n) = sum_j a_{k,j} H_{j+1}^(n)",
        params: &["k", "n"],
        cells: k1_n1,
        check: |c| {
            let (k, n) = (u(c[0]), u(c[1]));
            let a = signed_surjections(k);
            let mut rhs = Rational::zero();
            for (j, coeff) in a.iter().enumerate().skip(1) {
                rhs += coeff * hyperharmonic_recursive(j + 1, n)?;
            }
            sides(powersum_polynomial(k).derivative().eval(&int(n)), rhs)
        },
    },
    Identity {
        id: "powersum-expansion",
        aliases: &[],
        summary: "the hyperharmonic expansion of S_k sums to the power-sum polynomial",
        params: &["k"],
        cells: k0,
        check: |c| {
            let k = u(c[0]);
            sides(
                HyperharmonicExpansion::new(k).to_polynomial(),
                powersum_polynomial(k),
            )
        },
    },
    Identity {
        id: "powersum-gould",
        aliases: &[],
        summary: "sum_j (-1)^(k-j) j! {k,j} C(n+j, j+1) = S_k(n)",
        params: &["k", "n"],
        cells: k1_n1,
        check: |c| {
            let (k, n) = (u(c[0]), u(c[1]));
            sides(powersum_gould(k, n)?, direct(k, n))
        },
    },
    Identity {
        id: "powersum-hyperharmonic",
        aliases: &["th1"],
        summary: "S_k(n) as a weighted sum of hyperharmonic numbers",
        params: &["k", "n"],
        cells: k0_n1,
        check: |c| {
            let (k, n) = (u(c[0]), u(c[1]));
            sides(powersum_hyperharmonic(k, n)?, direct(k, n))
        },
    },
    Identity {
        id: "powersum-interpolation",
        aliases: &[],
        summary: "S_k(x) is the interpolant of S_k(0..=k+1)",
        params: &["k"],
        cells: k0,
        check: |c| {
            let k = u(c[0]);
            let points: Vec<_> = (0..=k + 1).map(|n| (int(n), direct(k, n))).collect();
            sides(powersum_polynomial(k), interpolate(&points))
        },
    },
    Identity {
        id: "powersum-negative",
        aliases: &[],
        summary: "the negative-argument sum equals S_k(-n)",
        params: &["k", "n"],
        cells: k0_n1,
        check: |c| {
            let (k, n) = (u(c[0]), u(c[1]));
            sides(
                powersum_negative(k, n)?,
                powersum_polynomial(k).eval(&-int(n)),
            )
        },
    },
    Identity {
        id: "powersum-rising",
        aliases: &[],
        summary: "S_k(n) through rising factorials",
        params: &["k", "n"],
        cells: k0_n1,
        check: |c| {
            let (k, n) = (u(c[0]), u(c[1]));
            sides(powersum_rising(k, n)?, direct(k, n))
        },
    },
    Identity {
        id: "powersum-rstirling",
        aliases: &[],
        summary: "S_k(n) through r-Stirling numbers",
        params: &["k", "n"],
        cells: k0_n1,
        check: |c| {
            let (k, n) = (u(c[0]), u(c[1]));
            sides(powersum_rstirling(k, n)?, direct(k, n))
        },
    },
    Identity {
        id: "powersum-shifted",
        aliases: &[],
        summary: "sum_{j<=n} (j+x)^k = S_k(n+x) - S_k(x), x = p/q",
        params: &["k", "p", "q", "n"],
        cells: |b| {
            let mut cells = Vec::new();
            for k in 0..=b.k_max as i64 {
                for (p, q) in SHIFTS {
                    for n in 1..=b.n_max as i64 {
                        cells.push(vec![k, p, q, n]);
                    }
                }
            }
            cells
        },
        check: |c| {
            let (k, x, n) = (u(c[0]), Rational::frac(c[1], c[2]), u(c[3]));
            let lhs: Rational = (1..=n).map(|j| (int(j) + &x).pow(k as u32)).sum();
            let s = powersum_polynomial(k);
            sides(lhs, s.eval(&(int(n) + &x)) - s.eval(&x))
        },
    },
    Identity {
        id: "powersum-symmetry",
        aliases: &["sym"],
        summary: "S_k(-(n+1)) = (-1)^(k+1) S_k(n)",
        params: &["k", "n"],
        cells: k1_n0,
        check: |c| {
            let (k, n) = (u(c[0]), u(c[1]));
            let s = powersum_polynomial(k);
            let lhs = s.eval(&-int(n + 1));
            sides(lhs, Rational::sign_pow(k + 1) * s.eval(&int(n)))
        },
    },
    Identity {
        id: "powersum-weighted",
        aliases: &[],
        summary: "S_k(n) through weighted sums of fractions",
        params: &["k", "n"],
        cells: k0_n1,
        check: |c| {
            let (k, n) = (u(c[0]), u(c[1]));
            sides(powersum_weighted(k, n)?, direct(k, n))
        },
    },
    Identity {
        id: "progression-closed",
        aliases: &[],
        summary: "closed form of sum_{j<=n} (r + (j-1) m)^k",
        params: &["k", "r", "m", "n"],
        cells: |b| {
            let mut cells = Vec::new();
            let side = b.k_max.min(6) as i64;
            for k in 0..=b.k_max as i64 {
                for r in 1..=side {
                    for m in 1..=side {
                        for n in 1..=b.n_max as i64 {
                            cells.push(vec![k, r, m, n]);
                        }
                    }
                }
            }
            cells
        },
        check: |c| {
            let spec = ProgressionSpec::new(u(c[1]), u(c[2]), u(c[0]), u(c[3]))?;
            sides(progression_closed(&spec), progression_direct(&spec))
        },
    },
    Identity {
        id: "progression-unit-step",
        aliases: &[],
        summary: "the progression closed form at r = m = 1 equals the weighted power sum",
        params: &["k", "n"],
        cells: k0_n1,
        check: |c| {
            let (k, n) = (u(c[0]), u(c[1]));
            let spec = ProgressionSpec::new(1, 1, k, n)?;
            sides(progression_closed(&spec), powersum_weighted(k, n)?)
        },
    },
    Identity {
        id: "rstirling-rising",
        aliases: &[],
        summary: "[n+j+1, n+1]_n = sum_i (i-1)! C(j+1,i) n^(rising j+1-i)",
        params: &["n", "j"],
        cells: |b| grid2(1..=b.k_max, |_| range(1, b.k_max)),
        check: |c| {
            let (n, j) = (u(c[0]), u(c[1]));
            let rhs: Rational = (1..=j + 1)
                .map(|i| {
                    Rational::from(factorial(i - 1))
                        * binomial(&int(j + 1), i)
                        * rising_factorial(&int(n), j + 1 - i)
                })
                .sum();
            sides(r_stirling1(n + j + 1, n + 1, n)?, rhs)
        },
    },
    Identity {
        id: "script-h-at-zero",
        aliases: &[],
        summary: "script-H_j(0) = -1/(j(j+1)) for j >= 1",
        params: &["j"],
        cells: k1,
        check: |c| {
            let j = u(c[0]);
            sides(
                script_h_poly(j).coeff(0),
                Rational::frac(-1, (j * (j + 1)) as i64),
            )
        },
    },
    Identity {
        id: "stirling2-bell",
        aliases: &[],
        summary: "sum_j {k,j} is the k-th Bell number",
        params: &["k"],
        cells: k0,
        check: |c| {
            let k = u(c[0]);
            sides(stirling2_row(k).into_iter().sum::<BigUint>(), bell(k))
        },
    },
];
