//! The quantities the CLI can evaluate, their named parameters and their
//! alternative evaluation methods.

use std::collections::BTreeMap;
use std::fmt;

use clap::ValueEnum;
use hypersum_core::bernoulli::*;
use hypersum_core::combinatorics::{binomial, r_stirling1, stirling1_unsigned, stirling2};
use hypersum_core::harmonic::*;
use hypersum_core::powersum::{
    powersum, progression_closed, progression_direct, DirectSumGuard, PowerSumMethod,
    ProgressionSpec,
};
use hypersum_core::{Error, Polynomial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Quantity {
    Powersum,
    Progression,
    Hyperharmonic,
    HyperharmonicNegative,
    BernoulliNumber,
    BernoulliPoly,
    Stirling2,
    Stirling1,
    RStirling1,
    Harmonic,
    ScriptHPoly,
    HarmonicPoly,
    Binomial,
}

/// A computed value: a rational scalar or a polynomial in `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Rational),
    Poly(Polynomial),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(r) => write!(f, "{r}"),
            Value::Poly(p) => write!(f, "{p}"),
        }
    }
}

/// Named integer parameters of one evaluation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(BTreeMap<&'static str, i64>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, name: &'static str, value: i64) {
        self.0.insert(name, value);
    }

    pub fn get(&self, name: &'static str) -> Option<i64> {
        self.0.get(name).copied()
    }

    fn raw(&self, op: &'static str, name: &'static str) -> Result<i64, Error> {
        self.get(name).ok_or_else(|| Error::Domain {
            op,
            requirement: format!("missing --{name}"),
        })
    }

    fn at_least(&self, op: &'static str, name: &'static str, min: i64) -> Result<usize, Error> {
        let v = self.raw(op, name)?;
        if v < min {
            return Err(Error::Domain {
                op,
                requirement: format!("{name} >= {min} required, got {v}"),
            });
        }
        Ok(v as usize)
    }
}

fn value_from_poly(p: Polynomial, x: Option<&Rational>) -> Value {
    match x {
        Some(x) => Value::Scalar(p.eval(x)),
        None => Value::Poly(p),
    }
}

fn unknown_method(op: &'static str, method: &str, allowed: &[&str]) -> Error {
    Error::Domain {
        op,
        requirement: format!(
            "unknown method {method:?}; expected one of {}",
            allowed.join(", ")
        ),
    }
}

fn integral(what: &'static str, r: Rational) -> Result<Rational, Error> {
    if r.is_integer() {
        Ok(r)
    } else {
        Err(Error::NotInteger {
            what,
            value: r.to_string(),
        })
    }
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::Powersum => "powersum",
            Quantity::Progression => "progression",
            Quantity::Hyperharmonic => "hyperharmonic",
            Quantity::HyperharmonicNegative => "hyperharmonic-negative",
            Quantity::BernoulliNumber => "bernoulli-number",
            Quantity::BernoulliPoly => "bernoulli-poly",
            Quantity::Stirling2 => "stirling2",
            Quantity::Stirling1 => "stirling1",
            Quantity::RStirling1 => "r-stirling1",
            Quantity::Harmonic => "harmonic",
            Quantity::ScriptHPoly => "script-h-poly",
            Quantity::HarmonicPoly => "harmonic-poly",
            Quantity::Binomial => "binomial",
        }
    }

    /// Parameter names in column order.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            Quantity::Powersum => &["k", "n"],
            Quantity::Progression => &["r", "m", "k", "n"],
            Quantity::Hyperharmonic | Quantity::HyperharmonicNegative => &["index", "order"],
            Quantity::BernoulliNumber | Quantity::BernoulliPoly => &["k"],
            Quantity::Stirling2 | Quantity::Stirling1 => &["k", "j"],
            Quantity::RStirling1 => &["n", "k", "r"],
            Quantity::Harmonic => &["n"],
            Quantity::ScriptHPoly | Quantity::HarmonicPoly => &["j"],
            Quantity::Binomial => &["k"],
        }
    }

    /// Method names; the first is the default.
    pub fn methods(self) -> &'static [&'static str] {
        match self {
            Quantity::Powersum => &[
                "direct",
                "gould",
                "hyperharmonic",
                "weighted",
                "rstirling",
                "bernoulli-poly",
                "alt-negative-route",
            ],
            Quantity::Progression => &["direct", "closed"],
            Quantity::Hyperharmonic => &[
                "definition",
                "conway-guy",
                "explicit",
                "rstirling",
                "derivative",
                "unified",
            ],
            Quantity::HyperharmonicNegative => &["branches", "unified"],
            Quantity::BernoulliNumber => &["stirling", "variant", "harmonic"],
            Quantity::BernoulliPoly => &["script-h", "shifted", "hyperharmonic"],
            Quantity::ScriptHPoly => &["shift", "inversion"],
            Quantity::HarmonicPoly => &["explicit", "negative", "series"],
            _ => &["default"],
        }
    }

    /// Whether the quantity is a polynomial, so that `--x` evaluates it.
    pub fn is_polynomial(self) -> bool {
        matches!(
            self,
            Quantity::BernoulliPoly | Quantity::ScriptHPoly | Quantity::HarmonicPoly
        )
    }

    /// `--x` is required (binomial top), optional (polynomials) or rejected.
    pub fn takes_x(self) -> bool {
        self.is_polynomial() || self == Quantity::Binomial
    }

    /// Methods defined at `params`, in declaration order.
    pub fn available_methods(self, params: &Params) -> Vec<&'static str> {
        self.methods()
            .iter()
            .copied()
            .filter(|m| {
                let x = self.takes_x().then(Rational::one);
                self.evaluate(params, Some(m), x.as_ref()).is_ok()
            })
            .collect()
    }

    pub fn evaluate(
        self,
        params: &Params,
        method: Option<&str>,
        x: Option<&Rational>,
    ) -> Result<Value, Error> {
        let allowed = self.methods();
        let method = method.unwrap_or(allowed[0]);
        if !allowed.contains(&method) {
            return Err(unknown_method("eval", method, allowed));
        }
        if x.is_some() && !self.takes_x() {
            return Err(Error::Domain {
                op: "eval",
                requirement: format!("--x does not apply to {}", self.name()),
            });
        }
        match self {
            Quantity::Powersum => {
                let k = params.at_least("powersum", "k", 0)?;
                let n = params.at_least("powersum", "n", 0)?;
                let m: PowerSumMethod = method.parse()?;
                if !m.admits(k, n) {
                    return Err(Error::Domain {
                        op: "powersum",
                        requirement: format!("method {m} is not defined at k={k}, n={n}"),
                    });
                }
                if m == PowerSumMethod::Direct {
                    DirectSumGuard::default().check(k, n)?;
                }
                Ok(Value::Scalar(Rational::from(powersum(m, k, n)?)))
            }
            Quantity::Progression => {
                let spec = ProgressionSpec::new(
                    params.at_least("progression", "r", 0)?,
                    params.at_least("progression", "m", 1)?,
                    params.at_least("progression", "k", 0)?,
                    params.at_least("progression", "n", 1)?,
                )?;
                let v = match method {
                    "direct" => {
                        DirectSumGuard::default().check(spec.power, spec.terms)?;
                        Rational::from(progression_direct(&spec))
                    }
                    _ => integral("progression sum", progression_closed(&spec))?,
                };
                Ok(Value::Scalar(v))
            }
            Quantity::Hyperharmonic => {
                let index = params.raw("hyperharmonic", "index")?;
                let order = params.raw("hyperharmonic", "order")?;
                let query = HyperharmonicQuery::new(index, order)?;
                let (i, r) = (index as usize, order.unsigned_abs() as usize);
                let positive_only = |op: &'static str| -> Result<(), Error> {
                    if order < 0 {
                        return Err(Error::Domain {
                            op,
                            requirement: "order >= 0 required".into(),
                        });
                    }
                    Ok(())
                };
                let v = match method {
                    "definition" => query.evaluate()?,
                    "conway-guy" => {
                        positive_only("conway-guy")?;
                        hyperharmonic_conway_guy(i, r)?
                    }
                    "explicit" => {
                        positive_only("explicit")?;
                        hyperharmonic_explicit(i, r)?
                    }
                    "rstirling" => {
                        positive_only("rstirling")?;
                        hyperharmonic_via_rstirling(i, r)?
                    }
                    "derivative" => {
                        positive_only("derivative")?;
                        hyperharmonic_via_derivative(i, r)?
                    }
                    _ => {
                        if order >= 0 {
                            return Err(Error::Domain {
                                op: "unified",
                                requirement: "order < 0 required".into(),
                            });
                        }
                        hyperharmonic_negative_unified(i, r)?
                    }
                };
                Ok(Value::Scalar(v))
            }
            Quantity::HyperharmonicNegative => {
                let i = params.at_least("hyperharmonic-negative", "index", 1)?;
                let r = params.at_least("hyperharmonic-negative", "order", 1)?;
                let v = match method {
                    "branches" => hyperharmonic_negative(i, r)?,
                    _ => hyperharmonic_negative_unified(i, r)?,
                };
                Ok(Value::Scalar(v))
            }
            Quantity::BernoulliNumber => {
                let k = params.at_least("bernoulli-number", "k", 0)?;
                let v = match method {
                    "stirling" => bernoulli_number(k),
                    "variant" => bernoulli_number_variant(k)?,
                    _ => bernoulli_number_harmonic(k),
                };
                Ok(Value::Scalar(v))
            }
            Quantity::BernoulliPoly => {
                let k = params.at_least("bernoulli-poly", "k", 0)?;
                let p = match method {
                    "script-h" => bernoulli_poly(k),
                    "shifted" => bernoulli_poly_alt(k),
                    _ => bernoulli_from_powersum(k),
                };
                Ok(value_from_poly(p, x))
            }
            Quantity::Stirling2 => {
                let k = params.at_least("stirling2", "k", 0)?;
                let j = params.at_least("stirling2", "j", 0)?;
                Ok(Value::Scalar(stirling2(k, j).into()))
            }
            Quantity::Stirling1 => {
                let k = params.at_least("stirling1", "k", 0)?;
                let j = params.at_least("stirling1", "j", 0)?;
                Ok(Value::Scalar(stirling1_unsigned(k, j).into()))
            }
            Quantity::RStirling1 => {
                let n = params.at_least("r-stirling1", "n", 0)?;
                let k = params.at_least("r-stirling1", "k", 0)?;
                let r = params.at_least("r-stirling1", "r", 0)?;
                Ok(Value::Scalar(r_stirling1(n, k, r)?.into()))
            }
            Quantity::Harmonic => {
                let n = params.at_least("harmonic", "n", 0)?;
                Ok(Value::Scalar(harmonic(n)))
            }
            Quantity::ScriptHPoly => {
                let j = params.at_least("script-h-poly", "j", 0)?;
                let p = match method {
                    "shift" => script_h_poly(j),
                    _ => script_h_from_bernoulli(j),
                };
                Ok(value_from_poly(p, x))
            }
            Quantity::HarmonicPoly => {
                let j = params.at_least("harmonic-poly", "j", 0)?;
                let p = match method {
                    "explicit" => harmonic_poly(j),
                    "negative" => harmonic_poly_negative_rep(j),
                    _ => harmonic_gf_series(j).coeff(j).clone(),
                };
                Ok(value_from_poly(p, x))
            }
            Quantity::Binomial => {
                let k = params.at_least("binomial", "k", 0)?;
                let top = x.ok_or_else(|| Error::Domain {
                    op: "binomial",
                    requirement: "missing --x (the upper argument)".into(),
                })?;
                Ok(Value::Scalar(binomial(top, k)))
            }
        }
    }
}
