//! Exact arithmetic for hyperharmonic numbers, Stirling numbers, Bernoulli
//! numbers and polynomials, and sums of powers.
//!
//! Everything is computed over arbitrary-precision rationals. There is no
//! floating point anywhere in the crate.
//!
//! ```
//! use hypersum_core::bernoulli::bernoulli_poly;
//! use hypersum_core::harmonic::hyperharmonic_recursive;
//! use hypersum_core::powersum::{powersum, PowerSumMethod};
//!
//! assert_eq!(hyperharmonic_recursive(3, 2).unwrap().to_string(), "13/3");
//! assert_eq!(powersum(PowerSumMethod::Hyperharmonic, 3, 4).unwrap(), 100.into());
//! assert_eq!(bernoulli_poly(2).to_string(), r#"["1/6","-1","1"]"#);
//! ```

pub mod bernoulli;
pub mod combinatorics;
pub mod error;
pub mod harmonic;
pub mod poly;
pub mod powersum;
pub mod rational;
pub mod series;

pub use error::Error;
pub use poly::Polynomial;
pub use rational::Rational;
pub use series::TruncatedSeries;
