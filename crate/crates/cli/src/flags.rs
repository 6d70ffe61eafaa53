use std::collections::BTreeMap;

use hlm_core::algebra::scalar::{parse_rational, rational_sqrt};
use hlm_core::algebra::{GaussRational, Rational};
use hlm_core::classify::{ExtendedSquare, SquaresPoint};
use hlm_core::{Error, Result};
use num_traits::{Signed, Zero};

/// Merged flag values (config defaults overridden by the command line).
#[derive(Clone, Debug, Default)]
pub struct Flags {
    values: BTreeMap<String, String>,
}

impl Flags {
    pub fn new(values: BTreeMap<String, String>) -> Self {
        Flags { values }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn has(&self, key: &str) -> bool {
        self.values.contains_key(key)
    }

    pub fn str_or<'a>(&'a self, key: &str, default: &'a str) -> &'a str {
        self.get(key).unwrap_or(default)
    }

    fn with_key<T>(key: &str, r: Result<T>) -> Result<T> {
        r.map_err(|e| Error::Invalid(format!("--{key}: {e}")))
    }

    pub fn require(&self, key: &str) -> Result<&str> {
        self.get(key)
            .ok_or_else(|| Error::Invalid(format!("--{key} is required")))
    }

    pub fn rational_or(&self, key: &str, default: i64) -> Result<Rational> {
        match self.get(key) {
            Some(s) => Self::with_key(key, parse_rational(s)),
            None => Ok(Rational::from_integer(default.into())),
        }
    }

    pub fn square(&self, key: &str) -> Result<ExtendedSquare> {
        Self::with_key(key, ExtendedSquare::parse(self.require(key)?))
    }

    pub fn square_or_inf(&self, key: &str) -> Result<ExtendedSquare> {
        match self.get(key) {
            Some(s) => Self::with_key(key, ExtendedSquare::parse(s)),
            None => Ok(ExtendedSquare::Inf),
        }
    }

    pub fn squares_point(&self) -> Result<SquaresPoint> {
        Ok(SquaresPoint::new(
            self.square("L2")?,
            self.square("M2")?,
            self.square("H2")?,
            self.rational_or("f", 1)?,
        ))
    }

    pub fn sign(&self, key: &str) -> Result<i8> {
        match self.str_or(key, "1") {
            "1" | "+1" => Ok(1),
            "-1" => Ok(-1),
            other => Err(Error::Invalid(format!(
                "--{key} must be +1 or -1, got `{other}`"
            ))),
        }
    }

    pub fn dim(&self, default: usize, allowed: &[usize]) -> Result<usize> {
        let d = match self.get("dim") {
            Some(s) => s
                .parse::<usize>()
                .map_err(|_| Error::Invalid(format!("--dim: `{s}` is not a dimension")))?,
            None => default,
        };
        if !allowed.contains(&d) {
            return Err(Error::Invalid(format!(
                "--dim must be one of {allowed:?}, got {d}"
            )));
        }
        Ok(d)
    }

    /// `--key` if given, otherwise a Gaussian-rational square root of
    /// `square` (real for a nonnegative square, imaginary for a negative).
    pub fn radical(&self, key: &str, square: &Rational) -> Result<GaussRational> {
        if let Some(s) = self.get(key) {
            return Self::with_key(key, GaussRational::parse(s));
        }
        let root = rational_sqrt(&square.abs()).ok_or_else(|| {
            Error::Invalid(format!(
                "{key}^2 = {square} has no rational root; pass --{key} explicitly"
            ))
        })?;
        Ok(if square.is_negative() {
            GaussRational::new(Rational::zero(), root)
        } else {
            GaussRational::real(root)
        })
    }

    /// `H = +sqrt(H2)` for the `xi` representation.
    pub fn xi_h(&self) -> Result<Rational> {
        let h2 = match self.square("H2")? {
            ExtendedSquare::Finite(r) => r,
            ExtendedSquare::Inf => {
                return Err(Error::Invalid(
                    "the xi representation needs finite H2".into(),
                ))
            }
        };
        if !h2.is_positive() {
            return Err(Error::Invalid("H2 must be positive".into()));
        }
        rational_sqrt(&h2)
            .ok_or_else(|| Error::Invalid(format!("H2 = {h2} is not the square of a rational")))
    }
}
