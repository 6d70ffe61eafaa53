//! The quadratic scalar-field operator
//! `(lambda mu - eta^2) sum_{i<j} F_ij F^ij + I^2 + eta (x_i p^i + p_i x^i)
//!  - lambda x_i x^i - mu p_i p^i`.

use std::fmt;

use num_traits::{One, Zero};

use super::xi::{xi_rep, XiRepConfig, XI_CONVENTION};
use super::WeylElement;
use crate::algebra::generator::{metric, Generator, LORENTZ_PAIRS};
use crate::algebra::operator::Operator;
use crate::algebra::scalar::{GaussRational, Rational};
use crate::algebra::structure::ParameterPoint;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ScalarTerm {
    /// `sum_{i<j} F_ij F^ij`
    FF,
    /// `I^2`
    II,
    /// `x_i p^i + p_i x^i`
    XpPx,
    /// `x_i x^i`
    XX,
    /// `p_i p^i`
    PP,
}

impl ScalarTerm {
    pub const ALL: [ScalarTerm; 5] = [
        ScalarTerm::FF,
        ScalarTerm::II,
        ScalarTerm::XpPx,
        ScalarTerm::XX,
        ScalarTerm::PP,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScalarTerm::FF => "F_ij F^ij (i<j)",
            ScalarTerm::II => "I^2",
            ScalarTerm::XpPx => "x_i p^i + p_i x^i",
            ScalarTerm::XX => "x_i x^i",
            ScalarTerm::PP => "p_i p^i",
        }
    }

    /// The operator of this term built from generator images.
    pub fn assemble<O: Operator>(self, images: &[O]) -> O {
        let img = |g: Generator| &images[g.index()];
        let sum = |f: &dyn Fn(usize) -> O| -> O { (1..4).fold(f(0), |acc, i| acc.op_add(&f(i))) };
        let g = |i: usize| GaussRational::from_int(metric(i, i));
        match self {
            ScalarTerm::FF => LORENTZ_PAIRS
                .iter()
                .enumerate()
                .map(|(k, &(i, j))| {
                    let f = &images[k];
                    f.op_mul(f)
                        .op_scale(&GaussRational::from_int(metric(i, i) * metric(j, j)))
                })
                .reduce(|a, b| a.op_add(&b))
                .unwrap(),
            ScalarTerm::II => img(Generator::Id).op_mul(img(Generator::Id)),
            ScalarTerm::XpPx => sum(&|i| {
                let (x, p) = (img(Generator::x(i)), img(Generator::p(i)));
                x.op_mul(p).op_add(&p.op_mul(x)).op_scale(&g(i))
            }),
            ScalarTerm::XX => sum(&|i| {
                let x = img(Generator::x(i));
                x.op_mul(x).op_scale(&g(i))
            }),
            ScalarTerm::PP => sum(&|i| {
                let p = img(Generator::p(i));
                p.op_mul(p).op_scale(&g(i))
            }),
        }
    }
}

impl fmt::Display for ScalarTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Coefficient table of the scalar operator at `(lambda, mu, eta)`.
pub fn scalar_terms(
    lambda: &Rational,
    mu: &Rational,
    eta: &Rational,
) -> Vec<(ScalarTerm, Rational)> {
    vec![
        (ScalarTerm::FF, lambda * mu - eta * eta),
        (ScalarTerm::II, Rational::one()),
        (ScalarTerm::XpPx, eta.clone()),
        (ScalarTerm::XX, -lambda.clone()),
        (ScalarTerm::PP, -mu.clone()),
    ]
}

/// Coefficient table of the second-order operator for the `H -> infinity`
/// family, read from its own display: `sum F F/(M^2 L^2) + I^2 - x x/L^2 - p p/M^2`.
pub fn infinite_h_terms(lambda: &Rational, mu: &Rational) -> Vec<(ScalarTerm, Rational)> {
    vec![
        (ScalarTerm::FF, lambda * mu),
        (ScalarTerm::II, Rational::one()),
        (ScalarTerm::XpPx, Rational::zero()),
        (ScalarTerm::XX, -lambda.clone()),
        (ScalarTerm::PP, -mu.clone()),
    ]
}

pub fn scalar_operator_from_images<O: Operator>(
    images: &[O],
    terms: &[(ScalarTerm, Rational)],
) -> O {
    let mut acc = images[0].zero_like();
    for (t, c) in terms {
        if !c.is_zero() {
            acc = acc.op_add(&t.assemble(images).op_scale(&GaussRational::real(c.clone())));
        }
    }
    acc
}

/// The scalar operator in the `xi` representation. A nonzero `eta` must be
/// the one the representation realizes (`eta = -1/H`); `eta = 0` gives the
/// `H -> infinity` form assembled from the same images.
pub fn scalar_operator(point: &ParameterPoint, cfg: &XiRepConfig) -> Result<WeylElement> {
    if !point.eta.is_zero() && point.eta != XI_CONVENTION.eta(&cfg.h) {
        return Err(Error::Inconsistent(format!(
            "eta = {} does not match H = {} under {}",
            point.eta,
            cfg.h,
            XI_CONVENTION.name()
        )));
    }
    Ok(scalar_operator_from_images(
        &xi_rep(cfg),
        &scalar_terms(&point.lambda, &point.mu, &point.eta),
    ))
}
