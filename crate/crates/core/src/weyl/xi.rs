//! The infinite-dimensional representation in the variables `xi^i`:
//!
//! `p_i = i hbar d_i`, `I = i hbar (a + E/H)` with `E = xi^m d_m`,
//! `F_ij = i hbar (xi_i d_j - xi_j d_i)`,
//! `x_i = i hbar (a xi_i + xi_i E/H - xi^2 d_i/(2H))`, indices lowered by `g`.
//!
//! Expanding `[p_i, x_j]` gives `i hbar (g_ij I - F_ij/H)`, so the images
//! represent the HLM table at `f = hbar`, `lambda = mu = 0` with
//! `eta = -1/H`. [`verify_xi_rep`] checks both readings.

use num_traits::{One, Zero};

use super::WeylElement;
use crate::algebra::families::build_family;
use crate::algebra::generator::{metric, Generator, ALL, DIM, LORENTZ_PAIRS};
use crate::algebra::operator::{homomorphism_failures, Operator};
use crate::algebra::poly::{ParamPoly, Var};
use crate::algebra::scalar::{rat, Coefficient, GaussRational, Rational};
use crate::algebra::structure::{Family, ParameterPoint};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiRepConfig {
    pub a: Rational,
    pub h: Rational,
    pub hbar: Rational,
}

impl XiRepConfig {
    pub fn new(a: Rational, h: Rational, hbar: Rational) -> Result<Self> {
        if h.is_zero() {
            return Err(Error::Invalid("H must be nonzero".into()));
        }
        if hbar.is_zero() {
            return Err(Error::Invalid("hbar must be nonzero".into()));
        }
        Ok(XiRepConfig { a, h, hbar })
    }

    /// The algebra point the images represent under the frozen convention.
    pub fn algebra_point(&self) -> ParameterPoint {
        XI_CONVENTION
            .point(self)
            .expect("config validated at construction")
    }
}

/// How `eta` relates to the representation constant `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XiConvention {
    /// `eta = +1/H`
    Plus,
    /// `eta = -1/H`
    Minus,
}

/// Fixed by [`verify_xi_rep`]; see the module documentation.
pub const XI_CONVENTION: XiConvention = XiConvention::Minus;

impl XiConvention {
    pub fn sign(self) -> i64 {
        match self {
            XiConvention::Plus => 1,
            XiConvention::Minus => -1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            XiConvention::Plus => "eta=+1/H",
            XiConvention::Minus => "eta=-1/H",
        }
    }

    pub fn eta(self, h: &Rational) -> Rational {
        Rational::from_integer(self.sign().into()) / h
    }

    pub fn point(self, cfg: &XiRepConfig) -> Result<ParameterPoint> {
        ParameterPoint::new(
            cfg.hbar.clone(),
            Rational::zero(),
            Rational::zero(),
            self.eta(&cfg.h),
        )
    }
}

fn lowered<C: Coefficient>(i: usize) -> WeylElement<C> {
    WeylElement::xi(i).scale(&C::from_int(metric(i, i)))
}

/// Images in generator order with `a` given as a coefficient (a number, or
/// the formal symbol `a`).
pub fn xi_images<C: Coefficient>(a: C, h: &Rational, hbar: &Rational) -> Vec<WeylElement<C>> {
    let ih = C::from(GaussRational::imag(hbar.clone()));
    let inv_h = C::from(GaussRational::real(h.recip()));
    let half_inv_h = C::from(GaussRational::real(h.recip() * rat(1, 2)));
    let e = WeylElement::<C>::euler();
    let xi2 = (0..4).fold(WeylElement::zero(), |acc, m| {
        acc + &WeylElement::xi(m).product(&lowered(m))
    });
    let mut out = Vec::with_capacity(DIM);
    for g in ALL {
        let w = match g {
            g if g.is_lorentz() => {
                let (i, j) = g.lorentz_indices().unwrap();
                lowered::<C>(i).product(&WeylElement::d(j))
                    - &lowered::<C>(j).product(&WeylElement::d(i))
            }
            Generator::Id => WeylElement::constant(a.clone()) + &e.scale(&inv_h),
            g if g.index() < 10 => WeylElement::d(g.index() - 6),
            g => {
                let i = g.index() - 10;
                let xl = lowered::<C>(i);
                xl.scale(&a) + &xl.product(&e).scale(&inv_h)
                    - &xi2.product(&WeylElement::d(i)).scale(&half_inv_h)
            }
        };
        out.push(w.scale(&ih));
    }
    out
}

pub fn xi_rep(cfg: &XiRepConfig) -> Vec<WeylElement<GaussRational>> {
    xi_images(GaussRational::real(cfg.a.clone()), &cfg.h, &cfg.hbar)
}

/// Images with `a` kept as the formal symbol `a`.
pub fn xi_rep_symbolic(h: &Rational, hbar: &Rational) -> Vec<WeylElement<ParamPoly>> {
    xi_images(ParamPoly::var(Var::A), h, hbar)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiRepReport {
    pub plus_failures: Vec<(Generator, Generator)>,
    pub minus_failures: Vec<(Generator, Generator)>,
    /// The unique passing convention, if exactly one passes.
    pub convention: Option<XiConvention>,
}

impl XiRepReport {
    pub fn pass(&self) -> bool {
        self.convention.is_some()
    }
}

/// Compares all 105 commutators of the symbolic-`a` images with the HLM
/// table at `f = hbar`, `lambda = mu = 0`, `eta = +-1/H`.
pub fn verify_xi_rep(h: &Rational, hbar: &Rational) -> Result<XiRepReport> {
    let cfg = XiRepConfig::new(Rational::zero(), h.clone(), hbar.clone())?;
    let images = xi_rep_symbolic(h, hbar);
    let hlm = build_family(Family::Hlm, None)?;
    let check = |conv: XiConvention| -> Result<Vec<(Generator, Generator)>> {
        let sc = hlm.substitute(&conv.point(&cfg)?, None)?;
        Ok(homomorphism_failures(&sc, &images)
            .into_iter()
            .map(|(a, b)| (ALL[a], ALL[b]))
            .collect())
    };
    let plus_failures = check(XiConvention::Plus)?;
    let minus_failures = check(XiConvention::Minus)?;
    let convention = match (plus_failures.is_empty(), minus_failures.is_empty()) {
        (true, false) => Some(XiConvention::Plus),
        (false, true) => Some(XiConvention::Minus),
        _ => None,
    };
    Ok(XiRepReport {
        plus_failures,
        minus_failures,
        convention,
    })
}

/// `S_ij = F_ij - x_i p_j + p_i x_j` for the six pairs `i < j`, from any
/// list of generator images.
pub fn spin_part_of<O: Operator>(images: &[O]) -> Vec<O> {
    LORENTZ_PAIRS
        .iter()
        .enumerate()
        .map(|(k, &(i, j))| {
            let (xi, xj) = (
                &images[Generator::x(i).index()],
                &images[Generator::x(j).index()],
            );
            let (pi, pj) = (
                &images[Generator::p(i).index()],
                &images[Generator::p(j).index()],
            );
            images[k].op_sub(&xi.op_mul(pj)).op_add(&pi.op_mul(xj))
        })
        .collect()
}

pub fn spin_part(cfg: &XiRepConfig) -> Vec<WeylElement<GaussRational>> {
    spin_part_of(&xi_rep(cfg))
}

/// Canonical realization: `x_i` multiplies by `xi_i`, `p_i = i hbar d_i`,
/// `F_ij = x_i p_j - x_j p_i`, `I = 1`.
pub fn canonical_x_rep(hbar: &Rational) -> Vec<WeylElement<GaussRational>> {
    let ih = GaussRational::imag(hbar.clone());
    let x = |i: usize| lowered::<GaussRational>(i);
    let p = |i: usize| WeylElement::<GaussRational>::d(i).scale(&ih);
    ALL.iter()
        .map(|&g| match g {
            g if g.is_lorentz() => {
                let (i, j) = g.lorentz_indices().unwrap();
                x(i).product(&p(j)) - &x(j).product(&p(i))
            }
            Generator::Id => WeylElement::one(),
            g if g.index() < 10 => p(g.index() - 6),
            g => x(g.index() - 10),
        })
        .collect()
}

/// Whether every off-diagonal `S_ij` of [`canonical_x_rep`] vanishes.
pub fn canonical_spin_vanishes(hbar: &Rational) -> bool {
    spin_part_of(&canonical_x_rep(hbar))
        .iter()
        .all(|s| s.is_zero())
}
