//! Killing form, semisimplicity, the real-form classification table and the
//! six-dimensional embedding.

pub mod embedding;
pub mod reference;

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::families::build_family;
use crate::algebra::lie::killing_matrix;
use crate::algebra::scalar::{format_rational, parse_rational, rational_sqrt, Rational, Ring};
use crate::algebra::structure::{Family, NumericConstants, ParameterPoint, StructureConstants};
use crate::error::{Error, Result};
use crate::linalg::{inertia, Matrix};

pub use embedding::{solve_embedding, EmbeddingCoefficients};

/// `K(a, b) = trace(ad_a ad_b)` in generator order.
pub fn killing_form<C: Ring>(sc: &StructureConstants<C>) -> Matrix<C> {
    killing_matrix(sc)
}

/// Inertia of the Killing form of the real form (basis `-i X`).
pub fn killing_inertia(sc: &NumericConstants) -> Result<(usize, usize, usize)> {
    Ok(inertia(&killing_matrix(&sc.real_form()?)))
}

/// A squared constant `L^2`, `M^2` or `H^2`, possibly infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtendedSquare {
    Finite(Rational),
    Inf,
}

impl ExtendedSquare {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "INF" | "Inf" => Ok(ExtendedSquare::Inf),
            t => parse_rational(t).map(ExtendedSquare::Finite),
        }
    }

    pub fn finite(r: Rational) -> Self {
        ExtendedSquare::Finite(r)
    }

    /// `1/x`, with `1/INF = 0`. Zero squares are boundary surfaces.
    pub fn inverse(&self, name: &str) -> Result<Rational> {
        match self {
            ExtendedSquare::Inf => Ok(Rational::zero()),
            ExtendedSquare::Finite(r) if r.is_zero() => Err(Error::Boundary(format!("{name} = 0"))),
            ExtendedSquare::Finite(r) => Ok(r.recip()),
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            ExtendedSquare::Inf => true,
            ExtendedSquare::Finite(r) => r.is_positive(),
        }
    }
}

impl fmt::Display for ExtendedSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedSquare::Inf => f.write_str("inf"),
            ExtendedSquare::Finite(r) => f.write_str(&format_rational(r)),
        }
    }
}

/// `x` compared with `y * z`, all positive, any of them possibly infinite.
fn cmp_with_product(x: &ExtendedSquare, y: &ExtendedSquare, z: &ExtendedSquare) -> Ordering {
    use ExtendedSquare::*;
    match (x, y, z) {
        (Finite(x), Finite(y), Finite(z)) => x.cmp(&(y * z)),
        (Inf, Finite(_), Finite(_)) => Ordering::Greater,
        (Finite(_), _, _) => Ordering::Less,
        // both sides infinite only when the point is degenerate
        _ => Ordering::Equal,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraType {
    O33,
    O24,
    O15,
    DegenO14SemiDirect,
    DegenO23SemiDirect,
    NonSemisimple,
}

impl AlgebraType {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraType::O33 => "o(3,3)",
            AlgebraType::O24 => "o(2,4)",
            AlgebraType::O15 => "o(1,5)",
            AlgebraType::DegenO14SemiDirect => "o(1,4)+R5",
            AlgebraType::DegenO23SemiDirect => "o(2,3)+R5",
            AlgebraType::NonSemisimple => "non-semisimple",
        }
    }

    /// Killing inertia of the reference algebra, built and computed afresh.
    pub fn reference_inertia(self) -> Option<(usize, usize, usize)> {
        match self {
            AlgebraType::O33 => Some(reference::so_inertia(3, 3)),
            AlgebraType::O24 => Some(reference::so_inertia(2, 4)),
            AlgebraType::O15 => Some(reference::so_inertia(1, 5)),
            AlgebraType::DegenO14SemiDirect => Some(reference::semidirect_inertia(1, 4)),
            AlgebraType::DegenO23SemiDirect => Some(reference::semidirect_inertia(2, 3)),
            AlgebraType::NonSemisimple => None,
        }
    }

    pub fn is_semisimple(self) -> bool {
        matches!(self, AlgebraType::O33 | AlgebraType::O24 | AlgebraType::O15)
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The squared constants of a point together with `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquaresPoint {
    pub l2: ExtendedSquare,
    pub m2: ExtendedSquare,
    pub h2: ExtendedSquare,
    pub f: Rational,
}

impl SquaresPoint {
    pub fn new(l2: ExtendedSquare, m2: ExtendedSquare, h2: ExtendedSquare, f: Rational) -> Self {
        SquaresPoint { l2, m2, h2, f }
    }

    fn check(&self) -> Result<(Rational, Rational, Rational)> {
        if self.f.is_zero() {
            return Err(Error::Invalid("f must be nonzero".into()));
        }
        let lambda = self.l2.inverse("L^2")?;
        let mu = self.m2.inverse("M^2")?;
        let eta2 = self.h2.inverse("H^2")?;
        if eta2.is_negative() {
            return Err(Error::Invalid("H^2 must be positive (H is real)".into()));
        }
        Ok((lambda, mu, eta2))
    }

    /// A rational `ParameterPoint` for this point. When `H^2` is not a
    /// rational square, returns the isomorphic representative obtained by
    /// rescaling `p` and `I` by `H`: `(lambda, mu, eta) -> (H^2 lambda, mu, 1)`,
    /// and flags it.
    pub fn parameter_point(&self) -> Result<(ParameterPoint, bool)> {
        let (lambda, mu, eta2) = self.check()?;
        match rational_sqrt(&eta2) {
            Some(eta) => Ok((ParameterPoint::new(self.f.clone(), lambda, mu, eta)?, false)),
            None => {
                let h2 = eta2.recip();
                Ok((
                    ParameterPoint::new(self.f.clone(), h2 * lambda, mu, Rational::one())?,
                    true,
                ))
            }
        }
    }
}

impl fmt::Display for SquaresPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(L2={}, M2={}, H2={}, f={})",
            self.l2,
            self.m2,
            self.h2,
            format_rational(&self.f)
        )
    }
}

/// `f^2 (1/H^2 - 1/(M^2 L^2))`; vanishes exactly where the Killing form
/// degenerates.
pub fn semisimple_value(
    l2: &ExtendedSquare,
    m2: &ExtendedSquare,
    h2: &ExtendedSquare,
    f: &Rational,
) -> Result<Rational> {
    let lambda = l2.inverse("L^2")?;
    let mu = m2.inverse("M^2")?;
    let eta2 = h2.inverse("H^2")?;
    Ok(f * f * (eta2 - lambda * mu))
}

/// The classification table read literally, with the degenerate surface
/// and the non-semisimple loci decided by `semisimple_value`.
pub fn classify_point(p: &SquaresPoint) -> Result<AlgebraType> {
    let (lambda, mu, _) = p.check()?;
    let sv = semisimple_value(&p.l2, &p.m2, &p.h2, &p.f)?;
    if sv.is_zero() {
        return Ok(if lambda.is_positive() && mu.is_positive() {
            AlgebraType::DegenO14SemiDirect
        } else if lambda.is_negative() && mu.is_negative() {
            AlgebraType::DegenO23SemiDirect
        } else {
            AlgebraType::NonSemisimple
        });
    }
    let (lp, mp) = (p.l2.is_positive(), p.m2.is_positive());
    if lp != mp {
        return Ok(AlgebraType::O24);
    }
    // M^2 L^2 > 0 in both remaining rows
    let (m_abs, l_abs) = if lp {
        (p.m2.clone(), p.l2.clone())
    } else {
        let neg = |s: &ExtendedSquare| match s {
            ExtendedSquare::Finite(r) => ExtendedSquare::Finite(-r),
            ExtendedSquare::Inf => ExtendedSquare::Inf,
        };
        (neg(&p.m2), neg(&p.l2))
    };
    Ok(match (cmp_with_product(&p.h2, &m_abs, &l_abs), lp) {
        (Ordering::Less, _) => AlgebraType::O24,
        (Ordering::Greater, true) => AlgebraType::O15,
        (Ordering::Greater, false) => AlgebraType::O33,
        (Ordering::Equal, true) => AlgebraType::DegenO14SemiDirect,
        (Ordering::Equal, false) => AlgebraType::DegenO23SemiDirect,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassificationReport {
    pub point: SquaresPoint,
    pub parameters: ParameterPoint,
    pub rescaled: bool,
    pub semisimple_value: Rational,
    pub killing_det_zero: bool,
    pub inertia: (usize, usize, usize),
    pub algebra_type: AlgebraType,
    pub embedding: Option<EmbeddingCoefficients>,
}

/// Classifies by the table, then checks the prediction against the exact
/// Killing inertia of the substituted HLM algebra and of the reference
/// algebra. Semisimple points also get a certified embedding.
pub fn verify_classification(p: &SquaresPoint) -> Result<ClassificationReport> {
    let predicted = classify_point(p)?;
    let (pt, rescaled) = p.parameter_point()?;
    let sc = build_family(Family::Hlm, None)?.substitute(&pt, None)?;
    let k = killing_matrix(&sc.real_form()?);
    let found = inertia(&k);
    let sv = semisimple_value(&p.l2, &p.m2, &p.h2, &p.f)?;
    let expected = predicted.reference_inertia();
    let ok = match expected {
        Some(e) => e == found,
        None => found.2 > 0,
    };
    if !ok || (found.2 == 0) == sv.is_zero() {
        return Err(Error::ClassificationMismatch {
            point: p.to_string(),
            predicted: predicted.name().into(),
            expected,
            found,
        });
    }
    let embedding = if predicted.is_semisimple() {
        Some(solve_embedding(&pt, None)?)
    } else {
        None
    };
    Ok(ClassificationReport {
        point: p.clone(),
        parameters: pt,
        rescaled,
        semisimple_value: sv,
        killing_det_zero: found.2 > 0,
        inertia: found,
        algebra_type: predicted,
        embedding,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rat, rat_int};

    fn sq(n: i64, d: i64) -> ExtendedSquare {
        ExtendedSquare::Finite(rat(n, d))
    }

    fn point(l2: ExtendedSquare, m2: ExtendedSquare, h2: ExtendedSquare) -> SquaresPoint {
        SquaresPoint::new(l2, m2, h2, rat_int(1))
    }

    #[test]
    fn table_rows() {
        let inf = ExtendedSquare::Inf;
        for (l2, m2, h2, t) in [
            (sq(1, 1), sq(1, 1), sq(1, 4), AlgebraType::O24),
            (sq(1, 1), sq(1, 1), sq(4, 1), AlgebraType::O15),
            (sq(-1, 1), sq(-1, 1), sq(4, 1), AlgebraType::O33),
            (sq(-1, 1), sq(-1, 1), sq(1, 4), AlgebraType::O24),
            (sq(-1, 1), sq(1, 1), sq(7, 1), AlgebraType::O24),
            (
                sq(1, 1),
                sq(1, 1),
                sq(1, 1),
                AlgebraType::DegenO14SemiDirect,
            ),
            (
                sq(-2, 1),
                sq(-1, 2),
                sq(1, 1),
                AlgebraType::DegenO23SemiDirect,
            ),
            (inf.clone(), sq(1, 1), sq(4, 1), AlgebraType::O24),
            (sq(1, 1), sq(1, 1), inf.clone(), AlgebraType::O15),
            (
                inf.clone(),
                sq(1, 1),
                inf.clone(),
                AlgebraType::NonSemisimple,
            ),
        ] {
            assert_eq!(classify_point(&point(l2, m2, h2)).unwrap(), t);
        }
    }

    #[test]
    fn boundary_and_sign_errors() {
        assert!(matches!(
            classify_point(&point(sq(0, 1), sq(1, 1), sq(1, 1))),
            Err(Error::Boundary(_))
        ));
        assert!(matches!(
            classify_point(&point(sq(1, 1), sq(1, 1), sq(-1, 1))),
            Err(Error::Invalid(_))
        ));
    }

    #[test]
    fn semisimple_value_examples() {
        let one = rat_int(1);
        assert!(semisimple_value(&sq(1, 1), &sq(1, 1), &sq(1, 1), &one)
            .unwrap()
            .is_zero());
        assert_eq!(
            semisimple_value(&ExtendedSquare::Inf, &sq(1, 1), &sq(4, 1), &one).unwrap(),
            rat(1, 4)
        );
        assert_eq!(
            semisimple_value(&sq(1, 1), &sq(1, 1), &ExtendedSquare::Inf, &rat_int(2)).unwrap(),
            rat_int(-4)
        );
    }

    #[test]
    fn rescaled_representative_for_irrational_h() {
        let (pt, rescaled) = point(sq(-1, 1), sq(1, 1), sq(7, 1))
            .parameter_point()
            .unwrap();
        assert!(rescaled);
        assert_eq!(pt.lambda, rat_int(-7));
        assert_eq!(pt.eta, rat_int(1));
    }
}
