//! Parameterized bracket tables over the fifteen generators.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Zero;

use super::generator::{Generator, ALL, DIM};
use super::lie::{self, LieBracket};
use super::poly::{ParamPoly, Var};
use super::scalar::{GaussRational, Rational, Ring};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Canonical,
    Ansatz,
    Hlm,
    Lm,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Canonical => "canonical",
            Family::Ansatz => "ansatz",
            Family::Hlm => "hlm",
            Family::Lm => "lm",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        match s {
            "canonical" => Ok(Family::Canonical),
            "ansatz" => Ok(Family::Ansatz),
            "hlm" => Ok(Family::Hlm),
            "lm" => Ok(Family::Lm),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }

    /// The formal parameters the family's table is written in.
    pub fn parameters(self) -> Vec<Var> {
        match self {
            Family::Canonical => vec![Var::Hbar],
            Family::Ansatz => (1..=14).map(Var::Q).collect(),
            Family::Hlm => vec![Var::F, Var::Lambda, Var::Mu, Var::Eta],
            Family::Lm => vec![Var::Lambda, Var::Mu],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Coefficient vector of a bracket in generator order.
pub type CoeffVec<C> = Vec<C>;

/// Antisymmetric bracket table. Only `[a, b]` with `a < b` and a nonzero
/// result is stored; `[b, a]` is derived by negation.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants<C = ParamPoly> {
    pub family: Option<Family>,
    /// Bindings applied at construction or substitution, for provenance.
    pub bindings: BTreeMap<Var, ParamPoly>,
    table: BTreeMap<(Generator, Generator), CoeffVec<C>>,
}

pub type NumericConstants = StructureConstants<GaussRational>;

impl<C: Ring> StructureConstants<C> {
    pub fn empty(family: Option<Family>) -> Self {
        StructureConstants {
            family,
            bindings: BTreeMap::new(),
            table: BTreeMap::new(),
        }
    }

    /// Stores `[a, b] = v` (and implicitly `[b, a] = -v`).
    pub fn insert(&mut self, a: Generator, b: Generator, v: CoeffVec<C>) {
        assert_eq!(v.len(), DIM);
        assert_ne!(a, b, "[g, g] is zero by definition");
        let (key, v) = if a < b {
            ((a, b), v)
        } else {
            ((b, a), v.into_iter().map(|c| -c).collect())
        };
        if v.iter().all(|c| c.is_zero()) {
            self.table.remove(&key);
        } else {
            self.table.insert(key, v);
        }
    }

    pub fn bracket(&self, a: Generator, b: Generator) -> CoeffVec<C> {
        if a == b {
            return vec![C::zero(); DIM];
        }
        if a < b {
            self.table
                .get(&(a, b))
                .cloned()
                .unwrap_or_else(|| vec![C::zero(); DIM])
        } else {
            self.bracket(b, a).into_iter().map(|c| -c).collect()
        }
    }

    /// Stored nonzero entries `(a, b, [a, b])` with `a < b`, in order.
    pub fn entries(&self) -> impl Iterator<Item = (Generator, Generator, &CoeffVec<C>)> {
        self.table.iter().map(|(&(a, b), v)| (a, b, v))
    }

    pub fn same_brackets(&self, other: &Self) -> bool {
        self.table == other.table
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> StructureConstants<D> {
        let mut out = StructureConstants::empty(self.family);
        out.bindings = self.bindings.clone();
        for (&(a, b), v) in &self.table {
            out.insert(a, b, v.iter().map(&f).collect());
        }
        out
    }

    pub fn try_map<D: Ring>(&self, f: impl Fn(&C) -> Result<D>) -> Result<StructureConstants<D>> {
        let mut out = StructureConstants::empty(self.family);
        out.bindings = self.bindings.clone();
        for (&(a, b), v) in &self.table {
            out.insert(a, b, v.iter().map(&f).collect::<Result<_>>()?);
        }
        Ok(out)
    }

    /// Nonzero Jacobi cyclic sums over the 455 unordered generator triples.
    pub fn jacobi_residuals(&self) -> Vec<((Generator, Generator, Generator), CoeffVec<C>)> {
        lie::jacobi_residuals_indexed(self)
            .into_iter()
            .map(|((a, b, c), v)| ((ALL[a], ALL[b], ALL[c]), v))
            .collect()
    }

    /// Column `b` holds the coefficient vector of `[a, b]`.
    pub fn adjoint_matrix(&self, a: Generator) -> Matrix<C> {
        lie::adjoint(self, a.index())
    }

    /// The table restricted to the six Lorentz generators.
    pub fn lorentz_part(&self) -> Vec<(Generator, Generator, CoeffVec<C>)> {
        self.entries()
            .filter(|(a, b, _)| a.is_lorentz() && b.is_lorentz())
            .map(|(a, b, v)| (a, b, v.clone()))
            .collect()
    }
}

impl<C: Ring> LieBracket<C> for StructureConstants<C> {
    fn dim(&self) -> usize {
        DIM
    }
    fn bracket_vec(&self, a: usize, b: usize) -> Vec<C> {
        self.bracket(ALL[a], ALL[b])
    }
}

impl StructureConstants<ParamPoly> {
    /// Partial symbolic substitution.
    pub fn specialize(&self, bindings: &HashMap<Var, ParamPoly>) -> Self {
        let mut out = self.map(|p| p.substitute(bindings));
        for (v, p) in bindings {
            out.bindings.insert(*v, p.clone());
        }
        out
    }

    /// Full substitution; every formal parameter in the table must be bound.
    pub fn substitute(
        &self,
        point: &ParameterPoint,
        ansatz_bindings: Option<&HashMap<Var, ParamPoly>>,
    ) -> Result<NumericConstants> {
        let mut b = point.bindings();
        if let Some(extra) = ansatz_bindings {
            for (v, p) in extra {
                b.insert(*v, p.clone());
            }
        }
        let mut out = self.try_map(|p| p.evaluate(&b))?;
        for (v, p) in &b {
            if self
                .entries()
                .any(|(_, _, c)| c.iter().any(|q| q.variables().contains(v)))
            {
                out.bindings.insert(*v, p.clone());
            }
        }
        Ok(out)
    }

    /// Formal parameters appearing anywhere in the table.
    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .entries()
            .flat_map(|(_, _, v)| v.iter().flat_map(|p| p.variables()))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }
}

impl NumericConstants {
    pub fn to_symbolic(&self) -> StructureConstants<ParamPoly> {
        self.map(|c| ParamPoly::constant(c.clone()))
    }

    /// Real structure constants in the anti-Hermitian basis `Y = -i X`.
    /// Fails unless every coefficient is purely imaginary.
    pub fn real_form(&self) -> Result<StructureConstants<Rational>> {
        let mi = -GaussRational::i();
        self.try_map(|c| {
            let r = c * &mi;
            if r.is_real() {
                Ok(r.re)
            } else {
                Err(Error::NotReal(format!(
                    "structure constant {c} is not purely imaginary"
                )))
            }
        })
    }
}

/// The constants defining one member of the families: `f`, `lambda = 1/L^2`,
/// `mu = 1/M^2`, `eta = 1/H`, and `hbar`. Infinite L, M or H are zero here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterPoint {
    pub f: Rational,
    pub lambda: Rational,
    pub mu: Rational,
    pub eta: Rational,
    pub hbar: Rational,
}

impl ParameterPoint {
    /// HLM point with `hbar = f`.
    pub fn new(f: Rational, lambda: Rational, mu: Rational, eta: Rational) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::Invalid("f must be nonzero".into()));
        }
        Ok(ParameterPoint {
            hbar: f.clone(),
            f,
            lambda,
            mu,
            eta,
        })
    }

    pub fn canonical(hbar: Rational) -> Result<Self> {
        let z = Rational::zero();
        Self::new(hbar, z.clone(), z.clone(), z)
    }

    pub fn bindings(&self) -> HashMap<Var, ParamPoly> {
        HashMap::from([
            (Var::F, ParamPoly::from(self.f.clone())),
            (Var::Lambda, ParamPoly::from(self.lambda.clone())),
            (Var::Mu, ParamPoly::from(self.mu.clone())),
            (Var::Eta, ParamPoly::from(self.eta.clone())),
            (Var::Hbar, ParamPoly::from(self.hbar.clone())),
        ])
    }
}
