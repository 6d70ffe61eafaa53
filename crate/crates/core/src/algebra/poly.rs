//! Sparse polynomials in the formal parameters of the algebra families.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{format_rational, forward_binops, Coefficient, GaussRational, Rational};
use crate::error::{Error, Result};

pub const NUM_VARS: usize = 20;

/// Formal parameters.
///
/// `Q(k)` for `k = 1..=14` are the real symbols of the general 14-parameter
/// bracket ansatz; each ansatz parameter is stored as `i * q_k`:
///
/// | q  | parameter | bracket                           |
/// |----|-----------|-----------------------------------|
/// | 1  | phi       | [F,F]                             |
/// | 2  | A         | [p,x] along g_ij I                |
/// | 3  | B         | [p,x] along F_ij                  |
/// | 4  | C         | [p,x] along eps_ijkl F^kl         |
/// | 5  | a         | [p,p] along F_ij                  |
/// | 6  | b         | [p,p] along eps_ijkl F^kl         |
/// | 7  | c         | [x,x] along F_ij                  |
/// | 8  | d         | [x,x] along eps_ijkl F^kl         |
/// | 9  | alpha     | [p,I] along x                     |
/// | 10 | beta      | [p,I] along p                     |
/// | 11 | gamma     | [x,I] along x                     |
/// | 12 | delta     | [x,I] along p                     |
/// | 13 | h         | [F,x]                             |
/// | 14 | f         | [F,p]                             |
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    F,
    Lambda,
    Mu,
    Eta,
    Hbar,
    /// Free parameter of the differential-operator representation.
    A,
    Q(u8),
}

impl Var {
    pub fn index(self) -> usize {
        match self {
            Var::F => 0,
            Var::Lambda => 1,
            Var::Mu => 2,
            Var::Eta => 3,
            Var::Hbar => 4,
            Var::A => 5,
            Var::Q(k) => 5 + k as usize,
        }
    }

    pub fn from_index(i: usize) -> Var {
        match i {
            0 => Var::F,
            1 => Var::Lambda,
            2 => Var::Mu,
            3 => Var::Eta,
            4 => Var::Hbar,
            5 => Var::A,
            k => Var::Q((k - 5) as u8),
        }
    }

    pub fn name(self) -> String {
        match self {
            Var::F => "f".into(),
            Var::Lambda => "lambda".into(),
            Var::Mu => "mu".into(),
            Var::Eta => "eta".into(),
            Var::Hbar => "hbar".into(),
            Var::A => "a".into(),
            Var::Q(k) => format!("q{k}"),
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Some(match s {
            "f" => Var::F,
            "lambda" => Var::Lambda,
            "mu" => Var::Mu,
            "eta" => Var::Eta,
            "hbar" => Var::Hbar,
            "a" => Var::A,
            _ => {
                let k: u8 = s.strip_prefix('q')?.parse().ok()?;
                if !(1..=14).contains(&k) || s.len() > 3 || s.starts_with("q0") {
                    return None;
                }
                Var::Q(k)
            }
        })
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Exponent vector over all formal parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub [u16; NUM_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        let mut m = Monomial::default();
        m.0[v.index()] = 1;
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(o.0.iter()) {
            *a = a.saturating_add(*b);
        }
        r
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, u16)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (Var::from_index(i), e))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .vars()
            .map(|(v, e)| {
                if e == 1 {
                    v.name()
                } else {
                    format!("{}^{}", v.name(), e)
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Polynomial with Gaussian-rational coefficients. Zero coefficients are
/// never stored, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, GaussRational>,
}

impl ParamPoly {
    pub fn constant(c: GaussRational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(GaussRational::one(), Monomial::var(v))
    }

    pub fn term(c: GaussRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ParamPoly { terms }
    }

    /// `i * v`.
    pub fn i_var(v: Var) -> Self {
        Self::term(GaussRational::i(), Monomial::var(v))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, m: Monomial, c: &GaussRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e = &*e + c;
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn as_constant(&self) -> Option<GaussRational> {
        match self.terms.len() {
            0 => Some(GaussRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = ParamPoly::one();
        for _ in 0..n {
            r = &r * self;
        }
        r
    }

    /// Variables that occur with nonzero exponent.
    pub fn variables(&self) -> Vec<Var> {
        let mut seen = [false; NUM_VARS];
        for m in self.terms.keys() {
            for (v, _) in m.vars() {
                seen[v.index()] = true;
            }
        }
        (0..NUM_VARS)
            .filter(|&i| seen[i])
            .map(Var::from_index)
            .collect()
    }

    /// Replaces bound variables by polynomials; unbound ones stay formal.
    pub fn substitute(&self, bindings: &HashMap<Var, ParamPoly>) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m, c) in &self.terms {
            let mut rest = Monomial::one();
            let mut acc = ParamPoly::constant(c.clone());
            for (v, e) in m.vars() {
                match bindings.get(&v) {
                    Some(p) => acc = &acc * &p.pow(e as u32),
                    None => rest.0[v.index()] = e,
                }
            }
            for (m2, c2) in acc.terms {
                out.add_term(m2.mul(&rest), &c2);
            }
        }
        out
    }

    /// Full evaluation; fails on the first unbound variable.
    pub fn evaluate(&self, bindings: &HashMap<Var, ParamPoly>) -> Result<GaussRational> {
        let p = self.substitute(bindings);
        p.as_constant().ok_or_else(|| {
            Error::Unbound(p.variables().first().map(|v| v.name()).unwrap_or_default())
        })
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let t = format_term(m, c);
            if k == 0 {
                out.push_str(&t);
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&t);
            }
        }
        f.write_str(&out)
    }
}

fn format_term(m: &Monomial, c: &GaussRational) -> String {
    if m.is_one() {
        return c.to_string();
    }
    let mono = m.to_string();
    if c.is_real() {
        if c.re.is_one() {
            mono
        } else if (-c.re.clone()).is_one() {
            format!("-{mono}")
        } else {
            format!("{}*{mono}", format_rational(&c.re))
        }
    } else if c.re.is_zero() {
        // -i, i, p/q*i
        format!("{c}*{mono}")
    } else {
        format!("({c})*{mono}")
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly({self})")
    }
}

impl From<GaussRational> for ParamPoly {
    fn from(c: GaussRational) -> Self {
        ParamPoly::constant(c)
    }
}

impl From<Rational> for ParamPoly {
    fn from(c: Rational) -> Self {
        ParamPoly::constant(c.into())
    }
}

impl Coefficient for ParamPoly {}

impl<'b> Add<&'b ParamPoly> for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, o: &'b ParamPoly) -> ParamPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c);
        }
        r
    }
}

impl<'b> Sub<&'b ParamPoly> for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, o: &'b ParamPoly) -> ParamPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, &-c);
        }
        r
    }
}

impl<'b> Mul<&'b ParamPoly> for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, o: &'b ParamPoly) -> ParamPoly {
        let mut r = ParamPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        r
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -(self.clone())
    }
}

forward_binops!(ParamPoly; Add add, Sub sub, Mul mul);

impl Zero for ParamPoly {
    fn zero() -> Self {
        ParamPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for ParamPoly {
    fn one() -> Self {
        ParamPoly::constant(GaussRational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::rat;

    #[test]
    fn var_names_round_trip() {
        for i in 0..NUM_VARS {
            let v = Var::from_index(i);
            assert_eq!(v.index(), i);
            assert_eq!(Var::from_name(&v.name()), Some(v));
        }
        assert_eq!(Var::from_name("q15"), None);
        assert_eq!(Var::from_name("q01"), None);
        assert_eq!(Var::from_name("q"), None);
    }

    #[test]
    fn cancellation_leaves_no_terms() {
        let f = ParamPoly::var(Var::F);
        let p = &(&f * &f) - &(&f * &f);
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn display_is_readable() {
        let f = ParamPoly::var(Var::F);
        let eta = ParamPoly::var(Var::Eta);
        let p =
            &ParamPoly::i_var(Var::F) * &eta - ParamPoly::constant(GaussRational::real(rat(1, 2)));
        assert_eq!(p.to_string(), "i*f*eta - 1/2");
        let q = (&f * &f).scale(&GaussRational::new(rat(1, 1), rat(2, 1)));
        assert_eq!(q.to_string(), "(1+2*i)*f^2");
        assert_eq!(ParamPoly::i_var(Var::Hbar).to_string(), "i*hbar");
    }

    #[test]
    fn substitution_partial_and_full() {
        let f = ParamPoly::var(Var::F);
        let lam = ParamPoly::var(Var::Lambda);
        let p = &(&f * &f) * &lam;
        let mut b = HashMap::new();
        b.insert(Var::F, ParamPoly::var(Var::Hbar));
        assert_eq!(
            p.substitute(&b),
            &(&ParamPoly::var(Var::Hbar) * &ParamPoly::var(Var::Hbar)) * &lam
        );
        assert_eq!(p.evaluate(&b), Err(Error::Unbound("lambda".into())));
        b.insert(Var::F, ParamPoly::from(rat(3, 1)));
        b.insert(Var::Lambda, ParamPoly::from(rat(1, 9)));
        assert_eq!(p.evaluate(&b).unwrap(), GaussRational::from_int(1));
    }
}
