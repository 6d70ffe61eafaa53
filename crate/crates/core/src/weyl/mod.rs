//! Polynomial differential operators in `xi^0..xi^3`, kept in normal order
//! `sum c xi^alpha d^beta` (all multiplications left of all derivatives).

pub mod scalar;
pub mod xi;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::operator::Operator;
use crate::algebra::poly::{ParamPoly, Var};
use crate::algebra::scalar::{Coefficient, GaussRational};
use crate::error::Result;

pub use scalar::{
    infinite_h_terms, scalar_operator, scalar_operator_from_images, scalar_terms, ScalarTerm,
};
pub use xi::{
    canonical_x_rep, spin_part, spin_part_of, verify_xi_rep, xi_rep, xi_rep_symbolic, XiConvention,
    XiRepConfig, XiRepReport, XI_CONVENTION,
};

/// Exponents of `xi^0..xi^3` (or of `d_0..d_3`).
pub type Exps = [u16; 4];

pub const NO_EXPS: Exps = [0; 4];

fn unit_exps(i: usize) -> Exps {
    let mut e = NO_EXPS;
    e[i] = 1;
    e
}

fn binom(n: u16, k: u16) -> i64 {
    (0..k as i64).fold(1, |acc, j| acc * (n as i64 - j) / (j + 1))
}

fn falling(n: u16, k: u16) -> i64 {
    (0..k as i64).map(|j| n as i64 - j).product()
}

#[derive(Clone, PartialEq, Eq)]
pub struct WeylElement<C = GaussRational> {
    terms: BTreeMap<(Exps, Exps), C>,
}

pub type SymbolicWeyl = WeylElement<ParamPoly>;

impl<C: Coefficient> WeylElement<C> {
    pub fn term(xi: Exps, d: Exps, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((xi, d), c);
        }
        WeylElement { terms }
    }

    pub fn constant(c: C) -> Self {
        Self::term(NO_EXPS, NO_EXPS, c)
    }

    /// Multiplication by `xi^i`.
    pub fn xi(i: usize) -> Self {
        Self::term(unit_exps(i), NO_EXPS, C::one())
    }

    /// `d / d xi^i`.
    pub fn d(i: usize) -> Self {
        Self::term(NO_EXPS, unit_exps(i), C::one())
    }

    /// The Euler operator `xi^m d_m`.
    pub fn euler() -> Self {
        (0..4).fold(Self::zero(), |acc, m| {
            acc + &Self::term(unit_exps(m), unit_exps(m), C::one())
        })
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Exps, &C)> {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, xi: Exps, d: Exps) -> C {
        self.terms.get(&(xi, d)).cloned().unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, key: (Exps, Exps), c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            Some(old) => {
                let s = old + &c;
                if !s.is_zero() {
                    self.terms.insert(key, s);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.add_term(*k, v.clone() * c);
        }
        out
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> WeylElement<D> {
        let mut out = WeylElement::zero();
        for (k, v) in &self.terms {
            out.add_term(*k, f(v));
        }
        out
    }

    pub fn try_map<D: Coefficient>(&self, f: impl Fn(&C) -> Result<D>) -> Result<WeylElement<D>> {
        let mut out = WeylElement::zero();
        for (k, v) in &self.terms {
            out.add_term(*k, f(v)?);
        }
        Ok(out)
    }

    /// Normal-ordered product via the generalized Leibniz rule:
    /// `(xi^a d^b)(xi^c d^e) = sum_k prod_m C(b_m,k_m) C(c_m,k_m) k_m! xi^(a+c-k) d^(b+e-k)`.
    pub fn product(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c1) in &self.terms {
            for ((c, e), c2) in &o.terms {
                let w = c1.clone() * c2;
                let kmax: Exps = std::array::from_fn(|m| b[m].min(c[m]));
                for k0 in 0..=kmax[0] {
                    for k1 in 0..=kmax[1] {
                        for k2 in 0..=kmax[2] {
                            for k3 in 0..=kmax[3] {
                                let k = [k0, k1, k2, k3];
                                let mult: i64 = (0..4)
                                    .map(|m| {
                                        binom(b[m], k[m]) * binom(c[m], k[m]) * falling(k[m], k[m])
                                    })
                                    .product();
                                let xi = std::array::from_fn(|m| a[m] + c[m] - k[m]);
                                let d = std::array::from_fn(|m| b[m] + e[m] - k[m]);
                                out.add_term((xi, d), w.clone() * &C::from_int(mult));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.product(o) - &o.product(self)
    }

    /// Spatial reflection `xi^k -> -xi^k`, `d_k -> -d_k` for `k = 1, 2, 3`.
    pub fn parity(&self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            let odd = (1..4).map(|k| (a[k] + b[k]) as u32).sum::<u32>() % 2 == 1;
            out.add_term((*a, *b), if odd { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Action on a polynomial by direct differentiation.
    pub fn apply(&self, p: &XiPoly<C>) -> XiPoly<C> {
        let mut out = XiPoly::zero();
        for ((a, b), c) in &self.terms {
            for (g, d) in &p.terms {
                if (0..4).any(|m| g[m] < b[m]) {
                    continue;
                }
                let mult: i64 = (0..4).map(|m| falling(g[m], b[m])).product();
                let e = std::array::from_fn(|m| a[m] + g[m] - b[m]);
                out.add_term(e, c.clone() * d * &C::from_int(mult));
            }
        }
        out
    }
}

impl WeylElement<ParamPoly> {
    /// Binds the free symbols, e.g. `a`.
    pub fn evaluate(
        &self,
        bindings: &std::collections::HashMap<Var, ParamPoly>,
    ) -> Result<WeylElement<GaussRational>> {
        self.try_map(|p| p.evaluate(bindings))
    }
}

impl<C: Coefficient> Zero for WeylElement<C> {
    fn zero() -> Self {
        WeylElement {
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient> One for WeylElement<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Coefficient> Neg for WeylElement<C> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(&-C::one())
    }
}

impl<'a, C: Coefficient> Add<&'a WeylElement<C>> for WeylElement<C> {
    type Output = Self;
    fn add(mut self, o: &'a Self) -> Self {
        for (k, v) in &o.terms {
            self.add_term(*k, v.clone());
        }
        self
    }
}

impl<'a, C: Coefficient> Sub<&'a WeylElement<C>> for WeylElement<C> {
    type Output = Self;
    fn sub(mut self, o: &'a Self) -> Self {
        for (k, v) in &o.terms {
            self.add_term(*k, -v.clone());
        }
        self
    }
}

impl<'a, C: Coefficient> Mul<&'a WeylElement<C>> for WeylElement<C> {
    type Output = Self;
    fn mul(self, o: &'a Self) -> Self {
        self.product(o)
    }
}

impl<C: Coefficient> Add for WeylElement<C> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self + &o
    }
}

impl<C: Coefficient> Mul for WeylElement<C> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.product(&o)
    }
}

impl<C: Coefficient> Operator for WeylElement<C> {
    fn op_mul(&self, o: &Self) -> Self {
        self.product(o)
    }
    fn op_add(&self, o: &Self) -> Self {
        self.clone() + o
    }
    fn op_scale(&self, c: &GaussRational) -> Self {
        self.scale(&C::from(c.clone()))
    }
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn op_is_zero(&self) -> bool {
        self.is_zero()
    }
}

fn write_factor(f: &mut fmt::Formatter<'_>, sym: &str, e: &Exps, first: &mut bool) -> fmt::Result {
    for (m, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !*first {
            f.write_str("*")?;
        }
        *first = false;
        write!(f, "{sym}{m}")?;
        if k > 1 {
            write!(f, "^{k}")?;
        }
    }
    Ok(())
}

fn write_coeff<C: fmt::Display>(f: &mut fmt::Formatter<'_>, c: &C, bare: bool) -> fmt::Result {
    let s = c.to_string();
    let compound = s.contains(['+', ' ']) || s[1..].contains('-');
    if bare {
        f.write_str(&s)
    } else if s == "1" {
        Ok(())
    } else if s == "-1" {
        f.write_str("-")
    } else if compound {
        write!(f, "({s})*")
    } else {
        write!(f, "{s}*")
    }
}

impl<C: Coefficient> fmt::Display for WeylElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, ((a, b), c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let bare = a == &NO_EXPS && b == &NO_EXPS;
            write_coeff(f, c, bare)?;
            let mut first = true;
            write_factor(f, "xi", a, &mut first)?;
            write_factor(f, "d", b, &mut first)?;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for WeylElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Polynomial in `xi^0..xi^3`.
#[derive(Clone, PartialEq, Eq)]
pub struct XiPoly<C = GaussRational> {
    terms: BTreeMap<Exps, C>,
}

impl<C: Coefficient> XiPoly<C> {
    pub fn zero() -> Self {
        XiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(e: Exps, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exps) -> C {
        self.terms.get(&e).cloned().unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, e: Exps, c: C) {
        if c.is_zero() {
            return;
        }
        let s = match self.terms.remove(&e) {
            Some(old) => old + &c,
            None => c,
        };
        if !s.is_zero() {
            self.terms.insert(e, s);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<C: Coefficient> fmt::Debug for XiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write_coeff(f, c, *e == NO_EXPS)?;
            let mut first = true;
            write_factor(f, "xi", e, &mut first)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type W = WeylElement<GaussRational>;

    fn c(n: i64) -> GaussRational {
        GaussRational::from_int(n)
    }

    #[test]
    fn defining_relations() {
        assert_eq!(
            W::d(0).product(&W::xi(0)),
            W::term(unit_exps(0), unit_exps(0), c(1)) + &W::one()
        );
        assert_eq!(
            W::d(1).product(&W::xi(0)),
            W::term(unit_exps(0), unit_exps(1), c(1))
        );
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { W::one() } else { W::zero() };
                assert_eq!(W::d(i).commutator(&W::xi(j)), want);
            }
        }
        assert!(W::xi(1).commutator(&W::xi(2)).is_zero());
        assert_eq!(W::euler().commutator(&W::d(2)), -W::d(2));
    }

    #[test]
    fn euler_square() {
        let e = W::term(unit_exps(0), unit_exps(0), c(1));
        let want = W::term([2, 0, 0, 0], [2, 0, 0, 0], c(1)) + &e;
        assert_eq!(e.product(&e), want);
    }

    #[test]
    fn apply_examples() {
        let p = XiPoly::monomial(unit_exps(0), c(1));
        assert_eq!(W::d(0).apply(&p), XiPoly::monomial(NO_EXPS, c(1)));
        assert!(W::euler().apply(&XiPoly::zero()).is_zero());
    }

    #[test]
    fn display() {
        let w = W::term([1, 0, 0, 0], [0, 2, 0, 0], GaussRational::i()) + &W::constant(c(-3));
        assert_eq!(w.to_string(), "-3 + i*xi0*d1^2");
    }

    fn arb_weyl() -> impl Strategy<Value = W> {
        let exps = proptest::array::uniform4(0u16..3);
        proptest::collection::vec((exps.clone(), exps, -3i64..4, -3i64..4), 0..4).prop_map(|ts| {
            ts.into_iter().fold(W::zero(), |acc, (a, b, re, im)| {
                acc + &W::term(
                    a,
                    b,
                    GaussRational::new(
                        crate::algebra::scalar::rat_int(re),
                        crate::algebra::scalar::rat_int(im),
                    ),
                )
            })
        })
    }

    fn monomials(max_deg: u16) -> Vec<Exps> {
        let mut out = Vec::new();
        for a in 0..=max_deg {
            for b in 0..=max_deg - a {
                for c in 0..=max_deg - a - b {
                    for d in 0..=max_deg - a - b - c {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn product_is_associative(u in arb_weyl(), v in arb_weyl(), w in arb_weyl()) {
            prop_assert_eq!(u.product(&v).product(&w), u.product(&v.product(&w)));
        }

        // product agrees with composition of actions on every monomial up to degree 6
        #[test]
        fn product_matches_composition(u in arb_weyl(), v in arb_weyl()) {
            let uv = u.product(&v);
            for e in monomials(6) {
                let p = XiPoly::monomial(e, c(1));
                prop_assert_eq!(uv.apply(&p), u.apply(&v.apply(&p)));
            }
        }

        #[test]
        fn parity_is_an_involutive_automorphism(u in arb_weyl(), v in arb_weyl()) {
            prop_assert_eq!(u.parity().parity(), u.clone());
            prop_assert_eq!(u.product(&v).parity(), u.parity().product(&v.parity()));
        }
    }
}
