//! Exact scalars: rationals, Gaussian rationals and the ring traits the rest
//! of the crate is generic over.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// A commutative-or-not ring with exact arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Send
        + Sync
        + Zero
        + One
        + Neg<Output = Self>
        + for<'a> Add<&'a Self, Output = Self>
        + for<'a> Sub<&'a Self, Output = Self>
        + for<'a> Mul<&'a Self, Output = Self>
{
}

pub trait Field: Ring + for<'a> Div<&'a Self, Output = Self> {}

impl<T> Field for T where T: Ring + for<'a> Div<&'a Self, Output = Self> {}

/// Coefficient rings that contain the Gaussian rationals.
pub trait Coefficient: Ring + From<GaussRational> + fmt::Display {
    fn from_int(n: i64) -> Self {
        Self::from(GaussRational::from_int(n))
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `-p`, `p/q` or `-p/q` (optional leading `+`, surrounding
/// whitespace ignored). Denominators must be nonzero.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let num = parse_int(num, true)?;
    let den = match den {
        Some(d) => parse_int(d, false)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::parse(0, "zero denominator"));
    }
    Ok(Rational::new(num, den))
}

fn parse_int(s: &str, signed: bool) -> Result<BigInt> {
    let (neg, digits) = match s.as_bytes().first() {
        Some(b'-') if signed => (true, &s[1..]),
        Some(b'+') if signed => (false, &s[1..]),
        _ => (false, s),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(0, format!("`{s}` is not an integer")));
    }
    let v: BigInt = digits
        .parse()
        .map_err(|_| Error::parse(0, format!("`{s}` is not an integer")))?;
    Ok(if neg { -v } else { v })
}

/// Returns `Some(r)` with `r >= 0` and `r^2 == q` when `q` is the square of
/// a rational.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Complex number with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn imag(im: Rational) -> Self {
        GaussRational {
            re: Rational::zero(),
            im,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(rat_int(n))
    }

    pub fn i() -> Self {
        Self::imag(Rational::one())
    }

    pub fn conj(&self) -> Self {
        GaussRational::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(GaussRational::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussRational::new(&self.re * r, &self.im * r)
    }

    /// Parses the exact-string form written by `Display` (`p/q+r/s*i`,
    /// `i`, `-3/2*i`, ...). Also accepts any constant expression.
    pub fn parse(s: &str) -> Result<Self> {
        crate::algebra::expr::parse_poly(s)?
            .as_constant()
            .ok_or_else(|| Error::parse(0, format!("`{s}` is not a constant")))
    }
}

fn fmt_imag(im: &Rational) -> String {
    if im.is_one() {
        "i".to_string()
    } else if (-im.clone()).is_one() {
        "-i".to_string()
    } else {
        format!("{}*i", format_rational(im))
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => f.write_str(&format_rational(&self.re)),
            (true, false) => f.write_str(&fmt_imag(&self.im)),
            (false, false) => {
                let im = fmt_imag(&self.im.abs());
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}", format_rational(&self.re), sign, im)
            }
        }
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Rational> for GaussRational {
    fn from(r: Rational) -> Self {
        GaussRational::real(r)
    }
}

impl From<i64> for GaussRational {
    fn from(n: i64) -> Self {
        GaussRational::from_int(n)
    }
}

impl Coefficient for GaussRational {}

impl<'b> Add<&'b GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn add(self, o: &'b GaussRational) -> GaussRational {
        GaussRational::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'b> Sub<&'b GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn sub(self, o: &'b GaussRational) -> GaussRational {
        GaussRational::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'b> Mul<&'b GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn mul(self, o: &'b GaussRational) -> GaussRational {
        GaussRational::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl<'b> Div<&'b GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn div(self, o: &'b GaussRational) -> GaussRational {
        self * &o.inv().expect("division by zero Gaussian rational")
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        -(self.clone())
    }
}

/// Forwards the owned/borrowed operator combinations to the `&a op &b` impl.
macro_rules! forward_binops {
    ($t:ty; $($tr:ident $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, o: $t) -> $t { (&self).$m(&o) }
        }
        impl<'b> $tr<&'b $t> for $t {
            type Output = $t;
            fn $m(self, o: &'b $t) -> $t { (&self).$m(o) }
        }
        impl<'a> $tr<$t> for &'a $t {
            type Output = $t;
            fn $m(self, o: $t) -> $t { self.$m(&o) }
        }
    )*};
}
pub(crate) use forward_binops;

forward_binops!(GaussRational; Add add, Sub sub, Mul mul, Div div);

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        GaussRational::from_int(1)
    }
}
