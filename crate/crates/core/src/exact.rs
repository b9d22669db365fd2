//! Exact coefficient arithmetic: big rationals and Gaussian rationals.
//!
//! Everything downstream is generic over the small [`Ring`] / [`Field`]
//! traits defined here so the same polynomial code runs over `Q`, `Q(i)`
//! and over polynomial rings such as `Q[t]`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Commutative ring with identity. Methods take references so big-number
/// implementations avoid needless clones.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_i64(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse. Panics on zero; callers test `is_zero` first.
    fn inv(&self) -> Self;

    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }

    /// Nonzero scalar that brings a coefficient vector to a compact form,
    /// used to keep remainder sequences small. Defaults to `1 / last`.
    fn compact_scale(coeffs: &[Self]) -> Self {
        coeffs.last().filter(|c| !c.is_zero()).map_or(Self::one(), |c| c.inv())
    }

    /// A gcd (up to a unit) of two nonzero dense coefficient vectors, lowest
    /// degree first, when the field has a faster method than Euclid's.
    fn fast_gcd(_a: &[Self], _b: &[Self]) -> Option<Vec<Self>> {
        None
    }
}

/// Primitive integer multiple of a dense rational coefficient vector.
fn primitive_ints(qs: &[Rational]) -> Vec<BigInt> {
    let s = content_inverse(qs.iter());
    qs.iter().map(|q| (q * &s).to_integer()).collect()
}

fn make_primitive(mut p: Vec<BigInt>) -> Vec<BigInt> {
    let g = p.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in &mut p {
            *c /= &g;
        }
    }
    p
}

/// Pseudo-remainder of `a` by `b` over the integers; `b` must be nonzero
/// with nonzero last entry.
fn integer_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let top = r.len() - 1;
        let lr = r[top].clone();
        let shift = top - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &lr * bc;
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

/// `lcm(denominators) / gcd(numerators)` over a list of rationals; one if
/// all are zero.
fn content_inverse<'a>(qs: impl Iterator<Item = &'a Rational>) -> Rational {
    let (mut num, mut den) = (BigInt::zero(), BigInt::one());
    for q in qs {
        num = num.gcd(q.numer());
        den = den.lcm(q.denom());
    }
    if num.is_zero() {
        return rat(1);
    }
    BigRational::new(den, num)
}

/// Integral domain with exact division (the quotient is known to exist).
pub trait ExactDiv: Ring {
    fn exact_div(&self, divisor: &Self) -> Self;
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Field for Rational {
    fn inv(&self) -> Self {
        self.recip()
    }

    fn compact_scale(coeffs: &[Self]) -> Self {
        content_inverse(coeffs.iter())
    }

    /// Primitive pseudo-remainder sequence on integer coefficients.
    fn fast_gcd(a: &[Self], b: &[Self]) -> Option<Vec<Self>> {
        let (mut a, mut b) = (primitive_ints(a), primitive_ints(b));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = make_primitive(integer_prem(&a, &b));
            a = b;
            b = r;
        }
        Some(a.into_iter().map(BigRational::from_integer).collect())
    }
}

impl ExactDiv for Rational {
    fn exact_div(&self, divisor: &Self) -> Self {
        self / divisor
    }
}

/// Integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_i64(n)
}

/// `num / den` in lowest terms. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Checked rational division.
pub fn rat_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if Zero::is_zero(b) {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// Sign as -1, 0 or 1.
pub fn rat_sign(q: &Rational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Decimal rendering of `q` with exactly `places` digits after the point,
/// rounded half away from zero.
pub fn rational_to_decimal(q: &Rational, places: usize) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled = q * BigRational::from_integer(scale.clone());
    let neg = scaled.is_negative();
    let abs = scaled.abs();
    let floor = abs.floor().to_integer();
    let frac = &abs - BigRational::from_integer(floor.clone());
    let half = ratio(1, 2);
    let rounded = if frac >= half { floor + 1 } else { floor };
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let mut out = String::new();
    if neg && !(int_part.is_zero() && frac_part.is_zero()) {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if places > 0 {
        let digits = frac_part.to_string();
        out.push('.');
        for _ in digits.len()..places {
            out.push('0');
        }
        out.push_str(&digits);
    }
    out
}

/// Lossy conversion used only for display and diagnostics.
pub fn rat_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// The rational with the smallest denominator in the open interval `(lo, hi)`.
pub fn simplest_rational_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo < hi);
    let zero = rat(0);
    if *lo < zero && *hi > zero {
        zero
    } else if *hi <= zero {
        -simplest_nonnegative(&-hi, Some(&-lo))
    } else {
        simplest_nonnegative(lo, Some(hi))
    }
}

/// Continued-fraction descent on `(lo, hi)` with `0 <= lo`; `None` is +inf.
fn simplest_nonnegative(lo: &Rational, hi: Option<&Rational>) -> Rational {
    let whole = lo.floor();
    let next = &whole + rat(1);
    match hi {
        None => return next,
        Some(h) if &next < h => return next,
        _ => {}
    }
    let hi = hi.expect("bounded branch");
    // Interval lies inside (whole, whole + 1]; write x = whole + 1/y.
    let y_lo = (hi - &whole).recip();
    let y_hi = if *lo == whole { None } else { Some((lo - &whole).recip()) };
    &whole + simplest_nonnegative(&y_lo, y_hi.as_ref()).recip()
}

/// Exact complex number with rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational { re, im: rat(0) }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational::new(rat(re), rat(im))
    }

    pub fn i() -> Self {
        GaussianRational::from_ints(0, 1)
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    /// Squared modulus `re² + im²`.
    pub fn abs2(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        GaussianRational::new(&self.re * q, &self.im * q)
    }

    /// Checked division.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if Ring::is_zero(rhs) {
            return Err(Error::DivisionByZero);
        }
        Ok(Field::div(self, rhs))
    }
}

/// The four field operations, as a single entry point for callers that
/// select the operation at runtime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn arith(lhs: &GaussianRational, rhs: &GaussianRational, op: ArithOp) -> Result<GaussianRational> {
    Ok(match op {
        ArithOp::Add => Ring::add(lhs, rhs),
        ArithOp::Sub => Ring::sub(lhs, rhs),
        ArithOp::Mul => Ring::mul(lhs, rhs),
        ArithOp::Div => lhs.checked_div(rhs)?,
    })
}

impl Ring for GaussianRational {
    fn zero() -> Self {
        GaussianRational::from_ints(0, 0)
    }
    fn one() -> Self {
        GaussianRational::from_ints(1, 0)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, rhs: &Self) -> Self {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
    fn sub(&self, rhs: &Self) -> Self {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
    fn mul(&self, rhs: &Self) -> Self {
        if Zero::is_zero(&self.im) && Zero::is_zero(&rhs.im) {
            return GaussianRational::from_rational(&self.re * &rhs.re);
        }
        GaussianRational::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
    fn neg(&self) -> Self {
        GaussianRational::new(-&self.re, -&self.im)
    }
    fn from_i64(n: i64) -> Self {
        GaussianRational::from_ints(n, 0)
    }
}

impl Field for GaussianRational {
    fn inv(&self) -> Self {
        let n = self.abs2();
        assert!(!Zero::is_zero(&n), "inverse of zero Gaussian rational");
        GaussianRational::new(&self.re / &n, -&self.im / &n)
    }

    fn compact_scale(coeffs: &[Self]) -> Self {
        GaussianRational::from_rational(content_inverse(coeffs.iter().flat_map(|c| [&c.re, &c.im])))
    }
}

impl ExactDiv for GaussianRational {
    fn exact_div(&self, divisor: &Self) -> Self {
        Field::div(self, divisor)
    }
}

impl fmt::Display for GaussianRational {
    /// `3/8`, `3/8 i`, `3/8 - 3/8 i`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re0 = Zero::is_zero(&self.re);
        let im0 = Zero::is_zero(&self.im);
        match (re0, im0) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{} i", fmt_rational(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{} {} {} i", fmt_rational(&self.re), sign, fmt_rational(&self.im.abs()))
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl PartialOrd for GaussianRational {
    /// Lexicographic on (re, im); used only for deterministic ordering.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GaussianRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
}

/// Binomial coefficient as a rational.
pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return rat(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    BigRational::from_integer(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: Rational, im: Rational) -> GaussianRational {
        GaussianRational::new(re, im)
    }

    #[test]
    fn products_with_conjugates() {
        let w = GaussianRational::from_ints(1, 1);
        let c = GaussianRational::from_ints(1, -1);
        assert_eq!(arith(&w, &c, ArithOp::Mul).unwrap(), GaussianRational::from_ints(2, 0));

        let a = GaussianRational::from_ints(1, -2);
        assert_eq!(arith(&a, &a.conj(), ArithOp::Mul).unwrap(), GaussianRational::from_ints(5, 0));

        let a = GaussianRational::from_ints(3, -2);
        assert_eq!(arith(&a, &a.conj(), ArithOp::Mul).unwrap(), GaussianRational::from_ints(13, 0));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let w = GaussianRational::from_ints(1, 1);
        let z = GaussianRational::zero();
        assert!(matches!(arith(&w, &z, ArithOp::Div), Err(Error::DivisionByZero)));
        assert!(rat_div(&rat(1), &rat(0)).is_err());
    }

    #[test]
    fn conjugation() {
        assert_eq!(GaussianRational::from_ints(1, -2).conj(), GaussianRational::from_ints(1, 2));
        assert_eq!(GaussianRational::zero().conj(), GaussianRational::zero());
        let w = g(ratio(3, 8), ratio(-3, 8));
        assert_eq!(w.conj(), g(ratio(3, 8), ratio(3, 8)));
    }

    #[test]
    fn squared_modulus() {
        assert_eq!(GaussianRational::from_ints(1, 1).abs2(), rat(2));
        assert_eq!(g(ratio(1, 8), ratio(1, 8)).abs2(), ratio(1, 32));
        assert_eq!(g(ratio(3, 8), ratio(-3, 8)).abs2(), ratio(9, 32));
    }

    #[test]
    fn display_forms() {
        assert_eq!(g(ratio(1, 8), ratio(1, 8)).to_string(), "1/8 + 1/8 i");
        assert_eq!(GaussianRational::from_ints(1, -2).to_string(), "1 - 2 i");
        assert_eq!(GaussianRational::from_ints(0, 3).to_string(), "3 i");
        assert_eq!(GaussianRational::from_ints(2, 0).to_string(), "2");
        assert_eq!(GaussianRational::zero().to_string(), "0");
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(rational_to_decimal(&ratio(1, 3), 4), "0.3333");
        assert_eq!(rational_to_decimal(&ratio(-2, 3), 3), "-0.667");
        assert_eq!(rational_to_decimal(&rat(5), 2), "5.00");
        assert_eq!(rational_to_decimal(&ratio(-1, 1000), 2), "0.00");
        assert_eq!(rational_to_decimal(&ratio(1, 20), 1), "0.1");
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_rational_between(&ratio(1, 3), &ratio(1, 2)), ratio(2, 5));
        assert_eq!(simplest_rational_between(&ratio(-1, 2), &ratio(1, 2)), rat(0));
        assert_eq!(simplest_rational_between(&ratio(3, 2), &ratio(7, 2)), rat(2));
        assert_eq!(simplest_rational_between(&ratio(-7, 20), &ratio(-3, 10)), ratio(-1, 3));
        assert_eq!(simplest_rational_between(&rat(1), &ratio(3, 2)), ratio(4, 3));
        assert_eq!(simplest_rational_between(&(ratio(1, 10) - ratio(1, 1000)), &(ratio(1, 10) + ratio(1, 1000))), ratio(1, 10));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), rat(10));
        assert_eq!(binomial(6, 0), rat(1));
        assert_eq!(binomial(3, 4), rat(0));
    }
}
