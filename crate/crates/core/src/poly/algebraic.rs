//! Exact real algebraic numbers: a square-free integer polynomial plus an
//! isolating interval with rational endpoints.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Signed;

use super::realroots::{count_roots_between, isolate_real_roots, sturm_sequence};
use super::univariate::{resultant, UniPoly};
use crate::exact::{rat, rat_sign, ratio, rational_to_decimal, simplest_rational_between, Rational};

/// A real root of `defining`, isolated by `[lo, hi]`.
///
/// Either `lo == hi` and the value is that rational, or `lo < hi`, neither
/// endpoint is a root, `defining` has exactly one root in `(lo, hi)` and
/// changes sign across it.
#[derive(Clone)]
pub struct RealAlgebraicNumber {
    defining: UniPoly<Rational>,
    lo: Rational,
    hi: Rational,
}

impl RealAlgebraicNumber {
    pub fn from_rational(q: Rational) -> Self {
        let defining = UniPoly::new(vec![-q.clone(), rat(1)]).primitive();
        RealAlgebraicNumber { defining, lo: q.clone(), hi: q }
    }

    /// Trusts the caller that `(lo, hi)` isolates a simple root of `defining`.
    pub(crate) fn from_isolating_interval(defining: UniPoly<Rational>, lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo < hi);
        debug_assert!(defining.sign_at(&lo) * defining.sign_at(&hi) < 0);
        RealAlgebraicNumber { defining, lo, hi }
    }

    /// Validating constructor: `defining` is made square-free and primitive,
    /// and must have exactly one root in `(lo, hi)` (or vanish at `lo == hi`).
    pub fn new(defining: &UniPoly<Rational>, lo: Rational, hi: Rational) -> Option<Self> {
        if defining.is_zero() || lo > hi {
            return None;
        }
        let d = defining.squarefree_primitive();
        if lo == hi {
            return (d.sign_at(&lo) == 0).then(|| RealAlgebraicNumber::from_rational(lo));
        }
        if d.sign_at(&lo) == 0 || d.sign_at(&hi) == 0 {
            return None;
        }
        let seq = sturm_sequence(&d);
        (count_roots_between(&seq, &lo, &hi) == 1).then_some(RealAlgebraicNumber { defining: d, lo, hi })
    }

    pub fn defining(&self) -> &UniPoly<Rational> {
        &self.defining
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    /// The exact value, if the interval has collapsed to a point.
    pub fn as_exact(&self) -> Option<&Rational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    /// Halves the isolating interval (collapsing it if the midpoint is the root).
    pub fn refined(&self) -> Self {
        if self.as_exact().is_some() {
            return self.clone();
        }
        let mid = (&self.lo + &self.hi) / rat(2);
        let sm = self.defining.sign_at(&mid);
        if sm == 0 {
            return RealAlgebraicNumber::from_rational(mid);
        }
        let slo = self.defining.sign_at(&self.lo);
        if sm == slo {
            RealAlgebraicNumber { defining: self.defining.clone(), lo: mid, hi: self.hi.clone() }
        } else {
            RealAlgebraicNumber { defining: self.defining.clone(), lo: self.lo.clone(), hi: mid }
        }
    }

    /// Refines until the interval width is at most `width`.
    pub fn refined_to(&self, width: &Rational) -> Self {
        let mut x = self.clone();
        while &x.hi - &x.lo > *width {
            x = x.refined();
        }
        x
    }

    /// Returns this root if it lies in `(lo, hi)` with a tightened interval.
    pub(crate) fn restrict_to(self, lo: &Rational, hi: &Rational) -> Option<Self> {
        let mut x = self;
        loop {
            if let Some(v) = x.as_exact() {
                return (v > lo && v < hi).then_some(x);
            }
            if &x.hi <= lo || &x.lo >= hi {
                return None;
            }
            if &x.lo >= lo && &x.hi <= hi {
                return Some(x);
            }
            x = x.refined();
        }
    }

    /// Enclosure of `p` over the current interval.
    fn enclose(&self, p: &UniPoly<Rational>) -> (Rational, Rational) {
        eval_interval(p, &self.lo, &self.hi)
    }

    /// Exact sign of `p` at this number. Zero is decided algebraically via
    /// the gcd with the defining polynomial, never by refinement alone.
    pub fn sign_of(&self, p: &UniPoly<Rational>) -> i8 {
        if let Some(v) = self.as_exact() {
            return p.sign_at(v);
        }
        if p.is_zero() {
            return 0;
        }
        let g = self.defining.gcd(p);
        if g.degree().unwrap_or(0) > 0 && g.sign_at(&self.lo) * g.sign_at(&self.hi) < 0 {
            return 0;
        }
        let mut x = self.clone();
        loop {
            if let Some(v) = x.as_exact() {
                return p.sign_at(v);
            }
            let (l, h) = x.enclose(p);
            if l.is_positive() {
                return 1;
            }
            if h.is_negative() {
                return -1;
            }
            x = x.refined();
        }
    }

    /// The value as a rational, if it is one.
    pub fn to_rational(&self) -> Option<Rational> {
        if let Some(v) = self.as_exact() {
            return Some(v.clone());
        }
        if self.defining.degree() == Some(1) {
            return Some(-(self.defining.coeff(0) / self.defining.coeff(1)));
        }
        // Distinct rationals with denominators dividing the leading
        // coefficient L are at least 1/L^2 apart.
        let l = self.defining.lc().expect("nonzero").abs();
        let x = self.refined_to(&(rat(1) / (&l * &l) / rat(2)));
        if let Some(v) = x.as_exact() {
            return Some(v.clone());
        }
        let s = simplest_rational_between(&x.lo, &x.hi);
        (self.defining.sign_at(&s) == 0).then_some(s)
    }

    /// Collapses to an exact rational when possible.
    pub fn normalized(self) -> RealNumber {
        match self.to_rational() {
            Some(q) => RealNumber::Rational(q),
            None => RealNumber::Algebraic(self),
        }
    }

    /// Exact comparison.
    pub fn cmp_exact(&self, other: &RealAlgebraicNumber) -> Ordering {
        if let Some(v) = other.as_exact() {
            return self.sign_of(&UniPoly::new(vec![-v.clone(), rat(1)])).cmp(&0);
        }
        if let Some(v) = self.as_exact() {
            return 0.cmp(&other.sign_of(&UniPoly::new(vec![-v.clone(), rat(1)])));
        }
        let g = self.defining.gcd(&other.defining);
        let shared = g.degree().unwrap_or(0) > 0 && self.sign_of(&g) == 0 && other.sign_of(&g) == 0;
        let seq = shared.then(|| sturm_sequence(&g));
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            if let Some(seq) = &seq {
                let lo = if a.lo < b.lo { &a.lo } else { &b.lo };
                let hi = if a.hi > b.hi { &a.hi } else { &b.hi };
                if g.sign_at(lo) != 0 && g.sign_at(hi) != 0 && count_roots_between(seq, lo, hi) == 1 {
                    return Ordering::Equal;
                }
            }
            a = a.refined();
            b = b.refined();
            if a.as_exact().is_some() || b.as_exact().is_some() {
                return a.cmp_exact(&b);
            }
        }
    }

    /// Decimal string with `places` digits after the point and error below
    /// `10^-places`.
    pub fn approx(&self, places: usize) -> String {
        let width = rat(1) / Rational::from_integer(num_bigint::BigInt::from(10u32).pow(places as u32 + 1));
        let x = self.refined_to(&width);
        let mid = (&x.lo + &x.hi) / rat(2);
        rational_to_decimal(&mid, places)
    }

    pub fn to_f64(&self) -> f64 {
        let x = self.refined_to(&ratio(1, 1 << 30));
        crate::exact::rat_to_f64(&((&x.lo + &x.hi) / rat(2)))
    }

    /// The real number `u(self)`.
    pub fn map_poly(&self, u: &UniPoly<Rational>) -> RealNumber {
        if let Some(v) = self.as_exact() {
            return RealNumber::Rational(u.eval(v));
        }
        if u.is_constant() {
            return RealNumber::Rational(u.coeff(0));
        }
        let d = u.rem(&self.defining);
        if d.is_constant() {
            return RealNumber::Rational(d.coeff(0));
        }
        // R(x) = Res_t(defining(t), x - u(t)) vanishes at u(self).
        type Qx = UniPoly<Rational>;
        let def: UniPoly<Qx> = self.defining.map(|c| Qx::constant(c.clone()));
        let mut lin: Vec<Qx> = d.coeffs().iter().map(|c| Qx::constant(-c.clone())).collect();
        lin[0] = lin[0].add(&Qx::var());
        let r = resultant(&def, &UniPoly::new(lin)).squarefree_primitive();
        let roots = isolate_real_roots(&r).expect("resultant of a nonzero defining polynomial is nonzero");
        let mut x = self.clone();
        loop {
            if let Some(v) = x.as_exact() {
                return RealNumber::Rational(d.eval(v));
            }
            let (l, h) = x.enclose(&d);
            let inside: Vec<&RealAlgebraicNumber> = roots.iter().filter(|root| !(root.hi < l || root.lo > h)).collect();
            if inside.len() == 1 {
                return inside[0].clone().normalized();
            }
            x = x.refined();
        }
    }
}

/// Interval Horner evaluation of `p` over `[lo, hi]`.
pub fn eval_interval(p: &UniPoly<Rational>, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let mut a = rat(0);
    let mut b = rat(0);
    for c in p.coeffs().iter().rev() {
        let products = [&a * lo, &a * hi, &b * lo, &b * hi];
        let mn = products.iter().min().expect("nonempty").clone();
        let mx = products.iter().max().expect("nonempty").clone();
        a = mn + c;
        b = mx + c;
    }
    (a, b)
}

impl PartialEq for RealAlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }
}

impl fmt::Debug for RealAlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_exact() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "root of {} in ({}, {})", self.defining, self.lo, self.hi),
        }
    }
}

/// A real number that is either rational or real algebraic.
#[derive(Clone, Debug)]
pub enum RealNumber {
    Rational(Rational),
    Algebraic(RealAlgebraicNumber),
}

impl RealNumber {
    pub fn sign(&self) -> i8 {
        match self {
            RealNumber::Rational(q) => rat_sign(q),
            RealNumber::Algebraic(a) => a.sign_of(&UniPoly::var()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign() == 0
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            RealNumber::Rational(q) => Some(q),
            RealNumber::Algebraic(_) => None,
        }
    }

    pub fn to_algebraic(&self) -> RealAlgebraicNumber {
        match self {
            RealNumber::Rational(q) => RealAlgebraicNumber::from_rational(q.clone()),
            RealNumber::Algebraic(a) => a.clone(),
        }
    }

    pub fn cmp_exact(&self, other: &RealNumber) -> Ordering {
        match (self, other) {
            (RealNumber::Rational(a), RealNumber::Rational(b)) => a.cmp(b),
            _ => self.to_algebraic().cmp_exact(&other.to_algebraic()),
        }
    }

    pub fn approx(&self, places: usize) -> String {
        match self {
            RealNumber::Rational(q) => rational_to_decimal(q, places),
            RealNumber::Algebraic(a) => a.approx(places),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            RealNumber::Rational(q) => crate::exact::rat_to_f64(q),
            RealNumber::Algebraic(a) => a.to_f64(),
        }
    }
}

impl PartialEq for RealNumber {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }
}

impl From<Rational> for RealNumber {
    fn from(q: Rational) -> Self {
        RealNumber::Rational(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt2() -> RealAlgebraicNumber {
        RealAlgebraicNumber::new(&UniPoly::from_ints(&[-2, 0, 1]), rat(1), ratio(3, 2)).unwrap()
    }

    #[test]
    fn sign_at_sqrt2() {
        let s = sqrt2();
        assert_eq!(s.sign_of(&UniPoly::from_ints(&[-1, 1])), 1);
        assert_eq!(s.sign_of(&UniPoly::from_ints(&[-2, 0, 1])), 0);
        // t^4 - 4 = (t^2 - 2)(t^2 + 2) vanishes too
        assert_eq!(s.sign_of(&UniPoly::from_ints(&[-4, 0, 0, 0, 1])), 0);
        assert_eq!(s.sign_of(&UniPoly::from_ints(&[3, 0, -2])), -1);
        let zero = RealAlgebraicNumber::from_rational(rat(0));
        assert_eq!(zero.sign_of(&UniPoly::var()), 0);
    }

    #[test]
    fn invalid_intervals_are_rejected() {
        assert!(RealAlgebraicNumber::new(&UniPoly::from_ints(&[-2, 0, 1]), rat(-2), rat(2)).is_none());
        assert!(RealAlgebraicNumber::new(&UniPoly::from_ints(&[-2, 0, 1]), rat(2), rat(3)).is_none());
    }

    #[test]
    fn comparisons() {
        let s = sqrt2();
        let other = RealAlgebraicNumber::new(&UniPoly::from_ints(&[-4, 0, 0, 0, 1]), rat(0), rat(2)).unwrap();
        assert_eq!(s.cmp_exact(&other), Ordering::Equal);
        let q = RealAlgebraicNumber::from_rational(ratio(7, 5));
        assert_eq!(q.cmp_exact(&s), Ordering::Less);
        assert_eq!(s.cmp_exact(&q), Ordering::Greater);
        let cbrt3 = RealAlgebraicNumber::new(&UniPoly::from_ints(&[-3, 0, 0, 1]), rat(1), rat(2)).unwrap();
        assert_eq!(s.cmp_exact(&cbrt3), Ordering::Less);
    }

    #[test]
    fn decimal_approximation() {
        assert_eq!(sqrt2().approx(12), "1.414213562373");
    }

    #[test]
    fn mapping_through_polynomials() {
        let s = sqrt2();
        // s^2 + 1 = 3
        assert_eq!(s.map_poly(&UniPoly::from_ints(&[1, 0, 1])), RealNumber::Rational(rat(3)));
        // 2s is the positive root of t^2 - 8
        let two_s = s.map_poly(&UniPoly::from_ints(&[0, 2]));
        let target = RealAlgebraicNumber::new(&UniPoly::from_ints(&[-8, 0, 1]), rat(2), rat(3)).unwrap();
        assert_eq!(two_s, RealNumber::Algebraic(target));
        // 1 - s < 0
        assert_eq!(s.map_poly(&UniPoly::from_ints(&[1, -1])).sign(), -1);
    }

    #[test]
    fn rational_detection() {
        // (2t - 3)(t^2 - 2) has the rational root 3/2.
        let f = UniPoly::from_ints(&[-3, 2]).mul(&UniPoly::from_ints(&[-2, 0, 1]));
        let r = RealAlgebraicNumber::new(&f, ratio(29, 20), rat(2)).unwrap();
        assert_eq!(r.to_rational(), Some(ratio(3, 2)));
        assert_eq!(sqrt2().to_rational(), None);
    }
}
