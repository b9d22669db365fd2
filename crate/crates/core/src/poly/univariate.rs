use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact::{ExactDiv, Field, GaussianRational, Rational, Ring};

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// Trailing zeros are never stored, so the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        UniPoly::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: R, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    /// The indeterminate `t`.
    pub fn var() -> Self {
        UniPoly::monomial(R::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn lc(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => R::zero(),
            })
            .collect();
        UniPoly::new(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = UniPoly::constant(R::one());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// `self(inner(t))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&UniPoly::constant(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.mul(&R::from_i64(i as i64))).collect())
    }

    /// Knuth's pseudo-remainder: `lc(d)^(deg f - deg d + 1) * f mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-remainder by zero polynomial");
        let Some(fd) = self.degree() else {
            return UniPoly::zero();
        };
        if fd < dd {
            return self.clone();
        }
        let l = d.lc().expect("nonzero").clone();
        let mut e = fd - dd + 1;
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let t = r.lc().expect("nonzero").clone();
            r = r.scale(&l).sub(&d.scale(&t).shift(rd - dd));
            e -= 1;
        }
        r.scale(&l.pow(e as u32))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Renders with the given variable name, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let cs = c.to_string();
            let needs_parens = cs.contains(' ') && !mono.is_empty();
            let term = if mono.is_empty() {
                cs
            } else if c.is_one() {
                mono
            } else if c.neg().is_one() {
                format!("-{mono}")
            } else if needs_parens {
                format!("({cs})*{mono}")
            } else {
                format!("{cs}*{mono}")
            };
            parts.push(term);
        }
        let mut out = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i == 0 {
                out.push_str(p);
            } else if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

impl<F: Field> UniPoly<F> {
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lc().expect("nonzero").inv();
        let mut r = self.clone();
        let Some(fd) = r.degree() else {
            return (UniPoly::zero(), UniPoly::zero());
        };
        if fd < dd {
            return (UniPoly::zero(), r);
        }
        let mut q = vec![F::zero(); fd - dd + 1];
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.lc().expect("nonzero").mul(&inv);
            r = r.sub(&d.scale(&c).shift(rd - dd));
            q[rd - dd] = c;
        }
        (UniPoly::new(q), r)
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Scales to leading coefficient one; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.lc() {
            None => UniPoly::zero(),
            Some(l) => self.scale(&l.inv()),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if !self.is_zero() && !other.is_zero() {
            if let Some(g) = F::fast_gcd(&self.coeffs, &other.coeffs) {
                return UniPoly::new(g).monic();
            }
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.scale(&F::compact_scale(r.coeffs()));
        }
        a.monic()
    }

    /// Returns `(g, s)` with `g = gcd(self, m)` monic and `s * self ≡ g (mod m)`.
    pub fn gcd_with_cofactor(&self, m: &Self) -> (Self, Self) {
        let mut r0 = m.clone();
        let mut r1 = self.rem(m);
        let mut s0 = UniPoly::zero();
        let mut s1 = UniPoly::constant(F::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        match r0.lc() {
            None => (UniPoly::zero(), UniPoly::zero()),
            Some(l) => {
                let inv = l.inv();
                (r0.scale(&inv), s0.scale(&inv).rem(m))
            }
        }
    }

    /// Inverse of `self` modulo `m`, if `gcd(self, m) = 1`.
    pub fn inverse_mod(&self, m: &Self) -> Option<Self> {
        let (g, s) = self.gcd_with_cofactor(m);
        (g.degree() == Some(0)).then_some(s)
    }

    /// Product of the distinct irreducible factors (monic).
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn exact_quotient(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }
}

impl UniPoly<Rational> {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| Rational::from_i64(c)).collect())
    }

    /// Integer coefficients with content 1 and positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if self.coeffs.last().expect("nonzero").is_negative() {
            g = -g;
        }
        UniPoly::new(ints.into_iter().map(|c| BigRational::from_integer(c / &g)).collect())
    }

    /// Square-free part normalised to a primitive integer polynomial.
    pub fn squarefree_primitive(&self) -> Self {
        self.squarefree_part().primitive()
    }

    pub fn sign_at(&self, x: &Rational) -> i8 {
        crate::exact::rat_sign(&self.eval(x))
    }

    pub fn to_gaussian(&self) -> UniPoly<GaussianRational> {
        self.map(|c| GaussianRational::from_rational(c.clone()))
    }

    /// Largest coefficient bit length, for diagnostics and budgeting.
    pub fn max_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.numer().bits().max(c.denom().bits())).max().unwrap_or(0)
    }
}

impl UniPoly<GaussianRational> {
    pub fn conj(&self) -> Self {
        self.map(|c| c.conj())
    }

    pub fn real_part(&self) -> UniPoly<Rational> {
        self.map(|c| c.re.clone())
    }

    pub fn imag_part(&self) -> UniPoly<Rational> {
        self.map(|c| c.im.clone())
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_real())
    }
}

impl<R: Ring> Ring for UniPoly<R> {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        UniPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        UniPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        UniPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        UniPoly::neg(self)
    }
    fn from_i64(n: i64) -> Self {
        UniPoly::constant(R::from_i64(n))
    }
}

impl<F: Field> ExactDiv for UniPoly<F> {
    fn exact_div(&self, divisor: &Self) -> Self {
        self.exact_quotient(divisor)
    }
}

impl<R: Ring> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl<R: Ring> fmt::Debug for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

/// Resultant by the subresultant pseudo-remainder sequence, valid over any
/// integral domain with exact division. Zero if either input is zero.
pub fn resultant<R: ExactDiv>(a: &UniPoly<R>, b: &UniPoly<R>) -> R {
    let (Some(da0), Some(db0)) = (a.degree(), b.degree()) else {
        return R::zero();
    };
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut negate = false;
    if da0 < db0 {
        std::mem::swap(&mut a, &mut b);
        if da0 % 2 == 1 && db0 % 2 == 1 {
            negate = true;
        }
    }
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let da = a.degree().expect("nonzero");
        let db = b.degree().expect("nonzero");
        if db == 0 {
            break;
        }
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        if r.is_zero() {
            return R::zero();
        }
        let divisor = g.mul(&h.pow(delta));
        b = r.map(|c| c.exact_div(&divisor));
        g = a.lc().expect("nonzero").clone();
        h = if delta == 0 { h } else { g.pow(delta).exact_div(&h.pow(delta - 1)) };
    }
    let da = a.degree().expect("nonzero") as u32;
    let lb = b.lc().expect("nonzero").clone();
    let res = if da == 0 { R::one() } else { lb.pow(da).exact_div(&h.pow(da - 1)) };
    if negate {
        res.neg()
    } else {
        res
    }
}
