//! Polynomial arithmetic.
//!
//! [`MultiPoly`] is the sparse multivariate type that carries curve
//! equations and systems; [`UniPoly`] is the dense univariate workhorse
//! used by gcds, resultants and root isolation.

pub mod algebraic;
pub mod realroots;
pub mod univariate;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{ExactDiv, Field, GaussianRational, Rational, Ring};

pub use algebraic::{RealAlgebraicNumber, RealNumber};
pub use univariate::{resultant as uni_resultant, UniPoly};

/// Sparse multivariate polynomial with an explicit, ordered variable list.
///
/// Exponent vectors are indexed like `vars`. A polynomial with no variables
/// is a scalar and combines with any other polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly<R = GaussianRational> {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, R>,
}

impl<R: Ring> MultiPoly<R> {
    pub fn zero_in(vars: &[&str]) -> Self {
        MultiPoly { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn constant_in(vars: &[&str], c: R) -> Self {
        let mut p = MultiPoly::zero_in(vars);
        p.insert(vec![0; vars.len()], c);
        p
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var_in(vars: &[&str], name: &str) -> Result<Self> {
        let idx = vars.iter().position(|v| *v == name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        let mut p = MultiPoly::zero_in(vars);
        p.insert(exps, R::one());
        Ok(p)
    }

    /// Builds from `(exponents, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(vars: &[&str], terms: impl IntoIterator<Item = (Vec<u32>, R)>) -> Result<Self> {
        let mut p = MultiPoly::zero_in(vars);
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::InvalidInput(format!("exponent vector of length {} for {} variables", e.len(), vars.len())));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn insert(&mut self, exps: Vec<u32>, c: R) {
        if !c.is_zero() {
            self.terms.insert(exps, c);
        }
    }

    fn add_term(&mut self, exps: Vec<u32>, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &R)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the monomial with the given exponents (zero if absent).
    pub fn coeff(&self, exps: &[u32]) -> R {
        self.terms.get(exps).cloned().unwrap_or_else(R::zero)
    }

    /// Maximum total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Degree in one variable; zero polynomial has degree 0.
    pub fn degree_in(&self, name: &str) -> Result<u32> {
        let i = self.var_index(name)?;
        Ok(self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
    }

    fn aligned(&self, other: &Self) -> Result<Vec<String>> {
        if self.vars == other.vars || other.vars.is_empty() {
            Ok(self.vars.clone())
        } else if self.vars.is_empty() {
            Ok(other.vars.clone())
        } else {
            Err(Error::VariableMismatch { left: self.vars.clone(), right: other.vars.clone() })
        }
    }

    /// Re-expresses a scalar (variable-free) polynomial over `vars`.
    fn widened(&self, vars: &[String]) -> Self {
        if self.vars.len() == vars.len() {
            return self.clone();
        }
        debug_assert!(self.vars.is_empty());
        let mut p = MultiPoly { vars: vars.to_vec(), terms: BTreeMap::new() };
        if let Some(c) = self.terms.get(&Vec::new()) {
            p.insert(vec![0; vars.len()], c.clone());
        }
        p
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let vars = self.aligned(other)?;
        let mut out = self.widened(&vars);
        for (e, c) in other.widened(&vars).terms {
            out.add_term(e, c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let vars = self.aligned(other)?;
        let a = self.widened(&vars);
        let b = other.widened(&vars);
        let mut out = MultiPoly { vars, terms: BTreeMap::new() };
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, k: &R) -> Self {
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            out.insert(e.clone(), c.mul(k));
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        acc.insert(vec![0; self.vars.len()], R::one());
        for _ in 0..exp {
            acc = acc.checked_mul(self).expect("same variables");
        }
        acc
    }

    /// Sum of the terms of total degree exactly `p`.
    pub fn homogeneous_part(&self, p: u32) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == p).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// Replaces variable `name` by the polynomial `value` (over the same
    /// variables, or a scalar).
    pub fn substitute(&self, name: &str, value: &Self) -> Result<Self> {
        let i = self.var_index(name)?;
        let value = value.widened(&self.aligned(value)?);
        let max = self.degree_in(name)?;
        let mut powers = vec![MultiPoly::constant_in(&self.var_refs(), R::one())];
        for k in 1..=max as usize {
            let next = powers[k - 1].checked_mul(&value)?;
            powers.push(next);
        }
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            rest[i] = 0;
            let mono = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::from([(rest, c.clone())]) };
            out = out.checked_add(&mono.checked_mul(&powers[e[i] as usize])?)?;
        }
        Ok(out)
    }

    /// Evaluates every variable; `values` is indexed like `vars`.
    pub fn eval_all(&self, values: &[R]) -> Result<R> {
        if values.len() != self.vars.len() {
            return Err(Error::InvalidInput(format!("expected {} values, got {}", self.vars.len(), values.len())));
        }
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in values.iter().zip(e) {
                t = t.mul(&v.pow(k));
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    fn var_refs(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    /// Views the polynomial as univariate in `name` with coefficients that
    /// are polynomials in the remaining variables.
    pub fn as_univariate_in(&self, name: &str) -> Result<UniPoly<MultiPoly<R>>> {
        let i = self.var_index(name)?;
        let rest: Vec<&str> = self.vars.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, v)| v.as_str()).collect();
        let deg = self.degree_in(name)? as usize;
        let mut coeffs = vec![MultiPoly::zero_in(&rest); deg + 1];
        for (e, c) in &self.terms {
            let mut r = e.clone();
            let k = r.remove(i) as usize;
            coeffs[k].add_term(r, c.clone());
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Inverse of [`MultiPoly::as_univariate_in`]: `name` is appended at the given position.
    pub fn from_univariate_in(p: &UniPoly<MultiPoly<R>>, vars: &[&str], name: &str) -> Result<Self> {
        let i = vars.iter().position(|v| *v == name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut out = MultiPoly::zero_in(vars);
        for (k, c) in p.coeffs().iter().enumerate() {
            for (e, v) in &c.terms {
                let mut full = if e.is_empty() { vec![0; vars.len() - 1] } else { e.clone() };
                full.insert(i, k as u32);
                out.add_term(full, v.clone());
            }
        }
        Ok(out)
    }

    /// Converts a polynomial that involves only `name` to a dense univariate one.
    pub fn to_univariate(&self, name: &str) -> Result<UniPoly<R>> {
        let i = self.var_index(name)?;
        let mut coeffs = Vec::new();
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(k, &x)| k != i && x != 0) {
                return Err(Error::NotUnivariate(self.vars.clone()));
            }
            let d = e[i] as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, R::zero());
            }
            coeffs[d] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn from_univariate(p: &UniPoly<R>, name: &str) -> Self {
        let mut out = MultiPoly::zero_in(&[name]);
        for (k, c) in p.coeffs().iter().enumerate() {
            out.insert(vec![k as u32], c.clone());
        }
        out
    }

    /// The single variable name if the polynomial has exactly one.
    fn sole_var(&self) -> Result<&str> {
        match self.vars.as_slice() {
            [v] => Ok(v.as_str()),
            _ => Err(Error::NotUnivariate(self.vars.clone())),
        }
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> MultiPoly<S> {
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            out.insert(e.clone(), f(c));
        }
        out
    }

    /// Renames variables in place of position; the count must match.
    pub fn with_vars(&self, vars: &[&str]) -> Result<Self> {
        if vars.len() != self.vars.len() {
            return Err(Error::VariableMismatch { left: self.vars.clone(), right: vars.iter().map(|s| s.to_string()).collect() });
        }
        Ok(MultiPoly { vars: vars.iter().map(|s| s.to_string()).collect(), terms: self.terms.clone() })
    }

    /// Re-expresses the polynomial over another variable list. Variables may
    /// be added or dropped; dropping one that occurs is an error.
    pub fn reembed(&self, vars: &[&str]) -> Result<Self> {
        let map: Vec<Option<usize>> = self.vars.iter().map(|v| vars.iter().position(|w| w == v)).collect();
        let mut out = MultiPoly::zero_in(vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; vars.len()];
            for (k, &x) in e.iter().enumerate() {
                match map[k] {
                    Some(i) => ne[i] = x,
                    None if x == 0 => {}
                    None => return Err(Error::UnknownVariable(self.vars[k].clone())),
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Divides by the largest power of `name` that divides the polynomial.
    pub fn strip_var_power(&self, name: &str) -> Result<Self> {
        let i = self.var_index(name)?;
        let m = self.terms.keys().map(|e| e[i]).min().unwrap_or(0);
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[i] -= m;
            out.insert(ne, c.clone());
        }
        Ok(out)
    }

    /// Terms ordered by descending total degree, then descending exponents.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &R)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        t
    }

    fn monomial_string(&self, e: &[u32]) -> String {
        let parts: Vec<String> =
            self.vars.iter().zip(e).filter(|(_, &k)| k > 0).map(|(v, &k)| if k == 1 { v.clone() } else { format!("{v}^{k}") }).collect();
        parts.join("*")
    }

    /// Renders terms with a coefficient formatter returning `(negative, magnitude)`.
    fn render(&self, coeff: impl Fn(&R) -> (bool, String, bool)) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let (neg, mag, compound) = coeff(c);
            let mono = self.monomial_string(e);
            let body = if mono.is_empty() {
                mag
            } else if mag == "1" {
                mono
            } else if compound {
                format!("({mag})*{mono}")
            } else {
                format!("{mag}*{mono}")
            };
            match (idx, neg) {
                (0, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (0, false) => out.push_str(&body),
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
            }
        }
        out
    }
}

impl<F: Field> MultiPoly<F> {
    /// Exact quotient `self / d` by lexicographic division, or `None` if
    /// `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let vars = self.aligned(d).ok()?;
        let d = d.widened(&vars);
        let (lt_e, lt_c) = d.terms.iter().next_back()?;
        let inv = lt_c.inv();
        let mut r = self.widened(&vars);
        let mut q = MultiPoly { vars: vars.clone(), terms: BTreeMap::new() };
        while let Some((e, c)) = r.terms.iter().next_back() {
            if e.iter().zip(lt_e).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Vec<u32> = e.iter().zip(lt_e).map(|(a, b)| a - b).collect();
            let qc = c.mul(&inv);
            for (de, dc) in &d.terms {
                let te: Vec<u32> = de.iter().zip(&qe).map(|(a, b)| a + b).collect();
                r.add_term(te, dc.mul(&qc).neg());
            }
            q.add_term(qe, qc);
        }
        Some(q)
    }

    /// Monic gcd of two univariate polynomials in the same variable.
    pub fn gcd_univariate(&self, other: &Self) -> Result<Self> {
        let name = self.aligned(other)?;
        let name = match name.as_slice() {
            [v] => v.clone(),
            _ => return Err(Error::NotUnivariate(name)),
        };
        let g = self.to_univariate(&name)?.gcd(&other.widened(std::slice::from_ref(&name)).to_univariate(&name)?);
        Ok(MultiPoly::from_univariate(&g, &name))
    }

    /// Square-free part (monic) of a univariate polynomial.
    pub fn squarefree_part(&self) -> Result<Self> {
        let name = self.sole_var()?.to_string();
        let s = self.to_univariate(&name)?.squarefree_part();
        Ok(MultiPoly::from_univariate(&s, &name))
    }

    /// `Res_name(self, other)` as a polynomial in the remaining variables.
    pub fn resultant(&self, other: &Self, name: &str) -> Result<Self> {
        let vars = self.aligned(other)?;
        let a = self.widened(&vars);
        let b = other.widened(&vars);
        if a.degree_in(name)? == 0 || a.is_zero() {
            return Err(Error::DegreeZeroIn(name.to_string()));
        }
        if b.degree_in(name)? == 0 || b.is_zero() {
            return Err(Error::DegreeZeroIn(name.to_string()));
        }
        let ua = a.as_univariate_in(name)?;
        let ub = b.as_univariate_in(name)?;
        let r = univariate::resultant(&ua, &ub);
        let rest: Vec<&str> = vars.iter().map(|s| s.as_str()).filter(|v| *v != name).collect();
        Ok(r.widened(&rest.iter().map(|s| s.to_string()).collect::<Vec<_>>()))
    }
}

impl MultiPoly<GaussianRational> {
    pub fn conj(&self) -> Self {
        self.map_coeffs(|c| c.conj())
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.is_real())
    }

    pub fn real_part(&self) -> MultiPoly<Rational> {
        self.map_coeffs(|c| c.re.clone())
    }

    pub fn imag_part(&self) -> MultiPoly<Rational> {
        self.map_coeffs(|c| c.im.clone())
    }

    /// Real-coefficient copy; fails if any coefficient has an imaginary part.
    pub fn to_real(&self) -> Result<MultiPoly<Rational>> {
        if !self.is_real() {
            return Err(Error::NonRealCoefficients);
        }
        Ok(self.real_part())
    }

    /// Real roots of a univariate polynomial with real coefficients.
    pub fn isolate_real_roots(&self) -> Result<Vec<RealAlgebraicNumber>> {
        let name = self.sole_var()?.to_string();
        let p = self.to_real()?.to_univariate(&name)?;
        realroots::isolate_real_roots(&p)
    }

    /// Exact sign of a real univariate polynomial at a real algebraic point.
    pub fn sign_at(&self, x: &RealAlgebraicNumber) -> Result<i8> {
        let name = self.sole_var()?.to_string();
        let p = self.to_real()?.to_univariate(&name)?;
        Ok(x.sign_of(&p))
    }
}

impl MultiPoly<Rational> {
    /// Integer coefficients with content one; the lexicographically largest
    /// term gets a positive coefficient.
    pub fn primitive(&self) -> Self {
        let Some((_, lead)) = self.terms.iter().next_back() else {
            return self.clone();
        };
        let mut den = num_bigint::BigInt::from(1);
        let mut num = num_bigint::BigInt::from(0);
        for c in self.terms.values() {
            den = num_integer::Integer::lcm(&den, c.denom());
        }
        for c in self.terms.values() {
            let v = (c * Rational::from_integer(den.clone())).to_integer();
            num = num_integer::Integer::gcd(&num, &v);
        }
        let mut k = Rational::new(den, num);
        if lead < &Rational::from_integer(0.into()) {
            k = -k;
        }
        self.scale(&k)
    }

    pub fn to_gaussian(&self) -> MultiPoly<GaussianRational> {
        self.map_coeffs(|c| GaussianRational::from_rational(c.clone()))
    }
}

impl<R: Ring> Ring for MultiPoly<R> {
    fn zero() -> Self {
        MultiPoly { vars: Vec::new(), terms: BTreeMap::new() }
    }
    fn one() -> Self {
        MultiPoly::constant_in(&[], R::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).expect("variable mismatch")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs).expect("variable mismatch")
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("variable mismatch")
    }
    fn neg(&self) -> Self {
        MultiPoly::neg(self)
    }
    fn from_i64(n: i64) -> Self {
        MultiPoly::constant_in(&[], R::from_i64(n))
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(e, c)| e.iter().all(|&k| k == 0) && c.is_one())
    }
}

impl<F: Field> ExactDiv for MultiPoly<F> {
    fn exact_div(&self, divisor: &Self) -> Self {
        self.div_exact(divisor).expect("inexact multivariate division")
    }
}

impl<R: Ring> fmt::Display for MultiPoly<R> {
    /// Real coefficients give a parseable form such as `x^3 + y^3 - 3*x*y`;
    /// compound coefficients are parenthesised.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.render(|c| {
            let s = c.to_string();
            let compound = s.contains(' ');
            match s.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string(), false),
                _ => (false, s, compound),
            }
        });
        f.write_str(&s)
    }
}

impl<R: Ring> fmt::Debug for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly{:?}{{", self.vars)?;
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e:?}: {c}")?;
        }
        write!(f, "}}")
    }
}

/// Free-function form of [`MultiPoly::homogeneous_part`].
pub fn homogeneous_part<R: Ring>(f: &MultiPoly<R>, p: u32) -> MultiPoly<R> {
    f.homogeneous_part(p)
}

/// Free-function form of [`MultiPoly::resultant`].
pub fn resultant<F: Field>(p: &MultiPoly<F>, q: &MultiPoly<F>, var: &str) -> Result<MultiPoly<F>> {
    p.resultant(q, var)
}

/// Free-function form of [`MultiPoly::gcd_univariate`].
pub fn gcd_univariate<F: Field>(p: &MultiPoly<F>, q: &MultiPoly<F>) -> Result<MultiPoly<F>> {
    p.gcd_univariate(q)
}

/// Free-function form of [`MultiPoly::squarefree_part`].
pub fn squarefree_part<F: Field>(p: &MultiPoly<F>) -> Result<MultiPoly<F>> {
    p.squarefree_part()
}

/// Free-function form of [`MultiPoly::isolate_real_roots`].
pub fn isolate_real_roots(p: &MultiPoly) -> Result<Vec<RealAlgebraicNumber>> {
    p.isolate_real_roots()
}

/// Free-function form of [`MultiPoly::sign_at`].
pub fn sign_at(p: &MultiPoly, x: &RealAlgebraicNumber) -> Result<i8> {
    p.sign_at(x)
}
