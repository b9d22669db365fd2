//! Sturm sequences and real root isolation over Q.

use num_traits::Signed;

use super::algebraic::RealAlgebraicNumber;
use super::univariate::UniPoly;
use crate::error::{Error, Result};
use crate::exact::{rat, rat_sign, ratio, Rational};

/// Sturm sequence `p, p', -rem(p, p'), ...` of a nonzero polynomial.
pub fn sturm_sequence(p: &UniPoly<Rational>) -> Vec<UniPoly<Rational>> {
    let mut seq = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        // Positive rescaling keeps signs and tames coefficient growth.
        seq.push(r.neg().primitive_signed());
    }
    seq
}

fn count_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Number of sign changes of the sequence evaluated at `x`.
pub fn variations_at(seq: &[UniPoly<Rational>], x: &Rational) -> usize {
    count_changes(seq.iter().map(|p| p.sign_at(x)))
}

/// Sign changes at `+inf` (`positive`) or `-inf`.
pub fn variations_at_infinity(seq: &[UniPoly<Rational>], positive: bool) -> usize {
    count_changes(seq.iter().map(|p| {
        let s = rat_sign(p.lc().expect("Sturm sequence entries are nonzero"));
        let d = p.degree().unwrap_or(0);
        if positive || d % 2 == 0 {
            s
        } else {
            -s
        }
    }))
}

/// Distinct real roots of a square-free `p` in `(lo, hi]`.
pub fn count_roots_between(seq: &[UniPoly<Rational>], lo: &Rational, hi: &Rational) -> usize {
    variations_at(seq, lo).saturating_sub(variations_at(seq, hi))
}

/// Number of distinct real roots.
pub fn count_real_roots(p: &UniPoly<Rational>) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = p.squarefree_primitive();
    if q.is_constant() {
        return Ok(0);
    }
    let seq = sturm_sequence(&q);
    Ok(variations_at_infinity(&seq, false) - variations_at_infinity(&seq, true))
}

/// Strict bound on the absolute value of every root: `1 + max |a_i / a_n|`.
pub fn cauchy_bound(p: &UniPoly<Rational>) -> Rational {
    let lc = p.lc().expect("nonzero").abs();
    let mut m = rat(0);
    for c in &p.coeffs()[..p.coeffs().len() - 1] {
        let v = c.abs() / &lc;
        if v > m {
            m = v;
        }
    }
    // Round up to an integer to keep bisection points simple.
    (m + rat(1)).ceil()
}

/// A rational strictly between `lo` and `hi` at which `p` does not vanish,
/// preferring the midpoint.
fn split_point(p: &UniPoly<Rational>, lo: &Rational, hi: &Rational) -> Rational {
    let width = hi - lo;
    for k in 1..=(2 * p.coeffs().len() as i64 + 2) {
        // midpoint, then points drifting towards lo: 1/2, 1/3, 2/5, ...
        let frac = if k == 1 { ratio(1, 2) } else { ratio(k, 2 * k + 1) };
        let m = lo + &width * &frac;
        if p.sign_at(&m) != 0 {
            return m;
        }
    }
    unreachable!("a polynomial has finitely many roots")
}

/// Isolates every distinct real root of a nonzero polynomial, in increasing order.
pub fn isolate_real_roots(p: &UniPoly<Rational>) -> Result<Vec<RealAlgebraicNumber>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = p.squarefree_primitive();
    if q.is_constant() {
        return Ok(Vec::new());
    }
    if q.degree() == Some(1) {
        let root = -(q.coeff(0) / q.coeff(1));
        return Ok(vec![RealAlgebraicNumber::from_rational(root)]);
    }
    let seq = sturm_sequence(&q);
    let b = cauchy_bound(&q);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = count_roots_between(&seq, &lo, &hi);
        match n {
            0 => {}
            1 => out.push(RealAlgebraicNumber::from_isolating_interval(q.clone(), lo, hi)),
            _ => {
                let m = split_point(&q, &lo, &hi);
                stack.push((m.clone(), hi));
                stack.push((lo, m));
            }
        }
    }
    out.sort_by(|a, b| a.lo().cmp(b.lo()));
    Ok(out)
}

/// Distinct real roots of `p` inside the open interval `(lo, hi)`, where
/// neither endpoint is a root.
pub fn isolate_real_roots_in(p: &UniPoly<Rational>, lo: &Rational, hi: &Rational) -> Result<Vec<RealAlgebraicNumber>> {
    Ok(isolate_real_roots(p)?.into_iter().filter_map(|r| r.restrict_to(lo, hi)).collect())
}

impl UniPoly<Rational> {
    /// Divides by the absolute content, keeping the sign of every coefficient.
    pub fn primitive_signed(&self) -> Self {
        let p = self.primitive();
        match (self.lc(), p.lc()) {
            (Some(a), Some(b)) if a.is_negative() != b.is_negative() => p.neg(),
            _ => p,
        }
    }
}
