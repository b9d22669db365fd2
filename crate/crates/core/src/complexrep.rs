//! Complex implicit representation of a real plane curve.
//!
//! Substituting `x = (z + w)/2`, `y = (z - w)/(2i)` with `w` standing for
//! the conjugate of `z` turns `f(x, y)` into `F(z, w) = sum alpha[s][t] z^s w^t`.
//! Because `f` is real, `alpha[s][t]` is the conjugate of `alpha[t][s]`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::{binomial, ratio, GaussianRational, Rational, Ring};
use crate::poly::MultiPoly;

/// Variable names used for the complex representation.
pub const Z: &str = "z";
pub const ZBAR: &str = "zbar";

/// A curve given by its bidegree coefficient table `(s, t) -> alpha`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComplexCurve {
    n: u32,
    coeffs: BTreeMap<(u32, u32), GaussianRational>,
}

impl ComplexCurve {
    /// Builds a curve from a coefficient table; zero entries are dropped and
    /// the degree is the largest `s + t` with a nonzero entry.
    pub fn from_coeffs(coeffs: impl IntoIterator<Item = ((u32, u32), GaussianRational)>) -> Result<Self> {
        let mut table = BTreeMap::new();
        for (k, c) in coeffs {
            if !c.is_zero() {
                table.insert(k, c);
            }
        }
        let n = table.keys().map(|(s, t)| s + t).max().ok_or(Error::ZeroPolynomial)?;
        Ok(ComplexCurve { n, coeffs: table })
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    /// Nonzero entries in increasing `(s, t)` order.
    pub fn entries(&self) -> impl Iterator<Item = (&(u32, u32), &GaussianRational)> {
        self.coeffs.iter()
    }

    /// `alpha[s][t]`, erroring outside `s + t <= n`.
    pub fn coeff(&self, s: u32, t: u32) -> Result<GaussianRational> {
        if s + t > self.n {
            return Err(Error::BidegreeOutOfRange(s, t, self.n));
        }
        Ok(self.get(s, t))
    }

    /// `alpha[s][t]`, zero when absent or out of range.
    pub fn get(&self, s: u32, t: u32) -> GaussianRational {
        self.coeffs.get(&(s, t)).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// Top-form coefficient `alpha[n - j][j]`.
    pub fn top(&self, j: u32) -> GaussianRational {
        if j > self.n {
            return GaussianRational::zero();
        }
        self.get(self.n - j, j)
    }

    pub fn check_symmetry(&self) -> bool {
        self.coeffs.iter().all(|(&(s, t), c)| self.get(t, s) == c.conj())
    }

    /// The curve reflected in the real axis: `f(x, -y)`, i.e. `F(w, z)`.
    pub fn mirror(&self) -> ComplexCurve {
        ComplexCurve { n: self.n, coeffs: self.coeffs.iter().map(|(&(s, t), c)| ((t, s), c.clone())).collect() }
    }

    /// `F(z + k, w + conj(k))`, i.e. the real curve `f(x + Re k, y + Im k)`.
    pub fn translate(&self, k: &GaussianRational) -> ComplexCurve {
        let kc = k.conj();
        let mut out: BTreeMap<(u32, u32), GaussianRational> = BTreeMap::new();
        for (&(s, t), c) in &self.coeffs {
            for i in 0..=s {
                let ci = c.scale(&binomial(s, i)).mul(&k.pow(s - i));
                for l in 0..=t {
                    let term = ci.scale(&binomial(t, l)).mul(&kc.pow(t - l));
                    let e = out.entry((i, l)).or_insert_with(GaussianRational::zero);
                    *e = e.add(&term);
                }
            }
        }
        ComplexCurve { n: self.n, coeffs: out.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Multiplies every coefficient by a nonzero constant.
    pub fn scale(&self, k: &GaussianRational) -> ComplexCurve {
        ComplexCurve { n: self.n, coeffs: self.coeffs.iter().map(|(&e, c)| (e, c.mul(k))).collect() }
    }

    /// `F` as a polynomial in the variables `z`, `zbar`.
    pub fn to_multipoly(&self) -> MultiPoly {
        MultiPoly::from_terms(&[Z, ZBAR], self.coeffs.iter().map(|(&(s, t), c)| (vec![s, t], c.clone()))).expect("two exponents per term")
    }

    /// Reads a table from a polynomial in `z`, `zbar`.
    pub fn from_multipoly(p: &MultiPoly) -> Result<Self> {
        if p.vars() != [Z, ZBAR] {
            return Err(Error::VariableMismatch { left: p.vars().to_vec(), right: vec![Z.to_string(), ZBAR.to_string()] });
        }
        ComplexCurve::from_coeffs(p.terms().map(|(e, c)| ((e[0], e[1]), c.clone())))
    }
}

fn check_xy(f: &MultiPoly<Rational>) -> Result<()> {
    if f.vars() != ["x", "y"] {
        return Err(Error::VariableMismatch { left: f.vars().to_vec(), right: vec!["x".into(), "y".into()] });
    }
    Ok(())
}

/// Rejects constants, lines and circles, the inputs for which the
/// similarity problem is degenerate.
pub fn check_curve(f: &MultiPoly<Rational>) -> Result<()> {
    check_xy(f)?;
    let n = f.total_degree().ok_or(Error::DegreeTooLow(0))?;
    match n {
        0 => Err(Error::DegreeTooLow(0)),
        1 => Err(Error::Line),
        2 => {
            let top = f.homogeneous_part(2);
            let a = top.coeff(&[2, 0]);
            if top.coeff(&[1, 1]).is_zero() && top.coeff(&[0, 2]) == a && !a.is_zero() {
                Err(Error::Circle)
            } else {
                Ok(())
            }
        }
        _ => Ok(()),
    }
}

/// Complexifies a real curve `f(x, y)`.
pub fn to_complex(f: &MultiPoly<Rational>) -> Result<ComplexCurve> {
    check_curve(f)?;
    Ok(complexify(f))
}

/// Complexifies a curve given with Gaussian coefficients, which must be real.
pub fn to_complex_gaussian(f: &MultiPoly) -> Result<ComplexCurve> {
    to_complex(&f.to_real()?)
}

/// The substitution itself, without curve preconditions.
pub(crate) fn complexify(f: &MultiPoly<Rational>) -> ComplexCurve {
    // x^a y^b = (z + w)^a (z - w)^b (-i)^b / 2^(a + b)
    let mut out: BTreeMap<(u32, u32), GaussianRational> = BTreeMap::new();
    let minus_i = GaussianRational::from_ints(0, -1);
    for (e, c) in f.terms() {
        let (a, b) = (e[0], e[1]);
        let base = GaussianRational::from_rational(c * ratio(1, 1i64 << (a + b))).mul(&minus_i.pow(b));
        for k in 0..=a {
            let ck = base.scale(&binomial(a, k));
            for l in 0..=b {
                let sign = if (b - l) % 2 == 1 { -1 } else { 1 };
                let term = ck.scale(&(binomial(b, l) * Rational::from_i64(sign)));
                let key = (k + l, (a - k) + (b - l));
                let e = out.entry(key).or_insert_with(GaussianRational::zero);
                *e = e.add(&term);
            }
        }
    }
    ComplexCurve::from_coeffs(out).unwrap_or(ComplexCurve { n: 0, coeffs: BTreeMap::new() })
}

/// Back-substitutes `z = x + iy`, `w = x - iy`.
pub fn from_complex(curve: &ComplexCurve) -> Result<MultiPoly<Rational>> {
    if !curve.check_symmetry() {
        return Err(Error::SymmetryViolated);
    }
    let mut terms: BTreeMap<Vec<u32>, GaussianRational> = BTreeMap::new();
    let i = GaussianRational::i();
    for (&(s, t), c) in &curve.coeffs {
        // (x + iy)^s (x - iy)^t
        for k in 0..=s {
            let ck = c.scale(&binomial(s, k)).mul(&i.pow(s - k));
            for l in 0..=t {
                let cl = ck.scale(&binomial(t, l)).mul(&i.neg().pow(t - l));
                let key = vec![k + l, (s - k) + (t - l)];
                let e = terms.entry(key).or_insert_with(GaussianRational::zero);
                *e = e.add(&cl);
            }
        }
    }
    let gauss = MultiPoly::from_terms(&["x", "y"], terms)?;
    gauss.to_real()
}

/// Squared-magnitude helper for top coefficients.
pub fn abs2(w: &GaussianRational) -> Rational {
    w.abs2()
}
