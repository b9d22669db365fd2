//! The rotation-angle polynomial `P(t)`.
//!
//! A similarity with rotation angle `theta` maps the lines of the top form
//! `f_n` onto the lines of `g_n`. When `cos(theta) != 0`, `tan(theta)` is a
//! real root of `P`. Slopes `m` of lines `y = m x` are roots of
//! `p(y) = f_n(1, y)` and `q(y) = g_n(1, y)`; a factor `x^k` of a form
//! shows up as a drop of `k` in the degree of its dehomogenisation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{rat, Rational, Ring};
use crate::orientation::Orientation;
use crate::poly::{uni_resultant, MultiPoly, UniPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CaseUsed {
    /// `g_n = x^k (a x + b y)^(n - k)`: two lines, one of them vertical.
    Case1,
    /// Every other configuration; `P` comes from a resultant.
    Case2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeadingCase {
    Case1 { k: u32, a: Rational, b: Rational },
    Case2,
}

#[derive(Clone, Debug, PartialEq)]
pub enum AngleOutcome {
    /// `tan(theta)` is a root of this polynomial (a nonzero constant means
    /// no similarity with `cos(theta) != 0` exists).
    Poly(UniPoly<Rational>),
    /// The resultant vanishes identically and gives no information.
    IdenticallyZero,
    /// The top forms cannot be rotated onto each other.
    Incompatible,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AnglePoly {
    pub outcome: AngleOutcome,
    pub case_used: CaseUsed,
    /// The case analysis requires exploring `cos(theta) = 0` as well.
    pub cos_zero_must_branch: bool,
}

impl AnglePoly {
    fn poly(p: UniPoly<Rational>, case_used: CaseUsed, branch: bool) -> Self {
        AnglePoly { outcome: AngleOutcome::Poly(p), case_used, cos_zero_must_branch: branch }
    }

    fn incompatible(case_used: CaseUsed) -> Self {
        AnglePoly { outcome: AngleOutcome::Incompatible, case_used, cos_zero_must_branch: false }
    }

    /// Square-free primitive part of `P`, when one exists.
    pub fn reduced(&self) -> Option<UniPoly<Rational>> {
        match &self.outcome {
            AngleOutcome::Poly(p) => Some(p.squarefree_primitive()),
            _ => None,
        }
    }
}

fn form_degree(form: &MultiPoly<Rational>) -> Result<u32> {
    if form.vars() != ["x", "y"] {
        return Err(Error::VariableMismatch { left: form.vars().to_vec(), right: vec!["x".into(), "y".into()] });
    }
    form.total_degree().ok_or(Error::ZeroPolynomial)
}

/// `form(1, y)` for a homogeneous form of degree `n`.
pub fn dehomogenize(form: &MultiPoly<Rational>, n: u32) -> UniPoly<Rational> {
    let mut c = vec![rat(0); n as usize + 1];
    for (e, v) in form.terms() {
        if e[0] + e[1] == n {
            c[e[1] as usize] = v.clone();
        }
    }
    UniPoly::new(c)
}

/// `form(x, -y)`.
pub fn mirror_form(form: &MultiPoly<Rational>) -> MultiPoly<Rational> {
    MultiPoly::from_terms(&["x", "y"], form.terms().map(|(e, c)| (e.clone(), if e[1] % 2 == 1 { -c.clone() } else { c.clone() })))
        .expect("two variables")
}

/// `Some(m)` if `q` is a constant times `(y - m)^d` with `d >= 1`.
fn single_root(q: &UniPoly<Rational>) -> Option<Rational> {
    let s = q.squarefree_part();
    (s.degree() == Some(1)).then(|| -s.coeff(0))
}

/// Detects the two-line configuration `g_n = x^k (a x + b y)^(n - k)` with
/// `0 < k < n`; falls back to Case 2 when `x` does not divide `f_n`.
pub fn leading_case(f_n: &MultiPoly<Rational>, g_n: &MultiPoly<Rational>) -> Result<LeadingCase> {
    let n = form_degree(g_n)?;
    let q = dehomogenize(g_n, n);
    let p = dehomogenize(f_n, form_degree(f_n)?);
    let k = n - q.degree().unwrap_or(0) as u32;
    if k == 0 || k == n || p.degree() == Some(n as usize) {
        return Ok(LeadingCase::Case2);
    }
    match single_root(&q) {
        Some(m) => Ok(LeadingCase::Case1 { k, a: -m, b: rat(1) }),
        None => Ok(LeadingCase::Case2),
    }
}

/// `P(t)` for the orientation, dispatching on the top-form configuration.
pub fn angle_poly(f_n: &MultiPoly<Rational>, g_n: &MultiPoly<Rational>, orientation: Orientation) -> Result<AnglePoly> {
    let n = form_degree(g_n)?;
    if form_degree(f_n)? != n {
        return Ok(AnglePoly::incompatible(CaseUsed::Case2));
    }
    let q = dehomogenize(g_n, n);
    if q.is_constant() {
        return Ok(single_vertical_target(f_n, orientation));
    }
    match leading_case(f_n, g_n)? {
        LeadingCase::Case1 { .. } => angle_poly_case1(f_n, g_n, orientation),
        LeadingCase::Case2 => angle_poly_case2(f_n, g_n, orientation),
    }
}

/// `g_n = c x^n`: `f_n` must be the n-th power of one line, which is
/// rotated onto the vertical.
fn single_vertical_target(f_n: &MultiPoly<Rational>, orientation: Orientation) -> AnglePoly {
    let f_n = oriented(f_n, orientation);
    let n = f_n.total_degree().unwrap_or(0);
    let p = dehomogenize(&f_n, n);
    if p.is_constant() {
        return AnglePoly::poly(UniPoly::var(), CaseUsed::Case1, false);
    }
    if p.degree() != Some(n as usize) {
        return AnglePoly::incompatible(CaseUsed::Case1);
    }
    match single_root(&p) {
        // y = m x goes to x = 0 when tan(theta) = 1/m.
        Some(m) if !m.is_zero() => AnglePoly::poly(UniPoly::new(vec![rat(-1), m]), CaseUsed::Case1, false),
        Some(_) => AnglePoly::poly(UniPoly::constant(rat(1)), CaseUsed::Case1, true),
        None => AnglePoly::incompatible(CaseUsed::Case1),
    }
}

fn oriented(f_n: &MultiPoly<Rational>, orientation: Orientation) -> MultiPoly<Rational> {
    match orientation {
        Orientation::Preserving => f_n.clone(),
        Orientation::Reversing => mirror_form(f_n),
    }
}

/// Case 1 subcase table. For the reversing orientation `f_n` is reflected
/// first, which turns the reversing problem into a preserving one.
pub fn angle_poly_case1(f_n: &MultiPoly<Rational>, g_n: &MultiPoly<Rational>, orientation: Orientation) -> Result<AnglePoly> {
    let (k, a) = match leading_case(f_n, g_n)? {
        LeadingCase::Case1 { k, a, .. } => (k, a),
        LeadingCase::Case2 => return Err(Error::InvalidInput("top forms are not in the two-line configuration".into())),
    };
    let f_n = oriented(f_n, orientation);
    let n = form_degree(g_n)?;
    let p = dehomogenize(&f_n, n);
    let l = n - p.degree().unwrap_or(0) as u32;
    if l == n || (l != k && l != n - k) {
        return Ok(AnglePoly::incompatible(CaseUsed::Case1));
    }
    // f_n = x^l (c x + y)^(n - l) with c = -m
    let Some(m) = single_root(&p) else {
        return Ok(AnglePoly::incompatible(CaseUsed::Case1));
    };
    let c = -m;
    let t = UniPoly::<Rational>::var();
    let one = UniPoly::constant(rat(1));
    // t + d/c with d = 1
    let shifted = || UniPoly::new(vec![rat(1) / &c, rat(1)]);
    let table = if a.is_zero() && c.is_zero() {
        if k != n - k {
            if k == l {
                AnglePoly::poly(t, CaseUsed::Case1, false)
            } else {
                AnglePoly::poly(one, CaseUsed::Case1, true)
            }
        } else {
            AnglePoly::poly(t, CaseUsed::Case1, true)
        }
    } else if k == l && n - k != k {
        AnglePoly::poly(t, CaseUsed::Case1, false)
    } else if k != l {
        if c.is_zero() {
            AnglePoly::poly(one, CaseUsed::Case1, true)
        } else {
            AnglePoly::poly(shifted(), CaseUsed::Case1, false)
        }
    } else if c.is_zero() {
        AnglePoly::poly(t, CaseUsed::Case1, true)
    } else {
        AnglePoly::poly(t.mul(&shifted()), CaseUsed::Case1, true)
    };
    Ok(table)
}

/// `num(q((y + t)/(1 - y t)))` (preserving) or `num(q((t - y)/(1 + y t)))`
/// (reversing) as a polynomial in `y` over `Q[t]`.
fn tangent_numerator(q: &UniPoly<Rational>, orientation: Orientation) -> UniPoly<UniPoly<Rational>> {
    type Qt = UniPoly<Rational>;
    let t = Qt::var();
    let one = Qt::constant(rat(1));
    let (top, bottom) = match orientation {
        Orientation::Preserving => (UniPoly::new(vec![t.clone(), one.clone()]), UniPoly::new(vec![one, t.neg()])),
        Orientation::Reversing => (UniPoly::new(vec![t.clone(), one.neg()]), UniPoly::new(vec![one, t])),
    };
    let d = q.degree().unwrap_or(0) as u32;
    let mut acc: UniPoly<Qt> = UniPoly::zero();
    for (k, c) in q.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = top.pow(k as u32).mul(&bottom.pow(d - k as u32)).scale(&Qt::constant(c.clone()));
        acc = acc.add(&term);
    }
    acc
}

/// Case 2: `P(t) = Res_y(p(y), num(Q(t, y)))`.
pub fn angle_poly_case2(f_n: &MultiPoly<Rational>, g_n: &MultiPoly<Rational>, orientation: Orientation) -> Result<AnglePoly> {
    let n = form_degree(g_n)?;
    let p = dehomogenize(f_n, form_degree(f_n)?);
    let q = dehomogenize(g_n, n);
    if p.is_constant() {
        return Ok(single_vertical_source(&q, n));
    }
    if q.is_constant() {
        return Ok(AnglePoly::incompatible(CaseUsed::Case2));
    }
    let pp: UniPoly<UniPoly<Rational>> = p.map(|c| UniPoly::constant(c.clone()));
    let num = tangent_numerator(&q, orientation);
    let res = uni_resultant(&pp, &num);
    if res.is_zero() {
        return Ok(AnglePoly { outcome: AngleOutcome::IdenticallyZero, case_used: CaseUsed::Case2, cos_zero_must_branch: true });
    }
    Ok(AnglePoly::poly(res, CaseUsed::Case2, true))
}

/// `f_n = c x^n`: `g_n` must be the n-th power of a single line `y = m x`,
/// reached from the vertical when `tan(theta) = -1/m`.
fn single_vertical_source(q: &UniPoly<Rational>, n: u32) -> AnglePoly {
    if q.degree() != Some(n as usize) {
        return AnglePoly::incompatible(CaseUsed::Case2);
    }
    match single_root(q) {
        Some(m) if !m.is_zero() => AnglePoly::poly(UniPoly::new(vec![rat(1), m]), CaseUsed::Case2, false),
        Some(_) => AnglePoly::poly(UniPoly::constant(rat(1)), CaseUsed::Case2, true),
        None => AnglePoly::incompatible(CaseUsed::Case2),
    }
}

/// True iff `y^2 + 1` divides both `p` and `q`.
pub fn prop5_check(p: &UniPoly<Rational>, q: &UniPoly<Rational>) -> bool {
    let m = UniPoly::from_ints(&[1, 0, 1]);
    p.rem(&m).is_zero() && q.rem(&m).is_zero()
}
