//! Real solutions of zero-dimensional polynomial systems in one or two
//! unknowns with rational coefficients.
//!
//! A solution is a real algebraic number `theta` together with one
//! polynomial per unknown giving that unknown's value at `theta`. For two
//! unknowns we project onto the first (the eliminant), then solve each fibre
//! with a gcd over `Q(u0)`. The gcd is computed modulo the squarefree
//! eliminant and splits it whenever a leading coefficient turns out to be a
//! zero divisor, keeping the factor that vanishes at `u0`.

use log::debug;

use crate::error::{Error, Result};
use crate::exact::{rat, Rational, Ring};
use crate::poly::realroots::isolate_real_roots;
use crate::poly::{uni_resultant, MultiPoly, RealAlgebraicNumber, UniPoly};

type Qt = UniPoly<Rational>;

/// One real solution.
#[derive(Clone, Debug)]
pub struct Point {
    pub theta: RealAlgebraicNumber,
    /// Value of each unknown as a polynomial in `theta`, reduced modulo its
    /// defining polynomial.
    pub coords: Vec<Qt>,
}

impl Point {
    /// The defining polynomial of `theta`.
    pub fn modulus(&self) -> &Qt {
        self.theta.defining()
    }
}

/// Shear multipliers tried when a fibre holds several solutions.
const SHEARS: [i64; 8] = [1, 2, -1, 3, -2, 5, -3, 7];

/// Real solutions of a system in a single unknown.
pub fn solve_univariate(eqs: &[MultiPoly<Rational>], var: &str) -> Result<Vec<Point>> {
    let mut g: Option<Qt> = None;
    for e in eqs {
        let p = e.to_univariate(var)?;
        g = Some(match g {
            None => p,
            Some(g) => g.gcd(&p),
        });
    }
    let g = match g {
        Some(g) if !g.is_zero() => g,
        _ => return Err(Error::PositiveDimensional(format!("no equation constrains {var}"))),
    };
    Ok(isolate_real_roots(&g)?.into_iter().map(|theta| Point { theta, coords: vec![Qt::var()] }).collect())
}

/// Real solutions of a system in two unknowns. `helper`, if given, is a
/// nonzero polynomial in the first unknown that vanishes at every solution.
pub fn solve_bivariate(eqs: &[MultiPoly<Rational>], vars: [&str; 2], helper: Option<&Qt>) -> Result<Vec<Point>> {
    let eqs: Vec<MultiPoly<Rational>> = eqs.iter().map(|e| e.reembed(&vars)).collect::<Result<_>>()?;
    if let Some(points) = solve_ordered(&eqs, false, helper)? {
        return Ok(points);
    }
    debug!("no eliminant in {}, swapping unknowns", vars[0]);
    if let Some(points) = solve_ordered(&eqs, true, None)? {
        return Ok(points);
    }
    Err(Error::PositiveDimensional(format!("cannot eliminate {} or {}", vars[0], vars[1])))
}

/// Coefficients in `v` of a polynomial in `(u, v)`, each a polynomial in `u`.
fn split(p: &MultiPoly<Rational>, swap: bool) -> Vec<Qt> {
    let (iu, iv) = if swap { (1, 0) } else { (0, 1) };
    let mut out: Vec<Vec<Rational>> = Vec::new();
    for (e, c) in p.terms() {
        let (du, dv) = (e[iu] as usize, e[iv] as usize);
        if out.len() <= dv {
            out.resize(dv + 1, Vec::new());
        }
        if out[dv].len() <= du {
            out[dv].resize(du + 1, rat(0));
        }
        out[dv][du] = c.clone();
    }
    out.into_iter().map(Qt::new).collect()
}

fn trim_v(mut p: Vec<Qt>) -> Vec<Qt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// `E(u - c v, v)` in the split representation.
fn shear(p: &[Qt], c: i64) -> Vec<Qt> {
    // (u - c v)^k expanded as polynomials in v with coefficients in Q[u].
    let lin: UniPoly<Qt> = UniPoly::new(vec![Qt::var(), Qt::constant(rat(-c))]);
    let mut out: UniPoly<Qt> = UniPoly::zero();
    for (dv, coeff) in p.iter().enumerate() {
        let mut acc: UniPoly<Qt> = UniPoly::zero();
        let mut power: UniPoly<Qt> = UniPoly::constant(Qt::constant(rat(1)));
        for (du, q) in coeff.coeffs().iter().enumerate() {
            if du > 0 {
                power = power.mul(&lin);
            }
            if !q.is_zero() {
                acc = acc.add(&power.scale(&Qt::constant(q.clone())));
            }
        }
        out = out.add(&acc.shift(dv));
    }
    out.into_coeffs()
}

/// Polynomial in `u` vanishing at the `u`-coordinate of every solution.
/// `None` when no nonzero one could be produced.
fn eliminant(eqs: &[Vec<Qt>], helper: Option<&Qt>) -> Option<Qt> {
    let mut g = helper.filter(|h| !h.is_zero()).cloned();
    for e in eqs.iter().filter(|e| e.len() == 1) {
        g = Some(match g {
            None => e[0].clone(),
            Some(g) => g.gcd(&e[0]),
        });
    }
    if g.is_some() {
        return g;
    }
    let mut cands: Vec<&Vec<Qt>> = eqs.iter().filter(|e| e.len() > 1).collect();
    cands.sort_by_key(|e| (e.len(), e.iter().map(|c| c.coeffs().len()).sum::<usize>()));
    for (pi, pivot) in cands.iter().enumerate().take(4) {
        let a = UniPoly::new(pivot.to_vec());
        let mut acc: Option<Qt> = None;
        let mut stale = 0;
        for (k, e) in cands.iter().enumerate() {
            if k == pi {
                continue;
            }
            let r = uni_resultant(&a, &UniPoly::new(e.to_vec()));
            if r.is_zero() {
                continue;
            }
            let next = match &acc {
                None => r.monic(),
                Some(acc) => acc.gcd(&r),
            };
            if acc.as_ref().is_some_and(|acc| acc.degree() == next.degree()) {
                stale += 1;
            } else {
                stale = 0;
            }
            acc = Some(next);
            // Extra factors only cost empty fibres; stop once the gcd settles.
            if stale >= 3 || acc.as_ref().is_some_and(|a| a.is_constant()) {
                break;
            }
        }
        if acc.is_some() {
            return acc;
        }
    }
    None
}

fn solve_ordered(eqs: &[MultiPoly<Rational>], swap: bool, helper: Option<&Qt>) -> Result<Option<Vec<Point>>> {
    let split_eqs: Vec<Vec<Qt>> = eqs.iter().map(|e| split(e, swap)).filter(|e| !e.is_empty()).collect();
    if split_eqs.is_empty() {
        return Err(Error::PositiveDimensional("empty system".into()));
    }
    let Some(u_poly) = eliminant(&split_eqs, helper) else {
        return Ok(None);
    };
    if let Some(points) = solve_with_eliminant(&split_eqs, &u_poly)? {
        return Ok(Some(unswap(points, swap)));
    }
    for c in SHEARS {
        debug!("shearing with c = {c}");
        let sheared: Vec<Vec<Qt>> = split_eqs.iter().map(|e| trim_v(shear(e, c))).filter(|e| !e.is_empty()).collect();
        let Some(w_poly) = eliminant(&sheared, None) else {
            continue;
        };
        if let Some(points) = solve_with_eliminant(&sheared, &w_poly)? {
            let points = points
                .into_iter()
                .map(|mut p| {
                    // u = w - c v
                    let u = p.coords[0].sub(&p.coords[1].scale(&rat(c))).rem(p.modulus());
                    p.coords[0] = u;
                    p
                })
                .collect();
            return Ok(Some(unswap(points, swap)));
        }
    }
    Err(Error::PositiveDimensional("fibres stay non-trivial under every shear tried".into()))
}

fn unswap(points: Vec<Point>, swap: bool) -> Vec<Point> {
    if !swap {
        return points;
    }
    points
        .into_iter()
        .map(|mut p| {
            p.coords.swap(0, 1);
            p
        })
        .collect()
}

/// Solves every fibre over the real roots of `u_poly`; `None` if some
/// fibre holds more than one solution over an irrational `u0`.
fn solve_with_eliminant(eqs: &[Vec<Qt>], u_poly: &Qt) -> Result<Option<Vec<Point>>> {
    let mut points = Vec::new();
    for u0 in isolate_real_roots(u_poly)? {
        match solve_fiber(eqs, &u0)? {
            Some(mut p) => points.append(&mut p),
            None => return Ok(None),
        }
    }
    Ok(Some(points))
}

fn solve_fiber(eqs: &[Vec<Qt>], u0: &RealAlgebraicNumber) -> Result<Option<Vec<Point>>> {
    if let Some(q) = u0.to_rational() {
        let mut g: Option<Qt> = None;
        for e in eqs {
            let p = Qt::new(e.iter().map(|c| c.eval(&q)).collect());
            g = Some(match g {
                None => p,
                Some(g) => g.gcd(&p),
            });
        }
        let g = g.unwrap_or_else(Qt::zero);
        if g.is_zero() {
            return Err(Error::PositiveDimensional(format!("every equation vanishes on the fibre u = {q}")));
        }
        let u = Qt::constant(q);
        return Ok(Some(isolate_real_roots(&g)?.into_iter().map(|theta| Point { theta, coords: vec![u.clone(), Qt::var()] }).collect()));
    }
    let mut ring = Dyn::new(u0.clone());
    let mut g: Vec<Qt> = Vec::new();
    for e in eqs {
        g = ring.gcd(g, e.clone());
    }
    if g.is_empty() {
        return Err(Error::PositiveDimensional("every equation vanishes on an irrational fibre".into()));
    }
    let dg = ring.derivative(&g);
    let common = ring.gcd(g.clone(), dg);
    let g = ring.quotient(&g, &common);
    match g.len() {
        0 | 1 => Ok(Some(Vec::new())),
        2 => {
            let theta = RealAlgebraicNumber::new(&ring.d, u0.lo().clone(), u0.hi().clone())
                .expect("a factor of the defining polynomial keeps the isolating interval");
            let d = theta.defining().clone();
            let v = g[0].neg().rem(&d);
            Ok(Some(vec![Point { theta, coords: vec![Qt::var().rem(&d), v] }]))
        }
        _ => Ok(None),
    }
}

/// Arithmetic in `Q[t] / (d)` for a squarefree `d` with a distinguished
/// real root; `d` only ever shrinks to the factor vanishing at that root.
struct Dyn {
    d: Qt,
    root: RealAlgebraicNumber,
}

enum Status {
    Zero,
    Unit(Qt),
}

impl Dyn {
    fn new(root: RealAlgebraicNumber) -> Self {
        Dyn { d: root.defining().monic(), root }
    }

    fn reduce(&self, x: &Qt) -> Qt {
        x.rem(&self.d)
    }

    fn mul(&self, x: &Qt, y: &Qt) -> Qt {
        x.mul(y).rem(&self.d)
    }

    fn status(&mut self, x: &Qt) -> Status {
        let x = self.reduce(x);
        if x.is_zero() {
            return Status::Zero;
        }
        let g = x.gcd(&self.d);
        if g.is_constant() {
            return Status::Unit(x.inverse_mod(&self.d).expect("coprime"));
        }
        if self.root.sign_of(&g) == 0 {
            self.d = g;
            Status::Zero
        } else {
            self.d = self.d.exact_quotient(&g);
            let x = self.reduce(&x);
            Status::Unit(x.inverse_mod(&self.d).expect("squarefree modulus"))
        }
    }

    /// Drops leading coefficients that vanish at the root.
    fn trim(&mut self, mut p: Vec<Qt>) -> Vec<Qt> {
        loop {
            let Some(lc) = p.last() else { return p };
            match self.status(&lc.clone()) {
                Status::Zero => {
                    p.pop();
                }
                Status::Unit(_) => return p.iter().map(|c| self.reduce(c)).collect(),
            }
        }
    }

    fn monic(&mut self, p: Vec<Qt>) -> Vec<Qt> {
        let p = self.trim(p);
        let Some(lc) = p.last() else { return p };
        let Status::Unit(inv) = self.status(&lc.clone()) else { unreachable!("trimmed") };
        p.iter().map(|c| self.mul(c, &inv)).collect()
    }

    /// Remainder of `a` by a monic `b`.
    fn rem(&mut self, a: Vec<Qt>, b: &[Qt]) -> Vec<Qt> {
        let mut a = self.trim(a);
        while a.len() >= b.len() && !b.is_empty() {
            let lead = a.last().expect("nonempty").clone();
            let shift = a.len() - b.len();
            for (i, bi) in b.iter().enumerate() {
                a[i + shift] = self.reduce(&a[i + shift].sub(&lead.mul(bi)));
            }
            a.pop();
            a = self.trim(a);
        }
        a
    }

    fn gcd(&mut self, a: Vec<Qt>, b: Vec<Qt>) -> Vec<Qt> {
        let (mut a, mut b) = (a, b);
        loop {
            b = self.monic(b);
            if b.is_empty() {
                return self.monic(a);
            }
            let r = self.rem(a, &b);
            a = b;
            b = r;
        }
    }

    fn derivative(&self, p: &[Qt]) -> Vec<Qt> {
        p.iter().enumerate().skip(1).map(|(k, c)| c.scale(&rat(k as i64))).collect()
    }

    /// Exact quotient `a / b` for monic `b`.
    fn quotient(&mut self, a: &[Qt], b: &[Qt]) -> Vec<Qt> {
        let b = self.monic(b.to_vec());
        let mut a = self.trim(a.to_vec());
        if b.is_empty() || a.len() < b.len() {
            return a;
        }
        let mut q = vec![Qt::zero(); a.len() - b.len() + 1];
        while a.len() >= b.len() {
            let lead = a.last().expect("nonempty").clone();
            let shift = a.len() - b.len();
            q[shift] = lead.clone();
            for (i, bi) in b.iter().enumerate() {
                a[i + shift] = self.reduce(&a[i + shift].sub(&lead.mul(bi)));
            }
            a.pop();
            a = self.trim(a);
        }
        q.iter().map(|c| self.reduce(c)).collect()
    }
}
