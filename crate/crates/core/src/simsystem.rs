//! The polynomial system whose solutions are the similarities between two curves.
//!
//! For `z -> a z + b` to map `F = 0` onto `G = 0` we need
//! `G(a z + b, conj(a) w + conj(b)) = lambda F(z, w)` for some nonzero
//! `lambda`; comparing coefficients of `z^s w^t` gives one equation per
//! bidegree. The reversing map `z -> a conj(z) + b` swaps the roles of `s`
//! and `t` on the left-hand side.
//!
//! The unknowns `lambda`, `b`, `conj(b)` are eliminated with closed-form
//! expressions, after which `a` is parametrised by real unknowns so the
//! remaining system has rational coefficients.

use serde::Serialize;

use crate::classify::delta;
use crate::complexrep::ComplexCurve;
use crate::error::{Error, Result};
use crate::exact::{binomial, rat, Field, GaussianRational, Rational, Ring};
use crate::orientation::Orientation;
use crate::poly::MultiPoly;

pub const A: &str = "a";
pub const ABAR: &str = "abar";
pub const B: &str = "b";
pub const BBAR: &str = "bbar";
pub const LAMBDA: &str = "lambda";
pub const OMEGA: &str = "omega";
pub const R: &str = "r";
pub const MU: &str = "mu";
pub const B1: &str = "b1";
pub const B2: &str = "b2";

const UNKNOWNS: [&str; 5] = [A, ABAR, B, BBAR, LAMBDA];

/// `alpha[s][t]` as seen by the given orientation: a reversing similarity
/// of `F` is a preserving one of its mirror image.
pub fn alpha_sigma(f: &ComplexCurve, orientation: Orientation, s: u32, t: u32) -> GaussianRational {
    match orientation {
        Orientation::Preserving => f.get(s, t),
        Orientation::Reversing => f.get(t, s),
    }
}

#[derive(Clone, Debug)]
pub struct SimilaritySystem {
    pub orientation: Orientation,
    /// Source curve.
    pub f: ComplexCurve,
    /// Target curve.
    pub g: ComplexCurve,
    /// Unknowns still present in `equations`.
    pub vars: Vec<String>,
    pub equations: Vec<MultiPoly>,
    /// Bidegree `(s, t)` each equation came from.
    pub provenance: Vec<(u32, u32)>,
    /// Unknowns already eliminated, as expressions in `vars`.
    pub eliminated: Vec<(String, MultiPoly)>,
}

impl SimilaritySystem {
    fn var_refs(&self) -> Vec<&str> {
        self.vars.iter().map(String::as_str).collect()
    }

    /// Expression for an unknown: itself if still present, otherwise its
    /// elimination formula.
    pub fn expression(&self, name: &str) -> Result<MultiPoly> {
        if self.vars.iter().any(|v| v == name) {
            return MultiPoly::var_in(&self.var_refs(), name);
        }
        self.eliminated.iter().find(|(n, _)| n == name).map(|(_, e)| e.clone()).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Replaces unknowns by expressions and moves to a new variable list.
    fn substituted(&self, subs: &[(&str, MultiPoly)], new_vars: &[&str]) -> Result<SimilaritySystem> {
        let mut equations = Vec::new();
        let mut provenance = Vec::new();
        for (eq, &p) in self.equations.iter().zip(&self.provenance) {
            let e = substitute_all(eq, subs, new_vars)?;
            if !e.is_zero() {
                equations.push(e);
                provenance.push(p);
            }
        }
        let mut eliminated = Vec::new();
        for (n, e) in &self.eliminated {
            eliminated.push((n.clone(), substitute_all(e, subs, new_vars)?));
        }
        for (n, e) in subs {
            eliminated.push((n.to_string(), substitute_all(e, &[], new_vars)?));
        }
        Ok(SimilaritySystem {
            orientation: self.orientation,
            f: self.f.clone(),
            g: self.g.clone(),
            vars: new_vars.iter().map(|s| s.to_string()).collect(),
            equations,
            provenance,
            eliminated,
        })
    }
}

/// Simultaneous substitution. The replacement expressions must not contain
/// any of the substituted names.
pub fn substitute_all(p: &MultiPoly, subs: &[(&str, MultiPoly)], target: &[&str]) -> Result<MultiPoly> {
    let mut all: Vec<&str> = p.vars().iter().map(String::as_str).collect();
    for (_, e) in subs {
        for v in e.vars() {
            if !all.contains(&v.as_str()) {
                all.push(v);
            }
        }
    }
    for v in target {
        if !all.contains(v) {
            all.push(v);
        }
    }
    let mut out = p.reembed(&all)?;
    for (name, e) in subs {
        if all.contains(name) {
            out = out.substitute(name, &e.reembed(&all)?)?;
        }
    }
    out.reembed(target)
}

/// Coefficient of `z^s w^t` in `G(a z + b, conj(a) w + conj(b))`.
fn expansion(g: &ComplexCurve, s: u32, t: u32) -> MultiPoly {
    let mut terms = Vec::new();
    for (&(p, q), beta) in g.entries() {
        if p < s || q < t {
            continue;
        }
        let k = binomial(p, s) * binomial(q, t);
        terms.push((vec![s, t, p - s, q - t, 0], beta.scale(&k)));
    }
    MultiPoly::from_terms(&UNKNOWNS, terms).expect("five exponents")
}

/// One equation per bidegree `s + t <= n` in the unknowns
/// `a, abar, b, bbar, lambda`; identically zero equations are dropped.
pub fn build_system(f: &ComplexCurve, g: &ComplexCurve, orientation: Orientation) -> Result<SimilaritySystem> {
    let n = g.degree();
    if f.degree() != n {
        return Err(Error::InvalidInput(format!("degree mismatch: {} vs {}", f.degree(), n)));
    }
    let mut equations = Vec::new();
    let mut provenance = Vec::new();
    for m in (0..=n).rev() {
        for s in (0..=m).rev() {
            let t = m - s;
            let lhs = match orientation {
                Orientation::Preserving => expansion(g, s, t),
                Orientation::Reversing => expansion(g, t, s),
            };
            let rhs = MultiPoly::from_terms(&UNKNOWNS, [(vec![0, 0, 0, 0, 1], f.get(s, t))]).expect("five exponents");
            let eq = lhs.sub(&rhs);
            if !eq.is_zero() {
                equations.push(eq);
                provenance.push((s, t));
            }
        }
    }
    Ok(SimilaritySystem {
        orientation,
        f: f.clone(),
        g: g.clone(),
        vars: UNKNOWNS.iter().map(|s| s.to_string()).collect(),
        equations,
        provenance,
        eliminated: Vec::new(),
    })
}

/// Removes `lambda` using the equation at bidegree `(n - j, j)`:
/// `lambda = beta[n-j][j] a^(n-j) abar^j / alpha_sigma[n-j][j]`.
pub fn eliminate_lambda(sys: &SimilaritySystem, j: u32) -> Result<SimilaritySystem> {
    let n = sys.g.degree();
    if j > n || !sys.vars.iter().any(|v| v == LAMBDA) {
        return Err(Error::InvalidInput(format!("cannot eliminate lambda with j = {j}")));
    }
    let den = alpha_sigma(&sys.f, sys.orientation, n - j, j);
    if den.is_zero() {
        return Err(Error::ZeroDenominator(j));
    }
    let k = sys.g.top(j).div(&den);
    let vars = sys.var_refs();
    let mut exps = vec![0; vars.len()];
    exps[sys.vars.iter().position(|v| v == A).expect("a present")] = n - j;
    exps[sys.vars.iter().position(|v| v == ABAR).expect("abar present")] = j;
    let lambda = MultiPoly::from_terms(&vars, [(exps, k)])?;
    let rest: Vec<&str> = vars.iter().copied().filter(|v| *v != LAMBDA).collect();
    sys.substituted(&[(LAMBDA, lambda)], &rest)
}

/// Closed-form `b` and `conj(b)` as polynomials in `a`, `abar`, obtained
/// from the equation at bidegree `(n - j - 1, j)` and its conjugate.
/// Requires `delta(G, j) != 0`.
pub fn b_expressions(f: &ComplexCurve, g: &ComplexCurve, orientation: Orientation, j: u32) -> Result<(MultiPoly, MultiPoly)> {
    let n = g.degree();
    if j >= n {
        return Err(Error::GeneralEliminationUnavailable(j));
    }
    let d = delta(g, j)?;
    if d.is_zero() {
        return Err(Error::GeneralEliminationUnavailable(j));
    }
    let den = alpha_sigma(f, orientation, n - j, j);
    if den.is_zero() {
        return Err(Error::ZeroDenominator(j));
    }
    let cap_a = g.top(j).scale(&rat((n - j) as i64));
    let cap_b = g.top(j + 1).scale(&rat((j + 1) as i64));
    let c = g.top(j).mul(&alpha_sigma(f, orientation, n - j - 1, j)).div(&den);
    let beta0 = g.get(n - j - 1, j);
    let vars = [A, ABAR];
    let lin = |ka: GaussianRational, kabar: GaussianRational, k0: GaussianRational| {
        MultiPoly::from_terms(&vars, [(vec![1, 0], ka), (vec![0, 1], kabar), (vec![0, 0], k0)]).expect("two exponents")
    };
    // ca - beta0 and conj(c) abar - conj(beta0)
    let u = lin(c.clone(), GaussianRational::zero(), beta0.neg());
    let ubar = lin(GaussianRational::zero(), c.conj(), beta0.conj().neg());
    let inv = GaussianRational::from_rational(d.inv());
    let b = u.scale(&cap_a.conj()).sub(&ubar.scale(&cap_b)).scale(&inv);
    let bbar = ubar.scale(&cap_a).sub(&u.scale(&cap_b.conj())).scale(&inv);
    Ok((b, bbar))
}

/// Removes `b` and `bbar`; the system must already be free of `lambda`.
pub fn solve_b_linear(sys: &SimilaritySystem, j: u32) -> Result<SimilaritySystem> {
    if sys.vars != [A, ABAR, B, BBAR] {
        return Err(Error::InvalidInput("eliminate lambda before solving for b".into()));
    }
    let (b, bbar) = b_expressions(&sys.f, &sys.g, sys.orientation, j)?;
    sys.substituted(&[(B, b), (BBAR, bbar)], &[A, ABAR])
}

/// How `a` is parametrised in a reduced system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `a = r (1 + i omega)`, covering `Re a != 0`.
    Rotation,
    /// `a = i mu`.
    PureImaginary,
    /// `b = b1 + i b2` with `a` a linear function of `b`.
    Special,
}

/// A real polynomial system together with the similarity it encodes.
#[derive(Clone, Debug)]
pub struct ReducedSystem {
    pub orientation: Orientation,
    pub branch: Branch,
    pub vars: Vec<String>,
    pub equations: Vec<MultiPoly<Rational>>,
    pub a: MultiPoly,
    pub b: MultiPoly,
    pub lambda: MultiPoly,
    /// Must not vanish at a solution (it vanishes exactly where `a = 0`).
    pub nonzero: MultiPoly<Rational>,
}

impl ReducedSystem {
    pub fn var_refs(&self) -> Vec<&str> {
        self.vars.iter().map(String::as_str).collect()
    }
}

/// Real and imaginary parts, each stripped of the given factor as often as
/// it divides, made primitive and deduplicated.
fn real_equations(
    eqs: &[MultiPoly],
    strip: impl Fn(&MultiPoly<Rational>) -> Result<MultiPoly<Rational>>,
) -> Result<Vec<MultiPoly<Rational>>> {
    let mut out: Vec<MultiPoly<Rational>> = Vec::new();
    for eq in eqs {
        for part in [eq.real_part(), eq.imag_part()] {
            if part.is_zero() {
                continue;
            }
            let p = strip(&part)?.primitive();
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

fn reduce_with_a(
    sys: &SimilaritySystem,
    branch: Branch,
    vars: &[&str],
    a: MultiPoly,
    abar: MultiPoly,
    strip_var: &str,
) -> Result<ReducedSystem> {
    if sys.vars != [A, ABAR] {
        return Err(Error::InvalidInput("eliminate lambda and b before parametrising a".into()));
    }
    let subs = [(A, a.clone()), (ABAR, abar)];
    let mut complex = Vec::new();
    for eq in &sys.equations {
        complex.push(substitute_all(eq, &subs, vars)?);
    }
    let equations = real_equations(&complex, |p| p.strip_var_power(strip_var))?;
    let b = substitute_all(&sys.expression(B)?, &subs, vars)?;
    let lambda = substitute_all(&sys.expression(LAMBDA)?, &subs, vars)?;
    Ok(ReducedSystem {
        orientation: sys.orientation,
        branch,
        vars: vars.iter().map(|s| s.to_string()).collect(),
        equations,
        a: a.reembed(vars)?,
        b,
        lambda,
        nonzero: MultiPoly::var_in(vars, strip_var)?,
    })
}

/// Substitutes `a = r (1 + i omega)`; every equation is divided by the
/// largest power of `r` it contains.
pub fn substitute_rotation(sys: &SimilaritySystem) -> Result<ReducedSystem> {
    let vars = [OMEGA, R];
    let one = GaussianRational::one();
    let i = GaussianRational::i();
    let a = MultiPoly::from_terms(&vars, [(vec![0, 1], one.clone()), (vec![1, 1], i.clone())])?;
    let abar = MultiPoly::from_terms(&vars, [(vec![0, 1], one), (vec![1, 1], i.neg())])?;
    reduce_with_a(sys, Branch::Rotation, &vars, a, abar, R)
}

/// Substitutes `a = i mu`, the rotations by a right angle that the angle
/// polynomial cannot see.
pub fn substitute_pure_imag(sys: &SimilaritySystem) -> Result<ReducedSystem> {
    let vars = [MU];
    let i = GaussianRational::i();
    let a = MultiPoly::from_terms(&vars, [(vec![1], i.clone())])?;
    let abar = MultiPoly::from_terms(&vars, [(vec![1], i.neg())])?;
    reduce_with_a(sys, Branch::PureImaginary, &vars, a, abar, MU)
}

/// `alpha[n-j-1][j]` of `F(z + k, w + conj(k))` from the coefficients of `F`.
pub fn translated_subleading(f: &ComplexCurve, k: &GaussianRational, j: u32) -> GaussianRational {
    let n = f.degree();
    debug_assert!(j < n);
    let s = n - j - 1;
    f.get(s, j).add(&k.mul(&f.get(s + 1, j)).scale(&rat((n - j) as i64))).add(&k.conj().mul(&f.get(s, j + 1)).scale(&rat((j + 1) as i64)))
}

/// Shift candidates `1, i, 1 + i, 2, 2i, 2 + 2i, ...`.
fn translation_candidates() -> impl Iterator<Item = GaussianRational> {
    (1i64..).flat_map(|k| [GaussianRational::from_ints(k, 0), GaussianRational::from_ints(0, k), GaussianRational::from_ints(k, k)])
}

/// In the special case the reduction divides by `alpha_sigma[n-1][0]`.
/// When it vanishes, translate `F` so that it does not. Returns the
/// translated curve and the shift `k` (zero if none was needed).
pub fn special_translate(f: &ComplexCurve, orientation: Orientation) -> Result<(ComplexCurve, GaussianRational)> {
    let n = f.degree();
    if n == 0 {
        return Err(Error::DegreeTooLow(0));
    }
    if !alpha_sigma(f, orientation, n - 1, 0).is_zero() {
        return Ok((f.clone(), GaussianRational::zero()));
    }
    // The shifted coefficient is affine in k with leading part
    // n alpha[n][0] k + alpha[n-1][1] conj(k); it is nonzero for one of the
    // first three candidates unless both of those vanish.
    if f.top(0).is_zero() && f.top(1).is_zero() {
        return Err(Error::InvalidInput("no translation makes the subleading coefficient nonzero".into()));
    }
    for k in translation_candidates().take(30) {
        let sub = translated_subleading(f, &k, 0);
        let sub = match orientation {
            Orientation::Preserving => sub,
            Orientation::Reversing => sub.conj(),
        };
        if !sub.is_zero() {
            let t = f.translate(&k);
            debug_assert_eq!(alpha_sigma(&t, orientation, n - 1, 0), sub);
            return Ok((t, k));
        }
    }
    Err(Error::InvalidInput("no translation makes the subleading coefficient nonzero".into()))
}

/// Reduces a special-case system to two real unknowns `b1`, `b2` with
/// `b = b1 + i b2`, `a` linear in `b` and `lambda` proportional to `a^n`.
pub fn special_reduce(sys: &SimilaritySystem) -> Result<ReducedSystem> {
    let n = sys.g.degree();
    let o = sys.orientation;
    let den = alpha_sigma(&sys.f, o, n, 0);
    if den.is_zero() {
        return Err(Error::ZeroDenominator(0));
    }
    let sub = alpha_sigma(&sys.f, o, n - 1, 0);
    if sub.is_zero() {
        return Err(Error::TranslateFirst);
    }
    let sys = if sys.vars.iter().any(|v| v == LAMBDA) { eliminate_lambda(sys, 0)? } else { sys.clone() };
    let beta_n = sys.g.top(0);
    let c = beta_n.mul(&sub).div(&den);
    let cinv = c.inv();
    let vars = [B1, B2];
    let i = GaussianRational::i();
    let b = MultiPoly::from_terms(&vars, [(vec![1, 0], GaussianRational::one()), (vec![0, 1], i.clone())])?;
    let bbar = b.conj();
    let xi = b
        .scale(&beta_n.scale(&rat(n as i64)))
        .add(&bbar.scale(&sys.g.get(n - 1, 1)))
        .add(&MultiPoly::constant_in(&vars, sys.g.get(n - 1, 0)))
        .scale(&cinv);
    let xibar = xi.conj();
    let subs = [(A, xi.clone()), (ABAR, xibar), (B, b.clone()), (BBAR, bbar)];
    let mut complex = Vec::new();
    for eq in &sys.equations {
        complex.push(substitute_all(eq, &subs, &vars)?);
    }
    // If a is a constant multiple of a real linear form L, each equation is
    // divisible by a power of L and those factors only describe a = 0.
    let line = real_line(&xi);
    let equations = real_equations(&complex, |p| {
        let mut p = p.clone();
        if let Some(l) = &line {
            while let Some(q) = p.div_exact(l) {
                p = q;
            }
        }
        Ok(p)
    })?;
    let lambda = substitute_all(&sys.expression(LAMBDA)?, &subs, &vars)?;
    let re = xi.real_part();
    let im = xi.imag_part();
    let nonzero = re.mul(&re).add(&im.mul(&im));
    Ok(ReducedSystem {
        orientation: o,
        branch: Branch::Special,
        vars: vars.iter().map(|s| s.to_string()).collect(),
        equations,
        a: xi,
        b,
        lambda,
        nonzero,
    })
}

/// `xi / u` when that is a non-constant real polynomial for some unit-free
/// complex `u`.
fn real_line(xi: &MultiPoly) -> Option<MultiPoly<Rational>> {
    if xi.total_degree() != Some(1) {
        return None;
    }
    let (_, lead) = xi.terms().next_back()?;
    let inv = lead.inv();
    xi.scale(&inv).to_real().ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexrep::to_complex;

    fn curve(terms: &[(u32, u32, i64)]) -> ComplexCurve {
        let f = MultiPoly::from_terms(&["x", "y"], terms.iter().map(|&(a, b, c)| (vec![a, b], rat(c)))).unwrap();
        to_complex(&f).unwrap()
    }

    fn rotated_cubic() -> (ComplexCurve, ComplexCurve) {
        let f = curve(&[(2, 1, 15), (1, 2, -40), (0, 3, -15), (2, 0, 5), (1, 1, 5), (0, 2, -35), (1, 0, 5), (0, 1, -5), (0, 0, 2)]);
        let g = curve(&[(0, 3, 1), (1, 2, 2), (2, 1, -1), (1, 1, -1), (3, 0, -2), (0, 0, 1)]);
        (f, g)
    }

    fn gi(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    fn eval(p: &MultiPoly, vals: &[GaussianRational]) -> GaussianRational {
        p.eval_all(vals).unwrap()
    }

    #[test]
    fn known_solution_satisfies_full_system() {
        let (f, g) = rotated_cubic();
        let sys = build_system(&f, &g, Orientation::Preserving).unwrap();
        assert!(sys.equations.len() <= 10);
        let vals = [gi(1, -2), gi(1, 2), gi(1, -1), gi(1, 1), gi(1, 0)];
        for eq in &sys.equations {
            assert!(eval(eq, &vals).is_zero(), "{eq}");
        }
    }

    #[test]
    fn elimination_reproduces_known_b_and_lambda() {
        let (f, g) = rotated_cubic();
        let j = crate::classify::classify_case(&g).witness_j.unwrap();
        let sys = build_system(&f, &g, Orientation::Preserving).unwrap();
        let sys = eliminate_lambda(&sys, j).unwrap();
        let sys = solve_b_linear(&sys, j).unwrap();
        assert_eq!(sys.vars, vec![A, ABAR]);
        let a = [gi(1, -2), gi(1, 2)];
        assert_eq!(eval(&sys.expression(B).unwrap(), &a), gi(1, -1));
        assert_eq!(eval(&sys.expression(BBAR).unwrap(), &a), gi(1, 1));
        assert_eq!(eval(&sys.expression(LAMBDA).unwrap(), &a), gi(1, 0));
        for eq in &sys.equations {
            assert!(eval(eq, &a).is_zero());
        }
    }

    #[test]
    fn rotation_branch_equations_vanish_at_solution() {
        let (f, g) = rotated_cubic();
        let j = crate::classify::classify_case(&g).witness_j.unwrap();
        let sys = build_system(&f, &g, Orientation::Preserving).unwrap();
        let sys = solve_b_linear(&eliminate_lambda(&sys, j).unwrap(), j).unwrap();
        let red = substitute_rotation(&sys).unwrap();
        // a = 1 - 2i: r = 1, omega = -2
        let vals = [rat(-2), rat(1)];
        assert!(!red.equations.is_empty());
        for eq in &red.equations {
            assert!(eq.eval_all(&vals).unwrap().is_zero(), "{eq}");
        }
        let gvals = [gi(-2, 0), gi(1, 0)];
        assert_eq!(eval(&red.a, &gvals), gi(1, -2));
        assert_eq!(eval(&red.b, &gvals), gi(1, -1));
        // no equation keeps a factor r
        for eq in &red.equations {
            assert!(eq.div_exact(&MultiPoly::var_in(&[OMEGA, R], R).unwrap()).is_none());
        }
    }

    #[test]
    fn reversing_lemniscates() {
        let f = curve(&[(4, 0, 50), (2, 2, 100), (0, 4, 50), (2, 0, -1), (0, 2, 1)]);
        let g = f.clone();
        let sys = build_system(&f, &g, Orientation::Reversing).unwrap();
        // the identity reflection z -> conj(z) maps f(x, y) to f(x, -y) = f
        let vals = [gi(1, 0), gi(1, 0), gi(0, 0), gi(0, 0), gi(1, 0)];
        for eq in &sys.equations {
            assert!(eval(eq, &vals).is_zero());
        }
    }

    #[test]
    fn translation_formula_matches_direct_expansion() {
        let (f, _) = rotated_cubic();
        for k in translation_candidates().take(6) {
            let t = f.translate(&k);
            for j in 0..f.degree() {
                let n = f.degree();
                assert_eq!(translated_subleading(&f, &k, j), t.get(n - j - 1, j));
            }
        }
    }

    #[test]
    fn special_case_fermat_cubic() {
        let f = curve(&[(3, 0, 1), (0, 3, 1), (0, 0, -3)]);
        let g = f.clone();
        let (t, k) = special_translate(&f, Orientation::Preserving).unwrap();
        assert!(!k.is_zero());
        let sys = build_system(&t, &g, Orientation::Preserving).unwrap();
        let red = special_reduce(&sys).unwrap();
        assert_eq!(red.vars, vec![B1, B2]);
        // identity on F is b = a k after undoing the shift, i.e. b = k
        let vals = [k.re.clone(), k.im.clone()];
        for eq in &red.equations {
            assert!(eq.eval_all(&vals).unwrap().is_zero(), "{eq}");
        }
        let gv = [GaussianRational::from_rational(k.re.clone()), GaussianRational::from_rational(k.im.clone())];
        assert_eq!(eval(&red.a, &gv), gi(1, 0));
        assert_eq!(eval(&red.lambda, &gv), gi(1, 0));
    }

    #[test]
    fn special_reduce_demands_translation() {
        let f = curve(&[(3, 0, 1), (0, 3, 1), (0, 0, -3)]);
        let sys = build_system(&f, &f, Orientation::Preserving).unwrap();
        assert!(matches!(special_reduce(&sys), Err(Error::TranslateFirst)));
    }
}
