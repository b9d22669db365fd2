//! Invariant checks, one random case per call. Each returns a description
//! of the first violation.

use curvesim::angle::{angle_poly, dehomogenize, leading_case, prop5_check, AngleOutcome, LeadingCase};
use curvesim::complexrep::{from_complex, to_complex, to_complex_gaussian};
use curvesim::exact::{rat, Ring};
use curvesim::orientation::Orientation;
use curvesim::poly::uni_resultant;
use curvesim::simsystem::translated_subleading;
use curvesim::solver::{decide_similar, Options};
use curvesim::{GaussianRational, MultiPoly, Rational, UniPoly};
use rand::Rng;

use super::{compose, dense, form, gaussian, instance, inverse, rng, small_rational, XY};

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Conjugate symmetry of every complex representation we produce, and
/// agreement of the complex operations with their real counterparts.
pub fn symmetry(seed: u64) -> Check {
    let mut r = rng(seed);
    let d = r.random_range(3..=6);
    let f = dense(&mut r, d, 255);
    let fc = to_complex(&f).map_err(|e| format!("to_complex failed on {f}: {e}"))?;
    ensure(fc.check_symmetry(), || format!("asymmetric representation of {f}"))?;
    ensure(from_complex(&fc).as_ref() == Ok(&f), || format!("round trip changed {f}"))?;
    ensure(to_complex_gaussian(&f.to_gaussian()).as_ref() == Ok(&fc), || format!("Gaussian path differs for {f}"))?;

    let k = gaussian(&mut r);
    let t = fc.translate(&k);
    ensure(t.check_symmetry(), || format!("translate by {k} broke symmetry of {f}"))?;
    let direct = compose(&f, Orientation::Preserving, &GaussianRational::one(), &k);
    ensure(from_complex(&t).as_ref() == Ok(&direct), || format!("translate by {k} disagrees with f(x + Re k, y + Im k) for {f}"))?;

    let m = fc.mirror();
    ensure(m.check_symmetry(), || format!("mirror broke symmetry of {f}"))?;
    let direct = compose(&f, Orientation::Reversing, &GaussianRational::one(), &GaussianRational::zero());
    ensure(from_complex(&m).as_ref() == Ok(&direct), || format!("mirror disagrees with f(x, -y) for {f}"))?;

    let s = fc.scale(&GaussianRational::new(small_rational(&mut r) + rat(11), rat(0)));
    ensure(s.check_symmetry(), || format!("real scaling broke symmetry of {f}"))
}

fn uni(r: &mut rand_chacha::ChaCha8Rng, max_deg: usize) -> UniPoly<Rational> {
    loop {
        let d = r.random_range(1..=max_deg);
        let c: Vec<i64> = (0..=d).map(|_| r.random_range(-9..=9)).collect();
        let p = UniPoly::from_ints(&c);
        if p.degree().unwrap_or(0) > 0 {
            return p;
        }
    }
}

/// `Res(p, q) = 0` exactly when `gcd(p, q)` has positive degree. Half the
/// cases share a planted factor.
pub fn resultant_gcd(seed: u64) -> Check {
    let mut r = rng(seed);
    let (mut p, mut q) = (uni(&mut r, 5), uni(&mut r, 5));
    if r.random_bool(0.5) {
        let h = uni(&mut r, 3);
        p = p.mul(&h);
        q = q.mul(&h);
    }
    let res_zero = uni_resultant(&p, &q).is_zero();
    let shared = p.gcd(&q).degree().unwrap_or(0) > 0;
    ensure(res_zero == shared, || format!("p = {p:?}, q = {q:?}: resultant zero {res_zero}, common factor {shared}"))?;

    // The same through the multivariate entry point, eliminating y.
    let mp = MultiPoly::from_univariate(&p, "y").reembed(&XY).map_err(|e| e.to_string())?;
    let mq = MultiPoly::from_univariate(&q, "y").reembed(&XY).map_err(|e| e.to_string())?;
    let res = mp.resultant(&mq, "y").map_err(|e| e.to_string())?;
    ensure(res.is_zero() == shared, || format!("multivariate resultant disagrees for p = {p:?}, q = {q:?}"))
}

/// `P` vanishes identically exactly when `y^2 + 1` divides both
/// dehomogenised top forms. A third of the cases plant `x^2 + y^2` in both,
/// a third in one of them.
pub fn angle_degeneracy(seed: u64) -> Check {
    let mut r = rng(seed);
    let circle = super::xy(&[(2, 0, 1), (0, 2, 1)]);
    loop {
        let n = r.random_range(3..=5);
        let mode = r.random_range(0..3);
        let plant = |r: &mut rand_chacha::ChaCha8Rng, yes: bool| {
            if yes {
                circle.mul(&form(r, n - 2, 9))
            } else {
                form(r, n, 9)
            }
        };
        let f_n = plant(&mut r, mode == 0 || mode == 1);
        let g_n = plant(&mut r, mode == 0);
        let (f_n, g_n) = if mode == 1 && r.random_bool(0.5) { (g_n, f_n) } else { (f_n, g_n) };
        if f_n.total_degree() != Some(n) || g_n.total_degree() != Some(n) {
            continue;
        }
        if leading_case(&f_n, &g_n).map_err(|e| e.to_string())? != LeadingCase::Case2 {
            continue;
        }
        let expected = prop5_check(&dehomogenize(&f_n, n), &dehomogenize(&g_n, n));
        for o in [Orientation::Preserving, Orientation::Reversing] {
            let a = angle_poly(&f_n, &g_n, o).map_err(|e| e.to_string())?;
            let zero = a.outcome == AngleOutcome::IdenticallyZero;
            ensure(zero == expected, || format!("f_n = {f_n}, g_n = {g_n}, {}: P zero {zero}, divisibility {expected}", o.as_str()))?;
        }
        return Ok(());
    }
}

/// The shifted subleading coefficient from the closed formula equals the
/// one read off the directly translated curve.
pub fn translation(seed: u64) -> Check {
    let mut r = rng(seed);
    let d = r.random_range(3..=6);
    let f = dense(&mut r, d, 255);
    let k = match r.random_range(0..4) {
        0 => GaussianRational::from_ints(1, 0),
        1 => GaussianRational::from_ints(0, 1),
        2 => GaussianRational::from_ints(1, 1),
        _ => gaussian(&mut r),
    };
    let fc = to_complex(&f).map_err(|e| e.to_string())?;
    let shifted = to_complex(&compose(&f, Orientation::Preserving, &GaussianRational::one(), &k)).map_err(|e| e.to_string())?;
    for j in 0..d {
        let formula = translated_subleading(&fc, &k, j);
        let direct = shifted.get(d - j - 1, j);
        ensure(formula == direct, || format!("f = {f}, k = {k}, j = {j}: formula {formula}, direct {direct}"))?;
    }
    Ok(())
}

/// Solving with the curves swapped returns the inverse of every similarity.
pub fn group_inverse(seed: u64) -> Check {
    let mut r = rng(seed);
    let o = if r.random_bool(0.5) { Orientation::Preserving } else { Orientation::Reversing };
    let inst = instance(&mut r, 3, o);
    let fwd = decide_similar(&inst.f, &inst.g, &Options::default()).map_err(|e| e.to_string())?;
    let back = decide_similar(&inst.g, &inst.f, &Options::default()).map_err(|e| e.to_string())?;
    ensure(fwd.similarities.len() == back.similarities.len(), || {
        format!("g = {}: {} similarities forward, {} backward", inst.g, fwd.similarities.len(), back.similarities.len())
    })?;
    ensure(
        fwd.similarities
            .iter()
            .any(|s| s.orientation == o && s.a.as_gaussian() == Some(inst.a.clone()) && s.b.as_gaussian() == Some(inst.b.clone())),
        || format!("g = {}: planted similarity not found", inst.g),
    )?;
    for s in &fwd.similarities {
        let (Some(a), Some(b)) = (s.a.as_gaussian(), s.b.as_gaussian()) else {
            continue;
        };
        let (ai, bi) = inverse(s.orientation, &a, &b);
        let found = back
            .similarities
            .iter()
            .any(|t| t.orientation == s.orientation && t.a.as_gaussian() == Some(ai.clone()) && t.b.as_gaussian() == Some(bi.clone()));
        ensure(found, || format!("g = {}: inverse of ({a}, {b}) missing", inst.g))?;
    }
    Ok(())
}
