//! Deciding similarity: builds the reduced systems for each orientation,
//! solves them exactly, and keeps the candidates that pass verification.

pub mod bivariate;
pub mod verify;

use std::cmp::Ordering;
use std::fmt;

use log::debug;

use crate::angle::{angle_poly, AngleOutcome, CaseUsed};
use crate::classify::{classify_case, compatible, CaseKind};
use crate::complexrep::{check_curve, to_complex, ComplexCurve};
use crate::error::Result;
use crate::exact::{Field, GaussianRational, Rational, Ring};
use crate::orientation::{Orientation, OrientationFilter};
use crate::poly::{MultiPoly, RealAlgebraicNumber, RealNumber, UniPoly};
use crate::simsystem::{
    build_system, eliminate_lambda, solve_b_linear, special_reduce, special_translate, substitute_pure_imag, substitute_rotation, Branch,
    ReducedSystem, B1, B2, MU, OMEGA, R,
};

use bivariate::{solve_bivariate, solve_univariate, Point};
use verify::{verify_candidate, Candidate};

/// A complex number with exact real and imaginary parts.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexNumber {
    pub re: RealNumber,
    pub im: RealNumber,
}

impl ComplexNumber {
    pub fn from_gaussian(g: &GaussianRational) -> Self {
        ComplexNumber { re: RealNumber::Rational(g.re.clone()), im: RealNumber::Rational(g.im.clone()) }
    }

    pub fn as_gaussian(&self) -> Option<GaussianRational> {
        Some(GaussianRational::new(self.re.as_rational()?.clone(), self.im.as_rational()?.clone()))
    }

    pub fn cmp_exact(&self, other: &ComplexNumber) -> Ordering {
        self.re.cmp_exact(&other.re).then_with(|| self.im.cmp_exact(&other.im))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for ComplexNumber {
    /// Exact form for Gaussian rationals, otherwise a decimal approximation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(g) = self.as_gaussian() {
            return write!(f, "{g}");
        }
        let im = self.im.approx(12);
        match im.strip_prefix('-') {
            Some(abs) => write!(f, "~ {} - {} i", self.re.approx(12), abs),
            None => write!(f, "~ {} + {} i", self.re.approx(12), im),
        }
    }
}

/// A similarity `z -> a z + b` or `z -> a conj(z) + b` carrying the first
/// curve onto the second, with `G(h(z)) = lambda F(z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Similarity {
    pub orientation: Orientation,
    pub a: ComplexNumber,
    pub b: ComplexNumber,
    pub lambda: ComplexNumber,
    /// `|a|^2`, the square of the scaling ratio.
    pub scale_squared: RealNumber,
    /// Exact representation the similarity was verified from.
    pub certificate: Candidate,
}

impl Similarity {
    pub fn from_gaussian(orientation: Orientation, a: &GaussianRational, b: &GaussianRational, lambda: &GaussianRational) -> Self {
        Similarity {
            orientation,
            a: ComplexNumber::from_gaussian(a),
            b: ComplexNumber::from_gaussian(b),
            lambda: ComplexNumber::from_gaussian(lambda),
            scale_squared: RealNumber::Rational(a.abs2()),
            certificate: Candidate {
                orientation,
                theta: RealAlgebraicNumber::from_rational(Rational::zero()),
                a: UniPoly::constant(a.clone()),
                b: UniPoly::constant(b.clone()),
                lambda: UniPoly::constant(lambda.clone()),
            },
        }
    }

    /// Re-checks exactly that this similarity maps `f = 0` onto `g = 0`.
    pub fn verify(&self, f: &MultiPoly<Rational>, g: &MultiPoly<Rational>) -> bool {
        match (to_complex(f), to_complex(g)) {
            (Ok(fc), Ok(gc)) => verify_candidate(&fc, &gc, &self.certificate),
            _ => false,
        }
    }

    /// Floating-point image of a point, for plotting and spot checks.
    pub fn apply(&self, x: f64, y: f64) -> (f64, f64) {
        let (ar, ai) = self.a.to_f64();
        let (br, bi) = self.b.to_f64();
        let y = match self.orientation {
            Orientation::Preserving => y,
            Orientation::Reversing => -y,
        };
        (ar * x - ai * y + br, ai * x + ar * y + bi)
    }

    fn sort_key_cmp(&self, other: &Similarity) -> Ordering {
        self.orientation.cmp(&other.orientation).then_with(|| self.a.cmp_exact(&other.a)).then_with(|| self.b.cmp_exact(&other.b))
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub orientation: OrientationFilter,
}

/// What happened for one orientation.
#[derive(Clone, Debug)]
pub struct OrientationReport {
    pub orientation: Orientation,
    pub angle_poly: Option<String>,
    pub angle_case: Option<CaseUsed>,
    /// Shift applied to the first curve in the special case.
    pub translation: Option<GaussianRational>,
    /// Real solutions found per branch, before verification.
    pub branches: Vec<(Branch, usize)>,
    pub rejected: usize,
    pub note: Option<String>,
}

impl OrientationReport {
    fn new(orientation: Orientation) -> Self {
        OrientationReport {
            orientation,
            angle_poly: None,
            angle_case: None,
            translation: None,
            branches: Vec::new(),
            rejected: 0,
            note: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Decision {
    pub similar: bool,
    pub reason: Option<String>,
    pub degree: (u32, u32),
    pub case: Option<CaseKind>,
    pub witness_j: Option<u32>,
    pub similarities: Vec<Similarity>,
    pub reports: Vec<OrientationReport>,
}

/// Finds every similarity mapping the curve `f = 0` onto `g = 0`.
pub fn decide_similar(f: &MultiPoly<Rational>, g: &MultiPoly<Rational>, opts: &Options) -> Result<Decision> {
    check_curve(f)?;
    check_curve(g)?;
    let fc = to_complex(f)?;
    let gc = to_complex(g)?;
    let mut decision = Decision {
        similar: false,
        reason: None,
        degree: (fc.degree(), gc.degree()),
        case: None,
        witness_j: None,
        similarities: Vec::new(),
        reports: Vec::new(),
    };
    let compat = compatible(&fc, &gc);
    if !compat.compatible {
        decision.reason = compat.reason;
        return Ok(decision);
    }
    let tag = classify_case(&gc);
    decision.case = Some(tag.kind);
    decision.witness_j = tag.witness_j;
    let n = gc.degree();
    let f_n = f.homogeneous_part(n);
    let g_n = g.homogeneous_part(n);

    let mut found = Vec::new();
    for &o in opts.orientation.orientations() {
        let mut report = OrientationReport::new(o);
        let reduced = match tag.kind {
            CaseKind::General => {
                let j = tag.witness_j.expect("general case has a witness");
                let sys = build_system(&fc, &gc, o)?;
                let sys = solve_b_linear(&eliminate_lambda(&sys, j)?, j)?;
                let angle = angle_poly(&f_n, &g_n, o)?;
                report.angle_case = Some(angle.case_used);
                let mut out = Vec::new();
                match &angle.outcome {
                    AngleOutcome::Incompatible => {
                        report.note = Some("top forms are not related by a rotation".into());
                        report.angle_poly = Some("incompatible".into());
                    }
                    AngleOutcome::IdenticallyZero => {
                        report.angle_poly = Some("0".into());
                        out.push((substitute_rotation(&sys)?, None));
                    }
                    AngleOutcome::Poly(p) => {
                        report.angle_poly = Some(p.to_string());
                        if !p.is_constant() {
                            out.push((substitute_rotation(&sys)?, angle.reduced()));
                        }
                    }
                }
                if angle.outcome != AngleOutcome::Incompatible {
                    out.push((substitute_pure_imag(&sys)?, None));
                }
                out.into_iter().map(|(r, h)| (r, h, GaussianRational::zero())).collect::<Vec<_>>()
            }
            CaseKind::Special => {
                let (ft, kappa) = special_translate(&fc, o)?;
                if !kappa.is_zero() {
                    report.translation = Some(kappa.clone());
                }
                let sys = build_system(&ft, &gc, o)?;
                vec![(special_reduce(&sys)?, None, kappa)]
            }
        };
        for (red, helper, kappa) in reduced {
            let points = solve_reduced(&red, helper.as_ref())?;
            report.branches.push((red.branch, points.len()));
            for p in points {
                let Some(c) = candidate(&red, &p, &kappa) else { continue };
                if verify_candidate(&fc, &gc, &c) {
                    found.push(to_similarity(&c));
                } else {
                    debug!("{:?} candidate at {:?} failed verification", red.branch, p.theta);
                    report.rejected += 1;
                }
            }
        }
        decision.reports.push(report);
    }
    found.sort_by(|a, b| a.sort_key_cmp(b));
    found.dedup_by(|a, b| a.sort_key_cmp(b) == Ordering::Equal);
    decision.similar = !found.is_empty();
    if !decision.similar {
        decision.reason = Some("no similarity satisfies the system".into());
    }
    decision.similarities = found;
    Ok(decision)
}

fn solve_reduced(red: &ReducedSystem, helper: Option<&UniPoly<Rational>>) -> Result<Vec<Point>> {
    if red.equations.is_empty() {
        return Err(crate::error::Error::PositiveDimensional(format!("{:?} branch imposes no condition", red.branch)));
    }
    match red.branch {
        Branch::Rotation => solve_bivariate(&red.equations, [OMEGA, R], helper),
        Branch::PureImaginary => solve_univariate(&red.equations, MU),
        Branch::Special => solve_bivariate(&red.equations, [B1, B2], None),
    }
}

/// `p(coords)` reduced modulo `d`.
pub fn compose_mod<K: Field>(p: &MultiPoly<K>, vals: &[UniPoly<K>], d: &UniPoly<K>) -> UniPoly<K> {
    let mut pows: Vec<Vec<UniPoly<K>>> = vals.iter().map(|v| vec![UniPoly::constant(K::one()), v.rem(d)]).collect();
    let mut out = UniPoly::zero();
    for (e, c) in p.terms() {
        let mut term = UniPoly::constant(c.clone());
        for (i, &k) in e.iter().enumerate() {
            while pows[i].len() <= k as usize {
                let next = pows[i].last().expect("nonempty").mul(&pows[i][1]).rem(d);
                pows[i].push(next);
            }
            if k > 0 {
                term = term.mul(&pows[i][k as usize]).rem(d);
            }
        }
        out = out.add(&term);
    }
    out.rem(d)
}

fn candidate(red: &ReducedSystem, p: &Point, kappa: &GaussianRational) -> Option<Candidate> {
    let d = p.modulus();
    if p.theta.sign_of(&compose_mod(&red.nonzero, &p.coords, d)) == 0 {
        return None;
    }
    let dg = d.to_gaussian();
    let coords: Vec<UniPoly<GaussianRational>> = p.coords.iter().map(|c| c.to_gaussian()).collect();
    let a = compose_mod(&red.a, &coords, &dg);
    let mut b = compose_mod(&red.b, &coords, &dg);
    let lambda = compose_mod(&red.lambda, &coords, &dg);
    if !kappa.is_zero() {
        // Undo the shift of the source curve.
        let k = match red.orientation {
            Orientation::Preserving => kappa.clone(),
            Orientation::Reversing => kappa.conj(),
        };
        b = b.sub(&a.scale(&k));
    }
    Some(Candidate { orientation: red.orientation, theta: p.theta.clone(), a, b, lambda })
}

fn complex_at(theta: &RealAlgebraicNumber, p: &UniPoly<GaussianRational>) -> ComplexNumber {
    ComplexNumber { re: theta.map_poly(&p.real_part()), im: theta.map_poly(&p.imag_part()) }
}

fn to_similarity(c: &Candidate) -> Similarity {
    let d = c.theta.defining();
    let (re, im) = (c.a.real_part(), c.a.imag_part());
    let s2 = re.mul(&re).add(&im.mul(&im)).rem(d);
    Similarity {
        orientation: c.orientation,
        a: complex_at(&c.theta, &c.a),
        b: complex_at(&c.theta, &c.b),
        lambda: complex_at(&c.theta, &c.lambda),
        scale_squared: c.theta.map_poly(&s2),
        certificate: c.clone(),
    }
}

/// The curve `f` carried by the similarity `h`: its equation is
/// `f(h^-1(z))`. Only for Gaussian-rational `a`, `b`.
pub fn transform_curve(f: &MultiPoly<Rational>, h: &Similarity) -> Option<MultiPoly<Rational>> {
    let a = h.a.as_gaussian()?;
    let b = h.b.as_gaussian()?;
    let inv = a.inv();
    // h^-1(z) = (z - b)/a, or conj((z - b)/a) when reversing
    let fc = to_complex(f).ok()?;
    let zvars = [crate::complexrep::Z, crate::complexrep::ZBAR];
    let z = MultiPoly::var_in(&zvars, zvars[0]).ok()?;
    let w = MultiPoly::var_in(&zvars, zvars[1]).ok()?;
    let b_const = MultiPoly::constant_in(&zvars, b.clone());
    let bbar_const = MultiPoly::constant_in(&zvars, b.conj());
    let u = z.sub(&b_const).scale(&inv);
    let ubar = w.sub(&bbar_const).scale(&inv.conj());
    let (zs, ws) = match h.orientation {
        Orientation::Preserving => (u, ubar),
        Orientation::Reversing => (ubar, u),
    };
    let p = fc.to_multipoly();
    let all = crate::simsystem::substitute_all(&p.with_vars(&["s", "t"]).ok()?, &[("s", zs), ("t", ws)], &zvars).ok()?;
    let curve = ComplexCurve::from_multipoly(&all).ok()?;
    crate::complexrep::from_complex(&curve).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    fn xy(terms: &[(u32, u32, i64)]) -> MultiPoly<Rational> {
        MultiPoly::from_terms(&["x", "y"], terms.iter().map(|&(a, b, c)| (vec![a, b], rat(c)))).unwrap()
    }

    #[test]
    fn rotated_cubic() {
        let f = xy(&[(2, 1, 15), (1, 2, -40), (0, 3, -15), (2, 0, 5), (1, 1, 5), (0, 2, -35), (1, 0, 5), (0, 1, -5), (0, 0, 2)]);
        let g = xy(&[(0, 3, 1), (1, 2, 2), (2, 1, -1), (1, 1, -1), (3, 0, -2), (0, 0, 1)]);
        let d = decide_similar(&f, &g, &Options::default()).unwrap();
        assert!(d.similar);
        assert_eq!(d.similarities.len(), 1);
        let s = &d.similarities[0];
        assert_eq!(s.orientation, Orientation::Preserving);
        assert_eq!(s.a.as_gaussian(), Some(GaussianRational::from_ints(1, -2)));
        assert_eq!(s.b.as_gaussian(), Some(GaussianRational::from_ints(1, -1)));
        assert_eq!(s.lambda.as_gaussian(), Some(GaussianRational::from_ints(1, 0)));
        assert_eq!(s.scale_squared, RealNumber::Rational(rat(5)));
    }

    fn pairs(d: &Decision) -> Vec<(Orientation, String, String, String)> {
        d.similarities.iter().map(|s| (s.orientation, s.a.to_string(), s.b.to_string(), s.lambda.to_string())).collect()
    }

    #[test]
    fn lemniscates() {
        let f = xy(&[(4, 0, 1), (2, 2, 2), (0, 4, 1), (2, 1, -8), (0, 3, -8), (2, 0, 12), (1, 1, -6), (0, 2, 20), (1, 0, 12), (0, 1, -16)]);
        let g = xy(&[(4, 0, 2), (2, 2, 4), (0, 4, 2), (2, 0, -1), (0, 2, 1)]);
        let d = decide_similar(&f, &g, &Options::default()).unwrap();
        let got = pairs(&d);
        let o = |p| if p { Orientation::Preserving } else { Orientation::Reversing };
        let expect = vec![
            (o(true), "-1/10 + 3/10 i", "3/5 + 1/5 i"),
            (o(true), "1/10 - 3/10 i", "-3/5 - 1/5 i"),
            (o(false), "-1/10 - 3/10 i", "3/5 - 1/5 i"),
            (o(false), "1/10 + 3/10 i", "-3/5 + 1/5 i"),
        ];
        let expect: Vec<_> = expect.into_iter().map(|(o, a, b)| (o, a.to_string(), b.to_string(), "1/50".to_string())).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn translated_folium() {
        let f = xy(&[
            (3, 0, 19),
            (2, 1, 90),
            (1, 2, -18),
            (0, 3, 35),
            (2, 0, 51),
            (1, 1, 237),
            (0, 2, -90),
            (1, 0, 39),
            (0, 1, 195),
            (0, 0, -1),
        ]);
        let g = xy(&[(3, 0, 1), (0, 3, 1), (1, 1, -3)]);
        let d = decide_similar(&f, &g, &Options::default()).unwrap();
        assert_eq!(d.case, Some(CaseKind::Special));
        let got = pairs(&d);
        assert_eq!(
            got,
            vec![
                (Orientation::Preserving, "3 - 2 i".to_string(), "3 - 4 i".to_string(), "1".to_string()),
                (Orientation::Reversing, "-2 + 3 i".to_string(), "-4 + 3 i".to_string(), "1".to_string()),
            ]
        );
    }

    #[test]
    fn transform_round_trip() {
        let g = xy(&[(0, 3, 1), (1, 2, 2), (2, 1, -1), (1, 1, -1), (3, 0, -2), (0, 0, 1)]);
        let h = Similarity::from_gaussian(
            Orientation::Reversing,
            &GaussianRational::new(ratio(1, 2), rat(1)),
            &GaussianRational::from_ints(-1, 3),
            &GaussianRational::one(),
        );
        let f = transform_curve(&g, &h).unwrap();
        let d = decide_similar(&g, &f, &Options::default()).unwrap();
        assert!(d.similarities.iter().any(|s| s.a == h.a && s.b == h.b && s.orientation == h.orientation));
    }
}
