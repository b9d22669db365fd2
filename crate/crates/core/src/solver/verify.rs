//! Independent exact check of a candidate similarity.
//!
//! The candidate's `a`, `b`, `lambda` live in `Q(i)[t] / (D(t))` for the
//! defining polynomial `D` of a real algebraic `theta`. We expand
//! `G(a z + b, conj(a) w + conj(b)) - lambda F(z, w)` directly from the
//! curves and require every coefficient to vanish at `theta`.

use crate::complexrep::ComplexCurve;
use crate::exact::{binomial, GaussianRational, Rational, Ring};
use crate::orientation::Orientation;
use crate::poly::{RealAlgebraicNumber, UniPoly};

type Gt = UniPoly<GaussianRational>;

#[derive(Clone, Debug, PartialEq)]
pub struct Candidate {
    pub orientation: Orientation,
    pub theta: RealAlgebraicNumber,
    pub a: Gt,
    pub b: Gt,
    pub lambda: Gt,
}

fn vanishes(theta: &RealAlgebraicNumber, p: &Gt) -> bool {
    theta.sign_of(&p.real_part()) == 0 && theta.sign_of(&p.imag_part()) == 0
}

fn powers(x: &Gt, n: u32, d: &Gt) -> Vec<Gt> {
    let mut out = vec![Gt::constant(GaussianRational::one())];
    for k in 1..=n as usize {
        out.push(out[k - 1].mul(x).rem(d));
    }
    out
}

/// True when the candidate maps `f` onto `g` exactly with `a != 0` and
/// `lambda != 0`.
pub fn verify_candidate(f: &ComplexCurve, g: &ComplexCurve, c: &Candidate) -> bool {
    let n = g.degree();
    if f.degree() != n {
        return false;
    }
    let d: Gt = c.theta.defining().to_gaussian();
    if vanishes(&c.theta, &c.a) || vanishes(&c.theta, &c.lambda) {
        return false;
    }
    let pa = powers(&c.a, n, &d);
    let pabar = powers(&c.a.conj(), n, &d);
    let pb = powers(&c.b, n, &d);
    let pbbar = powers(&c.b.conj(), n, &d);
    for m in 0..=n {
        for s in 0..=m {
            let t = m - s;
            let (es, et) = match c.orientation {
                Orientation::Preserving => (s, t),
                Orientation::Reversing => (t, s),
            };
            let mut acc = c.lambda.scale(&f.get(s, t)).neg();
            for (&(p, q), beta) in g.entries() {
                if p < es || q < et {
                    continue;
                }
                let k: Rational = binomial(p, es) * binomial(q, et);
                let term = pa[es as usize]
                    .mul(&pb[(p - es) as usize])
                    .rem(&d)
                    .mul(&pabar[et as usize].mul(&pbbar[(q - et) as usize]).rem(&d))
                    .rem(&d)
                    .scale(&beta.scale(&k));
                acc = acc.add(&term);
            }
            if !vanishes(&c.theta, &acc.rem(&d)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexrep::to_complex;
    use crate::exact::rat;
    use crate::poly::MultiPoly;

    fn curve(terms: &[(u32, u32, i64)]) -> ComplexCurve {
        let f = MultiPoly::from_terms(&["x", "y"], terms.iter().map(|&(a, b, c)| (vec![a, b], rat(c)))).unwrap();
        to_complex(&f).unwrap()
    }

    fn rational_candidate(o: Orientation, a: (i64, i64), b: (i64, i64), l: (i64, i64)) -> Candidate {
        let g = |(re, im)| Gt::constant(GaussianRational::from_ints(re, im));
        Candidate { orientation: o, theta: RealAlgebraicNumber::from_rational(rat(0)), a: g(a), b: g(b), lambda: g(l) }
    }

    #[test]
    fn rotated_cubic_verifies() {
        let f = curve(&[(2, 1, 15), (1, 2, -40), (0, 3, -15), (2, 0, 5), (1, 1, 5), (0, 2, -35), (1, 0, 5), (0, 1, -5), (0, 0, 2)]);
        let g = curve(&[(0, 3, 1), (1, 2, 2), (2, 1, -1), (1, 1, -1), (3, 0, -2), (0, 0, 1)]);
        assert!(verify_candidate(&f, &g, &rational_candidate(Orientation::Preserving, (1, -2), (1, -1), (1, 0))));
        assert!(!verify_candidate(&f, &g, &rational_candidate(Orientation::Preserving, (1, -2), (1, 1), (1, 0))));
        assert!(!verify_candidate(&f, &g, &rational_candidate(Orientation::Reversing, (1, -2), (1, -1), (1, 0))));
    }

    #[test]
    fn folium_reflection() {
        // x^3 + y^3 - 3xy is symmetric in the line y = x: z -> i conj(z).
        let f = curve(&[(3, 0, 1), (0, 3, 1), (1, 1, -3)]);
        assert!(verify_candidate(&f, &f, &rational_candidate(Orientation::Reversing, (0, 1), (0, 0), (1, 0))));
        assert!(!verify_candidate(&f, &f, &rational_candidate(Orientation::Reversing, (0, 0), (0, 0), (1, 0))));
    }

    #[test]
    fn irrational_rotation() {
        // x^2 y^2 - 1 rotated by 45 degrees with scale one.
        let f = curve(&[(2, 2, 1), (0, 0, -1)]);
        // (x^2 - y^2)^2 - 4, the image under z -> (1 + i)/sqrt(2) z
        let g =
            MultiPoly::from_terms(&["x", "y"], [(vec![4, 0], rat(1)), (vec![2, 2], rat(-2)), (vec![0, 4], rat(1)), (vec![0, 0], rat(-4))])
                .unwrap();
        let g = to_complex(&g).unwrap();
        // theta = sqrt(2); a = (1 + i) theta / 2 satisfies g(a z) = 4 f(z).
        let theta = RealAlgebraicNumber::new(&UniPoly::from_ints(&[-2, 0, 1]), rat(1), rat(2)).unwrap();
        let half = GaussianRational::new(crate::exact::ratio(1, 2), crate::exact::ratio(1, 2));
        let a = Gt::new(vec![GaussianRational::zero(), half]);
        let c = Candidate {
            orientation: Orientation::Preserving,
            theta,
            a,
            b: Gt::zero(),
            lambda: Gt::constant(GaussianRational::from_ints(4, 0)),
        };
        assert!(verify_candidate(&f, &g, &c));
        let wrong = Candidate { lambda: Gt::constant(GaussianRational::from_ints(-4, 0)), ..c };
        assert!(!verify_candidate(&f, &g, &wrong));
    }
}
