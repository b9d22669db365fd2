//! Seeded random instances shared by the integration tests.

#![allow(dead_code)]

use curvesim::exact::{rat, ratio, Field, Ring};
use curvesim::orientation::Orientation;
use curvesim::{GaussianRational, MultiPoly, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const XY: [&str; 2] = ["x", "y"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn xy(terms: &[(u32, u32, i64)]) -> MultiPoly<Rational> {
    MultiPoly::from_terms(&XY, terms.iter().map(|&(a, b, c)| (vec![a, b], rat(c)))).unwrap()
}

/// Dense polynomial of total degree `d` with coefficients in `[-bound, bound]`
/// and a nonzero top form.
pub fn dense(rng: &mut ChaCha8Rng, d: u32, bound: i64) -> MultiPoly<Rational> {
    loop {
        let mut terms = Vec::new();
        for deg in 0..=d {
            for i in 0..=deg {
                terms.push((vec![i, deg - i], rat(rng.random_range(-bound..=bound))));
            }
        }
        let p = MultiPoly::from_terms(&XY, terms).unwrap();
        if p.total_degree() == Some(d) {
            return p;
        }
    }
}

/// Homogeneous form of degree `d` with coefficients in `[-bound, bound]`.
pub fn form(rng: &mut ChaCha8Rng, d: u32, bound: i64) -> MultiPoly<Rational> {
    loop {
        let terms: Vec<_> = (0..=d).map(|i| (vec![i, d - i], rat(rng.random_range(-bound..=bound)))).collect();
        let p = MultiPoly::from_terms(&XY, terms).unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

/// `p / q` with `|p| <= 10` and `1 <= q <= 10`.
pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.random_range(-10..=10), rng.random_range(1..=10))
}

pub fn gaussian(rng: &mut ChaCha8Rng) -> GaussianRational {
    GaussianRational::new(small_rational(rng), small_rational(rng))
}

pub fn nonzero_gaussian(rng: &mut ChaCha8Rng) -> GaussianRational {
    loop {
        let a = gaussian(rng);
        if !a.is_zero() {
            return a;
        }
    }
}

/// `g(h(x, y))` for `h(z) = a z + b` or `h(z) = a conj(z) + b`.
pub fn compose(g: &MultiPoly<Rational>, o: Orientation, a: &GaussianRational, b: &GaussianRational) -> MultiPoly<Rational> {
    let x = MultiPoly::var_in(&XY, "x").unwrap();
    let y = MultiPoly::var_in(&XY, "y").unwrap();
    let c = |q: &Rational| MultiPoly::constant_in(&XY, q.clone());
    let s = match o {
        Orientation::Preserving => rat(1),
        Orientation::Reversing => rat(-1),
    };
    // a z = (ar x - ai s y) + i (ai x + ar s y), with s = -1 for conj(z)
    let big_x = x.scale(&a.re).sub(&y.scale(&(a.im.clone() * s.clone()))).add(&c(&b.re));
    let big_y = x.scale(&a.im).add(&y.scale(&(a.re.clone() * s))).add(&c(&b.im));
    let mut out = MultiPoly::zero_in(&XY);
    for (e, k) in g.sorted_terms() {
        out = out.add(&big_x.pow(e[0]).mul(&big_y.pow(e[1])).scale(k));
    }
    out
}

/// A curve `g`, a planted similarity `h` and `f = g o h`, so that `h` maps
/// `f = 0` onto `g = 0` with `lambda = 1`.
#[derive(Clone, Debug)]
pub struct Instance {
    pub f: MultiPoly<Rational>,
    pub g: MultiPoly<Rational>,
    pub orientation: Orientation,
    pub a: GaussianRational,
    pub b: GaussianRational,
}

pub fn instance(rng: &mut ChaCha8Rng, d: u32, orientation: Orientation) -> Instance {
    let g = dense(rng, d, 255);
    let a = nonzero_gaussian(rng);
    let b = gaussian(rng);
    let f = compose(&g, orientation, &a, &b);
    Instance { f, g, orientation, a, b }
}

/// `h^-1` for `h = (o, a, b)`.
pub fn inverse(o: Orientation, a: &GaussianRational, b: &GaussianRational) -> (GaussianRational, GaussianRational) {
    match o {
        Orientation::Preserving => {
            let ai = a.inv();
            (ai.clone(), b.mul(&ai).neg())
        }
        Orientation::Reversing => {
            let ai = a.conj().inv();
            (ai.clone(), b.conj().mul(&ai).neg())
        }
    }
}

pub mod checks;
