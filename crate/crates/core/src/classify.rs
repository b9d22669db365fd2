//! General / special case classification and cheap similarity filters.

use serde::Serialize;

use crate::complexrep::ComplexCurve;
use crate::error::{Error, Result};
use crate::exact::{binomial, rat, Rational, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseKind {
    General,
    Special,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseTag {
    pub kind: CaseKind,
    /// Smallest `j` with a nonzero top coefficient and nonzero `delta(j)`.
    pub witness_j: Option<u32>,
    /// Smallest `j` with a nonzero top coefficient.
    pub jbar: u32,
}

/// `(n - j)^2 |c[n-j][j]|^2 - (j + 1)^2 |c[n-j-1][j+1]|^2` for the curve's own coefficients.
pub fn delta(curve: &ComplexCurve, j: u32) -> Result<Rational> {
    let n = curve.degree();
    if j >= n {
        return Err(Error::InvalidInput(format!("delta index {j} out of range for degree {n}")));
    }
    let a = curve.top(j).abs2() * rat(((n - j) * (n - j)) as i64);
    let b = curve.top(j + 1).abs2() * rat(((j + 1) * (j + 1)) as i64);
    Ok(a - b)
}

fn direct_scan(curve: &ComplexCurve) -> Option<u32> {
    let n = curve.degree();
    (0..n).find(|&j| !curve.top(j).is_zero() && !delta(curve, j).expect("in range").is_zero())
}

/// The special case occurs exactly when the top coefficients start at
/// `j = 0` and `|c[n-j][j]|^2 = C(n, j)^2 |c[n][0]|^2` for every `j`.
fn binomial_profile(curve: &ComplexCurve) -> bool {
    let n = curve.degree();
    let c0 = curve.top(0).abs2();
    if c0.is_zero() {
        return false;
    }
    (0..=n).all(|j| {
        let b = binomial(n, j);
        curve.top(j).abs2() == &b * &b * &c0
    })
}

pub fn classify_case(curve: &ComplexCurve) -> CaseTag {
    let n = curve.degree();
    let jbar = (0..=n).find(|&j| !curve.top(j).is_zero()).unwrap_or(0);
    let special = binomial_profile(curve);
    let witness = if special { None } else { direct_scan(curve) };
    debug_assert_eq!(special, direct_scan(curve).is_none(), "shortcut and direct scan disagree");
    CaseTag { kind: if special { CaseKind::Special } else { CaseKind::General }, witness_j: witness, jbar }
}

/// Both classifications, for cross-checking.
pub fn classify_both_ways(curve: &ComplexCurve) -> (bool, bool) {
    (binomial_profile(curve), direct_scan(curve).is_none())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Compatibility {
    pub compatible: bool,
    pub reason: Option<String>,
}

impl Compatibility {
    fn ok() -> Self {
        Compatibility { compatible: true, reason: None }
    }

    fn fail(reason: &str) -> Self {
        Compatibility { compatible: false, reason: Some(reason.to_string()) }
    }
}

/// Necessary conditions for similarity: equal degree, equal top-form
/// support and equal case.
pub fn compatible(f: &ComplexCurve, g: &ComplexCurve) -> Compatibility {
    if f.degree() != g.degree() {
        return Compatibility::fail("degree mismatch");
    }
    let n = f.degree();
    if (0..=n).any(|j| f.top(j).is_zero() != g.top(j).is_zero()) {
        return Compatibility::fail("top-form support mismatch");
    }
    if classify_case(f).kind != classify_case(g).kind {
        return Compatibility::fail("case mismatch");
    }
    Compatibility::ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexrep::to_complex;
    use crate::poly::MultiPoly;

    fn curve(terms: &[(u32, u32, i64)]) -> ComplexCurve {
        let f = MultiPoly::from_terms(&["x", "y"], terms.iter().map(|&(a, b, c)| (vec![a, b], rat(c)))).unwrap();
        to_complex(&f).unwrap()
    }

    fn folium() -> ComplexCurve {
        curve(&[(3, 0, 1), (0, 3, 1), (1, 1, -3)])
    }

    fn lemniscate() -> ComplexCurve {
        curve(&[(4, 0, 2), (2, 2, 4), (0, 4, 2), (2, 0, -1), (0, 2, 1)])
    }

    #[test]
    fn deltas() {
        assert_eq!(delta(&lemniscate(), 2).unwrap(), rat(16));
        assert_eq!(delta(&folium(), 0).unwrap(), rat(0));
        assert_eq!(delta(&lemniscate(), 0).unwrap(), rat(0));
        assert!(delta(&folium(), 3).is_err());
    }

    #[test]
    fn example_cases() {
        let g = curve(&[(0, 3, 1), (1, 2, 2), (2, 1, -1), (1, 1, -1), (3, 0, -2), (0, 0, 1)]);
        assert_eq!(classify_case(&g).kind, CaseKind::General);
        assert_eq!(classify_case(&folium()).kind, CaseKind::Special);
        let lem = classify_case(&lemniscate());
        assert_eq!(lem.kind, CaseKind::General);
        assert_eq!(lem.jbar, 2);
        assert_eq!(lem.witness_j, Some(2));
    }

    #[test]
    fn compatibility_reasons() {
        let f = curve(&[(2, 1, 15), (1, 2, -40), (0, 3, -15), (2, 0, 5), (1, 1, 5), (0, 2, -35), (1, 0, 5), (0, 1, -5), (0, 0, 2)]);
        let g = curve(&[(0, 3, 1), (1, 2, 2), (2, 1, -1), (1, 1, -1), (3, 0, -2), (0, 0, 1)]);
        assert!(compatible(&f, &g).compatible);
        let c = compatible(&folium(), &lemniscate());
        assert_eq!(c.reason.as_deref(), Some("degree mismatch"));
        let c = compatible(&folium(), &g);
        assert_eq!(c.reason.as_deref(), Some("case mismatch"));
    }
}
