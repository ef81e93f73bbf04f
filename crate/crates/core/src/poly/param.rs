//! Rational parametrizations of lines and smooth conics.
//!
//! A parametrization is a triple of binary forms of degree `e` in `(s, t)`.
//! Restricted forms are stored in the chart `t = 1`; the degree drop records
//! the order at the point `[1 : 0]`, called infinity.

use std::fmt;

use num::{One, Zero};

use super::{HPoly, Rational, UPoly};
use crate::error::{Error, Result};

/// A binary form `F(s, t)` of known degree, stored as `F(s, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    pub poly: UPoly,
    pub degree: usize,
}

impl BinaryForm {
    pub fn new(poly: UPoly, degree: usize) -> Self {
        debug_assert!(poly.is_zero() || poly.degree() <= degree);
        BinaryForm { poly, degree }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Multiplicity of the root `[1 : 0]`.
    pub fn infinity_order(&self) -> usize {
        self.degree - self.poly.degree()
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        BinaryForm::new(self.poly.mul(&other.poly), self.degree + other.degree)
    }

    pub fn pow(&self, n: u32) -> BinaryForm {
        BinaryForm::new(self.poly.pow(n), self.degree * n as usize)
    }
}

/// A point of the parameter line: `[s : 1]` or `[1 : 0]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParamValue {
    Finite(Rational),
    Infinity,
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Finite(r) => write!(f, "s={r}"),
            ParamValue::Infinity => f.write_str("s=inf"),
        }
    }
}

/// `[s : t] -> [X(s,t) : Y(s,t) : Z(s,t)]`, each coordinate stored as
/// coefficients of `s^k t^(e-k)` for `k = 0..=e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parametrization {
    degree: usize,
    coords: [Vec<Rational>; 3],
}

fn cross(u: &[UPoly; 3], v: &[UPoly; 3]) -> [UPoly; 3] {
    [
        u[1].mul(&v[2]).sub(&u[2].mul(&v[1])),
        u[2].mul(&v[0]).sub(&u[0].mul(&v[2])),
        u[0].mul(&v[1]).sub(&u[1].mul(&v[0])),
    ]
}

impl Parametrization {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The map written as `[X : Y : Z]` in `s, t`.
    pub fn describe(&self) -> String {
        let coords: Vec<String> = self
            .coords
            .iter()
            .map(|c| {
                let terms = c.iter().enumerate().map(|(k, a)| {
                    (
                        super::Monomial([k as u32, (self.degree - k) as u32, 0]),
                        a.clone(),
                    )
                });
                HPoly::from_terms(terms)
                    .expect("homogeneous")
                    .to_string_with(&["s", "t", "u"])
            })
            .collect();
        format!("[{}]", coords.join(" : "))
    }

    /// Parametrizes the line `l = 0`. With pivot `p` the first variable with
    /// a nonzero coefficient and `i < j` the other two, the point has
    /// coordinate `s` at `i`, `t` at `j`, and `p` solved from `l = 0`.
    pub fn for_line(l: &HPoly) -> Result<Self> {
        if l.degree() != 1 || l.is_zero() {
            return Err(Error::InvalidCurve(format!("{l} is not a linear form")));
        }
        let c: Vec<Rational> = (0..3).map(|i| l.coeff(&unit(i))).collect();
        let p = (0..3).find(|&i| !c[i].is_zero()).expect("nonzero form");
        let others: Vec<usize> = (0..3).filter(|&i| i != p).collect();
        let (i, j) = (others[0], others[1]);
        let mut coords: [Vec<Rational>; 3] = Default::default();
        coords[i] = vec![Rational::zero(), Rational::one()];
        coords[j] = vec![Rational::one(), Rational::zero()];
        coords[p] = vec![-&c[j] / &c[p], -&c[i] / &c[p]];
        Ok(Parametrization { degree: 1, coords })
    }

    /// Parametrizes a smooth conic `q = 0` through the rational point `p0`
    /// by projection: `w = s W1 + t W2 -> 2 B(p0, w) w - q(w) p0`.
    pub fn for_conic(q: &HPoly, p0: &[Rational; 3]) -> Result<Self> {
        if q.degree() != 2 {
            return Err(Error::InvalidCurve(format!("{q} is not a quadratic form")));
        }
        if !q.eval(p0).is_zero() {
            return Err(Error::PointNotOnCurve(format_point(p0)));
        }
        let m = symmetric_matrix(q);
        let pivot = (0..3).find(|&i| !p0[i].is_zero()).ok_or_else(|| {
            Error::PointNotOnCurve("the zero vector is not a projective point".into())
        })?;
        let basis: Vec<usize> = (0..3).filter(|&i| i != pivot).collect();
        // B(p0, e_k) for the two complementary basis vectors
        let bp: Vec<Rational> = basis
            .iter()
            .map(|&k| (0..3).map(|r| &p0[r] * &m[r][k]).sum())
            .collect();
        // q(s e_a + t e_b) = qaa s^2 + 2 qab s t + qbb t^2
        let (a, b) = (basis[0], basis[1]);
        let qs = [
            m[b][b].clone(),
            &m[a][b] * Rational::from_integer(2.into()),
            m[a][a].clone(),
        ];
        let mut coords: [Vec<Rational>; 3] = Default::default();
        for (r, coord) in coords.iter_mut().enumerate() {
            // 2 (bp_a s + bp_b t)(w_r) - q(w) p0_r, with w_r = [r==a] s + [r==b] t
            let wa = if r == a {
                Rational::one()
            } else {
                Rational::zero()
            };
            let wb = if r == b {
                Rational::one()
            } else {
                Rational::zero()
            };
            let two = Rational::from_integer(2.into());
            let t2 = &two * &bp[1] * &wb - &qs[0] * &p0[r];
            let st = &two * (&bp[0] * &wb + &bp[1] * &wa) - &qs[1] * &p0[r];
            let s2 = &two * &bp[0] * &wa - &qs[2] * &p0[r];
            *coord = vec![t2, st, s2];
        }
        let param = Parametrization { degree: 2, coords };
        debug_assert!(param.restrict(q).is_err());
        Ok(param)
    }

    fn chart_coords(&self) -> [UPoly; 3] {
        [0, 1, 2].map(|i| UPoly::from_coeffs(self.coords[i].clone()))
    }

    /// Pulls a form back to the parameter line.
    pub fn restrict(&self, p: &HPoly) -> Result<BinaryForm> {
        let xs = self.chart_coords();
        let mut acc = UPoly::zero();
        for (m, c) in p.terms() {
            let mut t = UPoly::constant(c.clone());
            for (i, x) in xs.iter().enumerate() {
                t = t.mul(&x.pow(m.0[i]));
            }
            acc = acc.add(&t);
        }
        if acc.is_zero() {
            return Err(Error::RestrictionZero);
        }
        Ok(BinaryForm::new(acc, self.degree * p.degree() as usize))
    }

    /// The image of a parameter value, normalized so its first nonzero
    /// coordinate is 1.
    pub fn point_at(&self, v: &ParamValue) -> [Rational; 3] {
        let raw = match v {
            ParamValue::Finite(s) => self.chart_coords().map(|c| c.eval(s)),
            ParamValue::Infinity => [0, 1, 2].map(|i| self.coords[i][self.degree].clone()),
        };
        normalize_point(raw)
    }

    /// The parameter value mapping to `point`.
    pub fn parameter_of(&self, point: &[Rational; 3]) -> Result<ParamValue> {
        let target = normalize_point(point.clone());
        if self.point_at(&ParamValue::Infinity) == target {
            return Ok(ParamValue::Infinity);
        }
        let pt = target.clone().map(UPoly::constant);
        let cr = cross(&pt, &self.chart_coords());
        let g = cr.iter().fold(UPoly::zero(), |g, c| g.gcd(c));
        if g.is_zero() || g.degree() == 0 {
            return Err(Error::PointNotOnCurve(format_point(&target)));
        }
        super::rational_roots(&g)?
            .into_iter()
            .map(ParamValue::Finite)
            .find(|v| self.point_at(v) == target)
            .ok_or_else(|| Error::PointNotOnCurve(format_point(&target)))
    }
}

fn unit(i: usize) -> super::Monomial {
    let mut e = [0u32; 3];
    e[i] = 1;
    super::Monomial(e)
}

/// Symmetric matrix `M` with `q(v) = v^T M v`.
pub(crate) fn symmetric_matrix(q: &HPoly) -> [[Rational; 3]; 3] {
    let half = Rational::new(1.into(), 2.into());
    let mut m: [[Rational; 3]; 3] = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            let mut e = [0u32; 3];
            e[i] += 1;
            e[j] += 1;
            let c = q.coeff(&super::Monomial(e));
            m[i][j] = if i == j { c } else { c * &half };
        }
    }
    m
}

/// Scales a nonzero triple so its first nonzero entry is 1.
pub(crate) fn normalize_point(p: [Rational; 3]) -> [Rational; 3] {
    match p.iter().find(|c| !c.is_zero()).cloned() {
        None => p,
        Some(lead) => p.map(|c| c / &lead),
    }
}

pub(crate) fn format_point(p: &[Rational; 3]) -> String {
    format!("[{}:{}:{}]", p[0], p[1], p[2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, rat, DEFAULT_VARS};
    use proptest::prelude::*;

    fn p(s: &str) -> HPoly {
        parse_poly(s, &DEFAULT_VARS).unwrap()
    }

    fn refv_f() -> HPoly {
        p("x^3+y^3+z^3+3*x^2*y+3*x*y^2+3*y^2*z+3*y*z^2+3*x*z^2+3*x^2*z")
    }

    #[test]
    fn descriptions() {
        assert_eq!(
            Parametrization::for_line(&p("x")).unwrap().describe(),
            "[0 : s : t]"
        );
        assert_eq!(
            Parametrization::for_line(&p("x + y - 2*z"))
                .unwrap()
                .describe(),
            "[-s + 2*t : s : t]"
        );
    }

    #[test]
    fn coordinate_line_conventions() {
        let x0 = Parametrization::for_line(&p("x")).unwrap();
        assert_eq!(
            x0.point_at(&ParamValue::Finite(rat(0))),
            [rat(0), rat(0), rat(1)]
        );
        assert_eq!(x0.point_at(&ParamValue::Infinity), [rat(0), rat(1), rat(0)]);
        let z0 = Parametrization::for_line(&p("z")).unwrap();
        assert_eq!(
            z0.point_at(&ParamValue::Finite(rat(0))),
            [rat(0), rat(1), rat(0)]
        );
        assert_eq!(z0.point_at(&ParamValue::Infinity), [rat(1), rat(0), rat(0)]);
    }

    #[test]
    fn restrict_refv_form_is_cube() {
        let x0 = Parametrization::for_line(&p("x")).unwrap();
        let r = x0.restrict(&refv_f()).unwrap();
        assert_eq!(r.poly, UPoly::from_ints(&[1, 1]).pow(3));
        assert_eq!(r.infinity_order(), 0);
    }

    #[test]
    fn restrict_monomial_records_infinity() {
        let x0 = Parametrization::for_line(&p("x")).unwrap();
        let r = x0.restrict(&p("y^2*z")).unwrap();
        assert_eq!(r.poly, UPoly::from_ints(&[0, 0, 1]));
        assert_eq!(r.degree, 3);
        assert_eq!(r.infinity_order(), 1);
    }

    #[test]
    fn restrict_to_own_line_is_zero() {
        let x0 = Parametrization::for_line(&p("x")).unwrap();
        assert_eq!(x0.restrict(&p("x")), Err(Error::RestrictionZero));
        let l = Parametrization::for_line(&p("2*x - 3*y + z")).unwrap();
        assert_eq!(
            l.restrict(&p("(2*x - 3*y + z)*y")),
            Err(Error::RestrictionZero)
        );
    }

    #[test]
    fn conic_through_point() {
        let q = p("x*y - z^2");
        let par = Parametrization::for_conic(&q, &[rat(1), rat(0), rat(0)]).unwrap();
        assert_eq!(par.restrict(&q), Err(Error::RestrictionZero));
        for s in -3..=3 {
            let pt = par.point_at(&ParamValue::Finite(rat(s)));
            assert!(q.eval(&pt).is_zero());
            assert_eq!(par.parameter_of(&pt).unwrap(), ParamValue::Finite(rat(s)));
        }
        let inf = par.point_at(&ParamValue::Infinity);
        assert_eq!(par.parameter_of(&inf).unwrap(), ParamValue::Infinity);
        // x = 0 meets the conic only at [0:1:0], doubly
        let r = par.restrict(&p("x")).unwrap();
        let roots = crate::poly::rational_roots(&r.poly).unwrap();
        let mult = if r.infinity_order() > 0 {
            r.infinity_order()
        } else {
            2
        };
        assert_eq!(mult, 2);
        assert!(roots.len() <= 1);
    }

    #[test]
    fn point_not_on_line() {
        let x0 = Parametrization::for_line(&p("x")).unwrap();
        assert!(matches!(
            x0.parameter_of(&[rat(1), rat(0), rat(0)]),
            Err(Error::PointNotOnCurve(_))
        ));
    }

    fn lin() -> impl Strategy<Value = HPoly> {
        (-3i64..=3, -3i64..=3, -3i64..=3)
            .prop_filter("nonzero", |(a, b, c)| (*a, *b, *c) != (0, 0, 0))
            .prop_map(|(a, b, c)| HPoly::linear([rat(a), rat(b), rat(c)]))
    }

    proptest! {
        #[test]
        fn restriction_is_multiplicative(l in lin(), f in lin(), g in lin(), h in lin()) {
            let par = Parametrization::for_line(&l).unwrap();
            let fg = f.mul(&g).mul(&h);
            if let (Ok(a), Ok(b), Ok(c)) = (par.restrict(&f), par.restrict(&g.mul(&h)), par.restrict(&fg)) {
                prop_assert_eq!(a.mul(&b), c);
            }
        }

        #[test]
        fn parameters_round_trip(l in lin(), s in -5i64..=5) {
            let par = Parametrization::for_line(&l).unwrap();
            let v = ParamValue::Finite(rat(s));
            let pt = par.point_at(&v);
            prop_assert!(l.eval(&pt).is_zero());
            prop_assert_eq!(par.parameter_of(&pt).unwrap(), v);
        }
    }
}
