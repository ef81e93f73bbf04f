//! Oracles shared by the integration and acceptance tests. Divisors on lines
//! are computed from cross products of coefficient vectors, independently of
//! parametrizations and cube classes.
#![allow(dead_code)]

use std::collections::BTreeMap;

use cubic_hnr::field::{Curve, FactoredFn, PlanePoint};
use cubic_hnr::poly::{rat, Monomial, Rational};
use cubic_hnr::symbol::Symbol2;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const F: &str = "x^3 + y^3 + z^3 + 3*x^2*y + 3*x*y^2 + 3*y^2*z + 3*y*z^2 + 3*x*z^2 + 3*x^2*z";

pub fn ffn(items: &[(&str, i64)]) -> FactoredFn {
    FactoredFn::from_exprs(items).unwrap()
}

pub fn coeffs(line: &Curve) -> [Rational; 3] {
    assert_eq!(line.degree(), 1);
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]].map(|e| line.poly().coeff(&Monomial(e)))
}

pub fn meet(a: &Curve, b: &Curve) -> PlanePoint {
    let (u, v) = (coeffs(a), coeffs(b));
    PlanePoint::new([
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ])
    .unwrap()
}

/// Divisor of a degree-0 product of lines restricted to the line `c`, which
/// must not divide it.
pub fn divisor_on_line(u: &FactoredFn, c: &Curve) -> BTreeMap<PlanePoint, i64> {
    assert_eq!(u.degree(), 0);
    assert_eq!(u.valuation(c), 0);
    let mut d: BTreeMap<PlanePoint, i64> = BTreeMap::new();
    for (l, e) in u.factors() {
        *d.entry(meet(l, c)).or_default() += e;
    }
    d.retain(|_, e| e.rem_euclid(3) != 0);
    d
}

/// Residue divisor of `(g, h)` along `c`, as multiplicities mod 3.
pub fn residue_divisor(s: &Symbol2, c: &Curve) -> BTreeMap<PlanePoint, i64> {
    let (vg, vh) = (s.g.valuation(c), s.h.valuation(c));
    let u = s.g.pow(vh).div(&s.h.pow(vg));
    divisor_on_line(&u, c)
        .into_iter()
        .map(|(p, e)| (p, e.rem_euclid(3)))
        .collect()
}

pub fn random_line(rng: &mut ChaCha8Rng) -> Curve {
    loop {
        let c = [0; 3].map(|_| rng.gen_range(-3i64..=3));
        if c != [0, 0, 0] {
            return Curve::line(c);
        }
    }
}

/// A product of at most three random lines with exponents in `-2..=2`,
/// brought to degree 0 by a power of `z`.
pub fn random_function(rng: &mut ChaCha8Rng) -> FactoredFn {
    let k = rng.gen_range(1..=3);
    let factors: Vec<(Curve, i64)> = (0..k)
        .map(|_| (random_line(rng), rng.gen_range(-2i64..=2)))
        .collect();
    let f = FactoredFn::new(rat(1), factors).unwrap();
    f.mul(&FactoredFn::curve(&Curve::coordinate(2), -f.degree()))
}

pub fn random_symbol(rng: &mut ChaCha8Rng) -> Symbol2 {
    Symbol2::new(random_function(rng), random_function(rng))
}

/// Every point where two support lines meet.
pub fn crossing_points(lines: &[Curve]) -> Vec<PlanePoint> {
    let mut pts = Vec::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            pts.push(meet(&lines[i], &lines[j]));
        }
    }
    pts.sort();
    pts.dedup();
    pts
}
