//! Exact homogeneous polynomials in three variables over the rationals.
//!
//! Monomials are ordered graded-lexicographically with `x > y > z`; that
//! order fixes both the serialized form and the normalization of curves
//! (primitive integer coefficients, positive leading coefficient).

mod gcd;
pub(crate) mod param;
mod parse;
mod upoly;

pub use gcd::gcd_multivariate;
pub use param::{BinaryForm, ParamValue, Parametrization};
pub use parse::{parse_poly, parse_rational};
pub use upoly::{rational_roots, yun_squarefree, SquarefreeDecomp, UPoly};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Default variable names used for display.
pub const DEFAULT_VARS: [&str; 3] = ["x", "y", "z"];

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exponent triple `(i, j, k)` of `x^i y^j z^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    /// `self / other` when every exponent of `other` is at most that of `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0u32; 3];
        for ((e, a), b) in e.iter_mut().zip(self.0).zip(other.0) {
            *e = a.checked_sub(b)?;
        }
        Some(Monomial(e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A homogeneous form of fixed degree in `x, y, z`.
///
/// Every stored monomial has total degree `degree`, no stored coefficient is
/// zero, and the zero polynomial of a given degree has no terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HPoly {
    degree: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl HPoly {
    pub fn zero(degree: u32) -> Self {
        HPoly {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = HPoly::zero(0);
        if !c.is_zero() {
            p.terms.insert(Monomial([0, 0, 0]), c);
        }
        p
    }

    pub fn one() -> Self {
        HPoly::constant(Rational::one())
    }

    /// The coordinate form `x`, `y` or `z` for `index` 0, 1, 2.
    pub fn var(index: usize) -> Self {
        let mut e = [0u32; 3];
        e[index] = 1;
        HPoly::monomial(rat(1), e)
    }

    pub fn monomial(c: Rational, exps: [u32; 3]) -> Self {
        let m = Monomial(exps);
        let mut p = HPoly::zero(m.degree());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// The linear form `c0 x + c1 y + c2 z`.
    pub fn linear(coeffs: [Rational; 3]) -> Self {
        let mut p = HPoly::zero(1);
        for (i, c) in coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                let mut e = [0u32; 3];
                e[i] = 1;
                p.terms.insert(Monomial(e), c);
            }
        }
        p
    }

    /// Builds a form from arbitrary terms; all monomials must share one degree.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            *map.entry(m).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        let mut degrees = map.keys().map(Monomial::degree);
        let degree = match degrees.next() {
            None => 0,
            Some(d) => {
                if degrees.any(|e| e != d) {
                    return Err(Error::NotHomogeneous);
                }
                d
            }
        };
        Ok(HPoly { degree, terms: map })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.degree == 0
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (descending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &HPoly) -> Result<HPoly> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let e = terms.entry(*m).or_insert_with(Rational::zero);
            *e += c;
            if e.is_zero() {
                terms.remove(m);
            }
        }
        Ok(HPoly {
            degree: self.degree,
            terms,
        })
    }

    pub fn sub(&self, other: &HPoly) -> Result<HPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> HPoly {
        self.scale(&-rat(1))
    }

    pub fn scale(&self, c: &Rational) -> HPoly {
        if c.is_zero() {
            return HPoly::zero(self.degree);
        }
        HPoly {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &HPoly) -> HPoly {
        let degree = self.degree + other.degree;
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *terms.entry(m1.mul(m2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        HPoly { degree, terms }
    }

    pub fn pow(&self, n: u32) -> HPoly {
        let mut acc = HPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// The unique `r` with `q * r = self`, or `NotDivisible`.
    pub fn exact_div(&self, q: &HPoly) -> Result<HPoly> {
        if q.is_zero() {
            return Err(Error::NotDivisible);
        }
        if self.is_zero() {
            return Ok(HPoly::zero(self.degree.saturating_sub(q.degree)));
        }
        if self.degree < q.degree {
            return Err(Error::NotDivisible);
        }
        let (qm, qc) = q.leading_term().expect("nonzero");
        let mut rem = self.clone();
        let mut quot = HPoly::zero(self.degree - q.degree);
        while let Some((rm, rc)) = rem.leading_term() {
            let m = rm.checked_div(qm).ok_or(Error::NotDivisible)?;
            let c = rc / qc;
            let t = HPoly::monomial(c, m.0);
            rem = rem.sub(&q.mul(&t))?;
            quot = quot.add(&t)?;
        }
        Ok(quot)
    }

    pub fn eval(&self, point: &[Rational; 3]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (p, k) in point.iter().zip(m.0) {
                for _ in 0..k {
                    t *= p;
                }
            }
            acc += t;
        }
        acc
    }

    /// Partial derivative with respect to variable `index`.
    pub fn partial(&self, index: usize) -> HPoly {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[index];
            if e > 0 {
                let mut n = m.0;
                n[index] -= 1;
                terms.insert(Monomial(n), c * rat(e as i64));
            }
        }
        HPoly {
            degree: self.degree.saturating_sub(1),
            terms,
        }
    }

    pub fn gradient_at(&self, point: &[Rational; 3]) -> [Rational; 3] {
        [
            self.partial(0).eval(point),
            self.partial(1).eval(point),
            self.partial(2).eval(point),
        ]
    }

    /// Largest power of variable `index` dividing the form.
    pub fn var_valuation(&self, index: usize) -> u32 {
        self.terms.keys().map(|m| m.0[index]).min().unwrap_or(0)
    }

    /// Scales to primitive integer coefficients with a positive leading
    /// coefficient; the zero form is returned unchanged.
    pub fn normalized(&self) -> HPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&den / c.denom());
            num_gcd = num_gcd.gcd(&n);
        }
        let mut factor = Rational::new(den, num_gcd);
        if self.leading_term().expect("nonzero").1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// The scalar `c` with `self = c * self.normalized()`.
    pub fn content(&self) -> Rational {
        match self.leading_term() {
            None => Rational::zero(),
            Some((m, c)) => c / self.normalized().coeff(m),
        }
    }

    /// Writes the form using the given variable names, e.g. `x^2 - 3/2*y*z`.
    pub fn to_string_with(&self, vars: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.degree() == 0 {
                factors.push(abs.to_string());
            }
            for (i, e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(vars[i].to_string()),
                    _ => factors.push(format!("{}^{}", vars[i], e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&DEFAULT_VARS))
    }
}

/// Curves are sorted by degree, then number of terms, then term by term in
/// canonical order with the larger monomial first, so `x < y < z < x + y`.
impl Ord for HPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.terms.len().cmp(&other.terms.len()))
            .then_with(|| {
                let mut a = self.terms();
                let mut b = other.terms();
                loop {
                    match (a.next(), b.next()) {
                        (None, None) => return Ordering::Equal,
                        (None, Some(_)) => return Ordering::Less,
                        (Some(_), None) => return Ordering::Greater,
                        (Some((ma, ca)), Some((mb, cb))) => {
                            let o = mb.cmp(ma).then_with(|| ca.cmp(cb));
                            if o != Ordering::Equal {
                                return o;
                            }
                        }
                    }
                }
            })
    }
}

impl PartialOrd for HPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
