//! Dense univariate polynomials over the rationals.

use std::fmt;

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

use super::{rat, Rational};
use crate::error::{Error, Result};

/// Coefficients are stored lowest degree first; the last stored coefficient
/// is nonzero unless the polynomial is zero (empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UPoly::from_coeffs(vec![c])
    }

    /// The indeterminate.
    pub fn x() -> Self {
        UPoly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `s - r`
    pub fn linear_root(r: &Rational) -> Self {
        UPoly::from_coeffs(vec![-r.clone(), Rational::one()])
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = UPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UPoly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UPoly::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UPoly::from_coeffs((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn scale(&self, c: &Rational) -> UPoly {
        UPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(out)
    }

    pub fn pow(&self, n: u32) -> UPoly {
        let mut acc = UPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplies by `s^k`.
    pub fn shift(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Rational::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        UPoly::from_coeffs(c)
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dl = d.leading();
        let dd = d.degree();
        if self.is_zero() || self.degree() < dd {
            return (UPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UPoly::from_coeffs(quot), UPoly::from_coeffs(rem))
    }

    pub fn exact_div(&self, d: &UPoly) -> Result<UPoly> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        self.scale(&(Rational::one() / self.leading()))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Rescales to integer coefficients with gcd 1 and positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let sign = if ints.last().expect("nonzero").is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        for c in ints.iter_mut() {
            *c = &*c / &g * &sign;
        }
        ints
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            first = false;
            let abs = c.abs();
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("s"))
    }
}

/// `content * prod(part^multiplicity)`, parts monic, squarefree and pairwise coprime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomp {
    pub content: Rational,
    pub parts: Vec<(UPoly, u32)>,
}

impl SquarefreeDecomp {
    pub fn reconstruct(&self) -> UPoly {
        self.parts
            .iter()
            .fold(UPoly::constant(self.content.clone()), |acc, (p, m)| {
                acc.mul(&p.pow(*m))
            })
    }
}

/// Yun's squarefree decomposition (characteristic zero).
pub fn yun_squarefree(u: &UPoly) -> SquarefreeDecomp {
    assert!(!u.is_zero(), "squarefree decomposition of zero");
    let content = u.leading();
    let f = u.monic();
    let mut parts = Vec::new();
    if f.degree() == 0 {
        return SquarefreeDecomp { content, parts };
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let c = df.exact_div(&a0).expect("gcd divides");
    let mut d = c.sub(&b.derivative());
    let mut i = 1u32;
    while b.degree() > 0 {
        let a = b.gcd(&d);
        b = b.exact_div(&a).expect("gcd divides");
        let c = d.exact_div(&a).expect("gcd divides");
        d = c.sub(&b.derivative());
        if a.degree() > 0 {
            parts.push((a, i));
        }
        i += 1;
    }
    SquarefreeDecomp { content, parts }
}

const DIVISOR_SEARCH_LIMIT: u64 = 1_000_000_000_000;

fn small_divisors(n: &BigInt) -> Result<Vec<u64>> {
    let n = n
        .abs()
        .to_u64()
        .filter(|v| *v <= DIVISOR_SEARCH_LIMIT)
        .ok_or_else(|| {
            Error::Unsupported(format!(
                "coefficient {n} too large for rational root search"
            ))
        })?;
    let mut divs = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            divs.push(d);
            if d != n / d {
                divs.push(n / d);
            }
        }
        d += 1;
    }
    divs.sort_unstable();
    Ok(divs)
}

/// All distinct rational roots of a nonzero polynomial, in increasing order.
pub fn rational_roots(p: &UPoly) -> Result<Vec<Rational>> {
    assert!(!p.is_zero(), "roots of zero polynomial");
    let mut roots = Vec::new();
    let mut q = p.clone();
    if q.coeff(0).is_zero() {
        roots.push(Rational::zero());
        while q.coeff(0).is_zero() {
            q = UPoly::from_coeffs(q.coeffs[1..].to_vec());
        }
    }
    if q.degree() == 0 {
        return Ok(roots);
    }
    if q.degree() == 1 {
        roots.push(-q.coeff(0) / q.coeff(1));
        roots.sort();
        return Ok(roots);
    }
    let ints = q.primitive_integer();
    let num_divs = small_divisors(&ints[0])?;
    let den_divs = small_divisors(ints.last().expect("nonzero"))?;
    let mut found: Vec<Rational> = Vec::new();
    for a in &num_divs {
        for b in &den_divs {
            for sign in [1i64, -1] {
                let r = Rational::new(BigInt::from(*a) * sign, BigInt::from(*b));
                if !found.contains(&r) && q.eval(&r).is_zero() {
                    found.push(r);
                }
            }
        }
    }
    roots.extend(found);
    roots.sort();
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn up(c: &[i64]) -> UPoly {
        UPoly::from_ints(c)
    }

    #[test]
    fn yun_cube_of_linear() {
        // (t+1)^3 = t^3 + 3t^2 + 3t + 1
        let d = yun_squarefree(&up(&[1, 3, 3, 1]));
        assert_eq!(d.parts, vec![(up(&[1, 1]), 3)]);
        assert_eq!(d.content, rat(1));
    }

    #[test]
    fn yun_linear() {
        let d = yun_squarefree(&up(&[0, 1]));
        assert_eq!(d.parts, vec![(up(&[0, 1]), 1)]);
    }

    #[test]
    fn yun_mixed_multiplicities() {
        // t^2 (t-1)^3 built by multiplication
        let u = up(&[0, 1]).pow(2).mul(&up(&[-1, 1]).pow(3)).scale(&rat(5));
        let d = yun_squarefree(&u);
        assert_eq!(d.parts, vec![(up(&[0, 1]), 2), (up(&[-1, 1]), 3)]);
        assert_eq!(d.content, rat(5));
        assert_eq!(d.reconstruct(), u);
    }

    #[test]
    fn yun_constant() {
        let d = yun_squarefree(&up(&[-7]));
        assert!(d.parts.is_empty());
        assert_eq!(d.content, rat(-7));
    }

    #[test]
    fn roots_found() {
        // 6 s^3 - 5 s^2 - 2 s + 1 = (s-1)(2s+1)(3s-1)
        let p = up(&[-1, 1]).mul(&up(&[1, 2])).mul(&up(&[-1, 3]));
        let r = rational_roots(&p).unwrap();
        assert_eq!(
            r,
            vec![
                super::super::ratio(-1, 2),
                super::super::ratio(1, 3),
                rat(1)
            ]
        );
        assert!(rational_roots(&up(&[1, 0, 1])).unwrap().is_empty());
        assert_eq!(
            rational_roots(&up(&[0, 0, 1, 1])).unwrap(),
            vec![rat(-1), rat(0)]
        );
    }

    #[test]
    fn gcd_and_division() {
        let a = up(&[-1, 1]).mul(&up(&[2, 1]));
        let b = up(&[-1, 1]).mul(&up(&[3, 1]));
        assert_eq!(a.gcd(&b), up(&[-1, 1]));
        let (q, r) = a.div_rem(&up(&[2, 1]));
        assert_eq!(q, up(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(
            up(&[1, 0, 1]).exact_div(&up(&[1, 1])),
            Err(Error::NotDivisible)
        );
    }

    fn small_poly() -> impl Strategy<Value = UPoly> {
        prop::collection::vec(-4i64..=4, 1..4).prop_map(|v| UPoly::from_ints(&v))
    }

    proptest! {
        #[test]
        fn yun_reconstructs(factors in prop::collection::vec((small_poly(), 1u32..4), 1..4)) {
            let u = factors.iter().fold(UPoly::one(), |acc, (p, m)| acc.mul(&p.pow(*m)));
            prop_assume!(!u.is_zero());
            let d = yun_squarefree(&u);
            prop_assert_eq!(d.reconstruct(), u);
            for (i, (p, _)) in d.parts.iter().enumerate() {
                prop_assert_eq!(p.gcd(&p.derivative()).degree(), 0);
                for (q, _) in &d.parts[i + 1..] {
                    prop_assert_eq!(p.gcd(q).degree(), 0);
                }
            }
        }
    }
}
