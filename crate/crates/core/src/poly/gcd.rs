//! GCD of ternary forms.
//!
//! A form `p` factors as `z^e * p'` with `z` not dividing `p'`; dehomogenizing
//! at `z = 1` is then injective on the factors of `p'`. The bivariate GCD is
//! computed in `Q[y][x]` with a primitive pseudo-remainder sequence.

use num::Zero;

use super::{HPoly, Monomial, Rational, UPoly};

/// Polynomial in `x` with coefficients in `Q[y]`, lowest `x`-degree first.
#[derive(Clone, Debug, PartialEq)]
struct XPoly(Vec<UPoly>);

impl XPoly {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(UPoly::is_zero) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lc(&self) -> &UPoly {
        self.0.last().expect("nonzero")
    }

    fn content(&self) -> UPoly {
        self.0.iter().fold(UPoly::zero(), |g, c| g.gcd(c))
    }

    fn div_coeffs(&self, c: &UPoly) -> XPoly {
        XPoly(
            self.0
                .iter()
                .map(|a| a.exact_div(c).expect("content divides"))
                .collect(),
        )
        .trim()
    }

    fn primitive(&self) -> XPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.div_coeffs(&self.content())
    }

    fn mul_coeff(&self, c: &UPoly) -> XPoly {
        XPoly(self.0.iter().map(|a| a.mul(c)).collect()).trim()
    }

    fn sub_shifted(&self, other: &XPoly, shift: usize) -> XPoly {
        let n = self.0.len().max(other.0.len() + shift);
        let mut out = vec![UPoly::zero(); n];
        for (i, a) in self.0.iter().enumerate() {
            out[i] = a.clone();
        }
        for (i, b) in other.0.iter().enumerate() {
            out[i + shift] = out[i + shift].sub(b);
        }
        XPoly(out).trim()
    }

    /// Pseudo-remainder of `self` by `d`.
    fn prem(&self, d: &XPoly) -> XPoly {
        let mut a = self.clone();
        let ld = d.lc().clone();
        while !a.is_zero() && a.deg() >= d.deg() {
            let la = a.lc().clone();
            let shift = a.deg() - d.deg();
            a = a.mul_coeff(&ld).sub_shifted(&d.mul_coeff(&la), shift);
        }
        a
    }
}

fn dehomogenize(p: &HPoly) -> XPoly {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (m, c) in p.terms() {
        let (i, j) = (m.0[0] as usize, m.0[1] as usize);
        if rows.len() <= i {
            rows.resize(i + 1, Vec::new());
        }
        if rows[i].len() <= j {
            rows[i].resize(j + 1, Rational::zero());
        }
        rows[i][j] += c;
    }
    XPoly(rows.into_iter().map(UPoly::from_coeffs).collect()).trim()
}

fn homogenize(q: &XPoly) -> HPoly {
    let mut terms = Vec::new();
    for (i, c) in q.0.iter().enumerate() {
        for (j, a) in c.coeffs().iter().enumerate() {
            if !a.is_zero() {
                terms.push(((i as u32, j as u32), a.clone()));
            }
        }
    }
    let deg = terms.iter().map(|((i, j), _)| i + j).max().unwrap_or(0);
    HPoly::from_terms(
        terms
            .into_iter()
            .map(|((i, j), a)| (Monomial([i, j, deg - i - j]), a)),
    )
    .expect("homogeneous by construction")
}

fn bivariate_gcd(a: &XPoly, b: &XPoly) -> XPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let cont = a.content().gcd(&b.content());
    let (mut p, mut q) = (a.primitive(), b.primitive());
    if p.deg() < q.deg() {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() {
        let r = p.prem(&q);
        p = q;
        q = r.primitive();
    }
    p.primitive().mul_coeff(&cont)
}

/// Normalized greatest common divisor of two forms (not both zero).
pub fn gcd_multivariate(p: &HPoly, q: &HPoly) -> HPoly {
    if p.is_zero() {
        return q.normalized();
    }
    if q.is_zero() {
        return p.normalized();
    }
    let ez = p.var_valuation(2).min(q.var_valuation(2));
    let g = bivariate_gcd(&dehomogenize(p), &dehomogenize(q));
    homogenize(&g).mul(&HPoly::var(2).pow(ez)).normalized()
}
