use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use super::Curve;
use crate::error::{Error, Result};
use crate::poly::{gcd_multivariate, parse_poly, HPoly, Rational, DEFAULT_VARS};

/// `scalar * prod(curve^exponent)`, a nonzero element of the function field
/// written through its factorization. Factor curves are pairwise distinct
/// and sorted; exponents are nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredFn {
    scalar: Rational,
    factors: Vec<(Curve, i64)>,
}

impl FactoredFn {
    pub fn one() -> Self {
        FactoredFn {
            scalar: Rational::one(),
            factors: Vec::new(),
        }
    }

    pub fn constant(c: Rational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::InvalidFunction("zero is not a unit".into()));
        }
        Ok(FactoredFn {
            scalar: c,
            factors: Vec::new(),
        })
    }

    pub fn curve(c: &Curve, e: i64) -> Self {
        FactoredFn::new(Rational::one(), vec![(c.clone(), e)]).expect("single factor")
    }

    /// Merges repeated curves and drops zero exponents. Distinct attested
    /// curves must be coprime.
    pub fn new(scalar: Rational, factors: Vec<(Curve, i64)>) -> Result<Self> {
        if scalar.is_zero() {
            return Err(Error::InvalidFunction("zero scalar".into()));
        }
        let mut map: BTreeMap<Curve, i64> = BTreeMap::new();
        for (c, e) in factors {
            *map.entry(c).or_insert(0) += e;
        }
        map.retain(|_, e| *e != 0);
        let factors: Vec<(Curve, i64)> = map.into_iter().collect();
        for (i, (a, _)) in factors.iter().enumerate() {
            for (b, _) in &factors[i + 1..] {
                if a.degree() >= 3 || b.degree() >= 3 {
                    let g = gcd_multivariate(a.poly(), b.poly());
                    if !g.is_constant() {
                        return Err(Error::InvalidFunction(format!(
                            "factors {a} and {b} share the component {g}=0"
                        )));
                    }
                }
            }
        }
        Ok(FactoredFn { scalar, factors })
    }

    /// Builds a function from `(expression, exponent)` items in the variables
    /// `x, y, z`. Constant items fold into the scalar, non-primitive forms
    /// leave their content in the scalar.
    pub fn from_exprs(items: &[(&str, i64)]) -> Result<Self> {
        Self::from_exprs_with(items, &DEFAULT_VARS, &|_| false)
    }

    /// Like [`FactoredFn::from_exprs`] with custom variable names and an
    /// attestation oracle for forms of degree at least 3.
    pub fn from_exprs_with(
        items: &[(&str, i64)],
        vars: &[&str],
        attested: &dyn Fn(&HPoly) -> bool,
    ) -> Result<Self> {
        let mut polys = Vec::new();
        for (s, e) in items {
            polys.push((parse_poly(s, vars)?, *e));
        }
        Self::from_polys(&polys, attested)
    }

    pub fn from_polys(items: &[(HPoly, i64)], attested: &dyn Fn(&HPoly) -> bool) -> Result<Self> {
        let mut scalar = Rational::one();
        let mut factors = Vec::new();
        for (p, e) in items {
            if p.is_zero() {
                return Err(Error::InvalidFunction("zero factor".into()));
            }
            let content = p.content();
            scalar *= pow_rat(&content, *e);
            if p.degree() == 0 {
                continue;
            }
            let n = p.normalized();
            factors.push((Curve::new(&n, attested(&n))?, *e));
        }
        FactoredFn::new(scalar, factors)
    }

    pub fn scalar(&self) -> &Rational {
        &self.scalar
    }

    pub fn factors(&self) -> &[(Curve, i64)] {
        &self.factors
    }

    pub fn curves(&self) -> impl Iterator<Item = &Curve> {
        self.factors.iter().map(|(c, _)| c)
    }

    /// Exponent of `c` in the factorization.
    pub fn valuation(&self, c: &Curve) -> i64 {
        self.factors
            .iter()
            .find(|(d, _)| d == c)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    /// Total degree `sum(e * deg)`; zero for genuine elements of the function field.
    pub fn degree(&self) -> i64 {
        self.factors
            .iter()
            .map(|(c, e)| e * c.degree() as i64)
            .sum()
    }

    pub fn mul(&self, other: &FactoredFn) -> FactoredFn {
        let mut f = self.factors.clone();
        f.extend(other.factors.iter().cloned());
        FactoredFn::new(&self.scalar * &other.scalar, f).expect("product of valid functions")
    }

    pub fn pow(&self, n: i64) -> FactoredFn {
        FactoredFn {
            scalar: pow_rat(&self.scalar, n),
            factors: if n == 0 {
                Vec::new()
            } else {
                self.factors
                    .iter()
                    .map(|(c, e)| (c.clone(), e * n))
                    .collect()
            },
        }
    }

    pub fn inv(&self) -> FactoredFn {
        self.pow(-1)
    }

    pub fn div(&self, other: &FactoredFn) -> FactoredFn {
        self.mul(&other.inv())
    }

    /// The form `prod(curve^e)` for a function with nonnegative exponents.
    pub fn expand(&self) -> Option<HPoly> {
        let mut acc = HPoly::constant(self.scalar.clone());
        for (c, e) in &self.factors {
            if *e < 0 {
                return None;
            }
            acc = acc.mul(&c.poly().pow(*e as u32));
        }
        Some(acc)
    }

    /// Keeps each exponent modulo 3 in `{0, 1, 2}`.
    pub fn reduce_cubes(&self) -> FactoredFn {
        let f = self
            .factors
            .iter()
            .map(|(c, e)| (c.clone(), e.rem_euclid(3)))
            .collect();
        FactoredFn::new(self.scalar.clone(), f).expect("valid")
    }

    pub fn to_string_with(&self, vars: &[&str]) -> String {
        let mut parts = Vec::new();
        if !self.scalar.is_one() || self.factors.is_empty() {
            parts.push(self.scalar.to_string());
        }
        for (c, e) in &self.factors {
            let base = c.to_string_with(vars);
            let base = if c.poly().num_terms() > 1 {
                format!("({base})")
            } else {
                base
            };
            parts.push(if *e == 1 { base } else { format!("{base}^{e}") });
        }
        parts.join(" * ")
    }
}

impl fmt::Display for FactoredFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&DEFAULT_VARS))
    }
}

fn pow_rat(r: &Rational, n: i64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..n.unsigned_abs() {
        acc *= r;
    }
    if n < 0 {
        acc.recip()
    } else {
        acc
    }
}
