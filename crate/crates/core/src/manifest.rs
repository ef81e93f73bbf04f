//! JSON manifests describing a bundle.
//!
//! ```json
//! {
//!   "variables": ["x", "y", "z"],
//!   "coefficients": {
//!     "a": { "scalar": 1, "factors": [["x", 1], ["z", 2]] },
//!     "b": { "factors": [["y", 2], ["z", 1]] },
//!     "c": { "factors": [["x", 1], ["y", 2]] },
//!     "d": { "factors": [["x^3 + y^3 + z^3 + 3*x^2*y + ...", 1]] }
//!   },
//!   "attestations": { "x^3 + y^3 + z^3 + 3*x^2*y + ...": "geometrically-irreducible" },
//!   "options": { "convention": "later-over-earlier", "reduce_cubes": false },
//!   "points": { "x^2 + y^2 - 2*z^2": [1, 1, 1] }
//! }
//! ```
//!
//! `points` optionally names a rational point on a conic factor, used when
//! the built-in search finds none.

use std::collections::BTreeMap;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bundle::{Convention, DiagonalBundle, LABELS};
use crate::error::{Error, Result};
use crate::field::{Curve, FactoredFn, PlanePoint};
use crate::poly::{parse_poly, parse_rational, HPoly, Rational};

pub const ATTESTATION: &str = "geometrically-irreducible";

/// An integer or a rational written as text (`"-3/4"`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    pub fn value(&self) -> Result<Rational> {
        match self {
            Scalar::Int(n) => Ok(Rational::from_integer((*n).into())),
            Scalar::Text(s) => parse_rational(s),
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::Int(1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefficientSpec {
    #[serde(default)]
    pub scalar: Scalar,
    #[serde(default)]
    pub factors: Vec<(String, i64)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default)]
    pub convention: Option<Convention>,
    #[serde(default)]
    pub reduce_cubes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub variables: Vec<String>,
    pub coefficients: BTreeMap<String, CoefficientSpec>,
    #[serde(default)]
    pub attestations: BTreeMap<String, String>,
    #[serde(default)]
    pub options: Options,
    #[serde(default)]
    pub points: BTreeMap<String, Vec<Scalar>>,
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Manifest(e.to_string()))
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Manifest(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// The manifest of [`DiagonalBundle::reference`].
    pub fn reference() -> Self {
        Self::parse(include_str!("../manifests/reference.json")).expect("bundled manifest")
    }

    pub fn vars(&self) -> Result<[&str; 3]> {
        match self.variables.as_slice() {
            [a, b, c] if a != b && b != c && a != c => Ok([a, b, c]),
            _ => Err(Error::Manifest(format!(
                "expected three distinct variable names, got {:?}",
                self.variables
            ))),
        }
    }

    pub fn book(&self) -> Result<CurveBook> {
        let vars = self.vars()?.map(String::from);
        let v = self.vars()?;
        let mut attested = Vec::new();
        for (expr, status) in &self.attestations {
            if status != ATTESTATION {
                return Err(Error::Manifest(format!(
                    "attestation for {expr} must be \"{ATTESTATION}\", got \"{status}\""
                )));
            }
            attested.push(parse_poly(expr, &v)?.normalized());
        }
        let mut points = Vec::new();
        for (expr, coords) in &self.points {
            let [a, b, c] = coords.as_slice() else {
                return Err(Error::Manifest(format!(
                    "point for {expr} needs three coordinates"
                )));
            };
            let p = PlanePoint::new([a.value()?, b.value()?, c.value()?])?;
            points.push((parse_poly(expr, &v)?.normalized(), p));
        }
        Ok(CurveBook {
            vars,
            attested,
            points,
            curves: Vec::new(),
        })
    }

    pub fn bundle(&self) -> Result<DiagonalBundle> {
        let mut book = self.book()?;
        if let Some(k) = self
            .coefficients
            .keys()
            .find(|k| !LABELS.contains(&k.as_str()))
        {
            return Err(Error::Manifest(format!("unknown coefficient {k}")));
        }
        let mut coeffs = Vec::new();
        for label in LABELS {
            let spec = self
                .coefficients
                .get(label)
                .ok_or_else(|| Error::Manifest(format!("missing coefficient {label}")))?;
            let scalar = spec.scalar.value()?;
            if scalar.is_zero() {
                return Err(Error::InvalidBundle(format!("coefficient {label} is zero")));
            }
            let f = book.function(&spec.factors, scalar).map_err(|e| match e {
                Error::Manifest(m) => Error::Manifest(format!("coefficient {label}: {m}")),
                e => e,
            })?;
            coeffs.push(f);
        }
        let b = DiagonalBundle::new(coeffs.try_into().expect("four coefficients"))?;
        if self.options.reduce_cubes {
            b.reduce_cubes()
        } else {
            Ok(b)
        }
    }
}

/// Turns expressions into curves, applying attestations and supplied points
/// and reusing one curve per form.
#[derive(Clone, Debug)]
pub struct CurveBook {
    vars: [String; 3],
    attested: Vec<HPoly>,
    points: Vec<(HPoly, PlanePoint)>,
    curves: Vec<Curve>,
}

impl CurveBook {
    pub fn new(vars: [&str; 3]) -> Self {
        CurveBook {
            vars: vars.map(String::from),
            attested: Vec::new(),
            points: Vec::new(),
            curves: Vec::new(),
        }
    }

    pub fn vars(&self) -> [&str; 3] {
        [&self.vars[0], &self.vars[1], &self.vars[2]]
    }

    pub fn curve(&mut self, form: &HPoly) -> Result<Curve> {
        let n = form.normalized();
        if let Some(c) = self.curves.iter().find(|c| c.poly() == &n) {
            return Ok(c.clone());
        }
        if n.degree() >= 3 && !self.attested.contains(&n) {
            return Err(Error::Manifest(format!(
                "{} has degree {} and needs an attestation",
                n.to_string_with(&self.vars()),
                n.degree()
            )));
        }
        let mut c = Curve::new(&n, self.attested.contains(&n))?;
        if let Some((_, p)) = self.points.iter().find(|(q, _)| q == &n) {
            c = c.with_point(p)?;
        }
        self.curves.push(c.clone());
        Ok(c)
    }

    /// `scalar * prod(expr^e)`; a curve listed twice is an error.
    pub fn function(&mut self, items: &[(String, i64)], scalar: Rational) -> Result<FactoredFn> {
        let vars = self.vars.clone();
        let v = [vars[0].as_str(), vars[1].as_str(), vars[2].as_str()];
        let mut scalar = scalar;
        let mut factors: Vec<(Curve, i64)> = Vec::new();
        for (expr, e) in items {
            let p = parse_poly(expr, &v)?;
            if p.is_zero() {
                return Err(Error::InvalidFunction(format!("factor {expr} is zero")));
            }
            let content = p.content();
            scalar *= pow(&content, *e);
            if p.degree() == 0 {
                continue;
            }
            let c = self.curve(&p)?;
            if factors.iter().any(|(d, _)| d == &c) {
                return Err(Error::Manifest(format!(
                    "repeated factor curve {}",
                    c.to_string_with(&v)
                )));
            }
            factors.push((c, *e));
        }
        FactoredFn::new(scalar, factors)
    }
}

fn pow(r: &Rational, e: i64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= r;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn with_coeffs(coeffs: &str) -> String {
        format!(r#"{{"variables": ["x", "y", "z"], "coefficients": {coeffs}}}"#)
    }

    #[test]
    fn reference_manifest_matches_builtin() {
        let m = Manifest::reference();
        assert_eq!(m.bundle().unwrap(), DiagonalBundle::reference());
        assert_eq!(m.options.convention, Some(Convention::LaterOverEarlier));
    }

    #[test]
    fn repeated_factor_is_a_manifest_error() {
        let m = Manifest::parse(&with_coeffs(
            r#"{"a": {"factors": [["x", 1], ["2*x", 1]]}, "b": {"factors": [["y", 2]]},
                "c": {"factors": [["z", 2]]}, "d": {"factors": [["x+y", 2]]}}"#,
        ))
        .unwrap();
        let e = m.bundle().unwrap_err();
        assert!(
            matches!(&e, Error::Manifest(s) if s.contains("repeated")),
            "{e}"
        );
        assert_eq!(e.exit_code(), 3);
    }

    #[test]
    fn input_errors() {
        let zero = Manifest::parse(&with_coeffs(
            r#"{"a": {"scalar": 0, "factors": [["x", 1]]}, "b": {"factors": [["y", 1]]},
                "c": {"factors": [["z", 1]]}, "d": {"factors": [["x+y", 1]]}}"#,
        ))
        .unwrap();
        assert!(matches!(zero.bundle(), Err(Error::InvalidBundle(_))));
        let cubic = Manifest::parse(&with_coeffs(
            r#"{"a": {"factors": [["x^3+y^3+z^3", 1]]}, "b": {"factors": [["y", 3]]},
                "c": {"factors": [["z", 3]]}, "d": {"factors": [["x", 3]]}}"#,
        ))
        .unwrap();
        assert!(matches!(cubic.bundle(), Err(Error::Manifest(_))));
        let bad = Manifest::parse(&with_coeffs(
            r#"{"a": {"factors": [["x y", 1]]}, "b": {"factors": [["y", 1]]},
                "c": {"factors": [["z", 1]]}, "d": {"factors": [["x", 1]]}}"#,
        ))
        .unwrap();
        assert!(matches!(bad.bundle(), Err(Error::Parse { pos: 2, .. })));
        assert!(Manifest::parse(r#"{"variables": ["x"]}"#).is_err());
        let missing = Manifest::parse(&with_coeffs(r#"{"a": {"factors": [["x", 1]]}}"#)).unwrap();
        assert!(matches!(missing.bundle(), Err(Error::Manifest(_))));
    }

    #[test]
    fn custom_variables_and_points() {
        let m = Manifest::parse(
            r#"{"variables": ["u", "v", "w"],
                "coefficients": {
                  "a": {"scalar": "3/2", "factors": [["u^2 + v^2 - 2*w^2", 1], ["u", 1]]},
                  "b": {"factors": [["v", 3]]},
                  "c": {"factors": [["w", 3]]},
                  "d": {"factors": [["u + v", 3]]}},
                "points": {"u^2 + v^2 - 2*w^2": [1, -1, 1]}}"#,
        )
        .unwrap();
        let b = m.bundle().unwrap();
        let conic = b.coeffs()[0].factors()[1].0.clone();
        assert_eq!(conic.degree(), 2);
        assert!(conic.param().is_some());
    }
}
