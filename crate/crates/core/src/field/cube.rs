use std::fmt;

use num::Zero;

use super::{Curve, PlanePoint};
use crate::error::{Error, Result};
use crate::poly::{yun_squarefree, HPoly, ParamValue, UPoly};

/// Rational points of a divisor with orders, and the factors without rational roots.
pub type RationalSupport = (Vec<(PlanePoint, u8)>, Vec<(UPoly, u8)>);

/// A class in `k(C)* / (k(C)*)^3` for a parametrized rational curve `C`.
///
/// The class is stored through its divisor mod 3 on the parameter line:
/// `g1` collects the points of multiplicity 1 and `g2` those of
/// multiplicity 2 (both monic, squarefree, coprime), and `infinity` is the
/// multiplicity at `[1 : 0]`, fixed by the degree-0 condition. Equal classes
/// therefore have equal representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeClass {
    carrier: Curve,
    g1: UPoly,
    g2: UPoly,
    infinity: u8,
}

impl CubeClass {
    pub fn identity(carrier: &Curve) -> Self {
        CubeClass {
            carrier: carrier.clone(),
            g1: UPoly::one(),
            g2: UPoly::one(),
            infinity: 0,
        }
    }

    /// The class of `prod(p^e)` for polynomials in the parameter `s`.
    pub fn from_parameter_polys(carrier: &Curve, items: &[(UPoly, i64)]) -> Result<Self> {
        let mut f = UPoly::one();
        for (p, e) in items {
            if p.is_zero() {
                return Err(Error::InvalidFunction(format!(
                    "zero function on {carrier}"
                )));
            }
            f = f.mul(&p.pow(e.rem_euclid(3) as u32));
        }
        let mut g1 = UPoly::one();
        let mut g2 = UPoly::one();
        for (part, m) in yun_squarefree(&f).parts {
            match m % 3 {
                1 => g1 = g1.mul(&part),
                2 => g2 = g2.mul(&part),
                _ => {}
            }
        }
        let finite = g1.degree() + 2 * g2.degree();
        Ok(CubeClass {
            carrier: carrier.clone(),
            infinity: ((3 - finite % 3) % 3) as u8,
            g1,
            g2,
        })
    }

    /// The class of `prod(form^e)` with each form restricted to the carrier
    /// through its parametrization and read in the chart `t = 1`.
    pub fn from_forms(carrier: &Curve, items: &[(HPoly, i64)]) -> Result<Self> {
        let par = carrier.require_param()?;
        let mut polys = Vec::with_capacity(items.len());
        for (f, e) in items {
            polys.push((par.restrict(f)?.poly, *e));
        }
        CubeClass::from_parameter_polys(carrier, &polys)
    }

    pub fn carrier(&self) -> &Curve {
        &self.carrier
    }

    /// `(polynomial, multiplicity)` pairs of the finite divisor, multiplicity in `{1, 2}`.
    pub fn finite_part(&self) -> Vec<(UPoly, u8)> {
        let mut v = Vec::new();
        if self.g1.degree() > 0 {
            v.push((self.g1.clone(), 1));
        }
        if self.g2.degree() > 0 {
            v.push((self.g2.clone(), 2));
        }
        v
    }

    pub fn infinity_exponent(&self) -> u8 {
        self.infinity
    }

    /// Degree of the divisor mod 3; always 0.
    pub fn balance(&self) -> u8 {
        ((self.g1.degree() + 2 * self.g2.degree() + self.infinity as usize) % 3) as u8
    }

    pub fn is_trivial(&self) -> bool {
        self.infinity == 0 && self.g1.degree() == 0 && self.g2.degree() == 0
    }

    fn check_carrier(&self, other: &CubeClass) -> Result<()> {
        if self.carrier != other.carrier {
            return Err(Error::CarrierMismatch);
        }
        Ok(())
    }

    pub fn mul(&self, other: &CubeClass) -> Result<CubeClass> {
        self.check_carrier(other)?;
        CubeClass::from_parameter_polys(
            &self.carrier,
            &[
                (self.g1.clone(), 1),
                (self.g2.clone(), 2),
                (other.g1.clone(), 1),
                (other.g2.clone(), 2),
            ],
        )
    }

    pub fn inv(&self) -> CubeClass {
        CubeClass {
            carrier: self.carrier.clone(),
            g1: self.g2.clone(),
            g2: self.g1.clone(),
            infinity: (3 - self.infinity) % 3,
        }
    }

    pub fn pow(&self, n: i64) -> CubeClass {
        match n.rem_euclid(3) {
            0 => CubeClass::identity(&self.carrier),
            1 => self.clone(),
            _ => self.inv(),
        }
    }

    pub fn equals(&self, other: &CubeClass) -> Result<bool> {
        self.check_carrier(other)?;
        Ok(self == other)
    }

    /// Multiplicity mod 3 of the divisor at a parameter value.
    pub fn order_at(&self, v: &ParamValue) -> u8 {
        match v {
            ParamValue::Infinity => self.infinity,
            ParamValue::Finite(s) => {
                if self.g1.eval(s).is_zero() {
                    1
                } else if self.g2.eval(s).is_zero() {
                    2
                } else {
                    0
                }
            }
        }
    }

    /// `power * ord_P(class)` mod 3 at a rational point of the carrier.
    pub fn point_residue(&self, p: &PlanePoint, power: i64) -> Result<u8> {
        if !self.carrier.contains(p) {
            return Err(Error::PointNotOnCurve(format!("{p} on {}", self.carrier)));
        }
        if self.is_trivial() {
            return Ok(0);
        }
        let v = self.carrier.require_param()?.parameter_of(p.coords())?;
        Ok(((self.order_at(&v) as i64 * power).rem_euclid(3)) as u8)
    }

    /// The points of the divisor with rational parameters and their
    /// multiplicities, plus the part of the divisor with no rational points.
    pub fn rational_support(&self) -> Result<RationalSupport> {
        let mut pts = Vec::new();
        let mut rest = Vec::new();
        if self.is_trivial() {
            return Ok((pts, rest));
        }
        let par = self.carrier.require_param()?;
        for (poly, m) in self.finite_part() {
            let mut remainder = poly.clone();
            for r in crate::poly::rational_roots(&poly)? {
                let pt = PlanePoint::new(par.point_at(&ParamValue::Finite(r.clone())))?;
                pts.push((pt, m));
                remainder = remainder
                    .exact_div(&UPoly::linear_root(&r))
                    .expect("root divides");
            }
            if remainder.degree() > 0 {
                rest.push((remainder, m));
            }
        }
        if self.infinity != 0 {
            pts.push((
                PlanePoint::new(par.point_at(&ParamValue::Infinity))?,
                self.infinity,
            ));
        }
        pts.sort();
        Ok((pts, rest))
    }
}

impl fmt::Display for CubeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "1 on {}", self.carrier);
        }
        let mut parts = Vec::new();
        for (p, m) in self.finite_part() {
            parts.push(format!("{m}*({})", p.to_string_in("s")));
        }
        if self.infinity != 0 {
            parts.push(format!("{}*(inf)", self.infinity));
        }
        write!(f, "[{}] on {}", parts.join(" + "), self.carrier)
    }
}
