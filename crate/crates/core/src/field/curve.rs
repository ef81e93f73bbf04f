use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{
    gcd_multivariate, rational_roots, HPoly, ParamValue, Parametrization, Rational, UPoly,
};

/// How irreducibility of a curve over the algebraic closure is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Irreducibility {
    ProvenLine,
    ProvenConic,
    Attested,
}

/// A closed point of the plane with rational coordinates, scaled so that
/// its first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlanePoint([Rational; 3]);

impl PlanePoint {
    pub fn new(coords: [Rational; 3]) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::InvalidCurve("the zero vector is not a point".into()));
        }
        Ok(PlanePoint(crate::poly::param::normalize_point(coords)))
    }

    pub fn from_ints(c: [i64; 3]) -> Self {
        PlanePoint::new(c.map(crate::poly::rat)).expect("nonzero point")
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.0
    }
}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::poly::param::format_point(&self.0))
    }
}

/// An irreducible plane curve `poly = 0`, with `poly` normalized.
///
/// Equality, ordering and hashing look only at the defining polynomial.
#[derive(Clone, Debug)]
pub struct Curve {
    poly: HPoly,
    status: Irreducibility,
    param: Option<Parametrization>,
}

impl PartialEq for Curve {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly
    }
}

impl Eq for Curve {}

impl Hash for Curve {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.poly.hash(state);
    }
}

impl Ord for Curve {
    fn cmp(&self, other: &Self) -> Ordering {
        self.poly.cmp(&other.poly)
    }
}

impl PartialOrd for Curve {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}=0", self.poly)
    }
}

const POINT_SEARCH_BOUND: i64 = 8;

fn rank3(m: &[[Rational; 3]; 3]) -> usize {
    let mut rows: Vec<Vec<Rational>> = m.iter().map(|r| r.to_vec()).collect();
    let mut rank = 0;
    for col in 0..3 {
        let Some(piv) = (rank..3).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        for r in 0..3 {
            if r != rank && !rows[r][col].is_zero() {
                let f = &rows[r][col] / &rows[rank][col];
                let pivot = rows[rank].clone();
                for (x, p) in rows[r].iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

impl Curve {
    /// Builds a curve from a form of positive degree. Forms of degree at
    /// least 3 require `attested` and are refuted if visibly squareful.
    pub fn new(poly: &HPoly, attested: bool) -> Result<Self> {
        let poly = poly.normalized();
        match poly.degree() {
            0 => Err(Error::InvalidCurve(format!(
                "constant {poly} does not define a curve"
            ))),
            1 => Ok(Curve {
                param: Some(Parametrization::for_line(&poly)?),
                poly,
                status: Irreducibility::ProvenLine,
            }),
            2 => {
                let m = crate::poly::param::symmetric_matrix(&poly);
                if rank3(&m) < 3 {
                    return Err(Error::InvalidCurve(format!(
                        "conic {poly} is degenerate (matrix rank below 3)"
                    )));
                }
                let mut c = Curve {
                    poly,
                    status: Irreducibility::ProvenConic,
                    param: None,
                };
                if let Some(p) = c.search_point() {
                    c.param = Some(Parametrization::for_conic(&c.poly, p.coords())?);
                }
                Ok(c)
            }
            _ => {
                if !attested {
                    return Err(Error::InvalidCurve(format!(
                        "{poly} has degree {} and no irreducibility attestation",
                        poly.degree()
                    )));
                }
                let g = (0..3).fold(poly.clone(), |g, i| gcd_multivariate(&g, &poly.partial(i)));
                if !g.is_constant() {
                    return Err(Error::InvalidCurve(format!(
                        "attestation refuted: {poly} is not squarefree (shares {g} with its partials)"
                    )));
                }
                Ok(Curve {
                    poly,
                    status: Irreducibility::Attested,
                    param: None,
                })
            }
        }
    }

    /// The line `c0 x + c1 y + c2 z = 0`.
    pub fn line(c: [i64; 3]) -> Self {
        Curve::new(&HPoly::linear(c.map(crate::poly::rat)), false).expect("nonzero linear form")
    }

    /// Coordinate line `x_i = 0`.
    pub fn coordinate(i: usize) -> Self {
        Curve::new(&HPoly::var(i), false).expect("coordinate line")
    }

    /// Replaces the parametrization of a conic by one through `p`.
    pub fn with_point(mut self, p: &PlanePoint) -> Result<Self> {
        if self.status != Irreducibility::ProvenConic {
            return Err(Error::UnsupportedCurve(format!(
                "rational points only select parametrizations of conics, not {self}"
            )));
        }
        self.param = Some(Parametrization::for_conic(&self.poly, p.coords())?);
        Ok(self)
    }

    /// Smallest-height rational point with coordinates bounded by
    /// `POINT_SEARCH_BOUND`, if any.
    fn search_point(&self) -> Option<PlanePoint> {
        let b = POINT_SEARCH_BOUND;
        for h in 1..=b {
            for x in -h..=h {
                for y in -h..=h {
                    for z in -h..=h {
                        if x.abs().max(y.abs()).max(z.abs()) != h {
                            continue;
                        }
                        let p = PlanePoint::from_ints([x, y, z]);
                        if self.contains(&p) {
                            return Some(p);
                        }
                    }
                }
            }
        }
        None
    }

    pub fn poly(&self) -> &HPoly {
        &self.poly
    }

    pub fn degree(&self) -> u32 {
        self.poly.degree()
    }

    pub fn status(&self) -> Irreducibility {
        self.status
    }

    pub fn param(&self) -> Option<&Parametrization> {
        self.param.as_ref()
    }

    /// The parametrization, or `UnsupportedCurve` naming the reason.
    pub fn require_param(&self) -> Result<&Parametrization> {
        self.param.as_ref().ok_or_else(|| {
            Error::UnsupportedCurve(match self.status {
                Irreducibility::ProvenConic => {
                    format!("{self}: no rational point known; supply one in the manifest")
                }
                _ => format!("{self}: only lines and pointed conics are parametrized"),
            })
        })
    }

    pub fn contains(&self, p: &PlanePoint) -> bool {
        self.poly.eval(p.coords()).is_zero()
    }

    pub fn is_smooth_at(&self, p: &PlanePoint) -> bool {
        self.poly
            .gradient_at(p.coords())
            .iter()
            .any(|c| !c.is_zero())
    }

    /// Tangent direction data: the gradient at `p`.
    pub fn gradient_at(&self, p: &PlanePoint) -> [Rational; 3] {
        self.poly.gradient_at(p.coords())
    }

    pub fn to_string_with(&self, vars: &[&str]) -> String {
        self.poly.to_string_with(vars)
    }

    /// The default dehomogenizing chart: `z`, or `y` when the curve is `z = 0`.
    pub fn default_chart(&self) -> HPoly {
        if self.poly == HPoly::var(2) {
            HPoly::var(1)
        } else {
            HPoly::var(2)
        }
    }
}

/// Intersection of two distinct curves, read on the first one's parameter line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Meet {
    /// Rational intersection points with their intersection multiplicities.
    pub points: Vec<(PlanePoint, u32)>,
    /// The factor of the restricted form with no rational roots.
    pub irrational: UPoly,
}

impl Curve {
    /// Intersects `self` (which must be parametrized) with `other`.
    pub fn meet(&self, other: &Curve) -> Result<Meet> {
        let par = self.require_param()?;
        let bf = par.restrict(other.poly())?;
        let mut points = Vec::new();
        let mut rest = bf.poly.clone();
        for r in rational_roots(&bf.poly)? {
            let lin = UPoly::linear_root(&r);
            let mut m = 0;
            while let Ok(q) = rest.exact_div(&lin) {
                rest = q;
                m += 1;
            }
            points.push((PlanePoint::new(par.point_at(&ParamValue::Finite(r)))?, m));
        }
        if bf.infinity_order() > 0 {
            points.push((
                PlanePoint::new(par.point_at(&ParamValue::Infinity))?,
                bf.infinity_order() as u32,
            ));
        }
        points.sort();
        Ok(Meet {
            points,
            irrational: rest.monic(),
        })
    }
}

/// Whether two gradients are proportional (the tangent lines agree).
pub fn gradients_parallel(a: &[Rational; 3], b: &[Rational; 3]) -> bool {
    let cross = [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ];
    cross.iter().all(|c| c.is_zero())
}
