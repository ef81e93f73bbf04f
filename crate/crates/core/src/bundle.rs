//! Diagonal cubic surface bundles `a u^3 + b v^3 + c w^3 + d t^3 = 0` over
//! the plane: validation, fibers over curves, simple normal crossings,
//! Severi-Brauer normal forms and Segre minimality.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{
    is_cube_in_k, is_cube_in_kp, is_cube_in_kx, residue_unit, CubeClass, Curve, FactoredFn,
    PlanePoint,
};
use crate::poly::{gcd_multivariate, HPoly, DEFAULT_VARS};
use crate::symbol::{is_zero_over_kp, ramification_divisor, residue_codim1, Symbol2};

pub const LABELS: [&str; 4] = ["a", "b", "c", "d"];

/// Orientation of the class of a three-planes fiber.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    #[default]
    LaterOverEarlier,
    EarlierOverLater,
}

impl Convention {
    pub fn flipped(self) -> Self {
        match self {
            Convention::LaterOverEarlier => Convention::EarlierOverLater,
            Convention::EarlierOverLater => Convention::LaterOverEarlier,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Convention::LaterOverEarlier => "later-over-earlier",
            Convention::EarlierOverLater => "earlier-over-later",
        }
    }
}

/// The bundle with coefficients `[a, b, c, d]`, each a polynomial in
/// factored form. Degrees agree mod 3, which is what a twist of the
/// ambient projective bundle allows, and no curve divides all four.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalBundle {
    coeffs: [FactoredFn; 4],
}

/// One named check of [`DiagonalBundle::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl DiagonalBundle {
    pub fn new(coeffs: [FactoredFn; 4]) -> Result<Self> {
        for (i, c) in coeffs.iter().enumerate() {
            if let Some((curve, e)) = c.factors().iter().find(|(_, e)| *e < 0) {
                return Err(Error::InvalidBundle(format!(
                    "coefficient {} has negative exponent {e} on {curve}",
                    LABELS[i]
                )));
            }
        }
        let degrees: Vec<i64> = coeffs.iter().map(FactoredFn::degree).collect();
        if degrees.iter().any(|d| (d - degrees[0]) % 3 != 0) {
            return Err(Error::InvalidBundle(format!(
                "coefficient degrees {degrees:?} are not congruent mod 3"
            )));
        }
        let common = coeffs[0]
            .curves()
            .find(|c| coeffs[1..].iter().all(|f| f.valuation(c) > 0));
        if let Some(c) = common {
            return Err(Error::InvalidBundle(format!(
                "{c} divides all four coefficients"
            )));
        }
        let g = coeffs
            .iter()
            .map(|f| f.expand().expect("nonnegative exponents"))
            .fold(HPoly::zero(0), |g, p| gcd_multivariate(&g, &p));
        if !g.is_constant() {
            return Err(Error::InvalidBundle(format!(
                "the coefficients share the factor {g}"
            )));
        }
        Ok(DiagonalBundle { coeffs })
    }

    /// The reference bundle `x z^2 u^3 + y^2 z v^3 + x y^2 w^3 + f t^3`
    /// with `f = (x + y + z)^3 - 6 x y z`.
    pub fn reference() -> Self {
        let f = "x^3+y^3+z^3+3*x^2*y+3*x*y^2+3*y^2*z+3*y*z^2+3*x*z^2+3*x^2*z";
        let att = |_: &HPoly| true;
        let v = DEFAULT_VARS;
        DiagonalBundle::new([
            FactoredFn::from_exprs_with(&[("x", 1), ("z", 2)], &v, &att).unwrap(),
            FactoredFn::from_exprs_with(&[("y", 2), ("z", 1)], &v, &att).unwrap(),
            FactoredFn::from_exprs_with(&[("x", 1), ("y", 2)], &v, &att).unwrap(),
            FactoredFn::from_exprs_with(&[(f, 1)], &v, &att).unwrap(),
        ])
        .expect("reference bundle is valid")
    }

    pub fn coeffs(&self) -> &[FactoredFn; 4] {
        &self.coeffs
    }

    /// The same bundle with every exponent reduced mod 3.
    pub fn reduce_cubes(&self) -> Result<Self> {
        DiagonalBundle::new(self.coeffs.clone().map(|c| c.reduce_cubes()))
    }

    /// Irreducible components of `V(abcd)`, sorted.
    pub fn discriminant_support(&self) -> Vec<Curve> {
        let mut v: Vec<Curve> = self
            .coeffs
            .iter()
            .flat_map(|c| c.curves().cloned())
            .collect();
        v.sort();
        v.dedup();
        v
    }

    /// Records the invariants checked at construction.
    pub fn validate(&self) -> Vec<Check> {
        let degrees: Vec<String> = self.coeffs.iter().map(|c| c.degree().to_string()).collect();
        vec![
            Check {
                name: "nonzero coefficients".into(),
                pass: true,
                detail: "a, b, c, d are nonzero".into(),
            },
            Check {
                name: "degrees".into(),
                pass: true,
                detail: format!("degrees ({}) agree mod 3", degrees.join(", ")),
            },
            Check {
                name: "no common component".into(),
                pass: true,
                detail: "gcd(a, b, c, d) = 1".into(),
            },
            Check {
                name: "smooth generic fiber".into(),
                pass: true,
                detail: "a diagonal cubic with nonzero coefficients is smooth in characteristic 0"
                    .into(),
            },
        ]
    }
}

/// Fiber of the bundle over the generic point of a curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiberType {
    Smooth,
    Cone,
    ThreePlanes(CubeClass),
    SplitPlanes,
    NonReduced,
}

impl FiberType {
    pub fn name(&self) -> &'static str {
        match self {
            FiberType::Smooth => "SMOOTH",
            FiberType::Cone => "CONE",
            FiberType::ThreePlanes(_) => "THREE_PLANES",
            FiberType::SplitPlanes => "SPLIT_PLANES",
            FiberType::NonReduced => "NON_REDUCED",
        }
    }
}

impl fmt::Display for FiberType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberType::ThreePlanes(g) => write!(f, "THREE_PLANES({g})"),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    pub curve: Curve,
    pub valuations: [i64; 4],
    /// Positions (0..4) of coefficients that are units along the curve.
    pub units: Vec<usize>,
    pub kind: FiberType,
}

/// Classifies the fiber over `C` by the number of unit coefficients; with
/// two units the class of their ratio decides between three conjugate
/// planes and three rational planes.
pub fn fiber_type(b: &DiagonalBundle, c: &Curve, conv: Convention) -> Result<Fiber> {
    let valuations = b.coeffs.clone().map(|f| f.valuation(c));
    let units: Vec<usize> = (0..4).filter(|&i| valuations[i] == 0).collect();
    let kind = match units.len() {
        4 => FiberType::Smooth,
        3 => FiberType::Cone,
        2 => {
            let (early, late) = (&b.coeffs[units[0]], &b.coeffs[units[1]]);
            let ratio = match conv {
                Convention::LaterOverEarlier => late.div(early),
                Convention::EarlierOverLater => early.div(late),
            };
            let gamma = residue_unit(&ratio, c)?;
            if gamma.is_trivial() {
                FiberType::SplitPlanes
            } else {
                FiberType::ThreePlanes(gamma)
            }
        }
        1 => FiberType::NonReduced,
        _ => unreachable!("no curve divides all four coefficients"),
    };
    Ok(Fiber {
        curve: c.clone(),
        valuations,
        units,
        kind,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Locus {
    /// Every component of the discriminant with its fiber.
    pub components: Vec<Fiber>,
    /// Three-planes components `C_i` with their classes `gamma_i`.
    pub three_planes: Vec<(Curve, CubeClass)>,
    pub non_reduced: Vec<Curve>,
}

pub fn three_planes_locus(b: &DiagonalBundle, conv: Convention) -> Result<Locus> {
    let mut components = Vec::new();
    let mut three_planes = Vec::new();
    let mut non_reduced = Vec::new();
    for c in b.discriminant_support() {
        let fib = fiber_type(b, &c, conv)?;
        match &fib.kind {
            FiberType::ThreePlanes(g) => three_planes.push((c.clone(), g.clone())),
            FiberType::NonReduced => non_reduced.push(c.clone()),
            _ => {}
        }
        components.push(fib);
    }
    Ok(Locus {
        components,
        three_planes,
        non_reduced,
    })
}

/// Why a family of curves fails to be a simple normal crossings divisor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SncFailure {
    pub reason: String,
    pub point: Option<String>,
}

/// Checks smoothness, transversality and absence of triple points for
/// lines and pointed conics.
pub fn snc_check(curves: &[Curve]) -> Result<Option<SncFailure>> {
    for (i, c) in curves.iter().enumerate() {
        if curves[..i].contains(c) {
            return Ok(Some(SncFailure {
                reason: format!("{c} is repeated"),
                point: None,
            }));
        }
        if c.degree() > 2 {
            return Err(Error::Unsupported(format!(
                "crossing analysis of {c} needs a parametrizable component"
            )));
        }
        c.require_param()?;
    }
    for i in 0..curves.len() {
        for j in i + 1..curves.len() {
            let meet = curves[i].meet(&curves[j])?;
            if let Some((p, _)) = meet.points.iter().find(|(_, m)| *m > 1) {
                return Ok(Some(SncFailure {
                    reason: format!("{} and {} are tangent", curves[i], curves[j]),
                    point: Some(p.to_string()),
                }));
            }
            let irr = &meet.irrational;
            if irr.degree() > 0 && irr.gcd(&irr.derivative()).degree() > 0 {
                return Ok(Some(SncFailure {
                    reason: format!(
                        "{} and {} are tangent at irrational points",
                        curves[i], curves[j]
                    ),
                    point: None,
                }));
            }
            for k in j + 1..curves.len() {
                if let Some((p, _)) = meet.points.iter().find(|(p, _)| curves[k].contains(p)) {
                    return Ok(Some(SncFailure {
                        reason: format!(
                            "{}, {} and {} are concurrent",
                            curves[i], curves[j], curves[k]
                        ),
                        point: Some(p.to_string()),
                    }));
                }
                if irr.degree() > 0 {
                    let third = curves[i].require_param()?.restrict(curves[k].poly())?;
                    if irr.gcd(&third.poly).degree() > 0 {
                        return Ok(Some(SncFailure {
                            reason: format!(
                                "{}, {} and {} share irrational points",
                                curves[i], curves[j], curves[k]
                            ),
                            point: None,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// The field over which a normal form is sought.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Over {
    Global,
    Curve(Curve),
    Point(PlanePoint),
}

impl fmt::Display for Over {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Over::Global => f.write_str("K"),
            Over::Curve(c) => write!(f, "K_({c})"),
            Over::Point(p) => write!(f, "K_{p}"),
        }
    }
}

pub const PAIRINGS: [[usize; 4]; 3] = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]];

/// Outcome for one pairing `{{i, j}, {k, l}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingTrial {
    pub pairing: [usize; 4],
    /// `c_i c_j / (c_k c_l)` is a cube over the field.
    pub cube: bool,
    /// The witness symbol `(c_i / c_l, c_j / c_l)` is nonzero over the field.
    pub non_split: bool,
    pub symbol: Symbol2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SbVerdict {
    Yes(PairingTrial),
    NoEvidence(Vec<PairingTrial>),
}

impl SbVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, SbVerdict::Yes(_))
    }
}

pub fn pairing_label(p: &[usize; 4]) -> String {
    format!(
        "{{{{{},{}}},{{{},{}}}}}",
        LABELS[p[0]], LABELS[p[1]], LABELS[p[2]], LABELS[p[3]]
    )
}

/// Looks for a pairing with `c_i c_j = c_k c_l` mod cubes over the field,
/// which puts the fiber in the shape `A u^3 + B v^3 + AB w^3 + t^3`, and
/// requires the class `(A, B)` to be nonzero there.
pub fn sb_normal_form_over(b: &DiagonalBundle, over: &Over) -> Result<SbVerdict> {
    let c = &b.coeffs;
    let mut trials = Vec::new();
    for p in PAIRINGS {
        let [i, j, k, l] = p;
        let r = c[i].mul(&c[j]).div(&c[k].mul(&c[l]));
        let cube = match over {
            Over::Global => is_cube_in_k(&r),
            Over::Curve(cv) => is_cube_in_kx(&r, cv)?,
            Over::Point(pt) => is_cube_in_kp(&r, pt)?,
        };
        let symbol = Symbol2::new(c[i].div(&c[l]), c[j].div(&c[l]));
        let non_split = cube
            && match over {
                Over::Global => !ramification_divisor(&symbol)?.is_empty(),
                Over::Curve(cv) => !residue_codim1(&symbol, cv)?.is_trivial(),
                Over::Point(pt) => !is_zero_over_kp(&symbol, pt)?,
            };
        let trial = PairingTrial {
            pairing: p,
            cube,
            non_split,
            symbol,
        };
        if cube && non_split {
            return Ok(SbVerdict::Yes(trial));
        }
        trials.push(trial);
    }
    Ok(SbVerdict::NoEvidence(trials))
}

/// A labeling `(i, j, k, l)` puts the fiber in the shape
/// `A u^3 + B v^3 + AB w^3 + F t^3` with `A = c_k / c_j`, `B = c_k / c_i`,
/// `F = c_k c_l / (c_i c_j)` after scaling the equation and the variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegreLabeling {
    pub order: [usize; 4],
    /// `(name, element, is a cube)` for `A, B, AB, F, AF, BF`.
    pub elements: Vec<(String, FactoredFn, bool)>,
}

impl SegreLabeling {
    pub fn new(b: &DiagonalBundle, order: [usize; 4]) -> Self {
        let c = &b.coeffs;
        let [i, j, k, l] = order;
        let a = c[k].div(&c[j]);
        let bb = c[k].div(&c[i]);
        let f = c[k].mul(&c[l]).div(&c[i].mul(&c[j]));
        let named = [
            ("A", a.clone()),
            ("B", bb.clone()),
            ("AB", a.mul(&bb)),
            ("F", f.clone()),
            ("AF", a.mul(&f)),
            ("BF", bb.mul(&f)),
        ];
        SegreLabeling {
            order,
            elements: named
                .into_iter()
                .map(|(n, e)| {
                    let cube = is_cube_in_k(&e);
                    (n.to_string(), e, cube)
                })
                .collect(),
        }
    }

    pub fn all_non_cubes(&self) -> bool {
        self.elements.iter().all(|(_, _, c)| !c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Minimality {
    Minimal(SegreLabeling),
    SbBirational(PairingTrial),
    Unknown(Vec<SegreLabeling>),
}

impl Minimality {
    pub fn name(&self) -> &'static str {
        match self {
            Minimality::Minimal(_) => "MINIMAL",
            Minimality::SbBirational(_) => "SB_BIRATIONAL",
            Minimality::Unknown(_) => "UNKNOWN",
        }
    }
}

/// Labelings with `i < j`, in lexicographic order; swapping `i` and `j`
/// swaps `A` and `B` and changes nothing.
pub fn segre_labelings() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            for k in 0..4 {
                if k == i || k == j {
                    continue;
                }
                let l = 6 - i - j - k;
                out.push([i, j, k, l]);
            }
        }
    }
    out
}

pub fn segre_minimality(b: &DiagonalBundle) -> Result<Minimality> {
    if let SbVerdict::Yes(t) = sb_normal_form_over(b, &Over::Global)? {
        return Ok(Minimality::SbBirational(t));
    }
    let mut tried = Vec::new();
    for order in segre_labelings() {
        let lab = SegreLabeling::new(b, order);
        if lab.all_non_cubes() {
            return Ok(Minimality::Minimal(lab));
        }
        tried.push(lab);
    }
    Ok(Minimality::Unknown(tried))
}
