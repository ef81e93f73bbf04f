//! Degree-2 symbols `(g, h)` with `Z/3` coefficients: tame residues along
//! curves, ramification divisors, point-level reciprocity, and vanishing
//! over the completions at curves and points.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{gradients_parallel, residue_unit, CubeClass, Curve, FactoredFn, PlanePoint};
use crate::poly::{UPoly, DEFAULT_VARS};

/// The cup product `(g, h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symbol2 {
    pub g: FactoredFn,
    pub h: FactoredFn,
}

impl Symbol2 {
    pub fn new(g: FactoredFn, h: FactoredFn) -> Self {
        Symbol2 { g, h }
    }

    pub fn trivial() -> Self {
        Symbol2::new(FactoredFn::one(), FactoredFn::one())
    }

    /// Curves in the support of `g` or `h`, sorted and deduplicated.
    pub fn support(&self) -> Vec<Curve> {
        let mut v: Vec<Curve> = self.g.curves().chain(self.h.curves()).cloned().collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn to_string_with(&self, vars: &[&str]) -> String {
        format!(
            "({}, {})",
            self.g.to_string_with(vars),
            self.h.to_string_with(vars)
        )
    }
}

impl fmt::Display for Symbol2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&DEFAULT_VARS))
    }
}

/// A residue together with the valuations it was computed from and the
/// sign `(-1)^(v(g) v(h))`, which is a cube and does not affect the class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TameResidue {
    pub class: CubeClass,
    pub v_g: i64,
    pub v_h: i64,
    pub sign: i8,
}

/// Residue of `(g, h)` along `C`: the class of `g^v(h) / h^v(g)` on `C`.
pub fn residue_detailed(s: &Symbol2, c: &Curve) -> Result<TameResidue> {
    let v_g = s.g.valuation(c);
    let v_h = s.h.valuation(c);
    let sign = if (v_g * v_h).rem_euclid(2) == 0 {
        1
    } else {
        -1
    };
    let class = if v_g % 3 == 0 && v_h % 3 == 0 {
        CubeClass::identity(c)
    } else {
        let unit = s.g.pow(v_h).div(&s.h.pow(v_g));
        residue_unit(&unit, c)?
    };
    Ok(TameResidue {
        class,
        v_g,
        v_h,
        sign,
    })
}

pub fn residue_codim1(s: &Symbol2, c: &Curve) -> Result<CubeClass> {
    Ok(residue_detailed(s, c)?.class)
}

/// Curves with nontrivial residue, in curve order.
pub fn ramification_divisor(s: &Symbol2) -> Result<Vec<(Curve, CubeClass)>> {
    let mut out = Vec::new();
    for c in s.support() {
        let r = residue_codim1(s, &c)?;
        if !r.is_trivial() {
            out.push((c, r));
        }
    }
    Ok(out)
}

pub fn is_zero_over_kx(s: &Symbol2, c: &Curve) -> Result<bool> {
    Ok(residue_codim1(s, c)?.is_trivial())
}

/// Contributions of residues to closed points, for a family of classes on
/// distinct curves.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PointLedger {
    /// Every rational point in a divisor support or a pairwise intersection,
    /// with `(component index, order)` contributions.
    pub points: BTreeMap<PlanePoint, Vec<(usize, u8)>>,
    /// Irrational parts of divisors that meet no other component; each such
    /// point has a nonzero sum.
    pub lonely: Vec<(usize, UPoly, u8)>,
}

impl PointLedger {
    /// Builds the ledger. Irrational support points shared with another
    /// component are refused as `Unsupported`.
    pub fn build(items: &[(Curve, CubeClass)]) -> Result<Self> {
        let mut ledger = PointLedger::default();
        for (i, (c, class)) in items.iter().enumerate() {
            let (pts, rest) = class.rational_support()?;
            for (p, m) in pts {
                ledger.points.entry(p).or_default().push((i, m));
            }
            for (poly, m) in rest {
                for (j, (d, _)) in items.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    let meet = c.meet(d)?;
                    if meet.irrational.gcd(&poly).degree() > 0 {
                        return Err(Error::Unsupported(format!(
                            "irrational points {} = 0 of {c} also lie on {d}",
                            poly.to_string_in("s")
                        )));
                    }
                }
                ledger.lonely.push((i, poly, m));
            }
        }
        for i in 0..items.len() {
            for j in i + 1..items.len() {
                for (p, _) in items[i].0.meet(&items[j].0)?.points {
                    ledger.points.entry(p).or_default();
                }
            }
        }
        Ok(ledger)
    }

    pub fn sum_at(&self, p: &PlanePoint) -> u8 {
        self.points
            .get(p)
            .map(|v| (v.iter().map(|(_, m)| *m as u32).sum::<u32>() % 3) as u8)
            .unwrap_or(0)
    }

    /// Rational points with nonzero sum.
    pub fn failures(&self) -> Vec<PlanePoint> {
        self.points
            .keys()
            .filter(|p| self.sum_at(p) != 0)
            .cloned()
            .collect()
    }

    pub fn balanced(&self) -> bool {
        self.lonely.is_empty() && self.failures().is_empty()
    }
}

/// Per-point residue sums of a symbol's ramification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocityReport {
    pub ramification: Vec<(Curve, CubeClass)>,
    pub ledger: PointLedger,
}

impl ReciprocityReport {
    pub fn holds(&self) -> bool {
        self.ledger.balanced()
    }
}

pub fn reciprocity_check(s: &Symbol2) -> Result<ReciprocityReport> {
    let ramification = ramification_divisor(s)?;
    let ledger = PointLedger::build(&ramification)?;
    Ok(ReciprocityReport {
        ramification,
        ledger,
    })
}

/// The branches of a symbol's support at a point, with exponents mod 3.
/// Branches whose row is zero mod 3 are omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSymbolData {
    pub point: PlanePoint,
    pub primes: Vec<Curve>,
    pub rows: Vec<[u8; 2]>,
}

impl LocalSymbolData {
    /// Rows of `(v_g, v_h)` mod 3 for the branches through `p`; at most two
    /// smooth, transverse branches are supported.
    pub fn at(s: &Symbol2, p: &PlanePoint) -> Result<Self> {
        let mut primes = Vec::new();
        let mut rows = Vec::new();
        for c in s.support() {
            if !c.contains(p) {
                continue;
            }
            let row = [
                s.g.valuation(&c).rem_euclid(3) as u8,
                s.h.valuation(&c).rem_euclid(3) as u8,
            ];
            if row == [0, 0] {
                continue;
            }
            if !c.is_smooth_at(p) {
                return Err(Error::UnsupportedLocalGeometry(format!(
                    "{c} is singular at {p}"
                )));
            }
            primes.push(c);
            rows.push(row);
        }
        if primes.len() > 2 {
            return Err(Error::UnsupportedLocalGeometry(format!(
                "{} branches meet at {p}",
                primes.len()
            )));
        }
        if primes.len() == 2
            && gradients_parallel(&primes[0].gradient_at(p), &primes[1].gradient_at(p))
        {
            return Err(Error::UnsupportedLocalGeometry(format!(
                "{} and {} are tangent at {p}",
                primes[0], primes[1]
            )));
        }
        Ok(LocalSymbolData {
            point: p.clone(),
            primes,
            rows,
        })
    }

    /// Determinant of the exponent matrix mod 3 (0 with fewer than two rows).
    pub fn determinant(&self) -> u8 {
        if self.rows.len() < 2 {
            return 0;
        }
        let [a, b] = self.rows[0];
        let [c, d] = self.rows[1];
        ((a as i32 * d as i32 - b as i32 * c as i32).rem_euclid(3)) as u8
    }
}

/// Over the completion at `P` the symbol is `det * (pi_1, pi_2)`, since
/// units of the complete local ring are cubes.
pub fn is_zero_over_kp(s: &Symbol2, p: &PlanePoint) -> Result<bool> {
    Ok(LocalSymbolData::at(s, p)?.determinant() == 0)
}
