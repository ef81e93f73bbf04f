use super::{CubeClass, Curve, FactoredFn, PlanePoint};
use crate::error::{Error, Result};
use crate::poly::HPoly;

/// Residue class on `C` of the unit `g / pi^v`, with `pi = C / chart^deg C`
/// and `v` the valuation of `g` along `C`, using the default chart.
pub fn residue_unit(g: &FactoredFn, c: &Curve) -> Result<CubeClass> {
    residue_unit_in_chart(g, c, &c.default_chart())
}

/// [`residue_unit`] with an explicit linear chart form, which must not
/// vanish identically on `C`.
pub fn residue_unit_in_chart(g: &FactoredFn, c: &Curve, chart: &HPoly) -> Result<CubeClass> {
    let v = g.valuation(c);
    let chart_exp = v * c.degree() as i64;
    let mut items: Vec<(HPoly, i64)> = g
        .factors()
        .iter()
        .filter(|(d, _)| d != c)
        .map(|(d, e)| (d.poly().clone(), *e))
        .collect();
    if items.iter().all(|(_, e)| e % 3 == 0) && chart_exp % 3 == 0 {
        return Ok(CubeClass::identity(c));
    }
    if chart_exp != 0 {
        items.push((chart.clone(), chart_exp));
    }
    CubeClass::from_forms(c, &items)
}

/// `g` is a cube in the function field iff every exponent is divisible by 3
/// (constants are cubes over the algebraic closure).
pub fn is_cube_in_k(g: &FactoredFn) -> bool {
    g.factors().iter().all(|(_, e)| e % 3 == 0)
}

/// `g` is a cube in the completion at `C` iff `v_C(g) = 0 mod 3` and the
/// residue of the unit part is a cube.
pub fn is_cube_in_kx(g: &FactoredFn, c: &Curve) -> Result<bool> {
    if g.valuation(c) % 3 != 0 {
        return Ok(false);
    }
    Ok(residue_unit(g, c)?.is_trivial())
}

/// `g` is a cube in the fraction field of the completed local ring at `P`
/// iff every factor through `P` carrying an exponent not divisible by 3 is
/// absent. Such factors must be smooth at `P`.
pub fn is_cube_in_kp(g: &FactoredFn, p: &PlanePoint) -> Result<bool> {
    let mut cube = true;
    for (c, e) in g.factors() {
        if e % 3 == 0 || !c.contains(p) {
            continue;
        }
        if !c.is_smooth_at(p) {
            return Err(Error::UnsupportedLocalGeometry(format!(
                "{c} is singular at {p}"
            )));
        }
        cube = false;
    }
    Ok(cube)
}
