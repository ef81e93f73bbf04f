// Classes in k(C)*/cubes on a line and on a conic, and their residues at
// rational points.

use cubic_hnr::field::{residue_unit, CubeClass, Curve, FactoredFn};
use cubic_hnr::manifest::CurveBook;
use cubic_hnr::poly::{parse_poly, DEFAULT_VARS};

pub fn run_example() -> cubic_hnr::Result<()> {
    let v = DEFAULT_VARS;
    let x0 = Curve::coordinate(0);
    let a = CubeClass::from_forms(&x0, &[(parse_poly("y*z^2", &v)?, 1)])?;
    let b = CubeClass::from_forms(&x0, &[(parse_poly("y^2*z", &v)?, 1)])?;
    println!("on x = 0: [y z^2]^2 == [y^2 z] ? {}", a.pow(2).equals(&b)?);
    let (pts, _) = a.rational_support()?;
    for (p, m) in pts {
        println!("  [y z^2] has order {m} at {p}");
    }

    let g = FactoredFn::from_exprs(&[("y", 1), ("z", 2), ("x + y + z", -1)])?;
    println!(
        "residue of {} along x = 0: trivial = {}",
        g.to_string_with(&v),
        residue_unit(&g, &x0)?.is_trivial()
    );

    let mut book = CurveBook::new(v);
    let conic = book.curve(&parse_poly("x*y - z^2", &v)?)?;
    let c = CubeClass::from_forms(
        &conic,
        &[(parse_poly("x", &v)?, 1), (parse_poly("z", &v)?, -1)],
    )?;
    println!(
        "on x y = z^2 with {}: [x/z] trivial = {}",
        conic.require_param()?.describe(),
        c.is_trivial()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> cubic_hnr::Result<()> {
    run_example()
}
