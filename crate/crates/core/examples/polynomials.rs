// Exact polynomial arithmetic: parsing, gcds, restriction to a line and
// squarefree decomposition.

use cubic_hnr::poly::{
    gcd_multivariate, parse_poly, yun_squarefree, Parametrization, DEFAULT_VARS,
};

pub fn run_example() -> cubic_hnr::Result<()> {
    let v = DEFAULT_VARS;
    let f = parse_poly("(x + y + z)^3 - 6*x*y*z", &v)?;
    println!("f = {}", f.to_string_with(&v));

    let p = parse_poly("x^2*y - x*z^2", &v)?;
    let q = parse_poly("x*y^2 - x*y*z", &v)?;
    println!("gcd({}, {}) = {}", p, q, gcd_multivariate(&p, &q));

    let line = parse_poly("x", &v)?;
    let par = Parametrization::for_line(&line)?;
    let r = par.restrict(&f)?;
    println!(
        "f on x = 0, parametrized as {}: {}",
        par.describe(),
        r.poly.to_string_in("s")
    );
    for (part, m) in &yun_squarefree(&r.poly).parts {
        println!("  multiplicity {m}: {}", part.to_string_in("s"));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> cubic_hnr::Result<()> {
    run_example()
}
