// Tame residues of a symbol (g, h) and the per-point reciprocity ledger.

use cubic_hnr::field::{FactoredFn, PlanePoint};
use cubic_hnr::poly::DEFAULT_VARS;
use cubic_hnr::symbol::{is_zero_over_kp, reciprocity_check, residue_detailed, Symbol2};

pub fn run_example() -> cubic_hnr::Result<()> {
    let v = DEFAULT_VARS;
    let s = Symbol2::new(
        FactoredFn::from_exprs(&[("x", 1), ("x + y + z", -1)])?,
        FactoredFn::from_exprs(&[("y", 1), ("z", -1)])?,
    );
    println!("symbol {}", s.to_string_with(&v));
    for c in s.support() {
        let r = residue_detailed(&s, &c)?;
        let (pts, _) = r.class.rational_support()?;
        let pts: Vec<String> = pts.iter().map(|(p, m)| format!("{m}{p}")).collect();
        println!(
            "  along {c}: v = ({}, {}), divisor {}",
            r.v_g,
            r.v_h,
            pts.join(" + ")
        );
    }
    let rep = reciprocity_check(&s)?;
    for (p, contributions) in &rep.ledger.points {
        println!(
            "  at {p}: {} contributions, sum {}",
            contributions.len(),
            rep.ledger.sum_at(p)
        );
    }
    println!("reciprocity holds: {}", rep.holds());
    let origin = PlanePoint::from_ints([0, 0, 1]);
    println!("zero over K at {origin}: {}", is_zero_over_kp(&s, &origin)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> cubic_hnr::Result<()> {
    run_example()
}
