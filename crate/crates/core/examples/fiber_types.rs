// Classification of the fibers over discriminant components.

use cubic_hnr::bundle::{fiber_type, Convention, DiagonalBundle};
use cubic_hnr::field::FactoredFn;

fn bundle(items: [&[(&str, i64)]; 4]) -> cubic_hnr::Result<DiagonalBundle> {
    let mut coeffs = Vec::new();
    for it in items {
        coeffs.push(FactoredFn::from_exprs(it)?);
    }
    DiagonalBundle::new(coeffs.try_into().expect("four coefficients"))
}

pub fn run_example() -> cubic_hnr::Result<()> {
    let cases = [
        (
            "cones",
            bundle([&[("x", 1)], &[("y", 1)], &[("z", 1)], &[("x + y + z", 1)]])?,
        ),
        (
            "split planes",
            bundle([&[("x", 1)], &[("x", 1)], &[("y", 1)], &[("y", 1)]])?,
        ),
        (
            "non-reduced",
            bundle([&[("x", 1)], &[("x", 1)], &[("x", 1)], &[("y", 1)]])?,
        ),
        ("reference", DiagonalBundle::reference()),
    ];
    for (name, b) in &cases {
        println!("{name}:");
        for c in b.discriminant_support() {
            let f = fiber_type(b, &c, Convention::default())?;
            println!(
                "  {:<12} valuations {:?}  {}",
                c.to_string(),
                f.valuations,
                f.kind
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> cubic_hnr::Result<()> {
    run_example()
}
