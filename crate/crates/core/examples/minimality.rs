// Severi-Brauer normal forms and the Segre minimality test.

use cubic_hnr::bundle::{
    pairing_label, sb_normal_form_over, segre_minimality, DiagonalBundle, Minimality, Over,
    SbVerdict,
};
use cubic_hnr::field::FactoredFn;
use cubic_hnr::poly::DEFAULT_VARS;

pub fn run_example() -> cubic_hnr::Result<()> {
    let v = DEFAULT_VARS;
    let r = DiagonalBundle::reference();
    match sb_normal_form_over(&r, &Over::Global)? {
        SbVerdict::Yes(t) => println!("global normal form via {}", pairing_label(&t.pairing)),
        SbVerdict::NoEvidence(trials) => {
            for t in trials {
                println!(
                    "{}: cube {} non-split {}",
                    pairing_label(&t.pairing),
                    t.cube,
                    t.non_split
                );
            }
        }
    }
    match segre_minimality(&r)? {
        Minimality::Minimal(lab) => {
            println!("MINIMAL with labeling {:?}", lab.order);
            for (name, g, _) in &lab.elements {
                println!("  {name} = {}", g.to_string_with(&v));
            }
        }
        m => println!("{}", m.name()),
    }

    let coeffs =
        [("x", 1), ("y", 1), ("y", 1), ("x", 1)].map(|(e, k)| FactoredFn::from_exprs(&[(e, k)]));
    let [a, b, c, d] = coeffs;
    let sym = DiagonalBundle::new([a?, b?, c?, d?])?;
    println!("(x, y, y, x): {}", segre_minimality(&sym)?.name());
    Ok(())
}

#[allow(dead_code)]
fn main() -> cubic_hnr::Result<()> {
    run_example()
}
