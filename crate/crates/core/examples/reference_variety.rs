// The full computation on the reference bundle: three-planes locus,
// conditions (i) and (ii), the group and symbol witnesses.

use cubic_hnr::bundle::{Convention, DiagonalBundle};
use cubic_hnr::hnr::{compute_group, symbol_witness};
use cubic_hnr::poly::DEFAULT_VARS;

pub fn run_example() -> cubic_hnr::Result<()> {
    let v = DEFAULT_VARS;
    let b = DiagonalBundle::reference();
    let out = compute_group(&b, Convention::LaterOverEarlier)?;
    for (c, g) in &out.locus.three_planes {
        let (pts, _) = g.rational_support()?;
        let pts: Vec<String> = pts.iter().map(|(p, m)| format!("{m}{p}")).collect();
        println!("gamma on {c}: {}", pts.join(" + "));
    }
    for t in &out.condition_i {
        println!("condition (i) over {}: {}", t.site, t.verdict.name());
    }
    for (vec, verdict) in &out.group.verdicts {
        if verdict.name() != "NO" {
            println!("{vec:?}: {}", verdict.name());
        }
    }
    println!(
        "order {} generated by {:?}",
        out.group.order, out.group.generators
    );
    for g in &out.group.generators {
        if let Some(s) = symbol_witness(&b, &out.locus, g) {
            println!("witness for {g:?}: {}", s.to_string_with(&v));
        }
    }
    if let Some(c) = &out.certificate {
        println!("{}", c.conclusion);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> cubic_hnr::Result<()> {
    run_example()
}
