// Loading a manifest and producing the machine and text reports.

use cubic_hnr::bundle::{three_planes_locus, Convention};
use cubic_hnr::manifest::Manifest;
use cubic_hnr::report::{bundle_report, fibers_report, render_text, Report};

const MANIFEST: &str = r#"{
  "variables": ["u", "v", "w"],
  "coefficients": {
    "a": { "factors": [["u", 1], ["w", 2]] },
    "b": { "factors": [["v", 2], ["w", 1]] },
    "c": { "factors": [["u", 1], ["v", 2]] },
    "d": { "scalar": 2, "factors": [["u^2 + v^2 - 2*w^2", 1], ["u + v + w", 1]] }
  },
  "points": { "u^2 + v^2 - 2*w^2": [1, 1, 1] }
}"#;

pub fn run_example() -> cubic_hnr::Result<()> {
    let m = Manifest::parse(MANIFEST)?;
    let b = m.bundle()?;
    let vars = m.vars()?;
    let conv = m.options.convention.unwrap_or_default();
    let mut report = Report::new("fibers");
    report.bundle = Some(bundle_report(&b, &vars, conv));
    report.fibers = Some(fibers_report(&b, &vars, conv)?);
    print!("{}", render_text(&report));
    let locus = three_planes_locus(&b, Convention::EarlierOverLater)?;
    println!("three-planes components: {}", locus.three_planes.len());
    let json = report.to_json();
    assert_eq!(Report::from_json(&json)?, report);
    println!("json report: {} bytes", json.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> cubic_hnr::Result<()> {
    run_example()
}
