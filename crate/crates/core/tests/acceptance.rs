//! Acceptance criteria, one line each. Exits nonzero when any fails.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use common::*;
use cubic_hnr::bundle::{
    fiber_type, segre_minimality, three_planes_locus, Convention, DiagonalBundle, FiberType,
    Minimality,
};
use cubic_hnr::field::{is_cube_in_k, is_cube_in_kx, CubeClass, Curve, FactoredFn, PlanePoint};
use cubic_hnr::hnr::{compute_group, neg, HnrVector};
use cubic_hnr::poly::{parse_poly, HPoly, DEFAULT_VARS};
use cubic_hnr::report::Report;
use cubic_hnr::symbol::{
    is_zero_over_kp, is_zero_over_kx, ramification_divisor, reciprocity_check, residue_codim1,
    Symbol2,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cubic-hnr"))
}

fn manifest(name: &str) -> String {
    format!("{}/manifests/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn class(c: &Curve, form: &str) -> CubeClass {
    CubeClass::from_forms(c, &[(parse_poly(form, &DEFAULT_VARS).unwrap(), 1)]).unwrap()
}

fn demo_end_to_end() -> Outcome {
    let start = Instant::now();
    let out = bin()
        .args(["demo", "refv"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure!(out.status.code() == Some(0), "exit {:?}", out.status.code());
    ensure!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    let dir = std::env::temp_dir().join(format!("cubic-hnr-accept-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let path = dir.join("refv.json");
    let run = bin()
        .args(["demo", "refv", "--json"])
        .arg(&path)
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(run.status.success(), "json run failed");
    let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
    let report = Report::from_json(&text).map_err(|e| e.to_string())?;
    let hnr = report.hnr.ok_or("no hnr section")?;
    let locus: Vec<&str> = hnr.locus.iter().map(|(c, _)| c.as_str()).collect();
    ensure!(locus == ["x", "y", "z"], "locus {locus:?}");
    let expected = [
        [("[0:0:1]", 1), ("[0:1:0]", 2)],
        [("[0:0:1]", 2), ("[1:0:0]", 1)],
        [("[0:1:0]", 2), ("[1:0:0]", 1)],
    ];
    for ((c, g), e) in hnr.locus.iter().zip(expected) {
        let mut got = g.points.clone();
        got.sort();
        let mut want: Vec<(String, u8)> = e.iter().map(|(p, m)| (p.to_string(), *m)).collect();
        want.sort();
        ensure!(got == want, "gamma on {c}: {got:?}");
    }
    let m = report.minimality.ok_or("no minimality")?;
    ensure!(m.verdict == "MINIMAL", "minimality {}", m.verdict);
    ensure!(
        hnr.condition_i.iter().all(|r| r.verdict == "YES"),
        "condition (i) not YES everywhere"
    );
    ensure!(
        hnr.group.proven == vec![vec![-1, -1, 1], vec![0, 0, 0], vec![1, 1, -1]],
        "group {:?}",
        hnr.group.proven
    );
    ensure!(
        hnr.group.order == 3 && hnr.group.undecided.is_empty(),
        "order"
    );
    ensure!(hnr.certificate.is_some(), "no certificate");
    let _ = std::fs::remove_dir_all(&dir);
    Ok(format!("{} ms", elapsed.as_millis()))
}

fn coordinate_symbol_residues() -> Outcome {
    let s = Symbol2::new(ffn(&[("x", 1), ("z", -1)]), ffn(&[("y", 1), ("z", -1)]));
    for (i, form) in ["y^2*z", "x*z^2", "x^2*y"].iter().enumerate() {
        let c = Curve::coordinate(i);
        let r = residue_codim1(&s, &c).map_err(|e| e.to_string())?;
        ensure!(
            r.equals(&class(&c, form)).unwrap(),
            "residue on {c} is not class[{form}]"
        );
        let oracle = residue_divisor(&s, &c);
        ensure!(!oracle.is_empty(), "oracle says trivial on {c}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut n = 0;
    while n < 50 {
        let (l, m) = (rng.gen_range(-9i64..=9), rng.gen_range(-9i64..=9));
        if l == 0 || m == 0 {
            continue;
        }
        let c = Curve::line([1, l, m]);
        ensure!(
            residue_codim1(&s, &c).unwrap().is_trivial(),
            "nontrivial residue along x + {l}y + {m}z"
        );
        n += 1;
    }
    Ok("3 coordinate residues, 50 generic lines".into())
}

fn coordinate_restrictions_of_f() -> Outcome {
    let b = DiagonalBundle::reference();
    let f = &b.coeffs()[3];
    let fp = f.expand().ok_or("f does not expand")?;
    for i in 0..3 {
        let [p, q] = match i {
            0 => [1, 2],
            1 => [0, 2],
            _ => [0, 1],
        };
        let mut c = [0i64; 3];
        c[p] = 1;
        c[q] = 1;
        let cube = HPoly::linear(c.map(cubic_hnr::poly::rat)).pow(3);
        let diff = fp.sub(&cube).map_err(|e| e.to_string())?;
        ensure!(
            diff.terms().all(|(m, _)| m.0[i] >= 1),
            "f on coordinate line {i} is not a cube"
        );
        let line = Curve::coordinate(i);
        ensure!(
            is_cube_in_kx(f, &line).unwrap(),
            "is_cube_in_kx false on {line}"
        );
    }
    ensure!(!is_cube_in_k(f), "f reported a cube globally");
    Ok("f = cube on x, y, z".into())
}

fn segre_elements() -> Outcome {
    match segre_minimality(&DiagonalBundle::reference()).map_err(|e| e.to_string())? {
        Minimality::Minimal(lab) => {
            ensure!(lab.elements.len() == 6, "{} elements", lab.elements.len());
            let r = DiagonalBundle::reference();
            let [a, b, c, d] = r.coeffs();
            let listed = [
                a.clone(),
                b.clone(),
                c.clone(),
                d.clone(),
                a.mul(d),
                b.mul(d),
            ];
            for ((name, g, cube), e) in lab.elements.iter().zip(&listed) {
                ensure!(!cube, "{name} flagged as a cube");
                ensure!(!is_cube_in_k(g), "{name} is a cube");
                ensure!(
                    is_cube_in_k(&g.div(e)),
                    "{name} differs from the listed element"
                );
                ensure!(!is_cube_in_k(e), "listed element is a cube");
            }
            Ok(format!("labeling {:?}", lab.order))
        }
        other => Err(format!("verdict {}", other.name())),
    }
}

fn reciprocity_random() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut tested = 0;
    let mut points = 0;
    while tested < 250 {
        let s = random_symbol(&mut rng);
        let support = s.support();
        if support.is_empty() {
            continue;
        }
        let rep = reciprocity_check(&s)
            .map_err(|e| format!("{e} for {}", s.to_string_with(&DEFAULT_VARS)))?;
        ensure!(
            rep.holds(),
            "engine: {} fails",
            s.to_string_with(&DEFAULT_VARS)
        );
        let residues: BTreeMap<&Curve, BTreeMap<PlanePoint, i64>> = support
            .iter()
            .map(|c| (c, residue_divisor(&s, c)))
            .collect();
        for (c, class) in &rep.ramification {
            let (pts, rest) = class.rational_support().unwrap();
            ensure!(rest.is_empty(), "irrational residue on a line");
            let got: BTreeMap<PlanePoint, i64> =
                pts.into_iter().map(|(p, m)| (p, m as i64)).collect();
            ensure!(
                got == residues[c],
                "residue on {c} disagrees with the oracle"
            );
        }
        for p in crossing_points(&support) {
            let sum: i64 = support
                .iter()
                .filter(|c| c.contains(&p))
                .map(|c| residues[c].get(&p).copied().unwrap_or(0))
                .sum();
            ensure!(sum.rem_euclid(3) == 0, "oracle sum {sum} at {p}");
            points += 1;
        }
        let g2 = random_function(&mut rng);
        let prod = Symbol2::new(s.g.mul(&g2), s.h.clone());
        let second = Symbol2::new(g2, s.h.clone());
        let mut curves = prod.support();
        curves.extend(support.iter().cloned());
        curves.extend(second.support());
        curves.sort();
        curves.dedup();
        for c in &curves {
            let lhs = residue_codim1(&prod, c).unwrap();
            let rhs = residue_codim1(&s, c)
                .unwrap()
                .mul(&residue_codim1(&second, c).unwrap())
                .unwrap();
            ensure!(
                lhs.equals(&rhs).unwrap(),
                "ramification not multiplicative on {c}"
            );
        }
        tested += 1;
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    Ok(format!("{tested} symbols, {points} crossing points"))
}

fn local_vanishing() -> Outcome {
    let p = PlanePoint::from_ints([0, 0, 1]);
    let (x, y) = (Curve::coordinate(0), Curve::coordinate(1));
    let mono = |a: i64, b: i64, unit: i64| {
        FactoredFn::new(
            cubic_hnr::poly::rat(1),
            vec![
                (x.clone(), a),
                (y.clone(), b),
                (Curve::line([1, 1, 1]), unit),
                (Curve::coordinate(2), -a - b - unit),
            ],
        )
        .unwrap()
    };
    let mut n = 0;
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                for d in 0..3 {
                    for u in 0..2 {
                        let s = Symbol2::new(mono(a, b, u), mono(c, d, 0));
                        let det = (a * d - b * c).rem_euclid(3);
                        let zero = is_zero_over_kp(&s, &p).map_err(|e| e.to_string())?;
                        ensure!(zero == (det == 0), "({a},{b};{c},{d};{u}) det {det}");
                        if det != 0 {
                            let rx = residue_codim1(&s, &x).unwrap();
                            let ry = residue_codim1(&s, &y).unwrap();
                            ensure!(
                                !rx.is_trivial() || !ry.is_trivial(),
                                "rank 2 without residue"
                            );
                        }
                        n += 1;
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let e: [i64; 5] = [0; 5].map(|_| rng.gen_range(-5i64..=5));
        let s = Symbol2::new(mono(e[0], e[1], e[4].rem_euclid(2)), mono(e[2], e[3], 0));
        let det = (e[0] * e[3] - e[1] * e[2]).rem_euclid(3);
        let zero = is_zero_over_kp(&s, &p).map_err(|e| e.to_string())?;
        ensure!(zero == (det == 0), "random exponents {e:?}, det {det}");
        n += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut m = 0;
    while m < 250 {
        let s = random_symbol(&mut rng);
        let support = s.support();
        if support.is_empty() {
            continue;
        }
        let c = support[rng.gen_range(0..support.len())].clone();
        let zero = is_zero_over_kx(&s, &c).map_err(|e| e.to_string())?;
        ensure!(
            zero == residue_divisor(&s, &c).is_empty(),
            "K_x vanishing disagrees on {c} for {}",
            s.to_string_with(&DEFAULT_VARS)
        );
        m += 1;
    }
    Ok(format!("{n} monomial symbols, {m} curve tests"))
}

fn fiber_classification() -> Outcome {
    let conv = Convention::LaterOverEarlier;
    let mk = |items: [&[(&str, i64)]; 4]| DiagonalBundle::new(items.map(ffn)).unwrap();
    let r = DiagonalBundle::reference();
    ensure!(
        fiber_type(&r, &Curve::line([1, 1, 1]), conv).unwrap().kind == FiberType::Smooth,
        "smooth"
    );
    for i in 0..3 {
        let k = fiber_type(&r, &Curve::coordinate(i), conv).unwrap().kind;
        ensure!(
            matches!(k, FiberType::ThreePlanes(_)),
            "three planes on {i}: {k}"
        );
    }
    let cone = mk([&[("x", 1)], &[("y", 1)], &[("z", 1)], &[("x+y+z", 1)]]);
    ensure!(
        fiber_type(&cone, &Curve::coordinate(0), conv).unwrap().kind == FiberType::Cone,
        "cone"
    );
    let split = mk([&[("x", 1)], &[("x", 1)], &[("y", 1)], &[("y", 1)]]);
    let loc = three_planes_locus(&split, conv).unwrap();
    ensure!(
        loc.three_planes.is_empty()
            && loc
                .components
                .iter()
                .all(|f| f.kind == FiberType::SplitPlanes),
        "split planes"
    );
    let nr = mk([&[("x", 1)], &[("x", 1)], &[("x", 1)], &[("y", 1)]]);
    ensure!(
        fiber_type(&nr, &Curve::coordinate(0), conv).unwrap().kind == FiberType::NonReduced,
        "non-reduced"
    );
    let code = bin()
        .args(["hnr", "--manifest", &manifest("non_reduced")])
        .output()
        .map_err(|e| e.to_string())?
        .status
        .code();
    ensure!(code == Some(1), "non-reduced hnr exit {code:?}");
    let out = bin()
        .args(["fibers", "--manifest", &manifest("split_planes")])
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(out.status.code() == Some(0), "split fibers exit");
    let text = String::from_utf8_lossy(&out.stdout);
    ensure!(
        text.contains("SPLIT_PLANES"),
        "split component not reported"
    );
    Ok("all five types".into())
}

fn invariance() -> Outcome {
    let r = DiagonalBundle::reference();
    let base = compute_group(&r, Convention::LaterOverEarlier).unwrap();
    let twists = [[1, 1, 1], [1, -2, 3], [2, 0, -1], [0, 1, 5]];
    for (i, l) in twists.iter().enumerate() {
        let mut coeffs = r.coeffs().clone();
        let k = i % 4;
        coeffs[k] = coeffs[k].mul(&FactoredFn::curve(&Curve::line(*l), 3));
        let t = DiagonalBundle::new(coeffs).map_err(|e| e.to_string())?;
        let out = compute_group(&t, Convention::LaterOverEarlier).map_err(|e| e.to_string())?;
        ensure!(
            out.locus.three_planes == base.locus.three_planes,
            "locus moved under {l:?}"
        );
        ensure!(
            out.group.proven == base.group.proven,
            "group moved under {l:?}"
        );
        ensure!(
            out.minimality.name() == base.minimality.name(),
            "minimality moved under {l:?}"
        );
        ensure!(
            t.reduce_cubes().unwrap() == r,
            "reduction does not recover the bundle"
        );
        ensure!(
            out.condition_i.iter().all(|c| c.verdict.name() == "YES"),
            "condition (i) moved under {l:?}"
        );
        if let Minimality::Minimal(lab) = &out.minimality {
            ensure!(
                lab.all_non_cubes(),
                "a Segre element became a cube under {l:?}"
            );
        }
        for j in 0..3 {
            ensure!(
                is_cube_in_kx(&t.coeffs()[3], &Curve::coordinate(j)).unwrap(),
                "d is no longer a cube on line {j} under {l:?}"
            );
        }
    }
    let flipped = compute_group(&r, Convention::EarlierOverLater).unwrap();
    let mut negated: Vec<HnrVector> = base.group.proven.iter().map(|v| neg(v)).collect();
    negated.sort();
    ensure!(flipped.group.proven == negated, "flip does not negate");
    ensure!(
        flipped.group.order == 3,
        "flipped order {}",
        flipped.group.order
    );
    let ram = ramification_divisor(&Symbol2::new(r.coeffs()[0].clone(), r.coeffs()[1].clone()));
    ensure!(ram.is_ok(), "ramification of the coefficients");
    Ok(format!("{} twists, flipped convention", twists.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("reference demo end to end", demo_end_to_end),
        ("residues of (x/z, y/z)", coordinate_symbol_residues),
        (
            "f restricts to cubes on the coordinate lines",
            coordinate_restrictions_of_f,
        ),
        ("Segre elements are non-cubes", segre_elements),
        ("reciprocity on random line symbols", reciprocity_random),
        (
            "local vanishing at points and along curves",
            local_vanishing,
        ),
        ("fiber classification", fiber_classification),
        ("invariance under cube twists and convention", invariance),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let result =
            catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".to_string()));
        match result {
            Ok(note) => println!("criterion {} ({name}): PASS [{note}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL [{why}]", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
