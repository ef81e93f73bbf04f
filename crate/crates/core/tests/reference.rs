//! Facts about the reference bundle, checked from first principles.

mod common;

use common::*;
use cubic_hnr::bundle::{
    sb_normal_form_over, segre_minimality, three_planes_locus, Convention, DiagonalBundle, Over,
};
use cubic_hnr::field::{Curve, PlanePoint};
use cubic_hnr::hnr::{compute_group, condition_ii, symbol_witness, Verdict};
use cubic_hnr::symbol::residue_codim1;

#[test]
fn gammas_are_unit_ratios() {
    let b = DiagonalBundle::reference();
    let loc = three_planes_locus(&b, Convention::LaterOverEarlier).unwrap();
    // d over the other unit, with f replaced by the cube it restricts to.
    let ratios = [
        ffn(&[("y + z", 3), ("y", -2), ("z", -1)]),
        ffn(&[("x + z", 3), ("x", -1), ("z", -2)]),
        ffn(&[("x + y", 3), ("x", -1), ("y", -2)]),
    ];
    for ((c, g), u) in loc.three_planes.iter().zip(ratios) {
        let want = divisor_on_line(&u, c);
        let (pts, rest) = g.rational_support().unwrap();
        assert!(rest.is_empty());
        let got: std::collections::BTreeMap<PlanePoint, i64> =
            pts.into_iter().map(|(p, m)| (p, m as i64)).collect();
        let want: std::collections::BTreeMap<PlanePoint, i64> = want
            .into_iter()
            .map(|(p, e)| (p, e.rem_euclid(3)))
            .collect();
        assert_eq!(got, want, "gamma on {c}");
    }
}

#[test]
fn no_global_normal_form() {
    let b = DiagonalBundle::reference();
    assert!(!sb_normal_form_over(&b, &Over::Global).unwrap().is_yes());
    assert_eq!(segre_minimality(&b).unwrap().name(), "MINIMAL");
}

#[test]
fn single_gamma_fails_at_a_vertex() {
    let b = DiagonalBundle::reference();
    let loc = three_planes_locus(&b, Convention::LaterOverEarlier).unwrap();
    let r = condition_ii(&b, &loc, &[1, 0, 0]).unwrap();
    match r.verdict {
        Verdict::No(why) => assert!(why.contains("[0:0:1]"), "{why}"),
        v => panic!("expected NO, got {}", v.name()),
    }
}

#[test]
fn witnesses_ramify_exactly_on_the_locus() {
    let b = DiagonalBundle::reference();
    let out = compute_group(&b, Convention::LaterOverEarlier).unwrap();
    for v in &out.group.proven {
        if v.iter().all(|&a| a == 0) {
            continue;
        }
        let s = symbol_witness(&b, &out.locus, v).expect("witness");
        for (i, (c, g)) in out.locus.three_planes.iter().enumerate() {
            let want = g.pow(v[i] as i64);
            assert!(residue_codim1(&s, c).unwrap().equals(&want).unwrap());
        }
        for c in s.support() {
            if !out.locus.three_planes.iter().any(|(d, _)| d == &c) {
                assert!(residue_codim1(&s, &c).unwrap().is_trivial());
            }
        }
    }
    assert!(out
        .locus
        .three_planes
        .iter()
        .all(|(c, _)| c != &Curve::line([1, 1, 1])));
}
