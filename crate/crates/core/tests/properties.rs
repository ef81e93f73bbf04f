//! Engine invariants checked against the line oracles.

mod common;

use common::*;
use cubic_hnr::symbol::{is_zero_over_kx, reciprocity_check, residue_codim1, Symbol2};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn symbol(seed: u64) -> Symbol2 {
    random_symbol(&mut ChaCha8Rng::seed_from_u64(seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reciprocity_holds(seed in any::<u64>()) {
        let s = symbol(seed);
        prop_assert!(reciprocity_check(&s).unwrap().holds());
    }

    #[test]
    fn residues_match_oracle(seed in any::<u64>()) {
        let s = symbol(seed);
        for c in s.support() {
            let oracle = residue_divisor(&s, &c);
            prop_assert_eq!(is_zero_over_kx(&s, &c).unwrap(), oracle.is_empty());
            let (pts, _) = residue_codim1(&s, &c).unwrap().rational_support().unwrap();
            let got: std::collections::BTreeMap<_, i64> =
                pts.into_iter().map(|(p, m)| (p, m as i64)).collect();
            prop_assert_eq!(got, oracle);
        }
    }

    #[test]
    fn swapping_entries_inverts_residues(seed in any::<u64>()) {
        let s = symbol(seed);
        let t = Symbol2::new(s.h.clone(), s.g.clone());
        for c in s.support() {
            let a = residue_codim1(&s, &c).unwrap();
            let b = residue_codim1(&t, &c).unwrap();
            prop_assert!(a.mul(&b).unwrap().is_trivial());
        }
    }

    #[test]
    fn symbol_with_itself_is_trivial(seed in any::<u64>()) {
        let s = symbol(seed);
        let t = Symbol2::new(s.g.clone(), s.g.clone());
        for c in t.support() {
            prop_assert!(residue_codim1(&t, &c).unwrap().is_trivial());
        }
    }
}
