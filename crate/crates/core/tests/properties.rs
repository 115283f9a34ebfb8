use std::cmp::Ordering;

use proptest::prelude::*;

use braidlam::automaton::Dfa;
use braidlam::coords::oracle_equal;
use braidlam::lamination::Lamination;
use braidlam::relax::Strategy as Relaxation;
use braidlam::relax::{classify_geometric, classify_syntactic, dehornoy_cmp, rnf, trace};
use braidlam::verify::relaxation_violations;
use braidlam::{ArtinWord, PositivityClass};

fn braid(max_n: usize, max_len: usize) -> impl Strategy<Value = ArtinWord> {
    (2..=max_n).prop_flat_map(move |n| {
        let g = (1..n as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
        prop::collection::vec(g, 0..=max_len).prop_map(move |l| ArtinWord::new(n, l).unwrap())
    })
}

fn same_n_braids(k: usize, max_len: usize) -> impl Strategy<Value = Vec<ArtinWord>> {
    (2..=5usize).prop_flat_map(move |n| {
        let g = (1..n as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
        let word =
            prop::collection::vec(g, 0..=max_len).prop_map(move |l| ArtinWord::new(n, l).unwrap());
        prop::collection::vec(word, k)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_form_is_sound(b in braid(6, 12)) {
        let v = rnf(&b).unwrap();
        prop_assert!(v.is_right_oriented());
        prop_assert!(oracle_equal(&v.to_artin(), &b).unwrap());
        prop_assert_eq!(rnf(&v.to_artin()).unwrap(), v);
    }

    #[test]
    fn mirror_commutes_with_normal_form(b in braid(6, 12)) {
        prop_assert_eq!(rnf(&b.mirror()).unwrap(), rnf(&b).unwrap().mirror());
    }

    #[test]
    fn relaxation_invariants(b in braid(6, 12)) {
        prop_assert_eq!(relaxation_violations(&b).unwrap(), Vec::<String>::new());
        let t = trace(&b, Relaxation::Right).unwrap();
        prop_assert_eq!(*t.norms.last().unwrap(), 2 * (b.n + 1));
    }

    #[test]
    fn lamination_is_a_braid_invariant(b in braid(5, 10)) {
        let l = Lamination::of_word(&b).unwrap();
        prop_assert_eq!(l.validate(), Ok(()));
        prop_assert!(Lamination::of_word(&b.concat(&b.invert())).unwrap().is_trivial());
    }

    #[test]
    fn classification_trichotomy(b in braid(6, 10)) {
        let g = classify_geometric(&b).unwrap();
        let v = rnf(&b).unwrap();
        prop_assert_eq!(g, classify_syntactic(&v).unwrap());
        prop_assert_eq!(g == PositivityClass::Trivial, v.is_empty());
        let flipped = match g {
            PositivityClass::Positive(i) => PositivityClass::Negative(i),
            PositivityClass::Negative(i) => PositivityClass::Positive(i),
            PositivityClass::Trivial => PositivityClass::Trivial,
        };
        prop_assert_eq!(classify_geometric(&b.invert()).unwrap(), flipped);
    }

    #[test]
    fn order_is_total_and_left_invariant(t in same_n_braids(3, 8)) {
        let (a, b, c) = (&t[0], &t[1], &t[2]);
        let ab = dehornoy_cmp(a, b).unwrap();
        prop_assert_eq!(dehornoy_cmp(b, a).unwrap(), ab.reverse());
        prop_assert_eq!(ab == Ordering::Equal, oracle_equal(a, b).unwrap());
        prop_assert_eq!(dehornoy_cmp(&c.concat(a), &c.concat(b)).unwrap(), ab);
    }

    #[test]
    fn dfa_json_round_trip(
        n in 1usize..6,
        seed in prop::collection::vec((any::<u8>(), any::<bool>()), 10),
    ) {
        let alphabet = vec![-2, -1, 1, 2];
        let trans = (0..n)
            .map(|q| (0..4).map(|a| {
                let (x, live) = seed[(q + a) % seed.len()];
                if live { (x as usize + a) as u32 % n as u32 } else { u32::MAX }
            }).collect())
            .collect();
        let accepting = (0..n).map(|q| seed[q].1).collect();
        let d = Dfa { n: 3, alphabet, initial: 0, trans, accepting, labels: None };
        let back = Dfa::<i32>::from_json(&d.to_json()).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert!(back.minimize().language_equal(&d).unwrap());
    }
}
