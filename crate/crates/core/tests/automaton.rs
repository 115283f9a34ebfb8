use std::sync::OnceLock;

use braidlam::automatic::{family_a, family_b, family_c, family_d};
use braidlam::automaton::{
    build_automaton, build_automaton_with, distinguishing_experiment, BuildOptions, NormalFormDfa,
    Variant,
};
use braidlam::verify::{oracle_discrepancies, random_accepted_words, right_words};
use braidlam::{SlidingWord, Strategy};

fn a4() -> &'static (NormalFormDfa, NormalFormDfa) {
    static CELL: OnceLock<(NormalFormDfa, NormalFormDfa)> = OnceLock::new();
    CELL.get_or_init(|| {
        let raw = build_automaton(4).unwrap();
        let min = raw.minimize();
        (raw, min)
    })
}

fn sw(n: usize, text: &str) -> SlidingWord {
    SlidingWord::parse(n, text).unwrap()
}

#[test]
fn state_counts() {
    for (n, raw, min) in [(2, 7, 3), (3, 133, 21)] {
        let a = build_automaton(n).unwrap();
        assert_eq!(a.states(), raw, "n={n}");
        assert_eq!(a.minimize().states(), min, "n={n}");
    }
    let (raw, min) = a4();
    assert_eq!((raw.states(), min.states()), (3507, 207));
}

#[test]
fn worked_words_are_accepted() {
    let (_, min) = a4();
    assert!(min
        .accepts(&sw(4, "UR(2,3) UR(1,3) LR(2,4)").letters)
        .unwrap());
    let a2 = sw(
        4,
        "UR(3,4) UR(2,4) UR(1,4) UR(1,4) UR(1,4) UR(1,4) UR(2,4) UR(2,4) UR(2,4) UR(2,4)",
    );
    assert!(min.accepts(&a2.letters).unwrap());
    assert!(min
        .accepts(&a2.concat(&sw(4, "UR(1,4) LR(1,4)")).letters)
        .unwrap());
    assert!(!min.accepts(&sw(4, "LR(1,2) UR(1,2)").letters).unwrap());
    assert!(!min.accepts(&sw(4, "UR(1,2) LR(1,2)").letters).unwrap());
}

#[test]
fn family_words_are_accepted() {
    let (_, min) = a4();
    for k in 1..=6 {
        assert!(min.accepts(&family_a(k).letters).unwrap(), "a_{k}");
        assert!(min.accepts(&family_b(k).letters).unwrap(), "b_{k}");
    }
    for k in 3..=6 {
        assert!(min.accepts(&family_c(k).letters).unwrap(), "c_{k}");
        assert!(min.accepts(&family_d(k).letters).unwrap(), "d_{k}");
    }
}

#[test]
fn minimization_preserves_the_language() {
    let (raw, min) = a4();
    assert!(raw.language_equal(min).unwrap());
    assert_eq!(min.minimize().states(), min.states());
    let a3 = build_automaton(3).unwrap().minimize();
    let mut cut = a3.clone();
    cut.accepting[a3.step(a3.initial, 0) as usize] = false;
    assert!(!a3.language_equal(&cut).unwrap());
    assert!(a3.distinguishing_word(&cut).unwrap().is_some());
}

#[test]
fn build_is_deterministic() {
    let a = build_automaton(3).unwrap();
    let b = build_automaton(3).unwrap();
    assert_eq!(a, b);
}

#[test]
fn json_and_dot_round_trip() {
    let a = build_automaton(3).unwrap().minimize();
    let back = NormalFormDfa::from_json(&a.to_json()).unwrap();
    assert_eq!(back, a);
    let dot = a.to_dot();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("doublecircle").count(), a.states());
    assert!(NormalFormDfa::from_json("{\"n\": 3}").is_err());
    assert!(NormalFormDfa::from_json("not json").is_err());
}

#[test]
fn labelled_build_carries_shadows() {
    let opts = BuildOptions {
        labels: true,
        ..Default::default()
    };
    let a = build_automaton_with(2, opts).unwrap();
    let labels = a.labels.as_ref().unwrap();
    assert_eq!(labels.len(), a.states());
    assert!(labels.iter().all(|l| l.lines().count() == 8));
}

#[test]
fn budget_is_enforced() {
    let opts = BuildOptions {
        budget: 50,
        ..Default::default()
    };
    assert!(build_automaton_with(3, opts).is_err());
    assert!(build_automaton(1).is_err());
}

#[test]
fn exhaustive_oracle_small() {
    for n in [2, 3] {
        let a = build_automaton(n).unwrap().minimize();
        let bad = oracle_discrepancies(&a, Strategy::Right, &right_words(n, 4)).unwrap();
        assert!(bad.is_empty(), "n={n}: {bad:?}");
    }
}

#[test]
fn accepted_walks_are_normal() {
    let (_, min) = a4();
    let words = random_accepted_words(min, 400, 10, 3);
    assert!(oracle_discrepancies(min, Strategy::Right, &words)
        .unwrap()
        .is_empty());
}

#[test]
fn simple_right_automaton() {
    let opts = BuildOptions {
        variant: Variant::SimpleRight,
        ..Default::default()
    };
    let a = build_automaton_with(3, opts).unwrap();
    assert_eq!((a.states(), a.minimize().states()), (133, 17));
    let bad =
        oracle_discrepancies(&a.minimize(), Strategy::SimpleRight, &right_words(3, 4)).unwrap();
    assert!(bad.is_empty(), "{bad:?}");
    assert!(!a.language_equal(&build_automaton(3).unwrap()).unwrap());
}

#[test]
fn sign_tuples_need_distinct_states() {
    for n in [3, 4] {
        let a = build_automaton(n).unwrap().minimize();
        let r = distinguishing_experiment(n, &a).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(a.states() >= 1 << r.m);
    }
}
