use braidlam::coords::oracle_equal;
use braidlam::lamination::{Diamond, ExtendedShadowTable, Interval, Lamination, Theta};
use braidlam::relax::{rnf, trace, Strategy};
use braidlam::{ArtinWord, SlidingLetter, SlidingWord};

use Diamond::{Minus, Plus};
use Theta::{Down, Up};

fn w(n: usize, l: &[i32]) -> ArtinWord {
    ArtinWord::new(n, l.to_vec()).unwrap()
}

fn sw(n: usize, text: &str) -> SlidingWord {
    SlidingWord::parse(n, text).unwrap()
}

fn iv(lo: usize, hi: usize) -> Interval {
    Interval::new(lo, hi)
}

/// `Δ₄² σ₃σ₂σ₃σ₂σ₃`, `α(σ₂σ₃)³` and `γ = σ₁σ₂σ₃σ₁⁻¹σ₂⁻¹σ₃⁻¹`.
fn alpha_family() -> (ArtinWord, ArtinWord, ArtinWord) {
    let alpha = ArtinWord::garside(4).pow(2).concat(&w(4, &[3, 2, 3, 2, 3]));
    let alpha2 = alpha.concat(&w(4, &[2, 3]).pow(3));
    let gamma = w(4, &[1, 2, 3, -1, -2, -3]);
    (alpha, alpha2, gamma)
}

#[test]
fn three_strand_example_trace() {
    let t = trace(&w(4, &[2, 1, -3]), Strategy::Right).unwrap();
    assert_eq!(
        t.relaxing,
        vec![
            SlidingLetter::ll(2, 4),
            SlidingLetter::ul(1, 3),
            SlidingLetter::ul(2, 3)
        ]
    );
    assert!(t.norms.windows(2).all(|p| p[1] < p[0]));
    assert_eq!(
        rnf(&w(4, &[2, 1, -3])).unwrap(),
        sw(4, "UR(2,3) UR(1,3) LR(2,4)")
    );
}

#[test]
fn introductory_example() {
    assert_eq!(
        rnf(&w(3, &[2, 2, 1])).unwrap(),
        sw(3, "UR(2,3) UR(2,3) UR(1,3) LR(2,3)")
    );
}

#[test]
fn alpha_normal_forms() {
    let (alpha, alpha2, gamma) = alpha_family();
    let a = sw(4, "UR(3,4) UR(2,4) UR(1,4) UR(1,4) UR(1,4) UR(1,4) UR(2,4)");
    let a2 = a.concat(&sw(4, "UR(2,4)").pow(3));
    assert_eq!(rnf(&alpha).unwrap(), a);
    assert_eq!(rnf(&alpha2).unwrap(), a2);
    assert_eq!(
        rnf(&alpha.concat(&gamma)).unwrap(),
        sw(
            4,
            "UR(3,4) UR(2,4) UR(1,4) UR(1,4) UR(1,4) UR(1,3) UR(2,3) UR(1,3)"
        )
    );
    assert_eq!(
        rnf(&alpha2.concat(&gamma)).unwrap(),
        a2.concat(&sw(4, "UR(1,4) LR(1,4)"))
    );
}

#[test]
fn alpha_shadows_agree_but_extended_shadows_differ() {
    let (alpha, alpha2, _) = alpha_family();
    let (la, la2) = (
        Lamination::of_word(&alpha).unwrap(),
        Lamination::of_word(&alpha2).unwrap(),
    );
    assert_eq!(la.shadow(), la2.shadow());
    assert_ne!(la.extended_shadow(), la2.extended_shadow());
    // the drawn table, except (4,−,↑) which the drawing shows as {2,3}
    let s = la.shadow();
    let rows = [
        ((Minus, Up), [iv(1, 1), iv(2, 3), iv(3, 3), iv(2, 3)]),
        ((Plus, Up), [iv(1, 1), iv(3, 3), iv(3, 3), iv(2, 4)]),
        ((Minus, Down), [iv(1, 4), iv(2, 4), iv(3, 4), iv(4, 4)]),
        ((Plus, Down), [iv(2, 4), iv(3, 4), iv(4, 4), iv(4, 4)]),
    ];
    for ((d, t), row) in rows {
        for (i, &expected) in row.iter().enumerate() {
            assert_eq!(s.get(i + 1, d, t), expected, "({}, {d:?}, {t:?})", i + 1);
        }
    }
}

#[test]
fn sigma2_inverse_extended_shadow() {
    let s = Lamination::of_word(&w(3, &[-2])).unwrap().extended_shadow();
    let mut expected = ExtendedShadowTable::new(3);
    let full = Some(iv(0, 3));
    let cells = [
        (1, Minus, Up, (iv(0, 0), None)),
        (2, Minus, Up, (iv(0, 1), None)),
        (3, Minus, Up, (iv(3, 3), full)),
        (1, Plus, Up, (iv(0, 1), None)),
        (2, Plus, Up, (iv(3, 3), full)),
        (3, Plus, Up, (iv(3, 3), full)),
        (1, Minus, Down, (iv(0, 0), None)),
        (2, Minus, Down, (iv(2, 2), None)),
        (3, Minus, Down, (iv(2, 2), None)),
        (1, Plus, Down, (iv(0, 1), None)),
        (2, Plus, Down, (iv(2, 2), None)),
        (3, Plus, Down, (iv(0, 3), Some(iv(3, 3)))),
    ];
    for (i, d, t, v) in cells {
        expected.set(i, d, t, v);
    }
    assert_eq!(s, expected);
    assert_eq!(s.describe().lines().count(), 12);
}

#[test]
fn counterexample_relaxing_braids() {
    let ext = |b: &ArtinWord| {
        b.concat(&ArtinWord {
            n: b.n,
            letters: SlidingLetter::ur(1, 3).to_artin(),
        })
    };
    let beta2 = ArtinWord::garside(3).invert().concat(&w(3, &[-1, -2]));
    let cases = [
        (w(3, &[-1, -1]), SlidingLetter::ul(2, 3)),
        (beta2, SlidingLetter::ll(1, 2)),
        (w(5, &[-4, 3]), SlidingLetter::ll(2, 5)),
        (w(4, &[-3]), SlidingLetter::ll(2, 4)),
        (ArtinWord::garside(4), SlidingLetter::ul(1, 4)),
    ];
    for (beta, expected) in cases {
        let l = Lamination::of_word(&ext(&beta)).unwrap();
        assert_eq!(l.relaxing_braid().unwrap(), expected, "{beta}");
    }
}

#[test]
fn sign_tuple_example() {
    let beta = w(5, &[1, -3]);
    assert_eq!(rnf(&beta).unwrap(), sw(5, "UR(1,2) LR(3,4)"));
    let ext = |l: SlidingLetter| {
        beta.concat(&ArtinWord {
            n: 5,
            letters: l.to_artin(),
        })
    };
    for (l, expected) in [
        (SlidingLetter::ur(2, 5), sw(5, "LR(3,4) UR(1,5)")),
        (SlidingLetter::ur(4, 5), sw(5, "UR(1,2) LR(3,4) UR(4,5)")),
    ] {
        let b = ext(l);
        assert!(oracle_equal(&b, &expected.to_artin()).unwrap());
        assert_eq!(rnf(&b).unwrap(), expected);
    }
}

#[test]
fn single_generator_relaxation() {
    let l = Lamination::of_word(&w(3, &[2])).unwrap();
    assert_eq!(l.relaxing_braid().unwrap(), SlidingLetter::ul(2, 3));
    assert_eq!(l.rightmost_bigon_puncture(), Some(3));
}
