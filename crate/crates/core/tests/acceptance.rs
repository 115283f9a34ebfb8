use std::cmp::Ordering;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use braidlam::automatic::{family_a, family_b, family_c, family_checks, family_d, search_witness};
use braidlam::automatic::{Mode, SearchBudget, SearchOutcome, Side};
use braidlam::automaton::{build_automaton, build_automaton_with, distinguishing_experiment};
use braidlam::automaton::{BuildOptions, Variant};
use braidlam::coords::oracle_equal;
use braidlam::lamination::{Diamond, ExtendedShadowTable, Interval, Lamination, Theta};
use braidlam::relax::{braid_equal, classify_geometric, classify_syntactic, dehornoy_cmp};
use braidlam::relax::{rnf, rnf_with, trace, PositivityClass, Strategy};
use braidlam::verify::{check_transitions, oracle_discrepancies, random_braids};
use braidlam::verify::{random_right_words, relaxation_violations, rewrite, right_words};
use braidlam::{ArtinWord, Result, SlidingLetter, SlidingWord};

const SEED_C4: u64 = 0xC4;
const SEED_C5: u64 = 0xC5;
const SEED_C6: u64 = 0xC6;
const SEED_C8: u64 = 0xC8;
const RANDOM_WORDS_C4: usize = 10_000;
const MAX_LEN_C4: usize = 8;
const BRAIDS_C5: usize = 10_000;
const MAX_N_C5: usize = 5;
const MAX_LEN_C5: usize = 12;
const PAIRS_C6: usize = 10_000;
const MAX_N_C6: usize = 7;
const MAX_LEN_C6: usize = 12;
const REWRITE_STEPS_C6: usize = 8;
const MAX_N_RELATIONS: usize = 7;
const FAMILY_K: usize = 6;
const TRIPLES_C8: usize = 1_000;
const COVERED_MAX: usize = 5;
const WITNESS_BOUND_N3: usize = 200;

const LIMIT_EXAMPLES: Duration = Duration::from_secs(1);
const LIMIT_C4: Duration = Duration::from_secs(300);
const LIMIT_C5: Duration = Duration::from_secs(600);
const LIMIT_C6: Duration = Duration::from_secs(300);
const LIMIT_C7: Duration = Duration::from_secs(1800);
const LIMIT_CORPUS: Duration = Duration::from_secs(1800);

type Check = Result<(bool, String)>;

fn w(n: usize, l: &[i32]) -> ArtinWord {
    ArtinWord::new(n, l.to_vec()).expect("valid word")
}

fn sw(n: usize, text: &str) -> SlidingWord {
    SlidingWord::parse(n, text).expect("valid sliding word")
}

fn iv(lo: usize, hi: usize) -> Interval {
    Interval::new(lo, hi)
}

fn with_letter(b: &ArtinWord, a: SlidingLetter) -> ArtinWord {
    b.concat(&ArtinWord {
        n: b.n,
        letters: a.to_artin(),
    })
}

/// Braids exercised by criteria 8 to 10: the sliding words of criterion 4,
/// the random braids of criterion 5 and both sides of the pairs of
/// criterion 6.
struct Corpus {
    c4: Vec<(usize, Vec<SlidingWord>)>,
    c5: Vec<ArtinWord>,
    c6: Vec<(ArtinWord, ArtinWord)>,
}

impl Corpus {
    fn new() -> Self {
        let mut c4 = vec![(2, right_words(2, 4)), (3, right_words(3, 4))];
        let mut n4 = right_words(4, 3);
        n4.extend(random_right_words(4, RANDOM_WORDS_C4, MAX_LEN_C4, SEED_C4));
        c4.push((4, n4));
        let c5 = random_braids(BRAIDS_C5, MAX_N_C5, MAX_LEN_C5, SEED_C5);
        let mut rng = ChaCha8Rng::seed_from_u64(SEED_C6);
        let c6 = random_braids(PAIRS_C6, MAX_N_C6, MAX_LEN_C6, SEED_C6)
            .into_iter()
            .map(|b| {
                let r = rewrite(&b, REWRITE_STEPS_C6, &mut rng);
                (b, r)
            })
            .collect();
        Corpus { c4, c5, c6 }
    }

    fn braids(&self) -> impl Iterator<Item = ArtinWord> + '_ {
        let c4 = self
            .c4
            .iter()
            .flat_map(|(_, ws)| ws.iter().map(|v| v.to_artin()));
        let c6 = self.c6.iter().flat_map(|(a, b)| [a.clone(), b.clone()]);
        c4.chain(self.c5.iter().cloned()).chain(c6)
    }
}

fn c1() -> Check {
    let mut bad = Vec::new();
    let t = trace(&w(4, &[2, 1, -3]), Strategy::Right)?;
    if t.relaxing
        != [
            SlidingLetter::ll(2, 4),
            SlidingLetter::ul(1, 3),
            SlidingLetter::ul(2, 3),
        ]
    {
        bad.push("relaxing letters of [2,1,-3]");
    }
    let alpha = ArtinWord::garside(4).pow(2).concat(&w(4, &[3, 2, 3, 2, 3]));
    let alpha2 = alpha.concat(&w(4, &[2, 3]).pow(3));
    let gamma = w(4, &[1, 2, 3, -1, -2, -3]);
    let a = sw(4, "UR(3,4) UR(2,4) UR(1,4) UR(1,4) UR(1,4) UR(1,4) UR(2,4)");
    let a2 = a.concat(&sw(4, "UR(2,4)").pow(3));
    let cases = [
        (
            "[2,1,-3]",
            w(4, &[2, 1, -3]),
            sw(4, "UR(2,3) UR(1,3) LR(2,4)"),
        ),
        (
            "[2,2,1]",
            w(3, &[2, 2, 1]),
            sw(3, "UR(2,3) UR(2,3) UR(1,3) LR(2,3)"),
        ),
        ("alpha", alpha.clone(), a),
        (
            "alpha gamma",
            alpha.concat(&gamma),
            sw(
                4,
                "UR(3,4) UR(2,4) UR(1,4) UR(1,4) UR(1,4) UR(1,3) UR(2,3) UR(1,3)",
            ),
        ),
        (
            "alpha' gamma",
            alpha2.concat(&gamma),
            a2.concat(&sw(4, "UR(1,4) LR(1,4)")),
        ),
    ];
    for (name, b, expected) in &cases {
        if rnf(b)? != *expected {
            bad.push(name);
        }
    }
    Ok((
        bad.is_empty(),
        format!("{} normal forms, mismatches {bad:?}", cases.len()),
    ))
}

fn c2() -> Check {
    use Diamond::{Minus, Plus};
    use Theta::{Down, Up};
    let s = Lamination::of_word(&w(3, &[-2]))?.extended_shadow();
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
    let mut expected = ExtendedShadowTable::new(3);
    for (i, d, t, v) in cells {
        expected.set(i, d, t, v);
    }
    let wrong = cells
        .iter()
        .map(|&(i, d, t, v)| {
            let (a, b) = s.get(i, d, t);
            (a != v.0) as usize + (b != v.1) as usize
        })
        .sum::<usize>();
    Ok((
        s == expected && wrong == 0,
        format!("24 entries, {wrong} wrong"),
    ))
}

fn c3() -> Check {
    let cases = [
        (w(3, &[-1, -1]), SlidingLetter::ul(2, 3)),
        (
            ArtinWord::garside(3).invert().concat(&w(3, &[-1, -2])),
            SlidingLetter::ll(1, 2),
        ),
        (w(5, &[-4, 3]), SlidingLetter::ll(2, 5)),
        (w(4, &[-3]), SlidingLetter::ll(2, 4)),
        (ArtinWord::garside(4), SlidingLetter::ul(1, 4)),
    ];
    let mut got = Vec::new();
    for (b, _) in &cases {
        got.push(Lamination::of_word(&with_letter(b, SlidingLetter::ur(1, 3)))?.relaxing_braid()?);
    }
    let ok = cases.iter().zip(&got).all(|((_, e), g)| e == g);
    let shown: Vec<String> = got.iter().map(|g| g.to_string()).collect();
    Ok((ok, format!("relaxing braids {}", shown.join(" "))))
}

fn c4(corpus: &Corpus) -> Check {
    let mut parts = Vec::new();
    let mut total = 0;
    for (n, words) in &corpus.c4 {
        let a = build_automaton(*n)?.minimize();
        let bad = oracle_discrepancies(&a, Strategy::Right, words)?;
        total += bad.len();
        parts.push(format!(
            "n={n}: {} words, {} discrepancies",
            words.len(),
            bad.len()
        ));
    }
    Ok((total == 0, parts.join("; ")))
}

fn c5(corpus: &Corpus) -> Check {
    let (mut pairs, mut dec_true, mut dec_bad, mut comp_bad) = (0, 0, 0, 0);
    for b in &corpus.c5 {
        let c = check_transitions(b, Variant::Right)?;
        pairs += c.pairs;
        dec_true += c.dec_true;
        dec_bad += c.dec_mismatches.len();
        comp_bad += c.comp_mismatches.len();
    }
    Ok((
        dec_bad == 0 && comp_bad == 0,
        format!("{pairs} (braid, letter) pairs, {dec_true} transitions; dec {dec_bad} / comp {comp_bad} discrepancies"),
    ))
}

fn relations(n: usize) -> Vec<(ArtinWord, ArtinWord)> {
    let mut out = Vec::new();
    for i in 1..n as i32 {
        out.push((w(n, &[i, -i]), ArtinWord::empty(n)));
        out.push((w(n, &[-i, i]), ArtinWord::empty(n)));
        for j in i + 1..n as i32 {
            if j == i + 1 {
                out.push((w(n, &[i, j, i]), w(n, &[j, i, j])));
            } else {
                out.push((w(n, &[i, j]), w(n, &[j, i])));
            }
        }
    }
    out
}

fn c6(corpus: &Corpus) -> Check {
    let agree = |a: &ArtinWord, b: &ArtinWord| -> Result<bool> {
        Ok((rnf(a)? == rnf(b)?) == oracle_equal(a, b)?)
    };
    let rels: Vec<_> = (2..=MAX_N_RELATIONS).flat_map(relations).collect();
    let mut bad_rel = 0;
    for (a, b) in &rels {
        if !agree(a, b)? || !braid_equal(a, b)? {
            bad_rel += 1;
        }
    }
    let mut bad_pairs = 0;
    for (a, b) in &corpus.c6 {
        if !agree(a, b)? || !braid_equal(a, b)? {
            bad_pairs += 1;
        }
    }
    let s1 = w(4, &[1]);
    let delta = ArtinWord::garside(4);
    let mut bad_ids = Vec::new();
    for k in 1..=FAMILY_K {
        let (lhs, rhs) = (s1.concat(&family_a(k).to_artin()), family_b(k).to_artin());
        if !braid_equal(&lhs, &rhs)? || !oracle_equal(&lhs, &rhs)? {
            bad_ids.push(format!("a{k}"));
        }
    }
    for k in 3..=FAMILY_K {
        let (lhs, rhs) = (
            family_c(k).to_artin().concat(&delta),
            family_d(k).to_artin(),
        );
        if !braid_equal(&lhs, &rhs)? || !oracle_equal(&lhs, &rhs)? {
            bad_ids.push(format!("c{k}"));
        }
    }
    Ok((
        bad_rel + bad_pairs + bad_ids.len() == 0,
        format!(
            "{} relations ({bad_rel} bad), {} rewrite pairs ({bad_pairs} bad), family identities bad {bad_ids:?}",
            rels.len(),
            corpus.c6.len()
        ),
    ))
}

fn c7() -> Check {
    let mut parts = Vec::new();
    let mut ok = true;
    for n in 3..=5 {
        let t = Instant::now();
        let raw = build_automaton(n)?;
        let min = raw.minimize();
        let report = distinguishing_experiment(n, &min)?;
        let bound = 1usize << report.m;
        // 2^{20(n+1)} exceeds every usize, so termination of the build is the whole check
        let pass = report.passed() && min.states() >= bound;
        ok &= pass;
        parts.push(format!(
            "n={n}: raw {} minimal {} >= 2^{} ({:.1}s)",
            raw.states(),
            min.states(),
            report.m,
            t.elapsed().as_secs_f64()
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn flip(c: PositivityClass) -> PositivityClass {
    match c {
        PositivityClass::Positive(i) => PositivityClass::Negative(i),
        PositivityClass::Negative(i) => PositivityClass::Positive(i),
        PositivityClass::Trivial => PositivityClass::Trivial,
    }
}

fn c8(corpus: &Corpus) -> Check {
    let (mut count, mut bad_class) = (0, 0);
    for b in corpus.braids() {
        count += 1;
        let g = classify_geometric(&b)?;
        let v = rnf(&b)?;
        if g != classify_syntactic(&v)? || (g == PositivityClass::Trivial) != v.is_empty() {
            bad_class += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_C8);
    let mut bad_order = 0;
    for _ in 0..TRIPLES_C8 {
        let n = rng.gen_range(2..=5);
        let mut word = || {
            let len = rng.gen_range(0..=8);
            braidlam::word::random_word_with(n, len, &mut rng)
        };
        let (a, b, c) = (word(), word(), word());
        let ab = dehornoy_cmp(&a, &b)?;
        let total = dehornoy_cmp(&b, &a)? == ab.reverse()
            && (ab == Ordering::Equal) == oracle_equal(&a, &b)?
            && classify_geometric(&a.invert().concat(&b))?
                == flip(classify_geometric(&b.invert().concat(&a))?);
        let invariant = dehornoy_cmp(&c.concat(&a), &c.concat(&b))? == ab;
        if !(total && invariant) {
            bad_order += 1;
        }
    }
    Ok((
        bad_class + bad_order == 0,
        format!("{count} braids ({bad_class} violations), {TRIPLES_C8} order triples ({bad_order} violations)"),
    ))
}

fn c9(corpus: &Corpus) -> Check {
    let (mut count, mut bad) = (0, 0);
    let mut first = None;
    for b in corpus.braids() {
        count += 1;
        let v: Vec<String> = relaxation_violations(&b)?
            .into_iter()
            .filter(|m| m.starts_with("norms") || m.starts_with("prefix"))
            .collect();
        if !v.is_empty() {
            bad += 1;
            first.get_or_insert_with(|| format!(" e.g. {b}: {}", v.join(", ")));
        }
    }
    Ok((
        bad == 0,
        format!(
            "{count} braids, {bad} violations{}",
            first.unwrap_or_default()
        ),
    ))
}

/// `UR(2,3)^k · UR(5,6)^ℓ · LR(1,2) · LR(4,5)`; the all-lower reading is
/// reported alongside.
fn covered_word(upper: bool, k: usize, l: usize) -> SlidingWord {
    let q = if upper { "UR" } else { "LR" };
    sw(6, &format!("{q}(2,3)"))
        .pow(k)
        .concat(&sw(6, &format!("{q}(5,6)")).pow(l))
        .concat(&sw(6, "LR(1,2) LR(4,5)"))
}

fn c10(corpus: &Corpus) -> Check {
    let mut mirror_bad = 0;
    let mut count = 0;
    for b in corpus.braids() {
        count += 1;
        if rnf(&b.mirror())? != rnf(&b)?.mirror() {
            mirror_bad += 1;
        }
    }
    let opts = BuildOptions {
        variant: Variant::SimpleRight,
        ..Default::default()
    };
    let simple = build_automaton_with(3, opts)?.minimize();
    let simple_bad =
        oracle_discrepancies(&simple, Strategy::SimpleRight, &right_words(3, 4))?.len();
    let mut covered = Vec::new();
    for upper in [true, false] {
        let mut off = Vec::new();
        for k in 0..=COVERED_MAX {
            for l in 0..=COVERED_MAX {
                let v = covered_word(upper, k, l);
                let normal = rnf_with(&v.to_artin(), Strategy::RightCovered)? == v;
                if normal != (k <= l) {
                    off.push((k, l));
                }
            }
        }
        covered.push(off);
    }
    let cells = (COVERED_MAX + 1) * (COVERED_MAX + 1);
    let ok = mirror_bad == 0 && simple_bad == 0 && covered[0].is_empty();
    Ok((
        ok,
        format!(
            "mirror {count} braids ({mirror_bad} bad); simple-right n=3 ({simple_bad} discrepancies); \
             right-covered pattern with upper powers {}/{cells} cells, off at {:?}; all-lower reading {}/{cells}",
            cells - covered[0].len(),
            covered[0],
            cells - covered[1].len()
        ),
    ))
}

fn c11() -> Check {
    let sync = |side| Mode {
        synchronous: true,
        side,
    };
    let budget = SearchBudget::default();
    let mut parts = Vec::new();
    let mut ok = true;
    for (n, side, bound) in [
        (2, Side::Left, usize::MAX),
        (2, Side::Right, usize::MAX),
        (3, Side::Left, WITNESS_BOUND_N3),
    ] {
        let mode = sync(side);
        match search_witness(n, mode, budget)? {
            SearchOutcome::Found { radius, size, .. } => {
                ok &= size < bound;
                parts.push(format!("n={n} {mode}: |T|={size} (radius {radius})"));
            }
            SearchOutcome::Exhausted {
                radius,
                size,
                frontier,
                reason,
            } => {
                ok = false;
                parts.push(format!(
                    "n={n} {mode}: exhausted at radius {radius}, |T|={size}, frontier {frontier}: {reason}"
                ));
            }
        }
    }
    let fam = family_checks(FAMILY_K)?;
    ok &= fam.passed();
    parts.push(format!(
        "families k<={FAMILY_K}: {} failures",
        fam.failures.len()
    ));
    Ok((ok, parts.join("; ")))
}

fn report(id: usize, name: &str, limit: Duration, check: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let result = check();
    let elapsed = start.elapsed();
    let (pass, detail) = match result {
        Ok((ok, detail)) => (ok && elapsed <= limit, detail),
        Err(e) => (false, format!("error: {e}")),
    };
    println!(
        "{} criterion {id:>2} {name} [{:.2}s, limit {}s]: {detail}",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    pass
}

fn main() -> ExitCode {
    let corpus = Corpus::new();
    let results = [
        report(1, "worked examples", LIMIT_EXAMPLES, c1),
        report(2, "shadow table", LIMIT_EXAMPLES, c2),
        report(3, "relaxing braids", LIMIT_EXAMPLES, c3),
        report(4, "automaton vs normal form", LIMIT_C4, || c4(&corpus)),
        report(5, "dec/comp", LIMIT_C5, || c5(&corpus)),
        report(6, "word problem", LIMIT_C6, || c6(&corpus)),
        report(7, "size bounds", LIMIT_C7, c7),
        report(8, "positivity", LIMIT_CORPUS, || c8(&corpus)),
        report(9, "monotonicity", LIMIT_CORPUS, || c9(&corpus)),
        report(10, "variants", LIMIT_CORPUS, || c10(&corpus)),
        report(11, "automaticity", LIMIT_CORPUS, c11),
    ];
    let failed = results.iter().filter(|&&p| !p).count();
    println!("{} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
