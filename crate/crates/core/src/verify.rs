//! Cross-checks between the automaton, the geometric engine and the
//! coordinate oracle, shared by the test suites and the command line.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::automaton::{comp, dec, NormalFormDfa, Variant, DEAD};
use crate::coords::oracle_equal;
use crate::error::Result;
use crate::lamination::Lamination;
use crate::relax::{classify_geometric, classify_syntactic, relax_lamination, rnf_with, Strategy};
use crate::word::{random_word_with, ArtinWord, SlidingLetter, SlidingWord};

/// Every right-oriented sliding word of length at most `max_len`.
pub fn right_words(n: usize, max_len: usize) -> Vec<SlidingWord> {
    let alphabet = SlidingLetter::right_alphabet(n);
    let mut out = vec![SlidingWord::empty(n)];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for w in &layer {
            for &a in &alphabet {
                let mut v: Vec<SlidingLetter> = Vec::clone(w);
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().map(|v| SlidingWord {
            n,
            letters: v.clone(),
        }));
        layer = next;
    }
    out
}

/// Uniform random right-oriented words with lengths uniform in `0..=max_len`.
pub fn random_right_words(n: usize, count: usize, max_len: usize, seed: u64) -> Vec<SlidingWord> {
    let alphabet = SlidingLetter::right_alphabet(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            SlidingWord {
                n,
                letters: (0..len)
                    .map(|_| alphabet[rng.gen_range(0..alphabet.len())])
                    .collect(),
            }
        })
        .collect()
}

/// Random accepted words: walks through the automaton choosing uniformly
/// among defined transitions.
pub fn random_accepted_words(
    dfa: &NormalFormDfa,
    count: usize,
    max_len: usize,
    seed: u64,
) -> Vec<SlidingWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            let mut q = dfa.initial;
            let mut letters = Vec::with_capacity(len);
            for _ in 0..len {
                let moves: Vec<usize> = (0..dfa.alphabet.len())
                    .filter(|&a| dfa.step(q, a) != DEAD)
                    .collect();
                if moves.is_empty() {
                    break;
                }
                let a = moves[rng.gen_range(0..moves.len())];
                letters.push(dfa.alphabet[a]);
                q = dfa.step(q, a);
            }
            SlidingWord { n: dfa.n, letters }
        })
        .collect()
}

/// Words on which automaton acceptance and "equals its own normal form"
/// disagree.
pub fn oracle_discrepancies(
    dfa: &NormalFormDfa,
    strategy: Strategy,
    words: &[SlidingWord],
) -> Result<Vec<SlidingWord>> {
    let flags: Vec<Result<bool>> = words
        .par_iter()
        .map(|v| {
            let accepted = dfa.accepts(&v.letters)?;
            let normal = rnf_with(&v.to_artin(), strategy)? == *v;
            Ok(accepted != normal)
        })
        .collect();
    let mut out = Vec::new();
    for (v, f) in words.iter().zip(flags) {
        if f? {
            out.push(v.clone());
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TransitionCheck {
    pub pairs: usize,
    pub dec_true: usize,
    pub dec_mismatches: Vec<(ArtinWord, SlidingLetter)>,
    pub comp_mismatches: Vec<(ArtinWord, SlidingLetter)>,
}

/// Compares `dec` and `comp` with the geometric engine for `β` and every
/// right-oriented letter.
pub fn check_transitions(beta: &ArtinWord, variant: Variant) -> Result<TransitionCheck> {
    let lam = Lamination::of_word(beta)?;
    let s = lam.extended_shadow();
    let mut out = TransitionCheck::default();
    for a in SlidingLetter::right_alphabet(beta.n) {
        out.pairs += 1;
        let after = lam.apply_word(&ArtinWord {
            n: beta.n,
            letters: a.to_artin(),
        })?;
        let geometric =
            !after.is_trivial() && variant.strategy().plan(&after)?.letter == a.inverse();
        let d = dec(&s, a, variant)?;
        if d != geometric {
            out.dec_mismatches.push((beta.clone(), a));
        }
        if d {
            out.dec_true += 1;
            if comp(&s, a, variant)? != after.extended_shadow() {
                out.comp_mismatches.push((beta.clone(), a));
            }
        }
    }
    Ok(out)
}

/// Seeded random braids with `n` uniform in `2..=max_n` and lengths uniform
/// in `0..=max_len`.
pub fn random_braids(count: usize, max_n: usize, max_len: usize, seed: u64) -> Vec<ArtinWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_n);
            let len = rng.gen_range(0..=max_len);
            random_word_with(n, len, &mut rng)
        })
        .collect()
}

/// Randomly rewrites a word with braid relations and free cancellations,
/// keeping its braid.
pub fn rewrite<R: Rng>(w: &ArtinWord, steps: usize, rng: &mut R) -> ArtinWord {
    let n = w.n as i32;
    let mut v = w.letters.clone();
    for _ in 0..steps {
        let pos = rng.gen_range(0..=v.len());
        match rng.gen_range(0..4) {
            0 if n > 1 => {
                let g = rng.gen_range(1..n) * if rng.gen_bool(0.5) { 1 } else { -1 };
                v.splice(pos..pos, [g, -g]);
            }
            1 if pos + 1 < v.len() => {
                let (a, b) = (v[pos], v[pos + 1]);
                if (a.abs() - b.abs()).abs() >= 2 {
                    v.swap(pos, pos + 1);
                } else if a == -b {
                    v.drain(pos..pos + 2);
                }
            }
            2 if pos + 2 < v.len() => {
                let (a, b, c) = (v[pos], v[pos + 1], v[pos + 2]);
                if a == c && a.signum() == b.signum() && (a.abs() - b.abs()).abs() == 1 {
                    v[pos] = b;
                    v[pos + 1] = a;
                    v[pos + 2] = b;
                }
            }
            3 if n > 2 => {
                // insert a relator σ_i σ_{i+1} σ_i σ_{i+1}⁻¹ σ_i⁻¹ σ_{i+1}⁻¹
                let i = rng.gen_range(1..n - 1);
                v.splice(pos..pos, [i, i + 1, i, -(i + 1), -i, -(i + 1)]);
            }
            _ => {}
        }
    }
    ArtinWord { n: w.n, letters: v }
}

/// Braid-equality disagreements between the normal form and the coordinates.
pub fn word_problem_discrepancies(
    pairs: &[(ArtinWord, ArtinWord)],
) -> Result<Vec<(ArtinWord, ArtinWord)>> {
    let flags: Vec<Result<bool>> = pairs
        .par_iter()
        .map(|(a, b)| {
            let lhs = rnf_with(a, Strategy::Right)? == rnf_with(b, Strategy::Right)?;
            Ok(lhs != oracle_equal(a, b)?)
        })
        .collect();
    let mut out = Vec::new();
    for (p, f) in pairs.iter().zip(flags) {
        if f? {
            out.push(p.clone());
        }
    }
    Ok(out)
}

/// Per-braid invariants of relaxation: strictly decreasing norms, prefix
/// closure, agreement of the two positivity tests and the trichotomy.
pub fn relaxation_violations(w: &ArtinWord) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let lam = Lamination::of_word(w)?;
    let t = relax_lamination(&lam, Strategy::Right)?;
    if t.norms.windows(2).any(|p| p[1] >= p[0]) {
        out.push(format!("norms not strictly decreasing: {:?}", t.norms));
    }
    let v = SlidingWord {
        n: w.n,
        letters: t.relaxing.iter().rev().map(|s| s.inverse()).collect(),
    };
    for len in 0..v.len() {
        let prefix = SlidingWord {
            n: w.n,
            letters: v.letters[..len].to_vec(),
        };
        if rnf_with(&prefix.to_artin(), Strategy::Right)? != prefix {
            out.push(format!("prefix of length {len} not normal"));
            break;
        }
    }
    let g = classify_geometric(w)?;
    let s = classify_syntactic(&v)?;
    if g != s {
        out.push(format!(
            "classification disagrees: geometric {g}, syntactic {s}"
        ));
    }
    if (g == crate::relax::PositivityClass::Trivial) != v.is_empty() {
        out.push("Trivial class does not match empty normal form".into());
    }
    Ok(out)
}
