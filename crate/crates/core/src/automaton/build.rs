//! Breadth-first synthesis of the normal-form automaton from extended shadows.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::dfa::{Dfa, NormalFormDfa, DEAD};
use super::transition::{comp_nonempty, comp_unchecked, dec, epsilon_state, Variant};
use crate::error::{Error, Result};
use crate::lamination::ExtendedShadowTable;
use crate::relax::{rnf, rnf_with, Strategy};
use crate::word::{ArtinWord, SlidingLetter, SlidingWord};

pub const DEFAULT_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    pub variant: Variant,
    /// Maximum number of states before aborting.
    pub budget: usize,
    /// Attach each state's extended shadow as its label.
    pub labels: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            variant: Variant::Right,
            budget: DEFAULT_BUDGET,
            labels: false,
        }
    }
}

impl Variant {
    pub fn strategy(self) -> Strategy {
        match self {
            Variant::Right => Strategy::Right,
            Variant::SimpleRight => Strategy::SimpleRight,
        }
    }
}

pub fn build_automaton(n: usize) -> Result<NormalFormDfa> {
    build_automaton_with(n, BuildOptions::default())
}

/// Explores `π²_ε` and its successors level by level. Each frontier is
/// expanded in parallel; new states are numbered in frontier order, then
/// letter order, so the result does not depend on scheduling.
pub fn build_automaton_with(n: usize, opts: BuildOptions) -> Result<NormalFormDfa> {
    if n < 2 {
        return Err(Error::TooFewStrands(n));
    }
    let alphabet = SlidingLetter::right_alphabet(n);
    let eps = epsilon_state(n);
    let mut states: Vec<ExtendedShadowTable> = vec![eps.clone()];
    let mut ids: HashMap<ExtendedShadowTable, u32> = HashMap::from([(eps, 0)]);
    let mut trans: Vec<Vec<u32>> = Vec::new();
    let mut frontier = 0..1usize;
    while !frontier.is_empty() {
        let rows: Vec<Vec<Option<ExtendedShadowTable>>> = states[frontier.clone()]
            .par_iter()
            .enumerate()
            .map(|(off, s)| {
                let initial = frontier.start + off == 0;
                alphabet
                    .iter()
                    .map(|&a| match dec(s, a, opts.variant) {
                        Ok(true) => Some(if initial {
                            comp_unchecked(s, a)
                        } else {
                            comp_nonempty(s, a)
                        }),
                        _ => None,
                    })
                    .collect()
            })
            .collect();
        let next_start = states.len();
        for row in rows {
            let mut out = vec![DEAD; alphabet.len()];
            for (a, t) in row.into_iter().enumerate() {
                let Some(t) = t else { continue };
                let id = match ids.get(&t) {
                    Some(&id) => id,
                    None => {
                        if states.len() >= opts.budget {
                            return Err(Error::Budget(format!(
                                "n = {n}: more than {} states after {} expanded",
                                opts.budget,
                                trans.len()
                            )));
                        }
                        let id = states.len() as u32;
                        ids.insert(t.clone(), id);
                        states.push(t);
                        id
                    }
                };
                out[a] = id;
            }
            trans.push(out);
        }
        frontier = next_start..states.len();
    }
    debug_assert!(ids.get(&epsilon_state(n)) == Some(&0));
    let m = states.len();
    let labels = opts
        .labels
        .then(|| states.iter().map(|s| s.describe()).collect());
    Ok(Dfa {
        n,
        alphabet,
        initial: 0,
        trans,
        accepting: vec![true; m],
        labels,
    })
}

/// The sliding spelling of `σ_1^{ε_1} σ_3^{ε_2} …`.
fn spelled(n: usize, signs: &[i32]) -> SlidingWord {
    let letters = signs
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let k = 2 * i + 1;
            if e > 0 {
                SlidingLetter::ur(k, k + 1)
            } else {
                SlidingLetter::lr(k, k + 1)
            }
        })
        .collect();
    SlidingWord { n, letters }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentReport {
    pub n: usize,
    pub m: usize,
    pub tuples: usize,
    /// Tuples whose normal form is not the letterwise spelling.
    pub bad_spellings: Vec<Vec<i32>>,
    /// Pairs `(ε, η, i)` for which the extension does not separate them.
    pub undistinguished: Vec<(Vec<i32>, Vec<i32>, usize)>,
    /// Distinct states of the minimal automaton reached by the tuples.
    pub distinct_states: usize,
}

impl ExperimentReport {
    pub fn passed(&self) -> bool {
        self.bad_spellings.is_empty()
            && self.undistinguished.is_empty()
            && self.distinct_states == self.tuples
    }
}

/// Runs the sign-tuple family `β_ε = σ_1^{ε_1} σ_3^{ε_2} … σ_{2m−1}^{ε_m}`,
/// `m = ⌊(n−1)/2⌋`, against the geometric normal form and the minimal
/// automaton `dfa`.
pub fn distinguishing_experiment(n: usize, dfa: &NormalFormDfa) -> Result<ExperimentReport> {
    if n < 3 {
        return Err(Error::TooFewStrands(n));
    }
    let m = (n - 1) / 2;
    let tuples: Vec<Vec<i32>> = (0..1u32 << m)
        .map(|bits| {
            (0..m)
                .map(|i| if bits >> i & 1 == 1 { -1 } else { 1 })
                .collect()
        })
        .collect();
    let mut bad_spellings = Vec::new();
    let mut reached = Vec::new();
    for t in &tuples {
        let v = spelled(n, t);
        let w = ArtinWord::new(
            n,
            t.iter()
                .enumerate()
                .map(|(i, &e)| e * (2 * i as i32 + 1))
                .collect(),
        )?;
        if rnf(&w)? != v {
            bad_spellings.push(t.clone());
        }
        reached.push(dfa.run(&v.letters)?);
    }
    let mut undistinguished = Vec::new();
    for (a, eps) in tuples.iter().enumerate() {
        for eta in &tuples[a + 1..] {
            let i = (0..m).find(|&i| eps[i] != eta[i]).expect("distinct tuples");
            let (pos, neg) = if eps[i] > 0 { (eps, eta) } else { (eta, eps) };
            let ext = SlidingLetter::lr(2 * (i + 1), n);
            let with = |t: &[i32]| {
                let mut v = spelled(n, t);
                v.letters.push(ext);
                v
            };
            let (vp, vn) = (with(pos), with(neg));
            let geometric = rnf(&vp.to_artin())? == vp && rnf(&vn.to_artin())? != vn;
            let automaton = dfa.accepts(&vp.letters)? && !dfa.accepts(&vn.letters)?;
            if !(geometric && automaton) {
                undistinguished.push((pos.clone(), neg.clone(), i + 1));
            }
        }
    }
    reached.sort_unstable();
    reached.dedup();
    let distinct_states = reached.iter().filter(|&&q| q != DEAD).count();
    Ok(ExperimentReport {
        n,
        m,
        tuples: tuples.len(),
        bad_spellings,
        undistinguished,
        distinct_states,
    })
}

/// Whether `v` is its own normal form under `strategy`.
pub fn is_normal(v: &SlidingWord, strategy: Strategy) -> Result<bool> {
    Ok(rnf_with(&v.to_artin(), strategy)? == *v)
}
