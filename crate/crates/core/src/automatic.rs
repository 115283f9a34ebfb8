//! Automaticity experiments on the Artin-letter expansion of the normal form:
//! difference-set product automata, ε-reduction, witness search and the
//! counterexample families for four strands.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::automaton::{build_automaton, Dfa, Nfa, NormalFormDfa, DEAD};
use crate::coords::{coordinates, CoordinateState};
use crate::error::{Error, Result};
use crate::lamination::Lamination;
use crate::relax::{braid_equal, rnf};
use crate::word::{random_word_with, ArtinWord, SlidingLetter, SlidingWord};

pub type ArtinDfa = Dfa<i32>;

/// Artin generators and their inverses, sorted.
pub fn artin_alphabet(n: usize) -> Vec<i32> {
    let m = n as i32 - 1;
    (-m..=m).filter(|&g| g != 0).collect()
}

/// The normal-form language with every sliding letter replaced by its Artin
/// expansion, determinized and minimized. Only the images of the sliding
/// automaton's states accept.
pub fn expand_dfa(nf: &NormalFormDfa) -> Result<ArtinDfa> {
    let alphabet = artin_alphabet(nf.n);
    let index = |g: i32| alphabet.binary_search(&g).expect("generator in alphabet") as u32;
    let mut nfa = Nfa::new(nf.n, alphabet.clone());
    for q in 0..nf.states() {
        nfa.add_state(nf.accepting[q]);
    }
    nfa.initial = vec![nf.initial];
    for q in 0..nf.states() {
        for (a, &r) in nf.trans[q].iter().enumerate() {
            if r == DEAD {
                continue;
            }
            let chain = nf.alphabet[a].to_artin();
            let mut cur = q as u32;
            for (i, &g) in chain.iter().enumerate() {
                let next = if i + 1 == chain.len() {
                    r
                } else {
                    nfa.add_state(false)
                };
                nfa.edges[cur as usize].push((Some(index(g)), next));
                cur = next;
            }
        }
    }
    Ok(nfa.determinize(10_000_000)?.minimize())
}

/// A finite set of braids, each with a representative word, indexed by
/// canonical coordinates.
#[derive(Debug, Clone)]
pub struct ElementSet {
    pub n: usize,
    pub words: Vec<ArtinWord>,
    index: HashMap<CoordinateState, u32>,
}

impl ElementSet {
    /// Braids of Artin length at most `radius`, in breadth-first order with
    /// generators tried in increasing order. Fails past `max_size` elements.
    pub fn ball(n: usize, radius: usize, max_size: usize) -> Result<(ElementSet, usize)> {
        let gens = artin_alphabet(n);
        let id = CoordinateState::identity(n);
        let mut set = ElementSet {
            n,
            words: vec![ArtinWord::empty(n)],
            index: HashMap::from([(id.clone(), 0)]),
        };
        let mut coords = vec![id];
        let mut frontier = 0..1;
        for _ in 0..radius {
            let start = set.words.len();
            for i in frontier.clone() {
                for &g in &gens {
                    let mut c = coords[i].clone();
                    c.apply(g)?;
                    if set.index.contains_key(&c) {
                        continue;
                    }
                    if set.words.len() >= max_size {
                        return Err(Error::Budget(format!(
                            "ball of radius {radius} exceeds {max_size} elements"
                        )));
                    }
                    let mut w = set.words[i].clone();
                    w.letters.push(g);
                    set.index.insert(c.clone(), set.words.len() as u32);
                    set.words.push(w);
                    coords.push(c);
                }
            }
            frontier = start..set.words.len();
        }
        let sphere = frontier.len();
        Ok((set, sphere))
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn index_of(&self, w: &ArtinWord) -> Result<Option<u32>> {
        Ok(self.index.get(&coordinates(w)?).copied())
    }

    /// The elements flagged in `keep`, in their original order.
    pub fn subset(&self, keep: &[bool]) -> Result<ElementSet> {
        let mut out = ElementSet {
            n: self.n,
            words: Vec::new(),
            index: HashMap::new(),
        };
        for (w, _) in self.words.iter().zip(keep).filter(|p| *p.1) {
            out.index.insert(coordinates(w)?, out.words.len() as u32);
            out.words.push(w.clone());
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Mode {
    pub synchronous: bool,
    pub side: Side,
}

impl Mode {
    pub const ALL: [Mode; 4] = [
        Mode {
            synchronous: true,
            side: Side::Left,
        },
        Mode {
            synchronous: true,
            side: Side::Right,
        },
        Mode {
            synchronous: false,
            side: Side::Left,
        },
        Mode {
            synchronous: false,
            side: Side::Right,
        },
    ];
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.synchronous { "sync" } else { "async" };
        let d = match self.side {
            Side::Left => "left",
            Side::Right => "right",
        };
        write!(f, "{s}-{d}")
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Mode::ALL
            .into_iter()
            .find(|m| m.to_string() == s)
            .ok_or_else(|| Error::Parse {
                column: 1,
                message: format!("unknown mode `{s}`"),
            })
    }
}

/// A padded letter: `None` is ε.
pub type Pad = Option<i32>;

const LAMBDA_DONE: u8 = 1;
const MU_DONE: u8 = 2;

/// The explicit difference-set automaton `𝒜(g, T)` restricted to its
/// reachable part.
#[derive(Debug, Clone)]
pub struct ProductAutomaton {
    pub mode: Mode,
    pub anchor: ArtinWord,
    /// `(q, r, x, padding flags)` per state.
    pub states: Vec<(u32, u32, u32, u8)>,
    /// `(λ index, μ index, target)` with index `K` standing for ε.
    pub edges: Vec<Vec<(u8, u8, u32)>>,
    pub accepting: Vec<bool>,
    alphabet: Vec<i32>,
}

/// `x ↦ μ⁻¹ x λ` on `T`, for every padded pair.
struct DifferenceTable {
    k: usize,
    table: Vec<u32>,
}

impl DifferenceTable {
    fn new(t: &ElementSet, alphabet: &[i32]) -> Result<Self> {
        let k = alphabet.len();
        let pads: Vec<Pad> = alphabet.iter().map(|&g| Some(g)).chain([None]).collect();
        let mut table = vec![DEAD; t.len() * (k + 1) * (k + 1)];
        for (x, w) in t.words.iter().enumerate() {
            for (a, lam) in pads.iter().enumerate() {
                for (b, mu) in pads.iter().enumerate() {
                    let mut c = CoordinateState::identity(t.n);
                    if let Some(m) = mu {
                        c.apply(-m)?;
                    }
                    for &g in &w.letters {
                        c.apply(g)?;
                    }
                    if let Some(l) = lam {
                        c.apply(*l)?;
                    }
                    if let Some(&y) = t.index.get(&c) {
                        table[(x * (k + 1) + a) * (k + 1) + b] = y;
                    }
                }
            }
        }
        Ok(DifferenceTable { k, table })
    }

    fn get(&self, x: u32, a: usize, b: usize) -> u32 {
        self.table[(x as usize * (self.k + 1) + a) * (self.k + 1) + b]
    }
}

impl ProductAutomaton {
    pub fn build(
        dfa: &ArtinDfa,
        g: &ArtinWord,
        t: &ElementSet,
        mode: Mode,
        max_states: usize,
    ) -> Result<Self> {
        let table = DifferenceTable::new(t, &dfa.alphabet)?;
        Self::build_with(dfa, g, t, &table, mode, max_states)
    }

    fn build_with(
        dfa: &ArtinDfa,
        g: &ArtinWord,
        t: &ElementSet,
        table: &DifferenceTable,
        mode: Mode,
        max_states: usize,
    ) -> Result<Self> {
        let k = dfa.alphabet.len();
        let eps = t
            .index_of(&ArtinWord::empty(t.n))?
            .ok_or_else(|| Error::Malformed("T must contain ε".into()))?;
        let (start, target) = match mode.side {
            Side::Left => (
                t.index_of(g)?
                    .ok_or_else(|| Error::Malformed(format!("anchor `{g}` not in T")))?,
                Some(eps),
            ),
            Side::Right => (eps, t.index_of(&g.invert())?),
        };
        let mut out = ProductAutomaton {
            mode,
            anchor: g.clone(),
            states: Vec::new(),
            edges: Vec::new(),
            accepting: Vec::new(),
            alphabet: dfa.alphabet.clone(),
        };
        let Some(target) = target else {
            // g⁻¹ ∉ T: nothing accepts
            out.states.push((dfa.initial, dfa.initial, start, 0));
            out.edges.push(Vec::new());
            out.accepting.push(false);
            return Ok(out);
        };
        let init = (dfa.initial, dfa.initial, start, 0u8);
        let mut ids: HashMap<(u32, u32, u32, u8), u32> = HashMap::from([(init, 0)]);
        out.states.push(init);
        let mut i = 0;
        while i < out.states.len() {
            let (q, r, x, pad) = out.states[i];
            let mut row = Vec::new();
            for a in 0..=k {
                let lam_eps = a == k;
                if mode.synchronous && pad & LAMBDA_DONE != 0 && !lam_eps {
                    continue;
                }
                let q2 = if lam_eps { q } else { dfa.step(q, a) };
                if q2 == DEAD {
                    continue;
                }
                for b in 0..=k {
                    let mu_eps = b == k;
                    if lam_eps && mu_eps {
                        continue;
                    }
                    if mode.synchronous && pad & MU_DONE != 0 && !mu_eps {
                        continue;
                    }
                    let r2 = if mu_eps { r } else { dfa.step(r, b) };
                    if r2 == DEAD {
                        continue;
                    }
                    let x2 = table.get(x, a, b);
                    if x2 == DEAD {
                        continue;
                    }
                    let pad2 = if mode.synchronous {
                        pad | if lam_eps { LAMBDA_DONE } else { 0 }
                            | if mu_eps { MU_DONE } else { 0 }
                    } else {
                        0
                    };
                    let key = (q2, r2, x2, pad2);
                    let id = match ids.get(&key) {
                        Some(&id) => id,
                        None => {
                            if out.states.len() >= max_states {
                                return Err(Error::Budget(format!(
                                    "product exceeds {max_states} states"
                                )));
                            }
                            let id = out.states.len() as u32;
                            ids.insert(key, id);
                            out.states.push(key);
                            id
                        }
                    };
                    row.push((a as u8, b as u8, id));
                }
            }
            out.edges.push(row);
            i += 1;
        }
        out.accepting = out
            .states
            .iter()
            .map(|&(q, r, x, _)| {
                x == target && dfa.accepting[q as usize] && dfa.accepting[r as usize]
            })
            .collect();
        Ok(out)
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    fn pad_index(&self, p: Pad) -> Option<u8> {
        match p {
            None => Some(self.alphabet.len() as u8),
            Some(g) => self.alphabet.binary_search(&g).ok().map(|i| i as u8),
        }
    }

    /// Runs a word of padded pairs.
    pub fn accepts(&self, word: &[(Pad, Pad)]) -> bool {
        let mut q = 0usize;
        for &(l, m) in word {
            let (Some(a), Some(b)) = (self.pad_index(l), self.pad_index(m)) else {
                return false;
            };
            match self.edges[q].iter().find(|e| e.0 == a && e.1 == b) {
                Some(e) => q = e.2 as usize,
                None => return false,
            }
        }
        self.accepting[q]
    }

    fn first_track(&self) -> Nfa<i32> {
        let k = self.alphabet.len() as u8;
        let mut nfa = Nfa::new(self.anchor.n, self.alphabet.clone());
        for &acc in &self.accepting {
            nfa.add_state(acc);
        }
        nfa.initial = vec![0];
        for (i, row) in self.edges.iter().enumerate() {
            for &(a, _, t) in row {
                nfa.edges[i].push(((a != k).then_some(a as u32), t));
            }
        }
        nfa
    }

    /// Elements of `T` carried by states from which acceptance is reachable.
    pub fn live_elements(&self, t_len: usize) -> Vec<bool> {
        let live = co_reachable(&self.first_track());
        let mut out = vec![false; t_len];
        for (s, _) in self.states.iter().zip(&live).filter(|p| *p.1) {
            out[s.2 as usize] = true;
        }
        out
    }

    /// Deletes ε from the first track and determinizes.
    pub fn epsilon_reduce(&self, max_states: usize) -> Result<ArtinDfa> {
        let mut nfa = self.first_track();
        let live = co_reachable(&nfa);
        for (i, e) in nfa.edges.iter_mut().enumerate() {
            if !live[i] {
                e.clear();
            } else {
                e.retain(|&(_, t)| live[t as usize]);
                e.sort_unstable();
                e.dedup();
            }
        }
        Ok(nfa.determinize(max_states)?.minimize())
    }
}

fn co_reachable(nfa: &Nfa<i32>) -> Vec<bool> {
    let m = nfa.edges.len();
    let mut rev: Vec<Vec<u32>> = vec![Vec::new(); m];
    for (i, row) in nfa.edges.iter().enumerate() {
        for &(_, t) in row {
            rev[t as usize].push(i as u32);
        }
    }
    let mut live = nfa.accepting.clone();
    let mut stack: Vec<u32> = (0..m as u32).filter(|&q| live[q as usize]).collect();
    while let Some(q) = stack.pop() {
        for &p in &rev[q as usize] {
            if !live[p as usize] {
                live[p as usize] = true;
                stack.push(p);
            }
        }
    }
    live
}

#[derive(Debug, Clone, Serialize)]
pub struct AnchorResult {
    pub anchor: i32,
    pub product_states: usize,
    pub reduced_states: usize,
    pub equal: bool,
    #[serde(skip)]
    pub live: Vec<bool>,
}

/// For every generator `g`, whether the ε-reduction of `𝒜(g, T)` recognizes
/// exactly the expanded normal-form language.
pub fn check_witness(
    dfa: &ArtinDfa,
    t: &ElementSet,
    mode: Mode,
    max_states: usize,
) -> Result<Vec<AnchorResult>> {
    let table = DifferenceTable::new(t, &dfa.alphabet)?;
    let mut out = Vec::new();
    for &g in &dfa.alphabet {
        let anchor = ArtinWord::new(t.n, vec![g])?;
        let p = ProductAutomaton::build_with(dfa, &anchor, t, &table, mode, max_states)?;
        let reduced = p.epsilon_reduce(max_states)?;
        let equal = reduced.language_equal(dfa)?;
        let live = p.live_elements(t.len());
        out.push(AnchorResult {
            anchor: g,
            product_states: p.len(),
            reduced_states: reduced.states(),
            equal,
            live,
        });
        if !equal {
            break;
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    pub max_radius: usize,
    pub max_elements: usize,
    pub max_states: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_radius: 8,
            max_elements: 1000,
            max_states: 5_000_000,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub enum SearchOutcome {
    /// The ball of the given radius passes for every generator; `witness`
    /// keeps only the elements some accepting path uses, plus `ε` and the
    /// generators, and passes as well.
    Found {
        radius: usize,
        ball_size: usize,
        size: usize,
        witness: Vec<String>,
        anchors: Vec<AnchorResult>,
    },
    /// No ball within budget passes; the last attempt is described.
    Exhausted {
        radius: usize,
        size: usize,
        frontier: usize,
        reason: String,
    },
}

impl SearchOutcome {
    pub fn found(&self) -> bool {
        matches!(self, SearchOutcome::Found { .. })
    }
}

/// Tries balls of radius 1, 2, … until one is a witness or the budget runs
/// out. The order is deterministic.
pub fn search_witness(n: usize, mode: Mode, budget: SearchBudget) -> Result<SearchOutcome> {
    let dfa = expand_dfa(&build_automaton(n)?.minimize())?;
    let mut last = (0, 1, 1, String::from("radius budget is zero"));
    for radius in 1..=budget.max_radius {
        let (t, frontier) = match ElementSet::ball(n, radius, budget.max_elements) {
            Ok(b) => b,
            Err(Error::Budget(msg)) => {
                last.3 = msg;
                break;
            }
            Err(e) => return Err(e),
        };
        match check_witness(&dfa, &t, mode, budget.max_states) {
            Ok(anchors) if anchors.iter().all(|a| a.equal) => {
                let mut keep: Vec<bool> = (0..t.len()).map(|i| t.words[i].len() <= 1).collect();
                for a in &anchors {
                    keep.iter_mut().zip(&a.live).for_each(|(k, &l)| *k |= l);
                }
                let pruned = t.subset(&keep)?;
                let recheck = check_witness(&dfa, &pruned, mode, budget.max_states)?;
                let (t, anchors) = if recheck.iter().all(|a| a.equal) {
                    (pruned, recheck)
                } else {
                    (t, anchors)
                };
                return Ok(SearchOutcome::Found {
                    radius,
                    ball_size: keep.len(),
                    size: t.len(),
                    witness: t.words.iter().map(|w| w.to_string()).collect(),
                    anchors,
                });
            }
            Ok(anchors) => {
                let g = anchors.last().map(|a| a.anchor).unwrap_or(0);
                last = (
                    radius,
                    t.len(),
                    frontier,
                    format!("ε-reduction differs for anchor {g}"),
                );
            }
            Err(Error::Budget(msg)) => {
                last = (radius, t.len(), frontier, msg);
                break;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(SearchOutcome::Exhausted {
        radius: last.0,
        size: last.1,
        frontier: last.2,
        reason: last.3,
    })
}

fn artin_len(v: &SlidingWord) -> usize {
    v.letters.iter().map(|a| a.l - a.k).sum()
}

#[derive(Debug, Clone, Serialize)]
pub struct OffsetReport {
    pub n: usize,
    pub samples: usize,
    pub max_offset: usize,
}

/// Largest `|m − ℓ|` between Artin lengths of same-length sliding prefixes
/// of `NF(α)` and `NF(gα)` or `NF(αg)`, over seeded random `α`.
pub fn offset_scan(n: usize, samples: usize, max_len: usize, seed: u64) -> Result<OffsetReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = artin_alphabet(n);
    let mut max_offset = 0;
    for _ in 0..samples {
        let len = rng.gen_range(0..=max_len);
        let alpha = random_word_with(n, len, &mut rng);
        let a = rnf(&alpha)?;
        for &g in &gens {
            let gw = ArtinWord::new(n, vec![g])?;
            for beta in [gw.concat(&alpha), alpha.concat(&gw)] {
                let b = rnf(&beta)?;
                for k in 0..=a.len().min(b.len()) {
                    let pa = SlidingWord {
                        n,
                        letters: a.letters[..k].to_vec(),
                    };
                    let pb = SlidingWord {
                        n,
                        letters: b.letters[..k].to_vec(),
                    };
                    max_offset = max_offset.max(artin_len(&pa).abs_diff(artin_len(&pb)));
                }
            }
        }
    }
    Ok(OffsetReport {
        n,
        samples,
        max_offset,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub max_k: usize,
    /// `k` values at which some identity failed, with a description.
    pub failures: Vec<(usize, String)>,
    /// Laminated norms of `(σ₂⁻¹σ₁)^{−u}` for `u = 1..=max_k`; the prefix
    /// identities are checked for `3u ≤ max_k`.
    pub divergence_norms: Vec<usize>,
    /// Least laminated norm of `σ₃^{−Y} σ₁^{X}` over `X + Y = k`, `k = 1..=max_k`.
    pub split_norms: Vec<usize>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
            && self.divergence_norms.windows(2).all(|p| p[0] < p[1])
            && self.split_norms.windows(2).all(|p| p[0] < p[1])
    }
}

fn sw(n: usize, letters: &[SlidingLetter]) -> SlidingWord {
    SlidingWord {
        n,
        letters: letters.to_vec(),
    }
}

/// `a_k = UR(2,4)·(UR(1,3)·LR(1,4)·UR(3,4))^k`.
pub fn family_a(k: usize) -> SlidingWord {
    let head = sw(4, &[SlidingLetter::ur(2, 4)]);
    head.concat(
        &sw(
            4,
            &[
                SlidingLetter::ur(1, 3),
                SlidingLetter::lr(1, 4),
                SlidingLetter::ur(3, 4),
            ],
        )
        .pow(k),
    )
}

/// `b_k = (UR(2,4)·LR(2,4))^k·UR(1,4)`.
pub fn family_b(k: usize) -> SlidingWord {
    sw(4, &[SlidingLetter::ur(2, 4), SlidingLetter::lr(2, 4)])
        .pow(k)
        .concat(&sw(4, &[SlidingLetter::ur(1, 4)]))
}

/// `c_k = UR(1,2)^k·UR(3,4)^k`.
pub fn family_c(k: usize) -> SlidingWord {
    sw(4, &[SlidingLetter::ur(1, 2)])
        .pow(k)
        .concat(&sw(4, &[SlidingLetter::ur(3, 4)]).pow(k))
}

/// `d_k = UR(3,4)^{k+1}·UR(1,4)²·UR(3,4)^{k−1}`.
pub fn family_d(k: usize) -> SlidingWord {
    let t = sw(4, &[SlidingLetter::ur(3, 4)]);
    t.pow(k + 1)
        .concat(&sw(4, &[SlidingLetter::ur(1, 4)]).pow(2))
        .concat(&t.pow(k - 1))
}

/// Checks the four-strand counterexample families for `k ≤ max_k`.
pub fn family_checks(max_k: usize) -> Result<FamilyReport> {
    let nf = build_automaton(4)?.minimize();
    let normal = |v: &SlidingWord| -> Result<bool> {
        Ok(rnf(&v.to_artin())? == *v && nf.accepts(&v.letters)?)
    };
    let s1 = ArtinWord::new(4, vec![1])?;
    let delta = ArtinWord::garside(4);
    let mut failures = Vec::new();
    for k in 1..=max_k {
        let (a, b) = (family_a(k), family_b(k));
        if !normal(&a)? {
            failures.push((k, format!("a_{k} not normal")));
        }
        if !normal(&b)? {
            failures.push((k, format!("b_{k} not normal")));
        }
        if !braid_equal(&s1.concat(&a.to_artin()), &b.to_artin())? {
            failures.push((k, "σ₁α_k ≠ β_k".into()));
        }
        if k >= 3 {
            let (c, d) = (family_c(k), family_d(k));
            if !normal(&c)? {
                failures.push((k, format!("c_{k} not normal")));
            }
            if !normal(&d)? {
                failures.push((k, format!("d_{k} not normal")));
            }
            if !braid_equal(&c.to_artin().concat(&delta), &d.to_artin())? {
                failures.push((k, "γ_kΔ ≠ δ_k".into()));
            }
            for l in 0..=k {
                let x = sw(4, &c.letters[..l]).to_artin();
                let y = sw(4, &d.letters[..l]).to_artin();
                if x != ArtinWord::new(4, vec![1; l])? || y != ArtinWord::new(4, vec![3; l])? {
                    failures.push((k, format!("prefixes of length {l} are not σ₁^{l}, σ₃^{l}")));
                }
            }
        }
    }
    let twist = ArtinWord::new(4, vec![-2, 1])?;
    let mut divergence_norms = Vec::new();
    for u in 1..=max_k {
        let back = twist.pow(u).invert();
        divergence_norms.push(Lamination::of_word(&back)?.norm());
        if 3 * u > max_k {
            continue;
        }
        let x = family_a(3 * u).to_artin();
        let y = family_b(3 * u);
        let prefix = sw(4, &family_a(3 * u).letters[..6 * u + 1]).to_artin();
        if y.len() != 6 * u + 1 || !braid_equal(&prefix, &x.concat(&back))? {
            failures.push((u, "x_{6u+1} ≠ x(σ₂⁻¹σ₁)^{−u}".into()));
        }
        let diff = y.to_artin().invert().concat(&s1).concat(&prefix);
        if !braid_equal(&diff, &back)? {
            failures.push((u, "y⁻¹σ₁x_{6u+1} ≠ (σ₂⁻¹σ₁)^{−u}".into()));
        }
    }
    let mut split_norms = Vec::new();
    for k in 1..=max_k {
        let mut best = usize::MAX;
        for x in 0..=k {
            let mut letters = vec![-3; k - x];
            letters.extend(vec![1; x]);
            best = best.min(Lamination::of_word(&ArtinWord::new(4, letters)?)?.norm());
        }
        split_norms.push(best);
    }
    Ok(FamilyReport {
        max_k,
        failures,
        divergence_norms,
        split_norms,
    })
}

/// Breadth-first walk listing accepted words of the expanded language up to
/// a length, used to sanity-check the expansion.
pub fn expanded_words(dfa: &ArtinDfa, max_len: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    let mut queue = VecDeque::from([(dfa.initial, Vec::new())]);
    while let Some((q, w)) = queue.pop_front() {
        if dfa.accepting[q as usize] {
            out.push(w.clone());
        }
        if w.len() == max_len {
            continue;
        }
        for (a, &r) in dfa.trans[q as usize].iter().enumerate() {
            if r != DEAD {
                let mut v = w.clone();
                v.push(dfa.alphabet[a]);
                queue.push_back((r, v));
            }
        }
    }
    out
}
