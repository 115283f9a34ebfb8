//! Explicit finite automata over an ordered alphabet.

use std::collections::{HashMap, VecDeque};
use std::fmt::{Display, Write as _};
use std::hash::Hash;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::SlidingLetter;

type Pair = (u32, u32);

pub const DEAD: u32 = u32::MAX;

pub trait Symbol: Clone + Eq + Hash + Ord + Display + FromStr {}
impl<T: Clone + Eq + Hash + Ord + Display + FromStr> Symbol for T {}

/// A deterministic automaton with a partial transition table; missing
/// transitions go to an implicit dead state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa<L> {
    pub n: usize,
    pub alphabet: Vec<L>,
    pub initial: u32,
    /// `trans[state][letter index]`, `DEAD` when undefined.
    pub trans: Vec<Vec<u32>>,
    pub accepting: Vec<bool>,
    /// Optional per-state debugging labels.
    pub labels: Option<Vec<String>>,
}

pub type NormalFormDfa = Dfa<SlidingLetter>;

impl<L: Symbol> Dfa<L> {
    pub fn states(&self) -> usize {
        self.trans.len()
    }

    pub fn letter_index(&self, a: &L) -> Option<usize> {
        self.alphabet.binary_search(a).ok()
    }

    pub fn step(&self, q: u32, a: usize) -> u32 {
        if q == DEAD {
            DEAD
        } else {
            self.trans[q as usize][a]
        }
    }

    pub fn run(&self, word: &[L]) -> Result<u32> {
        let mut q = self.initial;
        for a in word {
            let i = self.letter_index(a).ok_or(Error::AlphabetMismatch)?;
            q = self.step(q, i);
            if q == DEAD {
                break;
            }
        }
        Ok(q)
    }

    pub fn accepts(&self, word: &[L]) -> Result<bool> {
        let q = self.run(word)?;
        Ok(q != DEAD && self.accepting[q as usize])
    }

    /// Keeps states that are reachable and can reach an accepting state.
    pub fn trim(&self) -> Dfa<L> {
        let m = self.states();
        let mut reach = vec![false; m];
        let mut queue = VecDeque::new();
        if m > 0 {
            reach[self.initial as usize] = true;
            queue.push_back(self.initial);
        }
        while let Some(q) = queue.pop_front() {
            for &r in &self.trans[q as usize] {
                if r != DEAD && !reach[r as usize] {
                    reach[r as usize] = true;
                    queue.push_back(r);
                }
            }
        }
        let mut rev: Vec<Vec<u32>> = vec![Vec::new(); m];
        for q in 0..m {
            for &r in &self.trans[q] {
                if r != DEAD {
                    rev[r as usize].push(q as u32);
                }
            }
        }
        let mut live = vec![false; m];
        let mut stack: Vec<u32> = (0..m as u32)
            .filter(|&q| self.accepting[q as usize])
            .collect();
        for &q in &stack {
            live[q as usize] = true;
        }
        while let Some(q) = stack.pop() {
            for &p in &rev[q as usize] {
                if !live[p as usize] {
                    live[p as usize] = true;
                    stack.push(p);
                }
            }
        }
        let keep: Vec<bool> = (0..m).map(|q| reach[q] && live[q]).collect();
        self.restrict(&keep)
    }

    fn restrict(&self, keep: &[bool]) -> Dfa<L> {
        let mut new_of = vec![DEAD; self.states()];
        let mut count = 0u32;
        for q in 0..self.states() {
            if keep[q] {
                new_of[q] = count;
                count += 1;
            }
        }
        if self.states() == 0 || !keep[self.initial as usize] {
            return Dfa::empty(self.n, self.alphabet.clone());
        }
        let trans = (0..self.states())
            .filter(|&q| keep[q])
            .map(|q| {
                self.trans[q]
                    .iter()
                    .map(|&r| if r == DEAD { DEAD } else { new_of[r as usize] })
                    .collect()
            })
            .collect();
        Dfa {
            n: self.n,
            alphabet: self.alphabet.clone(),
            initial: new_of[self.initial as usize],
            trans,
            accepting: (0..self.states())
                .filter(|&q| keep[q])
                .map(|q| self.accepting[q])
                .collect(),
            labels: self.labels.as_ref().map(|l| {
                (0..self.states())
                    .filter(|&q| keep[q])
                    .map(|q| l[q].clone())
                    .collect()
            }),
        }
    }

    /// The automaton of the empty language: one non-accepting state.
    pub fn empty(n: usize, alphabet: Vec<L>) -> Dfa<L> {
        let k = alphabet.len();
        Dfa {
            n,
            alphabet,
            initial: 0,
            trans: vec![vec![DEAD; k]],
            accepting: vec![false],
            labels: None,
        }
    }

    pub fn is_empty_language(&self) -> bool {
        let t = self.trim();
        !t.accepting.iter().any(|&a| a)
    }

    /// Minimal automaton by partition refinement, dead state elided, states
    /// numbered in breadth-first order from the initial state.
    pub fn minimize(&self) -> Dfa<L> {
        let t = self.trim();
        if !t.accepting.iter().any(|&a| a) {
            return Dfa::empty(self.n, self.alphabet.clone());
        }
        let m = t.states();
        let k = t.alphabet.len();
        let mut class: Vec<u32> = t.accepting.iter().map(|&a| a as u32).collect();
        let mut classes = {
            let mut seen = class.clone();
            seen.sort_unstable();
            seen.dedup();
            seen.len()
        };
        loop {
            let mut sig_ids: HashMap<Vec<u32>, u32> = HashMap::new();
            let mut next = vec![0u32; m];
            for q in 0..m {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(class[q]);
                for a in 0..k {
                    let r = t.trans[q][a];
                    sig.push(if r == DEAD { DEAD } else { class[r as usize] });
                }
                let id = sig_ids.len() as u32;
                next[q] = *sig_ids.entry(sig).or_insert(id);
            }
            let count = sig_ids.len();
            class = next;
            if count == classes {
                break;
            }
            classes = count;
        }
        // one representative per class, renumbered breadth-first
        let mut rep = vec![DEAD; classes];
        for q in 0..m {
            if rep[class[q] as usize] == DEAD {
                rep[class[q] as usize] = q as u32;
            }
        }
        let mut order = vec![DEAD; classes];
        let mut queue = VecDeque::new();
        let mut count = 0u32;
        let start = class[t.initial as usize];
        order[start as usize] = 0;
        count += 1;
        queue.push_back(start);
        let mut bfs = vec![start];
        while let Some(c) = queue.pop_front() {
            let q = rep[c as usize] as usize;
            for a in 0..k {
                let r = t.trans[q][a];
                if r == DEAD {
                    continue;
                }
                let d = class[r as usize];
                if order[d as usize] == DEAD {
                    order[d as usize] = count;
                    count += 1;
                    queue.push_back(d);
                    bfs.push(d);
                }
            }
        }
        let trans = bfs
            .iter()
            .map(|&c| {
                let q = rep[c as usize] as usize;
                t.trans[q]
                    .iter()
                    .map(|&r| {
                        if r == DEAD {
                            DEAD
                        } else {
                            order[class[r as usize] as usize]
                        }
                    })
                    .collect()
            })
            .collect();
        let accepting = bfs
            .iter()
            .map(|&c| t.accepting[rep[c as usize] as usize])
            .collect();
        let labels = t.labels.as_ref().map(|l| {
            bfs.iter()
                .map(|&c| l[rep[c as usize] as usize].clone())
                .collect()
        });
        Dfa {
            n: self.n,
            alphabet: t.alphabet.clone(),
            initial: 0,
            trans,
            accepting,
            labels,
        }
    }

    /// Language equality by exploring the product automaton.
    pub fn language_equal(&self, other: &Dfa<L>) -> Result<bool> {
        Ok(self.distinguishing_word(other)?.is_none())
    }

    /// A shortest word accepted by exactly one of the two automata.
    pub fn distinguishing_word(&self, other: &Dfa<L>) -> Result<Option<Vec<L>>> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let k = self.alphabet.len();
        let acc = |d: &Dfa<L>, q: u32| q != DEAD && d.accepting[q as usize];
        // pair ↦ (predecessor pair, letter)
        let mut parent: HashMap<Pair, Option<(Pair, usize)>> = HashMap::new();
        let start = (self.initial, other.initial);
        parent.insert(start, None);
        let mut queue = VecDeque::from([start]);
        while let Some((p, q)) = queue.pop_front() {
            if acc(self, p) != acc(other, q) {
                let mut word = Vec::new();
                let mut cur = (p, q);
                while let Some(Some((prev, a))) = parent.get(&cur) {
                    word.push(self.alphabet[*a].clone());
                    cur = *prev;
                }
                word.reverse();
                return Ok(Some(word));
            }
            for a in 0..k {
                let next = (self.step(p, a), other.step(q, a));
                if next == (DEAD, DEAD) || parent.contains_key(&next) {
                    continue;
                }
                parent.insert(next, Some(((p, q), a)));
                queue.push_back(next);
            }
        }
        Ok(None)
    }

    /// Serializes to the JSON interchange format.
    pub fn to_json(&self) -> String {
        let mut transitions = Vec::new();
        for (q, row) in self.trans.iter().enumerate() {
            for (a, &r) in row.iter().enumerate() {
                if r != DEAD {
                    transitions.push(JsonTransition {
                        from: q as u32,
                        letter: self.alphabet[a].to_string(),
                        to: r,
                    });
                }
            }
        }
        let doc = JsonDfa {
            n: self.n,
            alphabet: self.alphabet.iter().map(|a| a.to_string()).collect(),
            initial: self.initial,
            states: self.states() as u32,
            accepting: (0..self.states() as u32)
                .filter(|&q| self.accepting[q as usize])
                .collect(),
            transitions,
            labels: self.labels.clone(),
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Dfa<L>> {
        let doc: JsonDfa = serde_json::from_str(text).map_err(|e| Error::Parse {
            column: e.column(),
            message: format!("line {}: {e}", e.line()),
        })?;
        let mut alphabet = Vec::with_capacity(doc.alphabet.len());
        for a in &doc.alphabet {
            alphabet.push(
                a.parse::<L>()
                    .map_err(|_| Error::Malformed(format!("bad letter `{a}`")))?,
            );
        }
        let mut sorted = alphabet.clone();
        sorted.sort();
        sorted.dedup();
        if sorted != alphabet {
            return Err(Error::Malformed(
                "alphabet must be sorted and duplicate-free".into(),
            ));
        }
        let m = doc.states as usize;
        if m == 0 || doc.initial as usize >= m {
            return Err(Error::Malformed("initial state out of range".into()));
        }
        let mut trans = vec![vec![DEAD; alphabet.len()]; m];
        for t in &doc.transitions {
            let a = t
                .letter
                .parse::<L>()
                .map_err(|_| Error::Malformed(format!("bad letter `{}`", t.letter)))?;
            let i = alphabet
                .binary_search(&a)
                .map_err(|_| Error::Malformed(format!("letter `{}` not in alphabet", t.letter)))?;
            if t.from as usize >= m || t.to as usize >= m {
                return Err(Error::Malformed("transition state out of range".into()));
            }
            if trans[t.from as usize][i] != DEAD {
                return Err(Error::Malformed(format!(
                    "nondeterministic transition from {}",
                    t.from
                )));
            }
            trans[t.from as usize][i] = t.to;
        }
        let mut accepting = vec![false; m];
        for &q in &doc.accepting {
            *accepting
                .get_mut(q as usize)
                .ok_or_else(|| Error::Malformed("accepting state out of range".into()))? = true;
        }
        if let Some(l) = &doc.labels {
            if l.len() != m {
                return Err(Error::Malformed(
                    "label count differs from state count".into(),
                ));
            }
        }
        Ok(Dfa {
            n: doc.n,
            alphabet,
            initial: doc.initial,
            trans,
            accepting,
            labels: doc.labels,
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph dfa {\n  rankdir=LR;\n  start [shape=point];\n");
        for q in 0..self.states() {
            let shape = if self.accepting[q] {
                "doublecircle"
            } else {
                "circle"
            };
            let label = match &self.labels {
                Some(l) => format!("{q}\\n{}", l[q].replace('\n', "\\n")),
                None => q.to_string(),
            };
            let _ = writeln!(out, "  q{q} [shape={shape}, label=\"{label}\"];");
        }
        let _ = writeln!(out, "  start -> q{};", self.initial);
        for (q, row) in self.trans.iter().enumerate() {
            for (a, &r) in row.iter().enumerate() {
                if r != DEAD {
                    let _ = writeln!(out, "  q{q} -> q{r} [label=\"{}\"];", self.alphabet[a]);
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTransition {
    from: u32,
    letter: String,
    to: u32,
}

#[derive(Serialize, Deserialize)]
struct JsonDfa {
    n: usize,
    alphabet: Vec<String>,
    initial: u32,
    states: u32,
    accepting: Vec<u32>,
    transitions: Vec<JsonTransition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

/// A nondeterministic automaton with ε-moves, used for substitutions and
/// projections.
#[derive(Debug, Clone)]
pub struct Nfa<L> {
    pub n: usize,
    pub alphabet: Vec<L>,
    pub initial: Vec<u32>,
    /// `(letter index or None for ε, target)` per state.
    pub edges: Vec<Vec<(Option<u32>, u32)>>,
    pub accepting: Vec<bool>,
}

impl<L: Symbol> Nfa<L> {
    pub fn new(n: usize, alphabet: Vec<L>) -> Self {
        Nfa {
            n,
            alphabet,
            initial: Vec::new(),
            edges: Vec::new(),
            accepting: Vec::new(),
        }
    }

    pub fn add_state(&mut self, accepting: bool) -> u32 {
        self.edges.push(Vec::new());
        self.accepting.push(accepting);
        (self.edges.len() - 1) as u32
    }

    fn closure(&self, set: &mut Vec<u32>) {
        let mut seen: std::collections::HashSet<u32> = set.iter().copied().collect();
        let mut stack = set.clone();
        while let Some(q) = stack.pop() {
            for &(a, r) in &self.edges[q as usize] {
                if a.is_none() && seen.insert(r) {
                    set.push(r);
                    stack.push(r);
                }
            }
        }
        set.sort_unstable();
        set.dedup();
    }

    /// Subset construction; fails when more than `max_states` subsets appear.
    pub fn determinize(&self, max_states: usize) -> Result<Dfa<L>> {
        let k = self.alphabet.len();
        let mut start = self.initial.clone();
        self.closure(&mut start);
        let mut ids: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut sets: Vec<Vec<u32>> = Vec::new();
        let mut trans: Vec<Vec<u32>> = Vec::new();
        ids.insert(start.clone(), 0);
        sets.push(start);
        let mut i = 0;
        while i < sets.len() {
            let mut row = vec![DEAD; k];
            let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); k];
            for &q in &sets[i] {
                for &(a, r) in &self.edges[q as usize] {
                    if let Some(a) = a {
                        buckets[a as usize].push(r);
                    }
                }
            }
            for (a, mut b) in buckets.into_iter().enumerate() {
                if b.is_empty() {
                    continue;
                }
                self.closure(&mut b);
                let id = match ids.get(&b) {
                    Some(&id) => id,
                    None => {
                        let id = sets.len() as u32;
                        if sets.len() >= max_states {
                            return Err(Error::Budget(format!(
                                "subset construction exceeded {max_states} states"
                            )));
                        }
                        ids.insert(b.clone(), id);
                        sets.push(b);
                        id
                    }
                };
                row[a] = id;
            }
            trans.push(row);
            i += 1;
        }
        let accepting = sets
            .iter()
            .map(|s| s.iter().any(|&q| self.accepting[q as usize]))
            .collect();
        Ok(Dfa {
            n: self.n,
            alphabet: self.alphabet.clone(),
            initial: 0,
            trans,
            accepting,
            labels: None,
        })
    }
}
