//! Shadow tables: intervals of punctures covered by neighbor arcs.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A nonempty interval `{lo, …, hi}` of puncture indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub lo: u8,
    pub hi: u8,
}

impl Interval {
    pub fn new(lo: usize, hi: usize) -> Self {
        debug_assert!(lo <= hi && hi < 255);
        Interval {
            lo: lo as u8,
            hi: hi as u8,
        }
    }

    pub fn single(i: usize) -> Self {
        Interval::new(i, i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.lo as usize <= i && i <= self.hi as usize
    }

    pub fn is_subset(self, other: Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn lo(self) -> usize {
        self.lo as usize
    }

    pub fn hi(self) -> usize {
        self.hi as usize
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{{{}}}", self.lo)
        } else {
            write!(f, "{{{}..{}}}", self.lo, self.hi)
        }
    }
}

/// Left (`Minus`) or right (`Plus`) neighbor point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Diamond {
    Minus,
    Plus,
}

/// Upper (`Up`) or lower (`Down`) arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theta {
    Up,
    Down,
}

impl Theta {
    pub fn flip(self) -> Theta {
        match self {
            Theta::Up => Theta::Down,
            Theta::Down => Theta::Up,
        }
    }
}

pub(crate) fn slot(i: usize, d: Diamond, t: Theta) -> usize {
    debug_assert!(i >= 1);
    ((i - 1) * 2 + (d == Diamond::Plus) as usize) * 2 + (t == Theta::Down) as usize
}

pub(crate) const KEYS: [(Diamond, Theta); 4] = [
    (Diamond::Minus, Theta::Up),
    (Diamond::Plus, Theta::Up),
    (Diamond::Minus, Theta::Down),
    (Diamond::Plus, Theta::Down),
];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShadowTable {
    pub n: usize,
    entries: Vec<Interval>,
}

impl ShadowTable {
    pub(crate) fn from_entries(n: usize, entries: Vec<Interval>) -> Self {
        debug_assert_eq!(entries.len(), 4 * n);
        ShadowTable { n, entries }
    }

    pub fn get(&self, i: usize, d: Diamond, t: Theta) -> Interval {
        self.entries[slot(i, d, t)]
    }
}

const EMPTY: u8 = u8::MAX;

/// Extended shadows packed four bytes per entry: `I.lo, I.hi, J.lo, J.hi`,
/// with `J` empty encoded as `EMPTY`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtendedShadowTable {
    n: u8,
    data: Box<[u8]>,
}

impl ExtendedShadowTable {
    pub fn new(n: usize) -> Self {
        ExtendedShadowTable {
            n: n as u8,
            data: vec![0; 16 * n].into_boxed_slice(),
        }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn get(&self, i: usize, d: Diamond, t: Theta) -> (Interval, Option<Interval>) {
        let s = 4 * slot(i, d, t);
        let d = &self.data[s..s + 4];
        let j = (d[2] != EMPTY).then_some(Interval { lo: d[2], hi: d[3] });
        (Interval { lo: d[0], hi: d[1] }, j)
    }

    pub fn shadow(&self, i: usize, d: Diamond, t: Theta) -> Interval {
        self.get(i, d, t).0
    }

    pub fn set(&mut self, i: usize, d: Diamond, t: Theta, v: (Interval, Option<Interval>)) {
        let s = 4 * slot(i, d, t);
        self.data[s] = v.0.lo;
        self.data[s + 1] = v.0.hi;
        match v.1 {
            Some(j) => {
                self.data[s + 2] = j.lo;
                self.data[s + 3] = j.hi;
            }
            None => {
                self.data[s + 2] = EMPTY;
                self.data[s + 3] = EMPTY;
            }
        }
    }

    /// Swaps the ↑ and ↓ keys of every entry.
    pub fn mirror(&self) -> Self {
        let mut out = self.clone();
        for i in 1..=self.n() {
            for d in [Diamond::Minus, Diamond::Plus] {
                out.set(i, d, Theta::Up, self.get(i, d, Theta::Down));
                out.set(i, d, Theta::Down, self.get(i, d, Theta::Up));
            }
        }
        out
    }

    pub fn shadow_table(&self) -> ShadowTable {
        let mut entries = vec![Interval::single(0); 4 * self.n()];
        for i in 1..=self.n() {
            for (d, t) in KEYS {
                entries[slot(i, d, t)] = self.shadow(i, d, t);
            }
        }
        ShadowTable::from_entries(self.n(), entries)
    }

    /// One line per `(i, ⋄, ϑ)`, e.g. `2 + up {3} {0..3}`.
    pub fn describe(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.n() {
            for (d, t) in KEYS {
                let (a, b) = self.get(i, d, t);
                let ds = if d == Diamond::Plus { "+" } else { "-" };
                let ts = if t == Theta::Up { "up" } else { "down" };
                let bs = b.map_or_else(|| "{}".to_string(), |b| b.to_string());
                out.push_str(&format!("{i} {ds} {ts} {a} {bs}\n"));
            }
        }
        out
    }
}
