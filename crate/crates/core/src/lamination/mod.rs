//! Tight laminations of the punctured disk as an axis word plus two
//! non-crossing matchings.
//!
//! Axis positions double as crossing ids. A puncture position carries
//! `NONE` in both matchings. Punctures are numbered left to right, the
//! leftmost one being the fixed puncture `p_0`.

mod arcs;
mod render;
mod shadow;

pub use arcs::SlidePlan;
pub use shadow::{Diamond, ExtendedShadowTable, Interval, ShadowTable, Theta};

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::word::ArtinWord;

pub(crate) const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Upper,
    Lower,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Upper => Side::Lower,
            Side::Lower => Side::Upper,
        }
    }
}

/// An arc given by its side and its two axis endpoints, `left < right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArcRef {
    pub side: Side,
    pub left: usize,
    pub right: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lamination {
    n: usize,
    upper: Vec<u32>,
    lower: Vec<u32>,
    punct: Vec<u32>,
}

impl Lamination {
    /// Nested circles: `x_n … x_0 P0 y_0 P1 y_1 … Pn y_n`.
    pub fn trivial(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewStrands(n));
        }
        let len = 3 * n + 3;
        let mut upper = vec![NONE; len];
        for j in 0..=n {
            let x = n - j;
            let y = n + 2 + 2 * j;
            upper[x] = y as u32;
            upper[y] = x as u32;
        }
        let lower = upper.clone();
        Ok(Lamination::from_matchings(n, upper, lower))
    }

    fn from_matchings(n: usize, upper: Vec<u32>, lower: Vec<u32>) -> Self {
        let punct = (0..upper.len())
            .filter(|&p| upper[p] == NONE)
            .map(|p| p as u32)
            .collect();
        Lamination {
            n,
            upper,
            lower,
            punct,
        }
    }

    /// Tight lamination of the braid `w`, from the trivial one.
    pub fn of_word(w: &ArtinWord) -> Result<Self> {
        Lamination::trivial(w.n)?.apply_word(w)
    }

    pub fn apply_word(&self, w: &ArtinWord) -> Result<Self> {
        if w.n != self.n {
            return Err(Error::StrandMismatch(self.n, w.n));
        }
        let mut lam = self.clone();
        for &g in &w.letters {
            lam = lam.apply_artin(g)?;
        }
        Ok(lam)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of axis items, punctures included.
    pub fn axis_len(&self) -> usize {
        self.upper.len()
    }

    /// Number of crossings with the real axis.
    pub fn norm(&self) -> usize {
        self.upper.len() - self.n - 1
    }

    pub fn is_trivial(&self) -> bool {
        *self == Lamination::trivial(self.n).expect("n >= 2")
    }

    pub fn puncture_position(&self, j: usize) -> usize {
        self.punct[j] as usize
    }

    pub fn is_puncture(&self, p: usize) -> bool {
        self.upper[p] == NONE
    }

    pub fn partner(&self, side: Side, p: usize) -> usize {
        let q = match side {
            Side::Upper => self.upper[p],
            Side::Lower => self.lower[p],
        };
        debug_assert!(q != NONE);
        q as usize
    }

    pub fn arc_at(&self, side: Side, p: usize) -> ArcRef {
        let q = self.partner(side, p);
        ArcRef {
            side,
            left: p.min(q),
            right: p.max(q),
        }
    }

    /// Number of punctures strictly left of axis position `p`.
    pub fn punctures_before(&self, p: usize) -> usize {
        self.punct.partition_point(|&q| (q as usize) < p)
    }

    /// Interval of punctures covered by an arc, if any.
    pub fn covered(&self, arc: ArcRef) -> Option<Interval> {
        let lo = self.punctures_before(arc.left + 1);
        let hi = self.punctures_before(arc.right);
        (lo < hi).then(|| Interval::new(lo, hi - 1))
    }

    pub fn mirror(&self) -> Lamination {
        Lamination {
            n: self.n,
            upper: self.lower.clone(),
            lower: self.upper.clone(),
            punct: self.punct.clone(),
        }
    }

    /// Right action of one signed Artin generator, followed by tightening.
    pub fn apply_artin(&self, g: i32) -> Result<Lamination> {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= self.n {
            return Err(Error::GeneratorOutOfRange { gen: g, n: self.n });
        }
        let (upper, lower) = self.twisted(i, g > 0);
        let lam = tighten_raw(self.n, upper, lower);
        debug_assert_eq!(lam.validate(), Ok(()));
        Ok(lam)
    }

    /// Half twist of `p_i`, `p_{i+1}` on the raw matchings, before tightening.
    ///
    /// Each strand `c_k` crossing between the two punctures is replaced by a
    /// three-crossing spiral `L_k`, `c'_k`, `R_k`.
    fn twisted(&self, i: usize, positive: bool) -> (Vec<u32>, Vec<u32>) {
        let pi = self.punct[i] as usize;
        let pj = self.punct[i + 1] as usize;
        let m = pj - pi - 1;
        debug_assert!(m >= 1);
        let len = self.upper.len() + 2 * m;
        let map = |p: usize| -> u32 {
            if p < pi {
                p as u32
            } else if p > pj {
                (p + 2 * m) as u32
            } else {
                NONE
            }
        };
        let mut upper = vec![NONE; len];
        let mut lower = vec![NONE; len];
        for p in (0..pi).chain(pj + 1..self.upper.len()) {
            if self.upper[p] == NONE {
                continue;
            }
            upper[map(p) as usize] = map(self.upper[p] as usize);
            lower[map(p) as usize] = map(self.lower[p] as usize);
        }
        let pair = |arr: &mut Vec<u32>, a: usize, b: usize| {
            arr[a] = b as u32;
            arr[b] = a as u32;
        };
        for k in 1..=m {
            let c = pi + k;
            let x = map(self.upper[c] as usize) as usize;
            let y = map(self.lower[c] as usize) as usize;
            debug_assert!(
                x != NONE as usize && y != NONE as usize,
                "arc inside twisted block"
            );
            let l = pi + k - 1;
            let cp = pi + m + 1 + (m - k);
            let r = pi + 2 * m + 1 + k;
            if positive {
                pair(&mut lower, y, l);
                pair(&mut upper, l, cp);
                pair(&mut lower, cp, r);
                pair(&mut upper, x, r);
            } else {
                pair(&mut upper, x, l);
                pair(&mut lower, l, cp);
                pair(&mut upper, cp, r);
                pair(&mut lower, y, r);
            }
        }
        (upper, lower)
    }

    /// Moves puncture `p_k` to sit just before axis position `before` (an
    /// index into the current axis), curves untouched. The result is
    /// generally not tight.
    pub(crate) fn relocated(&self, k: usize, before: usize) -> Lamination {
        let from = self.punct[k] as usize;
        let len = self.upper.len();
        let mut order: Vec<usize> = Vec::with_capacity(len);
        for p in 0..len {
            if p == before {
                order.push(from);
            }
            if p != from {
                order.push(p);
            }
        }
        if before == len {
            order.push(from);
        }
        let mut new_of = vec![0u32; len];
        for (q, &p) in order.iter().enumerate() {
            new_of[p] = q as u32;
        }
        let mut upper = vec![NONE; len];
        let mut lower = vec![NONE; len];
        for p in 0..len {
            if self.upper[p] != NONE {
                upper[new_of[p] as usize] = new_of[self.upper[p] as usize];
                lower[new_of[p] as usize] = new_of[self.lower[p] as usize];
            }
        }
        Lamination::from_matchings(self.n, upper, lower)
    }

    /// Removes useless bigons until none remain.
    pub fn tighten(&self) -> Lamination {
        tighten_raw(self.n, self.upper.clone(), self.lower.clone())
    }

    /// Builds a possibly non-tight lamination from raw matchings (for tests
    /// and tooling), checking the structural invariants except tightness.
    pub fn from_raw(n: usize, upper: Vec<u32>, lower: Vec<u32>) -> Result<Lamination> {
        if upper.len() != lower.len() {
            return Err(Error::Invariant("matchings of different lengths".into()));
        }
        let lam = Lamination::from_matchings(n, upper, lower);
        lam.validate_structure().map_err(Error::Invariant)?;
        Ok(lam)
    }

    pub fn upper_matching(&self) -> &[u32] {
        &self.upper
    }

    pub fn lower_matching(&self) -> &[u32] {
        &self.lower
    }

    /// Curve index of every crossing (`None` at punctures). Curve `j` is the
    /// one whose inner part holds exactly `j` mobile punctures.
    pub fn curve_labels(&self) -> Vec<Option<usize>> {
        self.curve_labels_checked()
            .expect("structurally valid lamination")
    }

    fn curve_labels_checked(&self) -> std::result::Result<Vec<Option<usize>>, String> {
        let len = self.upper.len();
        let mut cycle = vec![usize::MAX; len];
        let mut cycles = 0;
        for start in 0..len {
            if self.upper[start] == NONE || cycle[start] != usize::MAX {
                continue;
            }
            let mut p = start;
            let mut up = true;
            loop {
                if cycle[p] != usize::MAX && cycle[p] != cycles {
                    return Err("curves share a crossing".into());
                }
                cycle[p] = cycles;
                p = if up { self.upper[p] } else { self.lower[p] } as usize;
                up = !up;
                if p == start && up {
                    break;
                }
            }
            cycles += 1;
        }
        if cycles != self.n + 1 {
            return Err(format!("{cycles} curves instead of {}", self.n + 1));
        }
        let mut parity = vec![false; cycles];
        let mut left_of_p0 = vec![0usize; cycles];
        let mut inside = vec![0usize; cycles];
        let mut seen_p0 = false;
        for p in 0..len {
            if self.upper[p] == NONE {
                if !seen_p0 {
                    seen_p0 = true;
                } else {
                    for c in 0..cycles {
                        inside[c] += parity[c] as usize;
                    }
                }
            } else {
                parity[cycle[p]] ^= true;
                if !seen_p0 {
                    left_of_p0[cycle[p]] += 1;
                }
            }
        }
        if left_of_p0.iter().any(|&c| c != 1) {
            return Err("a curve does not cross the axis exactly once left of p0".into());
        }
        let mut used = vec![false; cycles];
        for &j in &inside {
            if j > self.n || used[j] {
                return Err("inner puncture counts are not 0..n".into());
            }
            used[j] = true;
        }
        Ok((0..len)
            .map(|p| (self.upper[p] != NONE).then(|| inside[cycle[p]]))
            .collect())
    }

    fn validate_structure(&self) -> std::result::Result<(), String> {
        let len = self.upper.len();
        if self.punct.len() != self.n + 1 {
            return Err(format!(
                "{} punctures instead of {}",
                self.punct.len(),
                self.n + 1
            ));
        }
        if self.punct[0] == 0 {
            return Err("p0 is not preceded by a crossing".into());
        }
        for (name, m) in [("upper", &self.upper), ("lower", &self.lower)] {
            let mut stack: Vec<usize> = Vec::new();
            for p in 0..len {
                let q = m[p];
                if (q == NONE) != (self.upper[p] == NONE) || (q == NONE) != (self.lower[p] == NONE)
                {
                    return Err(format!(
                        "{name} matching disagrees on puncture positions at {p}"
                    ));
                }
                if q == NONE {
                    continue;
                }
                let q = q as usize;
                if q >= len || q == p || m[q] as usize != p {
                    return Err(format!("{name} matching is not an involution at {p}"));
                }
                if q > p {
                    stack.push(p);
                } else if stack.pop() != Some(q) {
                    return Err(format!("{name} matching has crossing arcs at {p}"));
                }
            }
        }
        self.curve_labels_checked().map(|_| ())
    }

    /// Full structural check, tightness included.
    pub fn validate(&self) -> std::result::Result<(), String> {
        self.validate_structure()?;
        for side in [Side::Upper, Side::Lower] {
            for p in 0..self.upper.len() {
                if self.upper[p] == NONE {
                    continue;
                }
                let arc = self.arc_at(side, p);
                if self.covered(arc).is_none() {
                    return Err(format!("arc {arc:?} covers no puncture"));
                }
            }
        }
        Ok(())
    }

    /// Line-based dump: axis items, then matching pairs.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let mut j = 0;
        let items: Vec<String> = (0..self.upper.len())
            .map(|p| {
                if self.upper[p] == NONE {
                    j += 1;
                    format!("P{}", j - 1)
                } else {
                    format!("c{p}")
                }
            })
            .collect();
        let _ = writeln!(out, "n {}", self.n);
        let _ = writeln!(out, "axis {}", items.join(" "));
        for (name, m) in [("upper", &self.upper), ("lower", &self.lower)] {
            let pairs: Vec<String> = (0..m.len())
                .filter(|&p| m[p] != NONE && (m[p] as usize) > p)
                .map(|p| format!("{}-{}", p, m[p]))
                .collect();
            let _ = writeln!(out, "{name} {}", pairs.join(" "));
        }
        out
    }
}

/// Worklist removal of useless bigons on raw matchings.
fn tighten_raw(n: usize, mut upper: Vec<u32>, mut lower: Vec<u32>) -> Lamination {
    let len = upper.len();
    let mut prev: Vec<u32> = (0..len)
        .map(|p| if p == 0 { NONE } else { p as u32 - 1 })
        .collect();
    let mut next: Vec<u32> = (0..len)
        .map(|p| if p + 1 == len { NONE } else { p as u32 + 1 })
        .collect();
    let mut alive = vec![true; len];
    let mut work: Vec<u32> = (0..len as u32)
        .rev()
        .filter(|&p| upper[p as usize] != NONE)
        .collect();
    let mut removed = 0;
    while let Some(a) = work.pop() {
        let a = a as usize;
        if !alive[a] {
            continue;
        }
        for side in 0..2 {
            let (this, other) = if side == 0 {
                (&mut upper, &mut lower)
            } else {
                (&mut lower, &mut upper)
            };
            let b = this[a];
            if b != next[a] && b != prev[a] {
                continue;
            }
            let b = b as usize;
            let (a2, b2) = (other[a] as usize, other[b] as usize);
            assert!(
                a2 != b,
                "tightening produced a closed curve around no puncture"
            );
            other[a2] = b2 as u32;
            other[b2] = a2 as u32;
            let (l, r) = (a.min(b), a.max(b));
            let before = prev[l];
            let after = next[r];
            if before != NONE {
                next[before as usize] = after;
            }
            if after != NONE {
                prev[after as usize] = before;
            }
            alive[a] = false;
            alive[b] = false;
            removed += 2;
            for q in [a2 as u32, b2 as u32, before, after] {
                if q != NONE {
                    work.push(q);
                }
            }
            break;
        }
    }
    if removed == 0 {
        return Lamination::from_matchings(n, upper, lower);
    }
    let mut new_of = vec![NONE; len];
    let mut q = 0u32;
    for p in 0..len {
        if alive[p] {
            new_of[p] = q;
            q += 1;
        }
    }
    let mut up = Vec::with_capacity(q as usize);
    let mut lo = Vec::with_capacity(q as usize);
    for p in 0..len {
        if alive[p] {
            up.push(if upper[p] == NONE {
                NONE
            } else {
                new_of[upper[p] as usize]
            });
            lo.push(if lower[p] == NONE {
                NONE
            } else {
                new_of[lower[p] as usize]
            });
        }
    }
    Lamination::from_matchings(n, up, lo)
}
