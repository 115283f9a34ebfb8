//! Integer curve coordinates: an independent word-problem oracle.
//!
//! The disk carries the fixed puncture to the left of the n mobile ones, so
//! the braid group acts on n coordinate pairs `(a_i, b_i)` and every Artin
//! generator uses the interior update rule.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::ArtinWord;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoordinateState {
    pub n: usize,
    /// `a_1, b_1, …, a_n, b_n`
    pub coords: Vec<i128>,
}

fn pos(x: i128) -> i128 {
    x.max(0)
}

fn neg(x: i128) -> i128 {
    x.min(0)
}

struct Ops;

impl Ops {
    fn add(a: i128, b: i128) -> Result<i128> {
        a.checked_add(b).ok_or(Error::Overflow)
    }
    fn sub(a: i128, b: i128) -> Result<i128> {
        a.checked_sub(b).ok_or(Error::Overflow)
    }
}

impl CoordinateState {
    pub fn identity(n: usize) -> Self {
        let mut coords = Vec::with_capacity(2 * n);
        for _ in 0..n {
            coords.push(0);
            coords.push(1);
        }
        CoordinateState { n, coords }
    }

    /// Applies the word letter by letter, left to right.
    pub fn act(&self, w: &ArtinWord) -> Result<CoordinateState> {
        if w.n != self.n {
            return Err(Error::StrandMismatch(self.n, w.n));
        }
        let mut out = self.clone();
        for &g in &w.letters {
            out.apply(g)?;
        }
        Ok(out)
    }

    pub fn apply(&mut self, g: i32) -> Result<()> {
        let i = g.unsigned_abs() as usize - 1;
        let (a1, b1, a2, b2) = (
            self.coords[2 * i],
            self.coords[2 * i + 1],
            self.coords[2 * i + 2],
            self.coords[2 * i + 3],
        );
        let (na1, nb1, na2, nb2) = if g > 0 {
            let t = Ops::add(Ops::sub(Ops::sub(a1, a2)?, neg(b1))?, pos(b2))?;
            (
                Ops::add(Ops::add(a1, pos(b1))?, pos(Ops::sub(pos(b2), t)?))?,
                Ops::sub(b2, pos(t))?,
                Ops::add(Ops::add(a2, neg(b2))?, neg(Ops::add(neg(b1), t)?))?,
                Ops::add(b1, pos(t))?,
            )
        } else {
            let t = Ops::sub(Ops::add(Ops::sub(a1, a2)?, neg(b1))?, pos(b2))?;
            (
                Ops::sub(Ops::sub(a1, pos(b1))?, pos(Ops::add(pos(b2), t)?))?,
                Ops::add(b2, neg(t))?,
                Ops::sub(Ops::sub(a2, neg(b2))?, neg(Ops::sub(neg(b1), t)?))?,
                Ops::sub(b1, neg(t))?,
            )
        };
        self.coords[2 * i] = na1;
        self.coords[2 * i + 1] = nb1;
        self.coords[2 * i + 2] = na2;
        self.coords[2 * i + 3] = nb2;
        Ok(())
    }
}

/// Coordinates of the braid `w` (image of the identity state).
pub fn coordinates(w: &ArtinWord) -> Result<CoordinateState> {
    CoordinateState::identity(w.n).act(w)
}

/// Word-problem oracle: equal coordinates iff equal braids.
pub fn oracle_equal(w1: &ArtinWord, w2: &ArtinWord) -> Result<bool> {
    if w1.n != w2.n {
        return Err(Error::StrandMismatch(w1.n, w2.n));
    }
    Ok(coordinates(w1)? == coordinates(w2)?)
}
