//! Bigons, slides, neighbor arcs and shadows.

use super::shadow::{slot, Diamond, ExtendedShadowTable, Interval, ShadowTable, Theta, KEYS};
use super::{ArcRef, Lamination, Side, NONE};
use crate::error::{Error, Result};
use crate::word::{Quadrant, SlidingLetter};

/// A puncture slide: `p_k`, the bigon covering it, the arc it travels
/// along, and where it lands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlidePlan {
    pub k: usize,
    pub bigon: ArcRef,
    pub arc: ArcRef,
    /// Axis position in front of which the puncture is reinserted.
    pub before: usize,
    /// The sliding braid α with `lam(β·α)` the tightened result.
    pub letter: SlidingLetter,
}

impl Lamination {
    /// The bigon covering puncture `j`, if any.
    pub fn bigon_covering(&self, j: usize) -> Option<ArcRef> {
        let p = self.punct[j] as usize;
        if p == 0 || p + 1 >= self.upper.len() {
            return None;
        }
        for side in [Side::Upper, Side::Lower] {
            if self.partner(side, p - 1) == p + 1 {
                return Some(ArcRef {
                    side,
                    left: p - 1,
                    right: p + 1,
                });
            }
        }
        None
    }

    /// All arcs with no arc endpoint strictly inside them.
    pub fn bigons(&self) -> Vec<ArcRef> {
        (0..=self.n)
            .filter_map(|j| self.bigon_covering(j))
            .collect()
    }

    /// Mobile punctures covered by a bigon, increasing.
    pub fn relaxable_punctures(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&j| self.bigon_covering(j).is_some())
            .collect()
    }

    /// Rightmost mobile puncture covered by a bigon.
    pub fn rightmost_bigon_puncture(&self) -> Option<usize> {
        (1..=self.n)
            .rev()
            .find(|&j| self.bigon_covering(j).is_some())
    }

    pub fn covers_fixed(&self, arc: ArcRef) -> bool {
        let p0 = self.punct[0] as usize;
        arc.left < p0 && p0 < arc.right
    }

    /// The two other-side arcs at the bigon's left and right endpoints.
    pub fn bigon_neighbors(&self, bigon: ArcRef) -> (ArcRef, ArcRef) {
        let side = bigon.side.other();
        (
            self.arc_at(side, bigon.left),
            self.arc_at(side, bigon.right),
        )
    }

    /// Plans sliding `p_k` along `arc`, which shares an endpoint with the
    /// bigon covering `p_k`. The puncture follows the arc on its own side of
    /// it and lands next to the far endpoint.
    pub fn plan_slide(&self, k: usize, bigon: ArcRef, arc: ArcRef) -> SlidePlan {
        let p = self.punct[k] as usize;
        let far = if arc.left == bigon.left || arc.left == bigon.right {
            arc.right
        } else {
            arc.left
        };
        debug_assert!(far != bigon.left && far != bigon.right);
        let inside = arc.left < p && p < arc.right;
        let before = match (far < p, inside) {
            (true, true) | (false, false) => far + 1,
            (true, false) | (false, true) => far,
        };
        let mut target = self.punctures_before(before);
        if p < before {
            target -= 1;
        }
        debug_assert!(target >= 1 && target != k);
        let quadrant = match (arc.side, target < k) {
            (Side::Upper, true) => Quadrant::UL,
            (Side::Lower, true) => Quadrant::LL,
            (Side::Upper, false) => Quadrant::UR,
            (Side::Lower, false) => Quadrant::LR,
        };
        let letter = SlidingLetter::new(quadrant, k.min(target), k.max(target));
        SlidePlan {
            k,
            bigon,
            arc,
            before,
            letter,
        }
    }

    /// The relaxation slide: rightmost bigon-covered puncture, along the arc
    /// sharing the bigon's right endpoint unless that arc covers `p_0`.
    pub fn rightmost_relaxable(&self) -> Result<SlidePlan> {
        let k = self
            .rightmost_bigon_puncture()
            .ok_or(Error::TrivialLamination)?;
        let bigon = self.bigon_covering(k).expect("bigon exists");
        let (a1, a2) = self.bigon_neighbors(bigon);
        let arc = if self.covers_fixed(a2) { a1 } else { a2 };
        assert!(arc != bigon, "slide arc coincides with the bigon");
        assert!(
            arc.left < bigon.left,
            "slide arc does not start left of the bigon"
        );
        let plan = self.plan_slide(k, bigon, arc);
        assert!(
            plan.letter.k < plan.letter.l && plan.letter.l == k,
            "relaxation moves right"
        );
        Ok(plan)
    }

    /// The right-relaxing braid R(β), a left-oriented sliding letter.
    pub fn relaxing_braid(&self) -> Result<SlidingLetter> {
        Ok(self.rightmost_relaxable()?.letter)
    }

    /// The untightened lamination after the slide.
    pub fn slide(&self, plan: &SlidePlan) -> Lamination {
        self.relocated(plan.k, plan.before)
    }

    /// Slide then tighten.
    pub fn apply_slide(&self, plan: &SlidePlan) -> Lamination {
        let out = self.slide(plan).tighten();
        debug_assert_eq!(out.validate(), Ok(()));
        out
    }

    /// Arc through the left (`Minus`) or right (`Plus`) neighbor point of `p_i`.
    pub fn neighbor_arc(&self, i: usize, d: Diamond, t: Theta) -> ArcRef {
        let p = self.punct[i] as usize;
        let q = if d == Diamond::Plus { p + 1 } else { p - 1 };
        let side = if t == Theta::Up {
            Side::Upper
        } else {
            Side::Lower
        };
        self.arc_at(side, q)
    }

    pub fn shadow(&self) -> ShadowTable {
        let mut entries = vec![Interval::single(0); 4 * self.n];
        for i in 1..=self.n {
            for (d, t) in KEYS {
                let arc = self.neighbor_arc(i, d, t);
                entries[slot(i, d, t)] = self
                    .covered(arc)
                    .expect("tight lamination: arc covers a puncture");
            }
        }
        ShadowTable::from_entries(self.n, entries)
    }

    pub fn extended_shadow(&self) -> ExtendedShadowTable {
        let k = self.rightmost_bigon_puncture();
        let mut out = ExtendedShadowTable::new(self.n);
        for i in 1..=self.n {
            for (d, t) in KEYS {
                let arc = self.neighbor_arc(i, d, t);
                let s = self
                    .covered(arc)
                    .expect("tight lamination: arc covers a puncture");
                let j = match k {
                    Some(k) if s.contains(k) => {
                        let b = self.arc_at(arc.side.other(), arc.right);
                        Some(
                            self.covered(b)
                                .expect("tight lamination: arc covers a puncture"),
                        )
                    }
                    _ => None,
                };
                out.set(i, d, t, (s, j));
            }
        }
        out
    }

    /// Upper and lower arcs through the second crossing right of `p_i`.
    pub fn second_right_arcs(&self, i: usize) -> Result<(ArcRef, ArcRef)> {
        if i >= self.n {
            return Err(Error::Invariant(format!("p_{i} is the rightmost puncture")));
        }
        let mut q = self.punct[i] as usize;
        let mut seen = 0;
        while seen < 2 {
            q += 1;
            if self.upper[q] != NONE {
                seen += 1;
            }
        }
        Ok((self.arc_at(Side::Upper, q), self.arc_at(Side::Lower, q)))
    }
}
