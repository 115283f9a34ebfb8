//! Relaxation: normal forms, the word problem and σ-positivity.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lamination::{Diamond, Lamination, SlidePlan, Theta};
use crate::word::{ArtinWord, Quadrant, SlidingLetter, SlidingWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Strategy {
    #[default]
    Right,
    SimpleRight,
    Left,
    SimpleLeft,
    Outermost,
    RightCovered,
}

impl Strategy {
    pub const ALL: [Strategy; 6] = [
        Strategy::Right,
        Strategy::SimpleRight,
        Strategy::Left,
        Strategy::SimpleLeft,
        Strategy::Outermost,
        Strategy::RightCovered,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Right => "right",
            Strategy::SimpleRight => "simple-right",
            Strategy::Left => "left",
            Strategy::SimpleLeft => "simple-left",
            Strategy::Outermost => "outermost",
            Strategy::RightCovered => "right-covered",
        }
    }

    /// Picks the puncture and arc to slide.
    pub fn plan(self, lam: &Lamination) -> Result<SlidePlan> {
        if self == Strategy::Right {
            return lam.rightmost_relaxable();
        }
        let candidates = lam.relaxable_punctures();
        let k = match self {
            Strategy::Right | Strategy::SimpleRight => candidates.last().copied(),
            Strategy::Left | Strategy::SimpleLeft => candidates.first().copied(),
            Strategy::Outermost => {
                let depth = enclosure_depths(lam);
                candidates.iter().copied().max_by_key(|&m| depth[m])
            }
            Strategy::RightCovered => {
                let counts = single_cover_counts(lam);
                candidates.iter().copied().max_by_key(|&m| (counts[m], m))
            }
        }
        .ok_or(Error::TrivialLamination)?;
        let bigon = lam.bigon_covering(k).expect("candidate is bigon-covered");
        let (left_arc, right_arc) = lam.bigon_neighbors(bigon);
        let arc = match self {
            Strategy::SimpleRight => left_arc,
            Strategy::SimpleLeft => right_arc,
            Strategy::Left => {
                if lam.covers_fixed(left_arc) {
                    right_arc
                } else {
                    left_arc
                }
            }
            _ => {
                if lam.covers_fixed(right_arc) {
                    left_arc
                } else {
                    right_arc
                }
            }
        };
        let plan = lam.plan_slide(k, bigon, arc);
        if plan.before <= lam.puncture_position(0) {
            return Err(Error::Invariant(format!(
                "{} slide of p_{k} would cross the fixed puncture",
                self.name()
            )));
        }
        Ok(plan)
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::Parse {
                column: 1,
                message: format!("unknown strategy `{s}`"),
            })
    }
}

/// For each puncture, the `i` such that it lies between `L_i` and `L_{i+1}`.
fn enclosure_depths(lam: &Lamination) -> Vec<usize> {
    let labels = lam.curve_labels();
    let n = lam.n();
    let mut parity = vec![false; n + 1];
    let mut depth = vec![0; n + 1];
    let mut j = 0;
    for (p, label) in labels.iter().enumerate() {
        match label {
            Some(c) => parity[*c] ^= true,
            None => {
                debug_assert!(lam.is_puncture(p));
                let inner = (0..=n)
                    .find(|&c| parity[c])
                    .expect("every puncture lies inside L_n");
                depth[j] = inner.saturating_sub(1);
                j += 1;
            }
        }
    }
    depth
}

/// For each puncture, the number of arcs covering it and no other puncture.
fn single_cover_counts(lam: &Lamination) -> Vec<usize> {
    let mut counts = vec![0; lam.n() + 1];
    for side in [
        crate::lamination::Side::Upper,
        crate::lamination::Side::Lower,
    ] {
        for p in 0..lam.axis_len() {
            if lam.is_puncture(p) || lam.partner(side, p) < p {
                continue;
            }
            if let Some(iv) = lam.covered(lam.arc_at(side, p)) {
                if iv.lo == iv.hi {
                    counts[iv.lo()] += 1;
                }
            }
        }
    }
    counts
}

/// One relaxation step: the relaxing letter and the relaxed lamination.
pub fn relax_step(lam: &Lamination, strategy: Strategy) -> Result<(SlidingLetter, Lamination)> {
    let plan = strategy.plan(lam)?;
    let next = lam.apply_slide(&plan);
    if next.norm() >= lam.norm() {
        return Err(Error::Invariant(format!(
            "norm did not decrease: {} -> {}",
            lam.norm(),
            next.norm()
        )));
    }
    Ok((plan.letter, next))
}

/// Relaxing letters and laminated norms along a full relaxation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub relaxing: Vec<SlidingLetter>,
    /// Norm before each step, then the final (trivial) norm.
    pub norms: Vec<usize>,
}

pub fn relax_lamination(lam: &Lamination, strategy: Strategy) -> Result<Trace> {
    let mut cur = lam.clone();
    let mut relaxing = Vec::new();
    let mut norms = vec![cur.norm()];
    let trivial_norm = 2 * (lam.n() + 1);
    while cur.norm() > trivial_norm || !cur.is_trivial() {
        let (letter, next) = relax_step(&cur, strategy)?;
        relaxing.push(letter);
        norms.push(next.norm());
        cur = next;
    }
    Ok(Trace { relaxing, norms })
}

pub fn trace(w: &ArtinWord, strategy: Strategy) -> Result<Trace> {
    relax_lamination(&Lamination::of_word(w)?, strategy)
}

/// Normal form of the braid of a lamination under a strategy.
pub fn normal_form_of(lam: &Lamination, strategy: Strategy) -> Result<SlidingWord> {
    let t = relax_lamination(lam, strategy)?;
    Ok(SlidingWord {
        n: lam.n(),
        letters: t.relaxing.iter().rev().map(|s| s.inverse()).collect(),
    })
}

pub fn rnf_with(w: &ArtinWord, strategy: Strategy) -> Result<SlidingWord> {
    normal_form_of(&Lamination::of_word(w)?, strategy)
}

/// The relaxation normal form.
pub fn rnf(w: &ArtinWord) -> Result<SlidingWord> {
    rnf_with(w, Strategy::Right)
}

pub fn braid_equal(w1: &ArtinWord, w2: &ArtinWord) -> Result<bool> {
    if w1.n != w2.n {
        return Err(Error::StrandMismatch(w1.n, w2.n));
    }
    Ok(rnf(w1)? == rnf(w2)?)
}

/// Normal form of the conjugate by Δ, mapped back letterwise.
pub fn left_variant_rnf(w: &ArtinWord) -> Result<SlidingWord> {
    Ok(rnf(&w.phi_delta())?.phi_delta())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PositivityClass {
    Trivial,
    Positive(usize),
    Negative(usize),
}

impl fmt::Display for PositivityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PositivityClass::Trivial => write!(f, "Trivial"),
            PositivityClass::Positive(i) => write!(f, "Positive({i})"),
            PositivityClass::Negative(i) => write!(f, "Negative({i})"),
        }
    }
}

/// Handedness read off the tight lamination through second right arcs.
pub fn classify_lamination(lam: &Lamination) -> Result<PositivityClass> {
    let shadow = lam.shadow();
    let first = (1..lam.n()).find(|&j| {
        !(shadow.get(j, Diamond::Plus, Theta::Up).contains(0)
            && shadow.get(j, Diamond::Plus, Theta::Down).contains(0))
    });
    let Some(i) = first else {
        return Ok(PositivityClass::Trivial);
    };
    let (up, down) = lam.second_right_arcs(i - 1)?;
    let positive = !lam.covers_fixed(up);
    let negative = !lam.covers_fixed(down);
    match (positive, negative) {
        (true, false) => Ok(PositivityClass::Positive(i)),
        (false, true) => Ok(PositivityClass::Negative(i)),
        _ => Err(Error::Invariant(format!(
            "second right arcs of p_{} give no unique sign",
            i - 1
        ))),
    }
}

pub fn classify_geometric(w: &ArtinWord) -> Result<PositivityClass> {
    classify_lamination(&Lamination::of_word(w)?)
}

/// Handedness read off a right-oriented normal word: the first letter with
/// minimal `k` decides.
pub fn classify_syntactic(v: &SlidingWord) -> Result<PositivityClass> {
    if let Some(s) = v.letters.iter().find(|s| !s.quadrant.is_right()) {
        return Err(Error::NotRightOriented(s.to_string()));
    }
    let Some(kmin) = v.letters.iter().map(|s| s.k).min() else {
        return Ok(PositivityClass::Trivial);
    };
    let pivot = v
        .letters
        .iter()
        .find(|s| s.k == kmin)
        .expect("minimum exists");
    Ok(match pivot.quadrant {
        Quadrant::UR => PositivityClass::Positive(kmin),
        _ => PositivityClass::Negative(kmin),
    })
}

/// `w1 ◁ w2` iff `w1⁻¹ w2` is σ-positive.
pub fn dehornoy_less(w1: &ArtinWord, w2: &ArtinWord) -> Result<bool> {
    Ok(matches!(dehornoy_cmp(w1, w2)?, Ordering::Less))
}

pub fn dehornoy_cmp(w1: &ArtinWord, w2: &ArtinWord) -> Result<Ordering> {
    if w1.n != w2.n {
        return Err(Error::StrandMismatch(w1.n, w2.n));
    }
    Ok(match classify_geometric(&w1.invert().concat(w2))? {
        PositivityClass::Trivial => Ordering::Equal,
        PositivityClass::Positive(_) => Ordering::Less,
        PositivityClass::Negative(_) => Ordering::Greater,
    })
}
