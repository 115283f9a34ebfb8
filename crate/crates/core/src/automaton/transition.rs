//! The transition predicate `dec` and transition function `comp`, computed
//! on extended shadows alone.

use crate::error::{Error, Result};
use crate::lamination::{Diamond, ExtendedShadowTable, Interval, Lamination, Theta};
use crate::word::{ArtinWord, Quadrant, SlidingLetter};

use Diamond::{Minus, Plus};
use Theta::{Down, Up};

/// Which normal form the transitions describe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    /// The relaxation normal form.
    #[default]
    Right,
    /// Sliding always along the left neighbor arc; requirement (2) becomes
    /// `π(k,+,↑) ⊆ {0..k}`.
    SimpleRight,
}

type Entry = (Interval, Option<Interval>);

/// Index renaming between `β` and `β·[k↷l]`.
#[derive(Debug, Clone, Copy)]
pub struct TransferMaps {
    pub k: usize,
    pub l: usize,
}

impl TransferMaps {
    pub fn psi(&self, i: usize) -> usize {
        i - (self.k < i) as usize
    }

    pub fn psi_bar(&self, i: usize) -> usize {
        i - (self.k < i && i <= self.l) as usize
    }

    pub fn big_psi(&self, iv: Interval) -> Interval {
        Interval::new(self.psi(iv.lo()), iv.hi())
    }

    /// `I` with `p_k` removed, renamed. An interval ending at `k` shrinks,
    /// which the plain `ψ(max I)` would miss.
    pub fn big_psi_star(&self, iv: Interval) -> Interval {
        Interval::new(self.psi(iv.lo()), iv.hi() - (self.k <= iv.hi()) as usize)
    }

    fn both(&self, iv: Interval) -> bool {
        iv.contains(self.k) && iv.contains(self.l)
    }

    pub fn theta_up(&self, (i, j): Entry) -> Entry {
        if self.both(i) {
            (self.big_psi(i), j.map(|j| self.big_psi(j)))
        } else {
            (self.big_psi_star(i), None)
        }
    }

    pub fn theta_down(&self, (i, j): Entry) -> Entry {
        if j.is_some_and(|j| self.both(j)) {
            (self.big_psi(i), j.map(|j| self.big_psi(j)))
        } else {
            (self.big_psi_star(i), None)
        }
    }
}

fn iv(lo: usize, hi: usize) -> Interval {
    Interval::new(lo, hi)
}

fn check_letter(s: &ExtendedShadowTable, lambda: SlidingLetter) -> Result<()> {
    if !lambda.quadrant.is_right() {
        return Err(Error::NotRightOriented(lambda.to_string()));
    }
    if lambda.l > s.n() {
        return Err(Error::BadLetter {
            quadrant: format!("{:?}", lambda.quadrant),
            k: lambda.k,
            l: lambda.l,
            n: s.n(),
        });
    }
    Ok(())
}

/// Whether `R(β·λ) = λ⁻¹`, given the extended shadow of `β`.
pub fn dec(s: &ExtendedShadowTable, lambda: SlidingLetter, variant: Variant) -> Result<bool> {
    check_letter(s, lambda)?;
    Ok(match lambda.quadrant {
        Quadrant::UR => dec_upper(s, lambda.k, lambda.l, variant),
        _ => dec_upper(&s.mirror(), lambda.k, lambda.l, variant),
    })
}

fn dec_upper(s: &ExtendedShadowTable, k: usize, l: usize, variant: Variant) -> bool {
    let n = s.n();
    let pi = |i, d, t| s.shadow(i, d, t);
    if pi(k, Plus, Down) == Interval::single(k) {
        return false;
    }
    let second = match variant {
        Variant::Right => pi(k, Plus, Up) == iv(0, k) || pi(k, Minus, Up).is_subset(iv(k, l - 1)),
        Variant::SimpleRight => pi(k, Plus, Up).is_subset(iv(0, k)),
    };
    if !second {
        return false;
    }
    for i in l + 2..=n {
        if !(pi(i, Minus, Up).contains(l + 1) && pi(i, Minus, Down).contains(l + 1)) {
            return false;
        }
    }
    if l < n {
        if !pi(l + 1, Plus, Up).contains(k) {
            return false;
        }
        if !(pi(l + 1, Plus, Down) != Interval::single(l + 1)
            || pi(l + 1, Minus, Up).is_subset(iv(k + 1, l)))
        {
            return false;
        }
    }
    true
}

/// Extended shadow of the trivial braid.
pub fn epsilon_state(n: usize) -> ExtendedShadowTable {
    Lamination::trivial(n).expect("n >= 2").extended_shadow()
}

/// Extended shadow of `β·λ` from that of `β ≠ ε`; requires `dec`.
///
/// The empty braid is recognized by its (unique) extended shadow and
/// handled geometrically.
pub fn comp(
    s: &ExtendedShadowTable,
    lambda: SlidingLetter,
    variant: Variant,
) -> Result<ExtendedShadowTable> {
    if !dec(s, lambda, variant)? {
        return Err(Error::NoTransition(lambda.to_string()));
    }
    Ok(comp_unchecked(s, lambda))
}

pub(crate) fn comp_unchecked(
    s: &ExtendedShadowTable,
    lambda: SlidingLetter,
) -> ExtendedShadowTable {
    if *s == epsilon_state(s.n()) {
        let w = ArtinWord {
            n: s.n(),
            letters: lambda.to_artin(),
        };
        return Lamination::of_word(&w)
            .expect("valid letter")
            .extended_shadow();
    }
    comp_nonempty(s, lambda)
}

/// `comp` for a state known to differ from the empty braid's.
pub(crate) fn comp_nonempty(s: &ExtendedShadowTable, lambda: SlidingLetter) -> ExtendedShadowTable {
    match lambda.quadrant {
        Quadrant::UR => comp_upper(s, lambda.k, lambda.l),
        _ => comp_upper(&s.mirror(), lambda.k, lambda.l).mirror(),
    }
}

fn comp_upper(s: &ExtendedShadowTable, k: usize, l: usize) -> ExtendedShadowTable {
    let n = s.n();
    let t = TransferMaps { k, l };
    let pi = |i, d, th| s.shadow(i, d, th);
    let pi2 = |i, d, th| s.get(i, d, th);
    let mut out = ExtendedShadowTable::new(n);

    // the slid puncture, now p_l
    // under (2′) alone the puncture arrives below the arc right of p_k
    let (u, v) = if pi(k, Plus, Up) == iv(0, k) {
        (0, k)
    } else if pi(k, Minus, Up).is_subset(iv(k, l - 1)) {
        (k, pi(k, Minus, Up).hi())
    } else {
        (pi(k, Plus, Up).lo(), k)
    };
    out.set(l, Plus, Up, (iv(u, l), Some(iv(l, l))));
    out.set(l, Minus, Up, (iv(v, l - 1), None));
    out.set(l, Plus, Down, (iv(l, l), Some(iv(u, l))));
    out.set(l, Minus, Down, (iv(l, l), Some(iv(u, l))));

    // p_{l+1} keeps its name
    if l < n {
        let x = pi(l + 1, Plus, Up).lo();
        out.set(l + 1, Plus, Up, t.theta_up(pi2(l + 1, Plus, Up)));
        out.set(l + 1, Plus, Down, t.theta_down(pi2(l + 1, Plus, Down)));
        if pi(l + 1, Minus, Up).contains(k) {
            out.set(l + 1, Minus, Up, t.theta_up(pi2(l + 1, Minus, Up)));
            out.set(l + 1, Minus, Down, t.theta_down(pi2(l + 1, Minus, Down)));
        } else {
            out.set(l + 1, Minus, Up, (iv(x, l), Some(iv(l, l))));
            out.set(l + 1, Minus, Down, (iv(l, l), Some(iv(x, l))));
        }
    }

    // p_l becomes p_{l-1}
    {
        let y = pi(l, Plus, Up).lo();
        let z = pi(l, Minus, Up).lo();
        let k_plus = pi(l, Plus, Up).contains(k);
        let k_minus = pi(l, Minus, Up).contains(k);
        let plus_up = if !k_plus {
            t.theta_up(pi2(l, Plus, Up))
        } else if k_minus {
            (iv(l - 1, l - 1), None)
        } else {
            (iv(z - 1, l - 1), None)
        };
        let minus_up = if !k_minus {
            t.theta_up(pi2(l, Minus, Up))
        } else {
            (iv(l - 1, l - 1), None)
        };
        let plus_down = if !k_plus {
            t.theta_down(pi2(l, Plus, Down))
        } else if k_minus {
            (iv(l, l), Some(iv(z, l)))
        } else {
            (iv(l, l), Some(iv(y, l)))
        };
        out.set(l - 1, Plus, Up, plus_up);
        out.set(l - 1, Minus, Up, minus_up);
        out.set(l - 1, Plus, Down, plus_down);
        out.set(l - 1, Minus, Down, t.theta_down(pi2(l, Minus, Down)));
    }

    // every other puncture
    for i in (1..=n).filter(|&i| i != k && i != l && i != l + 1) {
        let j = t.psi_bar(i);
        let (a, b) = (pi(i, Plus, Up), pi(i, Minus, Up));
        let plus_up = if i < k && a.contains(k) && !a.contains(l) {
            (iv(i + 1, l), Some(iv(l, l)))
        } else if k < i && i < l && a.contains(k) {
            (iv(i, l - 1), None)
        } else {
            t.theta_up(pi2(i, Plus, Up))
        };
        let minus_up = if i < k && b.contains(k) && !b.contains(l) {
            (iv(i, l), Some(iv(l, l)))
        } else if k < i && i < l && b.contains(k) {
            (iv(i - 1, l - 1), None)
        } else {
            t.theta_up(pi2(i, Minus, Up))
        };
        out.set(j, Plus, Up, plus_up);
        out.set(j, Minus, Up, minus_up);
        out.set(j, Plus, Down, t.theta_down(pi2(i, Plus, Down)));
        out.set(j, Minus, Down, t.theta_down(pi2(i, Minus, Down)));
    }
    out
}
