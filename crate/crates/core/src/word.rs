//! Artin words, the sliding-braid alphabet and their conversions.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A braid word over signed Artin generators: `g > 0` is σ_g, `g < 0` is σ_|g|⁻¹.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArtinWord {
    pub n: usize,
    pub letters: Vec<i32>,
}

impl ArtinWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewStrands(n));
        }
        for &g in &letters {
            if g == 0 || g.unsigned_abs() as usize >= n {
                return Err(Error::GeneratorOutOfRange { gen: g, n });
            }
        }
        Ok(ArtinWord { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        ArtinWord {
            n,
            letters: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Parses whitespace-separated signed integers.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for (column, token) in tokens(text) {
            let g: i32 = token.parse().map_err(|_| Error::Parse {
                column,
                message: format!("expected a signed generator index, found `{token}`"),
            })?;
            if g == 0 || g.unsigned_abs() as usize >= n.max(1) {
                return Err(Error::Parse {
                    column,
                    message: format!("generator {g} out of range for {n} strands"),
                });
            }
            letters.push(g);
        }
        ArtinWord::new(n, letters)
    }

    pub fn concat(&self, other: &ArtinWord) -> ArtinWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        ArtinWord { n: self.n, letters }
    }

    pub fn pow(&self, e: usize) -> ArtinWord {
        let mut letters = Vec::with_capacity(self.letters.len() * e);
        for _ in 0..e {
            letters.extend_from_slice(&self.letters);
        }
        ArtinWord { n: self.n, letters }
    }

    pub fn invert(&self) -> ArtinWord {
        ArtinWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|g| -g).collect(),
        }
    }

    pub fn mirror(&self) -> ArtinWord {
        ArtinWord {
            n: self.n,
            letters: self.letters.iter().map(|g| -g).collect(),
        }
    }

    /// Conjugation by the half twist: σ_i ↦ σ_{n−i}.
    pub fn phi_delta(&self) -> ArtinWord {
        let n = self.n as i32;
        ArtinWord {
            n: self.n,
            letters: self
                .letters
                .iter()
                .map(|&g| g.signum() * (n - g.abs()))
                .collect(),
        }
    }

    /// The positive half twist Δ of `n` strands.
    pub fn garside(n: usize) -> ArtinWord {
        let mut letters = Vec::new();
        for top in (1..n).rev() {
            letters.extend(1..=top as i32);
        }
        ArtinWord { n, letters }
    }
}

impl fmt::Display for ArtinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Splits on whitespace, keeping 1-based columns.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &text[s..]));
    }
    out
}

/// The four sliding-braid families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Quadrant {
    /// `[k↷l] = σ_k … σ_{l−1}`
    UR,
    /// `[k↶l] = σ_{l−1}⁻¹ … σ_k⁻¹`
    UL,
    /// `[k⤵l] = σ_k⁻¹ … σ_{l−1}⁻¹`
    LR,
    /// `[k⤹l] = σ_{l−1} … σ_k`
    LL,
}

impl Quadrant {
    pub fn inverse(self) -> Quadrant {
        match self {
            Quadrant::UR => Quadrant::UL,
            Quadrant::UL => Quadrant::UR,
            Quadrant::LR => Quadrant::LL,
            Quadrant::LL => Quadrant::LR,
        }
    }

    pub fn mirror(self) -> Quadrant {
        match self {
            Quadrant::UR => Quadrant::LR,
            Quadrant::LR => Quadrant::UR,
            Quadrant::UL => Quadrant::LL,
            Quadrant::LL => Quadrant::UL,
        }
    }

    pub fn is_right(self) -> bool {
        matches!(self, Quadrant::UR | Quadrant::LR)
    }

    pub fn is_upper(self) -> bool {
        matches!(self, Quadrant::UR | Quadrant::UL)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SlidingLetter {
    pub quadrant: Quadrant,
    pub k: usize,
    pub l: usize,
}

impl SlidingLetter {
    pub fn new(quadrant: Quadrant, k: usize, l: usize) -> Self {
        debug_assert!(1 <= k && k < l);
        SlidingLetter { quadrant, k, l }
    }

    pub fn checked(quadrant: Quadrant, k: usize, l: usize, n: usize) -> Result<Self> {
        if k < 1 || k >= l || l > n {
            return Err(Error::BadLetter {
                quadrant: format!("{quadrant:?}"),
                k,
                l,
                n,
            });
        }
        Ok(SlidingLetter { quadrant, k, l })
    }

    pub fn ur(k: usize, l: usize) -> Self {
        Self::new(Quadrant::UR, k, l)
    }
    pub fn ul(k: usize, l: usize) -> Self {
        Self::new(Quadrant::UL, k, l)
    }
    pub fn lr(k: usize, l: usize) -> Self {
        Self::new(Quadrant::LR, k, l)
    }
    pub fn ll(k: usize, l: usize) -> Self {
        Self::new(Quadrant::LL, k, l)
    }

    pub fn inverse(self) -> Self {
        SlidingLetter {
            quadrant: self.quadrant.inverse(),
            ..self
        }
    }

    pub fn mirror(self) -> Self {
        SlidingLetter {
            quadrant: self.quadrant.mirror(),
            ..self
        }
    }

    /// Image under conjugation by Δ, as a letter.
    pub fn phi_delta(self, n: usize) -> Self {
        let quadrant = match self.quadrant {
            Quadrant::UR => Quadrant::LL,
            Quadrant::LL => Quadrant::UR,
            Quadrant::UL => Quadrant::LR,
            Quadrant::LR => Quadrant::UL,
        };
        SlidingLetter {
            quadrant,
            k: n + 1 - self.l,
            l: n + 1 - self.k,
        }
    }

    pub fn to_artin(self) -> Vec<i32> {
        let (k, l) = (self.k as i32, self.l as i32);
        match self.quadrant {
            Quadrant::UR => (k..l).collect(),
            Quadrant::UL => (k..l).rev().map(|g| -g).collect(),
            Quadrant::LR => (k..l).map(|g| -g).collect(),
            Quadrant::LL => (k..l).rev().collect(),
        }
    }

    /// All right-oriented letters of `n` strands, UR before LR, then by (k, l).
    pub fn right_alphabet(n: usize) -> Vec<SlidingLetter> {
        let mut out = Vec::with_capacity(n * (n - 1));
        for quadrant in [Quadrant::UR, Quadrant::LR] {
            for k in 1..n {
                for l in k + 1..=n {
                    out.push(SlidingLetter { quadrant, k, l });
                }
            }
        }
        out
    }

    pub fn parse(token: &str) -> Option<Self> {
        let t = token.trim();
        let quadrant = match t.get(..2)? {
            "UR" => Quadrant::UR,
            "UL" => Quadrant::UL,
            "LR" => Quadrant::LR,
            "LL" => Quadrant::LL,
            _ => return None,
        };
        let inner = t[2..].strip_prefix('(')?.strip_suffix(')')?;
        let (a, b) = inner.split_once(',')?;
        let k: usize = a.trim().parse().ok()?;
        let l: usize = b.trim().parse().ok()?;
        (k >= 1 && k < l).then_some(SlidingLetter { quadrant, k, l })
    }
}

impl fmt::Display for SlidingLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({},{})", self.quadrant, self.k, self.l)
    }
}

impl FromStr for SlidingLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SlidingLetter::parse(s).ok_or_else(|| Error::Parse {
            column: 1,
            message: format!("bad sliding letter `{s}`"),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SlidingWord {
    pub n: usize,
    pub letters: Vec<SlidingLetter>,
}

impl SlidingWord {
    pub fn new(n: usize, letters: Vec<SlidingLetter>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewStrands(n));
        }
        for s in &letters {
            SlidingLetter::checked(s.quadrant, s.k, s.l, n)?;
        }
        Ok(SlidingWord { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        SlidingWord {
            n,
            letters: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Parses whitespace-separated `UR(k,l)`-style tokens.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for (column, token) in tokens(text) {
            let s = SlidingLetter::parse(token).ok_or_else(|| Error::Parse {
                column,
                message: format!("expected UR(k,l), UL(k,l), LR(k,l) or LL(k,l), found `{token}`"),
            })?;
            if s.l > n {
                return Err(Error::Parse {
                    column,
                    message: format!("{s} out of range for {n} strands"),
                });
            }
            letters.push(s);
        }
        SlidingWord::new(n, letters)
    }

    pub fn to_artin(&self) -> ArtinWord {
        ArtinWord {
            n: self.n,
            letters: self.letters.iter().flat_map(|s| s.to_artin()).collect(),
        }
    }

    pub fn invert(&self) -> SlidingWord {
        SlidingWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    pub fn mirror(&self) -> SlidingWord {
        SlidingWord {
            n: self.n,
            letters: self.letters.iter().map(|s| s.mirror()).collect(),
        }
    }

    pub fn phi_delta(&self) -> SlidingWord {
        SlidingWord {
            n: self.n,
            letters: self.letters.iter().map(|s| s.phi_delta(self.n)).collect(),
        }
    }

    pub fn is_right_oriented(&self) -> bool {
        self.letters.iter().all(|s| s.quadrant.is_right())
    }

    pub fn concat(&self, other: &SlidingWord) -> SlidingWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        SlidingWord { n: self.n, letters }
    }

    pub fn pow(&self, e: usize) -> SlidingWord {
        SlidingWord {
            n: self.n,
            letters: self.letters.repeat(e),
        }
    }
}

impl fmt::Display for SlidingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Uniform i.i.d. letters over the 2(n−1) signed generators.
pub fn random_word(n: usize, length: usize, seed: u64) -> ArtinWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_word_with(n, length, &mut rng)
}

pub fn random_word_with<R: Rng>(n: usize, length: usize, rng: &mut R) -> ArtinWord {
    let m = n as i32 - 1;
    let letters = (0..length)
        .map(|_| {
            let g = rng.gen_range(1..=m);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    ArtinWord { n, letters }
}

/// Uniform i.i.d. right-oriented sliding letters.
pub fn random_right_sliding<R: Rng>(n: usize, length: usize, rng: &mut R) -> SlidingWord {
    let alphabet = SlidingLetter::right_alphabet(n);
    let letters = (0..length)
        .map(|_| alphabet[rng.gen_range(0..alphabet.len())])
        .collect();
    SlidingWord { n, letters }
}
