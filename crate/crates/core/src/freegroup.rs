//! Exact arithmetic in finitely generated free groups.
//!
//! Elements are freely reduced words over signed generators `a1, a2, ...`.
//! Conjugacy classes are represented by [`CyclicWord`], the lexicographically
//! least rotation of a cyclically reduced word under the letter order
//! `a1 < A1 < a2 < A2 < ...`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A generator or its inverse.
///
/// The derived order is the canonical letter order: generator index first,
/// positive before negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    gen: u32,
    inverse: bool,
}

impl Letter {
    /// Generator `a<gen>` (1-based). Panics on `gen == 0`.
    pub fn gen(gen: u32) -> Letter {
        assert!(gen >= 1, "generators are numbered from 1");
        Letter {
            gen,
            inverse: false,
        }
    }

    /// Inverse generator `A<gen>`.
    pub fn inv_gen(gen: u32) -> Letter {
        Letter::gen(gen).inverse()
    }

    pub fn new(gen: u32, sign: i8) -> Letter {
        let l = Letter::gen(gen);
        if sign < 0 {
            l.inverse()
        } else {
            l
        }
    }

    pub fn index(self) -> u32 {
        self.gen
    }

    pub fn sign(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    #[must_use]
    pub fn inverse(self) -> Letter {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    /// Dense code in `0..2*rank`: `a_k -> 2(k-1)`, `A_k -> 2(k-1)+1`.
    pub fn code(self) -> usize {
        2 * (self.gen as usize - 1) + usize::from(self.inverse)
    }

    pub fn from_code(code: usize) -> Letter {
        Letter {
            gen: (code / 2) as u32 + 1,
            inverse: code % 2 == 1,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "A{}", self.gen)
        } else {
            write!(f, "a{}", self.gen)
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Letter> {
        let bad = || Error::BadToken(s.to_string());
        let mut chars = s.chars();
        let inverse = match chars.next() {
            Some('a') => false,
            Some('A') => true,
            _ => return Err(bad()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let gen: u32 = digits.parse().map_err(|_| bad())?;
        if gen == 0 {
            return Err(bad());
        }
        Ok(Letter { gen, inverse })
    }
}

/// Split word text into letter tokens. Tokens are separated by `.` or
/// whitespace; `1` and the empty string denote the identity.
pub fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    text.split(|c: char| c == '.' || c.is_whitespace())
        .filter(|t| !t.is_empty() && *t != "1")
        .map(str::parse)
        .collect()
}

fn push_reduced(buf: &mut Vec<Letter>, l: Letter) {
    if buf.last() == Some(&l.inverse()) {
        buf.pop();
    } else {
        buf.push(l);
    }
}

/// A freely reduced word, i.e. an element of the free group.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    /// Freely reduce an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(raw: I) -> Word {
        let mut letters = Vec::new();
        for l in raw {
            push_reduced(&mut letters, l);
        }
        Word { letters }
    }

    pub fn letter(l: Letter) -> Word {
        Word { letters: vec![l] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index occurring in the word (0 for the identity).
    pub fn max_generator(&self) -> u32 {
        self.letters.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    #[must_use]
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    #[must_use]
    pub fn mul(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Word { letters }
    }

    #[must_use]
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `g * self * g^-1`.
    #[must_use]
    pub fn conjugate_by(&self, g: &Word) -> Word {
        g.mul(self).mul(&g.inverse())
    }

    /// True when the first and last letters are not mutually inverse.
    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(&a), Some(&b)) => self.letters.len() == 1 || a != b.inverse(),
            _ => true,
        }
    }

    pub fn commutes_with(&self, other: &Word) -> bool {
        self.mul(other) == other.mul(self)
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        Word::mul(self, rhs)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Ok(Word::from_letters(parse_letters(s)?))
    }
}

/// Reduce a raw letter sequence, rejecting generators above `rank`.
pub fn reduce(raw: &[Letter], rank: u32) -> Result<Word> {
    if let Some(l) = raw.iter().find(|l| l.index() > rank) {
        return Err(Error::GeneratorOutOfRange {
            index: l.index(),
            rank,
        });
    }
    Ok(Word::from_letters(raw.iter().copied()))
}

fn least_rotation(letters: &[Letter]) -> usize {
    let n = letters.len();
    let mut best = 0;
    for r in 1..n {
        let cand = letters[r..].iter().chain(&letters[..r]);
        let cur = letters[best..].iter().chain(&letters[..best]);
        if cand.lt(cur) {
            best = r;
        }
    }
    best
}

/// A conjugacy class of the free group: a cyclically reduced word stored in
/// its canonical (lexicographically least) rotation.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord {
    letters: Vec<Letter>,
}

impl CyclicWord {
    /// Canonical class of any word.
    pub fn of(w: &Word) -> CyclicWord {
        cyclic_reduce(w).0
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at a cyclic index.
    pub fn at(&self, i: isize) -> Letter {
        let n = self.letters.len() as isize;
        self.letters[i.rem_euclid(n) as usize]
    }

    /// The based word read from position `start` once around.
    pub fn rotation(&self, start: usize) -> Word {
        let n = self.letters.len();
        Word {
            letters: (0..n).map(|k| self.letters[(start + k) % n]).collect(),
        }
    }

    /// The canonical word as a based word (rotation 0).
    pub fn to_word(&self) -> Word {
        Word {
            letters: self.letters.clone(),
        }
    }

    /// Smallest period `p` dividing the length with `w = (w[..p])^(len/p)`.
    pub fn period(&self) -> usize {
        let n = self.letters.len();
        (1..=n)
            .find(|&p| {
                n.is_multiple_of(p) && (p..n).all(|k| self.letters[k] == self.letters[k - p])
            })
            .unwrap_or(0)
    }

    pub fn exponent(&self) -> usize {
        match self.period() {
            0 => 0,
            p => self.letters.len() / p,
        }
    }

    pub fn is_primitive(&self) -> bool {
        !self.letters.is_empty() && self.exponent() == 1
    }

    #[must_use]
    pub fn inverse(&self) -> CyclicWord {
        CyclicWord::of(&self.to_word().inverse())
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_word().fmt(f)
    }
}

/// Exponent-sum vector of a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianVector(pub Vec<i64>);

impl std::ops::Add for AbelianVector {
    type Output = AbelianVector;

    fn add(self, rhs: AbelianVector) -> AbelianVector {
        let n = self.0.len().max(rhs.0.len());
        AbelianVector(
            (0..n)
                .map(|k| self.0.get(k).unwrap_or(&0) + rhs.0.get(k).unwrap_or(&0))
                .collect(),
        )
    }
}

/// Exponent sums per generator; the vector has length `max(rank, max generator)`.
pub fn abelianize(w: &Word, rank: u32) -> AbelianVector {
    let n = rank.max(w.max_generator()) as usize;
    let mut v = vec![0i64; n];
    for l in w.letters() {
        v[l.index() as usize - 1] += i64::from(l.sign());
    }
    AbelianVector(v)
}

/// Write `w = conjugator * core * conjugator^-1` with `core` cyclically
/// reduced in canonical rotation.
pub fn cyclic_reduce(w: &Word) -> (CyclicWord, Word) {
    let l = w.letters();
    let (mut lo, mut hi) = (0, l.len());
    while hi - lo >= 2 && l[lo] == l[hi - 1].inverse() {
        lo += 1;
        hi -= 1;
    }
    let outer = Word {
        letters: l[..lo].to_vec(),
    };
    let inner = &l[lo..hi];
    let r = least_rotation(inner);
    let mut canon = inner[r..].to_vec();
    canon.extend_from_slice(&inner[..r]);
    // inner = p * canon * p^-1 with p = inner[..r]
    let p = Word {
        letters: inner[..r].to_vec(),
    };
    (CyclicWord { letters: canon }, outer.mul(&p))
}

/// Some `d` with `d x d^-1 = y`, or `None` when `x` and `y` are not conjugate.
pub fn are_conjugate(x: &Word, y: &Word) -> Option<Word> {
    let (kx, cx) = cyclic_reduce(x);
    let (ky, cy) = cyclic_reduce(y);
    (kx == ky).then(|| cy.mul(&cx.inverse()))
}

/// `x = root^exponent` with `root` not a proper power and `exponent` maximal.
pub fn primitive_root(x: &Word) -> Result<(Word, u32)> {
    if x.is_identity() {
        return Err(Error::TrivialClass("primitive root"));
    }
    let (core, c) = cyclic_reduce(x);
    let p = core.period();
    let w = Word {
        letters: core.letters()[..p].to_vec(),
    };
    Ok((w.conjugate_by(&c), (core.len() / p) as u32))
}

/// Find `k` with `r^k y r^-k = y2`, where `r` is primitive.
///
/// The search covers `|k| <= |y| + |y2| + 2|r| + 4`. Past the point where
/// `r^k` stops cancelling into `y`, each step in `|k|` lengthens the
/// conjugate by at least two letters, so no larger `k` can match.
pub fn power_conjugation_search(r: &Word, y: &Word, y2: &Word) -> Result<Option<i64>> {
    let (_, exponent) = primitive_root(r)?;
    if exponent != 1 {
        return Err(Error::NotPrimitive { exponent });
    }
    if y.commutes_with(r) {
        return Ok((y == y2).then_some(0));
    }
    let bound = (y.len() + y2.len() + 2 * r.len() + 4) as i64;
    let r_inv = r.inverse();
    let (mut up, mut down) = (y.clone(), y.clone());
    if &up == y2 {
        return Ok(Some(0));
    }
    for k in 1..=bound {
        up = r.mul(&up).mul(&r_inv);
        if &up == y2 {
            return Ok(Some(k));
        }
        down = r_inv.mul(&down).mul(r);
        if &down == y2 {
            return Ok(Some(-k));
        }
    }
    Ok(None)
}

/// Find `g` with `g x g^-1 = x2` and `g y g^-1 = y2` simultaneously.
pub fn simultaneous_conjugacy(x: &Word, y: &Word, x2: &Word, y2: &Word) -> Result<Option<Word>> {
    if x.is_identity() || y.is_identity() {
        return Err(Error::TrivialClass("simultaneous conjugacy"));
    }
    if x2.is_identity() || y2.is_identity() {
        return Ok(None);
    }
    let rank = [x, y, x2, y2]
        .iter()
        .map(|w| w.max_generator())
        .max()
        .unwrap_or(0);
    if abelianize(x, rank) != abelianize(x2, rank) || abelianize(y, rank) != abelianize(y2, rank) {
        return Ok(None);
    }
    let Some(d) = are_conjugate(x, x2) else {
        return Ok(None);
    };
    // every conjugator taking x to x2 is d * m^k with m the root of x
    let (m, _) = primitive_root(x)?;
    let target = y2.conjugate_by(&d.inverse());
    let Some(k) = power_conjugation_search(&m, y, &target)? else {
        return Ok(None);
    };
    let g = d.mul(&m.pow(k));
    if &x.conjugate_by(&g) != x2 || &y.conjugate_by(&g) != y2 {
        return Err(Error::Internal(format!(
            "conjugator {g} fails its defining equations"
        )));
    }
    Ok(Some(g))
}

/// Exhaustive search for a simultaneous conjugator among reduced words of
/// length at most `max_len` over generators `1..=rank`. Only used as an oracle.
pub fn brute_force_conjugator(
    x: &Word,
    y: &Word,
    x2: &Word,
    y2: &Word,
    rank: u32,
    max_len: usize,
) -> Option<Word> {
    fn walk(
        g: &mut Vec<Letter>,
        rank: u32,
        left: usize,
        hit: &mut dyn FnMut(&Word) -> bool,
    ) -> bool {
        if hit(&Word { letters: g.clone() }) {
            return true;
        }
        if left == 0 {
            return false;
        }
        for code in 0..2 * rank as usize {
            let l = Letter::from_code(code);
            if g.last() == Some(&l.inverse()) {
                continue;
            }
            g.push(l);
            if walk(g, rank, left - 1, hit) {
                return true;
            }
            g.pop();
        }
        false
    }
    let mut found = None;
    walk(&mut Vec::new(), rank, max_len, &mut |g| {
        if &x.conjugate_by(g) == x2 && &y.conjugate_by(g) == y2 {
            found = Some(g.clone());
            true
        } else {
            false
        }
    });
    found
}
