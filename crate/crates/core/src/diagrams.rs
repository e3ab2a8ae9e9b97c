//! Labeled diagrams with external chords: splitting maps, `mu_i`, label
//! permutations, erasure, and checks of the co-skew, co-Jacobi and
//! factorization identities.
//!
//! A circle is stored as a cyclic sequence of [`Token`]s. Besides letters and
//! chord endpoints it carries a pair of crossing marks for every
//! self-crossing of the loop, inherited from the crossings of the original
//! taut loop. A chord endpoint or mark sits between the letter before it and
//! the letter after it; its position is the number of letters preceding it.
//!
//! Splitting circle `i` at a crossing with marks at token indices `f` (the
//! mark flagged `first`) and `s` re-indexes as follows:
//!
//! * `a1` is the new chord endpoint followed by the tokens strictly between
//!   `f` and `s`, read forward;
//! * `a2` is the new chord endpoint followed by the tokens strictly between
//!   `s` and `f`, read forward (wrapping);
//! * existing chord endpoints stay with the arc that contains them, and a
//!   crossing keeps its marks only if both fall in the same arc;
//! * `plus` places `a1` at label `i` and `a2` at `i + 1`, `minus` the other
//!   way round, and circles above `i` move up by one.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::freegroup::{CyclicWord, Letter, Word};
use crate::intersections::self_linked_pairs;
use crate::loopops::turaev_cobracket;
use crate::surface::SurfaceModel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    Letter(Letter),
    /// One end of a self-crossing. The loop `a1` starts right after the mark
    /// with `first` set.
    Mark {
        id: u32,
        first: bool,
    },
    Chord(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Plus,
    Minus,
}

/// Self-crossing of one circle, by letter positions of its two marks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Crossing {
    pub id: u32,
    pub first: usize,
    pub second: usize,
}

/// Chord endpoints as `(circle label, letter position)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Chord {
    pub id: u32,
    pub ends: [(usize, usize); 2],
}

/// Circles in label order with chord ids renamed canonically; marks dropped.
pub type DiagramKey = Vec<Vec<Token>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledDiagram {
    circles: Vec<Vec<Token>>,
}

fn letter_count(tokens: &[Token]) -> usize {
    tokens
        .iter()
        .filter(|t| matches!(t, Token::Letter(_)))
        .count()
}

fn letters_of(tokens: &[Token]) -> impl Iterator<Item = Letter> + '_ {
    tokens.iter().filter_map(|t| match t {
        Token::Letter(l) => Some(*l),
        _ => None,
    })
}

impl LabeledDiagram {
    /// One chordless circle carrying the taut representative of a primitive
    /// class, with marks for all its self-crossings. Marks at the same letter
    /// position are ordered by crossing id.
    pub fn from_loop(w: &Word, model: &SurfaceModel) -> Result<LabeledDiagram> {
        let core = CyclicWord::of(w);
        let pairs = self_linked_pairs(&core, model)?;
        let mut tokens = Vec::with_capacity(core.len() + 2 * pairs.len());
        for (k, &letter) in core.letters().iter().enumerate() {
            for (id, p) in pairs.iter().enumerate() {
                let first_at = if p.sign > 0 { p.i } else { p.j };
                if p.i == k || p.j == k {
                    tokens.push(Token::Mark {
                        id: id as u32,
                        first: first_at == k,
                    });
                }
            }
            tokens.push(Token::Letter(letter));
        }
        Ok(LabeledDiagram {
            circles: vec![tokens],
        })
    }

    /// Circles given directly as token sequences (labels `1..=n` in order).
    pub fn from_tokens(circles: Vec<Vec<Token>>) -> Result<LabeledDiagram> {
        let d = LabeledDiagram { circles };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        let mut chords: HashMap<u32, Vec<usize>> = HashMap::new();
        let mut marks: HashMap<u32, (usize, usize)> = HashMap::new();
        for (c, tokens) in self.circles.iter().enumerate() {
            for t in tokens {
                match *t {
                    Token::Chord(id) => chords.entry(id).or_default().push(c),
                    Token::Mark { id, first } => {
                        let e = marks.entry(id).or_insert((c, 0));
                        if e.0 != c {
                            return Err(Error::Internal(format!(
                                "crossing {id} spans two circles"
                            )));
                        }
                        e.1 += if first { 1 } else { 10 };
                    }
                    Token::Letter(_) => {}
                }
            }
        }
        for (id, ends) in chords {
            if ends.len() != 2 || ends[0] == ends[1] {
                return Err(Error::Internal(format!("chord {id} is not external")));
            }
        }
        for (id, (_, tally)) in marks {
            if tally != 11 {
                return Err(Error::Internal(format!(
                    "crossing {id} has malformed marks"
                )));
            }
        }
        Ok(())
    }

    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    fn slot(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.circles.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.circles.len(),
            });
        }
        Ok(i - 1)
    }

    pub fn tokens(&self, i: usize) -> Result<&[Token]> {
        Ok(&self.circles[self.slot(i)?])
    }

    /// Letters of circle `i` read from its base point, freely reduced.
    pub fn circle_word(&self, i: usize) -> Result<Word> {
        Ok(Word::from_letters(letters_of(self.tokens(i)?)))
    }

    fn positions(&self) -> Vec<Vec<usize>> {
        self.circles
            .iter()
            .map(|tokens| {
                let mut seen = 0;
                tokens
                    .iter()
                    .map(|t| {
                        let here = seen;
                        if matches!(t, Token::Letter(_)) {
                            seen += 1;
                        }
                        here
                    })
                    .collect()
            })
            .collect()
    }

    pub fn chords(&self) -> Vec<Chord> {
        let pos = self.positions();
        let mut found: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
        for (c, tokens) in self.circles.iter().enumerate() {
            for (k, t) in tokens.iter().enumerate() {
                if let Token::Chord(id) = *t {
                    found.entry(id).or_default().push((c + 1, pos[c][k]));
                }
            }
        }
        found
            .into_iter()
            .map(|(id, e)| Chord {
                id,
                ends: [e[0], e[1]],
            })
            .collect()
    }

    /// Self-crossings still carried by circle `i`.
    pub fn crossings(&self, i: usize) -> Result<Vec<Crossing>> {
        let c = self.slot(i)?;
        let pos = &self.positions()[c];
        let mut by_id: BTreeMap<u32, Crossing> = BTreeMap::new();
        for (k, t) in self.circles[c].iter().enumerate() {
            if let Token::Mark { id, first } = *t {
                let e = by_id.entry(id).or_insert(Crossing {
                    id,
                    first: 0,
                    second: 0,
                });
                if first {
                    e.first = pos[k];
                } else {
                    e.second = pos[k];
                }
            }
        }
        Ok(by_id.into_values().collect())
    }

    fn next_chord_id(&self) -> u32 {
        self.circles
            .iter()
            .flatten()
            .filter_map(|t| match t {
                Token::Chord(id) => Some(id + 1),
                _ => None,
            })
            .max()
            .unwrap_or(0)
    }

    /// Apply a label permutation: the circle at label `k` moves to label
    /// `perm[k - 1]`.
    fn permuted(&self, perm: &[usize]) -> LabeledDiagram {
        let mut circles = vec![Vec::new(); self.circles.len()];
        for (k, &target) in perm.iter().enumerate() {
            circles[target - 1] = self.circles[k].clone();
        }
        LabeledDiagram { circles }
    }

    /// Canonical form under rotation of every circle, with chord ids renamed
    /// by first appearance in label order.
    pub fn key(&self) -> DiagramKey {
        let mut owner: HashMap<u32, Vec<u32>> = HashMap::new();
        for (c, tokens) in self.circles.iter().enumerate() {
            for t in tokens {
                if let Token::Chord(id) = *t {
                    owner.entry(id).or_default().push(c as u32);
                }
            }
        }
        let stripped: Vec<Vec<Token>> = self
            .circles
            .iter()
            .map(|tokens| {
                tokens
                    .iter()
                    .copied()
                    .filter(|t| !matches!(t, Token::Mark { .. }))
                    .collect()
            })
            .collect();
        // rotations minimizing the circle with chords replaced by the labels
        // they lead to; ties are broken below by the renamed sequences
        let candidates: Vec<Vec<usize>> = stripped
            .iter()
            .enumerate()
            .map(|(c, tokens)| {
                let shape: Vec<Token> = tokens
                    .iter()
                    .map(|t| match *t {
                        Token::Chord(id) => {
                            let o = &owner[&id];
                            Token::Chord(if o[0] == c as u32 { o[1] } else { o[0] })
                        }
                        other => other,
                    })
                    .collect();
                minimal_rotations(&shape)
            })
            .collect();
        let mut best: Option<DiagramKey> = None;
        let mut choice = vec![0usize; stripped.len()];
        loop {
            let mut names: HashMap<u32, u32> = HashMap::new();
            let key: DiagramKey = stripped
                .iter()
                .zip(&choice)
                .zip(&candidates)
                .map(|((tokens, &ci), rots)| {
                    let r = rots[ci];
                    (0..tokens.len())
                        .map(|k| match tokens[(r + k) % tokens.len()] {
                            Token::Chord(id) => {
                                let next = names.len() as u32;
                                Token::Chord(*names.entry(id).or_insert(next))
                            }
                            other => other,
                        })
                        .collect()
                })
                .collect();
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
            // advance the mixed-radix counter over tied rotations
            let mut k = 0;
            while k < choice.len() {
                choice[k] += 1;
                if choice[k] < candidates[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == choice.len() {
                break;
            }
        }
        best.unwrap_or_default()
    }
}

fn minimal_rotations(seq: &[Token]) -> Vec<usize> {
    let n = seq.len();
    if n == 0 {
        return vec![0];
    }
    let rot = |r: usize| (0..n).map(move |k| seq[(r + k) % n]);
    let mut best = vec![0];
    for r in 1..n {
        match rot(r).cmp(rot(best[0])) {
            std::cmp::Ordering::Less => best = vec![r],
            std::cmp::Ordering::Equal => best.push(r),
            std::cmp::Ordering::Greater => {}
        }
    }
    best
}

/// Split at a crossing given by id; `None` if one of the two loops is trivial.
fn split_by_id(
    d: &LabeledDiagram,
    i: usize,
    id: u32,
    variant: Variant,
) -> Result<Option<LabeledDiagram>> {
    let c = d.slot(i)?;
    let tokens = &d.circles[c];
    let n = tokens.len();
    let find = |want_first: bool| {
        tokens.iter().position(
            |t| matches!(*t, Token::Mark { id: m, first } if m == id && first == want_first),
        )
    };
    let (Some(f), Some(s)) = (find(true), find(false)) else {
        return Err(Error::Internal(format!("crossing {id} not on circle {i}")));
    };
    let fresh = d.next_chord_id();
    let arc = |from: usize, to: usize| -> Vec<Token> {
        let len = (to + n - from) % n;
        let inner: Vec<Token> = (1..len).map(|k| tokens[(from + k) % n]).collect();
        let mut count: HashMap<u32, u32> = HashMap::new();
        for t in &inner {
            if let Token::Mark { id, .. } = *t {
                *count.entry(id).or_default() += 1;
            }
        }
        std::iter::once(Token::Chord(fresh))
            .chain(
                inner
                    .into_iter()
                    .filter(|t| !matches!(*t, Token::Mark { id, .. } if count[&id] != 2)),
            )
            .collect()
    };
    let (a1, a2) = (arc(f, s), arc(s, f));
    if Word::from_letters(letters_of(&a1)).is_identity()
        || Word::from_letters(letters_of(&a2)).is_identity()
    {
        return Ok(None);
    }
    let (lo, hi) = match variant {
        Variant::Plus => (a1, a2),
        Variant::Minus => (a2, a1),
    };
    let mut circles = d.circles.clone();
    circles[c] = lo;
    circles.insert(c + 1, hi);
    Ok(Some(LabeledDiagram { circles }))
}

/// Split circle `i` at the self-crossing whose marks sit at letter positions
/// `t1` and `t2` (in either order).
pub fn split(
    d: &LabeledDiagram,
    i: usize,
    (t1, t2): (usize, usize),
    variant: Variant,
) -> Result<LabeledDiagram> {
    let len = letter_count(d.tokens(i)?).max(1);
    let (t1, t2) = (t1 % len, t2 % len);
    let hit = d
        .crossings(i)?
        .into_iter()
        .find(|x| {
            let (a, b) = (x.first % len, x.second % len);
            (a, b) == (t1, t2) || (b, a) == (t1, t2)
        })
        .ok_or(Error::NotASelfIntersection(t1, t2))?;
    split_by_id(d, i, hit.id, variant)?.ok_or(Error::NotASelfIntersection(t1, t2))
}

/// Integer combination of diagrams, kept unreduced until asked.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TermCombination {
    terms: Vec<(LabeledDiagram, i64)>,
}

/// Erased tensors: one `CyclicWord` per label.
pub type TensorCombination = BTreeMap<Vec<CyclicWord>, i64>;

impl TermCombination {
    pub fn single(d: LabeledDiagram) -> TermCombination {
        TermCombination {
            terms: vec![(d, 1)],
        }
    }

    pub fn terms(&self) -> &[(LabeledDiagram, i64)] {
        &self.terms
    }

    pub fn push(&mut self, d: LabeledDiagram, coefficient: i64) {
        self.terms.push((d, coefficient));
    }

    pub fn extend(&mut self, other: TermCombination) {
        self.terms.extend(other.terms);
    }

    /// Classes with nonzero coefficients under syntactic-canonical equality.
    pub fn reduced(&self) -> BTreeMap<DiagramKey, i64> {
        let mut acc: BTreeMap<DiagramKey, i64> = BTreeMap::new();
        for (d, c) in &self.terms {
            *acc.entry(d.key()).or_default() += c;
        }
        acc.retain(|_, c| *c != 0);
        acc
    }

    pub fn is_syntactically_zero(&self) -> bool {
        self.reduced().is_empty()
    }

    pub fn erase(&self) -> TensorCombination {
        let mut acc = TensorCombination::new();
        for (d, c) in &self.terms {
            *acc.entry(erase(d)).or_default() += c;
        }
        acc.retain(|_, c| *c != 0);
        acc
    }

    fn map_diagrams(&self, f: impl Fn(&LabeledDiagram) -> LabeledDiagram) -> TermCombination {
        TermCombination {
            terms: self.terms.iter().map(|(d, c)| (f(d), *c)).collect(),
        }
    }
}

/// `sum_p [S+_p(D)] - [S-_p(D)]` over the crossings of circle `i` whose two
/// loops are both nontrivial.
pub fn mu_i(d: &LabeledDiagram, i: usize) -> Result<TermCombination> {
    let mut out = TermCombination::default();
    for x in d.crossings(i)? {
        if let Some(plus) = split_by_id(d, i, x.id, Variant::Plus)? {
            let minus = split_by_id(d, i, x.id, Variant::Minus)?
                .ok_or_else(|| Error::Internal("split variants disagree".into()))?;
            out.push(plus, 1);
            out.push(minus, -1);
        }
    }
    Ok(out)
}

/// `mu_i` extended linearly.
pub fn mu_i_comb(c: &TermCombination, i: usize) -> Result<TermCombination> {
    let mut out = TermCombination::default();
    for (d, coefficient) in c.terms() {
        for (e, k) in mu_i(d, i)?.terms {
            out.push(e, k * coefficient);
        }
    }
    Ok(out)
}

fn check_labels(c: &TermCombination, top: usize) -> Result<()> {
    for (d, _) in c.terms() {
        if top > d.circle_count() {
            return Err(Error::IndexOutOfRange {
                index: top,
                len: d.circle_count(),
            });
        }
    }
    Ok(())
}

/// Swap labels `i` and `i + 1`.
pub fn tau_i(c: &TermCombination, i: usize) -> Result<TermCombination> {
    if i == 0 {
        return Err(Error::IndexOutOfRange { index: 0, len: 0 });
    }
    check_labels(c, i + 1)?;
    Ok(c.map_diagrams(|d| {
        let mut perm: Vec<usize> = (1..=d.circle_count()).collect();
        perm.swap(i - 1, i);
        d.permuted(&perm)
    }))
}

/// Cyclically permute labels `i -> i + 2`, `i + 1 -> i`, `i + 2 -> i + 1`.
pub fn omega_i(c: &TermCombination, i: usize) -> Result<TermCombination> {
    if i == 0 {
        return Err(Error::IndexOutOfRange { index: 0, len: 0 });
    }
    check_labels(c, i + 2)?;
    Ok(c.map_diagrams(|d| {
        let mut perm: Vec<usize> = (1..=d.circle_count()).collect();
        perm[i - 1] = i + 2;
        perm[i] = i;
        perm[i + 1] = i + 1;
        d.permuted(&perm)
    }))
}

/// Drop all chords and marks; slot `k` holds the class of circle `k + 1`.
pub fn erase(d: &LabeledDiagram) -> Vec<CyclicWord> {
    d.circles
        .iter()
        .map(|t| CyclicWord::of(&Word::from_letters(letters_of(t))))
        .collect()
}

/// Apply the cobracket to slot `i` (1-based) of every tensor.
pub fn delta_i(
    tensors: &TensorCombination,
    i: usize,
    model: &SurfaceModel,
) -> Result<TensorCombination> {
    let mut acc = TensorCombination::new();
    for (slots, c) in tensors {
        if i == 0 || i > slots.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: slots.len(),
            });
        }
        if slots[i - 1].is_empty() {
            continue;
        }
        for t in turaev_cobracket(&slots[i - 1].to_word(), model)? {
            let mut next = slots[..i - 1].to_vec();
            next.push(t.left);
            next.push(t.right);
            next.extend_from_slice(&slots[i..]);
            *acc.entry(next).or_default() += c * t.coefficient;
        }
    }
    acc.retain(|_, c| *c != 0);
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    /// Nonzero under syntactic equality, but the erased tensors cancel, so the
    /// combination may still vanish modulo chord slides.
    NotSyntacticallyZero {
        residual_terms: usize,
    },
    Violated {
        residual_terms: usize,
    },
}

impl Outcome {
    pub fn holds(&self) -> bool {
        matches!(self, Outcome::Holds)
    }

    fn of_sum(sum: &TermCombination) -> Outcome {
        let residual = sum.reduced();
        if residual.is_empty() {
            Outcome::Holds
        } else if sum.erase().is_empty() {
            Outcome::NotSyntacticallyZero {
                residual_terms: residual.len(),
            }
        } else {
            Outcome::Violated {
                residual_terms: residual.len(),
            }
        }
    }
}

impl TermCombination {
    #[must_use]
    pub fn scaled(mut self, k: i64) -> TermCombination {
        for t in &mut self.terms {
            t.1 *= k;
        }
        self
    }
}

/// `tau_i(mu_i(D)) + mu_i(D) = 0`.
pub fn verify_coskew(d: &LabeledDiagram, i: usize) -> Result<Outcome> {
    let m = mu_i(d, i)?;
    let mut sum = tau_i(&m, i)?;
    sum.extend(m);
    Ok(Outcome::of_sum(&sum))
}

/// `(1 + omega_i + omega_i^2)(mu_{i+1}(mu_i(D))) = 0`.
pub fn verify_cojacobi(d: &LabeledDiagram, i: usize) -> Result<Outcome> {
    let mm = mu_i_comb(&mu_i(d, i)?, i + 1)?;
    let once = omega_i(&mm, i)?;
    let twice = omega_i(&once, i)?;
    let mut sum = mm;
    sum.extend(once);
    sum.extend(twice);
    Ok(Outcome::of_sum(&sum))
}

/// `E(mu_i(D)) = Delta_i(E(D))`, compared as tensor combinations.
pub fn verify_factorization(d: &LabeledDiagram, i: usize, model: &SurfaceModel) -> Result<Outcome> {
    let lhs = mu_i(d, i)?;
    let rhs = delta_i(&TermCombination::single(d.clone()).erase(), i, model)?;
    let mut diff = lhs.erase();
    for (k, c) in rhs {
        *diff.entry(k).or_default() -= c;
    }
    diff.retain(|_, c| *c != 0);
    Ok(if diff.is_empty() {
        Outcome::Holds
    } else {
        Outcome::Violated {
            residual_terms: diff.len(),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "a3.a1.A2.a3.a1.A2.a3.a1.A2.A2.A2";

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn g2() -> SurfaceModel {
        SurfaceModel::genus_one_boundary(2).unwrap()
    }

    #[test]
    fn single_split_gives_two_circles_and_a_chord() {
        let d = LabeledDiagram::from_loop(&w(EXAMPLE), &g2()).unwrap();
        let x = d.crossings(1).unwrap()[0];
        let plus = split(&d, 1, (x.first, x.second), Variant::Plus).unwrap();
        let minus = split(&d, 1, (x.second, x.first), Variant::Minus).unwrap();
        assert_eq!(plus.circle_count(), 2);
        assert_eq!(plus.chords().len(), 1);
        assert_eq!(plus.chords()[0].ends, [(1, 0), (2, 0)]);
        assert_eq!(plus.circle_word(1).unwrap(), minus.circle_word(2).unwrap());
        assert_eq!(plus.circle_word(2).unwrap(), minus.circle_word(1).unwrap());
        let swapped = tau_i(&TermCombination::single(plus), 1).unwrap();
        assert_eq!(swapped.terms()[0].0.key(), minus.key());
    }

    #[test]
    fn chord_ends_follow_their_arc() {
        let d = LabeledDiagram::from_loop(&w(EXAMPLE), &g2()).unwrap();
        let m = mu_i(&d, 1).unwrap();
        for (e, _) in m.terms() {
            for x in e.crossings(2).unwrap() {
                let Some(next) = split_by_id(e, 2, x.id, Variant::Plus).unwrap() else {
                    continue;
                };
                let chords = next.chords();
                assert_eq!(chords.len(), 2);
                // the old chord left circle 2 from its base point, which lies
                // on whichever new circle contains the base point
                let old = chords.iter().find(|c| c.ends[0].0 == 1).unwrap();
                assert!(old.ends[1].0 == 2 || old.ends[1].0 == 3);
                next.validate().unwrap();
            }
        }
    }

    #[test]
    fn mu_one_matches_the_cobracket() {
        let d = LabeledDiagram::from_loop(&w(EXAMPLE), &g2()).unwrap();
        assert_eq!(mu_i(&d, 1).unwrap().terms().len(), 4);
        assert!(verify_factorization(&d, 1, &g2()).unwrap().holds());
        assert!(mu_i(&d, 1).unwrap().erase().is_empty());
    }

    #[test]
    fn simple_circle_has_no_terms() {
        let d = LabeledDiagram::from_loop(&w("a1"), &g2()).unwrap();
        assert!(mu_i(&d, 1).unwrap().terms().is_empty());
        assert!(mu_i(&d, 2).is_err());
    }

    #[test]
    fn second_split_on_two_crossing_loop() {
        // two nested crossings at distinct positions
        let g1 = SurfaceModel::genus_one_boundary(1).unwrap();
        let d = LabeledDiagram::from_loop(&w("a1.a2.a2.A1.a2"), &g1).unwrap();
        assert_eq!(d.crossings(1).unwrap().len(), 2);
        let mm = mu_i_comb(&mu_i(&d, 1).unwrap(), 2).unwrap();
        assert_eq!(mm.terms().len(), 4);
        assert_eq!(mm.terms().iter().filter(|t| t.1 > 0).count(), 2);
        for (e, _) in mm.terms() {
            assert_eq!(e.circle_count(), 3);
            assert_eq!(e.chords().len(), 2);
        }
    }

    #[test]
    fn identities_on_the_example() {
        let d = LabeledDiagram::from_loop(&w(EXAMPLE), &g2()).unwrap();
        assert!(verify_coskew(&d, 1).unwrap().holds());
        assert!(verify_cojacobi(&d, 1).unwrap().holds());
        let g1 = SurfaceModel::genus_one_boundary(1).unwrap();
        let e = LabeledDiagram::from_loop(&w("a1.a2.a2.A1.a2"), &g1).unwrap();
        assert!(verify_cojacobi(&e, 1).unwrap().holds());
        assert!(verify_coskew(&e, 1).unwrap().holds());
    }

    #[test]
    fn label_permutations() {
        let g1 = SurfaceModel::genus_one_boundary(1).unwrap();
        let d = LabeledDiagram::from_loop(&w("a1.a2.a2.A1.a2"), &g1).unwrap();
        let mm = mu_i_comb(&mu_i(&d, 1).unwrap(), 2).unwrap();
        let keys = |c: &TermCombination| {
            c.terms()
                .iter()
                .map(|(d, k)| (d.key(), *k))
                .collect::<Vec<_>>()
        };
        assert_eq!(keys(&tau_i(&tau_i(&mm, 1).unwrap(), 1).unwrap()), keys(&mm));
        let o3 = omega_i(&omega_i(&omega_i(&mm, 1).unwrap(), 1).unwrap(), 1).unwrap();
        assert_eq!(keys(&o3), keys(&mm));
        let tt = tau_i(&tau_i(&mm, 1).unwrap(), 2).unwrap();
        assert_eq!(keys(&tt), keys(&omega_i(&mm, 1).unwrap()));
        assert!(omega_i(&mm, 2).is_err());
    }

    #[test]
    fn erase_commutes_with_relabeling() {
        let d = LabeledDiagram::from_loop(&w(EXAMPLE), &g2()).unwrap();
        let m = mu_i(&d, 1).unwrap();
        let swapped: TensorCombination = m
            .erase()
            .into_iter()
            .map(|(mut k, c)| {
                k.swap(0, 1);
                (k, c)
            })
            .collect();
        assert_eq!(tau_i(&m, 1).unwrap().erase(), swapped);
    }

    #[test]
    fn key_ignores_rotation_and_chord_names() {
        let a = Token::Letter(Letter::gen(1));
        let b = Token::Letter(Letter::gen(2));
        let d1 = LabeledDiagram::from_tokens(vec![
            vec![Token::Chord(5), a, b],
            vec![b, Token::Chord(5)],
        ])
        .unwrap();
        let d2 = LabeledDiagram::from_tokens(vec![
            vec![a, b, Token::Chord(0)],
            vec![Token::Chord(0), b],
        ])
        .unwrap();
        assert_eq!(d1.key(), d2.key());
        let d3 = LabeledDiagram::from_tokens(vec![
            vec![a, Token::Chord(0), b],
            vec![Token::Chord(0), b],
        ])
        .unwrap();
        assert_ne!(d1.key(), d3.key());
        assert!(LabeledDiagram::from_tokens(vec![vec![Token::Chord(1), Token::Chord(1)]]).is_err());
    }

    #[test]
    fn powers_are_rejected() {
        assert!(matches!(
            LabeledDiagram::from_loop(&w("a1.a2.a1.a2"), &g2()),
            Err(Error::NotPrimitive { exponent: 2 })
        ));
    }
}
