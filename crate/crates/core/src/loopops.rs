//! `mu`, the Turaev cobracket, the Goldman bracket and the quantities derived
//! from them.
//!
//! A class `alpha = beta^n` with `beta` primitive is handled through its
//! root: every crossing of `beta` with loops `X`, `Y` (`X` leaving along the
//! first branch of the positive frame) becomes `n^2` crossings of the
//! perturbed power, the one labelled `(i, j)` contributing
//!
//! ```text
//! +[(XY)^I X . (YX)^J Y] - [(YX)^J Y . (XY)^I X],  I = (j - i) mod n,  J = n - 1 - I
//! ```
//!
//! and the `n - 1` crossings created by closing up the power contribute
//! `[beta^k . beta^(n-k)] - [beta^(n-k) . beta^k]`, which cancel in pairs.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::freegroup::{primitive_root, simultaneous_conjugacy, CyclicWord, Word};
use crate::intersections::{cross_linked_pairs, self_linked_pairs, LinkedPair};
use crate::surface::SurfaceModel;

/// `coefficient * [x . y]`: two loops glued at a common basepoint, up to
/// simultaneous conjugation of the pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WedgeTerm {
    pub x: Word,
    pub y: Word,
    pub coefficient: i64,
}

impl WedgeTerm {
    pub fn new(x: Word, y: Word, coefficient: i64) -> WedgeTerm {
        WedgeTerm { x, y, coefficient }
    }

    /// Same underlying class (coefficients ignored).
    pub fn same_class(&self, other: &WedgeTerm) -> Result<bool> {
        Ok(simultaneous_conjugacy(&self.x, &self.y, &other.x, &other.y)?.is_some())
    }

    #[must_use]
    pub fn swapped(&self) -> WedgeTerm {
        WedgeTerm::new(self.y.clone(), self.x.clone(), self.coefficient)
    }

    fn bucket(&self) -> (CyclicWord, CyclicWord) {
        (CyclicWord::of(&self.x), CyclicWord::of(&self.y))
    }
}

/// `coefficient * left ⊗ right`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorTerm {
    pub left: CyclicWord,
    pub right: CyclicWord,
    pub coefficient: i64,
}

/// `coefficient * [value]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassTerm {
    pub value: CyclicWord,
    pub coefficient: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuResult {
    /// Reduced combination, in order of first appearance.
    pub terms: Vec<WedgeTerm>,
    pub primitive_root: Word,
    pub exponent: u32,
    /// Unreduced terms from the crossings created by closing up the power.
    pub type2_raw: Option<Vec<WedgeTerm>>,
}

impl MuResult {
    pub fn term_count(&self) -> u64 {
        term_count(self.terms.iter().map(|t| t.coefficient))
    }
}

/// Sum of absolute values of coefficients.
pub fn term_count<I: IntoIterator<Item = i64>>(coefficients: I) -> u64 {
    coefficients.into_iter().map(i64::unsigned_abs).sum()
}

/// Merge terms whose classes coincide and drop zero coefficients.
pub fn reduce_wedges(terms: impl IntoIterator<Item = WedgeTerm>) -> Result<Vec<WedgeTerm>> {
    let mut classes: Vec<WedgeTerm> = Vec::new();
    let mut buckets: HashMap<(CyclicWord, CyclicWord), Vec<usize>> = HashMap::new();
    'terms: for term in terms {
        if term.coefficient == 0 {
            continue;
        }
        let slot = buckets.entry(term.bucket()).or_default();
        for &k in slot.iter() {
            if classes[k].same_class(&term)? {
                classes[k].coefficient += term.coefficient;
                continue 'terms;
            }
        }
        slot.push(classes.len());
        classes.push(term);
    }
    classes.retain(|t| t.coefficient != 0);
    Ok(classes)
}

/// Merge equal tensors; output sorted.
pub fn reduce_tensors(terms: impl IntoIterator<Item = TensorTerm>) -> Vec<TensorTerm> {
    let mut acc: BTreeMap<(CyclicWord, CyclicWord), i64> = BTreeMap::new();
    for t in terms {
        *acc.entry((t.left, t.right)).or_default() += t.coefficient;
    }
    acc.into_iter()
        .filter(|&(_, c)| c != 0)
        .map(|((left, right), coefficient)| TensorTerm {
            left,
            right,
            coefficient,
        })
        .collect()
}

/// Merge equal classes; output sorted.
pub fn reduce_classes(terms: impl IntoIterator<Item = ClassTerm>) -> Vec<ClassTerm> {
    let mut acc: BTreeMap<CyclicWord, i64> = BTreeMap::new();
    for t in terms {
        *acc.entry(t.value).or_default() += t.coefficient;
    }
    acc.into_iter()
        .filter(|&(_, c)| c != 0)
        .map(|(value, coefficient)| ClassTerm { value, coefficient })
        .collect()
}

/// Cyclic subword `w[from..to)` (wrapping), as a based word.
pub fn arc(w: &CyclicWord, from: usize, to: usize) -> Word {
    let n = w.len();
    let len = (to + n - from) % n;
    Word::from_letters((0..len).map(|k| w.letters()[(from + k) % n]))
}

/// The two loops at a crossing, ordered so that the first leaves along the
/// first vector of the positive frame.
pub fn crossing_loops(w: &CyclicWord, p: &LinkedPair) -> (Word, Word) {
    let (x, y) = (arc(w, p.i, p.j), arc(w, p.j, p.i));
    if p.sign > 0 {
        (x, y)
    } else {
        (y, x)
    }
}

struct PowerData {
    root: Word,
    core: CyclicWord,
    exponent: u32,
    pairs: Vec<LinkedPair>,
}

fn power_data(alpha: &Word, model: &SurfaceModel) -> Result<PowerData> {
    if alpha.is_identity() {
        return Err(Error::TrivialClass("self-intersections"));
    }
    model.check_letters(alpha.letters())?;
    let (root, exponent) = primitive_root(alpha)?;
    let core = CyclicWord::of(&root);
    let pairs = self_linked_pairs(&core, model)?;
    Ok(PowerData {
        root,
        core,
        exponent,
        pairs,
    })
}

/// Loop pairs `((XY)^I X, (YX)^J Y)` for every crossing of the root and every
/// label pair `(i, j)` of the `n^2` crossings above it.
fn type1_pairs(data: &PowerData) -> Vec<(Word, Word)> {
    let n = data.exponent as usize;
    let mut out = Vec::with_capacity(data.pairs.len() * n * n);
    for p in &data.pairs {
        let (x, y) = crossing_loops(&data.core, p);
        let (xy, yx) = (x.mul(&y), y.mul(&x));
        for i in 1..=n {
            for j in 1..=n {
                let big_i = (j + n - i) % n;
                let big_j = n - 1 - big_i;
                let first = xy.pow(big_i as i64).mul(&x);
                let second = yx.pow(big_j as i64).mul(&y);
                out.push((first, second));
            }
        }
    }
    out
}

fn type2_pairs(data: &PowerData) -> Vec<(Word, Word)> {
    let n = i64::from(data.exponent);
    let beta = data.core.to_word();
    (1..n).map(|k| (beta.pow(k), beta.pow(n - k))).collect()
}

/// The wedge operation on a free homotopy class.
pub fn mu(alpha: &Word, model: &SurfaceModel, include_type2: bool) -> Result<MuResult> {
    let data = power_data(alpha, model)?;
    let signed = |(x, y): (Word, Word)| {
        [
            WedgeTerm::new(x.clone(), y.clone(), 1),
            WedgeTerm::new(y, x, -1),
        ]
    };
    let type2: Vec<WedgeTerm> = type2_pairs(&data).into_iter().flat_map(signed).collect();
    let raw = type1_pairs(&data)
        .into_iter()
        .flat_map(signed)
        .chain(type2.iter().cloned());
    let terms = reduce_wedges(raw)?;
    Ok(MuResult {
        terms,
        primitive_root: data.root,
        exponent: data.exponent,
        type2_raw: include_type2.then_some(type2),
    })
}

/// Smooth the wedge at its basepoint: `[x . y] -> [x] ⊗ [y]`.
pub fn q_smooth(term: &WedgeTerm) -> TensorTerm {
    TensorTerm {
        left: CyclicWord::of(&term.x),
        right: CyclicWord::of(&term.y),
        coefficient: term.coefficient,
    }
}

/// The Turaev cobracket, computed directly from the crossings.
pub fn turaev_cobracket(alpha: &Word, model: &SurfaceModel) -> Result<Vec<TensorTerm>> {
    let data = power_data(alpha, model)?;
    let pairs = type1_pairs(&data).into_iter().chain(type2_pairs(&data));
    Ok(reduce_tensors(pairs.flat_map(|(x, y)| {
        let (cx, cy) = (CyclicWord::of(&x), CyclicWord::of(&y));
        [
            TensorTerm {
                left: cx.clone(),
                right: cy.clone(),
                coefficient: 1,
            },
            TensorTerm {
                left: cy,
                right: cx,
                coefficient: -1,
            },
        ]
    })))
}

/// The Turaev cobracket as `Q ∘ mu`.
pub fn cobracket_via_mu(alpha: &Word, model: &SurfaceModel) -> Result<Vec<TensorTerm>> {
    let m = mu(alpha, model, false)?;
    Ok(reduce_tensors(m.terms.iter().map(q_smooth)))
}

/// The Goldman bracket `[alpha, beta]`.
pub fn goldman_bracket(alpha: &Word, beta: &Word, model: &SurfaceModel) -> Result<Vec<ClassTerm>> {
    if alpha.is_identity() || beta.is_identity() {
        return Err(Error::TrivialClass("Goldman bracket"));
    }
    let (ka, kb) = (CyclicWord::of(alpha), CyclicWord::of(beta));
    let pairs = cross_linked_pairs(&ka, &kb, model)?;
    Ok(reduce_classes(pairs.into_iter().map(|p| ClassTerm {
        value: CyclicWord::of(&ka.rotation(p.i).mul(&kb.rotation(p.j))),
        coefficient: i64::from(p.sign),
    })))
}

/// `m(alpha) = t(mu(alpha))/2 + n - 1` for `alpha = beta^n`, `beta` primitive.
pub fn minimal_self_intersection(alpha: &Word, model: &SurfaceModel) -> Result<u64> {
    let m = mu(alpha, model, false)?;
    let t = m.term_count();
    if t % 2 != 0 {
        return Err(Error::Internal(format!("odd term count {t}")));
    }
    Ok(t / 2 + u64::from(m.exponent) - 1)
}

/// `mu(alpha)` vanishes exactly for powers of simple classes.
pub fn is_power_of_simple(alpha: &Word, model: &SurfaceModel) -> Result<bool> {
    Ok(mu(alpha, model, false)?.terms.is_empty())
}

/// Every term `c [x . y]` of a reduced combination is matched by a term of
/// the class `[y . x]` with coefficient `-c`.
pub fn has_swap_structure(terms: &[WedgeTerm]) -> Result<bool> {
    for t in terms {
        let s = t.swapped();
        let mut matched = false;
        for u in terms {
            if u.coefficient == -t.coefficient && u.same_class(&s)? {
                matched = true;
                break;
            }
        }
        if !matched {
            return Ok(false);
        }
    }
    Ok(true)
}
