//! Combinatorial crossings of taut representatives.
//!
//! A cyclically reduced word `w` lifts to lines in the universal cover, a
//! planar tree. Each position `k` of `w` is a strand through the basepoint
//! vertex: it arrives through germ `inv(w[k-1])` and leaves through `w[k]`.
//! Two strands cross exactly when the four ends of their lines alternate
//! around the circle at infinity. The circular order of ends is read off the
//! ribbon structure: distinct first letters are compared in the vertex
//! order; a shared first letter `s` is followed to the next vertex, where the
//! continuations are ordered by cutting the vertex order just after
//! `inv(s)`.
//!
//! Each crossing is reported once, at the vertex where the two lines start
//! sharing a segment (or meet, if they share no edge).

use crate::error::{Error, Result};
use crate::freegroup::{CyclicWord, Letter};
use crate::surface::SurfaceModel;

/// One end of a strand, as an infinite periodic letter stream.
#[derive(Debug, Clone, Copy)]
pub struct Ray<'a> {
    letters: &'a [Letter],
    start: usize,
    outgoing: bool,
}

impl<'a> Ray<'a> {
    /// Reads `w[k], w[k+1], ...`.
    pub fn outgoing(letters: &'a [Letter], k: usize) -> Ray<'a> {
        assert!(!letters.is_empty());
        Ray {
            letters,
            start: k % letters.len(),
            outgoing: true,
        }
    }

    /// Reads `inv(w[k-1]), inv(w[k-2]), ...`.
    pub fn incoming(letters: &'a [Letter], k: usize) -> Ray<'a> {
        assert!(!letters.is_empty());
        Ray {
            letters,
            start: k % letters.len(),
            outgoing: false,
        }
    }

    pub fn period(&self) -> usize {
        self.letters.len()
    }

    pub fn at(&self, d: usize) -> Letter {
        let n = self.letters.len();
        if self.outgoing {
            self.letters[(self.start + d) % n]
        } else {
            self.letters[(self.start + n - 1 - d % n) % n].inverse()
        }
    }

    /// Letter-by-letter equality over enough letters to decide equality of
    /// the two periodic streams.
    pub fn same_stream(&self, other: &Ray<'_>) -> bool {
        (0..self.period() + other.period()).all(|d| self.at(d) == other.at(d))
    }
}

fn linear_less(
    a: &Ray<'_>,
    b: &Ray<'_>,
    mut depth: usize,
    mut cut: Letter,
    model: &SurfaceModel,
    cap: usize,
) -> Result<bool> {
    loop {
        if depth > cap {
            return Err(Error::DivergenceCap { cap });
        }
        let (x, y) = (a.at(depth), b.at(depth));
        if x != y {
            return Ok(model.rank_after(cut, x) < model.rank_after(cut, y));
        }
        cut = x.inverse();
        depth += 1;
    }
}

/// Circular orientation of three ray ends around the basepoint: `+1` when
/// they are counterclockwise in argument order.
pub fn orient_triple(r1: &Ray<'_>, r2: &Ray<'_>, r3: &Ray<'_>, model: &SurfaceModel) -> Result<i8> {
    let cap = 2 * (r1.period() + r2.period() + r3.period());
    let rays = [r1, r2, r3];
    let mut depth = 0;
    loop {
        if depth > cap {
            return Err(Error::DivergenceCap { cap });
        }
        let x = [r1.at(depth), r2.at(depth), r3.at(depth)];
        if x[0] != x[1] && x[1] != x[2] && x[0] != x[2] {
            return Ok(model.cyclic_sign(x[0], x[1], x[2]));
        }
        if x[0] == x[1] && x[1] == x[2] {
            depth += 1;
            continue;
        }
        // (a, b, c) is an even permutation of (0, 1, 2) with a, b sharing a germ
        let (a, b) = if x[0] == x[1] {
            (0, 1)
        } else if x[0] == x[2] {
            (2, 0)
        } else {
            (1, 2)
        };
        // within the shared sector the ends run counterclockwise in cut order
        let a_first = linear_less(rays[a], rays[b], depth + 1, x[a].inverse(), model, cap)?;
        return Ok(if a_first { 1 } else { -1 });
    }
}

/// Sign of a crossing between two strands, or `None` if they do not cross.
///
/// The sign is `+1` when (tangent of `a`, tangent of `b`) is a positive
/// frame, i.e. `b` heads to the left of `a`.
fn crossing(
    a_in: &Ray<'_>,
    a_out: &Ray<'_>,
    b_in: &Ray<'_>,
    b_out: &Ray<'_>,
    model: &SurfaceModel,
) -> Result<Option<i8>> {
    let side_in = orient_triple(a_in, b_in, a_out, model)?;
    let side_out = orient_triple(a_in, b_out, a_out, model)?;
    if side_in == side_out {
        return Ok(None);
    }
    Ok(Some(orient_triple(a_in, a_out, b_out, model)?))
}

/// A self-crossing of a primitive cyclic word: positions `i < j` and the
/// sign of the crossing with the strand at `i` taken first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinkedPair {
    pub i: usize,
    pub j: usize,
    pub sign: i8,
}

/// A crossing between strand `i` of a first word and strand `j` of a second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrossPair {
    pub i: usize,
    pub j: usize,
    pub sign: i8,
}

fn in_germ(w: &[Letter], k: usize) -> Letter {
    let n = w.len();
    w[(k + n - 1) % n].inverse()
}

fn out_germ(w: &[Letter], k: usize) -> Letter {
    w[k % w.len()]
}

/// Sign of the crossing of strands `i` and `j` of one word, strand `i` first,
/// or `None` when they do not cross.
pub fn strand_crossing(
    w: &CyclicWord,
    i: usize,
    j: usize,
    model: &SurfaceModel,
) -> Result<Option<i8>> {
    let l = w.letters();
    crossing(
        &Ray::incoming(l, i),
        &Ray::outgoing(l, i),
        &Ray::incoming(l, j),
        &Ray::outgoing(l, j),
        model,
    )
}

/// All self-crossings of the taut representative of a primitive class.
///
/// Every nonempty cyclic subword of a cyclically reduced word is
/// nontrivial, so no crossing is discarded as inessential here.
pub fn self_linked_pairs(w: &CyclicWord, model: &SurfaceModel) -> Result<Vec<LinkedPair>> {
    if w.is_empty() {
        return Err(Error::TrivialClass("self-intersections"));
    }
    if !w.is_primitive() {
        return Err(Error::NotPrimitive {
            exponent: w.exponent() as u32,
        });
    }
    power_linked_pairs(w, model)
}

/// Linked pairs read off a possibly non-primitive cyclic word, position by
/// position. Positions congruent modulo the period carry identical strands and
/// are never paired. For a proper power this enumerates the crossings of a
/// perturbation of the power that come from crossings of the root, and misses
/// the ones created by the perturbation itself.
pub fn power_linked_pairs(w: &CyclicWord, model: &SurfaceModel) -> Result<Vec<LinkedPair>> {
    if w.is_empty() {
        return Err(Error::TrivialClass("self-intersections"));
    }
    model.check_letters(w.letters())?;
    let l = w.letters();
    let n = l.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let (ii, oi, ij, oj) = (in_germ(l, i), out_germ(l, i), in_germ(l, j), out_germ(l, j));
            // the shared segment must start here when walking along strand i
            if ii == ij || ii == oj {
                continue;
            }
            if ij != oi {
                // strands enter from distinct germs: the same vertex is the
                // start for both, so keep one orientation of the pair
                if i > j {
                    continue;
                }
            } else {
                // opposite overlap: the segment starts at a different vertex
                // when walking along strand j; keep the smaller position pair
                let mut len = 0;
                while len < n && l[(i + len) % n] == l[(j + 2 * n - 1 - len) % n].inverse() {
                    len += 1;
                }
                if len >= n {
                    return Err(Error::Internal("strand is its own reverse".into()));
                }
                let (pi, pj) = ((i + len) % n, (j + n - len % n) % n);
                let here = (i.min(j), i.max(j));
                let there = (pi.min(pj), pi.max(pj));
                if here > there {
                    continue;
                }
            }
            if let Some(sign) = strand_crossing(w, i, j, model)? {
                let (a, b) = (i.min(j), i.max(j));
                let sign = if a == i { sign } else { -sign };
                out.push(LinkedPair { i: a, j: b, sign });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Crossings between the taut representatives of two classes.
///
/// Strand pairs lying on a common line (the classes share a root) are not
/// crossings and are skipped.
pub fn cross_linked_pairs(
    w1: &CyclicWord,
    w2: &CyclicWord,
    model: &SurfaceModel,
) -> Result<Vec<CrossPair>> {
    if w1.is_empty() || w2.is_empty() {
        return Err(Error::TrivialClass("intersections"));
    }
    model.check_letters(w1.letters())?;
    model.check_letters(w2.letters())?;
    let (l1, l2) = (w1.letters(), w2.letters());
    let mut out = Vec::new();
    for i in 0..l1.len() {
        let (a_in, a_out) = (Ray::incoming(l1, i), Ray::outgoing(l1, i));
        for j in 0..l2.len() {
            let (b_in, b_out) = (Ray::incoming(l2, j), Ray::outgoing(l2, j));
            let ii = a_in.at(0);
            if ii == b_in.at(0) || ii == b_out.at(0) {
                continue;
            }
            if (a_out.same_stream(&b_out) && a_in.same_stream(&b_in))
                || (a_out.same_stream(&b_in) && a_in.same_stream(&b_out))
            {
                continue;
            }
            if let Some(sign) = crossing(&a_in, &a_out, &b_in, &b_out, model)? {
                out.push(CrossPair { i, j, sign });
            }
        }
    }
    Ok(out)
}
