use std::collections::BTreeSet;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use anyhow::Context;
use loopmu::loopops::{mu, turaev_cobracket};
use loopmu::{CyclicWord, Letter, SurfaceModel, Word};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Census lengths above this print a warning; the class count grows like
/// `(2n - 1)^L`.
pub const LARGE_MAX_LEN: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusLine {
    pub word: String,
    pub length: usize,
    pub exponent: u32,
    pub t: u64,
    pub m: u64,
    pub is_power_of_simple: bool,
    pub delta_zero: bool,
    pub delta_zero_mu_nonzero: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub classes: usize,
    pub powers_of_simple: usize,
    pub delta_zero_mu_nonzero: usize,
}

/// Canonical representatives of all nontrivial classes of length at most
/// `max_len`, sorted.
pub fn enumerate_classes(rank: u32, max_len: usize) -> BTreeSet<CyclicWord> {
    let mut out = BTreeSet::new();
    let mut stack: Vec<Letter> = Vec::new();
    extend(&mut stack, rank, max_len, &mut out);
    out
}

fn extend(stack: &mut Vec<Letter>, rank: u32, max_len: usize, out: &mut BTreeSet<CyclicWord>) {
    if let (Some(first), Some(last)) = (stack.first(), stack.last()) {
        if *first != last.inverse() {
            let w = Word::from_letters(stack.iter().copied());
            let c = CyclicWord::of(&w);
            if c.letters() == stack.as_slice() {
                out.insert(c);
            }
        }
    }
    if stack.len() == max_len {
        return;
    }
    for code in 0..2 * rank as usize {
        let l = Letter::from_code(code);
        if stack.last() == Some(&l.inverse()) {
            continue;
        }
        // a canonical rotation starts with its least letter
        if stack.first().is_some_and(|f| l < *f) {
            continue;
        }
        stack.push(l);
        extend(stack, rank, max_len, out);
        stack.pop();
    }
}

/// Classes named in a word list, one per line; blank lines and `#` comments
/// are skipped.
pub fn read_classes(text: &str, model: &SurfaceModel) -> anyhow::Result<BTreeSet<CyclicWord>> {
    let mut out = BTreeSet::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let w: Word = line.parse().with_context(|| format!("line {}", n + 1))?;
        model
            .check_letters(w.letters())
            .with_context(|| format!("line {}", n + 1))?;
        if w.is_identity() {
            anyhow::bail!("line {}: the trivial class has no census entry", n + 1);
        }
        out.insert(CyclicWord::of(&w));
    }
    Ok(out)
}

/// Keep one of each pair `{c, c^-1}` (the smaller canonical form).
pub fn identify_inverses(classes: BTreeSet<CyclicWord>) -> BTreeSet<CyclicWord> {
    classes.into_iter().filter(|c| *c <= c.inverse()).collect()
}

pub fn census_line(class: &CyclicWord, model: &SurfaceModel) -> loopmu::Result<CensusLine> {
    let w = class.to_word();
    let r = mu(&w, model, false)?;
    let t = r.term_count();
    let delta_zero = turaev_cobracket(&w, model)?.is_empty();
    Ok(CensusLine {
        word: class.to_string(),
        length: class.len(),
        exponent: r.exponent,
        t,
        m: t / 2 + u64::from(r.exponent) - 1,
        is_power_of_simple: r.terms.is_empty(),
        delta_zero,
        delta_zero_mu_nonzero: delta_zero && !r.terms.is_empty(),
    })
}

/// Evaluate classes in parallel; output keeps the sorted input order.
pub fn run(
    classes: &BTreeSet<CyclicWord>,
    model: &SurfaceModel,
) -> loopmu::Result<(Vec<CensusLine>, CensusSummary)> {
    let list: Vec<&CyclicWord> = classes.iter().collect();
    let lines = list
        .par_iter()
        .map(|c| census_line(c, model))
        .collect::<loopmu::Result<Vec<_>>>()?;
    let summary = CensusSummary {
        classes: lines.len(),
        powers_of_simple: lines.iter().filter(|l| l.is_power_of_simple).count(),
        delta_zero_mu_nonzero: lines.iter().filter(|l| l.delta_zero_mu_nonzero).count(),
    };
    Ok((lines, summary))
}

pub fn write_jsonl(lines: &[CensusLine], path: &Path) -> anyhow::Result<()> {
    let file =
        fs::File::create(path).with_context(|| format!("cannot write {}", path.display()))?;
    let mut out = BufWriter::new(file);
    for line in lines {
        serde_json::to_writer(&mut out, line)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_rotation_classes() {
        // rank 1: a1^k and A1^k for k = 1..=3
        assert_eq!(enumerate_classes(1, 3).len(), 6);
        let two = enumerate_classes(2, 2);
        // a_i, A_i (4), squares (4), a1a2-type products of distinct generators (4)
        assert_eq!(two.len(), 12);
        assert!(two.iter().all(|c| c.to_word().is_cyclically_reduced()));
    }

    #[test]
    fn reading_dedupes_conjugates() {
        let m: SurfaceModel = "genus:1,boundary:1".parse().unwrap();
        let got = read_classes("a1.a2\n# comment\n\na2.a1\nA2.a1.a2.a2\n", &m).unwrap();
        assert_eq!(got.len(), 1);
        assert!(read_classes("a1.A1\n", &m).is_err());
        assert!(read_classes("a3\n", &m).is_err());
    }

    #[test]
    fn inverse_pairs_collapse() {
        let all = enumerate_classes(2, 3);
        let half = identify_inverses(all.clone());
        assert_eq!(half.len() * 2, all.len());
    }
}
