use std::fmt::Write as _;

use loopmu::loopops::{goldman_bracket, mu, turaev_cobracket};
use loopmu::{ClassTerm, CyclicWord, SurfaceModel, TensorTerm, WedgeTerm, Word};
use serde::{Deserialize, Serialize};

/// `coefficient * [x . y]` with both loops as word text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeText {
    pub x: String,
    pub y: String,
    pub coefficient: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorText {
    pub left: String,
    pub right: String,
    pub coefficient: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassText {
    pub class: String,
    pub coefficient: i64,
}

impl From<&WedgeTerm> for WedgeText {
    fn from(t: &WedgeTerm) -> Self {
        WedgeText {
            x: t.x.to_string(),
            y: t.y.to_string(),
            coefficient: t.coefficient,
        }
    }
}

impl From<&TensorTerm> for TensorText {
    fn from(t: &TensorTerm) -> Self {
        TensorText {
            left: t.left.to_string(),
            right: t.right.to_string(),
            coefficient: t.coefficient,
        }
    }
}

impl From<&ClassTerm> for ClassText {
    fn from(t: &ClassTerm) -> Self {
        ClassText {
            class: t.value.to_string(),
            coefficient: t.coefficient,
        }
    }
}

/// Everything `compute` knows about one class. Field names are the stable
/// JSON interface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub word: String,
    pub surface: String,
    pub cyclic_core: String,
    pub primitive_root: String,
    pub exponent: u32,
    pub mu: Vec<WedgeText>,
    pub t: u64,
    pub m: u64,
    pub delta: Vec<TensorText>,
    pub is_power_of_simple: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub type2_raw: Option<Vec<WedgeText>>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketReport {
    pub surface: String,
    pub words: [String; 2],
    pub bracket: Vec<ClassText>,
}

pub fn compute(word: &Word, model: &SurfaceModel, include_type2: bool) -> loopmu::Result<Report> {
    let result = mu(word, model, include_type2)?;
    let delta = turaev_cobracket(word, model)?;
    let t = result.term_count();
    if t % 2 != 0 {
        return Err(loopmu::Error::Internal(format!("odd term count {t}")));
    }
    let core = CyclicWord::of(word);
    let mut warnings = Vec::new();
    if !word.is_cyclically_reduced() {
        warnings.push(format!(
            "input is not cyclically reduced; computed on its core {core}"
        ));
    }
    Ok(Report {
        word: word.to_string(),
        surface: model.to_string(),
        cyclic_core: core.to_string(),
        primitive_root: result.primitive_root.to_string(),
        exponent: result.exponent,
        mu: result.terms.iter().map(WedgeText::from).collect(),
        t,
        m: t / 2 + u64::from(result.exponent) - 1,
        delta: delta.iter().map(TensorText::from).collect(),
        is_power_of_simple: result.terms.is_empty(),
        type2_raw: result
            .type2_raw
            .map(|v| v.iter().map(WedgeText::from).collect()),
        warnings,
    })
}

pub fn bracket(a: &Word, b: &Word, model: &SurfaceModel) -> loopmu::Result<BracketReport> {
    let terms = goldman_bracket(a, b, model)?;
    Ok(BracketReport {
        surface: model.to_string(),
        words: [a.to_string(), b.to_string()],
        bracket: terms.iter().map(ClassText::from).collect(),
    })
}

fn signed(c: i64) -> String {
    if c >= 0 {
        format!("+{c}")
    } else {
        c.to_string()
    }
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "word:     {}", self.word);
        let _ = writeln!(s, "surface:  {}", self.surface);
        let _ = writeln!(s, "core:     {}", self.cyclic_core);
        let _ = writeln!(
            s,
            "root:     {} (exponent {})",
            self.primitive_root, self.exponent
        );
        let _ = writeln!(s, "mu:       {} term(s), t = {}", self.mu.len(), self.t);
        for w in &self.mu {
            let _ = writeln!(s, "  {} [{} . {}]", signed(w.coefficient), w.x, w.y);
        }
        if let Some(raw) = &self.type2_raw {
            let _ = writeln!(s, "type-2 (unreduced): {} term(s)", raw.len());
            for w in raw {
                let _ = writeln!(s, "  {} [{} . {}]", signed(w.coefficient), w.x, w.y);
            }
        }
        if self.delta.is_empty() {
            let _ = writeln!(s, "delta:    0");
        } else {
            let _ = writeln!(s, "delta:");
            for d in &self.delta {
                let _ = writeln!(s, "  {} {} (x) {}", signed(d.coefficient), d.left, d.right);
            }
        }
        let _ = writeln!(s, "m:        {}", self.m);
        let _ = writeln!(s, "power of simple: {}", self.is_power_of_simple);
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        s
    }
}

impl BracketReport {
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "[{}, {}] on {}:",
            self.words[0], self.words[1], self.surface
        );
        if self.bracket.is_empty() {
            s.push_str(" 0\n");
            return s;
        }
        s.push('\n');
        for c in &self.bracket {
            let _ = writeln!(s, "  {} {}", signed(c.coefficient), c.class);
        }
        s
    }
}
