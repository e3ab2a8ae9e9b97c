use clap::ValueEnum;
use loopmu::diagrams::{
    verify_cojacobi, verify_coskew, verify_factorization, LabeledDiagram, Outcome,
};
use loopmu::freegroup::{brute_force_conjugator, simultaneous_conjugacy};
use loopmu::loopops::{cobracket_via_mu, turaev_cobracket};
use loopmu::{CyclicWord, Letter, SurfaceModel, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Longest random loop used by the diagram suites.
pub const DIAGRAM_MAX_LEN: usize = 8;
/// Conjugator length searched exhaustively by the oracle.
pub const ORACLE_DEPTH: usize = 6;
/// Word length for oracle instances.
pub const ORACLE_MAX_LEN: usize = 5;
/// Rank cap for oracle instances; conjugacy does not depend on the surface.
pub const ORACLE_MAX_RANK: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Coskew,
    Cojacobi,
    Factorization,
    ConjugacyOracle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialFailure {
    pub trial: u64,
    pub input: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub surface: String,
    pub seed: u64,
    pub trials: u64,
    pub passed: u64,
    pub not_syntactically_zero: u64,
    /// Oracle suite only: instances where a conjugator exists.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjugate_instances: Option<u64>,
    pub failures: Vec<TrialFailure>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.trials
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{:?} on {} (seed {}): {}/{} passed\n",
            self.suite, self.surface, self.seed, self.passed, self.trials
        );
        if let Some(k) = self.conjugate_instances {
            s.push_str(&format!("  {k} instance(s) with a conjugator\n"));
        }
        if self.not_syntactically_zero > 0 {
            s.push_str(&format!(
                "  {} not syntactically zero\n",
                self.not_syntactically_zero
            ));
        }
        for f in &self.failures {
            s.push_str(&format!(
                "  trial {}: {} -- {}\n",
                f.trial, f.input, f.detail
            ));
        }
        s
    }
}

/// Uniform random cyclically reduced word with length in `1..=max_len`.
pub fn random_cyclic_word<R: Rng>(rng: &mut R, rank: u32, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = Letter::from_code(rng.gen_range(0..2 * rank as usize));
        if letters.last() == Some(&l.inverse()) {
            continue;
        }
        if letters.len() + 1 == len && len > 1 && letters[0] == l.inverse() {
            continue;
        }
        letters.push(l);
    }
    Word::from_letters(letters)
}

/// Random reduced word of length in `0..=max_len`.
pub fn random_word<R: Rng>(rng: &mut R, rank: u32, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = Letter::from_code(rng.gen_range(0..2 * rank as usize));
        if letters.last() != Some(&l.inverse()) {
            letters.push(l);
        }
    }
    Word::from_letters(letters)
}

pub fn random_primitive<R: Rng>(rng: &mut R, rank: u32, max_len: usize) -> Word {
    loop {
        let w = random_cyclic_word(rng, rank, max_len);
        if CyclicWord::of(&w).is_primitive() {
            return w;
        }
    }
}

/// Independent stream per trial, so results do not depend on scheduling.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

enum Trial {
    Pass,
    /// Oracle agreement on an instance that has a conjugator.
    PassConjugate,
    NotSyntacticallyZero(String),
    Fail(String),
}

fn outcome(name: &str, o: Outcome) -> Trial {
    match o {
        Outcome::Holds => Trial::Pass,
        Outcome::NotSyntacticallyZero { residual_terms } => Trial::NotSyntacticallyZero(format!(
            "{name}: {residual_terms} residual term(s) cancel after erasing"
        )),
        Outcome::Violated { residual_terms } => {
            Trial::Fail(format!("{name}: {residual_terms} residual term(s)"))
        }
    }
}

fn run_trial(
    suite: Suite,
    model: &SurfaceModel,
    rng: &mut ChaCha8Rng,
) -> (String, loopmu::Result<Trial>) {
    let rank = model.rank();
    match suite {
        Suite::Coskew | Suite::Cojacobi | Suite::Factorization => {
            let w = random_primitive(rng, rank, DIAGRAM_MAX_LEN);
            let run = || -> loopmu::Result<Trial> {
                let d = LabeledDiagram::from_loop(&w, model)?;
                Ok(match suite {
                    Suite::Coskew => outcome("coskew", verify_coskew(&d, 1)?),
                    Suite::Cojacobi => outcome("cojacobi", verify_cojacobi(&d, 1)?),
                    _ => match outcome("E mu_1 = Delta_1 E", verify_factorization(&d, 1, model)?) {
                        Trial::Pass
                            if turaev_cobracket(&w, model)? != cobracket_via_mu(&w, model)? =>
                        {
                            Trial::Fail("direct cobracket differs from Q(mu)".into())
                        }
                        other => other,
                    },
                })
            };
            (w.to_string(), run())
        }
        Suite::ConjugacyOracle => {
            let r = rank.min(ORACLE_MAX_RANK);
            let x = random_cyclic_word(rng, r, ORACLE_MAX_LEN);
            let y = random_cyclic_word(rng, r, ORACLE_MAX_LEN);
            let (x2, y2) = if rng.gen_bool(0.5) {
                let g = random_word(rng, r, 4);
                (x.conjugate_by(&g), y.conjugate_by(&g))
            } else {
                (
                    random_cyclic_word(rng, r, ORACLE_MAX_LEN),
                    random_cyclic_word(rng, r, ORACLE_MAX_LEN),
                )
            };
            let input = format!("({x}, {y}) -> ({x2}, {y2})");
            let run = || -> loopmu::Result<Trial> {
                let fast = simultaneous_conjugacy(&x, &y, &x2, &y2)?;
                let slow = brute_force_conjugator(&x, &y, &x2, &y2, r, ORACLE_DEPTH);
                Ok(match (&fast, &slow) {
                    (Some(g), _) if x.conjugate_by(g) != x2 || y.conjugate_by(g) != y2 => {
                        Trial::Fail(format!("returned {g}, which is not a conjugator"))
                    }
                    (None, Some(g)) => Trial::Fail(format!("missed conjugator {g}")),
                    (Some(g), None) if g.len() <= ORACLE_DEPTH => {
                        Trial::Fail(format!("brute force missed {g}"))
                    }
                    (Some(_), _) => Trial::PassConjugate,
                    (None, None) => Trial::Pass,
                })
            };
            (input, run())
        }
    }
}

/// Run `trials` independent trials. Trials run concurrently; the report lists
/// failures in trial order.
pub fn run_suite(
    suite: Suite,
    trials: u64,
    seed: u64,
    model: &SurfaceModel,
) -> loopmu::Result<VerifyReport> {
    let results: Vec<(u64, String, Trial)> = (0..trials)
        .into_par_iter()
        .map(|k| {
            let mut rng = trial_rng(seed, k);
            let (input, r) = run_trial(suite, model, &mut rng);
            r.map(|t| (k, input, t))
        })
        .collect::<loopmu::Result<_>>()?;
    let mut report = VerifyReport {
        suite,
        surface: model.to_string(),
        seed,
        trials,
        passed: 0,
        not_syntactically_zero: 0,
        conjugate_instances: (suite == Suite::ConjugacyOracle).then_some(0),
        failures: Vec::new(),
    };
    for (trial, input, t) in results {
        match t {
            Trial::Pass => report.passed += 1,
            Trial::PassConjugate => {
                report.passed += 1;
                *report.conjugate_instances.get_or_insert(0) += 1;
            }
            Trial::NotSyntacticallyZero(detail) => {
                report.not_syntactically_zero += 1;
                report.failures.push(TrialFailure {
                    trial,
                    input,
                    detail,
                });
            }
            Trial::Fail(detail) => report.failures.push(TrialFailure {
                trial,
                input,
                detail,
            }),
        }
    }
    Ok(report)
}
