use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use loopmu::{SurfaceModel, Word};
use loopmu_cli::census::{self, LARGE_MAX_LEN};
use loopmu_cli::verify::{run_suite, Suite};
use loopmu_cli::{exit_code, DEFAULT_SURFACE};

#[derive(Parser)]
#[command(
    name = "loopmu",
    version,
    about = "Self-intersection, bracket and cobracket of loops on surfaces with boundary"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// mu, the cobracket, t and m for one class
    Compute {
        /// `genus:<g>,boundary:1`, `spheres:<b>`, `word:<letters>` or `order:<labels>`
        #[arg(long)]
        surface: SurfaceModel,
        #[arg(long, allow_hyphen_values = true)]
        word: Word,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Also list the canceling terms from closing up a power
        #[arg(long)]
        include_type2: bool,
    },
    /// Goldman bracket of two classes
    Bracket {
        #[arg(long)]
        surface: SurfaceModel,
        #[arg(long, num_args = 2, value_names = ["W1", "W2"])]
        words: Vec<Word>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Evaluate many classes and write one JSON line per class
    Census {
        #[arg(long)]
        surface: SurfaceModel,
        /// Every class of length at most L
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        max_len: Option<usize>,
        /// File with one word per line
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        /// Count a class and its inverse once
        #[arg(long)]
        identify_inverses: bool,
    },
    /// Randomized identity checks
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = DEFAULT_SURFACE)]
        surface: SurfaceModel,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn print<T: serde::Serialize>(
    value: &T,
    text: impl FnOnce() -> String,
    format: Format,
) -> anyhow::Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value)?),
        Format::Text => print!("{}", text()),
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Compute {
            surface,
            word,
            format,
            include_type2,
        } => {
            surface.check_letters(word.letters())?;
            let report = loopmu_cli::compute(&word, &surface, include_type2)?;
            print(&report, || report.to_text(), format)?;
        }
        Command::Bracket {
            surface,
            words,
            format,
        } => {
            for w in &words {
                surface.check_letters(w.letters())?;
            }
            let report = loopmu_cli::bracket(&words[0], &words[1], &surface)?;
            print(&report, || report.to_text(), format)?;
        }
        Command::Census {
            surface,
            max_len,
            input,
            out,
            identify_inverses,
        } => {
            let mut classes = match (max_len, input) {
                (Some(l), _) => {
                    if l > LARGE_MAX_LEN {
                        eprintln!(
                            "warning: --max-len {l} enumerates a very large number of classes"
                        );
                    }
                    census::enumerate_classes(surface.rank(), l)
                }
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path)
                        .with_context(|| format!("cannot read {}", path.display()))?;
                    census::read_classes(&text, &surface)?
                }
                (None, None) => anyhow::bail!("census needs --max-len or --input"),
            };
            if identify_inverses {
                classes = census::identify_inverses(classes);
            }
            let (lines, summary) = census::run(&classes, &surface)?;
            census::write_jsonl(&lines, &out)?;
            println!("{}", serde_json::to_string(&summary)?);
        }
        Command::Verify {
            suite,
            trials,
            seed,
            surface,
            format,
        } => {
            let report = run_suite(suite, trials, seed, &surface)?;
            print(&report, || report.to_text(), format)?;
            return Ok(report.all_passed());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
