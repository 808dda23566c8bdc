use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use burnside_core::{
    check_mu_properties, find_power_factorizations, is_power_free, parse_xi, search_identification,
    search_trivialization, verify_sequence, BurnsideParams, ConeParams, Endomorphism, FreeWord,
    MoveSequence, SearchBudget, SearchOutcome, SequenceRecord,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Word problems in free Burnside quotients via elementary moves.
///
/// Words use lowercase letters for generators and uppercase for inverses.
/// Exit status: 0 ok/found, 1 unknown (or nothing found), 2 invalid input.
#[derive(Parser, Debug)]
#[command(name = "burnside", version)]
struct Cli {
    /// Number of generators.
    #[arg(long, global = true, default_value_t = 2)]
    rank: u32,
    /// Odd exponent n of the quotient.
    #[arg(long, global = true, default_value_t = 5)]
    n: u32,
    /// Slack ξ: integer, decimal or fraction `a/b`.
    #[arg(long, global = true, default_value = "1")]
    xi: String,
    #[arg(long, global = true, default_value_t = SearchBudget::default().max_moves)]
    max_moves: usize,
    #[arg(long, global = true, default_value_t = SearchBudget::default().max_len)]
    max_len: usize,
    #[arg(long, global = true, default_value_t = SearchBudget::default().max_states)]
    max_states: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    /// One JSON value per line.
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Freely reduce words.
    Reduce(Words),
    /// List power factorizations p·uᵐ·s.
    Scan {
        #[command(flatten)]
        words: Words,
        #[arg(long, default_value_t = 2)]
        min_exp: usize,
    },
    /// Search for a verified sequence of moves to the empty word.
    Trivialize(Words),
    /// Search for two verified sequences of moves with a common end.
    Equal { left: String, right: String },
    /// Iterate an endomorphism on a seed word.
    Orbit {
        /// Mapping such as `a=ab; b=a`, or one of `phi`, `psi`, `thue-morse`.
        mapping: String,
        seed: String,
        k: usize,
        /// Flag each entry as free of P-th powers or not.
        #[arg(long, value_name = "P")]
        check_power_free: Option<usize>,
    },
    /// Check the properties of the cone function μ on a grid.
    Mu {
        #[arg(long, allow_negative_numbers = true)]
        r0: f64,
        #[arg(long, default_value_t = 200)]
        grid: usize,
    },
}

#[derive(clap::Args, Debug)]
struct Words {
    words: Vec<String>,
    /// Read words from a file, one per line.
    #[arg(long, short)]
    file: Option<PathBuf>,
}

impl Words {
    fn texts(&self) -> Result<Vec<String>> {
        let mut out = self.words.clone();
        if let Some(path) = &self.file {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            out.extend(text.lines().map(|l| l.trim().to_string()));
        }
        Ok(out)
    }

    fn parse(&self, rank: u32) -> Result<Vec<FreeWord>> {
        self.texts()?
            .iter()
            .map(|t| FreeWord::parse(t, rank).with_context(|| format!("word {t:?}")))
            .collect()
    }
}

impl Cli {
    fn params(&self) -> Result<BurnsideParams> {
        Ok(BurnsideParams::new(self.rank, self.n, parse_xi(&self.xi)?)?)
    }

    fn budget(&self) -> Result<SearchBudget> {
        if self.max_moves == 0 || self.max_len == 0 || self.max_states == 0 {
            bail!("budgets must be positive");
        }
        Ok(SearchBudget {
            max_moves: self.max_moves,
            max_len: self.max_len,
            max_states: self.max_states,
        })
    }
}

fn show(w: &FreeWord) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.to_string()
    }
}

/// Record of a sequence that has passed the verifier.
fn audited(seq: &MoveSequence, params: &BurnsideParams) -> Result<SequenceRecord> {
    let report = verify_sequence(seq, params);
    if !report.passed() {
        bail!("internal error: sequence from {} failed verification: {:?}", seq.start, report.failure);
    }
    Ok(SequenceRecord::new(seq, params))
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let structured = cli.format == Format::Structured;
    match &cli.command {
        Command::Reduce(words) => {
            for w in words.parse(cli.rank)? {
                if structured {
                    println!("{}", json!(w.to_string()));
                } else {
                    println!("{w}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan { words, min_exp } => {
            let mut any = false;
            for w in words.parse(cli.rank)? {
                let found = find_power_factorizations(&w, *min_exp);
                any |= !found.is_empty();
                if structured {
                    let items: Vec<_> = found
                        .iter()
                        .map(|f| json!({"prefix_len": f.prefix_len, "base": f.base.to_string(), "exponent": f.exponent}))
                        .collect();
                    println!("{}", json!({"word": w.to_string(), "factorizations": items}));
                } else {
                    println!("{}:", show(&w));
                    for f in &found {
                        println!("  prefix_len={} base={} exponent={}", f.prefix_len, f.base, f.exponent);
                    }
                }
            }
            Ok(if any { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Trivialize(words) => {
            let (params, budget) = (cli.params()?, cli.budget()?);
            let mut all_found = true;
            for w in words.parse(cli.rank)? {
                match search_trivialization(&w, &params, budget) {
                    SearchOutcome::Found(seq) => {
                        let record = audited(&seq, &params)?;
                        if structured {
                            println!("{}", record.to_json());
                        } else {
                            println!("{}", record.to_human());
                        }
                    }
                    SearchOutcome::Unknown { states, exhausted } => {
                        all_found = false;
                        if structured {
                            println!("{}", json!({"start": w.to_string(), "unknown": format!("{exhausted:?}"), "states": states}));
                        } else {
                            println!("{}: UNKNOWN ({exhausted:?} budget exhausted after {states} states)", show(&w));
                        }
                    }
                }
            }
            Ok(if all_found { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Equal { left, right } => {
            let (params, budget) = (cli.params()?, cli.budget()?);
            let g = FreeWord::parse(left, cli.rank).with_context(|| format!("word {left:?}"))?;
            let h = FreeWord::parse(right, cli.rank).with_context(|| format!("word {right:?}"))?;
            match search_identification(&g, &h, &params, budget) {
                SearchOutcome::Found((a, b)) => {
                    let (a, b) = (audited(&a, &params)?, audited(&b, &params)?);
                    if structured {
                        println!("{}", json!({"left": a, "right": b}));
                    } else {
                        println!("left:\n{}\nright:\n{}", a.to_human(), b.to_human());
                    }
                    Ok(ExitCode::SUCCESS)
                }
                SearchOutcome::Unknown { states, exhausted } => {
                    if structured {
                        println!("{}", json!({"unknown": format!("{exhausted:?}"), "states": states}));
                    } else {
                        println!("UNKNOWN ({exhausted:?} budget exhausted after {states} states)");
                    }
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Orbit { mapping, seed, k, check_power_free } => {
            let e = match mapping.as_str() {
                "phi" => Endomorphism::fibonacci(),
                "psi" => Endomorphism::growing_powers(),
                "thue-morse" => Endomorphism::thue_morse(),
                text => text.parse().with_context(|| format!("mapping {text:?}"))?,
            };
            let seed = FreeWord::parse(seed, e.rank()).with_context(|| format!("seed {seed:?}"))?;
            for (i, w) in e.orbit(&seed, *k)?.iter().enumerate() {
                let flag = check_power_free.map(|p| is_power_free(w, p));
                if structured {
                    println!("{}", json!({"k": i, "word": w.to_string(), "power_free": flag}));
                } else {
                    match flag {
                        Some(f) => println!("{i}\t{}\t{}", show(w), if f { "power-free" } else { "has-power" }),
                        None => println!("{i}\t{}", show(w)),
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Mu { r0, grid } => {
            let p = ConeParams::new(*r0)?;
            let report = check_mu_properties(&p, *grid);
            if structured {
                let checks: Vec<_> = report
                    .checks
                    .iter()
                    .map(|c| json!({"name": c.name, "max_violation": c.max_violation, "passed": c.passed}))
                    .collect();
                println!(
                    "{}",
                    json!({"r0": report.r0, "grid": report.grid, "tolerance": report.tolerance, "checks": checks})
                );
            } else {
                print!("{report}");
            }
            Ok(if report.all_passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
