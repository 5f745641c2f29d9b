use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pauli_ramsey::ramsey::{self, SearchMode};
use pauli_ramsey::selftest::{self, SelftestConfig};
use pauli_ramsey::{maximal_stabilizer_channel, Error, Oracle, PauliChannel, StabilizerGroup};
use serde_json::{json, Value};

mod minimize;
mod text;

/// Stabilizer cliques and anticliques of Pauli channels.
#[derive(Parser, Debug)]
#[command(name = "pauli-ramsey", version)]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compressed dimension dim(P G P) for one stabilizer code.
    Dim {
        #[arg(long)]
        channel: PathBuf,
        /// Comma-separated generators, e.g. "ZZI,IZZ"; empty for the full space.
        #[arg(long, allow_hyphen_values = true)]
        stabilizer: String,
        /// Also compute the dimension on dense matrices and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Anticlique, clique, or maximal-stabilizer channel.
    Classify {
        #[arg(long)]
        channel: PathBuf,
        #[arg(long)]
        oracle: bool,
    },
    /// Exhaustive search over stabilizer codes.
    Search {
        #[arg(long)]
        channel: PathBuf,
        #[arg(long, default_value = "both")]
        mode: SearchMode,
        /// Code sizes to search, e.g. "1,2"; defaults to 1..=n.
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
    },
    /// Write the uniform channel of a maximal stabilizer group.
    ConstructMaximal {
        #[arg(long)]
        n: usize,
        /// Commuting generators to extend; empty extends from nothing.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        generators: String,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Every symplectic and dense check for one channel and code.
    Verify {
        #[arg(long)]
        channel: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        stabilizer: String,
        /// Optional; the dense checks always run.
        #[arg(long)]
        oracle: bool,
        /// Random code pairs for the private-code check.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Run the acceptance checks.
    Selftest {
        /// Largest qubit count to exercise.
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Sweep all 65,535 two-qubit channels instead of a sample.
        #[arg(long)]
        exhaustive: bool,
    },
}

/// A finished command: its report and whether it found an inconsistency.
pub struct Outcome {
    pub report: Value,
    pub inconsistent: bool,
}

impl Outcome {
    fn ok(report: Value) -> Self {
        Outcome {
            report,
            inconsistent: false,
        }
    }
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
    match run(&cli) {
        Ok(out) => {
            if cli.text {
                print!("{}", text::render(&cli.command_name(), &out.report));
            } else {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.report).expect("json")
                );
            }
            if out.inconsistent {
                eprintln!("error: internal inconsistency; see the reproduction in the report");
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

impl Cli {
    fn command_name(&self) -> String {
        match &self.command {
            Command::Dim { .. } => "dim",
            Command::Classify { .. } => "classify",
            Command::Search { .. } => "search",
            Command::ConstructMaximal { .. } => "construct-maximal",
            Command::Verify { .. } => "verify",
            Command::Selftest { .. } => "selftest",
        }
        .to_string()
    }
}

fn read_channel(path: &Path) -> Result<PauliChannel, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
    PauliChannel::from_json(&text)
}

fn generator_strings(r: &StabilizerGroup) -> Vec<String> {
    r.generators().iter().map(|g| g.to_string()).collect()
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Dim {
            channel,
            stabilizer,
            oracle,
        } => {
            let phi = read_channel(channel)?;
            let r = StabilizerGroup::parse(phi.n(), stabilizer)?;
            dim(&phi, &r, *oracle)
        }
        Command::Classify { channel, oracle } => classify(&read_channel(channel)?, *oracle),
        Command::Search { channel, mode, k } => {
            let phi = read_channel(channel)?;
            let ks: Vec<usize> = if k.is_empty() {
                (1..=phi.n()).collect()
            } else {
                k.clone()
            };
            Ok(Outcome::ok(ramsey::search(&phi, *mode, &ks)?.to_json()))
        }
        Command::ConstructMaximal {
            n,
            generators,
            output,
        } => construct_maximal(*n, generators, output),
        Command::Verify {
            channel,
            stabilizer,
            samples,
            ..
        } => {
            let phi = read_channel(channel)?;
            let r = StabilizerGroup::parse(phi.n(), stabilizer)?;
            verify(&phi, &r, *samples, cli.seed)
        }
        Command::Selftest { n, exhaustive } => {
            if *n == 0 {
                return Err(Error::input("--n must be at least 1"));
            }
            let cfg = SelftestConfig {
                seed: cli.seed,
                exhaustive: *exhaustive,
                max_n: *n,
            };
            let outcomes = selftest::run_all(&cfg);
            let passed = outcomes.iter().all(|c| c.passed);
            Ok(Outcome {
                report: json!({
                    "passed": passed,
                    "seed": cfg.seed,
                    "exhaustive": cfg.exhaustive,
                    "max_n": cfg.max_n,
                    "criteria": outcomes.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
                }),
                inconsistent: !passed,
            })
        }
    }
}

fn dim(phi: &PauliChannel, r: &StabilizerGroup, oracle: bool) -> Result<Outcome, Error> {
    let d = ramsey::compressed_dimension(phi, r)?;
    let mut report = json!({"dim_PGP": d, "code_dim": 1u64 << r.k()});
    if !oracle {
        return Ok(Outcome::ok(report));
    }
    let dense = Oracle::default().compressed_dimension(phi, r)?;
    report["oracle_dim_PGP"] = json!(dense.rank);
    report["singular_values"] = json!(dense.singular_values);
    let inconsistent = dense.rank != d;
    if inconsistent {
        let disagree = |c: &PauliChannel| {
            Oracle::default()
                .compressed_dimension(c, r)
                .map(|o| o.rank != ramsey::compressed_dimension(c, r).unwrap_or(o.rank))
                .unwrap_or(false)
        };
        report["reproduction"] = minimize::reproduction(phi, Some(r), disagree);
    }
    Ok(Outcome {
        report,
        inconsistent,
    })
}

fn classify(psi: &PauliChannel, oracle: bool) -> Result<Outcome, Error> {
    let result = ramsey::classify(psi)?;
    let mut report = result.to_json();
    let symplectic_ok = ramsey::verify_classification(psi, &result)?;
    if !symplectic_ok {
        let still_bad = |c: &PauliChannel| {
            ramsey::classify(c)
                .and_then(|res| ramsey::verify_classification(c, &res))
                .map(|ok| !ok)
                .unwrap_or(false)
        };
        report["reproduction"] = minimize::reproduction(psi, None, still_bad);
        return Ok(Outcome {
            report,
            inconsistent: true,
        });
    }
    if oracle {
        let problem = Oracle::default().audit_classification(psi, &result)?;
        report["oracle"] = json!({"agrees": problem.is_none(), "problem": problem});
        if problem.is_some() {
            let still_bad = |c: &PauliChannel| {
                ramsey::classify(c)
                    .and_then(|res| Oracle::default().audit_classification(c, &res))
                    .map(|p| p.is_some())
                    .unwrap_or(false)
            };
            report["reproduction"] = minimize::reproduction(psi, None, still_bad);
            return Ok(Outcome {
                report,
                inconsistent: true,
            });
        }
    }
    Ok(Outcome::ok(report))
}

fn construct_maximal(n: usize, generators: &str, output: &Path) -> Result<Outcome, Error> {
    if n == 0 {
        return Err(Error::input("--n must be at least 1"));
    }
    let s = StabilizerGroup::parse(n, generators)?;
    let full = StabilizerGroup::validate(n, &s.extend_to_maximal())?;
    let phi = maximal_stabilizer_channel(&full, None)?;
    let body = serde_json::to_string_pretty(&phi.to_json()).expect("json");
    fs::write(output, body + "\n")
        .map_err(|e| Error::input(format!("cannot write {}: {e}", output.display())))?;
    Ok(Outcome::ok(json!({
        "n": n,
        "stabilizer": generator_strings(&full),
        "noise_operators": phi.noise().len(),
        "output": output.display().to_string(),
    })))
}

fn verify(
    phi: &PauliChannel,
    r: &StabilizerGroup,
    samples: usize,
    seed: u64,
) -> Result<Outcome, Error> {
    let oracle = Oracle::default();
    let d = ramsey::compressed_dimension(phi, r)?;
    let dense = oracle.compressed_dimension(phi, r)?;
    let anticlique = ramsey::is_anticlique(phi, r)?;
    let gottesman = ramsey::gottesman_correctable(phi, r)?;
    let kl = oracle.kl_check(phi, r)?;
    let clique = ramsey::is_clique(phi, r)?;
    let private = if clique && r.k() >= 1 {
        Some(oracle.private_witness_check(phi, r, samples, seed)?)
    } else {
        None
    };
    let projector = r.projector()?;
    let by_sum = r.projector_by_sum()?;
    let projector_ok = projector == by_sum
        && projector == projector.adjoint()
        && (&projector * &projector - &projector)
            .iter()
            .all(|c| c.norm() < 1e-12);

    let mut problems = Vec::new();
    if d != dense.rank {
        problems.push(format!("symplectic dim(PGP) {d} != dense {}", dense.rank));
    }
    if !(anticlique == gottesman && gottesman == kl) {
        problems.push(format!(
            "anticlique {anticlique}, Gottesman {gottesman}, Knill-Laflamme {kl} disagree"
        ));
    }
    if private == Some(false) {
        problems.push("clique code failed the sampled private-code check".into());
    }
    if !projector_ok {
        problems.push("projector product and sum forms disagree or are not a projector".into());
    }
    let mut report = json!({
        "stabilizer": generator_strings(r),
        "code_dim": 1u64 << r.k(),
        "dim_PGP": d,
        "oracle_dim_PGP": dense.rank,
        "singular_values": dense.singular_values,
        "anticlique": anticlique,
        "gottesman": gottesman,
        "knill_laflamme": kl,
        "clique": clique,
        "private_check": private.map(|ok| json!({"samples": samples, "seed": seed, "passed": ok})),
        "projector_ok": projector_ok,
        "consistent": problems.is_empty(),
        "problems": problems,
    });
    let inconsistent = !problems.is_empty();
    if inconsistent {
        let still_bad = |c: &PauliChannel| {
            let Ok(a) = ramsey::compressed_dimension(c, r) else {
                return false;
            };
            let Ok(b) = oracle.compressed_dimension(c, r) else {
                return false;
            };
            let anti = ramsey::is_anticlique(c, r).unwrap_or(false);
            let kl = oracle.kl_check(c, r).unwrap_or(anti);
            a != b.rank || anti != kl
        };
        report["reproduction"] = minimize::reproduction(phi, Some(r), still_bad);
    }
    Ok(Outcome {
        report,
        inconsistent,
    })
}
