//! `linecone`: classify line arrangements and print their multiplier ideals.

mod input;
mod output;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use linecone::{classify, cross_check, default_grid, envelope_report, Classification, Error, Lambda};
use serde::Serialize;

use input::ArrangementFile;
use output::*;

const EXIT_INTERNAL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(name = "linecone", version, about = "Multiplier ideals of line arrangements in 3-space")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Arrangement file (JSON with "points" or "generator").
    file: std::path::PathBuf,
    /// Pretty-print the output document.
    #[arg(long)]
    pretty: bool,
    /// Override the generator seed in the file.
    #[arg(long)]
    seed: Option<u64>,
    /// Add wall-clock timings to the output (breaks byte-for-byte determinism).
    #[arg(long)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Case of the arrangement, geometric generating degrees and generator degrees.
    Classify(Common),
    /// The chain of degree envelopes up to stabilization.
    Envelopes(Common),
    /// The multiplier ideal at one exponent.
    Mi {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: String,
    },
    /// Jumping numbers up to a bound (at most 10).
    Jumps {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "3")]
        lambda_max: String,
    },
    /// Log canonical threshold.
    Lct(Common),
    /// Cross-check the closed forms against the independent oracles.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated exponents; defaults to 1/2,1,3/2,2,5/2.
        #[arg(long)]
        grid: Option<String>,
    },
}

/// A failed run: exit code plus a message for standard error.
#[derive(Debug)]
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::Invalid(_) | Error::LambdaRange(_) | Error::DivisionByZero => EXIT_INPUT,
            Error::Unsupported(_) | Error::NoCaseCOracle => EXIT_UNSUPPORTED,
            _ => EXIT_INTERNAL,
        };
        Failure(code, e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

struct Run {
    input: ArrangementFile,
    points: linecone::PointSet,
    pretty: bool,
    timings: bool,
    start: Instant,
}

impl Run {
    fn load(c: &Common) -> Result<Run, Failure> {
        let start = Instant::now();
        let path = c.file.display();
        let text = std::fs::read_to_string(&c.file).map_err(|e| Failure(EXIT_INPUT, format!("{path}: {e}")))?;
        let input = ArrangementFile::from_json(&text)
            .map_err(|e| Failure(EXIT_INPUT, format!("{path}: {e}")))?
            .with_seed(c.seed);
        let points = input.point_set().map_err(|e| Failure(EXIT_INPUT, format!("{path}: {e}")))?;
        Ok(Run { input, points, pretty: c.pretty, timings: c.timings, start })
    }

    fn emit<R: Serialize>(self, command: &'static str, result: R) {
        let timings = self.timings.then(|| Timings { total_ms: self.start.elapsed().as_millis() });
        let input_digest = self.input.digest();
        let doc = Document { command, input: self.input, input_digest, result, timings };
        let text = if self.pretty { serde_json::to_string_pretty(&doc) } else { serde_json::to_string(&doc) };
        // A closed pipe downstream is not an error worth reporting.
        let _ = writeln!(std::io::stdout().lock(), "{}", text.expect("serializable"));
    }

    fn supported(&self) -> Result<Classification, Failure> {
        let c = classify(&self.points)?;
        match c {
            Classification::Unsupported { reason } => Err(Failure(EXIT_UNSUPPORTED, format!("unsupported arrangement: {reason}"))),
            c => Ok(c),
        }
    }
}

fn parse_lambda(s: &str) -> Result<Lambda, Failure> {
    Lambda::parse(s).map_err(|e| Failure(EXIT_INPUT, format!("bad exponent {s:?}: {e}")))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Classify(c) => {
            let run = Run::load(&c)?;
            let report = envelope_report(&run.points)?;
            let class = classify(&run.points)?;
            let code = if class.is_supported() { 0 } else { EXIT_UNSUPPORTED };
            let mut classification = ClassificationOut::from(&class);
            if let Classification::CaseC { d, .. } = class {
                classification.zd_degree = report
                    .entries
                    .iter()
                    .find(|e| e.degree == d)
                    .and_then(|e| e.report.as_ref())
                    .map(|r| r.degree);
            }
            let result = ClassifyOut {
                classification,
                ggds: report.ggds,
                generator_degrees: report.generator_degrees,
            };
            run.emit("classify", result);
            Ok(code)
        }
        Command::Envelopes(c) => {
            let run = Run::load(&c)?;
            let report = envelope_report(&run.points)?;
            run.emit("envelopes", EnvelopesOut::from(&report));
            Ok(0)
        }
        Command::Mi { common, lambda } => {
            let run = Run::load(&common)?;
            let lambda = parse_lambda(&lambda)?;
            let class = run.supported()?;
            let r = linecone::multiplier_ideal(&class, &run.points, &lambda)?;
            let result = MiOut {
                case: class.name(),
                lambda: r.lambda.to_string(),
                branch: r.branch.as_str(),
                generators: ideal(&r.ideal),
            };
            run.emit("mi", result);
            Ok(0)
        }
        Command::Jumps { common, lambda_max } => {
            let run = Run::load(&common)?;
            let max = parse_lambda(&lambda_max)?;
            let class = run.supported()?;
            let table = linecone::jumping_numbers(&class, &run.points, max.value())?;
            let result = JumpsOut {
                case: class.name(),
                lambda_max: max.to_string(),
                lct: table.lct.as_ref().map(rat),
                jumps: table.jumps.iter().map(|(l, i)| JumpOut { lambda: rat(l), generators: ideal(i) }).collect(),
            };
            run.emit("jumps", result);
            Ok(0)
        }
        Command::Lct(c) => {
            let run = Run::load(&c)?;
            let class = run.supported()?;
            let result = LctOut { case: class.name(), lct: rat(&linecone::lct(&class)?) };
            run.emit("lct", result);
            Ok(0)
        }
        Command::Verify { common, grid } => {
            let run = Run::load(&common)?;
            let grid = match grid {
                None => default_grid(),
                Some(g) => g.split(',').map(|s| parse_lambda(s.trim())).collect::<Result<_, _>>()?,
            };
            let report = cross_check(&run.points, &grid)?;
            let code = if !report.classification.is_supported() {
                EXIT_UNSUPPORTED
            } else if report.all_passed() {
                0
            } else {
                EXIT_VERIFY
            };
            let result = VerifyOut {
                classification: (&report.classification).into(),
                grid: grid.iter().map(|l| l.to_string()).collect(),
                all_passed: report.all_passed(),
                checks: report
                    .checks
                    .into_iter()
                    .map(|c| CheckOut { name: c.name, passed: c.passed, witness: c.witness })
                    .collect(),
            };
            run.emit("verify", result);
            Ok(code)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("linecone: {msg}");
            ExitCode::from(code)
        }
    }
}
