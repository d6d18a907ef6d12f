//! `stsp`: evaluate symplectic Steinberg words, run the verification
//! suites, and decompose unipotent elements, over `ℤ` or `ℤ/m`.
//!
//! Exit codes: 0 all checks passed, 1 at least one identity failed,
//! 2 configuration or parse error.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use stsp::generators::verify_identity_catalog;
use stsp::parse;
use stsp::relative::{recognize_unipotent_matrix, verify_kl_relations};
use stsp::ring::validate_form_ideal;
use stsp::sample::VerifyConfig;
use stsp::steinberg::verify_steinberg_relations;
use stsp::vdk::{
    vdk_unipotent_decompose, verify_kl_for_vdk, verify_roundtrips, verify_t_relations,
};
use stsp::{Error, FormIdeal, Idx, MatrixRecord, Report, RingSpec, SpMatrix};

#[derive(Parser)]
#[command(
    name = "stsp",
    version,
    about = "Exact symplectic Steinberg group toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Dialect {
    Abs,
    Rel,
    Vdk,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Steinberg,
    Kl,
    Catalog,
    T,
    KlVdk,
    Roundtrip,
    FormIdeal,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DecomposeKind {
    Unipotent,
    Vdk,
}

#[derive(Args)]
struct RingArgs {
    /// Coefficient ring: `z` or `zmod:<m>`.
    #[arg(long, default_value = "z")]
    ring: String,
    /// Hyperbolic rank l (at least 3).
    #[arg(long, default_value_t = 3)]
    l: usize,
    /// Ideal generators, comma-separated; defaults to the full ring.
    #[arg(long, default_value = "1")]
    ideal: String,
    /// Form parameter: `max`, `min`, or explicit generators like `4,8`.
    #[arg(long, default_value = "max")]
    gamma: String,
}

impl RingArgs {
    fn build(&self) -> Result<(RingSpec, usize, FormIdeal), Error> {
        let ring = RingSpec::parse(&self.ring)?;
        if self.l < 3 {
            return Err(Error::RankTooSmall(self.l));
        }
        let gens = FormIdeal::parse_ideal(ring, &self.ideal)?;
        let gamma = FormIdeal::parse_gamma(ring, &self.gamma)?;
        let form = FormIdeal::new(ring, gens, gamma)?;
        Ok((ring, self.l, form))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a word to its exact matrix image.
    Eval {
        /// The word, in the dialect's syntax.
        word: String,
        #[arg(long, value_enum, default_value_t = Dialect::Abs)]
        dialect: Dialect,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Run a verification suite and emit line-delimited records.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        ring: RingArgs,
        /// Random draws per relation family or catalog entry.
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Magnitude bound for integer draws.
        #[arg(long, default_value_t = 8)]
        bound: i128,
        /// Restrict the catalog to these entry ids (comma-separated).
        #[arg(long)]
        lemma: Option<String>,
        /// Write the report here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Recognize unipotent elements and list their normal-form coefficients.
    Decompose {
        #[arg(value_enum)]
        kind: DecomposeKind,
        /// Matrix serialization (JSON) or van der Kallen generator text;
        /// read from --input-file when omitted.
        input: Option<String>,
        /// Pivot index for unipotent recognition.
        #[arg(long)]
        pivot: Option<i32>,
        #[arg(long)]
        input_file: Option<PathBuf>,
        #[command(flatten)]
        ring: RingArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Eval {
            word,
            dialect,
            ring,
        } => cmd_eval(&word, dialect, &ring),
        Command::Verify {
            suite,
            ring,
            trials,
            seed,
            bound,
            lemma,
            output,
        } => cmd_verify(suite, &ring, trials, seed, bound, lemma, output),
        Command::Decompose {
            kind,
            input,
            pivot,
            input_file,
            ring,
        } => cmd_decompose(kind, input, pivot, input_file, &ring),
    }
}

fn cmd_eval(word: &str, dialect: Dialect, ring_args: &RingArgs) -> Result<ExitCode, Error> {
    let (ring, rank, form) = ring_args.build()?;
    let matrix = match dialect {
        Dialect::Abs => parse::parse_abs_word(rank, ring, word)?.eval(),
        Dialect::Rel => parse::parse_rel_word(rank, ring, &form, word)?.eval(),
        Dialect::Vdk => parse::parse_vdk_word(rank, ring, &form, word)?.eval(),
    };
    let record = matrix.to_record();
    println!("{}", serde_json::to_string(&record).expect("serializable"));
    println!("gram-check: {}", stsp::gram_check(&matrix));
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    suite: Suite,
    ring_args: &RingArgs,
    trials: u64,
    seed: u64,
    bound: i128,
    lemma: Option<String>,
    output: Option<PathBuf>,
) -> Result<ExitCode, Error> {
    if trials < 1 {
        return Err(Error::Config("trials must be at least 1".to_string()));
    }
    let (ring, rank, form) = ring_args.build()?;
    let filter = lemma.map(|text| {
        text.split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect::<Vec<_>>()
    });
    let cfg = VerifyConfig::new(ring, rank, form, trials, seed)
        .with_bound(bound)
        .with_filter(filter);
    let report = match suite {
        Suite::Steinberg => verify_steinberg_relations(&cfg),
        Suite::Kl => verify_kl_relations(&cfg),
        Suite::Catalog => verify_identity_catalog(&cfg),
        Suite::T => verify_t_relations(&cfg)?,
        Suite::KlVdk => verify_kl_for_vdk(&cfg)?,
        Suite::Roundtrip => verify_roundtrips(&cfg)?,
        Suite::FormIdeal => {
            let mut report = Report::new();
            for (case, violation) in validate_form_ideal(&cfg.form, trials, seed)
                .into_iter()
                .enumerate()
            {
                report.push(
                    "form-ideal",
                    &format!("axiom-{}", violation.axiom),
                    case as u64,
                    violation.witness,
                    false,
                    None,
                );
            }
            report
        }
    };
    let text = report.to_jsonl();
    match output {
        Some(path) => {
            let mut f = std::fs::File::create(&path)
                .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))?;
            f.write_all(text.as_bytes())
                .map_err(|e| Error::Config(format!("write failed: {e}")))?;
        }
        None => print!("{text}"),
    }
    let failed = report.failures().len();
    eprintln!(
        "suite complete: {} rows, {} failures",
        report.rows().len(),
        failed
    );
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_decompose(
    kind: DecomposeKind,
    input: Option<String>,
    pivot: Option<i32>,
    input_file: Option<PathBuf>,
    ring_args: &RingArgs,
) -> Result<ExitCode, Error> {
    let (ring, rank, form) = ring_args.build()?;
    let text = match (input, input_file) {
        (Some(t), None) => t,
        (None, Some(path)) => std::fs::read_to_string(&path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?,
        _ => {
            return Err(Error::Config(
                "provide the input inline or via --input-file, not both".to_string(),
            ))
        }
    };
    match kind {
        DecomposeKind::Unipotent => {
            let pivot = pivot
                .ok_or_else(|| Error::Config("unipotent recognition needs --pivot".to_string()))?;
            let pivot = Idx::new(pivot, rank)?;
            let record: MatrixRecord = serde_json::from_str(text.trim())
                .map_err(|e| Error::Config(format!("bad matrix JSON: {e}")))?;
            let matrix = SpMatrix::from_record(&record)?;
            if matrix.ring() != ring || matrix.rank() != rank {
                return Err(Error::Config(
                    "matrix ring or rank does not match the flags".to_string(),
                ));
            }
            let coeffs = recognize_unipotent_matrix(pivot, &matrix, &form)?;
            println!("{coeffs}");
            let rebuilt = coeffs.rebuild(rank, &form)?.eval();
            println!("rebuild-equal: {}", rebuilt == matrix);
            Ok(ExitCode::SUCCESS)
        }
        DecomposeKind::Vdk => {
            let word = parse::parse_vdk_word(rank, ring, &form, text.trim())?;
            let [gen] = word.gens() else {
                return Err(Error::Config(
                    "vdk decomposition takes exactly one generator".to_string(),
                ));
            };
            let factors = vdk_unipotent_decompose(gen, &form)?;
            for f in factors.gens() {
                println!("{f}");
            }
            println!("rebuild-equal: {}", factors.eval() == gen.matrix());
            Ok(ExitCode::SUCCESS)
        }
    }
}
