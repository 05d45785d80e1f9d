//! Command-line front end for the cube-rotation image cipher: encrypt and
//! decrypt PGM images, run the multi-case statistical experiment, and
//! compute metrics for standalone images.
//!
//! Every command is deterministic given the input bytes, the key, the seed,
//! and the flags. Output files are written atomically (temp file in the
//! target directory, then rename), so a failed run never leaves a partial
//! artifact behind.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cubecipher::{
    analyze_image, decrypt, encrypt, pairs_to_csv, parse_pgm, report, run_differential,
    run_experiment, sample_pairs, write_pgm, CipherImage, Image, MetricsReport, Orientation,
    ReportRow, SecretKey,
};

const KEY_ENV: &str = "CUBECIPHER_KEY";

/// Failure classes, in order of their exit codes: usage errors exit 1,
/// file and input-data problems exit 2, cryptographic failures exit 3.
enum Failure {
    Usage(String),
    Io(String),
    Crypto(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Io(_) => 2,
            Failure::Crypto(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Io(m) | Failure::Crypto(m) => m,
        }
    }
}

type CmdResult = Result<(), Failure>;

#[derive(Parser)]
#[command(
    name = "cubecipher",
    version,
    about = "Block-rotation image cipher with an AES diffusion stage"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encrypt a grayscale PGM image into an MCAE cipher file.
    Encrypt(EncryptArgs),
    /// Decrypt an MCAE cipher file back to the original PGM image.
    Decrypt(DecryptArgs),
    /// Run the rotation/AES comparison experiment over several block sizes.
    Experiment(ExperimentArgs),
    /// Compute correlation, entropy, and histogram metrics for one image.
    Analyze(AnalyzeArgs),
}

#[derive(Args)]
struct KeyArg {
    /// Secret key; alternatively set CUBECIPHER_KEY (exactly one source).
    #[arg(long)]
    key: Option<String>,
}

impl KeyArg {
    fn resolve(self) -> Result<SecretKey, Failure> {
        let env = std::env::var(KEY_ENV).ok();
        let text = match (self.key, env) {
            (Some(_), Some(_)) => {
                return Err(Failure::Usage(format!(
                    "key given both via --key and ${KEY_ENV}; use exactly one source"
                )))
            }
            (None, None) => {
                return Err(Failure::Usage(format!(
                    "no key given; pass --key or set ${KEY_ENV}"
                )))
            }
            (Some(flag), None) => flag,
            (None, Some(var)) => var,
        };
        SecretKey::new(text.into_bytes()).map_err(|e| Failure::Usage(e.to_string()))
    }
}

#[derive(Args)]
struct EncryptArgs {
    /// Input image (binary PGM, P5, maxval 255).
    input: PathBuf,
    /// Output cipher file.
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    key: KeyArg,
    /// Edge length of the square pixel blocks moved by rotations.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=16))]
    block_size: u8,
}

#[derive(Args)]
struct DecryptArgs {
    /// Input cipher file (MCAE).
    input: PathBuf,
    /// Output image file (binary PGM).
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    key: KeyArg,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Input image (binary PGM, P5, maxval 255).
    input: PathBuf,
    /// Output directory for reports and per-case images.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    #[command(flatten)]
    key: KeyArg,
    /// Block size for one case; repeat the flag to select several cases.
    #[arg(
        long = "block-size",
        action = clap::ArgAction::Append,
        default_values_t = [2u8, 3, 5, 6],
        value_parser = clap::value_parser!(u8).range(1..=16)
    )]
    block_size: Vec<u8>,
    /// Adjacent-pixel pairs sampled per correlation estimate.
    #[arg(long, default_value_t = 2000)]
    pairs: usize,
    /// Seed for the pair-sampling generator.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Report file format.
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Input image (binary PGM, P5, maxval 255).
    input: PathBuf,
    /// Report destination; prints to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Adjacent-pixel pairs sampled per correlation estimate.
    #[arg(long, default_value_t = 2000)]
    pairs: usize,
    /// Seed for the pair-sampling generator.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Report format.
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    /// Directory to fill with per-orientation pair-sample CSVs.
    #[arg(long)]
    dump_pairs: Option<PathBuf>,
}

#[derive(Copy, Clone, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

impl ReportFormat {
    fn extension(self) -> &'static str {
        match self {
            ReportFormat::Json => "json",
            ReportFormat::Csv => "csv",
        }
    }

    fn render(self, report: &MetricsReport) -> String {
        match self {
            ReportFormat::Json => report.to_json(),
            ReportFormat::Csv => report.to_csv(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Encrypt(args) => cmd_encrypt(args),
        Command::Decrypt(args) => cmd_decrypt(args),
        Command::Experiment(args) => cmd_experiment(args),
        Command::Analyze(args) => cmd_analyze(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}

fn io_failure(path: &Path, err: impl std::fmt::Display) -> Failure {
    Failure::Io(format!("{}: {err}", path.display()))
}

/// Writes one line to stdout. A broken pipe — the consumer (say, `head`)
/// stopped reading — counts as success; other write errors are I/O failures.
fn emit(text: impl std::fmt::Display) -> CmdResult {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}") {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(Failure::Io(format!("stdout: {e}"))),
    }
}

fn read_file(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| io_failure(path, e))
}

fn load_pgm(path: &Path) -> Result<Image, Failure> {
    parse_pgm(&read_file(path)?).map_err(|e| io_failure(path, e))
}

/// Writes via a temp file in the destination directory plus a rename, so
/// interrupted runs cannot leave a truncated file at the final path.
fn write_atomic(path: &Path, bytes: &[u8]) -> CmdResult {
    let dir = match path.parent() {
        Some(parent) if !parent.as_os_str().is_empty() => parent,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| io_failure(path, e))?;
    tmp.write_all(bytes).map_err(|e| io_failure(path, e))?;
    tmp.persist(path).map_err(|e| io_failure(path, e))?;
    Ok(())
}

fn ensure_dir(path: &Path) -> CmdResult {
    fs::create_dir_all(path).map_err(|e| io_failure(path, e))
}

fn check_pairs(pairs: usize) -> CmdResult {
    if pairs < 2 {
        return Err(Failure::Usage(format!(
            "--pairs must be at least 2, got {pairs}"
        )));
    }
    Ok(())
}

fn cmd_encrypt(args: EncryptArgs) -> CmdResult {
    let key = args.key.resolve()?;
    let img = load_pgm(&args.input)?;
    let block_size = args.block_size as usize;
    let cipher = encrypt(&img, &key, block_size).map_err(|e| Failure::Crypto(e.to_string()));
    let cipher = cipher?;
    if (cipher.conformed_width, cipher.conformed_height) != (cipher.width, cipher.height) {
        eprintln!(
            "note: {}x{} input padded to {}x{} to fit the six-face block tiling",
            cipher.width, cipher.height, cipher.conformed_width, cipher.conformed_height
        );
    }
    write_atomic(&args.out, &cipher.to_bytes())?;
    emit(format!(
        "wrote {}: {}x{} image, conformed {}x{}, block size {}, {}x{} blocks",
        args.out.display(),
        cipher.width,
        cipher.height,
        cipher.conformed_width,
        cipher.conformed_height,
        cipher.block_size,
        cipher.width as usize / block_size,
        cipher.height as usize / block_size,
    ))
}

fn cmd_decrypt(args: DecryptArgs) -> CmdResult {
    let key = args.key.resolve()?;
    let bytes = read_file(&args.input)?;
    let cipher = CipherImage::from_bytes(&bytes).map_err(|e| Failure::Crypto(e.to_string()))?;
    let img = decrypt(&cipher, &key).map_err(|e| Failure::Crypto(e.to_string()))?;
    write_atomic(&args.out, &write_pgm(&img))?;
    emit(format!(
        "wrote {}: {}x{} image",
        args.out.display(),
        img.width(),
        img.height()
    ))
}

fn cmd_experiment(args: ExperimentArgs) -> CmdResult {
    check_pairs(args.pairs)?;
    let key = args.key.resolve()?;
    let img = load_pgm(&args.input)?;
    ensure_dir(&args.out)?;
    for &block_size in &args.block_size {
        let b = block_size as usize;
        let bundle = run_experiment(&img, &key, b).map_err(|e| Failure::Crypto(e.to_string()))?;
        let mut case_report =
            report(&bundle, args.pairs, args.seed).map_err(|e| Failure::Io(e.to_string()))?;
        case_report.differential = Some(
            run_differential(&img, &key, b).map_err(|e| Failure::Crypto(e.to_string()))?,
        );

        let report_path = args
            .out
            .join(format!("case_b{b}_report.{}", args.format.extension()));
        write_atomic(&report_path, args.format.render(&case_report).as_bytes())?;
        write_atomic(
            &args.out.join(format!("case_b{b}_rotated.pgm")),
            &write_pgm(&bundle.rotated),
        )?;
        write_atomic(
            &args.out.join(format!("case_b{b}_aes_only.mcae")),
            &bundle.aes_only.to_bytes(),
        )?;
        write_atomic(
            &args.out.join(format!("case_b{b}_integrated.mcae")),
            &bundle.integrated.to_bytes(),
        )?;
        emit(format!(
            "case b={b}: report and images written to {}",
            args.out.display()
        ))?;
    }
    Ok(())
}

fn cmd_analyze(args: AnalyzeArgs) -> CmdResult {
    check_pairs(args.pairs)?;
    let img = load_pgm(&args.input)?;
    let metrics =
        analyze_image(&img, args.pairs, args.seed).map_err(|e| Failure::Io(e.to_string()))?;
    let coefficient = |orientation: Orientation| {
        metrics
            .correlations
            .iter()
            .find(|c| c.orientation == orientation)
            .and_then(|c| c.coefficient)
    };
    let label = args
        .input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "image".to_string());
    let image_report = MetricsReport {
        case: None,
        seed: args.seed,
        n_pairs: args.pairs,
        rows: vec![ReportRow {
            image: label,
            horizontal: coefficient(Orientation::Horizontal),
            vertical: coefficient(Orientation::Vertical),
            diagonal: coefficient(Orientation::Diagonal),
            anti_diagonal: coefficient(Orientation::AntiDiagonal),
            entropy: metrics.entropy.bits,
            histogram: metrics.histogram.clone(),
        }],
        differential: None,
    };
    let body = args.format.render(&image_report);
    match &args.out {
        Some(path) => write_atomic(path, body.as_bytes())?,
        None => emit(body)?,
    }
    if let Some(dir) = &args.dump_pairs {
        ensure_dir(dir)?;
        for orientation in Orientation::ALL {
            let pairs = sample_pairs(&img, orientation, args.pairs, args.seed)
                .map_err(|e| Failure::Io(e.to_string()))?;
            write_atomic(
                &dir.join(format!("pairs_{}.csv", orientation.label())),
                pairs_to_csv(&pairs).as_bytes(),
            )?;
        }
    }
    Ok(())
}
