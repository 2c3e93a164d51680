//! Command-line surface: membership checks, certification, blow-up
//! decomposition, bounded-order searches, the frontier search, and the
//! built-in verification suite.

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use hollow_spectra::blowup::decompose_blowup;
use hollow_spectra::exactnum::{ExactNumError, SpectralThreshold};
use hollow_spectra::matrixcore::HollowSymMatrix;
use hollow_spectra::search::{
    certify_graph, certify_matrix, frontier_blowups, search_minimal_forbidden_graphs,
    verify_paper_suite, Certificate, CertificateEvidence, CertificateSubject,
    DEFAULT_FRONTIER_CAP,
};
use hollow_spectra::signedgraph::SignedGraph;

const EXIT_MATH_FAILURE: u8 = 1;
const EXIT_INPUT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(
    name = "hollow-spectra",
    about = "Exact spectral-threshold membership, certification, and search \
             for symmetric hollow integer matrices and signed graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable text.
    Text,
    /// One tab-separated record per result.
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a matrix (.hsm) or signed graph (.sg) against a threshold.
    Check {
        /// Threshold: INT, INT/INT, sqrt:INT, star, or prime.
        #[arg(long)]
        lambda: String,
        /// Input file, format chosen by extension (.hsm or .sg).
        input: PathBuf,
    },
    /// Certify whether the input is a minimal forbidden object.
    Certify {
        #[arg(long)]
        lambda: String,
        input: PathBuf,
        /// Independently re-verify the certificate before printing.
        #[arg(long)]
        recheck: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decompose a matrix (.hsm) into a switched signed-graph blow-up.
    Decompose { input: PathBuf },
    /// Exhaustively list minimal forbidden signed graphs up to an order.
    SearchGraphs {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Search blow-up multiplicities of a signed graph (.sg) for minimal
    /// bad vectors.
    Frontier {
        #[arg(long)]
        lambda: String,
        input: PathBuf,
        /// Per-coordinate multiplicity cap.
        #[arg(long, default_value_t = DEFAULT_FRONTIER_CAP)]
        cap: u32,
    },
    /// Run the built-in verification suite.
    VerifyPaper {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INPUT_ERROR)
        }
    }
}

/// `Err` is an input error (exit 2); `Ok` carries the exit status.
fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Check { lambda, input } => {
            let threshold = parse_threshold(&lambda)?;
            let verdict = load_subject(&input)?.matrix().classify_membership(&threshold);
            println!("{}", verdict.status);
            if let Some(witness) = &verdict.witness {
                let named: Vec<String> = witness.iter().map(|i| (i + 1).to_string()).collect();
                println!("witness indices: {{{}}}", named.join(","));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Certify {
            lambda,
            input,
            recheck,
            format,
        } => {
            let threshold = parse_threshold(&lambda)?;
            let certificate = match load_subject(&input)? {
                CertificateSubject::Matrix(m) => certify_matrix(&m, &threshold),
                CertificateSubject::Graph(g) => certify_graph(&g, &threshold),
            };
            if recheck && !certificate.recheck() {
                eprintln!("certificate failed independent recheck");
                return Ok(ExitCode::from(EXIT_MATH_FAILURE));
            }
            match format {
                Format::Text => print!("{certificate}"),
                Format::Records => println!("{}", certificate_record(&certificate)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { input } => {
            let matrix = load_matrix(&input)?;
            match decompose_blowup(&matrix) {
                Ok(dec) => {
                    println!("graph:");
                    print!("{}", dec.graph.to_sg());
                    println!("multiplicities: {}", dec.mult);
                    println!("switching: {}", dec.switching);
                    let placement: Vec<String> = dec
                        .index_map
                        .iter()
                        .map(|(v, c)| format!("{}.{}", v + 1, c + 1))
                        .collect();
                    println!("index map: {}", placement.join(" "));
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("{e}");
                    Ok(ExitCode::from(EXIT_MATH_FAILURE))
                }
            }
        }
        Command::SearchGraphs {
            lambda,
            max_order,
            format,
        } => {
            let threshold = parse_threshold(&lambda)?;
            let certificates = search_minimal_forbidden_graphs(&threshold, max_order)
                .map_err(|e| e.to_string())?;
            match format {
                Format::Text => {
                    println!(
                        "{} minimal forbidden graph(s) up to order {} at {}",
                        certificates.len(),
                        max_order,
                        threshold.display()
                    );
                    for certificate in &certificates {
                        println!();
                        print!("{certificate}");
                    }
                }
                Format::Records => {
                    for certificate in &certificates {
                        println!("{}", certificate_record(certificate));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Frontier { lambda, input, cap } => {
            if cap < 1 {
                return Err("cap must be positive".into());
            }
            let threshold = parse_threshold(&lambda)?;
            let graph = load_graph(&input)?;
            print!("{}", frontier_blowups(&graph, &threshold, cap));
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { seed, format } => {
            let sections = verify_paper_suite(seed);
            let all_passed = sections.iter().all(|s| s.passed());
            match format {
                Format::Text => {
                    for section in &sections {
                        print!("{section}");
                    }
                    println!(
                        "overall: {}",
                        if all_passed { "pass" } else { "FAIL" }
                    );
                }
                Format::Records => {
                    for section in &sections {
                        for line in &section.lines {
                            println!(
                                "section\t{}\t{}\t{}\t{}",
                                section.name,
                                line.label,
                                if line.passed { "pass" } else { "fail" },
                                line.detail
                            );
                        }
                    }
                }
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_MATH_FAILURE)
            })
        }
    }
}

fn parse_threshold(expr: &str) -> Result<SpectralThreshold, String> {
    let bad = |e: ExactNumError| format!("invalid threshold {expr:?}: {e}");
    if expr == "star" {
        return Ok(SpectralThreshold::finiteness_threshold());
    }
    if expr == "prime" {
        return Ok(SpectralThreshold::radius_threshold());
    }
    if let Some(radicand) = expr.strip_prefix("sqrt:") {
        let n: u64 = radicand
            .parse()
            .map_err(|_| format!("invalid threshold {expr:?}: sqrt takes an integer"))?;
        return match SpectralThreshold::sqrt_of(n) {
            Ok(t) => Ok(t),
            Err(ExactNumError::PerfectSquare { sqrt, .. }) => {
                SpectralThreshold::from_rational(BigRational::from_integer(sqrt))
                    .map_err(bad)
            }
            Err(e) => Err(bad(e)),
        };
    }
    let rational = if let Some((num, den)) = expr.split_once('/') {
        let num: BigInt = num
            .parse()
            .map_err(|_| format!("invalid threshold {expr:?}"))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| format!("invalid threshold {expr:?}"))?;
        if den == BigInt::from(0) {
            return Err(format!("invalid threshold {expr:?}: zero denominator"));
        }
        BigRational::new(num, den)
    } else {
        let n: BigInt = expr
            .parse()
            .map_err(|_| format!("invalid threshold {expr:?}"))?;
        BigRational::from_integer(n)
    };
    SpectralThreshold::from_rational(rational).map_err(bad)
}

fn load_subject(path: &Path) -> Result<CertificateSubject, String> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("hsm") => Ok(CertificateSubject::Matrix(load_matrix(path)?)),
        Some("sg") => Ok(CertificateSubject::Graph(load_graph(path)?)),
        _ => Err(format!(
            "{}: unknown input extension (expected .hsm or .sg)",
            path.display()
        )),
    }
}

fn load_matrix(path: &Path) -> Result<HollowSymMatrix, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {}", path.display(), e))?;
    HollowSymMatrix::parse_hsm(&text).map_err(|e| format!("{}: {}", path.display(), e))
}

fn load_graph(path: &Path) -> Result<SignedGraph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {}", path.display(), e))?;
    SignedGraph::parse_sg(&text).map_err(|e| format!("{}: {}", path.display(), e))
}

/// One tab-separated line: subject, threshold (minimal polynomial plus
/// isolating interval), verdict, evidence.
fn certificate_record(certificate: &Certificate) -> String {
    let subject = match &certificate.subject {
        CertificateSubject::Matrix(m) => format!("matrix:{}", m.to_hsm().replace('\n', ";")),
        CertificateSubject::Graph(g) => format!("graph:{}", g.to_sg().replace('\n', ";")),
    };
    let evidence = match &certificate.evidence {
        CertificateEvidence::Minimal { codim1 } => {
            let statuses: Vec<String> = codim1.iter().map(|s| s.to_string()).collect();
            format!("deletions={}", statuses.join(","))
        }
        CertificateEvidence::Membership { status } => format!("status={status}"),
        CertificateEvidence::SmallerForbidden { subset } => {
            let named: Vec<String> = subset.iter().map(|i| (i + 1).to_string()).collect();
            format!("subset={}", named.join(","))
        }
    };
    format!(
        "certificate\t{}\t{}\t{}\t{}\t{}",
        subject,
        certificate.threshold.minpoly(),
        certificate.threshold.isolation(),
        certificate.verdict,
        evidence
    )
}
