use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grothendieck::pieri::{enumerate_e_tableaux, enumerate_h_tableaux, pieri_e, pieri_h};
use grothendieck::verify::{self, Oracle, PieriKind, Report, SweepConfig};
use grothendieck::{grothendieck, grothendieck_tilde, mn_expand, Basis, Error, Expansion, Partition};

#[derive(Parser)]
#[command(name = "grothendieck", version, about = "Grothendieck polynomials and their power-sum expansions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand G_λ · p_k (or G̃_λ · p_k) in the chosen basis.
    Expand {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = BasisArg::G)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print G_λ(x1..xn), or G̃_λ with --tilde.
    Gpoly {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        tilde: bool,
    },
    /// Expand G̃_λ · e_k or G̃_λ · h_k.
    Pieri {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the binary tableaux of the e_k or h_k rule.
    Tableaux {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Check the identities for one (λ, k, n) against the bi-alternant polynomials.
    Verify {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Check::All)]
        check: Check,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Run every check over a bounded grid.
    Sweep {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        max_part: usize,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        max_k: usize,
        /// Worker threads (0: one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
}

#[derive(Args)]
struct ShapeArgs {
    /// Partition as comma-separated parts; "" is the empty partition.
    #[arg(long, default_value = "", value_parser = parse_partition)]
    lambda: Partition,
    /// Number of variables.
    #[arg(long)]
    n: usize,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    G,
    Gtilde,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::G => Basis::G,
            BasisArg::Gtilde => Basis::GTilde,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    E,
    H,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    All,
    Mn,
    MnTilde,
    PieriE,
    PieriH,
    Classical,
}

/// Usage and validation problems exit with 2, failed identities with 1.
enum Failure {
    Usage(String),
    Unverified,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn check_shape(shape: &ShapeArgs) -> Result<(), Failure> {
    if shape.n == 0 {
        return Err(Failure::Usage("--n must be at least 1".to_string()));
    }
    shape.lambda.check_fits(shape.n)?;
    Ok(())
}

fn check_k(k: usize) -> Result<(), Failure> {
    if k == 0 {
        return Err(Failure::Usage("--k must be at least 1".to_string()));
    }
    Ok(())
}

fn render(exp: &Expansion, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Json => exp.to_json()?,
        Format::Latex => exp.to_latex(),
        Format::Text => exp.to_text(),
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Expand { shape, k, basis, format } => {
            check_shape(&shape)?;
            check_k(k)?;
            let exp = mn_expand(&shape.lambda, k, shape.n, basis.into())?;
            println!("{}", render(&exp, format)?);
        }
        Command::Gpoly { shape, tilde } => {
            check_shape(&shape)?;
            let poly = if tilde {
                grothendieck_tilde(&shape.lambda, shape.n)?
            } else {
                grothendieck(&shape.lambda, shape.n)?
            };
            println!("{poly}");
        }
        Command::Pieri { shape, k, kind, format } => {
            check_shape(&shape)?;
            let exp = match kind {
                Kind::E => pieri_e(&shape.lambda, k, shape.n)?,
                Kind::H => pieri_h(&shape.lambda, k, shape.n)?,
            };
            println!("{}", render(&exp, format)?);
        }
        Command::Tableaux { shape, k, kind } => {
            check_shape(&shape)?;
            let tableaux = match kind {
                Kind::E => enumerate_e_tableaux(&shape.lambda, k, shape.n)?,
                Kind::H => enumerate_h_tableaux(&shape.lambda, k, shape.n)?,
            };
            for t in &tableaux {
                let sign = if t.sign() > 0 { "+" } else { "-" };
                println!("mu={} sign={sign}", t.shape().outer());
                println!("{t}");
                println!();
            }
            println!("{} tableaux", tableaux.len());
        }
        Command::Verify { shape, k, check, format } => {
            check_shape(&shape)?;
            check_k(k)?;
            let reports = verify_one(&shape.lambda, k, shape.n, check)?;
            let ok = reports.iter().all(|r| r.ok);
            match format {
                ReportFormat::Json => {
                    let values = reports.iter().map(Report::to_json_value).collect::<Result<Vec<_>, _>>()?;
                    println!("{}", serde_json::json!({ "ok": ok, "reports": values }));
                }
                ReportFormat::Text => {
                    for r in &reports {
                        let status = if r.ok { "ok" } else { "FAILED" };
                        println!("{status} {}: {}", r.check, r.expansion.to_text());
                        if !r.ok {
                            println!("  lhs: {}", r.lhs);
                            println!("  rhs: {}", r.rhs);
                            if let Some(d) = &r.detail {
                                println!("  {d}");
                            }
                        }
                    }
                }
            }
            if !ok {
                return Err(Failure::Unverified);
            }
        }
        Command::Sweep { max_n, max_part, max_len, max_k, jobs, format } => {
            let summary = verify::sweep(SweepConfig { max_n, max_part, max_len, max_k, jobs })?;
            match format {
                ReportFormat::Json => println!("{}", summary.to_json()),
                ReportFormat::Text => {
                    println!("cases: {}", summary.cases);
                    println!("failures: {}", summary.failures.len());
                    if let Some(f) = summary.minimal_counterexample() {
                        let lambda = Partition::new(f.lambda.clone())?;
                        println!("minimal counterexample: {} n={} lambda={lambda} k={}", f.check, f.n, f.k);
                        println!("  {}", f.detail);
                    }
                }
            }
            if !summary.ok() {
                return Err(Failure::Unverified);
            }
        }
    }
    Ok(())
}

fn verify_one(lambda: &Partition, k: usize, n: usize, check: Check) -> Result<Vec<Report>, Failure> {
    let oracle = Oracle::new();
    let wanted = |c: Check| check == Check::All || check == c;
    let mut reports = Vec::new();
    if wanted(Check::Mn) {
        reports.push(oracle.check_mn(lambda, k, n, Basis::G)?);
    }
    if wanted(Check::MnTilde) {
        reports.push(oracle.check_mn(lambda, k, n, Basis::GTilde)?);
    }
    if wanted(Check::PieriE) {
        reports.push(oracle.check_pieri(lambda, k, n, PieriKind::E)?);
    }
    if wanted(Check::PieriH) {
        reports.push(oracle.check_pieri(lambda, k, n, PieriKind::H)?);
    }
    if wanted(Check::Classical) {
        reports.push(verify::verify_classical(lambda, k, n)?);
    }
    Ok(reports)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Unverified) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
