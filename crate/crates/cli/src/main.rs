use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use pentaparity::factor_oracle::{count_irreducible_factors, is_irreducible};
use pentaparity::swan_formulas::{classify_case, disc_n2_mod8, theorem_parity};
use pentaparity::zlift::swan_parity;
use pentaparity::{type1_pentanomial, Error, Gf2Poly, Parity, PentanomialParams};
use pentaparity_cli::{
    as_type1_pentanomial, parse_m_range, run_sweep, write_csv, write_jsonl, Engine, ReportFormat,
    SweepRecord, DEFAULT_RANGE,
};

const EXIT_DISAGREEMENT: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "pentaparity",
    version,
    about = "Factor-count parity of binary Type I pentanomials x^m + x^(n+1) + x^n + x + 1"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parity verdicts for one (m, n) pair
    Parity {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Engines to run (default: all)
        #[arg(long, value_delimiter = ',', value_enum)]
        methods: Vec<Engine>,
    },
    /// Run the engines over every valid (m, n) in a degree range and compare
    Verify {
        /// Inclusive degree range A..B
        #[arg(long = "m-range", visible_alias = "m", value_name = "A..B")]
        m_range: Option<String>,
        #[arg(long, value_delimiter = ',', value_enum)]
        methods: Vec<Engine>,
        /// Worker threads (default: available parallelism)
        #[arg(long)]
        jobs: Option<usize>,
        /// Report file (default: stdout)
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: ReportFormat,
    },
    /// List n whose pentanomial has an odd factor count (necessary for irreducibility)
    Search {
        #[arg(long)]
        m: usize,
        /// Keep only irreducible pentanomials
        #[arg(long)]
        require_irreducible: bool,
    },
    /// Factor count, parity and discriminant residue of an arbitrary binary polynomial
    Factor {
        /// e.g. "x^11+x^5+x^4+x+1", "11,5,4,1,0", or hex with --input-format hex
        poly: String,
        #[arg(long, value_enum, default_value = "auto")]
        input_format: InputFormat,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InputFormat {
    /// exponent list if the input has a comma, human form otherwise
    Auto,
    Human,
    Exponents,
    /// coefficient bitset, lowest nibble first
    Hex,
}

fn engines_or_all(methods: Vec<Engine>) -> Vec<Engine> {
    if methods.is_empty() {
        Engine::ALL.to_vec()
    } else {
        methods
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Parity { m, n, methods } => cmd_parity(m, n, engines_or_all(methods)),
        Command::Verify {
            m_range,
            methods,
            jobs,
            output,
            format,
        } => cmd_verify(m_range, engines_or_all(methods), jobs, output, format),
        Command::Search {
            m,
            require_irreducible,
        } => cmd_search(m, require_irreducible),
        Command::Factor { poly, input_format } => cmd_factor(&poly, input_format),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn describe(p: Option<Parity>) -> &'static str {
    p.map_or("-", Parity::as_str)
}

fn cmd_parity(m: usize, n: usize, engines: Vec<Engine>) -> anyhow::Result<ExitCode> {
    let params = PentanomialParams::new(m, n)?;
    let f = type1_pentanomial(params);
    let record = SweepRecord::evaluate(params, &engines);
    let mut out = io::stdout().lock();
    writeln!(out, "pentanomial: {f}")?;
    if n == 2 {
        writeln!(
            out,
            "case: n = 2 (closed form D = {} mod 8)",
            disc_n2_mod8(m)?
        )?;
    } else {
        let tag = classify_case(params)?;
        let boundary = if m % 2 == 1 {
            "2m mod n"
        } else {
            "(2m+4) mod n"
        };
        writeln!(
            out,
            "case: {} (m mod 8 = {}, n mod 4 = {}, {boundary} = {}{})",
            tag.case.label(),
            tag.m_residue,
            tag.n_residue,
            tag.boundary,
            if tag.special_n6 { ", n = 6" } else { "" }
        )?;
    }
    for engine in &engines {
        let line = match engine {
            Engine::Theorem => format!("theorem: {}", describe(record.theorem_parity)),
            Engine::Resultant => format!(
                "discriminant-resultant: {}",
                describe(record.resultant_parity)
            ),
            Engine::Newton => format!("newton-sums: {}", describe(record.newton_parity)),
            Engine::Oracle => {
                let count = count_irreducible_factors(&f)?;
                format!(
                    "oracle: {} ({} irreducible factors)",
                    describe(record.oracle_parity),
                    count.total
                )
            }
        };
        writeln!(out, "{line}")?;
    }
    if let Some(r) = record.discriminant_mod8 {
        writeln!(out, "discriminant: {r} mod 8")?;
    }
    writeln!(out, "agree: {}", if record.agree { "yes" } else { "no" })?;
    Ok(if record.agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_DISAGREEMENT)
    })
}

fn cmd_verify(
    m_range: Option<String>,
    engines: Vec<Engine>,
    jobs: Option<usize>,
    output: Option<PathBuf>,
    format: ReportFormat,
) -> anyhow::Result<ExitCode> {
    let range = match m_range {
        Some(s) => parse_m_range(&s)?,
        None => DEFAULT_RANGE,
    };
    let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let report = run_sweep(range, &engines, jobs)?;
    for r in report.records.iter().filter(|r| !r.agree) {
        eprintln!(
            "disagreement at (m={}, n={}): theorem {}, resultant {}, newton {}, oracle {}",
            r.m,
            r.n,
            describe(r.theorem_parity),
            describe(r.resultant_parity),
            describe(r.newton_parity),
            describe(r.oracle_parity)
        );
    }

    let sink: Box<dyn Write> = match &output {
        Some(path) => Box::new(
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
        ),
        None => Box::new(io::stdout().lock()),
    };
    let mut sink = BufWriter::new(sink);
    match format {
        ReportFormat::Jsonl => write_jsonl(&report, &mut sink)?,
        ReportFormat::Csv => write_csv(&report, &mut sink)?,
    }
    sink.flush()?;
    eprintln!(
        "{} pairs checked, {} disagreements, {:.3}s",
        report.summary.total, report.summary.disagreements, report.summary.elapsed
    );
    Ok(if report.summary.disagreements == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_DISAGREEMENT)
    })
}

fn cmd_search(m: usize, require_irreducible: bool) -> anyhow::Result<ExitCode> {
    if m < 6 {
        return Err(Error::InvalidParams {
            m: m as u64,
            n: 2,
            constraint: "m must be at least 6",
        }
        .into());
    }
    let mut out = io::stdout().lock();
    for params in PentanomialParams::for_degree(m) {
        if theorem_parity(params).parity == Parity::Even {
            continue;
        }
        let f = type1_pentanomial(params);
        if require_irreducible && !is_irreducible(&f)? {
            continue;
        }
        writeln!(out, "{}\t{f}", params.n())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_factor(input: &str, format: InputFormat) -> anyhow::Result<ExitCode> {
    let f = match format {
        InputFormat::Auto => input.parse::<Gf2Poly>(),
        InputFormat::Human => Gf2Poly::parse_human(input),
        InputFormat::Exponents => Gf2Poly::parse_exponent_list(input),
        InputFormat::Hex => Gf2Poly::from_hex(input),
    }?;
    let count = count_irreducible_factors(&f)?;
    let mut out = io::stdout().lock();
    writeln!(out, "polynomial: {f}")?;
    writeln!(out, "degree: {}", f.degree().unwrap())?;
    writeln!(
        out,
        "irreducible factors: {} ({} distinct)",
        count.total, count.distinct
    )?;
    writeln!(out, "parity: {}", count.parity())?;
    match swan_parity(&f) {
        Ok(v) => writeln!(out, "discriminant: {} mod 8", v.discriminant_mod8.unwrap())?,
        Err(Error::NotSquarefree) => {
            writeln!(out, "discriminant: not squarefree, Swan inapplicable")?
        }
        Err(e) => return Err(e.into()),
    }
    if let Some(params) = as_type1_pentanomial(&f) {
        writeln!(
            out,
            "type I pentanomial (m={}, n={}): theorem {}",
            params.m(),
            params.n(),
            theorem_parity(params).parity
        )?;
    }
    Ok(ExitCode::SUCCESS)
}
