//! Sweep and report machinery behind the `pentaparity` binary.

use std::io::Write;
use std::ops::RangeInclusive;
use std::time::Duration;

use anyhow::{bail, Context};
use pentaparity::factor_oracle::parity_of_factor_count;
use pentaparity::swan_formulas::{newton_parity, theorem_parity};
use pentaparity::zlift::swan_parity;
use pentaparity::{type1_pentanomial, Gf2Poly, Parity, PentanomialParams};
use rayon::prelude::*;
use serde::Serialize;

/// Largest degree a sweep accepts; the factor oracle is cubic in `m`.
pub const MAX_SWEEP_DEGREE: usize = 2000;

pub const DEFAULT_RANGE: RangeInclusive<usize> = 6..=301;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Engine {
    /// closed-form congruence conditions
    Theorem,
    /// exact subresultant discriminant of the lift of f
    Resultant,
    /// power-sum discriminant of the auxiliary lift
    Newton,
    /// Berlekamp factor count
    Oracle,
}

impl Engine {
    pub const ALL: [Engine; 4] = [
        Engine::Theorem,
        Engine::Resultant,
        Engine::Newton,
        Engine::Oracle,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    Jsonl,
    Csv,
}

/// Parses an inclusive degree range `A..B` (or a single degree `A`).
/// `B < A` yields an empty range.
pub fn parse_m_range(s: &str) -> anyhow::Result<RangeInclusive<usize>> {
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .with_context(|| format!("invalid degree {t:?} in range {s:?}"))
    };
    match s.split_once("..") {
        Some((a, b)) => Ok(parse(a)?..=parse(b.trim_start_matches('='))?),
        None => {
            let m = parse(s)?;
            Ok(m..=m)
        }
    }
}

fn serialize_parity<S: serde::Serializer>(p: &Option<Parity>, s: S) -> Result<S::Ok, S::Error> {
    match p {
        Some(p) => s.serialize_str(p.as_str()),
        None => s.serialize_none(),
    }
}

/// One `(m, n)` line of a sweep report. Engines that were not run are null.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRecord {
    pub m: usize,
    pub n: usize,
    #[serde(serialize_with = "serialize_parity")]
    pub theorem_parity: Option<Parity>,
    #[serde(serialize_with = "serialize_parity")]
    pub resultant_parity: Option<Parity>,
    #[serde(serialize_with = "serialize_parity")]
    pub newton_parity: Option<Parity>,
    #[serde(serialize_with = "serialize_parity")]
    pub oracle_parity: Option<Parity>,
    pub discriminant_mod8: Option<u8>,
    pub agree: bool,
}

impl SweepRecord {
    pub fn evaluate(params: PentanomialParams, engines: &[Engine]) -> Self {
        let f = type1_pentanomial(params);
        let run = |e: Engine| engines.contains(&e);
        let theorem = run(Engine::Theorem).then(|| theorem_parity(params));
        let resultant = run(Engine::Resultant)
            .then(|| swan_parity(&f).expect("type I pentanomials with even n are squarefree"));
        let newton = run(Engine::Newton).then(|| newton_parity(params));
        let oracle = run(Engine::Oracle).then(|| parity_of_factor_count(&f).expect("degree >= 6"));

        let parities: Vec<Parity> = [theorem, resultant, newton, oracle]
            .iter()
            .flatten()
            .map(|v| v.parity)
            .collect();
        let agree = parities.windows(2).all(|w| w[0] == w[1]);
        Self {
            m: params.m(),
            n: params.n(),
            theorem_parity: theorem.map(|v| v.parity),
            resultant_parity: resultant.map(|v| v.parity),
            newton_parity: newton.map(|v| v.parity),
            oracle_parity: oracle.map(|v| v.parity),
            discriminant_mod8: resultant.or(newton).and_then(|v| v.discriminant_mod8),
            agree,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    pub total: usize,
    pub disagreements: usize,
    /// Wall-clock seconds.
    pub elapsed: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub records: Vec<SweepRecord>,
    pub summary: SweepSummary,
}

/// Every valid even-`n` pair with `m` in `range`, ascending.
pub fn sweep_params(range: RangeInclusive<usize>) -> Vec<PentanomialParams> {
    range.flat_map(PentanomialParams::for_degree).collect()
}

/// Evaluates the selected engines over the range on `jobs` worker threads.
/// Records come back sorted by `(m, n)` regardless of scheduling.
pub fn run_sweep(
    range: RangeInclusive<usize>,
    engines: &[Engine],
    jobs: usize,
) -> anyhow::Result<SweepReport> {
    if *range.end() > MAX_SWEEP_DEGREE && !range.is_empty() {
        bail!(
            "m range {}..{} exceeds the supported bound {MAX_SWEEP_DEGREE}",
            range.start(),
            range.end()
        );
    }
    let start = std::time::Instant::now();
    let params = sweep_params(range);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()?;
    let mut records: Vec<SweepRecord> = pool.install(|| {
        params
            .par_iter()
            .map(|&p| SweepRecord::evaluate(p, engines))
            .collect()
    });
    records.sort_by_key(|r| (r.m, r.n));
    let disagreements = records.iter().filter(|r| !r.agree).count();
    Ok(SweepReport {
        summary: SweepSummary {
            total: records.len(),
            disagreements,
            elapsed: elapsed_secs(start.elapsed()),
        },
        records,
    })
}

fn elapsed_secs(d: Duration) -> f64 {
    (d.as_secs_f64() * 1000.0).round() / 1000.0
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a SweepSummary,
}

/// One JSON object per record, then `{"summary": {...}}`.
pub fn write_jsonl<W: Write>(report: &SweepReport, mut out: W) -> anyhow::Result<()> {
    for r in &report.records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    serde_json::to_writer(
        &mut out,
        &SummaryLine {
            summary: &report.summary,
        },
    )?;
    out.write_all(b"\n")?;
    Ok(())
}

/// Records only, with a header row; the summary is left to the caller.
pub fn write_csv<W: Write>(report: &SweepReport, out: W) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if report.records.is_empty() {
        w.write_record([
            "m",
            "n",
            "theorem_parity",
            "resultant_parity",
            "newton_parity",
            "oracle_parity",
            "discriminant_mod8",
            "agree",
        ])?;
    }
    for r in &report.records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// Recognizes `x^m + x^(n+1) + x^n + x + 1` with a valid even `n`.
pub fn as_type1_pentanomial(f: &Gf2Poly) -> Option<PentanomialParams> {
    let exps = f.exponents();
    let [m, n1, n, 1, 0] = exps[..] else {
        return None;
    };
    if n1 != n + 1 {
        return None;
    }
    PentanomialParams::new(m, n).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_m_range("6..101").unwrap(), 6..=101);
        assert_eq!(parse_m_range("6..=101").unwrap(), 6..=101);
        assert_eq!(parse_m_range("11").unwrap(), 11..=11);
        assert!(parse_m_range("10..5").unwrap().is_empty());
        assert!(parse_m_range("a..5").is_err());
    }

    #[test]
    fn record_for_known_pair() {
        let p = PentanomialParams::new(11, 4).unwrap();
        let r = SweepRecord::evaluate(p, &Engine::ALL);
        assert_eq!(r.theorem_parity, Some(Parity::Even));
        assert_eq!(r.oracle_parity, Some(Parity::Even));
        assert_eq!(r.resultant_parity, Some(Parity::Even));
        assert_eq!(r.newton_parity, Some(Parity::Even));
        assert!(r.agree);
        // even count with odd m: residue 5
        assert_eq!(r.discriminant_mod8, Some(5));
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"m":11,"n":4,"theorem_parity":"even","resultant_parity":"even","newton_parity":"even","oracle_parity":"even","discriminant_mod8":5,"agree":true}"#
        );
    }

    #[test]
    fn partial_engines_leave_nulls() {
        let p = PentanomialParams::new(9, 2).unwrap();
        let r = SweepRecord::evaluate(p, &[Engine::Theorem, Engine::Oracle]);
        assert_eq!(r.resultant_parity, None);
        assert_eq!(r.discriminant_mod8, None);
        assert_eq!(r.theorem_parity, Some(Parity::Odd));
        assert!(r.agree);
    }

    #[test]
    fn empty_sweep() {
        let report = run_sweep(parse_m_range("10..5").unwrap(), &Engine::ALL, 1).unwrap();
        assert!(report.records.is_empty());
        assert_eq!(report.summary.disagreements, 0);
        assert!(run_sweep(6..=5000, &Engine::ALL, 1).is_err());
    }

    #[test]
    fn jobs_do_not_change_records() {
        let engines = [Engine::Theorem, Engine::Newton, Engine::Oracle];
        let a = run_sweep(6..=60, &engines, 1).unwrap();
        let b = run_sweep(6..=60, &engines, 4).unwrap();
        assert_eq!(a.records, b.records);
        assert_eq!(a.summary.disagreements, 0);
    }

    #[test]
    fn recognizes_pentanomials() {
        let f: Gf2Poly = "11,5,4,1,0".parse().unwrap();
        assert_eq!(as_type1_pentanomial(&f), PentanomialParams::new(11, 4).ok());
        let g: Gf2Poly = "x^11+x^6+x^5+x+1".parse().unwrap();
        assert_eq!(as_type1_pentanomial(&g), None, "odd n");
        let h: Gf2Poly = "x^11+x^6+x^4+x+1".parse().unwrap();
        assert_eq!(as_type1_pentanomial(&h), None);
    }
}
