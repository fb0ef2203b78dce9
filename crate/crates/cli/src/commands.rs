use floorq::{
    analytics, average_size_report, divisor_moebius, floor_multiple_semigroup, heuristic_estimate,
    interval, moebius_value, scaling_set, sigma, simulate_random_quotients, Characterizations,
    Columns, CuttingLengthSet, Limits, MoebiusTable, QuotientQuery, ScalingSet,
};
use serde::Serialize;

use crate::args::*;
use crate::render::{csv, join, json};
use crate::CliError;

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Self { text, code: 0 }
    }
}

pub fn run(command: Command, format: Option<Format>, limits: &Limits) -> Result<Output, CliError> {
    let plain_default = format.unwrap_or(Format::Plain);
    match command {
        Command::Check(args) => check(args, plain_default),
        Command::Interval(args) => Ok(interval_cmd(args, plain_default).into()),
        Command::Scaling(args) => Ok(scaling(args, plain_default).into()),
        Command::Semigroup(args) => Ok(semigroup(args, plain_default)?.into()),
        Command::Sigma(args) => Ok(sigma_cmd(args, plain_default).into()),
        Command::Moebius(args) => Ok(moebius(args, plain_default)?.into()),
        Command::Survey(args) => Ok(survey(args, format.unwrap_or(Format::Csv), limits)?.into()),
        Command::Average(args) => Ok(average(args, plain_default, limits)?.into()),
        Command::Heuristic(args) => Ok(heuristic(args, plain_default).into()),
    }
}

fn with_jobs<T: Send>(jobs: Option<u64>, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            let threads =
                usize::try_from(j).map_err(|_| CliError::Usage("--jobs is too large".into()))?;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| CliError::Usage(format!("cannot start {threads} workers: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

#[derive(Serialize)]
struct CheckReport {
    a: u64,
    d: u64,
    n: u64,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    characterizations: Option<Characterizations>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cutting_lengths: Option<CuttingLengthSet>,
}

fn check(args: CheckArgs, format: Format) -> Result<Output, CliError> {
    let Triple { a, d, n } = args.triple;
    let query = QuotientQuery::new(a, d, n)?;
    let holds = query.holds();
    let (chars, cuts) = if args.explain {
        (
            Some(query.characterizations()),
            Some(query.cutting_lengths()),
        )
    } else {
        (None, None)
    };
    let text = match format {
        Format::Plain => {
            let mut s = format!("{holds}\n");
            if let (Some(c), Some(k)) = (&chars, &cuts) {
                for (name, v) in Characterizations::NAMES.iter().zip(c.as_array()) {
                    s.push_str(&format!("{name}: {v}\n"));
                }
                s.push_str(&format!("cutting_lengths: {k} ({} values)\n", k.len()));
            }
            s
        }
        Format::Csv => {
            let mut header = vec!["a", "d", "n", "holds"];
            let mut row = vec![
                a.to_string(),
                d.to_string(),
                n.to_string(),
                holds.to_string(),
            ];
            if let (Some(c), Some(k)) = (&chars, &cuts) {
                header.extend(Characterizations::NAMES);
                header.extend(["cutting_lo_exclusive", "cutting_hi_inclusive"]);
                row.extend(c.as_array().iter().map(bool::to_string));
                row.extend([k.lo_exclusive.to_string(), k.hi_inclusive.to_string()]);
            }
            csv(&header, [row])
        }
        Format::Json => json(&CheckReport {
            a,
            d,
            n,
            holds,
            characterizations: chars,
            cutting_lengths: cuts,
        }),
    };
    Ok(Output {
        text,
        code: if holds { 0 } else { 1 },
    })
}

#[derive(Serialize)]
struct IntervalReport<'a> {
    a: u64,
    lo: u64,
    hi: u64,
    elements: &'a [u64],
    #[serde(skip_serializing_if = "Option::is_none")]
    relations: Option<Vec<(u64, u64)>>,
}

fn interval_cmd(args: IntervalArgs, format: Format) -> String {
    let Triple { a, d, n } = args.triple;
    let iv = interval(a, d, n);
    let relations = args.relations.then(|| iv.relations());
    match format {
        Format::Plain => {
            let mut s = format!("{}\n", join(iv.elements(), ","));
            for (e, f) in relations.iter().flatten() {
                s.push_str(&format!("{e} <= {f}\n"));
            }
            s
        }
        Format::Csv => match relations {
            Some(rel) => csv(
                &["lower", "upper"],
                rel.iter().map(|(e, f)| vec![e.to_string(), f.to_string()]),
            ),
            None => csv(
                &["element"],
                iv.elements().iter().map(|e| vec![e.to_string()]),
            ),
        },
        Format::Json => json(&IntervalReport {
            a,
            lo: d,
            hi: n,
            elements: iv.elements(),
            relations,
        }),
    }
}

#[derive(Serialize)]
struct ScalingReport {
    d: u64,
    n: u64,
    scaling: ScalingSet,
}

fn scaling(args: PairArgs, format: Format) -> String {
    let PairArgs { d, n } = args;
    let set = scaling_set(d, n);
    match format {
        Format::Plain => format!("{set}\n"),
        Format::Csv => csv(
            &["d", "n", "kind", "bound"],
            [vec![
                d.to_string(),
                n.to_string(),
                set.kind_name().to_string(),
                set.bound().map(|b| b.to_string()).unwrap_or_default(),
            ]],
        ),
        Format::Json => json(&ScalingReport { d, n, scaling: set }),
    }
}

fn semigroup(args: SemigroupArgs, format: Format) -> Result<String, CliError> {
    let s = floor_multiple_semigroup(args.a, args.d)?;
    Ok(match format {
        Format::Plain => format!(
            "generators: {}\nfrobenius: {}\ngenus: {}\n",
            join(&s.generators, ","),
            s.frobenius,
            s.genus
        ),
        Format::Csv => csv(
            &["a", "d", "frobenius", "genus", "generators"],
            [vec![
                s.a.to_string(),
                s.d.to_string(),
                s.frobenius.to_string(),
                s.genus.to_string(),
                join(&s.generators, " "),
            ]],
        ),
        Format::Json => json(&s),
    })
}

#[derive(Serialize)]
struct SigmaReport {
    a: u64,
    d: u64,
    x: u64,
    sigma: u64,
}

fn sigma_cmd(args: SigmaArgs, format: Format) -> String {
    let SigmaArgs { a, d, x } = args;
    let value = sigma(a, d, x);
    match format {
        Format::Plain => format!("{value}\n"),
        Format::Csv => csv(
            &["a", "d", "x", "sigma"],
            [[a, d, x, value].iter().map(u64::to_string).collect()],
        ),
        Format::Json => json(&SigmaReport {
            a,
            d,
            x,
            sigma: value,
        }),
    }
}

#[derive(Serialize)]
struct MoebiusEntry {
    element: u64,
    mu: i64,
}

#[derive(Serialize)]
struct MoebiusReport {
    a: u64,
    d: u64,
    n: u64,
    mu: i64,
    divisor_mu: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    table: Option<Vec<MoebiusEntry>>,
}

fn moebius(args: MoebiusArgs, format: Format) -> Result<String, CliError> {
    let Triple { a, d, n } = args.triple;
    let (mu, table): (i64, Option<Vec<MoebiusEntry>>) = if args.table {
        let t = MoebiusTable::build(a, d, n)?;
        let entries = t
            .interval()
            .elements()
            .iter()
            .zip(t.mu())
            .map(|(&element, &mu)| MoebiusEntry { element, mu })
            .collect();
        (t.top(), Some(entries))
    } else {
        (moebius_value(a, d, n)?, None)
    };
    let divisor_mu = divisor_moebius(d, n);
    Ok(match format {
        Format::Plain => {
            let mut s = format!("{mu}\n");
            for e in table.iter().flatten() {
                s.push_str(&format!("{}: {}\n", e.element, e.mu));
            }
            s
        }
        Format::Csv => match table {
            Some(entries) => csv(
                &["element", "mu"],
                entries
                    .iter()
                    .map(|e| vec![e.element.to_string(), e.mu.to_string()]),
            ),
            None => csv(
                &["a", "d", "n", "mu", "divisor_mu"],
                [vec![
                    a.to_string(),
                    d.to_string(),
                    n.to_string(),
                    mu.to_string(),
                    divisor_mu.to_string(),
                ]],
            ),
        },
        Format::Json => json(&MoebiusReport {
            a,
            d,
            n,
            mu,
            divisor_mu,
            table,
        }),
    })
}

fn survey(args: SurveyArgs, format: Format, limits: &Limits) -> Result<String, CliError> {
    let mut columns = Columns {
        thresholds: args.thresholds,
        ..Columns::default()
    };
    for group in &args.columns {
        match group {
            ColumnGroup::Sizes => columns.sizes = true,
            ColumnGroup::Thresholds => columns.thresholds = true,
            ColumnGroup::Ratios => columns.ratios = true,
        }
    }
    if columns.is_empty() {
        columns = Columns::SIZES;
    }
    let rows = with_jobs(args.jobs, || {
        analytics::survey(args.a, args.n_max, columns, limits)
    })??;
    Ok(match format {
        Format::Csv => csv(&columns.header(), rows.iter().map(|r| r.values())),
        Format::Json => json(&rows),
        Format::Plain => {
            let header = columns.header();
            let mut s = String::new();
            for r in &rows {
                let fields: Vec<String> = header
                    .iter()
                    .zip(r.values())
                    .map(|(h, v)| format!("{h}={v}"))
                    .collect();
                s.push_str(&fields.join(" "));
                s.push('\n');
            }
            s
        }
    })
}

fn average(args: AverageArgs, format: Format, limits: &Limits) -> Result<String, CliError> {
    let r = with_jobs(args.jobs, || average_size_report(args.a, args.x, limits))??;
    Ok(match format {
        Format::Plain => format!(
            "average: {:?}\npredicted: {:?}\nrelative_error: {:?}\n",
            r.average, r.predicted, r.relative_error
        ),
        Format::Csv => csv(
            &["a", "x", "average", "predicted", "relative_error"],
            [vec![
                r.a.to_string(),
                r.x.to_string(),
                r.average.to_string(),
                r.predicted.to_string(),
                r.relative_error.to_string(),
            ]],
        ),
        Format::Json => json(&r),
    })
}

#[derive(Serialize)]
struct HeuristicReport {
    a: u64,
    n: u64,
    #[serde(flatten)]
    estimate: floorq::HeuristicEstimate,
    #[serde(skip_serializing_if = "Option::is_none")]
    simulation: Option<floorq::SimulationSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
}

fn heuristic(args: HeuristicArgs, format: Format) -> String {
    let HeuristicArgs {
        a,
        n,
        simulate,
        seed,
    } = args;
    let e = heuristic_estimate(a, n);
    let sim = simulate.map(|trials| simulate_random_quotients(a, n, trials, seed));
    match format {
        Format::Plain => {
            let mut s = format!(
                "e_small: {:?}\ne_medium: {:?}\ne_large: {:?}\ntotal: {:?}\n",
                e.e_small, e.e_medium, e.e_large, e.total
            );
            if let Some(m) = sim {
                s.push_str(&format!(
                    "simulated ({} trials, seed {seed}): minus {:?} plus {:?} total {:?}\n",
                    m.trials, m.mean_minus, m.mean_plus, m.mean_total
                ));
            }
            s
        }
        Format::Csv => {
            let mut header = vec!["a", "n", "e_small", "e_medium", "e_large", "total"];
            let mut row = vec![
                a.to_string(),
                n.to_string(),
                e.e_small.to_string(),
                e.e_medium.to_string(),
                e.e_large.to_string(),
                e.total.to_string(),
            ];
            if let Some(m) = sim {
                header.extend(["trials", "seed", "sim_minus", "sim_plus", "sim_total"]);
                row.extend([
                    m.trials.to_string(),
                    seed.to_string(),
                    m.mean_minus.to_string(),
                    m.mean_plus.to_string(),
                    m.mean_total.to_string(),
                ]);
            }
            csv(&header, [row])
        }
        Format::Json => json(&HeuristicReport {
            a,
            n,
            estimate: e,
            simulation: sim,
            seed: simulate.map(|_| seed),
        }),
    }
}
