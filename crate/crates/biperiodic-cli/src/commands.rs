//! Argument resolution and drivers for the four subcommands.

use std::path::Path;

use biperiodic::hyperseq::{hyper_term, octonion_term, quaternion_term};
use biperiodic::report::format_rational;
use biperiodic::{identities, series, Params, Rational, SequenceEngine};

use crate::config::FileConfig;
use crate::output::{
    open_sink, write_genfunc_rows, write_norm_rows, write_table_rows, write_verify_output,
    GenfuncRow, NormRow, OutputFormat, TableRow,
};
use crate::verify::{self, Caps, VerifyPlan};
use crate::{CliError, GenfuncArgs, NormArgs, ParamFlags, TableArgs, VerifyArgs};
use crate::{EXIT_MISMATCH, EXIT_OK};

fn resolve_rational(
    flag: Option<Rational>,
    file: &FileConfig,
    key: &str,
) -> Result<Option<Rational>, CliError> {
    match flag {
        Some(value) => Ok(Some(value)),
        None => file.parse::<Rational>(key),
    }
}

/// The four parameter settings with defaults filled in; `None` when
/// neither the flags nor the config file mention any of them.
fn resolve_param_settings(
    flags: &ParamFlags,
    file: &FileConfig,
) -> Result<Option<[Rational; 4]>, CliError> {
    let a = resolve_rational(flags.a.clone(), file, "a")?;
    let b = resolve_rational(flags.b.clone(), file, "b")?;
    let w0 = resolve_rational(flags.w0.clone(), file, "w0")?;
    let w1 = resolve_rational(flags.w1.clone(), file, "w1")?;
    if a.is_none() && b.is_none() && w0.is_none() && w1.is_none() {
        return Ok(None);
    }
    Ok(Some([
        a.unwrap_or_else(|| Rational::from_integer(1)),
        b.unwrap_or_else(|| Rational::from_integer(1)),
        w0.unwrap_or_else(Rational::zero),
        w1.unwrap_or_else(|| Rational::from_integer(1)),
    ]))
}

fn build_params(settings: [Rational; 4]) -> Result<Params, CliError> {
    let [a, b, w0, w1] = settings;
    Params::new(a, b, w0, w1).map_err(|err| CliError::usage(format!("invalid parameters: {err}")))
}

/// Parameters for the single-sequence commands, defaulting to the base
/// pair `a = b = 1`, `w0 = 0`, `w1 = 1`.
fn resolve_params(flags: &ParamFlags, file: &FileConfig) -> Result<Params, CliError> {
    let settings = resolve_param_settings(flags, file)?.unwrap_or_else(|| {
        [
            Rational::from_integer(1),
            Rational::from_integer(1),
            Rational::zero(),
            Rational::from_integer(1),
        ]
    });
    build_params(settings)
}

fn resolve_i64(
    flag: Option<i64>,
    file: &FileConfig,
    key: &str,
    default: i64,
) -> Result<i64, CliError> {
    Ok(flag.or(file.parse::<i64>(key)?).unwrap_or(default))
}

pub fn run_table(
    args: &TableArgs,
    file: &FileConfig,
    format: OutputFormat,
    out_path: Option<&Path>,
) -> Result<u8, CliError> {
    let params = resolve_params(&args.params, file)?;
    let n_min = resolve_i64(args.n_min, file, "n-min", 0)?;
    let n_max = resolve_i64(args.n_max, file, "n-max", 20)?;
    if n_min > n_max {
        return Err(CliError::usage(format!(
            "n-min ({n_min}) must not exceed n-max ({n_max})"
        )));
    }
    let engine = SequenceEngine::new(params);
    let rows: Vec<TableRow> = (n_min..=n_max)
        .map(|n| TableRow {
            n,
            octonion: octonion_term(&engine, n).component_strings(),
            quaternion: quaternion_term(&engine, n).component_strings(),
            w: format_rational(&engine.term(n)),
        })
        .collect();
    let mut sink = open_sink(out_path).map_err(CliError::io)?;
    write_table_rows(&mut sink, format, &rows).map_err(CliError::io)?;
    Ok(EXIT_OK)
}

fn genfunc_rows<const N: usize>(
    engine: &SequenceEngine,
    order: usize,
) -> Result<Vec<GenfuncRow>, CliError> {
    let coeffs = series::hyper_genfunc::<N>(engine, order)
        .map_err(|err| CliError::usage(format!("expansion failed: {err}")))?;
    Ok(coeffs
        .iter()
        .enumerate()
        .map(|(degree, coeff)| {
            let term = hyper_term::<N>(engine, degree as i64);
            GenfuncRow {
                coefficient: coeff.component_strings(),
                degree,
                matches: coeff.c == term.c,
                term: term.component_strings(),
            }
        })
        .collect())
}

pub fn run_genfunc(
    args: &GenfuncArgs,
    file: &FileConfig,
    format: OutputFormat,
    out_path: Option<&Path>,
) -> Result<u8, CliError> {
    let params = resolve_params(&args.params, file)?;
    let order = match args.order {
        Some(order) => order,
        None => file.parse::<usize>("order")?.unwrap_or(20),
    };
    let octonion = args.octonion || file.parse::<bool>("octonion")?.unwrap_or(false);
    let engine = SequenceEngine::new(params);
    let rows = if octonion {
        genfunc_rows::<8>(&engine, order)?
    } else {
        genfunc_rows::<4>(&engine, order)?
    };
    let all_match = rows.iter().all(|row| row.matches);
    let mut sink = open_sink(out_path).map_err(CliError::io)?;
    write_genfunc_rows(&mut sink, format, &rows).map_err(CliError::io)?;
    Ok(if all_match { EXIT_OK } else { EXIT_MISMATCH })
}

pub fn run_norm(
    args: &NormArgs,
    file: &FileConfig,
    format: OutputFormat,
    out_path: Option<&Path>,
) -> Result<u8, CliError> {
    let params = resolve_params(&args.params, file)?;
    let n_max = resolve_i64(args.n_max, file, "n-max", 15)?;
    if n_max < 0 {
        return Err(CliError::usage(format!(
            "n-max must be nonnegative, got {n_max}"
        )));
    }
    let engine = SequenceEngine::new(params);
    let rows: Vec<NormRow> = (0..=n_max)
        .map(|n| match identities::norm_value(&engine, n) {
            Ok(report) => NormRow {
                closed_form: report.rhs().to_string(),
                equal: report.equal(),
                n,
                norm: report.lhs().to_string(),
            },
            Err(err) => NormRow {
                closed_form: format!("evaluation error: {err}"),
                equal: false,
                n,
                norm: "-".to_string(),
            },
        })
        .collect();
    let all_equal = rows.iter().all(|row| row.equal);
    let mut sink = open_sink(out_path).map_err(CliError::io)?;
    write_norm_rows(&mut sink, format, &rows).map_err(CliError::io)?;
    Ok(if all_equal { EXIT_OK } else { EXIT_MISMATCH })
}

fn parse_r_values_text(text: &str) -> Result<Vec<i64>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim().parse::<i64>().map_err(|err| {
                CliError::usage(format!("r-values entry {part:?} is invalid: {err}"))
            })
        })
        .collect()
}

/// Parses an explicit grid: parameter quadruples `a,b,w0,w1` separated
/// by semicolons.
fn parse_grid_text(text: &str) -> Result<Vec<Params>, CliError> {
    let mut points = Vec::new();
    for (idx, tuple) in text.split(';').enumerate() {
        let parts: Vec<&str> = tuple.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(CliError::usage(format!(
                "grid point {} must be four comma-separated rationals a,b,w0,w1, got {tuple:?}",
                idx + 1
            )));
        }
        let mut values = Vec::with_capacity(4);
        for part in parts {
            values.push(part.parse::<Rational>().map_err(|err| {
                CliError::usage(format!(
                    "grid point {} has an invalid rational {part:?}: {err}",
                    idx + 1
                ))
            })?);
        }
        let [a, b, w0, w1]: [Rational; 4] = values.try_into().expect("length was checked above");
        points.push(build_params([a, b, w0, w1])?);
    }
    Ok(points)
}

pub fn run_verify(
    args: &VerifyArgs,
    file: &FileConfig,
    format: OutputFormat,
    out_path: Option<&Path>,
) -> Result<u8, CliError> {
    let grid_text = args
        .grid
        .clone()
        .or_else(|| file.get("grid").map(str::to_string));
    let explicit_point = resolve_param_settings(&args.params, file)?;
    let grid = match (grid_text, explicit_point) {
        (Some(_), Some(_)) => {
            return Err(CliError::usage(
                "--grid cannot be combined with the single-point flags --a/--b/--w0/--w1",
            ))
        }
        (Some(text), None) => parse_grid_text(&text)?,
        (None, Some(settings)) => vec![build_params(settings)?],
        (None, None) => verify::default_grid(),
    };
    let caps = match args.n_max {
        Some(n_max) => {
            if n_max < 0 {
                return Err(CliError::usage(format!(
                    "n-max must be nonnegative, got {n_max}"
                )));
            }
            Caps::with_n_max(n_max)
        }
        None => match file.parse::<i64>("n-max")? {
            Some(n_max) if n_max >= 0 => Caps::with_n_max(n_max),
            Some(n_max) => {
                return Err(CliError::usage(format!(
                    "n-max must be nonnegative, got {n_max}"
                )))
            }
            None => Caps::default(),
        },
    };
    let r_values = match &args.r_values {
        Some(list) => Some(list.clone()),
        None => match file.get("r-values") {
            Some(text) => Some(parse_r_values_text(text)?),
            None => None,
        },
    };
    if let Some(list) = &r_values {
        if let Some(bad) = list.iter().find(|r| **r < 0) {
            return Err(CliError::usage(format!(
                "r-values must be nonnegative, got {bad}"
            )));
        }
    }

    let pool = match std::env::var("BIPERIODIC_WORKERS") {
        Ok(text) => {
            let count: usize = text.parse().map_err(|_| {
                CliError::usage(format!(
                    "BIPERIODIC_WORKERS must be a positive integer, got {text:?}"
                ))
            })?;
            if count == 0 {
                return Err(CliError::usage(
                    "BIPERIODIC_WORKERS must be a positive integer, got \"0\"",
                ));
            }
            Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(count)
                    .build()
                    .map_err(|err| {
                        CliError::usage(format!("cannot build the worker pool: {err}"))
                    })?,
            )
        }
        Err(_) => None,
    };
    let workers = pool
        .as_ref()
        .map(|p| p.current_num_threads())
        .unwrap_or_else(rayon::current_num_threads);

    let plan = VerifyPlan {
        grid,
        caps,
        r_values,
        workers,
    };
    let outcome = match &pool {
        Some(pool) => pool.install(|| verify::run(&plan)),
        None => verify::run(&plan),
    };

    let mut sink = open_sink(out_path).map_err(CliError::io)?;
    write_verify_output(
        &mut sink,
        format,
        &outcome.header,
        &outcome.rows,
        &outcome.summary,
    )
    .map_err(CliError::io)?;
    Ok(if outcome.all_gating_pass() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}
