//! Subcommand implementations. Each writes data to `out`, diagnostics to
//! `err`, and returns whether the run succeeded.

use std::io::Write;

use anyhow::Result;
use serde::Serialize;

use quintic::genfunc::{builtin_gf, GfKind};
use quintic::sympoly::{evenness_report, first_quadratic, sum_of_powers, BiPoly, QUINTIC_EXPONENT};
use quintic::verify::{self, Check};
use quintic::{AsInteger, Execution, GaussianInt};

use crate::record::{OutputRecord, RecordWriter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum RecordFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum CoeffFormat {
    Text,
    Json,
    Csv,
}

/// Result of a subcommand: success maps to exit status 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Failure,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::Failure => 1,
        }
    }
}

pub fn cmd_gen(
    count: u32,
    format: RecordFormat,
    exec: Execution,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Outcome> {
    let mut writer = match format {
        RecordFormat::Json => RecordWriter::json(out),
        RecordFormat::Csv => RecordWriter::csv(out),
    };
    for (n, rec, verified) in verify::generate(count, exec) {
        let rec = match rec {
            Ok(rec) => rec,
            Err(e) => {
                writer.flush()?;
                writeln!(err, "gen: n = {n}: {e}")?;
                return Ok(Outcome::Failure);
            }
        };
        if !verified {
            writer.flush()?;
            writeln!(err, "gen: n = {n}: quintic identity failed for {rec}")?;
            return Ok(Outcome::Failure);
        }
        writer.write(&OutputRecord::new(&rec, verified))?;
    }
    writer.flush()?;
    Ok(Outcome::Success)
}

pub fn cmd_verify(
    count: u32,
    exec: Execution,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Outcome> {
    let report = verify::run_with(count, exec);
    let width = Check::all()
        .iter()
        .map(|c| c.name().len())
        .max()
        .unwrap_or(0);
    for t in &report.tallies {
        writeln!(
            out,
            "{:<width$}  {}/{} passed",
            t.check.name(),
            t.passed,
            t.total
        )?;
    }
    for e in &report.examples {
        let status = if e.matches { "ok" } else { "MISMATCH" };
        writeln!(out, "example n={}: {}  {status}", e.expected.n, e.expected)?;
    }
    match report.first_failure() {
        None if report.all_passed() => {
            writeln!(
                out,
                "all {} checks passed for n = 0..{}",
                report.tallies.len(),
                count - 1
            )?;
            Ok(Outcome::Success)
        }
        None => {
            writeln!(err, "verify: worked example mismatch")?;
            Ok(Outcome::Failure)
        }
        Some((check, n)) => {
            writeln!(err, "verify: first failure: {check} at n = {n}")?;
            Ok(Outcome::Failure)
        }
    }
}

/// `g` with the sign of the `2ax` term in the second quadratic flipped.
fn g_with_sign_error() -> BiPoly {
    let broken = BiPoly::from_terms([
        (GaussianInt::new(0, 1), 2, 0),
        (GaussianInt::new(2, 0), 1, 1),
        (GaussianInt::new(0, 2), 0, 2),
    ]);
    sum_of_powers(&first_quadratic(), &broken, QUINTIC_EXPONENT)
}

pub fn cmd_identity(
    inject_sign_error: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Outcome> {
    let g = if inject_sign_error {
        g_with_sign_error()
    } else {
        quintic::build_g()
    };
    let report = evenness_report(&g);
    writeln!(
        out,
        "g: {} monomials, degree {} in x, degree {} in a",
        report.total_terms,
        g.degree_x().unwrap_or(0),
        g.degree_a().unwrap_or(0)
    )?;
    writeln!(out, "odd part in x: {} monomials", report.odd_terms)?;
    writeln!(
        out,
        "g(x) - g(-x) = 0: {}",
        if report.reflection_vanishes {
            "yes"
        } else {
            "no"
        }
    )?;
    if report.is_even() {
        writeln!(out, "identity holds: g is even in x")?;
        Ok(Outcome::Success)
    } else {
        writeln!(
            err,
            "identity: g has {} odd-degree monomials in x",
            report.odd_terms
        )?;
        Ok(Outcome::Failure)
    }
}

#[derive(Serialize)]
struct CoeffRow {
    n: usize,
    re: String,
    im: String,
}

pub fn cmd_gf(
    which: GfKind,
    count: u32,
    format: CoeffFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Outcome> {
    let coeffs = builtin_gf(which).coefficients(count as usize)?;
    let mut values: Vec<GaussianInt> = Vec::with_capacity(coeffs.len());
    for (n, c) in coeffs.iter().enumerate() {
        match c.as_integer() {
            Ok(z) => values.push(z),
            Err(_) => {
                writeln!(
                    err,
                    "gf: coefficient {n} of {which} is not a Gaussian integer: {c}"
                )?;
                return Ok(Outcome::Failure);
            }
        }
    }
    let rows = values.iter().enumerate().map(|(n, z)| CoeffRow {
        n,
        re: z.re.to_string(),
        im: z.im.to_string(),
    });
    match format {
        CoeffFormat::Text => {
            for (n, z) in values.iter().enumerate() {
                writeln!(out, "{n} {z}")?;
            }
        }
        CoeffFormat::Json => {
            for row in rows {
                serde_json::to_writer(&mut *out, &row)?;
                writeln!(out)?;
            }
        }
        CoeffFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in rows {
                w.serialize(&row)?;
            }
            w.flush()?;
        }
    }
    Ok(Outcome::Success)
}
