//! Serialized form of a solution record.
//!
//! Big integers are written as decimal strings in both JSON and CSV so that
//! consumers never see a numeric token wider than 64 bits.

use std::io::{BufRead, Write};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use quintic::{GaussianInt, Sign, SolutionRecord};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub n: u32,
    pub a: String,
    pub b_re: String,
    pub b_im: String,
    pub c_re: String,
    pub c_im: String,
    pub sign: i32,
    pub verified: bool,
}

/// CSV header, in the fixed column order.
pub const CSV_COLUMNS: [&str; 8] = ["n", "a", "b_re", "b_im", "c_re", "c_im", "sign", "verified"];

#[derive(Debug, thiserror::Error)]
pub enum RecordError {
    #[error("field {field}: {value:?} is not a decimal integer")]
    BadInteger { field: &'static str, value: String },
    #[error("sign must be 1 or -1, got {0}")]
    BadSign(i32),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn parse_int(field: &'static str, value: &str) -> Result<BigInt, RecordError> {
    let digits = value.strip_prefix('-').unwrap_or(value);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(RecordError::BadInteger {
            field,
            value: value.to_string(),
        });
    }
    value.parse().map_err(|_| RecordError::BadInteger {
        field,
        value: value.to_string(),
    })
}

impl OutputRecord {
    pub fn new(rec: &SolutionRecord, verified: bool) -> Self {
        OutputRecord {
            n: rec.n,
            a: rec.a.re.to_string(),
            b_re: rec.b.re.to_string(),
            b_im: rec.b.im.to_string(),
            c_re: rec.c.re.to_string(),
            c_im: rec.c.im.to_string(),
            sign: rec.sign.as_i32(),
            verified,
        }
    }

    /// Parses the decimal fields back into a [`SolutionRecord`].
    pub fn to_solution(&self) -> Result<SolutionRecord, RecordError> {
        Ok(SolutionRecord {
            n: self.n,
            a: GaussianInt::real(parse_int("a", &self.a)?),
            b: GaussianInt::new(
                parse_int("b_re", &self.b_re)?,
                parse_int("b_im", &self.b_im)?,
            ),
            c: GaussianInt::new(
                parse_int("c_re", &self.c_re)?,
                parse_int("c_im", &self.c_im)?,
            ),
            sign: Sign::from_i32(self.sign).ok_or(RecordError::BadSign(self.sign))?,
        })
    }
}

/// Reads one JSON record per non-empty line.
pub fn read_json_lines<R: BufRead>(reader: R) -> Result<Vec<OutputRecord>, RecordError> {
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line)?);
    }
    Ok(out)
}

pub fn read_csv<R: std::io::Read>(reader: R) -> Result<Vec<OutputRecord>, RecordError> {
    let mut rdr = csv::Reader::from_reader(reader);
    rdr.deserialize()
        .map(|r| r.map_err(RecordError::from))
        .collect()
}

/// Streaming writer for records in either format.
pub enum RecordWriter<W: Write> {
    Json(W),
    Csv(Box<csv::Writer<W>>),
}

impl<W: Write> RecordWriter<W> {
    pub fn json(w: W) -> Self {
        RecordWriter::Json(w)
    }

    pub fn csv(w: W) -> Self {
        RecordWriter::Csv(Box::new(csv::Writer::from_writer(w)))
    }

    pub fn write(&mut self, rec: &OutputRecord) -> Result<(), RecordError> {
        match self {
            RecordWriter::Json(w) => {
                serde_json::to_writer(&mut *w, rec)?;
                writeln!(w)?;
            }
            RecordWriter::Csv(w) => w.serialize(rec)?,
        }
        Ok(())
    }

    pub fn flush(&mut self) -> Result<(), RecordError> {
        match self {
            RecordWriter::Json(w) => w.flush()?,
            RecordWriter::Csv(w) => w.flush()?,
        }
        Ok(())
    }
}
