//! Result rows and their CSV/JSON rendering.
//!
//! The CSV layout is frozen: a header row, then one row per record, floats
//! with 12 significant digits in `%.12g` style, blanks for missing values.

use std::io::Write;

use serde::Serialize;

pub const ROW_COLUMNS: [&str; 10] =
    ["n", "m", "predicate", "exact", "p_hat", "ci_low", "ci_high", "samples", "seed", "asymptote"];

pub const CONJECTURE_COLUMNS: [&str; 5] =
    ["n", "m", "value", "dist_one_minus_inv_e", "dist_inv_sqrt_e"];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub n: usize,
    pub m: u64,
    pub predicate: String,
    pub exact: Option<f64>,
    pub p_hat: Option<f64>,
    pub ci_low: Option<f64>,
    pub ci_high: Option<f64>,
    pub samples: Option<u64>,
    pub seed: Option<u64>,
    pub asymptote: Option<f64>,
}

impl Row {
    pub fn new(n: usize, m: u64, predicate: impl Into<String>) -> Self {
        Row {
            n,
            m,
            predicate: predicate.into(),
            exact: None,
            p_hat: None,
            ci_low: None,
            ci_high: None,
            samples: None,
            seed: None,
            asymptote: None,
        }
    }

    fn fields(&self) -> [String; 10] {
        let f = |x: Option<f64>| x.map(fmt_g12).unwrap_or_default();
        let u = |x: Option<u64>| x.map(|v| v.to_string()).unwrap_or_default();
        [
            self.n.to_string(),
            self.m.to_string(),
            self.predicate.clone(),
            f(self.exact),
            f(self.p_hat),
            f(self.ci_low),
            f(self.ci_high),
            u(self.samples),
            u(self.seed),
            f(self.asymptote),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub m: u64,
    pub value: f64,
    pub dist_one_minus_inv_e: f64,
    pub dist_inv_sqrt_e: f64,
}

impl ConjectureRow {
    fn fields(&self) -> [String; 5] {
        [
            self.n.to_string(),
            self.m.to_string(),
            fmt_g12(self.value),
            fmt_g12(self.dist_one_minus_inv_e),
            fmt_g12(self.dist_inv_sqrt_e),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Anything that renders as a fixed set of columns.
pub trait Record: Serialize {
    const COLUMNS: &'static [&'static str];
    fn cells(&self) -> Vec<String>;
}

impl Record for Row {
    const COLUMNS: &'static [&'static str] = &ROW_COLUMNS;
    fn cells(&self) -> Vec<String> {
        self.fields().into()
    }
}

impl Record for ConjectureRow {
    const COLUMNS: &'static [&'static str] = &CONJECTURE_COLUMNS;
    fn cells(&self) -> Vec<String> {
        self.fields().into()
    }
}

pub fn write_table<R: Record>(rows: &[R], format: Format, out: impl Write) -> std::io::Result<()> {
    match format {
        Format::Csv => write_csv(rows, out),
        Format::Json => {
            let mut out = out;
            serde_json::to_writer(&mut out, rows)?;
            writeln!(out)
        }
    }
}

fn write_csv<R: Record>(rows: &[R], out: impl Write) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(R::COLUMNS)?;
    for r in rows {
        w.write_record(r.cells())?;
    }
    w.flush()
}

/// C's `%.12g`: 12 significant digits, trailing zeros dropped, scientific
/// notation when the decimal exponent is below -4 or at least 12.
pub fn fmt_g12(x: f64) -> String {
    const DIGITS: i32 = 12;
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.into();
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0" } else { "0" }.into();
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent always present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..DIGITS).contains(&exp) {
        trim_zeros(&format!("{:.*}", (DIGITS - 1 - exp) as usize, x)).to_string()
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim_zeros(mantissa), sign, exp.abs())
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
