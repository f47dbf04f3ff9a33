//! Command implementations behind the `padic-eisen` binary. Each command
//! returns the text to print on stdout or a [`CliError`] that fixes the exit
//! code.

pub mod check;
pub mod output;
pub mod parse;

use num_traits::One;

use padic_eisen::eisenstein::krasner_certificate;
use padic_eisen::oracle::{default_precision, oracle_equiv};
use padic_eisen::tables::table;
use padic_eisen::{
    canonical_form, classify_type, equivalent, profile, EisensteinPoly, Error, Prime,
};

use output::{Breaks, Classification, Equivalence, Method, Row, Table};

pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("invariant violated")]
    Violation { report: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Unsupported(_) => EXIT_UNSUPPORTED,
            CliError::Violation { .. } => EXIT_VIOLATION,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        // an oracle that runs out of precision is a limit of the tool, not bad input
        if e.is_unsupported() || matches!(e, Error::Inconclusive(_)) {
            CliError::Unsupported(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn prime(p: u64) -> CliResult<Prime> {
    Prime::new(p).map_err(CliError::from)
}

/// Parse and validate a monic Eisenstein polynomial.
pub fn read_poly(p: Prime, text: &str) -> CliResult<EisensteinPoly> {
    let mut coeffs = parse::parse_coeffs(text).map_err(|e| CliError::Input(format!("cannot parse '{text}' {e}")))?;
    if coeffs.len() < 2 {
        return Err(CliError::Input(format!("'{text}' is constant")));
    }
    if !coeffs.last().expect("nonempty").is_one() {
        return Err(CliError::Input(format!("'{text}' is not monic")));
    }
    coeffs.pop();
    Ok(EisensteinPoly::new(p, coeffs)?)
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("output types serialize")
}

pub fn precision_or_default(p: Prime, n: Option<u32>) -> u32 {
    n.unwrap_or_else(|| default_precision(p))
}

pub fn classify(p: Prime, poly: &str) -> CliResult<String> {
    let f = read_poly(p, poly)?;
    let rep = canonical_form(&f)?;
    Ok(json(&Classification::new(classify_type(&f)?, &rep)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquivMethod {
    Auto,
    Canonical,
    Krasner,
    Oracle,
}

pub fn equiv(p: Prime, f: &str, g: &str, method: EquivMethod, precision: Option<u32>) -> CliResult<String> {
    let (f, g) = (read_poly(p, f)?, read_poly(p, g)?);
    if f.degree() != g.degree() {
        return Err(CliError::Input(format!(
            "degrees differ: {} and {}",
            f.degree(),
            g.degree()
        )));
    }
    let n = precision_or_default(p, precision);
    let degree_p = p.is_odd() && f.degree() == p.get() as usize;
    let out = match method {
        EquivMethod::Canonical => Equivalence::decided(equivalent(&f, &g)?, Method::Canonical),
        EquivMethod::Krasner => Equivalence::certified(&krasner_certificate(&f, &g)?),
        EquivMethod::Oracle => Equivalence::decided(oracle_equiv(&f, &g, n)?, Method::Oracle),
        EquivMethod::Auto if degree_p => Equivalence::decided(equivalent(&f, &g)?, Method::Canonical),
        EquivMethod::Auto => {
            let cert = krasner_certificate(&f, &g)?;
            if cert.holds {
                Equivalence::certified(&cert)
            } else {
                Equivalence::decided(oracle_equiv(&f, &g, n)?, Method::Oracle)
            }
        }
    };
    Ok(json(&out))
}

pub fn breaks(p: Prime, poly: &str) -> CliResult<String> {
    let f = read_poly(p, poly)?;
    Ok(json(&Breaks::from(&profile(&f)?)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Json,
    Tsv,
}

pub fn table_listing(p: Prime, format: TableFormat) -> CliResult<String> {
    let rows: Vec<Row> = table(p)?.iter().map(Row::from_entry).collect();
    Ok(match format {
        TableFormat::Json => json(&Table { p: p.get(), entries: rows }),
        TableFormat::Tsv => {
            let mut out = String::from(Row::TSV_HEADER);
            for r in &rows {
                out.push('\n');
                out.push_str(&r.tsv());
            }
            out
        }
    })
}

pub fn run_check(cfg: &check::Config) -> CliResult<String> {
    let report = check::run(cfg)?;
    match report.counterexample {
        None => Ok(report.text.trim_end().to_string()),
        Some(cx) => Err(CliError::Violation {
            report: format!("{}{}", report.text, json(&cx)),
        }),
    }
}

