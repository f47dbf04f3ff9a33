//! Polynomial input: either text such as `x^3 + 6*x^2 + 3` or a JSON list of
//! integer coefficients, low degree first, including the leading 1.
//!
//! Grammar (whitespace allowed between any two tokens):
//!
//! ```text
//! poly   = [sign] term { sign term } ;
//! term   = coeff [ ["*"] monom ] | monom ;
//! monom  = "x" [ "^" digits ] ;
//! coeff  = digits ;
//! sign   = "+" | "-" ;
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, msg: msg.into() })
}

/// Full coefficient list `c_0, ..., c_n` with `c_n != 0`.
pub fn parse_coeffs(input: &str) -> Result<Vec<BigInt>, ParseError> {
    if input.trim_start().starts_with('[') {
        parse_json_list(input)
    } else {
        Parser::new(input).poly()
    }
}

fn parse_json_list(input: &str) -> Result<Vec<BigInt>, ParseError> {
    let values: Vec<serde_json::Number> = serde_json::from_str(input).map_err(|e| ParseError {
        pos: byte_offset(input, e.line(), e.column()),
        msg: format!("bad coefficient list: {e}"),
    })?;
    let start = input.find('[').unwrap_or(0);
    let mut out = Vec::with_capacity(values.len());
    for (i, v) in values.iter().enumerate() {
        let text = v.to_string();
        let c: BigInt = text.parse().map_err(|_| ParseError {
            pos: start,
            msg: format!("coefficient {i} is not an integer: {text}"),
        })?;
        out.push(c);
    }
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    if out.is_empty() {
        return err(start, "empty polynomial");
    }
    Ok(out)
}

fn byte_offset(input: &str, line: usize, column: usize) -> usize {
    let line_start: usize = input.split_inclusive('\n').take(line.saturating_sub(1)).map(str::len).sum();
    line_start + column.saturating_sub(1)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> char {
        let c = self.src[self.pos..].chars().next().expect("bump past end");
        self.pos += c.len_utf8();
        c
    }

    fn digits(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..].bytes().take_while(u8::is_ascii_digit).count();
        self.pos += len;
        (len > 0).then(|| (start, &self.src[start..start + len]))
    }

    fn poly(mut self) -> Result<Vec<BigInt>, ParseError> {
        let mut terms: BTreeMap<usize, BigInt> = BTreeMap::new();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                None if first => return err(self.pos, "empty polynomial"),
                None => break,
                Some('+') => {
                    self.bump();
                    false
                }
                Some('-') => {
                    self.bump();
                    true
                }
                Some(c) if !first => return err(self.pos, format!("expected '+' or '-', found '{c}'")),
                Some(_) => false,
            };
            first = false;
            let (coeff, exp) = self.term()?;
            let coeff = if negative { -coeff } else { coeff };
            *terms.entry(exp).or_insert_with(BigInt::zero) += coeff;
        }
        let n = terms.keys().next_back().copied().unwrap_or(0);
        let mut out = vec![BigInt::zero(); n + 1];
        for (k, c) in terms {
            out[k] = c;
        }
        while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
            out.pop();
        }
        if out.iter().all(Zero::is_zero) {
            return err(0, "polynomial is zero");
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(BigInt, usize), ParseError> {
        let coeff = self.digits().map(|(_, d)| d.parse::<BigInt>().expect("ascii digits"));
        match self.peek() {
            Some('*') if coeff.is_some() => {
                self.bump();
                match self.peek() {
                    Some('x' | 'X') => {}
                    Some(c) => return err(self.pos, format!("expected 'x' after '*', found '{c}'")),
                    None => return err(self.pos, "expected 'x' after '*'"),
                }
            }
            Some('x' | 'X') => {}
            Some(c) if coeff.is_none() => return err(self.pos, format!("expected a term, found '{c}'")),
            None if coeff.is_none() => return err(self.pos, "expected a term"),
            _ => return Ok((coeff.expect("checked"), 0)),
        }
        self.bump();
        let exp = if self.peek() == Some('^') {
            self.bump();
            let Some((at, d)) = self.digits() else {
                return err(self.pos, "expected exponent after '^'");
            };
            d.parse::<usize>()
                .ok()
                .filter(|&e| e <= 1 << 16)
                .map_or_else(|| err(at, format!("exponent {d} too large")), Ok)?
        } else {
            1
        };
        Ok((coeff.unwrap_or_else(BigInt::one), exp))
    }
}

/// Render a full coefficient list the way the parser reads it back.
pub fn render(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = c.abs();
        match k {
            0 => out.push_str(&mag.to_string()),
            _ => {
                if !mag.is_one() {
                    out.push_str(&format!("{mag}*"));
                }
                out.push('x');
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
