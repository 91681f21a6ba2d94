//! Input documents: a JSON object or an inline list of square-free products.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ideal::MonomialIdeal;
use crate::ring::is_prime;
use crate::stanley_reisner::SquareFreeIdeal;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub variables: usize,
    pub p: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e_max: Option<u32>,
    pub generators: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("generator {generator} (at {at}) is not square-free")]
    NotSquareFree { generator: usize, at: String },
    #[error("variable index {index} at {at} is outside 1..={nvars}")]
    IndexOutOfRange { index: u64, nvars: usize, at: String },
    #[error("generator {generator} has {found} entries, expected {nvars}")]
    WrongLength { generator: usize, found: usize, nvars: usize },
    #[error("p = {0} is not prime")]
    NotPrime(u64),
    #[error("no characteristic given; pass --p")]
    MissingCharacteristic,
    #[error("{0}")]
    Invalid(String),
}

/// Values supplied on the command line; they override the document.
#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub p: Option<u64>,
    pub variables: Option<usize>,
    pub e_max: Option<u32>,
}

impl InputDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn ideal(&self) -> SquareFreeIdeal<u64> {
        let ideal = MonomialIdeal::from_exponents(self.variables, &self.generators)
            .expect("validated document");
        SquareFreeIdeal::new(ideal).expect("validated document")
    }

    fn validate(self) -> Result<Self, InputError> {
        if self.variables == 0 {
            return Err(InputError::Invalid("variables must be positive".into()));
        }
        if !is_prime(self.p) {
            return Err(InputError::NotPrime(self.p));
        }
        if self.generators.is_empty() {
            return Err(InputError::Invalid("at least one generator is required".into()));
        }
        if self.e_max == Some(0) {
            return Err(InputError::Invalid("e_max must be at least 1".into()));
        }
        for (g, v) in self.generators.iter().enumerate() {
            if v.len() != self.variables {
                return Err(InputError::WrongLength {
                    generator: g + 1,
                    found: v.len(),
                    nvars: self.variables,
                });
            }
            if let Some(j) = v.iter().position(|&a| a > 1) {
                return Err(InputError::NotSquareFree {
                    generator: g + 1,
                    at: format!("generators[{g}][{j}]"),
                });
            }
            if v.iter().all(|&a| a == 0) {
                return Err(InputError::Invalid(format!(
                    "generator {} is 1; the unit ideal is not allowed",
                    g + 1
                )));
            }
        }
        Ok(self)
    }
}

/// Parses either a JSON document (text starting with `{`) or the inline
/// grammar `x1*x5, x2*x5, ...`.
pub fn parse_input(text: &str, overrides: Overrides) -> Result<InputDocument, InputError> {
    let trimmed = text.trim_start();
    let mut doc = if trimmed.starts_with('{') {
        let mut doc: InputDocument = serde_json::from_str(text).map_err(|e| InputError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        if let Some(p) = overrides.p {
            doc.p = p;
        }
        if let Some(n) = overrides.variables {
            if n != doc.variables {
                return Err(InputError::Invalid(format!(
                    "--variables {n} disagrees with the document ({})",
                    doc.variables
                )));
            }
        }
        doc
    } else {
        let p = overrides.p.ok_or(InputError::MissingCharacteristic)?;
        let (variables, generators) = parse_inline(text, overrides.variables)?;
        InputDocument { variables, p, e_max: None, generators }
    };
    if overrides.e_max.is_some() {
        doc.e_max = overrides.e_max;
    }
    doc.validate()
}

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Self { chars: src.char_indices().collect(), pos: 0, src }
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.chars().count(), |_| self.pos) + 1
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn error(&self, message: impl Into<String>) -> InputError {
        InputError::Syntax { column: self.column(), message: message.into() }
    }

    fn number(&mut self) -> Result<u64, InputError> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        s.parse().map_err(|_| InputError::Syntax { column: start + 1, message: "number too large".into() })
    }
}

/// One factor `x<i>` or `x<i>^<k>`: (column, index, exponent).
type Factor = (usize, u64, u64);

/// Returns the variable count and the 0/1 generator vectors.
pub fn parse_inline(
    text: &str,
    variables: Option<usize>,
) -> Result<(usize, Vec<Vec<u64>>), InputError> {
    let mut lx = Lexer::new(text);
    let mut products: Vec<Vec<Factor>> = Vec::new();
    loop {
        let mut factors = Vec::new();
        loop {
            let column = match lx.peek() {
                Some('x') | Some('X') => {
                    let column = lx.column();
                    lx.pos += 1;
                    column
                }
                Some(c) => return Err(lx.error(format!("expected a variable, found '{c}'"))),
                None => return Err(lx.error("expected a variable, found end of input")),
            };
            let index = lx.number()?;
            let mut exponent = 1;
            if lx.peek() == Some('^') {
                lx.pos += 1;
                lx.skip_ws();
                exponent = lx.number()?;
            }
            factors.push((column, index, exponent));
            if lx.peek() == Some('*') {
                lx.pos += 1;
            } else {
                break;
            }
        }
        products.push(factors);
        match lx.peek() {
            Some(',') => lx.pos += 1,
            None => break,
            Some(c) => return Err(lx.error(format!("expected ',' or '*', found '{c}'"))),
        }
    }

    let max_index = products.iter().flatten().map(|f| f.1).max().unwrap_or(0);
    let nvars = match variables {
        Some(n) => n,
        None => usize::try_from(max_index).map_err(|_| InputError::Invalid("too many variables".into()))?,
    };
    let mut gens = Vec::with_capacity(products.len());
    for (g, factors) in products.iter().enumerate() {
        let mut v = vec![0u64; nvars];
        for &(column, index, exponent) in factors {
            if index == 0 || index > nvars as u64 {
                return Err(InputError::IndexOutOfRange {
                    index,
                    nvars,
                    at: format!("column {column}"),
                });
            }
            let slot = &mut v[(index - 1) as usize];
            *slot = slot.saturating_add(exponent);
            if *slot > 1 {
                return Err(InputError::NotSquareFree {
                    generator: g + 1,
                    at: format!("column {column}"),
                });
            }
        }
        gens.push(v);
    }
    Ok((nvars, gens))
}
