//! State files: UTF-8 text with one coefficient per line, or a JSON list.
//!
//! ```text
//! # comment lines and trailing comments are ignored
//! 0.4
//! 0.36   # exact: 9/25
//! 0.14
//! 1/10
//! ```
//!
//! The JSON form is a single list of numbers or numeric strings,
//! e.g. `[0.5, "0.25", 0.25]`. Numbers keep their literal digits.

use std::fmt;

use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::Error;
use crate::rational::{parse_decimal, Rational};
use crate::spectrum::{make_spectrum, SchmidtSpectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Probabilities,
    /// Entries are Schmidt amplitudes and get squared.
    Amplitudes,
}

/// Where a coefficient came from, for error messages.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Line(usize),
    JsonElement(usize),
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::Line(n) => write!(f, "line {n}"),
            Origin::JsonElement(i) => write!(f, "element {i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub name: String,
    pub origin: Option<Origin>,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.origin {
            Some(origin) => write!(f, "{}: {origin}: {}", self.name, self.message),
            None => write!(f, "{}: {}", self.name, self.message),
        }
    }
}

impl std::error::Error for InputError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateFile {
    pub name: String,
    pub coefficients: Vec<String>,
    pub origins: Vec<Origin>,
    pub mode: Mode,
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(head, _)| head)
}

impl StateFile {
    pub fn parse(name: &str, text: &str, mode: Mode) -> Result<Self, InputError> {
        let err = |origin, message: String| InputError {
            name: name.to_string(),
            origin,
            message,
        };
        let stripped: Vec<&str> = text.lines().map(strip_comment).collect();
        let is_json = stripped
            .iter()
            .flat_map(|l| l.chars())
            .find(|c| !c.is_whitespace())
            == Some('[');

        let mut coefficients = Vec::new();
        let mut origins = Vec::new();
        if is_json {
            let body = stripped.join("\n");
            let value: Value = serde_json::from_str(&body)
                .map_err(|e| err(Some(Origin::Line(e.line())), format!("invalid JSON: {e}")))?;
            let Value::Array(items) = value else {
                return Err(err(None, "JSON input must be a list".into()));
            };
            for (i, item) in items.into_iter().enumerate() {
                let origin = Origin::JsonElement(i + 1);
                let text = match item {
                    Value::Number(n) => n.to_string(),
                    Value::String(s) => s,
                    other => {
                        return Err(err(
                            Some(origin),
                            format!("expected a number, found {other}"),
                        ))
                    }
                };
                coefficients.push(text);
                origins.push(origin);
            }
        } else {
            for (i, line) in stripped.iter().enumerate() {
                for token in line
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                {
                    coefficients.push(token.to_string());
                    origins.push(Origin::Line(i + 1));
                }
            }
        }
        if coefficients.is_empty() {
            return Err(err(None, "no coefficients".into()));
        }
        Ok(StateFile {
            name: name.to_string(),
            coefficients,
            origins,
            mode,
        })
    }

    /// Exact probabilities: parsed, squared in amplitude mode, and rescaled
    /// by their exact sum when `normalize` is set.
    pub fn probabilities(&self, normalize: bool) -> Result<Vec<Rational>, InputError> {
        let err = |origin, message: String| InputError {
            name: self.name.clone(),
            origin,
            message,
        };
        let mut probs = Vec::with_capacity(self.coefficients.len());
        for (text, &origin) in self.coefficients.iter().zip(&self.origins) {
            let x = parse_decimal(text).map_err(|e| err(Some(origin), e.to_string()))?;
            probs.push(match self.mode {
                Mode::Probabilities => x,
                Mode::Amplitudes => &x * &x,
            });
        }
        if normalize {
            let sum: Rational = probs.iter().sum();
            if sum.is_zero() {
                return Err(err(None, "cannot normalize: coefficients sum to 0".into()));
            }
            if !sum.is_one() {
                for p in &mut probs {
                    *p /= &sum;
                }
            }
        }
        Ok(probs)
    }

    pub fn spectrum(&self, normalize: bool) -> Result<SchmidtSpectrum, InputError> {
        let probs = self.probabilities(normalize)?;
        make_spectrum(&probs).map_err(|e| {
            let origin = match &e {
                Error::NegativeEntry { index, .. } => Some(self.origins[*index]),
                _ => None,
            };
            let hint = match e {
                Error::SumNotOne { .. } => " (use --normalize to rescale)",
                _ => "",
            };
            InputError {
                name: self.name.clone(),
                origin,
                message: format!("{e}{hint}"),
            }
        })
    }
}
