//! Plain-text code files.
//!
//! ```text
//! # [7,4] Hamming code
//! linear 2 4 7
//! 1 0 0 0 0 1 1
//! 0 1 0 0 1 0 1
//! 0 0 1 0 1 1 0
//! 0 0 0 1 1 1 1
//! ```
//!
//! A non-linear code lists its words instead: `nonlinear <q> <n> <M>` followed
//! by `M` rows. Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;
use uedetect_core::{CodeSize, CodewordList, FieldMatrix, GeneratorMatrix, PrimeModulus};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeFile {
    Linear(GeneratorMatrix),
    Nonlinear(CodewordList),
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("empty code file: missing header line")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("expected {expected} rows after the header, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("invalid code: {0}")]
    Code(#[from] uedetect_core::Error),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_int(line: usize, what: &str, token: &str) -> Result<u64, ParseError> {
    token.parse().map_err(|_| {
        syntax(
            line,
            format!("{what} must be a non-negative integer, got {token:?}"),
        )
    })
}

enum Kind {
    Linear,
    Nonlinear,
}

impl CodeFile {
    pub fn read(path: &Path) -> Result<Self, ParseError> {
        let text = std::fs::read_to_string(path).map_err(|source| ParseError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
        let tokens: Vec<&str> = header.split_whitespace().collect();
        let kind = match tokens[0] {
            "linear" => Kind::Linear,
            "nonlinear" => Kind::Nonlinear,
            other => {
                return Err(syntax(
                    hline,
                    format!("header must start with \"linear\" or \"nonlinear\", got {other:?}"),
                ))
            }
        };
        if tokens.len() != 4 {
            return Err(syntax(hline, "header needs exactly three integers"));
        }
        let q = parse_int(hline, "q", tokens[1])?;
        let modulus = PrimeModulus::new(q).map_err(|e| syntax(hline, e.to_string()))?;
        let (n, rows) = match kind {
            Kind::Linear => (
                parse_int(hline, "n", tokens[3])?,
                parse_int(hline, "k", tokens[2])?,
            ),
            Kind::Nonlinear => (
                parse_int(hline, "n", tokens[2])?,
                parse_int(hline, "M", tokens[3])?,
            ),
        };
        if n == 0 {
            return Err(syntax(hline, "length n must be at least 1"));
        }
        let (n, expected) = (n as usize, rows as usize);

        let mut data = Vec::new();
        let mut found = 0;
        for (line, row) in lines {
            if found == expected {
                return Err(syntax(
                    line,
                    format!("unexpected row beyond the {expected} declared"),
                ));
            }
            let before = data.len();
            for token in row.split_whitespace() {
                let v = parse_int(line, "symbol", token)?;
                if v >= q {
                    return Err(syntax(line, format!("symbol {v} is outside 0..{q}")));
                }
                data.push(v as u32);
            }
            if data.len() - before != n {
                return Err(syntax(
                    line,
                    format!("row has {} symbols, expected {n}", data.len() - before),
                ));
            }
            found += 1;
        }
        if found != expected {
            return Err(ParseError::RowCount { expected, found });
        }

        Ok(match kind {
            Kind::Linear => {
                let g = FieldMatrix::new(modulus, expected, n, data)?;
                CodeFile::Linear(GeneratorMatrix::new(g)?)
            }
            Kind::Nonlinear => {
                let words: Vec<&[u32]> = data.chunks_exact(n).collect();
                CodeFile::Nonlinear(CodewordList::new(modulus, n, &words)?)
            }
        })
    }

    /// Canonical text form; [`CodeFile::parse`] reads it back unchanged.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let rows: Vec<&[u32]> = match self {
            CodeFile::Linear(g) => {
                writeln!(out, "linear {} {} {}", g.q(), g.k(), g.n()).unwrap();
                g.matrix().row_iter().collect()
            }
            CodeFile::Nonlinear(c) => {
                writeln!(out, "nonlinear {} {} {}", c.q(), c.n(), c.m()).unwrap();
                c.words().collect()
            }
        };
        for row in rows {
            let symbols: Vec<String> = row.iter().map(u32::to_string).collect();
            out.push_str(&symbols.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn q(&self) -> u32 {
        match self {
            CodeFile::Linear(g) => g.q(),
            CodeFile::Nonlinear(c) => c.q(),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            CodeFile::Linear(g) => g.n(),
            CodeFile::Nonlinear(c) => c.n(),
        }
    }

    pub fn size(&self) -> CodeSize {
        match self {
            CodeFile::Linear(g) => g.size(),
            CodeFile::Nonlinear(c) => c.size(),
        }
    }
}
