//! The plain-text exchange format shared by every command.
//!
//! Scalars are `-inf`, `inf`, an optionally signed integer, or `p/q`. A
//! matrix is a header line `rows cols` followed by `rows` lines of `cols`
//! whitespace-separated scalars; vectors are `1 x n` or `n x 1` matrices.
//! Blank lines and lines starting with `#` are ignored by the reader, so
//! several objects can be concatenated in one file.

use std::str::FromStr;

use crate::error::{Result, TropError};
use crate::linalg::TropMatrix;
use crate::scalar::TropScalar;

/// Parses whitespace-separated scalars from a single line.
pub fn parse_entries(line: &str) -> Result<Vec<TropScalar>> {
    tokens(line)
        .map(|(col, tok)| {
            tok.parse()
                .map_err(|msg: String| TropError::parse(1, col, msg))
        })
        .collect()
}

/// Whitespace-separated tokens paired with their 1-based column.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return None;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let tok = &trimmed[..end];
        let col = line[..offset].chars().count() + 1;
        offset += end;
        rest = &trimmed[end..];
        Some((col, tok))
    })
}

/// Line-oriented cursor over a text document.
pub struct Reader<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
    last_line: usize,
}

impl<'a> Reader<'a> {
    pub fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| {
                let t = l.trim();
                !t.is_empty() && !t.starts_with('#')
            })
            .collect();
        Reader {
            lines,
            pos: 0,
            last_line: text.lines().count().max(1),
        }
    }

    pub fn is_done(&self) -> bool {
        self.pos >= self.lines.len()
    }

    pub fn peek(&self) -> Option<&'a str> {
        self.lines.get(self.pos).map(|(_, l)| l.trim())
    }

    /// Next nonblank line with its line number.
    pub fn next_line(&mut self, what: &str) -> Result<(usize, &'a str)> {
        match self.lines.get(self.pos) {
            Some(&(no, l)) => {
                self.pos += 1;
                Ok((no, l))
            }
            None => Err(TropError::parse(
                self.last_line,
                1,
                format!("unexpected end of input, expected {what}"),
            )),
        }
    }

    /// Reads one line and splits it into tokens.
    pub fn next_tokens(&mut self, what: &str) -> Result<(usize, Vec<(usize, &'a str)>)> {
        let (no, line) = self.next_line(what)?;
        Ok((no, tokens(line).collect()))
    }

    /// Consumes a line that must consist of exactly `keyword`.
    pub fn expect(&mut self, keyword: &str) -> Result<()> {
        let (no, toks) = self.next_tokens(keyword)?;
        match toks.as_slice() {
            [(_, tok)] if *tok == keyword => Ok(()),
            [(col, tok), ..] => Err(TropError::parse(
                no,
                *col,
                format!("expected `{keyword}`, found `{tok}`"),
            )),
            [] => unreachable!("blank lines are skipped"),
        }
    }

    pub fn read_scalars(&mut self, what: &str) -> Result<Vec<TropScalar>> {
        let (no, toks) = self.next_tokens(what)?;
        toks.into_iter()
            .map(|(col, tok)| scalar_at(no, col, tok))
            .collect()
    }

    pub fn read_usizes(&mut self, what: &str) -> Result<Vec<usize>> {
        let (no, toks) = self.next_tokens(what)?;
        toks.into_iter()
            .map(|(col, tok)| {
                tok.parse().map_err(|_| {
                    TropError::parse(no, col, format!("expected a count, found `{tok}`"))
                })
            })
            .collect()
    }

    pub fn read_matrix(&mut self) -> Result<TropMatrix> {
        let (no, header) = self.next_tokens("matrix header `rows cols`")?;
        let dims: Vec<usize> = header
            .iter()
            .map(|(col, tok)| {
                tok.parse::<usize>().ok().filter(|&d| d > 0).ok_or_else(|| {
                    TropError::parse(
                        no,
                        *col,
                        format!("expected a positive dimension, found `{tok}`"),
                    )
                })
            })
            .collect::<Result<_>>()?;
        let (rows, cols) = match dims.as_slice() {
            [r, c] => (*r, *c),
            _ => {
                return Err(TropError::parse(
                    no,
                    1,
                    format!(
                        "matrix header must be `rows cols`, found {} tokens",
                        dims.len()
                    ),
                ))
            }
        };
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let (no, toks) = self.next_tokens(&format!("matrix row {}", r + 1))?;
            if toks.len() != cols {
                let col = toks.get(cols).map_or(1, |(c, _)| *c);
                return Err(TropError::parse(
                    no,
                    col,
                    format!("expected {cols} entries, found {}", toks.len()),
                ));
            }
            for (col, tok) in toks {
                data.push(scalar_at(no, col, tok)?);
            }
        }
        TropMatrix::new(rows, cols, data)
    }

    pub fn finish(&self) -> Result<()> {
        match self.lines.get(self.pos) {
            None => Ok(()),
            Some(&(no, _)) => Err(TropError::parse(no, 1, "trailing content")),
        }
    }
}

fn scalar_at(line: usize, col: usize, tok: &str) -> Result<TropScalar> {
    tok.parse()
        .map_err(|msg: String| TropError::parse(line, col, msg))
}

impl FromStr for TropMatrix {
    type Err = TropError;

    fn from_str(text: &str) -> Result<Self> {
        let mut reader = Reader::new(text);
        let m = reader.read_matrix()?;
        reader.finish()?;
        Ok(m)
    }
}
