//! The matrix text format shared by every file the crate reads or writes:
//!
//! ```text
//! q rows cols
//! e e e ...
//! ```
//!
//! with one line per row of space-separated element indices. Blank lines and
//! lines starting with `#` are ignored by the reader.

use std::fmt::Write;

use crate::gf::Elem;
use crate::linalg::Mat;
use crate::{Error, Result};

pub fn write_matrix(out: &mut String, q: u32, m: &Mat) {
    writeln!(out, "{q} {} {}", m.rows(), m.cols()).unwrap();
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
}

pub fn matrix_to_string(q: u32, m: &Mat) -> String {
    let mut s = String::new();
    write_matrix(&mut s, q, m);
    s
}

/// Line cursor over a text document, skipping blanks and comments and
/// remembering line numbers for error messages.
pub struct TextReader<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> TextReader<'a> {
    pub fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        TextReader { lines, pos: 0 }
    }

    pub fn is_done(&self) -> bool {
        self.pos >= self.lines.len()
    }

    pub fn line_no(&self) -> usize {
        self.lines
            .get(self.pos)
            .or(self.lines.last())
            .map_or(0, |l| l.0)
    }

    pub fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line_no(),
            msg: msg.into(),
        }
    }

    pub fn peek(&self) -> Option<&'a str> {
        self.lines.get(self.pos).map(|l| l.1)
    }

    pub fn next_line(&mut self) -> Result<&'a str> {
        let l = self
            .lines
            .get(self.pos)
            .ok_or_else(|| self.error("unexpected end of input"))?;
        self.pos += 1;
        Ok(l.1)
    }

    /// Reads a line of the form `key value...` and returns the value part.
    pub fn expect_key(&mut self, key: &str) -> Result<&'a str> {
        let line = self.next_line()?;
        match line.split_once(char::is_whitespace) {
            Some((k, v)) if k == key => Ok(v.trim()),
            None if line == key => Ok(""),
            _ => {
                self.pos -= 1;
                Err(self.error(format!("expected `{key}`, found {line:?}")))
            }
        }
    }

    pub fn parse_numbers<T: std::str::FromStr>(&self, line: &str) -> Result<Vec<T>> {
        line.split_whitespace()
            .map(|t| {
                t.parse::<T>()
                    .map_err(|_| self.error(format!("bad number {t:?}")))
            })
            .collect()
    }

    /// Reads one matrix in the text format, returning its `q` and entries.
    pub fn read_matrix(&mut self) -> Result<(u32, Mat)> {
        let header = self.next_line()?;
        let h: Vec<usize> = self.parse_numbers(header)?;
        if h.len() != 3 {
            self.pos -= 1;
            return Err(self.error("matrix header must be `q rows cols`"));
        }
        let (q, rows, cols) = (h[0] as u32, h[1], h[2]);
        let mut data = Vec::with_capacity(rows * cols);
        for _ in 0..rows {
            let line = self.next_line()?;
            let row: Vec<Elem> = self.parse_numbers(line)?;
            if row.len() != cols {
                self.pos -= 1;
                return Err(self.error(format!("expected {cols} entries, found {}", row.len())));
            }
            if let Some(bad) = row.iter().find(|&&x| x >= q) {
                self.pos -= 1;
                return Err(self.error(format!("entry {bad} is not an element of GF({q})")));
            }
            data.extend(row);
        }
        Ok((q, Mat::from_vec(rows, cols, data)?))
    }
}

pub fn parse_matrix(text: &str) -> Result<(u32, Mat)> {
    TextReader::new(text).read_matrix()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let m = Mat::from_rows(&[[0, 1, 2], [2, 2, 0]]).unwrap();
        let s = matrix_to_string(3, &m);
        assert_eq!(s, "3 2 3\n0 1 2\n2 2 0\n");
        assert_eq!(parse_matrix(&s).unwrap(), (3, m));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_matrix("2 1 2\n0 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_matrix("2 2 2\n0 1\n").is_err());
        assert!(parse_matrix("2 1\n").is_err());
        let (_, m) = parse_matrix("# comment\n\n2 0 4\n").unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 4));
    }
}
