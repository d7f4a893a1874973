//! Line-oriented text formats for braces and solutions.
//!
//! ```text
//! # optional comments
//! n 3
//! sigma
//! 0 1 2
//! 0 1 2
//! 0 1 2
//! ```
//!
//! A brace file has `add` and `mul` blocks instead of `sigma`. Entries are
//! 0-based, rows are whitespace separated, and element 0 is neutral in both
//! tables. Everything after `#` on a line is ignored.

use std::fmt::Write as _;

use crate::brace::{validate_brace, BraceError, FiniteBrace};
use crate::solution::{validate_solution, FiniteSolution, SolutionError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error(transparent)]
    Solution(#[from] SolutionError),
    #[error(transparent)]
    Brace(#[from] BraceError),
}

impl FormatError {
    pub fn is_syntax(&self) -> bool {
        matches!(self, FormatError::Syntax { .. })
    }
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokens(text: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut rest = body;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let len = rest[start..].find(char::is_whitespace).unwrap_or(rest.len() - start);
            out.push(Token {
                text: &rest[start..start + len],
                line: i + 1,
                column: body[..offset + start].chars().count() + 1,
            });
            offset += start + len;
            rest = &rest[start + len..];
        }
    }
    out
}

struct Reader<'a> {
    toks: Vec<Token<'a>>,
    pos: usize,
    end: (usize, usize),
}

impl<'a> Reader<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text.lines().count();
        let last = text.lines().last().map_or(0, |l| l.chars().count());
        Reader { toks: tokens(text), pos: 0, end: (lines.max(1), last + 1) }
    }

    fn error_here(&self, message: impl Into<String>) -> FormatError {
        let (line, column) = self.toks.get(self.pos).map_or(self.end, |t| (t.line, t.column));
        FormatError::Syntax { line, column, message: message.into() }
    }

    fn keyword(&mut self, word: &str) -> Result<(), FormatError> {
        match self.toks.get(self.pos) {
            Some(t) if t.text == word => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => Err(self.error_here(format!("expected `{word}`, found `{}`", t.text))),
            None => Err(self.error_here(format!("expected `{word}`, found end of file"))),
        }
    }

    fn number(&mut self, bound: Option<usize>) -> Result<usize, FormatError> {
        let Some(t) = self.toks.get(self.pos) else {
            return Err(self.error_here("expected an integer, found end of file"));
        };
        let v: usize = t
            .text
            .parse()
            .map_err(|_| self.error_here(format!("expected a non-negative integer, found `{}`", t.text)))?;
        if let Some(b) = bound {
            if v >= b {
                return Err(self.error_here(format!("entry {v} is out of range 0..{b}")));
            }
        }
        self.pos += 1;
        Ok(v)
    }

    /// `n` rows of `n` entries below `n`, each row on its own line.
    fn table(&mut self, n: usize) -> Result<Vec<Vec<usize>>, FormatError> {
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let line = self.toks.get(self.pos).map(|t| t.line);
            let mut row = Vec::with_capacity(n);
            for _ in 0..n {
                if self.toks.get(self.pos).map(|t| t.line) != line {
                    return Err(self.error_here(format!("row has {} entries, expected {n}", row.len())));
                }
                row.push(self.number(Some(n))?);
            }
            if line.is_some() && self.toks.get(self.pos).map(|t| t.line) == line {
                return Err(self.error_here(format!("row has more than {n} entries")));
            }
            rows.push(row);
        }
        Ok(rows)
    }

    fn size(&mut self) -> Result<usize, FormatError> {
        self.keyword("n")?;
        let n = self.number(None)?;
        if n == 0 {
            self.pos -= 1;
            return Err(self.error_here("n must be positive"));
        }
        Ok(n)
    }

    fn finish(&self) -> Result<(), FormatError> {
        match self.toks.get(self.pos) {
            None => Ok(()),
            Some(t) => Err(self.error_here(format!("unexpected trailing `{}`", t.text))),
        }
    }
}

pub fn parse_solution_rows(text: &str) -> Result<Vec<Vec<usize>>, FormatError> {
    let mut r = Reader::new(text);
    let n = r.size()?;
    r.keyword("sigma")?;
    let rows = r.table(n)?;
    r.finish()?;
    Ok(rows)
}

pub fn parse_brace_rows(text: &str) -> Result<(Vec<Vec<usize>>, Vec<Vec<usize>>), FormatError> {
    let mut r = Reader::new(text);
    let n = r.size()?;
    r.keyword("add")?;
    let add = r.table(n)?;
    r.keyword("mul")?;
    let mul = r.table(n)?;
    r.finish()?;
    Ok((add, mul))
}

pub fn parse_solution(text: &str) -> Result<FiniteSolution, FormatError> {
    Ok(validate_solution(&parse_solution_rows(text)?)?)
}

pub fn parse_brace(text: &str) -> Result<FiniteBrace, FormatError> {
    let (add, mul) = parse_brace_rows(text)?;
    Ok(validate_brace(&add, &mul)?)
}

fn write_table(out: &mut String, rows: &[Vec<usize>]) {
    for r in rows {
        let line: Vec<String> = r.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
}

fn write_comments(out: &mut String, comments: &[String]) {
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
}

pub fn write_solution(s: &FiniteSolution, comments: &[String]) -> String {
    let mut out = String::new();
    write_comments(&mut out, comments);
    let _ = writeln!(out, "n {}\nsigma", s.size());
    write_table(&mut out, &s.rows());
    out
}

pub fn write_brace(b: &FiniteBrace, comments: &[String]) -> String {
    let mut out = String::new();
    write_comments(&mut out, comments);
    let _ = writeln!(out, "n {}\nadd", b.order());
    write_table(&mut out, &b.add_rows());
    out.push_str("mul\n");
    write_table(&mut out, &b.mul_rows());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{six_point_solution, sym3_brace};

    #[test]
    fn round_trips() {
        let s = six_point_solution();
        let text = write_solution(&s, &["six points".into()]);
        assert_eq!(parse_solution(&text).unwrap(), s);
        let b = sym3_brace();
        assert_eq!(parse_brace(&write_brace(&b, &[])).unwrap(), b);
    }

    #[test]
    fn comments_and_spacing() {
        let text = "# two points\n  n 2 # size\nsigma\n\n 1 0\n1   0\n";
        assert_eq!(parse_solution_rows(text).unwrap(), vec![vec![1, 0], vec![1, 0]]);
    }

    fn position(e: FormatError) -> (usize, usize) {
        match e {
            FormatError::Syntax { line, column, .. } => (line, column),
            other => panic!("expected a syntax error, got {other}"),
        }
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(position(parse_solution("n 2\nsigma\n0 1\n0 x\n").unwrap_err()), (4, 3));
        assert_eq!(position(parse_solution("n 2\nsigma\n0 1\n0\n").unwrap_err()), (4, 2));
        assert_eq!(position(parse_solution("n 2\nsigma\n0 1 1\n0 1\n").unwrap_err()), (3, 5));
        assert_eq!(position(parse_solution("n 2\nsigma\n0 2\n0 1\n").unwrap_err()), (3, 3));
        assert_eq!(position(parse_solution("n 2\nsgma\n").unwrap_err()), (2, 1));
        assert_eq!(position(parse_brace("n 1\nadd\n0\n").unwrap_err()), (3, 2));
        assert_eq!(position(parse_solution("n 0\n").unwrap_err()), (1, 3));
        assert_eq!(position(parse_solution("n 1\nsigma\n0\nextra\n").unwrap_err()), (4, 1));
    }

    #[test]
    fn invalid_structures_are_not_syntax_errors() {
        let e = parse_solution("n 2\nsigma\n0 1\n1 0\n").unwrap_err();
        assert!(!e.is_syntax(), "{e}");
        let e = parse_brace("n 2\nadd\n0 1\n1 0\nmul\n0 1\n0 1\n").unwrap_err();
        assert!(!e.is_syntax(), "{e}");
    }
}
