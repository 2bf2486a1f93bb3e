//! Line-oriented tokenizer shared by the input formats. Blank lines and
//! comments are skipped; every token keeps its 1-based line and column so
//! parse errors can point at it.

use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};

pub(crate) struct Line<'a> {
    pub no: usize,
    pub tokens: Vec<(usize, &'a str)>,
}

pub(crate) struct Source<'a> {
    pub label: &'a str,
    pub lines: Vec<Line<'a>>,
    last_line: usize,
}

impl<'a> Source<'a> {
    /// `comment` reports whether a (trimmed) line is a whole-line comment;
    /// `#` always starts a comment.
    pub fn new(label: &'a str, text: &'a str, comment: impl Fn(&str) -> bool) -> Self {
        let mut lines = Vec::new();
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            last_line = i + 1;
            let body = raw.split('#').next().unwrap_or("");
            if body.trim().is_empty() || comment(body.trim_start()) {
                continue;
            }
            let mut tokens = Vec::new();
            let mut start = None;
            for (j, ch) in body.char_indices() {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(j),
                    (true, Some(s)) => {
                        tokens.push((s + 1, &body[s..j]));
                        start = None;
                    }
                    _ => {}
                }
            }
            if let Some(s) = start {
                tokens.push((s + 1, &body[s..]));
            }
            lines.push(Line { no: i + 1, tokens });
        }
        Source {
            label,
            lines,
            last_line,
        }
    }

    pub fn error(&self, line: usize, column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            path: self.label.to_string(),
            line,
            column,
            message: message.into(),
        }
    }

    pub fn eof(&self, message: impl Into<String>) -> Error {
        self.error(self.last_line + 1, 1, message)
    }

    pub fn field<T: FromStr>(&self, line: &Line<'_>, idx: usize, what: &str) -> Result<T> {
        match line.tokens.get(idx) {
            Some(&(col, tok)) => tok
                .parse()
                .map_err(|_| self.error(line.no, col, format!("invalid {what} {tok:?}"))),
            None => {
                let col = line.tokens.last().map(|&(c, t)| c + t.len()).unwrap_or(1);
                Err(self.error(line.no, col, format!("missing {what}")))
            }
        }
    }

    pub fn expect_len(&self, line: &Line<'_>, min: usize, max: usize) -> Result<()> {
        let k = line.tokens.len();
        if k < min {
            let col = line.tokens.last().map(|&(c, t)| c + t.len()).unwrap_or(1);
            return Err(self.error(line.no, col, format!("expected {min} fields, found {k}")));
        }
        if k > max {
            return Err(self.error(line.no, line.tokens[max].0, format!("unexpected field (at most {max})")));
        }
        Ok(())
    }
}

pub(crate) fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

pub(crate) fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::io(path, e))
}
