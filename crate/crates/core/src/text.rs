//! Line-oriented tokenizer shared by every text format.
//!
//! Blank lines are skipped and `#` starts a comment that runs to the end of
//! the line. Headers are a keyword followed by `key=value` pairs in a fixed
//! order, e.g. `graph n=4 m=3`.

use std::iter::Peekable;
use std::str::FromStr;

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based line number; 0 means end of input.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

#[derive(Clone, Debug)]
pub struct Line<'a> {
    pub number: usize,
    pub tokens: Vec<&'a str>,
}

impl<'a> Line<'a> {
    pub fn keyword(&self) -> &'a str {
        self.tokens[0]
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.number, message)
    }

    /// Parses `keyword k1=v1 k2=v2 ...` with exactly the given keys in order.
    pub fn header(&self, keyword: &str, keys: &[&str]) -> Result<Vec<usize>, ParseError> {
        if self.keyword() != keyword {
            return Err(self.error(format!("expected `{keyword}` header, found `{}`", self.keyword())));
        }
        if self.tokens.len() != keys.len() + 1 {
            return Err(self.error(format!(
                "`{keyword}` header takes {} fields: {}",
                keys.len(),
                keys.iter().map(|k| format!("{k}=<n>")).collect::<Vec<_>>().join(" ")
            )));
        }
        keys.iter()
            .zip(&self.tokens[1..])
            .map(|(key, tok)| {
                let value = tok
                    .strip_prefix(key)
                    .and_then(|rest| rest.strip_prefix('='))
                    .ok_or_else(|| self.error(format!("expected `{key}=<n>`, found `{tok}`")))?;
                value
                    .parse::<usize>()
                    .map_err(|_| self.error(format!("`{key}` must be a non-negative integer, found `{value}`")))
            })
            .collect()
    }

    /// Parses every token from `skip` on as a number.
    pub fn numbers<T: FromStr>(&self, skip: usize) -> Result<Vec<T>, ParseError> {
        self.tokens[skip..]
            .iter()
            .map(|tok| tok.parse::<T>().map_err(|_| self.error(format!("`{tok}` is not a valid integer"))))
            .collect()
    }
}

/// Iterator over the meaningful lines of a document.
pub struct Lines<'a> {
    inner: Peekable<Box<dyn Iterator<Item = Line<'a>> + 'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    pub fn new(src: &'a str) -> Self {
        let iter: Box<dyn Iterator<Item = Line<'a>> + 'a> = Box::new(src.lines().enumerate().filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = content.split_whitespace().collect();
            (!tokens.is_empty()).then_some(Line { number: i + 1, tokens })
        }));
        Lines { inner: iter.peekable(), last: 0 }
    }

    pub fn next_line(&mut self) -> Option<Line<'a>> {
        let line = self.inner.next()?;
        self.last = line.number;
        Some(line)
    }

    pub fn peek_keyword(&mut self) -> Option<&'a str> {
        self.inner.peek().map(|l| l.tokens[0])
    }

    /// Next line, or an end-of-input error mentioning what was expected.
    pub fn expect(&mut self, what: &str) -> Result<Line<'a>, ParseError> {
        let last = self.last;
        self.next_line()
            .ok_or_else(|| ParseError::new(last + 1, format!("unexpected end of input, expected {what}")))
    }

    pub fn expect_end(&mut self) -> Result<(), ParseError> {
        match self.next_line() {
            None => Ok(()),
            Some(line) => Err(line.error(format!("unexpected trailing content `{}`", line.tokens.join(" ")))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_and_comments() {
        let mut lines = Lines::new("# top\n\ngraph n=3 m=1 # trailing\ne 1 2\n");
        let h = lines.next_line().unwrap();
        assert_eq!(h.number, 3);
        assert_eq!(h.header("graph", &["n", "m"]).unwrap(), vec![3, 1]);
        let e = lines.next_line().unwrap();
        assert_eq!(e.numbers::<usize>(1).unwrap(), vec![1, 2]);
        assert!(lines.expect_end().is_ok());
    }

    #[test]
    fn header_errors_are_positioned() {
        let mut lines = Lines::new("graph n=3 k=1");
        let err = lines.next_line().unwrap().header("graph", &["n", "m"]).unwrap_err();
        assert_eq!(err.line, 1);
        let mut lines = Lines::new("graph n=x m=1");
        assert!(lines.next_line().unwrap().header("graph", &["n", "m"]).is_err());
    }
}
