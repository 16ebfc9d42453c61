use super::Graph;
use crate::error::{Error, Result};
use std::fmt::Write;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn two_numbers(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_ascii_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| parse_err(lineno, "expected two integers"))?;
        tok.parse()
            .map_err(|_| parse_err(lineno, format!("not an integer: {tok:?}")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(parse_err(lineno, "trailing tokens"));
    }
    Ok(pair)
}

impl Graph {
    /// Parses the `n m` header followed by `m` edge lines.
    ///
    /// ```
    /// use hunters_core::Graph;
    /// let g = Graph::parse("3 2\n0 1\n1 2\n").unwrap();
    /// assert_eq!((g.n(), g.m()), (3, 2));
    /// ```
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (lineno, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
        let (n, m) = two_numbers(header, lineno)?;
        let mut g = Graph::new(n);
        let mut seen = 0;
        for (lineno, line) in lines {
            let (u, v) = two_numbers(line, lineno)?;
            if seen == m {
                return Err(parse_err(lineno, format!("more than {m} edges")));
            }
            g.add_edge(u, v).map_err(|e| parse_err(lineno, e.to_string()))?;
            seen += 1;
        }
        if seen != m {
            return Err(parse_err(lineno, format!("header announces {m} edges, found {seen}")));
        }
        Ok(g)
    }

    /// Serializes in the text format accepted by [`Graph::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    /// Graphviz rendering with vertex names equal to ids.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n() {
            writeln!(out, "  {v};").unwrap();
        }
        for (u, v) in self.edges() {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}
