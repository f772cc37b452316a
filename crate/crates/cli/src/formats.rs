//! Text formats for hypergraphs and multigraphs.
//!
//! Hypergraph files: optional `#` comment lines, a header `k n m`, then
//! exactly `m` lines of `k` strictly increasing 0-based vertex indices.
//! Multigraph files: optional `#` comments, a header `n p`, then `p` lines
//! `u v mult` with `u < v` and `mult >= 1`. Writers are deterministic:
//! hypergraph edges sorted lexicographically, multigraph pairs likewise.
//! Content after the last required line is ignored, so auxiliary annotations
//! (such as the witness map emitted by `reduce`) can ride along.

use std::fmt;

use hypertau_core::multigraph::Multigraph;
use hypertau_core::Hypergraph;

/// Parse failure with a 1-based line and column of the offending token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

fn fail<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, column, message: message.into() })
}

/// Lines that carry data: 1-based line number plus content, with comments
/// and blank lines dropped.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        })
}

struct Tokens<'a> {
    line: usize,
    iter: core::str::SplitAsciiWhitespace<'a>,
    raw: &'a str,
}

impl<'a> Tokens<'a> {
    fn new(line: usize, raw: &'a str) -> Tokens<'a> {
        Tokens { line, iter: raw.split_ascii_whitespace(), raw }
    }

    fn column_of(&self, token: &str) -> usize {
        let base = self.raw.as_ptr() as usize;
        let off = token.as_ptr() as usize - base;
        off + 1
    }

    fn next_usize(&mut self, what: &str) -> Result<(usize, usize), ParseError> {
        match self.iter.next() {
            None => fail(self.line, self.raw.len() + 1, format!("missing {what}")),
            Some(tok) => {
                let column = self.column_of(tok);
                match tok.parse::<usize>() {
                    Ok(v) => Ok((v, column)),
                    Err(_) => fail(self.line, column, format!("invalid {what}: `{tok}`")),
                }
            }
        }
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        match self.iter.next() {
            None => Ok(()),
            Some(tok) => {
                let column = self.column_of(tok);
                fail(self.line, column, format!("unexpected trailing token `{tok}`"))
            }
        }
    }
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let mut lines = data_lines(text);
    let Some((lineno, header)) = lines.next() else {
        return fail(1, 1, "missing header line `k n m`");
    };
    let mut toks = Tokens::new(lineno, header);
    let (k, _) = toks.next_usize("uniformity k")?;
    let (n, _) = toks.next_usize("vertex count n")?;
    let (m, _) = toks.next_usize("edge count m")?;
    toks.expect_end()?;
    if k == 0 && m > 0 {
        return fail(lineno, 1, "k = 0 requires m = 0");
    }
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(m);
    let mut last_line = lineno;
    for _ in 0..m {
        let Some((lineno, raw)) = lines.next() else {
            return fail(last_line, 1, format!("expected {m} edge lines, found {}", edges.len()));
        };
        last_line = lineno;
        let mut toks = Tokens::new(lineno, raw);
        let mut edge = Vec::with_capacity(k);
        for _ in 0..k {
            let (v, column) = toks.next_usize("vertex index")?;
            if v >= n {
                return fail(lineno, column, format!("vertex index {v} out of range (n = {n})"));
            }
            if let Some(&prev) = edge.last() {
                if v == prev {
                    return fail(lineno, column, format!("repeated vertex {v} within the edge"));
                }
                if v < prev {
                    return fail(lineno, column, "vertex indices must be strictly increasing");
                }
            }
            edge.push(v);
        }
        toks.expect_end()?;
        edges.push(edge);
    }
    Hypergraph::new(n, edges).map_err(|e| ParseError {
        line: last_line,
        column: 1,
        message: e.to_string(),
    })
}

/// Deterministic writer: header `k n m`, edges sorted lexicographically.
/// The hypergraph must be uniform (`k = 0` only for an edgeless one).
pub fn write_hypergraph(h: &Hypergraph) -> Result<String, hypertau_core::Error> {
    let k = if h.num_edges() == 0 {
        0
    } else {
        h.uniformity()
            .ok_or(hypertau_core::Error::ContractViolation("file format requires a uniform hypergraph"))?
    };
    let mut edges: Vec<&Vec<usize>> = h.edges().iter().collect();
    edges.sort();
    let mut out = format!("{} {} {}\n", k, h.num_vertices(), h.num_edges());
    for edge in edges {
        let mut first = true;
        for v in edge {
            if !first {
                out.push(' ');
            }
            out.push_str(&v.to_string());
            first = false;
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn parse_multigraph(text: &str) -> Result<Multigraph, ParseError> {
    let mut lines = data_lines(text);
    let Some((lineno, header)) = lines.next() else {
        return fail(1, 1, "missing header line `n p`");
    };
    let mut toks = Tokens::new(lineno, header);
    let (n, _) = toks.next_usize("vertex count n")?;
    let (p, _) = toks.next_usize("pair count p")?;
    toks.expect_end()?;
    let mut g = Multigraph::new(n);
    let mut seen: Vec<(usize, usize)> = Vec::new();
    let mut last_line = lineno;
    for i in 0..p {
        let Some((lineno, raw)) = lines.next() else {
            return fail(last_line, 1, format!("expected {p} pair lines, found {i}"));
        };
        last_line = lineno;
        let mut toks = Tokens::new(lineno, raw);
        let (u, ucol) = toks.next_usize("vertex index")?;
        let (v, vcol) = toks.next_usize("vertex index")?;
        let (mult, mcol) = toks.next_usize("multiplicity")?;
        toks.expect_end()?;
        if u >= v {
            return fail(lineno, vcol, format!("pairs must satisfy u < v, got {u} {v}"));
        }
        if v >= n {
            return fail(lineno, vcol, format!("vertex index {v} out of range (n = {n})"));
        }
        if mult == 0 {
            return fail(lineno, mcol, "multiplicity must be at least 1");
        }
        if seen.contains(&(u, v)) {
            return fail(lineno, ucol, format!("duplicate pair {u} {v}"));
        }
        seen.push((u, v));
        g.add(u, v, mult).map_err(|e| ParseError {
            line: lineno,
            column: ucol,
            message: e.to_string(),
        })?;
    }
    Ok(g)
}

/// Deterministic writer: header `n p`, pairs sorted lexicographically.
pub fn write_multigraph(g: &Multigraph) -> String {
    let mut out = format!("{} {}\n", g.num_vertices(), g.num_pairs());
    for (u, v, mult) in g.pairs() {
        out.push_str(&format!("{u} {v} {mult}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use hypertau_core::extremal::{gen_e, gen_t};
    use hypertau_core::multigraph::make_shannon;

    #[test]
    fn hypergraph_round_trip() {
        for k in 2..=12 {
            for h in [gen_e(k).unwrap(), gen_t(k).unwrap()] {
                let text = write_hypergraph(&h).unwrap();
                let back = parse_hypergraph(&text).unwrap();
                assert_eq!(back, h);
                assert_eq!(write_hypergraph(&back).unwrap(), text);
            }
        }
    }

    #[test]
    fn hypergraph_accepts_comments_and_empty() {
        let h = parse_hypergraph("# a triangle\n2 3 3\n0 1\n# middle comment\n0 2\n1 2\n").unwrap();
        assert_eq!(h.num_edges(), 3);
        let empty = parse_hypergraph("0 0 0\n").unwrap();
        assert_eq!(empty, Hypergraph::empty());
        // isolated vertices are representable
        let iso = parse_hypergraph("0 4 0\n").unwrap();
        assert_eq!(iso.num_vertices(), 4);
    }

    #[test]
    fn hypergraph_diagnostics() {
        let err = parse_hypergraph("2 3 1\n0 0\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
        assert!(err.message.contains("repeated"));

        let err = parse_hypergraph("2 3 1\n1 0\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
        assert!(err.message.contains("strictly increasing"));

        let err = parse_hypergraph("2 3 1\n0 7\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
        assert!(err.message.contains("out of range"));

        let err = parse_hypergraph("3 4 2\n0 1 2\n").unwrap_err();
        assert!(err.message.contains("expected 2 edge lines"));

        let err = parse_hypergraph("2 3 1\n0 1 2\n").unwrap_err();
        assert!(err.message.contains("trailing"));

        let err = parse_hypergraph("2 x 1\n").unwrap_err();
        assert_eq!((err.line, err.column), (1, 3));
    }

    #[test]
    fn multigraph_round_trip() {
        for d in 2..=9 {
            let g = make_shannon(d).unwrap();
            let text = write_multigraph(&g);
            assert_eq!(parse_multigraph(&text).unwrap(), g);
        }
    }

    #[test]
    fn multigraph_diagnostics() {
        let err = parse_multigraph("3 1\n1 1 2\n").unwrap_err();
        assert!(err.message.contains("u < v"));
        let err = parse_multigraph("3 1\n0 1 0\n").unwrap_err();
        assert!(err.message.contains("at least 1"));
        let err = parse_multigraph("3 2\n0 1 1\n0 1 2\n").unwrap_err();
        assert!(err.message.contains("duplicate"));
        let err = parse_multigraph("3 1\n0 5 1\n").unwrap_err();
        assert!(err.message.contains("out of range"));
    }

    #[test]
    fn trailing_annotations_are_ignored() {
        let g = parse_multigraph("2 1\n0 1 2\n# witness\n0 : 1\n1 : 0\n").unwrap();
        assert_eq!(g.mu(0, 1), 2);
    }
}
