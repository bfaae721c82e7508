//! Plain-text colouring files.
//!
//! Complete colourings ("ECG 1"): a header tag line, a dimensions line
//! `n r`, then one line `u v c` per edge with 0 <= u < v < n in lexicographic
//! order and 1 <= c <= r.  Bipartite colourings ("ECGB 1") follow the same
//! shape with dimensions `m n r` and crossing edges `u v c`, 0 <= u < m and
//! m <= v < m+n, again lexicographic.  Comment lines starting with `#` are
//! allowed before the header only; canonical output writes metadata there as
//! `# key: value`.  Parsing accepts exactly the canonical edge order, so a
//! parse followed by a serialise reproduces canonical input byte for byte.

use monoconn::constructions::ConstructionReport;
use monoconn::{BipartiteColouring, ColouredCompleteGraph, Error, Result};

/// A complete-graph colouring plus its leading comment lines (the text after
/// each `#`, stored verbatim).
#[derive(Clone, Debug)]
pub struct ColouringFile {
    pub comments: Vec<String>,
    pub colouring: ColouredCompleteGraph,
}

/// A bipartite colouring plus its leading comment lines.
#[derive(Clone, Debug)]
pub struct BipartiteFile {
    pub comments: Vec<String>,
    pub colouring: BipartiteColouring,
}

/// Either file kind, as decided by the header tag.
#[derive(Clone, Debug)]
pub enum AnyFile {
    Complete(ColouringFile),
    Bipartite(BipartiteFile),
}

fn parse_error(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parameter(format!("parse: line {}: {msg}", line + 1))
}

fn meta_lookup<'a>(comments: &'a [String], key: &str) -> Option<&'a str> {
    comments.iter().find_map(|c| {
        c.trim_start()
            .strip_prefix(key)
            .and_then(|rest| rest.strip_prefix(':'))
            .map(str::trim)
    })
}

fn split3(line: &str) -> Option<(usize, usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    let c = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b, c))
}

impl ColouringFile {
    pub fn new(colouring: ColouredCompleteGraph) -> Self {
        ColouringFile { comments: Vec::new(), colouring }
    }

    /// Wrap a construction's colouring, recording its name, parameters and
    /// claimed bound as metadata comments.
    pub fn from_construction(rep: &ConstructionReport) -> Self {
        let mut file = ColouringFile::new(rep.colouring.clone());
        file.push_metadata("construction", rep.name);
        file.push_metadata(
            "parameters",
            &format!("n={} r={} k={}", rep.n, rep.r, rep.k),
        );
        file.push_metadata("claimedBound", &rep.claimed_bound.to_string());
        file
    }

    pub fn push_metadata(&mut self, key: &str, value: &str) {
        self.comments.push(format!(" {key}: {value}"));
    }

    /// First `# key: value` comment matching `key`, if any.
    pub fn metadata(&self, key: &str) -> Option<&str> {
        meta_lookup(&self.comments, key)
    }

    pub fn serialise(&self) -> String {
        let f = &self.colouring;
        let mut out = String::new();
        for c in &self.comments {
            out.push('#');
            out.push_str(c);
            out.push('\n');
        }
        out.push_str("ECG 1\n");
        out.push_str(&format!("{} {}\n", f.order(), f.colour_count()));
        for (u, v, c) in f.edges() {
            out.push_str(&format!("{u} {v} {c}\n"));
        }
        out
    }
}

impl BipartiteFile {
    pub fn new(colouring: BipartiteColouring) -> Self {
        BipartiteFile { comments: Vec::new(), colouring }
    }

    pub fn push_metadata(&mut self, key: &str, value: &str) {
        self.comments.push(format!(" {key}: {value}"));
    }

    pub fn metadata(&self, key: &str) -> Option<&str> {
        meta_lookup(&self.comments, key)
    }

    pub fn serialise(&self) -> String {
        let b = &self.colouring;
        let mut out = String::new();
        for c in &self.comments {
            out.push('#');
            out.push_str(c);
            out.push('\n');
        }
        out.push_str("ECGB 1\n");
        out.push_str(&format!(
            "{} {} {}\n",
            b.left_order(),
            b.right_order(),
            b.colour_count()
        ));
        for (u, v, c) in b.edges() {
            out.push_str(&format!("{u} {v} {c}\n"));
        }
        out
    }
}

/// Parse either file kind, strictly: canonical edge order, every edge
/// exactly once, nothing after the last edge.
pub fn parse_any(text: &str) -> Result<AnyFile> {
    let mut lines = text.lines().enumerate();
    let mut comments = Vec::new();
    let (header_line, header) = loop {
        match lines.next() {
            None => return Err(parse_error(0, "missing header line")),
            Some((_, l)) if l.starts_with('#') => comments.push(l[1..].to_string()),
            Some(found) => break found,
        }
    };
    match header {
        "ECG 1" => parse_complete(comments, header_line, lines),
        "ECGB 1" => parse_bipartite(comments, header_line, lines),
        other => Err(parse_error(
            header_line,
            format!("unrecognised header {other:?}, expected \"ECG 1\" or \"ECGB 1\""),
        )),
    }
}

/// Parse a file that must be a complete-graph colouring.
pub fn parse_complete_file(text: &str) -> Result<ColouringFile> {
    match parse_any(text)? {
        AnyFile::Complete(f) => Ok(f),
        AnyFile::Bipartite(_) => Err(Error::Parameter(
            "expected a complete-graph colouring (ECG), got a bipartite one (ECGB)".into(),
        )),
    }
}

/// Parse a file that must be a bipartite colouring.
pub fn parse_bipartite_file(text: &str) -> Result<BipartiteFile> {
    match parse_any(text)? {
        AnyFile::Bipartite(f) => Ok(f),
        AnyFile::Complete(_) => Err(Error::Parameter(
            "expected a bipartite colouring (ECGB), got a complete-graph one (ECG)".into(),
        )),
    }
}

fn dims_line<'a, I: Iterator<Item = (usize, &'a str)>>(
    lines: &mut I,
    after: usize,
    want: usize,
) -> Result<(usize, Vec<usize>)> {
    let (li, line) = lines
        .next()
        .ok_or_else(|| parse_error(after + 1, "missing dimensions line"))?;
    let fields: Vec<usize> = line
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| parse_error(li, format!("dimensions must be integers, got {line:?}")))?;
    if fields.len() != want {
        return Err(parse_error(
            li,
            format!("expected {want} dimension fields, got {}", fields.len()),
        ));
    }
    Ok((li, fields))
}

fn check_colour(li: usize, c: usize, r: usize) -> Result<()> {
    if c < 1 || c > r {
        return Err(parse_error(li, format!("colour {c} outside 1..={r}")));
    }
    Ok(())
}

fn check_done<'a, I: Iterator<Item = (usize, &'a str)>>(lines: &mut I) -> Result<()> {
    if let Some((li, l)) = lines.next() {
        return Err(parse_error(li, format!("trailing content {l:?}")));
    }
    Ok(())
}

fn parse_complete<'a, I: Iterator<Item = (usize, &'a str)>>(
    comments: Vec<String>,
    header_line: usize,
    mut lines: I,
) -> Result<AnyFile> {
    let (dims_at, dims) = dims_line(&mut lines, header_line, 2)?;
    let (n, r) = (dims[0], dims[1]);
    if n < 2 || n > 65_535 {
        return Err(parse_error(dims_at, format!("need 2 <= n <= 65535, got {n}")));
    }
    let mut colours = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            let (li, line) = lines
                .next()
                .ok_or_else(|| parse_error(dims_at + 1, format!("missing edge {u} {v}")))?;
            let (a, b, c) = split3(line)
                .ok_or_else(|| parse_error(li, format!("expected \"u v c\", got {line:?}")))?;
            if (a, b) != (u, v) {
                return Err(parse_error(
                    li,
                    format!("expected edge {u} {v} (lexicographic order), got {a} {b}"),
                ));
            }
            check_colour(li, c, r)?;
            colours.push(c as u8);
        }
    }
    check_done(&mut lines)?;
    let colouring = ColouredCompleteGraph::from_colours(n, r, colours)?;
    Ok(AnyFile::Complete(ColouringFile { comments, colouring }))
}

fn parse_bipartite<'a, I: Iterator<Item = (usize, &'a str)>>(
    comments: Vec<String>,
    header_line: usize,
    mut lines: I,
) -> Result<AnyFile> {
    let (dims_at, dims) = dims_line(&mut lines, header_line, 3)?;
    let (m, n, r) = (dims[0], dims[1], dims[2]);
    if m < 1 || n < 1 || m + n > 65_535 {
        return Err(parse_error(
            dims_at,
            format!("need nonempty parts with m+n <= 65535, got {m} and {n}"),
        ));
    }
    let mut colours = Vec::with_capacity(m * n);
    for u in 0..m {
        for v in m..m + n {
            let (li, line) = lines
                .next()
                .ok_or_else(|| parse_error(dims_at + 1, format!("missing edge {u} {v}")))?;
            let (a, b, c) = split3(line)
                .ok_or_else(|| parse_error(li, format!("expected \"u v c\", got {line:?}")))?;
            if (a, b) != (u, v) {
                return Err(parse_error(
                    li,
                    format!("expected edge {u} {v} (lexicographic order), got {a} {b}"),
                ));
            }
            check_colour(li, c, r)?;
            colours.push(c);
        }
    }
    check_done(&mut lines)?;
    let colouring = BipartiteColouring::new_with(m, n, r, |u, v| colours[u * n + (v - m)])?;
    Ok(AnyFile::Bipartite(BipartiteFile { comments, colouring }))
}
