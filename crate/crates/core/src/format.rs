//! Plain-text file formats. All vertex labels in files are 1-based.
//!
//! ```text
//! MOP <n>              GRAPH <n> <m>        COLORING <n> <colors_used>
//! <i> <Low> <High>     <u> <v>              <u> <v> <color>
//! ```
//!
//! `MOP` rows run over `i = 3..n` in increasing order; the writer always
//! emits the row `3 1 2`, the parser also accepts it being left out.
//! `COLORING` lines list every edge once with `u < v`, sorted.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{EdgeColoring, Graph};
use crate::mop::CanonicalMop;

/// Either kind of graph file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphFile {
    Mop(CanonicalMop),
    Plain(Graph),
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Splits into `(line number, fields)`, rejecting CR, tabs, and runs of
/// spaces. A single trailing newline is allowed.
fn lines(text: &str) -> Result<Vec<(usize, Vec<&str>)>> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    if body.is_empty() {
        return Err(err(1, "empty input"));
    }
    body.split('\n')
        .enumerate()
        .map(|(i, l)| {
            let no = i + 1;
            if !l.is_ascii() || l.contains(['\r', '\t']) {
                return Err(err(
                    no,
                    "only ASCII, single spaces and LF line endings are allowed",
                ));
            }
            let fields: Vec<&str> = l.split(' ').collect();
            if fields.iter().any(|f| f.is_empty()) {
                return Err(err(no, "fields must be separated by exactly one space"));
            }
            Ok((no, fields))
        })
        .collect()
}

fn number(line: usize, s: &str) -> Result<usize> {
    if s.len() > 1 && s.starts_with('0') {
        return Err(err(line, format!("leading zero in {s:?}")));
    }
    s.parse()
        .map_err(|_| err(line, format!("expected a non-negative integer, got {s:?}")))
}

fn header(line: &(usize, Vec<&str>), tag: &str, arity: usize) -> Result<Vec<usize>> {
    let (no, f) = line;
    if f[0] != tag || f.len() != arity + 1 {
        return Err(err(
            *no,
            format!("expected header `{tag}` with {arity} field(s)"),
        ));
    }
    f[1..].iter().map(|s| number(*no, s)).collect()
}

fn vertex(line: usize, s: &str, n: usize) -> Result<usize> {
    let v = number(line, s)?;
    if v == 0 || v > n {
        return Err(err(line, format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

pub fn write_mop(c: &CanonicalMop) -> String {
    let mut out = format!("MOP {}\n", c.n());
    for (k, &(low, high)) in c.attachments().iter().enumerate() {
        let _ = writeln!(out, "{} {} {}", k + 3, low + 1, high + 1);
    }
    out
}

pub fn parse_mop(text: &str) -> Result<CanonicalMop> {
    let ls = lines(text)?;
    let n = header(&ls[0], "MOP", 1)?[0];
    if n < 3 {
        return Err(err(1, format!("a MOP needs at least 3 vertices, got {n}")));
    }
    let mut rows = &ls[1..];
    let mut attach = Vec::with_capacity(n - 2);
    if rows.first().map(|(_, f)| f[0]) != Some("3") {
        attach.push((0, 1));
    }
    let mut expect = 3 + attach.len();
    while let Some(((no, f), rest)) = rows.split_first() {
        rows = rest;
        if f.len() != 3 {
            return Err(err(*no, "expected `<i> <Low> <High>`"));
        }
        let i = number(*no, f[0])?;
        if i != expect {
            let what = if i < expect {
                "duplicate or out-of-order"
            } else {
                "missing rows before"
            };
            return Err(err(*no, format!("{what} row {i}, expected row {expect}")));
        }
        if i > n {
            return Err(err(*no, format!("row {i} beyond n = {n}")));
        }
        let low = vertex(*no, f[1], n)?;
        let high = vertex(*no, f[2], n)?;
        attach.push((low, high));
        expect += 1;
    }
    if expect != n + 1 {
        return Err(err(ls.len() + 1, format!("missing row {expect}")));
    }
    CanonicalMop::new(n, attach)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("GRAPH {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let ls = lines(text)?;
    let h = header(&ls[0], "GRAPH", 2)?;
    let (n, m) = (h[0], h[1]);
    if ls.len() - 1 != m {
        return Err(err(
            1,
            format!("header announces {m} edges, found {}", ls.len() - 1),
        ));
    }
    let mut edges = Vec::with_capacity(m);
    for (no, f) in &ls[1..] {
        if f.len() != 2 {
            return Err(err(*no, "expected `<u> <v>`"));
        }
        let (u, v) = (vertex(*no, f[0], n)?, vertex(*no, f[1], n)?);
        if u == v || edges.contains(&(u.min(v), u.max(v))) {
            return Err(err(*no, "loop or repeated edge"));
        }
        edges.push((u.min(v), u.max(v)));
    }
    Graph::new(n, edges)
}

/// Dispatches on the header line.
pub fn parse_graph_file(text: &str) -> Result<GraphFile> {
    if text.starts_with("MOP ") {
        parse_mop(text).map(GraphFile::Mop)
    } else if text.starts_with("GRAPH ") {
        parse_graph(text).map(GraphFile::Plain)
    } else {
        Err(err(1, "expected a `MOP` or `GRAPH` header"))
    }
}

pub fn write_coloring(g: &Graph, c: &EdgeColoring) -> String {
    let mut out = format!("COLORING {} {}\n", g.n(), c.colors_used());
    for (&(u, v), col) in g.edges().iter().zip(c.as_slice()) {
        let _ = writeln!(out, "{} {} {col}", u + 1, v + 1);
    }
    out
}

/// Reads a colouring of `g`; the file must list exactly the edges of `g`.
pub fn parse_coloring(text: &str, g: &Graph) -> Result<EdgeColoring> {
    let ls = lines(text)?;
    let h = header(&ls[0], "COLORING", 2)?;
    if h[0] != g.n() {
        return Err(err(
            1,
            format!("colouring is for {} vertices, graph has {}", h[0], g.n()),
        ));
    }
    if ls.len() - 1 != g.m() {
        return Err(err(
            1,
            format!("expected {} edge lines, found {}", g.m(), ls.len() - 1),
        ));
    }
    let mut colors = Vec::with_capacity(g.m());
    for ((no, f), &(eu, ev)) in ls[1..].iter().zip(g.edges()) {
        if f.len() != 3 {
            return Err(err(*no, "expected `<u> <v> <color>`"));
        }
        let (u, v) = (vertex(*no, f[0], g.n())?, vertex(*no, f[1], g.n())?);
        if (u, v) != (eu, ev) {
            return Err(err(
                *no,
                format!(
                    "expected edge {} {}, edges must be sorted with u < v",
                    eu + 1,
                    ev + 1
                ),
            ));
        }
        let col = number(*no, f[2])?;
        if col == 0 || col > u32::MAX as usize {
            return Err(err(
                *no,
                format!("colour {col} is not a positive 32-bit integer"),
            ));
        }
        colors.push(col as u32);
    }
    let c = EdgeColoring::new(colors)?;
    if c.colors_used() != h[1] {
        return Err(err(
            1,
            format!(
                "header says {} colours, lines use {}",
                h[1],
                c.colors_used()
            ),
        ));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{lad, random_mop};

    #[test]
    fn mop_round_trip() {
        let c = random_mop(12, 3).unwrap();
        let text = write_mop(&c);
        assert!(text.starts_with("MOP 12\n3 1 2\n"));
        assert_eq!(text.lines().count(), 11);
        assert_eq!(parse_mop(&text).unwrap(), c);
    }

    #[test]
    fn triangle_row_is_optional() {
        assert_eq!(parse_mop("MOP 3\n").unwrap(), CanonicalMop::triangle());
        assert_eq!(
            parse_mop("MOP 3\n3 1 2\n").unwrap(),
            CanonicalMop::triangle()
        );
        assert_eq!(
            parse_mop("MOP 4\n4 2 3\n").unwrap(),
            parse_mop("MOP 4\n3 1 2\n4 2 3").unwrap()
        );
    }

    #[test]
    fn mop_rejects_bad_rows() {
        let cases = [
            ("MOP 5\n3 1 2\n4 1 2\n4 1 2\n", 4),
            ("MOP 5\n3 1 2\n5 1 2\n4 1 2\n", 3),
            ("MOP 4\n3 1 2\n", 3),
            ("MOP 4\n3 1 2\n4  1 2\n", 3),
            ("MOP 4\r\n3 1 2\n4 1 2\n", 1),
            ("MOP 4\n3 1 2\n4 1 9\n", 3),
            ("MOP 2\n", 1),
            ("mop 3\n", 1),
        ];
        for (text, line) in cases {
            match parse_mop(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        // Rows are well formed but name a non-exterior edge; caught when built.
        assert!(parse_mop("MOP 5\n3 1 2\n4 1 2\n5 1 2\n").is_ok());
    }

    #[test]
    fn coloring_round_trip() {
        let l = lad(3).unwrap();
        let g = l.graph.graph();
        let c = l.coloring.unwrap();
        let text = write_coloring(g, &c);
        assert!(text.starts_with("COLORING 6 3\n1 2 1\n"));
        assert_eq!(parse_coloring(&text, g).unwrap(), c);
        let broken = text.replacen("COLORING 6 3", "COLORING 6 4", 1);
        assert!(parse_coloring(&broken, g).is_err());
        let swapped = text.replacen("1 2 1", "2 1 1", 1);
        assert!(matches!(
            parse_coloring(&swapped, g),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn graph_round_trip() {
        let c5 = Graph::cycle(5).unwrap();
        let text = write_graph(&c5);
        assert_eq!(parse_graph(&text).unwrap(), c5);
        assert!(matches!(
            parse_graph_file(&text).unwrap(),
            GraphFile::Plain(_)
        ));
        assert!(parse_graph("GRAPH 3 2\n1 2\n2 1\n").is_err());
        assert!(parse_graph_file("EDGES 3\n").is_err());
    }
}
