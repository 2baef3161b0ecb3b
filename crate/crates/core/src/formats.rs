//! Text interchange formats: short-form graph6, DIMACS `.col`, a plain
//! edge list, and `vertex color` certificate lines.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Largest order encodable in the single-byte graph6 size field.
pub const GRAPH6_MAX_N: usize = 62;
const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6 supports at most {max} vertices in short form, got {n}")]
    Graph6TooLarge { n: usize, max: usize },
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("line {line}: {reason}")]
    Text { line: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which textual format a graph file uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    Dimacs,
    EdgeList,
}

pub fn encode_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(FormatError::Graph6TooLarge {
            n,
            max: GRAPH6_MAX_N,
        });
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Decodes one short-form graph6 line. A leading `>>graph6<<` header is
/// stripped; anything else that is not part of the encoding is an error,
/// trailing whitespace included.
pub fn decode_graph6(s: &str) -> Result<Graph, FormatError> {
    let (base, body) = match s.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest.as_bytes()),
        None => (0, s.as_bytes()),
    };
    let err = |offset: usize, reason: String| FormatError::Graph6 {
        offset: base + offset,
        reason,
    };
    let &first = body.first().ok_or_else(|| err(0, "empty input".into()))?;
    if !(63..=126).contains(&first) {
        return Err(err(0, format!("byte {first:#04x} outside 63..=126")));
    }
    if first == 126 {
        return Err(err(0, "long-form size field is not supported".into()));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);
    for (i, &b) in body.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(err(i, format!("byte {b:#04x} outside 63..=126")));
        }
    }
    if body.len() != expected {
        return Err(err(
            body.len().min(expected),
            format!("expected {expected} bytes for n={n}, got {}", body.len()),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[1 + k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    if !bits.is_multiple_of(6) {
        let last = body[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(expected - 1, "nonzero padding bits".into()));
        }
    }
    Ok(g)
}

/// `p edge n m` followed by `e u v` lines, 1-indexed, edges in
/// lexicographic order.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Reads DIMACS `.col` text. `c` comment lines are skipped. Edges listed in
/// both orientations collapse, so the `m` of the problem line is not
/// enforced.
pub fn read_dimacs(text: &str) -> Result<Graph, FormatError> {
    let mut n = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |reason: String| FormatError::Text { line, reason };
        let mut tok = raw.split_whitespace();
        match tok.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(err("duplicate problem line".into()));
                }
                match (tok.next(), tok.next(), tok.next(), tok.next()) {
                    (Some("edge" | "col"), Some(nv), Some(m), None) => {
                        n = Some(parse_num(nv, line)?);
                        parse_num(m, line)?;
                    }
                    _ => return Err(err("expected `p edge <n> <m>`".into())),
                }
            }
            Some("e") => {
                let nv = n.ok_or_else(|| err("edge before problem line".into()))?;
                let (u, v) = match (tok.next(), tok.next(), tok.next()) {
                    (Some(u), Some(v), None) => (parse_num(u, line)?, parse_num(v, line)?),
                    _ => return Err(err("expected `e <u> <v>`".into())),
                };
                if u == 0 || v == 0 || u > nv || v > nv {
                    return Err(err(format!("edge ({u}, {v}) outside 1..={nv}")));
                }
                if u == v {
                    return Err(err(format!("self-loop at {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(err(format!("unknown line type `{other}`"))),
        }
    }
    let n = n.ok_or(FormatError::Text {
        line: 0,
        reason: "missing problem line".into(),
    })?;
    Ok(Graph::from_edges(n, edges)?)
}

/// `n m` header followed by `m` lines of 0-indexed `u v` pairs.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn read_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(FormatError::Text {
        line: 1,
        reason: "missing `n m` header".into(),
    })?;
    let (n, m) = parse_pair(header, hline)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let (u, v) = parse_pair(l, line)?;
        if u >= n || v >= n || u == v {
            return Err(FormatError::Text {
                line,
                reason: format!("invalid edge ({u}, {v}) for n={n}"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(FormatError::Text {
            line: hline,
            reason: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// Guesses the format of a graph file from its contents.
pub fn sniff_format(text: &str) -> GraphFormat {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first.starts_with("p ") || first.starts_with("c ") || first == "c" {
        GraphFormat::Dimacs
    } else if first.split_whitespace().count() == 2
        && first.split_whitespace().all(|t| t.parse::<usize>().is_ok())
    {
        GraphFormat::EdgeList
    } else {
        GraphFormat::Graph6
    }
}

/// Parses a graph in the given format; graph6 input must be a single line.
pub fn read_graph(text: &str, format: GraphFormat) -> Result<Graph, FormatError> {
    match format {
        GraphFormat::Graph6 => {
            let line = text.strip_suffix('\n').unwrap_or(text);
            let line = line.strip_suffix('\r').unwrap_or(line);
            decode_graph6(line)
        }
        GraphFormat::Dimacs => read_dimacs(text),
        GraphFormat::EdgeList => read_edge_list(text),
    }
}

/// One `vertex color` line per vertex.
pub fn write_coloring_lines(colors: &[usize]) -> String {
    let mut out = String::new();
    for (v, c) in colors.iter().enumerate() {
        let _ = writeln!(out, "{v} {c}");
    }
    out
}

fn parse_num(tok: &str, line: usize) -> Result<usize, FormatError> {
    tok.parse().map_err(|_| FormatError::Text {
        line,
        reason: format!("`{tok}` is not a non-negative integer"),
    })
}

fn parse_pair(l: &str, line: usize) -> Result<(usize, usize), FormatError> {
    let mut tok = l.split_whitespace();
    match (tok.next(), tok.next(), tok.next()) {
        (Some(a), Some(b), None) => Ok((parse_num(a, line)?, parse_num(b, line)?)),
        _ => Err(FormatError::Text {
            line,
            reason: "expected two integers".into(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_known_strings() {
        assert_eq!(encode_graph6(&Graph::complete(4)).unwrap(), "C~");
        assert_eq!(encode_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(encode_graph6(&Graph::path(3)).unwrap(), "Bg");
        assert_eq!(encode_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(decode_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(decode_graph6("C~").unwrap(), Graph::complete(4));
        assert_eq!(decode_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(decode_graph6(">>graph6<<C~").unwrap(), Graph::complete(4));
    }

    #[test]
    fn graph6_rejections() {
        assert!(matches!(
            encode_graph6(&Graph::empty(63)),
            Err(FormatError::Graph6TooLarge { n: 63, .. })
        ));
        // trailing whitespace
        assert!(matches!(
            decode_graph6("C~ "),
            Err(FormatError::Graph6 { offset: 2, .. })
        ));
        assert!(matches!(
            decode_graph6("C~\n"),
            Err(FormatError::Graph6 { .. })
        ));
        // wrong length
        assert!(matches!(
            decode_graph6("C"),
            Err(FormatError::Graph6 { .. })
        ));
        assert!(matches!(
            decode_graph6("C~~"),
            Err(FormatError::Graph6 { .. })
        ));
        // bad byte
        assert!(matches!(
            decode_graph6("C!"),
            Err(FormatError::Graph6 { offset: 1, .. })
        ));
        // P3 has 3 data bits; "Bh" sets a padding bit
        assert!(matches!(
            decode_graph6("Bh"),
            Err(FormatError::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            decode_graph6(""),
            Err(FormatError::Graph6 { offset: 0, .. })
        ));
        assert!(matches!(
            decode_graph6("~"),
            Err(FormatError::Graph6 { offset: 0, .. })
        ));
        // header offsets are reported against the full input
        assert!(matches!(
            decode_graph6(">>graph6<<C!"),
            Err(FormatError::Graph6 { offset: 11, .. })
        ));
    }

    #[test]
    fn dimacs_round_trip() {
        let g = Graph::cycle(5);
        let text = write_dimacs(&g);
        assert!(text.starts_with("p edge 5 5\ne 1 2\n"));
        assert_eq!(read_dimacs(&text).unwrap(), g);
        let with_comments = format!("c hello\n{text}e 2 1\n");
        assert_eq!(read_dimacs(&with_comments).unwrap(), g);
        assert!(read_dimacs("p edge 3 1\ne 1 4\n").is_err());
        assert!(read_dimacs("e 1 2\n").is_err());
        assert!(read_dimacs("p edge 3 1\ne 2 2\n").is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::complete(4);
        let text = write_edge_list(&g);
        assert!(text.starts_with("4 6\n0 1\n"));
        assert_eq!(read_edge_list(&text).unwrap(), g);
        assert!(read_edge_list("3 2\n0 1\n").is_err());
        assert!(read_edge_list("3 1\n0 3\n").is_err());
    }

    #[test]
    fn sniffing() {
        assert_eq!(sniff_format("C~\n"), GraphFormat::Graph6);
        assert_eq!(sniff_format("p edge 4 6\n"), GraphFormat::Dimacs);
        assert_eq!(sniff_format("c x\np edge 4 6\n"), GraphFormat::Dimacs);
        assert_eq!(sniff_format("4 6\n0 1\n"), GraphFormat::EdgeList);
        assert_eq!(
            read_graph("C~\n", GraphFormat::Graph6).unwrap(),
            Graph::complete(4)
        );
    }
}
