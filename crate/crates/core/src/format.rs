//! graph6 (short form, `n <= 62`) and plain edge-list text formats.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable by the one-byte graph6 header.
pub const GRAPH6_MAX_ORDER: usize = 62;

const HEADER: &str = ">>graph6<<";

fn g6_err<T>(offset: usize, reason: impl Into<String>) -> Result<T> {
    Err(Error::Graph6 { offset, reason: reason.into() })
}

/// Parses one graph6 line. Trailing whitespace and an optional `>>graph6<<`
/// header are accepted; padding bits in the final byte are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let trimmed = line.trim_end_matches(['\n', '\r', ' ', '\t']);
    let (bytes, base) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (trimmed.as_bytes(), 0),
    };
    if bytes.is_empty() {
        return g6_err(base, "empty graph6 string");
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return g6_err(base + i, format!("byte 0x{b:02x} outside printable range 63..=126"));
        }
    }
    if bytes[0] == 126 {
        return g6_err(base, "long-form header (n > 62) is not supported");
    }
    let n = (bytes[0] - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let body_len = bits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < body_len {
        return g6_err(base + bytes.len(), format!("truncated body: expected {body_len} bytes, found {}", body.len()));
    }
    if body.len() > body_len {
        return g6_err(base + 1 + body_len, "trailing bytes after graph6 body");
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency_unchecked(n, adj))
}

/// Encodes `g` in graph6 short form.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::OrderTooLarge { order: n, limit: GRAPH6_MAX_ORDER });
    }
    let mut out = String::with_capacity(1 + (n * n) / 12 + 1);
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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

/// Parses the edge-list format: a first line `n m`, then `m` lines `u v` (0-based).
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::EdgeList { line: 1, reason: "missing header".into() })?;
    let (n, m) = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines.by_ref().take(m) {
        edges.push(parse_pair(line, text)?);
    }
    if edges.len() != m {
        return Err(Error::EdgeList { line: hline, reason: format!("header announces {m} edges, found {}", edges.len()) });
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::EdgeList { line, reason: "more edge lines than announced".into() });
    }
    Graph::from_edges(n, edges)
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::EdgeList { line, reason: format!("expected two non-negative integers, got {text:?}") }),
    }
}

/// Writes `g` in the edge-list format, edges in lexicographic order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Reference encoder: spell out the upper triangle column by column as a
    /// '0'/'1' string, pad to a multiple of six, and read off 6-bit groups.
    fn reference_graph6(n: usize, edges: &[(usize, usize)]) -> String {
        let mut bits = String::new();
        for j in 1..n {
            for i in 0..j {
                let hit = edges.iter().any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i));
                bits.push(if hit { '1' } else { '0' });
            }
        }
        while bits.len() % 6 != 0 {
            bits.push('0');
        }
        let mut s = String::new();
        s.push(char::from(63 + n as u8));
        for chunk in bits.as_bytes().chunks(6) {
            let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
            s.push(char::from(63 + v));
        }
        s
    }

    #[test]
    fn k5_and_single_edge() {
        let k5_edges: Vec<_> = (0..5).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        assert_eq!(reference_graph6(5, &k5_edges), "D~{");
        let g = parse_graph6("D~{").unwrap();
        assert_eq!((g.order(), g.size()), (5, 10));
        assert_eq!(g, Graph::complete(5).unwrap());

        assert_eq!(reference_graph6(2, &[(0, 1)]), "A_");
        let e = parse_graph6("A_").unwrap();
        assert_eq!((e.order(), e.size()), (2, 1));
    }

    #[test]
    fn small_encodings_match_reference() {
        assert_eq!(reference_graph6(1, &[]), "@");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        let tri = Graph::complete(3).unwrap();
        assert_eq!(to_graph6(&tri).unwrap(), reference_graph6(3, &[(0, 1), (0, 2), (1, 2)]));
        assert_eq!(to_graph6(&tri).unwrap(), "Bw");
        let pet = crate::named::petersen();
        let edges: Vec<_> = pet.edges().collect();
        assert_eq!(to_graph6(&pet).unwrap(), reference_graph6(10, &edges));
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
    }

    #[test]
    fn round_trips() {
        for s in ["D~{", "A_", "@", "?", "Bw", "E?~o", "Ch"] {
            assert_eq!(to_graph6(&parse_graph6(s).unwrap()).unwrap(), s);
        }
        assert_eq!(parse_graph6(">>graph6<<D~{\n").unwrap(), Graph::complete(5).unwrap());
    }

    #[test]
    fn malformed_graph6() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6("D~"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(parse_graph6("D~{{"), Err(Error::Graph6 { offset: 3, .. })));
        assert!(matches!(parse_graph6("D~ {"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(parse_graph6("D\u{7f}{"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("~?@c"), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(to_graph6(&Graph::empty(63).unwrap()), Err(Error::OrderTooLarge { .. })));
    }

    #[test]
    fn edge_list_format() {
        let g = parse_edge_list("3 3\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::EdgeList { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 1\n1 2\n"), Err(Error::EdgeList { line: 3, .. })));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(Error::EdgeList { line: 2, .. })));
        assert_eq!(parse_edge_list("2 1\n1 1\n"), Err(Error::SelfLoop(1)));
    }
}
