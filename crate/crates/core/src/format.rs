//! Text formats: graph6 and digraph6 (McKay), a plain edge list, and DOT.
//!
//! graph6 packs the upper triangle column by column (`x(0,1), x(0,2),
//! x(1,2), x(0,3), …`); digraph6 is `&` followed by the full adjacency
//! matrix row by row. Both share the `N(n)` size prefix and the
//! six-bits-per-byte encoding offset by 63.

use std::fmt::Write as _;

use crate::error::FormatError;
use crate::graphs::{Digraph, Graph};

const MAX_N: usize = 68_719_476_735;

fn encode_size(n: usize, out: &mut Vec<u8>) {
    assert!(n <= MAX_N, "graph too large for graph6");
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

fn encode_bits(bits: impl Iterator<Item = bool>, out: &mut Vec<u8>) {
    let mut acc = 0u8;
    let mut k = 0;
    for bit in bits {
        acc = (acc << 1) | bit as u8;
        k += 1;
        if k == 6 {
            out.push(acc + 63);
            acc = 0;
            k = 0;
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
}

/// Returns `(n, bytes consumed)`.
fn decode_size(bytes: &[u8], line: usize, offset: usize) -> Result<(usize, usize), FormatError> {
    let at = |i: usize| -> Result<usize, FormatError> {
        let b = *bytes.get(i).ok_or_else(|| FormatError::new(line, offset + i + 1, "truncated size field"))?;
        if !(63..=126).contains(&b) {
            return Err(FormatError::new(line, offset + i + 1, format!("invalid byte {b:#04x}")));
        }
        Ok((b - 63) as usize)
    };
    let first = at(0)?;
    if first < 63 {
        return Ok((first, 1));
    }
    if at(1)? < 63 {
        let n = (1..4).try_fold(0, |acc, i| Ok::<_, FormatError>((acc << 6) | at(i)?))?;
        return Ok((n, 4));
    }
    let n = (2..8).try_fold(0, |acc, i| Ok::<_, FormatError>((acc << 6) | at(i)?))?;
    Ok((n, 8))
}

fn decode_bits(bytes: &[u8], count: usize, line: usize, offset: usize) -> Result<Vec<bool>, FormatError> {
    let needed = count.div_ceil(6);
    if bytes.len() != needed {
        let col = offset + bytes.len().min(needed) + 1;
        return Err(FormatError::new(
            line,
            col,
            format!("expected {needed} data bytes, found {}", bytes.len()),
        ));
    }
    let mut bits = Vec::with_capacity(needed * 6);
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(FormatError::new(line, offset + i + 1, format!("invalid byte {b:#04x}")));
        }
        let v = b - 63;
        for s in (0..6).rev() {
            bits.push(v >> s & 1 == 1);
        }
    }
    if bits[count..].iter().any(|&b| b) {
        return Err(FormatError::new(line, offset + needed, "nonzero padding bits"));
    }
    bits.truncate(count);
    Ok(bits)
}

fn strip_header<'a>(s: &'a str, header: &str) -> (&'a str, usize) {
    match s.strip_prefix(header) {
        Some(rest) => (rest, header.len()),
        None => (s, 0),
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    encode_bits((1..n).flat_map(|j| (0..j).map(move |i| (i, j))).map(|(i, j)| g.has_edge(i, j)), &mut out);
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses one graph6 string; `line` is used for error positions.
pub fn parse_graph6_line(s: &str, line: usize) -> Result<Graph, FormatError> {
    let (s, skip) = strip_header(s.trim_end_matches(['\r', '\n']), ">>graph6<<");
    let bytes = s.as_bytes();
    if bytes.first() == Some(&b'&') || bytes.first() == Some(&b':') || bytes.first() == Some(&b';') {
        return Err(FormatError::new(line, skip + 1, "not a graph6 string"));
    }
    let (n, used) = decode_size(bytes, line, skip)?;
    let bits = decode_bits(&bytes[used..], n * n.saturating_sub(1) / 2, line, skip + used)?;
    let mut k = 0;
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).map_err(|e| FormatError::new(line, 1, e.to_string()))
}

pub fn parse_graph6(s: &str) -> Result<Graph, FormatError> {
    parse_graph6_line(s, 1)
}

/// Fails on repeated arcs, which digraph6 cannot represent.
pub fn to_digraph6(d: &Digraph) -> Result<String, FormatError> {
    if let Some(w) = d.arcs().windows(2).find(|w| w[0] == w[1]) {
        return Err(FormatError::new(
            0,
            0,
            format!("arc ({},{}) has multiplicity > 1; digraph6 cannot encode it", w[0].0, w[0].1),
        ));
    }
    let n = d.n();
    let mut out = vec![b'&'];
    encode_size(n, &mut out);
    let m = d.multiplicity_matrix();
    encode_bits(m.iter().map(|&x| x > 0), &mut out);
    Ok(String::from_utf8(out).expect("digraph6 is ASCII"))
}

pub fn parse_digraph6_line(s: &str, line: usize) -> Result<Digraph, FormatError> {
    let (s, skip) = strip_header(s.trim_end_matches(['\r', '\n']), ">>digraph6<<");
    let bytes = s.as_bytes();
    if bytes.first() != Some(&b'&') {
        return Err(FormatError::new(line, skip + 1, "digraph6 must start with '&'"));
    }
    let (n, used) = decode_size(&bytes[1..], line, skip + 1)?;
    let bits = decode_bits(&bytes[1 + used..], n * n, line, skip + 1 + used)?;
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if bits[i * n + j] {
                if i == j {
                    return Err(FormatError::new(line, 1, format!("loop at vertex {i}")));
                }
                arcs.push((i, j));
            }
        }
    }
    Digraph::new(n, arcs).map_err(|e| FormatError::new(line, 1, e.to_string()))
}

pub fn parse_digraph6(s: &str) -> Result<Digraph, FormatError> {
    parse_digraph6_line(s, 1)
}

/// `"n m"` header, then one `"u v"` line per arc. Repeated arcs are written once per copy.
pub fn to_edge_list(d: &Digraph) -> String {
    let mut s = format!("{} {}\n", d.n(), d.arc_count());
    for &(u, v) in d.arcs() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn graph_to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Significant lines of an edge list: blank lines and `#` comments are skipped.
fn edge_list_lines(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

fn parse_pair(text: &str, line: usize) -> Result<(usize, usize), FormatError> {
    let mut fields = Vec::new();
    let mut col = 0;
    for tok in text.split_whitespace() {
        col = text[col..].find(tok).map(|p| p + col).unwrap_or(col);
        fields.push((col + 1, tok));
        col += tok.len();
    }
    if fields.len() != 2 {
        return Err(FormatError::new(line, 1, format!("expected two integers, found {} fields", fields.len())));
    }
    let num = |(c, t): (usize, &str)| {
        t.parse::<usize>().map_err(|_| FormatError::new(line, c, format!("'{t}' is not a nonnegative integer")))
    };
    Ok((num(fields[0])?, num(fields[1])?))
}

/// `(u, v, line)` per listed pair.
type Pairs = Vec<(usize, usize, usize)>;

fn parse_edge_list_pairs(s: &str) -> Result<(usize, Pairs), FormatError> {
    let mut lines = edge_list_lines(s);
    let (hl, header) = lines.next().ok_or_else(|| FormatError::new(1, 1, "empty edge list"))?;
    let (n, m) = parse_pair(header, hl)?;
    let mut pairs = Vec::with_capacity(m);
    let mut last_line = hl;
    for (ln, text) in lines {
        let (u, v) = parse_pair(text, ln)?;
        if u >= n || v >= n {
            return Err(FormatError::new(ln, 1, format!("vertex {} out of range for n = {n}", u.max(v))));
        }
        if u == v {
            return Err(FormatError::new(ln, 1, format!("loop at vertex {u}")));
        }
        pairs.push((u, v, ln));
        last_line = ln;
    }
    if pairs.len() != m {
        return Err(FormatError::new(last_line, 1, format!("header declares {m} arcs, found {}", pairs.len())));
    }
    Ok((n, pairs))
}

/// Arc `u -> v` per line.
pub fn parse_edge_list(s: &str) -> Result<Digraph, FormatError> {
    let (n, pairs) = parse_edge_list_pairs(s)?;
    Digraph::new(n, pairs.into_iter().map(|(u, v, _)| (u, v))).map_err(|e| FormatError::new(1, 1, e.to_string()))
}

/// Undirected reading of an edge list.
pub fn parse_graph_edge_list(s: &str) -> Result<Graph, FormatError> {
    let (n, pairs) = parse_edge_list_pairs(s)?;
    let mut seen = std::collections::HashSet::new();
    for &(u, v, ln) in &pairs {
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(FormatError::new(ln, 1, format!("edge {{{u},{v}}} listed twice")));
        }
    }
    Graph::new(n, pairs.into_iter().map(|(u, v, _)| (u, v))).map_err(|e| FormatError::new(1, 1, e.to_string()))
}

/// A parsed input object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Graph(Graph),
    Digraph(Digraph),
}

impl Parsed {
    /// Undirected edges become digons.
    pub fn into_digraph(self) -> Digraph {
        match self {
            Parsed::Graph(g) => g.to_symmetric_digraph(),
            Parsed::Digraph(d) => d,
        }
    }

    /// Digraphs are replaced by their underlying graph.
    pub fn into_graph(self) -> Graph {
        match self {
            Parsed::Graph(g) => g,
            Parsed::Digraph(d) => d.underlying_graph(),
        }
    }
}

/// Detects the format of a single object: a leading `&` means digraph6, a
/// first significant line consisting of two integers means an edge list
/// (read as a digraph), anything else is tried as graph6.
pub fn parse_any(s: &str) -> Result<Parsed, FormatError> {
    let trimmed = s.trim();
    let body = trimmed.strip_prefix(">>digraph6<<").unwrap_or(trimmed);
    if body.starts_with('&') {
        return parse_digraph6(body).map(Parsed::Digraph);
    }
    let first = edge_list_lines(s).next().map(|(_, l)| l.trim()).unwrap_or("");
    let mut fields = first.split_whitespace();
    let looks_numeric = matches!((fields.next(), fields.next(), fields.next()),
        (Some(a), Some(b), None) if a.parse::<usize>().is_ok() && b.parse::<usize>().is_ok());
    if looks_numeric {
        return parse_edge_list(s).map(Parsed::Digraph);
    }
    parse_graph6(trimmed).map(Parsed::Graph)
}

/// Deterministic DOT output: vertices in label order, arcs in sorted order.
pub fn to_dot(d: &Digraph, name: &str) -> String {
    let mut s = format!("digraph \"{}\" {{\n", name.replace('"', "\\\""));
    for v in 0..d.n() {
        let _ = writeln!(s, "  {v};");
    }
    for &(u, v) in d.arcs() {
        let _ = writeln!(s, "  {u} -> {v};");
    }
    s.push_str("}\n");
    s
}
