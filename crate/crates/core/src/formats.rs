//! graph6, DOT and plain edge-list encodings.
//!
//! graph6 follows the nauty convention: the order `N(n)` followed by the
//! upper triangle of the adjacency matrix read column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per byte, big-endian,
//! each byte offset by 63.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("malformed DOT at line {line}: {msg}")]
    Dot { line: usize, msg: String },
    #[error("malformed edge list at line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Graph6,
    Dot,
    Edgelist,
}

fn g6_err(msg: impl Into<String>) -> FormatError {
    FormatError::Graph6(msg.into())
}

/// Index of pair `(i, j)`, `i < j`, in column-major upper-triangle order.
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
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
    out
}

/// Parses one graph6 record. An optional `>>graph6<<` header and
/// surrounding whitespace are accepted; padding bits must be zero.
pub fn from_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text.trim();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(g6_err("empty input"));
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(g6_err(format!("byte {pos} is outside the printable range 63..=126")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(g6_err("orders above 258047 are not supported"));
    } else if bytes.len() >= 4 {
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        return Err(g6_err("truncated order prefix"));
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(g6_err(format!("order {n} needs {expected} data bytes, found {}", body.len())));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.insert_edge(i, j)?;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let pad = 6 - nbits % 6;
        if (body[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(g6_err("non-zero padding bits"));
        }
    }
    Ok(g)
}

/// DOT text; `labels[v]`, when given, becomes the node label.
pub fn to_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        match labels.and_then(|l| l.get(v)) {
            Some(label) => writeln!(out, "  {v} [label=\"{}\"];", label.replace('"', "\\\"")),
            None => writeln!(out, "  {v};"),
        }
        .unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Parses the undirected DOT subset that [`to_dot`] emits: numeric node
/// ids, node statements, `a -- b -- c` chains and ignored attribute lists.
pub fn from_dot(text: &str) -> Result<Graph, FormatError> {
    let err = |line: usize, msg: &str| FormatError::Dot { line, msg: msg.to_string() };
    let mut nodes = 0usize;
    let mut edges = Vec::new();
    let mut opened = false;
    let mut closed = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let mut line = raw.trim();
        if let Some(p) = line.find("//") {
            line = line[..p].trim();
        }
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !opened {
            let head = line.strip_prefix("strict").map(str::trim_start).unwrap_or(line);
            if !head.starts_with("graph") {
                return Err(err(line_no, "expected an undirected `graph` header"));
            }
            let Some(brace) = head.find('{') else {
                return Err(err(line_no, "expected `{` on the header line"));
            };
            opened = true;
            line = head[brace + 1..].trim();
        }
        if let Some(p) = line.find('}') {
            closed = true;
            line = line[..p].trim();
        }
        for stmt in line.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let stmt = match stmt.find('[') {
                Some(p) => stmt[..p].trim(),
                None => stmt,
            };
            if stmt.contains("->") {
                return Err(err(line_no, "directed edges are not supported"));
            }
            let ids = stmt
                .split("--")
                .map(|t| t.trim().trim_matches('"').parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| err(line_no, "node ids must be non-negative integers"))?;
            for &v in &ids {
                nodes = nodes.max(v + 1);
            }
            edges.extend(ids.windows(2).map(|w| (w[0], w[1])));
        }
        if closed {
            break;
        }
    }
    if !opened || !closed {
        return Err(err(text.lines().count(), "unterminated graph body"));
    }
    let mut g = Graph::empty(nodes)?;
    for (u, v) in edges {
        if u != v && !g.has_edge(u, v) {
            g.insert_edge(u, v)?;
        } else if u == v {
            return Err(GraphError::SelfLoop { vertex: u }.into());
        }
    }
    Ok(g)
}

/// First line: order. Each further line: `u v`.
pub fn to_edgelist(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn from_edgelist(text: &str) -> Result<Graph, FormatError> {
    let err = |line: usize, msg: &str| FormatError::EdgeList { line, msg: msg.to_string() };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or_else(|| err(1, "missing order line"))?;
    let n: usize = header.parse().map_err(|_| err(first, "order must be an integer"))?;
    let mut g = Graph::empty(n)?;
    for (line, l) in lines {
        let mut it = l.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => g.insert_edge(u, v)?,
            _ => return Err(err(line, "expected two vertex ids")),
        }
    }
    Ok(g)
}

pub fn encode(g: &Graph, format: Format, labels: Option<&[String]>) -> String {
    match format {
        Format::Graph6 => format!("{}\n", to_graph6(g)),
        Format::Dot => to_dot(g, labels),
        Format::Edgelist => to_edgelist(g),
    }
}

/// Detects DOT (`graph`/`strict` header), edge list (multiple lines or a
/// leading integer order) or a bare graph6 record.
pub fn decode(text: &str) -> Result<Graph, FormatError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with("graph") || trimmed.starts_with("strict") {
        return from_dot(text);
    }
    let mut content = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let first = content.next().unwrap_or("");
    let looks_numeric = first.chars().all(|c| c.is_ascii_digit());
    if looks_numeric || content.next().is_some() {
        from_edgelist(text)
    } else {
        from_graph6(first)
    }
}
