//! graph6 encoding and the plain edge-list text format.

use crate::graph::{Graph, GraphError};

const BIAS: u8 = 63;
const MAX_SMALL: usize = 62;
const MAX_MEDIUM: usize = 258_047;
const MAX_LARGE: usize = 68_719_476_735;

fn err(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= MAX_SMALL {
        out.push(n as u8 + BIAS);
    } else if n <= MAX_MEDIUM {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

/// Upper-triangle bits in graph6 order: x(0,1), x(0,2), x(1,2), x(0,3), ...
pub(crate) fn triangle_bits(g: &Graph) -> impl Iterator<Item = bool> + '_ {
    (1..g.n()).flat_map(move |j| (0..j).map(move |i| g.adjacent(i, j)))
}

pub fn to_graph6(g: &Graph) -> Vec<u8> {
    assert!(g.n() <= MAX_LARGE, "graph too large for graph6");
    let mut out = Vec::with_capacity(4 + g.n() * g.n() / 12 + 1);
    push_size(&mut out, g.n());
    let mut acc = 0u8;
    let mut filled = 0;
    for bit in triangle_bits(g) {
        acc = acc << 1 | bit as u8;
        filled += 1;
        if filled == 6 {
            out.push(acc + BIAS);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    out
}

pub fn to_graph6_string(g: &Graph) -> String {
    String::from_utf8(to_graph6(g)).expect("graph6 output is ASCII")
}

fn sextet(b: u8) -> Result<u64, GraphError> {
    if (BIAS..=BIAS + 63).contains(&b) {
        Ok((b - BIAS) as u64)
    } else {
        Err(err(format!("byte {b} outside the printable graph6 range")))
    }
}

fn read_size(bytes: &[u8]) -> Result<(usize, usize), GraphError> {
    match bytes {
        [] => Err(err("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(err("truncated 8-byte size field"));
            }
            let mut n = 0u64;
            for &b in &rest[..6] {
                n = n << 6 | sextet(b)?;
            }
            if n <= MAX_MEDIUM as u64 {
                return Err(err("non-minimal size field"));
            }
            Ok((n as usize, 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err("truncated 4-byte size field"));
            }
            let mut n = 0u64;
            for &b in &rest[..3] {
                n = n << 6 | sextet(b)?;
            }
            if n <= MAX_SMALL as u64 {
                return Err(err("non-minimal size field"));
            }
            Ok((n as usize, 4))
        }
        [b, ..] => Ok((sextet(*b)? as usize, 1)),
    }
}

/// Strict decoder: no header, no trailing newline, no extra bytes.
pub fn from_graph6(bytes: &[u8]) -> Result<Graph, GraphError> {
    let (n, consumed) = read_size(bytes)?;
    let body = &bytes[consumed..];
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() < need {
        return Err(err(format!(
            "expected {need} data bytes, found {}",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(err("trailing bytes after adjacency data"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let s = sextet(body[k / 6])?;
            if s >> (5 - k % 6) & 1 == 1 {
                g.set(i, j, true);
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    if nbits % 6 != 0 {
        let last = sextet(body[need - 1])?;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err("nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Accepts an optional `>>graph6<<` header and surrounding whitespace.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let t = text.trim();
    let t = t.strip_prefix(">>graph6<<").unwrap_or(t);
    from_graph6(t.as_bytes())
}

/// Edge list: first non-blank line `n`, then one `u v` pair per line, 0-based.
/// Lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| GraphError::EdgeList("missing vertex count".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| GraphError::EdgeList(format!("bad vertex count {header:?}")))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return Err(GraphError::EdgeList(format!(
                "expected `u v`, got {line:?}"
            )));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| GraphError::EdgeList(format!("bad vertex {s:?}")))
        };
        edges.push((parse(a)?, parse(b)?));
    }
    Graph::from_edges(n, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for e in g.edges() {
        s.push_str(&format!("{} {}\n", e.u, e.v));
    }
    s
}
