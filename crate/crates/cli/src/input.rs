use std::io::Read;

use graphsym::{parse_edge_list, parse_graph6, Graph};

/// Reads a graph argument: graph6 text, `-` for graph6 on stdin, or
/// `@path` for an edge-list file.
pub fn read_graph(arg: &str) -> Result<Graph, String> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .ok_or("empty input on stdin")?;
        return parse_graph6(line).map_err(|e| e.to_string());
    }
    if let Some(path) = arg.strip_prefix('@') {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
        return parse_edge_list(&text).map_err(|e| format!("{path}: {e}"));
    }
    parse_graph6(arg).map_err(|e| e.to_string())
}

/// `a`, `a..b`, `a..=b` or `a-b`, all inclusive.
pub fn parse_range(text: &str) -> Result<(usize, usize), String> {
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad range {text:?}"))
    };
    let (lo, hi) = if let Some((a, b)) = text.split_once("..=") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = text.split_once("..") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = text.split_once('-') {
        (num(a)?, num(b)?)
    } else {
        let v = num(text)?;
        (v, v)
    };
    if lo > hi {
        return Err(format!("empty range {text:?}"));
    }
    Ok((lo, hi))
}
