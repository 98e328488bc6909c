//! Text formats: graph6 (interchange) and a plain edge list (authoring).

use crate::error::{Error, Result};
use crate::graph::Graph;

const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LONG_MAX: usize = (1 << 36) - 1;

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedInput(msg.into())
}

/// Decodes one graph6 line. An optional `>>graph6<<` header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(malformed(format!("byte {b:#04x} outside the graph6 range")));
    }
    let (n, body) = decode_size(bytes)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() != need {
        return Err(malformed(format!(
            "graph6 payload for n={n} needs {need} bytes, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if bit(body, k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    for pad in k..need * 6 {
        if bit(body, pad) {
            return Err(malformed("nonzero padding bits"));
        }
    }
    Ok(g)
}

#[inline]
fn bit(body: &[u8], k: usize) -> bool {
    let word = body[k / 6] - 63;
    (word >> (5 - k % 6)) & 1 == 1
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let word = |bs: &[u8]| bs.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    match bytes {
        [] => Err(malformed("empty graph6 string")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(malformed("truncated long-form size"));
            }
            Ok((word(&rest[..6]), &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed("truncated medium-form size"));
            }
            Ok((word(&rest[..3]), &rest[3..]))
        }
        [first, rest @ ..] => Ok(((first - 63) as usize, rest)),
    }
}

/// Canonical graph6 encoding.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= SHORT_MAX {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        assert!(n <= LONG_MAX, "graph too large for graph6");
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses whitespace-separated `u v` pairs, one per line. A first line
/// `n=<count>` fixes the vertex count; `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut pairs = Vec::new();
    let mut seen_content = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(count) = line.strip_prefix("n=") {
            if seen_content {
                return Err(malformed(format!(
                    "line {}: n= must come before any edge",
                    lineno + 1
                )));
            }
            declared = Some(
                count
                    .trim()
                    .parse()
                    .map_err(|_| malformed(format!("line {}: bad vertex count", lineno + 1)))?,
            );
            seen_content = true;
            continue;
        }
        seen_content = true;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(malformed(format!(
                "line {}: expected two vertex ids",
                lineno + 1
            )));
        }
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| malformed(format!("line {}: `{t}` is not a vertex id", lineno + 1)))
        };
        let (u, v) = (parse(toks[0])?, parse(toks[1])?);
        if u == v {
            return Err(malformed(format!("line {}: loop at {u}", lineno + 1)));
        }
        pairs.push((u, v));
    }
    let needed = pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) if n < needed => {
            return Err(malformed(format!(
                "declared n={n} but vertex {} appears",
                needed - 1
            )))
        }
        Some(n) => n,
        None => needed,
    };
    Graph::from_edges(n, pairs)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("n={}\n", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Parses either format, deciding by the first significant byte: edge lists
/// start with a digit, `#` or `n=`; everything else is treated as graph6.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let trimmed = text.trim_start();
    let first = trimmed.as_bytes().first().copied();
    match first {
        None => Err(malformed("empty input")),
        Some(b) if b.is_ascii_digit() || b == b'#' || trimmed.starts_with("n=") => {
            parse_edge_list(text)
        }
        Some(_) => parse_graph6(trimmed.lines().next().unwrap_or("").trim()),
    }
}
