//! Edge-list and graph6 text formats.

use crate::error::{GraphError, ParseError};
use crate::graph::Graph;

/// Parses `n` on the first line followed by one `u v` pair per line.
///
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, 0, "missing node count"))?;
    let n: usize = header.trim().parse().map_err(|_| {
        ParseError::new(line_no, leading_ws(header), format!("bad node count '{}'", header.trim()))
    })?;
    let mut g = Graph::new(n);
    for (line_no, line) in lines {
        let mut fields = Vec::new();
        let mut offset = 0;
        for tok in line.split_whitespace() {
            let start = offset + line[offset..].find(tok).unwrap_or(0);
            offset = start + tok.len();
            fields.push((start, tok));
        }
        if fields.len() != 2 {
            return Err(ParseError::new(
                line_no,
                leading_ws(line),
                format!("expected 'u v', found {} fields", fields.len()),
            ));
        }
        let mut ends = [0usize; 2];
        for (k, (off, tok)) in fields.iter().enumerate() {
            ends[k] = tok
                .parse()
                .map_err(|_| ParseError::new(line_no, *off, format!("bad node '{tok}'")))?;
        }
        g.add_edge(ends[0], ends[1]).map_err(|e| {
            let off = match e {
                GraphError::NodeOutOfRange { node, .. } if node == ends[1] && node != ends[0] => {
                    fields[1].0
                }
                _ => fields[0].0,
            };
            ParseError::new(line_no, off, e.to_string())
        })?;
    }
    Ok(g)
}

fn leading_ws(s: &str) -> usize {
    s.len() - s.trim_start().len()
}

/// Canonical edge-list text: node count, then edges `u v` with `u < v` in lexicographic order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decodes one graph6 string (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(s: &str) -> Result<Graph, ParseError> {
    parse_graph6_line(s.trim_end_matches(['\n', '\r']), 1)
}

fn parse_graph6_line(s: &str, line: usize) -> Result<Graph, ParseError> {
    let (skip, body) = match s.strip_prefix(">>graph6<<") {
        Some(rest) => (10, rest.as_bytes()),
        None => (0, s.as_bytes()),
    };
    let err = |i: usize, msg: &str| ParseError::new(line, skip + i, msg);
    for (i, &c) in body.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(err(i, "character outside graph6 range"));
        }
    }
    let (n, mut pos) = match body.first() {
        None => return Err(err(0, "empty graph6 string")),
        Some(126) => {
            if body.get(1) == Some(&126) {
                if body.len() < 8 {
                    return Err(err(body.len(), "truncated size field"));
                }
                (sextets(&body[2..8]), 8)
            } else {
                if body.len() < 4 {
                    return Err(err(body.len(), "truncated size field"));
                }
                (sextets(&body[1..4]), 4)
            }
        }
        Some(&c) => ((c - 63) as usize, 1),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if body.len() - pos != need {
        return Err(err(
            pos,
            &format!("expected {need} adjacency characters, found {}", body.len() - pos),
        ));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.add_edge(i, j).map_err(|e| err(pos, &e.to_string()))?;
            }
            k += 1;
        }
    }
    pos += need;
    debug_assert_eq!(pos, body.len());
    Ok(g)
}

fn sextets(chars: &[u8]) -> usize {
    chars.iter().fold(0, |acc, &c| (acc << 6) | (c - 63) as usize)
}

/// Decodes a newline-separated stream of graph6 strings, skipping blank lines.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>, ParseError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6_line(l.trim(), i + 1))
        .collect()
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
