//! The graph6 printable-ASCII graph encoding (one graph per line).

use crate::error::ParseError;
use crate::graph::Graph;

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

/// Encodes `g` as a graph6 string without trailing newline.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    let push_bits = |out: &mut Vec<u8>, value: usize, groups: usize| {
        for i in (0..groups).rev() {
            out.push(((value >> (6 * i)) & 0x3f) as u8 + BIAS);
        }
    };
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        push_bits(out, n, 3);
    } else {
        out.extend([126, 126]);
        push_bits(out, n, 6);
    }
}

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn decode(text: &str) -> Result<Graph, ParseError> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base += HEADER.len();
    }
    let bytes = body.as_bytes();
    if let Some(i) = bytes.iter().position(|b| !(BIAS..=126).contains(b)) {
        return Err(ParseError::new(base + i, format!("byte {:#04x} outside the graph6 range", bytes[i])));
    }
    let (n, mut pos) = decode_order(bytes, base)?;
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if bytes.len() - pos < needed {
        return Err(ParseError::new(
            base + bytes.len(),
            format!("truncated payload: {n} vertices need {needed} data bytes, found {}", bytes.len() - pos),
        ));
    }
    if bytes.len() - pos > needed {
        return Err(ParseError::new(base + pos + needed, "trailing bytes after graph6 payload"));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0;
    let mut cur = 0u8;
    for v in 1..n {
        for u in 0..v {
            if bit == 0 {
                cur = bytes[pos] - BIAS;
                pos += 1;
            }
            if cur >> (5 - bit) & 1 == 1 {
                g.set_edge(u, v);
            }
            bit = (bit + 1) % 6;
        }
    }
    if bit != 0 && cur & ((1 << (6 - bit)) - 1) != 0 {
        return Err(ParseError::new(base + pos - 1, "nonzero padding bits"));
    }
    Ok(g)
}

fn decode_order(bytes: &[u8], base: usize) -> Result<(usize, usize), ParseError> {
    let read = |from: usize, groups: usize| -> Result<usize, ParseError> {
        if bytes.len() < from + groups {
            return Err(ParseError::new(base + bytes.len(), "truncated vertex-count header"));
        }
        Ok(bytes[from..from + groups].iter().fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize))
    };
    match bytes {
        [] => Err(ParseError::new(base, "empty graph6 string")),
        [126, 126, ..] => Ok((read(2, 6)?, 8)),
        [126, ..] => Ok((read(1, 3)?, 4)),
        [b, ..] => Ok(((b - BIAS) as usize, 1)),
    }
}
