//! graph6 encoding for cubic graphs of order at most 62.

use crate::error::{Error, Result};
use crate::graph::{build_graph, CubicGraph};

const MAX_ORDER: usize = 62;

/// Parses one graph6 line (an optional `>>graph6<<` header and trailing
/// whitespace are accepted).
pub fn parse_graph6(line: &str) -> Result<CubicGraph> {
    let text = line.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| Error::MalformedGraph6("empty line".into()))?;
    if !(63..=126).contains(&first) {
        return Err(Error::MalformedGraph6(format!("bad order byte {first}")));
    }
    if first == 126 {
        return Err(Error::MalformedGraph6(format!(
            "orders above {MAX_ORDER} are not supported"
        )));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(Error::MalformedGraph6(format!(
            "expected {need} adjacency bytes for n={n}, found {}",
            body.len()
        )));
    }
    if let Some(&b) = body.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::MalformedGraph6(format!("byte {b} outside 63..=126")));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..need * 6).any(bit) {
        return Err(Error::MalformedGraph6("non-zero padding bits".into()));
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    build_graph(n, &pairs)
}

pub fn write_graph6(g: &CubicGraph) -> Result<String> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(Error::TooLarge { n, cap: MAX_ORDER });
    }
    let bits = n * (n - 1) / 2;
    let mut packed = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.edge_between(i, j).is_some() {
                packed[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + packed.len());
    out.push((n as u8 + 63) as char);
    out.extend(packed.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}
