//! The graph6 format, header-free variant (the `>>graph6<<` header is
//! accepted on input and never written).

use thiserror::Error;

use crate::graph::Graph;

/// Largest order the format can express (36-bit length field).
pub const GRAPH6_MAX_ORDER: usize = (1 << 36) - 1;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("graph order {0} exceeds the graph6 range")]
    TooLarge(usize),
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 alphabet")]
    BadByte { offset: usize, byte: u8 },
    #[error("truncated order field at offset {offset}")]
    TruncatedOrder { offset: usize },
    #[error("expected {expected} adjacency bytes after offset {offset}, found {found}")]
    BadLength {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("non-zero padding bits at offset {offset}")]
    Padding { offset: usize },
}

fn push_order(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
}

/// Encodes `g` as graph6: order bytes, then the upper triangle in
/// column-major order (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per
/// byte offset by 63, zero-padded.
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(8 + bits.div_ceil(6));
    push_order(&mut out, n);
    let mut data = vec![0u8; bits.div_ceil(6)];
    for &(i, j) in g.edges() {
        let k = j * (j - 1) / 2 + i;
        data[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(data.into_iter().map(|b| b + 63));
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

/// Inverse of [`encode_graph6`]. Surrounding whitespace is ignored.
pub fn decode_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base += HEADER.len();
    }
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(i) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::BadByte {
            offset: base + i,
            byte: bytes[i],
        });
    }
    let field = |from: usize, len: usize| -> Result<usize, Graph6Error> {
        let chunk = bytes
            .get(from..from + len)
            .ok_or(Graph6Error::TruncatedOrder { offset: base + from })?;
        Ok(chunk.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    let (n, start) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        (field(1, 3)?, 4)
    } else {
        (field(2, 6)?, 8)
    };
    let data = &bytes[start..];
    // computed in u128 so that a forged 36-bit order cannot overflow
    let wide = (n as u128 * (n as u128).saturating_sub(1) / 2).div_ceil(6);
    if wide != data.len() as u128 {
        return Err(Graph6Error::BadLength {
            offset: base + start,
            expected: usize::try_from(wide).unwrap_or(usize::MAX),
            found: data.len(),
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = data.len();
    if bits % 6 != 0 {
        let last = data[expected - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(Graph6Error::Padding {
                offset: base + start + expected - 1,
            });
        }
    }
    let mut edges = Vec::new();
    let (mut i, mut j) = (0, 1);
    for k in 0..bits {
        if (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
            edges.push((i, j));
        }
        i += 1;
        if i == j {
            i = 0;
            j += 1;
        }
    }
    Ok(Graph::new(n, edges).expect("decoded pairs are in range"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        assert_eq!(encode_graph6(&Graph::path(4)).unwrap(), "Ch");
        assert_eq!(encode_graph6(&Graph::complete(1)).unwrap(), "@");
        assert_eq!(encode_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(encode_graph6(&Graph::empty(4)).unwrap(), "C?");
        assert_eq!(decode_graph6("Ch").unwrap(), Graph::path(4));
        assert_eq!(decode_graph6("@").unwrap(), Graph::complete(1));
        assert_eq!(decode_graph6("C?").unwrap(), Graph::empty(4));
        assert_eq!(decode_graph6(">>graph6<<Ch\n").unwrap(), Graph::path(4));
    }

    #[test]
    fn long_orders_round_trip() {
        for n in [62, 63, 64, 300] {
            let g = Graph::path(n);
            let s = encode_graph6(&g).unwrap();
            assert_eq!(s.as_bytes()[0] == 126, n > 62);
            assert_eq!(decode_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(decode_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            decode_graph6("C h"),
            Err(Graph6Error::BadByte { offset: 1, byte: b' ' })
        );
        assert_eq!(
            decode_graph6("Chh"),
            Err(Graph6Error::BadLength {
                offset: 1,
                expected: 1,
                found: 2
            })
        );
        assert_eq!(decode_graph6("~?"), Err(Graph6Error::TruncatedOrder { offset: 1 }));
        // P3 has three bits; the low three bits of its only data byte must be zero
        assert_eq!(decode_graph6("Bg"), Ok(Graph::path(3)));
        assert_eq!(decode_graph6("Bh"), Err(Graph6Error::Padding { offset: 1 }));
    }
}
