//! graph6 short form (n ≤ 62).

use super::FormatError;
use crate::graph::Graph;

pub const MAX_SHORT_N: usize = 62;

pub fn encode(g: &Graph) -> String {
    let n = g.vertex_count();
    assert!(n <= MAX_SHORT_N, "graph6 short form holds at most {MAX_SHORT_N} vertices");
    let mut out = vec![(n as u8) + 63];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 line (an optional `>>graph6<<` header is skipped).
pub fn decode(line: &str) -> Result<Graph, FormatError> {
    let header = ">>graph6<<";
    let (base, body) = match line.strip_prefix(header) {
        Some(rest) => (header.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    let body = body.strip_suffix(b"\n").unwrap_or(body);
    let body = body.strip_suffix(b"\r").unwrap_or(body);
    let (&first, data) = body.split_first().ok_or(FormatError::Empty)?;
    if !(63..=126).contains(&first) {
        return Err(FormatError::BadByte { offset: base, byte: first });
    }
    if first == 126 {
        return Err(FormatError::LongForm { offset: base });
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(FormatError::BadByte { offset: base + 1 + i, byte: b });
        }
    }
    if data.len() < expected {
        return Err(FormatError::Truncated { offset: base + 1 + data.len(), expected: expected + 1 });
    }
    if data.len() > expected {
        return Err(FormatError::Trailing { offset: base + 1 + expected });
    }
    let mut g = Graph::new(n);
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[t / 6] - 63;
            if byte >> (5 - t % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            t += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reference_encodings() {
        assert_eq!(decode("Bw").unwrap(), Graph::complete(3));
        assert_eq!(decode("C~").unwrap(), Graph::complete(4));
        assert_eq!(encode(&Graph::complete(3)), "Bw");
        assert_eq!(encode(&Graph::complete(4)), "C~");
        assert_eq!(encode(&Graph::new(0)), "?");
        assert_eq!(decode(">>graph6<<C~\n").unwrap(), Graph::complete(4));
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(decode("C~ "), Err(FormatError::BadByte { offset: 2, byte: b' ' }));
        assert_eq!(decode("D~"), Err(FormatError::Truncated { offset: 2, expected: 3 }));
        assert_eq!(decode("C~~"), Err(FormatError::Trailing { offset: 2 }));
        assert_eq!(decode("~~~~"), Err(FormatError::LongForm { offset: 0 }));
        assert_eq!(decode(""), Err(FormatError::Empty));
        assert_eq!(decode("\u{1}"), Err(FormatError::BadByte { offset: 0, byte: 1 }));
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..=20, seed in any::<u64>()) {
            let mut g = Graph::new(n);
            let mut s = seed;
            for a in 0..n {
                for b in a + 1..n {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if s >> 63 == 1 {
                        g.add_edge(a, b);
                    }
                }
            }
            let text = encode(&g);
            prop_assert_eq!(decode(&text).unwrap(), g);
            prop_assert_eq!(encode(&decode(&text).unwrap()), text);
        }
    }
}
