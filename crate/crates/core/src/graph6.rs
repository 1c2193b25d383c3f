//! graph6 text encoding of simple undirected graphs.
//!
//! A value is a length header followed by the upper triangle of the
//! adjacency matrix, read column by column, packed six bits per byte with
//! every byte offset by 63 into the printable range. Headers: a single
//! byte n+63 for n <= 62, or '~' followed by three 6-bit digits for larger
//! n. The last data byte is padded with zero bits.
//!
//! The parser is strict: it accepts exactly the canonical encoding, so
//! parse and serialize are mutually inverse on everything they accept.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count this implementation encodes or decodes.
pub const GRAPH6_MAX_VERTICES: usize = 16_384;

const OFFSET: u8 = 63;
const LONG_FORM: u8 = 126;

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let err = |offset: usize, reason: String| Error::Graph6Parse { offset, reason };
    if bytes.is_empty() {
        return Err(err(0, "empty input".into()));
    }
    for (i, &c) in bytes.iter().enumerate() {
        if !(OFFSET..=LONG_FORM).contains(&c) {
            return Err(err(
                i,
                format!("byte {c:#04x} outside the graph6 range 63..=126"),
            ));
        }
    }
    let (n, header_len) = if bytes[0] == LONG_FORM {
        if bytes.len() >= 2 && bytes[1] == LONG_FORM {
            return Err(err(1, "36-bit length form is not supported".into()));
        }
        if bytes.len() < 4 {
            return Err(err(bytes.len(), "truncated length header".into()));
        }
        let n = ((bytes[1] - OFFSET) as usize) << 12
            | ((bytes[2] - OFFSET) as usize) << 6
            | (bytes[3] - OFFSET) as usize;
        if n < 63 {
            return Err(err(0, format!("non-canonical long header for n = {n}")));
        }
        (n, 4)
    } else {
        ((bytes[0] - OFFSET) as usize, 1)
    };
    if n > GRAPH6_MAX_VERTICES {
        return Err(err(
            0,
            format!("vertex count {n} exceeds the cap of {GRAPH6_MAX_VERTICES}"),
        ));
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let data_len = bit_count.div_ceil(6);
    if bytes.len() < header_len + data_len {
        return Err(err(bytes.len(), "truncated adjacency data".into()));
    }
    if bytes.len() > header_len + data_len {
        return Err(err(header_len + data_len, "trailing data".into()));
    }
    let bit_at = |k: usize| (bytes[header_len + k / 6] - OFFSET) >> (5 - k % 6) & 1;
    let mut g = Graph::empty(n);
    let mut k = 0;
    for col in 1..n {
        for row in 0..col {
            if bit_at(k) == 1 {
                g.add_edge_unchecked(row, col);
            }
            k += 1;
        }
    }
    for pad in bit_count..data_len * 6 {
        if bit_at(pad) != 0 {
            return Err(err(header_len + pad / 6, "nonzero padding bits".into()));
        }
    }
    Ok(g)
}

pub fn serialize_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_VERTICES {
        return Err(Error::Graph6TooLarge {
            n,
            max: GRAPH6_MAX_VERTICES,
        });
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(LONG_FORM);
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for col in 1..n {
        for row in 0..col {
            acc = acc << 1 | u8::from(g.has_edge(row, col));
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_gab, random_graph, GabConstruction};
    use proptest::prelude::*;

    #[test]
    fn known_small_values() {
        assert_eq!(serialize_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(serialize_graph6(&Graph::empty(1)).unwrap(), "@");
        let triangle = Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(serialize_graph6(&triangle).unwrap(), "Bw");
        let path = build_gab(&GabConstruction::new(1, 2).unwrap());
        assert_eq!(serialize_graph6(&path).unwrap(), "Bg");
        let g23 = build_gab(&GabConstruction::new(2, 3).unwrap());
        assert_eq!(serialize_graph6(&g23).unwrap(), "DqG");
    }

    #[test]
    fn parses_what_it_prints() {
        for text in ["?", "@", "Bw", "Bg", "DqG"] {
            let g = parse_graph6(text).unwrap();
            assert_eq!(serialize_graph6(&g).unwrap(), text);
        }
        let g = parse_graph6("Bw").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn long_header_round_trip() {
        let g = Graph::empty(63);
        let text = serialize_graph6(&g).unwrap();
        assert!(text.starts_with('~'));
        assert_eq!(text.len(), 4 + (63 * 62 / 2usize).div_ceil(6));
        let back = parse_graph6(&text).unwrap();
        assert_eq!(back, g);
    }

    fn offset_of(e: Error) -> usize {
        match e {
            Error::Graph6Parse { offset, .. } => offset,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(offset_of(parse_graph6("").unwrap_err()), 0);
        // byte below 63
        assert_eq!(offset_of(parse_graph6("B .").unwrap_err()), 1);
        // truncated data: K5 needs 10 bits = 2 bytes
        assert_eq!(offset_of(parse_graph6("D~").unwrap_err()), 2);
        // trailing garbage after a complete graph
        assert_eq!(offset_of(parse_graph6("Bw?").unwrap_err()), 2);
        // nonzero padding: triangle uses 3 of 6 bits, set a padding bit
        assert_eq!(offset_of(parse_graph6("Bz").unwrap_err()), 1);
        // non-canonical long header for n = 3
        assert!(parse_graph6("~??B\x7f").is_err());
        assert_eq!(offset_of(parse_graph6("~??C").unwrap_err()), 0);
        // 36-bit form
        assert_eq!(offset_of(parse_graph6("~~?????").unwrap_err()), 1);
        // vertex count beyond the cap: n = 16385
        assert_eq!(offset_of(parse_graph6("~C?@").unwrap_err()), 0);
    }

    #[test]
    fn serialize_rejects_oversized() {
        let g = Graph::empty(GRAPH6_MAX_VERTICES + 1);
        assert!(matches!(
            serialize_graph6(&g).unwrap_err(),
            Error::Graph6TooLarge { .. }
        ));
    }

    proptest! {
        #[test]
        fn round_trip_random_graphs(n in 0usize..40, seed in 0u64..1000, p in 0.0f64..=1.0) {
            let g = random_graph(n, p, seed);
            let text = serialize_graph6(&g).unwrap();
            let back = parse_graph6(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(serialize_graph6(&back).unwrap(), text);
        }
    }
}
