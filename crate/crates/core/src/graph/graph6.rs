//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix, column by column, packed into 6-bit printable groups.

use super::{bit, Graph, MAX_ORDER};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid character {0:?} at byte {1}")]
    BadChar(char, usize),
    #[error("malformed size header")]
    BadHeader,
    #[error("order {0} not supported (must be 1..=64)")]
    UnsupportedOrder(usize),
    #[error("expected {expected} data bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("padding bits after the adjacency data are not zero")]
    NonZeroPadding,
}

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(4 + (n * (n - 1) / 2).div_ceil(6));
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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

pub fn graph6_decode(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadChar(b as char, i));
        }
    }
    let (n, data) = if bytes[0] == 126 {
        if bytes.len() < 4 || bytes[1] == 126 {
            // 8-byte headers encode orders far beyond what we support
            return Err(Graph6Error::BadHeader);
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
        if n < 63 {
            return Err(Graph6Error::BadHeader);
        }
        (n, &bytes[4..])
    } else {
        (usize::from(bytes[0] - 63), &bytes[1..])
    };
    if n == 0 || n > MAX_ORDER {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let total_bits = n * (n - 1) / 2;
    let expected = total_bits.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::Length {
            expected,
            found: data.len(),
        });
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = data[k / 6] - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    let tail = total_bits % 6;
    if tail != 0 {
        let last = data[expected - 1] - 63;
        if last & ((1u8 << (6 - tail)) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, cycle, path};

    #[test]
    fn known_strings() {
        // K3: bits 111 padded to 111000 = 56, 56 + 63 = 'w'
        assert_eq!(graph6_encode(&complete(3)), "Bw");
        assert_eq!(graph6_encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(graph6_encode(&complete(2)), "A_");
        // P4 edges 01,12,23: column-major bits x01 x02 x12 x03 x13 x23 = 101001
        assert_eq!(graph6_encode(&path(4)), "Ch");
        assert_eq!(graph6_decode("Ch").unwrap(), path(4));
        assert_eq!(graph6_decode("Bw").unwrap(), complete(3));
    }

    #[test]
    fn large_header_round_trip() {
        for n in [62, 63, 64] {
            let g = cycle(n);
            let s = graph6_encode(&g);
            if n >= 63 {
                assert_eq!(s.as_bytes()[0], 126);
            }
            assert_eq!(graph6_decode(&s).unwrap(), g);
        }
    }

    #[test]
    fn decode_errors() {
        assert_eq!(graph6_decode(""), Err(Graph6Error::Empty));
        assert_eq!(graph6_decode("?"), Err(Graph6Error::UnsupportedOrder(0)));
        assert!(matches!(graph6_decode("B w"), Err(Graph6Error::BadChar(' ', 1))));
        assert!(matches!(graph6_decode("Bww"), Err(Graph6Error::Length { .. })));
        assert!(matches!(graph6_decode("B"), Err(Graph6Error::Length { .. })));
        // K3 with a stray padding bit
        assert_eq!(graph6_decode("Bx"), Err(Graph6Error::NonZeroPadding));
        assert!(matches!(graph6_decode("~???"), Err(Graph6Error::BadHeader)));
        assert!(matches!(graph6_decode("~?@@"), Err(Graph6Error::UnsupportedOrder(65))));
        assert_eq!(graph6_decode(">>graph6<<Bw\n").unwrap(), complete(3));
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn round_trip(n in 1usize..=64, seed in any::<u64>()) {
            let mut x = seed | 1;
            let mut edges = Vec::new();
            for v in 1..n {
                for u in 0..v {
                    x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                    if x & 3 == 0 { edges.push((u, v)); }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            prop_assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g);
        }
    }
}
