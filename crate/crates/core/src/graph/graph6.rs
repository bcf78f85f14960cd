//! graph6 short form (orders 1..=62).
//!
//! Header byte `n + 63`, then the upper triangle in column-major order
//! `(0,1),(0,2),(1,2),(0,3),...`, six bits per byte (most significant first),
//! each byte offset by 63, zero padded.

use super::Graph;
use crate::error::{Error, Result};

pub const GRAPH6_MAX_ORDER: usize = 62;

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if !(1..=GRAPH6_MAX_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange {
            order: n,
            min: 1,
            max: GRAPH6_MAX_ORDER,
        });
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push((n + 63) as u8);
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
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(parse_err(0, "empty input"));
    };
    if head == 126 {
        return Err(parse_err(0, "long-form order header is not supported"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(i, format!("byte {b} outside 63..=126")));
        }
    }
    let n = (head - 63) as usize;
    if n == 0 {
        return Err(parse_err(0, "order 0"));
    }
    let expected = 1 + body_len(n);
    if bytes.len() != expected {
        let offset = bytes.len().min(expected);
        return Err(parse_err(
            offset,
            format!(
                "expected {expected} bytes for order {n}, found {}",
                bytes.len()
            ),
        ));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = bytes.len() - 1;
        let pad = 6 - k % 6;
        if (bytes[last] - 63) & ((1 << pad) - 1) != 0 {
            return Err(parse_err(last, "nonzero padding bits"));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        let k4 = Graph::complete(4);
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(to_graph6(&k4).unwrap(), "C~");
        assert_eq!(to_graph6(&p4).unwrap(), "Ch");
        assert_eq!(to_graph6(&Graph::new(1)).unwrap(), "@");
        assert_eq!(from_graph6("C~").unwrap(), k4);
        assert_eq!(from_graph6("Ch").unwrap(), p4);
        assert_eq!(from_graph6("@").unwrap(), Graph::new(1));
    }

    #[test]
    fn matches_reference_tooling() {
        // 0-2, 0-4, 1-3, 3-4; string as emitted by networkx / nauty.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
        // Petersen graph.
        let pet = from_graph6("IheA@GUAo").unwrap();
        assert_eq!(pet.order(), 10);
        assert_eq!(pet.edge_count(), 15);
        assert!(pet.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(
            from_graph6(""),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        assert!(matches!(
            from_graph6("C"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            from_graph6("C~~"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        assert!(matches!(
            from_graph6("C\u{7f}"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            from_graph6("C !"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            from_graph6("~?@d"),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        // order 3 uses 3 bits; 'B' body '@' = 000001 has a padding bit set.
        assert!(matches!(
            from_graph6("B@"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            from_graph6("?"),
            Err(Error::Graph6 { offset: 0, .. })
        ));
    }

    #[test]
    fn rejects_large_order() {
        assert!(to_graph6(&Graph::new(63)).is_err());
        assert!(to_graph6(&Graph::new(62)).is_ok());
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..=20, seed in any::<u64>()) {
            let mut g = Graph::new(n);
            let mut s = seed;
            for j in 1..n {
                for i in 0..j {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if s >> 63 == 1 {
                        g.add_edge(i, j);
                    }
                }
            }
            let text = to_graph6(&g).unwrap();
            prop_assert_eq!(from_graph6(&text).unwrap(), g);
        }
    }
}
