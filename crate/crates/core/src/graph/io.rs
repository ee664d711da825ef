//! graph6 and edge-list serialisation.
//!
//! graph6 is the standard header-free encoding: the vertex count, then the
//! upper triangle read column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ..`)
//! packed six bits to a byte, each byte offset by 63.

use super::Graph;
use crate::error::{invalid, Result};
use std::fmt::Write;

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let mut out = Vec::new();
    encode_n(g.n(), &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..g.n() {
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
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let bytes = s.trim().as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(invalid(format!("byte {b} is outside the graph6 range")));
    }
    let digits = |slice: &[u8]| slice.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
    let (n, body) = match bytes {
        [] => return Err(invalid("empty graph6 string")),
        [126, 126, rest @ ..] if rest.len() >= 6 => (digits(&rest[..6]), &rest[6..]),
        [126, rest @ ..] if rest.len() >= 3 => (digits(&rest[..3]), &rest[3..]),
        [126, ..] => return Err(invalid("truncated graph6 size")),
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(invalid(format!("graph6 body has {} bytes, {n} vertices need {}", body.len(), bits.div_ceil(6))));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[idx / 6] - 63;
            if byte >> (5 - idx % 6) & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    if let Some(&last) = body.last() {
        let pad = body.len() * 6 - bits;
        if (last - 63) & ((1 << pad) - 1) != 0 {
            return Err(invalid("nonzero padding bits in graph6 body"));
        }
    }
    Graph::from_edges(n, &edges)
}

/// One `u v` line per edge, `u < v`, sorted.
pub fn to_edgelist(g: &Graph) -> String {
    let mut s = String::new();
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

/// Reads `u v` lines; blank lines and `#` comments are skipped. The vertex
/// count is one more than the largest label seen.
pub fn from_edgelist(s: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (lineno, line) in s.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| invalid(format!("line {}: {t:?} is not a vertex index", lineno + 1)))
        };
        let [a, b] = parts[..] else {
            return Err(invalid(format!("line {}: expected two vertices", lineno + 1)));
        };
        let (u, v) = (parse(a)?, parse(b)?);
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::petersen;
    use proptest::prelude::*;

    #[test]
    fn known_vector() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(from_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn petersen_round_trips() {
        let p = petersen();
        assert_eq!(from_graph6(&to_graph6(&p)).unwrap(), p);
        assert_eq!(from_edgelist(&to_edgelist(&p)).unwrap(), p);
        assert_eq!(to_edgelist(&p).lines().count(), 15);
    }

    #[test]
    fn size_prefixes() {
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        let big = to_graph6(&Graph::empty(63));
        assert_eq!(&big[..4], "~??~");
        assert_eq!(from_graph6(&big).unwrap().n(), 63);
        let mut prefix = Vec::new();
        encode_n(258_048, &mut prefix);
        assert_eq!(prefix, b"~~???~??");
    }

    #[test]
    fn malformed_inputs() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D").is_err());
        assert!(from_graph6("DQ d").is_err());
        assert!(from_graph6("DQd").is_err());
        assert!(from_edgelist("0 1\n1 x\n").is_err());
        assert!(from_edgelist("0 1 2\n").is_err());
        assert!(from_edgelist("2 2\n").is_err());
    }

    proptest! {
        #[test]
        fn random_graphs_round_trip(n in 0usize..80, seed in any::<u64>()) {
            let mut edges = Vec::new();
            let mut x = seed | 1;
            for j in 1..n {
                for i in 0..j {
                    x ^= x << 13;
                    x ^= x >> 7;
                    x ^= x << 17;
                    if x % 3 == 0 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g.clone());
            prop_assert_eq!(to_edgelist(&g).lines().count(), edges.len());
        }
    }
}
