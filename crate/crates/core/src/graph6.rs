//! graph6 reading and writing for graphs on at most 62 vertices.
//!
//! A line is `N(n)` followed by the upper-triangle bits in column order,
//! padded with zeros to a multiple of six, each 6-bit group written as
//! `value + 63`. The optional `>>graph6<<` header is accepted on input and
//! never written.

use thiserror::Error;

use crate::graph::{pair_count, Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("graphs with more than {MAX_VERTICES} vertices are not supported")]
    TooLarge,
    #[error("expected {expected} data bytes for {vertices} vertices, found {found}")]
    WrongLength {
        vertices: usize,
        expected: usize,
        found: usize,
    },
    #[error("nonzero padding bits in final byte")]
    NonzeroPadding,
}

/// Encodes `g` as a single graph6 line (no trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.vertex_count();
    let total = pair_count(n);
    let words = g.pair_bits();
    let mut out = String::with_capacity(1 + total.div_ceil(6));
    out.push((n as u8 + 63) as char);
    for start in (0..total).step_by(6) {
        let mut value = 0u8;
        for offset in 0..6 {
            value <<= 1;
            let p = start + offset;
            if p < total && words[p / 64] >> (p % 64) & 1 == 1 {
                value |= 1;
            }
        }
        out.push((value + 63) as char);
    }
    out
}

/// Decodes one graph6 line. Surrounding whitespace and a leading
/// `>>graph6<<` header are ignored.
pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (&first, data) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { offset, byte });
        }
    }
    if first == 126 {
        return Err(Graph6Error::TooLarge);
    }
    let n = (first - 63) as usize;
    let total = pair_count(n);
    let expected = total.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::WrongLength {
            vertices: n,
            expected,
            found: data.len(),
        });
    }
    let mut edges = Vec::new();
    let mut p = 0;
    let (mut i, mut j) = (0usize, 1usize);
    for &byte in data {
        let value = byte - 63;
        for shift in (0..6).rev() {
            let bit = value >> shift & 1 == 1;
            if p < total {
                if bit {
                    edges.push((i, j));
                }
                i += 1;
                if i == j {
                    i = 0;
                    j += 1;
                }
            } else if bit {
                return Err(Graph6Error::NonzeroPadding);
            }
            p += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded pairs are in range and loop-free"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    #[test]
    fn known_strings() {
        // edges A-C, A-E, B-D, D-E on five vertices
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(encode(&complete_graph(5).unwrap()), "D~{");
        assert_eq!(encode(&complete_graph(4).unwrap()), "C~");
        assert_eq!(encode(&Graph::empty(0).unwrap()), "?");
        assert_eq!(encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(encode(&complete_graph(2).unwrap()), "A_");
    }

    #[test]
    fn decode_known() {
        let g = decode("DQc").unwrap();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 2), (1, 3), (0, 4), (3, 4)]
        );
        assert_eq!(
            decode(">>graph6<<D~{\n").unwrap(),
            complete_graph(5).unwrap()
        );
    }

    #[test]
    fn largest_supported() {
        let k = complete_graph(62).unwrap();
        let s = encode(&k);
        assert_eq!(s.as_bytes()[0], 125);
        assert_eq!(decode(&s).unwrap(), k);
    }

    #[test]
    fn malformed() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert_eq!(decode(">>graph6<<"), Err(Graph6Error::Empty));
        assert!(matches!(decode("D~"), Err(Graph6Error::WrongLength { .. })));
        assert!(matches!(
            decode("D~{~"),
            Err(Graph6Error::WrongLength { .. })
        ));
        assert!(matches!(
            decode("D ~{"),
            Err(Graph6Error::BadByte { offset: 1, .. })
        ));
        assert_eq!(decode("~?"), Err(Graph6Error::TooLarge));
        // K_2 with a stray padding bit set
        assert_eq!(decode("A`"), Err(Graph6Error::NonzeroPadding));
    }
}
