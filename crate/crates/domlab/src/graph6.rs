//! graph6 codec, short form only (n <= 62).
//!
//! Layout: one size byte `n + 63`, then the upper triangle of the
//! adjacency matrix in column-major order — x(0,1), x(0,2), x(1,2),
//! x(0,3), ... — packed six bits per byte, most significant first, each
//! data byte offset by 63. Parsing is strict: exact byte count, zero
//! padding bits, printable range. An optional `>>graph6<<` header is
//! tolerated on input and never emitted.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_GRAPH6_N: usize = 62;
pub const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let mut pos = 0usize;
    if s.starts_with(HEADER) {
        pos = HEADER.len();
    }
    let bytes = s.as_bytes();
    if pos >= bytes.len() {
        return Err(Error::MalformedGraph6 {
            position: pos,
            reason: "missing size byte".into(),
        });
    }
    let b0 = bytes[pos];
    if b0 == 126 {
        return Err(Error::MalformedGraph6 {
            position: pos,
            reason: "multi-byte sizes (n > 62) are not supported".into(),
        });
    }
    if !(63..=125).contains(&b0) {
        return Err(Error::MalformedGraph6 {
            position: pos,
            reason: format!("size byte {b0} outside 63..=125"),
        });
    }
    let n = (b0 - 63) as usize;
    pos += 1;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let data = &bytes[pos..];
    if data.len() < nbytes {
        return Err(Error::MalformedGraph6 {
            position: bytes.len(),
            reason: format!("expected {nbytes} data bytes, found {}", data.len()),
        });
    }
    if data.len() > nbytes {
        return Err(Error::MalformedGraph6 {
            position: pos + nbytes,
            reason: "trailing bytes after the adjacency data".into(),
        });
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let (mut i, mut j) = (0usize, 1usize); // current upper-triangle cell
    let mut bit_index = 0usize;
    for (k, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::MalformedGraph6 {
                position: pos + k,
                reason: format!("data byte {b} outside 63..=126"),
            });
        }
        let val = b - 63;
        for t in 0..6 {
            let bit = val >> (5 - t) & 1;
            if bit_index >= nbits {
                if bit == 1 {
                    return Err(Error::MalformedGraph6 {
                        position: pos + k,
                        reason: "nonzero padding bits".into(),
                    });
                }
            } else {
                if bit == 1 {
                    edges.push((i, j));
                }
                i += 1;
                if i == j {
                    i = 0;
                    j += 1;
                }
            }
            bit_index += 1;
        }
    }
    if n == 0 {
        return Ok(Graph::null());
    }
    Graph::from_edges(n, &edges)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_GRAPH6_N {
        return Err(Error::CapacityExceeded {
            needed: n,
            cap: MAX_GRAPH6_N,
        });
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        out.push((acc + 63) as char);
    }
    Ok(out)
}

/// Parses newline-delimited graph6 text; the error carries the 1-based
/// line number of the offending line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line == HEADER {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| Error::MalformedInput {
            line: idx + 1,
            reason: e.to_string(),
        })?;
        out.push(g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn hand_encoded_fixtures() {
        // size byte 'B' = 3; data 'w' = 63 + 0b111000: bits 1,1,1
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3, families::complete(3).unwrap());

        // 'g' = 63 + 0b101000: x(0,1)=1, x(0,2)=0, x(1,2)=1
        let p3 = parse_graph6("Bg").unwrap();
        assert_eq!(p3, families::path(3).unwrap());

        assert_eq!(to_graph6(&families::complete(3).unwrap()).unwrap(), "Bw");
        assert_eq!(to_graph6(&families::path(3).unwrap()).unwrap(), "Bg");
    }

    #[test]
    fn interop_fixture() {
        // 5 vertices, edges 02 04 13 34: "DQc" in other graph6 writers too
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn header_tolerated_never_emitted() {
        let g = parse_graph6(">>graph6<<Bw").unwrap();
        assert_eq!(g, families::complete(3).unwrap());
        assert!(!to_graph6(&g).unwrap().contains('>'));
    }

    #[test]
    fn round_trip_corpus() {
        let graphs = vec![
            families::path(1).unwrap(),
            families::path(2).unwrap(),
            families::path(10).unwrap(),
            families::cycle(7).unwrap(),
            families::complete(6).unwrap(),
            families::star(9).unwrap(),
            families::complete_bipartite(3, 4).unwrap(),
            families::path(62).unwrap(),
        ];
        for g in graphs {
            let s = to_graph6(&g).unwrap();
            let back = parse_graph6(&s).unwrap();
            assert_eq!(back, g);
            assert_eq!(to_graph6(&back).unwrap(), s);
        }
    }

    #[test]
    fn malformed_inputs_report_positions() {
        assert!(matches!(
            parse_graph6(""),
            Err(Error::MalformedGraph6 { position: 0, .. })
        ));
        // size byte says 3 vertices but no data follows
        assert!(matches!(
            parse_graph6("B"),
            Err(Error::MalformedGraph6 { position: 1, .. })
        ));
        // trailing byte
        assert!(matches!(
            parse_graph6("BwB"),
            Err(Error::MalformedGraph6 { position: 2, .. })
        ));
        // '~' announces the long size form
        assert!(matches!(
            parse_graph6("~??"),
            Err(Error::MalformedGraph6 { position: 0, .. })
        ));
        // bad size byte (below 63)
        assert!(matches!(
            parse_graph6("\x20w"),
            Err(Error::MalformedGraph6 { position: 0, .. })
        ));
        // nonzero padding: P3 with a stray low bit set ('g' | 1 = 'h')
        assert!(matches!(
            parse_graph6("Bh"),
            Err(Error::MalformedGraph6 { position: 1, .. })
        ));
    }

    #[test]
    fn line_parser_reports_line_numbers() {
        let ok = parse_graph6_lines("Bw\n\nBg\n").unwrap();
        assert_eq!(ok.len(), 2);
        let err = parse_graph6_lines("Bw\nB!\n");
        assert!(matches!(err, Err(Error::MalformedInput { line: 2, .. })));
    }
}
