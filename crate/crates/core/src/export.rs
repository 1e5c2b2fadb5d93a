//! Graph serialization: graph6, DIMACS edge format, and the vertex-label
//! sidecar carrying the canonical subspace text.

use crate::code_graph::GraphHandle;
use crate::error::{Error, Result};

/// Canonical graph6 encoding: N(n) header, then the upper triangle read
/// column by column, packed six bits per byte with an offset of 63.
pub fn to_graph6(g: &GraphHandle) -> Result<String> {
    let n = g.vertex_count();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        out.push((((n >> 12) & 63) as u8 + 63) as char);
        out.push((((n >> 6) & 63) as u8 + 63) as char);
        out.push(((n & 63) as u8 + 63) as char);
    } else {
        return Err(Error::invalid(
            "graph6 export supports at most 258047 vertices",
        ));
    }
    let mut bits: Vec<bool> = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.is_edge(i as u32, j as u32));
        }
    }
    while !bits.len().is_multiple_of(6) {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (pos, &b) in chunk.iter().enumerate() {
            if b {
                v |= 1 << (5 - pos);
            }
        }
        out.push((v + 63) as char);
    }
    Ok(out)
}

/// Parses a graph6 string back into (vertex count, edge list with i < j).
pub fn parse_graph6(s: &str) -> Result<(usize, Vec<(u32, u32)>)> {
    let bytes: Vec<u8> = s.trim_end().bytes().collect();
    if bytes.is_empty() {
        return Err(Error::invalid("empty graph6 string"));
    }
    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(Error::invalid("truncated graph6 header"));
        }
        if bytes[1] == b'~' {
            return Err(Error::invalid(
                "graph6 strings beyond 258047 vertices are not supported",
            ));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    let needed = n * n.saturating_sub(1) / 2;
    let mut bits = Vec::with_capacity(needed + 5);
    while pos < bytes.len() {
        let b = bytes[pos];
        if !(63..=126).contains(&b) {
            return Err(Error::invalid(format!("invalid graph6 byte {b}")));
        }
        let v = b - 63;
        for shift in (0..6).rev() {
            bits.push((v >> shift) & 1 == 1);
        }
        pos += 1;
    }
    if bits.len() < needed {
        return Err(Error::invalid(
            "graph6 string too short for its vertex count",
        ));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i as u32, j as u32));
            }
            idx += 1;
        }
    }
    Ok((n, edges))
}

/// DIMACS edge format: `p edge V E` then one `e i j` line per edge, 1-based.
pub fn to_dimacs(g: &GraphHandle) -> String {
    let n = g.vertex_count();
    let mut out = format!("p edge {} {}\n", n, g.edge_count());
    for i in 0..n as u32 {
        for &j in g.neighbors(i) {
            if i < j {
                out.push_str(&format!("e {} {}\n", i + 1, j + 1));
            }
        }
    }
    out
}

/// Label sidecar: line i holds the single-line serialization of vertex i.
pub fn labels(g: &GraphHandle) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        out.push_str(&v.to_line());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code_graph::GraphVariant;
    use crate::grassmannian::GrassmannianParams;

    #[test]
    fn graph6_round_trip_on_built_graph() {
        let params = GrassmannianParams::new(2, 4, 2).unwrap();
        let g = GraphHandle::build(params, GraphVariant::Nondegenerate, 10_000, 1).unwrap();
        let enc = to_graph6(&g).unwrap();
        let (n, mut edges) = parse_graph6(&enc).unwrap();
        assert_eq!(n, g.vertex_count());
        let mut expected = Vec::new();
        for i in 0..n as u32 {
            for &j in g.neighbors(i) {
                if i < j {
                    expected.push((i, j));
                }
            }
        }
        edges.sort_unstable();
        assert_eq!(edges, expected);
    }

    #[test]
    fn graph6_known_small_values() {
        let params = GrassmannianParams::new(2, 4, 2).unwrap();
        let vs: Vec<_> = crate::grassmannian::enumerate_unchecked(params)
            .take(4)
            .collect();

        // complete graph on 4 vertices: all six triangle bits set -> 63+63 = '~'
        let k4 = GraphHandle::from_parts(
            params,
            vs.clone(),
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        assert_eq!(to_graph6(&k4).unwrap(), "C~");

        // path 0-1-2-3: pair order (01)(02)(12)(03)(13)(23) gives bits 101001 = 41 -> 'h'
        let path = GraphHandle::from_parts(params, vs, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(to_graph6(&path).unwrap(), "Ch");
    }

    #[test]
    fn dimacs_header_and_edges() {
        let params = GrassmannianParams::new(2, 4, 2).unwrap();
        let vs: Vec<_> = crate::grassmannian::enumerate_unchecked(params)
            .take(3)
            .collect();
        let g = GraphHandle::from_parts(params, vs, &[(0, 1), (1, 2)]).unwrap();
        let text = to_dimacs(&g);
        assert_eq!(text, "p edge 3 2\ne 1 2\ne 2 3\n");
    }

    #[test]
    fn labels_line_per_vertex() {
        let params = GrassmannianParams::new(2, 4, 2).unwrap();
        let g = GraphHandle::build(params, GraphVariant::Nondegenerate, 10_000, 1).unwrap();
        let text = labels(&g);
        assert_eq!(text.lines().count(), 13);
        let first = text.lines().next().unwrap();
        assert_eq!(
            crate::linalg::Subspace::from_text(2, first).unwrap(),
            g.vertices()[0]
        );
    }
}
