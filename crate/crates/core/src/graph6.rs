//! graph6 encoding (the ASCII format used by nauty and the public graph
//! catalogs), including the long size forms for orders of 63 and above.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// graph6 string for `g`, without header or trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn sextet(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Error::Graph6(format!("byte {b:#04x} outside 63..=126")))
    }
}

/// Decodes one graph6 record. An optional `>>graph6<<` header and
/// surrounding whitespace are accepted.
pub fn from_graph6(text: &[u8]) -> Result<Graph> {
    let text = trim_ascii(text);
    let text = text.strip_prefix(HEADER.as_bytes()).unwrap_or(text);
    if text.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    let (n, body) = if text[0] != 126 {
        (sextet(text[0])? as usize, &text[1..])
    } else if text.get(1) != Some(&126) {
        let digits = text
            .get(1..4)
            .ok_or_else(|| Error::Graph6("truncated order field".into()))?;
        let mut n = 0usize;
        for &d in digits {
            n = (n << 6) | sextet(d)? as usize;
        }
        if n < 63 {
            return Err(Error::Graph6(format!("non-canonical long order {n}")));
        }
        (n, &text[4..])
    } else {
        let digits = text
            .get(2..8)
            .ok_or_else(|| Error::Graph6("truncated order field".into()))?;
        let mut n = 0usize;
        for &d in digits {
            n = (n << 6) | sextet(d)? as usize;
        }
        if n <= 258_047 {
            return Err(Error::Graph6(format!("non-canonical long order {n}")));
        }
        (n, &text[8..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() != need {
        return Err(Error::Graph6(format!(
            "expected {need} adjacency bytes for order {n}, found {}",
            body.len()
        )));
    }
    let mut g = Graph::blank(n);
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = sextet(body[k / 6])?;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.link(i, j);
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    if nbits % 6 != 0 {
        let last = sextet(body[need - 1])?;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("non-zero padding bits".into()));
        }
    }
    Ok(g)
}

/// All graphs in a multi-line graph6 file; blank lines are skipped.
pub fn read_graph6_file(text: &[u8]) -> Result<Vec<Graph>> {
    text.split(|&b| b == b'\n')
        .filter(|l| !trim_ascii(l).is_empty())
        .map(from_graph6)
        .collect()
}

fn trim_ascii(mut s: &[u8]) -> &[u8] {
    while let [first, rest @ ..] = s {
        if first.is_ascii_whitespace() {
            s = rest;
        } else {
            break;
        }
    }
    while let [rest @ .., last] = s {
        if last.is_ascii_whitespace() {
            s = rest;
        } else {
            break;
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::petersen;
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        assert_eq!(to_graph6(&Graph::complete(3)), "Bw");
        assert_eq!(from_graph6(b"Bw").unwrap(), Graph::complete(3));
        assert_eq!(
            from_graph6(to_graph6(&petersen()).as_bytes()).unwrap(),
            petersen()
        );
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(from_graph6(b">>graph6<<Bw\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn long_order_form() {
        let g = Graph::cycle(70);
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(from_graph6(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert!(from_graph6(b"B").is_err());
        assert!(from_graph6(b"Bww").is_err());
        // K_3 with a stray padding bit set
        assert!(from_graph6(b"Bx").is_err());
        assert!(from_graph6(b"").is_err());
        assert!(from_graph6(b"~?").is_err());
        assert!(from_graph6(&[b'B', 10]).is_err());
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..80, seed in any::<u64>()) {
            let mut x = seed | 1;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                    if x & 1 == 1 { edges.push((u, v)); }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            prop_assert_eq!(from_graph6(to_graph6(&g).as_bytes()).unwrap(), g);
        }
    }
}
