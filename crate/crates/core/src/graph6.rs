//! graph6 encoding of simple graphs.
//!
//! Size header: `n + 63` for `n ≤ 62`, `'~'` plus three 6-bit groups for
//! `n ≤ 258047`, `"~~"` plus six groups up to `2^36 - 1`. The body packs the
//! upper triangle column by column (`(0,1), (0,2), (1,2), (0,3), ...`) six bits
//! per byte, most significant bit first, zero padded, each byte offset by 63.

use crate::error::{Graph6Error, Result};
use crate::graph::Graph;

const MAX_ORDER: u64 = (1 << 36) - 1;

fn push_groups(out: &mut Vec<u8>, value: u64, groups: u32) {
    for i in (0..groups).rev() {
        out.push(((value >> (6 * i)) & 0x3f) as u8 + 63);
    }
}

pub fn encode_graph6(g: &Graph) -> Vec<u8> {
    let n = g.order() as u64;
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(b'~');
        push_groups(&mut out, n, 3);
    } else {
        assert!(n <= MAX_ORDER, "graph order exceeds graph6 limit");
        out.extend_from_slice(b"~~");
        push_groups(&mut out, n, 6);
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..g.order() {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    out
}

pub fn encode_graph6_string(g: &Graph) -> String {
    String::from_utf8(encode_graph6(g)).expect("graph6 output is ASCII")
}

fn read_groups(
    bytes: &[u8],
    offset: usize,
    groups: usize,
) -> std::result::Result<u64, Graph6Error> {
    let chunk = bytes
        .get(offset..offset + groups)
        .ok_or(Graph6Error::TruncatedHeader)?;
    Ok(chunk
        .iter()
        .fold(0u64, |acc, &b| (acc << 6) | u64::from(b - 63)))
}

pub fn decode_graph6(bytes: &[u8]) -> Result<Graph> {
    if bytes.is_empty() {
        return Err(Graph6Error::Empty.into());
    }
    if let Some((position, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(63..=126).contains(&b))
    {
        return Err(Graph6Error::BadByte { position, byte }.into());
    }

    let (n, body_start) = if bytes[0] != b'~' {
        (u64::from(bytes[0] - 63), 1)
    } else if bytes.get(1) != Some(&b'~') {
        (read_groups(bytes, 1, 3)?, 4)
    } else {
        (read_groups(bytes, 2, 6)?, 8)
    };
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge(n).into());
    }

    let bits = u128::from(n) * u128::from(n.saturating_sub(1)) / 2;
    let expected = bits.div_ceil(6) as u64;
    let body = &bytes[body_start..];
    if body.len() as u64 != expected {
        return Err(Graph6Error::BodyLength {
            n,
            expected,
            found: body.len(),
        }
        .into());
    }

    let mut g = Graph::empty(n as usize)?;
    let (mut i, mut j) = (0usize, 1usize);
    'outer: for &b in body {
        let chunk = b - 63;
        for shift in (0..6).rev() {
            if j >= n as usize {
                break 'outer;
            }
            if (chunk >> shift) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn known_encodings() {
        assert_eq!(encode_graph6_string(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(encode_graph6_string(&Graph::complete(3).unwrap()), "Bw");
        assert_eq!(encode_graph6_string(&Graph::empty(1).unwrap()), "@");
        // path 0-1-2-3-4: bits (0,1)=1 (0,2)=0 (1,2)=1 (0,3)=0 (1,3)=0 (2,3)=1 | (x,4) = 0001
        assert_eq!(encode_graph6_string(&Graph::path(5).unwrap()), "DhC");
    }

    #[test]
    fn decode_known() {
        assert_eq!(decode_graph6(b"Bw").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(decode_graph6(b"A_").unwrap(), Graph::complete(2).unwrap());
    }

    #[test]
    fn long_header_round_trip() {
        let mut g = Graph::empty(100).unwrap();
        g.add_edge(0, 99).unwrap();
        g.add_edge(63, 64).unwrap();
        let enc = encode_graph6(&g);
        assert_eq!(&enc[..4], &[b'~', 63, 64, 63 + 36]);
        assert_eq!(decode_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(decode_graph6(b""), Err(Error::Graph6(Graph6Error::Empty)));
        assert!(matches!(
            decode_graph6(b"B w"),
            Err(Error::Graph6(Graph6Error::BadByte { position: 1, .. }))
        ));
        assert!(matches!(
            decode_graph6(b"D"),
            Err(Error::Graph6(Graph6Error::BodyLength {
                expected: 2,
                found: 0,
                ..
            }))
        ));
        assert!(matches!(
            decode_graph6(b"Bww"),
            Err(Error::Graph6(Graph6Error::BodyLength { .. }))
        ));
        assert_eq!(
            decode_graph6(b"~?"),
            Err(Error::Graph6(Graph6Error::TruncatedHeader))
        );
        assert_eq!(decode_graph6(b"?"), Err(Error::EmptyGraph));
    }
}
