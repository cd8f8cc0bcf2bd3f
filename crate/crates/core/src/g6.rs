//! graph6 codec (short form, `n <= 62`).
//!
//! A record is one size byte `n + 63` followed by `ceil(n(n-1)/2 / 6)` data
//! bytes. The upper triangle is packed column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), six bits per byte, most
//! significant bit first, each group offset by 63. Unused trailing bits
//! must be zero.

use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

/// Optional header that may prefix a graph6 file.
pub const HEADER: &[u8] = b">>graph6<<";

const SHORT_FORM_MAX: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum G6Error {
    #[error("bad size byte {0:#04x}")]
    BadHeader(u8),
    #[error("empty record")]
    EmptyRecord,
    #[error("expected {expected} data bytes for n={n}, found {found}")]
    BadLength { n: usize, expected: usize, found: usize },
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("nonzero padding bits in the last byte")]
    BadPadding,
    #[error("graph on {0} vertices exceeds capacity of {MAX_VERTICES}")]
    CapacityExceeded(usize),
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one record. Surrounding whitespace is not accepted.
pub fn decode(line: &[u8]) -> Result<Graph, G6Error> {
    let (&size, data) = line.split_first().ok_or(G6Error::EmptyRecord)?;
    if !(63..=126).contains(&size) || size == 126 {
        return Err(G6Error::BadHeader(size));
    }
    let n = (size - 63) as usize;
    debug_assert!(n <= SHORT_FORM_MAX);
    if n == 0 {
        return Err(G6Error::BadHeader(size));
    }
    let expected = data_len(n);
    if data.len() != expected {
        return Err(G6Error::BadLength {
            n,
            expected,
            found: data.len(),
        });
    }
    for (offset, &byte) in data.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(G6Error::BadByte {
                offset: offset + 1,
                byte,
            });
        }
    }
    let total_bits = n * (n - 1) / 2;
    if !total_bits.is_multiple_of(6) {
        let last = data[expected - 1] - 63;
        let unused = 6 - total_bits % 6;
        if last & ((1u8 << unused) - 1) != 0 {
            return Err(G6Error::BadPadding);
        }
    }
    if n > MAX_VERTICES {
        return Err(G6Error::CapacityExceeded(n));
    }
    let mut rows = vec![0u32; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_adjacency(&rows).map_err(|e| match e {
        GraphError::CapacityExceeded(n) => G6Error::CapacityExceeded(n),
        other => unreachable!("decoded adjacency is symmetric: {other}"),
    })
}

/// Encodes a graph; the output is canonical (zero padding).
pub fn encode(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    out
}

/// [`encode`] as a `String`; graph6 is always printable ASCII.
pub fn encode_string(g: &Graph) -> String {
    String::from_utf8(encode(g)).expect("graph6 output is ASCII")
}

/// One line of a graph6 stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct G6Record {
    /// 1-based line number in the source.
    pub line: u64,
    pub graph: Result<Graph, G6Error>,
}

/// Lazy, single-pass reader over newline separated graph6 records.
///
/// Blank lines are skipped, an optional `>>graph6<<` header is stripped and
/// decode failures are yielded in-band so one bad line does not end the
/// stream. I/O errors end iteration with an `Err`.
pub struct G6Reader<R> {
    inner: R,
    buf: Vec<u8>,
    line: u64,
}

impl<R: BufRead> G6Reader<R> {
    pub fn new(inner: R) -> Self {
        G6Reader {
            inner,
            buf: Vec::with_capacity(64),
            line: 0,
        }
    }
}

/// Strips the line terminator and an optional header prefix.
pub fn record_bytes(raw: &[u8]) -> &[u8] {
    let mut s = raw;
    while let [rest @ .., b'\n' | b'\r'] = s {
        s = rest;
    }
    s.strip_prefix(HEADER).unwrap_or(s)
}

impl<R: BufRead> Iterator for G6Reader<R> {
    type Item = std::io::Result<G6Record>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.inner.read_until(b'\n', &mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(e)),
            }
            self.line += 1;
            let rec = record_bytes(&self.buf);
            if rec.is_empty() {
                continue;
            }
            return Some(Ok(G6Record {
                line: self.line,
                graph: decode(rec),
            }));
        }
    }
}

/// Convenience wrapper around [`G6Reader::new`].
pub fn stream<R: BufRead>(source: R) -> G6Reader<R> {
    G6Reader::new(source)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Hand packing of an upper-triangle bit vector, independent of `encode`.
    fn pack(n: usize, bits: &[bool]) -> Vec<u8> {
        let mut out = vec![n as u8 + 63];
        for chunk in bits.chunks(6) {
            let mut v = 0u8;
            for (i, &b) in chunk.iter().enumerate() {
                if b {
                    v |= 1 << (5 - i);
                }
            }
            out.push(v + 63);
        }
        out
    }

    #[test]
    fn k6_round_trip() {
        assert_eq!(pack(6, &[true; 15]), b"E~~w");
        let k6 = Graph::complete(6).unwrap();
        assert_eq!(encode(&k6), b"E~~w");
        assert_eq!(decode(b"E~~w").unwrap(), k6);
    }

    #[test]
    fn tiny_graphs() {
        let one = decode(b"@").unwrap();
        assert_eq!((one.order(), one.edge_count()), (1, 0));
        assert_eq!(encode(&one), b"@");
        assert_eq!(encode(&Graph::empty(2).unwrap()), b"A?");
        assert_eq!(encode(&Graph::path(2).unwrap()), b"A_");
        assert_eq!(pack(2, &[true]), b"A_");
    }

    #[test]
    fn column_major_bit_order() {
        // only x(1,2) set: third bit of the first group
        let g = Graph::from_edges(3, &[(1, 2)]).unwrap();
        assert_eq!(encode(&g), pack(3, &[false, false, true]));
        // only x(0,3): fourth bit
        let g = Graph::from_edges(4, &[(0, 3)]).unwrap();
        assert_eq!(encode(&g), pack(4, &[false, false, false, true, false, false]));
    }

    #[test]
    fn decode_errors() {
        assert_eq!(decode(b""), Err(G6Error::EmptyRecord));
        assert_eq!(decode(b"?"), Err(G6Error::BadHeader(b'?')));
        assert_eq!(decode(b"~"), Err(G6Error::BadHeader(b'~')));
        assert_eq!(decode(b" "), Err(G6Error::BadHeader(b' ')));
        assert_eq!(
            decode(b"E~~"),
            Err(G6Error::BadLength {
                n: 6,
                expected: 3,
                found: 2
            })
        );
        assert_eq!(decode(b"E~ w"), Err(G6Error::BadByte { offset: 2, byte: b' ' }));
        // 15 bits in three bytes: low 3 bits of the last byte are padding
        assert_eq!(decode(b"E~~x"), Err(G6Error::BadPadding));
        assert_eq!(decode(b"A`"), Err(G6Error::BadPadding));
        let n40 = {
            let mut v = vec![40 + 63];
            v.extend(std::iter::repeat_n(63, data_len(40)));
            v
        };
        assert_eq!(decode(&n40), Err(G6Error::CapacityExceeded(40)));
    }

    #[test]
    fn reader_isolates_bad_lines() {
        let src = b">>graph6<<E~~w\r\nbad\n\nA_\n";
        let recs: Vec<G6Record> = stream(&src[..]).map(|r| r.unwrap()).collect();
        assert_eq!(recs.len(), 3);
        assert_eq!(recs[0].line, 1);
        assert_eq!(recs[0].graph, Ok(Graph::complete(6).unwrap()));
        assert_eq!(recs[1].line, 2);
        assert!(recs[1].graph.is_err());
        assert_eq!(recs[2].line, 4);
        assert_eq!(recs[2].graph, Ok(Graph::path(2).unwrap()));
    }
}
