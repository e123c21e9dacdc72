//! graph6: the upper triangle of the adjacency matrix in column order
//! `(0,1) (0,2) (1,2) (0,3) ...`, six bits per printable byte.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// Largest order the 4-byte graph6 header can express.
pub const GRAPH6_MAX_ORDER: usize = 258_047;

const BIAS: u8 = 63;
const LONG_HEADER: u8 = 126;
const FILE_HEADER: &str = ">>graph6<<";

fn codec_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Codec {
        offset,
        reason: reason.into(),
    }
}

pub fn graph6_encode(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: GRAPH6_MAX_ORDER,
        });
    }
    let bits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(4 + bits.div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(LONG_HEADER);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        None => Err(codec_err(offset, "record truncated")),
        Some(&b) if (BIAS..=126).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(codec_err(offset, format!("byte {b} outside 63..=126"))),
    }
}

/// Decodes one record. An optional `>>graph6<<` prefix is accepted;
/// surrounding whitespace is not.
pub fn graph6_decode(record: &str) -> Result<Graph> {
    let skip = if record.starts_with(FILE_HEADER) {
        FILE_HEADER.len()
    } else {
        0
    };
    let bytes = &record.as_bytes()[skip..];
    let at = |i: usize| skip + i;

    let first = *bytes
        .first()
        .ok_or_else(|| codec_err(at(0), "empty record"))?;
    let (n, body_start) = if first == LONG_HEADER {
        if bytes.get(1) == Some(&LONG_HEADER) {
            return Err(Error::OrderTooLarge {
                order: GRAPH6_MAX_ORDER + 1,
                max: MAX_ORDER,
            });
        }
        let mut n = 0usize;
        for i in 1..4 {
            n = n << 6 | sextet(bytes, i).map_err(|e| shift_offset(e, skip))? as usize;
        }
        (n, 4)
    } else {
        (
            sextet(bytes, 0).map_err(|e| shift_offset(e, skip))? as usize,
            1,
        )
    };
    if n == 0 {
        return Err(codec_err(at(0), "order 0 is not a graph"));
    }
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: MAX_ORDER,
        });
    }

    let bits = n * (n - 1) / 2;
    let body_len = bits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < body_len {
        return Err(codec_err(at(bytes.len()), "record truncated"));
    }
    if body.len() > body_len {
        return Err(codec_err(
            at(body_start + body_len),
            "trailing bytes after body",
        ));
    }

    let mut g = Graph::edgeless(n)?;
    let (mut u, mut v) = (0, 1);
    for (i, _) in body.iter().enumerate() {
        let offset = body_start + i;
        let word = sextet(bytes, offset).map_err(|e| shift_offset(e, skip))?;
        for bit in (0..6).rev() {
            let set = word >> bit & 1 == 1;
            if v >= n {
                if set {
                    return Err(codec_err(at(offset), "nonzero padding bits"));
                }
                continue;
            }
            if set {
                g.insert_edge(u, v);
            }
            u += 1;
            if u == v {
                u = 0;
                v += 1;
            }
        }
    }
    Ok(g)
}

fn shift_offset(err: Error, skip: usize) -> Error {
    match err {
        Error::Codec { offset, reason } => Error::Codec {
            offset: offset + skip,
            reason,
        },
        other => other,
    }
}

/// Decodes a newline-separated stream, skipping blank lines.
/// Errors carry the 1-based line number.
pub fn read_graph6<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Err(e) => Some(Err(Error::from(e))),
            Ok(line) => {
                let line = line.trim_end_matches('\r');
                if line.is_empty() {
                    None
                } else {
                    Some(graph6_decode(line).map_err(|e| in_line(e, i + 1)))
                }
            }
        })
}

pub(crate) fn in_line(err: Error, line: usize) -> Error {
    match err {
        Error::Codec { offset, reason } => Error::Parse {
            line,
            reason: format!("graph6 byte {offset}: {reason}"),
        },
        other => other,
    }
}
