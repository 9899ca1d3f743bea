//! graph6 encoding and decoding (header-less ASCII lines, n <= 64).
//!
//! A line is a size header followed by the upper triangle of the adjacency
//! matrix in column order, packed six bits per printable character
//! (offset 63). Orders up to 62 use a one-character header; 63 and 64 use
//! the `~` three-character form.

use crate::graph::{Graph, MAX_VERTICES};
use std::fmt;
use std::io::BufRead;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Graph6Error {
    /// Empty input line.
    Empty,
    /// A byte outside the printable graph6 range 63..=126.
    InvalidChar { pos: usize, byte: u8 },
    /// The header uses the 8-byte form reserved for n > 258047.
    HugeHeader,
    /// Decoded order is 0 or exceeds 64.
    UnsupportedOrder { n: usize },
    /// Fewer edge characters than the order requires.
    Truncated { expected: usize, found: usize },
    /// More characters than the order requires.
    TrailingData { extra: usize },
    /// Unused padding bits in the final character are not zero.
    NonZeroPadding,
    /// Underlying read failure while streaming.
    Io(String),
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 line"),
            Graph6Error::InvalidChar { pos, byte } => {
                write!(f, "invalid graph6 byte 0x{byte:02x} at position {pos}")
            }
            Graph6Error::HugeHeader => write!(f, "8-byte size header not supported (n > 258047)"),
            Graph6Error::UnsupportedOrder { n } => {
                write!(f, "order {n} outside supported range 1..=64")
            }
            Graph6Error::Truncated { expected, found } => {
                write!(
                    f,
                    "truncated edge data: expected {expected} chars, found {found}"
                )
            }
            Graph6Error::TrailingData { extra } => {
                write!(f, "{extra} unexpected trailing characters")
            }
            Graph6Error::NonZeroPadding => write!(f, "non-zero padding bits"),
            Graph6Error::Io(msg) => write!(f, "read failed: {msg}"),
        }
    }
}

impl std::error::Error for Graph6Error {}

fn sextets(line: &str) -> Result<Vec<u8>, Graph6Error> {
    line.bytes()
        .enumerate()
        .map(|(pos, byte)| {
            if (63..=126).contains(&byte) {
                Ok(byte - 63)
            } else {
                Err(Graph6Error::InvalidChar { pos, byte })
            }
        })
        .collect()
}

/// Decodes one graph6 line into a graph.
pub fn from_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\r', '\n']);
    if line.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let vals = sextets(line)?;

    let (n, header_len) = if vals[0] < 63 {
        (vals[0] as usize, 1)
    } else if vals.len() >= 2 && vals[1] == 63 {
        return Err(Graph6Error::HugeHeader);
    } else if vals.len() < 4 {
        return Err(Graph6Error::Truncated {
            expected: 4,
            found: vals.len(),
        });
    } else {
        let n = ((vals[1] as usize) << 12) | ((vals[2] as usize) << 6) | vals[3] as usize;
        (n, 4)
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Graph6Error::UnsupportedOrder { n });
    }

    let pair_bits = n * (n - 1) / 2;
    let expected_chars = header_len + pair_bits.div_ceil(6);
    if vals.len() < expected_chars {
        return Err(Graph6Error::Truncated {
            expected: expected_chars,
            found: vals.len(),
        });
    }
    if vals.len() > expected_chars {
        return Err(Graph6Error::TrailingData {
            extra: vals.len() - expected_chars,
        });
    }

    let bit = |idx: usize| -> bool {
        let c = vals[header_len + idx / 6];
        c >> (5 - idx % 6) & 1 == 1
    };

    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(idx) {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    // padding bits beyond the triangle must be zero
    for extra in pair_bits..(pair_bits.div_ceil(6) * 6) {
        if bit(extra) {
            return Err(Graph6Error::NonZeroPadding);
        }
    }

    Ok(Graph::from_edges(n, &edges))
}

/// Encodes a graph as a canonical graph6 line (labeled edge set; no reordering).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut vals: Vec<u8> = if n <= 62 {
        vec![n as u8]
    } else {
        vec![63, (n >> 12) as u8 & 63, (n >> 6) as u8 & 63, n as u8 & 63]
    };

    let header_len = vals.len();
    let pair_bits = n * (n - 1) / 2;
    vals.resize(header_len + pair_bits.div_ceil(6), 0);
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                vals[header_len + idx / 6] |= 1 << (5 - idx % 6);
            }
            idx += 1;
        }
    }
    vals.into_iter().map(|s| (s + 63) as char).collect()
}

/// A graph6 parse failure tagged with its 1-based line number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph6LineError {
    pub line: usize,
    pub error: Graph6Error,
}

impl fmt::Display for Graph6LineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.error)
    }
}

impl std::error::Error for Graph6LineError {}

/// What to do with lines that fail to parse in a graph6 stream.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OnBadLine {
    Abort,
    Skip,
}

/// Streaming reader over newline-delimited graph6 input. Blank lines are
/// ignored; every parse error carries its line number.
pub struct Graph6Reader<R: BufRead> {
    lines: std::io::Lines<R>,
    line_no: usize,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(reader: R) -> Self {
        Graph6Reader {
            lines: reader.lines(),
            line_no: 0,
        }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<Graph, Graph6LineError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let line = self.lines.next()?;
            self.line_no += 1;
            let line = match line {
                Ok(l) => l,
                Err(e) => {
                    return Some(Err(Graph6LineError {
                        line: self.line_no,
                        error: Graph6Error::Io(e.to_string()),
                    }))
                }
            };
            if line.trim().is_empty() {
                continue;
            }
            return Some(from_graph6(&line).map_err(|error| Graph6LineError {
                line: self.line_no,
                error,
            }));
        }
    }
}

/// Reads a whole graph6 stream. In `Abort` mode the first bad line is
/// returned as the error; in `Skip` mode bad lines are collected alongside
/// the successfully parsed graphs.
pub fn read_graph6_stream<R: BufRead>(
    reader: R,
    mode: OnBadLine,
) -> Result<(Vec<Graph>, Vec<Graph6LineError>), Graph6LineError> {
    let mut graphs = Vec::new();
    let mut bad = Vec::new();
    for item in Graph6Reader::new(reader) {
        match item {
            Ok(g) => graphs.push(g),
            Err(e) => match mode {
                OnBadLine::Abort => return Err(e),
                OnBadLine::Skip => bad.push(e),
            },
        }
    }
    Ok((graphs, bad))
}
