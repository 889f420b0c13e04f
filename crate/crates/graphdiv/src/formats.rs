//! Graph file formats: graph6, DIMACS `.col`, and plain edge lists.
//!
//! Parsers are strict and writers emit canonical bytes, so `parse ∘ encode`
//! and `encode ∘ parse` are identities. Format reference for graph6:
//! <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>

use thiserror::Error;

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("graph6: empty input")]
    Graph6Empty,
    #[error("graph6: byte {byte:#04x} at position {pos} outside the printable range 63..=126")]
    Graph6InvalidChar { pos: usize, byte: u8 },
    #[error("graph6: malformed size header")]
    Graph6BadHeader,
    #[error("graph6: expected {expected} data characters, found {found}")]
    Graph6Truncated { expected: usize, found: usize },
    #[error("graph6: trailing data beyond {expected} data characters")]
    Graph6TrailingData { expected: usize },
    #[error("graph6: nonzero padding bits")]
    Graph6PaddingBits,
    #[error("dimacs: line {line}: {reason}")]
    Dimacs { line: usize, reason: String },
    #[error("edge list: line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
}

// ============================================================================
// graph6
// ============================================================================

/// Decodes one graph6 line into a graph.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Graph6Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::Graph6InvalidChar { pos, byte: b });
        }
    }

    // Size header: 1, 4, or 8 characters.
    let (n, data_start) = if bytes[0] != b'~' {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != b'~' {
        if bytes.len() < 4 {
            return Err(ParseError::Graph6BadHeader);
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(ParseError::Graph6BadHeader);
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 8)
    };

    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    let data = &bytes[data_start..];
    if data.len() < expected {
        return Err(ParseError::Graph6Truncated {
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(ParseError::Graph6TrailingData { expected });
    }

    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;

    // Check padding bits are zero.
    for k in bit_count..expected * 6 {
        if bit(k) {
            return Err(ParseError::Graph6PaddingBits);
        }
    }

    // Upper triangle in column order: (0,1),(0,2),(1,2),(0,3),...
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges).map_err(|_| ParseError::Graph6BadHeader)
}

/// Encodes a graph as a canonical graph6 line (padding bits zero, minimal
/// size header).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        out.push(b'~');
        out.push(b'~');
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }

    let bit_count = n * n.saturating_sub(1) / 2;
    let mut groups = vec![0u8; bit_count.div_ceil(6)];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                groups[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    out.extend(groups.iter().map(|b| b + 63));
    String::from_utf8(out).expect("printable ascii")
}

// ============================================================================
// DIMACS .col
// ============================================================================

/// Parses a DIMACS `.col` file: `c` comments, a single `p edge n m` header,
/// then `m` lines `e u v` with 1-indexed endpoints.
pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut edge_lines = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(ParseError::Dimacs {
                        line: line_no,
                        reason: "duplicate p line".into(),
                    });
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(ParseError::Dimacs {
                        line: line_no,
                        reason: "expected `p edge <n> <m>`".into(),
                    });
                }
                let n = parse_field(fields[2], line_no, "vertex count")?;
                let m = parse_field(fields[3], line_no, "edge count")?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or(ParseError::Dimacs {
                    line: line_no,
                    reason: "e line before p line".into(),
                })?;
                if fields.len() != 3 {
                    return Err(ParseError::Dimacs {
                        line: line_no,
                        reason: "expected `e <u> <v>`".into(),
                    });
                }
                let u: usize = parse_field(fields[1], line_no, "endpoint")?;
                let v: usize = parse_field(fields[2], line_no, "endpoint")?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(ParseError::Dimacs {
                        line: line_no,
                        reason: format!("endpoint outside 1..={n}"),
                    });
                }
                if u == v {
                    return Err(ParseError::Dimacs {
                        line: line_no,
                        reason: format!("loop at vertex {u}"),
                    });
                }
                edges.push((u - 1, v - 1));
                edge_lines += 1;
            }
            other => {
                return Err(ParseError::Dimacs {
                    line: line_no,
                    reason: format!("unknown record `{other}`"),
                });
            }
        }
    }
    let (n, m) = header.ok_or(ParseError::Dimacs {
        line: 0,
        reason: "missing p line".into(),
    })?;
    if edge_lines != m {
        return Err(ParseError::Dimacs {
            line: 0,
            reason: format!("header declares {m} edges, found {edge_lines}"),
        });
    }
    Graph::from_edge_list(n, &edges).map_err(|e| ParseError::Dimacs {
        line: 0,
        reason: e.to_string(),
    })
}

fn parse_field(s: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    s.parse().map_err(|_| ParseError::Dimacs {
        line,
        reason: format!("bad {what} `{s}`"),
    })
}

/// Writes the canonical DIMACS form: header, then edges `u < v` ascending,
/// 1-indexed.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

// ============================================================================
// Plain edge list
// ============================================================================

/// Parses the plain format: first line `n`, then one `u v` pair per line,
/// 0-indexed. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match n {
            None => {
                if fields.len() != 1 {
                    return Err(ParseError::EdgeList {
                        line: line_no,
                        reason: "expected vertex count on the first line".into(),
                    });
                }
                n = Some(fields[0].parse().map_err(|_| ParseError::EdgeList {
                    line: line_no,
                    reason: format!("bad vertex count `{}`", fields[0]),
                })?);
            }
            Some(_) => {
                if fields.len() != 2 {
                    return Err(ParseError::EdgeList {
                        line: line_no,
                        reason: "expected `u v`".into(),
                    });
                }
                let parse = |s: &str| -> Result<usize, ParseError> {
                    s.parse().map_err(|_| ParseError::EdgeList {
                        line: line_no,
                        reason: format!("bad endpoint `{s}`"),
                    })
                };
                edges.push((parse(fields[0])?, parse(fields[1])?));
            }
        }
    }
    let n = n.ok_or(ParseError::EdgeList {
        line: 0,
        reason: "empty input".into(),
    })?;
    Graph::from_edge_list(n, &edges).map_err(|e| ParseError::EdgeList {
        line: 0,
        reason: e.to_string(),
    })
}

/// Writes the canonical edge-list form: `n`, then edges `u < v` ascending.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

// ============================================================================
// Tests
// ============================================================================
