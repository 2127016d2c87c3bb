//! Edge-list input format: optional `#` comment lines, one line holding the
//! vertex count, then one `i j` pair per line with `1 <= i, j <= n`. Pairs
//! are normalized to `i < j`; duplicates (after normalization) are errors.
//! CRLF and blank lines are tolerated.

use std::collections::BTreeSet;
use std::fmt;

use cayley_core::perm::Transposition;
use cayley_core::transgraph::TranspositionSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<TranspositionSet, ParseError> {
    let mut n: Option<usize> = None;
    let mut members: Vec<Transposition> = Vec::new();
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match n {
            None => {
                if tokens.len() != 1 {
                    return Err(err(line_no, "expected a single vertex count"));
                }
                let v: usize = tokens[0]
                    .parse()
                    .map_err(|_| err(line_no, format!("invalid vertex count '{}'", tokens[0])))?;
                if v == 0 {
                    return Err(err(line_no, "vertex count must be at least 1"));
                }
                if v > 64 {
                    return Err(err(line_no, "vertex count exceeds the supported maximum of 64"));
                }
                n = Some(v);
            }
            Some(nv) => {
                if tokens.len() != 2 {
                    return Err(err(line_no, format!("expected 'i j', got '{line}'")));
                }
                let i: usize = tokens[0]
                    .parse()
                    .map_err(|_| err(line_no, format!("invalid vertex '{}'", tokens[0])))?;
                let j: usize = tokens[1]
                    .parse()
                    .map_err(|_| err(line_no, format!("invalid vertex '{}'", tokens[1])))?;
                for v in [i, j] {
                    if v == 0 || v > nv {
                        return Err(err(
                            line_no,
                            format!("vertex {v} out of range 1..={nv}"),
                        ));
                    }
                }
                if i == j {
                    return Err(err(line_no, format!("self-loop at vertex {i}")));
                }
                let pair = (i.min(j), i.max(j));
                if !seen.insert(pair) {
                    return Err(err(
                        line_no,
                        format!("duplicate edge {{{}, {}}}", pair.0, pair.1),
                    ));
                }
                members.push(
                    Transposition::new(pair.0 - 1, pair.1 - 1)
                        .expect("distinct validated points"),
                );
            }
        }
    }
    let Some(nv) = n else {
        return Err(err(last_line.max(1), "missing vertex count line"));
    };
    if members.is_empty() {
        return Err(err(last_line.max(1), "no edges listed"));
    }
    TranspositionSet::new(nv, members)
        .map_err(|e| err(last_line.max(1), format!("invalid transposition set: {e}")))
}
