//! Matrix Market coordinate files read as bipartite graphs.
//!
//! Rows map to S, columns to T, and the one-based indices become
//! zero-based. Only the structure is kept: numeric values are ignored
//! and duplicate coordinates collapse to one edge. Accepted headers are
//! `%%MatrixMarket matrix coordinate {real|integer|pattern} general`;
//! symmetric files are rejected because the bipartite interpretation
//! needs a rectangular general matrix.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use crate::graph::{BipartiteGraph, GraphError};

#[derive(Debug, thiserror::Error)]
pub enum MmError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

fn parse_error(line: usize, message: impl Into<String>) -> MmError {
    MmError::Parse {
        line,
        message: message.into(),
    }
}

/// Parses a Matrix Market coordinate stream into a bipartite graph.
pub fn parse_matrix_market<R: BufRead>(reader: R) -> Result<BipartiteGraph, MmError> {
    let mut lines = reader.lines().enumerate();

    let (header_no, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "empty input, expected a %%MatrixMarket header"))
        .and_then(|(i, line)| Ok((i + 1, line?)))?;
    parse_header(header_no, &header)?;

    let mut dims: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for (i, line) in lines {
        let line_no = i + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        match dims {
            None => {
                let fields: Vec<&str> = trimmed.split_whitespace().collect();
                if fields.len() != 3 {
                    return Err(parse_error(
                        line_no,
                        format!("expected 'rows cols entries', got {} fields", fields.len()),
                    ));
                }
                let parse = |text: &str, what: &str| {
                    text.parse::<usize>()
                        .map_err(|_| parse_error(line_no, format!("cannot parse {what}: '{text}'")))
                };
                let n_s = parse(fields[0], "row count")?;
                let n_t = parse(fields[1], "column count")?;
                let nnz = parse(fields[2], "entry count")?;
                edges.reserve(nnz);
                dims = Some((n_s, n_t, nnz));
            }
            Some((n_s, n_t, nnz)) => {
                if edges.len() == nnz {
                    return Err(parse_error(
                        line_no,
                        format!("more than the declared {nnz} entries"),
                    ));
                }
                let fields: Vec<&str> = trimmed.split_whitespace().collect();
                if fields.len() < 2 {
                    return Err(parse_error(line_no, "entry needs at least 'row col'"));
                }
                let parse = |text: &str, what: &str| {
                    text.parse::<usize>()
                        .map_err(|_| parse_error(line_no, format!("cannot parse {what}: '{text}'")))
                };
                let row = parse(fields[0], "row index")?;
                let col = parse(fields[1], "column index")?;
                if row == 0 || row > n_s || col == 0 || col > n_t {
                    return Err(parse_error(
                        line_no,
                        format!("entry ({row}, {col}) outside declared bounds {n_s} x {n_t}"),
                    ));
                }
                edges.push((row - 1, col - 1));
            }
        }
    }

    let (n_s, n_t, nnz) =
        dims.ok_or_else(|| parse_error(2, "missing the 'rows cols entries' size line"))?;
    if edges.len() != nnz {
        return Err(parse_error(
            0,
            format!("declared {nnz} entries but found {}", edges.len()),
        ));
    }

    BipartiteGraph::build(n_s, n_t, &edges).map_err(|e| match e {
        GraphError::EdgeOutOfRange { .. } => parse_error(0, e.to_string()),
    })
}

fn parse_header(line_no: usize, header: &str) -> Result<(), MmError> {
    let mut fields = header.split_whitespace();
    if fields.next() != Some("%%MatrixMarket") {
        return Err(parse_error(
            line_no,
            "header must start with %%MatrixMarket",
        ));
    }
    let expect = |actual: Option<&str>, wanted: &[&str], what: &str| -> Result<String, MmError> {
        match actual {
            Some(token) if wanted.contains(&token.to_ascii_lowercase().as_str()) => {
                Ok(token.to_ascii_lowercase())
            }
            Some(token) => Err(parse_error(
                line_no,
                format!("unsupported {what} '{token}', expected one of {wanted:?}"),
            )),
            None => Err(parse_error(line_no, format!("missing {what} in header"))),
        }
    };
    expect(fields.next(), &["matrix"], "object")?;
    expect(fields.next(), &["coordinate"], "format")?;
    expect(fields.next(), &["real", "integer", "pattern"], "field")?;
    let symmetry = expect(
        fields.next(),
        &["general", "symmetric", "skew-symmetric", "hermitian"],
        "symmetry",
    )?;
    if symmetry != "general" {
        return Err(parse_error(
            line_no,
            format!("symmetry '{symmetry}' not supported; bipartite ingestion needs 'general'"),
        ));
    }
    Ok(())
}

/// Reads a Matrix Market file from disk.
pub fn read_matrix_market<P: AsRef<Path>>(path: P) -> Result<BipartiteGraph, MmError> {
    let file = File::open(path)?;
    parse_matrix_market(BufReader::new(file))
}

/// Writes `g` as a pattern-field coordinate file, the inverse of
/// [`parse_matrix_market`] up to comments and entry order.
pub fn write_matrix_market<W: Write>(g: &BipartiteGraph, mut writer: W) -> io::Result<()> {
    writeln!(writer, "%%MatrixMarket matrix coordinate pattern general")?;
    writeln!(writer, "{} {} {}", g.n_s(), g.n_t(), g.edge_count())?;
    for (s, t) in g.edges() {
        writeln!(writer, "{} {}", s + 1, t + 1)?;
    }
    Ok(())
}
