//! Plain-text weight and matching files.
//!
//! Weight files carry one non-negative integer per line, all S weights
//! followed by all T weights. Matching files carry one `s t` index pair
//! per line plus a trailing `# weight=W cardinality=C` summary; `#`
//! lines are ignored on input.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use crate::matching::{matching_weight, Matching, WeightOverflow};
use crate::weights::VertexWeights;

#[derive(Debug, thiserror::Error)]
pub enum FileFormatError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: cannot parse '{content}'")]
    BadLine { line: usize, content: String },
    #[error("expected {expected} weights ({n_s} for S then {n_t} for T), found {found}")]
    WeightCount {
        expected: usize,
        found: usize,
        n_s: usize,
        n_t: usize,
    },
}

/// Reads a weight file sized for a graph with `n_s` S and `n_t` T
/// vertices.
pub fn read_weight_file<P: AsRef<Path>>(
    path: P,
    n_s: usize,
    n_t: usize,
) -> Result<VertexWeights, FileFormatError> {
    let file = File::open(path)?;
    read_weights(BufReader::new(file), n_s, n_t)
}

/// Reader-based form of [`read_weight_file`].
pub fn read_weights<R: BufRead>(
    reader: R,
    n_s: usize,
    n_t: usize,
) -> Result<VertexWeights, FileFormatError> {
    let mut values: Vec<u64> = Vec::with_capacity(n_s + n_t);
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let value = trimmed
            .parse::<u64>()
            .map_err(|_| FileFormatError::BadLine {
                line: i + 1,
                content: trimmed.to_string(),
            })?;
        values.push(value);
    }
    if values.len() != n_s + n_t {
        return Err(FileFormatError::WeightCount {
            expected: n_s + n_t,
            found: values.len(),
            n_s,
            n_t,
        });
    }
    let t = values.split_off(n_s);
    Ok(VertexWeights::new(values, t))
}

/// Writes weights in the format [`read_weights`] accepts.
pub fn write_weight_file<W: Write>(w: &VertexWeights, mut writer: W) -> io::Result<()> {
    for &value in w.side_weights(crate::graph::Side::S) {
        writeln!(writer, "{value}")?;
    }
    for &value in w.side_weights(crate::graph::Side::T) {
        writeln!(writer, "{value}")?;
    }
    Ok(())
}

/// Reads the `s t` pairs of a matching file; `#` comment lines and the
/// summary trailer are skipped.
pub fn read_matching_file<R: BufRead>(reader: R) -> Result<Vec<(usize, usize)>, FileFormatError> {
    let mut pairs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let pair = (|| {
            let s = fields.next()?.parse::<usize>().ok()?;
            let t = fields.next()?.parse::<usize>().ok()?;
            if fields.next().is_some() {
                return None;
            }
            Some((s, t))
        })();
        match pair {
            Some(p) => pairs.push(p),
            None => {
                return Err(FileFormatError::BadLine {
                    line: i + 1,
                    content: trimmed.to_string(),
                })
            }
        }
    }
    Ok(pairs)
}

/// Writes a matching as `s t` lines plus the summary trailer
/// `# weight=W cardinality=C`.
pub fn write_matching_file<W: Write>(
    m: &Matching,
    w: &VertexWeights,
    mut writer: W,
) -> Result<(), MatchingWriteError> {
    let weight = matching_weight(m, w)?;
    for (s, t) in m.pairs() {
        writeln!(writer, "{s} {t}")?;
    }
    writeln!(
        writer,
        "# weight={} cardinality={}",
        weight,
        m.cardinality()
    )?;
    Ok(())
}

#[derive(Debug, thiserror::Error)]
pub enum MatchingWriteError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Overflow(#[from] WeightOverflow),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_file_round_trip() {
        let w = VertexWeights::new(vec![5, 9], vec![1]);
        let mut out = Vec::new();
        write_weight_file(&w, &mut out).unwrap();
        let back = read_weights(out.as_slice(), 2, 1).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn weight_file_length_mismatch() {
        let text = "5\n9\n";
        let err = read_weights(text.as_bytes(), 2, 1).unwrap_err();
        assert!(matches!(
            err,
            FileFormatError::WeightCount {
                expected: 3,
                found: 2,
                ..
            }
        ));
    }

    #[test]
    fn weight_file_rejects_negatives_and_garbage() {
        for text in ["-3\n1\n1\n", "abc\n1\n1\n"] {
            assert!(matches!(
                read_weights(text.as_bytes(), 2, 1).unwrap_err(),
                FileFormatError::BadLine { line: 1, .. }
            ));
        }
    }

    #[test]
    fn matching_file_round_trip() {
        let m = Matching::from_pairs(2, 2, &[(0, 1), (1, 0)]).unwrap();
        let w = VertexWeights::new(vec![10, 8], vec![0, 0]);
        let mut out = Vec::new();
        write_matching_file(&m, &w, &mut out).unwrap();
        let text = String::from_utf8(out.clone()).unwrap();
        assert!(text.ends_with("# weight=18 cardinality=2\n"), "{text}");
        let pairs = read_matching_file(out.as_slice()).unwrap();
        assert_eq!(pairs, vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn matching_file_rejects_short_lines() {
        let err = read_matching_file("0\n".as_bytes()).unwrap_err();
        assert!(matches!(err, FileFormatError::BadLine { line: 1, .. }));
    }
}
