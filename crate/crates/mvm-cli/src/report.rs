//! Benchmark report assembly: per-cell rows, ratio columns against the
//! exact baseline, and geometric-mean footers, rendered as CSV.

use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeomMeanError {
    #[error("geometric mean of an empty list")]
    Empty,
    #[error("geometric mean requires positive values, got {0}")]
    NonPositive(f64),
}

/// exp(mean(ln x)) over strictly positive values.
pub fn geometric_mean(values: &[f64]) -> Result<f64, GeomMeanError> {
    if values.is_empty() {
        return Err(GeomMeanError::Empty);
    }
    let mut log_sum = 0.0f64;
    for &v in values {
        if v <= 0.0 {
            return Err(GeomMeanError::NonPositive(v));
        }
        log_sum += v.ln();
    }
    Ok((log_sum / values.len() as f64).exp())
}

/// One (graph, algorithm) cell of a benchmark run. Ratio columns are
/// relative to the exact solver on the same graph; `rel_perf` is
/// exact-solver time over this algorithm's time.
#[derive(Debug, Clone)]
pub struct BenchRow {
    pub graph: String,
    pub algorithm: String,
    pub n_s: usize,
    pub n_t: usize,
    pub m: usize,
    pub weight: u64,
    pub cardinality: usize,
    pub time_s: f64,
    pub weight_ratio: f64,
    pub card_ratio: f64,
    pub rel_perf: f64,
    pub oracle_weight: Option<u64>,
}

/// Renders rows plus one geometric-mean footer per algorithm (in first
/// appearance order). Ratios are printed to six decimals in rows; the
/// footer means are computed from the printed row values and shown to
/// three decimals, so recomputing them from the emitted rows matches
/// exactly.
pub fn render_csv(rows: &[BenchRow], with_oracle: bool) -> String {
    let mut out = String::new();
    out.push_str(
        "graph,algorithm,n_s,n_t,m,weight,cardinality,time_s,weight_ratio,card_ratio,rel_perf",
    );
    if with_oracle {
        out.push_str(",oracle_weight");
    }
    out.push('\n');

    for row in rows {
        let _ = write!(
            out,
            "{},{},{},{},{},{},{},{:.6},{:.6},{:.6},{:.6}",
            row.graph,
            row.algorithm,
            row.n_s,
            row.n_t,
            row.m,
            row.weight,
            row.cardinality,
            row.time_s,
            row.weight_ratio,
            row.card_ratio,
            row.rel_perf
        );
        if with_oracle {
            match row.oracle_weight {
                Some(w) => {
                    let _ = write!(out, ",{w}");
                }
                None => out.push(','),
            }
        }
        out.push('\n');
    }

    let mut algorithms: Vec<&str> = Vec::new();
    for row in rows {
        if !algorithms.contains(&row.algorithm.as_str()) {
            algorithms.push(&row.algorithm);
        }
    }
    for algorithm in algorithms {
        let picked: Vec<&BenchRow> = rows.iter().filter(|r| r.algorithm == algorithm).collect();
        let column = |f: fn(&BenchRow) -> f64| -> String {
            let printed: Vec<f64> = picked.iter().map(|r| round6(f(r))).collect();
            match geometric_mean(&printed) {
                Ok(g) => format!("{g:.3}"),
                Err(_) => String::new(),
            }
        };
        let weight_gm = column(|r| r.weight_ratio);
        let card_gm = column(|r| r.card_ratio);
        let perf_gm = column(|r| r.rel_perf);
        let _ = write!(
            out,
            "geom_mean,{algorithm},,,,,,,{weight_gm},{card_gm},{perf_gm}"
        );
        if with_oracle {
            out.push(',');
        }
        out.push('\n');
    }
    out
}

fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}
