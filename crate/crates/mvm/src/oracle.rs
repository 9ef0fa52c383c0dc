//! Brute-force oracles and path-based verifiers.
//!
//! The enumeration oracle walks every matching of a small graph by
//! recursive edge inclusion/exclusion and is deliberately independent
//! of the solver code paths it is used to check. The verifiers test the
//! two structural conditions that characterize an optimal matching:
//! no augmenting path and no increasing path, optionally bounded in
//! length and restricted to given start vertices.

use crate::graph::{BipartiteGraph, Side, Vertex};
use crate::matching::{lex_compare, Matching, WeightVector};
use crate::search::AlternatingSearch;
use crate::weights::VertexWeights;
use std::cmp::Ordering;

/// Edge-count cap for the exponential enumeration. 2^24 edge subsets is
/// the most a desk-scale test run should ever pay for.
pub const ENUMERATION_EDGE_GUARD: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("graph has {m} edges, above the enumeration guard of {guard}")]
    TooManyEdges { m: usize, guard: usize },
    #[error("optimal weight exceeds the u64 range")]
    WeightOverflow,
}

/// Everything the enumeration learns about a small instance.
#[derive(Debug, Clone)]
pub struct OracleResult {
    /// Maximum matching weight over all matchings.
    pub best_weight: u64,
    /// Every matching attaining `best_weight`, as sorted edge lists.
    pub best_matchings: Vec<Vec<(usize, usize)>>,
    /// Maximum cardinality over all matchings (not only the optima).
    pub best_cardinality: usize,
    /// Lexicographically maximum weight vector over all matchings.
    pub lex_max_vector: WeightVector,
}

/// Invokes `visit` once for every matching of `g` (the empty matching
/// included), as a slice of (s, t) pairs in edge-list order.
pub fn for_each_matching<F: FnMut(&[(usize, usize)])>(
    g: &BipartiteGraph,
    mut visit: F,
) -> Result<(), OracleError> {
    if g.edge_count() > ENUMERATION_EDGE_GUARD {
        return Err(OracleError::TooManyEdges {
            m: g.edge_count(),
            guard: ENUMERATION_EDGE_GUARD,
        });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut used_s = vec![false; g.n_s()];
    let mut used_t = vec![false; g.n_t()];
    let mut current: Vec<(usize, usize)> = Vec::new();
    recurse(
        &edges,
        0,
        &mut used_s,
        &mut used_t,
        &mut current,
        &mut visit,
    );
    Ok(())
}

fn recurse<F: FnMut(&[(usize, usize)])>(
    edges: &[(usize, usize)],
    i: usize,
    used_s: &mut [bool],
    used_t: &mut [bool],
    current: &mut Vec<(usize, usize)>,
    visit: &mut F,
) {
    if i == edges.len() {
        visit(current);
        return;
    }
    let (s, t) = edges[i];
    recurse(edges, i + 1, used_s, used_t, current, visit);
    if !used_s[s] && !used_t[t] {
        used_s[s] = true;
        used_t[t] = true;
        current.push((s, t));
        recurse(edges, i + 1, used_s, used_t, current, visit);
        current.pop();
        used_s[s] = false;
        used_t[t] = false;
    }
}

/// Enumerates every matching and reports the exact optimum: maximum
/// weight, all matchings attaining it, the maximum cardinality, and the
/// lex-max weight vector.
pub fn brute_force_mvm(g: &BipartiteGraph, w: &VertexWeights) -> Result<OracleResult, OracleError> {
    assert!(w.fits(g), "weights sized for graph");
    let mut best_weight: Option<u128> = None;
    let mut best_matchings: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut best_cardinality = 0usize;
    let mut lex_max = WeightVector::from_unsorted(Vec::new());

    for_each_matching(g, |pairs| {
        let weight: u128 = pairs
            .iter()
            .map(|&(s, t)| w.weight(Vertex::s(s)) as u128 + w.weight(Vertex::t(t)) as u128)
            .sum();
        best_cardinality = best_cardinality.max(pairs.len());
        match best_weight.map(|bw| weight.cmp(&bw)) {
            None | Some(Ordering::Greater) => {
                best_weight = Some(weight);
                best_matchings.clear();
                best_matchings.push(sorted_pairs(pairs));
            }
            Some(Ordering::Equal) => best_matchings.push(sorted_pairs(pairs)),
            Some(Ordering::Less) => {}
        }
        let vector = pair_weight_vector(pairs, w);
        if lex_compare(&vector, &lex_max) == Ordering::Greater {
            lex_max = vector;
        }
    })?;

    let best_weight = best_weight.expect("the empty matching is always enumerated");
    Ok(OracleResult {
        best_weight: u64::try_from(best_weight).map_err(|_| OracleError::WeightOverflow)?,
        best_matchings,
        best_cardinality,
        lex_max_vector: lex_max,
    })
}

/// Lex-max weight vector over all matchings of `g`.
pub fn brute_force_lex_max_vector(
    g: &BipartiteGraph,
    w: &VertexWeights,
) -> Result<WeightVector, OracleError> {
    brute_force_mvm(g, w).map(|r| r.lex_max_vector)
}

fn sorted_pairs(pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut v = pairs.to_vec();
    v.sort_unstable();
    v
}

fn pair_weight_vector(pairs: &[(usize, usize)], w: &VertexWeights) -> WeightVector {
    let mut values = Vec::with_capacity(2 * pairs.len());
    for &(s, t) in pairs {
        values.push(w.weight(Vertex::s(s)));
        values.push(w.weight(Vertex::t(t)));
    }
    WeightVector::from_unsorted(values)
}

/// True iff no augmenting path exists for `m` in `g`. `max_len` bounds
/// the path length in edges; `from_set` restricts the start vertices
/// (matched members are ignored). Without either bound this is the full
/// optimality condition on cardinality.
pub fn verify_no_augmenting(
    g: &BipartiteGraph,
    m: &Matching,
    max_len: Option<usize>,
    from_set: Option<&[Vertex]>,
) -> bool {
    let mut search = AlternatingSearch::new(g.n_s(), g.n_t());
    let check = |v: Vertex, search: &mut AlternatingSearch| -> bool {
        if m.is_matched(v) {
            return true;
        }
        search.run(g, m, v, max_len);
        search.unmatched_hits().is_empty()
    };
    match from_set {
        Some(set) => set.iter().all(|&v| check(v, &mut search)),
        None => {
            let all = g.vertices(Side::S).chain(g.vertices(Side::T));
            for v in all {
                if !check(v, &mut search) {
                    return false;
                }
            }
            true
        }
    }
}

/// True iff no increasing path exists for `m` in `g`: no even-length
/// alternating path from an unmatched vertex `u` to a matched vertex
/// `u'` with `weight(u) > weight(u')`. `max_len` bounds the path length
/// in edges.
pub fn verify_no_increasing(
    g: &BipartiteGraph,
    m: &Matching,
    w: &VertexWeights,
    max_len: Option<usize>,
) -> bool {
    assert!(w.fits(g), "weights sized for graph");
    let mut search = AlternatingSearch::new(g.n_s(), g.n_t());
    for u in g.vertices(Side::S).chain(g.vertices(Side::T)) {
        if m.is_matched(u) {
            continue;
        }
        let u_weight = w.weight(u);
        if u_weight == 0 {
            continue;
        }
        search.run(g, m, u, max_len);
        for &(reached, _) in search.matched_hits() {
            if w.weight(Vertex {
                side: u.side,
                index: reached,
            }) < u_weight
            {
                return false;
            }
        }
    }
    true
}
