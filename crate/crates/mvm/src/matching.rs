//! Matchings, their weight, and the sorted weight vector used to
//! compare matchings lexicographically.

use std::cmp::Ordering;

use crate::graph::{BipartiteGraph, Side, Vertex};
use crate::search::AugmentingPath;
use crate::weights::VertexWeights;

/// Raised when summing matched-vertex weights exceeds the `u64` range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("matching weight exceeds the u64 accumulator range")]
pub struct WeightOverflow;

/// A set of vertex-disjoint edges with O(1) mate lookup on both sides.
///
/// Solvers only ever produce consistent matchings. [`Matching::from_mates`]
/// can build an arbitrary (possibly inconsistent) candidate so that
/// [`validate_matching`] has something to reject.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate_of_s: Vec<Option<usize>>,
    mate_of_t: Vec<Option<usize>>,
    cardinality: usize,
}

impl Matching {
    /// The empty matching for sides of the given sizes.
    pub fn empty(n_s: usize, n_t: usize) -> Matching {
        Matching {
            mate_of_s: vec![None; n_s],
            mate_of_t: vec![None; n_t],
            cardinality: 0,
        }
    }

    /// Builds a matching from explicit (s, t) pairs, rejecting reuse of
    /// an endpoint.
    pub fn from_pairs(
        n_s: usize,
        n_t: usize,
        pairs: &[(usize, usize)],
    ) -> Result<Matching, MatchingError> {
        let mut m = Matching::empty(n_s, n_t);
        for &(s, t) in pairs {
            if s >= n_s || t >= n_t {
                return Err(MatchingError::PairOutOfRange { s, t, n_s, n_t });
            }
            if m.mate_of_s[s].is_some() || m.mate_of_t[t].is_some() {
                return Err(MatchingError::EndpointReused { s, t });
            }
            m.match_pair(s, t);
        }
        Ok(m)
    }

    /// Wraps raw mate arrays without any consistency checks. The S-side
    /// count of matched vertices is recorded as the cardinality; run
    /// [`validate_matching`] before trusting the result.
    pub fn from_mates(mate_of_s: Vec<Option<usize>>, mate_of_t: Vec<Option<usize>>) -> Matching {
        let cardinality = mate_of_s.iter().filter(|m| m.is_some()).count();
        Matching {
            mate_of_s,
            mate_of_t,
            cardinality,
        }
    }

    pub fn n_s(&self) -> usize {
        self.mate_of_s.len()
    }

    pub fn n_t(&self) -> usize {
        self.mate_of_t.len()
    }

    pub fn cardinality(&self) -> usize {
        self.cardinality
    }

    pub fn mate_of_s(&self, s: usize) -> Option<usize> {
        self.mate_of_s[s]
    }

    pub fn mate_of_t(&self, t: usize) -> Option<usize> {
        self.mate_of_t[t]
    }

    /// Mate of a vertex, as an index on the opposite side.
    pub fn mate(&self, v: Vertex) -> Option<usize> {
        match v.side {
            Side::S => self.mate_of_s[v.index],
            Side::T => self.mate_of_t[v.index],
        }
    }

    pub fn is_matched(&self, v: Vertex) -> bool {
        self.mate(v).is_some()
    }

    /// Matched pairs in ascending S order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.mate_of_s
            .iter()
            .enumerate()
            .filter_map(|(s, mate)| mate.map(|t| (s, t)))
    }

    /// Matched vertices on one side, ascending.
    pub fn matched_on(&self, side: Side) -> Vec<usize> {
        let mates: &[Option<usize>] = match side {
            Side::S => &self.mate_of_s,
            Side::T => &self.mate_of_t,
        };
        mates
            .iter()
            .enumerate()
            .filter_map(|(i, m)| m.map(|_| i))
            .collect()
    }

    /// Records (s, t) as matched, overwriting both mate entries. Both
    /// endpoints must currently be unmatched; augmentation re-points
    /// interior mates pair by pair instead of calling this.
    pub(crate) fn match_pair(&mut self, s: usize, t: usize) {
        debug_assert!(self.mate_of_s[s].is_none());
        debug_assert!(self.mate_of_t[t].is_none());
        self.mate_of_s[s] = Some(t);
        self.mate_of_t[t] = Some(s);
        self.cardinality += 1;
    }

    /// Flips an augmenting path: every odd-positioned edge of the path
    /// becomes matched, which re-points the interior mates and matches
    /// both endpoints. Grows the cardinality by one.
    pub fn augment(&mut self, path: &AugmentingPath) {
        let vertices = path.vertices();
        debug_assert!(vertices.len() >= 2 && vertices.len().is_multiple_of(2));
        debug_assert!(!self.is_matched(vertices[0]));
        debug_assert!(!self.is_matched(*vertices.last().unwrap()));
        for pair in vertices.chunks_exact(2) {
            let (s, t) = match pair[0].side {
                Side::S => (pair[0].index, pair[1].index),
                Side::T => (pair[1].index, pair[0].index),
            };
            self.mate_of_s[s] = Some(t);
            self.mate_of_t[t] = Some(s);
        }
        self.cardinality += 1;
    }
}

/// Errors from [`Matching::from_pairs`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatchingError {
    #[error("pair ({s}, {t}) is out of range for sides of size {n_s} x {n_t}")]
    PairOutOfRange {
        s: usize,
        t: usize,
        n_s: usize,
        n_t: usize,
    },
    #[error("pair ({s}, {t}) reuses an already matched endpoint")]
    EndpointReused { s: usize, t: usize },
}

/// True iff `m` is a valid matching of `g`: sizes fit, the two mate
/// arrays agree with each other, every matched pair is an edge of `g`,
/// and the recorded cardinality matches the matched counts on both
/// sides.
pub fn validate_matching(g: &BipartiteGraph, m: &Matching) -> bool {
    if m.n_s() != g.n_s() || m.n_t() != g.n_t() {
        return false;
    }
    let mut matched_s = 0usize;
    for (s, mate) in m.mate_of_s.iter().enumerate() {
        if let Some(t) = *mate {
            matched_s += 1;
            if t >= g.n_t() || m.mate_of_t[t] != Some(s) || !g.has_edge(s, t) {
                return false;
            }
        }
    }
    let mut matched_t = 0usize;
    for (t, mate) in m.mate_of_t.iter().enumerate() {
        if let Some(s) = *mate {
            matched_t += 1;
            if s >= g.n_s() || m.mate_of_s[s] != Some(t) {
                return false;
            }
        }
    }
    matched_s == matched_t && matched_s == m.cardinality()
}

/// Sum of the weights of all matched vertices (both sides), with
/// checked arithmetic.
pub fn matching_weight(m: &Matching, w: &VertexWeights) -> Result<u64, WeightOverflow> {
    let mut total: u64 = 0;
    for (s, t) in m.pairs() {
        total = total
            .checked_add(w.weight(Vertex::s(s)))
            .and_then(|acc| acc.checked_add(w.weight(Vertex::t(t))))
            .ok_or(WeightOverflow)?;
    }
    Ok(total)
}

/// The weights of all matched vertices in non-increasing order.
/// Two matchings compare lexicographically on these vectors, with the
/// shorter vector padded with zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    values: Vec<u64>,
}

impl WeightVector {
    /// Sorts the given weights into non-increasing order.
    pub fn from_unsorted(mut values: Vec<u64>) -> WeightVector {
        values.sort_unstable_by(|a, b| b.cmp(a));
        WeightVector { values }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Collects the matched-vertex weights of `m` in non-increasing order.
pub fn weight_vector(m: &Matching, w: &VertexWeights) -> WeightVector {
    let mut values = Vec::with_capacity(2 * m.cardinality());
    for (s, t) in m.pairs() {
        values.push(w.weight(Vertex::s(s)));
        values.push(w.weight(Vertex::t(t)));
    }
    WeightVector::from_unsorted(values)
}

/// Lexicographic comparison after padding the shorter vector with
/// zeros, so matchings of different cardinality stay comparable.
pub fn lex_compare(a: &WeightVector, b: &WeightVector) -> Ordering {
    let len = a.len().max(b.len());
    for i in 0..len {
        let av = a.values.get(i).copied().unwrap_or(0);
        let bv = b.values.get(i).copied().unwrap_or(0);
        match av.cmp(&bv) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}
