use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::graphs::Graph;

/// Minimum-girth class of a configuration set.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum GirthClass {
    /// Girth at least 4 (triangle-free).
    G4,
    /// Girth at least 5.
    G5,
    /// Girth at least 6.
    G6,
}

impl GirthClass {
    pub fn min_girth(&self) -> usize {
        match self {
            GirthClass::G4 => 4,
            GirthClass::G5 => 5,
            GirthClass::G6 => 6,
        }
    }
}

impl fmt::Display for GirthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "girth>={}", self.min_girth())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalViewError {
    #[error("invalid local view: {0}")]
    Invalid(String),
    #[error("graph precondition failed: {0}")]
    Precondition(String),
}

/// A local view of a vertex v in a cubic graph: the three neighbors
/// u1, u2, u3 and the second neighborhood, with each second neighbor carrying
/// its set of adjacent u's, an external-coverage mark, and the edges among
/// uncovered second neighbors.
///
/// Every u has exactly two second-neighbor slots, so the attachment sets
/// always absorb six slot incidences. A mark of `true` means externally
/// uncovered (no occupied vertex at distance 3 blocks it); covered vertices
/// carry no edges, since a covered vertex is frozen out of the independent
/// set and its edges do not influence the local partition function.
///
/// Stored in canonical form: lexicographically minimal encoding over
/// relabelings of u1, u2, u3 composed with relabelings of the second
/// neighbors.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Configuration {
    attach: Vec<u8>,
    uncovered: Vec<bool>,
    e22: Vec<(u8, u8)>,
}

impl Configuration {
    /// Canonicalize a raw labeled view. Validates the structural invariants
    /// that are independent of the girth class.
    pub fn new(
        attach: Vec<u8>,
        uncovered: Vec<bool>,
        e22: Vec<(u8, u8)>,
    ) -> Result<Self, LocalViewError> {
        let k = attach.len();
        if uncovered.len() != k {
            return Err(LocalViewError::Invalid(
                "attachment and coverage lists differ in length".into(),
            ));
        }
        let mut load = [0usize; 3];
        for &a in &attach {
            if a == 0 || a > 0b111 {
                return Err(LocalViewError::Invalid(format!(
                    "attachment mask {a:#b} is not a nonempty subset of the three neighbors"
                )));
            }
            for u in 0..3 {
                if a >> u & 1 == 1 {
                    load[u] += 1;
                }
            }
        }
        if load != [2, 2, 2] {
            return Err(LocalViewError::Invalid(format!(
                "neighbor slot loads {load:?}, every u must carry exactly 2 second neighbors"
            )));
        }
        let mut deg = vec![0usize; k];
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in &e22 {
            let (a, b) = (a as usize, b as usize);
            if a >= k || b >= k || a == b {
                return Err(LocalViewError::Invalid(format!("bad edge ({a},{b})")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(LocalViewError::Invalid(format!("duplicate edge ({a},{b})")));
            }
            if !uncovered[a] || !uncovered[b] {
                return Err(LocalViewError::Invalid(
                    "edges are only tracked between uncovered second neighbors".into(),
                ));
            }
            if attach[a] & attach[b] != 0 {
                return Err(LocalViewError::Invalid(format!(
                    "edge ({a},{b}) between second neighbors sharing a first neighbor makes a triangle"
                )));
            }
            deg[a] += 1;
            deg[b] += 1;
        }
        for w in 0..k {
            let att = (attach[w].count_ones()) as usize;
            if att + deg[w] > 3 {
                return Err(LocalViewError::Invalid(format!(
                    "second neighbor {w} would have degree {}",
                    att + deg[w] + 1
                )));
            }
        }
        Ok(Self::canonical_form(&attach, &uncovered, &e22))
    }

    fn canonical_form(attach: &[u8], uncovered: &[bool], e22: &[(u8, u8)]) -> Self {
        let k = attach.len();
        let mut best: Option<(Vec<u8>, Vec<bool>, Vec<(u8, u8)>)> = None;
        let mut perm: Vec<usize> = (0..k).collect();
        for sigma in permutations_of_three() {
            let relabeled: Vec<u8> = attach.iter().map(|&a| apply_sigma(a, sigma)).collect();
            // Enumerate vertex orders (k ≤ 6, so at most 720 of them).
            permute_all(&mut perm, &mut |p: &[usize]| {
                let att: Vec<u8> = p.iter().map(|&j| relabeled[j]).collect();
                let unc: Vec<bool> = p.iter().map(|&j| uncovered[j]).collect();
                let mut inv = vec![0u8; k];
                for (new, &old) in p.iter().enumerate() {
                    inv[old] = new as u8;
                }
                let mut edges: Vec<(u8, u8)> = e22
                    .iter()
                    .map(|&(a, b)| {
                        let (x, y) = (inv[a as usize], inv[b as usize]);
                        (x.min(y), x.max(y))
                    })
                    .collect();
                edges.sort_unstable();
                let cand = (att, unc, edges);
                if best.as_ref().is_none_or(|b| candidate_lt(&cand, b)) {
                    best = Some(cand);
                }
            });
        }
        let (attach, uncovered, e22) = best.expect("at least one labeling");
        Configuration { attach, uncovered, e22 }
    }

    /// Number of second neighbors in the view.
    pub fn vertex_count(&self) -> usize {
        self.attach.len()
    }

    /// Number of uncovered second neighbors (the set W).
    pub fn uncovered_count(&self) -> usize {
        self.uncovered.iter().filter(|&&b| b).count()
    }

    /// Attachment mask (bits 0..3 for u1..u3) of second neighbor `w`.
    pub fn attach_mask(&self, w: usize) -> u8 {
        self.attach[w]
    }

    pub fn is_uncovered(&self, w: usize) -> bool {
        self.uncovered[w]
    }

    /// Edges among uncovered second neighbors.
    pub fn e22(&self) -> &[(u8, u8)] {
        &self.e22
    }

    /// Uncovered second neighbors attached to neighbor `u` (0-based).
    pub fn uncovered_attached_to(&self, u: usize) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&w| self.uncovered[w] && self.attach[w] >> u & 1 == 1)
            .collect()
    }

    /// Canonical byte encoding; equal views have equal keys, and the
    /// enumeration order is derived from it.
    pub fn canon_key(&self) -> Vec<u8> {
        let mut key = vec![self.attach.len() as u8];
        for (i, &a) in self.attach.iter().enumerate() {
            key.push(a | if self.uncovered[i] { 0b1000 } else { 0 });
        }
        key.push(0xff);
        for &(a, b) in &self.e22 {
            key.push(a);
            key.push(b);
        }
        key
    }

    /// View as a graph on {v} ∪ {u1,u2,u3} ∪ second neighbors, vertex ids
    /// 0, 1..3, 4... Used for the girth-class membership test.
    fn local_graph(&self) -> Graph {
        let k = self.vertex_count();
        let mut edges = vec![(0usize, 1usize), (0, 2), (0, 3)];
        for (w, &a) in self.attach.iter().enumerate() {
            for u in 0..3 {
                if a >> u & 1 == 1 {
                    edges.push((1 + u, 4 + w));
                }
            }
        }
        for &(a, b) in &self.e22 {
            edges.push((4 + a as usize, 4 + b as usize));
        }
        Graph::from_edges(4 + k, &edges).expect("validated view is a simple graph")
    }

    /// Whether the view can occur in a cubic graph of the class's minimum
    /// girth: the local-view graph must not contain a shorter cycle.
    pub fn satisfies(&self, class: GirthClass) -> bool {
        match self.local_graph().girth() {
            None => true,
            Some(g) => g >= class.min_girth(),
        }
    }

    /// For edgeless all-single views: the per-u uncovered counts as an
    /// ascending triple, the label used for the girth-6 configuration set.
    pub fn g6_counts(&self) -> Option<[usize; 3]> {
        if !self.e22.is_empty() || self.attach.iter().any(|a| a.count_ones() != 1) {
            return None;
        }
        let mut counts = [0usize; 3];
        for (w, &a) in self.attach.iter().enumerate() {
            if self.uncovered[w] {
                counts[a.trailing_zeros() as usize] += 1;
            }
        }
        counts.sort_unstable();
        Some(counts)
    }

    /// Compact human-readable label, e.g. `[1,1c,2,23c,3|0-2,1-4]`: one entry
    /// per second neighbor (digits = attached u's, `c` = covered), then the
    /// edges among uncovered ones by position.
    pub fn label(&self) -> String {
        let mut parts = Vec::new();
        for (w, &a) in self.attach.iter().enumerate() {
            let mut s = String::new();
            for u in 0..3 {
                if a >> u & 1 == 1 {
                    s.push(char::from_digit(u as u32 + 1, 10).unwrap());
                }
            }
            if !self.uncovered[w] {
                s.push('c');
            }
            parts.push(s);
        }
        let edges: Vec<String> = self
            .e22
            .iter()
            .map(|&(a, b)| format!("{a}-{b}"))
            .collect();
        if edges.is_empty() {
            format!("[{}]", parts.join(","))
        } else {
            format!("[{}|{}]", parts.join(","), edges.join(","))
        }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl Ord for Configuration {
    fn cmp(&self, other: &Self) -> Ordering {
        // more uncovered vertices first, then canonical key
        other
            .uncovered_count()
            .cmp(&self.uncovered_count())
            .then_with(|| self.canon_key().cmp(&other.canon_key()))
    }
}

impl PartialOrd for Configuration {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn candidate_lt(
    a: &(Vec<u8>, Vec<bool>, Vec<(u8, u8)>),
    b: &(Vec<u8>, Vec<bool>, Vec<(u8, u8)>),
) -> bool {
    a < b
}

fn apply_sigma(mask: u8, sigma: [usize; 3]) -> u8 {
    let mut out = 0u8;
    for u in 0..3 {
        if mask >> u & 1 == 1 {
            out |= 1 << sigma[u];
        }
    }
    out
}

fn permutations_of_three() -> [[usize; 3]; 6] {
    [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ]
}

/// Heap's algorithm over the slice, invoking `f` on every permutation.
fn permute_all<F: FnMut(&[usize])>(items: &mut [usize], f: &mut F) {
    let n = items.len();
    if n == 0 {
        f(items);
        return;
    }
    let mut c = vec![0usize; n];
    f(items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            f(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Build the edgeless all-single configuration with `counts[u]` uncovered
/// second neighbors on u — the girth-6 views.
pub fn config_from_counts(counts: [usize; 3]) -> Configuration {
    let mut attach = Vec::new();
    let mut uncovered = Vec::new();
    for (u, &c) in counts.iter().enumerate() {
        assert!(c <= 2);
        for j in 0..2 {
            attach.push(1 << u);
            uncovered.push(j < c);
        }
    }
    Configuration::new(attach, uncovered, Vec::new()).expect("valid girth-6 view")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g6_config(counts: [usize; 3]) -> Configuration {
        config_from_counts(counts)
    }

    #[test]
    fn canonicalization_sorts_count_triples() {
        // (1,2,1) and (1,1,2) are the same multiset view
        assert_eq!(g6_config([1, 2, 1]), g6_config([1, 1, 2]));
        assert_eq!(g6_config([1, 2, 1]).g6_counts(), Some([1, 1, 2]));
        assert_ne!(g6_config([1, 1, 2]), g6_config([2, 2, 1]));
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let c = Configuration::new(
            vec![0b001, 0b001, 0b010, 0b010, 0b100, 0b100],
            vec![true; 6],
            vec![(0, 2), (1, 4), (3, 5)],
        )
        .unwrap();
        let again = Configuration::new(
            c.attach.clone(),
            c.uncovered.clone(),
            c.e22.clone(),
        )
        .unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn relabeled_views_canonicalize_equal() {
        // one E22 edge between a u1-vertex and a u2-vertex, rest covered,
        // written with two different labelings
        let a = Configuration::new(
            vec![0b001, 0b001, 0b010, 0b010, 0b100, 0b100],
            vec![true, false, true, false, false, false],
            vec![(0, 2)],
        )
        .unwrap();
        let b = Configuration::new(
            vec![0b100, 0b100, 0b010, 0b010, 0b001, 0b001],
            vec![false, true, false, true, false, false],
            vec![(1, 3)],
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.canon_key(), b.canon_key());
    }

    #[test]
    fn invariant_violations_are_rejected() {
        // load 3 on u1
        assert!(Configuration::new(
            vec![0b001, 0b001, 0b001, 0b010, 0b010, 0b100, 0b100],
            vec![true; 7],
            vec![],
        )
        .is_err());
        // triangle via shared attachment
        assert!(Configuration::new(
            vec![0b001, 0b001, 0b010, 0b010, 0b100, 0b100],
            vec![true; 6],
            vec![(0, 1)],
        )
        .is_err());
        // edge at a covered vertex
        assert!(Configuration::new(
            vec![0b001, 0b001, 0b010, 0b010, 0b100, 0b100],
            vec![false, true, true, true, true, true],
            vec![(0, 2)],
        )
        .is_err());
        // degree overflow: triple with an edge
        assert!(Configuration::new(
            vec![0b111, 0b111],
            vec![true, true],
            vec![(0, 1)],
        )
        .is_err());
    }

    #[test]
    fn girth_class_membership() {
        // a shared second neighbor gives a 4-cycle: in G4 but not G5
        let shared = Configuration::new(
            vec![0b011, 0b001, 0b010, 0b100, 0b100],
            vec![true; 5],
            vec![],
        )
        .unwrap();
        assert!(shared.satisfies(GirthClass::G4));
        assert!(!shared.satisfies(GirthClass::G5));
        // an E22 edge gives a 5-cycle: in G5 but not G6
        let edge = Configuration::new(
            vec![0b001, 0b001, 0b010, 0b010, 0b100, 0b100],
            vec![true; 6],
            vec![(0, 2)],
        )
        .unwrap();
        assert!(edge.satisfies(GirthClass::G5));
        assert!(!edge.satisfies(GirthClass::G6));
        // edgeless single-attach views are valid for girth 6
        assert!(g6_config([2, 2, 2]).satisfies(GirthClass::G6));
    }

    #[test]
    fn labels_are_readable() {
        assert_eq!(g6_config([0, 0, 1]).label(), "[1c,1c,2c,2c,3c,3]");
        let c = Configuration::new(
            vec![0b011, 0b001, 0b010, 0b100, 0b100],
            vec![false, true, true, true, true],
            vec![(1, 3)],
        )
        .unwrap();
        assert!(c.label().contains('c'));
        assert!(c.label().contains('|'));
    }
}
