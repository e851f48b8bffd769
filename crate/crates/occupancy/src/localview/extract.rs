use std::collections::BTreeMap;

use num::{One, Zero};

use super::config::{Configuration, LocalViewError};
use crate::exactmath::{Rat, Scalar};
use crate::graphs::Graph;

/// Guard for the exhaustive independent-set enumeration in
/// [`configuration_distribution`].
pub const DISTRIBUTION_MAX_VERTICES: usize = 16;

/// The local view of `v` in a cubic triangle-free graph under the independent
/// set `I`: second neighbors with their attachments, coverage marks (a second
/// neighbor is covered when one of its neighbors at distance 3 from `v` is in
/// `I`), and the edges among uncovered second neighbors.
pub fn extract_configuration(
    graph: &Graph,
    v: usize,
    independent: &[usize],
) -> Result<Configuration, LocalViewError> {
    if v >= graph.vertex_count() {
        return Err(LocalViewError::Precondition(format!(
            "vertex {v} out of range"
        )));
    }
    if !graph.is_regular(3) {
        return Err(LocalViewError::Precondition("graph is not cubic".into()));
    }
    match graph.girth() {
        Some(g) if g < 4 => {
            return Err(LocalViewError::Precondition(format!(
                "girth {g} < 4: local views are only defined for triangle-free graphs"
            )))
        }
        _ => {}
    }
    graph
        .check_independent(independent)
        .map_err(|e| LocalViewError::Precondition(e.to_string()))?;

    let in_set = |x: usize| independent.contains(&x);
    let dist = graph.distances(v);
    let us = graph.neighbors(v);
    let seconds: Vec<usize> = (0..graph.vertex_count()).filter(|&w| dist[w] == 2).collect();

    let mut attach = Vec::with_capacity(seconds.len());
    let mut uncovered = Vec::with_capacity(seconds.len());
    for &w in &seconds {
        let mut mask = 0u8;
        for (i, &u) in us.iter().enumerate() {
            if graph.has_edge(u, w) {
                mask |= 1 << i;
            }
        }
        attach.push(mask);
        let covered = graph
            .neighbors(w)
            .iter()
            .any(|&x| dist[x] == 3 && in_set(x));
        uncovered.push(!covered);
    }
    let mut e22 = Vec::new();
    for (i, &a) in seconds.iter().enumerate() {
        for (j, &b) in seconds.iter().enumerate().skip(i + 1) {
            if graph.has_edge(a, b) && uncovered[i] && uncovered[j] {
                e22.push((i as u8, j as u8));
            }
        }
    }
    Configuration::new(attach, uncovered, e22)
}

/// Exact distribution of the configuration seen from a uniform vertex when
/// the independent set is drawn from the hard-core model at fugacity λ.
pub fn configuration_distribution(
    graph: &Graph,
    lambda: &Rat,
) -> Result<BTreeMap<Configuration, Rat>, LocalViewError> {
    let n = graph.vertex_count();
    if n > DISTRIBUTION_MAX_VERTICES {
        return Err(LocalViewError::Precondition(format!(
            "graph has {n} vertices, over the limit of {DISTRIBUTION_MAX_VERTICES}"
        )));
    }
    if lambda.signum_exact() <= 0 {
        return Err(LocalViewError::Precondition(
            "fugacity must be positive".into(),
        ));
    }
    if !graph.is_regular(3) {
        return Err(LocalViewError::Precondition("graph is not cubic".into()));
    }

    // enumerate all independent sets by backtracking over vertex masks
    let masks: Vec<u32> = (0..n)
        .map(|v| graph.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let mut sets: Vec<u32> = Vec::new();
    let mut stack = vec![(0usize, 0u32, 0u32)];
    while let Some((i, set, blocked)) = stack.pop() {
        if i == n {
            sets.push(set);
            continue;
        }
        stack.push((i + 1, set, blocked));
        if blocked >> i & 1 == 0 {
            stack.push((i + 1, set | 1 << i, blocked | masks[i]));
        }
    }

    let mut total = Rat::zero();
    let mut weights: BTreeMap<Configuration, Rat> = BTreeMap::new();
    for &set in &sets {
        let members: Vec<usize> = (0..n).filter(|&x| set >> x & 1 == 1).collect();
        let mut w = Rat::one();
        for _ in 0..members.len() {
            w = w * lambda.clone();
        }
        total += w.clone();
        for v in 0..n {
            let cfg = extract_configuration(graph, v, &members)?;
            *weights.entry(cfg).or_insert_with(Rat::zero) += w.clone();
        }
    }
    let norm = total * Rat::from_integer((n as i64).into());
    for p in weights.values_mut() {
        *p /= norm.clone();
    }
    Ok(weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::NamedGraphId;
    use crate::localview::config::config_from_counts as g6_config;
    use num::One;

    #[test]
    fn heawood_empty_set_gives_all_uncovered() {
        let g = NamedGraphId::Heawood.load().unwrap().graph;
        for v in [0, 5, 13] {
            let cfg = extract_configuration(&g, v, &[]).unwrap();
            assert_eq!(cfg, g6_config([2, 2, 2]));
        }
    }

    #[test]
    fn petersen_empty_set_gives_the_six_cycle_view() {
        let g = NamedGraphId::Petersen.load().unwrap().graph;
        let cfg = extract_configuration(&g, 0, &[]).unwrap();
        assert_eq!(cfg.vertex_count(), 6);
        assert_eq!(cfg.uncovered_count(), 6);
        assert_eq!(cfg.e22().len(), 6);
        // same canonical view from every vertex (vertex-transitivity)
        for v in 1..10 {
            assert_eq!(extract_configuration(&g, v, &[]).unwrap(), cfg);
        }
    }

    #[test]
    fn heawood_one_distant_vertex_covers_one_second_neighbor() {
        let g = NamedGraphId::Heawood.load().unwrap().graph;
        let dist = g.distances(0);
        let far = (0..14).find(|&x| dist[x] == 3).unwrap();
        let cfg = extract_configuration(&g, 0, &[far]).unwrap();
        // one occupied third-neighbor covers its (three) second-neighborhood
        // contacts; for the Heawood graph the result is the (1,1,1) view
        assert_eq!(cfg, g6_config([1, 1, 1]));
    }

    #[test]
    fn precondition_failures() {
        let g = NamedGraphId::Petersen.load().unwrap().graph;
        assert!(extract_configuration(&g, 99, &[]).is_err());
        assert!(extract_configuration(&g, 0, &[0, 1]).is_err());
        let k4 = NamedGraphId::Complete(3).load().unwrap().graph;
        assert!(extract_configuration(&k4, 0, &[]).is_err());
    }

    #[test]
    fn distribution_sums_to_one() {
        let g = NamedGraphId::Petersen.load().unwrap().graph;
        let lam = Rat::new(3.into(), 2.into());
        let dist = configuration_distribution(&g, &lam).unwrap();
        let total: Rat = dist.values().cloned().sum();
        assert!(total.is_one());
        assert_eq!(dist.len(), 1);
    }
}
