use std::collections::BTreeSet;

use super::config::{Configuration, GirthClass};

/// Exhaustively generate every local view valid for the girth class,
/// canonicalized, deduplicated and in the canonical order (most uncovered
/// second neighbors first, then by canonical key).
///
/// The counts are 10 for girth ≥ 6, 46 for girth ≥ 5 and 225 for girth ≥ 4.
pub fn enumerate_configurations(class: GirthClass) -> Vec<Configuration> {
    let mut seen: BTreeSet<Configuration> = BTreeSet::new();
    for attach in slot_assignments() {
        if class != GirthClass::G4 && attach.iter().any(|a| a.count_ones() > 1) {
            // a shared second neighbor closes a 4-cycle through v
            continue;
        }
        let k = attach.len();
        // candidate edges join second neighbors with disjoint attachments
        let candidates: Vec<(u8, u8)> = (0..k)
            .flat_map(|a| ((a + 1)..k).map(move |b| (a as u8, b as u8)))
            .filter(|&(a, b)| attach[a as usize] & attach[b as usize] == 0)
            .collect();
        let edge_sets: Vec<Vec<(u8, u8)>> = if class == GirthClass::G6 {
            vec![Vec::new()]
        } else {
            subsets(&candidates)
        };
        for edges in edge_sets {
            let mut deg = vec![0usize; k];
            for &(a, b) in &edges {
                deg[a as usize] += 1;
                deg[b as usize] += 1;
            }
            if (0..k).any(|w| attach[w].count_ones() as usize + deg[w] > 3) {
                continue;
            }
            // coverage marks are free on edge-isolated vertices
            let isolated: Vec<usize> = (0..k).filter(|&w| deg[w] == 0).collect();
            for cover_mask in 0u32..(1 << isolated.len()) {
                let mut uncovered = vec![true; k];
                for (bit, &w) in isolated.iter().enumerate() {
                    if cover_mask >> bit & 1 == 1 {
                        uncovered[w] = false;
                    }
                }
                let cfg = match Configuration::new(attach.clone(), uncovered, edges.clone()) {
                    Ok(c) => c,
                    Err(_) => continue,
                };
                if cfg.satisfies(class) {
                    seen.insert(cfg);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// All multisets of nonempty attachment masks in which each of the three
/// u's carries exactly two slots.
fn slot_assignments() -> Vec<Vec<u8>> {
    let masks: Vec<u8> = (1..8).collect();
    let mut out = Vec::new();
    let mut acc: Vec<u8> = Vec::new();
    fn rec(masks: &[u8], start: usize, load: [usize; 3], acc: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if load == [2, 2, 2] {
            out.push(acc.clone());
            return;
        }
        for i in start..masks.len() {
            let m = masks[i];
            let mut next = load;
            let mut ok = true;
            for u in 0..3 {
                if m >> u & 1 == 1 {
                    next[u] += 1;
                    if next[u] > 2 {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                acc.push(m);
                rec(masks, i, next, acc, out);
                acc.pop();
            }
        }
    }
    rec(&masks, 0, [0; 3], &mut acc, &mut out);
    out
}

fn subsets(items: &[(u8, u8)]) -> Vec<Vec<(u8, u8)>> {
    let mut out = Vec::with_capacity(1 << items.len());
    for mask in 0u32..(1 << items.len()) {
        out.push(
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect(),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn g6_count_and_membership() {
        let configs = enumerate_configurations(GirthClass::G6);
        assert_eq!(configs.len(), 10);
        let counts: BTreeSet<[usize; 3]> =
            configs.iter().map(|c| c.g6_counts().unwrap()).collect();
        let expected: BTreeSet<[usize; 3]> = [
            [0, 0, 0],
            [0, 0, 1],
            [0, 0, 2],
            [0, 1, 1],
            [0, 1, 2],
            [0, 2, 2],
            [1, 1, 1],
            [1, 1, 2],
            [1, 2, 2],
            [2, 2, 2],
        ]
        .into_iter()
        .collect();
        assert_eq!(counts, expected);
    }

    #[test]
    fn g5_count_and_edgeless_bijection() {
        let configs = enumerate_configurations(GirthClass::G5);
        assert_eq!(configs.len(), 46);
        let edgeless = configs.iter().filter(|c| c.e22().is_empty()).count();
        assert_eq!(edgeless, 10);
    }

    #[test]
    fn classes_nest() {
        let g6: BTreeSet<_> = enumerate_configurations(GirthClass::G6).into_iter().collect();
        let g5: BTreeSet<_> = enumerate_configurations(GirthClass::G5).into_iter().collect();
        let g4: BTreeSet<_> = enumerate_configurations(GirthClass::G4).into_iter().collect();
        assert!(g6.is_subset(&g5));
        assert!(g5.is_subset(&g4));
    }

    #[test]
    fn deterministic_order() {
        let a = enumerate_configurations(GirthClass::G5);
        let b = enumerate_configurations(GirthClass::G5);
        assert_eq!(a, b);
        assert!(a.first().unwrap().uncovered_count() >= a.last().unwrap().uncovered_count());
    }
}
