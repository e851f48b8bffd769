use std::fmt;
use std::str::FromStr;

use super::graph::{Graph, GraphError};

/// Catalog of graphs the toolkit knows by name.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NamedGraphId {
    Petersen,
    Heawood,
    Gp72,
    TutteCoxeterH38,
    H46,
    Robertson,
    Cyclotomic13,
    /// Complete bipartite K_{d,d}.
    Kdd(usize),
    /// Complete graph K_{d+1} for regularity d.
    Complete(usize),
    Cycle(usize),
}

impl fmt::Display for NamedGraphId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraphId::Petersen => write!(f, "petersen"),
            NamedGraphId::Heawood => write!(f, "heawood"),
            NamedGraphId::Gp72 => write!(f, "gp72"),
            NamedGraphId::TutteCoxeterH38 => write!(f, "tutte_coxeter_h38"),
            NamedGraphId::H46 => write!(f, "h46"),
            NamedGraphId::Robertson => write!(f, "robertson"),
            NamedGraphId::Cyclotomic13 => write!(f, "cyclotomic13"),
            NamedGraphId::Kdd(d) => write!(f, "kdd({d})"),
            NamedGraphId::Complete(d) => write!(f, "complete({d})"),
            NamedGraphId::Cycle(n) => write!(f, "cycle({n})"),
        }
    }
}

impl FromStr for NamedGraphId {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        let s = s.trim();
        let param = |s: &str, head: &str| -> Option<usize> {
            s.strip_prefix(head)?
                .strip_prefix('(')?
                .strip_suffix(')')?
                .trim()
                .parse()
                .ok()
        };
        match s {
            "petersen" => Ok(NamedGraphId::Petersen),
            "heawood" => Ok(NamedGraphId::Heawood),
            "gp72" => Ok(NamedGraphId::Gp72),
            "tutte_coxeter_h38" | "h38" => Ok(NamedGraphId::TutteCoxeterH38),
            "h46" => Ok(NamedGraphId::H46),
            "robertson" => Ok(NamedGraphId::Robertson),
            "cyclotomic13" => Ok(NamedGraphId::Cyclotomic13),
            _ => {
                if let Some(d) = param(s, "kdd") {
                    Ok(NamedGraphId::Kdd(d))
                } else if let Some(d) = param(s, "complete") {
                    Ok(NamedGraphId::Complete(d))
                } else if let Some(n) = param(s, "cycle") {
                    Ok(NamedGraphId::Cycle(n))
                } else {
                    Err(GraphError::Parse(format!("unknown graph name {s:?}")))
                }
            }
        }
    }
}

/// A catalog graph together with its expected (order, regularity, girth),
/// validated on load.
#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub id: NamedGraphId,
    pub graph: Graph,
    pub order: usize,
    pub regularity: usize,
    pub girth: Option<usize>,
}

impl NamedGraphId {
    /// Expected (order, regularity, girth).
    pub fn expected(&self) -> (usize, usize, Option<usize>) {
        match *self {
            NamedGraphId::Petersen => (10, 3, Some(5)),
            NamedGraphId::Heawood => (14, 3, Some(6)),
            NamedGraphId::Gp72 => (14, 3, Some(5)),
            NamedGraphId::TutteCoxeterH38 => (30, 3, Some(8)),
            NamedGraphId::H46 => (26, 4, Some(6)),
            NamedGraphId::Robertson => (19, 4, Some(5)),
            NamedGraphId::Cyclotomic13 => (13, 4, Some(4)),
            NamedGraphId::Kdd(d) => (2 * d, d, if d >= 2 { Some(4) } else { None }),
            NamedGraphId::Complete(d) => (d + 1, d, if d >= 2 { Some(3) } else { None }),
            NamedGraphId::Cycle(n) => (n, 2, Some(n)),
        }
    }

    fn build(&self) -> Result<Graph, GraphError> {
        match *self {
            NamedGraphId::Petersen => Graph::parse(include_str!("data/petersen.txt")),
            NamedGraphId::Heawood => Graph::parse(include_str!("data/heawood.txt")),
            NamedGraphId::Gp72 => Graph::parse(include_str!("data/gp72.txt")),
            NamedGraphId::TutteCoxeterH38 => {
                Graph::parse(include_str!("data/tutte_coxeter_h38.txt"))
            }
            NamedGraphId::H46 => Graph::parse(include_str!("data/h46.txt")),
            NamedGraphId::Robertson => Graph::parse(include_str!("data/robertson.txt")),
            NamedGraphId::Cyclotomic13 => Graph::parse(include_str!("data/cyclotomic13.txt")),
            NamedGraphId::Kdd(d) => {
                if d == 0 {
                    return Err(GraphError::Precondition("kdd(d) needs d >= 1".into()));
                }
                let mut edges = Vec::new();
                for i in 0..d {
                    for j in 0..d {
                        edges.push((i, d + j));
                    }
                }
                Graph::from_edges(2 * d, &edges)
            }
            NamedGraphId::Complete(d) => {
                let n = d + 1;
                let mut edges = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        edges.push((i, j));
                    }
                }
                Graph::from_edges(n, &edges)
            }
            NamedGraphId::Cycle(n) => {
                if n < 3 {
                    return Err(GraphError::Precondition("cycle(n) needs n >= 3".into()));
                }
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edges(n, &edges)
            }
        }
    }

    /// Build and validate against the expected (order, regularity, girth).
    pub fn load(&self) -> Result<NamedGraph, GraphError> {
        let graph = self.build()?;
        let (order, regularity, girth) = self.expected();
        let mismatch = |field: &'static str, expected: String, got: String| {
            Err(GraphError::ValidationMismatch {
                name: self.to_string(),
                field,
                expected,
                got,
            })
        };
        if graph.vertex_count() != order {
            return mismatch("order", order.to_string(), graph.vertex_count().to_string());
        }
        if !graph.is_regular(regularity) {
            let got: Vec<usize> = (0..graph.vertex_count()).map(|v| graph.degree(v)).collect();
            return mismatch("regularity", regularity.to_string(), format!("{got:?}"));
        }
        let g = graph.girth();
        if g != girth {
            return mismatch("girth", format!("{girth:?}"), format!("{g:?}"));
        }
        Ok(NamedGraph { id: *self, graph, order, regularity, girth })
    }
}

/// Load a catalog graph by display name, e.g. `heawood` or `kdd(3)`.
pub fn named(name: &str) -> Result<NamedGraph, GraphError> {
    name.parse::<NamedGraphId>()?.load()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_catalog_graphs_validate() {
        for id in [
            NamedGraphId::Petersen,
            NamedGraphId::Heawood,
            NamedGraphId::Gp72,
            NamedGraphId::TutteCoxeterH38,
            NamedGraphId::H46,
            NamedGraphId::Robertson,
            NamedGraphId::Cyclotomic13,
            NamedGraphId::Kdd(3),
            NamedGraphId::Complete(3),
            NamedGraphId::Cycle(4),
        ] {
            let g = id.load().unwrap_or_else(|e| panic!("{id}: {e}"));
            assert_eq!(g.graph.vertex_count(), g.order);
        }
    }

    #[test]
    fn heawood_counts() {
        let g = named("heawood").unwrap();
        assert_eq!(g.graph.vertex_count(), 14);
        assert_eq!(g.graph.edge_count(), 21);
    }

    #[test]
    fn gp72_shape() {
        let g = named("gp72").unwrap();
        assert_eq!(g.graph.vertex_count(), 14);
        assert!(g.graph.is_regular(3));
        assert_eq!(g.graph.girth(), Some(5));
    }

    #[test]
    fn name_parsing() {
        assert_eq!("kdd(4)".parse::<NamedGraphId>().unwrap(), NamedGraphId::Kdd(4));
        assert_eq!(
            "cycle(11)".parse::<NamedGraphId>().unwrap(),
            NamedGraphId::Cycle(11)
        );
        assert!("nosuch".parse::<NamedGraphId>().is_err());
    }

    #[test]
    fn independence_numbers_of_quartic_cages() {
        let gp72 = named("gp72").unwrap();
        assert_eq!(gp72.graph.independence_number().unwrap(), 5);
        let cyc = named("cyclotomic13").unwrap();
        assert_eq!(cyc.graph.independence_number().unwrap(), 4);
    }
}
