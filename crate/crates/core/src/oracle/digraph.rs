use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::{Error, Result};

/// Serialized form: `{"vertices": k, "edges": [[tail, head], …]}`, 0-based,
/// edge ids are array positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigraphSpec {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

/// A connected, balanced directed multigraph with labeled edges. Loops allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerianDigraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    out_edges: Vec<Vec<usize>>,
    in_edges: Vec<Vec<usize>>,
}

impl EulerianDigraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertices == 0 {
            return Err(Error::Usage("a digraph needs at least one vertex".into()));
        }
        let mut out_edges = vec![Vec::new(); vertices];
        let mut in_edges = vec![Vec::new(); vertices];
        for (id, &(tail, head)) in edges.iter().enumerate() {
            if tail >= vertices || head >= vertices {
                return Err(Error::Usage(format!(
                    "edge {id} = ({tail}, {head}) has an endpoint out of range"
                )));
            }
            out_edges[tail].push(id);
            in_edges[head].push(id);
        }
        for v in 0..vertices {
            if out_edges[v].len() != in_edges[v].len() {
                return Err(Error::NotEulerian(format!(
                    "vertex {v} has in-degree {} and out-degree {}",
                    in_edges[v].len(),
                    out_edges[v].len()
                )));
            }
        }
        let graph = EulerianDigraph {
            vertices,
            edges,
            out_edges,
            in_edges,
        };
        let comps = graph.components(None);
        if comps.iter().any(|&c| c != 0) {
            return Err(Error::NotEulerian("underlying graph is disconnected".into()));
        }
        Ok(graph)
    }

    pub fn from_spec(spec: &DigraphSpec) -> Result<Self> {
        Self::new(spec.vertices, spec.edges.iter().map(|e| (e[0], e[1])).collect())
    }

    pub fn to_spec(&self) -> DigraphSpec {
        DigraphSpec {
            vertices: self.vertices,
            edges: self.edges.iter().map(|&(t, h)| [t, h]).collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: DigraphSpec =
            serde_json::from_str(text).map_err(|e| Error::Usage(format!("bad digraph JSON: {e}")))?;
        Self::from_spec(&spec)
    }

    /// `D_{n,λ}`: black vertex 0 of half-degree `n`, white vertex `i` of
    /// half-degree `λᵢ`. White out-edges come first, then the black ones.
    pub fn bipartite(lambda: &Partition) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::Domain("D_(n,λ) needs n >= 1".into()));
        }
        let mut edges = Vec::new();
        for (i, &part) in lambda.parts().iter().enumerate() {
            edges.extend(std::iter::repeat_n((i + 1, 0), part));
        }
        for (i, &part) in lambda.parts().iter().enumerate() {
            edges.extend(std::iter::repeat_n((0, i + 1), part));
        }
        Self::new(lambda.len() + 1, edges)
    }

    /// Directed dipole `D_{n,[n]}`.
    pub fn dipole(n: usize) -> Result<Self> {
        Self::bipartite(&Partition::row(n))
    }

    /// Directed bouquet `B_n`: one vertex, `n` loops.
    pub fn bouquet(n: usize) -> Result<Self> {
        Self::new(1, vec![(0, 0); n])
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }

    /// In-degree (= out-degree) of `v`.
    pub fn half_degree(&self, v: usize) -> usize {
        self.out_edges[v].len()
    }

    /// Component label for every vertex of the underlying undirected graph,
    /// optionally with one vertex and its edges removed (that vertex gets `usize::MAX`).
    pub(crate) fn components(&self, removed: Option<usize>) -> Vec<usize> {
        let mut uf = UnionFind::new(self.vertices);
        for &(t, h) in &self.edges {
            if Some(t) == removed || Some(h) == removed {
                continue;
            }
            uf.union(t, h);
        }
        let mut label = vec![usize::MAX; self.vertices];
        let mut next = 0;
        let mut root_label = std::collections::HashMap::new();
        for (v, slot) in label.iter_mut().enumerate() {
            if Some(v) == removed {
                continue;
            }
            let r = uf.find(v);
            *slot = *root_label.entry(r).or_insert_with(|| {
                next += 1;
                next - 1
            });
        }
        label
    }

    /// Whether the underlying graph minus `handle` has no cycle (loops and
    /// parallel edges count as cycles).
    pub(crate) fn is_forest_without(&self, handle: usize) -> bool {
        let mut uf = UnionFind::new(self.vertices);
        self.edges
            .iter()
            .filter(|&&(t, h)| t != handle && h != handle)
            .all(|&(t, h)| uf.union(t, h))
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `false` if `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        let d = EulerianDigraph::bipartite(&"2,1".parse().unwrap()).unwrap();
        assert_eq!(d.vertex_count(), 3);
        assert_eq!(d.edge_count(), 6);
        assert_eq!(d.half_degree(0), 3);
        assert_eq!(d.half_degree(1), 2);
        let b = EulerianDigraph::bouquet(3).unwrap();
        assert_eq!(b.half_degree(0), 3);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            EulerianDigraph::new(2, vec![(0, 1)]),
            Err(Error::NotEulerian(_))
        ));
        assert!(matches!(
            EulerianDigraph::new(4, vec![(0, 1), (1, 0), (2, 3), (3, 2)]),
            Err(Error::NotEulerian(_))
        ));
        assert!(matches!(EulerianDigraph::new(1, vec![(0, 1)]), Err(Error::Usage(_))));
        assert!(EulerianDigraph::new(0, vec![]).is_err());
        assert!(EulerianDigraph::from_json("{\"vertices\": 2}").is_err());
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"vertices": 3, "edges": [[0, 1], [1, 2], [2, 0]]}"#;
        let d = EulerianDigraph::from_json(text).unwrap();
        assert_eq!(d.edges(), &[(0, 1), (1, 2), (2, 0)]);
        let again = serde_json::to_string(&d.to_spec()).unwrap();
        assert_eq!(EulerianDigraph::from_json(&again).unwrap(), d);
    }

    #[test]
    fn forest_detection() {
        let fan = EulerianDigraph::new(3, vec![(0, 1), (0, 1), (1, 2), (2, 0), (1, 0)]).unwrap();
        assert!(fan.is_forest_without(0));
        assert!(!fan.is_forest_without(2));
        let labels = fan.components(Some(0));
        assert_eq!(labels[1], labels[2]);
    }
}
