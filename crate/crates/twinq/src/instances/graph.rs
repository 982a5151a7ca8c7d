use crate::error::{Error, Result};

/// A simple undirected graph with indexed vertices and edges.
///
/// Invariants enforced at construction: no self-loops, no duplicate edges,
/// no isolated vertices, all endpoints in range. Edges are normalized to
/// `(u, v)` with `u < v` and kept in lexicographic order; the position of
/// an edge in that order is its edge index, which is also its decision
/// variable for the edge-subset problems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n_vertices == 0 {
            return Err(Error::parse("graph must have at least one vertex"));
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a >= n_vertices || b >= n_vertices {
                return Err(Error::parse(format!(
                    "edge ({a},{b}) has endpoint outside [0,{n_vertices})"
                )));
            }
            if a == b {
                return Err(Error::parse(format!("self-loop at vertex {a}")));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::parse(format!(
                "duplicate edge ({},{})",
                w[0].0, w[0].1
            )));
        }

        let mut adjacency = vec![Vec::new(); n_vertices];
        let mut incident = vec![Vec::new(); n_vertices];
        for (i, &(u, v)) in normalized.iter().enumerate() {
            adjacency[u].push(v);
            adjacency[v].push(u);
            incident[u].push(i);
            incident[v].push(i);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        if let Some(v) = adjacency.iter().position(|l| l.is_empty()) {
            return Err(Error::parse(format!("isolated vertex {v}")));
        }

        Ok(Graph { n_vertices, edges: normalized, adjacency, incident })
    }

    /// Path graph 0-1-...-(n-1).
    pub fn path(n: usize) -> Result<Self> {
        Graph::new(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect())
    }

    /// Cycle graph on n vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::parse("cycle needs at least 3 vertices"));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
    }

    /// Complete graph on n vertices.
    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges)
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order; index in this slice = edge index.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Result<(usize, usize)> {
        self.edges
            .get(e)
            .copied()
            .ok_or_else(|| Error::parameter(format!("edge index {e} out of range")))
    }

    /// Vertices adjacent to `v`, ascending.
    pub fn neighbors(&self, v: usize) -> Result<&[usize]> {
        self.adjacency
            .get(v)
            .map(|l| l.as_slice())
            .ok_or_else(|| Error::parameter(format!("vertex {v} out of range")))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    /// Edge indices incident to vertex `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> Result<&[usize]> {
        self.incident
            .get(v)
            .map(|l| l.as_slice())
            .ok_or_else(|| Error::parameter(format!("vertex {v} out of range")))
    }

    /// Edge indices sharing exactly one endpoint with edge `e`, ascending,
    /// excluding `e` itself.
    pub fn edge_neighbors(&self, e: usize) -> Result<Vec<usize>> {
        let (u, v) = self.edge(e)?;
        let mut out: Vec<usize> = self.incident[u]
            .iter()
            .chain(self.incident[v].iter())
            .copied()
            .filter(|&j| j != e)
            .collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n_vertices];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n_vertices
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_self_loop() {
        let err = Graph::new(3, vec![(0, 0)]).unwrap_err();
        assert!(err.to_string().contains("self-loop"));
    }

    #[test]
    fn rejects_duplicate_edge() {
        let err = Graph::new(3, vec![(0, 1), (1, 0), (1, 2)]).unwrap_err();
        assert!(err.to_string().contains("duplicate edge"));
    }

    #[test]
    fn rejects_isolated_vertex() {
        let err = Graph::new(3, vec![(0, 1)]).unwrap_err();
        assert!(err.to_string().contains("isolated vertex 2"));
    }

    #[test]
    fn rejects_out_of_range_endpoint() {
        let err = Graph::new(2, vec![(0, 2)]).unwrap_err();
        assert!(err.to_string().contains("outside"));
    }

    #[test]
    fn neighbors_on_path() {
        let g = Graph::path(3).unwrap();
        assert_eq!(g.neighbors(1).unwrap(), &[0, 2]);
        assert_eq!(g.neighbors(0).unwrap(), &[1]);
        assert!(g.neighbors(3).is_err());
    }

    #[test]
    fn neighbors_on_complete_graph() {
        let g = Graph::complete(4).unwrap();
        for v in 0..4 {
            let nb = g.neighbors(v).unwrap();
            assert_eq!(nb.len(), 3);
            assert!(!nb.contains(&v));
        }
    }

    #[test]
    fn edge_neighbors_on_path() {
        let g = Graph::path(3).unwrap();
        // edges: 0=(0,1), 1=(1,2)
        assert_eq!(g.edge_neighbors(0).unwrap(), vec![1]);
        assert_eq!(g.edge_neighbors(1).unwrap(), vec![0]);
        assert!(g.edge_neighbors(2).is_err());
    }

    #[test]
    fn edge_neighbors_on_triangle() {
        let g = Graph::cycle(3).unwrap();
        for e in 0..3 {
            assert_eq!(g.edge_neighbors(e).unwrap().len(), 2);
        }
    }

    #[test]
    fn edge_neighbors_disjoint_edges() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.edge_neighbors(0).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn neighbor_symmetry() {
        let g = Graph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 4)]).unwrap();
        for u in 0..5 {
            for &v in g.neighbors(u).unwrap() {
                assert!(g.neighbors(v).unwrap().contains(&u));
            }
        }
        for e in 0..g.n_edges() {
            for f in g.edge_neighbors(e).unwrap() {
                assert!(g.edge_neighbors(f).unwrap().contains(&e));
            }
        }
    }

    #[test]
    fn edges_are_sorted_and_normalized() {
        let g = Graph::new(3, vec![(2, 1), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }
}
