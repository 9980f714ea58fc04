//! Immutable simple undirected graphs in compressed adjacency form, with
//! degree, connectivity, distance and edge-surgery operations.
//!
//! Vertices are `0..n`. Edge surgery (`add_edge`, `delete_edge`) returns a new
//! graph; existing graphs never change, so they can be shared freely across
//! threads and used as cache keys.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("no such edge {{{0}, {1}}}")]
    NoSuchEdge(usize, usize),
    #[error("edge {{{0}, {1}}} already present")]
    EdgeExists(usize, usize),
    #[error("graph must have at least one vertex")]
    Empty,
}

/// Simple undirected graph on vertices `0..n` with sorted adjacency lists.
///
/// Invariants kept by construction: no self-loops, no duplicate neighbors,
/// symmetric adjacency, and `m` equal to half the sum of list lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
}

/// Per-vertex degrees plus the aggregates used by the bound formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    pub is_regular: bool,
}

/// Connectivity, eccentricities and diameter. The diameter is reported only
/// for connected graphs; every bound in this crate assumes connectivity, so
/// disconnected inputs carry `None` rather than a sentinel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceSummary {
    pub connected: bool,
    pub diameter: Option<usize>,
    pub eccentricities: Option<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects self-loops, out-of-range
    /// endpoints and duplicate pairs (in either orientation).
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            m: edges.len(),
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order. This is the
    /// canonical edge order used by the file format and the generators.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        DegreeProfile {
            max_degree,
            min_degree,
            is_regular: max_degree == min_degree,
            degrees,
        }
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        assert!(source < self.n, "bfs source out of range");
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Connectivity flag, per-vertex eccentricities and diameter, by BFS from
    /// every vertex.
    pub fn distance_summary(&self) -> DistanceSummary {
        if !self.is_connected() {
            return DistanceSummary {
                connected: false,
                diameter: None,
                eccentricities: None,
            };
        }
        let eccentricities: Vec<usize> = (0..self.n)
            .map(|s| {
                self.bfs_distances(s)
                    .iter()
                    .map(|d| d.unwrap())
                    .max()
                    .unwrap()
            })
            .collect();
        let diameter = eccentricities.iter().copied().max().unwrap();
        DistanceSummary {
            connected: true,
            diameter: Some(diameter),
            eccentricities: Some(eccentricities),
        }
    }

    /// New graph with edge `{u, v}` removed.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NoSuchEdge(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u].retain(|&w| w != v);
        adj[v].retain(|&w| w != u);
        Ok(Graph {
            n: self.n,
            m: self.m - 1,
            adj,
        })
    }

    /// New graph with edge `{u, v}` added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::EdgeExists(u, v));
        }
        let mut adj = self.adj.clone();
        let pos_u = adj[u].binary_search(&v).unwrap_err();
        adj[u].insert(pos_u, v);
        let pos_v = adj[v].binary_search(&u).unwrap_err();
        adj[v].insert(pos_v, u);
        Ok(Graph {
            n: self.n,
            m: self.m + 1,
            adj,
        })
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn triangle_builds_with_all_degrees_two() {
        let g = Graph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.m(), 3);
        let profile = g.degree_profile();
        assert_eq!(profile.degrees, vec![2, 2, 2]);
        assert!(profile.is_regular);
    }

    #[test]
    fn empty_edge_set_gives_isolated_vertices() {
        let g = Graph::build(2, &[]).unwrap();
        assert_eq!(g.m(), 0);
        assert!(!g.is_connected());
    }

    #[test]
    fn build_rejections() {
        assert_eq!(
            Graph::build(4, &[(0, 1), (0, 1)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::build(4, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::build(4, &[(2, 2)]), Err(GraphError::SelfLoop(2)));
        assert_eq!(
            Graph::build(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::build(0, &[]), Err(GraphError::Empty));
    }

    #[test]
    fn cycle_is_regular_star_is_not() {
        let c6 = families::cycle(6).unwrap();
        let profile = c6.degree_profile();
        assert!(profile.is_regular);
        assert_eq!(profile.max_degree, 2);

        let star = families::star(4).unwrap();
        let profile = star.degree_profile();
        assert_eq!(profile.max_degree, 3);
        let mut degs = profile.degrees.clone();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 1, 3]);
    }

    #[test]
    fn bfs_path_distances_from_endpoint() {
        let p5 = families::path(5).unwrap();
        let dist = p5.bfs_distances(0);
        assert_eq!(
            dist,
            vec![Some(0), Some(1), Some(2), Some(3), Some(4)]
        );
    }

    #[test]
    fn bfs_marks_unreachable_as_none() {
        let g = Graph::build(2, &[]).unwrap();
        assert_eq!(g.bfs_distances(0), vec![Some(0), None]);
    }

    #[test]
    fn section4_distance_to_far_vertex_equals_k() {
        // Construction labels are 1-based; label 1 is index 0 and label
        // k+1 is index k. For k=3 the distance from label 1 to label 4 is 3.
        let g = families::section4_family(3).unwrap();
        let dist = g.bfs_distances(0);
        assert_eq!(dist[3], Some(3));
        assert_eq!(dist[4], Some(3));
    }

    #[test]
    fn diameters_of_small_fixtures() {
        assert_eq!(
            families::cycle(6).unwrap().distance_summary().diameter,
            Some(3)
        );
        assert_eq!(
            families::path(5).unwrap().distance_summary().diameter,
            Some(4)
        );
        assert_eq!(
            families::petersen().distance_summary().diameter,
            Some(2)
        );
    }

    #[test]
    fn disconnected_summary_has_no_diameter() {
        let g = Graph::build(3, &[(0, 1)]).unwrap();
        let summary = g.distance_summary();
        assert!(!summary.connected);
        assert_eq!(summary.diameter, None);
        assert_eq!(summary.eccentricities, None);
    }

    #[test]
    fn delete_edge_bookkeeping() {
        let k4 = families::complete(4).unwrap();
        let g = k4.delete_edge(0, 1).unwrap();
        assert_eq!(g.m(), 5);
        let mut degs = g.degree_profile().degrees;
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 3, 3]);
        // Input graph untouched.
        assert_eq!(k4.m(), 6);
        assert!(k4.has_edge(0, 1));
    }

    #[test]
    fn cycle_minus_edge_is_a_connected_path() {
        let g = families::cycle(4).unwrap().delete_edge(0, 1).unwrap();
        assert!(g.is_connected());
        assert_eq!(g.distance_summary().diameter, Some(3));
    }

    #[test]
    fn deleting_a_bridge_disconnects() {
        let p3 = families::path(3).unwrap();
        let g = p3.delete_edge(1, 2).unwrap();
        assert!(!g.is_connected());
    }

    #[test]
    fn delete_missing_edge_fails() {
        let p3 = families::path(3).unwrap();
        assert_eq!(p3.delete_edge(0, 2), Err(GraphError::NoSuchEdge(0, 2)));
    }

    #[test]
    fn add_edge_bookkeeping() {
        let c5 = families::cycle(5).unwrap();
        let g = c5.add_edge(0, 2).unwrap();
        assert_eq!(g.m(), 6);
        assert_eq!(g.degree_profile().degrees, vec![3, 2, 3, 2, 2]);

        let two = Graph::build(2, &[]).unwrap();
        let k2 = two.add_edge(0, 1).unwrap();
        assert_eq!(k2.m(), 1);
        assert!(k2.is_connected());

        let k3 = families::complete(3).unwrap();
        assert_eq!(k3.add_edge(0, 1), Err(GraphError::EdgeExists(0, 1)));
        assert_eq!(k3.add_edge(1, 1), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = Graph::build(4, &[(2, 3), (0, 2), (0, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (2, 3)]);
    }
}

