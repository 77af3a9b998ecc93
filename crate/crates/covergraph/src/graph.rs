use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::label::VertexLabel;

/// Immutable finite simple undirected graph with structured vertex labels.
///
/// Vertex order is fixed at construction and canonical for serialization;
/// all searches iterate in that order, so results are deterministic. Cloning
/// is cheap (shared storage), and values are safe to share across workers.
#[derive(Clone)]
pub struct Graph {
    inner: Arc<GraphInner>,
}

struct GraphInner {
    labels: Vec<VertexLabel>,
    index: HashMap<VertexLabel, usize>,
    adj: Vec<Vec<usize>>,
    /// Unordered edges stored as (u, v) with u < v, sorted lexicographically.
    edges: Vec<(usize, usize)>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.inner.labels == other.inner.labels && self.inner.edges == other.inner.edges
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("size", &self.size())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from a fixed vertex list and index edges.
    ///
    /// Rejects duplicate labels, out-of-range endpoints, loops, and parallel
    /// edges.
    pub fn new(labels: Vec<VertexLabel>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::malformed(
                    format!("vertices[{i}]"),
                    format!("duplicate label {label}"),
                ));
            }
        }
        let mut normalized: Vec<(usize, usize)> = Vec::new();
        for (pos, (a, b)) in edges.into_iter().enumerate() {
            if a >= n || b >= n {
                return Err(Error::malformed(
                    format!("edges[{pos}]"),
                    format!("endpoint out of range ({a}, {b}) with {n} vertices"),
                ));
            }
            if a == b {
                return Err(Error::malformed(
                    format!("edges[{pos}]"),
                    format!("loop at vertex {}", labels[a]),
                ));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).position(|w| w[0] == w[1]) {
            let (a, b) = normalized[w];
            return Err(Error::malformed(
                "edges",
                format!("parallel edge ({}, {})", labels[a], labels[b]),
            ));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &normalized {
            adj[a].push(b);
            adj[b].push(a);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            inner: Arc::new(GraphInner {
                labels,
                index,
                adj,
                edges: normalized,
            }),
        })
    }

    /// Builds a graph from labeled edges; every endpoint must appear in
    /// `labels`.
    pub fn from_labeled_edges(
        labels: Vec<VertexLabel>,
        edges: impl IntoIterator<Item = (VertexLabel, VertexLabel)>,
    ) -> Result<Self> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            index.insert(label.clone(), i);
        }
        let mut index_edges = Vec::new();
        for (pos, (a, b)) in edges.into_iter().enumerate() {
            let ia = *index.get(&a).ok_or_else(|| {
                Error::malformed(format!("edges[{pos}]"), format!("unknown label {a}"))
            })?;
            let ib = *index.get(&b).ok_or_else(|| {
                Error::malformed(format!("edges[{pos}]"), format!("unknown label {b}"))
            })?;
            index_edges.push((ia, ib));
        }
        Graph::new(labels, index_edges)
    }

    pub fn order(&self) -> usize {
        self.inner.labels.len()
    }

    pub fn size(&self) -> usize {
        self.inner.edges.len()
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.inner.labels
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.inner.labels[v]
    }

    pub fn vertex(&self, label: &VertexLabel) -> Option<usize> {
        self.inner.index.get(label).copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.inner.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.inner.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.inner.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as (u, v) index pairs with u < v, in canonical sorted order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.inner.edges
    }

    pub fn edge_labels(&self, e: usize) -> (&VertexLabel, &VertexLabel) {
        let (a, b) = self.inner.edges[e];
        (&self.inner.labels[a], &self.inner.labels[b])
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Cycle C_n on tower-level-0 labels ⟨0,0⟩..⟨0,n−1⟩, consecutive
    /// positions adjacent modulo n.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidOrder(format!("cycle needs n >= 3, got {n}")));
        }
        let labels = (0..n).map(|j| VertexLabel::Myc(0, j as u32)).collect();
        let edges = (0..n).map(|j| (j, (j + 1) % n));
        Graph::new(labels, edges)
    }

    /// Path P_n on n vertices (n − 1 edges), plain labels.
    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder("path needs n >= 1".into()));
        }
        let labels = plain_labels(n);
        let edges = (1..n).map(|j| (j - 1, j));
        Graph::new(labels, edges)
    }

    /// Complete graph K_n, plain labels.
    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder("complete graph needs n >= 1".into()));
        }
        let labels = plain_labels(n);
        let edges = (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b)));
        Graph::new(labels, edges)
    }

    /// Graph with n vertices and no edges, plain labels.
    pub fn edgeless(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder("edgeless graph needs n >= 1".into()));
        }
        Graph::new(plain_labels(n), std::iter::empty())
    }

    /// Star K_{1,k}: center 0 joined to k leaves, plain labels.
    pub fn star(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidOrder("star needs k >= 1 leaves".into()));
        }
        let labels = plain_labels(k + 1);
        let edges = (1..=k).map(|leaf| (0, leaf));
        Graph::new(labels, edges)
    }

    /// The subgraph on the same vertex set keeping only the listed edges
    /// (indices into `edges()`).
    pub fn edge_subgraph(&self, keep: &[usize]) -> Result<Self> {
        let edges: Vec<(usize, usize)> = keep.iter().map(|&e| self.inner.edges[e]).collect();
        Graph::new(self.inner.labels.clone(), edges)
    }
}

fn plain_labels(n: usize) -> Vec<VertexLabel> {
    (0..n).map(|k| VertexLabel::Plain(k as u32)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_shape() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.order(), 5);
        assert_eq!(c5.size(), 5);
        for j in 0..5 {
            assert!(c5.has_edge(j, (j + 1) % 5));
        }
        assert_eq!(c5.label(2), &VertexLabel::Myc(0, 2));
        assert!(Graph::cycle(2).is_err());
    }

    #[test]
    fn triangle_equals_k3_edges() {
        let c3 = Graph::cycle(3).unwrap();
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(c3.edges(), k3.edges());
    }

    #[test]
    fn standard_builders() {
        assert_eq!(Graph::edgeless(4).unwrap().size(), 0);
        assert_eq!(Graph::edgeless(4).unwrap().order(), 4);
        let p2 = Graph::path(2).unwrap();
        assert_eq!((p2.order(), p2.size()), (2, 1));
        let s3 = Graph::star(3).unwrap();
        assert_eq!((s3.order(), s3.size()), (4, 3));
        assert_eq!(s3.degree(0), 3);
    }

    #[test]
    fn adjacency_is_symmetric_and_counts_match() {
        let g = Graph::complete(5).unwrap();
        let total: usize = g.vertices().map(|v| g.degree(v)).sum();
        assert_eq!(total, 2 * g.size());
        for (a, b) in g.edges().iter().copied() {
            assert!(g.has_edge(a, b) && g.has_edge(b, a));
        }
    }

    #[test]
    fn rejects_loops_parallel_and_unknown() {
        assert!(Graph::new(plain_labels(2), [(0, 0)]).is_err());
        assert!(Graph::new(plain_labels(2), [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(plain_labels(2), [(0, 2)]).is_err());
        let dup = vec![VertexLabel::Plain(0), VertexLabel::Plain(0)];
        assert!(Graph::new(dup, []).is_err());
    }
}
