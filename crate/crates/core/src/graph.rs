//! Simple undirected graphs and total edge colourings.
//!
//! Vertices are `0..n`. Edges are stored once as `(u, v)` with `u < v`, in
//! lexicographic order; an edge's position in that list is its [`EdgeId`].

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// Index of an edge in [`Graph::edges`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a simple graph. Self-loops, duplicate edges and out-of-range
    /// endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Domain(format!(
                    "edge ({}, {}) out of range for {n} vertices",
                    a + 1,
                    b + 1
                )));
            }
            if a == b {
                return Err(Error::Domain(format!("self-loop at vertex {}", a + 1)));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(Error::Domain(format!(
                    "duplicate edge ({}, {})",
                    e.0 + 1,
                    e.1 + 1
                )));
            }
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, edges })
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("path needs at least one vertex".into()));
        }
        Graph::new(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e.0]
    }

    pub fn edge_id(&self, a: usize, b: usize) -> Option<EdgeId> {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).ok().map(EdgeId)
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adj[a].binary_search(&b).is_ok()
    }

    /// Common neighbours of `a` and `b`, ascending.
    pub fn common_neighbors(&self, a: usize, b: usize) -> Vec<usize> {
        let (x, y) = (&self.adj[a], &self.adj[b]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < x.len() && j < y.len() {
            match x[i].cmp(&y[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(x[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components_without(&[], &[]).iter().all(|&c| c == 0)
    }

    /// Connected-component label of every vertex after deleting the given
    /// vertices and edges. Deleted vertices get `usize::MAX`.
    pub fn components_without(
        &self,
        removed_vertices: &[usize],
        removed_edges: &[EdgeId],
    ) -> Vec<usize> {
        let n = self.n();
        let mut gone = vec![false; n];
        for &v in removed_vertices {
            gone[v] = true;
        }
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if gone[s] || comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if gone[w] || comp[w] != usize::MAX {
                        continue;
                    }
                    if !removed_edges.is_empty() {
                        let id = self.edge_id(u, w).expect("adjacent");
                        if removed_edges.contains(&id) {
                            continue;
                        }
                    }
                    comp[w] = next;
                    queue.push_back(w);
                }
            }
            next += 1;
        }
        comp
    }

    /// Number of connected components after deleting the given vertices.
    pub fn component_count_without(&self, removed_vertices: &[usize]) -> usize {
        self.components_without(removed_vertices, &[])
            .into_iter()
            .filter(|&c| c != usize::MAX)
            .max()
            .map_or(0, |c| c + 1)
    }
}

/// A total map from edges to positive colours.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    colors: Vec<u32>,
}

impl EdgeColoring {
    /// `colors[i]` is the colour of `EdgeId(i)`; every colour must be >= 1.
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if let Some(i) = colors.iter().position(|&c| c == 0) {
            return Err(Error::InvalidColoring(format!("edge #{i} has colour 0")));
        }
        Ok(EdgeColoring { colors })
    }

    /// Checks that this colouring is total on `g`.
    pub fn check_total(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.m() {
            return Err(Error::InvalidColoring(format!(
                "{} colours for {} edges",
                self.colors.len(),
                g.m()
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn color(&self, e: EdgeId) -> u32 {
        self.colors[e.0]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.colors
    }

    /// Largest colour value in use.
    pub fn palette_size(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Distinct colours in use, ascending.
    pub fn distinct_colors(&self) -> Vec<u32> {
        let set: BTreeSet<u32> = self.colors.iter().copied().collect();
        set.into_iter().collect()
    }

    pub fn colors_used(&self) -> usize {
        self.distinct_colors().len()
    }
}

/// A colouring under construction. Once an edge has a colour it keeps it.
#[derive(Debug, Clone)]
pub struct PartialColoring {
    colors: Vec<Option<u32>>,
}

impl PartialColoring {
    pub fn new(m: usize) -> Self {
        PartialColoring {
            colors: vec![None; m],
        }
    }

    #[inline]
    pub fn get(&self, e: EdgeId) -> Option<u32> {
        self.colors[e.0]
    }

    /// Colours `e` unless it already has a colour. Returns whether the colour
    /// was applied.
    pub fn paint(&mut self, e: EdgeId, color: u32) -> bool {
        debug_assert!(color > 0);
        match self.colors[e.0] {
            Some(_) => false,
            None => {
                self.colors[e.0] = Some(color);
                true
            }
        }
    }

    pub fn uncolored(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_none())
            .map(|(i, _)| EdgeId(i))
    }

    /// Finishes the colouring, giving every uncoloured edge `fill`.
    pub fn finish(self, fill: u32) -> EdgeColoring {
        EdgeColoring {
            colors: self.colors.into_iter().map(|c| c.unwrap_or(fill)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
    }

    #[test]
    fn edge_ids_are_lexicographic() {
        let g = Graph::new(4, [(2, 3), (0, 2), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.edge_id(3, 2), Some(EdgeId(2)));
        assert_eq!(g.edge_id(1, 2), None);
    }

    #[test]
    fn cut_vertex_splits_path() {
        let g = Graph::path(5).unwrap();
        assert_eq!(g.component_count_without(&[2]), 2);
        assert_eq!(g.component_count_without(&[0]), 1);
        let comp = g.components_without(&[], &[EdgeId(0)]);
        assert_ne!(comp[0], comp[1]);
    }

    #[test]
    fn partial_coloring_never_recolors() {
        let mut p = PartialColoring::new(2);
        assert!(p.paint(EdgeId(0), 4));
        assert!(!p.paint(EdgeId(0), 1));
        assert_eq!(p.get(EdgeId(0)), Some(4));
        let c = p.finish(3);
        assert_eq!(c.as_slice(), &[4, 3]);
        assert_eq!(c.colors_used(), 2);
        assert_eq!(c.palette_size(), 4);
    }

    #[test]
    fn zero_colour_rejected() {
        assert!(EdgeColoring::new(vec![1, 0]).is_err());
    }
}
