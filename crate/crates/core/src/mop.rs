//! Maximal outerplanar graphs: the construction-order representation, the
//! validated graph view, and the structural queries every other module
//! builds on.
//!
//! A MOP on `n >= 3` vertices is grown from a triangle by repeatedly joining
//! a new vertex to both ends of an edge on the exterior face. Recording, for
//! each new vertex, the two older vertices it was joined to gives the
//! canonical representation [`CanonicalMop`]. Vertex `i` (0-based) is the
//! `i`-th vertex added; the text formats shift everything by one.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// Construction-order description of a MOP.
///
/// `attach[i - 2] = (low, high)` are the two older neighbours of vertex `i`
/// for `i` in `2..n`, with `low < high < i`. The first entry is always
/// `(0, 1)`: vertex 2 closes the initial triangle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalMop {
    n: usize,
    attach: Vec<(usize, usize)>,
}

impl CanonicalMop {
    /// Checks the per-row ordering constraints. Whether every row names an
    /// exterior edge is checked by [`MopGraph::from_canonical`].
    pub fn new(n: usize, attach: Vec<(usize, usize)>) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooSmall(n));
        }
        if attach.len() != n - 2 {
            return Err(Error::Domain(format!(
                "expected {} attachment rows for n = {n}, got {}",
                n - 2,
                attach.len()
            )));
        }
        for (k, &(low, high)) in attach.iter().enumerate() {
            let v = k + 2;
            if !(low < high && high < v) {
                return Err(Error::InvalidAttachment {
                    vertex: v + 1,
                    low: low + 1,
                    high: high + 1,
                    reason: "violates 1 <= Low(i) < High(i) < i",
                });
            }
        }
        Ok(CanonicalMop { n, attach })
    }

    pub fn triangle() -> Self {
        CanonicalMop {
            n: 3,
            attach: vec![(0, 1)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(low, high)` for vertex `v >= 2`.
    pub fn attachment(&self, v: usize) -> (usize, usize) {
        self.attach[v - 2]
    }

    pub fn attachments(&self) -> &[(usize, usize)] {
        &self.attach
    }
}

/// Which face structure an edge belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    /// On the Hamiltonian cycle.
    Outer,
    Chord,
}

/// A validated maximal outerplanar graph together with its Hamiltonian
/// cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MopGraph {
    graph: Graph,
    cycle: Vec<usize>,
    pos: Vec<usize>,
    kind: Vec<EdgeKind>,
    /// Neighbours of each vertex in the order they are met walking the
    /// cycle forward from that vertex.
    fan_order: Vec<Vec<usize>>,
}

impl MopGraph {
    /// Builds the MOP described by `c`, tracking the exterior face as a
    /// cyclic boundary list so a bad row is reported where it occurs.
    pub fn from_canonical(c: &CanonicalMop) -> Result<Self> {
        let n = c.n;
        let mut next = vec![usize::MAX; n];
        let mut prev = vec![usize::MAX; n];
        for (a, b) in [(0, 1), (1, 2), (2, 0)] {
            next[a] = b;
            prev[b] = a;
        }
        let mut edges = vec![(0, 1), (0, 2), (1, 2)];
        if c.attach[0] != (0, 1) {
            let (low, high) = c.attach[0];
            return Err(Error::InvalidAttachment {
                vertex: 3,
                low: low + 1,
                high: high + 1,
                reason: "must be {1, 2}",
            });
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for v in 3..n {
            let (low, high) = c.attach[v - 2];
            let (a, b) = if next[low] == high {
                (low, high)
            } else if next[high] == low {
                (high, low)
            } else {
                let reason = if adj[low].contains(&high) {
                    "is not on the exterior face"
                } else {
                    "is not an edge"
                };
                return Err(Error::InvalidAttachment {
                    vertex: v + 1,
                    low: low + 1,
                    high: high + 1,
                    reason,
                });
            };
            next[a] = v;
            prev[v] = a;
            next[v] = b;
            prev[b] = v;
            edges.push((low, v));
            edges.push((high, v));
            adj[low].push(v);
            adj[high].push(v);
            adj[v].push(low);
            adj[v].push(high);
        }
        let graph = Graph::new(n, edges)?;
        let mut cycle = Vec::with_capacity(n);
        let mut v = 0;
        for _ in 0..n {
            cycle.push(v);
            v = next[v];
        }
        Ok(Self::assemble(graph, normalize_cycle(cycle)))
    }

    /// Validates an arbitrary graph and wraps it.
    pub fn from_graph(graph: Graph) -> Result<Self> {
        let report = validate_mop(&graph);
        if !report.ok() {
            return Err(Error::NotMop(report.to_string()));
        }
        let cycle = hamiltonian_cycle(&graph)?;
        if graph.m() != 2 * graph.n() - 3 {
            return Err(Error::NotMop(format!(
                "{} edges, expected {}",
                graph.m(),
                2 * graph.n() - 3
            )));
        }
        Ok(Self::assemble(graph, cycle))
    }

    fn assemble(graph: Graph, cycle: Vec<usize>) -> Self {
        let n = graph.n();
        let mut pos = vec![0; n];
        for (i, &v) in cycle.iter().enumerate() {
            pos[v] = i;
        }
        let kind = graph
            .edges()
            .iter()
            .map(|&(u, v)| {
                let d = (pos[u] + n - pos[v]) % n;
                if d == 1 || d == n - 1 {
                    EdgeKind::Outer
                } else {
                    EdgeKind::Chord
                }
            })
            .collect();
        let fan_order = (0..n)
            .map(|v| {
                let mut nb = graph.neighbors(v).to_vec();
                nb.sort_by_key(|&x| (pos[x] + n - pos[v]) % n);
                nb
            })
            .collect();
        MopGraph {
            graph,
            cycle,
            pos,
            kind,
            fan_order,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    /// The Hamiltonian cycle, starting at vertex 0 and continuing to the
    /// smaller of its two cycle neighbours. This fixes the orientation used
    /// wherever "clockwise" matters.
    pub fn ham_cycle(&self) -> &[usize] {
        &self.cycle
    }

    /// Position of `v` on [`Self::ham_cycle`].
    pub fn cycle_pos(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn edge_kind(&self, e: EdgeId) -> EdgeKind {
        self.kind[e.0]
    }

    pub fn chords(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.m())
            .map(EdgeId)
            .filter(|&e| self.kind[e.0] == EdgeKind::Chord)
    }

    /// Neighbours of `v` as the induced path of its fan, ordered along the
    /// cycle orientation.
    pub fn fan_path(&self, v: usize) -> &[usize] {
        &self.fan_order[v]
    }

    pub fn hamiltonian_degree_sequence(&self) -> Vec<usize> {
        self.cycle.iter().map(|&v| self.graph.degree(v)).collect()
    }

    /// The `n - 2` inner triangular faces, each sorted, in lexicographic order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        triangles(&self.graph)
    }

    /// Re-derives a canonical representation by peeling degree-2 vertices.
    ///
    /// Returns the representation and `relabel`, where `relabel[v]` is the
    /// label of original vertex `v` in the returned construction order.
    pub fn to_canonical(&self) -> (CanonicalMop, Vec<usize>) {
        let n = self.n();
        let g = &self.graph;
        let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let mut alive = vec![true; n];
        let mut peeled = Vec::with_capacity(n - 3);
        // Smallest label first keeps the output deterministic.
        let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
            .filter(|&v| deg[v] == 2)
            .map(std::cmp::Reverse)
            .collect();
        while peeled.len() < n - 3 {
            let std::cmp::Reverse(v) = heap.pop().expect("a MOP always has a degree-2 vertex");
            if !alive[v] || deg[v] != 2 {
                continue;
            }
            let nb: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&x| alive[x])
                .collect();
            alive[v] = false;
            for &x in &nb {
                deg[x] -= 1;
                if deg[x] == 2 {
                    heap.push(std::cmp::Reverse(x));
                }
            }
            peeled.push((v, nb[0], nb[1]));
        }
        let mut relabel = vec![usize::MAX; n];
        let mut next_label = 0;
        for v in 0..n {
            if alive[v] {
                relabel[v] = next_label;
                next_label += 1;
            }
        }
        let mut attach = vec![(0, 1)];
        for &(v, a, b) in peeled.iter().rev() {
            relabel[v] = next_label;
            next_label += 1;
            let (x, y) = (relabel[a], relabel[b]);
            attach.push((x.min(y), x.max(y)));
        }
        (
            CanonicalMop::new(n, attach).expect("peeling yields a valid order"),
            relabel,
        )
    }
}

/// Rotates and orients a cycle so it starts at vertex 0 and visits the
/// smaller neighbour of 0 second.
fn normalize_cycle(mut cycle: Vec<usize>) -> Vec<usize> {
    let n = cycle.len();
    let at = cycle
        .iter()
        .position(|&v| v == 0)
        .expect("cycle contains 0");
    cycle.rotate_left(at);
    if n > 2 && cycle[n - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    cycle
}

/// One reason a graph fails the MOP characterisation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    TooSmall(usize),
    Disconnected,
    /// The neighbourhood of this vertex does not induce a path.
    NeighborhoodNotPath(usize),
    /// Deleting vertices of degree at most two got stuck on this subgraph,
    /// whose minimum degree is at least three.
    NotTwoDegenerate(Vec<usize>),
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::TooSmall(n) => write!(f, "only {n} vertices"),
            Violation::Disconnected => write!(f, "graph is disconnected"),
            Violation::NeighborhoodNotPath(v) => {
                write!(
                    f,
                    "neighbourhood of vertex {} is not an induced path",
                    v + 1
                )
            }
            Violation::NotTwoDegenerate(rest) => {
                let labels: Vec<String> = rest.iter().map(|v| (v + 1).to_string()).collect();
                write!(
                    f,
                    "subgraph on {{{}}} has minimum degree >= 3",
                    labels.join(", ")
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.ok() {
            return write!(f, "ok");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Characterisation test: every neighbourhood induces a path and the graph
/// is 2-degenerate (plus connected, at least three vertices).
pub fn validate_mop(g: &Graph) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = g.n();
    if n < 3 {
        report.violations.push(Violation::TooSmall(n));
        return report;
    }
    if !g.is_connected() {
        report.violations.push(Violation::Disconnected);
    }
    for v in 0..n {
        if !neighborhood_is_path(g, v) {
            report.violations.push(Violation::NeighborhoodNotPath(v));
        }
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| deg[v] <= 2).collect();
    let mut count = 0;
    while let Some(v) = queue.pop_front() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        count += 1;
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] == 2 {
                    queue.push_back(w);
                }
            }
        }
    }
    if count < n {
        report.violations.push(Violation::NotTwoDegenerate(
            (0..n).filter(|&v| !removed[v]).collect(),
        ));
    }
    report
}

fn neighborhood_is_path(g: &Graph, v: usize) -> bool {
    let nb = g.neighbors(v);
    let k = nb.len();
    if k == 0 {
        return false;
    }
    let mut edges = 0;
    let mut inner_deg = vec![0usize; k];
    for i in 0..k {
        for j in i + 1..k {
            if g.has_edge(nb[i], nb[j]) {
                edges += 1;
                inner_deg[i] += 1;
                inner_deg[j] += 1;
            }
        }
    }
    if edges != k - 1 || inner_deg.iter().any(|&d| d > 2) {
        return false;
    }
    // k - 1 edges and connected means a tree; max degree 2 makes it a path.
    let mut seen = vec![false; k];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..k {
            if !seen[j] && g.has_edge(nb[i], nb[j]) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// The unique Hamiltonian cycle of a MOP: the edges whose endpoints have
/// exactly one common neighbour, walked from vertex 0 towards its smaller
/// outer neighbour.
pub fn hamiltonian_cycle(g: &Graph) -> Result<Vec<usize>> {
    let n = g.n();
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    let mut outer: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        if g.common_neighbors(u, v).len() == 1 {
            outer[u].push(v);
            outer[v].push(u);
        }
    }
    if let Some(v) = (0..n).find(|&v| outer[v].len() != 2) {
        return Err(Error::NotMop(format!(
            "vertex {} has {} outer edges",
            v + 1,
            outer[v].len()
        )));
    }
    let mut cycle = Vec::with_capacity(n);
    let mut prev = 0;
    let mut cur = outer[0][0].min(outer[0][1]);
    cycle.push(0);
    while cur != 0 {
        if cycle.len() >= n {
            return Err(Error::NotMop("outer edges do not form one cycle".into()));
        }
        cycle.push(cur);
        let nxt = if outer[cur][0] == prev {
            outer[cur][1]
        } else {
            outer[cur][0]
        };
        prev = cur;
        cur = nxt;
    }
    if cycle.len() != n {
        return Err(Error::NotMop(format!(
            "outer cycle has length {}, expected {n}",
            cycle.len()
        )));
    }
    Ok(cycle)
}

/// All triangles (3-cliques) of `g`, each sorted, in lexicographic order.
/// In a MOP these are exactly the inner faces.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for &(u, v) in g.edges() {
        for w in g.common_neighbors(u, v) {
            if w > v {
                out.push([u, v, w]);
            }
        }
    }
    out.sort_unstable();
    out
}
