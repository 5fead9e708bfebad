//! Maximum cardinality search, maximal fans, and the central-cut-spine.
//!
//! The central-cut-spine (CCS) of a MOP is a tree rooted at a central
//! vertex `v_r`. Its green nodes stand for chords whose endpoints lie in the
//! same BFS layer around `v_r`; such a chord is a 2-vertex cut that
//! separates the root from everything behind it. Its red nodes are the root
//! and the fan centres in the second-to-last layer whose fans reach the
//! last layer. A node's parent is the innermost green chord that encloses
//! it, or the root.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::metrics::{bfs, farley_eccentricities, DistanceTable, Eccentricities};
use crate::mop::MopGraph;

/// Result of maximum cardinality search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialOrder {
    /// `order[i]` is the vertex numbered `i + 1`.
    pub order: Vec<usize>,
    /// `number[v]` is the 1-based number given to `v`.
    pub number: Vec<usize>,
    /// Number of earlier-numbered neighbours of each vertex when it was
    /// numbered.
    pub weights: Vec<usize>,
}

/// Maximum cardinality search; ties broken by smallest label.
///
/// The reverse of the returned order is checked to be a perfect elimination
/// ordering, failing with [`Error::NotChordal`] otherwise.
pub fn mcs(g: &Graph) -> Result<SimplicialOrder> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    // buckets[w] holds unnumbered vertices of weight w.
    let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n + 1];
    buckets[0].extend(0..n);
    let mut top = 0;
    let mut order = Vec::with_capacity(n);
    let mut weights = vec![0; n];
    for _ in 0..n {
        while top > 0 && buckets[top].is_empty() {
            top -= 1;
        }
        let z = *buckets[top]
            .iter()
            .next()
            .expect("an unnumbered vertex remains");
        buckets[top].remove(&z);
        numbered[z] = true;
        weights[z] = weight[z];
        order.push(z);
        for &y in g.neighbors(z) {
            if !numbered[y] {
                buckets[weight[y]].remove(&y);
                weight[y] += 1;
                buckets[weight[y]].insert(y);
                top = top.max(weight[y]);
            }
        }
    }
    let mut number = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        number[v] = i + 1;
    }
    let so = SimplicialOrder {
        order,
        number,
        weights,
    };
    if let Some(v) = first_non_simplicial(g, &so) {
        return Err(Error::NotChordal(v + 1));
    }
    Ok(so)
}

/// First vertex (in numbering order) whose earlier-numbered neighbours do
/// not form a clique, if any.
pub fn first_non_simplicial(g: &Graph, so: &SimplicialOrder) -> Option<usize> {
    so.order.iter().copied().find(|&v| {
        let earlier: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&x| so.number[x] < so.number[v])
            .collect();
        earlier
            .iter()
            .enumerate()
            .any(|(i, &a)| earlier[i + 1..].iter().any(|&b| !g.has_edge(a, b)))
    })
}

/// A vertex together with the induced path on its neighbours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanStructure {
    pub center: usize,
    /// Neighbours of the centre in cycle order.
    pub path: Vec<usize>,
}

impl FanStructure {
    pub fn of(g: &MopGraph, center: usize) -> Self {
        FanStructure {
            center,
            path: g.fan_path(center).to_vec(),
        }
    }

    /// The fan's triangles, each sorted.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        self.path
            .windows(2)
            .map(|w| {
                let mut t = [self.center, w[0], w[1]];
                t.sort_unstable();
                t
            })
            .collect()
    }
}

/// Fans whose closed neighbourhood is not strictly inside another fan's.
/// Among fans with identical vertex sets the smallest centre is kept.
pub fn maximal_fans(g: &MopGraph) -> Vec<FanStructure> {
    let h = g.graph();
    let closed: Vec<Vec<usize>> = (0..h.n())
        .map(|v| {
            let mut s = h.neighbors(v).to_vec();
            s.push(v);
            s.sort_unstable();
            s
        })
        .collect();
    let subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
    (0..h.n())
        .filter(|&c| {
            // A closed neighbourhood can only sit inside N[x] for x in N(c).
            !h.neighbors(c).iter().any(|&x| {
                subset(&closed[c], &closed[x]) && (closed[c].len() < closed[x].len() || x < c)
            })
        })
        .map(|c| FanStructure::of(g, c))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CcsNode {
    Red(usize),
    /// A contracted chord `(u, w)` with `u < w`.
    Green(usize, usize),
}

/// The central-cut-spine of a MOP.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CcsTree {
    nodes: Vec<CcsNode>,
    parent: Vec<Option<usize>>,
    level: Vec<usize>,
    children: Vec<Vec<usize>>,
    /// For green nodes, the vertices strictly behind the chord.
    far_side: Vec<Vec<usize>>,
    bfs: DistanceTable,
    rad: usize,
    ecc: Eccentricities,
}

impl CcsTree {
    pub fn root(&self) -> usize {
        0
    }

    pub fn root_vertex(&self) -> usize {
        match self.nodes[0] {
            CcsNode::Red(v) => v,
            CcsNode::Green(..) => unreachable!("root is red"),
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Radius of the graph; at most one means the tree is just the root.
    pub fn rad(&self) -> usize {
        self.rad
    }

    pub fn is_degenerate(&self) -> bool {
        self.rad <= 1
    }

    pub fn node(&self, i: usize) -> CcsNode {
        self.nodes[i]
    }

    pub fn nodes(&self) -> &[CcsNode] {
        &self.nodes
    }

    pub fn parent(&self, i: usize) -> Option<usize> {
        self.parent[i]
    }

    pub fn level(&self, i: usize) -> usize {
        self.level[i]
    }

    pub fn children(&self, i: usize) -> &[usize] {
        &self.children[i]
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.children[i].is_empty())
            .collect()
    }

    /// Vertices of G a node stands for.
    pub fn realization(&self, i: usize) -> Vec<usize> {
        match self.nodes[i] {
            CcsNode::Red(v) => vec![v],
            CcsNode::Green(u, w) => vec![u, w],
        }
    }

    /// Vertices strictly behind a green node's chord; empty for red nodes.
    pub fn far_side(&self, i: usize) -> &[usize] {
        &self.far_side[i]
    }

    /// Tree nodes from the root down to `i`.
    pub fn tree_path(&self, i: usize) -> Vec<usize> {
        let mut path = vec![i];
        let mut cur = i;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }

    /// BFS from the root vertex: `bfs().dist[v]` is the layer of `v`.
    pub fn bfs(&self) -> &DistanceTable {
        &self.bfs
    }

    pub fn eccentricities(&self) -> &Eccentricities {
        &self.ecc
    }

    /// Fan centres a node contributes: a red node's vertex; for a green
    /// node, the endpoint of larger degree (smaller label on ties), plus
    /// the other endpoint when it has neighbours outside the first one's
    /// closed neighbourhood.
    pub fn fan_centers(&self, g: &MopGraph, i: usize) -> Vec<usize> {
        match self.nodes[i] {
            CcsNode::Red(v) => vec![v],
            CcsNode::Green(u, w) => {
                let h = g.graph();
                let (big, small) = if h.degree(w) > h.degree(u) {
                    (w, u)
                } else {
                    (u, w)
                };
                let extra = h
                    .neighbors(small)
                    .iter()
                    .any(|&x| x != big && !h.has_edge(big, x));
                if extra {
                    vec![big, small]
                } else {
                    vec![big]
                }
            }
        }
    }

    /// Indented text rendering, one node per line, 1-based vertex labels.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut stack = vec![(0usize, 0usize)];
        while let Some((i, depth)) = stack.pop() {
            out.push_str(&"  ".repeat(depth));
            out.push_str(&self.label(i));
            out.push_str(&format!(" level={}\n", self.level[i]));
            for &c in self.children[i].iter().rev() {
                stack.push((c, depth + 1));
            }
        }
        out
    }

    pub fn label(&self, i: usize) -> String {
        match self.nodes[i] {
            CcsNode::Red(v) => format!("red {}", v + 1),
            CcsNode::Green(u, w) => format!("green {}-{}", u + 1, w + 1),
        }
    }
}

/// Builds the central-cut-spine of `g`.
///
/// The root is the central vertex of minimum degree (smallest label on
/// ties). For radius at most one the tree is the root alone; check
/// [`CcsTree::is_degenerate`].
pub fn build_ccs(g: &MopGraph) -> Result<CcsTree> {
    let h = g.graph();
    let n = h.n();
    let ecc = Eccentricities::from_ecc(farley_eccentricities(g)?);
    let root = *ecc
        .center
        .iter()
        .min_by_key(|&&v| (h.degree(v), v))
        .expect("non-empty centre");
    let rad = ecc.rad;
    let tree_bfs = bfs(h, root);
    let level = &tree_bfs.dist;

    let mut nodes = vec![CcsNode::Red(root)];
    let mut node_level = vec![0];
    let mut far_side: Vec<Vec<usize>> = vec![Vec::new()];

    if rad >= 2 {
        let mut layer_size = vec![0usize; rad + 1];
        for v in 0..n {
            layer_size[level[v]] += 1;
        }
        let mut greens: Vec<(usize, usize, usize)> = Vec::new();
        for (i, &(u, w)) in h.edges().iter().enumerate() {
            let li = level[u];
            if li != level[w] || li == 0 || li >= rad {
                continue;
            }
            let chord = g.edge_kind(EdgeId(i)) == crate::mop::EdgeKind::Chord;
            if chord || layer_size[li] == 2 {
                greens.push((li, u, w));
            }
        }
        greens.sort_unstable();
        for &(li, u, w) in &greens {
            nodes.push(CcsNode::Green(u, w));
            node_level.push(li);
            far_side.push(behind(g, u, w, root));
        }
        // Fan centres in the second-to-last layer that reach the last layer
        // through a region no green chord at their own layer already covers.
        for c in 0..n {
            if level[c] != rad - 1 {
                continue;
            }
            let covered = |y: usize| {
                (1..nodes.len()).any(|k| match nodes[k] {
                    CcsNode::Green(a, b) => {
                        (a == c || b == c) && far_side[k].binary_search(&y).is_ok()
                    }
                    CcsNode::Red(_) => false,
                })
            };
            if h.neighbors(c)
                .iter()
                .any(|&y| level[y] == rad && !covered(y))
            {
                nodes.push(CcsNode::Red(c));
                node_level.push(rad - 1);
                far_side.push(Vec::new());
            }
        }
    }

    let k = nodes.len();
    let mut parent = vec![None; k];
    for i in 1..k {
        let inside = |j: usize| -> bool {
            let fs = &far_side[j];
            match nodes[i] {
                CcsNode::Red(v) => fs.binary_search(&v).is_ok(),
                CcsNode::Green(u, w) => {
                    fs.binary_search(&u).is_ok() && fs.binary_search(&w).is_ok()
                }
            }
        };
        let best = (1..k)
            .filter(|&j| j != i && matches!(nodes[j], CcsNode::Green(..)) && inside(j))
            .min_by_key(|&j| (far_side[j].len(), j));
        parent[i] = Some(best.unwrap_or(0));
    }
    let mut children = vec![Vec::new(); k];
    for i in 1..k {
        children[parent[i].expect("non-root")].push(i);
    }
    Ok(CcsTree {
        nodes,
        parent,
        level: node_level,
        children,
        far_side,
        bfs: tree_bfs,
        rad,
        ecc,
    })
}

/// Vertices on the side of the cycle chord `(u, w)` that does not contain
/// `root`, ascending.
fn behind(g: &MopGraph, u: usize, w: usize, root: usize) -> Vec<usize> {
    let n = g.n();
    let cyc = g.ham_cycle();
    let (pu, pw) = (g.cycle_pos(u), g.cycle_pos(w));
    let arc = |from: usize, to: usize| -> Vec<usize> {
        let mut out = Vec::new();
        let mut p = (from + 1) % n;
        while p != to {
            out.push(cyc[p]);
            p = (p + 1) % n;
        }
        out
    };
    let first = arc(pu, pw);
    let mut side = if first.contains(&root) {
        arc(pw, pu)
    } else {
        first
    };
    side.sort_unstable();
    side
}

/// Edges as `(min, max)` vertex pairs.
pub type EdgeSet = HashSet<(usize, usize)>;

/// Two edge-disjoint paths in G from the CCS root to a node's vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizedPaths {
    /// Geodesic from the root; vertex sequence, root first.
    pub first: Vec<usize>,
    /// Edge-disjoint from `first`; vertex sequence, root first.
    pub second: Vec<usize>,
    /// Edges the second path's geodesic shared with `first` before being
    /// rerouted.
    pub common_edges: usize,
}

impl RealizedPaths {
    pub fn edge_sets(&self) -> (EdgeSet, EdgeSet) {
        let set = |p: &[usize]| -> HashSet<(usize, usize)> {
            p.windows(2)
                .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
                .collect()
        };
        (set(&self.first), set(&self.second))
    }

    pub fn is_edge_disjoint(&self) -> bool {
        let (a, b) = self.edge_sets();
        a.is_disjoint(&b)
    }
}

/// Realises a CCS node as two edge-disjoint root paths in G.
///
/// The first path is the BFS geodesic to the node's larger-degree vertex.
/// The second starts as the geodesic to the other vertex (or the same one
/// for a red node); each edge it shares with the first path is replaced by
/// the two other sides of a triangle through that edge, and the resulting
/// walk is shortened to a path.
pub fn realize_paths(g: &MopGraph, t: &CcsTree, node: usize) -> RealizedPaths {
    let h = g.graph();
    let root = t.root_vertex();
    if node == t.root() {
        return RealizedPaths {
            first: vec![root],
            second: vec![root],
            common_edges: 0,
        };
    }
    let (a, b) = match t.node(node) {
        CcsNode::Red(v) => (v, v),
        CcsNode::Green(u, w) => {
            if h.degree(w) > h.degree(u) {
                (w, u)
            } else {
                (u, w)
            }
        }
    };
    let first = t.bfs().path_to(a);
    let on_first: HashSet<usize> = first.iter().copied().collect();
    let first_edges: HashSet<(usize, usize)> = first
        .windows(2)
        .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
        .collect();
    let geodesic = t.bfs().path_to(b);
    let mut walk = vec![root];
    let mut common = 0;
    for w in geodesic.windows(2) {
        let (x, y) = (w[0], w[1]);
        if first_edges.contains(&(x.min(y), x.max(y))) {
            common += 1;
            // Apexes of triangles on a geodesic edge are never on that
            // geodesic, so both detour edges avoid the first path.
            let apex = h
                .common_neighbors(x, y)
                .into_iter()
                .find(|z| !on_first.contains(z))
                .expect("every edge of a MOP lies in a triangle off a geodesic");
            walk.push(apex);
        }
        walk.push(y);
    }
    RealizedPaths {
        first,
        second: erase_loops(walk),
        common_edges: common,
    }
}

/// Removes cycles from a walk, keeping the first visit of each vertex's
/// last occurrence chain.
fn erase_loops(walk: Vec<usize>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(walk.len());
    for v in walk {
        if let Some(p) = out.iter().position(|&x| x == v) {
            out.truncate(p + 1);
        } else {
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{fan, lad};
    use crate::mop::{CanonicalMop, MopGraph};

    #[test]
    fn mcs_triangle_order() {
        let g = Graph::complete(3).unwrap();
        let so = mcs(&g).unwrap();
        assert_eq!(so.order, vec![0, 1, 2]);
        assert_eq!(so.number, vec![1, 2, 3]);
    }

    #[test]
    fn mcs_rejects_four_cycle() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(matches!(mcs(&c4), Err(Error::NotChordal(_))));
    }

    #[test]
    fn mcs_on_fan_is_perfect() {
        let f = fan(5).unwrap();
        let so = mcs(f.graph.graph()).unwrap();
        assert_eq!(first_non_simplicial(f.graph.graph(), &so), None);
    }

    #[test]
    fn maximal_fans_small_cases() {
        let f = fan(7).unwrap();
        let fans = maximal_fans(&f.graph);
        assert_eq!(fans.len(), 1);
        assert_eq!(fans[0].center, 2);
        assert_eq!(fans[0].path.len(), 7);

        let k3 = MopGraph::from_canonical(&CanonicalMop::triangle()).unwrap();
        let fans = maximal_fans(&k3);
        assert_eq!(fans.len(), 1);
        assert_eq!(fans[0].center, 0);
    }

    #[test]
    fn maximal_fans_cover_ladder_triangles() {
        let l = lad(3).unwrap();
        let mut covered: BTreeSet<[usize; 3]> = BTreeSet::new();
        for f in maximal_fans(&l.graph) {
            covered.extend(f.triangles());
        }
        let all: BTreeSet<[usize; 3]> = l.graph.triangles().into_iter().collect();
        assert_eq!(covered, all);
        assert_eq!(all.len(), 4);
    }

    #[test]
    fn fan_ccs_is_single_root() {
        let f = fan(9).unwrap();
        let t = build_ccs(&f.graph).unwrap();
        assert!(t.is_degenerate());
        assert_eq!(t.len(), 1);
        assert_eq!(t.root_vertex(), 2);
        let p = realize_paths(&f.graph, &t, 0);
        assert_eq!((p.first.len(), p.second.len()), (1, 1));
    }

    #[test]
    fn loop_erasure() {
        assert_eq!(erase_loops(vec![1, 2, 3, 2, 4]), vec![1, 2, 4]);
        assert_eq!(erase_loops(vec![1, 2, 3]), vec![1, 2, 3]);
    }
}
