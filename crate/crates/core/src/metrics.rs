//! Distances, eccentricities and BFS layers.
//!
//! Two independent routes compute vertex eccentricities: all-sources BFS
//! ([`ecc_diam_rad_center`]), which works on any connected graph, and the
//! linear-time edge-eccentricity sweep over the triangles of a MOP
//! ([`farley_eccentricities`]).

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mop::MopGraph;

/// Single-source BFS result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    pub source: usize,
    /// `usize::MAX` for unreachable vertices.
    pub dist: Vec<usize>,
    /// BFS-tree predecessor; `None` for the source and unreachable vertices.
    pub parent: Vec<Option<usize>>,
}

impl DistanceTable {
    /// Tree path from the source to `v`, source first.
    pub fn path_to(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }

    pub fn eccentricity(&self) -> usize {
        self.dist
            .iter()
            .copied()
            .filter(|&d| d != usize::MAX)
            .max()
            .unwrap_or(0)
    }
}

/// BFS visiting neighbours in ascending label order.
pub fn bfs(g: &Graph, source: usize) -> DistanceTable {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![None; n];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = Some(u);
                queue.push_back(w);
            }
        }
    }
    DistanceTable {
        source,
        dist,
        parent,
    }
}

/// All-pairs distance matrix by repeated BFS.
pub fn all_distances(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n()).into_par_iter().map(|s| bfs(g, s).dist).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eccentricities {
    pub ecc: Vec<usize>,
    pub diam: usize,
    pub rad: usize,
    /// Vertices of minimum eccentricity, ascending.
    pub center: Vec<usize>,
}

impl Eccentricities {
    pub fn from_ecc(ecc: Vec<usize>) -> Self {
        let diam = ecc.iter().copied().max().unwrap_or(0);
        let rad = ecc.iter().copied().min().unwrap_or(0);
        let center = (0..ecc.len()).filter(|&v| ecc[v] == rad).collect();
        Eccentricities {
            ecc,
            diam,
            rad,
            center,
        }
    }
}

/// Eccentricity table, diameter, radius and centre by BFS from every vertex.
pub fn ecc_diam_rad_center(g: &Graph) -> Result<Eccentricities> {
    if !g.is_connected() {
        return Err(Error::Domain("graph is disconnected".into()));
    }
    let ecc = (0..g.n())
        .into_par_iter()
        .map(|s| bfs(g, s).eccentricity())
        .collect();
    Ok(Eccentricities::from_ecc(ecc))
}

/// The sets `N_k(S)` of vertices at distance exactly `k` from `sources`,
/// for `k = 0..=max`. Each layer is ascending.
pub fn layers(g: &Graph, sources: &[usize]) -> Result<Vec<Vec<usize>>> {
    if sources.is_empty() {
        return Err(Error::Domain("layers need a non-empty source set".into()));
    }
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s] == usize::MAX {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let depth = dist
        .iter()
        .copied()
        .filter(|&d| d != usize::MAX)
        .max()
        .unwrap_or(0);
    let mut out = vec![Vec::new(); depth + 1];
    for v in 0..n {
        if dist[v] != usize::MAX {
            out[dist[v]].push(v);
        }
    }
    Ok(out)
}

/// Length bound on the shortest cycle through each edge. Every edge of a
/// MOP lies in a triangle, so this is always 3.
pub fn eta(g: &MopGraph) -> Result<usize> {
    let h = g.graph();
    for &(u, v) in h.edges() {
        if h.common_neighbors(u, v).is_empty() {
            return Err(Error::NotMop(format!(
                "edge ({}, {}) lies in no triangle",
                u + 1,
                v + 1
            )));
        }
    }
    Ok(3)
}

/// Signed edge eccentricity.
///
/// For an edge `(s, t)` and one of its sides `S`, the value for anchor `s`
/// has magnitude `ecc(s)` in `G[S + {s, t}]`; it is negative exactly when
/// every vertex at that distance from `s` is one step closer to `t`.
pub type SignedEcc = i64;

/// One triangle seen from one of its edges.
#[derive(Clone, Copy)]
struct Side {
    tri: usize,
}

/// Per-vertex eccentricities of a MOP in linear time.
///
/// Every (edge, side) pair carries the two signed eccentricities of its
/// endpoints. An outer edge's empty side has `-1` for both. A non-empty side
/// of `p = (s, t)` starts with a triangle `(s, t, w)` whose other two edges
/// `a = (s, w)` and `b = (t, w)` have their own sides `S1`, `S2` pointing
/// away; the values for `p` follow from those four. The recursion over
/// (edge, side) pairs visits each once.
pub fn farley_eccentricities(g: &MopGraph) -> Result<Vec<usize>> {
    let h = g.graph();
    let n = h.n();
    let tris = g.triangles();
    if tris.len() != n - 2 {
        return Err(Error::NotMop(format!(
            "{} triangles, expected {}",
            tris.len(),
            n - 2
        )));
    }
    let mut edge_tris: Vec<Vec<usize>> = vec![Vec::new(); h.m()];
    for (i, t) in tris.iter().enumerate() {
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            let e = h.edge_id(a, b).expect("triangle edge");
            edge_tris[e.0].push(i);
        }
    }
    if edge_tris.iter().any(|ts| ts.is_empty() || ts.len() > 2) {
        return Err(Error::NotMop("triangle dual is not a tree".into()));
    }

    // memo[(edge, tri)] = (value for lower endpoint, value for higher endpoint)
    let mut memo: HashMap<(usize, usize), (SignedEcc, SignedEcc)> = HashMap::with_capacity(4 * n);

    // The side of edge e that lies away from triangle `from`.
    let away = |e: usize, from: usize| -> Option<Side> {
        edge_tris[e]
            .iter()
            .copied()
            .find(|&t| t != from)
            .map(|tri| Side { tri })
    };

    let third = |tri: usize, a: usize, b: usize| -> usize {
        tris[tri]
            .iter()
            .copied()
            .find(|&x| x != a && x != b)
            .expect("third vertex")
    };

    // Iterative post-order evaluation of (edge, side) pairs.
    let eval =
        |e0: usize, side0: Side, memo: &mut HashMap<(usize, usize), (SignedEcc, SignedEcc)>| {
            let mut stack = vec![(e0, side0.tri, false)];
            while let Some((e, tri, expanded)) = stack.pop() {
                if memo.contains_key(&(e, tri)) {
                    continue;
                }
                let (s, t) = h.endpoints(crate::graph::EdgeId(e));
                let w = third(tri, s, t);
                let ea = h.edge_id(s, w).expect("edge").0;
                let eb = h.edge_id(t, w).expect("edge").0;
                let sa = away(ea, tri);
                let sb = away(eb, tri);
                if !expanded {
                    stack.push((e, tri, true));
                    for (edge, side) in [(ea, sa), (eb, sb)] {
                        if let Some(sd) = side {
                            if !memo.contains_key(&(edge, sd.tri)) {
                                stack.push((edge, sd.tri, false));
                            }
                        }
                    }
                    continue;
                }
                let lookup = |edge: usize, side: Option<Side>, anchor: usize| -> SignedEcc {
                    match side {
                        None => -1,
                        Some(sd) => {
                            let (lo, hi) = memo[&(edge, sd.tri)];
                            let (x, _) = h.endpoints(crate::graph::EdgeId(edge));
                            if anchor == x {
                                lo
                            } else {
                                hi
                            }
                        }
                    }
                };
                let vs = combine(lookup(ea, sa, s), lookup(eb, sb, t));
                let vt = combine(lookup(eb, sb, t), lookup(ea, sa, s));
                memo.insert((e, tri), (vs, vt));
            }
        };

    let mut ecc = vec![0usize; n];
    for (v, out) in ecc.iter_mut().enumerate() {
        let u = h.neighbors(v)[0];
        let e = h.edge_id(v, u).expect("edge").0;
        let mut best = 0i64;
        for k in 0..2 {
            let value = match edge_tris[e].get(k) {
                None => -1,
                Some(&tri) => {
                    eval(e, Side { tri }, &mut memo);
                    let (lo, hi) = memo[&(e, tri)];
                    if v < u {
                        lo
                    } else {
                        hi
                    }
                }
            };
            best = best.max(value.abs());
        }
        *out = best as usize;
    }
    Ok(ecc)
}

/// Signed eccentricity of `s` on the side of `(s, t)` spanned by the
/// triangle `(s, t, w)`, given `near = e(a, s, S1)` for `a = (s, w)` and
/// `far = e(b, t, S2)` for `b = (t, w)`.
fn combine(near: SignedEcc, far: SignedEcc) -> SignedEcc {
    // Through t or w into S2: one more step unless every far vertex from t
    // is already one step closer to w.
    let r = if far > 0 { -(far + 1) } else { far.abs() };
    // Vertices on the S1 side are never closer to t than to s, so when they
    // attain the maximum the value is positive.
    if near.abs() >= r.abs() {
        near.abs()
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{fan, lad};
    use crate::mop::{CanonicalMop, MopGraph};

    #[test]
    fn bfs_on_triangle_and_ladder() {
        let k3 = MopGraph::from_canonical(&CanonicalMop::triangle()).unwrap();
        assert_eq!(bfs(k3.graph(), 0).dist, vec![0, 1, 1]);
        let l3 = lad(3).unwrap();
        assert_eq!(bfs(l3.graph.graph(), 0).dist[5], 3);
        let f = fan(7).unwrap();
        let d = bfs(f.graph.graph(), 2).dist;
        assert!(d.iter().enumerate().all(|(v, &x)| x == usize::from(v != 2)));
    }

    #[test]
    fn fan_center_is_unique_center() {
        let f = fan(9).unwrap();
        let e = ecc_diam_rad_center(f.graph.graph()).unwrap();
        assert_eq!((e.diam, e.rad), (2, 1));
        assert_eq!(e.center, vec![2]);
    }

    #[test]
    fn ladder_layers() {
        let l = lad(3).unwrap();
        let got = layers(l.graph.graph(), &[0]).unwrap();
        assert_eq!(got, vec![vec![0], vec![1, 2], vec![3, 4], vec![5]]);
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(layers(l.graph.graph(), &all).unwrap(), vec![all]);
        assert!(layers(l.graph.graph(), &[]).is_err());
        let f = fan(7).unwrap();
        assert_eq!(layers(f.graph.graph(), &[2]).unwrap().len(), 2);
    }

    #[test]
    fn eta_is_three() {
        let k3 = MopGraph::from_canonical(&CanonicalMop::triangle()).unwrap();
        assert_eq!(eta(&k3).unwrap(), 3);
        assert_eq!(eta(&fan(7).unwrap().graph).unwrap(), 3);
    }

    #[test]
    fn farley_small_cases() {
        let k3 = MopGraph::from_canonical(&CanonicalMop::triangle()).unwrap();
        assert_eq!(farley_eccentricities(&k3).unwrap(), vec![1, 1, 1]);
        let l5 = lad(5).unwrap().graph;
        let bfs_ecc = ecc_diam_rad_center(l5.graph()).unwrap().ecc;
        assert_eq!(farley_eccentricities(&l5).unwrap(), bfs_ecc);
    }

    #[test]
    fn combine_base_cases() {
        // Triangle side of an edge whose other two edges are outer.
        assert_eq!(combine(-1, -1), 1);
        // Far side strictly deeper through t.
        assert_eq!(combine(1, 2), -3);
        assert_eq!(combine(3, -2), 3);
    }
}
