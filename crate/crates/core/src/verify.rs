//! Brute-force oracles for rainbow connectivity.
//!
//! Checking whether a given colouring is rainbow connected is NP-complete
//! even on maximal outerplanar graphs, so everything here is exponential in
//! the worst case and guarded by explicit scale caps. Nothing here is
//! heuristic: every `ok` is backed by a path and every failure by an
//! exhausted search.

use std::collections::VecDeque;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{EdgeColoring, EdgeId, Graph};
use crate::metrics::{all_distances, bfs, ecc_diam_rad_center};

/// Scale caps for the state-space searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
    /// Distinct colours; at most 64 (colour sets are `u64` masks).
    pub max_colors: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 200,
            max_colors: 32,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub ok: bool,
    /// For a failed check, the lexicographically first pair `(u, v)`,
    /// `u < v`, with no rainbow (or rainbow geodesic) path.
    pub counterexample: Option<(usize, usize)>,
    /// On request and when `ok`: one rainbow path per pair `u < v`, in
    /// lexicographic pair order.
    pub witnesses: Option<Vec<Vec<usize>>>,
}

/// Rainbow connectivity with default limits and no witnesses.
pub fn is_rainbow_connected(g: &Graph, c: &EdgeColoring) -> Result<VerifyReport> {
    check(g, c, Limits::default(), false, false)
}

/// Strong rainbow connectivity (every pair joined by a rainbow geodesic).
pub fn is_strong_rainbow_connected(g: &Graph, c: &EdgeColoring) -> Result<VerifyReport> {
    check(g, c, Limits::default(), true, false)
}

/// Full-control entry point.
pub fn check(
    g: &Graph,
    c: &EdgeColoring,
    limits: Limits,
    strong: bool,
    want_witness: bool,
) -> Result<VerifyReport> {
    c.check_total(g)?;
    let n = g.n();
    if n > limits.max_n {
        return Err(Error::ScaleLimit {
            what: "n",
            value: n,
            cap: limits.max_n,
        });
    }
    let palette = c.distinct_colors();
    let cap = limits.max_colors.min(64);
    if palette.len() > cap {
        return Err(Error::ScaleLimit {
            what: "colors",
            value: palette.len(),
            cap,
        });
    }
    let bits: Vec<u64> = c
        .as_slice()
        .iter()
        .map(|col| 1u64 << palette.binary_search(col).expect("palette colour"))
        .collect();
    let search = Search {
        g,
        bits: &bits,
        strong,
    };
    let per_source: Vec<SourceResult> = (0..n)
        .into_par_iter()
        .map(|s| search.search_from(s, want_witness))
        .collect();
    let counterexample = per_source
        .iter()
        .enumerate()
        .find_map(|(s, r)| r.missing.map(|t| (s, t)));
    let ok = counterexample.is_none();
    let witnesses = (ok && want_witness).then(|| {
        per_source
            .into_iter()
            .flat_map(|r| r.paths.into_iter().map(|p| p.expect("reached")))
            .collect()
    });
    Ok(VerifyReport {
        ok,
        counterexample,
        witnesses,
    })
}

struct SourceResult {
    /// Smallest target `t > s` never reached.
    missing: Option<usize>,
    /// Paths to `s + 1 .. n` when witnesses were requested.
    paths: Vec<Option<Vec<usize>>>,
}

struct Search<'a> {
    g: &'a Graph,
    bits: &'a [u64],
    strong: bool,
}

struct State {
    v: usize,
    mask: u64,
    parent: usize,
}

impl Search<'_> {
    /// Breadth-first search over (vertex, used colours) states from `s`.
    /// A state is dropped when the same vertex was already reached with a
    /// subset of its colours: anything it could extend to, the smaller set
    /// extends to as well.
    fn search_from(&self, s: usize, want_witness: bool) -> SourceResult {
        let g = self.g;
        let n = g.n();
        let dist = if self.strong {
            Some(bfs(g, s).dist)
        } else {
            None
        };
        let mut seen: Vec<Vec<u64>> = vec![Vec::new(); n];
        let mut first_hit: Vec<Option<usize>> = vec![None; n];
        let mut arena = vec![State {
            v: s,
            mask: 0,
            parent: usize::MAX,
        }];
        seen[s].push(0);
        first_hit[s] = Some(0);
        let mut remaining = n - 1 - s;
        let mut queue = VecDeque::from([0usize]);
        while let Some(idx) = queue.pop_front() {
            if remaining == 0 {
                break;
            }
            let (v, mask) = (arena[idx].v, arena[idx].mask);
            for &w in g.neighbors(v) {
                if let Some(d) = &dist {
                    if d[w] != d[v] + 1 {
                        continue;
                    }
                }
                let bit = self.bits[g.edge_id(v, w).expect("adjacent").0];
                if mask & bit != 0 {
                    continue;
                }
                let next = mask | bit;
                let list = &mut seen[w];
                if list.iter().any(|&old| old & !next == 0) {
                    continue;
                }
                list.retain(|&m| m & next != next);
                list.push(next);
                arena.push(State {
                    v: w,
                    mask: next,
                    parent: idx,
                });
                let id = arena.len() - 1;
                if first_hit[w].is_none() {
                    first_hit[w] = Some(id);
                    if w > s {
                        remaining -= 1;
                    }
                }
                queue.push_back(id);
            }
        }
        let missing = (s + 1..n).find(|&t| first_hit[t].is_none());
        let paths = if want_witness && missing.is_none() {
            (s + 1..n)
                .map(|t| {
                    let mut walk = Vec::new();
                    let mut cur = first_hit[t].expect("reached");
                    while cur != usize::MAX {
                        walk.push(arena[cur].v);
                        cur = arena[cur].parent;
                    }
                    walk.reverse();
                    Some(walk_to_path(walk))
                })
                .collect()
        } else {
            Vec::new()
        };
        SourceResult { missing, paths }
    }
}

/// Removes closed sub-walks so every vertex occurs once. The result uses a
/// subset of the walk's edges, so a rainbow walk becomes a rainbow path.
fn walk_to_path(walk: Vec<usize>) -> Vec<usize> {
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

/// Whether `path` is a simple path of `g` whose edges have distinct colours.
pub fn is_rainbow_path(g: &Graph, c: &EdgeColoring, path: &[usize]) -> bool {
    let mut seen_v = std::collections::HashSet::new();
    if !path.iter().all(|&v| v < g.n() && seen_v.insert(v)) {
        return false;
    }
    let mut seen_c = std::collections::HashSet::new();
    path.windows(2).all(|w| match g.edge_id(w[0], w[1]) {
        Some(e) => seen_c.insert(c.color(e)),
        None => false,
    })
}

/// Independent check by enumerating every simple `u`-`v` path. Returns the
/// first rainbow one found. Only sensible on small graphs.
pub fn brute_force_rainbow_path(
    g: &Graph,
    c: &EdgeColoring,
    u: usize,
    v: usize,
) -> Option<Vec<usize>> {
    fn dfs(
        g: &Graph,
        c: &EdgeColoring,
        target: usize,
        path: &mut Vec<usize>,
        used: &mut Vec<u32>,
    ) -> bool {
        let cur = *path.last().expect("non-empty");
        if cur == target {
            return true;
        }
        for &w in g.neighbors(cur) {
            if path.contains(&w) {
                continue;
            }
            let col = c.color(g.edge_id(cur, w).expect("adjacent"));
            if used.contains(&col) {
                continue;
            }
            path.push(w);
            used.push(col);
            if dfs(g, c, target, path, used) {
                return true;
            }
            path.pop();
            used.pop();
        }
        false
    }
    let mut path = vec![u];
    let mut used = Vec::new();
    dfs(g, c, v, &mut path, &mut used).then_some(path)
}

/// Why an exact search may start above its first candidate value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerBound {
    /// The value equals the diameter, which every rainbow colouring needs.
    Diameter,
    /// Every colouring with one colour fewer was ruled out by search.
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub value: usize,
    /// Lexicographically first colouring (in canonical colour order) with
    /// `value` colours that passes the check.
    pub certificate: EdgeColoring,
    pub lower_bound: LowerBound,
}

#[derive(Debug, Clone, Copy)]
pub struct ExactOptions {
    pub k_max: usize,
    pub max_edges: usize,
    pub timeout: Option<Duration>,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            k_max: 64,
            max_edges: 22,
            timeout: None,
        }
    }
}

/// Rainbow connection number by exhaustive search.
pub fn exact_rc(g: &Graph, opts: ExactOptions) -> Result<ExactResult> {
    exact(g, opts, false)
}

/// Strong rainbow connection number by exhaustive search.
pub fn exact_src(g: &Graph, opts: ExactOptions) -> Result<ExactResult> {
    exact(g, opts, true)
}

fn exact(g: &Graph, opts: ExactOptions, strong: bool) -> Result<ExactResult> {
    let m = g.m();
    if m > opts.max_edges {
        return Err(Error::ScaleLimit {
            what: "edges",
            value: m,
            cap: opts.max_edges,
        });
    }
    if m == 0 {
        return Err(Error::Domain("exact search needs at least one edge".into()));
    }
    let diam = ecc_diam_rad_center(g)?.diam.max(1);
    let deadline = opts.timeout.map(|t| Instant::now() + t);
    let dist = all_distances(g);
    let order = edge_order(g);
    let top = opts.k_max.min(m).min(64);
    for k in diam..=top {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(Error::Timeout { k });
        }
        let mut search = Exact {
            g,
            k,
            strong,
            dist: &dist,
            order: &order,
            colors: vec![0; m],
            deadline,
            ticks: 0,
        };
        match search.run(0, 0) {
            Ok(true) => {
                return Ok(ExactResult {
                    value: k,
                    certificate: EdgeColoring::new(
                        search.colors.iter().map(|&c| c as u32).collect(),
                    )?,
                    lower_bound: if k == diam {
                        LowerBound::Diameter
                    } else {
                        LowerBound::Exhaustive
                    },
                })
            }
            Ok(false) => continue,
            Err(()) => return Err(Error::Timeout { k }),
        }
    }
    Err(Error::Exhausted { k_max: top })
}

/// Edges in the order BFS from vertex 0 first touches them, so pairs near
/// the start become fully coloured early and pruning bites sooner.
fn edge_order(g: &Graph) -> Vec<usize> {
    let d = bfs(g, 0);
    let mut order: Vec<usize> = (0..g.m()).collect();
    order.sort_by_key(|&i| {
        let (u, v) = g.edges()[i];
        let (a, b) = (d.dist[u].min(d.dist[v]), d.dist[u].max(d.dist[v]));
        (a, b, u.min(v), u.max(v))
    });
    order
}

struct Exact<'a> {
    g: &'a Graph,
    k: usize,
    strong: bool,
    dist: &'a [Vec<usize>],
    order: &'a [usize],
    /// 0 = uncoloured.
    colors: Vec<u8>,
    deadline: Option<Instant>,
    ticks: u64,
}

impl Exact<'_> {
    /// Depth-first over canonical colourings: a new colour may only be the
    /// smallest one not yet used.
    fn run(&mut self, depth: usize, used: usize) -> std::result::Result<bool, ()> {
        self.ticks += 1;
        if self.ticks.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    return Err(());
                }
            }
        }
        if !self.feasible() {
            return Ok(false);
        }
        if depth == self.order.len() {
            return Ok(true);
        }
        let e = self.order[depth];
        let limit = self.k.min(used + 1);
        for col in 1..=limit {
            self.colors[e] = col as u8;
            if self.run(depth + 1, used.max(col))? {
                return Ok(true);
            }
        }
        self.colors[e] = 0;
        Ok(false)
    }

    /// Whether every pair still has a path that could become rainbow: its
    /// coloured edges are already distinct and its length is at most `k`
    /// (uncoloured edges can take fresh colours). With no uncoloured edges
    /// left this is exactly the rainbow check.
    fn feasible(&self) -> bool {
        let n = self.g.n();
        (0..n).all(|s| self.feasible_from(s))
    }

    fn feasible_from(&self, s: usize) -> bool {
        let g = self.g;
        let n = g.n();
        let k = self.k as u32;
        // (mask of fixed colours, number of uncoloured edges)
        let mut seen: Vec<Vec<(u64, u32)>> = vec![Vec::new(); n];
        let mut reached = vec![false; n];
        reached[s] = true;
        let mut remaining = n - 1 - s;
        if remaining == 0 {
            return true;
        }
        seen[s].push((0, 0));
        let mut queue = VecDeque::from([(s, 0u64, 0u32)]);
        while let Some((v, mask, wild)) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if self.strong && self.dist[s][w] != self.dist[s][v] + 1 {
                    continue;
                }
                let e = g.edge_id(v, w).expect("adjacent");
                let col = self.colors[e.0];
                let (next_mask, next_wild) = if col == 0 {
                    (mask, wild + 1)
                } else {
                    let bit = 1u64 << (col - 1);
                    if mask & bit != 0 {
                        continue;
                    }
                    (mask | bit, wild)
                };
                if next_mask.count_ones() + next_wild > k {
                    continue;
                }
                let list = &mut seen[w];
                if list
                    .iter()
                    .any(|&(m, x)| m & next_mask == m && x <= next_wild)
                {
                    continue;
                }
                list.retain(|&(m, x)| !(m & next_mask == next_mask && x >= next_wild));
                list.push((next_mask, next_wild));
                if !reached[w] {
                    reached[w] = true;
                    if w > s {
                        remaining -= 1;
                        if remaining == 0 {
                            return true;
                        }
                    }
                }
                queue.push_back((w, next_mask, next_wild));
            }
        }
        false
    }
}

/// Whether two disjoint edge cuts that some vertex pair must both cross
/// carry at least two colours between them.
///
/// Fails with [`Error::NotACut`] when the sets overlap or either one leaves
/// the graph connected.
pub fn disjoint_cut_property(
    g: &Graph,
    c: &EdgeColoring,
    s1: &[EdgeId],
    s2: &[EdgeId],
) -> Result<bool> {
    c.check_total(g)?;
    if s1.iter().any(|e| s2.contains(e)) {
        return Err(Error::NotACut("the two edge sets are not disjoint"));
    }
    let comp1 = g.components_without(&[], s1);
    let comp2 = g.components_without(&[], s2);
    if comp1.iter().all(|&x| x == 0) || comp2.iter().all(|&x| x == 0) {
        return Err(Error::NotACut(
            "removing the edge set leaves the graph connected",
        ));
    }
    let n = g.n();
    let crosses_both =
        (0..n).any(|u| (u + 1..n).any(|w| comp1[u] != comp1[w] && comp2[u] != comp2[w]));
    if !crosses_both {
        return Ok(true);
    }
    let colors: std::collections::BTreeSet<u32> =
        s1.iter().chain(s2).map(|&e| c.color(e)).collect();
    Ok(colors.len() >= 2)
}

/// All minimal edge cuts with at most `max_size` edges, as sorted edge-id
/// lists in lexicographic order.
pub fn small_cut_enumeration(g: &Graph, max_size: usize) -> Result<Vec<Vec<EdgeId>>> {
    const MAX_N: usize = 60;
    if g.n() > MAX_N {
        return Err(Error::ScaleLimit {
            what: "n",
            value: g.n(),
            cap: MAX_N,
        });
    }
    if max_size > 3 {
        return Err(Error::Domain(format!("cut size {max_size} > 3")));
    }
    let m = g.m();
    let disconnects = |set: &[EdgeId]| g.components_without(&[], set).iter().any(|&x| x != 0);
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        start: usize,
        m: usize,
        left: usize,
        current: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
        disconnects: &dyn Fn(&[EdgeId]) -> bool,
    ) {
        if !current.is_empty() && disconnects(current) {
            let minimal = (0..current.len()).all(|skip| {
                let rest: Vec<EdgeId> = current
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &e)| e)
                    .collect();
                !disconnects(&rest)
            });
            if minimal {
                out.push(current.clone());
            }
            // Supersets of a cut are never minimal.
            return;
        }
        if left == 0 {
            return;
        }
        for e in start..m {
            current.push(EdgeId(e));
            rec(e + 1, m, left - 1, current, out, disconnects);
            current.pop();
        }
    }
    rec(0, m, max_size, &mut current, &mut out, &disconnects);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(g: &Graph) -> EdgeColoring {
        EdgeColoring::new(vec![1; g.m()]).unwrap()
    }

    #[test]
    fn triangle_one_colour() {
        let g = Graph::complete(3).unwrap();
        assert!(is_rainbow_connected(&g, &mono(&g)).unwrap().ok);
        assert!(is_strong_rainbow_connected(&g, &mono(&g)).unwrap().ok);
    }

    #[test]
    fn path_needs_two_colours() {
        let g = Graph::path(3).unwrap();
        let r = is_rainbow_connected(&g, &mono(&g)).unwrap();
        assert!(!r.ok);
        assert_eq!(r.counterexample, Some((0, 2)));
        assert!(brute_force_rainbow_path(&g, &mono(&g), 0, 2).is_none());
    }

    #[test]
    fn witnesses_revalidate() {
        let g = Graph::cycle(6).unwrap();
        let mut colors = vec![0; 6];
        for i in 0..6 {
            colors[g.edge_id(i, (i + 1) % 6).unwrap().0] = (i % 3) as u32 + 1;
        }
        let c = EdgeColoring::new(colors).unwrap();
        let r = check(&g, &c, Limits::default(), false, true).unwrap();
        assert!(r.ok);
        let w = r.witnesses.unwrap();
        assert_eq!(w.len(), 15);
        for p in &w {
            assert!(is_rainbow_path(&g, &c, p));
        }
    }

    #[test]
    fn scale_limit() {
        let g = Graph::path(5).unwrap();
        let c = EdgeColoring::new(vec![1, 2, 3, 4]).unwrap();
        let lim = Limits {
            max_n: 200,
            max_colors: 3,
        };
        assert!(matches!(
            check(&g, &c, lim, false, false),
            Err(Error::ScaleLimit { .. })
        ));
        let lim = Limits {
            max_n: 4,
            max_colors: 32,
        };
        assert!(matches!(
            check(&g, &c, lim, false, false),
            Err(Error::ScaleLimit { .. })
        ));
    }

    #[test]
    fn exact_on_cycles_and_paths() {
        let opts = ExactOptions::default();
        assert_eq!(exact_rc(&Graph::cycle(4).unwrap(), opts).unwrap().value, 2);
        assert_eq!(exact_rc(&Graph::cycle(5).unwrap(), opts).unwrap().value, 3);
        assert_eq!(exact_rc(&Graph::path(4).unwrap(), opts).unwrap().value, 3);
        assert_eq!(
            exact_rc(&Graph::complete(3).unwrap(), opts).unwrap().value,
            1
        );
    }

    #[test]
    fn exhausted_and_scale() {
        let opts = ExactOptions {
            k_max: 2,
            ..ExactOptions::default()
        };
        assert_eq!(
            exact_rc(&Graph::path(4).unwrap(), opts),
            Err(Error::Exhausted { k_max: 2 })
        );
        let opts = ExactOptions {
            max_edges: 3,
            ..ExactOptions::default()
        };
        assert!(matches!(
            exact_rc(&Graph::cycle(5).unwrap(), opts),
            Err(Error::ScaleLimit { .. })
        ));
    }

    #[test]
    fn triangle_cuts() {
        let g = Graph::complete(3).unwrap();
        assert!(small_cut_enumeration(&g, 1).unwrap().is_empty());
        assert_eq!(small_cut_enumeration(&g, 2).unwrap().len(), 3);
        let t = Graph::path(4).unwrap();
        assert_eq!(small_cut_enumeration(&t, 1).unwrap().len(), 3);
    }

    #[test]
    fn cut_preconditions() {
        let g = Graph::cycle(4).unwrap();
        let c = mono(&g);
        let s = [EdgeId(0), EdgeId(1)];
        assert!(matches!(
            disjoint_cut_property(&g, &c, &s, &s),
            Err(Error::NotACut(_))
        ));
        assert!(matches!(
            disjoint_cut_property(&g, &c, &[EdgeId(0)], &[EdgeId(1)]),
            Err(Error::NotACut(_))
        ));
    }
}
