//! Rainbow edge colouring of a MOP with at most `3 * rad(G)` colours.
//!
//! The colouring works outward from the spine root `r` one BFS layer at a
//! time. Every edge of a MOP either joins two vertices of the same layer or
//! joins consecutive layers, so each layer `k >= 1` owns the edges between
//! `N_k` and `N_{k-1}` ("down edges") and the edges inside `N_k`. A layer
//! gets three colours `(a, b, g)`:
//!
//! * down edges are coloured `a`/`b` so that consecutive spokes of a fan
//!   centre differ and a vertex with two down edges sees both colours;
//! * edges inside the layer get `g`.
//!
//! Then every vertex of `N_k` can step down with `a` alone or with `b`
//! alone (two down edges), or with one of them directly and the other after
//! a `g` step to the neighbour on the next spoke of the same centre. Any two
//! vertices of a layer therefore have colour-disjoint steps, and two root
//! walks picked layer by layer join into a rainbow walk.
//!
//! Layer 1 is the root fan and uses 4, 5, 6; the outermost layer uses
//! 1, 2, 3; the layers in between take one colour from each of the blocks
//! `C1`, `C2`, `C3`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::generators::fan_rc;
use crate::graph::{EdgeColoring, EdgeId, PartialColoring};
use crate::mop::MopGraph;
use crate::spine::{build_ccs, CcsTree};

/// Colour blocks for a graph of radius `rad`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorPalette {
    pub rad: usize,
    pub fixed_fan_root: [u32; 3],
    pub fixed_fan_other: [u32; 3],
    pub c1: Vec<u32>,
    pub c2: Vec<u32>,
    pub c3: Vec<u32>,
}

impl ColorPalette {
    pub fn new(rad: usize) -> Self {
        let r = rad as u32;
        let span = |lo: u32, hi: u32| (lo..=hi).collect::<Vec<_>>();
        ColorPalette {
            rad,
            fixed_fan_root: [4, 5, 6],
            fixed_fan_other: [1, 2, 3],
            c1: span(7, r + 4),
            c2: span(r + 5, 2 * r + 2),
            c3: span(2 * r + 3, 3 * r),
        }
    }

    /// Largest colour the palette may hand out.
    pub fn bound(&self) -> u32 {
        3 * self.rad as u32
    }

    /// The `(a, b, g)` triple for BFS layer `k`, `1 <= k <= rad`.
    pub fn layer(&self, k: usize) -> Result<[u32; 3]> {
        if k == 1 {
            return Ok(self.fixed_fan_root);
        }
        if k == self.rad {
            return Ok(self.fixed_fan_other);
        }
        let i = k.checked_sub(2).filter(|_| k < self.rad);
        let pick = |block: &[u32]| -> Result<u32> {
            i.and_then(|i| block.get(i).copied())
                .ok_or(Error::PaletteExhausted {
                    color: 3 * k as u32,
                    bound: self.bound(),
                })
        };
        Ok([pick(&self.c1)?, pick(&self.c2)?, pick(&self.c3)?])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColoringStats {
    pub colors_used: usize,
    pub palette_bound: usize,
    /// `colors_used - (2 * rad + 2)`, or zero.
    pub excess_c: usize,
}

impl ColoringStats {
    fn new(colors_used: usize, rad: usize) -> Self {
        ColoringStats {
            colors_used,
            palette_bound: 3 * rad,
            excess_c: colors_used.saturating_sub(2 * rad + 2),
        }
    }
}

/// Colours `g` and returns the colouring, its statistics and the spine it
/// was built from.
pub fn rainbow_color(g: &MopGraph) -> Result<(EdgeColoring, ColoringStats, CcsTree)> {
    let tree = build_ccs(g)?;
    let rad = tree.rad();
    let coloring = if tree.is_degenerate() {
        fan_only(g, tree.root_vertex())
    } else {
        layered(g, &tree, &ColorPalette::new(rad))?
    };
    let used = coloring.colors_used();
    if used > 3 * rad.max(1) {
        return Err(Error::PaletteExhausted {
            color: coloring.palette_size(),
            bound: 3 * rad.max(1) as u32,
        });
    }
    Ok((coloring, ColoringStats::new(used, rad), tree))
}

/// Radius one: the graph is a fan around `center`; colour it with the
/// fewest colours the fan needs.
fn fan_only(g: &MopGraph, center: usize) -> EdgeColoring {
    let h = g.graph();
    let path = g.fan_path(center);
    let n = path.len();
    let rc = fan_rc(n);
    let mut pc = PartialColoring::new(h.m());
    let half = n.div_ceil(2);
    for (i, &v) in path.iter().enumerate() {
        let j = i + 1;
        let spoke = match rc {
            1 => 1,
            2 => 1 + u32::from(j > half),
            _ => 2 - (j % 2) as u32,
        };
        pc.paint(edge(g, center, v), spoke);
        if let Some(&next) = path.get(i + 1) {
            let side = match rc {
                1 => 1,
                2 => 2 - (j % 2) as u32,
                _ => 3,
            };
            pc.paint(edge(g, v, next), side);
        }
    }
    pc.finish(3)
}

fn edge(g: &MopGraph, a: usize, b: usize) -> EdgeId {
    g.graph().edge_id(a, b).expect("edge of the MOP")
}

fn layered(g: &MopGraph, tree: &CcsTree, palette: &ColorPalette) -> Result<EdgeColoring> {
    let h = g.graph();
    let level = &tree.bfs().dist;
    let mut pc = PartialColoring::new(h.m());

    // Pairs of down edges that must get different colours.
    let mut differ: Vec<Vec<usize>> = vec![Vec::new(); h.m()];
    let mut link = |a: EdgeId, b: EdgeId| {
        differ[a.0].push(b.0);
        differ[b.0].push(a.0);
    };
    for v in 0..h.n() {
        let order = g.fan_path(v);
        for w in order.windows(2) {
            let (x, y) = (w[0], w[1]);
            // Consecutive spokes going up from v.
            if level[x] == level[v] + 1 && level[y] == level[v] + 1 {
                link(edge(g, v, x), edge(g, v, y));
            }
            // Consecutive down edges of v.
            if level[x] + 1 == level[v] && level[y] + 1 == level[v] {
                link(edge(g, v, x), edge(g, v, y));
            }
        }
    }

    let mut side = vec![u8::MAX; h.m()];
    for (e, &(u, w)) in h.edges().iter().enumerate() {
        if level[u] == level[w] || side[e] != u8::MAX {
            continue;
        }
        side[e] = 0;
        let mut queue = VecDeque::from([e]);
        while let Some(a) = queue.pop_front() {
            for &b in &differ[a] {
                if side[b] == u8::MAX {
                    side[b] = 1 - side[a];
                    queue.push_back(b);
                } else if side[b] == side[a] {
                    let (x, y) = h.endpoints(EdgeId(b));
                    return Err(Error::InvalidColoring(format!(
                        "down edges around {{{}, {}}} admit no alternating colouring",
                        x + 1,
                        y + 1
                    )));
                }
            }
        }
    }

    for (e, &(u, w)) in h.edges().iter().enumerate() {
        let k = level[u].max(level[w]);
        let [a, b, gamma] = palette.layer(k)?;
        let color = if level[u] == level[w] {
            gamma
        } else if side[e] == 0 {
            a
        } else {
            b
        };
        pc.paint(EdgeId(e), color);
    }
    Ok(pc.finish(palette.fixed_fan_other[2]))
}
