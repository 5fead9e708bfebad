//! Named MOP families with certified colourings, and seeded random MOPs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::EdgeColoring;
use crate::mop::{CanonicalMop, MopGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Fan,
    Lad,
    LadPlus,
    Random,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Fan => "fan",
            Family::Lad => "lad",
            Family::LadPlus => "lad_plus",
            Family::Random => "random",
        }
    }
}

#[derive(Debug, Clone)]
pub struct GeneratedInstance {
    pub canonical: CanonicalMop,
    pub graph: MopGraph,
    pub coloring: Option<EdgeColoring>,
    pub claimed_rc: Option<usize>,
    pub claimed_src: Option<usize>,
    pub family: Family,
}

/// Known rainbow connection number of the fan `P_n + K_1`.
pub fn fan_rc(n: usize) -> usize {
    match n {
        0..=2 => 1,
        3..=6 => 2,
        _ => 3,
    }
}

/// The fan on a path of `n` vertices.
///
/// Labels (1-based): `v1 = 1`, `v2 = 2`, centre `= 3`, and `v_j = j + 1`
/// for `j >= 3`, so the Hamiltonian cycle reads `v1 v2 ... vn centre`.
pub fn fan(n: usize) -> Result<GeneratedInstance> {
    if n < 2 {
        return Err(Error::Domain(format!("fan needs n >= 2, got {n}")));
    }
    let center = 2;
    let path_vertex = |j: usize| if j <= 2 { j - 1 } else { j };
    let mut attach = vec![(0, 1)];
    for j in 3..=n {
        let prev = path_vertex(j - 1);
        attach.push((prev.min(center), prev.max(center)));
    }
    let canonical = CanonicalMop::new(n + 1, attach)?;
    let graph = MopGraph::from_canonical(&canonical)?;
    let g = graph.graph();
    let mut colors = vec![0u32; g.m()];
    let mut set = |a: usize, b: usize, c: u32| {
        colors[g.edge_id(a, b).expect("fan edge").0] = c;
    };
    let rc = fan_rc(n);
    let half = n.div_ceil(2);
    for j in 1..=n {
        let spoke = match rc {
            1 => 1,
            2 => {
                if j <= half {
                    1
                } else {
                    2
                }
            }
            _ => {
                if j % 2 == 1 {
                    1
                } else {
                    2
                }
            }
        };
        set(center, path_vertex(j), spoke);
        if j < n {
            let path = match rc {
                1 => 1,
                2 => {
                    if j % 2 == 1 {
                        1
                    } else {
                        2
                    }
                }
                _ => 3,
            };
            set(path_vertex(j), path_vertex(j + 1), path);
        }
    }
    Ok(GeneratedInstance {
        canonical,
        graph,
        coloring: Some(EdgeColoring::new(colors)?),
        claimed_rc: Some(rc),
        claimed_src: None,
        family: Family::Fan,
    })
}

/// Level of ladder vertex `v` (0-based) from vertex 0: vertex `j` (1-based)
/// sits at distance `floor(j / 2)`.
fn ladder_level(v: usize) -> usize {
    v.div_ceil(2)
}

fn ladder(n: usize, d: usize, family: Family) -> Result<GeneratedInstance> {
    // Vertex j >= 4 (1-based) is joined to j - 2 and j - 1.
    let mut attach = vec![(0, 1)];
    for v in 3..n {
        attach.push((v - 2, v - 1));
    }
    let canonical = CanonicalMop::new(n, attach)?;
    let graph = MopGraph::from_canonical(&canonical)?;
    let g = graph.graph();
    let mut colors = vec![0u32; g.m()];
    for (i, &(_, v)) in g.edges().iter().enumerate() {
        // Each edge was introduced together with its larger endpoint.
        colors[i] = if v <= 2 { 1 } else { ladder_level(v) as u32 };
    }
    Ok(GeneratedInstance {
        canonical,
        graph,
        coloring: Some(EdgeColoring::new(colors)?),
        claimed_rc: Some(d),
        claimed_src: Some(d),
        family,
    })
}

/// The minimum MOP of diameter `d`: the triangulated strip on `2d`
/// vertices, with the `d`-colouring that gives both edges introduced with a
/// vertex the colour of that vertex's distance from vertex 1.
pub fn lad(d: usize) -> Result<GeneratedInstance> {
    if d < 2 {
        return Err(Error::Domain(format!("lad needs d >= 2, got {d}")));
    }
    ladder(2 * d, d, Family::Lad)
}

/// [`lad`] with one more vertex on the far end; diameter is still `d`.
pub fn lad_plus(d: usize) -> Result<GeneratedInstance> {
    if d < 2 {
        return Err(Error::Domain(format!("lad_plus needs d >= 2, got {d}")));
    }
    ladder(2 * d + 1, d, Family::LadPlus)
}

/// A random MOP on `n` vertices: start from a triangle and join each new
/// vertex to an exterior edge chosen uniformly at random.
///
/// Randomness comes from ChaCha8 seeded with `seed` via
/// `SeedableRng::seed_from_u64`, so `(n, seed)` fixes the output on every
/// platform.
pub fn random_mop(n: usize, seed: u64) -> Result<CanonicalMop> {
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut boundary = vec![0usize, 1, 2];
    let mut attach = vec![(0, 1)];
    for v in 3..n {
        let k = rng.gen_range(0..boundary.len());
        let a = boundary[k];
        let b = boundary[(k + 1) % boundary.len()];
        boundary.insert(k + 1, v);
        attach.push((a.min(b), a.max(b)));
    }
    CanonicalMop::new(n, attach)
}

/// [`random_mop`] wrapped as a [`GeneratedInstance`] with no colouring.
pub fn random_instance(n: usize, seed: u64) -> Result<GeneratedInstance> {
    let canonical = random_mop(n, seed)?;
    let graph = MopGraph::from_canonical(&canonical)?;
    Ok(GeneratedInstance {
        canonical,
        graph,
        coloring: None,
        claimed_rc: None,
        claimed_src: None,
        family: Family::Random,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fan_claims() {
        assert!(fan(1).is_err());
        assert_eq!(fan(2).unwrap().claimed_rc, Some(1));
        assert_eq!(fan(6).unwrap().claimed_rc, Some(2));
        assert_eq!(fan(7).unwrap().claimed_rc, Some(3));
        for n in 2..12 {
            let f = fan(n).unwrap();
            assert_eq!(f.graph.n(), n + 1);
            let c = f.coloring.unwrap();
            assert_eq!(c.palette_size() as usize, fan_rc(n));
        }
    }

    #[test]
    fn fan_cycle_ends_at_center() {
        let f = fan(4).unwrap();
        assert_eq!(f.graph.ham_cycle(), &[0, 1, 3, 4, 2]);
        assert_eq!(f.graph.hamiltonian_degree_sequence(), vec![2, 3, 3, 2, 4]);
    }

    #[test]
    fn fan3_is_the_four_vertex_mmop() {
        assert_eq!(fan(3).unwrap().canonical, lad(2).unwrap().canonical);
    }

    #[test]
    fn ladder_sizes_and_palette() {
        assert!(lad(1).is_err());
        for d in 2..10 {
            let l = lad(d).unwrap();
            assert_eq!(l.graph.n(), 2 * d);
            assert_eq!(l.coloring.as_ref().unwrap().palette_size() as usize, d);
            let p = lad_plus(d).unwrap();
            assert_eq!(p.graph.n(), 2 * d + 1);
            assert_eq!(p.coloring.as_ref().unwrap().palette_size() as usize, d);
        }
    }

    #[test]
    fn random_is_reproducible() {
        assert_eq!(random_mop(3, 99).unwrap(), CanonicalMop::triangle());
        assert_eq!(random_mop(50, 7).unwrap(), random_mop(50, 7).unwrap());
        assert_ne!(random_mop(50, 7).unwrap(), random_mop(50, 8).unwrap());
        let g = MopGraph::from_canonical(&random_mop(10, 42).unwrap()).unwrap();
        assert_eq!(g.m(), 17);
    }
}
