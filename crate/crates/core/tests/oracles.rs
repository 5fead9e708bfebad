use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mop_rainbow::coloring::rainbow_color;
use mop_rainbow::generators::{fan, lad, lad_plus, random_instance};
use mop_rainbow::metrics::bfs;
use mop_rainbow::verify::{
    brute_force_rainbow_path, check, exact_rc, exact_src, is_rainbow_connected,
    is_strong_rainbow_connected, ExactOptions, Limits, LowerBound,
};
use mop_rainbow::{EdgeColoring, Error, Graph};

fn random_coloring(g: &Graph, k: u32, rng: &mut ChaCha8Rng) -> EdgeColoring {
    EdgeColoring::new((0..g.m()).map(|_| rng.gen_range(1..=k)).collect()).unwrap()
}

/// Pairs with no rainbow path according to plain path enumeration.
fn brute_failures(g: &Graph, c: &EdgeColoring) -> Vec<(usize, usize)> {
    let n = g.n();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| brute_force_rainbow_path(g, c, u, v).is_none())
        .collect()
}

#[test]
fn state_search_agrees_with_path_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut disagreements = 0;
    let (mut yes, mut no) = (0, 0);
    for i in 0..300u64 {
        let n = 5 + (i as usize % 8);
        let g = random_instance(n, i).unwrap().graph;
        let k = 2 + (i % 4) as u32;
        let c = random_coloring(g.graph(), k, &mut rng);
        let fails = brute_failures(g.graph(), &c);
        let r = is_rainbow_connected(g.graph(), &c).unwrap();
        if r.ok != fails.is_empty() || r.counterexample != fails.first().copied() {
            disagreements += 1;
        }
        if r.ok {
            yes += 1
        } else {
            no += 1
        }
    }
    assert_eq!(disagreements, 0);
    assert!(yes > 10 && no > 10, "both outcomes exercised: {yes} / {no}");
}

#[test]
fn strong_check_agrees_with_geodesic_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for i in 0..150u64 {
        let n = 5 + (i as usize % 6);
        let g = random_instance(n, 500 + i).unwrap().graph;
        let h = g.graph();
        let c = random_coloring(h, 3 + (i % 3) as u32, &mut rng);
        // A rainbow geodesic exists iff some shortest path is rainbow; list
        // them by walking down the BFS distance.
        let mut expected = true;
        for u in 0..n {
            let d = bfs(h, u).dist;
            for v in u + 1..n {
                let mut found = false;
                let mut stack = vec![(vec![u], Vec::<u32>::new())];
                while let Some((p, used)) = stack.pop() {
                    let x = *p.last().unwrap();
                    if x == v {
                        found = true;
                        break;
                    }
                    for &y in h.neighbors(x) {
                        let col = c.color(h.edge_id(x, y).unwrap());
                        if d[y] == d[x] + 1 && d[y] <= d[v] && !used.contains(&col) {
                            let mut q = p.clone();
                            q.push(y);
                            let mut u2 = used.clone();
                            u2.push(col);
                            stack.push((q, u2));
                        }
                    }
                }
                expected &= found;
            }
        }
        assert_eq!(
            is_strong_rainbow_connected(h, &c).unwrap().ok,
            expected,
            "instance {i}"
        );
    }
}

#[test]
fn generated_certificates() {
    for n in 2..=10 {
        let f = fan(n).unwrap();
        assert!(
            is_rainbow_connected(f.graph.graph(), f.coloring.as_ref().unwrap())
                .unwrap()
                .ok,
            "fan({n})"
        );
    }
    for d in 2..=6 {
        for inst in [lad(d).unwrap(), lad_plus(d).unwrap()] {
            let r =
                is_strong_rainbow_connected(inst.graph.graph(), inst.coloring.as_ref().unwrap())
                    .unwrap();
            assert!(r.ok);
        }
    }
}

#[test]
fn fan7_with_matching_end_spokes_is_not_strong() {
    // The generator's colouring already gives both end spokes colour 1 and
    // every path edge colour 3.
    let f = fan(7).unwrap();
    let g = f.graph.graph();
    let c = f.coloring.unwrap();
    assert_eq!(c.color(g.edge_id(2, 0).unwrap()), 1);
    assert_eq!(c.color(g.edge_id(2, 7).unwrap()), 1);
    assert_eq!(bfs(g, 0).dist[7], 2);
    assert_eq!(g.common_neighbors(0, 7), vec![2]);
    let r = is_strong_rainbow_connected(g, &c).unwrap();
    assert!(!r.ok);
    // v1 and v3 fail first: both of their geodesics repeat a colour.
    assert_eq!(r.counterexample, Some((0, 3)));
    assert!(is_rainbow_connected(g, &c).unwrap().ok);
}

#[test]
fn exact_values_small() {
    let opts = ExactOptions::default();
    let c5 = exact_rc(&Graph::cycle(5).unwrap(), opts).unwrap();
    assert_eq!(c5.value, 3);
    assert_eq!(c5.lower_bound, LowerBound::Exhaustive);
    assert!(
        is_rainbow_connected(&Graph::cycle(5).unwrap(), &c5.certificate)
            .unwrap()
            .ok
    );

    let f7 = exact_rc(fan(7).unwrap().graph.graph(), opts).unwrap();
    assert_eq!((f7.value, f7.lower_bound), (3, LowerBound::Exhaustive));

    for d in 2..=4 {
        let g = lad(d).unwrap().graph;
        let r = exact_src(g.graph(), opts).unwrap();
        assert_eq!((r.value, r.lower_bound), (d, LowerBound::Diameter));
        assert!(
            is_strong_rainbow_connected(g.graph(), &r.certificate)
                .unwrap()
                .ok
        );
    }
}

#[test]
fn exact_search_limits() {
    let big = lad(8).unwrap().graph;
    assert!(matches!(
        exact_rc(big.graph(), ExactOptions::default()),
        Err(Error::ScaleLimit { what: "edges", .. })
    ));
    let tight = ExactOptions {
        k_max: 2,
        ..ExactOptions::default()
    };
    assert!(matches!(
        exact_rc(&Graph::cycle(6).unwrap(), tight),
        Err(Error::Exhausted { k_max: 2 })
    ));
    let hurry = ExactOptions {
        timeout: Some(std::time::Duration::ZERO),
        ..ExactOptions::default()
    };
    assert!(matches!(
        exact_rc(&Graph::cycle(6).unwrap(), hurry),
        Err(Error::Timeout { k: 3 })
    ));
}

#[test]
fn verification_limits() {
    let g = random_instance(30, 1).unwrap().graph;
    let (c, _, _) = rainbow_color(&g).unwrap();
    let small = Limits {
        max_n: 20,
        max_colors: 32,
    };
    assert!(matches!(
        check(g.graph(), &c, small, false, false),
        Err(Error::ScaleLimit { what: "n", .. })
    ));
    let few = Limits {
        max_n: 200,
        max_colors: 2,
    };
    assert!(matches!(
        check(g.graph(), &c, few, false, false),
        Err(Error::ScaleLimit { what: "colors", .. })
    ));
}
