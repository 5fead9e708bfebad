use mop_rainbow::coloring::rainbow_color;
use mop_rainbow::generators::{fan, lad, lad_plus, random_instance, Family};
use mop_rainbow::metrics::{all_distances, ecc_diam_rad_center};
use mop_rainbow::spine::{build_ccs, maximal_fans, CcsNode};

fn pairs_at(dist: &[Vec<usize>], d: usize) -> usize {
    let n = dist.len();
    (0..n)
        .map(|u| (u + 1..n).filter(|&v| dist[u][v] == d).count())
        .sum()
}

#[test]
fn ladder_extremal_pairs() {
    for d in 2..=8 {
        let l = lad(d).unwrap();
        assert_eq!(l.family, Family::Lad);
        let dist = all_distances(l.graph.graph());
        assert_eq!(pairs_at(&dist, d), 1, "lad({d})");
        assert_eq!(dist[0][2 * d - 1], d);

        // The extra vertex adds two more pairs at the diameter.
        let p = lad_plus(d).unwrap();
        assert_eq!(
            pairs_at(&all_distances(p.graph.graph()), d),
            3,
            "lad_plus({d})"
        );
    }
}

#[test]
fn ladder_is_a_minimum_order_mop() {
    // Any MOP of diameter d has at least 2d vertices; check small orders.
    for n in 4..=12 {
        let min_diam_bound = n / 2;
        for seed in 0..200 {
            let g = random_instance(n, seed).unwrap().graph;
            assert!(ecc_diam_rad_center(g.graph()).unwrap().diam <= min_diam_bound);
        }
    }
}

#[test]
fn root_fan_and_outer_fans() {
    for seed in 0..40 {
        let g = random_instance(35, seed).unwrap().graph;
        let (c, _, tree) = rainbow_color(&g).unwrap();
        if tree.is_degenerate() {
            continue;
        }
        let h = g.graph();
        let level = &tree.bfs().dist;
        let r = tree.root_vertex();
        for v in 0..h.n() {
            let spokes: Vec<usize> = g
                .fan_path(v)
                .iter()
                .copied()
                .filter(|&x| level[x] == level[v] + 1)
                .collect();
            for w in spokes.windows(2) {
                if h.has_edge(w[0], w[1]) {
                    let a = c.color(h.edge_id(v, w[0]).unwrap());
                    let b = c.color(h.edge_id(v, w[1]).unwrap());
                    assert_ne!(a, b, "seed {seed}: spokes of {v}");
                }
            }
        }
        for &x in h.neighbors(r) {
            assert!([4, 5].contains(&c.color(h.edge_id(r, x).unwrap())));
        }
        for (e, &(u, w)) in h.edges().iter().enumerate() {
            let col = c.as_slice()[e];
            if level[u].max(level[w]) == tree.rad() {
                assert!((1..=3).contains(&col));
            }
            if level[u] == 1 && level[w] == 1 {
                assert_eq!(col, 6);
            }
        }
    }
}

#[test]
fn spine_nodes_are_one_layer_apart() {
    for seed in 0..60 {
        let g = random_instance(10 + (seed as usize % 50), seed)
            .unwrap()
            .graph;
        let h = g.graph();
        let t = build_ccs(&g).unwrap();
        let level = &t.bfs().dist;
        for i in 1..t.len() {
            let p = t.parent(i).unwrap();
            assert_eq!(t.level(p) + 1, t.level(i));
            let parent_vs = t.realization(p);
            for v in t.realization(i) {
                assert!(parent_vs.iter().any(|&q| h.has_edge(q, v)));
            }
            if let CcsNode::Green(u, w) = t.node(i) {
                assert!(h.has_edge(u, w) && level[u] == level[w]);
                for x in [u, w] {
                    assert!(h.neighbors(x).iter().any(|&y| level[y] == level[x] + 1));
                }
                assert!(!t.far_side(i).is_empty());
            }
        }
    }
}

#[test]
fn fan_family_has_one_maximal_fan() {
    for n in 3..=10 {
        let f = fan(n).unwrap();
        let fans = maximal_fans(&f.graph);
        assert_eq!(fans.len(), 1);
        assert_eq!(fans[0].path.len(), n);
    }
}
