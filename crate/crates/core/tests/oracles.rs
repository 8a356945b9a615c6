//! Library results against the brute-force oracles in `common`.

mod common;

use proptest::prelude::*;
use subsym::graph::{
    complete, complete_bipartite, cycle, girth, petersen, random_connected, Girth,
};
use subsym::group::{
    automorphism_group, dihedral_group, induced_subdivision_action, pgammal_2_8, symmetric_group,
};
use subsym::symmetry::SymmetryContext;
use subsym::transforms::{subdivide, SubdivisionMetric};
use subsym::{Graph, PermGroup};

fn perms(group: &PermGroup) -> Vec<common::Perm> {
    group
        .generators()
        .iter()
        .map(|p| p.images().to_vec())
        .collect()
}

fn elements(group: &PermGroup) -> Vec<common::Perm> {
    common::closure(group.degree(), &perms(group), 100_000)
}

#[test]
fn chain_orders_match_closure() {
    let mut groups: Vec<PermGroup> = (3..=12).map(|n| dihedral_group(n).unwrap()).collect();
    groups.extend((1..=6).map(|n| symmetric_group(n).unwrap()));
    groups.push(pgammal_2_8());
    groups.push(automorphism_group(&petersen()).unwrap());
    for g in groups {
        assert_eq!(g.order(), elements(&g).len() as u128);
    }
}

#[test]
fn automorphism_counts_match_backtracking() {
    let mut graphs: Vec<Graph> = vec![petersen(), complete(5).unwrap(), cycle(9).unwrap()];
    graphs.push(complete_bipartite(2, 4).unwrap());
    graphs.extend((0..20).map(|i| random_connected(7, 0.35, 300 + i)));
    for g in graphs {
        let adj = common::adjacency(g.vertex_count(), g.edges());
        let expected = common::count_automorphisms(&adj, 1_000_000).unwrap();
        assert_eq!(automorphism_group(&g).unwrap().order(), expected as u128);
    }
}

#[test]
fn girth_of_subdivision_doubles() {
    for seed in 0..40 {
        let g = random_connected(8, 0.3, seed);
        let adj = common::adjacency(g.vertex_count(), g.edges());
        let sub = common::subdivision(g.vertex_count(), g.edges());
        let base = common::shortest_cycle(&adj);
        assert_eq!(girth(&g).finite(), base);
        let expected = base.map_or(Girth::Acyclic, |k| Girth::Finite(2 * k));
        assert_eq!(girth(subdivide(&g).graph()), expected);
        assert_eq!(common::shortest_cycle(&sub), base.map(|k| 2 * k));
    }
}

fn random_graph_and_subgroup() -> impl Strategy<Value = (Graph, PermGroup)> {
    (3usize..=6, 0u64..1000, 0.0f64..0.6, 0usize..5).prop_map(|(n, seed, p, pick)| {
        let g = random_connected(n, p, seed);
        let aut = automorphism_group(&g).unwrap();
        let group = aut.random_subgroups(5, seed).swap_remove(pick);
        (g, group)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn subdivision_distances_match_bfs(n in 2usize..=12, seed in 0u64..10_000, p in 0.0f64..0.5) {
        let g = random_connected(n, p, seed);
        let sg = subdivide(&g);
        let metric = SubdivisionMetric::new(&sg);
        let dist = common::all_pairs(&common::subdivision(n, g.edges()));
        for a in 0..dist.len() {
            for b in 0..dist.len() {
                prop_assert_eq!(metric.distance(a, b).unwrap(), dist[a][b]);
            }
        }
    }

    #[test]
    fn local_predicates_match_enumeration((g, group) in random_graph_and_subgroup(), s in 1usize..=4) {
        let sg = subdivide(&g);
        let lifted = induced_subdivision_action(&group, &sg).unwrap();
        let ctx = SymmetryContext::new(sg.graph(), &lifted).unwrap();
        let sub_adj = common::subdivision(g.vertex_count(), g.edges());
        let sub_elements: Vec<common::Perm> =
            elements(&group).iter().map(|p| common::lift(p, g.edges())).collect();
        prop_assert_eq!(
            ctx.locally_s_arc_transitive(s).unwrap().verdict,
            common::locally_s_arc_transitive(&sub_adj, &sub_elements, s)
        );
        if s <= ctx.diameter() {
            prop_assert_eq!(
                ctx.locally_s_distance_transitive(s).unwrap().verdict,
                common::locally_s_distance_transitive(&sub_adj, &sub_elements, s)
            );
        }
        let base = SymmetryContext::new(&g, &group).unwrap();
        let adj = common::adjacency(g.vertex_count(), g.edges());
        prop_assert_eq!(
            base.s_arc_transitive(s).unwrap().verdict,
            common::s_arc_transitive(&adj, &elements(&group), s)
        );
    }
}
