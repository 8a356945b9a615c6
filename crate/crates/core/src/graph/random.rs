use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;

/// A seeded random connected graph on `n >= 1` vertices: a random
/// spanning tree plus every remaining pair independently with probability
/// `extra_edge_probability`.
pub fn random_connected(n: usize, extra_edge_probability: f64, seed: u64) -> Graph {
    assert!(n >= 1, "random_connected needs n >= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((order[i].min(order[j]), order[i].max(order[j])));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(extra_edge_probability) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("random graph is simple")
}
