//! Reproducible random instances.
//!
//! Everything takes a caller-supplied RNG so tests and the CLI can pin
//! seeds.

use std::collections::BTreeSet;

use rand::Rng;

use crate::graph::Graph;

/// Erdős–Rényi `G(vertices, p)`, redrawn until connected.
///
/// Panics if `vertices == 0` or `p` is not in `(0, 1]`.
pub fn random_connected_graph<R: Rng + ?Sized>(rng: &mut R, vertices: usize, p: f64) -> Graph {
    assert!(vertices > 0, "need at least one vertex");
    assert!(p > 0.0 && p <= 1.0, "edge probability must be in (0, 1]");
    loop {
        let g = random_graph(rng, vertices, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// Erdős–Rényi `G(vertices, p)` without any connectivity guarantee.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, vertices: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..vertices {
        for v in u + 1..vertices {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(vertices, &edges).expect("generated edges are in range")
}

/// Uniform labelled tree via a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, vertices: usize) -> Graph {
    assert!(vertices > 0, "need at least one vertex");
    let sequence: Vec<usize> = (0..vertices.saturating_sub(2))
        .map(|_| rng.gen_range(0..vertices))
        .collect();
    tree_from_prufer(vertices, &sequence)
}

/// Decodes a Prüfer sequence of length `vertices - 2`.
pub fn tree_from_prufer(vertices: usize, sequence: &[usize]) -> Graph {
    assert!(vertices > 0, "need at least one vertex");
    assert_eq!(sequence.len(), vertices.saturating_sub(2), "Prüfer sequence length");
    let mut degree = vec![1usize; vertices];
    for &v in sequence {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(vertices.saturating_sub(1));
    for &v in sequence {
        let leaf = (0..vertices).find(|&u| degree[u] == 1).expect("a leaf always exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..vertices).filter(|&u| degree[u] == 1).collect();
    if let [a, b] = rest[..] {
        edges.push((a, b));
    }
    Graph::from_edge_list(vertices, &edges).expect("Prüfer decoding yields valid edges")
}

/// One representative of every isomorphism class of trees on
/// `1..=max_vertices` vertices.
pub fn all_trees(max_vertices: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for vertices in 1..=max_vertices {
        let len = vertices.saturating_sub(2);
        let mut seen = BTreeSet::new();
        let mut sequence = vec![0usize; len];
        loop {
            let tree = tree_from_prufer(vertices, &sequence);
            if seen.insert(tree_canonical_form(&tree)) {
                out.push(tree);
            }
            // odometer increment over {0..vertices}^len
            let Some(pos) = sequence.iter().rposition(|&x| x + 1 < vertices) else {
                break;
            };
            sequence[pos] += 1;
            for x in &mut sequence[pos + 1..] {
                *x = 0;
            }
        }
    }
    out
}

/// Isomorphism invariant of a tree: the least rooted AHU encoding over all
/// roots.
pub fn tree_canonical_form(tree: &Graph) -> String {
    fn encode(tree: &Graph, v: usize, parent: Option<usize>) -> String {
        let mut children: Vec<String> = tree
            .neighbors(v)
            .filter(|&w| Some(w) != parent)
            .map(|w| encode(tree, w, Some(v)))
            .collect();
        children.sort();
        format!("({})", children.concat())
    }
    (0..tree.vertex_count())
        .map(|root| encode(tree, root, None))
        .min()
        .expect("graphs have at least one vertex")
}

/// `count` connected graphs with `1..=max_vertices` vertices and edge
/// probability drawn from `[0.25, 0.9]`.
pub fn connected_sample<R: Rng + ?Sized>(rng: &mut R, count: usize, max_vertices: usize) -> Vec<Graph> {
    (0..count)
        .map(|_| {
            let vertices = rng.gen_range(1..=max_vertices);
            let p = rng.gen_range(0.25..=0.9);
            random_connected_graph(rng, vertices, p)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn tree_counts_match_known_sequence() {
        // unlabelled trees on 1..=7 vertices: 1, 1, 1, 2, 3, 6, 11
        let trees = all_trees(7);
        let counts: Vec<usize> = (1..=7)
            .map(|n| trees.iter().filter(|t| t.vertex_count() == n).count())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11]);
        assert!(trees.iter().all(Graph::is_tree));
    }

    #[test]
    fn prufer_decoding() {
        assert_eq!(tree_from_prufer(1, &[]), Graph::complete(1).unwrap());
        assert_eq!(tree_from_prufer(2, &[]), Graph::path(2).unwrap());
        // star centred at 0
        let star = tree_from_prufer(4, &[0, 0]);
        assert_eq!(star.degree(0), 3);
        let path = tree_from_prufer(4, &[1, 2]);
        assert_eq!(path.edges(), &[(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::from_edge_list(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        let star = tree_from_prufer(4, &[3, 3]);
        assert_eq!(tree_canonical_form(&a), tree_canonical_form(&b));
        assert_ne!(tree_canonical_form(&a), tree_canonical_form(&star));
    }

    #[test]
    fn random_instances_are_reproducible() {
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            connected_sample(&mut rng, 20, 7)
        };
        let first = draw(7);
        assert_eq!(first, draw(7));
        assert!(first.iter().all(Graph::is_connected));
        assert!(first.iter().all(|g| g.vertex_count() <= 7));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..9 {
            assert!(random_tree(&mut rng, n).is_tree());
        }
    }
}
