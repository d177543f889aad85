mod common;

use common::*;
use coverlattice::graph::{
    enumerate_minimal_covers, is_unmixed, primary_decomposition, relabel_by_matching,
};
use coverlattice::Limits;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn masks(g: &coverlattice::BipartiteGraph) -> Vec<(u64, u64)> {
    enumerate_minimal_covers(g, &Limits::default())
        .unwrap()
        .iter()
        .map(|c| (c.x_mask, c.y_mask))
        .collect()
}

#[test]
fn spec_examples_match_brute_force() {
    let c4 = [(0, 0), (0, 1), (1, 1), (1, 0)];
    assert_eq!(
        brute_force_covers(2, 2, &c4),
        vec![(0b00, 0b11), (0b11, 0b00)]
    );
    let path = [(0, 0), (1, 0), (1, 1)];
    assert_eq!(
        brute_force_covers(2, 2, &path),
        vec![(0b00, 0b11), (0b10, 0b01), (0b11, 0b00)]
    );
    for e in [&c4[..], &path[..]] {
        assert_eq!(masks(&graph(2, 2, e)), brute_force_covers(2, 2, e));
    }
}

#[test]
fn exhaustive_small_graphs_match_oracle() {
    for l in 1..=3 {
        for r in 1..=3 {
            for edges in all_graphs(l, r) {
                let g = graph(l, r, &edges);
                let expected = brute_force_covers(l, r, &edges);
                assert_eq!(masks(&g), expected, "{l}x{r} {edges:?}");
                let sizes: Vec<u32> = expected
                    .iter()
                    .map(|(x, y)| x.count_ones() + y.count_ones())
                    .collect();
                let unmixed = sizes.iter().all(|&s| s == sizes[0]);
                assert_eq!(is_unmixed(&g, &Limits::default()).unwrap(), unmixed);
                if unmixed {
                    assert_eq!(l, r, "unmixed implies square");
                }
            }
        }
    }
}

#[test]
fn random_four_by_four_graphs_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let edges = random_matched_graph(&mut rng, 4, 0.3);
        let g = graph(4, 4, &edges);
        assert_eq!(masks(&g), brute_force_covers(4, 4, &edges), "{edges:?}");
    }
}

#[test]
fn covers_are_sound_up_to_ten_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let edges = random_matched_graph(&mut rng, 5, 0.35);
        let g = graph(5, 5, &edges);
        let covers = enumerate_minimal_covers(&g, &Limits::default()).unwrap();
        for c in &covers {
            assert!(edges
                .iter()
                .all(|&(i, j)| c.x_mask >> i & 1 == 1 || c.y_mask >> j & 1 == 1));
            assert!(c.is_minimal_cover(&g));
        }
        assert_eq!(
            covers
                .iter()
                .map(|c| (c.x_mask, c.y_mask))
                .collect::<Vec<_>>(),
            brute_force_covers(5, 5, &edges)
        );
    }
}

#[test]
fn relabeling_preserves_cover_statistics() {
    for edges in all_graphs(3, 3) {
        let g = graph(3, 3, &edges);
        let l = Limits::default();
        if !is_unmixed(&g, &l).unwrap() {
            continue;
        }
        let (h, sigma) = relabel_by_matching(&g, &l).unwrap();
        assert!(h.has_diagonal());
        assert_eq!(sigma.inverse().apply(&h).unwrap(), g);
        let mut a: Vec<usize> = enumerate_minimal_covers(&g, &l)
            .unwrap()
            .iter()
            .map(|c| c.len())
            .collect();
        let mut b: Vec<usize> = enumerate_minimal_covers(&h, &l)
            .unwrap()
            .iter()
            .map(|c| c.len())
            .collect();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }
}

#[test]
fn primary_decomposition_is_certified_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 1..=6 {
        for _ in 0..20 {
            let edges = random_matched_graph(&mut rng, n, 0.4);
            let g = graph(n, n, &edges);
            let pd = primary_decomposition(&g, &Limits::default()).unwrap();
            assert_eq!(pd.len(), brute_force_covers(n, n, &edges).len());
        }
    }
}

#[test]
fn forty_vertex_matching_is_within_default_cap() {
    // G_0 with n = 10: 2^10 covers, one endpoint per edge
    let g = graph(10, 10, &(0..10).map(|i| (i, i)).collect::<Vec<_>>());
    let covers = enumerate_minimal_covers(&g, &Limits::default()).unwrap();
    assert_eq!(covers.len(), 1024);
    let wide = graph(21, 21, &(0..21).map(|i| (i, i)).collect::<Vec<_>>());
    assert!(enumerate_minimal_covers(&wide, &Limits::default()).is_err());
}
