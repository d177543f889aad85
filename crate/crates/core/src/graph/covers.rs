use super::{BipartiteGraph, CoverFamily, VertexCover};
use crate::bits::{full_mask, iter_bits};
use crate::{Error, Limits, Result};

/// Unified adjacency over `0..L+R`; vertex `L + j` is `y_j`.
fn unified_adjacency(g: &BipartiteGraph) -> Vec<u64> {
    let l = g.left_size();
    let mut adj = vec![0u64; g.vertex_count()];
    for (i, j) in g.edges() {
        adj[i] |= 1 << (l + j);
        adj[l + j] |= 1 << i;
    }
    adj
}

/// Bron–Kerbosch with pivoting on the complement graph: each reported
/// clique of the complement is a maximal independent set of `g`.
fn maximal_independent_sets(r: u64, mut p: u64, mut x: u64, non_adj: &[u64], out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot = iter_bits(p | x)
        .max_by_key(|&u| ((p & non_adj[u]).count_ones(), std::cmp::Reverse(u)))
        .expect("p | x is non-empty");
    let mut candidates = p & !non_adj[pivot];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        let bit = 1u64 << v;
        maximal_independent_sets(r | bit, p & non_adj[v], x & non_adj[v], non_adj, out);
        p &= !bit;
        x |= bit;
        candidates &= !bit;
    }
}

/// All minimal vertex covers of `g`, sorted by `(x_mask, y_mask)`.
///
/// Minimal covers are exactly the complements of maximal independent sets.
pub fn enumerate_minimal_covers(g: &BipartiteGraph, limits: &Limits) -> Result<CoverFamily> {
    let n = g.vertex_count();
    let cap = limits.max_vertices.min(64);
    if n > cap {
        return Err(Error::CapExceeded {
            what: "graph vertex count",
            size: n,
            cap,
        });
    }
    let all = full_mask(n);
    let adj = unified_adjacency(g);
    let non_adj: Vec<u64> = (0..n).map(|v| all & !adj[v] & !(1 << v)).collect();
    let mut sets = Vec::new();
    maximal_independent_sets(0, all, 0, &non_adj, &mut sets);

    let l = g.left_size();
    let covers = sets
        .into_iter()
        .map(|s| {
            let c = all & !s;
            VertexCover::new(c & full_mask(l), c >> l)
        })
        .collect();
    CoverFamily::new(g.left_size(), g.right_size(), covers)
}

/// True iff all minimal vertex covers of `g` have the same cardinality.
pub fn is_unmixed(g: &BipartiteGraph, limits: &Limits) -> Result<bool> {
    let covers = enumerate_minimal_covers(g, limits)?;
    Ok(covers.size_range().is_none_or(|(lo, hi)| lo == hi))
}

/// Supports of the monomial primes in `I(G) = ⋂_C ⟨C⟩`, one per minimal cover.
///
/// On graphs with at most `limits.certify_vertices` vertices the decomposition
/// is checked against the edge ideal on every squarefree monomial.
pub fn primary_decomposition(g: &BipartiteGraph, limits: &Limits) -> Result<Vec<VertexCover>> {
    let covers = enumerate_minimal_covers(g, limits)?;
    if g.vertex_count() <= limits.certify_vertices.min(24) {
        certify_decomposition(g, &covers)?;
    }
    Ok(covers.covers().to_vec())
}

// A squarefree monomial lies in I(G) iff its support contains an edge, and in
// the prime ⟨C⟩ iff its support meets C. Monomial ideals are determined by
// their squarefree parts here, so supports suffice.
fn certify_decomposition(g: &BipartiteGraph, covers: &CoverFamily) -> Result<()> {
    let l = g.left_size();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for support in 0..(1u64 << g.vertex_count()) {
        let xs = support & full_mask(l);
        let ys = support >> l;
        let in_edge_ideal = edges
            .iter()
            .any(|&(i, j)| xs >> i & 1 == 1 && ys >> j & 1 == 1);
        let in_all_primes = covers
            .iter()
            .all(|c| c.x_mask & xs != 0 || c.y_mask & ys != 0);
        if in_edge_ideal != in_all_primes {
            return Err(Error::internal(format!(
                "primary decomposition disagrees with edge ideal on support {support:#b}"
            )));
        }
    }
    Ok(())
}
