//! Brute-force oracles and instance generators shared by the integration
//! tests. Nothing here calls the enumeration or lattice algorithms under test.
#![allow(dead_code)]

use coverlattice::{BipartiteGraph, Poset, SubsetFamily};
use rand::Rng;

/// Minimal covers by scanning all `2^(L+R)` vertex subsets. Returned as
/// `(x_mask, y_mask)` sorted ascending.
pub fn brute_force_covers(l: usize, r: usize, edges: &[(usize, usize)]) -> Vec<(u64, u64)> {
    let n = l + r;
    let is_cover = |s: u64| {
        edges
            .iter()
            .all(|&(i, j)| s >> i & 1 == 1 || s >> (l + j) & 1 == 1)
    };
    let mut out: Vec<(u64, u64)> = (0..1u64 << n)
        .filter(|&s| is_cover(s))
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || !is_cover(s & !(1 << v))))
        .map(|s| (s & ((1 << l) - 1), s >> l))
        .collect();
    out.sort_unstable();
    out
}

/// Edge list of the `k`-th subset of the `l × r` grid, row-major bit order.
pub fn edges_of_mask(l: usize, r: usize, mask: u64) -> Vec<(usize, usize)> {
    (0..l * r)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| (b / r, b % r))
        .collect()
}

/// Every edge set on `l × r` without isolated vertices.
pub fn all_graphs(l: usize, r: usize) -> Vec<Vec<(usize, usize)>> {
    (0..1u64 << (l * r))
        .map(|m| edges_of_mask(l, r, m))
        .filter(|e| {
            (0..l).all(|i| e.iter().any(|&(a, _)| a == i))
                && (0..r).all(|j| e.iter().any(|&(_, b)| b == j))
        })
        .collect()
}

/// Exists a perfect matching, by trying all permutations.
pub fn has_perfect_matching(n: usize, edges: &[(usize, usize)]) -> bool {
    fn go(n: usize, row: usize, used: u64, edges: &[(usize, usize)]) -> bool {
        if row == n {
            return true;
        }
        (0..n).any(|j| {
            used >> j & 1 == 0 && edges.contains(&(row, j)) && go(n, row + 1, used | 1 << j, edges)
        })
    }
    go(n, 0, 0, edges)
}

pub fn graph(l: usize, r: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
    BipartiteGraph::new(l, r, edges.iter().copied()).unwrap()
}

/// Random square graph on `n + n` vertices that contains a perfect matching.
pub fn random_matched_graph(rng: &mut impl Rng, n: usize, density: f64) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..n).collect();
    for k in (1..n).rev() {
        perm.swap(k, rng.gen_range(0..=k));
    }
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, perm[i])).collect();
    for (i, &mate) in perm.iter().enumerate() {
        for j in 0..n {
            if j != mate && rng.gen_bool(density) {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    edges
}

/// All labeled posets on `n ≤ 5` elements, by filtering strict relations.
pub fn all_posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .collect();
    let mut out = Vec::new();
    for mask in 0..1u64 << pairs.len() {
        // up[i]: strict upper set of i
        let mut up = vec![0u64; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                up[i] |= 1 << j;
            }
        }
        let transitive = (0..n).all(|i| (0..n).all(|j| up[i] >> j & 1 == 0 || up[j] & !up[i] == 0));
        let antisymmetric =
            (0..n).all(|i| (0..n).all(|j| up[i] >> j & 1 == 0 || up[j] >> i & 1 == 0));
        if transitive && antisymmetric {
            let mut leq = vec![false; n * n];
            for i in 0..n {
                leq[i * n + i] = true;
                for j in 0..n {
                    if up[i] >> j & 1 == 1 {
                        leq[i * n + j] = true;
                    }
                }
            }
            out.push(Poset::new(n, leq).unwrap());
        }
    }
    out
}

/// Down-closed subsets by filtering all `2^n` masks.
pub fn brute_force_ideals(p: &Poset) -> Vec<u64> {
    let n = p.size();
    (0..1u64 << n)
        .filter(|&s| {
            (0..n).all(|i| s >> i & 1 == 0 || (0..n).all(|j| !p.leq(j, i) || s >> j & 1 == 1))
        })
        .collect()
}

fn closed(members: &[u64]) -> bool {
    members.iter().all(|&a| {
        members
            .iter()
            .all(|&b| members.contains(&(a & b)) && members.contains(&(a | b)))
    })
}

/// All bounded sublattices of `L_n`, `n ≤ 3`, by filtering every family.
pub fn all_bounded_sublattices(n: usize) -> Vec<SubsetFamily> {
    let top = (1u64 << n) - 1;
    let inner: Vec<u64> = (1..top).collect();
    let mut out = Vec::new();
    for choice in 0..1u64 << inner.len() {
        let mut members = vec![0, top];
        members.extend(
            inner
                .iter()
                .enumerate()
                .filter(|(k, _)| choice >> k & 1 == 1)
                .map(|(_, &m)| m),
        );
        if closed(&members) {
            out.push(SubsetFamily::new(n, members).unwrap());
        }
    }
    out
}

/// Closure of random generators plus `∅` and the top, computed here directly.
pub fn random_bounded_sublattice(rng: &mut impl Rng, n: usize) -> SubsetFamily {
    let top = (1u64 << n) - 1;
    let k = rng.gen_range(0..=n + 1);
    let mut members: Vec<u64> = vec![0, top];
    members.extend((0..k).map(|_| rng.gen::<u64>() & top));
    members.sort_unstable();
    members.dedup();
    loop {
        let mut next = members.clone();
        for &a in &members {
            for &b in &members {
                next.push(a & b);
                next.push(a | b);
            }
        }
        next.sort_unstable();
        next.dedup();
        if next.len() == members.len() {
            break;
        }
        members = next;
    }
    SubsetFamily::new(n, members).unwrap()
}

/// Longest chain length minus one, by exhaustive depth-first search.
pub fn brute_force_rank(members: &[u64]) -> usize {
    fn depth(m: u64, members: &[u64]) -> usize {
        members
            .iter()
            .filter(|&&s| s != m && s & !m == 0)
            .map(|&s| 1 + depth(s, members))
            .max()
            .unwrap_or(0)
    }
    members
        .iter()
        .map(|&m| depth(m, members))
        .max()
        .unwrap_or(0)
}
