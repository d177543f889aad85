use super::{is_unmixed, BipartiteGraph};
use crate::bits::iter_bits;
use crate::{Error, Limits, Result};

/// A permutation of right-vertex indices. `sigma[j]` is the new index of `y_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relabeling {
    sigma: Vec<usize>,
}

impl Relabeling {
    pub fn identity(n: usize) -> Self {
        Relabeling {
            sigma: (0..n).collect(),
        }
    }

    /// Checks that `sigma` is a bijection on `0..sigma.len()`.
    pub fn new(sigma: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; sigma.len()];
        for &s in &sigma {
            if s >= sigma.len() || std::mem::replace(&mut seen[s], true) {
                return Err(Error::validation("relabeling is not a permutation"));
            }
        }
        Ok(Relabeling { sigma })
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(j, &s)| j == s)
    }

    pub fn inverse(&self) -> Relabeling {
        let mut inv = vec![0; self.sigma.len()];
        for (j, &s) in self.sigma.iter().enumerate() {
            inv[s] = j;
        }
        Relabeling { sigma: inv }
    }

    pub fn apply_to_mask(&self, y_mask: u64) -> u64 {
        iter_bits(y_mask).fold(0, |acc, j| acc | 1 << self.sigma[j])
    }

    /// Renames every `y_j` of `g` to `y_{sigma[j]}`.
    pub fn apply(&self, g: &BipartiteGraph) -> Result<BipartiteGraph> {
        if g.right_size() != self.sigma.len() {
            return Err(Error::validation(format!(
                "relabeling of size {} applied to graph with {} right vertices",
                self.sigma.len(),
                g.right_size()
            )));
        }
        BipartiteGraph::new(
            g.left_size(),
            g.right_size(),
            g.edges().map(|(i, j)| (i, self.sigma[j])),
        )
    }
}

/// A perfect matching of a square graph as `mate[i] = j` (edge `{x_i, y_j}`).
///
/// Diagonal edges `{x_i, y_i}` are taken first, then every unmatched left
/// vertex is augmented in ascending order with neighbours tried in ascending
/// order. A graph that already has its diagonal gets the identity back.
pub fn perfect_matching(g: &BipartiteGraph) -> Option<Vec<usize>> {
    if !g.is_square() {
        return None;
    }
    let n = g.left_size();
    let mut mate_x: Vec<Option<usize>> = vec![None; n];
    let mut mate_y: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        if g.has_edge(i, i) {
            mate_x[i] = Some(i);
            mate_y[i] = Some(i);
        }
    }
    for i in 0..n {
        if mate_x[i].is_some() {
            continue;
        }
        let mut visited = 0u64;
        if !augment(g, i, &mut visited, &mut mate_x, &mut mate_y) {
            return None;
        }
    }
    mate_x.into_iter().collect()
}

fn augment(
    g: &BipartiteGraph,
    i: usize,
    visited: &mut u64,
    mate_x: &mut [Option<usize>],
    mate_y: &mut [Option<usize>],
) -> bool {
    for j in iter_bits(g.neighbours_of_x(i)) {
        if *visited >> j & 1 == 1 {
            continue;
        }
        *visited |= 1 << j;
        let free = match mate_y[j] {
            None => true,
            Some(k) => augment(g, k, visited, mate_x, mate_y),
        };
        if free {
            mate_x[i] = Some(j);
            mate_y[j] = Some(i);
            return true;
        }
    }
    false
}

/// Renames right vertices so that `{x_i, y_i}` is an edge for every `i`.
///
/// Only unmixed graphs are accepted; they are square and have a perfect
/// matching, so a missing matching is reported as an internal error.
pub fn relabel_by_matching(
    g: &BipartiteGraph,
    limits: &Limits,
) -> Result<(BipartiteGraph, Relabeling)> {
    if !is_unmixed(g, limits)? {
        return Err(Error::validation("graph is not unmixed"));
    }
    if !g.is_square() {
        return Err(Error::internal(format!(
            "unmixed graph has sides {}x{}",
            g.left_size(),
            g.right_size()
        )));
    }
    let mate = perfect_matching(g)
        .ok_or_else(|| Error::internal("unmixed graph has no perfect matching"))?;
    let mut sigma = vec![0; mate.len()];
    for (i, &j) in mate.iter().enumerate() {
        sigma[j] = i;
    }
    let relabeling = Relabeling::new(sigma)?;
    let relabeled = relabeling.apply(g)?;
    debug_assert!(relabeled.has_diagonal());
    Ok((relabeled, relabeling))
}
