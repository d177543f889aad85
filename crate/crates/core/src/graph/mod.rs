//! Bipartite graphs on `{x_1..x_L} ∪ {y_1..y_R}` and their vertex covers.

mod covers;
mod matching;

pub use covers::{enumerate_minimal_covers, is_unmixed, primary_decomposition};
pub use matching::{perfect_matching, relabel_by_matching, Relabeling};

use crate::bits::{full_mask, iter_bits};
use crate::{Error, Result};

/// Widest side a graph may have; adjacency is stored as one `u64` per vertex.
pub const MAX_SIDE: usize = 64;

/// A bipartite graph without isolated vertices.
///
/// Edges always join a left vertex `x_i` to a right vertex `y_j`, so loops
/// cannot be expressed. Adjacency is kept as one right-neighbour mask per
/// left vertex; two graphs are equal iff they have the same sides and edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    left_size: usize,
    right_size: usize,
    x_adj: Vec<u64>,
}

impl BipartiteGraph {
    /// Builds a graph from 0-based `(i, j)` pairs meaning `{x_i, y_j}`.
    ///
    /// Rejects out-of-range indices, duplicate edges and isolated vertices.
    pub fn new(
        left_size: usize,
        right_size: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if left_size > MAX_SIDE || right_size > MAX_SIDE {
            return Err(Error::validation(format!(
                "graph sides {left_size}x{right_size} exceed {MAX_SIDE}"
            )));
        }
        let mut x_adj = vec![0u64; left_size];
        for (i, j) in edges {
            if i >= left_size || j >= right_size {
                return Err(Error::validation(format!(
                    "edge ({}, {}) out of range for {left_size}x{right_size} graph",
                    i + 1,
                    j + 1
                )));
            }
            if x_adj[i] >> j & 1 == 1 {
                return Err(Error::validation(format!(
                    "duplicate edge ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
            x_adj[i] |= 1 << j;
        }
        let graph = BipartiteGraph {
            left_size,
            right_size,
            x_adj,
        };
        if let Some(i) = graph.x_adj.iter().position(|&m| m == 0) {
            return Err(Error::validation(format!("x{} is isolated", i + 1)));
        }
        let hit = graph.x_adj.iter().fold(0u64, |acc, &m| acc | m);
        if hit != full_mask(right_size) {
            let j = (!hit & full_mask(right_size)).trailing_zeros() as usize;
            return Err(Error::validation(format!("y{} is isolated", j + 1)));
        }
        Ok(graph)
    }

    pub fn left_size(&self) -> usize {
        self.left_size
    }

    pub fn right_size(&self) -> usize {
        self.right_size
    }

    pub fn vertex_count(&self) -> usize {
        self.left_size + self.right_size
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.left_size && j < self.right_size && self.x_adj[i] >> j & 1 == 1
    }

    /// Right neighbours of `x_i` as a mask.
    pub fn neighbours_of_x(&self, i: usize) -> u64 {
        self.x_adj[i]
    }

    /// Left neighbours of `y_j` as a mask.
    pub fn neighbours_of_y(&self, j: usize) -> u64 {
        self.x_adj
            .iter()
            .enumerate()
            .filter(|(_, &m)| m >> j & 1 == 1)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    /// Edges in ascending `(i, j)` order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.x_adj
            .iter()
            .enumerate()
            .flat_map(|(i, &m)| iter_bits(m).map(move |j| (i, j)))
    }

    pub fn edge_count(&self) -> usize {
        self.x_adj.iter().map(|m| m.count_ones() as usize).sum()
    }

    pub fn is_square(&self) -> bool {
        self.left_size == self.right_size
    }

    /// True when `{x_i, y_i}` is an edge for every `i`.
    pub fn has_diagonal(&self) -> bool {
        self.is_square() && (0..self.left_size).all(|i| self.has_edge(i, i))
    }
}

/// A vertex subset given by its left and right parts.
///
/// The derived ordering is by `(x_mask, y_mask)`, which is the canonical
/// output order of every cover listing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexCover {
    pub x_mask: u64,
    pub y_mask: u64,
}

impl VertexCover {
    pub fn new(x_mask: u64, y_mask: u64) -> Self {
        VertexCover { x_mask, y_mask }
    }

    pub fn len(&self) -> usize {
        (self.x_mask.count_ones() + self.y_mask.count_ones()) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.x_mask == 0 && self.y_mask == 0
    }

    pub fn covers(&self, g: &BipartiteGraph) -> bool {
        (0..g.left_size()).all(|i| self.x_mask >> i & 1 == 1 || g.x_adj[i] & !self.y_mask == 0)
    }

    /// Cover whose removal of any single vertex breaks the cover property.
    pub fn is_minimal_cover(&self, g: &BipartiteGraph) -> bool {
        if !self.covers(g) {
            return false;
        }
        let x_ok = iter_bits(self.x_mask)
            .all(|i| !VertexCover::new(self.x_mask & !(1 << i), self.y_mask).covers(g));
        x_ok && iter_bits(self.y_mask)
            .all(|j| !VertexCover::new(self.x_mask, self.y_mask & !(1 << j)).covers(g))
    }

    /// Vertex names in ascending order, x's first, e.g. `["x1", "y2"]`.
    pub fn vertex_names(&self) -> Vec<String> {
        iter_bits(self.x_mask)
            .map(|i| format!("x{}", i + 1))
            .chain(iter_bits(self.y_mask).map(|j| format!("y{}", j + 1)))
            .collect()
    }
}

/// The set `M(G)` of minimal vertex covers, sorted by `(x_mask, y_mask)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverFamily {
    left_size: usize,
    right_size: usize,
    covers: Vec<VertexCover>,
}

impl CoverFamily {
    /// Wraps an explicit list; sorts it and rejects duplicates or stray bits.
    pub fn new(left_size: usize, right_size: usize, mut covers: Vec<VertexCover>) -> Result<Self> {
        covers.sort_unstable();
        if covers.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::validation("duplicate cover in family"));
        }
        let (xm, ym) = (full_mask(left_size), full_mask(right_size));
        if covers
            .iter()
            .any(|c| c.x_mask & !xm != 0 || c.y_mask & !ym != 0)
        {
            return Err(Error::validation(
                "cover mentions a vertex outside the graph",
            ));
        }
        Ok(CoverFamily {
            left_size,
            right_size,
            covers,
        })
    }

    pub fn left_size(&self) -> usize {
        self.left_size
    }

    pub fn right_size(&self) -> usize {
        self.right_size
    }

    pub fn covers(&self) -> &[VertexCover] {
        &self.covers
    }

    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexCover> {
        self.covers.iter()
    }

    /// Smallest and largest cover cardinality, `None` for an empty family.
    pub fn size_range(&self) -> Option<(usize, usize)> {
        let min = self.covers.iter().map(VertexCover::len).min()?;
        let max = self.covers.iter().map(VertexCover::len).max()?;
        Some((min, max))
    }
}

impl<'a> IntoIterator for &'a CoverFamily {
    type Item = &'a VertexCover;
    type IntoIter = std::slice::Iter<'a, VertexCover>;

    fn into_iter(self) -> Self::IntoIter {
        self.covers.iter()
    }
}
