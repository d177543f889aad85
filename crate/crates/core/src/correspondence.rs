//! Maps between unmixed bipartite graphs, bounded sublattices of `L_n` and
//! finite posets, and the unmixed / Cohen–Macaulay decision procedures.
//!
//! Graph-side results are expressed in relabeled coordinates, where
//! `{x_i, y_i}` is an edge for every `i`; the [`Relabeling`] used is returned
//! alongside so callers can map back.

use crate::bits::full_mask;
use crate::graph::{
    enumerate_minimal_covers, perfect_matching, BipartiteGraph, CoverFamily, Relabeling,
    VertexCover,
};
use crate::lattice::{Poset, SubsetFamily};
use crate::{Error, Limits, Result};

/// An unmixed graph seen through its lattice of cover x-parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeView {
    pub relabeling: Relabeling,
    /// The input graph after relabeling; always has its diagonal.
    pub graph: BipartiteGraph,
    /// Minimal covers of `graph`.
    pub covers: CoverFamily,
    /// `L_G`: the x-parts of `covers`.
    pub lattice: SubsetFamily,
}

fn x_parts(covers: &CoverFamily) -> Result<SubsetFamily> {
    SubsetFamily::new(
        covers.left_size(),
        covers.iter().map(|c| c.x_mask).collect(),
    )
}

/// Every cover of a relabeled unmixed graph is `S ∪ S*`, `S*` = `{y_j : x_j ∉ S}`.
fn check_cover_shape(covers: &CoverFamily) -> Result<()> {
    let top = full_mask(covers.left_size());
    match covers.iter().find(|c| c.y_mask != top & !c.x_mask) {
        Some(c) => Err(Error::internal(format!(
            "cover {:?} is not of the form S ∪ S*",
            c.vertex_names()
        ))),
        None => Ok(()),
    }
}

/// Relabels an unmixed graph and computes its lattice; `None` if `g` is mixed.
pub fn lattice_view(g: &BipartiteGraph, limits: &Limits) -> Result<Option<LatticeView>> {
    let covers = enumerate_minimal_covers(g, limits)?;
    if covers.size_range().is_some_and(|(lo, hi)| lo != hi) {
        return Ok(None);
    }
    if !g.is_square() {
        return Err(Error::internal("unmixed graph is not square"));
    }
    let mate = perfect_matching(g)
        .ok_or_else(|| Error::internal("unmixed graph has no perfect matching"))?;
    let mut sigma = vec![0; mate.len()];
    for (i, &j) in mate.iter().enumerate() {
        sigma[j] = i;
    }
    let relabeling = Relabeling::new(sigma)?;
    let graph = relabeling.apply(g)?;
    let covers = CoverFamily::new(
        g.left_size(),
        g.right_size(),
        covers
            .iter()
            .map(|c| VertexCover::new(c.x_mask, relabeling.apply_to_mask(c.y_mask)))
            .collect(),
    )?;
    check_cover_shape(&covers)?;
    let lattice = x_parts(&covers)?;
    if !lattice.is_bounded_sublattice() {
        return Err(Error::internal(
            "lattice of an unmixed graph is not a bounded sublattice",
        ));
    }
    Ok(Some(LatticeView {
        relabeling,
        graph,
        covers,
        lattice,
    }))
}

/// `L_G = { C̄ : C ∈ M(G) }` for an unmixed graph that already has its diagonal.
pub fn lattice_of_graph(g: &BipartiteGraph, limits: &Limits) -> Result<SubsetFamily> {
    if !g.has_diagonal() {
        return Err(Error::validation(
            "graph must be square with every {x_i, y_i} an edge; relabel it first",
        ));
    }
    let covers = enumerate_minimal_covers(g, limits)?;
    if covers.size_range().is_some_and(|(lo, hi)| lo != hi) {
        return Err(Error::validation("graph is not unmixed"));
    }
    check_cover_shape(&covers)?;
    let lattice = x_parts(&covers)?;
    if !lattice.is_bounded_sublattice() {
        return Err(Error::internal(
            "lattice of an unmixed graph is not a bounded sublattice",
        ));
    }
    Ok(lattice)
}

/// The unique unmixed graph `G` with `L_G = f`.
///
/// `{x_i, y_j}` is an edge iff `x_j ∈ S ⇒ x_i ∈ S` for every `S ∈ f`, which is
/// when `x_i y_j` lies in every prime `⟨S ∪ S*⟩`. The result is checked by
/// recomputing its lattice.
pub fn graph_from_lattice(f: &SubsetFamily, limits: &Limits) -> Result<BipartiteGraph> {
    if !f.is_bounded_sublattice() {
        return Err(Error::validation("family is not a bounded sublattice"));
    }
    let g = implication_graph(f)?;
    if lattice_of_graph(&g, limits)? != *f {
        return Err(Error::internal(
            "graph built from lattice does not reproduce it",
        ));
    }
    Ok(g)
}

fn implication_graph(f: &SubsetFamily) -> Result<BipartiteGraph> {
    let n = f.ground_size();
    let leq = f.implication_matrix();
    BipartiteGraph::new(
        n,
        n,
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| leq[i * n + j]),
    )
}

/// Unmixedness decided through the lattice side: `g` is square with a perfect
/// matching, the cover x-parts form a bounded sublattice, and after
/// relabeling every cover has the shape `S ∪ S*`.
pub fn is_unmixed_via_lattice(g: &BipartiteGraph, limits: &Limits) -> Result<bool> {
    let Some(mate) = perfect_matching(g) else {
        return Ok(false);
    };
    let mut sigma = vec![0; mate.len()];
    for (i, &j) in mate.iter().enumerate() {
        sigma[j] = i;
    }
    let relabeling = Relabeling::new(sigma)?;
    let covers = enumerate_minimal_covers(g, limits)?;
    let top = full_mask(g.left_size());
    let shaped = covers
        .iter()
        .all(|c| relabeling.apply_to_mask(c.y_mask) == top & !c.x_mask);
    Ok(shaped && x_parts(&covers)?.is_bounded_sublattice())
}

/// `G_P`: edges `{x_i, y_j}` for `p_i ≤ p_j`.
pub fn graph_from_poset(p: &Poset) -> BipartiteGraph {
    let n = p.size();
    BipartiteGraph::new(
        n,
        n,
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| p.leq(i, j)),
    )
    .expect("G_P contains its diagonal, so no vertex is isolated")
}

/// `α_x ∪ α_y` with `α_x = {x_i : p_i ∈ α}` and `α_y = {y_j : p_j ∉ α}`.
pub fn cover_from_poset_ideal(alpha: u64, p: &Poset) -> Result<VertexCover> {
    if !p.is_ideal(alpha) {
        return Err(Error::validation(format!(
            "{} is not a poset ideal",
            crate::bits::mask_to_string(alpha, p.size())
        )));
    }
    let top = full_mask(p.size());
    Ok(VertexCover::new(alpha, top & !alpha))
}

/// Why a graph is or is not Cohen–Macaulay.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CmVerdict {
    /// `L_G` is full; the witness satisfies `G_P = G` in relabeled coordinates.
    CohenMacaulay {
        poset: Poset,
    },
    NotUnmixed,
    /// Unmixed, but `L_G` has rank below `n`.
    RankDeficit {
        rank: usize,
        n: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmReport {
    /// Present whenever the graph is unmixed.
    pub view: Option<LatticeView>,
    pub verdict: CmVerdict,
}

impl CmReport {
    pub fn is_unmixed(&self) -> bool {
        self.view.is_some()
    }

    pub fn is_cohen_macaulay(&self) -> bool {
        matches!(self.verdict, CmVerdict::CohenMacaulay { .. })
    }

    pub fn witness(&self) -> Option<&Poset> {
        match &self.verdict {
            CmVerdict::CohenMacaulay { poset } => Some(poset),
            _ => None,
        }
    }

    /// One-line explanation of a negative verdict.
    pub fn reason(&self) -> Option<String> {
        match &self.verdict {
            CmVerdict::CohenMacaulay { .. } => None,
            CmVerdict::NotUnmixed => Some("not unmixed".to_string()),
            CmVerdict::RankDeficit { rank, n } => Some(format!("rank {rank} < {n}")),
        }
    }
}

/// Cohen–Macaulayness via fullness of `L_G`, with a Birkhoff poset witness.
pub fn is_cohen_macaulay(g: &BipartiteGraph, limits: &Limits) -> Result<CmReport> {
    let Some(view) = lattice_view(g, limits)? else {
        return Ok(CmReport {
            view: None,
            verdict: CmVerdict::NotUnmixed,
        });
    };
    let n = view.lattice.ground_size();
    let verdict = if view.lattice.is_full_sublattice() {
        let poset = view.lattice.birkhoff_poset()?;
        if graph_from_poset(&poset) != view.graph {
            return Err(Error::internal(
                "witness poset does not reproduce the graph",
            ));
        }
        CmVerdict::CohenMacaulay { poset }
    } else {
        CmVerdict::RankDeficit {
            rank: view.lattice.rank()?,
            n,
        }
    };
    Ok(CmReport {
        view: Some(view),
        verdict,
    })
}

/// Poset ideal of `p` read back from a minimal cover of `G_P`.
pub fn poset_ideal_of_cover(cover: &VertexCover, p: &Poset) -> Result<u64> {
    let alpha = cover.x_mask;
    if !p.is_ideal(alpha) || cover.y_mask != full_mask(p.size()) & !alpha {
        return Err(Error::validation("cover is not of the form α_x ∪ α_y"));
    }
    Ok(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, one_based: &[(usize, usize)]) -> BipartiteGraph {
        BipartiteGraph::new(n, n, one_based.iter().map(|&(i, j)| (i - 1, j - 1))).unwrap()
    }

    fn c4() -> BipartiteGraph {
        graph(2, &[(1, 1), (1, 2), (2, 1), (2, 2)])
    }

    fn path() -> BipartiteGraph {
        graph(2, &[(1, 1), (2, 1), (2, 2)])
    }

    fn g0(n: usize) -> BipartiteGraph {
        BipartiteGraph::new(n, n, (0..n).map(|i| (i, i))).unwrap()
    }

    #[test]
    fn lattice_of_graph_examples() {
        let l = Limits::default();
        assert_eq!(
            lattice_of_graph(&c4(), &l).unwrap().members(),
            &[0b00, 0b11]
        );
        assert_eq!(
            lattice_of_graph(&g0(2), &l).unwrap(),
            SubsetFamily::boolean(2).unwrap()
        );
        assert_eq!(
            lattice_of_graph(&path(), &l).unwrap().members(),
            &[0b00, 0b10, 0b11]
        );
        let crossed = graph(2, &[(1, 2), (2, 1)]);
        assert!(matches!(
            lattice_of_graph(&crossed, &l),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn graph_from_lattice_examples() {
        let l = Limits::default();
        let f = SubsetFamily::new(2, vec![0b00, 0b11]).unwrap();
        assert_eq!(graph_from_lattice(&f, &l).unwrap(), c4());
        let b = SubsetFamily::boolean(2).unwrap();
        assert_eq!(graph_from_lattice(&b, &l).unwrap(), g0(2));
        let chain = SubsetFamily::new(2, vec![0b00, 0b10, 0b11]).unwrap();
        assert_eq!(graph_from_lattice(&chain, &l).unwrap(), path());
        let bad = SubsetFamily::new(2, vec![0b00, 0b01, 0b10]).unwrap();
        assert!(matches!(
            graph_from_lattice(&bad, &l),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn unmixed_routes() {
        let l = Limits::default();
        assert!(is_unmixed_via_lattice(&c4(), &l).unwrap());
        assert!(is_unmixed_via_lattice(&g0(3), &l).unwrap());
        let star = BipartiteGraph::new(1, 2, [(0, 0), (0, 1)]).unwrap();
        assert!(!is_unmixed_via_lattice(&star, &l).unwrap());
        for g in [c4(), g0(3), star, path()] {
            assert_eq!(
                crate::graph::is_unmixed(&g, &l).unwrap(),
                is_unmixed_via_lattice(&g, &l).unwrap()
            );
        }
    }

    #[test]
    fn graph_from_poset_examples() {
        assert_eq!(graph_from_poset(&Poset::antichain(2)), g0(2));
        let p = Poset::from_relations(2, [(1, 0)]).unwrap();
        assert_eq!(graph_from_poset(&p), path());
        let v = Poset::from_relations(3, [(0, 2), (1, 2)]).unwrap();
        assert_eq!(
            graph_from_poset(&v),
            graph(3, &[(1, 1), (2, 2), (3, 3), (1, 3), (2, 3)])
        );
    }

    #[test]
    fn covers_from_ideals() {
        let p = Poset::from_relations(2, [(1, 0)]).unwrap();
        assert_eq!(
            cover_from_poset_ideal(0, &p).unwrap(),
            VertexCover::new(0, 0b11)
        );
        assert_eq!(
            cover_from_poset_ideal(0b11, &p).unwrap(),
            VertexCover::new(0b11, 0)
        );
        assert_eq!(
            cover_from_poset_ideal(0b10, &p).unwrap(),
            VertexCover::new(0b10, 0b01)
        );
        assert!(cover_from_poset_ideal(0b01, &p).is_err());
        let covers = enumerate_minimal_covers(&path(), &Limits::default()).unwrap();
        assert!(covers.covers().contains(&VertexCover::new(0b10, 0b01)));
        assert_eq!(
            poset_ideal_of_cover(&VertexCover::new(0b10, 0b01), &p).unwrap(),
            0b10
        );
    }

    #[test]
    fn cohen_macaulay_examples() {
        let l = Limits::default();
        let r = is_cohen_macaulay(&path(), &l).unwrap();
        assert!(r.is_cohen_macaulay());
        assert_eq!(
            r.witness(),
            Some(&Poset::from_relations(2, [(1, 0)]).unwrap())
        );

        let r = is_cohen_macaulay(&c4(), &l).unwrap();
        assert!(r.is_unmixed() && !r.is_cohen_macaulay());
        assert_eq!(r.reason().unwrap(), "rank 1 < 2");

        for n in 1..=4 {
            let r = is_cohen_macaulay(&g0(n), &l).unwrap();
            assert_eq!(r.witness(), Some(&Poset::antichain(n)));
        }

        let star = BipartiteGraph::new(1, 2, [(0, 0), (0, 1)]).unwrap();
        assert_eq!(
            is_cohen_macaulay(&star, &l).unwrap().verdict,
            CmVerdict::NotUnmixed
        );
    }

    #[test]
    fn relabeled_view_of_a_crossed_matching() {
        let crossed = graph(2, &[(1, 2), (2, 1)]);
        let view = lattice_view(&crossed, &Limits::default()).unwrap().unwrap();
        assert_eq!(view.relabeling.sigma(), &[1, 0]);
        assert_eq!(view.graph, g0(2));
        assert_eq!(view.lattice, SubsetFamily::boolean(2).unwrap());
    }
}
