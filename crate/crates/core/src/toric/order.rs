use std::cmp::Ordering;

use super::ZMonomial;
use crate::graph::CoverFamily;
use crate::{Error, Result};

/// Graded reverse lexicographic order on the cover variables.
///
/// Variables are ranked by the size of their cover's x-part, ties broken by
/// the x-part mask, which is a linear extension of inclusion. At equal degree
/// the monomial with the larger exponent on the lowest-ranked variable where
/// the two differ is the smaller one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermOrder {
    rank_of: Vec<usize>,
    by_rank: Vec<usize>,
}

impl TermOrder {
    /// Order from an explicit ranking: `by_rank[r]` is the variable of rank `r`.
    pub fn from_ranking(by_rank: Vec<usize>) -> Result<Self> {
        let mut rank_of = vec![usize::MAX; by_rank.len()];
        for (r, &v) in by_rank.iter().enumerate() {
            if v >= by_rank.len() || rank_of[v] != usize::MAX {
                return Err(Error::validation("variable ranking is not a permutation"));
            }
            rank_of[v] = r;
        }
        Ok(TermOrder { rank_of, by_rank })
    }

    pub fn variable_count(&self) -> usize {
        self.by_rank.len()
    }

    pub fn rank(&self, var: usize) -> usize {
        self.rank_of[var]
    }

    /// Variables from lowest to highest rank.
    pub fn ranking(&self) -> &[usize] {
        &self.by_rank
    }

    pub fn compare(&self, a: &ZMonomial, b: &ZMonomial) -> Ordering {
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            other => return other,
        }
        let (ta, tb) = (a.terms(), b.terms());
        let (mut p, mut q) = (0, 0);
        // (rank, exponent in a, exponent in b) at the lowest-ranked differing variable
        let mut lowest: Option<(usize, u32, u32)> = None;
        let mut consider = |var: usize, e: u32, f: u32| {
            if e != f {
                let r = self.rank_of[var];
                if lowest.is_none_or(|(s, _, _)| r < s) {
                    lowest = Some((r, e, f));
                }
            }
        };
        while p < ta.len() || q < tb.len() {
            match (ta.get(p), tb.get(q)) {
                (Some(&(i, e)), Some(&(j, f))) if i == j => {
                    consider(i, e, f);
                    p += 1;
                    q += 1;
                }
                (Some(&(i, e)), Some(&(j, _))) if i < j => {
                    consider(i, e, 0);
                    p += 1;
                }
                (Some(&(i, e)), None) => {
                    consider(i, e, 0);
                    p += 1;
                }
                (_, Some(&(j, f))) => {
                    consider(j, 0, f);
                    q += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        match lowest {
            None => Ordering::Equal,
            Some((_, e, f)) => f.cmp(&e),
        }
    }

    pub(crate) fn check_variables(&self, m: &ZMonomial) -> Result<()> {
        match m.max_index() {
            Some(i) if i >= self.by_rank.len() => Err(Error::validation(format!(
                "variable z{i} is outside the term order"
            ))),
            _ => Ok(()),
        }
    }
}

/// The revlex order used for the toric ideal of an unmixed graph's covers.
///
/// Every cover must have exactly `n` vertices, `n` being the side length.
pub fn build_term_order(covers: &CoverFamily) -> Result<TermOrder> {
    let n = covers.left_size();
    if covers.right_size() != n {
        return Err(Error::validation(
            "covers come from a graph that is not square",
        ));
    }
    if let Some(c) = covers.iter().find(|c| c.len() != n) {
        return Err(Error::validation(format!(
            "cover {:?} has size {} instead of {n}",
            c.vertex_names(),
            c.len()
        )));
    }
    let mut by_rank: Vec<usize> = (0..covers.len()).collect();
    let cs = covers.covers();
    by_rank.sort_by_key(|&k| (cs[k].x_mask.count_ones(), cs[k].x_mask));
    TermOrder::from_ranking(by_rank)
}
