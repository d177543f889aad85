use super::SubsetFamily;
use crate::bits::{full_mask, iter_bits};
use crate::{Error, Limits, Result};

/// Hard ceiling on ideal enumeration independent of [`Limits`].
pub(crate) const MAX_IDEAL_ENUMERATION: usize = 30;

/// A finite poset `{p_1..p_n}` as a row-major `n × n` relation matrix:
/// `leq[i * n + j]` holds iff `p_i ≤ p_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    size: usize,
    leq: Vec<bool>,
}

impl Poset {
    /// Validates reflexivity, antisymmetry and transitivity.
    pub fn new(size: usize, leq: Vec<bool>) -> Result<Self> {
        if size > 64 {
            return Err(Error::validation(format!(
                "poset of size {size} exceeds 64"
            )));
        }
        if leq.len() != size * size {
            return Err(Error::validation("relation matrix has wrong shape"));
        }
        let at = |i: usize, j: usize| leq[i * size + j];
        for i in 0..size {
            if !at(i, i) {
                return Err(Error::validation(format!(
                    "relation is not reflexive at p{}",
                    i + 1
                )));
            }
            for j in 0..size {
                if i != j && at(i, j) && at(j, i) {
                    return Err(Error::validation(format!(
                        "antisymmetry fails: p{} and p{} are mutually comparable",
                        i + 1,
                        j + 1
                    )));
                }
                for k in 0..size {
                    if at(i, j) && at(j, k) && !at(i, k) {
                        return Err(Error::validation(format!(
                            "transitivity fails at p{} <= p{} <= p{}",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(Poset { size, leq })
    }

    /// Reflexive-transitive closure of 0-based pairs `(i, j)` meaning `p_i ≤ p_j`.
    pub fn from_relations(
        size: usize,
        relations: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut leq = vec![false; size * size];
        for i in 0..size {
            leq[i * size + i] = true;
        }
        for (i, j) in relations {
            if i >= size || j >= size {
                return Err(Error::validation(format!(
                    "relation ({}, {}) out of range for poset of size {size}",
                    i + 1,
                    j + 1
                )));
            }
            leq[i * size + j] = true;
        }
        for k in 0..size {
            for i in 0..size {
                if leq[i * size + k] {
                    for j in 0..size {
                        if leq[k * size + j] {
                            leq[i * size + j] = true;
                        }
                    }
                }
            }
        }
        Poset::new(size, leq)
    }

    pub fn antichain(size: usize) -> Self {
        Poset::from_relations(size, []).expect("antichain is a poset")
    }

    /// `p_1 ≤ p_2 ≤ … ≤ p_n`.
    pub fn chain(size: usize) -> Self {
        Poset::from_relations(size, (1..size).map(|i| (i - 1, i))).expect("chain is a poset")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.size + j]
    }

    /// Mask of all `p_j ≤ p_i`, including `i` itself.
    pub fn down_set(&self, i: usize) -> u64 {
        (0..self.size)
            .filter(|&j| self.leq(j, i))
            .fold(0, |acc, j| acc | 1 << j)
    }

    /// Pairs `(i, j)` with `i ≠ j` and `p_i ≤ p_j`, ascending.
    pub fn strict_relations(&self) -> Vec<(usize, usize)> {
        (0..self.size)
            .flat_map(|i| (0..self.size).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && self.leq(i, j))
            .collect()
    }

    /// True iff `mask` is down-closed.
    pub fn is_ideal(&self, mask: u64) -> bool {
        mask & !full_mask(self.size) == 0 && iter_bits(mask).all(|i| self.down_set(i) & !mask == 0)
    }

    /// All poset ideals `J(P)` with the default size cap.
    pub fn ideals(&self) -> Result<SubsetFamily> {
        poset_ideals(self, &Limits::default())
    }
}

/// All down-closed subsets of `p`, including `∅` and `P`.
///
/// Elements are visited along a linear extension; an element may join the
/// current ideal only once everything strictly below it has.
pub fn poset_ideals(p: &Poset, limits: &Limits) -> Result<SubsetFamily> {
    let cap = limits.max_poset_size.min(MAX_IDEAL_ENUMERATION);
    if p.size() > cap {
        return Err(Error::CapExceeded {
            what: "poset",
            size: p.size(),
            cap,
        });
    }
    let mut extension: Vec<usize> = (0..p.size()).collect();
    extension.sort_by_key(|&i| (p.down_set(i).count_ones(), i));
    let below: Vec<u64> = extension
        .iter()
        .map(|&i| p.down_set(i) & !(1 << i))
        .collect();
    let mut out = Vec::new();
    grow_ideals(&extension, &below, 0, 0, &mut out);
    SubsetFamily::new(p.size(), out)
}

fn grow_ideals(extension: &[usize], below: &[u64], k: usize, ideal: u64, out: &mut Vec<u64>) {
    if k == extension.len() {
        out.push(ideal);
        return;
    }
    grow_ideals(extension, below, k + 1, ideal, out);
    if below[k] & !ideal == 0 {
        grow_ideals(extension, below, k + 1, ideal | 1 << extension[k], out);
    }
}
