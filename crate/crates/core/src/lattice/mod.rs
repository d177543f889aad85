//! Families of subsets of `{x_1..x_n}` stored as sorted `u64` masks,
//! sublattice and fullness tests, and the Birkhoff correspondence with posets.

mod poset;

pub use poset::{poset_ideals, Poset};

use crate::bits::{full_mask, is_subset, iter_bits, mask_to_string};
use crate::{Error, Result};

/// An explicit family of subsets of an `n`-element ground set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubsetFamily {
    ground_size: usize,
    members: Vec<u64>,
}

impl SubsetFamily {
    /// Sorts `members`; duplicates and masks with bits at or above `n` are errors.
    pub fn new(ground_size: usize, mut members: Vec<u64>) -> Result<Self> {
        if ground_size > 64 {
            return Err(Error::validation(format!(
                "ground set of size {ground_size} exceeds 64"
            )));
        }
        let top = full_mask(ground_size);
        if let Some(m) = members.iter().find(|&&m| m & !top != 0) {
            return Err(Error::validation(format!(
                "member {m:#b} is not a subset of a {ground_size}-element set"
            )));
        }
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::validation(format!(
                "duplicate member {}",
                mask_to_string(w[0], ground_size)
            )));
        }
        Ok(SubsetFamily {
            ground_size,
            members,
        })
    }

    /// The Boolean lattice `L_n` of all subsets.
    pub fn boolean(n: usize) -> Result<Self> {
        if n > 24 {
            return Err(Error::CapExceeded {
                what: "Boolean lattice rank",
                size: n,
                cap: 24,
            });
        }
        SubsetFamily::new(n, (0..1u64 << n).collect())
    }

    /// Smallest family containing `generators` that is closed under
    /// intersection and union. Pairwise meets and joins are added until a
    /// fixpoint is reached.
    pub fn closure(ground_size: usize, generators: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut members: Vec<u64> = generators.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        let start = SubsetFamily::new(ground_size, members)?;
        let mut set: std::collections::BTreeSet<u64> = start.members.into_iter().collect();
        loop {
            let current: Vec<u64> = set.iter().copied().collect();
            let before = set.len();
            for (k, &a) in current.iter().enumerate() {
                for &b in &current[k + 1..] {
                    set.insert(a & b);
                    set.insert(a | b);
                }
            }
            if set.len() == before {
                break;
            }
        }
        SubsetFamily::new(ground_size, set.into_iter().collect())
    }

    /// Closure of `generators` together with `∅` and the full set.
    pub fn bounded_closure(
        ground_size: usize,
        generators: impl IntoIterator<Item = u64>,
    ) -> Result<Self> {
        let top = full_mask(ground_size);
        SubsetFamily::closure(ground_size, generators.into_iter().chain([0, top]))
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, mask: u64) -> bool {
        self.members.binary_search(&mask).is_ok()
    }

    pub fn top(&self) -> u64 {
        full_mask(self.ground_size)
    }

    /// Members rendered as 0/1 strings, leftmost character `x_1`.
    pub fn member_strings(&self) -> Vec<String> {
        self.members
            .iter()
            .map(|&m| mask_to_string(m, self.ground_size))
            .collect()
    }

    fn is_closed(&self) -> bool {
        self.members.iter().enumerate().all(|(k, &a)| {
            self.members[k + 1..]
                .iter()
                .all(|&b| self.contains(a & b) && self.contains(a | b))
        })
    }

    /// Contains `∅` and the full set and is closed under `∩` and `∪`.
    pub fn is_bounded_sublattice(&self) -> bool {
        self.contains(0) && self.contains(self.top()) && self.is_closed()
    }

    /// Maximal chain cardinality minus one.
    pub fn rank(&self) -> Result<usize> {
        if self.members.is_empty() {
            return Err(Error::validation("rank of an empty family"));
        }
        if self.has_saturated_chain() {
            return Ok(self.ground_size);
        }
        // longest path in the strict-inclusion DAG; popcount order is a topological order
        let mut order = self.members.clone();
        order.sort_by_key(|m| (m.count_ones(), *m));
        let mut longest = vec![1usize; order.len()];
        for k in 0..order.len() {
            for j in 0..k {
                if order[j] != order[k] && is_subset(order[j], order[k]) {
                    longest[k] = longest[k].max(longest[j] + 1);
                }
            }
        }
        Ok(longest.into_iter().max().unwrap_or(1) - 1)
    }

    // A chain of n + 1 members must grow by exactly one element per step from ∅ to the top.
    fn has_saturated_chain(&self) -> bool {
        if !self.contains(0) {
            return false;
        }
        let mut level = vec![0u64];
        for _ in 0..self.ground_size {
            let mut next: Vec<u64> = level
                .iter()
                .flat_map(|&m| {
                    iter_bits(!m & self.top())
                        .map(move |i| m | 1 << i)
                        .filter(|&s| self.contains(s))
                })
                .collect();
            next.sort_unstable();
            next.dedup();
            if next.is_empty() {
                return false;
            }
            level = next;
        }
        true
    }

    /// Bounded sublattice whose rank equals the ground-set size.
    pub fn is_full_sublattice(&self) -> bool {
        self.is_bounded_sublattice() && self.has_saturated_chain()
    }

    /// The unique poset `P` with `J(P)` equal to this (full) family.
    ///
    /// `p_i ≤ p_j` iff every member containing `x_j` also contains `x_i`;
    /// the result is checked by recomputing its ideal lattice.
    pub fn birkhoff_poset(&self) -> Result<Poset> {
        if !self.is_full_sublattice() {
            return Err(Error::validation("family is not a full sublattice"));
        }
        let n = self.ground_size;
        if n > poset::MAX_IDEAL_ENUMERATION {
            return Err(Error::CapExceeded {
                what: "poset",
                size: n,
                cap: poset::MAX_IDEAL_ENUMERATION,
            });
        }
        let poset = self.implication_poset()?;
        let limits = crate::Limits {
            max_poset_size: poset::MAX_IDEAL_ENUMERATION,
            ..crate::Limits::default()
        };
        let ideals = poset_ideals(&poset, &limits)?;
        if &ideals != self {
            return Err(Error::internal(
                "Birkhoff poset does not reproduce the lattice",
            ));
        }
        Ok(poset)
    }

    /// Relation `i ≤ j` iff `x_j ∈ S ⇒ x_i ∈ S` for every member `S`.
    ///
    /// This preorder is the edge rule of the graph attached to a bounded
    /// sublattice; it is antisymmetric exactly when distinct elements are
    /// separated by some member.
    pub fn implication_matrix(&self) -> Vec<bool> {
        let n = self.ground_size;
        let mut leq = vec![true; n * n];
        for &s in &self.members {
            for j in iter_bits(s) {
                for i in iter_bits(!s & self.top()) {
                    leq[i * n + j] = false;
                }
            }
        }
        leq
    }

    fn implication_poset(&self) -> Result<Poset> {
        Poset::new(self.ground_size, self.implication_matrix())
            .map_err(|e| Error::internal(format!("implication relation is not a poset: {e}")))
    }
}
