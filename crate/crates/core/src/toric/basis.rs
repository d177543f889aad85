use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::{CoverMonomial, TermOrder, ZMonomial};
use crate::bits::is_subset;
use crate::graph::CoverFamily;
use crate::{Error, Result};

/// `plus - plus'` with coefficients `±1`; both sides share a degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Binomial {
    pub plus: ZMonomial,
    pub minus: ZMonomial,
}

impl Binomial {
    pub fn new(plus: ZMonomial, minus: ZMonomial) -> Result<Self> {
        if plus == minus {
            return Err(Error::validation("binomial with equal terms is zero"));
        }
        if plus.degree() != minus.degree() {
            return Err(Error::validation("binomial is not homogeneous"));
        }
        Ok(Binomial { plus, minus })
    }

    /// Same binomial up to sign, with the leading term first.
    pub fn oriented(&self, order: &TermOrder) -> Binomial {
        match order.compare(&self.plus, &self.minus) {
            Ordering::Less => Binomial {
                plus: self.minus.clone(),
                minus: self.plus.clone(),
            },
            _ => self.clone(),
        }
    }

    pub fn leading_term(&self, order: &TermOrder) -> &ZMonomial {
        match order.compare(&self.plus, &self.minus) {
            Ordering::Less => &self.minus,
            _ => &self.plus,
        }
    }

    pub fn is_in_kernel(&self, covers: &CoverFamily) -> Result<bool> {
        Ok(pi(&self.plus, covers)? == pi(&self.minus, covers)?)
    }
}

/// `π(z_C) = u_C`, extended multiplicatively.
pub fn pi(m: &ZMonomial, covers: &CoverFamily) -> Result<CoverMonomial> {
    let n = covers.left_size();
    let mut image = CoverMonomial::one(n);
    for &(i, e) in m.terms() {
        let cover = covers
            .covers()
            .get(i)
            .ok_or_else(|| Error::validation(format!("unknown cover variable z{i}")))?;
        image.mul_pow_assign(&CoverMonomial::of_cover(cover, n), e);
    }
    Ok(image)
}

/// `z_C z_{C'} - z_{C∩C'} z_{C∪C'}` for every unordered pair of covers whose
/// x-parts are incomparable, meet and join taken on x-parts.
///
/// Variable `i` is the `i`-th cover of `covers`. Comparable pairs would give
/// the zero binomial and are skipped. The x-parts must be closed under `∩`
/// and `∪`; each emitted binomial is checked to lie in `ker π`.
pub fn quadratic_basis(covers: &CoverFamily) -> Result<Vec<Binomial>> {
    let cs = covers.covers();
    let mut by_x_part = BTreeMap::new();
    for (k, c) in cs.iter().enumerate() {
        if by_x_part.insert(c.x_mask, k).is_some() {
            return Err(Error::validation("two covers share an x-part"));
        }
    }
    let lookup = |mask: u64| {
        by_x_part.get(&mask).copied().ok_or_else(|| {
            Error::validation(format!(
                "x-parts are not closed under meet and join: {} missing",
                crate::bits::mask_to_string(mask, covers.left_size())
            ))
        })
    };
    let mut basis = Vec::new();
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            let (a, b) = (cs[i].x_mask, cs[j].x_mask);
            if is_subset(a, b) || is_subset(b, a) {
                continue;
            }
            let meet = lookup(a & b)?;
            let join = lookup(a | b)?;
            let binomial =
                Binomial::new(ZMonomial::product([i, j]), ZMonomial::product([meet, join]))?;
            if !binomial.is_in_kernel(covers)? {
                return Err(Error::internal(format!(
                    "binomial for covers {i}, {j} is not in the toric ideal"
                )));
            }
            basis.push(binomial);
        }
    }
    Ok(basis)
}

/// Leading terms of `basis`, deduplicated and sorted ascending under `order`.
pub fn initial_ideal(basis: &[Binomial], order: &TermOrder) -> Vec<ZMonomial> {
    let mut leads: Vec<ZMonomial> = basis
        .iter()
        .map(|b| b.leading_term(order).clone())
        .collect();
    leads.sort_by(|a, b| order.compare(a, b));
    leads.dedup();
    leads
}

/// Every generator is `z_a z_b` with `a ≠ b`.
pub fn is_squarefree_quadratic(generators: &[ZMonomial]) -> bool {
    generators
        .iter()
        .all(|m| m.terms().len() == 2 && m.terms().iter().all(|&(_, e)| e == 1))
}
