use std::cmp::Ordering;
use std::collections::HashSet;

use super::{pi, Binomial, TermOrder, ZMonomial};
use crate::graph::CoverFamily;
use crate::{Error, Limits, Result};

/// Division by an oriented binomial set, specialised to `±1` coefficients.
struct Reducer<'a> {
    order: &'a TermOrder,
    leads: Vec<ZMonomial>,
    tails: Vec<ZMonomial>,
    // basis indices keyed by the smallest variable index of their lead
    by_first_var: Vec<Vec<usize>>,
    max_steps: usize,
}

impl<'a> Reducer<'a> {
    fn new(basis: &[Binomial], order: &'a TermOrder, limits: &Limits) -> Result<Self> {
        let mut leads = Vec::with_capacity(basis.len());
        let mut tails = Vec::with_capacity(basis.len());
        let mut by_first_var = vec![Vec::new(); order.variable_count()];
        for (k, b) in basis.iter().enumerate() {
            order.check_variables(&b.plus)?;
            order.check_variables(&b.minus)?;
            let b = b.oriented(order);
            let first = b.plus.terms()[0].0;
            by_first_var[first].push(k);
            leads.push(b.plus);
            tails.push(b.minus);
        }
        Ok(Reducer {
            order,
            leads,
            tails,
            by_first_var,
            max_steps: limits.max_reduction_steps,
        })
    }

    /// Basis element whose lead divides `m`, preferring the lowest lead.
    fn reducer_for(&self, m: &ZMonomial) -> Option<usize> {
        m.terms()
            .iter()
            .flat_map(|&(v, _)| self.by_first_var[v].iter().copied())
            .filter(|&k| self.leads[k].divides(m))
            .min_by(|&k, &l| {
                self.order
                    .compare(&self.leads[k], &self.leads[l])
                    .then(k.cmp(&l))
            })
    }

    /// Whether `a - b` reduces to zero.
    fn reduces_to_zero(&self, mut a: ZMonomial, mut b: ZMonomial) -> Result<bool> {
        for _ in 0..self.max_steps {
            match self.order.compare(&a, &b) {
                Ordering::Equal => return Ok(true),
                Ordering::Less => std::mem::swap(&mut a, &mut b),
                Ordering::Greater => {}
            }
            let Some(k) = self.reducer_for(&a) else {
                return Ok(false);
            };
            let next = a
                .checked_div(&self.leads[k])
                .expect("reducer lead divides")
                .mul(&self.tails[k]);
            if self.order.compare(&next, &a) != Ordering::Less {
                return Err(Error::internal(
                    "reduction step did not decrease the leading term",
                ));
            }
            a = next;
        }
        Err(Error::internal("reduction exceeded the step limit"))
    }

    /// Standard monomial reached from `m` by repeatedly rewriting leads.
    fn normal_form(&self, mut m: ZMonomial) -> Result<ZMonomial> {
        for _ in 0..self.max_steps {
            let Some(k) = self.reducer_for(&m) else {
                return Ok(m);
            };
            m = m
                .checked_div(&self.leads[k])
                .expect("reducer lead divides")
                .mul(&self.tails[k]);
        }
        Err(Error::internal("reduction exceeded the step limit"))
    }

    fn s_pair_reduces(&self, i: usize, j: usize) -> Result<bool> {
        let lcm = self.leads[i].lcm(&self.leads[j]);
        let left = lcm
            .checked_div(&self.leads[i])
            .expect("lcm is a multiple")
            .mul(&self.tails[i]);
        let right = lcm
            .checked_div(&self.leads[j])
            .expect("lcm is a multiple")
            .mul(&self.tails[j]);
        self.reduces_to_zero(left, right)
    }
}

/// Buchberger's criterion: every S-polynomial of a pair of basis elements
/// reduces to zero modulo the basis.
///
/// Binomials are oriented under `order` first. When several leads divide the
/// current term, the lowest one is used.
pub fn buchberger_certify(basis: &[Binomial], order: &TermOrder, limits: &Limits) -> Result<bool> {
    Ok(first_failing_pair(basis, order, limits)?.is_none())
}

/// The first pair `(i, j)` whose S-polynomial has a nonzero remainder.
pub fn first_failing_pair(
    basis: &[Binomial],
    order: &TermOrder,
    limits: &Limits,
) -> Result<Option<(usize, usize)>> {
    let reducer = Reducer::new(basis, order, limits)?;
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if !reducer.s_pair_reduces(i, j)? {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// Inter-reduces a Gröbner basis: drops elements whose lead is divisible by
/// another lead and rewrites each tail to its normal form.
pub fn reduced_basis(
    basis: &[Binomial],
    order: &TermOrder,
    limits: &Limits,
) -> Result<Vec<Binomial>> {
    let oriented: Vec<Binomial> = basis.iter().map(|b| b.oriented(order)).collect();
    let mut kept: Vec<Binomial> = Vec::new();
    for (k, b) in oriented.iter().enumerate() {
        let redundant = oriented.iter().enumerate().any(|(l, other)| {
            l != k && other.plus.divides(&b.plus) && (other.plus != b.plus || l < k)
        });
        if !redundant {
            kept.push(b.clone());
        }
    }
    let reducer = Reducer::new(&kept, order, limits)?;
    let mut out = Vec::with_capacity(kept.len());
    for b in &kept {
        let tail = reducer.normal_form(b.minus.clone())?;
        if tail == b.plus {
            return Err(Error::internal("basis element reduced to zero"));
        }
        out.push(Binomial::new(b.plus.clone(), tail)?);
    }
    out.sort_by(|a, b| order.compare(&a.plus, &b.plus));
    Ok(out)
}

/// Checks that `π` is injective on the standard monomials of degree `≤ degree`.
///
/// Given `basis ⊆ ker π`, injectivity there means the leading terms generate
/// the initial ideal of `ker π` through that degree. Standard monomials are
/// closed under division, so the search only extends standard monomials.
pub fn standard_monomial_injectivity(
    basis: &[Binomial],
    order: &TermOrder,
    covers: &CoverFamily,
    degree: usize,
    limits: &Limits,
) -> Result<bool> {
    for b in basis {
        if !b.is_in_kernel(covers)? {
            return Err(Error::validation("basis element is not in the toric ideal"));
        }
    }
    let leads: Vec<ZMonomial> = basis
        .iter()
        .map(|b| b.leading_term(order).clone())
        .collect();
    let mut search = StandardSearch {
        leads: &leads,
        covers,
        variables: covers.len(),
        max_degree: degree,
        cap: limits.max_standard_monomials,
        visited: 0,
        images: HashSet::new(),
    };
    search.extend(&ZMonomial::one(), 0, 0)
}

struct StandardSearch<'a> {
    leads: &'a [ZMonomial],
    covers: &'a CoverFamily,
    variables: usize,
    max_degree: usize,
    cap: usize,
    visited: usize,
    images: HashSet<super::CoverMonomial>,
}

impl StandardSearch<'_> {
    /// Visits `m`, then every standard `m * z_v` with `v >= from`.
    fn extend(&mut self, m: &ZMonomial, from: usize, degree: usize) -> Result<bool> {
        self.visited += 1;
        if self.visited > self.cap {
            return Err(Error::CapExceeded {
                what: "standard monomial count",
                size: self.visited,
                cap: self.cap,
            });
        }
        if !self.images.insert(pi(m, self.covers)?) {
            return Ok(false);
        }
        if degree == self.max_degree {
            return Ok(true);
        }
        for v in from..self.variables {
            let next = m.mul(&ZMonomial::var(v));
            if self.leads.iter().any(|l| l.divides(&next)) {
                continue;
            }
            if !self.extend(&next, v, degree + 1)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
