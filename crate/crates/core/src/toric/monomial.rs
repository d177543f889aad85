use std::fmt;

use crate::bits::iter_bits;
use crate::graph::VertexCover;

/// A monomial in the cover variables `z_C`, stored as `(index, exponent)`
/// pairs sorted by index with no zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ZMonomial {
    terms: Vec<(usize, u32)>,
}

impl ZMonomial {
    pub fn one() -> Self {
        ZMonomial::default()
    }

    pub fn var(index: usize) -> Self {
        ZMonomial {
            terms: vec![(index, 1)],
        }
    }

    /// Collects `(index, exponent)` pairs, summing repeated indices.
    pub fn from_terms(terms: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut v: Vec<(usize, u32)> = terms.into_iter().filter(|&(_, e)| e > 0).collect();
        v.sort_unstable();
        let mut merged: Vec<(usize, u32)> = Vec::with_capacity(v.len());
        for (i, e) in v {
            match merged.last_mut() {
                Some((j, f)) if *j == i => *f += e,
                _ => merged.push((i, e)),
            }
        }
        ZMonomial { terms: merged }
    }

    /// Product of the listed variables, with repetition.
    pub fn product(vars: impl IntoIterator<Item = usize>) -> Self {
        ZMonomial::from_terms(vars.into_iter().map(|i| (i, 1)))
    }

    pub fn terms(&self) -> &[(usize, u32)] {
        &self.terms
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.terms
            .binary_search_by_key(&index, |&(i, _)| i)
            .map_or(0, |k| self.terms[k].1)
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.terms.last().map(|&(i, _)| i)
    }

    /// Variables with multiplicity, ascending.
    pub fn variables(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms
            .iter()
            .flat_map(|&(i, e)| std::iter::repeat_n(i, e as usize))
    }

    fn merge(&self, other: &Self, combine: impl Fn(u32, u32) -> u32) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let (mut p, mut q) = (0, 0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        while p < a.len() || q < b.len() {
            let (i, e) = match (a.get(p), b.get(q)) {
                (Some(&(i, e)), Some(&(j, f))) if i == j => {
                    p += 1;
                    q += 1;
                    (i, combine(e, f))
                }
                (Some(&(i, e)), Some(&(j, _))) if i < j => {
                    p += 1;
                    (i, combine(e, 0))
                }
                (Some(&(i, e)), None) => {
                    p += 1;
                    (i, combine(e, 0))
                }
                (_, Some(&(j, f))) => {
                    q += 1;
                    (j, combine(0, f))
                }
                (None, None) => unreachable!(),
            };
            if e > 0 {
                out.push((i, e));
            }
        }
        ZMonomial { terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.merge(other, |e, f| e + f)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        self.merge(other, u32::max)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.terms.iter().all(|&(i, e)| other.exponent(i) >= e)
    }

    /// `self / divisor`, or `None` when `divisor` does not divide `self`.
    pub fn checked_div(&self, divisor: &Self) -> Option<Self> {
        if !divisor.divides(self) {
            return None;
        }
        Some(self.merge(divisor, |e, f| e - f))
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.terms.iter().all(|&(i, _)| other.exponent(i) == 0)
    }
}

/// A monomial in `x_1..x_n, y_1..y_n` as a dense exponent vector, x's first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoverMonomial {
    exponents: Vec<u32>,
}

impl CoverMonomial {
    pub fn one(n: usize) -> Self {
        CoverMonomial {
            exponents: vec![0; 2 * n],
        }
    }

    /// `u_C`: the product of the vertices of `cover`.
    pub fn of_cover(cover: &VertexCover, n: usize) -> Self {
        let mut m = CoverMonomial::one(n);
        for i in iter_bits(cover.x_mask) {
            m.exponents[i] = 1;
        }
        for j in iter_bits(cover.y_mask) {
            m.exponents[n + j] = 1;
        }
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// Multiplies in `other` raised to `power`.
    pub fn mul_pow_assign(&mut self, other: &CoverMonomial, power: u32) {
        for (a, b) in self.exponents.iter_mut().zip(&other.exponents) {
            *a += b * power;
        }
    }
}

impl fmt::Display for CoverMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.exponents.len() / 2;
        let mut first = true;
        for (k, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            let (name, idx) = if k < n {
                ('x', k + 1)
            } else {
                ('y', k - n + 1)
            };
            write!(f, "{name}{idx}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = ZMonomial::product([0, 2, 2]);
        let b = ZMonomial::product([2, 3]);
        assert_eq!(a.exponent(2), 2);
        assert_eq!(a.degree(), 3);
        assert_eq!(a.mul(&b), ZMonomial::from_terms([(0, 1), (2, 3), (3, 1)]));
        assert_eq!(a.lcm(&b), ZMonomial::from_terms([(0, 1), (2, 2), (3, 1)]));
        assert!(ZMonomial::var(2).divides(&a));
        assert!(!b.divides(&a));
        assert_eq!(
            a.checked_div(&ZMonomial::var(2)),
            Some(ZMonomial::product([0, 2]))
        );
        assert_eq!(a.checked_div(&b), None);
        assert!(ZMonomial::var(1).is_coprime(&a));
        assert_eq!(a.variables().collect::<Vec<_>>(), vec![0, 2, 2]);
    }

    #[test]
    fn cover_monomial() {
        let u = CoverMonomial::of_cover(&VertexCover::new(0b01, 0b10), 2);
        assert_eq!(u.exponents(), &[1, 0, 0, 1]);
        assert_eq!(u.to_string(), "x1*y2");
        let mut sq = CoverMonomial::one(2);
        sq.mul_pow_assign(&CoverMonomial::of_cover(&VertexCover::new(0, 0b11), 2), 2);
        assert_eq!(sq.to_string(), "y1^2*y2^2");
    }
}
