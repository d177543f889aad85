//! The toric ideal of minimal vertex covers: the map `π(z_C) = u_C`, the
//! quadratic binomial basis built from meets and joins of cover x-parts, a
//! graded reverse lexicographic order, and per-instance certification.
//!
//! Coefficients are always `±1`, so no field arithmetic is needed.

mod basis;
mod certify;
mod monomial;
mod order;

pub use basis::{initial_ideal, is_squarefree_quadratic, pi, quadratic_basis, Binomial};
pub use certify::{
    buchberger_certify, first_failing_pair, reduced_basis, standard_monomial_injectivity,
};
pub use monomial::{CoverMonomial, ZMonomial};
pub use order::{build_term_order, TermOrder};

use crate::graph::CoverFamily;
use crate::{Limits, Result};

/// Everything computed for the toric ideal of one cover family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricAnalysis {
    pub order: TermOrder,
    /// Basis oriented so that `plus` is the leading term.
    pub basis: Vec<Binomial>,
    pub buchberger: bool,
    pub initial_ideal: Vec<ZMonomial>,
    pub squarefree_quadratic: bool,
    pub degree: usize,
    pub injectivity: bool,
    /// Present when the Buchberger check succeeded.
    pub reduced_basis: Option<Vec<Binomial>>,
}

impl ToricAnalysis {
    pub fn certified(&self) -> bool {
        self.buchberger && self.squarefree_quadratic && self.injectivity
    }
}

/// Builds the basis for `covers` and runs every certificate on it.
pub fn analyze(covers: &CoverFamily, degree: usize, limits: &Limits) -> Result<ToricAnalysis> {
    let order = build_term_order(covers)?;
    let basis: Vec<Binomial> = quadratic_basis(covers)?
        .iter()
        .map(|b| b.oriented(&order))
        .collect();
    let buchberger = buchberger_certify(&basis, &order, limits)?;
    let initial = initial_ideal(&basis, &order);
    let squarefree_quadratic = is_squarefree_quadratic(&initial);
    let injectivity = standard_monomial_injectivity(&basis, &order, covers, degree, limits)?;
    let reduced = if buchberger {
        Some(reduced_basis(&basis, &order, limits)?)
    } else {
        None
    };
    Ok(ToricAnalysis {
        order,
        basis,
        buchberger,
        initial_ideal: initial,
        squarefree_quadratic,
        degree,
        injectivity,
        reduced_basis: reduced,
    })
}
