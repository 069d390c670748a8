//! Commutative-algebra oracle: the explicitly presented bigraded ideal of the
//! fiber-product scheme for small presets, its reduced Gröbner basis, and the
//! bigraded Hilbert function of the (possibly non-reduced) scheme, compared
//! against the character engine.
//!
//! The comparison is the point: for `sl₂` the scheme and the normalized
//! variety already disagree at bidegree `(1,1)`, exhibiting the non-reduced /
//! non-normal behaviour computationally.

mod groebner;
mod hilbert;
mod poly;
mod presets;

use std::str::FromStr;

use thiserror::Error;

pub use groebner::{buchberger, is_groebner, is_reduced, normal_form};
pub use hilbert::{
    bigraded_hilbert, compare_scheme_vs_character, enumerate_monomials, slow_quotient_dims,
    SchemeComparison,
};
pub use poly::{poly_text, Monomial, MultiPoly};
pub use presets::build_j;

/// Default cap on Buchberger pair reductions.
pub const DEFAULT_PAIR_BUDGET: usize = 100_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("unsupported preset")]
    UnsupportedPreset,
    #[error("generator is not bihomogeneous")]
    NotBihomogeneous,
    #[error("pair-reduction budget of {budget} exceeded")]
    BudgetExceeded { budget: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Gl1,
    Sl2,
    Gl2,
}

impl FromStr for Preset {
    type Err = OracleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "gl1" => Ok(Preset::Gl1),
            "sl2" => Ok(Preset::Sl2),
            "gl2" => Ok(Preset::Gl2),
            _ => Err(OracleError::UnsupportedPreset),
        }
    }
}

impl std::fmt::Display for Preset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Preset::Gl1 => "gl1",
            Preset::Sl2 => "sl2",
            Preset::Gl2 => "gl2",
        };
        write!(f, "{s}")
    }
}

/// Bigraded polynomial presentation of the defining ideal: named variables
/// with bidegrees, and bihomogeneous generators.
#[derive(Debug, Clone)]
pub struct IdealPresentation {
    pub var_names: Vec<String>,
    pub bidegrees: Vec<(u32, u32)>,
    pub generators: Vec<MultiPoly>,
}

impl IdealPresentation {
    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    pub fn bidegree_of(&self, m: &Monomial) -> (u32, u32) {
        let mut d = (0u32, 0u32);
        for (e, (d1, d2)) in m.0.iter().zip(&self.bidegrees) {
            d.0 += e * d1;
            d.1 += e * d2;
        }
        d
    }

    /// The bidegree shared by all terms, or an error when terms disagree.
    pub fn generator_bidegree(&self, p: &MultiPoly) -> Result<(u32, u32), OracleError> {
        let mut it = p.terms.keys();
        let first = match it.next() {
            None => return Ok((0, 0)),
            Some(m) => self.bidegree_of(m),
        };
        for m in it {
            if self.bidegree_of(m) != first {
                return Err(OracleError::NotBihomogeneous);
            }
        }
        Ok(first)
    }

    pub fn check_bihomogeneous(&self) -> Result<(), OracleError> {
        for g in &self.generators {
            self.generator_bidegree(g)?;
        }
        Ok(())
    }
}

/// A reduced Gröbner basis under degrevlex on the presentation's variable
/// order.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub basis: Vec<MultiPoly>,
}

impl GroebnerBasis {
    /// Compute from a presentation; generators must be bihomogeneous.
    pub fn compute(p: &IdealPresentation, budget: usize) -> Result<Self, OracleError> {
        p.check_bihomogeneous()?;
        let basis = buchberger(&p.generators, budget)?;
        Ok(GroebnerBasis { basis })
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .filter_map(|p| p.leading().map(|(m, _)| m.clone()))
            .collect()
    }

    /// Canonical sorted text form, used for regression artifacts.
    pub fn canonical_text(&self, names: &[String]) -> String {
        let mut lines: Vec<String> = self
            .basis
            .iter()
            .map(|p| poly_text(p, names))
            .collect();
        lines.sort();
        lines.join("\n")
    }
}
