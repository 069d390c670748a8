//! Algorithm B: direct fixed-point localization. The closed Weyl-sum rational
//! expression for the bigraded character is evaluated at a generic rational
//! point of the torus and expanded as an exact bivariate power series in
//! `(q₁, q₂)` over the truncation box. Used to cross-validate Algorithm A.
//!
//! Two modes are exposed. `Printed` reproduces the closed formula verbatim,
//! with products only over the positive roots. `Corrected` additionally
//! multiplies by the Cartan factor `1/((1−q₁)^rank (1−q₂)^rank)` coming from
//! the rank-many zero weights of `b*`; this is the mode that matches
//! Algorithm A. The two differ exactly by that factor, which is exhibited,
//! not silently patched.

use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::bichar::BigradedCharacter;
use crate::charalg::{CharContext, CharError};
use crate::rootsys::RootSystem;
use crate::weightlat::{rat_pow, Int, LatticeError, Rational, RationalPoint};

#[derive(Debug, Error)]
pub enum LocalizeError {
    #[error("point is not generic: some root character evaluates to 1")]
    NonGenericPoint,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error("box mismatch: series truncated to ({0},{1}), requested ({2},{3})")]
    BoxMismatch(usize, usize, usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalizationMode {
    Corrected,
    Printed,
}

impl fmt::Display for LocalizationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalizationMode::Corrected => write!(f, "corrected"),
            LocalizationMode::Printed => write!(f, "printed"),
        }
    }
}

/// Truncated power series Σ c_{ij} q₁^i q₂^j with exact rational
/// coefficients, obtained by specializing the localization formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizedSeries {
    pub point: RationalPoint,
    pub mode: LocalizationMode,
    pub i_max: usize,
    pub j_max: usize,
    /// Row-major: `coeffs[i][j]` is the coefficient of `q₁^i q₂^j`.
    pub coeffs: Vec<Vec<Rational>>,
}

impl LocalizedSeries {
    pub fn coeff(&self, i: usize, j: usize) -> &Rational {
        &self.coeffs[i][j]
    }
}

/// A point is generic when no root character evaluates to 1, so every
/// denominator factor `1 − e^{−wγ}(z)` is nonzero.
pub fn is_generic(rs: &RootSystem, z: &RationalPoint) -> bool {
    rs.positive_roots().iter().all(|g| {
        z.eval_exp(g)
            .map(|v| v != Rational::one())
            .unwrap_or(false)
    })
}

fn zero_box(i_max: usize, j_max: usize) -> Vec<Vec<Rational>> {
    vec![vec![Rational::zero(); j_max + 1]; i_max + 1]
}

/// Multiply a truncated series in place by `1/(1 − q₁·a)`.
fn mul_geom_q1(c: &mut [Vec<Rational>], a: &Rational) {
    for i in 1..c.len() {
        for j in 0..c[i].len() {
            let add = &c[i - 1][j] * a;
            c[i][j] += add;
        }
    }
}

/// Multiply a truncated series in place by `1/(1 − q₂·a)`.
fn mul_geom_q2(c: &mut [Vec<Rational>], a: &Rational) {
    for i in 0..c.len() {
        for j in 1..c[i].len() {
            let add = &c[i][j - 1] * a;
            c[i][j] += add;
        }
    }
}

/// Multiply a truncated series in place by `(1 − q₁q₂·a)`.
fn mul_factor_q1q2(c: &mut Vec<Vec<Rational>>, a: &Rational) {
    for i in (1..c.len()).rev() {
        for j in (1..c[i].len()).rev() {
            let sub = &c[i - 1][j - 1] * a;
            c[i][j] -= sub;
        }
    }
}

/// Expand the Weyl-sum expression at a generic point over the truncation box.
pub fn localized_series(
    rs: &RootSystem,
    z: &RationalPoint,
    i_max: usize,
    j_max: usize,
    mode: LocalizationMode,
) -> Result<LocalizedSeries, LocalizeError> {
    if !is_generic(rs, z) {
        return Err(LocalizeError::NonGenericPoint);
    }
    // Weyl summands are independent; exact rational addition is associative,
    // so the parallel reduction is order-irrelevant.
    let summands: Result<Vec<Vec<Vec<Rational>>>, LocalizeError> = rs
        .weyl()
        .par_iter()
        .map(|w| {
            let root_values: Vec<Rational> = rs
                .positive_roots()
                .iter()
                .map(|g| z.eval_exp(&w.apply(g)))
                .collect::<Result<_, _>>()?;
            // fixed-point scalar 1/∏(1 − e^{−wγ}(z)); summed over W this
            // collapses to 1 at (0,0)
            let mut scalar = Rational::one();
            for a in &root_values {
                scalar /= Rational::one() - rat_pow(a, &Int::from(-1));
            }
            let mut c = zero_box(i_max, j_max);
            c[0][0] = scalar;
            for a in &root_values {
                mul_factor_q1q2(&mut c, a);
            }
            for a in &root_values {
                mul_geom_q1(&mut c, a);
                mul_geom_q2(&mut c, a);
            }
            Ok(c)
        })
        .collect();
    let mut total = zero_box(i_max, j_max);
    for s in summands? {
        for i in 0..=i_max {
            for j in 0..=j_max {
                total[i][j] += &s[i][j];
            }
        }
    }
    if mode == LocalizationMode::Corrected {
        let one = Rational::one();
        for _ in 0..rs.cartan_dim() {
            mul_geom_q1(&mut total, &one);
            mul_geom_q2(&mut total, &one);
        }
    }
    Ok(LocalizedSeries {
        point: z.clone(),
        mode,
        i_max,
        j_max,
        coeffs: total,
    })
}

/// Reproducible generic points: small-height rationals with rejection
/// sampling against [`is_generic`].
pub fn sample_generic_points(rs: &RootSystem, seed: u64, count: usize) -> Vec<RationalPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let values: Vec<Rational> = (0..rs.dim())
            .map(|_| {
                let num: i64 = rng.gen_range(1..=16);
                let den: i64 = rng.gen_range(1..=16);
                Rational::new(Int::from(num), Int::from(den))
            })
            .collect();
        if let Ok(z) = RationalPoint::new(values) {
            if is_generic(rs, &z) {
                out.push(z);
            }
        }
    }
    out
}

/// One disagreement between the two algorithms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub point_index: usize,
    pub i: usize,
    pub j: usize,
    pub character_value: Rational,
    pub localized_value: Rational,
}

/// Result of comparing Algorithm A against localization at a set of points.
/// An empty mismatch list is a pass.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub mismatches: Vec<Mismatch>,
    pub points_checked: usize,
    pub cells_checked: usize,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Evaluate every coefficient of Algorithm A at every supplied generic point
/// and compare with the corrected localization series, exactly.
pub fn cross_validate(
    ctx: &CharContext<'_>,
    bc: &BigradedCharacter,
    points: &[RationalPoint],
) -> Result<ValidationReport, LocalizeError> {
    cross_validate_mode(ctx, bc, points, LocalizationMode::Corrected)
}

/// Same as [`cross_validate`] but against an explicit mode. Printed mode is
/// expected to mismatch wherever the Cartan factor matters; exposing it keeps
/// the discrepancy of the closed formula an observable artifact.
pub fn cross_validate_mode(
    ctx: &CharContext<'_>,
    bc: &BigradedCharacter,
    points: &[RationalPoint],
    mode: LocalizationMode,
) -> Result<ValidationReport, LocalizeError> {
    let rs = ctx.root_system();
    let mut report = ValidationReport::default();
    for (pi, z) in points.iter().enumerate() {
        let series = localized_series(rs, z, bc.i_max, bc.j_max, mode)?;
        for (&(i, j), vc) in &bc.coeffs {
            let expanded = ctx.expand(vc)?;
            let av = expanded.eval(z)?;
            let bv = series.coeff(i, j).clone();
            report.cells_checked += 1;
            if av != bv {
                report.mismatches.push(Mismatch {
                    point_index: pi,
                    i,
                    j,
                    character_value: av,
                    localized_value: bv,
                });
            }
        }
        report.points_checked += 1;
    }
    Ok(report)
}
