//! Algorithm A: the truncated bigraded character of the coordinate ring of
//! the normalized isospectral commuting variety, computed bidegree by
//! bidegree as an alternating sum of Euler characteristics of the induced
//! bundles `Sym^k b* ⊗ Sym^m b* ⊗ ∧^n [b,b]*` on the flag variety.
//!
//! Each coefficient of `q₁^i q₂^j` receives the finitely many contributions
//! with `k + n = i`, `m + n = j`, so every stored coefficient is exact.

use std::collections::BTreeMap;

use num_traits::Signed;
use rayon::prelude::*;

use crate::charalg::{CharContext, CharError, VirtualCharacter};
use crate::rootsys::RootSystem;
use crate::weightlat::{Int, Weight, WeightPoly};
use crate::CONVENTION_TAG;

/// Weights of `b*` and of `[b,b]*` under the fixed convention: the zero
/// weight with multiplicity rank, plus the positive roots.
#[derive(Debug, Clone)]
pub struct BorelWeightData {
    pub b_star: Vec<Weight>,
    pub nil_star: Vec<Weight>,
}

impl BorelWeightData {
    pub fn new(rs: &RootSystem) -> Self {
        let mut b_star = vec![Weight::zero(rs.dim()); rs.cartan_dim()];
        b_star.extend(rs.positive_roots().iter().cloned());
        BorelWeightData {
            b_star,
            nil_star: rs.positive_roots().to_vec(),
        }
    }
}

/// `[Sym^0 S, Sym^1 S, …, Sym^max S]` as characters, by iterated truncated
/// multiplication of the geometric series `1/(1 − q e^λ)`.
pub fn sym_powers(dim: usize, weights: &[Weight], max_deg: usize) -> Vec<WeightPoly> {
    let mut s: Vec<WeightPoly> = Vec::with_capacity(max_deg + 1);
    s.push(WeightPoly::one(dim));
    for _ in 0..max_deg {
        s.push(WeightPoly::zero(dim));
    }
    for lam in weights {
        let e = WeightPoly::monomial(lam.clone(), Int::from(1));
        for d in 1..=max_deg {
            let shifted = e.mul(&s[d - 1]).expect("same dimension");
            s[d] = s[d].add(&shifted).expect("same dimension");
        }
    }
    s
}

/// `[∧^0 S, …, ∧^{|S|} S]` as characters (elementary-symmetric expansion).
pub fn wedge_powers(dim: usize, weights: &[Weight]) -> Vec<WeightPoly> {
    let n = weights.len();
    let mut e: Vec<WeightPoly> = Vec::with_capacity(n + 1);
    e.push(WeightPoly::one(dim));
    for _ in 0..n {
        e.push(WeightPoly::zero(dim));
    }
    for lam in weights {
        let m = WeightPoly::monomial(lam.clone(), Int::from(1));
        for d in (1..=n).rev() {
            let shifted = m.mul(&e[d - 1]).expect("same dimension");
            e[d] = e[d].add(&shifted).expect("same dimension");
        }
    }
    e
}

/// T-character of `Sym^k b* ⊗ Sym^m b* ⊗ ∧^n [b,b]*`.
pub fn graded_piece_weights(
    rs: &RootSystem,
    data: &BorelWeightData,
    k: usize,
    m: usize,
    n: usize,
) -> WeightPoly {
    let dim = rs.dim();
    let deg = k.max(m);
    let sym = sym_powers(dim, &data.b_star, deg);
    let wedge = wedge_powers(dim, &data.nil_star);
    sym[k]
        .mul(&sym[m])
        .and_then(|p| p.mul(&wedge[n]))
        .expect("same dimension")
}

/// The coefficient map `(i,j) ↦ [coefficient of q₁^i q₂^j]` of the bigraded
/// character, with its provenance metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedCharacter {
    pub family: String,
    pub rank: usize,
    pub i_max: usize,
    pub j_max: usize,
    pub convention: String,
    pub coeffs: BTreeMap<(usize, usize), VirtualCharacter>,
}

impl BigradedCharacter {
    pub fn coeff(&self, i: usize, j: usize) -> Option<&VirtualCharacter> {
        self.coeffs.get(&(i, j))
    }
}

/// Algorithm A over the full bidegree box `[0,I] × [0,J]`. Bidegrees are
/// independent and computed in parallel with a deterministic merge.
pub fn hc_bigraded_character(
    ctx: &CharContext<'_>,
    i_max: usize,
    j_max: usize,
) -> Result<BigradedCharacter, CharError> {
    let rs = ctx.root_system();
    let dim = rs.dim();
    let data = BorelWeightData::new(rs);
    let max_sym = i_max.max(j_max);
    let sym = sym_powers(dim, &data.b_star, max_sym);
    let wedge = wedge_powers(dim, &data.nil_star);
    let nroots = data.nil_star.len();

    let cells: Vec<(usize, usize)> = (0..=i_max)
        .flat_map(|i| (0..=j_max).map(move |j| (i, j)))
        .collect();

    let computed: Result<Vec<((usize, usize), VirtualCharacter)>, CharError> = cells
        .par_iter()
        .map(|&(i, j)| {
            let mut vc = VirtualCharacter::zero(dim);
            for n in 0..=i.min(j).min(nroots) {
                let piece = sym[i - n]
                    .mul(&sym[j - n])
                    .and_then(|p| p.mul(&wedge[n]))
                    .expect("same dimension");
                let sign = if n % 2 == 0 { Int::from(1) } else { Int::from(-1) };
                for (lam, mult) in piece.terms() {
                    let euler = ctx.bott_euler(lam);
                    for (mu, c) in euler.terms() {
                        vc.add_multiple(mu.clone(), c * mult * &sign);
                    }
                }
            }
            Ok(((i, j), vc))
        })
        .collect();

    let coeffs: BTreeMap<(usize, usize), VirtualCharacter> = computed?.into_iter().collect();
    Ok(BigradedCharacter {
        family: rs.family().to_string(),
        rank: rs.rank(),
        i_max,
        j_max,
        convention: CONVENTION_TAG.to_string(),
        coeffs,
    })
}

/// Per-bidegree dimensions `Σ c_μ · dim V_μ`. Fails on any negative
/// multiplicity, which would contradict the character being that of an
/// honest module.
pub fn dimension_series(
    ctx: &CharContext<'_>,
    bc: &BigradedCharacter,
) -> Result<BTreeMap<(usize, usize), Int>, CharError> {
    let mut out = BTreeMap::new();
    for (&(i, j), vc) in &bc.coeffs {
        for (mu, c) in vc.terms() {
            if c.is_negative() {
                return Err(CharError::NegativeMultiplicity {
                    weight: mu.to_string(),
                    mult: c.to_string(),
                });
            }
        }
        out.insert((i, j), ctx.dimension(vc)?);
    }
    Ok(out)
}
