//! Bigraded Hilbert functions: staircase counting against a Gröbner basis,
//! the slow per-bidegree linear-algebra oracle, and the comparison table
//! against the character engine's dimension series.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::weightlat::{Int, Rational};

use super::poly::Monomial;
use super::{GroebnerBasis, IdealPresentation};

/// All monomials in the given variables of exact bidegree `(i, j)`.
pub fn enumerate_monomials(bidegrees: &[(u32, u32)], i: u32, j: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; bidegrees.len()];
    rec(bidegrees, 0, i, j, &mut exps, &mut out);
    out
}

fn rec(
    bidegrees: &[(u32, u32)],
    v: usize,
    rem_i: u32,
    rem_j: u32,
    exps: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if v == bidegrees.len() {
        if rem_i == 0 && rem_j == 0 {
            out.push(Monomial(exps.clone()));
        }
        return;
    }
    let (d1, d2) = bidegrees[v];
    let mut e = 0u32;
    loop {
        let used_i = e * d1;
        let used_j = e * d2;
        if used_i > rem_i || used_j > rem_j {
            break;
        }
        exps[v] = e;
        rec(bidegrees, v + 1, rem_i - used_i, rem_j - used_j, exps, out);
        if d1 == 0 && d2 == 0 {
            break; // degree-(0,0) variables would loop forever
        }
        e += 1;
    }
    exps[v] = 0;
}

/// Staircase count: monomials of each bidegree in the box not divisible by
/// any leading monomial of the basis. The multigraded Hilbert function of a
/// bihomogeneous ideal equals that of its leading-term ideal.
pub fn bigraded_hilbert(
    gb: &GroebnerBasis,
    pres: &IdealPresentation,
    i_max: u32,
    j_max: u32,
) -> BTreeMap<(u32, u32), usize> {
    let leads = gb.leading_monomials();
    let mut out = BTreeMap::new();
    for i in 0..=i_max {
        for j in 0..=j_max {
            let count = enumerate_monomials(&pres.bidegrees, i, j)
                .into_iter()
                .filter(|m| !leads.iter().any(|l| l.divides(m)))
                .count();
            out.insert((i, j), count);
        }
    }
    out
}

/// Independent slow oracle: dimension of the quotient in each bidegree by
/// exact row reduction of the generator multiples, never touching the
/// Gröbner machinery.
pub fn slow_quotient_dims(
    pres: &IdealPresentation,
    i_max: u32,
    j_max: u32,
) -> BTreeMap<(u32, u32), usize> {
    let mut out = BTreeMap::new();
    let gen_degs: Vec<(u32, u32)> = pres
        .generators
        .iter()
        .map(|g| pres.generator_bidegree(g).expect("bihomogeneous"))
        .collect();
    for i in 0..=i_max {
        for j in 0..=j_max {
            let ambient = enumerate_monomials(&pres.bidegrees, i, j);
            let index: BTreeMap<&Monomial, usize> =
                ambient.iter().enumerate().map(|(k, m)| (m, k)).collect();
            let mut rows: Vec<Vec<Rational>> = Vec::new();
            for (g, &(a, b)) in pres.generators.iter().zip(&gen_degs) {
                if a > i || b > j {
                    continue;
                }
                for m in enumerate_monomials(&pres.bidegrees, i - a, j - b) {
                    let prod = g.mul_term(&m, &Rational::from_integer(Int::from(1)));
                    let mut row = vec![Rational::zero(); ambient.len()];
                    for (mm, c) in &prod.terms {
                        row[*index.get(mm).expect("bidegree bookkeeping")] = c.clone();
                    }
                    rows.push(row);
                }
            }
            let rank = row_rank(rows);
            out.insert((i, j), ambient.len() - rank);
        }
    }
    out
}

fn row_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0usize;
    for col in 0..ncols {
        let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let pv = rows[rank][col].clone();
        for r in (rank + 1)..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let f = &rows[r][col] / &pv;
            for c in col..ncols {
                let sub = &rows[rank][c] * &f;
                rows[r][c] -= sub;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// One row of the scheme-vs-character table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonRow {
    pub i: u32,
    pub j: u32,
    pub scheme_dim: usize,
    pub xnorm_dim: Int,
    pub gap: Int,
}

/// Tabulated comparison between the scheme's Hilbert function and the
/// character engine's dimension series. The two bound the reduced variety in
/// no uniform order; the table records both and flags the first divergence.
#[derive(Debug, Clone)]
pub struct SchemeComparison {
    pub rows: Vec<ComparisonRow>,
    pub first_divergence: Option<(u32, u32)>,
}

impl SchemeComparison {
    pub fn all_equal(&self) -> bool {
        self.first_divergence.is_none()
    }
}

pub fn compare_scheme_vs_character(
    hilb: &BTreeMap<(u32, u32), usize>,
    dims: &BTreeMap<(usize, usize), Int>,
) -> SchemeComparison {
    let mut rows = Vec::new();
    let mut first_divergence = None;
    for (&(i, j), &scheme) in hilb {
        let xnorm = dims
            .get(&(i as usize, j as usize))
            .cloned()
            .unwrap_or_else(Int::zero);
        let gap = Int::from(scheme as i64) - &xnorm;
        if !gap.is_zero() && first_divergence.is_none() {
            first_divergence = Some((i, j));
        }
        rows.push(ComparisonRow {
            i,
            j,
            scheme_dim: scheme,
            xnorm_dim: xnorm,
            gap,
        });
    }
    assert!(
        rows.iter()
            .find(|r| (r.i, r.j) == (0, 0))
            .map(|r| r.gap.is_zero())
            .unwrap_or(true),
        "scheme and character must agree at (0,0)"
    );
    SchemeComparison {
        rows,
        first_divergence,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schemeoracle::{build_j, GroebnerBasis, MultiPoly, Preset};

    #[test]
    fn gl1_hilbert_is_all_ones() {
        let pres = build_j(Preset::Gl1).unwrap();
        let gb = GroebnerBasis::compute(&pres, 10_000).unwrap();
        let h = bigraded_hilbert(&gb, &pres, 3, 3);
        for i in 0..=3u32 {
            for j in 0..=3u32 {
                assert_eq!(h.get(&(i, j)), Some(&1usize), "({i},{j})");
            }
        }
    }

    #[test]
    fn monomial_ideal_staircase() {
        // ideal (u·v) with u of bidegree (1,0), v of (0,1)
        let pres = IdealPresentation {
            var_names: vec!["u".into(), "v".into()],
            bidegrees: vec![(1, 0), (0, 1)],
            generators: vec![MultiPoly::term(
                Monomial(vec![1, 1]),
                Rational::from_integer(Int::from(1)),
            )],
        };
        let gb = GroebnerBasis::compute(&pres, 100).unwrap();
        let h = bigraded_hilbert(&gb, &pres, 3, 3);
        for i in 0..=3u32 {
            for j in 0..=3u32 {
                let expect = if i == 0 || j == 0 { 1 } else { 0 };
                assert_eq!(h.get(&(i, j)), Some(&expect), "({i},{j})");
            }
        }
    }

    #[test]
    fn sl2_bidegree_1_1_is_twelve() {
        let pres = build_j(Preset::Sl2).unwrap();
        let gb = GroebnerBasis::compute(&pres, 100_000).unwrap();
        let h = bigraded_hilbert(&gb, &pres, 1, 1);
        // ambient (1,1) has dim 16; minus 3 commutator entries and 1 trace
        assert_eq!(h.get(&(1, 1)), Some(&12usize));
        assert_eq!(h.get(&(1, 0)), Some(&4usize));
        assert_eq!(h.get(&(0, 1)), Some(&4usize));
        assert_eq!(h.get(&(0, 0)), Some(&1usize));
    }

    #[test]
    fn slow_oracle_agrees_with_staircase() {
        for preset in [Preset::Gl1, Preset::Sl2] {
            let pres = build_j(preset).unwrap();
            let gb = GroebnerBasis::compute(&pres, 100_000).unwrap();
            let fast = bigraded_hilbert(&gb, &pres, 3, 3);
            let slow = slow_quotient_dims(&pres, 3, 3);
            assert_eq!(fast, slow, "{preset}");
        }
    }

    #[test]
    fn hilbert_monotone_under_fault_injection() {
        // adding an extra generator can only shrink the Hilbert function
        let pres = build_j(Preset::Sl2).unwrap();
        let gb = GroebnerBasis::compute(&pres, 100_000).unwrap();
        let base = bigraded_hilbert(&gb, &pres, 2, 2);
        let mut bigger = pres.clone();
        // inject a² as an extra (2,0) generator
        bigger.generators.push(MultiPoly::term(
            Monomial(vec![2, 0, 0, 0, 0, 0, 0, 0]),
            Rational::from_integer(Int::from(1)),
        ));
        let gb2 = GroebnerBasis::compute(&bigger, 100_000).unwrap();
        let shrunk = bigraded_hilbert(&gb2, &bigger, 2, 2);
        for (k, v) in &base {
            assert!(shrunk.get(k).unwrap() <= v, "{k:?}");
        }
        assert!(shrunk.values().sum::<usize>() < base.values().sum::<usize>());
    }
}
