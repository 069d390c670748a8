//! Root systems in Bourbaki orthogonal realizations and full Weyl-group
//! enumeration with lengths and signs.
//!
//! The positive system is fixed so that `R₊` is the set of torus weights of
//! `g/b`, i.e. the Borel is the negative one for the standard positive roots.
//! Under this convention the weights of `b*` are `{0 × rank} ∪ R₊`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::weightlat::{Int, Rational, Weight, WeightPoly};

/// Default cap on the Weyl group order.
pub const DEFAULT_WEYL_GUARD: usize = 100_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("unsupported family/rank: {family} rank {rank}")]
    Unsupported { family: Family, rank: usize },
    #[error("Weyl group order exceeds the guard of {guard} elements")]
    WeylGuardExceeded { guard: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    GL,
    A,
    B,
    C,
    D,
    G2,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::GL => "GL",
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G2 => "G2",
        };
        write!(f, "{s}")
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "GL" => Ok(Family::GL),
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "G2" => Ok(Family::G2),
            _ => Err(format!("unknown family `{s}` (expected GL, A, B, C, D, G2)")),
        }
    }
}

/// A Weyl group element, stored as its exact orthogonal action on the ambient
/// space together with its length and one reduced word.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeylElement {
    /// Row-major matrix; row `i` is the weight whose dot product with the
    /// argument gives coordinate `i` of the image.
    rows: Vec<Weight>,
    length: usize,
    word: Vec<usize>,
}

impl WeylElement {
    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                Weight::new(
                    (0..dim)
                        .map(|j| {
                            if i == j {
                                Rational::one()
                            } else {
                                Rational::zero()
                            }
                        })
                        .collect(),
                )
            })
            .collect();
        WeylElement {
            rows,
            length: 0,
            word: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// One reduced word in the simple reflections, as generator indices.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn sign(&self) -> Int {
        if self.length % 2 == 0 {
            Int::one()
        } else {
            -Int::one()
        }
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        Weight::new(self.rows.iter().map(|r| r.dot(w)).collect())
    }

    /// Ring automorphism of the group algebra: `e^λ ↦ e^{w(λ)}`.
    pub fn act(&self, p: &WeightPoly) -> WeightPoly {
        p.map_weights(|w| self.apply(w))
    }

    /// `self ∘ other` as transformations.
    fn compose(&self, other: &WeylElement) -> Vec<Weight> {
        let dim = self.dim();
        // (self ∘ other)(e_j) computed columnwise.
        let cols: Vec<Weight> = (0..dim)
            .map(|j| {
                let ej = Weight::new(
                    (0..dim)
                        .map(|k| {
                            if k == j {
                                Rational::one()
                            } else {
                                Rational::zero()
                            }
                        })
                        .collect(),
                );
                self.apply(&other.apply(&ej))
            })
            .collect();
        (0..dim)
            .map(|i| Weight::new((0..dim).map(|j| cols[j].coords()[i].clone()).collect()))
            .collect()
    }
}

/// A root system with eagerly enumerated, cached Weyl group.
#[derive(Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    dim: usize,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    rho: Weight,
    weyl: Vec<WeylElement>,
    /// Dual basis of the simple roots inside their span: `(α_j, dual_i) = δ_ij`.
    simple_duals: Vec<Weight>,
}

/// Result of moving a weight to the dominant chamber.
#[derive(Debug, Clone)]
pub enum DominantConjugate {
    /// Some positive-coroot pairing vanishes; the weight lies on a wall.
    Singular,
    /// `w(λ) = dominant` is strictly dominant and `w` is unique.
    Regular { w: WeylElement, dominant: Weight },
}

impl RootSystem {
    pub fn build(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        Self::build_with_guard(family, rank, DEFAULT_WEYL_GUARD)
    }

    pub fn build_with_guard(
        family: Family,
        rank: usize,
        guard: usize,
    ) -> Result<Self, RootSystemError> {
        let (dim, simple_roots, positive_roots) = match family {
            Family::GL => {
                if rank < 1 {
                    return Err(RootSystemError::Unsupported { family, rank });
                }
                (rank, type_a_simples(rank), type_a_positives(rank))
            }
            Family::A => {
                if rank < 1 {
                    return Err(RootSystemError::Unsupported { family, rank });
                }
                let n = rank + 1;
                (n, type_a_simples(n), type_a_positives(n))
            }
            Family::B => {
                if !(2..=4).contains(&rank) {
                    return Err(RootSystemError::Unsupported { family, rank });
                }
                (rank, type_b_simples(rank), type_b_positives(rank))
            }
            Family::C => {
                if !(2..=4).contains(&rank) {
                    return Err(RootSystemError::Unsupported { family, rank });
                }
                (rank, type_c_simples(rank), type_c_positives(rank))
            }
            Family::D => {
                if !(3..=4).contains(&rank) {
                    return Err(RootSystemError::Unsupported { family, rank });
                }
                (rank, type_d_simples(rank), type_d_positives(rank))
            }
            Family::G2 => {
                if rank != 2 {
                    return Err(RootSystemError::Unsupported { family, rank });
                }
                (3, g2_simples(), g2_positives())
            }
        };

        let half = Rational::new(Int::one(), Int::from(2));
        let rho = positive_roots
            .iter()
            .fold(Weight::zero(dim), |acc, r| &acc + r)
            .scaled(&half);

        let simple_duals = dual_basis(&simple_roots, dim);

        let mut rs = RootSystem {
            family,
            rank,
            dim,
            simple_roots,
            positive_roots,
            rho,
            weyl: Vec::new(),
            simple_duals,
        };
        rs.weyl = rs.enumerate_weyl(guard)?;
        Ok(rs)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the Cartan subalgebra (the zero-weight multiplicity in `b*`).
    pub fn cartan_dim(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn weyl(&self) -> &[WeylElement] {
        &self.weyl
    }

    pub fn weyl_order(&self) -> usize {
        self.weyl.len()
    }

    /// Coroot pairing `⟨λ, γ∨⟩ = 2(λ,γ)/(γ,γ)`.
    pub fn pairing(&self, lambda: &Weight, gamma: &Weight) -> Rational {
        let two = Rational::from_integer(Int::from(2));
        two * lambda.dot(gamma) / gamma.dot(gamma)
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        self.simple_roots
            .iter()
            .all(|a| !self.pairing(lambda, a).is_negative())
    }

    pub fn is_strictly_dominant(&self, lambda: &Weight) -> bool {
        self.simple_roots
            .iter()
            .all(|a| self.pairing(lambda, a).is_positive())
    }

    /// Reflection in the `i`-th simple root.
    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        let rows = (0..self.dim)
            .map(|r| {
                let er = Weight::new(
                    (0..self.dim)
                        .map(|k| {
                            if k == r {
                                Rational::one()
                            } else {
                                Rational::zero()
                            }
                        })
                        .collect(),
                );
                // row r of the reflection matrix = s(e_r) read off by symmetry
                self.reflect(i, &er)
            })
            .collect();
        WeylElement {
            rows,
            length: 1,
            word: vec![i],
        }
    }

    fn reflect(&self, i: usize, lambda: &Weight) -> Weight {
        let alpha = &self.simple_roots[i];
        let c = self.pairing(lambda, alpha);
        lambda - &alpha.scaled(&c)
    }

    /// Length from inversions: `#{γ ∈ R₊ : w(γ) ∈ −R₊}`.
    pub fn inversion_count(&self, w: &WeylElement) -> usize {
        self.positive_roots
            .iter()
            .filter(|g| self.is_negative_root(&w.apply(g)))
            .count()
    }

    fn is_negative_root(&self, w: &Weight) -> bool {
        self.positive_roots.iter().any(|g| &-g == w)
    }

    fn enumerate_weyl(&self, guard: usize) -> Result<Vec<WeylElement>, RootSystemError> {
        let id = WeylElement::identity(self.dim);
        let mut seen: HashMap<Vec<Weight>, ()> = HashMap::new();
        seen.insert(id.rows.clone(), ());
        let mut all = vec![id];
        let mut frontier: Vec<usize> = vec![0];
        let nsimple = self.simple_roots.len();
        let simples: Vec<WeylElement> =
            (0..nsimple).map(|i| self.simple_reflection(i)).collect();
        let mut len = 0usize;
        while !frontier.is_empty() {
            len += 1;
            let mut next = Vec::new();
            for &idx in &frontier {
                let w = all[idx].clone();
                for (i, s) in simples.iter().enumerate() {
                    // right multiplication keeps words lexicographically sorted
                    let rows = w.compose(s);
                    if seen.contains_key(&rows) {
                        continue;
                    }
                    seen.insert(rows.clone(), ());
                    let mut word = w.word.clone();
                    word.push(i);
                    all.push(WeylElement {
                        rows,
                        length: len,
                        word,
                    });
                    next.push(all.len() - 1);
                    if all.len() > guard {
                        return Err(RootSystemError::WeylGuardExceeded { guard });
                    }
                }
            }
            frontier = next;
        }
        Ok(all)
    }

    /// ρ-shift machinery: either detect a wall or produce the unique `w`
    /// moving `λ` to the strictly dominant chamber.
    pub fn dominant_conjugate(&self, lambda: &Weight) -> DominantConjugate {
        let mut cur = lambda.clone();
        let mut word: Vec<usize> = Vec::new();
        loop {
            let mut moved = false;
            for i in 0..self.simple_roots.len() {
                if self.pairing(&cur, &self.simple_roots[i]).is_negative() {
                    cur = self.reflect(i, &cur);
                    word.push(i);
                    moved = true;
                    break;
                }
            }
            if !moved {
                break;
            }
        }
        if self
            .positive_roots
            .iter()
            .any(|g| self.pairing(&cur, g).is_zero())
        {
            return DominantConjugate::Singular;
        }
        // w = s_{i_k} ∘ … ∘ s_{i_1}
        let mut w = WeylElement::identity(self.dim);
        for &i in &word {
            let s = self.simple_reflection(i);
            let rows = s.compose(&w);
            w = WeylElement {
                rows,
                length: 0,
                word: Vec::new(),
            };
        }
        let length = self
            .positive_roots
            .iter()
            .filter(|g| self.is_negative_root(&w.apply(g)))
            .count();
        let mut rev = word.clone();
        rev.reverse();
        w.length = length;
        w.word = rev;
        DominantConjugate::Regular {
            w,
            dominant: cur,
        }
    }

    /// Non-strict dominant representative of the W-orbit of `λ`.
    pub fn dominant_representative(&self, lambda: &Weight) -> Weight {
        let mut cur = lambda.clone();
        loop {
            let mut moved = false;
            for i in 0..self.simple_roots.len() {
                if self.pairing(&cur, &self.simple_roots[i]).is_negative() {
                    cur = self.reflect(i, &cur);
                    moved = true;
                    break;
                }
            }
            if !moved {
                return cur;
            }
        }
    }

    /// Coordinates of `y` in the simple-root basis, or `None` when `y` is not
    /// in the rational span of the simple roots.
    pub fn root_coords(&self, y: &Weight) -> Option<Vec<Rational>> {
        let coords: Vec<Rational> = self.simple_duals.iter().map(|d| y.dot(d)).collect();
        let recon = coords
            .iter()
            .zip(&self.simple_roots)
            .fold(Weight::zero(self.dim), |acc, (c, a)| &acc + &a.scaled(c));
        if &recon == y {
            Some(coords)
        } else {
            None
        }
    }

    /// `y ∈ Q₊`: a nonnegative integer combination of simple roots.
    pub fn in_positive_root_cone(&self, y: &Weight) -> bool {
        match self.root_coords(y) {
            None => false,
            Some(cs) => cs.iter().all(|c| c.is_integer() && !c.is_negative()),
        }
    }
}

fn eps(dim: usize, i: usize, c: i64) -> Weight {
    let mut v = vec![Rational::zero(); dim];
    v[i] = Rational::from_integer(Int::from(c));
    Weight::new(v)
}

fn eps2(dim: usize, i: usize, ci: i64, j: usize, cj: i64) -> Weight {
    let mut v = vec![Rational::zero(); dim];
    v[i] = Rational::from_integer(Int::from(ci));
    v[j] = Rational::from_integer(Int::from(cj));
    Weight::new(v)
}

fn type_a_simples(n: usize) -> Vec<Weight> {
    (0..n.saturating_sub(1))
        .map(|i| eps2(n, i, 1, i + 1, -1))
        .collect()
}

fn type_a_positives(n: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            out.push(eps2(n, i, 1, j, -1));
        }
    }
    out
}

fn type_b_simples(n: usize) -> Vec<Weight> {
    let mut out = type_a_simples(n);
    out.push(eps(n, n - 1, 1));
    out
}

fn type_b_positives(n: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            out.push(eps2(n, i, 1, j, -1));
            out.push(eps2(n, i, 1, j, 1));
        }
    }
    for i in 0..n {
        out.push(eps(n, i, 1));
    }
    out
}

fn type_c_simples(n: usize) -> Vec<Weight> {
    let mut out = type_a_simples(n);
    out.push(eps(n, n - 1, 2));
    out
}

fn type_c_positives(n: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            out.push(eps2(n, i, 1, j, -1));
            out.push(eps2(n, i, 1, j, 1));
        }
    }
    for i in 0..n {
        out.push(eps(n, i, 2));
    }
    out
}

fn type_d_simples(n: usize) -> Vec<Weight> {
    let mut out = type_a_simples(n);
    out.push(eps2(n, n - 2, 1, n - 1, 1));
    out
}

fn type_d_positives(n: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            out.push(eps2(n, i, 1, j, -1));
            out.push(eps2(n, i, 1, j, 1));
        }
    }
    out
}

fn g2_simples() -> Vec<Weight> {
    // Bourbaki realization in the sum-zero hyperplane of ℚ³.
    let a1 = eps2(3, 0, 1, 1, -1);
    let mut v = vec![Rational::zero(); 3];
    v[0] = Rational::from_integer(Int::from(-2));
    v[1] = Rational::one();
    v[2] = Rational::one();
    let a2 = Weight::new(v);
    vec![a1, a2]
}

fn g2_positives() -> Vec<Weight> {
    let s = g2_simples();
    let (a1, a2) = (&s[0], &s[1]);
    vec![
        a1.clone(),
        a2.clone(),
        a1 + a2,
        &(a1 + a2) + a1,
        &(&(a1 + a2) + a1) + a1,
        &(&(&(a1 + a2) + a1) + a1) + a2,
    ]
}

/// Dual basis inside the span: vectors `d_i` in span(basis) with
/// `(basis_j, d_i) = δ_ij`. Solved by inverting the Gram matrix.
fn dual_basis(basis: &[Weight], dim: usize) -> Vec<Weight> {
    let r = basis.len();
    if r == 0 {
        return Vec::new();
    }
    // Gram matrix
    let mut m: Vec<Vec<Rational>> = (0..r)
        .map(|i| (0..r).map(|j| basis[i].dot(&basis[j])).collect())
        .collect();
    // augment with identity and Gauss-Jordan
    let mut inv: Vec<Vec<Rational>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..r {
        let pivot = (col..r)
            .find(|&i| !m[i][col].is_zero())
            .expect("Gram matrix of linearly independent roots is invertible");
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col].clone();
        for j in 0..r {
            m[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for i in 0..r {
            if i == col || m[i][col].is_zero() {
                continue;
            }
            let f = m[i][col].clone();
            for j in 0..r {
                let a = &m[col][j] * &f;
                m[i][j] -= a;
                let b = &inv[col][j] * &f;
                inv[i][j] -= b;
            }
        }
    }
    (0..r)
        .map(|i| {
            (0..r)
                .zip(basis)
                .fold(Weight::zero(dim), |acc, (k, b)| &acc + &b.scaled(&inv[i][k]))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl1_is_a_torus() {
        let rs = RootSystem::build(Family::GL, 1).unwrap();
        assert_eq!(rs.dim(), 1);
        assert!(rs.positive_roots().is_empty());
        assert_eq!(rs.weyl_order(), 1);
    }

    #[test]
    fn a1_basics() {
        let rs = RootSystem::build(Family::A, 1).unwrap();
        assert_eq!(rs.positive_roots().len(), 1);
        assert_eq!(rs.weyl_order(), 2);
        let alpha = &rs.positive_roots()[0];
        assert_eq!(rs.rho(), &alpha.scaled(&Rational::new(Int::one(), Int::from(2))));
        let lengths: Vec<usize> = rs.weyl().iter().map(|w| w.length()).collect();
        assert_eq!(lengths, vec![0, 1]);
    }

    #[test]
    fn a2_lengths() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        assert_eq!(rs.positive_roots().len(), 3);
        let mut lengths: Vec<usize> = rs.weyl().iter().map(|w| w.length()).collect();
        lengths.sort();
        assert_eq!(lengths, vec![0, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn positive_root_counts() {
        for (f, n, count, worder) in [
            (Family::B, 2, 4usize, 8usize),
            (Family::C, 3, 9, 48),
            (Family::D, 3, 6, 24),
            (Family::D, 4, 12, 192),
            (Family::G2, 2, 6, 12),
            (Family::GL, 4, 6, 24),
        ] {
            let rs = RootSystem::build(f, n).unwrap();
            assert_eq!(rs.positive_roots().len(), count, "{f} {n}");
            assert_eq!(rs.weyl_order(), worder, "{f} {n}");
        }
    }

    #[test]
    fn rho_pairs_to_one_with_simples() {
        for (f, n) in [
            (Family::A, 2),
            (Family::B, 3),
            (Family::C, 2),
            (Family::D, 4),
            (Family::G2, 2),
            (Family::GL, 3),
        ] {
            let rs = RootSystem::build(f, n).unwrap();
            for a in rs.simple_roots() {
                assert_eq!(rs.pairing(rs.rho(), a), Rational::one());
            }
        }
    }

    #[test]
    fn positive_roots_are_nonneg_combinations_of_simples() {
        for (f, n) in [
            (Family::A, 3),
            (Family::B, 2),
            (Family::C, 4),
            (Family::D, 3),
            (Family::G2, 2),
        ] {
            let rs = RootSystem::build(f, n).unwrap();
            for g in rs.positive_roots() {
                assert!(rs.in_positive_root_cone(g), "{f} {n}: {g}");
            }
        }
    }

    #[test]
    fn lengths_match_inversion_counts() {
        for (f, n) in [(Family::A, 2), (Family::B, 2), (Family::G2, 2)] {
            let rs = RootSystem::build(f, n).unwrap();
            for w in rs.weyl() {
                let inv = rs
                    .positive_roots()
                    .iter()
                    .filter(|g| rs.is_negative_root(&w.apply(g)))
                    .count();
                assert_eq!(inv, w.length());
            }
        }
    }

    #[test]
    fn weyl_permutes_roots() {
        let rs = RootSystem::build(Family::B, 2).unwrap();
        for w in rs.weyl() {
            for g in rs.positive_roots() {
                let img = w.apply(g);
                let hit = rs.positive_roots().iter().any(|p| p == &img)
                    || rs.is_negative_root(&img);
                assert!(hit);
            }
        }
    }

    #[test]
    fn poincare_polynomials() {
        // Σ t^{ℓ(w)} = ∏ (1 + t + … + t^{d_i − 1}) with the classical degrees.
        let cases: Vec<(Family, usize, Vec<usize>)> = vec![
            (Family::A, 1, vec![2]),
            (Family::A, 2, vec![2, 3]),
            (Family::B, 2, vec![2, 4]),
            (Family::G2, 2, vec![2, 6]),
        ];
        for (f, n, degrees) in cases {
            let rs = RootSystem::build(f, n).unwrap();
            let max_len: usize = rs.weyl().iter().map(|w| w.length()).max().unwrap();
            let mut hist = vec![0i64; max_len + 1];
            for w in rs.weyl() {
                hist[w.length()] += 1;
            }
            let mut poly = vec![1i64];
            for d in &degrees {
                let factor = vec![1i64; *d];
                let mut out = vec![0i64; poly.len() + factor.len() - 1];
                for (i, a) in poly.iter().enumerate() {
                    for (j, b) in factor.iter().enumerate() {
                        out[i + j] += a * b;
                    }
                }
                poly = out;
            }
            assert_eq!(hist, poly, "{f} {n}");
        }
    }

    #[test]
    fn dominant_conjugate_anchors() {
        let rs = RootSystem::build(Family::A, 1).unwrap();
        let rho = rs.rho().clone();
        match rs.dominant_conjugate(&rho) {
            DominantConjugate::Regular { w, dominant } => {
                assert_eq!(w.length(), 0);
                assert_eq!(dominant, rho);
            }
            _ => panic!("rho is regular"),
        }
        match rs.dominant_conjugate(&-&rho) {
            DominantConjugate::Regular { w, dominant } => {
                assert_eq!(w.length(), 1);
                assert_eq!(dominant, rho);
            }
            _ => panic!("-rho is regular"),
        }
        assert!(matches!(
            rs.dominant_conjugate(&Weight::zero(2)),
            DominantConjugate::Singular
        ));
    }

    #[test]
    fn weyl_guard_triggers() {
        assert!(matches!(
            RootSystem::build_with_guard(Family::A, 2, 4),
            Err(RootSystemError::WeylGuardExceeded { guard: 4 })
        ));
    }

    #[test]
    fn unsupported_families_rejected() {
        assert!(RootSystem::build(Family::B, 5).is_err());
        assert!(RootSystem::build(Family::D, 2).is_err());
        assert!(RootSystem::build(Family::GL, 0).is_err());
    }

    #[test]
    fn weyl_action_on_adjoint_character_is_trivial() {
        let rs = RootSystem::build(Family::A, 1).unwrap();
        let alpha = rs.positive_roots()[0].clone();
        let p = WeightPoly::from_terms(
            2,
            vec![
                (alpha.clone(), Int::one()),
                (Weight::zero(2), Int::one()),
                (-&alpha, Int::one()),
            ],
        );
        let s = rs.simple_reflection(0);
        assert_eq!(s.act(&p), p);
        let m = WeightPoly::monomial(alpha.clone(), Int::one());
        assert_eq!(s.act(&m), WeightPoly::monomial(-&alpha, Int::one()));
        let id = WeylElement::identity(2);
        assert_eq!(id.act(&p), p);
    }
}
