//! Irreducible characters via Freudenthal's recursion, the Weyl dimension
//! formula, Bott's algorithm for Euler characteristics of line bundles on the
//! flag variety, and decomposition of honest characters into irreducibles.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rootsys::{DominantConjugate, RootSystem};
use crate::weightlat::{Int, Rational, Weight, WeightPoly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharError {
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("polynomial is not Weyl-invariant")]
    NotInvariant,
    #[error("polynomial is not a character: maximal term {0} is not dominant")]
    NotACharacter(String),
    #[error("negative multiplicity {mult} at {weight}")]
    NegativeMultiplicity { weight: String, mult: String },
}

/// Sparse integer combination of irreducible highest-weight classes `[V_μ]`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct VirtualCharacter {
    dim: usize,
    terms: BTreeMap<Weight, Int>,
}

impl VirtualCharacter {
    pub fn zero(dim: usize) -> Self {
        VirtualCharacter {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn irreducible(mu: Weight) -> Self {
        let dim = mu.dim();
        let mut terms = BTreeMap::new();
        terms.insert(mu, Int::one());
        VirtualCharacter { dim, terms }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &Int)> {
        self.terms.iter()
    }

    pub fn multiplicity(&self, mu: &Weight) -> Int {
        self.terms.get(mu).cloned().unwrap_or_else(Int::zero)
    }

    pub fn add_multiple(&mut self, mu: Weight, c: Int) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mu) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &VirtualCharacter) -> VirtualCharacter {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_multiple(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Int) -> VirtualCharacter {
        if c.is_zero() {
            return VirtualCharacter::zero(self.dim);
        }
        VirtualCharacter {
            dim: self.dim,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// All multiplicities nonnegative, i.e. the class of an honest module.
    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl fmt::Display for VirtualCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*[V{w}]")?;
        }
        Ok(())
    }
}

/// Character computations over a fixed root system, with a shared memo cache
/// for irreducible characters. Safe for concurrent use.
pub struct CharContext<'a> {
    rs: &'a RootSystem,
    irr_cache: Mutex<HashMap<Weight, Arc<WeightPoly>>>,
}

impl<'a> CharContext<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        CharContext {
            rs,
            irr_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    /// Weyl dimension formula `∏ ⟨μ+ρ, γ∨⟩ / ⟨ρ, γ∨⟩`.
    pub fn weyl_dim(&self, mu: &Weight) -> Result<Int, CharError> {
        if !self.rs.is_dominant(mu) {
            return Err(CharError::NotDominant(mu.to_string()));
        }
        let rho = self.rs.rho();
        let shifted = mu + rho;
        let mut acc = Rational::one();
        for g in self.rs.positive_roots() {
            acc *= self.rs.pairing(&shifted, g) / self.rs.pairing(rho, g);
        }
        debug_assert!(acc.is_integer());
        Ok(acc.to_integer())
    }

    /// Full weight-multiplicity character of `V_μ` by Freudenthal's recursion
    /// on dominant weights followed by Weyl-orbit expansion.
    pub fn irr_char(&self, mu: &Weight) -> Result<Arc<WeightPoly>, CharError> {
        if !self.rs.is_dominant(mu) {
            return Err(CharError::NotDominant(mu.to_string()));
        }
        if let Some(p) = self.irr_cache.lock().unwrap().get(mu) {
            return Ok(Arc::clone(p));
        }
        let mults = self.dominant_multiplicities(mu);
        let dim = self.rs.dim();
        let mut out = WeightPoly::zero(dim);
        for (nu, m) in &mults {
            let mut orbit: BTreeSet<Weight> = BTreeSet::new();
            for w in self.rs.weyl() {
                orbit.insert(w.apply(nu));
            }
            let orbit_poly =
                WeightPoly::from_terms(dim, orbit.into_iter().map(|w| (w, m.clone())));
            out = out.add(&orbit_poly).expect("same ambient dimension");
        }
        let arc = Arc::new(out);
        self.irr_cache
            .lock()
            .unwrap()
            .entry(mu.clone())
            .or_insert_with(|| Arc::clone(&arc));
        Ok(arc)
    }

    /// Is `sigma` a weight of `V_μ`, i.e. is `μ − dom(σ)` a nonnegative
    /// integer combination of simple roots?
    fn is_weight_of(&self, mu: &Weight, sigma: &Weight) -> bool {
        let rep = self.rs.dominant_representative(sigma);
        self.rs.in_positive_root_cone(&(mu - &rep))
    }

    /// Freudenthal: multiplicities of the dominant weights of `V_μ`.
    fn dominant_multiplicities(&self, mu: &Weight) -> BTreeMap<Weight, Int> {
        let rho = self.rs.rho();
        // Collect the full weight set by BFS downward from μ. Every weight
        // other than μ has some ν + γ (γ positive) still a weight, so the
        // search reaches everything.
        let mut weights: BTreeSet<Weight> = BTreeSet::new();
        let mut queue: VecDeque<Weight> = VecDeque::new();
        weights.insert(mu.clone());
        queue.push_back(mu.clone());
        while let Some(nu) = queue.pop_front() {
            for g in self.rs.positive_roots() {
                let sigma = &nu - g;
                if weights.contains(&sigma) {
                    continue;
                }
                if self.is_weight_of(mu, &sigma) {
                    weights.insert(sigma.clone());
                    queue.push_back(sigma);
                }
            }
        }
        let mut dominant: Vec<Weight> = weights
            .iter()
            .filter(|w| self.rs.is_dominant(w))
            .cloned()
            .collect();
        // Process in decreasing height so every reference in the recursion is
        // already computed.
        dominant.sort_by(|a, b| b.dot(rho).cmp(&a.dot(rho)).then_with(|| b.cmp(a)));

        let mu_rho = mu + rho;
        let top_norm = mu_rho.dot(&mu_rho);
        let mut mults: BTreeMap<Weight, Int> = BTreeMap::new();
        for nu in dominant {
            if &nu == mu {
                mults.insert(nu, Int::one());
                continue;
            }
            let mut num = Rational::zero();
            for g in self.rs.positive_roots() {
                let mut k = 1u32;
                loop {
                    let sigma = &nu + &g.scaled(&Rational::from_integer(Int::from(k)));
                    if !weights.contains(&sigma) {
                        break;
                    }
                    let rep = self.rs.dominant_representative(&sigma);
                    let m = mults.get(&rep).cloned().unwrap_or_else(Int::zero);
                    num += sigma.dot(g) * Rational::from_integer(m);
                    k += 1;
                }
            }
            let nu_rho = &nu + rho;
            let denom = &top_norm - nu_rho.dot(&nu_rho);
            debug_assert!(denom.is_positive());
            let m = Rational::from_integer(Int::from(2)) * num / denom;
            debug_assert!(m.is_integer());
            let m = m.to_integer();
            if !m.is_zero() {
                mults.insert(nu, m);
            }
        }
        mults
    }

    /// Euler characteristic of the line bundle `L_λ` on `G/B` by the ρ-shift:
    /// zero on walls, otherwise `(−1)^{ℓ(w)}·[V_{w(λ+ρ)−ρ}]`.
    pub fn bott_euler(&self, lambda: &Weight) -> VirtualCharacter {
        let shifted = lambda + self.rs.rho();
        match self.rs.dominant_conjugate(&shifted) {
            DominantConjugate::Singular => VirtualCharacter::zero(self.rs.dim()),
            DominantConjugate::Regular { w, dominant } => {
                let mu = &dominant - self.rs.rho();
                let mut vc = VirtualCharacter::zero(self.rs.dim());
                vc.add_multiple(mu, w.sign());
                vc
            }
        }
    }

    /// Expand a virtual character into the group algebra of the lattice.
    pub fn expand(&self, vc: &VirtualCharacter) -> Result<WeightPoly, CharError> {
        let mut out = WeightPoly::zero(self.rs.dim());
        for (mu, c) in vc.terms() {
            let irr = self.irr_char(mu)?;
            out = out.add(&irr.scale(c)).expect("same ambient dimension");
        }
        Ok(out)
    }

    /// Dimension of the virtual character (may be negative for virtual input).
    pub fn dimension(&self, vc: &VirtualCharacter) -> Result<Int, CharError> {
        let mut acc = Int::zero();
        for (mu, c) in vc.terms() {
            acc += c * self.weyl_dim(mu)?;
        }
        Ok(acc)
    }

    /// Representation-ring change of basis: write a W-invariant polynomial as
    /// an integer combination of irreducible characters, by iterated
    /// subtraction at a maximal dominant term.
    pub fn decompose(&self, p: &WeightPoly) -> Result<VirtualCharacter, CharError> {
        for i in 0..self.rs.simple_roots().len() {
            let s = self.rs.simple_reflection(i);
            if &s.act(p) != p {
                return Err(CharError::NotInvariant);
            }
        }
        let rho = self.rs.rho();
        let mut rest = p.clone();
        let mut out = VirtualCharacter::zero(self.rs.dim());
        while !rest.is_zero() {
            let (lam, coeff) = rest
                .terms()
                .max_by(|(w1, _), (w2, _)| w1.dot(rho).cmp(&w2.dot(rho)).then_with(|| w1.cmp(w2)))
                .map(|(w, c)| (w.clone(), c.clone()))
                .expect("nonzero polynomial has a maximal term");
            if !self.rs.is_dominant(&lam) {
                return Err(CharError::NotACharacter(lam.to_string()));
            }
            out.add_multiple(lam.clone(), coeff.clone());
            let irr = self.irr_char(&lam)?;
            rest = rest.sub(&irr.scale(&coeff)).expect("same dimension");
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;
    use crate::weightlat::RationalPoint;

    fn a1() -> RootSystem {
        RootSystem::build(Family::A, 1).unwrap()
    }

    fn omega_a1(m: i64) -> Weight {
        // m·ω = (m/2, −m/2) in the ambient realization of sl₂.
        Weight::new(vec![
            Rational::new(Int::from(m), Int::from(2)),
            Rational::new(Int::from(-m), Int::from(2)),
        ])
    }

    #[test]
    fn sl2_adjoint_character() {
        let rs = a1();
        let ctx = CharContext::new(&rs);
        let chi = ctx.irr_char(&omega_a1(2)).unwrap();
        let alpha = rs.positive_roots()[0].clone();
        assert_eq!(chi.coeff(&alpha), Int::one());
        assert_eq!(chi.coeff(&Weight::zero(2)), Int::one());
        assert_eq!(chi.coeff(&-&alpha), Int::one());
        assert_eq!(chi.num_terms(), 3);
    }

    #[test]
    fn sl2_four_dimensional() {
        let rs = a1();
        let ctx = CharContext::new(&rs);
        let chi = ctx.irr_char(&omega_a1(3)).unwrap();
        for m in [3i64, 1, -1, -3] {
            assert_eq!(chi.coeff(&omega_a1(m)), Int::one(), "m={m}");
        }
        assert_eq!(chi.num_terms(), 4);
    }

    #[test]
    fn sl3_adjoint() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let ctx = CharContext::new(&rs);
        let rho = rs.rho().clone();
        let chi = ctx.irr_char(&rho).unwrap();
        assert_eq!(chi.total(), Int::from(8));
        assert_eq!(chi.coeff(&Weight::zero(3)), Int::from(2));
        assert_eq!(ctx.weyl_dim(&rho).unwrap(), Int::from(8));
    }

    #[test]
    fn weyl_dim_anchors() {
        let rs = a1();
        let ctx = CharContext::new(&rs);
        for m in 0..6i64 {
            assert_eq!(ctx.weyl_dim(&omega_a1(m)).unwrap(), Int::from(m + 1));
        }
        assert_eq!(ctx.weyl_dim(&Weight::zero(2)).unwrap(), Int::one());
        let rs2 = RootSystem::build(Family::G2, 2).unwrap();
        let ctx2 = CharContext::new(&rs2);
        assert_eq!(ctx2.weyl_dim(&Weight::zero(3)).unwrap(), Int::one());
    }

    #[test]
    fn freudenthal_dimension_matches_weyl_dim() {
        for (f, n, mus) in [
            (Family::A, 2, vec![vec![1i64, 0, -1], vec![2, 0, -2]]),
            (Family::B, 2, vec![vec![1, 0], vec![1, 1], vec![2, 1]]),
            (Family::G2, 2, vec![vec![0, -1, 1], vec![-1, -1, 2]]),
        ] {
            let rs = RootSystem::build(f, n).unwrap();
            let ctx = CharContext::new(&rs);
            for mu in mus {
                let mu = Weight::from_ints(&mu);
                assert!(rs.is_dominant(&mu), "{f}: {mu}");
                let chi = ctx.irr_char(&mu).unwrap();
                assert_eq!(chi.total(), ctx.weyl_dim(&mu).unwrap(), "{f}: {mu}");
            }
        }
    }

    #[test]
    fn bott_projective_line() {
        let rs = a1();
        let ctx = CharContext::new(&rs);
        for m in 0..=6i64 {
            let vc = ctx.bott_euler(&omega_a1(m));
            assert_eq!(vc.multiplicity(&omega_a1(m)), Int::one(), "m={m}");
            assert_eq!(vc.terms().count(), 1);
        }
        assert!(ctx.bott_euler(&omega_a1(-1)).is_zero());
        for m in -6..=-2i64 {
            let vc = ctx.bott_euler(&omega_a1(m));
            assert_eq!(
                vc.multiplicity(&omega_a1(-m - 2)),
                -Int::one(),
                "m={m}"
            );
            assert_eq!(vc.terms().count(), 1);
        }
    }

    #[test]
    fn localization_identity_per_weight() {
        // Σ_w e^{wλ}(z) / ∏_γ (1 − e^{−wγ}(z)) = eval of the Bott expansion.
        use crate::weightlat::rat_pow;
        let cases: Vec<(Family, usize, Vec<Vec<i64>>, Vec<Vec<(i64, i64)>>)> = vec![
            (
                Family::A,
                1,
                vec![vec![1, -1], vec![2, -2], vec![0, 0], vec![3, -3]],
                vec![vec![(2, 1), (1, 1)], vec![(3, 2), (5, 7)]],
            ),
            (
                Family::A,
                2,
                vec![vec![1, 0, -1], vec![2, -1, -1], vec![1, 1, -2]],
                vec![vec![(2, 1), (3, 1), (1, 1)], vec![(5, 3), (7, 2), (1, 4)]],
            ),
        ];
        for (f, n, lambdas, points) in cases {
            let rs = RootSystem::build(f, n).unwrap();
            let ctx = CharContext::new(&rs);
            for lam in &lambdas {
                let lam = Weight::from_ints(lam);
                for pt in &points {
                    let z = RationalPoint::new(
                        pt.iter()
                            .map(|&(p, q)| Rational::new(Int::from(p), Int::from(q)))
                            .collect(),
                    )
                    .unwrap();
                    // skip non-generic points
                    if rs.positive_roots().iter().any(|g| {
                        z.eval_exp(g).unwrap() == Rational::one()
                    }) {
                        continue;
                    }
                    let mut lhs = Rational::zero();
                    for w in rs.weyl() {
                        let mut term =
                            z.eval_exp(&w.apply(&lam)).unwrap();
                        for g in rs.positive_roots() {
                            let a = z.eval_exp(&w.apply(g)).unwrap();
                            term /= Rational::one() - rat_pow(&a, &Int::from(-1));
                        }
                        lhs += term;
                    }
                    let vc = ctx.bott_euler(&lam);
                    let rhs = ctx.expand(&vc).unwrap().eval(&z).unwrap();
                    assert_eq!(lhs, rhs, "{f} λ={lam}");
                }
            }
        }
    }

    #[test]
    fn decompose_anchors() {
        let rs = a1();
        let ctx = CharContext::new(&rs);
        let alpha = rs.positive_roots()[0].clone();
        let adj = WeightPoly::from_terms(
            2,
            vec![
                (alpha.clone(), Int::one()),
                (Weight::zero(2), Int::one()),
                (-&alpha, Int::one()),
            ],
        );
        let vc = ctx.decompose(&adj).unwrap();
        assert_eq!(vc.multiplicity(&alpha), Int::one());
        assert_eq!(vc.terms().count(), 1);

        let adj_plus = adj
            .add(&WeightPoly::one(2))
            .unwrap();
        let vc2 = ctx.decompose(&adj_plus).unwrap();
        assert_eq!(vc2.multiplicity(&alpha), Int::one());
        assert_eq!(vc2.multiplicity(&Weight::zero(2)), Int::one());

        let bare = WeightPoly::monomial(alpha, Int::one());
        assert_eq!(ctx.decompose(&bare).unwrap_err(), CharError::NotInvariant);
    }

    #[test]
    fn decompose_round_trip() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let ctx = CharContext::new(&rs);
        let mut vc = VirtualCharacter::zero(3);
        vc.add_multiple(Weight::from_ints(&[1, 0, -1]), Int::from(2));
        vc.add_multiple(Weight::from_ints(&[2, 0, -2]), Int::one());
        vc.add_multiple(Weight::zero(3), Int::from(3));
        let p = ctx.expand(&vc).unwrap();
        assert_eq!(ctx.decompose(&p).unwrap(), vc);
    }
}
