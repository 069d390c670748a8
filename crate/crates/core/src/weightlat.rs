//! Weight-lattice arithmetic and the group-algebra ring of the lattice.
//!
//! A [`Weight`] is a lattice point with exact rational coordinates in a fixed
//! ambient realization. A [`WeightPoly`] is a sparse integer combination of
//! formal exponentials `e^λ`; multiplication is convolution,
//! `e^λ · e^μ = e^{λ+μ}`. Everything is immutable after construction.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Int = BigInt;
pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("non-integral exponent {0} encountered during evaluation")]
    NonIntegralExponent(String),
    #[error("evaluation point must have all coordinates nonzero")]
    ZeroCoordinate,
}

/// A point of the ambient weight space, with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Weight(vec![Rational::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(
            coords
                .iter()
                .map(|&c| Rational::from_integer(Int::from(c)))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// True when every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// Euclidean inner product of the ambient realization.
    pub fn dot(&self, other: &Weight) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a * b)
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn scaled(&self, c: &Rational) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An evaluation point: one exact nonzero rational per ambient coordinate,
/// the value of the coordinate exponential `e^{ε_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint(Vec<Rational>);

impl RationalPoint {
    pub fn new(values: Vec<Rational>) -> Result<Self, LatticeError> {
        if values.iter().any(Zero::is_zero) {
            return Err(LatticeError::ZeroCoordinate);
        }
        Ok(RationalPoint(values))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    /// Value of `e^λ` at this point: `∏ z_i^{λ_i}`. Exponents must be
    /// integral; anything else signals a programming error upstream.
    pub fn eval_exp(&self, w: &Weight) -> Result<Rational, LatticeError> {
        if self.dim() != w.dim() {
            return Err(LatticeError::DimMismatch(self.dim(), w.dim()));
        }
        let mut acc = Rational::one();
        for (z, e) in self.0.iter().zip(w.coords()) {
            if !e.is_integer() {
                return Err(LatticeError::NonIntegralExponent(e.to_string()));
            }
            acc *= rat_pow(z, &e.to_integer());
        }
        Ok(acc)
    }
}

/// `base^exp` for an exact rational base and a (possibly negative) integer
/// exponent.
pub fn rat_pow(base: &Rational, exp: &Int) -> Rational {
    let mut e = exp.magnitude().clone();
    let mut acc = Rational::one();
    let mut b = if exp.is_negative() {
        base.recip()
    } else {
        base.clone()
    };
    while !e.is_zero() {
        if e.bit(0) {
            acc *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    acc
}

/// Sparse integer combination of exponentials of lattice points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightPoly {
    dim: usize,
    terms: BTreeMap<Weight, Int>,
}

impl WeightPoly {
    pub fn zero(dim: usize) -> Self {
        WeightPoly {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative unit `e^0`.
    pub fn one(dim: usize) -> Self {
        Self::monomial(Weight::zero(dim), Int::one())
    }

    pub fn monomial(w: Weight, c: Int) -> Self {
        let dim = w.dim();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        WeightPoly { dim, terms }
    }

    pub fn from_terms<I>(dim: usize, iter: I) -> Self
    where
        I: IntoIterator<Item = (Weight, Int)>,
    {
        let mut p = WeightPoly::zero(dim);
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &Int)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Weight) -> Int {
        self.terms.get(w).cloned().unwrap_or_else(Int::zero)
    }

    fn add_term(&mut self, w: Weight, c: Int) {
        debug_assert_eq!(w.dim(), self.dim);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
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

    pub fn add(&self, other: &WeightPoly) -> Result<WeightPoly, LatticeError> {
        if self.dim != other.dim {
            return Err(LatticeError::DimMismatch(self.dim, other.dim));
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &WeightPoly) -> Result<WeightPoly, LatticeError> {
        if self.dim != other.dim {
            return Err(LatticeError::DimMismatch(self.dim, other.dim));
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        Ok(out)
    }

    /// Convolution product, `e^λ · e^μ = e^{λ+μ}`.
    pub fn mul(&self, other: &WeightPoly) -> Result<WeightPoly, LatticeError> {
        if self.dim != other.dim {
            return Err(LatticeError::DimMismatch(self.dim, other.dim));
        }
        let mut out = WeightPoly::zero(self.dim);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1 + w2, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Int) -> WeightPoly {
        if c.is_zero() {
            return WeightPoly::zero(self.dim);
        }
        WeightPoly {
            dim: self.dim,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Apply a map on weights to every exponent. Used for the Weyl action;
    /// the map is expected to be injective on the occurring exponents.
    pub fn map_weights<F>(&self, f: F) -> WeightPoly
    where
        F: Fn(&Weight) -> Weight,
    {
        let mut out = WeightPoly::zero(self.dim);
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }

    /// Specialization `e^{ε_i} ↦ z_i`; rejects non-integral exponents.
    pub fn eval(&self, z: &RationalPoint) -> Result<Rational, LatticeError> {
        if z.dim() != self.dim {
            return Err(LatticeError::DimMismatch(self.dim, z.dim()));
        }
        let mut acc = Rational::zero();
        for (w, c) in &self.terms {
            acc += z.eval_exp(w)? * Rational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// Sum of coefficients, i.e. evaluation at the identity of the torus.
    pub fn total(&self) -> Int {
        self.terms.values().fold(Int::zero(), |acc, c| acc + c)
    }
}

impl fmt::Display for WeightPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*e^{w}")?;
        }
        Ok(())
    }
}
