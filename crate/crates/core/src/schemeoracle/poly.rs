//! Sparse multivariate polynomials over exact rationals, with the
//! graded-reverse-lexicographic order baked into the monomial type.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::weightlat::{Int, Rational};

/// Exponent vector of fixed arity; ordered by degrevlex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial(
            other
                .0
                .iter()
                .zip(&self.0)
                .map(|(b, a)| b - a)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Graded reverse lexicographic: compare total degree first; on ties the
/// monomial with the smaller exponent in the last differing variable is the
/// larger one.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for k in (0..self.0.len()).rev() {
            match self.0[k].cmp(&other.0[k]) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial; the terms map is keyed by degrevlex order, so the last
/// entry is the leading term.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    pub nvars: usize,
    pub terms: BTreeMap<Monomial, Rational>,
}

impl Default for MultiPoly {
    fn default() -> Self {
        MultiPoly::zero(0)
    }
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(nvars), c);
        }
        MultiPoly { nvars, terms }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        MultiPoly::term(Monomial::var(nvars, i), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let nvars = m.0.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { nvars, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m0, c0)| (m0.mul(m), c0 * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> MultiPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => self.scale(&lc.recip()),
        }
    }

    /// Clear denominators and remove integer content; leading coefficient
    /// made positive. Canonical integral representative used for text output.
    pub fn primitive_integral(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = Int::one();
        for c in self.terms.values() {
            denom_lcm = lcm_int(&denom_lcm, c.denom());
        }
        let scaled: Vec<(Monomial, Int)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let v = c * Rational::from_integer(denom_lcm.clone());
                debug_assert!(v.is_integer());
                (m.clone(), v.to_integer())
            })
            .collect();
        let mut content = Int::zero();
        for (_, c) in &scaled {
            content = gcd_int(&content, c);
        }
        let lead_sign = scaled
            .iter()
            .max_by(|(m1, _), (m2, _)| m1.cmp(m2))
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false);
        if lead_sign {
            content = -content;
        }
        MultiPoly {
            nvars: self.nvars,
            terms: scaled
                .into_iter()
                .map(|(m, c)| (m, Rational::from_integer(&c / &content)))
                .collect(),
        }
    }

    /// Substitute each variable by a polynomial (used by invariance checks).
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        let nvars = images
            .first()
            .map(|p| p.nvars)
            .unwrap_or(self.nvars);
        let mut out = MultiPoly::zero(nvars);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(nvars, c.clone());
            for (i, e) in m.0.iter().enumerate() {
                for _ in 0..*e {
                    t = t.mul(&images[i]);
                }
            }
            out = out.add(&t);
        }
        out
    }
}

fn gcd_int(a: &Int, b: &Int) -> Int {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn lcm_int(a: &Int, b: &Int) -> Int {
    if a.is_zero() || b.is_zero() {
        return Int::zero();
    }
    (a * b).abs() / gcd_int(a, b)
}

/// Canonical text form against a variable-name list: terms in descending
/// degrevlex, integral primitive coefficients.
pub fn poly_text(p: &MultiPoly, names: &[String]) -> String {
    let p = p.primitive_integral();
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (m, c) in p.terms.iter().rev() {
        let mut factors = Vec::new();
        for (i, e) in m.0.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(names[i].clone()),
                _ => factors.push(format!("{}^{}", names[i], e)),
            }
        }
        let c = c.to_integer();
        let mag = c.abs();
        let body = if factors.is_empty() {
            mag.to_string()
        } else if mag.is_one() {
            factors.join("*")
        } else {
            format!("{}*{}", mag, factors.join("*"))
        };
        if parts.is_empty() {
            if c.is_negative() {
                parts.push(format!("-{body}"));
            } else {
                parts.push(body);
            }
        } else if c.is_negative() {
            parts.push(format!("- {body}"));
        } else {
            parts.push(format!("+ {body}"));
        }
    }
    parts.join(" ")
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", poly_text(self, &names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(Int::from(n), Int::from(d))
    }

    #[test]
    fn degrevlex_ordering() {
        // with variables (x, y, z): x > y > z, x*y > z^2? deg 2 both:
        // xy = (1,1,0), z² = (0,0,2); last differing index 2: xy has smaller
        // exponent there, so xy > z².
        let xy = Monomial(vec![1, 1, 0]);
        let zz = Monomial(vec![0, 0, 2]);
        assert!(xy > zz);
        let x = Monomial(vec![1, 0, 0]);
        let y = Monomial(vec![0, 1, 0]);
        let z = Monomial(vec![0, 0, 1]);
        assert!(x > y && y > z);
        let x2 = Monomial(vec![2, 0, 0]);
        assert!(x2 > xy);
    }

    #[test]
    fn leading_term_is_last() {
        let mut p = MultiPoly::zero(2);
        p.add_term(Monomial(vec![1, 0]), rat(2, 1));
        p.add_term(Monomial(vec![0, 2]), rat(1, 1));
        let (lm, lc) = p.leading().unwrap();
        assert_eq!(lm, &Monomial(vec![0, 2]));
        assert_eq!(lc, &rat(1, 1));
    }

    #[test]
    fn primitive_integral_normalizes() {
        let mut p = MultiPoly::zero(1);
        p.add_term(Monomial(vec![2]), rat(-2, 3));
        p.add_term(Monomial(vec![0]), rat(4, 3));
        let q = p.primitive_integral();
        assert_eq!(q.terms.get(&Monomial(vec![2])).unwrap(), &rat(1, 1));
        assert_eq!(q.terms.get(&Monomial(vec![0])).unwrap(), &rat(-2, 1));
    }

    #[test]
    fn text_rendering() {
        let names = vec!["u".to_string(), "v".to_string()];
        let mut p = MultiPoly::zero(2);
        p.add_term(Monomial(vec![2, 0]), rat(1, 1));
        p.add_term(Monomial(vec![0, 1]), rat(-3, 1));
        assert_eq!(poly_text(&p, &names), "u^2 - 3*v");
    }
}
