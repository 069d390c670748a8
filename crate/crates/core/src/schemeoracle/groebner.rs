//! Buchberger's algorithm with the coprime-leading-term criterion, full
//! reduction, and interreduction to the reduced Gröbner basis.

use num_traits::One;

use super::poly::{Monomial, MultiPoly};
use super::OracleError;
use crate::weightlat::Rational;

/// Fully reduce `f` modulo `basis`; every term of the result is divisible by
/// no leading monomial of the basis.
pub fn normal_form(f: &MultiPoly, basis: &[MultiPoly]) -> MultiPoly {
    let mut rest = f.clone();
    let mut out = MultiPoly::zero(f.nvars);
    'outer: while let Some((m, c)) = rest.leading().map(|(m, c)| (m.clone(), c.clone())) {
        for g in basis {
            if let Some((gm, gc)) = g.leading() {
                if gm.divides(&m) {
                    let q = gm.quotient(&m);
                    let coeff = &c / gc;
                    rest = rest.sub(&g.mul_term(&q, &coeff));
                    continue 'outer;
                }
            }
        }
        // leading term irreducible; move it to the output
        out.add_term(m.clone(), c.clone());
        rest.terms.remove(&m);
    }
    out
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient(&l), &fc.recip());
    let b = g.mul_term(&gm.quotient(&l), &gc.recip());
    a.sub(&b)
}

/// Buchberger with normal pair selection (smallest lcm first) and a hard
/// budget on pair reductions.
pub fn buchberger(generators: &[MultiPoly], budget: usize) -> Result<Vec<MultiPoly>, OracleError> {
    let mut basis: Vec<MultiPoly> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    let mut reductions = 0usize;
    while !pairs.is_empty() {
        // smallest lcm first keeps intermediate growth down
        pairs.sort_by(|&(a1, b1), &(a2, b2)| {
            let l1 = lead(&basis[a1]).lcm(lead(&basis[b1]));
            let l2 = lead(&basis[a2]).lcm(lead(&basis[b2]));
            l2.cmp(&l1)
        });
        let (i, j) = pairs.pop().unwrap();
        if lead(&basis[i]).is_coprime_with(lead(&basis[j])) {
            continue; // product criterion
        }
        reductions += 1;
        if reductions > budget {
            return Err(OracleError::BudgetExceeded { budget });
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = normal_form(&s, &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        basis.push(r);
        let new = basis.len() - 1;
        for k in 0..new {
            pairs.push((k, new));
        }
    }
    Ok(interreduce(basis))
}

fn lead(p: &MultiPoly) -> &Monomial {
    p.leading().expect("basis members are nonzero").0
}

/// Reduce each member against the others; drop members whose leading monomial
/// is divisible by another's; make everything monic. The result is the
/// reduced Gröbner basis, unique for the order.
fn interreduce(mut basis: Vec<MultiPoly>) -> Vec<MultiPoly> {
    // drop redundant leading terms
    let mut keep: Vec<MultiPoly> = Vec::new();
    basis.sort_by(|a, b| lead(a).cmp(lead(b)));
    for i in 0..basis.len() {
        let lm = lead(&basis[i]).clone();
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(j, g)| j != i && lead(g).divides(&lm) && (lead(g) != &lm || j < i));
        if !redundant {
            keep.push(basis[i].clone());
        }
    }
    // reduce tails
    let mut out: Vec<MultiPoly> = Vec::new();
    for i in 0..keep.len() {
        let others: Vec<MultiPoly> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = normal_form(&keep[i], &others);
        if !r.is_zero() {
            out.push(r.monic());
        }
    }
    out.sort_by(|a, b| lead(a).cmp(lead(b)));
    out
}

/// Definitional post-hoc check: every S-polynomial of basis pairs reduces to
/// zero under the basis.
pub fn is_groebner(basis: &[MultiPoly]) -> bool {
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j]);
            if !normal_form(&s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Reduced-basis sanity: monic, no leading monomial divides another, and no
/// tail term is divisible by any leading monomial.
pub fn is_reduced(basis: &[MultiPoly]) -> bool {
    for (i, f) in basis.iter().enumerate() {
        match f.leading() {
            None => return false,
            Some((_, c)) if c != &Rational::one() => return false,
            _ => {}
        }
        for (j, g) in basis.iter().enumerate() {
            if i == j {
                continue;
            }
            let glm = lead(g);
            for m in f.terms.keys() {
                if glm.divides(m) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weightlat::Int;

    fn rat(n: i64) -> Rational {
        Rational::from_integer(Int::from(n))
    }

    #[test]
    fn linear_ideal_is_its_own_basis() {
        // (x − t1, y − t2) in variables x, y, t1, t2
        let mut f = MultiPoly::var(4, 0);
        f = f.sub(&MultiPoly::var(4, 2));
        let mut g = MultiPoly::var(4, 1);
        g = g.sub(&MultiPoly::var(4, 3));
        let gb = buchberger(&[f.clone(), g.clone()], 1000).unwrap();
        assert_eq!(gb.len(), 2);
        assert!(is_groebner(&gb));
        assert!(is_reduced(&gb));
        assert!(normal_form(&f, &gb).is_zero());
        assert!(normal_form(&g, &gb).is_zero());
    }

    #[test]
    fn monomial_ideal() {
        let u2 = MultiPoly::term(Monomial(vec![2, 0]), rat(1));
        let uv = MultiPoly::term(Monomial(vec![1, 1]), rat(1));
        let gb = buchberger(&[u2.clone(), uv.clone()], 1000).unwrap();
        assert_eq!(gb.len(), 2);
        assert!(is_groebner(&gb));
    }

    #[test]
    fn katsura_like_example_closes() {
        // (x² − y, xy − 1) forces y³ = 1 into the basis
        let x2 = MultiPoly::term(Monomial(vec![2, 0]), rat(1))
            .sub(&MultiPoly::var(2, 1));
        let xy = MultiPoly::term(Monomial(vec![1, 1]), rat(1))
            .sub(&MultiPoly::constant(2, rat(1)));
        let gb = buchberger(&[x2, xy], 1000).unwrap();
        assert!(is_groebner(&gb));
        assert!(is_reduced(&gb));
        // in the quotient x² = y and xy = 1, so x³ = 1 and y³ = x⁶ = 1
        let member = MultiPoly::term(Monomial(vec![0, 3]), rat(1))
            .sub(&MultiPoly::constant(2, rat(1)));
        assert!(normal_form(&member, &gb).is_zero());
    }

    #[test]
    fn budget_exhaustion_reported() {
        let x2 = MultiPoly::term(Monomial(vec![2, 0]), rat(1))
            .sub(&MultiPoly::var(2, 1));
        let xy = MultiPoly::term(Monomial(vec![1, 1]), rat(1))
            .sub(&MultiPoly::constant(2, rat(1)));
        assert!(matches!(
            buchberger(&[x2, xy], 0),
            Err(OracleError::BudgetExceeded { .. })
        ));
    }
}
