//! Hard-coded ideal presentations for the gl₁, sl₂ and gl₂ fiber-product
//! schemes. The generating set is the commutator components together with
//! `f ⊗ 1 − 1 ⊗ res(f)` over the classical trace generators of the invariant
//! ring; `res` restricts to pairs of diagonal matrices, i.e. evaluates trace
//! words as (bivariate) power sums.

use super::poly::MultiPoly;
use super::{IdealPresentation, OracleError, Preset};
use crate::weightlat::Rational;

type Mat = [[MultiPoly; 2]; 2];

fn mat_from_vars(nvars: usize, idx: [[VarEntry; 2]; 2]) -> Mat {
    idx.map(|row| row.map(|e| e.to_poly(nvars)))
}

#[derive(Clone, Copy)]
enum VarEntry {
    Var(usize),
    NegVar(usize),
}

impl VarEntry {
    fn to_poly(self, nvars: usize) -> MultiPoly {
        match self {
            VarEntry::Var(i) => MultiPoly::var(nvars, i),
            VarEntry::NegVar(i) => MultiPoly::var(nvars, i).neg(),
        }
    }
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let mut out: Mat = Default::default();
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]));
        }
    }
    out
}

fn commutator(a: &Mat, b: &Mat) -> Mat {
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    let mut out: Mat = Default::default();
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = ab[i][j].sub(&ba[i][j]);
        }
    }
    out
}

fn trace(a: &Mat) -> MultiPoly {
    a[0][0].add(&a[1][1])
}

/// Build the bigraded defining ideal for a preset.
pub fn build_j(preset: Preset) -> Result<IdealPresentation, OracleError> {
    match preset {
        Preset::Gl1 => {
            let names = ["x", "y", "t1", "t2"];
            let nv = names.len();
            let x = MultiPoly::var(nv, 0);
            let y = MultiPoly::var(nv, 1);
            let t1 = MultiPoly::var(nv, 2);
            let t2 = MultiPoly::var(nv, 3);
            Ok(IdealPresentation {
                var_names: names.iter().map(|s| s.to_string()).collect(),
                bidegrees: vec![(1, 0), (0, 1), (1, 0), (0, 1)],
                generators: vec![x.sub(&t1), y.sub(&t2)],
            })
        }
        Preset::Sl2 => {
            let names = ["a", "b", "c", "d", "e", "f", "t1", "t2"];
            let nv = names.len();
            use VarEntry::*;
            let x = mat_from_vars(nv, [[Var(0), Var(1)], [Var(2), NegVar(0)]]);
            let y = mat_from_vars(nv, [[Var(3), Var(4)], [Var(5), NegVar(3)]]);
            let t1 = MultiPoly::var(nv, 6);
            let t2 = MultiPoly::var(nv, 7);
            let com = commutator(&x, &y);
            let two = MultiPoly::constant(nv, Rational::from_integer(2.into()));
            // res on diag(t,−t) pairs: tr x² ↦ 2t₁², tr xy ↦ 2t₁t₂, tr y² ↦ 2t₂²
            let gens = vec![
                com[0][0].clone(),
                com[0][1].clone(),
                com[1][0].clone(),
                trace(&mat_mul(&x, &x)).sub(&two.mul(&t1).mul(&t1)),
                trace(&mat_mul(&x, &y)).sub(&two.mul(&t1).mul(&t2)),
                trace(&mat_mul(&y, &y)).sub(&two.mul(&t2).mul(&t2)),
            ];
            Ok(IdealPresentation {
                var_names: names.iter().map(|s| s.to_string()).collect(),
                bidegrees: vec![
                    (1, 0),
                    (1, 0),
                    (1, 0),
                    (0, 1),
                    (0, 1),
                    (0, 1),
                    (1, 0),
                    (0, 1),
                ],
                generators: gens,
            })
        }
        Preset::Gl2 => {
            let names = [
                "x11", "x12", "x21", "x22", "y11", "y12", "y21", "y22", "s1", "s2", "u1", "u2",
            ];
            let nv = names.len();
            use VarEntry::*;
            let x = mat_from_vars(nv, [[Var(0), Var(1)], [Var(2), Var(3)]]);
            let y = mat_from_vars(nv, [[Var(4), Var(5)], [Var(6), Var(7)]]);
            let s1 = MultiPoly::var(nv, 8);
            let s2 = MultiPoly::var(nv, 9);
            let u1 = MultiPoly::var(nv, 10);
            let u2 = MultiPoly::var(nv, 11);
            let com = commutator(&x, &y);
            // components of [x,y] against trace / traceless split; the trace
            // component is identically zero and is dropped below
            let mut gens = vec![
                trace(&com),
                com[0][0].sub(&com[1][1]),
                com[0][1].clone(),
                com[1][0].clone(),
            ];
            // res via bivariate power sums Σ_i s_i^p u_i^q
            let pow_sum = |p: &MultiPoly, q: &MultiPoly| p.add(q);
            gens.push(trace(&x).sub(&pow_sum(&s1, &s2)));
            gens.push(trace(&y).sub(&pow_sum(&u1, &u2)));
            gens.push(trace(&mat_mul(&x, &x)).sub(&pow_sum(&s1.mul(&s1), &s2.mul(&s2))));
            gens.push(
                trace(&mat_mul(&x, &y)).sub(&pow_sum(&s1.mul(&u1), &s2.mul(&u2))),
            );
            gens.push(trace(&mat_mul(&y, &y)).sub(&pow_sum(&u1.mul(&u1), &u2.mul(&u2))));
            let gens: Vec<MultiPoly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
            Ok(IdealPresentation {
                var_names: names.iter().map(|s| s.to_string()).collect(),
                bidegrees: vec![
                    (1, 0),
                    (1, 0),
                    (1, 0),
                    (1, 0),
                    (0, 1),
                    (0, 1),
                    (0, 1),
                    (0, 1),
                    (1, 0),
                    (1, 0),
                    (0, 1),
                    (0, 1),
                ],
                generators: gens,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weightlat::Int;
    use num_traits::One;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(Int::from(n), Int::from(d))
    }

    #[test]
    fn gl1_two_linear_generators() {
        let p = build_j(Preset::Gl1).unwrap();
        assert_eq!(p.generators.len(), 2);
        for g in &p.generators {
            assert!(g.terms.keys().all(|m| m.total_degree() == 1));
        }
        p.check_bihomogeneous().unwrap();
    }

    #[test]
    fn sl2_generator_bidegrees() {
        let p = build_j(Preset::Sl2).unwrap();
        assert_eq!(p.generators.len(), 6);
        let mut degs: Vec<(u32, u32)> = p
            .generators
            .iter()
            .map(|g| p.generator_bidegree(g).unwrap())
            .collect();
        degs.sort();
        assert_eq!(degs, vec![(0, 2), (1, 1), (1, 1), (1, 1), (1, 1), (2, 0)]);
        // tr[x,y] = 0 identically keeps the three commutator entries
        // independent; none of the stored generators is zero
        assert!(p.generators.iter().all(|g| !g.is_zero()));
    }

    #[test]
    fn gl2_generator_count_and_bidegrees() {
        let p = build_j(Preset::Gl2).unwrap();
        // 3 surviving commutator components + 5 trace differences
        assert_eq!(p.generators.len(), 8);
        let mut degs: Vec<(u32, u32)> = p
            .generators
            .iter()
            .map(|g| p.generator_bidegree(g).unwrap())
            .collect();
        degs.sort();
        assert_eq!(
            degs,
            vec![
                (0, 1),
                (0, 2),
                (1, 0),
                (1, 1),
                (1, 1),
                (1, 1),
                (1, 1),
                (2, 0)
            ]
        );
    }

    #[test]
    fn trace_generators_are_conjugation_invariant() {
        // conjugate by g = [[1,2],[3,7]] (det 1) and check the trace words
        // are literally unchanged as polynomials in the matrix entries
        let p = build_j(Preset::Sl2).unwrap();
        let nv = p.nvars();
        // x ↦ g x g⁻¹ written entrywise as linear substitutions
        let g = [[rat(1, 1), rat(2, 1)], [rat(3, 1), rat(7, 1)]];
        let ginv = [[rat(7, 1), rat(-2, 1)], [rat(-3, 1), rat(1, 1)]];
        let conj_entries = |e00: &MultiPoly,
                            e01: &MultiPoly,
                            e10: &MultiPoly,
                            e11: &MultiPoly|
         -> [[MultiPoly; 2]; 2] {
            let m = [[e00.clone(), e01.clone()], [e10.clone(), e11.clone()]];
            let mut gm: [[MultiPoly; 2]; 2] = Default::default();
            for i in 0..2 {
                for j in 0..2 {
                    let mut acc = MultiPoly::zero(nv);
                    for k in 0..2 {
                        acc = acc.add(&m[k][j].scale(&g[i][k]));
                    }
                    gm[i][j] = acc;
                }
            }
            let mut out: [[MultiPoly; 2]; 2] = Default::default();
            for i in 0..2 {
                for j in 0..2 {
                    let mut acc = MultiPoly::zero(nv);
                    for k in 0..2 {
                        acc = acc.add(&gm[i][k].scale(&ginv[k][j]));
                    }
                    out[i][j] = acc;
                }
            }
            out
        };
        let v = |i: usize| MultiPoly::var(nv, i);
        let x = conj_entries(&v(0), &v(1), &v(2), &v(0).neg());
        let y = conj_entries(&v(3), &v(4), &v(5), &v(3).neg());
        let tr2 = |a: &[[MultiPoly; 2]; 2], b: &[[MultiPoly; 2]; 2]| {
            let mut acc = MultiPoly::zero(nv);
            for i in 0..2 {
                for k in 0..2 {
                    acc = acc.add(&a[i][k].mul(&b[k][i]));
                }
            }
            acc
        };
        let xv = [[v(0), v(1)], [v(2), v(0).neg()]];
        let yv = [[v(3), v(4)], [v(5), v(3).neg()]];
        assert_eq!(tr2(&x, &x), tr2(&xv, &xv));
        assert_eq!(tr2(&x, &y), tr2(&xv, &yv));
        assert_eq!(tr2(&y, &y), tr2(&yv, &yv));
    }

    #[test]
    fn one_is_not_zero() {
        let one = MultiPoly::constant(3, Rational::one());
        assert!(!one.is_zero());
    }
}
