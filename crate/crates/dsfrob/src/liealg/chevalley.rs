//! Chevalley basis backend: structure constants from the root system with
//! the extraspecial-pair sign convention.
//!
//! Basis layout: h_1..h_r (coroots of the simple roots), then e_gamma for
//! positive gamma in (height, lex) order, then f_gamma in the same order.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::qn::{qi, Q};

use super::roots::{dot, RootSystem};
use super::{Backend, LieAlgebraData, SimpleType};

/// Signed root: coefficient vector over the simple roots, all entries of one
/// sign. Positive roots are indexed into `RootSystem::positive`.
type Coeffs = Vec<i64>;

struct NTable<'a> {
    rs: &'a RootSystem,
    /// n_pos[(i, j)] = N_{gamma_i, gamma_j} for positive roots with
    /// gamma_i + gamma_j a root.
    n_pos: HashMap<(usize, usize), Q>,
}

impl<'a> NTable<'a> {
    fn build(rs: &'a RootSystem) -> Self {
        let mut t = NTable {
            rs,
            n_pos: HashMap::new(),
        };
        let n = rs.positive.len();
        // Process targets by the total order; every ingredient pair has a
        // strictly smaller height sum, so it is already present.
        for g in 0..n {
            let gamma = &rs.positive[g];
            if gamma.height == 1 {
                continue;
            }
            let mut special: Vec<(usize, usize)> = Vec::new();
            for xi in 0..n {
                for zeta in xi + 1..n {
                    let sum: Coeffs = rs.positive[xi]
                        .coeffs
                        .iter()
                        .zip(&rs.positive[zeta].coeffs)
                        .map(|(a, b)| a + b)
                        .collect();
                    if sum == gamma.coeffs {
                        special.push((xi, zeta));
                    }
                }
            }
            // minimal first element = extraspecial pair
            special.sort();
            let (a, b) = special[0];
            let p = rs.string_down(&rs.positive[a].coeffs, &rs.positive[b].coeffs);
            t.insert(a, b, qi(p + 1));
            for &(xi, zeta) in special.iter().skip(1) {
                let v = t.solve_special(a, b, xi, zeta, g);
                t.insert(xi, zeta, v);
            }
        }
        t
    }

    fn insert(&mut self, i: usize, j: usize, v: Q) {
        self.n_pos.insert((j, i), -v.clone());
        self.n_pos.insert((i, j), v);
    }

    /// Resolve N_{xi, zeta} from the extraspecial pair (a, b) of the same
    /// target root via the Jacobi identity on (e_a, e_b, e_{-xi}).
    fn solve_special(&self, a: usize, b: usize, xi: usize, zeta: usize, g: usize) -> Q {
        let rs = self.rs;
        let alpha = &rs.positive[a].coeffs;
        let beta = &rs.positive[b].coeffs;
        let xi_c = &rs.positive[xi].coeffs;
        let zeta_c = &rs.positive[zeta].coeffs;
        let gamma = &rs.positive[g].coeffs;
        let neg = |c: &Coeffs| -> Coeffs { c.iter().map(|x| -x).collect() };
        let sub = |x: &Coeffs, y: &Coeffs| -> Coeffs {
            x.iter().zip(y).map(|(p, q)| p - q).collect()
        };
        // Jacobi on (alpha, beta, -xi), projected on the zeta root space:
        //   N(alpha,beta) N(-xi,gamma) =
        //     -[ N(beta,-xi) N(alpha, beta-xi) + N(-xi,alpha) N(beta, alpha-xi) ]
        let mut rhs = Q::zero();
        let bmx = sub(beta, xi_c);
        if rs.is_root_coeffs(&bmx) {
            rhs += self.n_general(beta, &neg(xi_c)) * self.n_general(alpha, &bmx);
        }
        let amx = sub(alpha, xi_c);
        if rs.is_root_coeffs(&amx) {
            rhs += self.n_general(&neg(xi_c), alpha) * self.n_general(beta, &amx);
        }
        let n_ab = self.n_pos[&(a, b)].clone();
        let n_mxi_gamma = -rhs / n_ab;
        // N(xi, zeta) = (gamma,gamma)/(zeta,zeta) * N(-xi, gamma)
        let scale = rs.norm2(gamma) / rs.norm2(zeta_c);
        scale * n_mxi_gamma
    }

    /// N for arbitrary sign combinations, reduced to the positive table.
    fn n_general(&self, a: &Coeffs, b: &Coeffs) -> Q {
        let rs = self.rs;
        let sum: Coeffs = a.iter().zip(b).map(|(x, y)| x + y).collect();
        if !rs.is_root_coeffs(&sum) {
            return Q::zero();
        }
        let pos = |c: &Coeffs| c.iter().all(|&x| x >= 0);
        let negp = |c: &Coeffs| c.iter().all(|&x| x <= 0);
        let neg = |c: &Coeffs| -> Coeffs { c.iter().map(|x| -x).collect() };
        if pos(a) && pos(b) {
            let i = rs.find(a).unwrap();
            let j = rs.find(b).unwrap();
            return self.n_pos[&(i, j)].clone();
        }
        if negp(a) && negp(b) {
            return -self.n_general(&neg(a), &neg(b));
        }
        if negp(a) && pos(b) {
            return -self.n_general(b, a);
        }
        // a positive, b negative; c = -(a+b) closes the triple.
        let c: Coeffs = sum.iter().map(|x| -x).collect();
        if pos(&c) {
            // N(a,b) = (c,c)/(b,b) N(c,a)
            let scale = rs.norm2(&c) / rs.norm2(b);
            scale * self.n_general(&c, a)
        } else {
            // N(a,b) = (c,c)/(a,a) N(b,c)
            let scale = rs.norm2(&c) / rs.norm2(a);
            scale * self.n_general(b, &c)
        }
    }
}

pub fn build(ty: SimpleType, rank: usize) -> Result<LieAlgebraData> {
    let rs = RootSystem::new(ty, rank)?;
    let npos = rs.positive.len();
    let dim = rank + 2 * npos;
    let ntab = NTable::build(&rs);

    // Coroot of gamma over the simple coroots: 2 gamma/(gamma,gamma) =
    // sum_i m_i 2 alpha_i/(alpha_i,alpha_i).
    let ambient_dim = rs.simple[0].len();
    let coroot_coeffs = |coeffs: &Coeffs| -> Vec<Q> {
        let gv = rs.ambient(coeffs);
        let g2 = dot(&gv, &gv);
        let target: Vec<Q> = gv.iter().map(|x| qi(2) * x / &g2).collect();
        let mut m = Mat::zeros(ambient_dim, rank);
        for (j, s) in rs.simple.iter().enumerate() {
            let s2 = dot(s, s);
            for i in 0..ambient_dim {
                *m.at_mut(i, j) = qi(2) * &s[i] / &s2;
            }
        }
        m.solve(&target).expect("coroot expansion")
    };

    let e_idx = |k: usize| rank + k;
    let f_idx = |k: usize| rank + npos + k;

    let mut table: Vec<Vec<(usize, Q)>> = vec![Vec::new(); dim * dim];
    let mut put = |a: usize, b: usize, k: usize, v: Q| {
        if !v.is_zero() {
            table[a * dim + b].push((k, v));
        }
    };

    // [h_i, e_gamma] = <gamma, alpha_i^vee> e_gamma, and the f mirror.
    for i in 0..rank {
        for (k, root) in rs.positive.iter().enumerate() {
            let cart = qi(2) * dot(&root.vec, &rs.simple[i]) / dot(&rs.simple[i], &rs.simple[i]);
            put(i, e_idx(k), e_idx(k), cart.clone());
            put(e_idx(k), i, e_idx(k), -cart.clone());
            put(i, f_idx(k), f_idx(k), -cart.clone());
            put(f_idx(k), i, f_idx(k), cart);
        }
    }
    // [e_gamma, f_gamma] = h_gamma
    for (k, root) in rs.positive.iter().enumerate() {
        let m = coroot_coeffs(&root.coeffs);
        for (i, mi) in m.iter().enumerate() {
            put(e_idx(k), f_idx(k), i, mi.clone());
            put(f_idx(k), e_idx(k), i, -mi.clone());
        }
    }
    // root-root brackets through the sign table
    let neg = |c: &Coeffs| -> Coeffs { c.iter().map(|x| -x).collect() };
    for i in 0..npos {
        for j in 0..npos {
            let a = &rs.positive[i].coeffs;
            let b = &rs.positive[j].coeffs;
            // [e_i, e_j]
            let sum: Coeffs = a.iter().zip(b).map(|(x, y)| x + y).collect();
            if rs.is_root_coeffs(&sum) {
                let v = ntab.n_general(a, b);
                let k = rs.find(&sum).unwrap();
                put(e_idx(i), e_idx(j), e_idx(k), v.clone());
                put(f_idx(i), f_idx(j), f_idx(k), -v);
            }
            // [e_i, f_j] for i != j
            if i != j {
                let diff: Coeffs = a.iter().zip(b).map(|(x, y)| x - y).collect();
                if rs.is_root_coeffs(&diff) {
                    let v = ntab.n_general(a, &neg(b));
                    if diff.iter().all(|&x| x >= 0) {
                        let k = rs.find(&diff).unwrap();
                        put(e_idx(i), f_idx(j), e_idx(k), v.clone());
                        put(f_idx(j), e_idx(i), e_idx(k), -v);
                    } else {
                        let k = rs.find(&neg(&diff)).unwrap();
                        put(e_idx(i), f_idx(j), f_idx(k), v.clone());
                        put(f_idx(j), e_idx(i), f_idx(k), -v);
                    }
                }
            }
        }
    }

    let mut degrees = vec![0i64; dim];
    for (k, root) in rs.positive.iter().enumerate() {
        degrees[e_idx(k)] = 2 * root.height;
        degrees[f_idx(k)] = -2 * root.height;
    }
    let simple_pos: Vec<usize> = (0..rank).map(e_idx).collect();
    let exponents = rs.exponents();
    let kappa = *exponents.last().unwrap();

    let mut data = LieAlgebraData {
        ty,
        rank,
        dim,
        backend: Backend::Chevalley,
        bracket_table: table,
        form: Mat::identity(dim),
        exponents,
        coxeter_minus_one: kappa,
        degrees,
        simple_pos,
    };
    normalize_form(&mut data)?;
    Ok(data)
}

/// Replace the form by Killing rescaled so that <e, f> = 1 for the
/// principal pair.
pub fn normalize_form(data: &mut LieAlgebraData) -> Result<()> {
    data.form = data.killing_form();
    let triple = super::principal_sl2(data)?;
    let ef = data.pair(&triple.e, &triple.f);
    if ef.is_zero() {
        return Err(Error::SolveFailure("degenerate Killing pairing <e,f>".into()));
    }
    let inv = Q::one() / ef;
    data.form = data.form.scale(&inv);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_structure() {
        let d = build(SimpleType::A, 1).unwrap();
        // basis: h, e, f
        let e = d.basis_vec(1);
        let f = d.basis_vec(2);
        let h = d.basis_vec(0);
        assert_eq!(d.bracket(&e, &f), h);
        assert_eq!(d.bracket(&h, &e), e.iter().map(|x| x * qi(2)).collect::<Vec<_>>());
    }

    #[test]
    fn f4_closes_with_jacobi() {
        let d = build(SimpleType::F, 4).unwrap();
        assert_eq!(d.dim, 52);
        assert_eq!(d.exponents, vec![1, 5, 7, 11]);
        assert!(d.check_antisymmetry());
        assert!(d.check_jacobi());
    }
}
