//! Matrix backend for G2: the derivation algebra of the split octonions in
//! Zorn vector-matrix form, with the root data recovered from a diagonal
//! torus. Independent of the Chevalley backend, so the two cross-validate.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::qn::{qi, Q};

use super::{Backend, LieAlgebraData, SimpleType};

/// Octonion basis: u1, u2 (the two idempotents), v1..v3, w1..w3.
const DIM_O: usize = 8;

/// Multiplication table of the split octonions; entry (i, j) lists the
/// nonzero coordinates of e_i * e_j.
pub fn mult_table() -> Vec<Vec<Vec<(usize, Q)>>> {
    let u1 = 0usize;
    let u2 = 1usize;
    let v = |i: usize| 2 + i;
    let w = |i: usize| 5 + i;
    let eps = |i: usize, j: usize, k: usize| -> i64 {
        match (i, j, k) {
            (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
            (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
            _ => 0,
        }
    };
    let mut t = vec![vec![Vec::new(); DIM_O]; DIM_O];
    t[u1][u1].push((u1, qi(1)));
    t[u2][u2].push((u2, qi(1)));
    for i in 0..3 {
        t[u1][v(i)].push((v(i), qi(1)));
        t[v(i)][u2].push((v(i), qi(1)));
        t[u2][w(i)].push((w(i), qi(1)));
        t[w(i)][u1].push((w(i), qi(1)));
        t[v(i)][w(i)].push((u1, qi(1)));
        t[w(i)][v(i)].push((u2, qi(1)));
        for j in 0..3 {
            for k in 0..3 {
                let e = eps(i, j, k);
                if e != 0 {
                    t[v(i)][v(j)].push((w(k), qi(e)));
                    t[w(i)][w(j)].push((v(k), qi(-e)));
                }
            }
        }
    }
    t
}

pub fn multiply(t: &[Vec<Vec<(usize, Q)>>], x: &[Q], y: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); DIM_O];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let c = xi * yj;
            for (k, v) in &t[i][j] {
                out[*k] += &c * v;
            }
        }
    }
    out
}

/// Split norm N(a, v; w, b) = ab - v.w.
pub fn norm(x: &[Q]) -> Q {
    let mut n = &x[0] * &x[1];
    for i in 0..3 {
        n -= &x[2 + i] * &x[5 + i];
    }
    n
}

/// Basis of the derivation algebra as 8x8 matrices (columns = images of the
/// octonion basis).
fn derivations() -> Vec<Mat> {
    let t = mult_table();
    // Unknown D as 64-vector, D[(k, l)] = entry k of D(e_l).
    let idx = |k: usize, l: usize| k * DIM_O + l;
    let mut rows = Vec::new();
    for i in 0..DIM_O {
        for j in 0..DIM_O {
            // D(e_i e_j) - D(e_i) e_j - e_i D(e_j) = 0, coordinate k
            for k in 0..DIM_O {
                let mut row = vec![Q::zero(); DIM_O * DIM_O];
                for (m, c) in &t[i][j] {
                    row[idx(k, *m)] += c;
                }
                // D(e_i) e_j = sum_m D_{m,i} e_m e_j
                for m in 0..DIM_O {
                    for (p, c) in &t[m][j] {
                        if *p == k {
                            row[idx(m, i)] -= c;
                        }
                    }
                }
                for m in 0..DIM_O {
                    for (p, c) in &t[i][m] {
                        if *p == k {
                            row[idx(m, j)] -= c;
                        }
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let m = Mat::from_rows(rows);
    m.nullspace()
        .into_iter()
        .map(|v| {
            let mut d = Mat::zeros(DIM_O, DIM_O);
            for k in 0..DIM_O {
                for l in 0..DIM_O {
                    *d.at_mut(k, l) = v[idx(k, l)].clone();
                }
            }
            d
        })
        .collect()
}

fn commutator(a: &Mat, b: &Mat) -> Mat {
    a.mul(b).add(&b.mul(a).scale(&qi(-1)))
}

/// Solve for coordinates of `m` in the span of `basis` (independent 8x8
/// matrices), or None.
fn coords_in(basis_mat: &Mat, m: &Mat) -> Option<Vec<Q>> {
    basis_mat.solve(&m.data)
}

pub fn build() -> Result<LieAlgebraData> {
    let ders = derivations();
    if ders.len() != 14 {
        return Err(Error::SolveFailure(format!(
            "split-octonion derivation algebra has dimension {}, expected 14",
            ders.len()
        )));
    }
    // Torus: derivations diagonal on the octonion basis.
    let mut rows = Vec::new();
    for k in 0..DIM_O {
        for l in 0..DIM_O {
            if k == l {
                continue;
            }
            rows.push(ders.iter().map(|d| d.at(k, l).clone()).collect::<Vec<_>>());
        }
    }
    let torus_coords = Mat::from_rows(rows).nullspace();
    if torus_coords.len() != 2 {
        return Err(Error::SolveFailure(
            "diagonal torus of Der(O) is not 2-dimensional".into(),
        ));
    }
    let span = |coords: &[Q]| -> Mat {
        let mut m = Mat::zeros(DIM_O, DIM_O);
        for (c, d) in coords.iter().zip(&ders) {
            if !c.is_zero() {
                m = m.add(&d.scale(c));
            }
        }
        m
    };
    let t1 = span(&torus_coords[0]);
    let t2 = span(&torus_coords[1]);

    // Express ad t_i on the 14-dimensional derivation space.
    let mut basis_cols = Mat::zeros(DIM_O * DIM_O, 14);
    for (j, d) in ders.iter().enumerate() {
        for (i, x) in d.data.iter().enumerate() {
            *basis_cols.at_mut(i, j) = x.clone();
        }
    }
    let ad_on_der = |t: &Mat| -> Mat {
        let mut m = Mat::zeros(14, 14);
        for (j, d) in ders.iter().enumerate() {
            let c = commutator(t, d);
            let coords = coords_in(&basis_cols, &c).expect("Der closed under bracket");
            for i in 0..14 {
                *m.at_mut(i, j) = coords[i].clone();
            }
        }
        m
    };
    let ad1 = ad_on_der(&t1);
    let ad2 = ad_on_der(&t2);

    // Candidate weights: differences of the diagonal octonion weights.
    let cands = |t: &Mat| -> Vec<Q> {
        let mut v: Vec<Q> = Vec::new();
        for k in 0..DIM_O {
            for l in 0..DIM_O {
                let d = t.at(k, k) - t.at(l, l);
                if !v.contains(&d) {
                    v.push(d);
                }
            }
        }
        v
    };
    let mut root_vectors: Vec<(Q, Q, Vec<Q>)> = Vec::new();
    for l1 in cands(&t1) {
        for l2 in cands(&t2) {
            if l1.is_zero() && l2.is_zero() {
                continue;
            }
            let mut stacked_rows = Vec::new();
            for i in 0..14 {
                let mut r1: Vec<Q> = (0..14).map(|j| ad1.at(i, j).clone()).collect();
                r1[i] -= &l1;
                stacked_rows.push(r1);
            }
            for i in 0..14 {
                let mut r2: Vec<Q> = (0..14).map(|j| ad2.at(i, j).clone()).collect();
                r2[i] -= &l2;
                stacked_rows.push(r2);
            }
            for v in Mat::from_rows(stacked_rows).nullspace() {
                root_vectors.push((l1.clone(), l2.clone(), v));
            }
        }
    }
    if root_vectors.len() != 12 {
        return Err(Error::SolveFailure(format!(
            "expected 12 root spaces, found {}",
            root_vectors.len()
        )));
    }
    // Positivity functional and simple roots.
    let ell = |l1: &Q, l2: &Q| -> Q { qi(1000) * l1 + l2 };
    let mut positives: Vec<(Q, Q, Vec<Q>)> = root_vectors
        .iter()
        .filter(|(l1, l2, _)| ell(l1, l2) > Q::zero())
        .cloned()
        .collect();
    if positives.len() != 6 {
        return Err(Error::SolveFailure(
            "positivity functional does not split the roots evenly".into(),
        ));
    }
    let is_sum = |l: (&Q, &Q), set: &[(Q, Q, Vec<Q>)]| -> bool {
        for (a1, a2, _) in set {
            for (b1, b2, _) in set {
                if &(a1 + b1) == l.0 && &(a2 + b2) == l.1 {
                    return true;
                }
            }
        }
        false
    };
    let simple: Vec<(Q, Q)> = positives
        .iter()
        .filter(|(l1, l2, _)| !is_sum((l1, l2), &positives))
        .map(|(l1, l2, _)| (l1.clone(), l2.clone()))
        .collect();
    if simple.len() != 2 {
        return Err(Error::SolveFailure("expected 2 simple roots".into()));
    }
    // Height = sum of the (integer) coefficients over the simple roots.
    let height_of = |l1: &Q, l2: &Q| -> i64 {
        let m = Mat::from_rows(vec![
            vec![simple[0].0.clone(), simple[1].0.clone()],
            vec![simple[0].1.clone(), simple[1].1.clone()],
        ]);
        let c = m.solve(&[l1.clone(), l2.clone()]).expect("root expansion");
        let h: Q = c.iter().sum();
        assert!(h.denom().is_one() || h.denom() == &num_bigint::BigInt::from(-1));
        h.to_integer().try_into().unwrap()
    };
    positives.sort_by_key(|(l1, l2, _)| (height_of(l1, l2), l1.clone(), l2.clone()));

    // Basis: torus (2), positives by height, then the mirrored negatives.
    let mut basis: Vec<Vec<Q>> = vec![torus_coords[0].clone(), torus_coords[1].clone()];
    let mut degrees: Vec<i64> = vec![0, 0];
    let mut heights: Vec<i64> = Vec::new();
    for (l1, l2, v) in &positives {
        basis.push(v.clone());
        let h = height_of(l1, l2);
        degrees.push(2 * h);
        heights.push(h);
    }
    for (l1, l2, _) in &positives {
        let (n1, n2) = (-l1.clone(), -l2.clone());
        let v = root_vectors
            .iter()
            .find(|(a, b, _)| a == &n1 && b == &n2)
            .expect("negative root")
            .2
            .clone();
        basis.push(v);
        degrees.push(-2 * height_of(l1, l2));
    }

    // Structure constants in the new basis (coordinates are Der-coordinates).
    let mats: Vec<Mat> = basis.iter().map(|c| span(c)).collect();
    let mut new_cols = Mat::zeros(DIM_O * DIM_O, 14);
    for (j, d) in mats.iter().enumerate() {
        for (i, x) in d.data.iter().enumerate() {
            *new_cols.at_mut(i, j) = x.clone();
        }
    }
    let dim = 14;
    let mut table: Vec<Vec<(usize, Q)>> = vec![Vec::new(); dim * dim];
    for a in 0..dim {
        for b in 0..dim {
            if a == b {
                continue;
            }
            let c = commutator(&mats[a], &mats[b]);
            if c.is_zero() {
                continue;
            }
            let coords = coords_in(&new_cols, &c)
                .ok_or_else(|| Error::SolveFailure("Der closure failure".into()))?;
            table[a * dim + b] = coords
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect();
        }
    }

    // Exponents from the height census.
    let max_h = *heights.iter().max().unwrap() as usize;
    let mut census = vec![0usize; max_h + 1];
    for &h in &heights {
        census[h as usize] += 1;
    }
    let rank = 2;
    let exponents: Vec<u64> = (1..=rank)
        .map(|j| census.iter().skip(1).filter(|&&m| m >= rank - j + 1).count() as u64)
        .collect();

    let mut data = LieAlgebraData {
        ty: SimpleType::G,
        rank,
        dim,
        backend: Backend::Matrix,
        bracket_table: table,
        form: Mat::identity(dim),
        exponents: exponents.clone(),
        coxeter_minus_one: *exponents.last().unwrap(),
        degrees,
        simple_pos: vec![2, 3],
    };
    super::chevalley::normalize_form(&mut data)?;
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_norm_holds() {
        // N(xy) = N(x) N(y) on pseudo-random rational octonions.
        let t = mult_table();
        let mut seed = 1i64;
        let mut next = || {
            seed = (seed * 1103515245 + 12345) % 1000;
            qi(seed % 7 - 3)
        };
        for _ in 0..50 {
            let x: Vec<Q> = (0..8).map(|_| next()).collect();
            let y: Vec<Q> = (0..8).map(|_| next()).collect();
            let xy = multiply(&t, &x, &y);
            assert_eq!(norm(&xy), norm(&x) * norm(&y));
        }
    }

    #[test]
    fn derivation_algebra_is_g2() {
        let d = build().unwrap();
        assert_eq!(d.dim, 14);
        assert_eq!(d.exponents, vec![1, 5]);
        assert!(d.check_antisymmetry());
        assert!(d.check_jacobi());
        assert!(d.check_form_invariance());
        let t = super::super::principal_sl2(&d).unwrap();
        assert_eq!(d.pair(&t.e, &t.f), qi(1));
    }
}
