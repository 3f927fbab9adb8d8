//! Cyclic element, opposite Cartan subalgebra basis and its Gram matrix.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::liealg::{GradingMap, LieAlgebraData, Sl2Triple};
use crate::linalg::Mat;
use crate::qn::{qi, Q};
use crate::sl2basis::NormalizedBasis;
use crate::upoly::UPoly;

/// The opposite Cartan data: y_i = v_i - X_{eta_i}^i spanning ker ad(e + a),
/// with the Gram matrix A_{ij} = <y_i, y_j>.
#[derive(Clone, Debug)]
pub struct OppositeCartan {
    pub a_element: Vec<Q>,
    pub y1: Vec<Q>,
    pub ys: Vec<Vec<Q>>,
    pub a_matrix: Mat,
}

/// The lowest-weight vector of the top module and the cyclic element e + a.
/// Fails if ad(e + a) is not regular semisimple.
pub fn cyclic_element(
    data: &LieAlgebraData,
    triple: &Sl2Triple,
    basis: &NormalizedBasis,
) -> Result<(Vec<Q>, Vec<Q>)> {
    let r = basis.rank();
    let kappa = basis.exponents[r - 1] as i64;
    let a = basis.x(r - 1, -kappa).to_vec();
    let y1: Vec<Q> = triple.e.iter().zip(&a).map(|(x, y)| x + y).collect();
    let ad = data.ad(&y1);
    let kernel = ad.nullspace();
    if kernel.len() != data.rank {
        return Err(Error::NotRegularSemisimple(format!(
            "centralizer dimension {} != rank {}",
            kernel.len(),
            data.rank
        )));
    }
    let char_poly = UPoly::new(ad.char_poly());
    let sf = char_poly.squarefree_part();
    if !sf.eval_matrix(&ad).is_zero() {
        return Err(Error::NotRegularSemisimple(
            "squarefree part of the characteristic polynomial does not annihilate ad(e+a)".into(),
        ));
    }
    Ok((a, y1))
}

/// Solve y_i = v_i - X_{eta_i}^i from [e, v_i] = [a, X_{eta_i}^i] on the
/// graded component of degree 2 eta_i - 2(kappa + 1).
pub fn opposite_cartan_basis(
    data: &LieAlgebraData,
    triple: &Sl2Triple,
    grading: &GradingMap,
    basis: &NormalizedBasis,
    a: &[Q],
    y1: &[Q],
) -> Result<OppositeCartan> {
    let r = basis.rank();
    let kappa = basis.exponents[r - 1] as i64;
    let n = data.dim;
    let mut ys = Vec::with_capacity(r);
    for i in 0..r {
        let eta = basis.exponents[i] as i64;
        let top = basis.x(i, eta);
        let rhs = data.bracket(a, top);
        let deg = 2 * eta - 2 * (kappa + 1);
        let cols = grading.indices_of_degree(deg);
        let mut m = Mat::zeros(n, cols.len());
        for (ci, &c) in cols.iter().enumerate() {
            let br = data.bracket(&triple.e, &data.basis_vec(c));
            for (k, v) in br.into_iter().enumerate() {
                *m.at_mut(k, ci) = v;
            }
        }
        let sol = m.solve(&rhs).ok_or(Error::AnsatzUnsolvable(i))?;
        let mut v = vec![Q::zero(); n];
        for (ci, &c) in cols.iter().enumerate() {
            v[c] = sol[ci].clone();
        }
        let y: Vec<Q> = v.iter().zip(top).map(|(x, t)| x - t).collect();
        ys.push(y);
    }
    // verify: every y_i commutes with y1 and y_1 reproduces e + a
    for (i, y) in ys.iter().enumerate() {
        if data.bracket(y1, y).iter().any(|x| !x.is_zero()) {
            return Err(Error::AnsatzUnsolvable(i));
        }
    }
    if ys[0] != y1 {
        return Err(Error::AnsatzUnsolvable(0));
    }
    let mut a_matrix = Mat::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            *a_matrix.at_mut(i, j) = data.pair(&ys[i], &ys[j]);
        }
    }
    let oc = OppositeCartan {
        a_element: a.to_vec(),
        y1: y1.to_vec(),
        ys,
        a_matrix,
    };
    verify_opposite_cartan(data, basis, &oc)?;
    Ok(oc)
}

fn verify_opposite_cartan(
    data: &LieAlgebraData,
    basis: &NormalizedBasis,
    oc: &OppositeCartan,
) -> Result<()> {
    let r = basis.rank();
    let kappa = basis.exponents[r - 1];
    let am = &oc.a_matrix;
    for i in 0..r {
        for j in 0..r {
            if am.at(i, j) != am.at(j, i) {
                return Err(Error::SolveFailure("A matrix not symmetric".into()));
            }
            if basis.exponents[i] + basis.exponents[j] != kappa + 1 && !am.at(i, j).is_zero() {
                return Err(Error::SolveFailure(
                    "A matrix not antidiagonal with respect to the exponents".into(),
                ));
            }
        }
    }
    if am.det().is_zero() {
        return Err(Error::SolveFailure("A matrix degenerate".into()));
    }
    // commutator identity for the A entries
    for i in 0..r {
        let ei = basis.exponents[i] as i64;
        for j in 0..r {
            let ej = basis.exponents[j] as i64;
            let lhs = data.pair(
                &data.bracket(&oc.a_element, basis.x(i, ei)),
                basis.x(j, ej - 1),
            ) / qi(2 * ej)
                + data.pair(
                    &data.bracket(&oc.a_element, basis.x(j, ej)),
                    basis.x(i, ei - 1),
                ) / qi(2 * ei);
            if &lhs != am.at(i, j) {
                return Err(Error::SolveFailure(format!(
                    "commutator identity for A fails at ({i},{j})"
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{build_lie_algebra, dynkin_grading, principal_sl2, Backend, SimpleType};
    use crate::sl2basis::{lowest_weight_vectors, normalize_basis};

    fn setup(
        ty: SimpleType,
        rank: usize,
    ) -> (
        LieAlgebraData,
        Sl2Triple,
        GradingMap,
        NormalizedBasis,
        OppositeCartan,
    ) {
        let data = build_lie_algebra(ty, rank, Backend::Chevalley, 4).unwrap();
        let triple = principal_sl2(&data).unwrap();
        let grading = dynkin_grading(&data, &triple).unwrap();
        let lows = lowest_weight_vectors(&data, &triple, &grading).unwrap();
        let basis = normalize_basis(&data, &triple, &lows).unwrap();
        let (a, y1) = cyclic_element(&data, &triple, &basis).unwrap();
        let oc = opposite_cartan_basis(&data, &triple, &grading, &basis, &a, &y1).unwrap();
        (data, triple, grading, basis, oc)
    }

    #[test]
    fn a1_cyclic_data() {
        let (data, triple, _, _, oc) = setup(SimpleType::A, 1);
        assert_eq!(oc.a_element, triple.f);
        let want: Vec<Q> = triple.e.iter().zip(&triple.f).map(|(a, b)| a + b).collect();
        assert_eq!(oc.y1, want);
        assert_eq!(oc.a_matrix.at(0, 0), &qi(2));
        assert_eq!(data.ad(&oc.y1).nullspace().len(), 1);
    }

    #[test]
    fn a2_gram_matrix() {
        let (_, _, _, _, oc) = setup(SimpleType::A, 2);
        assert!(oc.a_matrix.at(0, 0).is_zero());
        assert!(oc.a_matrix.at(1, 1).is_zero());
        assert_eq!(oc.a_matrix.at(0, 1), &qi(-3));
        assert_eq!(oc.a_matrix.at(1, 0), &qi(-3));
    }

    #[test]
    fn regular_semisimple_across_algebras() {
        for (ty, rank) in [
            (SimpleType::A, 2),
            (SimpleType::A, 3),
            (SimpleType::B, 2),
            (SimpleType::G, 2),
        ] {
            let (data, _, _, _, oc) = setup(ty, rank);
            assert_eq!(data.ad(&oc.y1).nullspace().len(), data.rank);
            assert!(!oc.a_matrix.det().is_zero());
        }
    }

    #[test]
    fn d4_repeated_block_nondegenerate() {
        let (_, _, _, basis, oc) = setup(SimpleType::D, 4);
        // exponents 1,3,3,5: the middle 2x2 block pairs the repeated exponent
        assert_eq!(basis.exponents, vec![1, 3, 3, 5]);
        let block = Mat::from_rows(vec![
            vec![oc.a_matrix.at(1, 1).clone(), oc.a_matrix.at(1, 2).clone()],
            vec![oc.a_matrix.at(2, 1).clone(), oc.a_matrix.at(2, 2).clone()],
        ]);
        assert!(!block.det().is_zero());
    }
}
