//! Decomposition into irreducible sl2 submodules and the normalized ladder
//! basis X_I^i.
//!
//! Rescaling a module multiplies its top pairing <X_eta, X_{-eta}> by a
//! rational square, so over the rationals only the square class of that
//! pairing is free. Each module is scaled to the canonical representative
//! -sigma_i * m_i with m_i a positive squarefree integer; sigma_i = +1 and
//! m_i = 1 reproduce the classical complex normalization. Both the sign
//! branch and m_i > 1 genuinely occur (the weight-zero pairing is positive
//! definite, which forces sigma_i = -1 for even exponents).

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::liealg::{GradingMap, LieAlgebraData, Sl2Triple};
use crate::qn::{binomial, qi, square_class, Q};

/// The normalized sl2-adapted basis.
#[derive(Clone, Debug)]
pub struct NormalizedBasis {
    pub exponents: Vec<u64>,
    /// Pairing branch per module: <X_eta, X_{-eta}> = -sigma_i * m_i.
    pub sigmas: Vec<i64>,
    /// Positive squarefree multipliers of the pairing table.
    pub mults: Vec<Q>,
    /// vectors[i][(I + eta_i) as usize] = X_I^i as a coordinate vector.
    vectors: Vec<Vec<Vec<Q>>>,
}

impl NormalizedBasis {
    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    /// X_I^i for module index i (0-based) and weight index I in [-eta, eta].
    pub fn x(&self, i: usize, weight: i64) -> &[Q] {
        let eta = self.exponents[i] as i64;
        assert!(weight.abs() <= eta, "weight index out of range");
        &self.vectors[i][(weight + eta) as usize]
    }

    /// Pairing value Xi_I^i = <X_I^i, X_{-I}^i> from the normalization.
    pub fn xi(&self, i: usize, weight: i64) -> Q {
        let eta = self.exponents[i];
        let idx = eta as i64 - weight;
        let sign = if (eta as i64 - weight + 1) % 2 == 0 {
            1
        } else {
            -1
        };
        qi(self.sigmas[i] * sign) * &self.mults[i] * binomial(2 * eta, idx as u64)
    }

    /// Rows of all X_I^i in a fixed (module, ascending weight) order.
    pub fn all_rows(&self) -> Vec<(usize, i64, Vec<Q>)> {
        let mut rows = Vec::new();
        for (i, module) in self.vectors.iter().enumerate() {
            let eta = self.exponents[i] as i64;
            for (k, v) in module.iter().enumerate() {
                rows.push((i, k as i64 - eta, v.clone()));
            }
        }
        rows
    }
}

/// Homogeneous basis of ker ad f, ordered by ascending exponent, ties broken
/// by lexicographic comparison of the coordinate vectors.
pub fn lowest_weight_vectors(
    data: &LieAlgebraData,
    triple: &Sl2Triple,
    grading: &GradingMap,
) -> Result<Vec<Vec<Q>>> {
    let n = data.dim;
    let ad_f = data.ad(&triple.f);
    let mut found: Vec<(i64, Vec<Q>)> = Vec::new();
    let kappa = data.coxeter_minus_one as i64;
    for eta in 1..=kappa {
        let d = -2 * eta;
        let cols: Vec<usize> = grading.indices_of_degree(d);
        if cols.is_empty() {
            continue;
        }
        let mut m = crate::linalg::Mat::zeros(n, cols.len());
        for (ci, &c) in cols.iter().enumerate() {
            for k in 0..n {
                *m.at_mut(k, ci) = ad_f.at(k, c).clone();
            }
        }
        for v in m.nullspace() {
            let mut full = vec![Q::zero(); n];
            for (ci, &c) in cols.iter().enumerate() {
                full[c] = v[ci].clone();
            }
            canonicalize_sign(&mut full);
            found.push((eta, full));
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    if found.len() != data.rank {
        return Err(Error::DimensionMismatch {
            got: found.len(),
            want: data.rank,
        });
    }
    let etas: Vec<u64> = found.iter().map(|(e, _)| *e as u64).collect();
    if etas != data.exponents {
        return Err(Error::DimensionMismatch {
            got: found.len(),
            want: data.rank,
        });
    }
    Ok(found.into_iter().map(|(_, v)| v).collect())
}

fn canonicalize_sign(v: &mut [Q]) {
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

/// Build the ladder over a lowest-weight vector: X_I = ad(e)^{eta+I} w / (eta+I)!.
fn ladder(data: &LieAlgebraData, e: &[Q], eta: u64, lowest: &[Q]) -> Vec<Vec<Q>> {
    let mut out = Vec::with_capacity(2 * eta as usize + 1);
    let mut cur = lowest.to_vec();
    out.push(cur.clone());
    for k in 1..=(2 * eta) {
        cur = data.bracket(e, &cur);
        let inv = Q::one() / qi(k as i64);
        for x in cur.iter_mut() {
            *x *= &inv;
        }
        out.push(cur.clone());
    }
    out
}

/// Normalize the module ladders so that the pairing table becomes
/// diagonal across modules and takes the closed binomial form within each.
pub fn normalize_basis(
    data: &LieAlgebraData,
    triple: &Sl2Triple,
    lowest: &[Vec<Q>],
) -> Result<NormalizedBasis> {
    let exponents = data.exponents.clone();
    let r = exponents.len();
    let mut ws: Vec<Vec<Q>> = lowest.to_vec();

    // Gram-Schmidt between modules of equal exponent, using the weight-zero
    // pairing (sl2 invariance then clears every level).
    for i2 in 0..r {
        for i1 in 0..i2 {
            if exponents[i1] != exponents[i2] {
                continue;
            }
            let eta = exponents[i1];
            let l1 = ladder(data, &triple.e, eta, &ws[i1]);
            let l2 = ladder(data, &triple.e, eta, &ws[i2]);
            let mid = eta as usize;
            let cross = data.pair(&l2[mid], &l1[mid]);
            if cross.is_zero() {
                continue;
            }
            let selfp = data.pair(&l1[mid], &l1[mid]);
            let lam = cross / selfp;
            let w1 = ws[i1].clone();
            for (x, y) in ws[i2].iter_mut().zip(&w1) {
                *x -= &lam * y;
            }
        }
    }

    // Scale each module to the canonical square-class representative
    // <X_eta, X_-eta> = -sigma * m, m squarefree positive.
    let mut sigmas = Vec::with_capacity(r);
    let mut mults = Vec::with_capacity(r);
    let mut vectors = Vec::with_capacity(r);
    for i in 0..r {
        let eta = exponents[i];
        let lad = ladder(data, &triple.e, eta, &ws[i]);
        let top = &lad[2 * eta as usize];
        let bot = &lad[0];
        let c = data.pair(top, bot);
        if c.is_zero() {
            return Err(Error::NormalizationFailure {
                module: i,
                value: "0".into(),
            });
        }
        let (sign, d, t) = square_class(&c);
        let s = Q::one() / t;
        let w: Vec<Q> = ws[i].iter().map(|x| x * &s).collect();
        sigmas.push(-sign);
        mults.push(d);
        vectors.push(ladder(data, &triple.e, eta, &w));
    }

    let basis = NormalizedBasis {
        exponents,
        sigmas,
        mults,
        vectors,
    };
    verify_basis(data, triple, &basis)?;
    Ok(basis)
}

fn verify_basis(
    data: &LieAlgebraData,
    triple: &Sl2Triple,
    basis: &NormalizedBasis,
) -> Result<()> {
    let r = basis.rank();
    // ladder relations
    for i in 0..r {
        let eta = basis.exponents[i] as i64;
        for weight in -eta..=eta {
            let x = basis.x(i, weight);
            let hx = data.bracket(&triple.h, x);
            let want: Vec<Q> = x.iter().map(|v| v * qi(2 * weight)).collect();
            if hx != want {
                return Err(Error::SolveFailure("ad h ladder relation fails".into()));
            }
            let ex = data.bracket(&triple.e, x);
            let want: Vec<Q> = if weight < eta {
                basis
                    .x(i, weight + 1)
                    .iter()
                    .map(|v| v * qi(eta + weight + 1))
                    .collect()
            } else {
                vec![Q::zero(); data.dim]
            };
            if ex != want {
                return Err(Error::SolveFailure("ad e ladder relation fails".into()));
            }
            let fx = data.bracket(&triple.f, x);
            let want: Vec<Q> = if weight > -eta {
                basis
                    .x(i, weight - 1)
                    .iter()
                    .map(|v| v * qi(eta - weight + 1))
                    .collect()
            } else {
                vec![Q::zero(); data.dim]
            };
            if fx != want {
                return Err(Error::SolveFailure("ad f ladder relation fails".into()));
            }
        }
    }
    // pairing table
    for i in 0..r {
        let ei = basis.exponents[i] as i64;
        for j in 0..r {
            let ej = basis.exponents[j] as i64;
            for wi in -ei..=ei {
                for wj in -ej..=ej {
                    let p = data.pair(basis.x(i, wi), basis.x(j, wj));
                    let want = if i == j && wi + wj == 0 {
                        basis.xi(i, wi)
                    } else {
                        Q::zero()
                    };
                    if p != want {
                        return Err(Error::SolveFailure(format!(
                            "pairing table fails at modules {i},{j} weights {wi},{wj}"
                        )));
                    }
                }
            }
        }
    }
    // V^1 is the triple itself (up to the sigma branch, which is +1 there)
    let me: Vec<Q> = triple.e.iter().map(|x| -x.clone()).collect();
    if basis.sigmas[0] != 1
        || !basis.mults[0].is_one()
        || basis.x(0, 1) != me.as_slice()
        || basis.x(0, 0) != triple.h.as_slice()
        || basis.x(0, -1) != triple.f.as_slice()
    {
        return Err(Error::SolveFailure(
            "module V^1 does not reproduce the sl2 triple".into(),
        ));
    }
    // change of basis from the algebra basis is invertible
    let rows: Vec<Vec<Q>> = basis.all_rows().into_iter().map(|(_, _, v)| v).collect();
    let m = crate::linalg::Mat::from_rows(rows);
    if m.rank() != data.dim {
        return Err(Error::SolveFailure("X basis does not span".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{build_lie_algebra, dynkin_grading, principal_sl2, Backend, SimpleType};

    fn setup(ty: SimpleType, rank: usize) -> (LieAlgebraData, Sl2Triple, NormalizedBasis) {
        let data = build_lie_algebra(ty, rank, Backend::Chevalley, 4).unwrap();
        let triple = principal_sl2(&data).unwrap();
        let grading = dynkin_grading(&data, &triple).unwrap();
        let lows = lowest_weight_vectors(&data, &triple, &grading).unwrap();
        let basis = normalize_basis(&data, &triple, &lows).unwrap();
        (data, triple, basis)
    }

    #[test]
    fn a1_basis_is_triple() {
        let (data, triple, basis) = setup(SimpleType::A, 1);
        assert_eq!(basis.x(0, -1), triple.f.as_slice());
        assert_eq!(data.pair(basis.x(0, 0), basis.x(0, 0)), qi(2));
        assert_eq!(data.pair(basis.x(0, 1), basis.x(0, -1)), qi(-1));
    }

    #[test]
    fn a2_lowest_degrees_and_pairings() {
        let data = build_lie_algebra(SimpleType::A, 2, Backend::Chevalley, 4).unwrap();
        let triple = principal_sl2(&data).unwrap();
        let grading = dynkin_grading(&data, &triple).unwrap();
        let lows = lowest_weight_vectors(&data, &triple, &grading).unwrap();
        let degs: Vec<i64> = lows
            .iter()
            .map(|v| {
                let i = v.iter().position(|x| !x.is_zero()).unwrap();
                grading.degrees[i]
            })
            .collect();
        assert_eq!(degs, vec![-2, -4]);

        let basis = normalize_basis(&data, &triple, &lows).unwrap();
        // Even exponent: only the flipped branch is rational.
        assert_eq!(basis.sigmas, vec![1, -1]);
        assert_eq!(basis.mults, vec![qi(1), qi(1)]);
        assert_eq!(data.pair(basis.x(1, 2), basis.x(1, -2)), qi(1));
        assert_eq!(data.pair(basis.x(1, 1), basis.x(1, -1)), qi(-4));
        assert_eq!(data.pair(basis.x(1, 0), basis.x(1, 0)), qi(6));
    }

    #[test]
    fn ladder_composition_coefficient() {
        let (data, triple, basis) = setup(SimpleType::B, 2);
        for i in 0..basis.rank() {
            let eta = basis.exponents[i] as i64;
            for w in -eta..=eta {
                let x = basis.x(i, w);
                let up = data.bracket(&triple.e, x);
                let down = data.bracket(&triple.f, &up);
                let want: Vec<Q> = x.iter().map(|v| v * qi((eta - w) * (eta + w + 1))).collect();
                assert_eq!(down, want);
            }
        }
    }

    #[test]
    fn odd_exponents_keep_classical_sign() {
        let (data, _, basis) = setup(SimpleType::B, 2);
        assert_eq!(basis.sigmas, vec![1, 1]);
        eprintln!("B2 mults: {:?}", basis.mults);
        assert_eq!(
            data.pair(basis.x(1, 3), basis.x(1, -3)),
            -basis.mults[1].clone()
        );
        let (_, _, basis) = setup(SimpleType::G, 2);
        assert_eq!(basis.sigmas, vec![1, 1]);
        eprintln!("G2 mults: {:?}", basis.mults);
    }

    #[test]
    fn d4_repeated_exponent_modules() {
        let data = build_lie_algebra(SimpleType::D, 4, Backend::Chevalley, 4).unwrap();
        let triple = principal_sl2(&data).unwrap();
        let grading = dynkin_grading(&data, &triple).unwrap();
        let lows = lowest_weight_vectors(&data, &triple, &grading).unwrap();
        assert_eq!(data.exponents, vec![1, 3, 3, 5]);
        // two independent lowest vectors of equal degree
        let basis = normalize_basis(&data, &triple, &lows).unwrap();
        assert!(data.pair(basis.x(1, 0), basis.x(2, 0)).is_zero());
    }

    #[test]
    fn matrix_backend_agrees_on_structure() {
        let data = build_lie_algebra(SimpleType::G, 2, Backend::Matrix, 4).unwrap();
        let triple = principal_sl2(&data).unwrap();
        let grading = dynkin_grading(&data, &triple).unwrap();
        let lows = lowest_weight_vectors(&data, &triple, &grading).unwrap();
        let basis = normalize_basis(&data, &triple, &lows).unwrap();
        assert_eq!(basis.sigmas, vec![1, 1]);
    }
}
