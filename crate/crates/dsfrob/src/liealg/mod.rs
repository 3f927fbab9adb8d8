//! Simple Lie algebras over the rationals: structure constants, the
//! normalized invariant form, the principal sl2 triple and the Dynkin
//! grading.
//!
//! Two independent backends construct the same data. The default builds a
//! Chevalley basis from the root system; for G2 a matrix backend realizes
//! the algebra as derivations of the split octonions.

pub mod cache;
pub mod chevalley;
pub mod roots;
pub mod zorn;

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::qn::{qi, Q};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use roots::RootSystem;

/// Default bound on the rank accepted by `build_lie_algebra`.
pub const DEFAULT_RANK_BOUND: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SimpleType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl SimpleType {
    pub fn parse(s: &str) -> Result<SimpleType> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(SimpleType::A),
            "B" => Ok(SimpleType::B),
            "C" => Ok(SimpleType::C),
            "D" => Ok(SimpleType::D),
            "E" => Ok(SimpleType::E),
            "F" => Ok(SimpleType::F),
            "G" => Ok(SimpleType::G),
            other => Err(Error::UnsupportedType(other.to_string())),
        }
    }

    pub fn letter(&self) -> char {
        match self {
            SimpleType::A => 'A',
            SimpleType::B => 'B',
            SimpleType::C => 'C',
            SimpleType::D => 'D',
            SimpleType::E => 'E',
            SimpleType::F => 'F',
            SimpleType::G => 'G',
        }
    }

    /// Whether (type, rank) names a simple algebra in the standard tables.
    pub fn validate_rank(&self, rank: usize) -> Result<()> {
        let ok = match self {
            SimpleType::A => rank >= 1,
            SimpleType::B => rank >= 2,
            SimpleType::C => rank >= 2,
            SimpleType::D => rank >= 4,
            SimpleType::E => (6..=8).contains(&rank),
            SimpleType::F => rank == 4,
            SimpleType::G => rank == 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedType(format!(
                "{}{rank}",
                self.letter()
            )))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Backend {
    Chevalley,
    Matrix,
}

impl Backend {
    pub fn name(&self) -> &'static str {
        match self {
            Backend::Chevalley => "chevalley",
            Backend::Matrix => "matrix",
        }
    }
}

/// A simple Lie algebra with exact structure constants over a fixed basis,
/// the invariant form normalized so the principal pair satisfies <e,f> = 1,
/// and the degree bookkeeping of the Dynkin grading.
#[derive(Clone, Debug)]
pub struct LieAlgebraData {
    pub ty: SimpleType,
    pub rank: usize,
    pub dim: usize,
    pub backend: Backend,
    /// bracket_table[a * dim + b] = [e_a, e_b] as a sparse coefficient list.
    pub bracket_table: Vec<Vec<(usize, Q)>>,
    /// Invariant bilinear form, normalized so that <e, f> = 1.
    pub form: Mat,
    /// Exponents in ascending order.
    pub exponents: Vec<u64>,
    /// kappa = largest exponent; kappa + 1 is the Coxeter number.
    pub coxeter_minus_one: u64,
    /// ad-h degree of each basis vector (even integers).
    pub degrees: Vec<i64>,
    /// Basis indices of the simple-root vectors.
    pub simple_pos: Vec<usize>,
}

impl LieAlgebraData {
    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let n = self.dim;
        let mut out = vec![Q::zero(); n];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let xy = xa * yb;
                for (k, c) in &self.bracket_table[a * n + b] {
                    out[*k] += &xy * c;
                }
            }
        }
        out
    }

    pub fn ad(&self, x: &[Q]) -> Mat {
        let n = self.dim;
        let mut m = Mat::zeros(n, n);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for b in 0..n {
                for (k, c) in &self.bracket_table[a * n + b] {
                    *m.at_mut(*k, b) += xa * c;
                }
            }
        }
        m
    }

    pub fn pair(&self, x: &[Q], y: &[Q]) -> Q {
        let mut s = Q::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    s += xi * yj * self.form.at(i, j);
                }
            }
        }
        s
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim];
        v[i] = qi(1);
        v
    }

    /// Exhaustive Jacobi identity check over all basis triples.
    pub fn check_jacobi(&self) -> bool {
        let n = self.dim;
        for a in 0..n {
            let ea = self.basis_vec(a);
            for b in a + 1..n {
                let eb = self.basis_vec(b);
                let ab = self.bracket(&ea, &eb);
                for c in b + 1..n {
                    let ec = self.basis_vec(c);
                    let bc = self.bracket(&eb, &ec);
                    let ca = self.bracket(&ec, &ea);
                    let mut s = self.bracket(&ab, &ec);
                    for (si, t) in s.iter_mut().zip(self.bracket(&bc, &ea)) {
                        *si += t;
                    }
                    for (si, t) in s.iter_mut().zip(self.bracket(&ca, &eb)) {
                        *si += t;
                    }
                    if s.iter().any(|x| !x.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Exhaustive antisymmetry check of the structure constants.
    pub fn check_antisymmetry(&self) -> bool {
        let n = self.dim;
        for a in 0..n {
            for b in 0..n {
                let mut sum: Vec<Q> = vec![Q::zero(); n];
                for (k, c) in &self.bracket_table[a * n + b] {
                    sum[*k] += c;
                }
                for (k, c) in &self.bracket_table[b * n + a] {
                    sum[*k] += c;
                }
                if sum.iter().any(|x| !x.is_zero()) {
                    return false;
                }
            }
        }
        true
    }

    /// Exhaustive invariance check: <[x,y],z> + <y,[x,z]> = 0 on basis triples.
    pub fn check_form_invariance(&self) -> bool {
        let n = self.dim;
        for a in 0..n {
            let ea = self.basis_vec(a);
            for b in 0..n {
                let eb = self.basis_vec(b);
                let ab = self.bracket(&ea, &eb);
                for c in 0..n {
                    let ec = self.basis_vec(c);
                    let ac = self.bracket(&ea, &ec);
                    let v = self.pair(&ab, &ec) + self.pair(&eb, &ac);
                    if !v.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Killing form from the structure constants (not normalized).
    pub fn killing_form(&self) -> Mat {
        let n = self.dim;
        let mut k = Mat::zeros(n, n);
        for a in 0..n {
            let ada = self.ad(&self.basis_vec(a));
            for b in a..n {
                let adb = self.ad(&self.basis_vec(b));
                let t = ada.mul(&adb).trace();
                *k.at_mut(a, b) = t.clone();
                *k.at_mut(b, a) = t;
            }
        }
        k
    }
}

/// The principal sl2 triple in coordinates over the algebra basis.
#[derive(Clone, Debug)]
pub struct Sl2Triple {
    pub e: Vec<Q>,
    pub h: Vec<Q>,
    pub f: Vec<Q>,
}

/// Dynkin grading data: degrees per basis vector of the graded basis, the
/// change of basis from the construction basis (identity when that basis is
/// already an ad-h eigenbasis), and subspace selectors.
#[derive(Clone, Debug)]
pub struct GradingMap {
    pub degrees: Vec<i64>,
    pub change: Mat,
    /// indices with degree <= 0 (the Borel subalgebra)
    pub borel: Vec<usize>,
    /// indices with degree <= -2 (the nilpotent subalgebra)
    pub nilpotent: Vec<usize>,
}

impl GradingMap {
    pub fn indices_of_degree(&self, d: i64) -> Vec<usize> {
        (0..self.degrees.len())
            .filter(|&i| self.degrees[i] == d)
            .collect()
    }
}

/// Construct the algebra, form and grading bookkeeping for a simple type.
pub fn build_lie_algebra(
    ty: SimpleType,
    rank: usize,
    backend: Backend,
    rank_bound: usize,
) -> Result<LieAlgebraData> {
    ty.validate_rank(rank)?;
    if rank > rank_bound {
        return Err(Error::RankBound {
            ty: ty.letter(),
            rank,
            bound: rank_bound,
        });
    }
    let data = match backend {
        Backend::Chevalley => {
            if let Some(d) = cache::load(ty, rank, backend) {
                d
            } else {
                let d = chevalley::build(ty, rank)?;
                cache::store(&d);
                d
            }
        }
        Backend::Matrix => {
            if ty != SimpleType::G || rank != 2 {
                return Err(Error::UnsupportedType(format!(
                    "matrix backend supports only G2, got {}{rank}",
                    ty.letter()
                )));
            }
            if let Some(d) = cache::load(ty, rank, backend) {
                d
            } else {
                let d = zorn::build()?;
                cache::store(&d);
                d
            }
        }
    };
    debug_assert!(data.check_antisymmetry());
    Ok(data)
}

/// The principal triple: e is the sum of the simple-root vectors, h solves
/// [h, e_alpha] = 2 e_alpha over the Cartan, f solves [e, f] = h in degree -2.
pub fn principal_sl2(data: &LieAlgebraData) -> Result<Sl2Triple> {
    let n = data.dim;
    let mut e = vec![Q::zero(); n];
    for &i in &data.simple_pos {
        e[i] = qi(1);
    }
    // h: unknown over the degree-0 basis vectors
    let cartan: Vec<usize> = (0..n).filter(|&i| data.degrees[i] == 0).collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for &s in &data.simple_pos {
        let es = data.basis_vec(s);
        // [h, e_s] = 2 e_s, one scalar equation per output coordinate
        let mut cols = vec![Vec::with_capacity(cartan.len()); n];
        for (ci, &c) in cartan.iter().enumerate() {
            let br = data.bracket(&data.basis_vec(c), &es);
            for (k, v) in br.into_iter().enumerate() {
                if !v.is_zero() {
                    cols[k].push((ci, v));
                }
            }
        }
        for (k, col) in cols.into_iter().enumerate() {
            let mut row = vec![Q::zero(); cartan.len()];
            for (ci, v) in col {
                row[ci] = v;
            }
            rows.push(row);
            rhs.push(if k == s { qi(2) } else { Q::zero() });
        }
    }
    let hm = Mat::from_rows(rows);
    let hc = hm
        .solve(&rhs)
        .ok_or_else(|| Error::SolveFailure("no Cartan element h with [h, e_i] = 2 e_i".into()))?;
    let mut h = vec![Q::zero(); n];
    for (ci, &c) in cartan.iter().enumerate() {
        h[c] = hc[ci].clone();
    }
    // f: unknown over the degree -2 basis vectors, [e, f] = h
    let neg2: Vec<usize> = (0..n).filter(|&i| data.degrees[i] == -2).collect();
    let mut fm = Mat::zeros(n, neg2.len());
    for (ci, &c) in neg2.iter().enumerate() {
        let br = data.bracket(&e, &data.basis_vec(c));
        for (k, v) in br.into_iter().enumerate() {
            *fm.at_mut(k, ci) = v;
        }
    }
    let fc = fm
        .solve(&h)
        .ok_or_else(|| Error::SolveFailure("no f in degree -2 with [e, f] = h".into()))?;
    let mut f = vec![Q::zero(); n];
    for (ci, &c) in neg2.iter().enumerate() {
        f[c] = fc[ci].clone();
    }
    let triple = Sl2Triple { e, h, f };
    verify_triple(data, &triple)?;
    Ok(triple)
}

fn verify_triple(data: &LieAlgebraData, t: &Sl2Triple) -> Result<()> {
    let two_e: Vec<Q> = t.e.iter().map(|x| x * qi(2)).collect();
    let m2f: Vec<Q> = t.f.iter().map(|x| x * qi(-2)).collect();
    if data.bracket(&t.h, &t.e) != two_e
        || data.bracket(&t.h, &t.f) != m2f
        || data.bracket(&t.e, &t.f) != t.h
    {
        return Err(Error::SolveFailure("sl2 relations do not hold".into()));
    }
    let ad_e = data.ad(&t.e);
    if ad_e.rank() != data.dim - data.rank {
        return Err(Error::SolveFailure(
            "e is not principal: centralizer dimension differs from the rank".into(),
        ));
    }
    Ok(())
}

/// Eigenbasis bookkeeping for ad h. Both backends produce an eigenbasis
/// already, in which case the change of basis is the identity.
pub fn dynkin_grading(data: &LieAlgebraData, triple: &Sl2Triple) -> Result<GradingMap> {
    let n = data.dim;
    let ad_h = data.ad(&triple.h);
    // Fast path: basis vectors are eigenvectors with the recorded degrees.
    let mut diagonal = true;
    for b in 0..n {
        for k in 0..n {
            let want = if k == b {
                qi(data.degrees[b])
            } else {
                Q::zero()
            };
            if ad_h.at(k, b) != &want {
                diagonal = false;
                break;
            }
        }
        if !diagonal {
            break;
        }
    }
    let (degrees, change) = if diagonal {
        (data.degrees.clone(), Mat::identity(n))
    } else {
        // General path: decompose into even-integer eigenspaces.
        let kappa = data.coxeter_minus_one as i64;
        let mut degrees = Vec::new();
        let mut cols: Vec<Vec<Q>> = Vec::new();
        for d in (-kappa..=kappa).map(|k| 2 * k) {
            let mut m = ad_h.clone();
            for i in 0..n {
                *m.at_mut(i, i) -= qi(d);
            }
            for v in m.nullspace() {
                degrees.push(d);
                cols.push(v);
            }
        }
        if degrees.len() != n {
            return Err(Error::OddDegree);
        }
        let mut change = Mat::zeros(n, n);
        for (j, v) in cols.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                *change.at_mut(i, j) = x.clone();
            }
        }
        if change.inverse().is_none() {
            return Err(Error::OddDegree);
        }
        (degrees, change)
    };
    if degrees.iter().any(|d| d % 2 != 0) {
        return Err(Error::OddDegree);
    }
    let borel: Vec<usize> = (0..n).filter(|&i| degrees[i] <= 0).collect();
    let nilpotent: Vec<usize> = (0..n).filter(|&i| degrees[i] <= -2).collect();
    if 2 * borel.len() != n + data.rank {
        return Err(Error::SolveFailure(format!(
            "Borel dimension {} differs from (dim + rank)/2",
            borel.len()
        )));
    }
    Ok(GradingMap {
        degrees,
        change,
        borel,
        nilpotent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(ty: SimpleType, rank: usize) -> LieAlgebraData {
        build_lie_algebra(ty, rank, Backend::Chevalley, 4).unwrap()
    }

    #[test]
    fn a1_is_sl2() {
        let d = build(SimpleType::A, 1);
        assert_eq!(d.dim, 3);
        assert_eq!(d.exponents, vec![1]);
        let t = principal_sl2(&d).unwrap();
        assert_eq!(d.pair(&t.e, &t.f), qi(1));
        assert_eq!(d.pair(&t.h, &t.h), qi(2));
    }

    #[test]
    fn dimensions_and_exponents() {
        for (ty, rank, dim, exps) in [
            (SimpleType::A, 2, 8, vec![1, 2]),
            (SimpleType::A, 3, 15, vec![1, 2, 3]),
            (SimpleType::B, 2, 10, vec![1, 3]),
            (SimpleType::C, 3, 21, vec![1, 3, 5]),
            (SimpleType::G, 2, 14, vec![1, 5]),
            (SimpleType::D, 4, 28, vec![1, 3, 3, 5]),
        ] {
            let d = build(ty, rank);
            assert_eq!(d.dim, dim, "{}{}", ty.letter(), rank);
            assert_eq!(d.exponents, exps);
            assert_eq!(
                d.exponents.last().copied().unwrap(),
                d.coxeter_minus_one
            );
            // eta_i + eta_{r-i+1} = kappa + 1
            let r = d.rank;
            for i in 0..r {
                assert_eq!(
                    d.exponents[i] + d.exponents[r - 1 - i],
                    d.coxeter_minus_one + 1
                );
            }
        }
    }

    #[test]
    fn structure_checks_exhaustive() {
        for (ty, rank) in [
            (SimpleType::A, 1),
            (SimpleType::A, 2),
            (SimpleType::A, 3),
            (SimpleType::B, 2),
            (SimpleType::G, 2),
            (SimpleType::D, 4),
        ] {
            let d = build(ty, rank);
            assert!(d.check_antisymmetry(), "{}{}", ty.letter(), rank);
            assert!(d.check_jacobi(), "{}{}", ty.letter(), rank);
            assert!(d.check_form_invariance(), "{}{}", ty.letter(), rank);
        }
    }

    #[test]
    fn rejects_invalid_and_overlarge() {
        assert!(matches!(
            build_lie_algebra(SimpleType::E, 5, Backend::Chevalley, 4),
            Err(Error::UnsupportedType(_))
        ));
        assert!(matches!(
            build_lie_algebra(SimpleType::E, 6, Backend::Chevalley, 4),
            Err(Error::RankBound { .. })
        ));
        assert!(matches!(
            build_lie_algebra(SimpleType::D, 3, Backend::Chevalley, 4),
            Err(Error::UnsupportedType(_))
        ));
    }

    #[test]
    fn principality_and_grading() {
        let d = build(SimpleType::B, 2);
        let t = principal_sl2(&d).unwrap();
        let g = dynkin_grading(&d, &t).unwrap();
        // all even, bounded by 2 kappa
        let kappa = d.coxeter_minus_one as i64;
        assert!(g
            .degrees
            .iter()
            .all(|&x| x % 2 == 0 && x.abs() <= 2 * kappa));
        // B2: eigenvalues within {-6,...,6}
        assert!(g.degrees.iter().all(|&x| (-6..=6).contains(&x)));
        assert_eq!(g.borel.len(), (d.dim + d.rank) / 2);
        // [b, b] subset b and [g_a, g_b] subset g_{a+b} on basis vectors
        for &a in &g.borel {
            for &b in &g.borel {
                let br = d.bracket(&d.basis_vec(a), &d.basis_vec(b));
                for (k, c) in br.iter().enumerate() {
                    if !c.is_zero() {
                        assert_eq!(g.degrees[k], g.degrees[a] + g.degrees[b]);
                        assert!(g.degrees[k] <= 0);
                    }
                }
            }
        }
    }

    #[test]
    fn a2_nilpotent_dimension() {
        let d = build(SimpleType::A, 2);
        let t = principal_sl2(&d).unwrap();
        let g = dynkin_grading(&d, &t).unwrap();
        assert_eq!(g.nilpotent.len(), 3);
    }

    #[test]
    fn g2_borel_dimension() {
        let d = build(SimpleType::G, 2);
        let t = principal_sl2(&d).unwrap();
        let g = dynkin_grading(&d, &t).unwrap();
        assert_eq!(g.borel.len(), 8);
    }
}
