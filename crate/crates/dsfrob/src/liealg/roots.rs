//! Root systems of the simple Lie algebras, built from standard ambient
//! coordinates over the rationals.

use crate::error::Error;
use crate::qn::{qi, qr, Q};
use num_traits::Zero;

use super::SimpleType;

/// A crystallographic root system with a fixed base of simple roots.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub rank: usize,
    /// Simple roots as vectors in the ambient space.
    pub simple: Vec<Vec<Q>>,
    /// All positive roots, ordered by (height, coefficient vector).
    pub positive: Vec<Root>,
}

/// A positive root: ambient vector plus its expansion over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub vec: Vec<Q>,
    pub coeffs: Vec<i64>,
    pub height: i64,
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn simple_roots(ty: SimpleType, rank: usize) -> Vec<Vec<Q>> {
    let e = |dim: usize, i: usize| -> Vec<Q> {
        let mut v = vec![Q::zero(); dim];
        v[i] = qi(1);
        v
    };
    let sub = |a: &[Q], b: &[Q]| -> Vec<Q> { a.iter().zip(b).map(|(x, y)| x - y).collect() };
    match ty {
        SimpleType::A => {
            let d = rank + 1;
            (0..rank).map(|i| sub(&e(d, i), &e(d, i + 1))).collect()
        }
        SimpleType::B => {
            let d = rank;
            let mut v: Vec<Vec<Q>> = (0..rank - 1).map(|i| sub(&e(d, i), &e(d, i + 1))).collect();
            v.push(e(d, rank - 1));
            v
        }
        SimpleType::C => {
            let d = rank;
            let mut v: Vec<Vec<Q>> = (0..rank - 1).map(|i| sub(&e(d, i), &e(d, i + 1))).collect();
            let mut last = e(d, rank - 1);
            last[rank - 1] = qi(2);
            v.push(last);
            v
        }
        SimpleType::D => {
            let d = rank;
            let mut v: Vec<Vec<Q>> = (0..rank - 1).map(|i| sub(&e(d, i), &e(d, i + 1))).collect();
            let mut last = e(d, rank - 2);
            last[rank - 1] = qi(1);
            v.push(last);
            v
        }
        SimpleType::G => {
            // Inside the sum-zero hyperplane of Q^3: alpha_1 short, alpha_2 long.
            vec![
                vec![qi(1), qi(-1), qi(0)],
                vec![qi(-2), qi(1), qi(1)],
            ]
        }
        SimpleType::F => {
            vec![
                vec![qi(0), qi(1), qi(-1), qi(0)],
                vec![qi(0), qi(0), qi(1), qi(-1)],
                vec![qi(0), qi(0), qi(0), qi(1)],
                vec![qr(1, 2), qr(-1, 2), qr(-1, 2), qr(-1, 2)],
            ]
        }
        SimpleType::E => {
            // E8 coordinates; E6/E7 use the first 6/7 simple roots.
            let d = 8;
            let mut v = Vec::new();
            let mut a1 = vec![qr(1, 2); 8];
            for k in [1usize, 2, 3, 4, 5, 6] {
                a1[k] = qr(-1, 2);
            }
            v.push(a1);
            let mut a2 = vec![Q::zero(); d];
            a2[0] = qi(1);
            a2[1] = qi(1);
            v.push(a2);
            for i in 0..6 {
                let mut a = vec![Q::zero(); d];
                a[i] = qi(-1);
                a[i + 1] = qi(1);
                v.push(a);
            }
            v.truncate(2 + (rank - 2));
            v
        }
    }
}

impl RootSystem {
    pub fn new(ty: SimpleType, rank: usize) -> Result<Self, Error> {
        ty.validate_rank(rank)?;
        let simple = simple_roots(ty, rank);
        let positive = close_positive_roots(&simple);
        Ok(RootSystem {
            rank,
            simple,
            positive,
        })
    }

    pub fn cartan_entry(&self, i: usize, j: usize) -> Q {
        // <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
        qi(2) * dot(&self.simple[i], &self.simple[j]) / dot(&self.simple[j], &self.simple[j])
    }

    /// Index of a positive root given its simple-root coefficient vector.
    pub fn find(&self, coeffs: &[i64]) -> Option<usize> {
        self.positive.iter().position(|r| r.coeffs == coeffs)
    }

    /// Number of positive roots of each height, 1-indexed by height.
    pub fn height_census(&self) -> Vec<usize> {
        let max_h = self.positive.iter().map(|r| r.height).max().unwrap_or(0) as usize;
        let mut census = vec![0usize; max_h + 1];
        for r in &self.positive {
            census[r.height as usize] += 1;
        }
        census
    }

    /// Exponents read off the dual partition of the height census.
    pub fn exponents(&self) -> Vec<u64> {
        let census = self.height_census();
        let r = self.rank;
        (1..=r)
            .map(|j| {
                census
                    .iter()
                    .skip(1)
                    .filter(|&&m| m >= r - j + 1)
                    .count() as u64
            })
            .collect()
    }

    /// Largest p >= 0 with beta - p*alpha a root (alpha, beta positive indices,
    /// signs via coefficient vectors).
    pub fn string_down(&self, alpha: &[i64], beta: &[i64]) -> i64 {
        let mut p = 0i64;
        loop {
            let probe: Vec<i64> = beta
                .iter()
                .zip(alpha)
                .map(|(b, a)| b - (p + 1) * a)
                .collect();
            if self.is_root_coeffs(&probe) {
                p += 1;
            } else {
                return p;
            }
        }
    }

    /// Whether a coefficient vector (all >= 0 or all <= 0) is a root.
    pub fn is_root_coeffs(&self, coeffs: &[i64]) -> bool {
        if coeffs.iter().all(|&c| c >= 0) && coeffs.iter().any(|&c| c > 0) {
            return self.find(coeffs).is_some();
        }
        if coeffs.iter().all(|&c| c <= 0) && coeffs.iter().any(|&c| c < 0) {
            let neg: Vec<i64> = coeffs.iter().map(|c| -c).collect();
            return self.find(&neg).is_some();
        }
        false
    }

    pub fn norm2(&self, coeffs: &[i64]) -> Q {
        let v = self.ambient(coeffs);
        dot(&v, &v)
    }

    pub fn ambient(&self, coeffs: &[i64]) -> Vec<Q> {
        let dim = self.simple[0].len();
        let mut v = vec![Q::zero(); dim];
        for (c, s) in coeffs.iter().zip(&self.simple) {
            if *c != 0 {
                for (vi, si) in v.iter_mut().zip(s) {
                    *vi += qi(*c) * si;
                }
            }
        }
        v
    }
}

/// Build all positive roots by upward closure along root strings.
fn close_positive_roots(simple: &[Vec<Q>]) -> Vec<Root> {
    let rank = simple.len();
    let mut roots: Vec<Root> = (0..rank)
        .map(|i| {
            let mut coeffs = vec![0i64; rank];
            coeffs[i] = 1;
            Root {
                vec: simple[i].clone(),
                coeffs,
                height: 1,
            }
        })
        .collect();
    let mut frontier: Vec<usize> = (0..roots.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &ri in &frontier {
            let root = roots[ri].clone();
            for (si, srvec) in simple.iter().enumerate().take(rank) {
                // gamma + alpha_i is a root iff p - <gamma, alpha_i^vee> > 0
                let cart = qi(2) * dot(&root.vec, srvec) / dot(srvec, srvec);
                let mut p = 0i64;
                loop {
                    let probe: Vec<i64> = root
                        .coeffs
                        .iter()
                        .enumerate()
                        .map(|(k, &c)| if k == si { c - (p + 1) } else { c })
                        .collect();
                    let ok = probe.iter().all(|&c| c >= 0)
                        && probe.iter().any(|&c| c > 0)
                        && roots.iter().any(|r| r.coeffs == probe);
                    if ok {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q_len = qi(p) - cart;
                if q_len <= Q::zero() {
                    continue;
                }
                let mut coeffs = root.coeffs.clone();
                coeffs[si] += 1;
                if roots.iter().any(|r| r.coeffs == coeffs) {
                    continue;
                }
                let vec: Vec<Q> = root.vec.iter().zip(srvec).map(|(a, b)| a + b).collect();
                roots.push(Root {
                    vec,
                    coeffs,
                    height: root.height + 1,
                });
                next.push(roots.len() - 1);
            }
        }
        frontier = next;
    }
    roots.sort_by(|a, b| (a.height, &a.coeffs).cmp(&(b.height, &b.coeffs)));
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(ty: SimpleType, rank: usize) -> usize {
        RootSystem::new(ty, rank).unwrap().positive.len()
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(count(SimpleType::A, 1), 1);
        assert_eq!(count(SimpleType::A, 2), 3);
        assert_eq!(count(SimpleType::A, 3), 6);
        assert_eq!(count(SimpleType::B, 2), 4);
        assert_eq!(count(SimpleType::B, 3), 9);
        assert_eq!(count(SimpleType::C, 3), 9);
        assert_eq!(count(SimpleType::D, 4), 12);
        assert_eq!(count(SimpleType::G, 2), 6);
        assert_eq!(count(SimpleType::F, 4), 24);
    }

    #[test]
    fn exponents_from_height_partition() {
        assert_eq!(RootSystem::new(SimpleType::A, 1).unwrap().exponents(), [1]);
        assert_eq!(
            RootSystem::new(SimpleType::A, 2).unwrap().exponents(),
            [1, 2]
        );
        assert_eq!(
            RootSystem::new(SimpleType::A, 3).unwrap().exponents(),
            [1, 2, 3]
        );
        assert_eq!(
            RootSystem::new(SimpleType::B, 2).unwrap().exponents(),
            [1, 3]
        );
        assert_eq!(
            RootSystem::new(SimpleType::G, 2).unwrap().exponents(),
            [1, 5]
        );
        assert_eq!(
            RootSystem::new(SimpleType::D, 4).unwrap().exponents(),
            [1, 3, 3, 5]
        );
        assert_eq!(
            RootSystem::new(SimpleType::F, 4).unwrap().exponents(),
            [1, 5, 7, 11]
        );
    }

    #[test]
    fn g2_cartan_matrix() {
        let rs = RootSystem::new(SimpleType::G, 2).unwrap();
        assert_eq!(rs.cartan_entry(0, 0), qi(2));
        assert_eq!(rs.cartan_entry(0, 1), qi(-1));
        assert_eq!(rs.cartan_entry(1, 0), qi(-3));
        assert_eq!(rs.cartan_entry(1, 1), qi(2));
    }
}
