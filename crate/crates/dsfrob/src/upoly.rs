//! Univariate polynomials over the rationals, used for spectral checks
//! (characteristic and minimal polynomials, squarefree parts).

use crate::linalg::Mat;
use crate::qn::Q;
use num_traits::{One, Zero};

/// Coefficients ascending by degree; trailing zeros stripped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly(pub Vec<Q>);

impl UPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn derivative(&self) -> UPoly {
        let d: Vec<Q> = self
            .0
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * crate::qn::qi(i as i64))
            .collect();
        UPoly::new(d)
    }

    pub fn monic(&self) -> UPoly {
        match self.0.last() {
            None => self.clone(),
            Some(lc) => {
                let inv = Q::one() / lc.clone();
                UPoly::new(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    /// Polynomial remainder of `self` by `div`.
    pub fn rem(&self, div: &UPoly) -> UPoly {
        assert!(!div.is_zero());
        let mut r = self.0.clone();
        let dd = div.degree().unwrap();
        let lc = div.0[dd].clone();
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let f = r[k].clone() / &lc;
            if !f.is_zero() {
                for j in 0..=dd {
                    let v = r[k - dd + j].clone() - &f * &div.0[j];
                    r[k - dd + j] = v;
                }
            }
            r.pop();
            while r.last().map_or(false, |c| c.is_zero()) {
                r.pop();
            }
        }
        UPoly::new(r)
    }

    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Squarefree part `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> UPoly {
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).monic()
    }

    /// Exact division; panics if not divisible (internal use only).
    pub fn div_exact(&self, div: &UPoly) -> UPoly {
        assert!(!div.is_zero());
        let mut r = self.0.clone();
        let dd = div.degree().unwrap();
        let lc = div.0[dd].clone();
        let mut q = vec![Q::zero(); self.0.len().saturating_sub(dd)];
        while r.len() > dd {
            let k = r.len() - 1;
            let f = r[k].clone() / &lc;
            q[k - dd] = f.clone();
            for j in 0..=dd {
                let v = r[k - dd + j].clone() - &f * &div.0[j];
                r[k - dd + j] = v;
            }
            r.pop();
            while r.last().map_or(false, |c| c.is_zero()) {
                r.pop();
            }
        }
        assert!(r.is_empty(), "non-exact polynomial division");
        UPoly::new(q)
    }

    /// Evaluate at a square matrix (Horner).
    pub fn eval_matrix(&self, m: &Mat) -> Mat {
        let n = m.rows;
        let mut acc = Mat::zeros(n, n);
        for c in self.0.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                *acc.at_mut(i, i) += c;
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qn::qi;

    fn p(coeffs: &[i64]) -> UPoly {
        UPoly::new(coeffs.iter().map(|&c| qi(c)).collect())
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let f = p(&[2, -3, 0, 1]);
        let sf = f.squarefree_part();
        // squarefree part (x-1)(x+2) = x^2 + x - 2
        assert_eq!(sf, p(&[-2, 1, 1]));
    }

    #[test]
    fn matrix_evaluation() {
        let m = Mat::from_rows(vec![vec![qi(2), qi(0)], vec![qi(0), qi(3)]]);
        // (x-2)(x-3) = 6 - 5x + x^2 annihilates m
        let f = p(&[6, -5, 1]);
        assert!(f.eval_matrix(&m).is_zero());
    }
}
