//! Helpers for arbitrary-precision rational scalars.
//!
//! Everything in this crate computes over `BigRational`; floats never appear.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

/// Rational from an integer.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rational from numerator and denominator.
pub fn qr(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Binomial coefficient as a rational.
pub fn binomial(n: u64, k: u64) -> Q {
    if k > n {
        return Q::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    Q::from_integer(acc)
}

/// Exact square root, if the argument is a perfect square of a rational.
pub fn sqrt_exact(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Q::zero());
    }
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(Q::new(
            BigInt::from_biguint(Sign::Plus, sn),
            BigInt::from_biguint(Sign::Plus, sd),
        ))
    } else {
        None
    }
}

/// Squarefree part of a positive integer by trial division.
fn squarefree_part_uint(n: &num_bigint::BigUint) -> num_bigint::BigUint {
    use num_bigint::BigUint;
    let mut n = n.clone();
    let mut out = BigUint::one();
    let mut p = BigUint::from(2u32);
    while &p * &p <= n {
        let mut e = 0u32;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &p;
        }
        p += 1u32;
    }
    // remaining n is 1 or a prime
    out * n
}

/// Decompose a nonzero rational as sign * d * t^2 with d a positive
/// squarefree integer and t > 0 rational.
pub fn square_class(x: &Q) -> (i64, Q, Q) {
    assert!(!x.is_zero());
    let sign = if x.is_negative() { -1 } else { 1 };
    let abs = x.abs();
    let d_int = squarefree_part_uint(&(abs.numer().magnitude() * abs.denom().magnitude()));
    let d = Q::from_integer(BigInt::from_biguint(Sign::Plus, d_int));
    let t = sqrt_exact(&(abs / &d)).expect("square class decomposition");
    (sign, d, t)
}

/// Render as `p` or `p/q` (never a float).
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `p` or `p/q`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Q::from_integer(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_perfect_squares() {
        assert_eq!(sqrt_exact(&qr(9, 16)), Some(qr(3, 4)));
        assert_eq!(sqrt_exact(&qi(0)), Some(qi(0)));
        assert_eq!(sqrt_exact(&qi(2)), None);
        assert_eq!(sqrt_exact(&qi(-4)), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), qi(6));
        assert_eq!(binomial(2, 1), qi(2));
        assert_eq!(binomial(3, 5), qi(0));
        assert_eq!(binomial(10, 0), qi(1));
    }

    #[test]
    fn square_class_decomposition() {
        let (s, d, t) = square_class(&qr(-1, 360));
        assert_eq!((s, d.clone(), t.clone()), (-1, qi(10), qr(1, 60)));
        assert_eq!(qi(s) * d * &t * &t, qr(-1, 360));
        let (s, d, t) = square_class(&qi(4));
        assert_eq!((s, d, t), (1, qi(1), qi(2)));
    }

    #[test]
    fn format_and_parse_round_trip() {
        for s in ["5", "-7/3", "0", "22/7"] {
            let v = parse_q(s).unwrap();
            assert_eq!(fmt_q(&v), s);
        }
        assert!(parse_q("1/0").is_none());
        assert!(parse_q("x").is_none());
    }
}
