//! Exact scalars, factorials and polynomial binomials.

use std::fmt::Debug;
use std::ops::Neg;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, One, ToPrimitive, Zero};

/// Field of exact coefficients. Implemented for `BigRational` and for
/// fixed-width `Ratio<i128>` (which panics on overflow, so keep it to tests).
pub trait Scalar: Num + Neg<Output = Self> + Clone + Debug + Send + Sync + 'static {
    fn from_bigint(n: BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    /// `1 / n!`
    fn recip_factorial(n: u32) -> Self {
        Self::one() / Self::from_bigint(factorial(n))
    }
}

impl Scalar for BigRational {
    fn from_bigint(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }
}

impl Scalar for Ratio<i128> {
    fn from_bigint(n: BigInt) -> Self {
        Ratio::from_integer(n.to_i128().expect("integer does not fit in i128"))
    }
}

static FACTORIALS: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// `n!`, memoized in a process-wide table.
pub fn factorial(n: u32) -> BigInt {
    let n = n as usize;
    {
        let table = FACTORIALS.read().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = FACTORIALS.write().unwrap_or_else(|e| e.into_inner());
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= n {
        let k = table.len();
        let next = &table[k - 1] * BigInt::from(k);
        table.push(next);
    }
    table[n].clone()
}

/// Product of factorials of a nonnegative exponent vector.
pub fn factorial_product<I: IntoIterator<Item = u32>>(exps: I) -> BigInt {
    exps.into_iter()
        .filter(|&e| e > 1)
        .fold(BigInt::one(), |acc, e| acc * factorial(e))
}

/// The polynomial binomial `n (n-1) ... (n-s+1) / s!`, valid for any integer `n`.
pub fn binom_poly(n: i64, s: u32) -> BigRational {
    let mut num = BigInt::one();
    for i in 0..s as i64 {
        num *= BigInt::from(n - i);
        if num.is_zero() {
            return BigRational::zero();
        }
    }
    BigRational::new(num, factorial(s))
}

pub fn harmonic(n: u64) -> BigRational {
    (1..=n).fold(BigRational::zero(), |acc, k| {
        acc + BigRational::new(BigInt::one(), BigInt::from(k))
    })
}

/// Reduced `p/q`, or `n` when integral.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(25).to_string(), "15511210043330985984000000");
        assert_eq!(factorial(3), BigInt::from(6));
    }

    #[test]
    fn polynomial_binomial() {
        assert_eq!(binom_poly(4, 2), BigRational::from_integer(6.into()));
        assert_eq!(binom_poly(0, 3), BigRational::zero());
        // (-1 choose 2) = (-1)(-2)/2 = 1
        assert_eq!(binom_poly(-1, 2), BigRational::one());
        assert_eq!(binom_poly(7, 0), BigRational::one());
    }

    #[test]
    fn harmonic_numbers() {
        assert_eq!(harmonic(3), BigRational::new(11.into(), 6.into()));
    }

    #[test]
    fn rational_text_round_trip() {
        for s in ["2", "-3/4", "0", "17/5"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert!(parse_rational("1/0").is_none());
    }

    #[test]
    fn recip_factorial_in_both_scalars() {
        let a: BigRational = Scalar::recip_factorial(4);
        let b: Ratio<i128> = Scalar::recip_factorial(4);
        assert_eq!(a, BigRational::new(1.into(), 24.into()));
        assert_eq!(b, Ratio::new(1, 24));
    }
}
