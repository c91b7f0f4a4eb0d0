//! Rational parameters of the family.

use crate::error::{Error, Result};
use crate::ffield::{Fe, FieldCtx};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A rational `num/den` in lowest terms with `den > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RationalPsi {
    num: i64,
    den: i64,
}

impl RationalPsi {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        Ok(Self { num: n, den: d })
    }

    pub fn integer(n: i64) -> Self {
        Self { num: n, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn to_big(&self) -> BigRational {
        BigRational::new(BigInt::from(self.num), BigInt::from(self.den))
    }

    /// Image in `F_q`, or `BadReduction` when `p` divides the denominator.
    pub fn reduce(&self, ctx: &FieldCtx) -> Result<Fe> {
        let p = ctx.p() as i64;
        if self.den % p == 0 {
            return Err(Error::BadReduction(format!("{self} is not p-integral at p = {p}")));
        }
        let d = ctx.from_int(self.den);
        Ok(ctx.mul(ctx.from_int(self.num), ctx.inv(d).expect("nonzero")))
    }

    /// `p` is a place of good reduction: `p` odd, `p != 5`, `p` does not divide
    /// the denominator and `psi^5 != 1` mod `p`.
    pub fn is_good_prime(&self, p: u64) -> bool {
        if p == 2 || p == 5 || self.den % p as i64 == 0 {
            return false;
        }
        let p = p as i128;
        let u = (self.num as i128).rem_euclid(p);
        let v = (self.den as i128).rem_euclid(p);
        let pow5 = |x: i128| (0..5).fold(1i128, |acc, _| acc * x % p);
        pow5(u) != pow5(v)
    }
}

impl fmt::Display for RationalPsi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for RationalPsi {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("cannot parse rational '{s}'"));
        match s.trim().split_once('/') {
            Some((n, d)) => Self::new(
                n.trim().parse().map_err(|_| bad())?,
                d.trim().parse().map_err(|_| bad())?,
            ),
            None => Ok(Self::integer(s.trim().parse().map_err(|_| bad())?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_normalize() {
        let a: RationalPsi = "4/-6".parse().unwrap();
        assert_eq!((a.num(), a.den()), (-2, 3));
        assert_eq!("-2".parse::<RationalPsi>().unwrap(), RationalPsi::integer(-2));
        assert!("1/0".parse::<RationalPsi>().is_err());
        assert_eq!(a.to_string(), "-2/3");
    }

    #[test]
    fn reduction_and_good_primes() {
        let f7 = FieldCtx::new(7, 1).unwrap();
        let half = RationalPsi::new(1, 2).unwrap();
        assert_eq!(half.reduce(&f7).unwrap(), f7.from_int(4));
        let f3 = FieldCtx::new(3, 1).unwrap();
        assert!(RationalPsi::new(1, 3).unwrap().reduce(&f3).is_err());
        // 2^5 = 32 = 1 mod 31
        assert!(!RationalPsi::integer(2).is_good_prime(31));
        assert!(RationalPsi::integer(2).is_good_prime(13));
        assert!(!RationalPsi::integer(2).is_good_prime(5));
    }
}
