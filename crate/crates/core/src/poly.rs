//! Dense univariate polynomials over any `num_traits` scalar.
//!
//! Ring operations need only `Num`; `divrem`, `gcd` and `resultant` assume the
//! scalar is a field (exact rationals in practice, see [`crate::QPoly`]).

use num_traits::{Num, One, Zero};
use std::fmt;
use std::ops::Neg;

/// Coefficients lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Num> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^n`
    pub fn monomial(c: T, n: usize) -> Self {
        let mut v = vec![T::zero(); n + 1];
        v[n] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut k = T::zero();
        for c in &self.coeffs {
            if !k.is_zero() {
                out.push(c.clone() * k.clone());
            }
            k = k + T::one();
        }
        Self::new(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(T::one()), |acc, _| acc.mul(self))
    }

    /// Euclidean division over a field.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.lead();
        let mut r = self.coeffs.clone();
        let mut q = vec![T::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let c = r.last().unwrap().clone() / lead.clone();
            for (j, b) in d.coeffs.iter().enumerate() {
                r[shift + j] = r[shift + j].clone() - c.clone() * b.clone();
            }
            q[shift] = c;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        (Self::new(q), Self::new(r))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let l = self.lead();
        Self::new(self.coeffs.iter().map(|c| c.clone() / l.clone()).collect())
    }

    /// Monic gcd over a field.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors (up to a unit), over a
    /// field of characteristic zero.
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0
    }

    /// Resultant as the determinant of the Sylvester matrix, by fraction-aware
    /// Gaussian elimination over a field.
    pub fn resultant(&self, other: &Self) -> T {
        let (m, n) = match (self.degree(), other.degree()) {
            (Some(m), Some(n)) => (m, n),
            _ => return T::zero(),
        };
        let size = m + n;
        if size == 0 {
            return T::one();
        }
        let mut mat = vec![vec![T::zero(); size]; size];
        for row in 0..n {
            for (j, c) in self.coeffs.iter().rev().enumerate() {
                mat[row][row + j] = c.clone();
            }
        }
        for row in 0..m {
            for (j, c) in other.coeffs.iter().rev().enumerate() {
                mat[n + row][row + j] = c.clone();
            }
        }
        determinant(mat)
    }
}

impl<T: Clone + Num + Neg<Output = T>> Poly<T> {
    /// Discriminant `(-1)^{n(n-1)/2} Res(f, f') / lead(f)`.
    pub fn discriminant(&self) -> T {
        let n = self.degree().unwrap_or(0);
        let res = self.resultant(&self.derivative()) / self.lead();
        if (n * n.saturating_sub(1) / 2) % 2 == 1 {
            -res
        } else {
            res
        }
    }
}

/// Determinant over a field by Gaussian elimination with nonzero pivoting.
pub fn determinant<T: Clone + Num>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    let mut det = T::one();
    let mut negate = false;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return T::zero();
        };
        if piv != col {
            m.swap(piv, col);
            negate = !negate;
        }
        let pv = m[col][col].clone();
        det = det * pv.clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() / pv.clone();
            for c in col..n {
                let v = m[col][c].clone();
                m[r][c] = m[r][c].clone() - factor.clone() * v;
            }
        }
    }
    if negate {
        T::zero() - det
    } else {
        det
    }
}

impl<T: Clone + Num + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: Clone + Num> Zero for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Clone + Num> std::ops::Add for Poly<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Poly::add(&self, &rhs)
    }
}

impl<T: Clone + Num> One for Poly<T> {
    fn one() -> Self {
        Poly::constant(T::one())
    }
}

impl<T: Clone + Num> std::ops::Mul for Poly<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Poly::mul(&self, &rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn qp(c: &[i64]) -> Poly<BigRational> {
        Poly::new(c.iter().map(|&x| q(x)).collect())
    }

    #[test]
    fn quadratic_discriminant() {
        // x^2 + 3x + 1: 9 - 4 = 5
        assert_eq!(qp(&[1, 3, 1]).discriminant(), q(5));
        // 2x^2 + x - 1: 1 + 8 = 9
        assert_eq!(qp(&[-1, 1, 2]).discriminant(), q(9));
    }

    #[test]
    fn cubic_discriminant_matches_formula() {
        // x^3 + a x + b has discriminant -4a^3 - 27b^2
        for (a, b) in [(1, 1), (-3, 2), (2, -5), (0, 7)] {
            let d = qp(&[b, a, 0, 1]).discriminant();
            assert_eq!(d, q(-4 * a * a * a - 27 * b * b));
        }
    }

    #[test]
    fn divrem_and_gcd() {
        let f = qp(&[-1, 0, 1]); // x^2 - 1
        let g = qp(&[1, 1]); // x + 1
        let (quo, rem) = f.divrem(&g);
        assert_eq!(quo, qp(&[-1, 1]));
        assert!(rem.is_zero());
        assert_eq!(f.gcd(&qp(&[1, 2, 1])), qp(&[1, 1]));
    }

    #[test]
    fn squarefree_part_removes_multiplicity() {
        let f = qp(&[1, 1]).pow(3).mul(&qp(&[2, 0, 1]));
        let s = f.squarefree_part().monic();
        assert_eq!(s, qp(&[1, 1]).mul(&qp(&[2, 0, 1])));
    }

    #[test]
    fn integer_ring_ops() {
        let f = Poly::new(vec![1i64, 2, 3]);
        let g = Poly::new(vec![0i64, 1]);
        assert_eq!(f.mul(&g).coeffs(), &[0, 1, 2, 3]);
        assert_eq!(f.eval(&2), 17);
        assert_eq!(f.derivative().coeffs(), &[2, 6]);
    }
}
