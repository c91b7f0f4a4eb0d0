//! Prime-field arithmetic on `u64` residues and dense polynomials over `F_p`.
//!
//! Polynomials are coefficient vectors, lowest degree first, with no trailing
//! zeros; the zero polynomial is the empty vector. This is the workhorse for
//! distinct-degree factorization, irreducibility tests for field moduli and
//! root finding over large primes.

use rand::Rng;

/// Deterministic Miller-Rabin for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &s in &SMALL {
        if n % s == 0 {
            return n == s;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    let f = ModP::new(n);
    'witness: for &a in &SMALL {
        let mut x = f.pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = f.mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Distinct prime divisors of `n`, by trial division.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Residues modulo an odd prime `p < 2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModP {
    p: u64,
}

impl ModP {
    pub fn new(p: u64) -> Self {
        Self { p }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    /// Inverse of a nonzero residue.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    pub fn reduce(&self, a: i128) -> u64 {
        a.rem_euclid(self.p as i128) as u64
    }

    pub fn is_square(&self, a: u64) -> bool {
        a == 0 || self.pow(a, (self.p - 1) / 2) == 1
    }

    // ---- polynomials ------------------------------------------------------

    pub fn trim(f: &mut Vec<u64>) {
        while f.last() == Some(&0) {
            f.pop();
        }
    }

    pub fn poly(&self, coeffs: &[i128]) -> Vec<u64> {
        let mut f: Vec<u64> = coeffs.iter().map(|&c| self.reduce(c)).collect();
        Self::trim(&mut f);
        f
    }

    pub fn poly_add(&self, f: &[u64], g: &[u64]) -> Vec<u64> {
        let n = f.len().max(g.len());
        let mut out: Vec<u64> = (0..n)
            .map(|i| self.add(*f.get(i).unwrap_or(&0), *g.get(i).unwrap_or(&0)))
            .collect();
        Self::trim(&mut out);
        out
    }

    pub fn poly_sub(&self, f: &[u64], g: &[u64]) -> Vec<u64> {
        let n = f.len().max(g.len());
        let mut out: Vec<u64> = (0..n)
            .map(|i| self.sub(*f.get(i).unwrap_or(&0), *g.get(i).unwrap_or(&0)))
            .collect();
        Self::trim(&mut out);
        out
    }

    pub fn poly_mul(&self, f: &[u64], g: &[u64]) -> Vec<u64> {
        if f.is_empty() || g.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; f.len() + g.len() - 1];
        for (i, &a) in f.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in g.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(a, b));
            }
        }
        Self::trim(&mut out);
        out
    }

    /// Quotient and remainder; `g` must be nonzero.
    pub fn poly_divrem(&self, f: &[u64], g: &[u64]) -> (Vec<u64>, Vec<u64>) {
        assert!(!g.is_empty(), "division by the zero polynomial");
        let mut r = f.to_vec();
        Self::trim(&mut r);
        if r.len() < g.len() {
            return (Vec::new(), r);
        }
        let lead_inv = self.inv(*g.last().unwrap());
        let mut quo = vec![0u64; r.len() - g.len() + 1];
        while r.len() >= g.len() {
            let shift = r.len() - g.len();
            let c = self.mul(*r.last().unwrap(), lead_inv);
            quo[shift] = c;
            for (j, &b) in g.iter().enumerate() {
                r[shift + j] = self.sub(r[shift + j], self.mul(c, b));
            }
            Self::trim(&mut r);
        }
        Self::trim(&mut quo);
        (quo, r)
    }

    pub fn poly_rem(&self, f: &[u64], g: &[u64]) -> Vec<u64> {
        self.poly_divrem(f, g).1
    }

    pub fn poly_monic(&self, f: &[u64]) -> Vec<u64> {
        match f.last() {
            None => Vec::new(),
            Some(&l) => {
                let li = self.inv(l);
                f.iter().map(|&c| self.mul(c, li)).collect()
            }
        }
    }

    /// Monic gcd.
    pub fn poly_gcd(&self, f: &[u64], g: &[u64]) -> Vec<u64> {
        let mut a = f.to_vec();
        let mut b = g.to_vec();
        Self::trim(&mut a);
        Self::trim(&mut b);
        while !b.is_empty() {
            let r = self.poly_rem(&a, &b);
            a = b;
            b = r;
        }
        self.poly_monic(&a)
    }

    pub fn poly_deriv(&self, f: &[u64]) -> Vec<u64> {
        let mut out: Vec<u64> = f
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mul(c, i as u64 % self.p))
            .collect();
        Self::trim(&mut out);
        out
    }

    pub fn poly_eval(&self, f: &[u64], x: u64) -> u64 {
        f.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    pub fn poly_powmod(&self, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
        let mut result = self.poly_rem(&[1], m);
        let mut b = self.poly_rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                result = self.poly_rem(&self.poly_mul(&result, &b), m);
            }
            b = self.poly_rem(&self.poly_mul(&b, &b), m);
            e >>= 1;
        }
        result
    }

    /// Rabin's test: `f` of degree `n` is irreducible iff
    /// `gcd(x^{p^i} - x, f) = 1` for `1 <= i <= n/2`.
    pub fn is_irreducible(&self, f: &[u64]) -> bool {
        let n = f.len().saturating_sub(1);
        if n == 0 {
            return false;
        }
        let x = vec![0, 1];
        let mut h = self.poly_rem(&x, f);
        for _ in 1..=n / 2 {
            h = self.poly_powmod(&h, self.p, f);
            let g = self.poly_gcd(&self.poly_sub(&h, &x), f);
            if g.len() > 1 {
                return false;
            }
        }
        true
    }

    pub fn is_squarefree(&self, f: &[u64]) -> bool {
        self.poly_gcd(f, &self.poly_deriv(f)).len() <= 1
    }

    /// Degrees of the irreducible factors of a squarefree `f`, descending.
    pub fn degree_pattern(&self, f: &[u64]) -> Vec<usize> {
        let x = vec![0, 1];
        let mut rest = self.poly_monic(f);
        let mut h = self.poly_rem(&x, &rest);
        let mut parts = Vec::new();
        let mut d = 0;
        while rest.len() > 1 {
            d += 1;
            if 2 * d > rest.len() - 1 {
                parts.push(rest.len() - 1);
                break;
            }
            h = self.poly_powmod(&h, self.p, &rest);
            let g = self.poly_gcd(&self.poly_sub(&h, &x), &rest);
            let gd = g.len() - 1;
            if gd > 0 {
                for _ in 0..gd / d {
                    parts.push(d);
                }
                rest = self.poly_divrem(&rest, &g).0;
                h = self.poly_rem(&h, &rest);
            }
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    /// Distinct roots of `f` in `F_p`, ascending.
    pub fn roots<R: Rng>(&self, f: &[u64], rng: &mut R) -> Vec<u64> {
        if f.len() <= 1 {
            return Vec::new();
        }
        let x = vec![0, 1];
        let xp = self.poly_powmod(&x, self.p, f);
        let linear = self.poly_gcd(&self.poly_sub(&xp, &x), f);
        let mut out = Vec::new();
        self.split_linear(linear, rng, &mut out);
        out.sort_unstable();
        out
    }

    fn split_linear<R: Rng>(&self, g: Vec<u64>, rng: &mut R, out: &mut Vec<u64>) {
        match g.len() {
            0 | 1 => {}
            2 => out.push(self.neg(self.mul(g[0], self.inv(g[1])))),
            _ => loop {
                let delta = rng.gen_range(0..self.p);
                let h = self.poly_powmod(&[delta, 1], (self.p - 1) / 2, &g);
                let d = self.poly_gcd(&self.poly_sub(&h, &[1]), &g);
                if d.len() > 1 && d.len() < g.len() {
                    let rest = self.poly_divrem(&g, &d).0;
                    self.split_linear(d, rng, out);
                    self.split_linear(self.poly_monic(&rest), rng, out);
                    return;
                }
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn primality_small_table() {
        let sieve: Vec<u64> = (0..200).filter(|&n| is_prime(n)).collect();
        let trial: Vec<u64> = (0..200u64)
            .filter(|&n| n >= 2 && (2..n).all(|d| n % d != 0))
            .collect();
        assert_eq!(sieve, trial);
        assert!(is_prime(1_000_000_009));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn pattern_of_x5_minus_1_mod_11_is_all_linear() {
        let f = ModP::new(11);
        let poly = f.poly(&[-1, 0, 0, 0, 0, 1]);
        assert_eq!(f.degree_pattern(&poly), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn pattern_matches_brute_force_factor_count() {
        // x^4 + 1 over F_3 splits into two quadratics.
        let f = ModP::new(3);
        assert_eq!(f.degree_pattern(&f.poly(&[1, 0, 0, 0, 1])), vec![2, 2]);
        // x^2 + 1 is irreducible mod 7.
        let f7 = ModP::new(7);
        assert!(f7.is_irreducible(&f7.poly(&[1, 0, 1])));
        assert!(!f7.is_irreducible(&f7.poly(&[-1, 0, 1])));
    }

    #[test]
    fn roots_agree_with_enumeration() {
        let f = ModP::new(101);
        let poly = f.poly(&[6, -5, 0, 3, 0, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let found = f.roots(&poly, &mut rng);
        let brute: Vec<u64> = (0..101).filter(|&x| f.poly_eval(&poly, x) == 0).collect();
        assert_eq!(found, brute);
    }
}
