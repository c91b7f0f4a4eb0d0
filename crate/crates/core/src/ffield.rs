//! Finite fields `F_q`, `q = p^k`, with exp/log tables.
//!
//! Elements are encoded as integers in `[0, q)`: the coefficient vector
//! `(c_0, .., c_{k-1})` of the polynomial-basis representative maps to
//! `c_0 + c_1 p + .. + c_{k-1} p^{k-1}`. For `k = 1` this is the usual residue.
//! Multiplication goes through discrete-log tables built from a verified
//! generator, so squareness and `d`-th power residuosity are parity checks on
//! the log.

use crate::error::{Error, Result};
use crate::modp::{gcd_u64, is_prime, prime_divisors, ModP};
use serde::Serialize;

/// Default cap on inner-loop steps for enumeration commands.
pub const DEFAULT_BUDGET: u64 = 2_000_000_000;

/// Largest field size the tables are built for.
pub const MAX_FIELD_SIZE: u64 = 1 << 22;

/// An element of some [`FieldCtx`]. Only meaningful together with its field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

const NO_LOG: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct FieldCtx {
    p: u32,
    k: u32,
    q: u32,
    /// Monic irreducible modulus over `F_p`, lowest coefficient first (`[0, 1]` for `k = 1`).
    modulus: Vec<u64>,
    /// `exp[i] = g^i`, stored twice over so `exp[log a + log b]` needs no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    budget: u64,
}

impl FieldCtx {
    /// Builds `F_{p^k}` for an odd prime `p != 5` and `1 <= k <= 4`.
    pub fn new(p: u64, k: u32) -> Result<Self> {
        check_characteristic(p)?;
        if !(1..=4).contains(&k) {
            return Err(Error::InvalidField(format!("extension degree {k} not in 1..=4")));
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= MAX_FIELD_SIZE)
            .ok_or_else(|| Error::InvalidField(format!("{p}^{k} exceeds the table limit")))?;
        let fp = ModP::new(p);
        let modulus = if k == 1 { vec![0, 1] } else { find_modulus(&fp, k as usize) };
        Self::with_modulus(p, k, q, modulus)
    }

    /// Builds the field from an explicit modulus, verifying irreducibility.
    pub fn with_modulus_coeffs(p: u64, modulus: &[u64]) -> Result<Self> {
        let k = modulus.len().saturating_sub(1) as u32;
        if k == 1 {
            return Self::new(p, 1);
        }
        check_characteristic(p)?;
        let fp = ModP::new(p);
        if modulus.last() != Some(&1) || !fp.is_irreducible(modulus) {
            return Err(Error::InvalidField(format!(
                "modulus {modulus:?} is not monic irreducible over F_{p}"
            )));
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= MAX_FIELD_SIZE && (2..=4).contains(&k))
            .ok_or_else(|| Error::InvalidField(format!("{p}^{k} not supported")))?;
        Self::with_modulus(p, k, q, modulus.to_vec())
    }

    fn with_modulus(p: u64, k: u32, q: u64, modulus: Vec<u64>) -> Result<Self> {
        let fp = ModP::new(p);
        let order = q - 1;
        let factors = prime_divisors(order);
        let mut ctx = FieldCtx {
            p: p as u32,
            k,
            q: q as u32,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            neg: Vec::new(),
            budget: DEFAULT_BUDGET,
        };
        let generator = (1..q as u32)
            .map(Fe)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&l| ctx.slow_pow(&fp, g, order / l) != Fe::ONE)
            })
            .ok_or_else(|| Error::InvalidField("no generator found".into()))?;

        let n = order as usize;
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![NO_LOG; q as usize];
        let mut x = Fe::ONE;
        for i in 0..n {
            if log[x.0 as usize] != NO_LOG {
                return Err(Error::InvalidField("generator order check failed".into()));
            }
            exp[i] = x.0;
            exp[i + n] = x.0;
            log[x.0 as usize] = i as u32;
            x = ctx.slow_mul(&fp, x, generator);
        }
        if x != Fe::ONE {
            return Err(Error::InvalidField("generator does not have order q-1".into()));
        }
        ctx.exp = exp;
        ctx.log = log;
        ctx.neg = (0..q as u32).map(|c| ctx.digitwise(Fe(c), Fe(0), |a, _| fp.neg(a)).0).collect();
        Ok(ctx)
    }

    /// Same field with a different enumeration budget.
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// Fails with [`Error::BudgetExceeded`] if `steps` exceeds the budget.
    pub fn check_budget(&self, steps: u64) -> Result<()> {
        if steps > self.budget {
            Err(Error::BudgetExceeded { needed: steps, budget: self.budget })
        } else {
            Ok(())
        }
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.q as u64
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn generator(&self) -> Fe {
        Fe(self.exp[1])
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Fe) -> u64 {
        let n = self.q() - 1;
        let l = self.log(a) as u64;
        n / gcd_u64(n, l)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (0..self.q).map(Fe)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = Fe> + Clone {
        (1..self.q).map(Fe)
    }

    pub fn from_int(&self, n: i64) -> Fe {
        Fe(n.rem_euclid(self.p as i64) as u32)
    }

    /// Element with the given polynomial-basis coefficients (reduced mod `p`).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Fe {
        assert!(coeffs.len() <= self.k as usize);
        let mut code = 0u64;
        for &c in coeffs.iter().rev() {
            code = code * self.p as u64 + c % self.p as u64;
        }
        Fe(code as u32)
    }

    pub fn coeffs(&self, a: Fe) -> Vec<u64> {
        let mut x = a.0 as u64;
        (0..self.k)
            .map(|_| {
                let d = x % self.p as u64;
                x /= self.p as u64;
                d
            })
            .collect()
    }

    /// `log_g(a)` for nonzero `a`.
    #[inline]
    pub fn log(&self, a: Fe) -> u32 {
        debug_assert!(!a.is_zero());
        self.log[a.0 as usize]
    }

    #[inline]
    pub fn exp(&self, i: u64) -> Fe {
        Fe(self.exp[(i % (self.q as u64 - 1)) as usize])
    }

    #[inline]
    fn digitwise(&self, a: Fe, b: Fe, op: impl Fn(u64, u64) -> u64) -> Fe {
        let p = self.p as u64;
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let mut out = 0u64;
        let mut w = 1u64;
        for _ in 0..self.k {
            out += op(x % p, y % p) * w;
            x /= p;
            y /= p;
            w *= p;
        }
        Fe(out as u32)
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.k == 1 {
            let s = a.0 + b.0;
            return Fe(if s >= self.p { s - self.p } else { s });
        }
        let p = self.p as u64;
        self.digitwise(a, b, |x, y| {
            let s = x + y;
            if s >= p {
                s - p
            } else {
                s
            }
        })
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        Fe(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        Fe(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Fe) -> Option<Fe> {
        if a.is_zero() {
            return None;
        }
        let n = self.q - 1;
        let l = self.log[a.0 as usize];
        Some(Fe(self.exp[((n - l) % n) as usize]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Option<Fe> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.is_zero() {
            return Fe::ZERO;
        }
        let n = self.q as u64 - 1;
        let l = self.log[a.0 as usize] as u64;
        Fe(self.exp[((l as u128 * e as u128) % n as u128) as usize])
    }

    /// Quadratic residue test by log parity; zero counts as a square.
    #[inline]
    pub fn is_square(&self, a: Fe) -> bool {
        a.is_zero() || self.log[a.0 as usize] % 2 == 0
    }

    /// `#{y : y^5 = c}`.
    pub fn fifth_power_count(&self, c: Fe) -> u64 {
        if c.is_zero() {
            return 1;
        }
        let d = gcd_u64(5, self.q as u64 - 1);
        if self.log[c.0 as usize] as u64 % d == 0 {
            d
        } else {
            0
        }
    }

    /// `#{x : a2 x^2 + a1 x + a0 = 0}` for `a2 != 0`, from the discriminant.
    #[inline]
    pub fn quadratic_root_count(&self, a2: Fe, a1: Fe, a0: Fe) -> u64 {
        debug_assert!(!a2.is_zero());
        let four = self.from_int(4);
        let disc = self.sub(self.mul(a1, a1), self.mul(four, self.mul(a2, a0)));
        if disc.is_zero() {
            1
        } else if self.is_square(disc) {
            2
        } else {
            0
        }
    }

    // ---- table-free arithmetic used while building the tables -------------

    fn slow_mul(&self, fp: &ModP, a: Fe, b: Fe) -> Fe {
        if self.k == 1 {
            return Fe(fp.mul(a.0 as u64, b.0 as u64) as u32);
        }
        let prod = fp.poly_mul(&self.coeffs_trimmed(a), &self.coeffs_trimmed(b));
        let r = fp.poly_rem(&prod, &self.modulus);
        self.from_coeffs(&r)
    }

    fn slow_pow(&self, fp: &ModP, mut a: Fe, mut e: u64) -> Fe {
        let mut r = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                r = self.slow_mul(fp, r, a);
            }
            a = self.slow_mul(fp, a, a);
            e >>= 1;
        }
        r
    }

    fn coeffs_trimmed(&self, a: Fe) -> Vec<u64> {
        let mut c = self.coeffs(a);
        ModP::trim(&mut c);
        c
    }
}

fn check_characteristic(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::InvalidField(format!("{p} is not prime")));
    }
    if p == 2 || p == 5 {
        return Err(Error::InvalidField(format!(
            "characteristic {p} divides 10; the family has bad reduction there"
        )));
    }
    Ok(())
}

/// First monic irreducible polynomial of degree `k` in lexicographic order.
fn find_modulus(fp: &ModP, k: usize) -> Vec<u64> {
    let p = fp.p();
    let total = p.pow(k as u32);
    (0..total)
        .map(|mut code| {
            let mut f: Vec<u64> = (0..k)
                .map(|_| {
                    let d = code % p;
                    code /= p;
                    d
                })
                .collect();
            f.push(1);
            f
        })
        .find(|f| f[0] != 0 && fp.is_irreducible(f))
        .expect("irreducible polynomials exist in every degree")
}

/// A field embedding `F_{p^k} -> F_{p^{k'}}` with `k | k'`.
///
/// The image of the polynomial-basis generator is some root of its minimal
/// polynomial in the larger field; different roots give Galois-conjugate
/// embeddings, which count identically.
#[derive(Clone, Debug)]
pub struct Embedding {
    map: Vec<Fe>,
}

impl Embedding {
    pub fn new(small: &FieldCtx, big: &FieldCtx) -> Result<Self> {
        if small.p() != big.p() || big.k() % small.k() != 0 {
            return Err(Error::InvalidInput(format!(
                "no embedding F_{} -> F_{}",
                small.q(),
                big.q()
            )));
        }
        let root = if small.k() == 1 {
            Fe::ZERO
        } else {
            let m: Vec<Fe> = small.modulus().iter().map(|&c| big.from_int(c as i64)).collect();
            big.elements()
                .find(|&x| m.iter().rev().fold(Fe::ZERO, |acc, &c| big.add(big.mul(acc, x), c)).is_zero())
                .ok_or_else(|| Error::InvalidField("minimal polynomial has no root".into()))?
        };
        let map = small
            .elements()
            .map(|a| {
                if small.k() == 1 {
                    return big.from_int(a.0 as i64);
                }
                let mut acc = Fe::ZERO;
                for &c in small.coeffs(a).iter().rev() {
                    acc = big.add(big.mul(acc, root), big.from_int(c as i64));
                }
                acc
            })
            .collect();
        Ok(Self { map })
    }

    #[inline]
    pub fn apply(&self, a: Fe) -> Fe {
        self.map[a.0 as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_excluded_characteristics() {
        assert!(matches!(FieldCtx::new(2, 1), Err(Error::InvalidField(_))));
        assert!(matches!(FieldCtx::new(5, 1), Err(Error::InvalidField(_))));
        assert!(matches!(FieldCtx::new(9, 1), Err(Error::InvalidField(_))));
        assert!(matches!(FieldCtx::new(3, 5), Err(Error::InvalidField(_))));
    }

    #[test]
    fn rejects_reducible_modulus() {
        // x^2 - 1 = (x-1)(x+1) over F_3
        assert!(FieldCtx::with_modulus_coeffs(3, &[2, 0, 1]).is_err());
        // x^2 + 1 is irreducible over F_3
        let f9 = FieldCtx::with_modulus_coeffs(3, &[1, 0, 1]).unwrap();
        assert_eq!(f9.q(), 9);
    }

    #[test]
    fn generator_orders() {
        let f11 = FieldCtx::new(11, 1).unwrap();
        assert_eq!(f11.order(f11.generator()), 10);
        let f9 = FieldCtx::new(3, 2).unwrap();
        assert_eq!(f9.order(f9.generator()), 8);
    }

    #[test]
    fn f2401_generator_order_exhaustive() {
        let f = FieldCtx::new(7, 4).unwrap();
        assert_eq!(f.q(), 2401);
        let g = f.generator();
        let mut x = g;
        let mut n = 1u64;
        while x != Fe::ONE {
            x = f.mul(x, g);
            n += 1;
        }
        assert_eq!(n, 2400);
    }

    #[test]
    fn exp_log_roundtrip() {
        for (p, k) in [(3, 1), (3, 2), (7, 2), (13, 1), (3, 3)] {
            let f = FieldCtx::new(p, k).unwrap();
            for a in f.nonzero() {
                assert_eq!(f.exp(f.log(a) as u64), a);
                assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
            }
        }
    }

    #[test]
    fn fifth_power_counts() {
        let f11 = FieldCtx::new(11, 1).unwrap();
        assert_eq!(f11.fifth_power_count(Fe::ONE), 5);
        let brute = f11.elements().filter(|&y| f11.pow(y, 5) == Fe::ONE).count();
        assert_eq!(brute, 5);
        let f7 = FieldCtx::new(7, 1).unwrap();
        assert_eq!(f7.fifth_power_count(f7.from_int(3)), 1);
        assert_eq!(f7.fifth_power_count(Fe::ZERO), 1);
        assert_eq!(f11.fifth_power_count(Fe::ZERO), 1);
    }

    #[test]
    fn fifth_power_counts_partition_field() {
        for (p, k) in [(3, 1), (11, 1), (31, 1), (3, 4), (7, 2)] {
            let f = FieldCtx::new(p, k).unwrap();
            let total: u64 = f.elements().map(|c| f.fifth_power_count(c)).sum();
            assert_eq!(total, f.q());
        }
    }

    #[test]
    fn quadratic_examples_over_f11() {
        let f = FieldCtx::new(11, 1).unwrap();
        let c = |n| f.from_int(n);
        assert_eq!(f.quadratic_root_count(c(1), c(0), c(-1)), 2);
        assert_eq!(f.quadratic_root_count(c(1), c(0), c(1)), 0);
        assert_eq!(f.quadratic_root_count(c(1), c(2), c(1)), 1);
    }

    #[test]
    fn quadratic_counts_match_enumeration() {
        for (p, k) in [(3, 1), (7, 1), (11, 1), (13, 1), (3, 2)] {
            let f = FieldCtx::new(p, k).unwrap();
            for a2 in f.nonzero() {
                for a1 in f.elements() {
                    for a0 in f.elements() {
                        let brute = f
                            .elements()
                            .filter(|&x| {
                                f.add(f.add(f.mul(a2, f.mul(x, x)), f.mul(a1, x)), a0).is_zero()
                            })
                            .count() as u64;
                        assert_eq!(f.quadratic_root_count(a2, a1, a0), brute);
                    }
                }
            }
        }
    }

    #[test]
    fn budget_guard() {
        let f = FieldCtx::new(7, 1).unwrap().with_budget(100);
        assert!(f.check_budget(100).is_ok());
        assert_eq!(
            f.check_budget(101),
            Err(Error::BudgetExceeded { needed: 101, budget: 100 })
        );
    }
}
