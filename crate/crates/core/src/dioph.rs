//! Checks around the genus-4 curve `Y^2 = X^10 + 11 X^5 - 1` and the genus-2
//! curve `Y^2 = 5(1 - X^5)`: point counts over `F_11`, the factorization over
//! `Z[eps]`, the torsion-set sizes, and randomized tests of the substitutions
//! that carry `D_10` and `F_20` quintics onto the first curve.

use crate::error::{Error, Result};
use crate::galois::{discriminant, is_rational_square};
use crate::modp::{is_prime, ModP};
use crate::psi::RationalPsi;
use crate::QPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul, Neg, Sub};

/// Default prime for identity testing: prime, and `4 mod 5` so that fifth
/// roots are unique.
pub const IDENTITY_PRIME: u64 = 1_000_000_009;

/// `Y^2 = f(X)` over `F_p`, `f` with integer coefficients lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperellipticModel {
    pub p: u64,
    pub f: Vec<i64>,
}

impl HyperellipticModel {
    /// `Y^2 = X^10 + 11 X^5 - 1`.
    pub fn curve_c(p: u64) -> Self {
        let mut f = vec![0; 11];
        f[0] = -1;
        f[5] = 11;
        f[10] = 1;
        Self { p, f }
    }

    /// `Y^2 = 5 (1 - X^5)`.
    pub fn curve_d10(p: u64) -> Self {
        Self { p, f: vec![5, 0, 0, 0, 0, -5] }
    }

    fn reduced(&self) -> (ModP, Vec<u64>) {
        let fp = ModP::new(self.p);
        let c: Vec<i128> = self.f.iter().map(|&x| x as i128).collect();
        (fp, fp.poly(&c))
    }

    /// Points at infinity of the smooth model.
    pub fn points_at_infinity(&self) -> Result<u64> {
        let (fp, f) = self.reduced();
        let deg = self.f.len().checked_sub(1).ok_or_else(|| Error::SingularModel("zero polynomial".into()))?;
        if f.len() != self.f.len() {
            return Err(Error::SingularModel(format!("leading coefficient vanishes mod {}", self.p)));
        }
        Ok(if deg % 2 == 1 {
            1
        } else if fp.is_square(f[deg]) {
            2
        } else {
            0
        })
    }

    pub fn check_smooth(&self) -> Result<()> {
        let (fp, f) = self.reduced();
        if f.len() != self.f.len() || !fp.is_squarefree(&f) {
            return Err(Error::SingularModel(format!("f has a repeated root mod {}", self.p)));
        }
        Ok(())
    }
}

fn legendre(fp: &ModP, a: u64) -> i64 {
    if a == 0 {
        0
    } else if fp.is_square(a) {
        1
    } else {
        -1
    }
}

/// Points on the smooth completion over `F_p`.
pub fn count_hyperelliptic(model: &HyperellipticModel) -> Result<u64> {
    if !is_prime(model.p) || model.p == 2 {
        return Err(Error::InvalidField(format!("{} is not an odd prime", model.p)));
    }
    model.check_smooth()?;
    let (fp, f) = model.reduced();
    let affine: i64 = (0..model.p).map(|x| 1 + legendre(&fp, fp.poly_eval(&f, x))).sum();
    Ok(affine as u64 + model.points_at_infinity()?)
}

/// Same count by a double loop over `(x, y)`; for small `p` only.
pub fn count_hyperelliptic_naive(model: &HyperellipticModel) -> Result<u64> {
    model.check_smooth()?;
    let (fp, f) = model.reduced();
    let mut n = 0;
    for x in 0..model.p {
        let v = fp.poly_eval(&f, x);
        n += (0..model.p).filter(|&y| fp.mul(y, y) == v).count() as u64;
    }
    Ok(n + model.points_at_infinity()?)
}

/// `a + b eps` in `Z[eps]`, `eps^2 + eps - 1 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadRingElem {
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadRingElem {
    pub fn new(a: i64, b: i64) -> Self {
        Self { a: BigInt::from(a), b: BigInt::from(b) }
    }

    pub fn integer(a: BigInt) -> Self {
        Self { a, b: BigInt::zero() }
    }

    /// `eps_+ = (-1 + sqrt 5)/2`.
    pub fn eps_plus() -> Self {
        Self::new(0, 1)
    }

    /// `eps_- = (-1 - sqrt 5)/2 = -1 - eps_+`.
    pub fn eps_minus() -> Self {
        Self::new(-1, -1)
    }

    /// `sqrt 5 = 2 eps + 1`.
    pub fn sqrt5() -> Self {
        Self::new(1, 2)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::new(1, 0), |acc, _| acc * self.clone())
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        self.b.is_zero().then_some(&self.a)
    }
}

impl Add for QuadRingElem {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for QuadRingElem {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for QuadRingElem {
    type Output = Self;
    fn neg(self) -> Self {
        Self { a: -self.a, b: -self.b }
    }
}

impl Mul for QuadRingElem {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        // eps^2 = 1 - eps
        let bd = &self.b * &o.b;
        Self {
            a: &self.a * &o.a + &bd,
            b: &self.a * &o.b + &self.b * &o.a - bd,
        }
    }
}

/// Power sums of `eps_+, eps_-` by `p_r = e1 p_{r-1} - e2 p_{r-2}`, with
/// `e1 = -1`, `e2 = -1`; returns `p_1..p_n`.
pub fn eps_power_sums(n: usize) -> Vec<i64> {
    let (e1, e2) = (-1i64, -1i64);
    let mut p = vec![2i64, e1];
    for r in 2..=n {
        p.push(e1 * p[r - 1] - e2 * p[r - 2]);
    }
    p[1..=n].to_vec()
}

/// `(X^5 - eps_+^5)(X^5 - eps_-^5)` equals `c0 + c5 X^5 + c10 X^10` exactly.
pub fn factorization_identity_for(c0: i64, c5: i64, c10: i64) -> bool {
    let (ep, em) = (QuadRingElem::eps_plus(), QuadRingElem::eps_minus());
    let p5 = ep.pow(5) + em.pow(5);
    let n5 = (ep * em).pow(5);
    let (Some(p5), Some(n5)) = (p5.as_integer(), n5.as_integer()) else {
        return false;
    };
    let newton = eps_power_sums(5);
    if BigInt::from(newton[4]) != *p5 {
        return false;
    }
    c10 == 1 && BigInt::from(c5) == -p5 && BigInt::from(c0) == *n5
}

/// `X^10 + 11 X^5 - 1 = prod (X - zeta^i eps_+)(X - zeta^i eps_-)`.
pub fn factorization_identity() -> bool {
    factorization_identity_for(-1, 11, 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TorsionCurve {
    C,
    D10,
}

/// Size of the set `T` of Weierstrass points, points over `X = 0` when they
/// are part of `T`, and points at infinity, counted from the exact factorization.
pub fn torsion_set_cardinality(curve: TorsionCurve) -> u64 {
    let (f, extra_over_zero): (Vec<i64>, u64) = match curve {
        TorsionCurve::C => (HyperellipticModel::curve_c(3).f, 0),
        // (0, +-sqrt 5), with sqrt 5 = 2 eps + 1 in Z[eps]
        TorsionCurve::D10 => {
            let s = QuadRingElem::sqrt5();
            assert_eq!(s.clone() * s, QuadRingElem::new(5, 0));
            (HyperellipticModel::curve_d10(3).f, 2)
        }
    };
    let fq = QPoly::new(f.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect());
    let distinct_roots = fq.squarefree_part().degree().unwrap_or(0) as u64;
    let deg = f.len() - 1;
    let infinity = if deg % 2 == 1 {
        1
    } else if is_rational_square(&fq.lead()) {
        2
    } else {
        0
    };
    distinct_roots + extra_over_zero + infinity
}

// ---- randomized substitution identities ------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityKind {
    WeberD10,
    F20Resolvent,
}

/// Which way round the `D_10` coordinates are read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeberLabels {
    /// `X = 5 mu / (2 (lambda - 1))`, `Y` the quotient with `mu^5`.
    Corrected,
    /// The two coordinates the other way round.
    Literal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityOptions {
    pub trials: u32,
    pub seed: u64,
    pub prime: u64,
    pub weber_labels: WeberLabels,
    /// Adds 1 to `Y` before testing; every trial should then fail.
    pub mutate: bool,
}

impl Default for IdentityOptions {
    fn default() -> Self {
        Self { trials: 100, seed: 0, prime: IDENTITY_PRIME, weber_labels: WeberLabels::Corrected, mutate: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub kind: IdentityKind,
    pub trials: u32,
    pub passes: u32,
    pub skips: u32,
    pub seed: u64,
    pub prime: u64,
    /// 1-based index of the first failing trial.
    pub first_failure: Option<u32>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.passes == self.trials
    }
}

const MAX_RESAMPLES: u32 = 1000;

fn curve_holds(fp: &ModP, x: u64, y: u64) -> bool {
    let x5 = fp.pow(x, 5);
    let rhs = fp.sub(fp.add(fp.mul(x5, x5), fp.mul(11, x5)), 1);
    fp.mul(y, y) == rhs
}

fn weber_point(fp: &ModP, lambda: u64, labels: WeberLabels) -> Option<(u64, u64)> {
    let l1 = fp.sub(lambda, 1);
    let quad = fp.add(fp.sub(fp.mul(lambda, lambda), fp.mul(6, lambda)), 25);
    if lambda == 0 || l1 == 0 || quad == 0 {
        return None;
    }
    let p = fp.p();
    let c55 = fp.pow(5, 5);
    // f2 = 5^5 lambda mu^5 / ((lambda-1)^4 (lambda^2 - 6 lambda + 25)) = 4
    let mu5 = fp.mul(fp.mul(4, fp.mul(fp.pow(l1, 4), quad)), fp.inv(fp.mul(c55, lambda)));
    let fifth_root_exp = inverse_mod(5, p - 1)?;
    let mu = fp.pow(mu5, fifth_root_exp);
    if mu == 0 || fp.pow(mu, 5) != mu5 {
        return None;
    }
    let short = fp.mul(fp.mul(5, mu), fp.inv(fp.mul(2, l1)));
    let num = fp.add(
        fp.mul(fp.neg(8), fp.mul(fp.sub(lambda, 3), fp.pow(l1, 5))),
        fp.mul(c55, fp.mul(fp.sub(fp.mul(2, lambda), 1), mu5)),
    );
    let long = fp.mul(num, fp.inv(fp.mul(32, fp.pow(l1, 5))));
    Some(match labels {
        WeberLabels::Corrected => (short, long),
        WeberLabels::Literal => (long, short),
    })
}

fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(m as i128) as u64)
}

fn f20_point<R: Rng>(fp: &ModP, psi: u64, rng: &mut R) -> Option<(u64, u64)> {
    if psi == 0 {
        return None;
    }
    let psi5 = fp.pow(psi, 5);
    let pw = |k: u64| fp.pow(psi, k);
    let sextic = vec![
        fp.mul(4_000_000, fp.mul(psi, fp.add(3, psi5))),
        fp.neg(fp.mul(800_000, fp.add(1, fp.mul(2, psi5)))),
        fp.mul(250_000, pw(4)),
        fp.neg(fp.mul(20_000, pw(3))),
        fp.mul(1_000, pw(2)),
        fp.neg(fp.mul(40, psi)),
        1,
    ];
    let ten_psi = fp.mul(10, psi);
    let x = fp.roots(&sextic, rng).into_iter().find(|&x| x != ten_psi)?;
    let d = fp.sub(x, ten_psi);
    let d5 = fp.pow(d, 5);
    let big_x = fp.mul(10, fp.inv(d));
    let num = fp.sub(fp.mul(x, fp.sub(800_000, d5)), fp.mul(10_000_000, psi));
    let big_y = fp.mul(num, fp.inv(fp.mul(20, fp.mul(d5, psi))));
    Some((big_x, big_y))
}

/// Randomized check that the substitution lands on `Y^2 = X^10 + 11 X^5 - 1`
/// over `F_P`. Trial `i` draws from its own ChaCha stream, so reports are
/// reproducible from `(seed, prime)`.
pub fn substitution_identity_check(kind: IdentityKind, opts: &IdentityOptions) -> Result<IdentityReport> {
    if opts.trials == 0 {
        return Err(Error::InvalidInput("trials must be positive".into()));
    }
    if !is_prime(opts.prime) || opts.prime % 5 != 4 {
        return Err(Error::InvalidInput(format!("{} is not a prime = 4 mod 5", opts.prime)));
    }
    let fp = ModP::new(opts.prime);
    let mut report = IdentityReport {
        kind,
        trials: opts.trials,
        passes: 0,
        skips: 0,
        seed: opts.seed,
        prime: opts.prime,
        first_failure: None,
    };
    for trial in 0..opts.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        rng.set_stream(trial as u64);
        let mut point = None;
        for _ in 0..MAX_RESAMPLES {
            let t = rng.gen_range(0..opts.prime);
            point = match kind {
                IdentityKind::WeberD10 => weber_point(&fp, t, opts.weber_labels),
                IdentityKind::F20Resolvent => f20_point(&fp, t, &mut rng),
            };
            if point.is_some() {
                break;
            }
            report.skips += 1;
        }
        let (x, mut y) = point.ok_or_else(|| Error::InvalidInput("no usable sample".into()))?;
        if opts.mutate {
            y = fp.add(y, 1);
        }
        if curve_holds(&fp, x, y) {
            report.passes += 1;
        } else if report.first_failure.is_none() {
            report.first_failure = Some(trial + 1);
        }
    }
    Ok(report)
}

/// `(D_psi is a square, 5 (1 - psi^5) is a square)`; the two agree because
/// `D_psi = 2^8 5^4 * 5 (1 - psi^5)`.
pub fn disc_square_equivalence(psi: &RationalPsi) -> Result<(bool, bool)> {
    let (_, d_square) = discriminant(psi)?;
    let e = BigRational::from_integer(BigInt::from(5)) * (BigRational::one() - psi.to_big().pow(5));
    let e_square = is_rational_square(&e);
    if d_square != e_square {
        return Err(Error::Integrality(format!("square tests disagree at psi = {psi}")));
    }
    Ok((d_square, e_square))
}
