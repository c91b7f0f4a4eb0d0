//! Galois group of `f_psi = 4x^5 - 5 psi x^4 + 1` over `Q`, with
//! certificates, Frobenius cycle types, and the reciprocity scan that ties
//! them to the mirror quartics.

use crate::counts::count_quintic_roots;
use crate::error::{Error, Result};
use crate::ffield::FieldCtx;
use crate::modp::{is_prime, ModP};
use crate::psi::RationalPsi;
use crate::sp4s6::{cycle_type_to_class, CycleType};
use crate::weil::{reconstruct_mirror_quartic_by, EulerClassMod2, Route};
use crate::{QPoly, ZPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

pub const DEFAULT_PRIME_BUDGET: u64 = 200;

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// `v f_psi = 4v x^5 - 5u x^4 + v` for `psi = u/v`, lowest degree first.
pub fn cleared_quintic(psi: &RationalPsi) -> [i128; 6] {
    let (u, v) = (psi.num() as i128, psi.den() as i128);
    [v, 0, 0, 0, -5 * u, 4 * v]
}

pub fn quintic_qpoly(psi: &RationalPsi) -> QPoly {
    let p = psi.to_big();
    let c = |n: i64| BigRational::from_integer(big(n));
    QPoly::new(vec![c(1), c(0), c(0), c(0), -c(5) * p, c(4)])
}

fn check_psi(psi: &RationalPsi) -> Result<()> {
    if psi.num() == psi.den() {
        return Err(Error::InvalidInput("psi = 1 is excluded".into()));
    }
    Ok(())
}

/// `r` is the square of a rational.
pub fn is_rational_square(r: &BigRational) -> bool {
    if r.is_negative() {
        return false;
    }
    let n = r.numer() * r.denom();
    let s = n.sqrt();
    &s * &s == n
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discriminant {
    /// Reduced fraction as text.
    pub value: String,
    pub is_square: bool,
}

/// `disc(f_psi) = 2^8 5^5 (1 - psi^5)`, cross-checked against `Res(f, f')`.
pub fn discriminant(psi: &RationalPsi) -> Result<(BigRational, bool)> {
    check_psi(psi)?;
    let p = psi.to_big();
    let closed = BigRational::from_integer(big(800_000)) * (BigRational::one() - p.pow(5));
    let via_resultant = quintic_qpoly(psi).discriminant();
    if closed != via_resultant {
        return Err(Error::Integrality(format!(
            "closed-form discriminant {closed} differs from resultant value {via_resultant}"
        )));
    }
    let sq = is_rational_square(&closed);
    Ok((closed, sq))
}

// ---- irreducibility --------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// `f mod p` is irreducible.
    IrreducibleModP { p: u64 },
    /// No proper factor degree is compatible with every listed pattern, after
    /// excluding the degrees ruled out by exhaustive factor search.
    PatternIncompatible {
        patterns: Vec<(u64, Vec<usize>)>,
        no_rational_root: bool,
        no_quadratic_factor: bool,
    },
    RationalRoot { root: String },
    QuadraticFactor { coeffs: [String; 3] },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Irreducibility {
    Irreducible(Certificate),
    Reducible(Certificate),
    Inconclusive,
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Self::Irreducible(_))
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

fn qpoly_from_ints(c: &[i128]) -> QPoly {
    QPoly::new(c.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
}

/// Rational roots of `v f_psi`, by the rational-root theorem.
pub fn quintic_rational_roots(psi: &RationalPsi) -> Vec<BigRational> {
    let f = cleared_quintic(psi);
    let fq = qpoly_from_ints(&f);
    let mut out = BTreeSet::new();
    for d in divisors(f[0].unsigned_abs() as u64) {
        for e in divisors(f[5].unsigned_abs() as u64) {
            for s in [1i64, -1] {
                let r = BigRational::new(big(s * d as i64), big(e as i64));
                if fq.eval(&r).is_zero() {
                    out.insert(r);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// A factor `a x^2 + b x + c` of `v f_psi` over `Z`, searched exhaustively:
/// `a | lead`, `c | const` and `|b| <= 2 a R` with `R` the Cauchy root bound.
pub fn quintic_quadratic_factor(psi: &RationalPsi) -> Option<[i128; 3]> {
    let f = cleared_quintic(psi);
    let fq = qpoly_from_ints(&f);
    let lead = f[5].abs() as f64;
    let cauchy = 1.0 + f[..5].iter().map(|&c| c.abs() as f64 / lead).fold(0.0, f64::max);
    for a in divisors(f[5].unsigned_abs() as u64) {
        let bound = (2.0 * a as f64 * cauchy).ceil() as i128;
        for c0 in divisors(f[0].unsigned_abs() as u64) {
            for c in [c0 as i128, -(c0 as i128)] {
                for b in -bound..=bound {
                    let g = qpoly_from_ints(&[c, b, a as i128]);
                    if fq.divrem(&g).1.is_zero() {
                        return Some([c, b, a as i128]);
                    }
                }
            }
        }
    }
    None
}

/// Primes `p <= prime_max` with `p != 2, 5`, `p` not dividing the leading
/// coefficient and `f_psi mod p` squarefree.
pub fn unramified_primes(psi: &RationalPsi, prime_max: u64) -> Vec<u64> {
    (3..=prime_max)
        .filter(|&p| is_prime(p) && p != 5 && psi.is_good_prime(p))
        .filter(|&p| {
            let fp = ModP::new(p);
            fp.is_squarefree(&fp.poly(&cleared_quintic(psi)))
        })
        .collect()
}

fn subset_sums(parts: &[usize]) -> BTreeSet<usize> {
    let mut sums = BTreeSet::from([0]);
    for &p in parts {
        let next: Vec<usize> = sums.iter().map(|s| s + p).collect();
        sums.extend(next);
    }
    sums
}

/// Certified irreducibility of `f_psi` over `Q`.
pub fn is_irreducible(psi: &RationalPsi, prime_budget: u64) -> Result<Irreducibility> {
    check_psi(psi)?;
    let f = cleared_quintic(psi);
    let primes = unramified_primes(psi, prime_budget);
    let mut patterns = Vec::new();
    // candidate degrees for the smaller factor of a splitting 5 = d + (5 - d)
    let mut allowed: BTreeSet<usize> = BTreeSet::from([1, 2]);
    for &p in &primes {
        let fp = ModP::new(p);
        let pattern = fp.degree_pattern(&fp.poly(&f));
        if pattern == [5] {
            return Ok(Irreducibility::Irreducible(Certificate::IrreducibleModP { p }));
        }
        let sums = subset_sums(&pattern);
        let before = allowed.len();
        allowed.retain(|d| sums.contains(d) || sums.contains(&(5 - d)));
        if allowed.len() < before || patterns.is_empty() {
            patterns.push((p, pattern));
        }
        if allowed.is_empty() {
            break;
        }
    }
    let mut no_rational_root = false;
    let mut no_quadratic_factor = false;
    if allowed.contains(&1) {
        if let Some(r) = quintic_rational_roots(psi).first() {
            return Ok(Irreducibility::Reducible(Certificate::RationalRoot { root: r.to_string() }));
        }
        no_rational_root = true;
        allowed.remove(&1);
    }
    if allowed.contains(&2) {
        if let Some(g) = quintic_quadratic_factor(psi) {
            return Ok(Irreducibility::Reducible(Certificate::QuadraticFactor {
                coeffs: g.map(|x| x.to_string()),
            }));
        }
        no_quadratic_factor = true;
        allowed.remove(&2);
    }
    if allowed.is_empty() {
        Ok(Irreducibility::Irreducible(Certificate::PatternIncompatible {
            patterns,
            no_rational_root,
            no_quadratic_factor,
        }))
    } else {
        Ok(Irreducibility::Inconclusive)
    }
}

// ---- resolvent -------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Resolvent {
    /// Monic sextic in `X = v x`, lowest degree first.
    pub sextic: Vec<String>,
    /// Distinct rational roots `x`.
    pub rational_roots: Vec<String>,
    /// Some root equals `10 psi`.
    pub root_at_10psi: bool,
}

/// The sextic in `X = v x`, with integer coefficients.
pub fn resolvent_sextic(psi: &RationalPsi) -> ZPoly {
    let (u, v) = (big(psi.num()), big(psi.den()));
    let u5 = u.pow(5);
    let v5 = v.pow(5);
    ZPoly::new(vec![
        big(4_000_000) * &u * (big(3) * &v5 + &u5),
        big(-800_000) * (&v5 + big(2) * &u5),
        big(250_000) * u.pow(4),
        big(-20_000) * u.pow(3),
        big(1_000) * u.pow(2),
        big(-40) * &u,
        BigInt::one(),
    ])
}

/// Prime factorization of `|n| > 0` by trial division up to `limit`; a
/// cofactor above `limit^2` is returned as `Err`.
fn factor_bigint(n: &BigInt, limit: u64) -> Result<Vec<(BigInt, u32)>> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = 2u64;
    while d <= limit {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            break;
        }
        let mut e = 0;
        while (&n % &bd).is_zero() {
            n /= &bd;
            e += 1;
        }
        if e > 0 {
            out.push((bd, e));
        }
        d += 1;
    }
    if n > BigInt::one() {
        let fits = n.to_u64().is_some_and(is_prime);
        if !fits && n > BigInt::from(limit).pow(2) {
            return Err(Error::InvalidInput(format!("cannot factor {n} by trial division")));
        }
        out.push((n, 1));
    }
    Ok(out)
}

fn merge_factors(parts: &[Vec<(BigInt, u32)>]) -> Vec<(BigInt, u32)> {
    let mut map: BTreeMap<BigInt, u32> = BTreeMap::new();
    for part in parts {
        for (p, e) in part {
            *map.entry(p.clone()).or_default() += e;
        }
    }
    map.into_iter().collect()
}

fn all_divisors(factors: &[(BigInt, u32)]) -> Vec<BigInt> {
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=*e {
                next.push(d * &pk);
                pk *= p;
            }
        }
        divs = next;
    }
    divs
}

/// Resolvent sextic and its rational roots. The constant term factors as
/// `2^8 5^6 u (3 v^5 + u^5)`, so candidates come from factoring the pieces.
pub fn dummit_resolvent(psi: &RationalPsi) -> Result<Resolvent> {
    check_psi(psi)?;
    let s = resolvent_sextic(psi);
    let (u, v) = (big(psi.num()), big(psi.den()));
    let mut roots: BTreeSet<BigInt> = BTreeSet::new();
    let mut pieces = vec![vec![(big(2), 8), (big(5), 6)]];
    let mut zero_root = false;
    for piece in [u.clone(), big(3) * v.pow(5) + u.pow(5)] {
        if piece.is_zero() {
            zero_root = true;
        } else {
            pieces.push(factor_bigint(&piece, 10_000_000)?);
        }
    }
    if zero_root {
        roots.insert(BigInt::zero());
        // roots of the deflated polynomial divide its lowest nonzero coefficient
        let low = s.coeffs().iter().find(|c| !c.is_zero()).cloned().unwrap();
        pieces = vec![factor_bigint(&low, 10_000_000)?];
    }
    for d in all_divisors(&merge_factors(&pieces)) {
        for cand in [d.clone(), -d] {
            if s.eval(&cand).is_zero() {
                roots.insert(cand);
            }
        }
    }
    let ten_psi = BigRational::from_integer(big(10)) * psi.to_big();
    let xs: Vec<BigRational> = roots.into_iter().map(|r| BigRational::new(r, v.clone())).collect();
    Ok(Resolvent {
        sextic: s.coeffs().iter().map(|c| c.to_string()).collect(),
        root_at_10psi: xs.iter().any(|x| *x == ten_psi),
        rational_roots: xs.iter().map(|x| x.to_string()).collect(),
    })
}

// ---- Frobenius -------------------------------------------------------------

/// Factor-degree pattern of `f_psi mod p` at an unramified prime.
pub fn frobenius_cycle_type(psi: &RationalPsi, p: u64) -> Result<CycleType> {
    if !is_prime(p) || p == 2 || p == 5 || !psi.is_good_prime(p) {
        return Err(Error::RamifiedPrime(p));
    }
    let fp = ModP::new(p);
    let f = fp.poly(&cleared_quintic(psi));
    if !fp.is_squarefree(&f) {
        return Err(Error::RamifiedPrime(p));
    }
    Ok(CycleType::new(fp.degree_pattern(&f).iter().map(|&d| d as u8).collect()))
}

// ---- classification --------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GaloisGroup {
    C5,
    D10,
    F20,
    A5,
    S5,
    Reducible,
    Unknown,
}

impl GaloisGroup {
    /// Cycle types occurring in the transitive group.
    pub fn support(&self) -> Option<BTreeSet<CycleType>> {
        let ct = |p: &[u8]| CycleType::new(p.to_vec());
        let types: Vec<&[u8]> = match self {
            Self::S5 => return Some(CycleType::partitions_of_five().into_iter().collect()),
            Self::F20 => vec![&[5], &[4, 1], &[2, 2, 1], &[1, 1, 1, 1, 1]],
            Self::D10 => vec![&[5], &[2, 2, 1], &[1, 1, 1, 1, 1]],
            Self::C5 => vec![&[5], &[1, 1, 1, 1, 1]],
            Self::A5 => vec![&[5], &[3, 1, 1], &[2, 2, 1], &[1, 1, 1, 1, 1]],
            _ => return None,
        };
        Some(types.into_iter().map(ct).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaloisVerdict {
    pub psi: String,
    pub group: GaloisGroup,
    pub irreducibility: Irreducibility,
    pub discriminant: Discriminant,
    pub resolvent: Resolvent,
    pub histogram: BTreeMap<String, u64>,
    pub primes_sampled: usize,
    /// Why the verdict is `Unknown`, or the sampled witness that conflicts.
    pub note: Option<String>,
}

/// Cycle types of `f_psi mod p` for unramified `p <= prime_max`.
pub fn cycle_type_histogram(psi: &RationalPsi, prime_max: u64) -> BTreeMap<CycleType, u64> {
    let mut h = BTreeMap::new();
    for p in unramified_primes(psi, prime_max) {
        if let Ok(ct) = frobenius_cycle_type(psi, p) {
            *h.entry(ct).or_default() += 1;
        }
    }
    h
}

pub fn classify(psi: &RationalPsi, prime_budget: u64) -> Result<GaloisVerdict> {
    check_psi(psi)?;
    let irreducibility = is_irreducible(psi, prime_budget)?;
    let (disc, disc_square) = discriminant(psi)?;
    let resolvent = dummit_resolvent(psi)?;
    let hist = cycle_type_histogram(psi, prime_budget);
    let has = |p: &[u8]| hist.contains_key(&CycleType::new(p.to_vec()));
    let has_root = !resolvent.rational_roots.is_empty();

    let mut note = None;
    let mut group = match (&irreducibility, has_root, disc_square) {
        (Irreducibility::Reducible(_), _, _) => GaloisGroup::Reducible,
        (Irreducibility::Inconclusive, _, _) => {
            note = Some("irreducibility not certified".into());
            GaloisGroup::Unknown
        }
        (_, true, true) if has(&[2, 2, 1]) => GaloisGroup::D10,
        (_, true, true) => GaloisGroup::C5,
        (_, true, false) => GaloisGroup::F20,
        (_, false, true) => GaloisGroup::A5,
        (_, false, false) => GaloisGroup::S5,
    };
    if group == GaloisGroup::S5 {
        // a transitive subgroup of S_5 with an element of order 3 and an odd
        // element is S_5 itself
        let odd = has(&[2, 1, 1, 1]) || has(&[4, 1]) || has(&[3, 2]);
        let three = has(&[3, 1, 1]) || has(&[3, 2]);
        if !(odd && three) {
            note = Some("no odd and order-3 Frobenius witnesses within the prime budget".into());
            group = GaloisGroup::Unknown;
        }
    }
    if let Some(support) = group.support() {
        if let Some(bad) = hist.keys().find(|ct| !support.contains(ct)) {
            note = Some(format!("sampled cycle type {bad} is outside {group:?}"));
            group = GaloisGroup::Unknown;
        }
    }
    Ok(GaloisVerdict {
        psi: psi.to_string(),
        group,
        irreducibility,
        discriminant: Discriminant { value: disc.to_string(), is_square: disc_square },
        resolvent,
        primes_sampled: hist.values().sum::<u64>() as usize,
        histogram: hist.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        note,
    })
}

// ---- reciprocity scan ------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanOptions {
    pub prime_max: u64,
    /// 1: trace only; 2: full quartic.
    pub depth: u32,
    /// Full quartics only up to this prime.
    pub depth2_prime_max: u64,
    pub route: Route,
    pub budget: u64,
}

/// Largest prime `p` with `p^8 <= budget`: full quartics need work on the
/// order of `p^8` in the worst case.
pub fn depth2_bound(budget: u64) -> u64 {
    let mut p = (budget as f64).powf(0.125).floor() as u64 + 1;
    while p > 0 && (p as u128).pow(8) > budget as u128 {
        p -= 1;
    }
    (2..=p).rev().find(|&x| is_prime(x)).unwrap_or(0)
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            prime_max: DEFAULT_PRIME_BUDGET,
            depth: 2,
            depth2_prime_max: depth2_bound(crate::ffield::DEFAULT_BUDGET),
            route: Route::Zeta,
            budget: crate::ffield::DEFAULT_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub psi: String,
    pub p: u64,
    pub cycle_type: String,
    pub n_roots: u64,
    /// Depth actually reached for this prime.
    pub depth: u32,
    pub a: Option<i128>,
    pub b: Option<i128>,
    pub class: Option<EulerClassMod2>,
    pub class_from_cycle: EulerClassMod2,
    /// `a = n + 1 (mod 2)`.
    pub congruence_ok: bool,
    /// `a` even implies `b` even.
    pub parity_ok: bool,
    /// Full class (depth 2) or its `a`-parity (depth 1) matches the cycle type.
    pub class_ok: bool,
    pub forbidden: bool,
    pub error: Option<String>,
}

impl ScanRow {
    pub fn ok(&self) -> bool {
        self.error.is_none() && self.congruence_ok && self.parity_ok && self.class_ok && !self.forbidden
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub rows: usize,
    pub depth2_rows: usize,
    pub congruence_failures: usize,
    pub parity_failures: usize,
    pub class_failures: usize,
    pub forbidden_count: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
    pub summary: ScanSummary,
}

impl ScanReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(ScanRow::ok)
    }
}

fn scan_prime(psi: &RationalPsi, p: u64, opts: &ScanOptions) -> Result<ScanRow> {
    let ct = frobenius_cycle_type(psi, p)?;
    let class_from_cycle = cycle_type_to_class(&ct)?;
    let ctx = FieldCtx::new(p, 1)?.with_budget(opts.budget);
    let x = psi.reduce(&ctx)?;
    let n_roots = count_quintic_roots(&ctx, x);
    if n_roots != ct.fixed_points() as u64 {
        return Err(Error::Integrality(format!(
            "{n_roots} roots but cycle type {ct} at p = {p}"
        )));
    }
    let mut depth = 1;
    let (a, b) = if opts.depth >= 2 && p <= opts.depth2_prime_max {
        match reconstruct_mirror_quartic_by(&ctx, x, opts.route) {
            Ok(w) => {
                depth = 2;
                (w.a, Some(w.b))
            }
            Err(Error::BudgetExceeded { .. }) => (trace(&ctx, x, opts.route)?, None),
            Err(e) => return Err(e),
        }
    } else {
        (trace(&ctx, x, opts.route)?, None)
    };
    let a_odd = a.rem_euclid(2) == 1;
    let class = b.map(|b| EulerClassMod2::from_parities(a_odd, b.rem_euclid(2) == 1));
    let cycle_a_odd = class_from_cycle.f2_coeffs()[1] == 1;
    Ok(ScanRow {
        psi: psi.to_string(),
        p,
        cycle_type: ct.to_string(),
        n_roots,
        depth,
        a: Some(a),
        b,
        class,
        class_from_cycle,
        congruence_ok: a_odd == (n_roots % 2 == 0),
        parity_ok: b.is_none_or(|b| a_odd || b % 2 == 0),
        class_ok: match class {
            Some(c) => c == class_from_cycle,
            None => a_odd == cycle_a_odd,
        },
        forbidden: class.is_some_and(|c| c.is_forbidden()),
        error: None,
    })
}

fn trace(ctx: &FieldCtx, psi: crate::Fe, route: Route) -> Result<i128> {
    let w = match route {
        Route::Zeta => crate::counts::h3_power_sum(ctx, ctx, psi, 1)?,
        Route::Torus => crate::counts::mirror_trace_from_torus(ctx, psi)?,
    };
    if (w as f64).abs() > 4.0 * (ctx.q() as f64).powf(1.5) {
        return Err(Error::WeilBoundViolation(format!("|a| = {} exceeds 4 q^(3/2)", w.abs())));
    }
    Ok(w)
}

/// Runs the per-prime checks for every unramified `p <= prime_max`; failures
/// are collected into rows rather than aborting.
pub fn reciprocity_scan(psi: &RationalPsi, opts: &ScanOptions) -> Result<ScanReport> {
    check_psi(psi)?;
    let primes = unramified_primes(psi, opts.prime_max);
    let mut rows: Vec<ScanRow> = primes
        .par_iter()
        .map(|&p| {
            scan_prime(psi, p, opts).unwrap_or_else(|e| ScanRow {
                psi: psi.to_string(),
                p,
                cycle_type: String::new(),
                n_roots: 0,
                depth: 0,
                a: None,
                b: None,
                class: None,
                class_from_cycle: EulerClassMod2::OneT4,
                congruence_ok: false,
                parity_ok: false,
                class_ok: false,
                forbidden: false,
                error: Some(e.to_string()),
            })
        })
        .collect();
    rows.sort_by_key(|r| r.p);
    let summary = ScanSummary {
        rows: rows.len(),
        depth2_rows: rows.iter().filter(|r| r.depth == 2).count(),
        congruence_failures: rows.iter().filter(|r| r.error.is_none() && !r.congruence_ok).count(),
        parity_failures: rows.iter().filter(|r| r.error.is_none() && !r.parity_ok).count(),
        class_failures: rows.iter().filter(|r| r.error.is_none() && !r.class_ok).count(),
        forbidden_count: rows.iter().filter(|r| r.forbidden).count(),
        errors: rows.iter().filter(|r| r.error.is_some()).count(),
    };
    Ok(ScanReport { rows, summary })
}

/// Roots of the resolvent sextic mod a prime, used to cross-check the
/// rational-root search: every rational root reduces to a root mod `p`.
pub fn resolvent_roots_mod(psi: &RationalPsi, p: u64, seed: u64) -> Vec<u64> {
    let fp = ModP::new(p);
    let coeffs: Vec<u64> = resolvent_sextic(psi)
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&BigInt::from(p)).to_u64().unwrap())
        .collect();
    let mut f = coeffs;
    ModP::trim(&mut f);
    fp.roots(&f, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RationalPsi {
        s.parse().unwrap()
    }

    #[test]
    fn discriminant_closed_form_and_squares() {
        let (d, sq) = discriminant(&r("0")).unwrap();
        assert_eq!(d, BigRational::from_integer(big(800_000)));
        assert!(!sq);
        let (d, sq) = discriminant(&r("-1")).unwrap();
        assert_eq!(d, BigRational::from_integer(big(1_600_000)));
        assert!(!sq);
        for n in -3..=5 {
            if n != 1 {
                discriminant(&RationalPsi::integer(n)).unwrap();
            }
        }
        assert!(discriminant(&r("1")).is_err());
    }

    #[test]
    fn rational_square_test() {
        assert!(is_rational_square(&BigRational::new(big(9), big(4))));
        assert!(!is_rational_square(&BigRational::new(big(-9), big(4))));
        assert!(!is_rational_square(&BigRational::new(big(2), big(1))));
    }

    #[test]
    fn irreducibility_certificates() {
        for s in ["0", "2", "3", "-2", "1/2"] {
            assert!(is_irreducible(&r(s), 200).unwrap().is_irreducible(), "{s}");
        }
    }

    #[test]
    fn reducible_example_found() {
        // f(-1) = -4 - 5 psi + 1 = 0 at psi = -3/5
        match is_irreducible(&r("-3/5"), 200).unwrap() {
            Irreducibility::Reducible(Certificate::RationalRoot { root }) => assert_eq!(root, "-1"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn quadratic_factor_search() {
        // no quadratic factor for psi = 2
        assert_eq!(quintic_quadratic_factor(&r("2")), None);
    }

    #[test]
    fn resolvent_at_zero() {
        let res = dummit_resolvent(&r("0")).unwrap();
        assert_eq!(res.rational_roots, vec!["0".to_string()]);
        assert!(res.root_at_10psi);
    }

    #[test]
    fn resolvent_roots_reduce() {
        for s in ["2", "3", "-2", "1/2"] {
            let res = dummit_resolvent(&r(s)).unwrap();
            assert!(res.rational_roots.is_empty(), "{s}");
        }
        // the root 0 at psi = 0 shows up mod every prime
        for p in [7, 11, 13] {
            assert!(resolvent_roots_mod(&r("0"), p, 1).contains(&0));
        }
    }

    #[test]
    fn frobenius_example() {
        let ct = frobenius_cycle_type(&r("2"), 3).unwrap();
        assert_eq!(ct.fixed_points(), 0);
        assert_eq!(ct.degree(), 5);
        assert!(matches!(frobenius_cycle_type(&r("2"), 31), Err(Error::RamifiedPrime(31))));
        assert!(matches!(frobenius_cycle_type(&r("2"), 5), Err(Error::RamifiedPrime(5))));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&r("0"), 200).unwrap().group, GaloisGroup::F20);
        assert_eq!(classify(&r("2"), 200).unwrap().group, GaloisGroup::S5);
    }

    #[test]
    fn depth2_bound_values() {
        assert_eq!(depth2_bound(crate::ffield::DEFAULT_BUDGET), 13);
        assert_eq!(depth2_bound(13u64.pow(8)), 13);
        assert_eq!(depth2_bound(13u64.pow(8) - 1), 11);
        assert_eq!(depth2_bound(100), 0);
    }

    #[test]
    fn support_sizes() {
        assert_eq!(GaloisGroup::S5.support().unwrap().len(), 7);
        assert_eq!(GaloisGroup::A5.support().unwrap().len(), 4);
        assert!(GaloisGroup::Unknown.support().is_none());
    }
}
