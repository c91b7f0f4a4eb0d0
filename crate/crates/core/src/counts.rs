//! Exact point counts over `F_q` for the quintic trinomial, the mirror torus
//! model `U`, its fixed locus `V`, its toric closure `Y`, the Dwork quintic
//! `X` in `P^4`, and the genus-4 superelliptic curves `A`, `B`.
//!
//! All counts are exact integers. Every enumeration is checked against the
//! field's step budget before it starts, and the outer loops are split over
//! the first coordinate so they can be run in parallel or sharded.

use crate::error::{Error, Result};
use crate::ffield::{Embedding, Fe, FieldCtx};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::ops::Range;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Naive,
    Accelerated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variety {
    #[serde(rename = "f-roots")]
    FRoots,
    U,
    V,
    Y,
    #[serde(rename = "X-proj")]
    XProj,
    #[serde(rename = "A-curve")]
    ACurve,
    #[serde(rename = "B-curve")]
    BCurve,
}

/// One count, as emitted by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRecord {
    pub psi: String,
    pub q: u64,
    pub variety: Variety,
    pub count: u64,
    pub method: Method,
}

/// `psi^5 != 1`: the mirror family has good reduction.
pub fn check_good(ctx: &FieldCtx, psi: Fe) -> Result<()> {
    if ctx.pow(psi, 5) == Fe::ONE {
        Err(Error::BadReduction(format!("psi^5 = 1 in F_{}", ctx.q())))
    } else {
        Ok(())
    }
}

fn fifth_powers(ctx: &FieldCtx) -> Vec<Fe> {
    ctx.elements().map(|x| ctx.pow(x, 5)).collect()
}

fn split_outer(ctx: &FieldCtx) -> Vec<Range<u32>> {
    let q = ctx.q() as u32;
    let chunk = (q / 64).max(1);
    (0..q).step_by(chunk as usize).map(|s| s..(s + chunk).min(q)).collect()
}

/// `n(f_psi, q) = #{x in F_q : 4x^5 - 5 psi x^4 + 1 = 0}`.
pub fn count_quintic_roots(ctx: &FieldCtx, psi: Fe) -> u64 {
    let four = ctx.from_int(4);
    let five_psi = ctx.mul(ctx.from_int(5), psi);
    ctx.elements()
        .filter(|&x| {
            let x4 = ctx.pow(x, 4);
            let v = ctx.sub(ctx.mul(four, ctx.mul(x4, x)), ctx.mul(five_psi, x4));
            ctx.add(v, Fe::ONE).is_zero()
        })
        .count() as u64
}

// ---- U, V, Y ---------------------------------------------------------------

/// `#U_psi(F_q)`: solutions of `x1+x2+x3+x4 + 1/(x1 x2 x3 x4) = 5 psi` in the torus.
pub fn count_u(ctx: &FieldCtx, psi: Fe, method: Method) -> Result<u64> {
    check_good(ctx, psi)?;
    let q = ctx.q() - 1;
    ctx.check_budget(match method {
        Method::Naive => q.pow(4),
        Method::Accelerated => q.pow(3),
    })?;
    Ok(split_outer(ctx)
        .into_par_iter()
        .map(|r| count_u_partial(ctx, psi, method, r))
        .sum())
}

/// Contribution of the `x1` codes in `outer` to `#U_psi(F_q)`. Shards add up.
pub fn count_u_partial(ctx: &FieldCtx, psi: Fe, method: Method, outer: Range<u32>) -> u64 {
    let five_psi = ctx.mul(ctx.from_int(5), psi);
    let mut n = 0u64;
    for x1 in outer.map(Fe).filter(|x| !x.is_zero()) {
        for x2 in ctx.nonzero() {
            let p12 = ctx.mul(x1, x2);
            let s12 = ctx.add(x1, x2);
            for x3 in ctx.nonzero() {
                let a = ctx.mul(p12, x3);
                let s = ctx.add(s12, x3);
                match method {
                    Method::Naive => {
                        for x4 in ctx.nonzero() {
                            let inv = ctx.inv(ctx.mul(a, x4)).unwrap();
                            if ctx.add(ctx.add(s, x4), inv) == five_psi {
                                n += 1;
                            }
                        }
                    }
                    Method::Accelerated => {
                        // a x4^2 + a c x4 + 1 = 0 with c = x1+x2+x3-5psi; roots are nonzero
                        let c = ctx.sub(s, five_psi);
                        n += ctx.quadratic_root_count(a, ctx.mul(a, c), Fe::ONE);
                    }
                }
            }
        }
    }
    n
}

/// `#V_psi(F_q)`: the locus `x1 = x3, x2 = x4` of `U_psi`.
pub fn count_v(ctx: &FieldCtx, psi: Fe) -> Result<u64> {
    check_good(ctx, psi)?;
    ctx.check_budget((ctx.q() - 1).pow(2))?;
    let two = ctx.from_int(2);
    let five_psi = ctx.mul(ctx.from_int(5), psi);
    let mut n = 0;
    for x1 in ctx.nonzero() {
        for x2 in ctx.nonzero() {
            let prod = ctx.mul(x1, x2);
            let inv = ctx.inv(ctx.mul(prod, prod)).unwrap();
            let lhs = ctx.add(ctx.mul(two, ctx.add(x1, x2)), inv);
            if lhs == five_psi {
                n += 1;
            }
        }
    }
    Ok(n)
}

/// `((q-1)^4 - 1) / q`, the torus correction between `U` and its closure.
pub fn torus_correction(q: u64) -> Result<i128> {
    let q = q as i128;
    let num = (q - 1).pow(4) - 1;
    if num % q != 0 {
        return Err(Error::Integrality(format!("q = {q} does not divide (q-1)^4 - 1")));
    }
    Ok(num / q)
}

/// `(q^4 - 1) / (q - 1)`, the boundary strata of the toric closure.
pub fn boundary_correction(q: u64) -> Result<i128> {
    let q = q as i128;
    let num = q.pow(4) - 1;
    if num % (q - 1) != 0 {
        return Err(Error::Integrality(format!("q - 1 does not divide q^4 - 1 for q = {q}")));
    }
    Ok(num / (q - 1))
}

/// `#Y_psi(F_q)` from `#U_psi(F_q)` and the toric stratification.
pub fn count_y(ctx: &FieldCtx, psi: Fe, method: Method) -> Result<u64> {
    let u = count_u(ctx, psi, method)? as i128;
    let y = u - torus_correction(ctx.q())? + boundary_correction(ctx.q())?;
    u64::try_from(y).map_err(|_| Error::Integrality(format!("negative count {y}")))
}

/// Trace of Frobenius on the rank-4 mirror motive read off the torus model:
/// `((q-1)^4 - 1)/q - #U_psi(F_q)`, equivalently `1 + q + q^2 + q^3 - #Y_psi(F_q)`.
pub fn mirror_trace_from_torus(ctx: &FieldCtx, psi: Fe) -> Result<i128> {
    let u = count_u(ctx, psi, Method::Accelerated)? as i128;
    Ok(torus_correction(ctx.q())? - u)
}

// ---- X in P^4 --------------------------------------------------------------

/// `T[A][B] = #{x in F_q : x^5 + A x + B = 0}`, built in `O(q^2)`.
#[derive(Clone, Debug)]
pub struct QuinticRootTable {
    q: usize,
    table: Vec<u8>,
}

impl QuinticRootTable {
    pub fn new(ctx: &FieldCtx) -> Self {
        let q = ctx.q() as usize;
        let fifth = fifth_powers(ctx);
        let mut table = vec![0u8; q * q];
        for a in ctx.elements() {
            for x in ctx.elements() {
                let b = ctx.neg(ctx.add(fifth[x.0 as usize], ctx.mul(a, x)));
                table[a.0 as usize * q + b.0 as usize] += 1;
            }
        }
        Self { q, table }
    }

    #[inline]
    pub fn get(&self, a: Fe, b: Fe) -> u64 {
        self.table[a.0 as usize * self.q + b.0 as usize] as u64
    }

    pub fn total(&self) -> u64 {
        self.table.iter().map(|&c| c as u64).sum()
    }
}

/// `#X_psi(F_q)` for the Dwork quintic in `P^4`.
///
/// `Naive` evaluates the form on all of `F_q^5`. `Accelerated` splits `P^4`
/// into the chart `X0 = 1` and the hyperplane `X0 = 0` (a Fermat surface,
/// independent of psi) and resolves the last coordinate by table lookup, for
/// `O(q^3)` work.
pub fn count_x_projective(ctx: &FieldCtx, psi: Fe, method: Method) -> Result<u64> {
    check_good(ctx, psi)?;
    let q = ctx.q();
    match method {
        Method::Naive => {
            ctx.check_budget(q.pow(5))?;
            let affine: u64 = split_outer(ctx)
                .into_par_iter()
                .map(|r| naive_cone_partial(ctx, psi, r))
                .sum();
            projectivize(affine, q)
        }
        Method::Accelerated => {
            ctx.check_budget(q.pow(3) + q.pow(2))?;
            let table = QuinticRootTable::new(ctx);
            let (chart, fermat_cone): (u64, u64) = split_outer(ctx)
                .into_par_iter()
                .map(|r| chart_partial(ctx, psi, &table, r))
                .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
            Ok(chart + projectivize(fermat_cone, q)?)
        }
    }
}

/// `#X_psi(F_q)` through the affine cone: loop over `(x0..x3)` and read the
/// number of `x4` from the root table. `O(q^4)` lookups.
pub fn count_x_cone_table(ctx: &FieldCtx, psi: Fe) -> Result<u64> {
    check_good(ctx, psi)?;
    let q = ctx.q();
    ctx.check_budget(q.pow(4) + q.pow(2))?;
    let table = QuinticRootTable::new(ctx);
    let fifth = fifth_powers(ctx);
    let minus_five_psi = ctx.neg(ctx.mul(ctx.from_int(5), psi));
    let affine: u64 = split_outer(ctx)
        .into_par_iter()
        .map(|r| {
            let mut n = 0;
            for x0 in r.map(Fe) {
                for x1 in ctx.elements() {
                    let p01 = ctx.mul(ctx.mul(minus_five_psi, x0), x1);
                    let s01 = ctx.add(fifth[x0.0 as usize], fifth[x1.0 as usize]);
                    for x2 in ctx.elements() {
                        let p = ctx.mul(p01, x2);
                        let s = ctx.add(s01, fifth[x2.0 as usize]);
                        for x3 in ctx.elements() {
                            n += table.get(ctx.mul(p, x3), ctx.add(s, fifth[x3.0 as usize]));
                        }
                    }
                }
            }
            n
        })
        .sum();
    projectivize(affine, q)
}

fn projectivize(affine: u64, q: u64) -> Result<u64> {
    if affine == 0 || (affine - 1) % (q - 1) != 0 {
        return Err(Error::Integrality(format!(
            "q - 1 = {} does not divide N_affine - 1 = {}",
            q - 1,
            affine as i128 - 1
        )));
    }
    Ok((affine - 1) / (q - 1))
}

fn naive_cone_partial(ctx: &FieldCtx, psi: Fe, outer: Range<u32>) -> u64 {
    let fifth = fifth_powers(ctx);
    let five_psi = ctx.mul(ctx.from_int(5), psi);
    let mut n = 0;
    for x0 in outer.map(Fe) {
        for x1 in ctx.elements() {
            for x2 in ctx.elements() {
                for x3 in ctx.elements() {
                    let prod = ctx.mul(ctx.mul(ctx.mul(x0, x1), x2), x3);
                    let s = [x0, x1, x2, x3]
                        .iter()
                        .fold(Fe::ZERO, |acc, x| ctx.add(acc, fifth[x.0 as usize]));
                    for x4 in ctx.elements() {
                        let v = ctx.sub(ctx.add(s, fifth[x4.0 as usize]), ctx.mul(five_psi, ctx.mul(prod, x4)));
                        if v.is_zero() {
                            n += 1;
                        }
                    }
                }
            }
        }
    }
    n
}

/// Returns (points of the chart `X0 = 1` with `X1` code in `outer`,
/// affine-cone points of the Fermat surface with `X1` code in `outer`).
fn chart_partial(ctx: &FieldCtx, psi: Fe, table: &QuinticRootTable, outer: Range<u32>) -> (u64, u64) {
    let fifth = fifth_powers(ctx);
    let minus_five_psi = ctx.neg(ctx.mul(ctx.from_int(5), psi));
    let (mut chart, mut fermat) = (0, 0);
    for x1 in outer.map(Fe) {
        let p1 = ctx.mul(minus_five_psi, x1);
        let s1 = fifth[x1.0 as usize];
        for x2 in ctx.elements() {
            let p12 = ctx.mul(p1, x2);
            let s12 = ctx.add(s1, fifth[x2.0 as usize]);
            for x3 in ctx.elements() {
                let s = ctx.add(s12, fifth[x3.0 as usize]);
                chart += table.get(ctx.mul(p12, x3), ctx.add(Fe::ONE, s));
                fermat += table.get(Fe::ZERO, s);
            }
        }
    }
    (chart, fermat)
}

// ---- superelliptic curves --------------------------------------------------

/// `y^5 = lead * prod (x - a_i)^{m_i}` with branch points merged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperellipticSpec {
    lead: Fe,
    branches: Vec<(Fe, u32)>,
    degree: u32,
}

impl SuperellipticSpec {
    /// Merges repeated x-coordinates and checks that every branch multiplicity
    /// and the total degree are prime to 5, so each branch point and the point
    /// at infinity carry exactly one place.
    pub fn new(lead: Fe, raw: &[(Fe, u32)]) -> Result<Self> {
        let mut branches: Vec<(Fe, u32)> = Vec::new();
        for &(a, m) in raw {
            match branches.iter_mut().find(|(b, _)| *b == a) {
                Some(entry) => entry.1 += m,
                None => branches.push((a, m)),
            }
        }
        let degree: u32 = branches.iter().map(|b| b.1).sum();
        if let Some(&(a, m)) = branches.iter().find(|b| b.1 % 5 == 0) {
            return Err(Error::Ramification(format!(
                "merged multiplicity {m} at x = {} is divisible by 5",
                a.0
            )));
        }
        if degree % 5 == 0 {
            return Err(Error::Ramification(format!("total degree {degree} divisible by 5")));
        }
        Ok(Self { lead, branches, degree })
    }

    /// `A_psi : y^5 = x^2 (1-x)^3 (x - psi^5)^2`.
    pub fn curve_a(ctx: &FieldCtx, psi: Fe) -> Result<Self> {
        let c = ctx.pow(psi, 5);
        Self::new(ctx.neg(Fe::ONE), &[(Fe::ZERO, 2), (Fe::ONE, 3), (c, 2)])
    }

    /// `B_psi : y^5 = x^2 (1-x)^4 (x - psi^5)`.
    pub fn curve_b(ctx: &FieldCtx, psi: Fe) -> Result<Self> {
        let c = ctx.pow(psi, 5);
        Self::new(Fe::ONE, &[(Fe::ZERO, 2), (Fe::ONE, 4), (c, 1)])
    }

    pub fn branches(&self) -> &[(Fe, u32)] {
        &self.branches
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Riemann-Hurwitz for a cyclic quintic cover totally ramified over the
    /// finite branch points and infinity: `2g - 2 = -10 + 4 (r + 1)`.
    pub fn genus(&self) -> u32 {
        2 * self.branches.len() as u32 - 2
    }

    pub fn eval(&self, ctx: &FieldCtx, x: Fe) -> Fe {
        self.branches
            .iter()
            .fold(self.lead, |acc, &(a, m)| ctx.mul(acc, ctx.pow(ctx.sub(x, a), m as u64)))
    }
}

/// Points on the smooth projective model of a superelliptic quintic cover.
pub fn count_superelliptic(ctx: &FieldCtx, spec: &SuperellipticSpec) -> u64 {
    let affine_unramified: u64 = ctx
        .elements()
        .filter(|x| !spec.branches.iter().any(|b| b.0 == *x))
        .map(|x| ctx.fifth_power_count(spec.eval(ctx, x)))
        .sum();
    affine_unramified + spec.branches.len() as u64 + 1
}

/// `s_r = Q + 1 - #C(F_Q)`, the power sum of the Frobenius eigenvalues of `C`.
pub fn curve_power_sum(ctx: &FieldCtx, spec: &SuperellipticSpec) -> i128 {
    ctx.q() as i128 + 1 - count_superelliptic(ctx, spec) as i128
}

/// Which of the two curves in the zeta factorization of `X_psi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MirrorCurve {
    A,
    B,
}

/// Components of the stable model of `A_psi` or `B_psi`.
///
/// For `psi != 0` this is the genus-4 curve itself. At `psi = 0` the branch
/// points `0` and `psi^5` collide; the limit is a compact-type union of the
/// genus-2 curve with merged branch point and the genus-2 bubble
/// `y^5 = t^2 (t-1)^2` (for `A`) or `y^5 = t^2 (t-1)` (for `B`).
pub fn stable_components(ctx: &FieldCtx, psi: Fe, curve: MirrorCurve) -> Result<Vec<SuperellipticSpec>> {
    let main = match curve {
        MirrorCurve::A => SuperellipticSpec::curve_a(ctx, psi)?,
        MirrorCurve::B => SuperellipticSpec::curve_b(ctx, psi)?,
    };
    if !psi.is_zero() {
        return Ok(vec![main]);
    }
    let bubble = match curve {
        MirrorCurve::A => SuperellipticSpec::new(Fe::ONE, &[(Fe::ZERO, 2), (Fe::ONE, 2)])?,
        MirrorCurve::B => SuperellipticSpec::new(Fe::ONE, &[(Fe::ZERO, 2), (Fe::ONE, 1)])?,
    };
    Ok(vec![main, bubble])
}

/// Sum of [`curve_power_sum`] over the stable components; always genus 4 in total.
pub fn mirror_curve_power_sum(ctx: &FieldCtx, psi: Fe, curve: MirrorCurve) -> Result<i128> {
    Ok(stable_components(ctx, psi, curve)?
        .iter()
        .map(|c| curve_power_sum(ctx, c))
        .sum())
}

// ---- mirror power sums -----------------------------------------------------

/// `r`-th power sum of the four mirror Frobenius eigenvalues over `F_q`, from
/// the factorization of the zeta function of `X_psi` through `A_psi`, `B_psi`:
///
/// `p_r = 1 + Q + Q^2 + Q^3 - #X(F_Q) - 10 Q s_r(A) - 15 Q s_r(B)`, `Q = q^r`.
///
/// `ext` must be the degree-`r` extension of `base`.
pub fn h3_power_sum(base: &FieldCtx, ext: &FieldCtx, psi: Fe, r: u32) -> Result<i128> {
    if ext.p() != base.p() || ext.k() != base.k() * r {
        return Err(Error::InvalidInput(format!(
            "F_{} is not the degree-{r} extension of F_{}",
            ext.q(),
            base.q()
        )));
    }
    check_good(base, psi)?;
    let psi_e = Embedding::new(base, ext)?.apply(psi);
    let big_q = ext.q() as i128;
    let x = count_x_projective(ext, psi_e, Method::Accelerated)? as i128;
    let s_a = mirror_curve_power_sum(ext, psi_e, MirrorCurve::A)?;
    let s_b = mirror_curve_power_sum(ext, psi_e, MirrorCurve::B)?;
    Ok(1 + big_q + big_q.pow(2) + big_q.pow(3) - x - 10 * big_q * s_a - 15 * big_q * s_b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64, k: u32) -> FieldCtx {
        FieldCtx::new(p, k).unwrap()
    }

    #[test]
    fn quintic_roots_examples() {
        let f3 = field(3, 1);
        assert_eq!(count_quintic_roots(&f3, f3.from_int(2)), 0);
        let f11 = field(11, 1);
        let c = f11.neg(f11.inv(f11.from_int(4)).unwrap());
        assert_eq!(count_quintic_roots(&f11, Fe::ZERO), f11.fifth_power_count(c));
    }

    #[test]
    fn u_over_f3_at_zero_by_hand() {
        // Oracle: the 16 tuples of (F_3^*)^4 with plain integer arithmetic.
        let mut brute = 0;
        for t in 0..16u32 {
            let xs: Vec<i64> = (0..4).map(|i| if t >> i & 1 == 1 { 2 } else { 1 }).collect();
            let prod: i64 = xs.iter().product();
            let inv = if prod % 3 == 1 { 1 } else { 2 };
            if (xs.iter().sum::<i64>() + inv) % 3 == 0 {
                brute += 1;
            }
        }
        let f3 = field(3, 1);
        assert_eq!(count_u(&f3, Fe::ZERO, Method::Naive).unwrap(), brute);
        assert_eq!(count_u(&f3, Fe::ZERO, Method::Accelerated).unwrap(), brute);
    }

    #[test]
    fn v_over_f3_at_zero_by_hand() {
        let mut brute = 0;
        for x1 in 1..3i64 {
            for x2 in 1..3i64 {
                let sq = (x1 * x2 % 3).pow(2) % 3;
                let inv = if sq == 1 { 1 } else { 2 };
                if (2 * x1 + 2 * x2 + inv) % 3 == 0 {
                    brute += 1;
                }
            }
        }
        let f3 = field(3, 1);
        assert_eq!(count_v(&f3, Fe::ZERO).unwrap(), brute);
    }

    #[test]
    fn u_methods_agree_over_f7() {
        let f = field(7, 1);
        for psi in f.elements().filter(|&s| check_good(&f, s).is_ok()) {
            assert_eq!(
                count_u(&f, psi, Method::Naive).unwrap(),
                count_u(&f, psi, Method::Accelerated).unwrap()
            );
        }
    }

    #[test]
    fn bad_reduction_rejected() {
        let f = field(11, 1);
        assert!(matches!(count_u(&f, Fe::ONE, Method::Accelerated), Err(Error::BadReduction(_))));
        assert!(matches!(count_v(&f, Fe::ONE), Err(Error::BadReduction(_))));
        // 3^5 = 243 = 1 mod 11
        assert!(matches!(count_x_projective(&f, f.from_int(3), Method::Accelerated), Err(Error::BadReduction(_))));
    }

    #[test]
    fn y_corrections() {
        assert_eq!(-torus_correction(3).unwrap() + boundary_correction(3).unwrap(), 35);
        assert_eq!(torus_correction(7).unwrap(), 185);
        assert_eq!(boundary_correction(7).unwrap(), 400);
    }

    #[test]
    fn shards_sum_to_total() {
        let f = field(7, 1);
        let psi = f.from_int(3);
        let total = count_u(&f, psi, Method::Accelerated).unwrap();
        let halves = count_u_partial(&f, psi, Method::Accelerated, 0..4)
            + count_u_partial(&f, psi, Method::Accelerated, 4..7);
        assert_eq!(total, halves);
    }

    #[test]
    fn root_table_total() {
        for (p, k) in [(3, 1), (7, 1), (3, 2)] {
            let f = field(p, k);
            assert_eq!(QuinticRootTable::new(&f).total(), f.q() * f.q());
        }
    }

    #[test]
    fn x_three_routes_agree() {
        for p in [3, 7] {
            let f = field(p, 1);
            for psi in f.elements().filter(|&s| check_good(&f, s).is_ok()) {
                let naive = count_x_projective(&f, psi, Method::Naive).unwrap();
                let fast = count_x_projective(&f, psi, Method::Accelerated).unwrap();
                let cone = count_x_cone_table(&f, psi).unwrap();
                assert_eq!(naive, fast);
                assert_eq!(naive, cone);
                // parity against the trinomial
                assert_eq!(naive % 2, (count_quintic_roots(&f, psi) + 1) % 2);
            }
        }
    }

    #[test]
    fn x_budget_exceeded() {
        let f = field(13, 1).with_budget(1000);
        assert!(matches!(
            count_x_projective(&f, f.from_int(2), Method::Accelerated),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn superelliptic_trivial_when_fifth_powers_biject() {
        for p in [3, 7, 13, 17] {
            let f = field(p, 1);
            for psi in f.nonzero().filter(|&s| check_good(&f, s).is_ok()) {
                for spec in [SuperellipticSpec::curve_a(&f, psi).unwrap(), SuperellipticSpec::curve_b(&f, psi).unwrap()] {
                    assert_eq!(count_superelliptic(&f, &spec), f.q() + 1);
                    assert_eq!(spec.genus(), 4);
                }
            }
        }
    }

    #[test]
    fn psi_zero_merges_branches() {
        let f = field(11, 1);
        let a = SuperellipticSpec::curve_a(&f, Fe::ZERO).unwrap();
        assert_eq!(a.branches(), &[(Fe::ZERO, 4), (Fe::ONE, 3)]);
        assert_eq!(a.degree(), 7);
        assert_eq!(a.genus(), 2);
        // Oracle: affine points counted by brute force over (x, y), plus one
        // place over each branch point and one at infinity.
        let brute_affine = f
            .elements()
            .flat_map(|x| f.elements().map(move |y| (x, y)))
            .filter(|&(x, y)| x != Fe::ZERO && x != Fe::ONE && f.pow(y, 5) == a.eval(&f, x))
            .count() as u64;
        assert_eq!(count_superelliptic(&f, &a), brute_affine + 2 + 1);
    }

    #[test]
    fn psi5_one_is_ramified() {
        let f = field(11, 1);
        assert!(matches!(SuperellipticSpec::curve_a(&f, Fe::ONE), Err(Error::Ramification(_))));
        assert!(matches!(SuperellipticSpec::curve_b(&f, Fe::ONE), Err(Error::Ramification(_))));
    }

    #[test]
    fn superelliptic_weil_bound_genus4() {
        for p in [11, 31, 41] {
            let f = field(p, 1);
            for psi in f.nonzero().filter(|&s| check_good(&f, s).is_ok()) {
                for spec in [SuperellipticSpec::curve_a(&f, psi).unwrap(), SuperellipticSpec::curve_b(&f, psi).unwrap()] {
                    let s1 = curve_power_sum(&f, &spec) as f64;
                    assert!(s1.abs() <= 8.0 * (p as f64).sqrt());
                }
            }
        }
    }

    #[test]
    fn torus_and_zeta_traces_agree() {
        for p in [3, 7, 11, 13] {
            let f = field(p, 1);
            for psi in f.elements().filter(|&s| check_good(&f, s).is_ok()) {
                let zeta = h3_power_sum(&f, &f, psi, 1).unwrap();
                let torus = mirror_trace_from_torus(&f, psi).unwrap();
                assert_eq!(zeta, torus, "p = {p}, psi = {}", psi.0);
            }
        }
    }

    #[test]
    fn h3_rejects_wrong_extension() {
        let f = field(7, 1);
        let f2 = field(7, 2);
        assert!(h3_power_sum(&f, &f2, f.from_int(2), 1).is_err());
    }

    #[test]
    fn stable_model_at_zero_has_genus_four() {
        let f = field(11, 1);
        for curve in [MirrorCurve::A, MirrorCurve::B] {
            let comps = stable_components(&f, Fe::ZERO, curve).unwrap();
            assert_eq!(comps.iter().map(|c| c.genus()).sum::<u32>(), 4);
            assert_eq!(stable_components(&f, f.from_int(2), curve).unwrap().len(), 1);
        }
    }

    #[test]
    fn psi_zero_trace_over_f11() {
        let f = field(11, 1);
        assert_eq!(h3_power_sum(&f, &f, Fe::ZERO, 1).unwrap(), 89);
        assert_eq!(mirror_trace_from_torus(&f, Fe::ZERO).unwrap(), 89);
    }
}
