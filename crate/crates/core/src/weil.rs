//! Frobenius polynomials: the mirror quartic `P_{psi,q}` from power sums, its
//! reduction mod 2, and genus-g curve L-polynomials.

use crate::counts::{h3_power_sum, mirror_curve_power_sum, mirror_trace_from_torus, MirrorCurve};
use crate::error::{Error, Result};
use crate::ffield::{Embedding, Fe, FieldCtx};
use crate::roots::{max_modulus_defect, polynomial_roots};
use crate::QPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Relative tolerance on root moduli.
pub const WEIL_TOLERANCE: f64 = 1e-6;

/// `P(t) = 1 - a t + b t^2 - q^3 a t^3 + q^6 t^4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeilQuartic {
    pub q: u64,
    pub a: i128,
    pub b: i128,
}

impl WeilQuartic {
    pub fn coefficients(&self) -> [i128; 5] {
        let q3 = (self.q as i128).pow(3);
        [1, -self.a, self.b, -q3 * self.a, q3 * q3]
    }

    /// The polynomial whose reciprocal roots are `q^3 / alpha`. Equal to
    /// `self` coefficientwise, so the sign convention of Frobenius is moot.
    pub fn dual(&self) -> Result<WeilQuartic> {
        let c = self.coefficients();
        let q3 = (self.q as i128).pow(3);
        // prod (1 - q^3 t / alpha) = t^4 q^12 P(1/(q^3 t)) / q^6
        let d: Vec<i128> = (0..5).map(|i| c[4 - i] * q3.pow(i as u32)).collect();
        let lead = c[4];
        if d.iter().any(|x| x % lead != 0) {
            return Err(Error::Integrality("dual quartic has non-integral coefficients".into()));
        }
        let d: Vec<i128> = d.iter().map(|x| x / lead).collect();
        Ok(WeilQuartic { q: self.q, a: -d[1], b: d[2] })
    }

    /// Checks `|a| <= 4 q^{3/2}` and that every reciprocal root has absolute
    /// value `q^{3/2}`; returns the largest relative defect.
    pub fn check_weil_bound(&self) -> Result<f64> {
        let q = self.q as f64;
        if (self.a as f64).abs() > 4.0 * q.powf(1.5) * (1.0 + WEIL_TOLERANCE) {
            return Err(Error::WeilBoundViolation(format!("|a| = {} > 4 q^(3/2)", self.a.abs())));
        }
        let defect = root_modulus_defect(&self.coefficients(), q.powf(-1.5))?;
        if defect > WEIL_TOLERANCE {
            return Err(Error::WeilBoundViolation(format!(
                "mirror quartic {:?} has a root off |t| = q^(-3/2) by {defect:e}",
                self.coefficients()
            )));
        }
        Ok(defect)
    }
}

impl fmt::Display for WeilQuartic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coefficients();
        write!(f, "1 + ({})t + ({})t^2 + ({})t^3 + ({})t^4", c[1], c[2], c[3], c[4])
    }
}

/// The four possible reductions of a mirror quartic mod 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EulerClassMod2 {
    /// `1 + t^4`
    #[serde(rename = "ONE_T4")]
    OneT4,
    /// `1 + t + t^3 + t^4`
    #[serde(rename = "T3_T4")]
    T3T4,
    /// `1 + t + t^2 + t^3 + t^4`
    #[serde(rename = "CYCLOTOMIC5")]
    Cyclotomic5,
    /// `1 + t^2 + t^4`
    #[serde(rename = "FORBIDDEN")]
    Forbidden,
}

impl EulerClassMod2 {
    pub const ALL: [EulerClassMod2; 4] = [Self::OneT4, Self::T3T4, Self::Cyclotomic5, Self::Forbidden];

    /// Class of `1 + a t + b t^2 + a t^3 + t^4` over `F_2`.
    pub fn from_parities(a_odd: bool, b_odd: bool) -> Self {
        match (a_odd, b_odd) {
            (false, false) => Self::OneT4,
            (true, false) => Self::T3T4,
            (true, true) => Self::Cyclotomic5,
            (false, true) => Self::Forbidden,
        }
    }

    /// Bits `c_0..c_4` of a quartic over `F_2`; `None` unless it is one of the
    /// four palindromic quartics with `c_0 = c_4 = 1`.
    pub fn from_f2_coeffs(c: [u8; 5]) -> Option<Self> {
        if c[0] != 1 || c[4] != 1 || c[1] != c[3] {
            return None;
        }
        Some(Self::from_parities(c[1] == 1, c[2] == 1))
    }

    pub fn f2_coeffs(&self) -> [u8; 5] {
        match self {
            Self::OneT4 => [1, 0, 0, 0, 1],
            Self::T3T4 => [1, 1, 0, 1, 1],
            Self::Cyclotomic5 => [1, 1, 1, 1, 1],
            Self::Forbidden => [1, 0, 1, 0, 1],
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Self::OneT4 => "ONE_T4",
            Self::T3T4 => "T3_T4",
            Self::Cyclotomic5 => "CYCLOTOMIC5",
            Self::Forbidden => "FORBIDDEN",
        }
    }

    pub fn is_forbidden(&self) -> bool {
        *self == Self::Forbidden
    }
}

impl fmt::Display for EulerClassMod2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

pub fn mod2_class(w: &WeilQuartic) -> EulerClassMod2 {
    EulerClassMod2::from_parities(w.a.rem_euclid(2) == 1, w.b.rem_euclid(2) == 1)
}

/// The fields `F_q, F_{q^2}, ..., F_{q^depth}` sharing a budget.
#[derive(Clone, Debug)]
pub struct Tower {
    levels: Vec<FieldCtx>,
}

impl Tower {
    pub fn new(base: &FieldCtx, depth: u32) -> Result<Self> {
        let mut levels = vec![base.clone()];
        for r in 2..=depth {
            levels.push(FieldCtx::new(base.p(), base.k() * r)?.with_budget(base.budget()));
        }
        Ok(Self { levels })
    }

    pub fn base(&self) -> &FieldCtx {
        &self.levels[0]
    }

    /// `F_{q^r}`, `r >= 1`.
    pub fn level(&self, r: u32) -> &FieldCtx {
        &self.levels[r as usize - 1]
    }

    pub fn depth(&self) -> u32 {
        self.levels.len() as u32
    }

    pub fn embed(&self, x: Fe, r: u32) -> Result<Fe> {
        if r == 1 {
            return Ok(x);
        }
        Ok(Embedding::new(self.base(), self.level(r))?.apply(x))
    }
}

/// How the mirror power sums are obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Through `#X_psi` and the curves `A_psi`, `B_psi`.
    Zeta,
    /// Through `#U_psi` and the torus stratification of its closure.
    Torus,
}

/// `p_1, ..., p_depth` for the mirror quartic.
pub fn mirror_power_sums(tower: &Tower, psi: Fe, route: Route) -> Result<Vec<i128>> {
    (1..=tower.depth())
        .map(|r| match route {
            Route::Zeta => h3_power_sum(tower.base(), tower.level(r), psi, r),
            Route::Torus => mirror_trace_from_torus(tower.level(r), tower.embed(psi, r)?),
        })
        .collect()
}

/// `a = p_1`, `b = (p_1^2 - p_2) / 2`, with integrality and Weil checks.
pub fn quartic_from_power_sums(q: u64, p1: i128, p2: i128) -> Result<WeilQuartic> {
    let twice_b = p1 * p1 - p2;
    if twice_b % 2 != 0 {
        return Err(Error::Integrality(format!("p1^2 - p2 = {twice_b} is odd")));
    }
    let w = WeilQuartic { q, a: p1, b: twice_b / 2 };
    w.check_weil_bound()?;
    if w.dual()? != w {
        return Err(Error::Integrality(format!("{w} is not self-dual")));
    }
    Ok(w)
}

/// `P_{psi,q}` from counts over `F_q` and `F_{q^2}` via the zeta decomposition.
pub fn reconstruct_mirror_quartic(base: &FieldCtx, psi: Fe) -> Result<WeilQuartic> {
    reconstruct_mirror_quartic_by(base, psi, Route::Zeta)
}

pub fn reconstruct_mirror_quartic_by(base: &FieldCtx, psi: Fe, route: Route) -> Result<WeilQuartic> {
    let tower = Tower::new(base, 2)?;
    let s = mirror_power_sums(&tower, psi, route)?;
    quartic_from_power_sums(base.q(), s[0], s[1])
}

/// Largest relative deviation of the root moduli of the integer polynomial
/// `c` from `target`, computed on its exact squarefree part.
pub fn root_modulus_defect(c: &[i128], target: f64) -> Result<f64> {
    let f = QPoly::new(c.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect());
    let sf = f.squarefree_part().monic();
    let deg = sf.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(0.0);
    }
    // t = target * u puts the expected roots on the unit circle
    let scaled: Vec<f64> = sf
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, x)| x.to_f64().unwrap_or(f64::NAN) * target.powi(i as i32))
        .collect();
    if scaled.iter().any(|x| !x.is_finite()) {
        return Err(Error::WeilBoundViolation("coefficients out of floating range".into()));
    }
    Ok(max_modulus_defect(&polynomial_roots(&scaled), 1.0))
}

/// `L(t) = prod (1 - alpha_i t)` of a genus-`g` curve over `F_q` from the
/// power sums `s_1..s_g` of its Frobenius eigenvalues.
pub fn l_polynomial_from_power_sums(q: u64, s: &[i128]) -> Result<Vec<i128>> {
    let g = s.len();
    let mut c = vec![0i128; 2 * g + 1];
    c[0] = 1;
    for k in 1..=g {
        let sum: i128 = (1..=k).map(|i| s[i - 1] * c[k - i]).sum();
        if sum % k as i128 != 0 {
            return Err(Error::Integrality(format!("Newton step {k} is not integral")));
        }
        c[k] = -sum / k as i128;
    }
    let q = q as i128;
    for i in 0..g {
        c[2 * g - i] = q.pow((g - i) as u32) * c[i];
    }
    Ok(c)
}

/// Exact `Q` with `Q(0) = 1` and `Q^2 = L`, if one exists.
pub fn exact_square_root(l: &[i128]) -> Option<Vec<i128>> {
    if l.is_empty() || l[0] != 1 || (l.len() - 1) % 2 != 0 {
        return None;
    }
    let n = (l.len() - 1) / 2;
    let mut r = vec![0i128; n + 1];
    r[0] = 1;
    for k in 1..=n {
        let cross: i128 = (1..k).map(|i| r[i] * r[k - i]).sum();
        let twice = l[k] - cross;
        if twice % 2 != 0 {
            return None;
        }
        r[k] = twice / 2;
    }
    let mut sq = vec![0i128; 2 * n + 1];
    for i in 0..=n {
        for j in 0..=n {
            sq[i + j] += r[i] * r[j];
        }
    }
    (sq == l).then_some(r)
}

/// L-polynomial of `A_psi` or `B_psi` over `F_q`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveLPolynomial {
    pub q: u64,
    pub curve: MirrorCurve,
    pub genus: u32,
    pub coeffs: Vec<i128>,
    /// `Some(Q)` when `L = Q^2` exactly.
    pub square_root: Option<Vec<i128>>,
    pub max_defect: f64,
}

/// Genus-4 L-polynomial from point counts over `F_q..F_{q^4}`.
pub fn curve_l_polynomial(base: &FieldCtx, psi: Fe, curve: MirrorCurve) -> Result<CurveLPolynomial> {
    let tower = Tower::new(base, 4)?;
    let genus = 4;
    let s = (1..=genus)
        .map(|r| mirror_curve_power_sum(tower.level(r), tower.embed(psi, r)?, curve))
        .collect::<Result<Vec<_>>>()?;
    let coeffs = l_polynomial_from_power_sums(base.q(), &s)?;
    let max_defect = root_modulus_defect(&coeffs, (base.q() as f64).powf(-0.5))?;
    if max_defect > WEIL_TOLERANCE {
        return Err(Error::WeilBoundViolation(format!(
            "L-polynomial {coeffs:?} has a root off |t| = q^(-1/2) by {max_defect:e}"
        )));
    }
    Ok(CurveLPolynomial {
        q: base.q(),
        curve,
        genus,
        square_root: exact_square_root(&coeffs),
        coeffs,
        max_defect,
    })
}
