//! The full invariant suite, shared by `dwork selftest` and the acceptance
//! test. Each check returns a [`CheckOutcome`] instead of panicking so a
//! failing witness can be reported.

use crate::counts::{check_good, count_quintic_roots, count_u, count_v, count_y, Method, MirrorCurve};
use crate::dioph::{
    count_hyperelliptic, factorization_identity, substitution_identity_check, torsion_set_cardinality,
    HyperellipticModel, IdentityKind, IdentityOptions, TorsionCurve,
};
use crate::galois::{classify, frobenius_cycle_type, reciprocity_scan, GaloisGroup, ScanOptions, DEFAULT_PRIME_BUDGET};
use crate::sp4s6::{
    charpoly_f4_over_f2, classify_subgroup, cycle_type_to_class, mul4, phi, sl2f4, sym3_sl2f4, transpose4,
    antidiagonal4, CycleType, GroupTag, Perm6, SpMat4,
};
use crate::weil::{curve_l_polynomial, mod2_class, reconstruct_mirror_quartic, EulerClassMod2, WeilQuartic, WEIL_TOLERANCE};
use crate::{Error, FieldCtx, RationalPsi, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashSet;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub ok: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: &'static str, r: Result<String, String>) -> Self {
        match r {
            Ok(detail) => Self { name, ok: true, detail },
            Err(detail) => Self { name, ok: false, detail },
        }
    }
}

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

fn psi(s: &str) -> RationalPsi {
    s.parse().expect("literal psi")
}

pub const GRID_PSI: [&str; 5] = ["-2", "-1", "0", "2", "3"];
pub const GRID_PRIMES: [u64; 4] = [3, 7, 11, 13];

/// One cell of the small reciprocity grid.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GridCell {
    pub psi: String,
    pub p: u64,
    pub n_roots: u64,
    pub quartic: WeilQuartic,
    pub class: EulerClassMod2,
}

/// Mirror quartics over `F_p` by the `X_psi` zeta decomposition, for the good
/// unramified cells of `psis x primes`.
pub fn grid_cells(psis: &[&str], primes: &[u64]) -> Result<Vec<GridCell>> {
    let cells: Vec<(RationalPsi, u64)> = psis
        .iter()
        .flat_map(|s| primes.iter().map(move |&p| (psi(s), p)))
        .filter(|(s, p)| s.is_good_prime(*p) && frobenius_cycle_type(s, *p).is_ok())
        .collect();
    cells
        .par_iter()
        .map(|(s, p)| {
            let ctx = FieldCtx::new(*p, 1)?;
            let x = s.reduce(&ctx)?;
            let quartic = reconstruct_mirror_quartic(&ctx, x)?;
            Ok(GridCell {
                psi: s.to_string(),
                p: *p,
                n_roots: count_quintic_roots(&ctx, x),
                class: mod2_class(&quartic),
                quartic,
            })
        })
        .collect()
}

pub fn reciprocity_grid() -> CheckOutcome {
    CheckOutcome::new("reciprocity congruence", (|| {
        let cells = grid_cells(&GRID_PSI, &GRID_PRIMES).map_err(|e| e.to_string())?;
        for c in &cells {
            ensure(c.quartic.a.rem_euclid(2) as u64 == (c.n_roots + 1) % 2, || {
                format!("psi = {}, p = {}: a = {}, n = {}", c.psi, c.p, c.quartic.a, c.n_roots)
            })?;
        }
        Ok(format!("{} cells", cells.len()))
    })())
}

pub fn parity_grid() -> CheckOutcome {
    CheckOutcome::new("parity theorem", (|| {
        let cells = grid_cells(&GRID_PSI, &GRID_PRIMES).map_err(|e| e.to_string())?;
        for c in &cells {
            let (a, b) = (c.quartic.a, c.quartic.b);
            ensure(a % 2 != 0 || b % 2 == 0, || format!("psi = {}, p = {}: a = {a}, b = {b}", c.psi, c.p))?;
            ensure(!c.class.is_forbidden(), || format!("psi = {}, p = {}: class {}", c.psi, c.p, c.class))?;
        }
        Ok(format!("{} cells, no 1+t^2+t^4", cells.len()))
    })())
}

pub const LEMMA_FIELDS: [(u64, u32); 6] = [(3, 1), (7, 1), (11, 1), (13, 1), (3, 2), (7, 2)];

pub fn lemma_chain() -> CheckOutcome {
    CheckOutcome::new("lemma chain", (|| {
        let mut checked = 0usize;
        for (p, k) in LEMMA_FIELDS {
            let ctx = FieldCtx::new(p, k).map_err(|e| e.to_string())?;
            let good: Vec<_> = ctx.elements().filter(|&x| check_good(&ctx, x).is_ok()).collect();
            let bad: Vec<String> = good
                .par_iter()
                .filter_map(|&x| {
                    let n = count_quintic_roots(&ctx, x);
                    let u = count_u(&ctx, x, Method::Accelerated);
                    let v = count_v(&ctx, x);
                    let y = count_y(&ctx, x, Method::Accelerated);
                    match (u, v, y) {
                        (Ok(u), Ok(v), Ok(y)) if u % 2 == n % 2 && v % 2 == n % 2 && y % 2 != u % 2 => None,
                        (u, v, y) => Some(format!("q = {}, psi = {:?}: n = {n}, U = {u:?}, V = {v:?}, Y = {y:?}", ctx.q(), x)),
                    }
                })
                .collect();
            ensure(bad.is_empty(), || bad[0].clone())?;
            checked += good.len();
        }
        Ok(format!("{checked} (q, psi) pairs"))
    })())
}

pub fn class_dictionary() -> CheckOutcome {
    CheckOutcome::new("class dictionary", (|| {
        let opts = ScanOptions { prime_max: 200, depth: 2, depth2_prime_max: 13, ..Default::default() };
        let mut rows = 0;
        let mut deep = 0;
        for s in ["0", "2", "3"] {
            let report = reciprocity_scan(&psi(s), &opts).map_err(|e| e.to_string())?;
            if let Some(r) = report.rows.iter().find(|r| !r.ok()) {
                return Err(format!("{r:?}"));
            }
            ensure(report.summary.depth2_rows > 0, || format!("psi = {s}: no depth-2 rows"))?;
            rows += report.summary.rows;
            deep += report.summary.depth2_rows;
        }
        Ok(format!("{rows} primes, {deep} at depth 2"))
    })())
}

/// Cycle types of `S_5` with the displayed `A_tau` characteristic polynomials.
pub const S5_CHARPOLYS: [(&[u8], [u8; 5]); 7] = [
    (&[1, 1, 1, 1, 1], [1, 0, 0, 0, 1]),
    (&[2, 1, 1, 1], [1, 0, 0, 0, 1]),
    (&[2, 2, 1], [1, 0, 0, 0, 1]),
    (&[4, 1], [1, 0, 0, 0, 1]),
    (&[3, 1, 1], [1, 1, 0, 1, 1]),
    (&[3, 2], [1, 1, 0, 1, 1]),
    (&[5], [1, 1, 1, 1, 1]),
];

pub fn group_dictionary(seed: u64) -> CheckOutcome {
    CheckOutcome::new("group dictionary", (|| {
        let all = Perm6::all();
        let images: HashSet<SpMat4> = all.iter().map(phi).collect();
        ensure(all.len() == 720 && images.len() == 720, || format!("{} distinct images", images.len()))?;
        if let Some(s) = all.iter().find(|s| !phi(s).is_symplectic()) {
            return Err(format!("phi({s}) is not symplectic"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..1000 {
            let (s, t) = (all[rng.gen_range(0..720)], all[rng.gen_range(0..720)]);
            ensure(phi(&s.mul(&t)) == phi(&s).mul(&phi(&t)), || format!("phi not multiplicative on {s}, {t}"))?;
        }
        for (parts, want) in S5_CHARPOLYS {
            let ct = CycleType::new(parts.to_vec());
            let rep = ct.representative().map_err(|e| e.to_string())?;
            let got = phi(&rep).charpoly_mod2();
            ensure(got == want, || format!("{ct}: charpoly {got:?}, expected {want:?}"))?;
            let class = cycle_type_to_class(&ct).map_err(|e| e.to_string())?;
            ensure(class.f2_coeffs() == want, || format!("{ct}: class {class}"))?;
        }
        let p = |s: &str| s.parse::<Perm6>().expect("literal permutation");
        ensure(phi(&p("(23)(56)")) == SpMat4::J, || "phi((23)(56)) is not J".into())?;
        let r = SpMat4::from_rows([[0, 0, 0, 1], [0, 0, 1, 1], [0, 1, 0, 0], [1, 1, 0, 1]]);
        ensure(phi(&p("(25463)")) == r, || format!("phi((25463)) = {:?}", phi(&p("(25463)")).to_rows()))?;
        let cases = [
            (vec![p("(23)(56)"), p("(25463)")], GroupTag::D10),
            (vec![p("(12345)"), p("(1243)")], GroupTag::F20),
            (vec![p("(12345)"), p("(12)")], GroupTag::S5),
        ];
        for (gens, tag) in cases {
            let v = classify_subgroup(&gens).map_err(|e| e.to_string())?;
            ensure(v.tag == tag, || format!("expected {tag:?}, got {v:?}"))?;
        }
        Ok("720 images, 1000 products, 7 charpolys, D10/F20/S5".into())
    })())
}

pub fn sym3_image() -> CheckOutcome {
    CheckOutcome::new("symmetric cube", (|| {
        let j = antidiagonal4();
        let mut image = HashSet::new();
        for g in sl2f4() {
            let m = sym3_sl2f4(&g).map_err(|e| e.to_string())?;
            ensure(mul4(&mul4(&transpose4(&m), &j), &m) == j, || format!("{g:?} does not preserve the form"))?;
            let cp = charpoly_f4_over_f2(&m).ok_or_else(|| format!("charpoly of {g:?} not over F_2"))?;
            ensure(cp != [1, 0, 1, 0, 1], || format!("{g:?} has charpoly (1+t+t^2)^2"))?;
            image.insert(m);
        }
        ensure(image.len() == 60, || format!("image has order {}", image.len()))?;
        Ok("order 60, symplectic, no (3,3) element".into())
    })())
}

pub const GALOIS_EXPECT: [(&str, GaloisGroup); 5] = [
    ("0", GaloisGroup::F20),
    ("2", GaloisGroup::S5),
    ("3", GaloisGroup::S5),
    ("-2", GaloisGroup::S5),
    ("1/2", GaloisGroup::S5),
];

pub fn galois_verdicts() -> CheckOutcome {
    CheckOutcome::new("Galois classification", (|| {
        for (s, want) in GALOIS_EXPECT {
            let v = classify(&psi(s), DEFAULT_PRIME_BUDGET).map_err(|e| e.to_string())?;
            ensure(v.group == want && v.irreducibility.is_irreducible(), || {
                format!("psi = {s}: {:?} ({:?}), expected {want:?}", v.group, v.note)
            })?;
            let support = want.support().expect("transitive");
            let names: HashSet<String> = support.iter().map(|c| c.to_string()).collect();
            if let Some(bad) = v.histogram.keys().find(|k| !names.contains(*k)) {
                return Err(format!("psi = {s}: cycle type {bad} outside {want:?}"));
            }
        }
        Ok("0 -> F20; 2, 3, -2, 1/2 -> S5".into())
    })())
}

pub fn diophantine(seed: u64) -> CheckOutcome {
    CheckOutcome::new("Diophantine side", (|| {
        let c = count_hyperelliptic(&HyperellipticModel::curve_c(11)).map_err(|e| e.to_string())?;
        let d = count_hyperelliptic(&HyperellipticModel::curve_d10(11)).map_err(|e| e.to_string())?;
        ensure((c, d) == (12, 8), || format!("counts over F_11: {c}, {d}"))?;
        let tc = torsion_set_cardinality(TorsionCurve::C);
        let td = torsion_set_cardinality(TorsionCurve::D10);
        ensure((tc, td) == (c, d), || format!("torsion sets {tc}, {td} vs counts {c}, {d}"))?;
        ensure(factorization_identity(), || "factorization of x^10 + 11 x^5 - 1 fails".into())?;
        for kind in [IdentityKind::WeberD10, IdentityKind::F20Resolvent] {
            let opts = IdentityOptions { seed, ..Default::default() };
            let r = substitution_identity_check(kind, &opts).map_err(|e| e.to_string())?;
            ensure(r.all_pass(), || format!("{kind:?}: {}/{} (first failure {:?})", r.passes, r.trials, r.first_failure))?;
            let m = substitution_identity_check(kind, &IdentityOptions { mutate: true, ..opts })
                .map_err(|e| e.to_string())?;
            ensure(m.first_failure.is_some_and(|i| i <= 3), || format!("{kind:?}: mutation undetected ({m:?})"))?;
        }
        Ok("12 and 8 points, identities 100/100, mutations caught".into())
    })())
}

pub const CURVE_FIELDS: [u64; 2] = [11, 31];

pub fn weil_bounds() -> CheckOutcome {
    CheckOutcome::new("Weil bounds", (|| {
        let cells = grid_cells(&GRID_PSI, &GRID_PRIMES).map_err(|e| e.to_string())?;
        let mut worst: f64 = 0.0;
        for c in &cells {
            let d = c.quartic.check_weil_bound().map_err(|e| format!("psi = {}, p = {}: {e}", c.psi, c.p))?;
            worst = worst.max(d);
        }
        let mut curves = 0;
        for q in CURVE_FIELDS {
            let ctx = FieldCtx::new(q, 1).map_err(|e| e.to_string())?;
            for s in GRID_PSI.iter().map(|s| psi(s)).filter(|s| s.is_good_prime(q)) {
                let x = s.reduce(&ctx).map_err(|e| e.to_string())?;
                for curve in [MirrorCurve::A, MirrorCurve::B] {
                    let l = curve_l_polynomial(&ctx, x, curve).map_err(|e: Error| e.to_string())?;
                    ensure(l.max_defect <= WEIL_TOLERANCE, || format!("psi = {s}, q = {q}, {curve:?}: defect {:e}", l.max_defect))?;
                    ensure(curve == MirrorCurve::A || l.square_root.is_some(), || {
                        format!("psi = {s}, q = {q}: P_B = {:?} is not a square", l.coeffs)
                    })?;
                    worst = worst.max(l.max_defect);
                    curves += 1;
                }
            }
        }
        Ok(format!("{} quartics, {curves} curve L-polynomials, worst defect {worst:e}", cells.len()))
    })())
}

/// Every check, in a fixed order.
pub fn run_all(seed: u64) -> Vec<CheckOutcome> {
    vec![
        reciprocity_grid(),
        parity_grid(),
        lemma_chain(),
        class_dictionary(),
        group_dictionary(seed),
        sym3_image(),
        galois_verdicts(),
        diophantine(seed),
        weil_bounds(),
    ]
}
