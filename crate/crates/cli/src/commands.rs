use crate::output::Emitter;
use crate::*;
use anyhow::{bail, Result};
use dwork_core::counts::{
    count_quintic_roots, count_superelliptic, count_u, count_v, count_x_cone_table, count_x_projective, count_y,
    CountRecord, Method, SuperellipticSpec, Variety,
};
use dwork_core::dioph::{
    count_hyperelliptic, count_hyperelliptic_naive, factorization_identity, substitution_identity_check,
    torsion_set_cardinality, HyperellipticModel, IdentityKind, IdentityOptions, TorsionCurve, WeberLabels,
};
use dwork_core::galois::{classify, depth2_bound, frobenius_cycle_type, reciprocity_scan, GaloisGroup, ScanOptions};
use dwork_core::sp4s6::{classify_subgroup, cycle_type_to_class, phi, GroupTag, Perm6};
use dwork_core::weil::{mod2_class, reconstruct_mirror_quartic_by, EulerClassMod2, Route};
use dwork_core::{suite, Error, FieldCtx, RationalPsi};
use serde::Serialize;
use std::io::Write;

/// Core errors that mean a computed quantity is inconsistent, as opposed to
/// bad input, map to the assertion exit code.
pub fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::Integrality(_) | Error::WeilBoundViolation(_)) => 2,
        _ => 1,
    }
}

pub struct Run<W: Write> {
    out: Emitter<W>,
    seed: u64,
    budget: u64,
    pub failures: Vec<String>,
}

#[derive(Serialize)]
struct EulerRecord {
    psi: String,
    q: u64,
    route: Route,
    a: i128,
    b: i128,
    coefficients: [i128; 5],
    class: EulerClassMod2,
    class_from_cycle: Option<EulerClassMod2>,
    n_roots: u64,
    weil_defect: Option<f64>,
    congruence_ok: bool,
    parity_ok: bool,
}

#[derive(Serialize)]
struct ScanSummaryRecord<'a> {
    psi: String,
    route: Route,
    ok: bool,
    #[serde(flatten)]
    summary: &'a dwork_core::galois::ScanSummary,
}

#[derive(Serialize)]
struct PermRecord {
    perm: String,
    cycle_type: String,
    matrix: [[u8; 4]; 4],
    order: u32,
    symplectic: bool,
    charpoly: [u8; 5],
    class: Option<EulerClassMod2>,
    endoscopic: bool,
}

#[derive(Serialize)]
struct SubgroupRecord {
    generators: Vec<String>,
    tag: GroupTag,
    order: usize,
    abelian: bool,
    has33: bool,
}

#[derive(Serialize)]
struct CurveCount {
    model: &'static str,
    p: u64,
    count: u64,
    method: Method,
    torsion: Option<u64>,
}

#[derive(Serialize)]
struct Flag {
    name: &'static str,
    ok: bool,
}

fn parse_psi(s: &str) -> Result<RationalPsi> {
    Ok(s.parse::<RationalPsi>()?)
}

fn methods(m: MethodArg) -> Vec<Method> {
    match m {
        MethodArg::Naive => vec![Method::Naive],
        MethodArg::Accelerated => vec![Method::Accelerated],
        MethodArg::Both => vec![Method::Naive, Method::Accelerated],
    }
}

fn routes(r: RouteArg) -> Vec<Route> {
    match r {
        RouteArg::Zeta => vec![Route::Zeta],
        RouteArg::Torus => vec![Route::Torus],
        RouteArg::Both => vec![Route::Zeta, Route::Torus],
    }
}

impl<W: Write> Run<W> {
    pub fn new(out: Emitter<W>, seed: u64, budget: u64) -> Self {
        Self { out, seed, budget, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(witness());
        }
    }

    fn field(&self, p: u64, k: u32) -> Result<FieldCtx> {
        Ok(FieldCtx::new(p, k)?.with_budget(self.budget))
    }

    pub fn dispatch(&mut self, cmd: &Command) -> Result<()> {
        match cmd {
            Command::Count(a) => self.count(a),
            Command::Euler(a) => self.euler(a),
            Command::Reciprocity(a) => self.reciprocity(a),
            Command::Classify(a) => self.classify(a),
            Command::S6(a) => self.s6(a),
            Command::Curve(a) => self.curve(a),
            Command::Identity(a) => self.identity(a),
            Command::Selftest => self.selftest(),
        }
    }

    fn count(&mut self, a: &CountArgs) -> Result<()> {
        let ctx = self.field(a.p, a.k)?;
        let psi = parse_psi(&a.psi)?;
        let x = psi.reduce(&ctx)?;
        let has_naive = matches!(a.variety, VarietyArg::U | VarietyArg::Y | VarietyArg::XProj);
        if !has_naive && a.method == MethodArg::Naive {
            bail!("{:?} has a single counting routine; use --method accelerated", a.variety);
        }
        let ms = if has_naive { methods(a.method) } else { vec![Method::Accelerated] };
        let variety = match a.variety {
            VarietyArg::FRoots => Variety::FRoots,
            VarietyArg::U => Variety::U,
            VarietyArg::V => Variety::V,
            VarietyArg::Y => Variety::Y,
            VarietyArg::XProj => Variety::XProj,
            VarietyArg::ACurve => Variety::ACurve,
            VarietyArg::BCurve => Variety::BCurve,
        };
        let mut counts = Vec::new();
        for m in ms {
            let count = match a.variety {
                VarietyArg::FRoots => count_quintic_roots(&ctx, x),
                VarietyArg::U => count_u(&ctx, x, m)?,
                VarietyArg::V => count_v(&ctx, x)?,
                VarietyArg::Y => count_y(&ctx, x, m)?,
                VarietyArg::XProj => count_x_projective(&ctx, x, m)?,
                VarietyArg::ACurve => count_superelliptic(&ctx, &SuperellipticSpec::curve_a(&ctx, x)?),
                VarietyArg::BCurve => count_superelliptic(&ctx, &SuperellipticSpec::curve_b(&ctx, x)?),
            };
            let rec = CountRecord { psi: psi.to_string(), q: ctx.q(), variety, count, method: m };
            self.out.emit("count", &rec)?;
            counts.push(rec);
        }
        if a.method == MethodArg::Both {
            if let [n, f] = &counts[..] {
                self.check(n.count == f.count, || format!("naive {} != accelerated {} for {n:?}", n.count, f.count));
            }
            if a.variety == VarietyArg::XProj {
                let t = count_x_cone_table(&ctx, x)?;
                let f = counts[counts.len() - 1].count;
                self.check(t == f, || format!("cone-table count {t} != accelerated {f}"));
            }
        }
        Ok(())
    }

    fn euler(&mut self, a: &EulerArgs) -> Result<()> {
        let ctx = self.field(a.p, a.k)?;
        let psi = parse_psi(&a.psi)?;
        let x = psi.reduce(&ctx)?;
        let n_roots = count_quintic_roots(&ctx, x);
        let class_from_cycle = if a.k == 1 {
            frobenius_cycle_type(&psi, a.p).ok().map(|ct| cycle_type_to_class(&ct)).transpose()?
        } else {
            None
        };
        let mut seen = Vec::new();
        for route in routes(a.route) {
            let w = reconstruct_mirror_quartic_by(&ctx, x, route)?;
            let weil = w.check_weil_bound();
            let class = mod2_class(&w);
            let rec = EulerRecord {
                psi: psi.to_string(),
                q: ctx.q(),
                route,
                a: w.a,
                b: w.b,
                coefficients: w.coefficients(),
                class,
                class_from_cycle,
                n_roots,
                weil_defect: weil.as_ref().ok().copied(),
                congruence_ok: w.a.rem_euclid(2) as u64 == (n_roots + 1) % 2,
                parity_ok: w.a % 2 != 0 || w.b % 2 == 0,
            };
            self.out.emit("euler", &rec)?;
            if let Err(e) = weil {
                self.failures.push(e.to_string());
            }
            self.check(rec.congruence_ok, || format!("a = {} but n(f, {}) = {n_roots}", w.a, ctx.q()));
            self.check(rec.parity_ok, || format!("a = {} even but b = {} odd", w.a, w.b));
            self.check(!class.is_forbidden(), || format!("class 1+t^2+t^4 at q = {}", ctx.q()));
            if let Some(c) = class_from_cycle {
                self.check(c == class, || format!("class {class} but cycle type gives {c}"));
            }
            seen.push(w);
        }
        if let [z, t] = &seen[..] {
            self.check(z == t, || format!("zeta route {z} != torus route {t}"));
        }
        Ok(())
    }

    fn reciprocity(&mut self, a: &ReciprocityArgs) -> Result<()> {
        let psis = a.psi.iter().map(|s| parse_psi(s)).collect::<Result<Vec<_>>>()?;
        let depth2_prime_max = a.depth2_prime_max.unwrap_or_else(|| depth2_bound(self.budget));
        for psi in &psis {
            let mut reports = Vec::new();
            for route in routes(a.route) {
                let opts = ScanOptions { prime_max: a.prime_max, depth: a.depth, depth2_prime_max, route, budget: self.budget };
                let report = reciprocity_scan(psi, &opts)?;
                for row in &report.rows {
                    self.out.emit("scan-row", row)?;
                    if !row.ok() {
                        self.failures.push(serde_json::to_string(row)?);
                    }
                }
                let summary = ScanSummaryRecord { psi: psi.to_string(), route, ok: report.ok(), summary: &report.summary };
                self.out.emit("scan-summary", &summary)?;
                reports.push(report);
            }
            if let [z, t] = &reports[..] {
                for (r, s) in z.rows.iter().zip(&t.rows) {
                    self.check(r.p == s.p && r.a == s.a && (r.b == s.b || r.b.is_none() || s.b.is_none()), || {
                        format!("psi = {psi}, p = {}: zeta (a, b) = ({:?}, {:?}), torus ({:?}, {:?})", r.p, r.a, r.b, s.a, s.b)
                    });
                }
            }
        }
        Ok(())
    }

    fn classify(&mut self, a: &ClassifyArgs) -> Result<()> {
        for s in &a.psi {
            let psi = parse_psi(s)?;
            let v = classify(&psi, a.prime_budget)?;
            self.out.emit("verdict", &v)?;
            self.check(v.group != GaloisGroup::Unknown, || format!("psi = {psi}: no verdict ({:?})", v.note));
            if let Some(want) = a.expect {
                let want = match want {
                    GroupArg::C5 => GaloisGroup::C5,
                    GroupArg::D10 => GaloisGroup::D10,
                    GroupArg::F20 => GaloisGroup::F20,
                    GroupArg::A5 => GaloisGroup::A5,
                    GroupArg::S5 => GaloisGroup::S5,
                    GroupArg::Reducible => GaloisGroup::Reducible,
                };
                self.check(v.group == want, || format!("psi = {psi}: {:?}, expected {want:?}", v.group));
            }
        }
        Ok(())
    }

    fn s6(&mut self, a: &S6Args) -> Result<()> {
        for s in &a.perm {
            let sigma: Perm6 = s.parse()?;
            let m = phi(&sigma);
            let charpoly = m.charpoly_mod2();
            let rec = PermRecord {
                perm: sigma.to_string(),
                cycle_type: sigma.cycle_type().to_string(),
                matrix: m.to_rows(),
                order: m.order(),
                symplectic: m.is_symplectic(),
                charpoly,
                class: EulerClassMod2::from_f2_coeffs(charpoly),
                endoscopic: m.in_endoscopic(),
            };
            self.out.emit("phi", &rec)?;
            self.check(rec.symplectic, || format!("phi({sigma}) is not symplectic"));
            self.check(rec.order == sigma.order(), || format!("phi({sigma}) has order {}", rec.order));
        }
        for g in &a.subgroup {
            let gens = g
                .split(';')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<Perm6>())
                .collect::<Result<Vec<_>, _>>()?;
            let v = classify_subgroup(&gens)?;
            let rec = SubgroupRecord {
                generators: gens.iter().map(ToString::to_string).collect(),
                tag: v.tag,
                order: v.order,
                abelian: v.abelian,
                has33: v.has33,
            };
            self.out.emit("subgroup", &rec)?;
        }
        if a.check || (a.perm.is_empty() && a.subgroup.is_empty()) {
            for c in [suite::group_dictionary(self.seed), suite::sym3_image()] {
                self.emit_check(c)?;
            }
        }
        Ok(())
    }

    fn curve(&mut self, a: &CurveArgs) -> Result<()> {
        if let (Some(model), Some(p)) = (a.model, a.p) {
            let (name, hm) = match model {
                ModelArg::C => ("C", HyperellipticModel::curve_c(p)),
                ModelArg::D10 => ("D10", HyperellipticModel::curve_d10(p)),
            };
            let mut counts = Vec::new();
            for m in methods(a.method) {
                let count = match m {
                    Method::Naive => count_hyperelliptic_naive(&hm)?,
                    Method::Accelerated => count_hyperelliptic(&hm)?,
                };
                self.out.emit("curve-count", &CurveCount { model: name, p, count, method: m, torsion: None })?;
                counts.push(count);
            }
            if let [n, f] = counts[..] {
                self.check(n == f, || format!("{name} over F_{p}: naive {n} != accelerated {f}"));
            }
        }
        if a.f11_checks || a.model.is_none() {
            for (name, hm, tc) in [
                ("C", HyperellipticModel::curve_c(11), TorsionCurve::C),
                ("D10", HyperellipticModel::curve_d10(11), TorsionCurve::D10),
            ] {
                let count = count_hyperelliptic(&hm)?;
                let torsion = torsion_set_cardinality(tc);
                let want = if name == "C" { 12 } else { 8 };
                self.out.emit(
                    "curve-count",
                    &CurveCount { model: name, p: 11, count, method: Method::Accelerated, torsion: Some(torsion) },
                )?;
                self.check(count == want && torsion == want, || {
                    format!("{name} over F_11: {count} points, torsion set {torsion}, expected {want}")
                });
            }
            let ok = factorization_identity();
            self.out.emit("flag", &Flag { name: "factorization-identity", ok })?;
            self.check(ok, || "x^10 + 11 x^5 - 1 does not factor as expected over Z[(1+sqrt5)/2]".into());
        }
        Ok(())
    }

    fn identity(&mut self, a: &IdentityArgs) -> Result<()> {
        let kinds = match a.kind {
            KindArg::WeberD10 => vec![IdentityKind::WeberD10],
            KindArg::F20Resolvent => vec![IdentityKind::F20Resolvent],
            KindArg::All => vec![IdentityKind::WeberD10, IdentityKind::F20Resolvent],
        };
        let opts = IdentityOptions {
            trials: a.trials,
            seed: self.seed,
            prime: a.prime,
            weber_labels: match a.labels {
                LabelsArg::Corrected => WeberLabels::Corrected,
                LabelsArg::Literal => WeberLabels::Literal,
            },
            mutate: a.mutate,
        };
        for kind in kinds {
            let r = substitution_identity_check(kind, &opts)?;
            self.out.emit("identity", &r)?;
            if a.mutate {
                self.check(r.first_failure.is_some_and(|i| i <= 3), || format!("{kind:?}: perturbation not caught: {r:?}"));
            } else {
                self.check(r.all_pass(), || format!("{kind:?}: first failing trial {:?} of {r:?}", r.first_failure));
            }
        }
        Ok(())
    }

    fn selftest(&mut self) -> Result<()> {
        for c in suite::run_all(self.seed) {
            self.emit_check(c)?;
        }
        Ok(())
    }

    fn emit_check(&mut self, c: suite::CheckOutcome) -> Result<()> {
        self.out.emit("check", &c)?;
        self.check(c.ok, || format!("{}: {}", c.name, c.detail));
        Ok(())
    }
}
