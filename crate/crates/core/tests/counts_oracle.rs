use dwork_core::counts::*;
use dwork_core::galois::frobenius_cycle_type;
use dwork_core::weil::{reconstruct_mirror_quartic_by, Route};
use dwork_core::{FieldCtx, RationalPsi};

fn good(ctx: &FieldCtx) -> Vec<dwork_core::Fe> {
    ctx.elements().filter(|&x| check_good(ctx, x).is_ok()).collect()
}

#[test]
fn naive_and_accelerated_u_agree() {
    for p in [3, 7, 11, 13] {
        let ctx = FieldCtx::new(p, 1).unwrap();
        for x in good(&ctx) {
            let n = count_u(&ctx, x, Method::Naive).unwrap();
            let a = count_u(&ctx, x, Method::Accelerated).unwrap();
            assert_eq!(n, a, "q = {p}, psi = {x:?}");
        }
    }
}

#[test]
fn naive_and_accelerated_y_agree() {
    for (p, k) in [(3, 1), (7, 1), (3, 2)] {
        let ctx = FieldCtx::new(p, k).unwrap();
        for x in good(&ctx) {
            assert_eq!(count_y(&ctx, x, Method::Naive).unwrap(), count_y(&ctx, x, Method::Accelerated).unwrap());
        }
    }
}

#[test]
fn three_x_counts_agree() {
    for (p, k) in [(3, 1), (7, 1), (11, 1), (3, 2)] {
        let ctx = FieldCtx::new(p, k).unwrap();
        for x in good(&ctx) {
            let fast = count_x_projective(&ctx, x, Method::Accelerated).unwrap();
            assert_eq!(fast, count_x_cone_table(&ctx, x).unwrap(), "q = {}", ctx.q());
            if ctx.q() <= 9 {
                assert_eq!(fast, count_x_projective(&ctx, x, Method::Naive).unwrap());
            }
        }
    }
}

#[test]
fn lemma_parities_including_extension_fields() {
    for (p, k) in [(3, 1), (7, 1), (11, 1), (13, 1), (3, 2), (7, 2)] {
        let ctx = FieldCtx::new(p, k).unwrap();
        for x in good(&ctx) {
            let n = count_quintic_roots(&ctx, x) % 2;
            let u = count_u(&ctx, x, Method::Accelerated).unwrap() % 2;
            let v = count_v(&ctx, x).unwrap() % 2;
            let y = count_y(&ctx, x, Method::Accelerated).unwrap() % 2;
            assert_eq!((u, v, y), (n, n, 1 - n), "q = {}, psi = {x:?}", ctx.q());
        }
    }
}

#[test]
fn zeta_and_torus_routes_agree() {
    for s in ["-2", "-1", "0", "2", "3", "1/2"] {
        let psi: RationalPsi = s.parse().unwrap();
        for p in [3, 7, 11, 13] {
            if !psi.is_good_prime(p) {
                continue;
            }
            let ctx = FieldCtx::new(p, 1).unwrap();
            let x = psi.reduce(&ctx).unwrap();
            let z = reconstruct_mirror_quartic_by(&ctx, x, Route::Zeta).unwrap();
            let t = reconstruct_mirror_quartic_by(&ctx, x, Route::Torus).unwrap();
            assert_eq!(z, t, "psi = {s}, p = {p}");
        }
    }
}

#[test]
fn root_count_matches_cycle_type() {
    for s in ["0", "2", "3", "-2", "1/2"] {
        let psi: RationalPsi = s.parse().unwrap();
        for p in [3u64, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43] {
            let Ok(ct) = frobenius_cycle_type(&psi, p) else { continue };
            let ctx = FieldCtx::new(p, 1).unwrap();
            let n = count_quintic_roots(&ctx, psi.reduce(&ctx).unwrap());
            assert_eq!(n, ct.fixed_points() as u64, "psi = {s}, p = {p}");
        }
    }
}

#[test]
fn bad_reduction_is_rejected() {
    let ctx = FieldCtx::new(11, 1).unwrap();
    let x = ctx.from_int(3);
    assert!(check_good(&ctx, x).is_err());
    assert!(count_u(&ctx, x, Method::Accelerated).is_err());
}
