use dwork_core::galois::*;
use dwork_core::weil::{mod2_class, quartic_from_power_sums, EulerClassMod2, WeilQuartic};
use dwork_core::RationalPsi;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn histogram_within_support(num in -40i64..40, den in 1i64..6) {
        let psi = RationalPsi::new(num, den).unwrap();
        if let Ok(v) = classify(&psi, 120) {
            if let Some(support) = v.group.support() {
                let names: Vec<String> = support.iter().map(|c| c.to_string()).collect();
                for k in v.histogram.keys() {
                    prop_assert!(names.contains(k), "{} outside {:?} for psi = {}", k, v.group, psi);
                }
            }
        }
    }

    #[test]
    fn class_from_parities_matches_coefficients(a in -2000i128..2000, b in -2000i128..2000) {
        let w = WeilQuartic { q: 7, a, b };
        let c = mod2_class(&w);
        let coeffs = w.coefficients().map(|x| x.rem_euclid(2) as u8);
        prop_assert_eq!(Some(c), EulerClassMod2::from_f2_coeffs(coeffs));
    }
}

#[test]
fn newton_identities_roundtrip() {
    let w = WeilQuartic { q: 11, a: 14, b: 836 };
    let p1 = w.a;
    let p2 = w.a * w.a - 2 * w.b;
    assert_eq!(quartic_from_power_sums(11, p1, p2).unwrap(), w);
}

#[test]
fn scan_depth_one_matches_depth_two_on_parity() {
    let psi: RationalPsi = "3".parse().unwrap();
    let one = reciprocity_scan(&psi, &ScanOptions { prime_max: 13, depth: 1, ..Default::default() }).unwrap();
    let two = reciprocity_scan(&psi, &ScanOptions { prime_max: 13, depth: 2, ..Default::default() }).unwrap();
    for (r, s) in one.rows.iter().zip(&two.rows) {
        assert_eq!((r.p, r.a), (s.p, s.a));
        assert!(r.ok() && s.ok());
    }
}

#[test]
fn verdicts() {
    assert_eq!(classify(&"0".parse().unwrap(), 200).unwrap().group, GaloisGroup::F20);
    for s in ["2", "3", "-2", "1/2"] {
        let v = classify(&s.parse().unwrap(), 200).unwrap();
        assert_eq!(v.group, GaloisGroup::S5, "{s}");
        assert!(v.irreducibility.is_irreducible());
    }
}
