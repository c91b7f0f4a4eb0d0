use dwork_core::sp4s6::*;
use proptest::prelude::*;
use std::collections::HashSet;

fn perm() -> impl Strategy<Value = Perm6> {
    (0usize..720).prop_map(|i| Perm6::all()[i])
}

fn sl2() -> impl Strategy<Value = Mat2F4> {
    (0usize..60).prop_map(|i| sl2f4()[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn phi_is_multiplicative(s in perm(), t in perm()) {
        prop_assert_eq!(phi(&s.mul(&t)), phi(&s).mul(&phi(&t)));
    }

    #[test]
    fn charpoly_is_conjugation_invariant(s in perm(), g in perm()) {
        let c = g.inverse().mul(&s).mul(&g);
        prop_assert_eq!(phi(&c).charpoly_mod2(), phi(&s).charpoly_mod2());
        prop_assert_eq!(c.cycle_type(), s.cycle_type());
    }

    #[test]
    fn phi_preserves_order_and_inverse(s in perm()) {
        let m = phi(&s);
        prop_assert!(m.is_symplectic());
        prop_assert_eq!(m.order(), s.order());
        prop_assert_eq!(phi(&s.inverse()).mul(&m), SpMat4::IDENTITY);
    }

    #[test]
    fn sym3_is_multiplicative(x in sl2(), y in sl2()) {
        let lhs = sym3_sl2f4(&mul2(&x, &y)).unwrap();
        let rhs = mul4(&sym3_sl2f4(&x).unwrap(), &sym3_sl2f4(&y).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sym3_preserves_form(x in sl2()) {
        let m = sym3_sl2f4(&x).unwrap();
        let j = antidiagonal4();
        prop_assert_eq!(mul4(&mul4(&transpose4(&m), &j), &m), j);
        prop_assert!(charpoly_f4_over_f2(&m).is_some());
    }

    #[test]
    fn perm_roundtrips_through_text(s in perm()) {
        prop_assert_eq!(s.to_string().parse::<Perm6>().unwrap(), s);
    }
}

#[test]
fn phi_is_a_bijection_onto_sp4() {
    let images: HashSet<SpMat4> = Perm6::all().iter().map(phi).collect();
    assert_eq!(images.len(), 720);
    // Sp_4(F_2) has order 720, so every symplectic matrix is hit
    let mut symplectic = 0;
    for code in 0u16..=u16::MAX {
        let rows = [0, 1, 2, 3].map(|i| [0, 1, 2, 3].map(|j| ((code >> (4 * i + j)) & 1) as u8));
        if SpMat4::from_rows(rows).is_symplectic() {
            symplectic += 1;
        }
    }
    assert_eq!(symplectic, 720);
}

#[test]
fn sym3_image_classes() {
    let mut image = HashSet::new();
    let mut orders = HashSet::new();
    for g in sl2f4() {
        let m = sym3_sl2f4(&g).unwrap();
        let cp = charpoly_f4_over_f2(&m).unwrap();
        assert_ne!(cp, [1, 0, 1, 0, 1]);
        orders.insert(order2(&g));
        image.insert(m);
    }
    assert_eq!(image.len(), 60);
    assert_eq!(orders, HashSet::from([1, 2, 3, 5]));
}

#[test]
fn cycle_types_of_s5_avoid_the_forbidden_class() {
    for ct in CycleType::partitions_of_five() {
        let rep = ct.representative().unwrap();
        assert!(rep.fixes(6));
        assert!(!cycle_type_to_class(&ct).unwrap().is_forbidden());
        assert_eq!(class_of(&rep), cycle_type_to_class(&ct).unwrap());
    }
}

fn class_of(s: &Perm6) -> dwork_core::EulerClassMod2 {
    dwork_core::EulerClassMod2::from_f2_coeffs(phi(s).charpoly_mod2()).unwrap()
}
