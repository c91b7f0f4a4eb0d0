use dwork_core::{Embedding, Fe, FieldCtx};
use proptest::prelude::*;

const TOWERS: [(u64, u32, u32); 5] = [(3, 1, 2), (3, 2, 4), (7, 1, 2), (7, 2, 4), (11, 1, 3)];

fn pick(q: u64) -> impl Strategy<Value = (u32, u32)> {
    (0..q as u32, 0..q as u32)
}

proptest! {
    #[test]
    fn embedding_commutes_with_arithmetic(t in 0usize..TOWERS.len(), seed in any::<u64>()) {
        let (p, k, k2) = TOWERS[t];
        let small = FieldCtx::new(p, k).unwrap();
        let big = FieldCtx::new(p, k2).unwrap();
        let e = Embedding::new(&small, &big).unwrap();
        let q = small.q();
        let (a, b) = (Fe((seed % q) as u32), Fe(((seed / q) % q) as u32));
        prop_assert_eq!(e.apply(small.add(a, b)), big.add(e.apply(a), e.apply(b)));
        prop_assert_eq!(e.apply(small.mul(a, b)), big.mul(e.apply(a), e.apply(b)));
        prop_assert_eq!(e.apply(small.neg(a)), big.neg(e.apply(a)));
        // the image is fixed by the q-power Frobenius of the big field
        prop_assert_eq!(big.pow(e.apply(a), q), e.apply(a));
    }

    #[test]
    fn field_axioms_f49((a, b) in pick(49), c in 0u32..49) {
        let f = FieldCtx::new(7, 2).unwrap();
        let (a, b, c) = (Fe(a), Fe(b), Fe(c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(f.sub(a, b), b), a);
        if !b.is_zero() {
            prop_assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
        }
        prop_assert_eq!(f.pow(a, 49), a);
    }
}

#[test]
fn embedding_is_injective() {
    for (p, k, k2) in TOWERS {
        let small = FieldCtx::new(p, k).unwrap();
        let big = FieldCtx::new(p, k2).unwrap();
        let e = Embedding::new(&small, &big).unwrap();
        let mut img: Vec<Fe> = small.elements().map(|a| e.apply(a)).collect();
        img.sort_by_key(|x| x.code());
        img.dedup();
        assert_eq!(img.len() as u64, small.q());
    }
}

#[test]
fn rejects_incompatible_degrees() {
    let a = FieldCtx::new(3, 2).unwrap();
    let b = FieldCtx::new(3, 3).unwrap();
    assert!(Embedding::new(&a, &b).is_err());
}
